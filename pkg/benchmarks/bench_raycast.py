"""Compare the compiled and numpy lidar kernels on random poses.

    python benchmarks/bench_raycast.py --poses 2000 --scenario 2
"""
import argparse
import json
import time

import numpy as np

from mapless_nav.env import KERNELS, builtin, lidar_scan


def poses(n, scenario, rng):
    out = []
    while len(out) < n:
        x, y = rng.uniform(-4.9, 4.9, 2)
        if not scenario.inside_obstacle(x, y):
            out.append((x, y, rng.uniform(-np.pi, np.pi)))
    return out


def time_kernel(kernel, scenario, pts, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for x, y, yaw in pts:
            lidar_scan(x, y, yaw, scenario, kernel=kernel)
        best = min(best, time.perf_counter() - t0)
    return best / len(pts)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--poses", type=int, default=2000)
    ap.add_argument("--scenario", type=int, default=2, choices=[1, 2])
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    sc = builtin(args.scenario)
    pts = poses(args.poses, sc, np.random.default_rng(0))
    ref = [lidar_scan(x, y, yaw, sc, kernel=KERNELS["python"]) for x, y, yaw in pts[:200]]
    report = {"scenario": args.scenario, "poses": args.poses, "beams": 1081}
    for name, kernel in sorted(KERNELS.items()):
        got = [lidar_scan(x, y, yaw, sc, kernel=kernel) for x, y, yaw in pts[:200]]
        report[f"{name}_us_per_scan"] = round(1e6 * time_kernel(kernel, sc, pts, args.repeats), 2)
        report[f"{name}_max_abs_diff"] = float(max(np.abs(a - b).max() for a, b in zip(got, ref)))
    if "compiled" in KERNELS:
        report["speedup"] = round(report["python_us_per_scan"] / report["compiled_us_per_scan"], 2)
    else:
        report["note"] = "compiled kernel unavailable (not built or disabled); only the numpy fallback was timed"
    print(json.dumps(report, indent=2))


if __name__ == "__main__":
    main()
