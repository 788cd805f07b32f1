"""Desk-scale learning check: train on scenario 1 (2D), then run 100 seeded evaluation trials.

Writes ``<out>/<algo>-<arch>-seed<seed>/result.json`` per seed and a
``summary.json`` holding the best success rate. Example::

    python benchmarks/learning_gate.py --algo ddpg --arch mlp3 --seeds 0 1 2 --episodes 1000
"""
import argparse
import json
import time
from pathlib import Path

from mapless_nav.evaluate import eval_goal_oriented
from mapless_nav.train import TrainConfig, train


def run(algo, arch, seed, episodes, out, hidden, critic_hidden, eval_every, trials):
    cell = Path(out) / f"{algo}-{arch}-seed{seed}"
    cfg = TrainConfig(algorithm=algo, arch=arch, scenario=1, mode="2d", episodes=episodes,
                      seed=seed, hidden=hidden, critic_hidden=critic_hidden,
                      eval_every=eval_every, eval_trials=20)
    t0 = time.time()
    with open(cell.parent / f"{cell.name}.log", "a") as log:
        ckpt, logs = train(cfg, cell, progress=lambda line: (log.write(line + "\n"), log.flush()),
                           resume=True)
    res = eval_goal_oriented(ckpt, 1, "2d", trials=trials, seed=10_000 + seed)
    result = {
        "algorithm": algo, "arch": arch, "seed": seed, "episodes": episodes,
        "hidden": hidden, "critic_hidden": critic_hidden,
        "success_rate": res.success_rate, "mean_time": res.mean_time, "std_time": res.std_time,
        "train_seconds": time.time() - t0,
    }
    (cell / "result.json").write_text(json.dumps(result, indent=2) + "\n")
    return result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--algo", default="ddpg")
    ap.add_argument("--arch", default="mlp3")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--episodes", type=int, default=1000)
    ap.add_argument("--hidden", type=int, default=512)
    ap.add_argument("--critic-hidden", type=int, default=512)
    ap.add_argument("--eval-every", type=int, default=50)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--out", default="results/learning_gate")
    args = ap.parse_args()
    Path(args.out).mkdir(parents=True, exist_ok=True)
    results = [run(args.algo, args.arch, s, args.episodes, args.out, args.hidden,
                   args.critic_hidden, args.eval_every, args.trials) for s in args.seeds]
    best = max(results, key=lambda r: r["success_rate"])
    summary = {"best": best, "runs": results, "passed": best["success_rate"] >= 0.9}
    name = f"summary-{args.algo}-{args.arch}.json"
    (Path(args.out) / name).write_text(json.dumps(summary, indent=2) + "\n")
    print(json.dumps(summary["best"]))


if __name__ == "__main__":
    main()
