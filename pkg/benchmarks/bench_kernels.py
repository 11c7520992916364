"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--json]
"""

import argparse
import json
import random
import sys
import time

from quadcodes import kernels
from quadcodes.squares import SquareKind, _extra_masks, square_code


def _workloads():
    rng = random.Random(1)
    big = [rng.getrandbits(40) for _ in range(20)]
    strong = list(square_code(SquareKind.STRONGLY_MAGIC).generators)
    n = 7
    base = [0] + [1 << i for i in range(n)] + [15]
    cands = [c for c in range(1 << n) if bin(c).count("1") >= 4 and c != 15]
    return [
        ("weight_distribution [16, 11]", "weight_distribution", (strong, 16)),
        ("weight_distribution random [40, 20]", "weight_distribution", (big, 40)),
        ("count_grids magic, prefix 0 1 2", "count_grids", (4, (0, 1, 2), _extra_masks(SquareKind.MAGIC))),
        ("extend_noquad n=7, target 13 (infeasible)", "extend_noquad", (n, base, cands, 13)),
    ]


def _time(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    if kernels.compiled is None:
        print("compiled kernels are not built; run: python setup.py build_ext --inplace", file=sys.stderr)
        return 1
    rows = []
    for name, func, fargs in _workloads():
        t_py, r_py = _time(getattr(kernels.python, func), fargs, args.repeat)
        t_c, r_c = _time(getattr(kernels.compiled, func), fargs, args.repeat)
        if r_py != r_c:
            print(f"{name}: results differ", file=sys.stderr)
            return 2
        rows.append({"workload": name, "python_s": t_py, "compiled_s": t_c, "speedup": t_py / t_c if t_c else None})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["workload"]) for r in rows)
        print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
        for r in rows:
            print(f"{r['workload']:<{width}}  {r['python_s']:>9.4f}s  {r['compiled_s']:>9.4f}s  {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
