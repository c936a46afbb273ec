"""Compare the compiled polynomial kernel with the pure-Python fallback.

Two levels:

* micro: the kernel functions on the coefficient shapes the normalizer
  actually produces (short Laurent polynomials, small denominators);
* end to end: a differential sweep run in a subprocess per backend, with
  ``UQPBW_PURE_PYTHON`` selecting the fallback.

Usage: python benchmarks/bench_kernels.py [--max-total 5] [--repeat 5]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from uqpbw import _polykern_py as pure

try:
    from uqpbw import _polykern as compiled
except ImportError:
    compiled = None


def _poly(rng, n, lo=-6, hi=6):
    c = [rng.randint(lo, hi) for _ in range(n)]
    c[-1] = c[-1] or 1
    c[0] = c[0] or 1
    return tuple(c)


def workload(seed=0, size=400):
    rng = random.Random(seed)
    pairs = [(_poly(rng, rng.randint(1, 6)), _poly(rng, rng.randint(1, 6))) for _ in range(size)]
    # gcd inputs with a planted common factor, like a fraction before reduction
    gcds = []
    for a, b in pairs[: size // 2]:
        f = _poly(rng, 3)
        gcds.append((pure.lmul(0, a, 0, f)[1], pure.lmul(0, b, 0, f)[1]))
    return pairs, gcds


def micro(mod, pairs, gcds, repeat):
    def run_mul():
        for a, b in pairs:
            mod.lmul(-1, a, 2, b)

    def run_add():
        for a, b in pairs:
            mod.ladd(-1, a, 2, b)

    def run_gcd():
        for a, b in gcds:
            mod.pgcd(a, b)

    def run_div():
        for a, b in gcds:
            g = mod.pgcd(a, b)
            mod.pdivexact(a, g)

    out = {}
    for name, fn in (("lmul", run_mul), ("ladd", run_add), ("pgcd", run_gcd), ("pgcd+pdivexact", run_div)):
        out[name] = min(timeit.repeat(fn, number=1, repeat=repeat)) * 1e3
    return out


def end_to_end(max_total, pure_python):
    env = dict(os.environ)
    env.pop("UQPBW_PURE_PYTHON", None)
    if pure_python:
        env["UQPBW_PURE_PYTHON"] = "1"
    code = (
        "import time, json\n"
        "from uqpbw.coefficients import BACKEND\n"
        "from uqpbw.verify import sweep\n"
        "t = time.perf_counter()\n"
        f"r = sweep({max_total})\n"
        "print(json.dumps([BACKEND, time.perf_counter() - t, r['summary']]))\n"
    )
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, secs, summary = json.loads(res.stdout)
    return backend, secs, summary


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-total", type=int, default=5)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--skip-sweep", action="store_true")
    args = p.parse_args(argv)

    pairs, gcds = workload()
    print("micro (ms per batch, best of %d)" % args.repeat)
    ref = micro(pure, pairs, gcds, args.repeat)
    fast = micro(compiled, pairs, gcds, args.repeat) if compiled else None
    for name, t in ref.items():
        line = f"  {name:16s} python {t:8.2f}"
        if fast:
            line += f"   compiled {fast[name]:8.2f}   x{t / fast[name]:.1f}"
        print(line)
    if compiled is None:
        print("  (compiled kernel not built; only the fallback was timed)")

    if not args.skip_sweep:
        print(f"end to end: sweep m+n <= {args.max_total}, all heights")
        for flag in (True, False):
            backend, secs, summary = end_to_end(args.max_total, flag)
            print(f"  {backend:9s} {secs:7.2f}s  pass={summary['pass']} fail={summary['fail']}")


if __name__ == "__main__":
    main()
