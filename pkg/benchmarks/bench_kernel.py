"""Compare the compiled word-matching kernel with the pure-Python twin.

Two measurements:
  * micro: find_first_match on words sampled from a real rewrite run
  * end-to-end: normal forms of random degree-6 words, run in a child
    process per kernel so the import-time selection is exercised

Run as:  python3 benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time

from qgal import _kernel_py
from qgal.presentations import catalog

try:
    from qgal import _kernel
except ImportError:
    _kernel = None


def sample_words(pres, count=4000, degree=8, seed=7):
    rng = random.Random(seed)
    n = len(pres.alphabet)
    return [tuple(rng.randrange(n) for _ in range(rng.randint(1, degree)))
            for _ in range(count)]


def micro(pres, words, impl):
    buckets = pres.rewrite._buckets
    t0 = time.perf_counter()
    hits = 0
    for w in words:
        if impl.find_first_match(w, buckets) is not None:
            hits += 1
    return time.perf_counter() - t0, hits


END_TO_END = r"""
import random, time
from qgal.kernel import IMPLEMENTATION
from qgal.ncpoly import NCPoly
from qgal.presentations import catalog
from qgal.scalars import S_ONE

p = catalog("GLq2m2")
rng = random.Random(11)
n = len(p.alphabet)
words = [tuple(rng.randrange(n) for _ in range(6)) for _ in range(300)]
t0 = time.perf_counter()
for w in words:
    p.nf(NCPoly(p.alphabet, {w: S_ONE}))
print(f"{IMPLEMENTATION} {time.perf_counter() - t0:.4f}")
"""


def main():
    pres = catalog("GLq2m2")
    words = sample_words(pres)

    print("micro-benchmark: find_first_match on 4000 sampled words")
    t_py, hits_py = micro(pres, words, _kernel_py)
    print(f"  python  {t_py * 1000:8.2f} ms  ({hits_py} matches)")
    if _kernel is None:
        print("  cython  (extension not built)")
    else:
        t_cy, hits_cy = micro(pres, words, _kernel)
        assert hits_cy == hits_py, "kernels disagree on match counts"
        print(f"  cython  {t_cy * 1000:8.2f} ms  ({hits_cy} matches)")
        print(f"  speedup {t_py / t_cy:5.2f}x")

    print("end-to-end: normal forms of 300 random degree-6 words")
    for env_val in (None, "1"):
        env = dict(os.environ)
        env.pop("QGAL_PURE_PYTHON", None)
        if env_val:
            env["QGAL_PURE_PYTHON"] = env_val
        out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                             capture_output=True, text=True, check=True)
        name, secs = out.stdout.split()
        print(f"  {name:7s} {float(secs) * 1000:8.2f} ms")


if __name__ == "__main__":
    main()
