"""Time the pure-Python and compiled suffix-tree backends side by side.

    python3 benchmarks/bench_backends.py --sizes 10000,100000 --modes lz,slz,rlpf

Prints CSV: n,mode,backend,seconds,ns_per_byte,speedup.
"""

import argparse
import random
import sys
import time

from rzf.closed import Lcfa, Mcfa
from rzf.rlpf import Rlpf
from rzf.rlz import Rlz
from rzf.slz import Slz
from rzf.stree import CSuffixTree


def make(mode, backend, d):
    if mode == "slz":
        return Slz(d, backend)
    return {"rlpf": Rlpf, "lz": Rlz, "lcfa": Lcfa, "mcfa": Mcfa}[mode](backend)


def time_one(mode, backend, data, d):
    z = make(mode, backend, d)
    t0 = time.perf_counter()
    push = z.push
    for c in data:
        push(c)
    if hasattr(z, "finish"):
        z.finish()
    return time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="10000,100000")
    ap.add_argument("--modes", default="lz,slz,rlpf,lcfa")
    ap.add_argument("-d", "--window", type=int, default=1024)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--sigma", type=int, default=256, help="alphabet size of the random input")
    a = ap.parse_args(argv)
    if CSuffixTree is None:
        print("compiled core not built; run: pip install -e . --no-build-isolation",
              file=sys.stderr)
        return 1
    print("n,mode,backend,seconds,ns_per_byte,speedup")
    for n in (int(float(x)) for x in a.sizes.split(",")):
        rng = random.Random(a.seed)
        data = bytes(rng.randrange(a.sigma) for _ in range(n))
        for mode in a.modes.split(","):
            tp = time_one(mode, "python", data, a.window)
            tc = time_one(mode, "compiled", data, a.window)
            for name, t in (("python", tp), ("compiled", tc)):
                print(f"{n},{mode},{name},{t:.4f},{t / n * 1e9:.0f},{tp / t:.2f}", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
