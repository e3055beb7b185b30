"""Command-line front end.

    rzf lz FILE                  rightmost LZ factors as TSV
    rzf slz -d 4096 FILE         sliding-window factors
    rzf rlpf | lcfa | mcfa FILE  per-position arrays
    rzf verify --mode slz -d 4 FILE
    rzf bench --mode lz --sizes 100000,1000000
    rzf decode FACTORS           rebuild the input from lz/slz output

Input defaults to stdin.  Positions in reports are 1-based.
"""

import argparse
import math
import random
import struct
import sys
import time

from . import oracle
from .closed import Lcfa, Mcfa
from .errors import OracleRefused, UsageError
from .factors import Copy, Literal, decode
from .rlpf import Rlpf
from .rlz import Rlz
from .slz import Slz
from .stree import tree_class

MAGIC = b"RZF1"
MODES = ("rlpf", "lz", "slz", "lcfa", "mcfa")
CHUNK = 1 << 16
_TRIPLE = struct.Struct("<QQQ")


# ---- bit costs -------------------------------------------------------------

def gamma_bits(x):
    """Length of the Elias gamma code of x >= 1."""
    return 2 * (x.bit_length() - 1) + 1


def pair_bits(pairs, model, n):
    if model == "gamma":
        return sum(gamma_bits(ln) + gamma_bits(dist) for ln, dist in pairs)
    width = max(1, math.ceil(math.log2(n + 1)))
    return 2 * width * len(pairs)


# ---- pipelines -------------------------------------------------------------

def _chunks(f):
    while True:
        buf = f.read(CHUNK)
        if not buf:
            return
        yield buf


class _Writer:
    def __init__(self, out, fmt):
        self.out, self.fmt = out, fmt
        self.parts = []
        if fmt == "binary":
            out.write(MAGIC)

    def row(self, tsv, triple):
        if self.fmt == "tsv":
            self.parts.append(tsv)
        else:
            self.parts.append(_TRIPLE.pack(*triple))
        if len(self.parts) >= 4096:
            self.flush()

    def flush(self):
        if not self.parts:
            return
        if self.fmt == "tsv":
            self.out.write("".join(self.parts).encode())
        else:
            self.out.write(b"".join(self.parts))
        self.parts = []


def _factor_row(w, f, pos):
    if isinstance(f, Literal):
        w.row(f"L\t{f.byte}\n", (pos, 0, f.byte))
        return 1
    w.row(f"C\t{f.length}\t{f.dist}\n", (pos, f.length, f.dist))
    return f.length


def run_stream(mode, src, out, fmt="tsv", d=None, backend=None, bitcost="gamma", err=None):
    """Stream ``src`` through one pipeline; returns a summary dict."""
    w = _Writer(out, fmt)
    n = 0
    summary = {"mode": mode}
    if mode in ("lz", "slz"):
        z = Rlz(backend, leftmost=True) if mode == "lz" else Slz(d, backend, leftmost=True)
        pos = 1
        pairs = []
        count = 0

        def emit(fs):
            nonlocal pos, count
            for f in fs:
                count += 1
                if isinstance(f, Copy):
                    pairs.append(f)
                pos += _factor_row(w, f, pos)

        for buf in _chunks(src):
            n += len(buf)
            for c in buf:
                fs = z.push(c)
                if fs:
                    emit(fs)
        emit(z.finish())
        left = [(f.length, dl) for f, dl in zip(pairs, z.leftmost)]
        summary.update(
            factors=count,
            bits_rightmost=pair_bits(pairs, bitcost, n),
            bits_leftmost=pair_bits(left, bitcost, n),
        )
        if mode == "slz":
            summary.update(peak_nodes=z.peak_nodes, peak_buffer=z.peak_buffer)
        else:
            summary.update(peak_nodes=z.tree.node_count)
    else:
        z = {"rlpf": Rlpf, "lcfa": Lcfa, "mcfa": Mcfa}[mode](backend)
        for buf in _chunks(src):
            for c in buf:
                n += 1
                e = z.push(c)
                if mode == "rlpf":
                    w.row(f"{n}\t{e.len}\t{e.dist}\n", (n, e.len, e.dist))
                elif mode == "lcfa":
                    w.row(f"{n}\t{e.last_len}\t{e.count}\n", (n, e.last_len, e.count))
                else:
                    w.row(f"{n}\t{e}\n", (n, e, 0))
        summary.update(entries=n, peak_nodes=z.tree.node_count)
    w.flush()
    summary["n"] = n
    if err is not None:
        err.write(_summary_line(summary, bitcost) + "\n")
    return summary


def _summary_line(s, bitcost):
    if "factors" in s:
        saved = s["bits_leftmost"] - s["bits_rightmost"]
        return (f"{s['mode']}: {s['n']} bytes, {s['factors']} factors, "
                f"{bitcost} bits {s['bits_rightmost']} rightmost vs "
                f"{s['bits_leftmost']} leftmost (saves {saved})")
    return f"{s['mode']}: {s['entries']} entries"


def compute(mode, data, d=None, backend=None):
    """Whole-buffer result in the oracle's shape."""
    if mode == "rlpf":
        z = Rlpf(backend)
        return [tuple(z.push(c)) for c in data]
    if mode == "lcfa":
        z = Lcfa(backend)
        return [tuple(z.push(c)) for c in data]
    if mode == "mcfa":
        z = Mcfa(backend)
        return [z.push(c) for c in data]
    z = Rlz(backend) if mode == "lz" else Slz(d, backend)
    out = []
    for c in data:
        out += z.push(c)
    return out + z.finish()


def compute_oracle(mode, data, d=None, cap=oracle.DEFAULT_CAP):
    if mode == "rlpf":
        return oracle.oracle_rlpf(data, cap)
    if mode == "lz":
        return oracle.oracle_rlz(data, cap)
    if mode == "slz":
        return oracle.oracle_slz(data, d, cap)
    if mode == "lcfa":
        return oracle.oracle_lcfa(data, cap)
    return oracle.oracle_mcfa(data, cap)


# ---- decoding --------------------------------------------------------------

def parse_factors(raw):
    """Factors from lz/slz output, TSV or binary."""
    if raw.startswith(MAGIC):
        body = raw[len(MAGIC):]
        if len(body) % _TRIPLE.size:
            raise ValueError("truncated binary factor stream")
        out = []
        for _, ln, x in _TRIPLE.iter_unpack(body):
            out.append(Literal(x) if ln == 0 else Copy(ln, x))
        return out
    out = []
    for k, line in enumerate(raw.decode("ascii").splitlines(), 1):
        f = line.split("\t")
        if f[0] == "L" and len(f) == 2:
            out.append(Literal(int(f[1])))
        elif f[0] == "C" and len(f) == 3:
            out.append(Copy(int(f[1]), int(f[2])))
        else:
            raise ValueError(f"line {k}: not a factor: {line!r}")
    return out


# ---- bench -----------------------------------------------------------------

def bench(mode, sizes, seed, d=None, backend=None, out=None):
    out = out or sys.stdout
    out.write("n,mode,seconds,peak_nodes\n")
    rows = []
    for n in sizes:
        data = random.Random(seed).randbytes(n)
        t0 = time.perf_counter()
        z = _streamer(mode, d, backend)
        for c in data:
            z.push(c)
        if hasattr(z, "finish"):
            z.finish()
        dt = time.perf_counter() - t0
        peak = z.peak_nodes if mode == "slz" else z.tree.node_count
        rows.append((n, mode, dt, peak))
        out.write(f"{n},{mode},{dt:.4f},{peak}\n")
        out.flush()
    return rows


def _streamer(mode, d, backend):
    if mode == "slz":
        return Slz(d, backend)
    return {"rlpf": Rlpf, "lz": Rlz, "lcfa": Lcfa, "mcfa": Mcfa}[mode](backend)


# ---- argument handling -----------------------------------------------------

def _sizes(text):
    try:
        sizes = [int(float(x)) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser():
    p = argparse.ArgumentParser(prog="rzf", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", "--window", type=int, help="window size (slz)")
    common.add_argument("--backend", choices=("auto", "python", "compiled"), default=None,
                        help="suffix tree implementation (default: compiled if built)")
    sub = p.add_subparsers(dest="command", required=True)
    for m in MODES:
        s = sub.add_parser(m, parents=[common], help=f"compute {m}")
        s.add_argument("input", nargs="?", default="-")
        s.add_argument("--format", choices=("tsv", "binary"), default="tsv")
        s.add_argument("--bitcost", choices=("gamma", "fixed"), default="gamma")
        s.add_argument("-o", "--output", default="-")
    s = sub.add_parser("verify", parents=[common], help="compare against the brute-force oracle")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--mode", choices=MODES, default="lz")
    s.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="oracle input cap in bytes")
    s = sub.add_parser("bench", parents=[common], help="time a pipeline on random bytes")
    s.add_argument("--mode", choices=MODES, default="lz")
    s.add_argument("--sizes", type=_sizes, default=[10**4, 10**5])
    s.add_argument("--seed", type=int, default=0)
    s = sub.add_parser("decode", help="rebuild the input from lz/slz output")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("-o", "--output", default="-")
    return p


def _read_all(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _open_out(path):
    return sys.stdout.buffer if path == "-" else open(path, "wb")


def main(argv=None):
    p = build_parser()
    a = p.parse_args(argv)
    mode = a.mode if a.command in ("verify", "bench") else a.command
    d = getattr(a, "window", None)
    if mode == "slz" and a.command != "decode":
        if d is None:
            p.error("slz needs a window size: -d/--window")
        if d < 1:
            p.error(f"window size must be >= 1, got {d}")
    backend = getattr(a, "backend", None)
    try:
        if backend is not None:
            tree_class(backend)
        if a.command == "bench":
            bench(mode, a.sizes, a.seed, d, backend)
            return 0
        if a.command == "decode":
            data = decode(parse_factors(_read_all(a.input)))
            out = _open_out(a.output)
            out.write(data)
            if out is sys.stdout.buffer:
                out.flush()
            else:
                out.close()
            return 0
        if a.command == "verify":
            data = _read_all(a.input)
            want = compute_oracle(mode, data, d, a.cap)
            got = compute(mode, data, d, backend)
            if got != want:
                k = next((k for k, (x, y) in enumerate(zip(got, want)) if x != y),
                         min(len(got), len(want)))
                print(f"rzf: {mode} differs from oracle at entry {k + 1}", file=sys.stderr)
                return 1
            print(f"rzf: {mode} matches oracle ({len(data)} bytes)", file=sys.stderr)
            return 0
        src = sys.stdin.buffer if a.input == "-" else open(a.input, "rb")
        out = _open_out(a.output)
        with src:
            run_stream(mode, src, out, a.format, d, backend, a.bitcost, sys.stderr)
        if out is sys.stdout.buffer:
            out.flush()
        else:
            out.close()
        return 0
    except OSError as e:
        print(f"rzf: {e.filename or 'input'}: {e.strerror}", file=sys.stderr)
        return 1
    except (OracleRefused, UsageError, ImportError, ValueError) as e:
        print(f"rzf: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
