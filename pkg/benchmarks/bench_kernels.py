"""Time the compiled scan kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--m 9 --n 9] [--repeat 3]

Prints one line per (kernel, backend) with the best wall time over the
repeats, plus the speedup when both backends are available.
"""

import argparse
import timeit

from fibra import kernels
from fibra.array2d import fib_array
from fibra.word1d import fib_word

KINDS = {"Ia": kernels.IA, "Ib": kernels.IB, "IIa": kernels.IIA, "IIb": kernels.IIB, "quartic": kernels.QUARTIC}


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=9, help="row index of the host array (default 9, 55 rows)")
    ap.add_argument("--n", type=int, default=9, help="column index of the host array")
    ap.add_argument("--word", type=int, default=16, help="index of the 1D word for square_matches")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    lines = fib_array(args.m, args.n).lines
    word = fib_word(args.word).content
    mods = kernels.backends()
    print(f"host grid {len(lines)}x{len(lines[0])}, word length {len(word)}, backends: {', '.join(mods)}")

    jobs = [("square_matches", lambda mod: (lambda: mod.square_matches(word)))]
    for name, kind in KINDS.items():
        jobs.append((f"block_matches[{name}]", lambda mod, kind=kind: (lambda: mod.block_matches(lines, kind))))

    for label, make in jobs:
        times = {name: bench(make(mod), args.repeat) for name, mod in mods.items()}
        line = f"{label:<24}" + "".join(f" {name}={t * 1e3:9.2f} ms" for name, t in times.items())
        if len(times) == 2:
            line += f"  speedup x{times['python'] / times['cython']:.1f}"
        print(line)


if __name__ == "__main__":
    main()
