"""Compare the compiled and pure-Python word kernels.

    python benchmarks/bench_kernels.py [--graph Pbar5] [--lengths 10 100 1000] [--repeat 5]
"""

import argparse
import random
import timeit

from raagtools import _pykernels
from raagtools import graph as graphs

try:
    from raagtools import _ckernels
except ImportError:
    _ckernels = None


def cases(graph, lengths, seed):
    rng = random.Random(seed)
    nletters = 2 * len(graph.vertices)
    out = {}
    for n in lengths:
        words = [tuple(rng.randrange(nletters) for _ in range(n)) for _ in range(20)]
        out[n] = words
    return out


def bench(kernels, graph, words, repeat):
    nc, full = graph.noncomm, graph.full
    reduced = [kernels.normal_form(w, nc) for w in words]
    pairs = list(zip(reduced, reduced[1:] + reduced[:1]))
    ops = {
        "normal_form": lambda: [kernels.normal_form(w, nc) for w in words],
        "reduced_length": lambda: [kernels.reduced_length(w, nc) for w in words],
        "gcd_left": lambda: [kernels.gcd_left(a, b, nc, full) for a, b in pairs],
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) / len(words)
            for name, fn in ops.items()}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graph", default="Pbar5")
    ap.add_argument("--lengths", type=int, nargs="+", default=[10, 100, 1000])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    graph = graphs.bundled(args.graph)
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("compiled", _ckernels))
    else:
        print("compiled kernels not built; timing the pure-Python backend only")
    print(f"graph {args.graph}, {len(graph.vertices)} vertices; microseconds per call")
    print(f"{'length':>7} {'operation':<15}" + "".join(f"{b:>12}" for b, _ in backends)
          + ("     speedup" if len(backends) == 2 else ""))
    for n, words in cases(graph, args.lengths, args.seed).items():
        results = [bench(k, graph, words, args.repeat) for _, k in backends]
        for op in results[0]:
            row = f"{n:>7} {op:<15}" + "".join(f"{r[op] * 1e6:>12.1f}" for r in results)
            if len(results) == 2:
                row += f"{results[0][op] / results[1][op]:>11.1f}x"
            print(row)


if __name__ == "__main__":
    main()
