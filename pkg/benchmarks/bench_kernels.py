"""Compare the compiled and pure-Python fingerprint kernels.

Runs the same workload on every available backend and prints one line per
(operation, backend) with the mean time per call and the speedup over the
pure-Python kernel.  Kernel rows exercise the store directly; the query rows
go through the full index.

    python benchmarks/bench_kernels.py --n 4096 --repeat 3
"""

import argparse
import random
import time

from dynsa import BACKENDS, DynamicSuffixArray
from dynsa.lce import make_store


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        count = fn()
        best = min(best, (time.perf_counter() - start) / count)
    return best


def kernel_workloads(data, pairs, chunks):
    sym = [0] + list(data) + [256]
    shift = [0]

    def lcp(store):
        for i, j in pairs:
            store.lcp(i, j, store.n_padded)
        return len(pairs)

    def compare(store):
        for i, j in pairs:
            store.compare(i, j)
        return len(pairs)

    def update(store):
        # a fresh shift per run keeps every write a real change
        shift[0] += 1
        for pos, _ in pairs:
            store.set(pos, 97 + (pos + shift[0]) % 3)
        return len(pairs)

    def sort(store):
        for chunk in chunks:
            store.sort(chunk)
        return len(chunks)

    return sym, {"lcp": lcp, "compare": compare, "set": update, "sort(64)": sort}


def query_workloads(data, k, ranks):
    shift = [0]
    def build(backend):
        return DynamicSuffixArray(data, k=k, backend=backend)

    def sa(dsa):
        for r in ranks:
            dsa.sa(r)
        return len(ranks)

    def isa(dsa):
        for r in ranks:
            dsa.isa(r)
        return len(ranks)

    def substitute(dsa):
        shift[0] += 1
        for r in ranks:
            dsa.substitute(r, 97 + (r + shift[0]) % 3)
        return len(ranks)

    return build, {"SA": sa, "ISA": isa, "SUB": substitute}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=4096)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ops", type=int, default=2000, help="calls per kernel workload")
    p.add_argument("--queries", type=int, default=300)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args(argv)

    rng = random.Random(args.seed)
    # a short repeated block keeps LCE values long enough to reach the hashing path
    block = bytes(rng.choice(b"ab") for _ in range(24))
    data = bytearray((block * (args.n // 24 + 1))[: args.n])
    for _ in range(args.n // 256):
        data[rng.randrange(args.n)] = ord("c")
    data = bytes(data)
    pairs = [(rng.randint(1, args.n), rng.randint(1, args.n)) for _ in range(args.ops)]
    chunks = [rng.sample(range(1, args.n + 1), 64) for _ in range(max(1, args.ops // 64))]
    ranks = [rng.randint(1, args.n) for _ in range(args.queries)]
    backends = sorted(BACKENDS, key=lambda b: b != "python")

    results = {}
    sym, kernels = kernel_workloads(data, pairs, chunks)
    stores = {b: make_store(sym, 7, b) for b in backends}
    for name, fn in kernels.items():
        for backend in backends:
            results[name, backend] = best_of(args.repeat, lambda: fn(stores[backend]))
    build, queries = query_workloads(data, args.k, ranks)
    # substitutions run last on each index so the query rows see the built text
    indexes = {b: build(b) for b in backends}
    for name, fn in queries.items():
        for backend in backends:
            results[name, backend] = best_of(args.repeat, lambda: fn(indexes[backend]))

    print(f"n={args.n} k={args.k or 'default'} backends={','.join(backends)}")
    print(f"{'op':<10} {'backend':<8} {'us/call':>10} {'speedup':>8}")
    for name in list(kernels) + list(queries):
        base = results[name, "python"]
        for backend in backends:
            t = results[name, backend]
            print(f"{name:<10} {backend:<8} {t * 1e6:>10.2f} {base / t:>7.1f}x")


if __name__ == "__main__":
    main()
