"""Benchmark the compiled word kernels against the pure-Python twins.

Run:  python benchmarks/bench_kernels.py
"""

import time
from random import Random

from sclgap import _pure

try:
    from sclgap import _speedups
except ImportError:
    _speedups = None


def _random_raw_words(n, maxlen, seed=0):
    rng = Random(seed)
    return ["".join(rng.choice("aAbB") for _ in range(rng.randint(0, maxlen))) for _ in range(n)]


def _random_alt_words(n, maxlen, seed=1):
    rng = Random(seed)
    out = []
    for _ in range(n):
        length = rng.randint(0, maxlen)
        gen = rng.choice("ab")
        other = "b" if gen == "a" else "a"
        out.append(
            "".join(
                (gen if i % 2 == 0 else other) if rng.random() < 0.5
                else (gen if i % 2 == 0 else other).upper()
                for i in range(length)
            )
        )
    return out


def _time(label, fn, repeat=3):
    best = min(_once(fn) for _ in range(repeat))
    print(f"  {label:<28} {best:8.4f}s")
    return best


def _once(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def bench(name, pure_fn, fast_fn):
    print(name)
    t_pure = _time("pure", pure_fn)
    if fast_fn is None:
        print("  compiled extension not built; skipping comparison\n")
        return
    t_fast = _time("compiled", fast_fn)
    print(f"  speedup: {t_pure / t_fast:6.1f}x\n")


def main():
    raw = _random_raw_words(20000, 60)
    alt = _random_alt_words(20000, 60)
    reduced = [_pure.reduce_word(w) for w in raw]

    bench(
        "free reduction, 20k words",
        lambda: [_pure.reduce_word(w) for w in raw],
        (lambda: [_speedups.reduce_word(w) for w in raw]) if _speedups else None,
    )
    bench(
        "eta0, 20k reduced words",
        lambda: [_pure.eta0(w) for w in reduced],
        (lambda: [_speedups.eta0(w) for w in reduced]) if _speedups else None,
    )
    bench(
        "alpha+beta, 20k alternating",
        lambda: [(_pure.alpha_word(w), _pure.beta_word(w)) for w in alt],
        (lambda: [(_speedups.alpha_word(w), _speedups.beta_word(w)) for w in alt])
        if _speedups
        else None,
    )
    bench(
        "exhaustive eta0 defect, words <= 6",
        lambda: _pure.eta0_exhaustive_defect(6),
        (lambda: _speedups.eta0_exhaustive_defect(6)) if _speedups else None,
    )
    if _speedups:
        t0 = time.perf_counter()
        value = _speedups.eta0_exhaustive_defect(8)
        dt = time.perf_counter() - t0
        print(f"exhaustive eta0 defect, words <= 8 (compiled only): {value} in {dt:.2f}s")


if __name__ == "__main__":
    main()
