"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times a single RS bounded-distance decode and a full cascade decode on the
GF(16) desk triple and the GF(256) n=128 triple, once per available backend.
"""
import argparse
import random
import timeit

from plotkin_rs import decode, field_new, triple_new
from plotkin_rs import rs as rs_module
from plotkin_rs._backend import kernel_classes

CONFIGS = [
    ("GF(16) n=15 (11,9,5)", 4, 15, (11, 9, 5)),
    ("GF(256) n=128 (98,82,36)", 8, 128, (98, 82, 36)),
]


def make_case(field, n, ks, rng):
    triple = triple_new(field, n, *ks)
    radius = triple.params().radius
    c = triple.encode([rng.randrange(field.q) for _ in range(triple.k0)])
    r = list(c)
    for p in rng.sample(range(3 * n), radius):
        r[p] ^= rng.randrange(1, field.q)
    code = triple.code_a
    cw = code.encode([rng.randrange(field.q) for _ in range(code.k)])
    for p in rng.sample(range(n), code.radius):
        cw[p] ^= rng.randrange(1, field.q)
    return triple, r, code, cw


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernel_classes()
    print(f"{'case':28s} {'backend':8s} {'rs decode':>12s} {'cascade':>12s}")
    for label, m, n, ks in CONFIGS:
        field = field_new(m)
        timings = {}
        for name, cls in backends.items():
            rs_module._KERNELS[field] = cls(field.exp, field.log, field.q)
            triple, r, code, cw = make_case(field, n, ks, random.Random(0))
            number = 20 if name == "python" and m == 8 else 200
            t_rs = min(timeit.repeat(lambda: code.decode(cw), number=number,
                                     repeat=args.repeat)) / number
            t_cas = min(timeit.repeat(lambda: decode(triple, r), number=number,
                                      repeat=args.repeat)) / number
            timings[name] = (t_rs, t_cas)
            print(f"{label:28s} {name:8s} {t_rs * 1e3:10.3f}ms {t_cas * 1e3:10.3f}ms")
        if len(timings) == 2:
            py, cy = timings["python"], timings["cython"]
            print(f"{'':28s} {'speedup':8s} {py[0] / cy[0]:11.1f}x {py[1] / cy[1]:11.1f}x")
        rs_module._KERNELS.pop(field, None)


if __name__ == "__main__":
    main()
