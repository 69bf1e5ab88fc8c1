"""Writes OEIS-format b-files for A000110, A000258 and A059849.

oeis.org is not reachable from the build sandbox, so these are regenerated
locally from closed forms that share no code with the C++ library:
  A000110  sympy.bell(n)
  A000258  n! [x^n] exp(exp(exp(x) - 1) - 1), expanded with Fractions
  A059849  inverse Stirling transform of B_n^2 (pairs of partitions grouped by
           their meet: B_n^2 = sum_k S(n,k) a_k, a_k = pairs with discrete meet)
Replace them with the downloaded b-files when network access is available.
"""
import sys
from fractions import Fraction
from math import factorial

import sympy
from sympy.functions.combinatorial.numbers import stirling


def series_exp(g):
    """exp(g) for a truncated power series g with g[0] == 0 (h' = g' h)."""
    h = [Fraction(1)]
    for n in range(1, len(g)):
        h.append(sum(k * g[k] * h[n - k] for k in range(1, n + 1)) / n)
    return h


def write(path, name, values, offset=0):
    with open(path, "w") as out:
        out.write(f"# {name} (generated by tests/oracles/make_bfiles.py)\n")
        for i, v in enumerate(values):
            out.write(f"{i + offset} {v}\n")


def main(outdir):
    bell = [int(sympy.bell(n)) for n in range(31)]
    write(f"{outdir}/b000110.txt", "A000110", bell)

    N = 20
    ex = series_exp([Fraction(0)] + [Fraction(1, factorial(n)) for n in range(1, N + 1)])
    ex[0] -= 1
    outer = series_exp(ex)
    write(f"{outdir}/b000258.txt", "A000258", [int(c * factorial(n)) for n, c in enumerate(outer)])

    M = 12
    a = []
    for n in range(M + 1):
        rest = sum(int(stirling(n, k)) * a[k] for k in range(n))
        a.append(bell[n] ** 2 - rest)
    write(f"{outdir}/b059849.txt", "A059849", a)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
