"""Face ring, quotient basis and basic Hodge diamond of the square fan.

Run with ``python demos/ring_and_diamond.py``.
"""

from toricfol import groebner as gb
from toricfol.corpus import square_fan
from toricfol.facering import build_presentation, hodge_diamond, poincare_pairing, quotient_basis


def main():
    fan = square_fan()
    pres = build_presentation(fan)
    print("Stanley-Reisner generators:", pres.to_json()["stanley_reisner"])
    print("linear forms:", pres.to_json()["linear"])

    qb = quotient_basis(pres)
    print("Groebner basis:", [gb.format_poly(g) for g in qb.groebner_basis])
    for d, monos in enumerate(qb.monomials):
        print(f"degree {d}:", [gb.format_monomial(m) for m in monos])
    print("dims", qb.dims, "agree with the h-vector", fan.complex.h_vector())

    M, ok = poincare_pairing(qb, 1)
    print("pairing in degree 1:", [[int(x) for x in row] for row in M], "nondegenerate:", ok)

    diamond = hodge_diamond(fan, qb)
    for row in diamond.table:
        print("  ", row)
    print("Betti numbers:", diamond.betti)


if __name__ == "__main__":
    main()
