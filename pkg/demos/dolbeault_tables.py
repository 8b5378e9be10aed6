"""Dolbeault numbers of the Hopf surface and of S^3 x S^3 from finite models.

The differential sends w'_1 to a chosen degree-one class; with the zero
class the table is the plain tensor product.
"""

from toricfol.corpus import hopf_fan, square_fan
from toricfol.dga import build_model, frolicher_check, model_cohomology
from toricfol.facering import build_presentation, quotient_basis


def show(title, fan, deltas):
    qb = quotient_basis(build_presentation(fan))
    model = build_model(qb, deltas)
    table = model_cohomology(model)
    print(f"{title}: model dimension {model.dimension}, d^2 = 0: {model.check_d_squared()}")
    for p, row in enumerate(table.rows()):
        print(f"  p={p}:", row)
    fr = frolicher_check(table, model.s)
    print(f"  Euler characteristic {fr.euler}, h00 = {fr.h00}\n")


def main():
    show("Hopf surface, delta = v1", hopf_fan(), [[1, 0, 0]])
    show("Hopf fan, delta = 0", hopf_fan(), [[0, 0, 0]])
    show("square fan, delta = v1 - v2", square_fan(), [[1, -1, 0, 0]])


if __name__ == "__main__":
    main()
