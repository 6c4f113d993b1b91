"""Deciding separable, naturally semifull and semiseparable semifunctors.

Each property asks for a natural family P_{X,Y}: Hom(FX, FY) -> Hom(X, Y)
satisfying one equation.  solve_P returns the first solution in a fixed
order, or None.
"""

from semicat.gallery import f_e, m3
from semicat.kernel import product_category
from semicat.morphprop import fc_semisplit_mono_witness
from semicat.props import all_P_solutions, associated_idempotent, is_semifull, maschke_transfer, property_report, solve_P, verify_P

c = m3()
fe = f_e(c, product_category(c, c))
for k, v in property_report(fe).items():
    print(f"{k:>20}: {v}")

p = solve_P(fe, "separable")
print("P((m,n)) =", {d: v for (_, _, d), v in p.assignment.items()})
print("violations:", verify_P(fe, p, "separable"))
for mode in ("separable", "naturally-semifull", "semiseparable"):
    print(mode, "solutions:", len(all_P_solutions(fe, mode)))

# the failure of semifullness comes with a concrete cell
print("semifull counterexample:", is_semifull(fe).counterexample)

# a semiseparable P determines the associated idempotent; it is Id here since f_e is separable
print("associated idempotent:", dict(associated_idempotent(fe, solve_P(fe, "semiseparable")).components))

# Maschke-type transfer: a morphism whose image semisplits splits already in C
for f in c.hom("*", "*"):
    if fc_semisplit_mono_witness(fe, "*", fe(f)) is not None:
        print(f"retraction of {f}:", maschke_transfer(fe, p, f, "mono"))
