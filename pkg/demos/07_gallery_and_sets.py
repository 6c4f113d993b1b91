"""The gallery of worked examples and the pointwise checks on finite sets."""

from semicat.gallery import build, check_entry, entry_names
from semicat.setpoint import pointwise_semiproduct, pointwise_set_square

for name in entry_names():
    rows = check_entry(build(name))
    print(f"{name:18} {sum(r[3] for r in rows)}/{len(rows)}")

# the square semifunctor A ↦ A×A is separable and naturally semifull on samples
print(pointwise_set_square(max_set_size=2)["checks"])
r = pointwise_semiproduct(max_set_size=2)
print("projection from ∅×B not epi:", r["projection_not_epi"])
print("no map B -> ∅:", r["gamma2_missing"])
