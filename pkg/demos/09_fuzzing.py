"""Seeded random instances and the invariant sweep used by the test suite."""

from semicat.fuzz import instances
from semicat.props import property_report
from semicat.semifunctor import is_functor

tally = {}
for inst in instances(100, seed=0):
    r = property_report(inst.functor)
    key = ("functor" if is_functor(inst.functor) else "semifunctor",
           "sep" if r["separable"] else "semisep" if r["semiseparable"] else "-")
    tally[key] = tally.get(key, 0) + 1
for k, v in sorted(tally.items()):
    print(k, v)
