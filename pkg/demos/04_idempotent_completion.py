"""The idempotent completion C♮ and how properties pass to F♮.

Objects of C♮ are pairs (X, e) with e idempotent; a morphism (X,e) -> (Y,e')
is f with e'∘f∘e = f.  F♮ is always a functor, and F is semifull exactly
when F♮ is full (and likewise for the other properties).
"""

from semicat.completion import base_morphism, complete_semifunctor, idempotent_completion, iota, split_idempotent
from semicat.gallery import f_e, m3, mat2, walking_idempotent
from semicat.kernel import product_category
from semicat.props import is_full, is_fully_faithful, is_semifull, property_report

c = m3()
cn = idempotent_completion(c)
print(cn, cn.objects)
for a in cn.objects:
    for b in cn.objects:
        print(f"  Hom({a}, {b}) =", [base_morphism(cn, m) for m in cn.hom(a, b)])

print("Mat2♮:", idempotent_completion(mat2()))
print("ι_M3 fully faithful:", bool(is_fully_faithful(iota(c))))

# u splits in W♮ through (*, u)
w = walking_idempotent()
print("split of u:", split_idempotent(w, "u"))

fe = f_e(c, product_category(c, c))
fn = complete_semifunctor(fe)
print("f_e semifull:", bool(is_semifull(fe)), "| f_e♮ full:", bool(is_full(fn)))
print("f_e♮ report:", property_report(fn))
