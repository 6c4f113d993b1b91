"""Regenerate fixtures/*.semicat.json from the gallery constructions.

    python tools/make_fixtures.py [outdir]
"""

import os
import sys

from semicat import io
from semicat.completion import iota, upsilon
from semicat.gallery import build, f_e, f_e11, fixpoint_functor, m3, mat2, product_ring_map, walking_idempotent, z2, z2xz2
from semicat.gallery import finset_semifunctor
from semicat.kernel import product_category
from semicat.props import solve_P
from semicat.semiadj import self_semiadjunction
from semicat.semifunctor import canonical_E, idem_nat


def fixtures():
    """``{file name: (object, refs)}``; refs point at sibling files."""
    c, w, z, mat, zz = m3(), walking_idempotent(), z2(), mat2(), z2xz2()
    cc = product_category(c, c)
    fe = f_e(c, cc)
    u = idem_nat(w, {"*": "u"})
    e_m3 = idem_nat(c, {"*": "e"})
    eu = canonical_E(u)
    cats = {c: "m3.semicat.json", cc: "m3xm3.semicat.json", w: "w.semicat.json", z: "z2.semicat.json",
            mat: "mat2.semicat.json", zz: "z2xz2.semicat.json"}
    out = {name: (cat, None) for cat, name in cats.items()}
    out["monoid_fe.semicat.json"] = (fe, cats)
    out["matrix_e11.semicat.json"] = (f_e11(z, mat), cats)
    out["product_ring_z.semicat.json"] = (product_ring_map(zz), cats)
    out["idem_w_u.semicat.json"] = (u, cats)
    out["idem_m3_e.semicat.json"] = (e_m3, cats)
    out["eu_on_w.semicat.json"] = (eu, cats)
    out["eu_self_adj.semicat.json"] = (self_semiadjunction(u), cats)
    out["monoid_fe_p.semicat.json"] = (solve_P(fe, "separable"), cats)
    forget = build("forgetful-upsilon")
    out["upsilon_iota_w.semicat.json"] = (forget.adjunctions["upsilon -| iota (W)"], None)
    out["upsilon_w.semicat.json"] = (upsilon(w), None)
    out["iota_w.semicat.json"] = (iota(w), None)
    f = finset_semifunctor(w, {"*": ["a", "b"]}, {"id": {"a": "a", "b": "a"}, "u": {"a": "a", "b": "a"}})
    _, _, alpha, _ = fixpoint_functor(f)
    out["fixpoint_alpha.semicat.json"] = (alpha, None)
    return out


def main(outdir="fixtures"):
    os.makedirs(outdir, exist_ok=True)
    for name, (obj, refs) in fixtures().items():
        io.dump(obj, os.path.join(outdir, name), refs)
        print(name)


if __name__ == "__main__":
    main(*sys.argv[1:])
