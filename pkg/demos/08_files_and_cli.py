"""Saving artifacts as canonical JSON and driving the command line."""

import os
import tempfile

from semicat import io
from semicat.cli import main
from semicat.gallery import f_e, m3
from semicat.kernel import product_category

c = m3()
cc = product_category(c, c)
with tempfile.TemporaryDirectory() as tmp:
    io.dump(c, os.path.join(tmp, "m3.semicat.json"))
    io.dump(cc, os.path.join(tmp, "m3xm3.semicat.json"))
    path = os.path.join(tmp, "fe.semicat.json")
    io.dump(f_e(c, cc), path, refs={c: "m3.semicat.json", cc: "m3xm3.semicat.json"})
    print(open(path).read()[:300], "...")
    # exit 0: the property holds; exit 1: it fails and a counterexample is printed
    print("exit", main(["check", "separable", "-F", path]))
    print("exit", main(["check", "semifull", "-F", path, "--json"]))
    print("exit", main(["solve-p", "-F", path, "--mode", "sep", "-o", os.path.join(tmp, "p.semicat.json")]))
