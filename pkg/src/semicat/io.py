"""JSON documents for categories, semifunctors, transformations,
semiadjunctions, idempotent natural transformations and P-solutions.

A file holds ``{"kind": ..., "version": 1, "payload": {...}}``.  Rendering
is canonical: UTF-8, sorted keys, two-space indent, trailing newline.
Wherever a category or semifunctor payload is expected, ``{"$ref": path}``
may stand in for it; the path is resolved against the referring file's
directory and must hold a document of the matching kind.
"""

import json
import os
import sys
from dataclasses import dataclass

from .errors import ParseError, SchemaError
from .kernel import FinCategory, Morphism, validate_category
from .props import PSolution, normalize_mode
from .semiadj import Semiadjunction
from .semifunctor import IdemNatTransf, Semifunctor, idem_nat, validate_semifunctor
from .transform import Transformation, validate_transformation

__all__ = [
    "KINDS",
    "VERSION",
    "EXTENSION",
    "Document",
    "parse",
    "render",
    "to_document",
    "to_object",
    "read_bytes",
    "write_bytes",
    "load_document",
    "load",
    "dump",
]

KINDS = ("category", "semifunctor", "transformation", "semiadjunction", "idem-nat", "p-solution")
VERSION = 1
EXTENSION = ".semicat.json"


@dataclass
class Document:
    kind: str
    version: int
    payload: dict


# schema checks on raw JSON


def _need(obj, key, path, kind=None):
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", path)
    if key not in obj:
        raise SchemaError(f"missing field {key!r}", f"{path}.{key}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(f"field {key!r} must be {kind.__name__}", f"{path}.{key}")
    return value


def _str_map(obj, path):
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", path)
    for k, v in obj.items():
        if not isinstance(v, str):
            raise SchemaError("values must be strings", f"{path}.{k}")


def _is_ref(obj):
    return isinstance(obj, dict) and set(obj) == {"$ref"}


def _check_ref(obj, path):
    if not isinstance(obj["$ref"], str) or not obj["$ref"]:
        raise SchemaError("$ref must be a non-empty path", f"{path}.$ref")


def _check_category(p, path):
    if _is_ref(p):
        return _check_ref(p, path)
    objects = _need(p, "objects", path, list)
    for i, x in enumerate(objects):
        if not isinstance(x, str):
            raise SchemaError("object ids must be strings", f"{path}.objects[{i}]")
    morphisms = _need(p, "morphisms", path, list)
    ends = {}
    for i, m in enumerate(morphisms):
        mp = f"{path}.morphisms[{i}]"
        for key in ("id", "src", "dst"):
            _need(m, key, mp, str)
        ends[m["id"]] = (m["src"], m["dst"])
    _str_map(_need(p, "identities", path, dict), f"{path}.identities")
    compose = _need(p, "compose", path, list)
    pairs = set()
    for i, entry in enumerate(compose):
        if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(a, str) for a in entry)):
            raise SchemaError("compose entries are [g, f, g∘f] string triples", f"{path}.compose[{i}]")
        key = (entry[0], entry[1])
        if key in pairs:
            raise SchemaError(f"duplicate compose entry for {list(key)}", f"{path}.compose[{i}]")
        pairs.add(key)
    for f, (_, fd) in ends.items():
        for g, (gs, _) in ends.items():
            if fd == gs and (g, f) not in pairs:
                raise SchemaError(f"missing compose entry for [{g!r}, {f!r}]", f"{path}.compose")


def _check_semifunctor(p, path):
    if _is_ref(p):
        return _check_ref(p, path)
    _check_category(_need(p, "source", path), f"{path}.source")
    _check_category(_need(p, "target", path), f"{path}.target")
    _str_map(_need(p, "object_map", path), f"{path}.object_map")
    _str_map(_need(p, "morphism_map", path), f"{path}.morphism_map")


def _check_transformation(p, path):
    _check_semifunctor(_need(p, "from", path), f"{path}.from")
    _check_semifunctor(_need(p, "to", path), f"{path}.to")
    _str_map(_need(p, "components", path), f"{path}.components")


def _check_semiadjunction(p, path):
    _check_semifunctor(_need(p, "F", path), f"{path}.F")
    _check_semifunctor(_need(p, "G", path), f"{path}.G")
    _str_map(_need(p, "unit", path), f"{path}.unit")
    _str_map(_need(p, "counit", path), f"{path}.counit")


def _check_idem(p, path):
    _check_category(_need(p, "category", path), f"{path}.category")
    _str_map(_need(p, "components", path), f"{path}.components")


def _check_psolution(p, path):
    _check_semifunctor(_need(p, "functor", path), f"{path}.functor")
    mode = _need(p, "mode", path, str)
    try:
        normalize_mode(mode)
    except ValueError as err:
        raise SchemaError(str(err), f"{path}.mode") from None
    cells = _need(p, "assignment", path, list)
    for i, cell in enumerate(cells):
        if not (isinstance(cell, list) and len(cell) == 4 and all(isinstance(a, str) for a in cell)):
            raise SchemaError("assignment entries are [X, Y, d, P(d)] string quadruples",
                              f"{path}.assignment[{i}]")


_CHECKS = {
    "category": _check_category,
    "semifunctor": _check_semifunctor,
    "transformation": _check_transformation,
    "semiadjunction": _check_semiadjunction,
    "idem-nat": _check_idem,
    "p-solution": _check_psolution,
}


def parse(data):
    """Bytes (or text) to a :class:`Document`; raises :class:`ParseError` on
    malformed JSON and :class:`SchemaError` on a structural problem."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as err:
            raise ParseError(f"not UTF-8: {err}") from None
    if not data.strip():
        raise ParseError("empty input")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON at line {err.lineno} column {err.colno}: {err.msg}") from None
    kind = _need(raw, "kind", "$", str)
    if kind not in KINDS:
        raise SchemaError(f"unknown kind {kind!r}", "$.kind")
    version = _need(raw, "version", "$", int)
    if version != VERSION:
        raise SchemaError(f"unsupported version {version}", "$.version")
    payload = _need(raw, "payload", "$", dict)
    _CHECKS[kind](payload, "$.payload")
    return Document(kind, version, payload)


def render(doc):
    raw = {"kind": doc.kind, "version": doc.version, "payload": doc.payload}
    return (json.dumps(raw, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


# objects to payloads


def _category_payload(cat):
    pos = {m.id: i for i, m in enumerate(cat.morphisms)}
    entries = sorted(cat.compose_table.items(), key=lambda kv: (pos[kv[0][1]], pos[kv[0][0]]))
    return {
        "objects": list(cat.objects),
        "morphisms": [{"id": m.id, "src": m.src, "dst": m.dst} for m in cat.morphisms],
        "identities": dict(cat.identity),
        "compose": [[g, f, h] for (g, f), h in entries],
    }


def _cat_or_ref(cat, refs):
    if refs and cat in refs:
        return {"$ref": refs[cat]}
    return _category_payload(cat)


def _semifunctor_payload(fun, refs):
    if refs and fun in refs:
        return {"$ref": refs[fun]}
    return {
        "source": _cat_or_ref(fun.source, refs),
        "target": _cat_or_ref(fun.target, refs),
        "object_map": dict(fun.obj_map),
        "morphism_map": dict(fun.mor_map),
    }


def to_document(obj, refs=None):
    """Wrap a library object in a :class:`Document`.

    ``refs`` maps categories or semifunctors to paths emitted as ``$ref``.
    """
    if isinstance(obj, FinCategory):
        return Document("category", VERSION, _category_payload(obj))
    if isinstance(obj, Semifunctor):
        payload = dict(_semifunctor_payload(obj, None))
        payload["source"] = _cat_or_ref(obj.source, refs)
        payload["target"] = _cat_or_ref(obj.target, refs)
        return Document("semifunctor", VERSION, payload)
    if isinstance(obj, Transformation):
        return Document("transformation", VERSION, {
            "from": _semifunctor_payload(obj.src, refs),
            "to": _semifunctor_payload(obj.dst, refs),
            "components": dict(obj.components),
        })
    if isinstance(obj, Semiadjunction):
        return Document("semiadjunction", VERSION, {
            "F": _semifunctor_payload(obj.F, refs),
            "G": _semifunctor_payload(obj.G, refs),
            "unit": dict(obj.unit),
            "counit": dict(obj.counit),
        })
    if isinstance(obj, IdemNatTransf):
        return Document("idem-nat", VERSION, {
            "category": _cat_or_ref(obj.base, refs),
            "components": dict(obj.components),
        })
    if isinstance(obj, PSolution):
        src = obj.functor.source
        pos = {m.id: i for i, m in enumerate(obj.functor.target.morphisms)}
        opos = {x: i for i, x in enumerate(src.objects)}
        cells = sorted(obj.assignment.items(), key=lambda kv: (opos[kv[0][0]], opos[kv[0][1]], pos[kv[0][2]]))
        return Document("p-solution", VERSION, {
            "functor": _semifunctor_payload(obj.functor, refs),
            "mode": obj.mode,
            "assignment": [[x, y, d, v] for (x, y, d), v in cells],
        })
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# payloads to objects


class _Resolver:
    def __init__(self, base):
        self.base = base
        self.stack = []
        self.cache = {}

    def follow(self, ref, kind, path):
        target = os.path.normpath(os.path.join(self.base, ref))
        if target in self.stack:
            raise SchemaError(f"$ref cycle through {ref!r}", path)
        try:
            data = read_bytes(target)
        except OSError as err:
            raise SchemaError(f"cannot read $ref {ref!r}: {err.strerror}", path) from None
        doc = parse(data)
        if doc.kind != kind:
            raise SchemaError(f"$ref {ref!r} holds a {doc.kind}, expected a {kind}", path)
        if (target, kind) not in self.cache:
            self.stack.append(target)
            saved, self.base = self.base, os.path.dirname(target)
            try:
                self.cache[(target, kind)] = _BUILDERS[kind](self, doc.payload, "$.payload")
            finally:
                self.base = saved
                self.stack.pop()
        return self.cache[(target, kind)]

    def category(self, p, path):
        if _is_ref(p):
            return self.follow(p["$ref"], "category", path)
        return _build_category(self, p, path)

    def semifunctor(self, p, path):
        if _is_ref(p):
            return self.follow(p["$ref"], "semifunctor", path)
        return _build_semifunctor(self, p, path)


def _build_category(res, p, path):
    cat = FinCategory(
        p["objects"],
        [Morphism(m["id"], m["src"], m["dst"]) for m in p["morphisms"]],
        p["identities"],
        {(g, f): h for g, f, h in p["compose"]},
    )
    return validate_category(cat)


def _build_semifunctor(res, p, path):
    src = res.category(p["source"], f"{path}.source")
    tgt = res.category(p["target"], f"{path}.target")
    return validate_semifunctor(Semifunctor(src, tgt, p["object_map"], p["morphism_map"]))


def _build_transformation(res, p, path):
    f = res.semifunctor(p["from"], f"{path}.from")
    g = res.semifunctor(p["to"], f"{path}.to")
    return validate_transformation(Transformation(f, g, p["components"]))


def _build_semiadjunction(res, p, path):
    f = res.semifunctor(p["F"], f"{path}.F")
    g = res.semifunctor(p["G"], f"{path}.G")
    return Semiadjunction(f, g, p["unit"], p["counit"])


def _build_idem(res, p, path):
    return idem_nat(res.category(p["category"], f"{path}.category"), p["components"])


def _build_psolution(res, p, path):
    fun = res.semifunctor(p["functor"], f"{path}.functor")
    return PSolution(fun, normalize_mode(p["mode"]), {(x, y, d): v for x, y, d, v in p["assignment"]})


_BUILDERS = {
    "category": _build_category,
    "semifunctor": _build_semifunctor,
    "transformation": _build_transformation,
    "semiadjunction": _build_semiadjunction,
    "idem-nat": _build_idem,
    "p-solution": _build_psolution,
}


def to_object(doc, base="."):
    """Build and validate the object a document describes.

    Categories, semifunctors, transformations and idempotent natural
    transformations are validated; semiadjunction data is returned as is so
    that callers can report on the semitriangular identities themselves.
    """
    return _BUILDERS[doc.kind](_Resolver(base), doc.payload, "$.payload")


# files


def read_bytes(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def write_bytes(path, data):
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def load_document(path):
    return parse(read_bytes(path))


def load(path, kind=None):
    """Read, parse and build the object stored at ``path`` (``-`` is stdin)."""
    doc = load_document(path)
    if kind is not None and doc.kind != kind:
        raise SchemaError(f"expected a {kind} document, found {doc.kind}", "$.kind")
    base = "." if path == "-" else os.path.dirname(os.path.abspath(path))
    return to_object(doc, base)


def dump(obj, path, refs=None):
    write_bytes(path, render(to_document(obj, refs)))
