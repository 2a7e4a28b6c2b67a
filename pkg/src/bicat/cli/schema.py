"""JSON documents: ``{"kind", "version", "payload"}`` with canonical serialization.

Shapes are checked with :mod:`jsonschema`; cross references (every id a table
mentions must exist) are checked by hand so the error can point at the exact
entry.  Both raise :class:`~bicat.errors.SchemaError`.
"""

from __future__ import annotations

import json

import jsonschema

from ..core.model import Bicategory, ValidationReport, Violation
from ..errors import SchemaError
from ..functors import LaxFunctor, LaxTransformation, Modification
from ..quillen.terminal import IncLaxTerminalData
from ..quillen.whitehead import BiequivalenceCertificate

VERSION = 1
KINDS = ("bicategory", "functor", "transformation", "modification", "terminal-data", "certificate", "report")

_ID = {"type": "string", "minLength": 1}
_MAP = {"type": "object", "additionalProperties": _ID}


def _tuple(n):
    return {"type": "array", "items": _ID, "minItems": n, "maxItems": n}


def _cells():
    return {
        "type": "array",
        "items": {
            "type": "object",
            "properties": {"id": _ID, "src": _ID, "tgt": _ID},
            "required": ["id", "src", "tgt"],
            "additionalProperties": False,
        },
    }


_HOM = {
    "type": "object",
    "properties": {
        "one_cells": _cells(),
        "two_cells": _cells(),
        "id2": _MAP,
        "vcomp": {"type": "array", "items": _tuple(3)},
    },
    "required": ["one_cells", "two_cells", "id2", "vcomp"],
    "additionalProperties": False,
}

BICATEGORY = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "objects": {"type": "array", "items": _ID, "uniqueItems": True},
        "id1": _MAP,
        "homs": {
            "type": "object",
            "patternProperties": {r"^[^|]+\|[^|]+$": _HOM},
            "additionalProperties": False,
        },
        "hcomp1": {"type": "array", "items": _tuple(3)},
        "hcomp2": {"type": "array", "items": _tuple(3)},
        "assoc": {"type": "array", "items": _tuple(4)},
        "assoc_inv": {"type": "array", "items": _tuple(4)},
        "lunit": _MAP,
        "lunit_inv": _MAP,
        "runit": _MAP,
        "runit_inv": _MAP,
    },
    "required": [
        "objects", "id1", "homs", "hcomp1", "hcomp2", "assoc", "assoc_inv",
        "lunit", "lunit_inv", "runit", "runit_inv",
    ],
    "additionalProperties": False,
}

FUNCTOR = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "src": BICATEGORY,
        "tgt": BICATEGORY,
        "obj_map": _MAP,
        "one_map": _MAP,
        "two_map": _MAP,
        "F2": {"type": "array", "items": _tuple(3)},
        "F0": _MAP,
    },
    "required": ["src", "tgt", "obj_map", "one_map", "two_map", "F2", "F0"],
    "additionalProperties": False,
}

TRANSFORMATION = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "src": FUNCTOR,
        "tgt": FUNCTOR,
        "comp1": _MAP,
        "comp2": _MAP,
    },
    "required": ["src", "tgt", "comp1", "comp2"],
    "additionalProperties": False,
}

MODIFICATION = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "src": TRANSFORMATION,
        "tgt": TRANSFORMATION,
        "comp": _MAP,
    },
    "required": ["src", "tgt", "comp"],
    "additionalProperties": False,
}

_TERMINAL_ENTRY = {
    "type": "object",
    "properties": {
        "terminal": _ID,
        "k1": _MAP,
        "k2": _MAP,
        "candidates": {"type": "array", "items": _ID},
    },
    "required": ["terminal", "k1", "k2"],
    "additionalProperties": False,
}

TERMINAL_DATA = {
    "type": "object",
    "properties": {"objects": {"type": "object", "additionalProperties": _TERMINAL_ENTRY}},
    "required": ["objects"],
    "additionalProperties": False,
}

_CERT_PARTS = ("eta", "eps", "eta_inv", "eps_inv")
_CERT_MODS = ("eta_unit", "eta_counit", "eps_unit", "eps_counit")

CERTIFICATE = {
    "type": "object",
    "properties": {
        "F": FUNCTOR,
        "G": FUNCTOR,
        **{k: TRANSFORMATION for k in _CERT_PARTS},
        **{k: MODIFICATION for k in _CERT_MODS},
        "evidence": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "required": ["F", "G", *_CERT_PARTS, *_CERT_MODS, "evidence"],
    "additionalProperties": False,
}

REPORT = {
    "type": "object",
    "properties": {
        "title": {"type": "string"},
        "status": {"enum": ["pass", "fail"]},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "axiom": {"type": "string"},
                    "witness": {"type": "array"},
                    "lhs": {"type": ["string", "null"]},
                    "rhs": {"type": ["string", "null"]},
                },
                "required": ["axiom", "witness"],
                "additionalProperties": False,
            },
        },
        "info": {"type": "object"},
    },
    "required": ["status", "violations"],
    "additionalProperties": False,
}

PAYLOADS = {
    "bicategory": BICATEGORY,
    "functor": FUNCTOR,
    "transformation": TRANSFORMATION,
    "modification": MODIFICATION,
    "terminal-data": TERMINAL_DATA,
    "certificate": CERTIFICATE,
    "report": REPORT,
}

DOCUMENT = {
    "type": "object",
    "properties": {
        "kind": {"enum": list(KINDS)},
        "version": {"const": VERSION},
        "payload": {"type": "object"},
    },
    "required": ["kind", "version", "payload"],
    "additionalProperties": False,
}


def _check(schema, data, prefix=()):
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(data), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        raise SchemaError(list(prefix) + list(e.absolute_path), e.message)


# -- text ------------------------------------------------------------------------


def dumps(kind, payload):
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    doc = {"kind": kind, "version": VERSION, "payload": payload}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text):
    """Parse and shape-check a document; returns ``(kind, payload)``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError([], f"not JSON: {exc.msg} at line {exc.lineno}") from None
    _check(DOCUMENT, data)
    kind = data["kind"]
    _check(PAYLOADS[kind], data["payload"], ("payload",))
    return kind, data["payload"]


# -- bicategories ----------------------------------------------------------------


def bicategory_to_json(B):
    homs = {}
    for f in sorted(B.one_cells):
        x, y = B.one_cells[f]
        if "|" in x or "|" in y:
            raise SchemaError(["objects"], f"object ids may not contain '|': {x!r}, {y!r}")
        h = homs.setdefault(f"{x}|{y}", {"one_cells": [], "two_cells": [], "id2": {}, "vcomp": []})
        h["one_cells"].append({"id": f, "src": x, "tgt": y})
        if f in B.id2:
            h["id2"][f] = B.id2[f]
    for a in sorted(B.two_cells):
        s, t = B.two_cells[a]
        homs[_hom_key(B, s)]["two_cells"].append({"id": a, "src": s, "tgt": t})
    for (b, a), c in sorted(B.vcomp.items()):
        homs[_hom_key(B, B.two_cells[a][0])]["vcomp"].append([b, a, c])
    out = {
        "objects": sorted(B.objects),
        "id1": dict(B.id1),
        "homs": homs,
        "hcomp1": [[g, f, c] for (g, f), c in sorted(B.hcomp1.items())],
        "hcomp2": [[b, a, c] for (b, a), c in sorted(B.hcomp2.items())],
        "assoc": [[*k, c] for k, c in sorted(B.assoc.items())],
        "assoc_inv": [[*k, c] for k, c in sorted(B.assoc_inv.items())],
        "lunit": dict(B.lunit),
        "lunit_inv": dict(B.lunit_inv),
        "runit": dict(B.runit),
        "runit_inv": dict(B.runit_inv),
    }
    if B.name:
        out["name"] = B.name
    return out


def _hom_key(B, f):
    x, y = B.one_cells[f]
    return f"{x}|{y}"


def bicategory_from_json(p, path=("payload",)):
    path = list(path)
    objects = list(p["objects"])
    objs = set(objects)
    one_cells, two_cells, id2, vcomp = {}, {}, {}, {}
    for key, hom in sorted(p["homs"].items()):
        x, y = key.split("|")
        here = path + ["homs", key]
        for o in (x, y):
            if o not in objs:
                raise SchemaError(here, f"unknown object {o!r}")
        for i, c in enumerate(hom["one_cells"]):
            if (c["src"], c["tgt"]) != (x, y):
                raise SchemaError(here + ["one_cells", i], f"1-cell {c['id']!r} does not belong to hom {key}")
            if c["id"] in one_cells:
                raise SchemaError(here + ["one_cells", i], f"duplicate 1-cell id {c['id']!r}")
            one_cells[c["id"]] = (x, y)
    for key, hom in sorted(p["homs"].items()):
        here = path + ["homs", key]
        for i, c in enumerate(hom["two_cells"]):
            for end in (c["src"], c["tgt"]):
                if end not in one_cells or _key(one_cells[end]) != key:
                    raise SchemaError(here + ["two_cells", i], f"boundary 1-cell {end!r} is not in hom {key}")
            if c["id"] in two_cells:
                raise SchemaError(here + ["two_cells", i], f"duplicate 2-cell id {c['id']!r}")
            two_cells[c["id"]] = (c["src"], c["tgt"])
    for key, hom in sorted(p["homs"].items()):
        here = path + ["homs", key]
        for f, a in hom["id2"].items():
            _ref(one_cells, f, here + ["id2", f], "1-cell")
            _ref(two_cells, a, here + ["id2", f], "2-cell")
            id2[f] = a
        for i, (b, a, c) in enumerate(hom["vcomp"]):
            for cell in (b, a, c):
                _ref(two_cells, cell, here + ["vcomp", i], "2-cell")
            vcomp[(b, a)] = c
    for x, f in p["id1"].items():
        _ref(objs, x, path + ["id1", x], "object")
        _ref(one_cells, f, path + ["id1", x], "1-cell")
    hcomp1 = _table(p["hcomp1"], path + ["hcomp1"], (one_cells, "1-cell"), (one_cells, "1-cell"))
    hcomp2 = _table(p["hcomp2"], path + ["hcomp2"], (two_cells, "2-cell"), (two_cells, "2-cell"))
    assoc = _table(p["assoc"], path + ["assoc"], (one_cells, "1-cell"), (two_cells, "2-cell"))
    assoc_inv = _table(p["assoc_inv"], path + ["assoc_inv"], (one_cells, "1-cell"), (two_cells, "2-cell"))
    units = {}
    for label in ("lunit", "lunit_inv", "runit", "runit_inv"):
        for f, a in p[label].items():
            _ref(one_cells, f, path + [label, f], "1-cell")
            _ref(two_cells, a, path + [label, f], "2-cell")
        units[label] = dict(p[label])
    return Bicategory(
        objects=tuple(objects),
        one_cells=one_cells,
        two_cells=two_cells,
        id1=dict(p["id1"]),
        id2=id2,
        vcomp=vcomp,
        hcomp1=hcomp1,
        hcomp2=hcomp2,
        assoc=assoc,
        assoc_inv=assoc_inv,
        name=p.get("name", ""),
        **units,
    )


def _key(ends):
    return f"{ends[0]}|{ends[1]}"


def _ref(table, name, path, kind):
    if name not in table:
        raise SchemaError(path, f"unknown {kind} {name!r}")


def _table(rows, path, keys, values):
    """Rows ``[k1, ..., res]`` as a dict keyed by tuples, every id checked."""
    out = {}
    for i, row in enumerate(rows):
        *key, res = row
        for k in key:
            _ref(keys[0], k, path + [i], keys[1])
        _ref(values[0], res, path + [i], values[1])
        out[tuple(key)] = res
    return out


# -- functors, transformations, modifications -------------------------------------------


class _Interner:
    """Reuses one object per distinct embedded bicategory or functor."""

    def __init__(self):
        self.seen = {}

    def bicategory(self, p, path):
        key = ("B", json.dumps(p, sort_keys=True))
        if key not in self.seen:
            self.seen[key] = bicategory_from_json(p, path)
        return self.seen[key]

    def functor(self, p, path):
        key = ("F", json.dumps(p, sort_keys=True))
        if key not in self.seen:
            self.seen[key] = _functor_from_json(self, p, path)
        return self.seen[key]


def functor_to_json(F):
    out = {
        "src": bicategory_to_json(F.src),
        "tgt": bicategory_to_json(F.tgt),
        "obj_map": dict(F.obj_map),
        "one_map": dict(F.one_map),
        "two_map": dict(F.two_map),
        "F2": [[g, f, c] for (g, f), c in sorted(F.F2.items())],
        "F0": dict(F.F0),
    }
    if F.name:
        out["name"] = F.name
    return out


def _functor_from_json(intern, p, path):
    path = list(path)
    A = intern.bicategory(p["src"], path + ["src"])
    B = intern.bicategory(p["tgt"], path + ["tgt"])
    for label, dom, cod, kinds in (
        ("obj_map", set(A.objects), set(B.objects), ("object", "object")),
        ("one_map", A.one_cells, B.one_cells, ("1-cell", "1-cell")),
        ("two_map", A.two_cells, B.two_cells, ("2-cell", "2-cell")),
        ("F0", set(A.objects), B.two_cells, ("object", "2-cell")),
    ):
        for k, v in p[label].items():
            _ref(dom, k, path + [label, k], kinds[0])
            _ref(cod, v, path + [label, k], kinds[1])
    F2 = {}
    for i, (g, f, c) in enumerate(p["F2"]):
        _ref(A.one_cells, g, path + ["F2", i], "1-cell")
        _ref(A.one_cells, f, path + ["F2", i], "1-cell")
        _ref(B.two_cells, c, path + ["F2", i], "2-cell")
        F2[(g, f)] = c
    return LaxFunctor(
        A, B, dict(p["obj_map"]), dict(p["one_map"]), dict(p["two_map"]), F2, dict(p["F0"]), name=p.get("name", "")
    )


def functor_from_json(p, path=("payload",), intern=None):
    return (intern or _Interner()).functor(p, path)


def transformation_to_json(t):
    out = {
        "src": functor_to_json(t.src),
        "tgt": functor_to_json(t.tgt),
        "comp1": dict(t.comp1),
        "comp2": dict(t.comp2),
    }
    if t.name:
        out["name"] = t.name
    return out


def transformation_from_json(p, path=("payload",), intern=None):
    intern = intern or _Interner()
    path = list(path)
    F = intern.functor(p["src"], path + ["src"])
    G = intern.functor(p["tgt"], path + ["tgt"])
    A, B = F.src, F.tgt
    for x, c in p["comp1"].items():
        _ref(set(A.objects), x, path + ["comp1", x], "object")
        _ref(B.one_cells, c, path + ["comp1", x], "1-cell")
    for f, c in p["comp2"].items():
        _ref(A.one_cells, f, path + ["comp2", f], "1-cell")
        _ref(B.two_cells, c, path + ["comp2", f], "2-cell")
    return LaxTransformation(F, G, dict(p["comp1"]), dict(p["comp2"]), name=p.get("name", ""))


def modification_to_json(m):
    out = {"src": transformation_to_json(m.src), "tgt": transformation_to_json(m.tgt), "comp": dict(m.comp)}
    if m.name:
        out["name"] = m.name
    return out


def modification_from_json(p, path=("payload",), intern=None):
    intern = intern or _Interner()
    path = list(path)
    a = transformation_from_json(p["src"], path + ["src"], intern)
    b = transformation_from_json(p["tgt"], path + ["tgt"], intern)
    B = a.src.tgt
    for x, c in p["comp"].items():
        _ref(set(a.src.src.objects), x, path + ["comp", x], "object")
        _ref(B.two_cells, c, path + ["comp", x], "2-cell")
    return Modification(a, b, dict(p["comp"]), name=p.get("name", ""))


# -- terminal data, certificates, reports ---------------------------------------------


def terminal_data_to_json(terminal):
    objects = {}
    for x, d in sorted(terminal.items()):
        entry = {"terminal": d.terminal, "k1": dict(d.k1), "k2": dict(d.k2)}
        if d.candidates:
            entry["candidates"] = list(d.candidates)
        objects[x] = entry
    return {"objects": objects}


def terminal_data_from_json(p):
    return {
        x: IncLaxTerminalData(e["terminal"], dict(e["k1"]), dict(e["k2"]), list(e.get("candidates", [])))
        for x, e in p["objects"].items()
    }


def certificate_to_json(cert):
    out = {"F": functor_to_json(cert.F), "G": functor_to_json(cert.G), "evidence": dict(cert.evidence)}
    for k in _CERT_PARTS:
        out[k] = transformation_to_json(getattr(cert, k))
    for k in _CERT_MODS:
        out[k] = modification_to_json(getattr(cert, k))
    return out


def certificate_from_json(p, path=("payload",)):
    intern = _Interner()
    path = list(path)
    parts = {
        "F": functor_from_json(p["F"], path + ["F"], intern),
        "G": functor_from_json(p["G"], path + ["G"], intern),
    }
    for k in _CERT_PARTS:
        parts[k] = transformation_from_json(p[k], path + [k], intern)
    for k in _CERT_MODS:
        parts[k] = modification_from_json(p[k], path + [k], intern)
    return BiequivalenceCertificate(evidence=dict(p["evidence"]), **parts)


def _jsonable(value):
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def report_to_json(report, title="report"):
    return {
        "title": title,
        "status": report.status,
        "violations": [
            {"axiom": v.axiom, "witness": _jsonable(v.witness), "lhs": v.lhs, "rhs": v.rhs}
            for v in report.violations
        ],
        "info": _jsonable(report.info),
    }


def report_from_json(p):
    violations = [Violation(v["axiom"], tuple(v["witness"]), v.get("lhs"), v.get("rhs")) for v in p["violations"]]
    return ValidationReport(p["status"], violations, dict(p.get("info", {})))


TO_JSON = {
    "bicategory": bicategory_to_json,
    "functor": functor_to_json,
    "transformation": transformation_to_json,
    "modification": modification_to_json,
    "terminal-data": terminal_data_to_json,
    "certificate": certificate_to_json,
    "report": report_to_json,
}

FROM_JSON = {
    "bicategory": bicategory_from_json,
    "functor": functor_from_json,
    "transformation": transformation_from_json,
    "modification": modification_from_json,
    "terminal-data": terminal_data_from_json,
    "certificate": certificate_from_json,
    "report": report_from_json,
}


def serialize(kind, value):
    return dumps(kind, TO_JSON[kind](value))


def parse(text):
    """``(kind, value)`` from document text."""
    kind, payload = loads(text)
    return kind, FROM_JSON[kind](payload)
