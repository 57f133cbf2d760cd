"""Reading and writing semigroup and groupoid files.

Two JSON semigroup formats are supported: ``isg-1`` carries an explicit
labeled multiplication table, and ``isg-gen-1`` carries a degree plus
generator strings whose closure is computed on load.  Groupoids use the
``grpd-1`` format with an arrow list, a composition table (``-1`` marks an
undefined composite), and the inverse involution.  All writers emit sorted
keys, compact separators, and a trailing newline so that output is
byte-deterministic; a write/read/write cycle reproduces the file exactly.
"""

import json

from .core import FiniteInverseSemigroup, closure_from_generators
from .errors import MalformedInput
from .groupoid import FiniteGroupoid
from .pbij import parse_element


def _as_json(text, what):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{what}: invalid JSON ({exc})")
    if not isinstance(obj, dict):
        raise MalformedInput(f"{what}: top level must be a JSON object")
    return obj


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _require(obj, key, kind, what):
    if key not in obj:
        raise MalformedInput(f"{what}: missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise MalformedInput(f"{what}: key {key!r} must be a {kind.__name__}")
    return value


def _int_matrix(rows, what, key):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInput(f"{what}: {key!r} must be a list of lists")
    for row in rows:
        for entry in row:
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise MalformedInput(f"{what}: {key!r} entries must be integers")
    return [list(row) for row in rows]


def loads_semigroup(text):
    """Parse an isg-1 or isg-gen-1 document into a validated semigroup."""
    obj = _as_json(text, "semigroup file")
    fmt = obj.get("format")
    if fmt == "isg-1":
        labels = _require(obj, "labels", list, "isg-1")
        if not all(isinstance(x, str) for x in labels):
            raise MalformedInput("isg-1: labels must be strings")
        mult = _int_matrix(_require(obj, "mult", list, "isg-1"), "isg-1", "mult")
        zero = obj.get("zero")
        one = obj.get("one")
        for name, value in (("zero", zero), ("one", one)):
            if value is not None and (
                not isinstance(value, int)
                or isinstance(value, bool)
                or not 0 <= value < len(labels)
            ):
                raise MalformedInput(f"isg-1: {name!r} must index an element")
        return FiniteInverseSemigroup(labels, mult, zero=zero, one=one)
    if fmt == "isg-gen-1":
        degree = _require(obj, "degree", int, "isg-gen-1")
        raw = _require(obj, "generators", list, "isg-gen-1")
        if not all(isinstance(g, str) for g in raw):
            raise MalformedInput("isg-gen-1: generators must be strings")
        generators = [parse_element(g, degree) for g in raw]
        semigroup, _ = closure_from_generators(generators)
        return semigroup
    raise MalformedInput(f"semigroup file: unknown format {fmt!r}")


def dumps_semigroup(semigroup):
    obj = {
        "format": "isg-1",
        "labels": list(semigroup.labels),
        "mult": [list(row) for row in semigroup.mult],
    }
    if semigroup.zero is not None:
        obj["zero"] = semigroup.zero
    if semigroup.one is not None:
        obj["one"] = semigroup.one
    return _dump(obj)


def loads_groupoid(text):
    """Parse a grpd-1 document into a validated groupoid."""
    obj = _as_json(text, "groupoid file")
    if obj.get("format") != "grpd-1":
        raise MalformedInput(f"groupoid file: unknown format {obj.get('format')!r}")
    identities = _require(obj, "identities", list, "grpd-1")
    arrows = _require(obj, "arrows", list, "grpd-1")
    comp = _int_matrix(_require(obj, "comp", list, "grpd-1"), "grpd-1", "comp")
    inv = _require(obj, "inv", list, "grpd-1")
    names, dom, cod = [], [], []
    for arrow in arrows:
        if not isinstance(arrow, dict):
            raise MalformedInput("grpd-1: arrows must be objects")
        names.append(_require(arrow, "name", str, "grpd-1 arrow"))
        dom.append(_require(arrow, "dom", int, "grpd-1 arrow"))
        cod.append(_require(arrow, "cod", int, "grpd-1 arrow"))
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in inv):
        raise MalformedInput("grpd-1: inv must be a list of integers")
    groupoid = FiniteGroupoid(names, dom, cod, comp, list(inv))
    if sorted(identities) != sorted(groupoid.identities):
        raise MalformedInput("grpd-1: declared identities disagree with the table")
    return groupoid


def dumps_groupoid(groupoid):
    obj = {
        "format": "grpd-1",
        "identities": sorted(groupoid.identities),
        "arrows": [
            {"name": groupoid.names[x], "dom": groupoid.dom[x], "cod": groupoid.cod[x]}
            for x in range(len(groupoid))
        ],
        "comp": [list(row) for row in groupoid.comp],
        "inv": list(groupoid.inv),
    }
    return _dump(obj)


def _dot_quote(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dumps_dot(groupoid):
    """DOT digraph: one node per identity, one labeled edge per other arrow."""
    lines = ["digraph groupoid {"]
    for e in sorted(groupoid.identities):
        lines.append(f"  {_dot_quote(groupoid.names[e])};")
    for x in range(len(groupoid)):
        if groupoid.is_identity(x):
            continue
        src = _dot_quote(groupoid.names[groupoid.dom[x]])
        dst = _dot_quote(groupoid.names[groupoid.cod[x]])
        lines.append(f"  {src} -> {dst} [label={_dot_quote(groupoid.names[x])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
