"""Medium specification files: versioned JSON with exact rational strings.

A spec file looks like::

    {
      "format_version": 1,
      "conventions": { ...the frozen basis conventions... },
      "recipe": {"kind": "axion", "alpha": "3/2"}
    }

Scalars are always strings (``"3"``, ``"-5/2"``).  Grade-1 dyadics and
the raw medium are nested lists of rows, multivectors and multiforms are
flat coordinate lists in the basis order of the conventions block.
:func:`dumps` is canonical, so ``dumps(loads(text)) == text`` for every
file it wrote.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .dyadic import Dyadic, E, F
from .errors import FresnelKitError
from .exterior import CONVENTION, MultiForm, MultiVector, dim, scalar
from .media import RECIPES, recipe_params

FORMAT_VERSION = 1


class SpecError(FresnelKitError, ValueError):
    """A spec file could not be parsed; ``line``/``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


# field codecs: ("scalar",), ("dyadic", left, right), ("element", cls, grade)
_SCALAR = ("scalar",)
_B = ("dyadic", E(1), F(1))
_FORM2 = ("element", MultiForm, 2)
_VEC2 = ("element", MultiVector, 2)

SCHEMA = {
    "axion": {"alpha": _SCALAR},
    "skewon-axion": {"B": _B, "alpha": _SCALAR},
    "p-axion": {"P": _B, "scale": _SCALAR, "alpha": _SCALAR},
    "case2": {"B": _B, "a": _SCALAR, "b": _SCALAR, "c": _SCALAR},
    "case1": {"Pi": _FORM2, "Lam": _FORM2, "C": _VEC2, "D": _VEC2, "alpha": _SCALAR},
    "q-medium": {"Q": ("dyadic", E(1), E(1)), "scale": _SCALAR},
    "q-antisym": {"A": _VEC2, "scale": _SCALAR},
    "raw": {"matrix": ("dyadic", F(2), E(2))},
}


def fmt(x) -> str:
    """Exact string form of a scalar."""
    return str(Fraction(scalar(x)))


def encode_value(value):
    if isinstance(value, Dyadic):
        return [[fmt(x) for x in row] for row in value.matrix]
    if isinstance(value, (MultiVector, MultiForm)):
        return [fmt(x) for x in value.coords]
    return fmt(value)


class _Locator:
    # maps a key to the line/column of its first appearance in the source text
    def __init__(self, text: str):
        self.text = text

    def find(self, key: str):
        pos = self.text.find(json.dumps(key))
        if pos < 0:
            return None, None
        line = self.text.count("\n", 0, pos) + 1
        return line, pos - self.text.rfind("\n", 0, pos)


def _parse_scalar(raw, where, loc):
    if not isinstance(raw, str):
        raise SpecError(f"{where}: scalars must be rational strings like \"3/2\"", *loc)
    try:
        return scalar(raw.strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SpecError(f"{where}: bad rational {raw!r}", *loc) from exc


def decode_value(codec, raw, where: str, loc=(None, None)):
    kind = codec[0]
    if kind == "scalar":
        return _parse_scalar(raw, where, loc)
    if kind == "dyadic":
        left, right = codec[1], codec[2]
        if (not isinstance(raw, list) or len(raw) != left.dim
                or any(not isinstance(r, list) or len(r) != right.dim for r in raw)):
            raise SpecError(f"{where}: expected a {left.dim}x{right.dim} matrix", *loc)
        rows = [[_parse_scalar(x, where, loc) for x in r] for r in raw]
        return Dyadic(left, right, rows)
    cls, grade = codec[1], codec[2]
    if not isinstance(raw, list) or len(raw) != dim(grade):
        raise SpecError(f"{where}: expected {dim(grade)} coordinates", *loc)
    return cls(grade, [_parse_scalar(x, where, loc) for x in raw])


def recipe_to_dict(recipe) -> dict:
    out = {"kind": recipe.kind}
    for name, value in recipe_params(recipe).items():
        out[name] = encode_value(value)
    return out


def recipe_from_dict(data, loc: _Locator | None = None):
    loc = loc or _Locator("")
    if not isinstance(data, dict):
        raise SpecError("recipe must be an object", *loc.find("recipe"))
    kind = data.get("kind")
    if kind not in SCHEMA:
        raise SpecError(f"unknown recipe kind {kind!r}; expected one of {sorted(SCHEMA)}", *loc.find("kind"))
    schema = SCHEMA[kind]
    extra = sorted(set(data) - set(schema) - {"kind"})
    if extra:
        raise SpecError(f"unknown field {extra[0]!r} in {kind} recipe", *loc.find(extra[0]))
    missing = [k for k in schema if k not in data]
    if missing:
        raise SpecError(f"missing field {missing[0]!r} in {kind} recipe", *loc.find("recipe"))
    values = {k: decode_value(codec, data[k], f"recipe.{k}", loc.find(k)) for k, codec in schema.items()}
    try:
        return RECIPES[kind](**values)
    except FresnelKitError as exc:
        raise SpecError(f"invalid {kind} recipe: {exc}", *loc.find("recipe")) from exc


def to_document(recipe) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "conventions": CONVENTION.as_dict(),
        "recipe": recipe_to_dict(recipe),
    }


def dumps(recipe) -> str:
    return json.dumps(to_document(recipe), indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    """Parse a spec file into a recipe; raises :class:`SpecError`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    loc = _Locator(text)
    if not isinstance(doc, dict):
        raise SpecError("spec file must hold a JSON object", 1, 1)
    extra = sorted(set(doc) - {"format_version", "conventions", "recipe"})
    if extra:
        raise SpecError(f"unknown top-level field {extra[0]!r}", *loc.find(extra[0]))
    if doc.get("format_version") != FORMAT_VERSION:
        raise SpecError(f"unsupported format_version {doc.get('format_version')!r} (expected {FORMAT_VERSION})",
                        *loc.find("format_version"))
    if doc.get("conventions") != CONVENTION.as_dict():
        raise SpecError("conventions block does not match this build's basis conventions",
                        *loc.find("conventions"))
    if "recipe" not in doc:
        raise SpecError("missing recipe", 1, 1)
    return recipe_from_dict(doc["recipe"], loc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
