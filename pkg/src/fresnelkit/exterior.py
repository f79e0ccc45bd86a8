"""Exact exterior algebra over a four-dimensional vector space and its dual.

Multivectors and multiforms of grade 0..4 are stored as tuples of exact
rationals in the lexicographic basis of sorted index tuples, e.g. grade 2
uses ``(12, 13, 14, 23, 24, 34)``.  Coordinates are ``int`` or
``fractions.Fraction``; floats are rejected.

Contraction rules
-----------------
Two families of contraction are defined, both by adjointness with the
determinant pairing ``<eps_I, e_J> = delta_IJ``:

* ``x ⌋ Y`` removes ``x`` from the *right* end of ``Y``::

      <x ⌋ Y, Z> = <Y, Z ∧ x>

* ``Y ⌊ x`` removes ``x`` from the *left* end of ``Y``::

      <Y ⌊ x, Z> = <Y, x ∧ Z>

The first rule is forced by the plane-wave identity
``a⌋(ν∧Φ) = ν∧(a⌋Φ) + (a|ν)Φ`` for a vector ``a``, a one-form ``ν`` and a
two-form ``Φ``; it gives ``e1⌋ε12 = -ε2``.  The second gives
``e_N⌊ε12 = e34`` and ``X⌊(α∧β) = (X⌊α)⌊β``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from numbers import Rational
from typing import ClassVar, Iterable, Sequence

from .errors import GradeError, SpaceMismatch

DIM = 4
VECTOR = "vector"
FORM = "form"

BASIS: dict[int, tuple[tuple[int, ...], ...]] = {
    k: tuple(combinations(range(DIM), k)) for k in range(DIM + 1)
}
INDEX: dict[int, dict[tuple[int, ...], int]] = {
    k: {idx: n for n, idx in enumerate(BASIS[k])} for k in BASIS
}


def dim(grade: int) -> int:
    return comb(DIM, grade)


def label(indices: Sequence[int]) -> str:
    """1-based label of a basis element, ``(0, 1) -> '12'``."""
    return "".join(str(i + 1) for i in indices) or "1"


def scalar(x) -> int | Fraction:
    """Normalize an exact rational; ``'p/q'`` strings are accepted."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x.strip())
    if isinstance(x, Rational):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"exact rational required, got {type(x).__name__}")


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 on repeated entries."""
    if len(set(seq)) != len(seq):
        return 0
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def _wedge_table(k: int, l: int):
    rows = []
    for i, I in enumerate(BASIS[k]):
        for j, J in enumerate(BASIS[l]):
            s = permutation_sign(I + J)
            if s:
                rows.append((i, j, INDEX[k + l][tuple(sorted(I + J))], s))
    return tuple(rows)


def _interior_table(k: int, l: int, small_first: bool):
    # entries (big, small, out, sign): big grade k, small grade l, out grade k - l
    rows = []
    for o, K in enumerate(BASIS[k - l]):
        for j, J in enumerate(BASIS[l]):
            seq = J + K if small_first else K + J
            s = permutation_sign(seq)
            if s:
                rows.append((INDEX[k][tuple(sorted(seq))], j, o, s))
    return tuple(rows)


WEDGE_TABLES = {(k, l): _wedge_table(k, l) for k in range(DIM + 1) for l in range(DIM + 1 - k)}
# ⌊ family (small element taken off the left end) and ⌋ family (right end)
HOOK_TABLES = {(k, l): _interior_table(k, l, True) for k in range(DIM + 1) for l in range(k + 1)}
CONTRACT_TABLES = {(k, l): _interior_table(k, l, False) for k in range(DIM + 1) for l in range(k + 1)}


@dataclass(frozen=True)
class _Graded:
    grade: int
    coords: tuple

    kind: ClassVar[str] = ""

    def __post_init__(self):
        if not 0 <= self.grade <= DIM:
            raise GradeError(f"grade {self.grade} outside 0..{DIM}")
        coords = tuple(scalar(c) for c in self.coords)
        if len(coords) != dim(self.grade):
            raise ValueError(f"grade {self.grade} needs {dim(self.grade)} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, grade: int):
        return cls(grade, (0,) * dim(grade))

    @classmethod
    def basis(cls, *indices: int):
        """Basis element from 1-based indices in any order, with its sign."""
        idx = tuple(i - 1 for i in indices)
        if any(not 0 <= i < DIM for i in idx):
            raise ValueError(f"indices must lie in 1..{DIM}")
        s = permutation_sign(idx)
        coords = [0] * dim(len(idx))
        if s:
            coords[INDEX[len(idx)][tuple(sorted(idx))]] = s
        return cls(len(idx), tuple(coords))

    @classmethod
    def of(cls, *coords):
        """Element whose grade is inferred from the number of coordinates."""
        by_len = {dim(k): k for k in (0, 1, 2, 4)}
        if len(coords) not in by_len:
            raise ValueError("ambiguous length; use the constructor with an explicit grade")
        return cls(by_len[len(coords)], coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other):
        if type(other) is not type(self) or other.grade != self.grade:
            raise SpaceMismatch(f"cannot combine {self.describe()} with {_describe(other)}")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.grade, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.grade, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(self.grade, tuple(-a for a in self.coords))

    def __mul__(self, k):
        if isinstance(k, _Graded):
            return NotImplemented
        k = scalar(k)
        return type(self)(self.grade, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def describe(self) -> str:
        return f"grade-{self.grade} {self.kind}"

    def __str__(self):
        sym = "e" if self.kind == VECTOR else "ε"
        terms = [f"{c}*{sym}{label(I)}" for c, I in zip(self.coords, BASIS[self.grade]) if c]
        return " + ".join(terms) or "0"


class MultiVector(_Graded):
    kind = VECTOR


class MultiForm(_Graded):
    kind = FORM


def _describe(x) -> str:
    return x.describe() if isinstance(x, _Graded) else type(x).__name__


def element(kind: str, grade: int, coords: Iterable) -> _Graded:
    cls = MultiVector if kind == VECTOR else MultiForm
    return cls(grade, tuple(coords))


def dual_kind(kind: str) -> str:
    return FORM if kind == VECTOR else VECTOR


def one_form(*coords) -> MultiForm:
    return MultiForm(1, coords)


def vector(*coords) -> MultiVector:
    return MultiVector(1, coords)


E_N = MultiVector.basis(1, 2, 3, 4)
EPS_N = MultiForm.basis(1, 2, 3, 4)


def wedge(x: _Graded, y: _Graded) -> _Graded:
    """Exterior product of two multivectors or two multiforms."""
    if type(x) is not type(y):
        raise SpaceMismatch(f"wedge needs like kinds, got {_describe(x)} and {_describe(y)}")
    k, l = x.grade, y.grade
    if k + l > DIM:
        raise GradeError(f"wedge of grades {k} and {l} exceeds {DIM}")
    out = [0] * dim(k + l)
    xc, yc = x.coords, y.coords
    for i, j, o, s in WEDGE_TABLES[k, l]:
        if xc[i] and yc[j]:
            out[o] += s * xc[i] * yc[j]
    return type(x)(k + l, tuple(out))


def pair(omega: MultiForm, X: MultiVector):
    """Duality pairing ``omega | X`` of equal grades (determinant convention)."""
    if not isinstance(omega, MultiForm) or not isinstance(X, MultiVector):
        if isinstance(omega, MultiVector) and isinstance(X, MultiForm):
            omega, X = X, omega
        else:
            raise SpaceMismatch("pair needs one multiform and one multivector")
    if omega.grade != X.grade:
        raise GradeError(f"pairing grades {omega.grade} and {X.grade}")
    return scalar(sum(a * b for a, b in zip(omega.coords, X.coords)))


def _interior(table_family, big: _Graded, small: _Graded) -> _Graded:
    if type(big) is type(small):
        raise SpaceMismatch("contraction needs a multivector and a multiform")
    k, l = big.grade, small.grade
    if l > k:
        raise GradeError(f"cannot contract grade {l} out of grade {k}")
    out = [0] * dim(k - l)
    bc, sc = big.coords, small.coords
    for b, s_, o, s in table_family[k, l]:
        if bc[b] and sc[s_]:
            out[o] += s * bc[b] * sc[s_]
    return type(big)(k - l, tuple(out))


def contract_vector_form(a: MultiVector, omega: MultiForm) -> MultiForm:
    """``a ⌋ omega``: contract a vector into a multiform (right-end rule)."""
    if not isinstance(a, MultiVector) or a.grade != 1 or not isinstance(omega, MultiForm):
        raise SpaceMismatch("contract_vector_form needs a vector and a multiform")
    if omega.grade < 1:
        raise GradeError("cannot contract a vector into a scalar")
    return _interior(CONTRACT_TABLES, omega, a)


def form_contract(alpha: MultiForm, X: MultiVector) -> MultiVector:
    """``alpha ⌋ X``: contract a multiform into a multivector (right-end rule)."""
    if not isinstance(alpha, MultiForm) or not isinstance(X, MultiVector):
        raise SpaceMismatch("form_contract needs a multiform and a multivector")
    return _interior(CONTRACT_TABLES, X, alpha)


def hook(X: MultiVector, alpha: MultiForm) -> MultiVector:
    """``X ⌊ alpha``: ``<X⌊alpha, beta> = <X, alpha ∧ beta>``."""
    if not isinstance(X, MultiVector) or not isinstance(alpha, MultiForm):
        raise SpaceMismatch("hook needs a multivector and a multiform")
    return _interior(HOOK_TABLES, X, alpha)


def form_hook(omega: MultiForm, X: MultiVector) -> MultiForm:
    """``omega ⌊ X``: ``<omega⌊X, Y> = <omega, X ∧ Y>``."""
    if not isinstance(omega, MultiForm) or not isinstance(X, MultiVector):
        raise SpaceMismatch("form_hook needs a multiform and a multivector")
    return _interior(HOOK_TABLES, omega, X)


def complement(x: _Graded) -> _Graded:
    """``e_N⌊x`` for a multiform, ``ε_N⌊x`` for a multivector."""
    if isinstance(x, MultiForm):
        return hook(E_N, x)
    return form_hook(EPS_N, x)


def complement_roundtrip(x: MultiForm) -> MultiForm:
    """``ε_N⌊(e_N⌊x)``; equals ``ROUNDTRIP_SIGN[grade] * x``."""
    if not isinstance(x, MultiForm):
        raise SpaceMismatch("complement_roundtrip acts on multiforms")
    return form_hook(EPS_N, hook(E_N, x))


def _roundtrip_sign(k: int) -> int:
    x = MultiForm(k, (1,) + (0,) * (dim(k) - 1))
    return complement_roundtrip(x).coords[0]


ROUNDTRIP_SIGN = {k: _roundtrip_sign(k) for k in range(DIM + 1)}
CONTRACTION_SIGN = contract_vector_form(vector(1, 0, 0, 0), MultiForm.basis(1, 2)).coords[INDEX[1][(1,)]]


def map_matrix(fn, kind: str, grade: int) -> list[list]:
    """Matrix (rows = output coords) of a linear map, probed on basis elements."""
    cls = MultiVector if kind == VECTOR else MultiForm
    cols = []
    for n in range(dim(grade)):
        e = [0] * dim(grade)
        e[n] = 1
        cols.append(fn(cls(grade, tuple(e))).coords)
    return [list(row) for row in zip(*cols)]


@dataclass(frozen=True)
class BasisConvention:
    """The frozen choices every serialized file carries."""

    bivector_order: tuple[str, ...]
    orientation: str
    pairing: str
    contraction_sign: int
    roundtrip_signs: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "bivector_order": list(self.bivector_order),
            "orientation": self.orientation,
            "pairing": self.pairing,
            "contraction_sign": self.contraction_sign,
            "roundtrip_signs": list(self.roundtrip_signs),
        }


CONVENTION = BasisConvention(
    bivector_order=tuple(label(I) for I in BASIS[2]),
    orientation="e1234",
    pairing="det",
    contraction_sign=CONTRACTION_SIGN,
    roundtrip_signs=tuple(ROUNDTRIP_SIGN[k] for k in range(DIM + 1)),
)
