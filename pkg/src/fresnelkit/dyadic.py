"""Dyadics: exact linear maps between graded spaces.

A dyadic is written as a sum of products ``x y`` of a left factor ``x`` and
a right factor ``y``; ``Space`` records which graded space each factor
lives in, so a medium bidyadic is ``Dyadic(F2, E2, ...)``.  The dyadic
consumes elements of the space dual to its right factor and produces
elements of its left-factor space, which is why the matrix product is the
``|`` composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from . import linalg
from .errors import GradeError, PreconditionError, SpaceMismatch
from .exterior import (
    BASIS,
    DIM,
    E_N,
    EPS_N,
    FORM,
    HOOK_TABLES,
    CONTRACT_TABLES,
    VECTOR,
    WEDGE_TABLES,
    MultiForm,
    _Graded,
    dim,
    dual_kind,
    element,
    scalar,
)


class Space(NamedTuple):
    kind: str
    grade: int

    @property
    def dim(self) -> int:
        return dim(self.grade)

    def dual(self) -> "Space":
        return Space(dual_kind(self.kind), self.grade)

    def __str__(self):
        return ("E" if self.kind == VECTOR else "F") + str(self.grade)


def E(k: int) -> Space:
    return Space(VECTOR, k)


def F(k: int) -> Space:
    return Space(FORM, k)


def _freeze(matrix) -> tuple:
    return tuple(tuple(scalar(x) for x in row) for row in matrix)


@dataclass(frozen=True)
class Dyadic:
    left: Space
    right: Space
    matrix: tuple

    def __post_init__(self):
        m = _freeze(self.matrix)
        if len(m) != self.left.dim or any(len(r) != self.right.dim for r in m):
            raise SpaceMismatch(f"matrix shape does not fit {self.left}{self.right}")
        object.__setattr__(self, "matrix", m)

    @property
    def out_space(self) -> Space:
        return self.left

    @property
    def in_space(self) -> Space:
        return self.right.dual()

    @property
    def T(self) -> "Dyadic":
        return transpose(self)

    @property
    def rows(self) -> list[list]:
        return [list(r) for r in self.matrix]

    @classmethod
    def zero(cls, left: Space, right: Space) -> "Dyadic":
        return cls(left, right, linalg.zeros(left.dim, right.dim))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def entries(self):
        return [x for r in self.matrix for x in r]

    def _like(self, other):
        if not isinstance(other, Dyadic) or (self.left, self.right) != (other.left, other.right):
            raise SpaceMismatch(f"cannot add {self.spaces()} and {_spaces(other)}")

    def spaces(self) -> str:
        return f"{self.left}{self.right}"

    def __add__(self, other):
        self._like(other)
        return Dyadic(self.left, self.right,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other):
        self._like(other)
        return Dyadic(self.left, self.right,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __neg__(self):
        return Dyadic(self.left, self.right, [[-a for a in r] for r in self.matrix])

    def __mul__(self, k):
        if isinstance(k, (Dyadic, _Graded)):
            return NotImplemented
        k = scalar(k)
        return Dyadic(self.left, self.right, [[k * a for a in r] for r in self.matrix])

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / Fraction(scalar(k)))

    def __matmul__(self, other):
        if isinstance(other, Dyadic):
            return compose(self, other)
        return apply(self, other)

    def __str__(self):
        body = "\n".join("  [" + ", ".join(str(x) for x in r) + "]" for r in self.matrix)
        return f"{self.spaces()}:\n{body}"


def _spaces(x) -> str:
    return x.spaces() if isinstance(x, Dyadic) else type(x).__name__


def dyad(x: _Graded, y: _Graded) -> Dyadic:
    """The product ``x y`` of two graded elements."""
    return Dyadic(Space(x.kind, x.grade), Space(y.kind, y.grade),
                  [[a * b for b in y.coords] for a in x.coords])


def compose(f: Dyadic, g: Dyadic) -> Dyadic:
    """``f | g``."""
    if f.right.dual() != g.left:
        raise SpaceMismatch(f"cannot compose {f.spaces()} | {g.spaces()}")
    return Dyadic(f.left, g.right, linalg.matmul(f.matrix, g.matrix))


def apply(f: Dyadic, x: _Graded) -> _Graded:
    """``f | x``."""
    if not isinstance(x, _Graded) or Space(x.kind, x.grade) != f.right.dual():
        raise SpaceMismatch(f"{f.spaces()} cannot act on {getattr(x, 'describe', lambda: x)()}")
    return element(f.left.kind, f.left.grade, linalg.matvec(f.matrix, x.coords))


def apply_left(x: _Graded, f: Dyadic) -> _Graded:
    """``x | f``."""
    return apply(transpose(f), x)


def transpose(f: Dyadic) -> Dyadic:
    return Dyadic(f.right, f.left, linalg.transpose(f.matrix))


def map_left(f: Dyadic, matrix, space: Space) -> Dyadic:
    """Apply a linear map (given by its matrix) to every left factor."""
    return Dyadic(space, f.right, linalg.matmul(matrix, f.matrix))


def map_right(f: Dyadic, matrix, space: Space) -> Dyadic:
    """Apply a linear map to every right factor."""
    return Dyadic(f.left, space, linalg.matmul(f.matrix, linalg.transpose(matrix)))


def double_wedge(f: Dyadic, g: Dyadic) -> Dyadic:
    """``f ∧∧ g`` with ``(a α)∧∧(b β) = (a∧b)(α∧β)``; no factorial division."""
    if f.left.kind != g.left.kind or f.right.kind != g.right.kind:
        raise SpaceMismatch(f"double wedge of {f.spaces()} and {g.spaces()}")
    kl, kr = f.left.grade + g.left.grade, f.right.grade + g.right.grade
    if kl > DIM or kr > DIM:
        raise GradeError(f"double wedge of {f.spaces()} and {g.spaces()} exceeds grade {DIM}")
    out = linalg.zeros(dim(kl), dim(kr))
    fm, gm = f.matrix, g.matrix
    rtab = WEDGE_TABLES[f.right.grade, g.right.grade]
    for i, k, o1, s1 in WEDGE_TABLES[f.left.grade, g.left.grade]:
        fi, gk, orow = fm[i], gm[k], out[o1]
        for j, l, o2, s2 in rtab:
            a, b = fi[j], gk[l]
            if a and b:
                orow[o2] += s1 * s2 * a * b
    return Dyadic(Space(f.left.kind, kl), Space(f.right.kind, kr), out)


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for c in range(n):
        if m[0][c]:
            sub = [row[:c] + row[c + 1:] for row in m[1:]]
            total += (-1) ** c * m[0][c] * _det(sub)
    return total


def compound(f: Dyadic, p: int) -> Dyadic:
    """``f^(p)``: the p-th exterior power, entries are p×p minors."""
    if f.left.grade != 1 or f.right.grade != 1:
        raise SpaceMismatch("compound needs a grade-1 dyadic")
    if not 1 <= p <= DIM:
        raise PreconditionError(f"compound order {p} outside 1..{DIM}")
    m = f.matrix
    out = [[_det([[m[i][j] for j in J] for i in I]) for J in BASIS[p]] for I in BASIS[p]]
    return Dyadic(Space(f.left.kind, p), Space(f.right.kind, p), out)


def compound_by_wedge(f: Dyadic, p: int) -> Dyadic:
    """``(1/p!) f∧∧…∧∧f``; independent route to :func:`compound`."""
    acc = f
    for _ in range(p - 1):
        acc = double_wedge(acc, f)
    return acc / factorial(p)


def _hook_matrix(big: Space, small: _Graded, tables) -> list[list]:
    # matrix of X -> X ⌊ small (or ⌋), X ranging over `big`
    k, l = big.grade, small.grade
    if l > k:
        raise GradeError(f"cannot contract grade {l} out of grade {k}")
    out = linalg.zeros(dim(k - l), dim(k))
    sc = small.coords
    for b, s_, o, s in tables[k, l]:
        if sc[s_]:
            out[o][b] += s * sc[s_]
    return out


def hook_right(f: Dyadic, alpha: _Graded) -> Dyadic:
    """``f ⌊ alpha``: hook ``alpha`` into every right factor."""
    if f.right.kind == alpha.kind:
        raise SpaceMismatch("hook needs opposite kinds")
    mat = _hook_matrix(f.right, alpha, HOOK_TABLES)
    return map_right(f, mat, Space(f.right.kind, f.right.grade - alpha.grade))


def hook_left(x: _Graded, f: Dyadic) -> Dyadic:
    """``x ⌊ f``: ``x ⌊ (left factor)`` for every term, e.g. ``e_N⌊M``."""
    if f.left.kind == x.kind:
        raise SpaceMismatch("hook needs opposite kinds")
    k = f.left.grade
    if k > x.grade:
        raise GradeError(f"cannot contract grade {k} out of grade {x.grade}")
    out = linalg.zeros(dim(x.grade - k), dim(k))
    xc = x.coords
    for b, s_, o, s in HOOK_TABLES[x.grade, k]:
        if xc[b]:
            out[o][s_] += s * xc[b]
    return map_left(f, out, Space(x.kind, x.grade - k))


def contract_left(alpha: _Graded, f: Dyadic) -> Dyadic:
    """``alpha ⌋ f``: contract ``alpha`` into every left factor."""
    if f.left.kind == alpha.kind:
        raise SpaceMismatch("contraction needs opposite kinds")
    mat = _hook_matrix(f.left, alpha, CONTRACT_TABLES)
    return map_left(f, mat, Space(f.left.kind, f.left.grade - alpha.grade))


def contract_right(alpha: _Graded, f: Dyadic) -> Dyadic:
    """``alpha ⌋`` applied to every right factor."""
    if f.right.kind == alpha.kind:
        raise SpaceMismatch("contraction needs opposite kinds")
    mat = _hook_matrix(f.right, alpha, CONTRACT_TABLES)
    return map_right(f, mat, Space(f.right.kind, f.right.grade - alpha.grade))


def wedge_left(alpha: _Graded, f: Dyadic) -> Dyadic:
    """``alpha ∧ f``: wedge ``alpha`` onto every left factor from the left."""
    if f.left.kind != alpha.kind:
        raise SpaceMismatch("wedge needs like kinds")
    k, l = alpha.grade, f.left.grade
    if k + l > DIM:
        raise GradeError(f"wedge of grades {k} and {l} exceeds {DIM}")
    out = linalg.zeros(dim(k + l), dim(l))
    ac = alpha.coords
    for i, j, o, s in WEDGE_TABLES[k, l]:
        if ac[i]:
            out[o][j] += s * ac[i]
    return map_left(f, out, Space(f.left.kind, k + l))


def double_contract(f: Dyadic, nu: MultiForm) -> Dyadic:
    """``f ⌊⌊ ν ν`` for a bivector-bivector dyadic, e.g. ``M_m⌊⌊νν``."""
    if f.left.kind != VECTOR or f.right.kind != VECTOR:
        raise SpaceMismatch(f"double contraction needs a multivector dyadic, got {f.spaces()}")
    if not isinstance(nu, MultiForm) or nu.grade != 1:
        raise SpaceMismatch("double contraction needs a one-form")
    k = _hook_matrix(f.left, nu, HOOK_TABLES)
    kr = k if f.right == f.left else _hook_matrix(f.right, nu, HOOK_TABLES)
    return Dyadic(Space(VECTOR, f.left.grade - 1), Space(VECTOR, f.right.grade - 1),
                  linalg.matmul(linalg.matmul(k, f.matrix), linalg.transpose(kr)))


def double_contract_left(nu: MultiForm, f: Dyadic) -> Dyadic:
    """``ν ν ⌋⌋ f``: contract ``ν`` into both factors of a multivector dyadic."""
    if f.left.kind != VECTOR or f.right.kind != VECTOR:
        raise SpaceMismatch(f"double contraction needs a multivector dyadic, got {f.spaces()}")
    return contract_right(nu, contract_left(nu, f))


def double_pair(f: Dyadic):
    """``ε_N ε_N || f`` for a quadrivector dyadic (``e_N e_N || f`` for quadriforms)."""
    if f.left.grade != DIM or f.right.grade != DIM or f.left.kind != f.right.kind:
        raise SpaceMismatch(f"double pairing needs a grade-4 dyadic, got {f.spaces()}")
    # pair(ε_N, e_N) = 1, so the scalar is the single entry
    return f.matrix[0][0]


def inverse(f: Dyadic) -> Dyadic:
    if f.left.dim != f.right.dim:
        raise PreconditionError("inverse of a non-square dyadic")
    return Dyadic(f.right.dual(), f.left.dual(), linalg.inverse(f.matrix))


def rank(f: Dyadic) -> int:
    return linalg.rank(f.matrix)


def trace(f: Dyadic):
    """Trace of a map from a space to itself."""
    if f.left != f.right.dual():
        raise SpaceMismatch(f"trace needs a map of a space into itself, got {f.spaces()}")
    return scalar(sum(f.matrix[i][i] for i in range(f.left.dim)))


def unit(p: int = 1, kind: str = VECTOR) -> Dyadic:
    """``I^(p)`` in ``E_p F_p`` (``kind=VECTOR``) or ``I^(p)T`` in ``F_p E_p``."""
    return Dyadic(Space(kind, p), Space(dual_kind(kind), p), linalg.identity(dim(p)))


I = unit(1)
I2 = unit(2)
I2T = unit(2, FORM)
ENI2T = hook_left(E_N, I2T)          # e_N⌊I^(2)T, bivector-bivector
VENI2 = hook_left(EPS_N, I2)         # ε_N⌊I^(2), two-form-two-form

E_TO_F2 = [list(r) for r in VENI2.matrix]    # matrix of A -> ε_N⌊A on bivectors
F2_TO_E = [list(r) for r in ENI2T.matrix]    # matrix of Φ -> e_N⌊Φ on two-forms


def dot(a: Dyadic, b: Dyadic) -> Dyadic:
    """``a · b = a | (ε_N⌊I^(2)) | b`` for bivector-bivector dyadics."""
    if a.right != E(2) or b.left != E(2):
        raise SpaceMismatch(f"dot product needs bivector slots, got {a.spaces()} · {b.spaces()}")
    return compose(compose(a, VENI2), b)


def dot_elements(x: _Graded, y: _Graded):
    """Natural dot product of two bivectors or two two-forms."""
    if x.grade != 2 or y.grade != 2 or x.kind != y.kind:
        raise SpaceMismatch("dot product needs two bivectors or two two-forms")
    middle = VENI2 if x.kind == VECTOR else ENI2T
    return scalar(sum(a * m * c for a, row in zip(x.coords, middle.matrix) for m, c in zip(row, y.coords) if a and m and c))


# Complement bookkeeping between medium bidyadics (two-form -> two-form) and
# modified bidyadics (two-form -> bivector).  Every conversion goes through
# these three functions.

_F2_ROUNDTRIP = 1  # ε_N⌊(e_N⌊Φ) = +Φ for two-forms; checked in the test suite


def modified(m: Dyadic) -> Dyadic:
    """``M_m = e_N⌊M``."""
    if m.left != F(2) or m.right != E(2):
        raise SpaceMismatch(f"medium bidyadic must be F2E2, got {m.spaces()}")
    return hook_left(E_N, m)


def unmodified(mm: Dyadic) -> Dyadic:
    """Inverse of :func:`modified`: ``M = ε_N⌊M_m`` (times the grade-2 roundtrip sign)."""
    if mm.left != E(2) or mm.right != E(2):
        raise SpaceMismatch(f"modified bidyadic must be E2E2, got {mm.spaces()}")
    return hook_left(EPS_N, mm) * _F2_ROUNDTRIP


def modified_inverse(mm: Dyadic) -> Dyadic:
    """``N_m = e_N e_N⌊⌊M_m^{-1}``, the modified form of ``N = M^{-1}``."""
    inv = inverse(mm)  # F2F2
    return transpose(hook_left(E_N, transpose(hook_left(E_N, inv))))
