"""Medium recipes and the constructions built on them.

Every recipe is an immutable dataclass whose :meth:`build` returns the
medium bidyadic ``M`` (two-forms to two-forms).  Grade-1 dyadics ``B``,
``P`` (and the affine map ``A``) live in ``E1F1``; ``Q`` lives in ``E1E1``.
"""

from __future__ import annotations

import random
from math import isqrt
from dataclasses import dataclass, fields
from fractions import Fraction

from . import linalg
from .dyadic import (
    ENI2T,
    I,
    I2T,
    Dyadic,
    E,
    F,
    Space,
    apply,
    compose,
    compound,
    double_wedge,
    dyad,
    hook_left,
    inverse,
    modified,
    trace,
    transpose,
    unit,
    unmodified,
)
from .errors import NoInverse, PreconditionError, SpaceMismatch
from .exterior import EPS_N, FORM, MultiForm, MultiVector, dim, pair, scalar, wedge


def _need_dyadic(value, left: Space, right: Space, name: str):
    if not isinstance(value, Dyadic) or (value.left, value.right) != (left, right):
        got = value.spaces() if isinstance(value, Dyadic) else type(value).__name__
        raise SpaceMismatch(f"{name} must be {left}{right}, got {got}")


def _need_element(value, cls, grade: int, name: str):
    if not isinstance(value, cls) or value.grade != grade:
        raise SpaceMismatch(f"{name} must be a grade-{grade} {cls.kind}")


def skewon_dyadic(b: Dyadic) -> Dyadic:
    """``(B∧∧I)^T``."""
    return transpose(double_wedge(b, I))


def square_t(p: Dyadic) -> Dyadic:
    """``P^(2)T``."""
    return transpose(compound(p, 2))


def antisymmetric_q(a: MultiVector) -> Dyadic:
    """``Q = A⌊I^T`` for a bivector ``A``."""
    return hook_left(a, unit(1, FORM))


@dataclass(frozen=True)
class Axion:
    alpha: object

    kind = "axion"

    def __post_init__(self):
        object.__setattr__(self, "alpha", scalar(self.alpha))

    def build(self) -> Dyadic:
        return I2T * self.alpha


@dataclass(frozen=True)
class SkewonAxion:
    B: Dyadic
    alpha: object

    kind = "skewon-axion"

    def __post_init__(self):
        _need_dyadic(self.B, E(1), F(1), "B")
        object.__setattr__(self, "alpha", scalar(self.alpha))

    def build(self) -> Dyadic:
        return skewon_dyadic(self.B) + I2T * self.alpha


@dataclass(frozen=True)
class PAxion:
    P: Dyadic
    scale: object
    alpha: object

    kind = "p-axion"

    def __post_init__(self):
        _need_dyadic(self.P, E(1), F(1), "P")
        object.__setattr__(self, "scale", scalar(self.scale))
        object.__setattr__(self, "alpha", scalar(self.alpha))

    @property
    def p_scalar(self):
        """``M² tr P^(4)``, i.e. ``M² det P``."""
        return scalar(self.scale ** 2 * compound(self.P, 4).matrix[0][0])

    def build(self) -> Dyadic:
        return square_t(self.P) * self.scale + I2T * self.alpha


@dataclass(frozen=True)
class Case2General:
    """``a B^(2)T + b (B∧∧I)^T + c I^(2)T``."""

    B: Dyadic
    a: object
    b: object
    c: object

    kind = "case2"

    def __post_init__(self):
        _need_dyadic(self.B, E(1), F(1), "B")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, scalar(getattr(self, name)))

    def build(self) -> Dyadic:
        return square_t(self.B) * self.a + skewon_dyadic(self.B) * self.b + I2T * self.c

    def as_p_axion(self) -> PAxion:
        """Equivalent P-axion recipe; defined for ``a != 0``."""
        if self.a == 0:
            raise PreconditionError("a = 0 gives a skewon-axion, not a P-axion")
        t = Fraction(self.b) / self.a
        return PAxion(self.B + I * t, self.a, self.c - Fraction(self.b) ** 2 / self.a)


@dataclass(frozen=True)
class Case1:
    """``Π C + Λ D + α I^(2)T``."""

    Pi: MultiForm
    Lam: MultiForm
    C: MultiVector
    D: MultiVector
    alpha: object

    kind = "case1"

    def __post_init__(self):
        _need_element(self.Pi, MultiForm, 2, "Pi")
        _need_element(self.Lam, MultiForm, 2, "Lam")
        _need_element(self.C, MultiVector, 2, "C")
        _need_element(self.D, MultiVector, 2, "D")
        object.__setattr__(self, "alpha", scalar(self.alpha))

    def build(self) -> Dyadic:
        return dyad(self.Pi, self.C) + dyad(self.Lam, self.D) + I2T * self.alpha


@dataclass(frozen=True)
class QMedium:
    """Medium with ``M_m = scale · Q^(2)``."""

    Q: Dyadic
    scale: object

    kind = "q-medium"

    def __post_init__(self):
        _need_dyadic(self.Q, E(1), E(1), "Q")
        object.__setattr__(self, "scale", scalar(self.scale))

    def modified(self) -> Dyadic:
        return compound(self.Q, 2) * self.scale

    def build(self) -> Dyadic:
        return unmodified(self.modified())


@dataclass(frozen=True)
class QAntisym:
    """Q-medium with antisymmetric ``Q = A⌊I^T``."""

    A: MultiVector
    scale: object

    kind = "q-antisym"

    def __post_init__(self):
        _need_element(self.A, MultiVector, 2, "A")
        object.__setattr__(self, "scale", scalar(self.scale))

    @property
    def Q(self) -> Dyadic:
        return antisymmetric_q(self.A)

    def expanded_modified(self) -> Dyadic:
        """``scale (A A - ½ (ε_N|A∧A) e_N⌊I^(2)T)``."""
        aa = pair(EPS_N, wedge(self.A, self.A))
        return (dyad(self.A, self.A) - ENI2T * Fraction(aa, 2)) * self.scale

    def build(self) -> Dyadic:
        return QMedium(self.Q, self.scale).build()


@dataclass(frozen=True)
class Raw:
    matrix: Dyadic

    kind = "raw"

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, Dyadic):
            m = Dyadic(F(2), E(2), m)
        _need_dyadic(m, F(2), E(2), "matrix")
        object.__setattr__(self, "matrix", m)

    def build(self) -> Dyadic:
        return self.matrix


RECIPES = {cls.kind: cls for cls in (Axion, SkewonAxion, PAxion, Case2General, Case1, QMedium, QAntisym, Raw)}


def build(recipe) -> Dyadic:
    return recipe.build()


def recipe_params(recipe) -> dict:
    return {f.name: getattr(recipe, f.name) for f in fields(recipe)}


@dataclass(frozen=True)
class HODecomposition:
    principal: Dyadic
    skewon: Dyadic
    axion_scalar: object

    @property
    def axion(self) -> Dyadic:
        return I2T * self.axion_scalar

    def total(self) -> Dyadic:
        return self.principal + self.skewon + self.axion


def decompose_hehl_obukhov(m: Dyadic) -> HODecomposition:
    """Principal, skewon and axion parts of a medium bidyadic."""
    a = scalar(Fraction(trace(m), 6))
    mm = modified(m)
    skew_m = (mm - transpose(mm)) / 2
    skewon = unmodified(skew_m)
    return HODecomposition(m - skewon - I2T * a, skewon, a)


@dataclass(frozen=True)
class Case1Inverse:
    C: MultiVector
    D: MultiVector
    alpha: object
    determinant: object


def invert_case1(Pi: MultiForm, Lam: MultiForm, C: MultiVector, D: MultiVector, alpha) -> Case1Inverse:
    """Inverse of ``Π C + Λ D + α I^(2)T`` in the same form, from the 2×2 solve."""
    alpha = scalar(alpha)
    if alpha == 0:
        raise PreconditionError("alpha must be nonzero")
    pc, lc, pd, ld = pair(Pi, C), pair(Lam, C), pair(Pi, D), pair(Lam, D)
    det = scalar((pc + alpha) * (ld + alpha) - lc * pd)
    if det == 0:
        raise NoInverse("case-1 bidyadic has no inverse (determinant 0)", determinant=0)
    inv_alpha = Fraction(1, 1) / alpha
    if D.is_zero():
        c_new = C * (Fraction(-1) / (alpha * (pc + alpha)))
        return Case1Inverse(c_new, MultiVector.zero(2), scalar(inv_alpha), det)
    if linalg.rank([list(Pi.coords), list(Lam.coords)]) < 2:
        raise PreconditionError("Pi and Lam must be linearly independent")
    k = Fraction(-1) / (alpha * det)
    c_new = (C * (ld + alpha) - D * lc) * k
    d_new = (D * (pc + alpha) - C * pd) * k
    return Case1Inverse(c_new, d_new, scalar(inv_alpha), det)


def invert_case1_recipe(recipe: Case1) -> Case1:
    inv = invert_case1(recipe.Pi, recipe.Lam, recipe.C, recipe.D, recipe.alpha)
    return Case1(recipe.Pi, recipe.Lam, inv.C, inv.D, inv.alpha)


def affine_transform(m: Dyadic, a: Dyadic) -> Dyadic:
    """``A^(-2)T | M | A^(2)T`` for a full-rank ``A`` in ``E1F1``."""
    _need_dyadic(a, E(1), F(1), "A")
    try:
        a_inv = inverse(a)
    except NoInverse as exc:
        raise PreconditionError(f"affine map must have full rank (rank {exc.rank})") from exc
    return compose(compose(square_t(a_inv), m), square_t(a))


def affine_transform_recipe(recipe, a: Dyadic):
    """Transformed parameters for the families closed under affine maps."""
    a_inv = inverse(a)
    if isinstance(recipe, Case1):
        fwd, back = compound(a, 2), square_t(a_inv)
        return Case1(apply(back, recipe.Pi), apply(back, recipe.Lam),
                     apply(fwd, recipe.C), apply(fwd, recipe.D), recipe.alpha)
    conj = lambda b: compose(compose(a, b), a_inv)  # noqa: E731
    if isinstance(recipe, Case2General):
        return Case2General(conj(recipe.B), recipe.a, recipe.b, recipe.c)
    if isinstance(recipe, SkewonAxion):
        return SkewonAxion(conj(recipe.B), recipe.alpha)
    if isinstance(recipe, PAxion):
        return PAxion(conj(recipe.P), recipe.scale, recipe.alpha)
    if isinstance(recipe, Axion):
        return recipe
    raise PreconditionError(f"no parameter map for {recipe.kind}")


# ---------------------------------------------------------------- generators

def _ints(rng: random.Random, n: int, size: int, nonzero=False):
    out = []
    while len(out) < n:
        v = rng.randint(-size, size)
        if v or not nonzero:
            out.append(v)
    return out


def random_dyadic(rng: random.Random, left: Space, right: Space, size: int = 3, full_rank=False) -> Dyadic:
    while True:
        d = Dyadic(left, right, [_ints(rng, right.dim, size) for _ in range(left.dim)])
        if not full_rank or linalg.det(d.matrix) != 0:
            return d


def random_element(rng: random.Random, cls, grade: int, size: int = 3):
    return cls(grade, _ints(rng, dim(grade), size))


def random_unimodular(rng: random.Random, steps: int = 6) -> list[list]:
    u = linalg.identity(4)
    for _ in range(steps):
        i, j = rng.sample(range(4), 2)
        k = rng.choice((-2, -1, 1, 2))
        u[i] = [a + k * b for a, b in zip(u[i], u[j])]
    return u


def random_square_det_p(rng: random.Random, size: int = 2) -> Dyadic:
    """Full-rank P with ``det P`` a positive perfect square (``A U A^T``)."""
    while True:
        a = random_dyadic(rng, E(1), F(1), size, full_rank=True)
        p = linalg.matmul(linalg.matmul(a.matrix, random_unimodular(rng)), linalg.transpose(a.matrix))
        if linalg.det(p) > 0:
            return Dyadic(E(1), F(1), p)


def _isqrt_fraction(x):
    x = Fraction(x)
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    return scalar(Fraction(n, d)) if n * n == x.numerator and d * d == x.denominator else None


def special_alpha(p: Dyadic, scale, sign: int = 1):
    """Rational ``α = ±sqrt(M² det P)`` or None when irrational."""
    root = _isqrt_fraction(Fraction(scalar(scale)) ** 2 * linalg.det(p.matrix))
    return None if root is None else scalar(sign * root)


def random_recipe(kind: str, rng: random.Random, size: int = 3):
    """Seeded random instance of a recipe family.

    ``skewon-axion`` always has a nonzero axion part.  Extra kinds beyond the
    recipe tags: ``skewon`` (pure skewon, traceless ``B``, no axion),
    ``p-medium``, ``special-p-axion`` and ``general-p-axion``.
    """
    nz = lambda: _ints(rng, 1, size, nonzero=True)[0]  # noqa: E731
    if kind == "axion":
        return Axion(nz())
    if kind == "skewon-axion":
        while True:
            b, alpha = random_dyadic(rng, E(1), F(1), size), nz()
            if alpha + Fraction(trace(b), 2) != 0:  # otherwise it is a pure skewon
                return SkewonAxion(b, alpha)
    if kind == "skewon":
        b = random_dyadic(rng, E(1), F(1), size)
        t = Fraction(trace(b), 4)
        return SkewonAxion(b - I * t, 0)
    if kind in ("p-axion", "general-p-axion"):
        while True:
            r = PAxion(random_dyadic(rng, E(1), F(1), size, full_rank=True), nz(), nz())
            if r.p_scalar != r.alpha ** 2:
                return r
    if kind == "p-medium":
        return PAxion(random_dyadic(rng, E(1), F(1), size, full_rank=True), nz(), 0)
    if kind == "special-p-axion":
        p = random_square_det_p(rng, max(1, size - 1))
        scale = nz()
        return PAxion(p, scale, special_alpha(p, scale, rng.choice((1, -1))))
    if kind == "case2":
        return Case2General(random_dyadic(rng, E(1), F(1), size), nz(), _ints(rng, 1, size)[0], _ints(rng, 1, size)[0])
    if kind == "case1":
        return Case1(random_element(rng, MultiForm, 2, size), random_element(rng, MultiForm, 2, size),
                     random_element(rng, MultiVector, 2, size), random_element(rng, MultiVector, 2, size),
                     nz())
    if kind == "q-antisym":
        while True:
            a = random_element(rng, MultiVector, 2, size)
            if pair(EPS_N, wedge(a, a)) != 0:
                return QAntisym(a, nz())
    if kind == "q-medium":
        while True:
            q = random_dyadic(rng, E(1), E(1), size)
            sym = [[q.matrix[i][j] + q.matrix[j][i] for j in range(4)] for i in range(4)]
            if linalg.det(q.matrix) != 0 and linalg.det(sym) != 0:
                return QMedium(q, nz())
    if kind == "raw":
        return Raw(random_dyadic(rng, F(2), E(2), size))
    raise ValueError(f"unknown recipe kind {kind!r}")
