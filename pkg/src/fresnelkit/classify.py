"""Recognition of medium classes from a raw bidyadic.

Everything here is decided with exact arithmetic.  Statements "for all
one-forms ν" are certified by evaluating at the lattice points
``{β : |β| = d}``, which are unisolvent for homogeneous polynomials of
degree ``d`` in four variables: a matrix-valued form of degree ``d`` that
vanishes there vanishes identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import lcm

from . import linalg, poly
from .dispersion import is_dispersion_free
from .dyadic import (
    ENI2T,
    I2T,
    Dyadic,
    E,
    F,
    E_TO_F2,
    compound,
    dot,
    double_contract,
    inverse,
    modified,
    trace,
    transpose,
)
from .errors import ConventionError, NoInverse, NotApplicable, PreconditionError, SpaceMismatch
from .exterior import DIM, MultiForm, MultiVector, one_form, scalar
from .media import Axion, Case1

# tags
AXION = "Axion"
SKEWON = "Skewon"
SKEWON_AXION = "SkewonAxion"
P_MEDIUM = "PMedium"
SPECIAL_P_AXION = "SpecialPAxion"
GENERAL_P_AXION = "GeneralPAxion"
CASE1 = "Case1"
UNRECOGNIZED = "DispersionFreeUnrecognized"
NOT_DISPERSION_FREE = "NotDispersionFree"

P_AXION_FAMILY = (P_MEDIUM, SPECIAL_P_AXION, GENERAL_P_AXION)
CASE2_TAGS = (AXION, SKEWON, SKEWON_AXION) + P_AXION_FAMILY

TABLE_ROWS = {
    AXION: "axion",
    SKEWON: "skewon",
    P_MEDIUM: "P-medium",
    SKEWON_AXION: "skewon-axion",
    SPECIAL_P_AXION: "special P-axion",
    GENERAL_P_AXION: "general P-axion",
}

# (M class, N class) pairs for invertible case-2 media
TABLE_1 = (
    ("axion", "axion"),
    ("skewon", "skewon"),
    ("P-medium", "P-medium"),
    ("skewon-axion", "special P-axion"),
    ("special P-axion", "skewon-axion"),
    ("general P-axion", "general P-axion"),
)

# discriminator branches
Q_SOLUTION = "Q-solution"
P_SOLUTION = "P-solution"
Q_ANTISYMMETRIC = "Q-solution with antisymmetric dyadic Q"
P_MULTIPLE_OF_I = "P-solution with P = pI"

S = ENI2T  # e_N⌊I^(2)T; symmetric with S|S = 1 as a matrix


def lattice(degree: int) -> tuple[tuple[int, ...], ...]:
    """Multiplicity vectors ``β`` with ``|β| = degree``, as one-form coordinates."""
    return tuple(tuple(key.count(i) for i in range(DIM))
                 for key in combinations_with_replacement(range(DIM), degree))


DEFAULT_PROBES = tuple(one_form(*p) for p in lattice(1)) + tuple(
    one_form(*[int(k in (i, j)) for k in range(DIM)]) for i, j in combinations(range(DIM), 2))


def _check_modified(mm: Dyadic):
    if not isinstance(mm, Dyadic) or mm.left != E(2) or mm.right != E(2):
        raise SpaceMismatch(f"modified bidyadic must be E2E2, got {getattr(mm, 'spaces', lambda: mm)()}")


def _check_medium(m: Dyadic):
    if not isinstance(m, Dyadic) or m.left != F(2) or m.right != E(2):
        raise SpaceMismatch(f"medium bidyadic must be F2E2, got {getattr(m, 'spaces', lambda: m)()}")


def multiple_of_s(d: Dyadic):
    """``c`` with ``d == c · e_N⌊I^(2)T``, or None."""
    c = Fraction(d.matrix[0][5]) / S.matrix[0][5]
    return scalar(c) if d == S * c else None


# ------------------------------------------------------------ quadratic laws

def check_p_quadratic(mm: Dyadic) -> tuple[bool, object]:
    """Does ``M_m^T · M_m = P e_N⌊I^(2)T`` hold?  Returns ``(holds, P)``.

    ``P`` is read off the single entry that can carry it; it is meaningful
    only when ``holds`` is true.
    """
    _check_modified(mm)
    x = dot(transpose(mm), mm)
    p = scalar(Fraction(x.matrix[0][5]) / S.matrix[0][5])
    return x == S * p, p


def check_paxion_relation(mm: Dyadic, alpha, p) -> bool:
    """``M_m^T·M_m − α(M_m^T + M_m) == (P − α²) e_N⌊I^(2)T``."""
    _check_modified(mm)
    alpha, p = scalar(alpha), scalar(p)
    lhs = dot(transpose(mm), mm) - (transpose(mm) + mm) * alpha
    return lhs == S * (p - alpha * alpha)


def solve_quadratic_relation(mm: Dyadic):
    """Unique ``(a, b)`` with ``M_m^T·M_m − a(M_m^T+M_m) − b S = 0``, or None.

    Returns None also when the solution is not unique, which happens
    exactly when the symmetric part of ``M_m`` is a multiple of ``S``.
    """
    _check_modified(mm)
    x = dot(transpose(mm), mm).entries()
    sym = (transpose(mm) + mm).entries()
    s = S.entries()
    a_mat = [[u, v] for u, v in zip(sym, s)]
    if linalg.rank(a_mat) < 2:
        return None
    sol = linalg.solve(a_mat, x)
    if sol is None:
        return None
    a, b = (scalar(v) for v in sol)
    return (a, b) if check_paxion_relation(mm, a, b + a * a) else None


# -------------------------------------------------------------- certificates

def _vanishes_on(fn, points) -> bool:
    return all(fn(one_form(*p)).is_zero() for p in points)


def quadratic_coefficients(f: Dyadic) -> dict:
    """The 10 coefficient dyadics of ``ν ↦ F⌊⌊νν``, keyed by index pair.

    ``(i, i)`` holds the coefficient of ``ν_i²``, ``(i, j)`` with ``i < j``
    that of ``ν_i ν_j``.
    """
    _check_modified(f)
    unit = [one_form(*[int(k == i) for k in range(DIM)]) for i in range(DIM)]
    diag = {i: double_contract(f, unit[i]) for i in range(DIM)}
    out = {(i, i): diag[i] for i in range(DIM)}
    for i, j in combinations(range(DIM), 2):
        out[i, j] = double_contract(f, unit[i] + unit[j]) - diag[i] - diag[j]
    return out


def double_contraction_certificate(f: Dyadic) -> bool:
    """True iff ``F⌊⌊νν = 0`` for every one-form ``ν``.

    Decided twice: by the coefficient dyadics and by the direct test that
    ``F`` is a multiple of ``e_N⌊I^(2)T``.  The routes must agree.
    """
    by_coefficients = all(c.is_zero() for c in quadratic_coefficients(f).values())
    by_proportionality = multiple_of_s(f) is not None
    if by_coefficients != by_proportionality:
        raise ConventionError("double-contraction certificate routes disagree")
    return by_coefficients


appendix1_certificate = double_contraction_certificate


def pq_discriminate(mm: Dyadic, probes=DEFAULT_PROBES) -> str:
    """Which of the four P/Q branches a full-rank solution of the quadratic law is.

    Each level (third compound, second compound, the contraction itself) is
    first tried on ``probes``; a level that vanishes there is certified zero
    on the lattice of its degree before moving on.
    """
    _check_modified(mm)
    if linalg.rank(mm.matrix) < 6:
        raise PreconditionError("discriminator needs a full-rank modified bidyadic")
    holds, _ = check_p_quadratic(mm)
    if not holds:
        raise NotApplicable("M_m does not satisfy M_m^T·M_m = P e_N⌊I^(2)T")
    probes = list(probes)
    # every level is homogeneous in M_m, so integer entries give the same verdicts faster
    den = lcm(*(Fraction(x).denominator for x in mm.entries()))
    mm = mm * den
    levels = (
        (3, Q_SOLUTION),
        (2, P_SOLUTION),
        (1, Q_ANTISYMMETRIC),
    )
    for p, branch in levels:
        # p = 1 is the contraction itself
        fn = lambda nu, p=p: compound(double_contract(mm, nu), p)  # noqa: E731
        if not all(fn(nu).is_zero() for nu in probes):
            return branch
        if not _vanishes_on(fn, lattice(2 * p)):
            return branch
    return P_MULTIPLE_OF_I


# -------------------------------------------------------------- case-1 search

def _minor_polys(mm: Dyadic):
    # every 3×3 minor of M_m − xS is a cubic in x; interpolate at 4 points
    xs = [0, 1, -1, 2]
    mats = [(mm - S * x).matrix for x in xs]
    for rows in combinations(range(6), 3):
        for cols in combinations(range(6), 3):
            ys = [linalg.det([[m[r][c] for c in cols] for r in rows]) for m in mats]
            yield poly.interpolate(xs, ys)


def case1_alpha(mm: Dyadic):
    """The rational ``α`` with ``rank(M_m − α S) ≤ 2``, or None.

    Such ``α`` is a common root of all 3×3 minors of ``M_m − xS``.  The
    candidates are the rational roots of the first minor that is not
    identically zero; each is confirmed by an exact rank test, which is the
    same as checking every other minor.  At most one exists because ``S``
    has full rank.
    """
    _check_modified(mm)
    for p in _minor_polys(mm):
        if not p:
            continue
        for root in poly.rational_roots(p):
            if linalg.rank((mm - S * root).matrix) <= 2:
                return scalar(root)
        return None
    raise ConventionError("all minors of M_m − xS vanish identically")  # pragma: no cover


def factor_case1(m: Dyadic):
    """Recover a :class:`Case1` recipe rebuilding ``M`` exactly, or None."""
    _check_medium(m)
    mm = modified(m)
    alpha = case1_alpha(mm)
    if alpha is None:
        return None
    rest = mm - S * alpha
    rows, pivots = linalg.rref(rest.matrix)
    factors = []
    for k, col in enumerate(pivots):
        a = [rest.matrix[i][col] for i in range(6)]
        pi = MultiForm(2, linalg.matvec(E_TO_F2, a))
        factors.append((pi, MultiVector(2, rows[k])))
    while len(factors) < 2:
        factors.append((MultiForm.zero(2), MultiVector.zero(2)))
    (pi, c), (lam, d) = factors
    recipe = Case1(pi, lam, c, d, alpha)
    if recipe.build() != m:
        raise ConventionError("case-1 factorization does not rebuild the medium")
    return recipe


# -------------------------------------------------------------- classifier

@dataclass(frozen=True)
class ClassificationVerdict:
    dispersion_free: bool
    tag: str
    discriminator: str | None = None
    inverse_tag: str | None = None
    params: dict = field(default_factory=dict, hash=False)
    recipe: object = None
    notes: tuple[str, ...] = ()

    @property
    def table_row(self) -> str | None:
        return TABLE_ROWS.get(self.tag)

    @property
    def inverse_row(self) -> str | None:
        return TABLE_ROWS.get(self.inverse_tag)


def _p_axion_tag(a, b) -> str:
    if a == 0:
        return P_MEDIUM
    return SPECIAL_P_AXION if b == 0 else GENERAL_P_AXION


def _classify(m: Dyadic) -> ClassificationVerdict:
    mm = modified(m)
    free = is_dispersion_free(m)
    notes = []
    params = {}
    branch = None

    quad = solve_quadratic_relation(mm)
    if quad is not None:
        a, b = quad
        params.update(alpha=a, P=b + a * a)
        if b + a * a != 0:
            branch = pq_discriminate(mm - S * a)
        else:
            notes.append("quadratic law holds with P = 0; discriminator needs full rank")

    if not free:
        return ClassificationVerdict(False, NOT_DISPERSION_FREE, branch, params=params, notes=tuple(notes))

    alpha = scalar(Fraction(trace(m), 6))
    if m == I2T * alpha:
        return ClassificationVerdict(True, AXION, params={"alpha": alpha}, recipe=Axion(alpha))

    sym = multiple_of_s((mm + transpose(mm)) / 2)
    if sym is not None:
        tag = SKEWON if sym == 0 else SKEWON_AXION
        return ClassificationVerdict(True, tag, params={"axion_scalar": sym})

    if branch == P_SOLUTION:
        return ClassificationVerdict(True, _p_axion_tag(*quad), branch, params=params)
    if branch in (Q_SOLUTION, P_MULTIPLE_OF_I):
        # not reachable for a dispersion-free medium that is not an axion
        notes.append(f"unexpected discriminator branch {branch!r}")

    recipe = factor_case1(m)
    if recipe is not None:
        params = dict(params, case1_alpha=recipe.alpha)
        return ClassificationVerdict(True, CASE1, branch, params=params, recipe=recipe, notes=tuple(notes))
    return ClassificationVerdict(True, UNRECOGNIZED, branch, params=params, notes=tuple(notes))


def classify_raw(m: Dyadic, with_inverse: bool = True) -> ClassificationVerdict:
    """Classify a medium bidyadic; the verdict is always returned.

    Pipeline: exact dispersion test, axion, skewon(-axion) via the symmetric
    part of ``M_m``, the P-axion quadratic law plus the P/Q discriminator,
    then the case-1 ``α``-search with an explicit factorization.  When the
    medium is recognized and invertible, the inverse is classified too.
    """
    _check_medium(m)
    verdict = _classify(m)
    if not with_inverse or verdict.tag in (NOT_DISPERSION_FREE, UNRECOGNIZED):
        return verdict
    try:
        n = inverse(m)
    except NoInverse:
        return verdict
    inv = _classify(n)
    return ClassificationVerdict(verdict.dispersion_free, verdict.tag, verdict.discriminator, inv.tag,
                                 verdict.params, verdict.recipe, verdict.notes)


@dataclass(frozen=True)
class TableRow:
    m_class: str
    n_class: str

    def in_table(self) -> bool:
        return (self.m_class, self.n_class) in TABLE_1


def inverse_class_map(m: Dyadic) -> TableRow:
    """Classes of ``M`` and ``N = M^{-1}`` as Table-1 labels.

    Raises :class:`NoInverse` for singular ``M`` and
    :class:`PreconditionError` when either side is not a case-2 class.
    """
    _check_medium(m)
    n = inverse(m)
    vm, vn = _classify(m), _classify(n)
    if vm.tag not in CASE2_TAGS or vn.tag not in CASE2_TAGS:
        raise PreconditionError(f"not a case-2 pair: {vm.tag} -> {vn.tag}")
    return TableRow(TABLE_ROWS[vm.tag], TABLE_ROWS[vn.tag])
