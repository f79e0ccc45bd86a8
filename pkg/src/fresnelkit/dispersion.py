"""Dispersion dyadic, the Fresnel quartic and plane-wave fields.

The quartic is never sampled to decide whether it vanishes: its 35
coefficients are recovered exactly from evaluations at the fixed points
``POLARIZATION_POINTS`` (every multiplicity vector ``β`` with ``|β| = 4``,
read as the one-form ``Σ β_i ε_i``).  Those points are unisolvent for
homogeneous quartics in four variables, so one exact 35×35 solve gives the
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, lcm, prod

from . import linalg
from .dyadic import (
    Dyadic,
    E,
    apply,
    F,
    compound,
    double_contract,
    double_contract_left,
    double_pair,
    double_wedge,
    hook_left,
    hook_right,
    modified,
    rank,
    wedge_left,
)
from .errors import ConventionError, NoInverse, PreconditionError, SpaceMismatch
from .exterior import DIM, E_N, MultiForm, one_form, scalar, wedge

QUARTIC_KEYS: tuple[tuple[int, ...], ...] = tuple(combinations_with_replacement(range(DIM), 4))


def _multiplicities(key) -> tuple[int, ...]:
    return tuple(key.count(i) for i in range(DIM))


POLARIZATION_POINTS: tuple[tuple[int, ...], ...] = tuple(_multiplicities(k) for k in QUARTIC_KEYS)


def _multinomial(key) -> int:
    return factorial(len(key)) // prod(factorial(m) for m in _multiplicities(key))


def _monomial(point, key):
    return prod(point[i] for i in key)


@lru_cache(maxsize=None)
def _polarization_inverse():
    """Integer matrix ``W`` and denominator ``d`` with ``V^{-1} = W / d``."""
    vander = [[_monomial(p, k) for k in QUARTIC_KEYS] for p in POLARIZATION_POINTS]
    try:
        inv = linalg.inverse(vander)
    except NoInverse as exc:  # pragma: no cover - fixed point set
        raise ConventionError("polarization points are not unisolvent") from exc
    d = lcm(*(Fraction(x).denominator for row in inv for x in row))
    return tuple(tuple(int(x * d) for x in row) for row in inv), d


@dataclass(frozen=True)
class QuarticForm:
    """Symmetric rank-4 tensor ``T`` with ``q(ν) = Σ T_ijkl ν_i ν_j ν_k ν_l``.

    ``coeffs`` maps each sorted 0-based index multiset to its tensor entry.
    """

    coeffs: dict = field(hash=False)

    def __post_init__(self):
        if set(self.coeffs) != set(QUARTIC_KEYS):
            raise ValueError("a quartic form needs exactly the 35 sorted index keys")
        object.__setattr__(self, "coeffs", {k: scalar(self.coeffs[k]) for k in QUARTIC_KEYS})

    @classmethod
    def from_monomials(cls, mono: dict) -> "QuarticForm":
        """From monomial coefficients (coefficient of ``ν^β`` keyed like ``coeffs``)."""
        return cls({k: Fraction(scalar(mono.get(k, 0))) / _multinomial(k) for k in QUARTIC_KEYS})

    def monomials(self) -> dict:
        return {k: scalar(self.coeffs[k] * _multinomial(k)) for k in QUARTIC_KEYS}

    def values(self) -> list:
        return [self.coeffs[k] for k in QUARTIC_KEYS]

    def evaluate(self, nu):
        v = nu.coords if isinstance(nu, MultiForm) else tuple(nu)
        return scalar(sum(c * _monomial(v, k) for k, c in self.monomials().items() if c))

    def is_zero(self) -> bool:
        return not any(self.coeffs.values())

    def proportionality(self, other: "QuarticForm"):
        """``c`` with ``self == c * other``, or None; both zero gives 1."""
        ratio = None
        for k in QUARTIC_KEYS:
            a, b = self.coeffs[k], other.coeffs[k]
            if b == 0:
                if a != 0:
                    return None
                continue
            r = Fraction(a) / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
        return 1 if ratio is None else scalar(ratio)

    def tensor(self) -> list:
        """Full 4×4×4×4 nested list of the symmetric tensor."""
        t = [[[[0] * DIM for _ in range(DIM)] for _ in range(DIM)] for _ in range(DIM)]
        for a in range(DIM):
            for b in range(DIM):
                for c in range(DIM):
                    for d in range(DIM):
                        t[a][b][c][d] = self.coeffs[tuple(sorted((a, b, c, d)))]
        return t

    @staticmethod
    def key_label(key) -> str:
        return "".join(str(i + 1) for i in key)


def _check_medium(m: Dyadic):
    if m.left != F(2) or m.right != E(2):
        raise SpaceMismatch(f"medium bidyadic must be F2E2, got {m.spaces()}")


def _check_modified(mm: Dyadic):
    if mm.left != E(2) or mm.right != E(2):
        raise SpaceMismatch(f"modified bidyadic must be E2E2, got {mm.spaces()}")


def _check_nu(nu):
    if not isinstance(nu, MultiForm) or nu.grade != 1:
        raise SpaceMismatch("wave one-form must be a grade-1 multiform")


def dispersion_dyadic(m: Dyadic, nu: MultiForm) -> Dyadic:
    """``D(ν) = e_N⌊(ν∧M⌊ν)`` in ``E1E1``."""
    _check_medium(m)
    _check_nu(nu)
    return hook_left(E_N, wedge_left(nu, hook_right(m, nu)))


def dispersion_dyadic_modified(mm: Dyadic, nu: MultiForm) -> Dyadic:
    """``D(ν) = M_m⌊⌊νν``; the contraction route to :func:`dispersion_dyadic`."""
    _check_modified(mm)
    _check_nu(nu)
    return double_contract(mm, nu)


def _clear(mm: Dyadic, nu: MultiForm):
    # integer copies and the factor restoring the exact value (cubic in M_m, quartic in ν)
    dm = lcm(*(Fraction(x).denominator for x in mm.entries()))
    dn = lcm(*(Fraction(x).denominator for x in nu.coords))
    if dm == 1 and dn == 1:
        return mm, nu, 1
    return mm * dm, nu * dn, Fraction(1, dm ** 3 * dn ** 4)


def _both_forms(mm: Dyadic, nu: MultiForm):
    # six times the scalar, by each printed route
    d = double_contract(mm, nu)
    first = 2 * double_pair(double_wedge(mm, compound(d, 2)))
    inner = double_contract_left(nu, mm)
    second = double_pair(double_wedge(mm, double_contract_left(nu, double_wedge(mm, inner))))
    return first, second


def fresnel_scalar(mm: Dyadic, nu: MultiForm):
    """Fresnel scalar ``D(ν)`` of a modified bidyadic, computed both printed ways.

    ``(1/3) ε_Nε_N||(M_m∧∧D^(2)(ν))`` and
    ``(1/6) ε_Nε_N||(M_m∧∧(νν⌋⌋(M_m∧∧(νν⌋⌋M_m))))`` must agree exactly.
    """
    _check_modified(mm)
    _check_nu(nu)
    mi, ni, back = _clear(mm, nu)
    first, second = _both_forms(mi, ni)
    if first != second:
        raise ConventionError(f"Fresnel forms disagree: {first}/6 != {second}/6")
    return scalar(Fraction(first, 6) * back)


def fresnel_scalar_n(nm: Dyadic, nu: MultiForm):
    """Fresnel scalar from the inverse-side modified bidyadic ``N_m``."""
    return fresnel_scalar(nm, nu)


def extract_quartic(mm: Dyadic) -> QuarticForm:
    """Exact coefficient tensor of ``ν -> fresnel_scalar(M_m, ν)``."""
    _check_modified(mm)
    den = lcm(*(Fraction(x).denominator for x in mm.entries()))
    mi = mm * den if den != 1 else mm
    values = [fresnel_scalar(mi, one_form(*p)) for p in POLARIZATION_POINTS]
    w, d = _polarization_inverse()
    mono = {k: Fraction(sum(c * v for c, v in zip(row, values) if c and v), d * den ** 3)
            for k, row in zip(QUARTIC_KEYS, w)}
    return QuarticForm.from_monomials(mono)


def quartic_of(m: Dyadic) -> QuarticForm:
    """Fresnel quartic of a medium bidyadic ``M``."""
    _check_medium(m)
    return extract_quartic(modified(m))


def is_dispersion_free(m: Dyadic) -> bool:
    """True iff the Fresnel quartic of ``M`` vanishes identically (decided exactly)."""
    return quartic_of(m).is_zero()


@dataclass(frozen=True)
class RankProfile:
    ranks: tuple[int, ...]
    min_rank: int
    max_rank: int
    rank_le_2: bool


def rank_profile(m: Dyadic, samples) -> RankProfile:
    """Ranks of ``D(ν)`` over the sample one-forms."""
    samples = list(samples)
    if not samples:
        raise PreconditionError("rank_profile needs at least one sample")
    ranks = tuple(rank(dispersion_dyadic(m, nu)) for nu in samples)
    return RankProfile(ranks, min(ranks), max(ranks), max(ranks) <= 2)


@dataclass(frozen=True)
class PlaneWave:
    nu: MultiForm
    phi: MultiForm
    Phi: MultiForm
    Psi: MultiForm
    null_dimension: int


@dataclass(frozen=True)
class NoWave:
    nu: MultiForm
    null_dimension: int
    reason: str = "null space of D(ν) is spanned by ν alone"


def plane_wave_solve(m: Dyadic, nu: MultiForm):
    """Potential ``φ`` with ``D(ν)|φ = 0`` and ``ν∧φ ≠ 0``, plus its fields.

    ``φ`` is the first reduced-echelon null-space generator (lowest free
    basis index) that is not proportional to ``ν``.
    """
    _check_medium(m)
    _check_nu(nu)
    if nu.is_zero():
        raise PreconditionError("wave one-form must be nonzero")
    d = dispersion_dyadic(m, nu)
    null = linalg.nullspace(d.matrix)
    for v in null:
        phi = one_form(*v)
        Phi = wedge(nu, phi)
        if not Phi.is_zero():
            Psi = apply(m, Phi)
            if not wedge(nu, Psi).is_zero():
                raise ConventionError("ν∧Ψ != 0 for a null-space potential")
            return PlaneWave(nu, phi, Phi, Psi, len(null))
    return NoWave(nu, len(null))
