"""Floating-point sampler of the Fresnel surface, for plotting.

Rays use rational unit directions (inverse stereographic projection of a
grid on ``[-1, 1]²``, both hemispheres), so the restriction of the quartic
to ``ν = k(d₁, d₂, d₃, 0) − ω ε₄`` is an exact polynomial in ``k``.  Its
squarefree factors are solved in floating point and polished by Newton
steps; multiplicities come from the exact factorization.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import poly
from .dispersion import QuarticForm
from .errors import PreconditionError

TOLERANCE = 1e-9  # documented relative tolerance of reported roots
MIN_RESOLUTION = 8


def directions(resolution: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Rational unit vectors from an ``n×n`` grid, mirrored in ``z``; duplicates dropped."""
    if resolution < MIN_RESOLUTION:
        raise PreconditionError(f"resolution must be at least {MIN_RESOLUTION}")
    out, seen = [], set()
    grid = [Fraction(-1) + Fraction(2 * i, resolution - 1) for i in range(resolution)]
    for u in grid:
        for v in grid:
            r = 1 + u * u + v * v
            x, y, z = 2 * u / r, 2 * v / r, (1 - u * u - v * v) / r
            for d in ((x, y, z), (x, y, -z)):
                if d not in seen:
                    seen.add(d)
                    out.append(d)
    return out


def ray_polynomial(q: QuarticForm, d, omega) -> list[Fraction]:
    """Exact coefficients (low degree first) of ``k ↦ q(k d, −ω)``."""
    ks = [Fraction(i) for i in range(5)]
    vals = [q.evaluate((k * d[0], k * d[1], k * d[2], -Fraction(omega))) for k in ks]
    return poly.interpolate(ks, vals)


def _polish(coeffs_low_first, x: float) -> float:
    c = np.array([float(v) for v in reversed(coeffs_low_first)])
    dc = np.polyder(c)
    for _ in range(60):
        f, df = np.polyval(c, x), np.polyval(dc, x)
        if df == 0:
            break
        step = f / df
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return float(x)


def _real_roots(factor) -> list[float]:
    if len(factor) == 2:
        return [float(-factor[0] / factor[1])]
    roots = np.roots([float(v) for v in reversed(factor)])
    found = []
    for r in roots:
        if abs(r.imag) <= 1e-7 * max(1.0, abs(r)):
            found.append(_polish(factor, float(r.real)))
    return found


def relative_residual(p, k: float) -> float:
    """``|p(k)| / Σ|c_j||k|^j``, evaluated exactly at the float ``k``."""
    x = Fraction(k)
    scale = sum(abs(c) * abs(x) ** j for j, c in enumerate(p))
    return float(abs(poly.evaluate(p, x)) / scale) if scale else 0.0


@dataclass(frozen=True)
class RaySample:
    direction: tuple[Fraction, Fraction, Fraction]
    status: str                      # "roots", "no-real-roots" or "identically-zero"
    roots: tuple[tuple[float, int], ...]
    residual: float


def sample_ray(q: QuarticForm, d, omega) -> RaySample:
    p = ray_polynomial(q, d, omega)
    if not p:
        return RaySample(tuple(d), "identically-zero", (), 0.0)
    roots = []
    for factor, mult in poly.squarefree_factors(p):
        roots.extend((r, mult) for r in _real_roots(factor))
    roots.sort()
    residual = max((relative_residual(p, r) for r, _ in roots), default=0.0)
    return RaySample(tuple(d), "roots" if roots else "no-real-roots", tuple(roots), residual)


def sample_surface(q: QuarticForm, omega, resolution: int) -> list[RaySample]:
    omega = Fraction(omega)
    if omega == 0:
        raise PreconditionError("frequency must be nonzero")
    return [sample_ray(q, d, omega) for d in directions(resolution)]


def to_csv(samples) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["dx", "dy", "dz", "status", "roots", "multiplicities", "max_rel_residual"])
    for s in samples:
        w.writerow([
            *(repr(float(c)) for c in s.direction),
            s.status,
            ";".join(repr(r) for r, _ in s.roots),
            ";".join(str(m) for _, m in s.roots),
            f"{s.residual:.3e}",
        ])
    return buf.getvalue()
