"""Univariate polynomials over the rationals (coefficient lists, low degree first)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm


def trim(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def interpolate(xs, ys):
    """Lagrange interpolation through distinct points."""
    n = len(xs)
    out = [Fraction(0)] * n
    for i in range(n):
        basis, denom = [Fraction(1)], Fraction(1)
        for j in range(n):
            if j != i:
                basis = [Fraction(0)] + basis
                for k in range(len(basis) - 1):
                    basis[k] -= xs[j] * basis[k + 1]
                denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k in range(n):
            out[k] += scale * basis[k]
    return trim(out)


def divmod_poly(a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = trim(a)
    return trim(q), a


def monic(p):
    p = trim(p)
    return [c / p[-1] for c in p] if p else p


def gcd_poly(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def squarefree(p):
    p = trim(p)
    if len(p) <= 2:
        return monic(p)
    return monic(divmod_poly(p, gcd_poly(p, derivative(p)))[0])


def squarefree_factors(p) -> list[tuple[list, int]]:
    """Yun's decomposition: monic squarefree ``(factor, multiplicity)`` pairs."""
    p = monic(p)
    if len(p) <= 1:
        return []
    out = []
    g = gcd_poly(p, derivative(p))
    w = divmod_poly(p, g)[0]
    y = divmod_poly(derivative(p), g)[0]
    k = 1
    while len(w) > 1:
        z = [a - b for a, b in _padded(y, derivative(w))]
        h = gcd_poly(w, z)
        if len(h) > 1:
            out.append((h, k))
        w = divmod_poly(w, h)[0]
        y = divmod_poly(z, h)[0]
        k += 1
    return out


def _padded(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(p) -> list[Fraction]:
    """All distinct rational roots, ascending."""
    p = squarefree(p)
    if len(p) <= 1:
        return []
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    roots = set()
    while ints and ints[0] == 0:
        roots.add(Fraction(0))
        ints = ints[1:]
    if len(ints) == 2:
        roots.add(Fraction(-ints[0], ints[1]))
    elif len(ints) == 3:
        c, b, a = ints
        disc = b * b - 4 * a * c
        if disc >= 0 and isqrt(disc) ** 2 == disc:
            r = isqrt(disc)
            roots.update({Fraction(-b + r, 2 * a), Fraction(-b - r, 2 * a)})
    elif len(ints) > 3:
        for q in _divisors(ints[-1]):
            for num in _divisors(ints[0]):
                for x in (Fraction(num, q), Fraction(-num, q)):
                    if evaluate(ints, x) == 0:
                        roots.add(x)
    return sorted(roots)
