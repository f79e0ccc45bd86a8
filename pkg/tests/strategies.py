"""Hypothesis strategies for exact elements and dyadics."""

from fractions import Fraction

from hypothesis import strategies as st

from fresnelkit.dyadic import Dyadic, E, F
from fresnelkit.exterior import MultiForm, MultiVector, dim

small_ints = st.integers(min_value=-4, max_value=4)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def elements(cls, grade, entries=small_ints):
    return st.lists(entries, min_size=dim(grade), max_size=dim(grade)).map(lambda c: cls(grade, c))


def vectors(grade=1, entries=small_ints):
    return elements(MultiVector, grade, entries)


def forms(grade=1, entries=small_ints):
    return elements(MultiForm, grade, entries)


def dyadics(left, right, entries=small_ints):
    row = st.lists(entries, min_size=right.dim, max_size=right.dim)
    return st.lists(row, min_size=left.dim, max_size=left.dim).map(lambda m: Dyadic(left, right, m))


def media(entries=small_ints):
    return dyadics(F(2), E(2), entries)


def modified_media(entries=small_ints):
    return dyadics(E(2), E(2), entries)


def nonzero_forms(grade=1):
    return forms(grade).filter(lambda f: not f.is_zero())
