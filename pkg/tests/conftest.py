"""Shared fixtures and slow-by-hand oracles used across the test modules.

The oracles implement the definitions directly with Python loops so the
vectorized library code is always checked against an independent route.
"""
import numpy as np
import pytest

from golayrb import Family, FamilyDescriptor, boolean_to_phases, build_family, gdj_quadratic, psi


def naive_xcorr(a, b, tau):
    """Direct-sum aperiodic cross-correlation R_{a,b}(tau) for tau >= 0."""
    a = [complex(v) for v in a]
    b = [complex(v) for v in b]
    total = 0j
    for i in range(len(a) - tau):
        total += a[i] * b[i + tau].conjugate()
    return total


def naive_power(a, t_frac):
    """|sum_i a_i exp(2 pi j i t)|^2 evaluated term by term."""
    s = sum(complex(v) * np.exp(2j * np.pi * i * t_frac) for i, v in enumerate(a))
    return abs(s) ** 2


def identity_descriptor(kind, m, q=2, c_k=None, c=0):
    pi = list(range(1, m + 1))
    if kind is Family.Y:
        pi[-2], pi[-1] = pi[-1], pi[-2]
    return FamilyDescriptor(
        theorem=kind, m=m, q=q, pi=tuple(pi), c_k=tuple(c_k or [0] * m), c=c
    )


@pytest.fixture(scope="session")
def x3():
    return build_family(identity_descriptor(Family.X, 3))


@pytest.fixture(scope="session")
def x4():
    return build_family(identity_descriptor(Family.X, 4))


@pytest.fixture(scope="session")
def y3():
    return build_family(identity_descriptor(Family.Y, 3))


@pytest.fixture(scope="session")
def y4():
    return build_family(identity_descriptor(Family.Y, 4))


@pytest.fixture(scope="session")
def showcase():
    """The length-512 quadratic-path sequence behind the first two tables."""
    desc = FamilyDescriptor(
        theorem=Family.PLAIN_GDJ,
        m=9,
        q=2,
        pi=(7, 9, 6, 3, 1, 5, 4, 8, 2),
        c_k=(0,) * 9,
        c=0,
    )
    return psi(boolean_to_phases(gdj_quadratic(desc)))
