"""Generalized Boolean functions over Z_q and the quadratic Golay construction.

A generalized Boolean function maps m binary variables to Z_q (q even).
Evaluating it at every integer 0 <= i < 2^m gives a phase vector, and the
psi map turns phases into a unimodular complex sequence.  The bit convention
is fixed throughout the package: i = sum_k 2^(k-1) i_k, so x_1 reads the
least significant bit of the sequence index.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Mapping, Sequence, Tuple

import numpy as np

Monomial = FrozenSet[int]

UNIMODULAR_TOL = 1e-12


def bits_of(i: int, m: int) -> Tuple[int, ...]:
    """Binary digits (i_1, ..., i_m) of i, least significant first."""
    if not 0 <= i < (1 << m):
        raise ValueError(f"index {i} out of range for m={m}")
    return tuple((i >> (k - 1)) & 1 for k in range(1, m + 1))


def index_of(bits: Sequence[int]) -> int:
    """Inverse of bits_of: reassemble the integer from (i_1, ..., i_m)."""
    return sum(int(b) << k for k, b in enumerate(bits))


@dataclass(frozen=True)
class BooleanFunction:
    """A map from monomials over {x_1..x_m} to coefficients in Z_q.

    terms maps a variable subset (frozenset of 1-based indices; the empty
    set is the constant term) to its coefficient.  Coefficients are reduced
    mod q and zero terms are dropped, so equality is structural.
    """

    m: int
    q: int
    terms: Mapping[Monomial, int]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.q < 2 or self.q % 2 != 0:
            raise ValueError("q must be an even integer >= 2")
        canon: Dict[Monomial, int] = {}
        for mono, coeff in self.terms.items():
            key = frozenset(int(v) for v in mono)
            if any(v < 1 or v > self.m for v in key):
                raise ValueError(f"monomial {set(key)} uses variables outside 1..{self.m}")
            val = (canon.get(key, 0) + int(coeff)) % self.q
            canon[key] = val
        object.__setattr__(self, "terms", {k: v for k, v in canon.items() if v})

    def plus_linear(self, var: int, delta: int) -> "BooleanFunction":
        """Return this function with delta added to the coefficient of x_var."""
        new_terms = dict(self.terms)
        key = frozenset({var})
        new_terms[key] = (new_terms.get(key, 0) + delta) % self.q
        return BooleanFunction(self.m, self.q, new_terms)


@dataclass(frozen=True)
class PhaseSequence:
    """A length-L vector over Z_q: the phases of a sequence before psi."""

    q: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if self.q < 2 or self.q % 2 != 0:
            raise ValueError("q must be an even integer >= 2")
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 or v >= self.q for v in vals):
            raise ValueError("phase values must lie in [0, q)")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)


@dataclass(frozen=True)
class ComplexSequence:
    """A complex vector whose entries are zero (nulled) or unimodular."""

    values: Tuple[complex, ...]

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        for v in vals:
            if v != 0 and abs(abs(v) - 1.0) > UNIMODULAR_TOL:
                raise ValueError("entries must be zero or have magnitude 1")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, idx):
        return self.values[idx]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex)


class Family(Enum):
    """Which construction a descriptor belongs to."""

    X = "FamilyX"
    Y = "FamilyY"
    PLAIN_GDJ = "PlainGDJ"


@dataclass(frozen=True)
class FamilyDescriptor:
    """(family, m, q, permutation pi, coefficients c_k, constant c).

    FamilyX requires pi(m)=m and pi(m-1)=m-1; FamilyY requires pi(m)=m-1
    and pi(m-1)=m.  PlainGDJ accepts any permutation (and allows the
    degenerate m=1 case, which has no quadratic part).
    """

    theorem: Family
    m: int
    q: int
    pi: Tuple[int, ...]
    c_k: Tuple[int, ...]
    c: int

    def __post_init__(self):
        if self.q < 2 or self.q % 2 != 0:
            raise ValueError("q must be an even integer >= 2")
        min_m = 1 if self.theorem is Family.PLAIN_GDJ else 2
        if self.m < min_m:
            raise ValueError(f"{self.theorem.value} requires m >= {min_m}")
        pi = tuple(int(v) for v in self.pi)
        if sorted(pi) != list(range(1, self.m + 1)):
            raise ValueError(f"pi={pi} is not a permutation of 1..{self.m}")
        if self.theorem is Family.X and (pi[-1] != self.m or pi[-2] != self.m - 1):
            raise ValueError(
                f"FamilyX requires pi({self.m})={self.m} and pi({self.m - 1})={self.m - 1}"
            )
        if self.theorem is Family.Y and (pi[-1] != self.m - 1 or pi[-2] != self.m):
            raise ValueError(
                f"FamilyY requires pi({self.m})={self.m - 1} and pi({self.m - 1})={self.m}"
            )
        c_k = tuple(int(v) % self.q for v in self.c_k)
        if len(c_k) != self.m:
            raise ValueError(f"c_k must have {self.m} entries")
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "c_k", c_k)
        object.__setattr__(self, "c", int(self.c) % self.q)

    @property
    def length(self) -> int:
        return 1 << self.m

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "m": self.m,
            "q": self.q,
            "pi": list(self.pi),
            "c_k": list(self.c_k),
            "c": self.c,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "FamilyDescriptor":
        try:
            return cls(
                theorem=Family(obj["theorem"]),
                m=int(obj["m"]),
                q=int(obj["q"]),
                pi=tuple(obj["pi"]),
                c_k=tuple(obj["c_k"]),
                c=int(obj["c"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed descriptor object: {exc}") from exc


def eval_boolean(f: BooleanFunction, i: int) -> int:
    """Evaluate f at index i under the LSB-first bit convention."""
    if not 0 <= i < (1 << f.m):
        raise ValueError(f"index {i} out of range for m={f.m}")
    total = 0
    for mono, coeff in f.terms.items():
        if all((i >> (v - 1)) & 1 for v in mono):
            total += coeff
    return total % f.q


def boolean_to_phases(f: BooleanFunction) -> PhaseSequence:
    """The length-2^m phase vector (f(0), f(1), ..., f(2^m - 1))."""
    length = 1 << f.m
    idx = np.arange(length)
    vals = np.zeros(length, dtype=np.int64)
    for mono, coeff in f.terms.items():
        prod = np.ones(length, dtype=np.int64)
        for v in mono:
            prod &= (idx >> (v - 1)) & 1
        vals += coeff * prod
    return PhaseSequence(f.q, tuple(int(v) for v in vals % f.q))


def psi(p: PhaseSequence) -> ComplexSequence:
    """Map phases to the unit circle: entry i becomes exp(2 pi j p_i / q)."""
    vals = np.exp(2j * np.pi * p.as_array() / p.q)
    return ComplexSequence(tuple(vals))


def gdj_quadratic(d: FamilyDescriptor) -> BooleanFunction:
    """The quadratic construction

        a(x) = (q/2) * sum_{k=1}^{m-1} x_{pi(k)} x_{pi(k+1)}
               + sum_k c_k x_k + c

    over the descriptor's permutation and coefficients.
    """
    terms: Dict[Monomial, int] = {}
    half = d.q // 2
    for k in range(d.m - 1):
        key = frozenset({d.pi[k], d.pi[k + 1]})
        terms[key] = (terms.get(key, 0) + half) % d.q
    for k in range(d.m):
        if d.c_k[k]:
            key = frozenset({k + 1})
            terms[key] = (terms.get(key, 0) + d.c_k[k]) % d.q
    if d.c:
        terms[frozenset()] = d.c
    return BooleanFunction(d.m, d.q, terms)


def gdj_mates(
    d: FamilyDescriptor, a: BooleanFunction
) -> Tuple[BooleanFunction, BooleanFunction, BooleanFunction]:
    """The three companions of a:

        b    = a + (q/2) x_{pi(1)}
        c_fn = a + (q/2) x_{pi(m)}
        d_fn = a + (q/2) x_{pi(1)} + (q/2) x_{pi(m)}

    (psi(a), psi(b)) and (psi(a), psi(c_fn)) are complementary pairs of
    length 2^m, and (psi(a), psi(c_fn)) is the Golay mate of
    (psi(b), psi(d_fn)).
    """
    half = a.q // 2
    b = a.plus_linear(d.pi[0], half)
    c_fn = a.plus_linear(d.pi[-1], half)
    d_fn = b.plus_linear(d.pi[-1], half)
    return b, c_fn, d_fn
