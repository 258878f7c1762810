"""Sequence family construction, per-mask correlation verification, and baselines.

A family instance carries the quadratic-construction sequence a together
with its three companions

    b = psi(a_fn + (q/2) x_{pi(1)})
    d = psi(a_fn + (q/2) x_{pi(m)})
    e = psi(a_fn + (q/2) x_{pi(1)} + (q/2) x_{pi(m)})

so that (a, b) and (d, e) are Golay pairs and each is a Golay mate of the
other.  The verification routines check, mask by mask, which correlation
relation the construction guarantees for the pair (a, b): an exact
complementary pair, an almost-complementary pair with a single defect at a
known shift, or membership of a 4-sequence complementary set together with
d and e.  All checks run on the zero-padded masked sequences, so the
guarantees are statements about the actual transmitted tone sets.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .correlation import (
    as_complex_array,
    default_tolerance,
    detect_acp,
    is_css,
    is_gcp,
)
from .dsa import mask_weights
from .seqcore import (
    ComplexSequence,
    Family,
    FamilyDescriptor,
    boolean_to_phases,
    gdj_quadratic,
    psi,
)


@dataclass(frozen=True)
class FamilyInstance:
    """One constructed sequence quadruple with its descriptor."""

    descriptor: FamilyDescriptor
    a: ComplexSequence
    b: ComplexSequence
    d: ComplexSequence
    e: ComplexSequence
    h: int

    @property
    def length(self) -> int:
        return self.descriptor.length


def companion_functions(desc: FamilyDescriptor):
    """The phase functions behind (a, b, d, e), in that order."""
    a_fn = gdj_quadratic(desc)
    q2 = desc.q // 2
    b_fn = a_fn.plus_linear(desc.pi[0], q2)
    d_fn = a_fn.plus_linear(desc.pi[-1], q2)
    e_fn = b_fn.plus_linear(desc.pi[-1], q2)
    return a_fn, b_fn, d_fn, e_fn


def build_family(desc: FamilyDescriptor) -> FamilyInstance:
    """Materialize the quadruple (a, b, d, e) for a descriptor with m >= 2."""
    if desc.m < 2:
        raise ValueError("companion construction needs m >= 2")
    seqs = [psi(boolean_to_phases(f)) for f in companion_functions(desc)]
    return FamilyInstance(
        descriptor=desc,
        a=seqs[0],
        b=seqs[1],
        d=seqs[2],
        e=seqs[3],
        h=2 ** (desc.m - 2),
    )


class Relation(Enum):
    GCP = "GCP"
    ACP = "ACP"
    CSS4 = "CSS4"


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one (clause, mask) correlation check."""

    theorem: int
    clause: int
    mask: int
    relation: Relation
    holds: bool
    residual: float
    mu: Optional[int] = None
    defect_value: Optional[complex] = None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "clause": self.clause,
            "mask": self.mask,
            "relation": self.relation.value,
            "holds": self.holds,
            "mu": self.mu,
            "defect_re": None if self.defect_value is None else self.defect_value.real,
            "defect_im": None if self.defect_value is None else self.defect_value.imag,
            "residual": self.residual,
        }


def _masked(av: np.ndarray, s: int) -> np.ndarray:
    return av * mask_weights(s, len(av))


def _check_gcp(av, bv, theorem, clause, s, tol) -> TheoremVerdict:
    rep = is_gcp(_masked(av, s), _masked(bv, s), tol)
    return TheoremVerdict(
        theorem=theorem,
        clause=clause,
        mask=s,
        relation=Relation.GCP,
        holds=rep.ok,
        residual=rep.max_residual,
    )


def _check_css4(av, bv, dv, ev, theorem, clause, s, tol) -> TheoremVerdict:
    quad = [_masked(v, s) for v in (av, bv, dv, ev)]
    rep = is_css(quad, tol)
    return TheoremVerdict(
        theorem=theorem,
        clause=clause,
        mask=s,
        relation=Relation.CSS4,
        holds=rep.ok,
        residual=rep.max_residual,
    )


def _check_acp(
    av,
    bv,
    theorem,
    clause,
    s,
    tol,
    expected_mu: int,
    expected_magnitude: float,
    expected_defect: Optional[complex],
) -> TheoremVerdict:
    ma, mb = _masked(av, s), _masked(bv, s)
    rep = detect_acp(ma, mb, tol)
    errors = [rep.zero_energy]
    # the masked pair keeps H live tones per retained block in each sequence
    energy = float(np.sum(np.abs(ma) ** 2) + np.sum(np.abs(mb) ** 2))
    expected_energy = 2.0 * (len(av) // 4) * bin(s).count("1")
    errors.append(abs(energy - expected_energy))
    holds = rep.is_acp and rep.mu == expected_mu
    if holds:
        if expected_defect is None:
            errors.append(abs(abs(rep.defect_value) - expected_magnitude))
        else:
            errors.append(abs(rep.defect_value - expected_defect))
    residual = float(max(errors))
    holds = bool(holds and residual <= tol)
    return TheoremVerdict(
        theorem=theorem,
        clause=clause,
        mask=s,
        relation=Relation.ACP,
        holds=holds,
        residual=residual,
        mu=rep.mu,
        defect_value=rep.defect_value,
    )


def _require(inst: FamilyInstance, kind: Family, theorem: int) -> None:
    if inst.descriptor.theorem is not kind:
        raise ValueError(f"theorem {theorem} applies to {kind.value} instances")


def _arrays(inst: FamilyInstance):
    return tuple(as_complex_array(v) for v in (inst.a, inst.b, inst.d, inst.e))


def verify_theorem_1(inst: FamilyInstance, tol: Optional[float] = None) -> List[TheoremVerdict]:
    """Contiguous masks of the first family: ACPs on the 3-block masks
    with defect 2H at shift 2H and a known phase, exact pairs elsewhere."""
    _require(inst, Family.X, 1)
    av, bv, _, _ = _arrays(inst)
    desc = inst.descriptor
    if tol is None:
        tol = default_tolerance(len(av))
    h, q = inst.h, desc.q
    c_m = desc.c_k[desc.m - 1]
    out = []
    for s in (7, 14):
        exponent = (-(q // 2) * (s // 7 - 1) - c_m) % q
        defect = 2.0 * h * np.exp(2j * np.pi * exponent / q)
        out.append(_check_acp(av, bv, 1, 1, s, tol, 2 * h, 2.0 * h, defect))
    for s in (3, 6, 12):
        out.append(_check_gcp(av, bv, 1, 2, s, tol))
    for s in (1, 2, 4, 8):
        out.append(_check_gcp(av, bv, 1, 3, s, tol))
    return out


def verify_theorem_2(inst: FamilyInstance, tol: Optional[float] = None) -> List[TheoremVerdict]:
    """Contiguous masks of the second family: ACPs with defect 2H at shift H,
    two 4-sequence complementary sets, exact pairs elsewhere."""
    _require(inst, Family.Y, 2)
    av, bv, dv, ev = _arrays(inst)
    desc = inst.descriptor
    if tol is None:
        tol = default_tolerance(len(av))
    h, q = inst.h, desc.q
    c_prev = desc.c_k[desc.m - 2]
    out = []
    for s in (7, 14):
        exponent = (-(q // 2) * (s // 7 - 1) - c_prev) % q
        defect = 2.0 * h * np.exp(2j * np.pi * exponent / q)
        out.append(_check_acp(av, bv, 2, 1, s, tol, h, 2.0 * h, defect))
    for s in (3, 12):
        out.append(_check_css4(av, bv, dv, ev, 2, 2, s, tol))
    out.append(_check_gcp(av, bv, 2, 3, 6, tol))
    for s in (1, 2, 4, 8):
        out.append(_check_gcp(av, bv, 2, 4, s, tol))
    return out


def verify_theorem_3(inst: FamilyInstance, tol: Optional[float] = None) -> List[TheoremVerdict]:
    """Non-contiguous masks of the first family: ACPs with |defect| = 2H at
    shift 2H, one exact pair, two 4-sequence complementary sets."""
    _require(inst, Family.X, 3)
    av, bv, dv, ev = _arrays(inst)
    if tol is None:
        tol = default_tolerance(len(av))
    h = inst.h
    out = []
    for s in (11, 13):
        out.append(_check_acp(av, bv, 3, 1, s, tol, 2 * h, 2.0 * h, None))
    out.append(_check_gcp(av, bv, 3, 2, 9, tol))
    for s in (5, 10):
        out.append(_check_css4(av, bv, dv, ev, 3, 3, s, tol))
    return out


def verify_theorem_4(inst: FamilyInstance, tol: Optional[float] = None) -> List[TheoremVerdict]:
    """Non-contiguous masks of the second family: ACPs with |defect| = 2H at
    shift H, exact pairs on the rest."""
    _require(inst, Family.Y, 4)
    av, bv, _, _ = _arrays(inst)
    if tol is None:
        tol = default_tolerance(len(av))
    h = inst.h
    out = []
    for s in (11, 13):
        out.append(_check_acp(av, bv, 4, 1, s, tol, h, 2.0 * h, None))
    for s in (5, 9, 10):
        out.append(_check_gcp(av, bv, 4, 2, s, tol))
    return out


def verify_instance(inst: FamilyInstance, tol: Optional[float] = None) -> List[TheoremVerdict]:
    """All 14 per-mask verdicts that apply to the instance's family."""
    if inst.descriptor.theorem is Family.X:
        return verify_theorem_1(inst, tol) + verify_theorem_3(inst, tol)
    if inst.descriptor.theorem is Family.Y:
        return verify_theorem_2(inst, tol) + verify_theorem_4(inst, tol)
    raise ValueError("per-mask guarantees exist only for the x and y families")


def _perm_unrank(rank: int, items: Sequence[int]) -> List[int]:
    pool = list(items)
    out = []
    for k in range(len(pool), 0, -1):
        f = math.factorial(k - 1)
        idx, rank = divmod(rank, f)
        out.append(pool.pop(idx))
    return out


def enumerate_families(
    kind: Family,
    m: int,
    q: int,
    limit: int = 500,
    seed: int = 0,
) -> List[FamilyDescriptor]:
    """Descriptors of the chosen family at (m, q), at most limit of them.

    The full space has (m-2)! * q^(m+1) members: the free prefix pi(1..m-2)
    ranges over permutations of {1..m-2} while the last two positions are
    pinned by the family, and every (c_1..c_m, c) is allowed.  When the
    space is no larger than limit, all members are returned in rank order;
    otherwise a reproducible sample of limit ranks is drawn with the seed.
    """
    if kind not in (Family.X, Family.Y):
        raise ValueError("enumeration covers the x and y families")
    if m < 2:
        raise ValueError("m must be >= 2")
    if limit < 1:
        raise ValueError("limit must be >= 1")
    total = math.factorial(m - 2) * q ** (m + 1)
    if total <= limit:
        ranks: Iterable[int] = range(total)
    else:
        ranks = sorted(random.Random(seed).sample(range(total), limit))
    coeff_space = q ** (m + 1)
    out = []
    for rank in ranks:
        perm_rank, coeff_rank = divmod(rank, coeff_space)
        prefix = _perm_unrank(perm_rank, range(1, m - 1))
        tail = [m - 1, m] if kind is Family.X else [m, m - 1]
        digits = []
        rest = coeff_rank
        for _ in range(m + 1):
            rest, digit = divmod(rest, q)
            digits.append(digit)
        out.append(
            FamilyDescriptor(
                theorem=kind,
                m=m,
                q=q,
                pi=tuple(prefix + tail),
                c_k=tuple(digits[: m]),
                c=digits[m],
            )
        )
    return out


def zadoff_chu(n_zc: int, root: int) -> ComplexSequence:
    """The length-n_zc root-r sequence exp(-pi j r i (i+1) / n_zc), n_zc odd."""
    if n_zc < 1 or n_zc % 2 == 0:
        raise ValueError("length must be a positive odd integer")
    if math.gcd(root, n_zc) != 1:
        raise ValueError("root must be coprime to the length")
    i = np.arange(n_zc)
    values = np.exp(-1j * np.pi * root * i * (i + 1) / n_zc)
    return ComplexSequence(tuple(values.tolist()))


def extend_minus_one(a) -> ComplexSequence:
    """Append a single -1 entry, the padding used to reach a power of two."""
    av = as_complex_array(a)
    return ComplexSequence(tuple(av.tolist()) + (complex(-1.0),))


def m_sequence(taps: Iterable[int], init: Sequence[int], n: int) -> ComplexSequence:
    """Maximal-length register sequence mapped to +/-1, period n = 2^d - 1.

    taps names the exponents of the feedback polynomial including the
    degree d, e.g. {5, 2} for x^5 + x^2 + 1.  The register recurrence is
    b[i] = b[i-d] xor (xor of b[i-d+t] for the inner taps t), seeded by the
    d bits of init (all-zero is rejected).  Bits map 0 -> +1, 1 -> -1.
    The stream's minimal period is checked to equal n, so a non-primitive
    polynomial is reported instead of silently truncating a short cycle.
    """
    tap_set = sorted(set(int(t) for t in taps))
    if len(tap_set) < 1:
        raise ValueError("taps must name at least the register degree")
    degree = tap_set[-1]
    if degree < 2:
        raise ValueError("register degree must be >= 2")
    inner = tap_set[:-1]
    if inner and inner[0] < 1:
        raise ValueError("taps must be positive")
    state = [int(v) for v in init]
    if len(state) != degree:
        raise ValueError(f"init must supply exactly {degree} bits")
    if any(v not in (0, 1) for v in state):
        raise ValueError("init bits must be 0 or 1")
    if not any(state):
        raise ValueError("the all-zero state never leaves itself")
    if n != 2 ** degree - 1:
        raise ValueError(f"a degree-{degree} register has period {2 ** degree - 1}, not {n}")

    bits = list(state)
    for i in range(degree, n):
        new = bits[i - degree]
        for t in inner:
            new ^= bits[i - degree + t]
        bits.append(new)

    # maximal length demands that no proper divisor of n is a period
    for prime in _prime_factors(n):
        span = n // prime
        if all(bits[i] == bits[i + span] for i in range(n - span)):
            raise ValueError(
                f"taps {tap_set} are not primitive: the stream repeats every {span} bits"
            )
    return ComplexSequence(tuple(1.0 - 2.0 * b for b in bits))


def _prime_factors(n: int) -> List[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out
