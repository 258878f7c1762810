"""Aperiodic auto/cross-correlation and complementarity predicates.

All correlations are the aperiodic kind:

    R_{a,b}(tau) = sum_{i=0}^{L-1-tau} a(i) conj(b(i+tau)),   0 <= tau < L

with the conjugate-symmetric extension for negative shifts and zero for
|tau| >= L.  Sums are evaluated directly (no spectral shortcut); zeros from
nulled subcarriers participate as literal zeros, sequences are never
compacted.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np


def default_tolerance(length: int) -> float:
    """Absolute predicate tolerance, 1e-9 per sequence element."""
    return 1e-9 * length


def as_complex_array(seq) -> np.ndarray:
    """Accept ComplexSequence-like objects or plain array-likes."""
    return np.asarray(getattr(seq, "values", seq), dtype=complex)


def xcorr(a, b, tau: int) -> complex:
    """Aperiodic cross-correlation of a against b at shift tau."""
    av = as_complex_array(a)
    bv = as_complex_array(b)
    if len(av) != len(bv):
        raise ValueError(f"length mismatch: {len(av)} vs {len(bv)}")
    L = len(av)
    if abs(tau) >= L:
        return 0j
    if tau < 0:
        return complex(np.conj(xcorr(b, a, -tau)))
    return complex(np.dot(av[: L - tau], np.conj(bv[tau:])))


def crosscorr_vector(a, b) -> np.ndarray:
    """R_{a,b}(tau) for tau = 0..L-1 as one array."""
    av = as_complex_array(a)
    bv = as_complex_array(b)
    if len(av) != len(bv):
        raise ValueError(f"length mismatch: {len(av)} vs {len(bv)}")
    L = len(av)
    # np.correlate computes direct sliding sums; index L-1-tau holds R(tau)
    full = np.correlate(av, bv, mode="full")
    return full[L - 1 :: -1].copy()


@dataclass(frozen=True)
class CorrelationVector:
    """Autocorrelation values indexed by shift tau = 0..L-1."""

    values: Tuple[complex, ...]

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        if vals and abs(vals[0].imag) > 1e-9:
            raise ValueError("R(0) must be real (it is an energy)")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, tau):
        return self.values[tau]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex)

    @property
    def energy(self) -> float:
        return self.values[0].real


def autocorr_vector(a) -> CorrelationVector:
    """Aperiodic autocorrelation of a for all shifts 0..L-1."""
    av = as_complex_array(a)
    vec = crosscorr_vector(av, av)
    energy = float(np.sum(np.abs(av) ** 2))
    if abs(vec[0].real - energy) > 1e-9 * max(1, len(av)):
        raise AssertionError("autocorrelation at shift 0 does not match energy")
    return CorrelationVector(tuple(vec))


@dataclass(frozen=True)
class CssReport:
    """Result of a complementarity check over a set of sequences.

    Truthiness follows ok, so reports drop into boolean contexts.
    """

    ok: bool
    max_residual: float
    worst_shift: Optional[int]
    size: int
    tolerance: float

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "max_residual": self.max_residual,
            "worst_shift": self.worst_shift,
            "size": self.size,
            "tolerance": self.tolerance,
        }


def _autocorr_sum(seqs: Sequence) -> np.ndarray:
    arrays = [as_complex_array(s) for s in seqs]
    if not arrays:
        raise ValueError("empty sequence set")
    L = len(arrays[0])
    if any(len(v) != L for v in arrays):
        raise ValueError("mixed lengths in sequence set")
    total = np.zeros(L, dtype=complex)
    for v in arrays:
        total += crosscorr_vector(v, v)
    return total


def is_css(seqs: Sequence, tol: Optional[float] = None) -> CssReport:
    """Do the autocorrelations of the set sum to zero at every shift >= 1?"""
    total = _autocorr_sum(seqs)
    L = len(total)
    if tol is None:
        tol = default_tolerance(L)
    if L == 1:
        return CssReport(True, 0.0, None, len(seqs), tol)
    mags = np.abs(total[1:])
    worst = int(np.argmax(mags)) + 1
    max_residual = float(mags[worst - 1])
    return CssReport(max_residual <= tol, max_residual, worst, len(seqs), tol)


def is_gcp(a, b, tol: Optional[float] = None) -> CssReport:
    """Golay complementary pair test: is_css restricted to two sequences."""
    return is_css((a, b), tol)


@dataclass(frozen=True)
class AcpReport:
    """Almost-complementary-pair detection result.

    mu is the single defect shift and defect_value the (nonzero) sum there;
    zero_energy is the largest residual over every other nonzero shift.
    """

    is_acp: bool
    mu: Optional[int]
    defect_value: Optional[complex]
    zero_energy: float
    tolerance: float

    def __bool__(self) -> bool:
        return self.is_acp

    def to_json(self) -> dict:
        return {
            "is_acp": self.is_acp,
            "mu": self.mu,
            "defect_re": None if self.defect_value is None else self.defect_value.real,
            "defect_im": None if self.defect_value is None else self.defect_value.imag,
            "zero_energy": self.zero_energy,
            "tolerance": self.tolerance,
        }


def detect_acp(a, b, tol: Optional[float] = None) -> AcpReport:
    """Detect a pair whose autocorrelation sum is zero at all nonzero shifts
    except exactly one (the defect shift mu).  A perfect pair (no defect) or
    a pair with two or more defects both report is_acp = False."""
    total = _autocorr_sum((a, b))
    L = len(total)
    if tol is None:
        tol = default_tolerance(L)
    mags = np.abs(total[1:])
    above = np.nonzero(mags > tol)[0]
    if len(above) == 1:
        mu = int(above[0]) + 1
        others = np.delete(mags, above[0])
        zero_energy = float(others.max()) if len(others) else 0.0
        return AcpReport(True, mu, complex(total[mu]), zero_energy, tol)
    zero_energy = float(mags.max()) if len(mags) else 0.0
    return AcpReport(False, None, None, zero_energy, tol)


class MatePreconditionError(ValueError):
    """A Golay-mate check was attempted on a pair that is not itself a GCP."""


def is_golay_mate(pair1: Tuple, pair2: Tuple, tol: Optional[float] = None) -> bool:
    """Is pair2 a Golay mate of pair1?

    With pair1 = (a, b) and pair2 = (c, d), both pairs must individually be
    GCPs (violations raise MatePreconditionError, distinct from a plain
    False), and the test is

        max_{0 <= tau < L} |R_{a,c}(tau) + R_{b,d}(tau)| <= tol.
    """
    a, b = pair1
    c, d = pair2
    arrays = [as_complex_array(s) for s in (a, b, c, d)]
    L = len(arrays[0])
    if any(len(v) != L for v in arrays):
        raise ValueError("all four sequences must have equal length")
    if tol is None:
        tol = default_tolerance(L)
    if not is_gcp(a, b, tol):
        raise MatePreconditionError("first pair is not a complementary pair")
    if not is_gcp(c, d, tol):
        raise MatePreconditionError("second pair is not a complementary pair")
    cross = crosscorr_vector(arrays[0], arrays[2]) + crosscorr_vector(arrays[1], arrays[3])
    return bool(np.max(np.abs(cross)) <= tol)
