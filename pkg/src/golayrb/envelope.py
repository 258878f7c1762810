"""Instantaneous envelope power, PMEPR, IMEPR traces, and CSS-based bounds.

For a sequence a of length L the complex envelope over one symbol is
S(t) = sum_i a_i exp(2 pi j i t/T).  Its instantaneous power has the two
equivalent forms

    P(t) = |S(t)|^2 = R(0) + 2 Re sum_{tau>=1} R(tau) exp(2 pi j tau t/T)

and PMEPR is the supremum of P over the symbol divided by the average
power R(0).  The supremum is estimated on a uniform oversampled grid with
optional parabolic refinement of each local maximum.  Grid evaluation at
exactly L points per symbol (oversampling factor 1) gives the
symbol-spaced values used by the bundled reference tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .correlation import as_complex_array, crosscorr_vector


@dataclass(frozen=True)
class PmeprResult:
    """Peak-to-mean envelope power ratio and where the peak was found."""

    pmepr: float
    peak_time_fraction: float
    average_power: float
    oversampling_factor: int
    refined: bool

    def to_json(self) -> dict:
        return {
            "pmepr": self.pmepr,
            "peak_time_fraction": self.peak_time_fraction,
            "average_power": self.average_power,
            "oversampling_factor": self.oversampling_factor,
            "refined": self.refined,
        }


def average_power(a) -> float:
    """Mean envelope power over a symbol, equal to R(0)."""
    av = as_complex_array(a)
    return float(np.sum(np.abs(av) ** 2))


def instantaneous_power(a, t_frac: float) -> float:
    """P(t) from the correlation form, with t expressed as t/T in [0, 1)."""
    r = crosscorr_vector(a, a)
    L = len(r)
    tau = np.arange(1, L)
    phases = np.exp(-2j * np.pi * tau * t_frac)
    return float(r[0].real + 2.0 * np.sum(r[1:] * phases).real)


def power_grid(a, points: int) -> np.ndarray:
    """|S(t_n)|^2 on the uniform grid t_n = n/points, n = 0..points-1.

    Accepts a 2-D array of row sequences when points >= row length, which
    evaluates every row in one batched transform.
    """
    av = np.asarray(as_complex_array(a))
    L = av.shape[-1]
    if points < 1:
        raise ValueError("points must be >= 1")
    if points >= L:
        spectrum = points * np.fft.ifft(av, n=points, axis=-1)
        return np.abs(spectrum) ** 2
    if av.ndim != 1:
        raise ValueError("sub-length grids support only single sequences")
    # exp(2 pi j i n/points) depends on i mod points only: fold, then transform
    folded = np.zeros(points, dtype=complex)
    np.add.at(folded, np.arange(L) % points, av)
    return np.abs(points * np.fft.ifft(folded)) ** 2


def peak_on_grid(powers: np.ndarray, refine: bool) -> Tuple[float, float]:
    """Peak value of a periodic power trace and its fractional grid index.

    With refine, fits a parabola through each local maximum and its circular
    neighbours and returns the best vertex (never below the raw grid peak).
    """
    p = np.asarray(powers, dtype=float)
    best_idx = int(np.argmax(p))
    best_val = float(p[best_idx])
    best_pos = float(best_idx)
    if not refine or len(p) < 3:
        return best_val, best_pos
    left = np.roll(p, 1)
    right = np.roll(p, -1)
    den = left - 2.0 * p + right
    concave_max = (p >= left) & (p >= right) & (den < 0.0)
    if not np.any(concave_max):
        return best_val, best_pos
    offset = 0.5 * (left - right) / np.where(concave_max, den, -1.0)
    vertex = np.where(concave_max, p - 0.25 * (left - right) * offset, -np.inf)
    k = int(np.argmax(vertex))
    if vertex[k] > best_val:
        best_val = float(vertex[k])
        best_pos = (float(k) + float(offset[k])) % len(p)
    return best_val, best_pos


def pmepr(a, oversampling: int = 128, refine: bool = True) -> PmeprResult:
    """Estimate sup_t P(t) / P_av on an oversampled grid.

    oversampling must be at least 4; the grid has oversampling * L points
    per symbol.  Refinement interpolates between grid points, so the result
    approximates the continuous supremum (it can sit above every value the
    symbol-spaced reference tables print).
    """
    av = as_complex_array(a)
    avg = float(np.sum(np.abs(av) ** 2))
    if avg == 0.0:
        raise ValueError("PMEPR is undefined for the zero sequence")
    oversampling = int(oversampling)
    if oversampling < 4:
        raise ValueError("oversampling must be >= 4")
    n = oversampling * len(av)
    powers = power_grid(av, n)
    peak, pos = peak_on_grid(powers, refine)
    return PmeprResult(
        pmepr=peak / avg,
        peak_time_fraction=(pos / n) % 1.0,
        average_power=avg,
        oversampling_factor=oversampling,
        refined=bool(refine),
    )


def sampled_pmepr(a, oversampling: int = 1) -> PmeprResult:
    """Grid-only PMEPR at oversampling >= 1, without refinement.

    oversampling 1 evaluates the L symbol-spaced instants; this is the
    convention behind the bundled reference tables.
    """
    av = as_complex_array(a)
    avg = float(np.sum(np.abs(av) ** 2))
    if avg == 0.0:
        raise ValueError("PMEPR is undefined for the zero sequence")
    oversampling = int(oversampling)
    if oversampling < 1:
        raise ValueError("oversampling must be >= 1")
    n = oversampling * len(av)
    powers = power_grid(av, n)
    peak, pos = peak_on_grid(powers, refine=False)
    return PmeprResult(
        pmepr=peak / avg,
        peak_time_fraction=(pos / n) % 1.0,
        average_power=avg,
        oversampling_factor=oversampling,
        refined=False,
    )


def imepr_trace(a, points: int) -> np.ndarray:
    """Instantaneous-to-mean envelope power ratio P(t_n)/P_av on a grid."""
    if int(points) < 2:
        raise ValueError("a trace needs at least 2 points")
    avg = average_power(a)
    if avg == 0.0:
        raise ValueError("IMEPR is undefined for the zero sequence")
    return power_grid(a, int(points)) / avg


def css_pmepr_bound(seqs: Sequence, member_index: int) -> float:
    """The correlation-sum PMEPR bound for one member of a sequence set:

        ( sum_k R_k(0) + 2 sum_{tau>=1} |sum_k R_k(tau)| ) / R_i(0)

    For an exact complementary set of N equal-energy sequences this equals N.
    """
    arrays = [as_complex_array(s) for s in seqs]
    if not arrays:
        raise ValueError("empty sequence set")
    member = arrays[member_index]
    denom = float(np.sum(np.abs(member) ** 2))
    if denom == 0.0:
        raise ValueError("bound is undefined for a zero-energy member")
    total = np.zeros(len(arrays[0]), dtype=complex)
    for v in arrays:
        total += crosscorr_vector(v, v)
    return float((total[0].real + 2.0 * np.sum(np.abs(total[1:]))) / denom)


def convergence_delta(a, oversampling: int = 128, refine: bool = True) -> float:
    """|pmepr at 2k - pmepr at k|: the grid-doubling convergence certificate."""
    lo = pmepr(a, oversampling, refine)
    hi = pmepr(a, 2 * oversampling, refine)
    return abs(hi.pmepr - lo.pmepr)
