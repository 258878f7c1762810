"""Correlation-layer tests: the direct-sum definitions are the oracle."""
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from golayrb import (
    ComplexSequence,
    MatePreconditionError,
    autocorr_vector,
    crosscorr_vector,
    default_tolerance,
    detect_acp,
    is_css,
    is_gcp,
    is_golay_mate,
    xcorr,
)

from conftest import naive_xcorr

unit_entries = st.sampled_from([1.0, -1.0, 1j, -1j])
unit_lists = st.lists(unit_entries, min_size=1, max_size=24)


def test_xcorr_known_values():
    a = (1, 1, 1, -1)
    b = (1, -1, 1, 1)
    assert xcorr(a, b, 3) == pytest.approx(1)
    expected = (4, 1, 0, -1)
    for tau, value in enumerate(expected):
        assert xcorr(a, a, tau) == pytest.approx(value)


def test_xcorr_beyond_length_is_zero():
    assert xcorr((1, 1), (1, 1), 2) == 0j
    assert xcorr((1, 1), (1, 1), -5) == 0j


def test_xcorr_length_mismatch():
    with pytest.raises(ValueError):
        xcorr((1, 1), (1, 1, 1), 0)


@given(unit_lists, st.integers(min_value=0, max_value=30))
def test_xcorr_matches_naive_sum(values, tau):
    a = values
    b = values[::-1]
    assert xcorr(a, b, tau) == pytest.approx(naive_xcorr(a, b, tau), abs=1e-12)


@given(unit_lists, st.integers(min_value=1, max_value=23))
def test_xcorr_negative_shift_conjugate_symmetry(values, tau):
    b = [v * 1j for v in values]
    assert xcorr(values, b, -tau) == pytest.approx(np.conj(xcorr(b, values, tau)), abs=1e-12)


@given(unit_lists)
def test_crosscorr_vector_indexing(values):
    vec = crosscorr_vector(values, values)
    for tau in range(len(values)):
        assert vec[tau] == pytest.approx(naive_xcorr(values, values, tau), abs=1e-12)


def test_autocorr_zero_shift_is_energy():
    seq = ComplexSequence((1.0, 0.0, -1j, 1.0))
    vec = autocorr_vector(seq)
    assert vec.values[0] == pytest.approx(3.0)
    assert vec.energy == pytest.approx(3.0)


class TestCssAndGcp:
    def test_classic_pair(self):
        rep = is_gcp((1, 1), (1, -1))
        assert rep.ok
        assert rep.max_residual <= 1e-12

    def test_length_four_pair(self):
        # (1,1,1,-1) pairs with (1,1,-1,1)
        rep = is_gcp((1, 1, 1, -1), (1, 1, -1, 1))
        assert bool(rep)

    def test_non_pair(self):
        rep = is_gcp((1, 1), (1, 1))
        assert not rep.ok
        assert rep.max_residual == pytest.approx(2.0)
        assert rep.worst_shift == 1

    def test_singleton_length_one(self):
        assert is_css([(1.0,)]).ok

    def test_mixed_lengths_rejected(self):
        with pytest.raises(ValueError):
            is_css([(1, 1), (1, 1, 1)])

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            is_css([])

    def test_report_serialization(self):
        rep = is_gcp((1, 1), (1, -1))
        payload = rep.to_json()
        assert payload["ok"] is True
        assert payload["size"] == 2


class TestDetectAcp:
    def test_single_defect(self):
        # identical pairs stack all correlation at the top shift
        rep = detect_acp((1, 1), (1, 1))
        assert rep.is_acp
        assert rep.mu == 1
        assert rep.defect_value == pytest.approx(2.0)

    def test_perfect_pair_is_not_acp(self):
        rep = detect_acp((1, 1), (1, -1))
        assert not rep.is_acp
        assert rep.mu is None

    def test_two_defects_rejected(self):
        rep = detect_acp((1, 1, 1), (1, 1, 1))
        assert not rep.is_acp

    def test_masked_family_pair(self, x4):
        a7 = np.asarray(x4.a.values) * np.repeat([1, 1, 1, 0], 4)
        b7 = np.asarray(x4.b.values) * np.repeat([1, 1, 1, 0], 4)
        rep = detect_acp(a7, b7)
        assert rep.is_acp
        assert rep.mu == 2 * x4.h
        assert abs(rep.defect_value) == pytest.approx(2 * x4.h)
        assert rep.zero_energy <= default_tolerance(16)

    def test_serialization_splits_defect(self):
        rep = detect_acp((1, 1), (1, 1))
        payload = rep.to_json()
        assert payload["mu"] == 1
        assert payload["defect_re"] == pytest.approx(2.0)
        assert payload["defect_im"] == pytest.approx(0.0)


class TestGolayMate:
    def test_known_mate(self, x4):
        assert is_golay_mate((x4.a, x4.b), (x4.d, x4.e))

    def test_non_mate_pairs(self):
        # two copies of the same pair cross-correlate with themselves
        assert not is_golay_mate(((1, 1), (1, -1)), ((1, 1), (1, -1)))

    def test_precondition_reported_distinctly(self):
        with pytest.raises(MatePreconditionError):
            is_golay_mate(((1, 1), (1, 1)), ((1, 1), (1, -1)))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_golay_mate(((1, 1), (1, -1)), ((1, 1, 1, -1), (1, 1, -1, 1)))


def test_default_tolerance_scales_with_length():
    assert default_tolerance(8) == pytest.approx(8e-9)
    assert default_tolerance(512) == pytest.approx(512e-9)
