import cmath
import json
import math

import pytest

import c2qhr


def test_eta_at_i():
    assert abs(c2qhr.eta(1j) - math.gamma(0.25) / (2 * math.pi ** 0.75)) < 1e-13


def test_theta_and_vartheta():
    assert abs(c2qhr.theta(1, 2, 1j, 0.0) - 0.45679) < 1e-5
    assert abs(c2qhr.vartheta(1, 1, 1j, 0.0)) < 1e-14


def test_gauss_sum():
    assert abs(c2qhr.gauss_sum(2) - (2 + 2j)) < 1e-14


def test_weights():
    assert c2qhr.weights(-1) == [(1, 2), (2, 1), (2, 3), (3, 2)]


def test_character_rejects_parity():
    with pytest.raises(c2qhr.Error) as info:
        c2qhr.character(-1, 1, 3, 1j, 0.1, 0.23)
    assert info.value.kind == "BadArgument"


def test_qhr_character_is_finite():
    v = c2qhr.qhr_character("+", -1, 1, 2, 1j, 0.13)
    assert cmath.isfinite(v)


def test_run_suite():
    report = c2qhr.run_suite("gauss", seed=3)
    assert report["pass"]
    assert len(report["identities"]) == 20
    with pytest.raises(c2qhr.Error) as info:
        c2qhr.run_suite("nope")
    assert info.value.kind == "UnknownSuite"


def test_emit_matrix():
    data = json.loads(c2qhr.emit_matrix("ch_ST2S", -1, "json"))
    assert data["rows"] == 4
