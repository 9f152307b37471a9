import math

import pytest

import sincgap


def test_sinc_values():
    assert sincgap.sinc(0.0) == 1.0
    assert abs(sincgap.sinc(3.0)) < 1e-15
    assert sincgap.sinc(0.5) == pytest.approx(2 / math.pi, rel=1e-15)


def test_sampling_is_reproducible():
    a = sincgap.sample_coefficients(10, seed=5)
    b = sincgap.sample_coefficients(10, seed=5)
    assert a == b and len(a) == 21
    assert a != sincgap.sample_coefficients(10, seed=6)


def test_zeros_are_zeros():
    a = sincgap.sample_coefficients(20, seed=3)
    zeros, unresolved = sincgap.find_real_zeros(a, -5.0, 5.0)
    assert unresolved == 0
    assert len(zeros) > 0
    for x in zeros:
        assert abs(sincgap.eval_series(a, complex(x, 0.0))) < 1e-8


def test_real_zeros_inside_rectangle():
    a = sincgap.sample_coefficients(20, seed=3)
    zeros, _ = sincgap.find_real_zeros(a, -5.0, 5.0)
    inside = [x for x in zeros if -2.3 < x < 2.3]
    # the thin rectangle only holds real zeros (complex ones come in pairs away from the axis)
    count = sincgap.count_zeros_rectangle(a, -2.3, 2.3, -0.01, 0.01)
    assert count == len(inside)


def test_volume_closed_forms():
    assert sincgap.volume(1, 0.7)[0] == pytest.approx(1.4, rel=1e-14)
    assert sincgap.volume(3, 0.5)[0] == pytest.approx(14 / 3 * 0.125, rel=1e-14)


def test_gap_estimate_and_errors():
    e = sincgap.estimate_gap(1.0, 2000, seed=2)
    assert 0.0 < e["p_hat"] < 0.5
    assert e["ci_lo"] <= e["p_hat"] <= e["ci_hi"]
    with pytest.raises(sincgap.ParameterError):
        sincgap.estimate_gap(0.1, 2000)


def test_rademacher_small_window():
    patterns, missed = sincgap.rademacher_zero_free(1, 2)
    assert missed == 0
    assert [1, 1, 1, 1, 1] in patterns


def test_cli_round_trip(tmp_path):
    out = tmp_path / "vol.csv"
    assert sincgap.run_cli(["volume", "--n", "2", "--epsilon", "1", "--out", str(out)]) == 0
    rows = [line for line in out.read_text().splitlines() if not line.startswith("#")]
    assert rows[0] == "n,epsilon,method,volume,error_estimate"
    assert float(rows[1].split(",")[3]) == pytest.approx(3.0)
    assert sincgap.run_cli(["volume", "--n", "0"]) == 2
