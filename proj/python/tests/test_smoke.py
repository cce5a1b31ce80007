import json
import math

import pytest

import qlmass


def test_schwarzschild_masses():
    g = qlmass.build_schwarzschild(1.0)
    for r in (0.6, 2.0, 50.0):
        assert qlmass.hawking_mass(g, r) == pytest.approx(1.0, abs=1e-12)
        assert qlmass.brown_york_mass(g, r) == pytest.approx(1.0 + 0.5 / r, abs=1e-12)
    assert qlmass.adm_mass(g) == 1.0


def test_g1_horizon_and_penrose():
    g = qlmass.build_g1(0.05)
    hs = qlmass.find_horizons(g)
    assert [h.kind for h in hs] == ["bulge", "neck"]
    assert hs[-1].r == pytest.approx(640.0, rel=1e-10)
    assert hs[-1].outermost
    assert abs(qlmass.penrose_check(g)) < 1e-8


def test_errors_are_typed():
    with pytest.raises(qlmass.InvalidParams):
        qlmass.build_g2(1.0, 0.5, 3.0)
    with pytest.raises(qlmass.FlowObstruction):
        qlmass.imcf_trace(qlmass.build_g1(0.05), 1.0, 10.0)
    with pytest.raises(qlmass.Error):
        qlmass.build_g1(-1.0)


def test_imcf_and_alpha():
    g = qlmass.build_g2(0.5, 1.0, 2.0)
    samples = qlmass.imcf_trace(g, 0.01, 100.0, 50)
    assert qlmass.geroch_report(samples) >= -1e-9
    flat = qlmass.build_flat()
    assert qlmass.alpha_coefficient(flat, 1.0, 3.0) == pytest.approx(math.sqrt(1 / (8 * math.pi)))
    assert qlmass.m_omega(flat, 1.0)["value"] == 0.0


def test_criteria_and_cli_runner():
    rep = qlmass.evaluate_criteria(qlmass.build_flat(), 1.0)
    assert not any(sat for sat, _ in rep["verdicts"].values())
    cfg = json.dumps({"metric": {"kind": "schwarzschild", "m": 1.0}, "masses": {"radii": [1, 2, 4]}})
    out = qlmass.run(cfg, "masses", "json")
    rows = json.loads(out)["tables"]["masses"]
    assert [row["m_H"] for row in rows] == pytest.approx([1.0, 1.0, 1.0])
    assert out == qlmass.run(cfg, "masses", "json")
    with pytest.raises(qlmass.ValidationError):
        qlmass.run(json.dumps({"metric": {"kind": "flat"}, "bogus": 1}), "masses")
