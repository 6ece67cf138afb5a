"""Acceptance gate: every criterion at its stated scale and tolerance.

Each test prints one pass/fail line; the suites behind them are seeded and
deterministic, so failures are reproducible with `ein3 verify`.
"""

import subprocess
import sys

import pytest

from ein3 import oracle


def _gate(name, report):
    status = "PASS" if not report["failures"] else "FAIL"
    print(f"[{status}] {name}: trials={report['trial_count']} "
          f"max_violation={report['max_violation']:.3e}")
    assert not report["failures"], report["failures"][:10]


def test_criterion_1_torus_trichotomy():
    """Kind vs eta sign, carrier signature, and probed causal character on
    1000 seeded unit-spacelike pairs, outside the |eta-1| < 1e-6 band."""
    _gate("criterion 1: torus-pair trichotomy",
          oracle.suite_torus_trichotomy(trials=1000, seed=7))


def test_criterion_2_eta_bridge():
    """|eta_from_det - mu-route eta| < 1e-9 on 1000 splittings and maps
    with |det + 1| > 1e-3."""
    report = oracle.suite_eta_bridge(trials=1000, seed=7)
    _gate("criterion 2: eta bridge", report)
    assert report["max_violation"] < 1e-9


def test_criterion_3_symplectic_identities():
    """omega* normalization, adjugate identity, reflection/complement match,
    transversality vs intersection dimension."""
    _gate("criterion 3: symplectic identities",
          oracle.suite_symplectic_identities(trials=1000, seed=7))


def test_criterion_4_maslov_bridge():
    """Maslov index 2/0/undefined vs timelike/spacelike/lightlike on 1000
    configurations."""
    _gate("criterion 4: Maslov/causal bridge",
          oracle.suite_maslov_bridge(trials=1000, seed=7))


def test_criterion_5_photon_avoidance():
    """Photon disjointness sign test vs the 10^4-sample oracle and the
    constructive witness with residual < 1e-9, on 1000 pairs with margins
    above 1e-6."""
    report = oracle.suite_photon_avoidance(trials=1000, seed=7)
    _gate("criterion 5: photon avoidance", report)
    assert report["max_violation"] < 1e-9  # witness membership residual


def test_criterion_6_surface_disjointness():
    """200 certified-disjoint pairs (margins > 1e-3, sampled gap > 1e-4 over
    ~10^5 point pairs) and 200 constructed intersecting pairs."""
    report = oracle.suite_surface_disjointness(trials=200, seed=7)
    _gate("criterion 6: surface disjointness", report)
    assert report["max_violation"] > 1e-4  # least sampled gap among disjoint


def test_criterion_7_stem_only_impossibility():
    """200 pairs with sampled stem-stem contact below 1e-4 all exhibit a
    stem-wing contact below 1e-4."""
    report = oracle.suite_stem_only(trials=200, seed=7)
    _gate("criterion 7: stem-only impossibility", report)
    assert report["max_violation"] < 1e-4  # worst stem-wing gap found


def test_criterion_8_ads_equivalences():
    """ads_disjoint / dgk_criterion / surfaces_disjoint agree on 1000
    configurations with margins above 1e-6; boundary-lift equivariance and
    the trace-form identity hold to 1e-12; exact zero horocycle distance."""
    report = oracle.suite_ads_equivalence(trials=1000, seed=7)
    _gate("criterion 8: AdS equivalences", report)
    assert report["max_violation"] < 1e-12


def test_criterion_9_determinism():
    """`ein3 verify --suite all --seed 7` twice gives byte-identical output."""
    cmd = [sys.executable, "-m", "ein3.cli", "verify", "--suite", "all",
           "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    identical = first.stdout == second.stdout
    status = "PASS" if identical else "FAIL"
    print(f"[{status}] criterion 9: determinism ({len(first.stdout)} bytes)")
    assert identical
    assert first.stdout  # non-empty report


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
