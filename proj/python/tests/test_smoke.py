from fractions import Fraction

import pytest

import kcell

THETA = {
    "half_edges": 6,
    "vertices": [{"cycles": [[0, 2, 4]], "defect": 0}, {"cycles": [[1, 3, 5]], "defect": 0}],
    "face_labels": {"0": 1},
}


def test_tau0_cubed():
    r = kcell.intersection_number(0, [0, 0, 0])
    assert r.value == 1
    assert r.perimeters == [3, 5, 7]
    assert all(isinstance(p, Fraction) for p in r.perimeters)


def test_tau1_genus_one_at_two_perimeters():
    for p in ([Fraction(7, 2)], kcell.random_generic_perimeters(1, 11)):
        assert kcell.intersection_number(1, [1], p).value == Fraction(1, 24)


def test_dimension_mismatch_raises():
    with pytest.raises(kcell.KcellError):
        kcell.intersection_number(0, [1, 0, 0])


def test_theta_graph():
    info = kcell.inspect(THETA)
    assert info["genus"] == 1
    assert info["automorphisms"] == 6
    merged = kcell.contract(THETA, [0])
    assert len(merged["vertices"]) == 1
    assert kcell.inspect(merged)["genus"] == 1


def test_enumeration_counts():
    assert len(kcell.enumerate_trivalent(1, 1)) == 1
    assert len(kcell.enumerate_trivalent(0, 4)) > 0


def test_fiber_integral_of_alpha():
    assert kcell.fiber_integral(THETA, 1, [1, 2, 3]) == -1


def test_full_map_is_mobius_invariant():
    # The second configuration is the first one moved by z -> 1/z.
    assert kcell.full_map(["0", "1", "inf", "2"]) == kcell.full_map(["inf", "1", "0", "1/2"])


def test_suites():
    for report in kcell.run_suite("model0", seed=3, scale=0.05):
        assert report["ok"], report["failures"]
