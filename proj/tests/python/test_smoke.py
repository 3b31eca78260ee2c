"""Smoke tests for the magnusforest extension module."""

from fractions import Fraction

import magnusforest as mf


def test_catalan_enumeration():
    assert [len(mf.enumerate_trees("rooted", n)) for n in range(7)] == [
        1, 1, 2, 5, 14, 42, 132]
    assert mf.enumerate_trees("rooted", 0) == ["[]"]


def test_rotation_and_statistics():
    assert mf.rotate("(. (. .))") == "[[][]]"
    assert mf.unrotate("[[[]]]") == "((. .) .)"
    assert mf.leaf_count("[[][]]") == 2
    assert mf.descent_count("(. (. .))") == 1
    assert mf.family("corolla", 3) == "[[][][]]"
    assert mf.tree_composition("[[[]][]]") == [2, 1]


def test_star_product_display():
    l1 = {"[[]]": Fraction(1)}
    product = mf.star(l1, l1, 2)
    assert product == {"[[][]]": Fraction(1), "[[[]]]": Fraction(1)}


def test_magnus_coefficients_exact():
    assert mf.magnus_coefficient("[[[]]]") == Fraction(1, 2)
    assert mf.magnus_coefficient("[[][]]") == Fraction(-1, 2)
    assert mf.bernoulli(4) == Fraction(-1, 30)
    series = mf.closed_magnus_series(4)
    oracle = mf.ladder_log_oracle(4)
    assert series == oracle


def test_permutation_layer():
    assert mf.standardize([3, 4, 1]) == [2, 3, 1]
    assert mf.psi([2, 1]) == "(. (. .))"
    assert mf.mps_coefficient([2, 1]) == Fraction(-1, 2)
    fibers = sum(len(mf.psi_fiber(t)) for t in mf.enumerate_trees("binary", 3))
    assert fibers == 6


def test_numeric_routes_agree():
    a = mf.default_path()
    s = Fraction(1, 4)
    assert mf.mps_omega(a, 3, s) == mf.closed_tree_omega(a, 3, s)
    assert mf.mps_omega(a, 3, s) == mf.prelie_omega_numeric(a, 3, s)
    scalar = [[[Fraction(1)]]]
    assert mf.mps_omega(scalar, 4, s) == [[s]]


def test_exactness_round_trip():
    a = mf.default_path()
    omega1 = mf.mps_omega(a, 1, Fraction(1, 4))
    assert omega1 == [[Fraction(0), Fraction(1, 4)],
                      [Fraction(-9, 32), Fraction(0)]]


def test_verify_hook():
    ok, checks = mf.run_verify("axioms", 4)
    assert ok
    assert any(name == "split-convention" for name, _, _ in checks)
