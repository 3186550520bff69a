import math

import numpy as np
import pytest

import octslice as oc


def e(i):
    return oc.basis(i)


def test_non_associativity():
    assert oc.mul(oc.mul(e(1), e(2)), e(4)) == pytest.approx(e(7))
    assert oc.mul(e(1), oc.mul(e(2), e(4))) == pytest.approx([-c for c in e(7)])


def test_table_and_inverse():
    table = oc.multiplication_table()
    assert table[1][2] == (1, 3)
    assert table[2][1] == (-1, 3)
    q = [1.0, 2.0, 0, 0, -1.0, 0, 0.5, 0]
    assert oc.mul(q, oc.inv(q)) == pytest.approx(e(0), abs=1e-15)
    with pytest.raises(oc.DomainError):
        oc.inv([0.0] * 8)


def test_left_mult_matrix():
    L = oc.left_mult_matrix(e(3))
    assert isinstance(L, np.ndarray) and L.shape == (8, 8)
    assert np.allclose(L @ L, -np.eye(8))
    D = oc.difference_inverse(1, [0, -1, 0, 0, 0, 0, 0, 0])
    assert np.allclose(D @ (oc.left_mult_matrix(e(1)) * 2), np.eye(8))


def test_slice_point_and_star_power():
    q = oc.SlicePoint([0.0], [-1.0], 1)
    assert q.y == [1.0]
    assert q.unit == pytest.approx([-c for c in e(1)])
    p = oc.SlicePoint([0.0], [0.0])
    got = oc.star_power_apply(oc.SlicePoint([0.0], [1.0], 1), p, [2], e(2))
    assert got == pytest.approx([-c for c in e(2)], abs=1e-15)


def test_weak_sqrt_values():
    f = oc.WeakSqrt()
    r2 = math.sqrt(2.0)
    assert f(oc.SlicePoint([0.0], [1.0], 2)) == pytest.approx([-1 / r2, 0, -1 / r2, 0, 0, 0, 0, 0])
    assert f(oc.SlicePoint([0.0], [-1.0], 2)) == pytest.approx([1 / r2, 0, -1 / r2, 0, 0, 0, 0, 0])
    assert not f.contains(oc.SlicePoint([3.0], [0.0]))
    with pytest.raises(oc.DomainError):
        f(oc.SlicePoint([3.0], [0.0]))
    report = oc.verify_not_slice()
    assert report["residual"] == pytest.approx(r2, abs=1e-12)


def test_mk_worked_example():
    b = oc.bound_check_mk(e(0), [1.0, 1.0, 0, 0, 0, 0, 0, 0], 1, 2)
    assert b["holds"]
    assert (b["lower"], b["value"], b["upper"]) == pytest.approx((1.0, math.sqrt(3), math.sqrt(5)))


@pytest.mark.parametrize("command", ["verify-algebra", "verify-slice", "taylor-demo", "sqrt-example"])
def test_suites_pass(command):
    suites = oc.run_suites(command, seed=3, probes=50)
    assert suites and all(s["pass"] for s in suites)


def test_unknown_suite():
    with pytest.raises(ValueError):
        oc.run_suites("bogus")
