import math

import numpy as np
import pytest

from contframes import hilbert as hb
from contframes.errors import (
    ContractViolationError,
    InvalidParameterError,
    NotInvertibleError,
    ShapeMismatchError,
)


def random_matrix(rng, d):
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def test_inner_examples():
    assert hb.inner([1, 0], [0, 1]) == 0
    assert hb.inner([1, 1j], [1, 1j]) == pytest.approx(2.0)
    with pytest.raises(ShapeMismatchError):
        hb.inner([1, 0], [1, 0, 0])


def test_inner_linear_first_argument():
    rng = np.random.default_rng(0)
    for _ in range(30):
        x = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        y = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        a = complex(rng.standard_normal(), rng.standard_normal())
        direct = sum((a * xi) * np.conj(yi) for xi, yi in zip(x, y))
        assert abs(hb.inner(a * x, y) - direct) <= 1e-12 * max(1.0, abs(direct))
        assert abs(hb.inner(a * x, y) - a * hb.inner(x, y)) <= 1e-12


def test_adjoint():
    assert np.array_equal(hb.adjoint(np.eye(3)), np.eye(3))
    rng = np.random.default_rng(1)
    T = random_matrix(rng, 4)
    assert np.array_equal(hb.adjoint(hb.adjoint(T)), T)
    for _ in range(20):
        T = random_matrix(rng, 4)
        x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        y = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        lhs = hb.inner(T @ x, y)
        rhs = hb.inner(x, hb.adjoint(T) @ y)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


def test_singular_values_examples():
    np.testing.assert_allclose(hb.singular_values(np.diag([3.0, 4.0j])), [4.0, 3.0])
    np.testing.assert_allclose(hb.singular_values(np.eye(5)), np.ones(5))

    rng = np.random.default_rng(2)
    x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    y = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    s = hb.singular_values(np.outer(x, y.conj()))
    assert s[0] == pytest.approx(np.linalg.norm(x) * np.linalg.norm(y))
    np.testing.assert_allclose(s[1:], 0.0, atol=1e-12)


def test_schatten_norm_examples():
    T = np.diag([1.0, 2.0, 3.0])
    assert hb.schatten_norm(T, 1.0) == pytest.approx(6.0)
    assert hb.schatten_norm(T, math.inf) == pytest.approx(3.0)
    with pytest.raises(InvalidParameterError):
        hb.schatten_norm(T, 0.9)


def test_schatten_2_matches_frobenius_sum():
    rng = np.random.default_rng(3)
    for _ in range(20):
        T = random_matrix(rng, 6)
        frob_sq = float(np.sum(np.abs(T) ** 2))
        assert hb.schatten_norm(T, 2.0) ** 2 == pytest.approx(frob_sq, rel=1e-10)


def test_schatten_nonincreasing_in_p():
    rng = np.random.default_rng(4)
    for _ in range(20):
        T = random_matrix(rng, 5)
        norms = [hb.schatten_norm(T, p) for p in (1.0, 1.5, 2.0, 3.0, math.inf)]
        assert all(b <= a + 1e-12 for a, b in zip(norms, norms[1:]))


def test_hermitian_bounds_examples():
    assert hb.hermitian_bounds(np.eye(3)) == (pytest.approx(1.0), pytest.approx(1.0))
    lo, hi = hb.hermitian_bounds(np.diag([2.0, 5.0]))
    assert (lo, hi) == (pytest.approx(2.0), pytest.approx(5.0))
    with pytest.raises(ContractViolationError):
        hb.hermitian_bounds(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_hermitian_bounds_pin_quadratic_form():
    rng = np.random.default_rng(5)
    A = random_matrix(rng, 6)
    T = A + A.conj().T
    lo, hi = hb.hermitian_bounds(T)
    for _ in range(100):
        x = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        q = hb.inner(T @ x, x).real
        nsq = float(np.linalg.norm(x) ** 2)
        assert lo * nsq - 1e-10 <= q <= hi * nsq + 1e-10


def test_is_positive():
    assert hb.is_positive(np.eye(4), 1e-12)
    assert not hb.is_positive(np.diag([1.0, -1.0]), 1e-12)
    rng = np.random.default_rng(6)
    V = rng.standard_normal((4, 12)) + 1j * rng.standard_normal((4, 12))
    w = rng.uniform(0.1, 2.0, 12)
    assert hb.is_positive((V * w) @ V.conj().T, 1e-10)
    # non-Hermitian input is simply not positive
    assert not hb.is_positive(np.array([[0.0, 1.0], [0.0, 0.0]]), 1e-12)


def test_invert():
    np.testing.assert_allclose(hb.invert(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))
    np.testing.assert_allclose(hb.invert(np.eye(3)), np.eye(3))
    with pytest.raises(NotInvertibleError) as info:
        hb.invert(np.diag([1.0, 0.0]))
    assert info.value.smallest_singular_value == 0.0


def test_invert_residual_contract():
    rng = np.random.default_rng(7)
    for _ in range(20):
        T = random_matrix(rng, 6) + 3.0 * np.eye(6)
        resid = np.linalg.norm(T @ hb.invert(T) - np.eye(6), 2)
        assert resid <= 1e-10 * np.linalg.norm(T, 2)


def test_trace_abs_over_basis():
    basis = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
    assert hb.trace_abs_over_basis(np.diag([1.0, -2.0]), basis) == pytest.approx(3.0)
    assert hb.trace_abs_over_basis(np.zeros((2, 2)), basis) == 0.0
    with pytest.raises(ContractViolationError):
        hb.trace_abs_over_basis(np.eye(2), [np.array([1.0, 0.0]), np.array([1.0, 1.0])])


def test_trace_abs_below_trace_norm():
    rng = np.random.default_rng(8)
    T = random_matrix(rng, 5)
    cap = hb.schatten_norm(T, 1.0)
    for seed in range(20):
        onb = hb.random_onb(5, seed)
        assert hb.trace_abs_over_basis(T, onb) <= cap + 1e-9


def test_random_onb():
    for d, seed in [(1, 0), (4, 1), (7, 123)]:
        onb = hb.random_onb(d, seed)
        E = np.column_stack(onb)
        assert np.linalg.norm(E.conj().T @ E - np.eye(d), 2) <= 1e-12
    first = hb.random_onb(5, 42)
    second = hb.random_onb(5, 42)
    for a, b in zip(first, second):
        assert np.array_equal(a, b)


def test_adjoint_antihomomorphism():
    rng = np.random.default_rng(9)
    for _ in range(20):
        A, B = random_matrix(rng, 5), random_matrix(rng, 5)
        lhs = hb.adjoint(A @ B)
        rhs = hb.adjoint(B) @ hb.adjoint(A)
        assert np.linalg.norm(lhs - rhs, 2) <= 1e-12 * np.linalg.norm(lhs, 2)


def test_unitary_invariance_of_singular_values():
    rng = np.random.default_rng(10)
    for seed in range(10):
        T = random_matrix(rng, 6)
        U = np.column_stack(hb.random_onb(6, seed))
        V = np.column_stack(hb.random_onb(6, seed + 1000))
        np.testing.assert_allclose(
            hb.singular_values(U @ T @ V), hb.singular_values(T), atol=1e-10
        )


def test_hermitian_positive_bounds_match_singular_values():
    rng = np.random.default_rng(11)
    V = rng.standard_normal((5, 20)) + 1j * rng.standard_normal((5, 20))
    T = V @ V.conj().T
    lo, hi = hb.hermitian_bounds(T)
    s = hb.singular_values(T)
    assert hi == pytest.approx(s[0], abs=1e-10 * s[0])
    assert lo == pytest.approx(s[-1], abs=1e-10 * s[0])


def test_spectrum_csv():
    text = hb.spectrum_to_csv([1.0, 3.0, 2.0])
    lines = text.strip().split("\n")
    assert lines[0] == "index,sigma"
    assert [float(l.split(",")[1]) for l in lines[1:]] == [3.0, 2.0, 1.0]
