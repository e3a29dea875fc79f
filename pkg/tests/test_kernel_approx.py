import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fourier_bilateral.errors import ConfigurationError, LinearDependenceError
from fourier_bilateral.kernel_approx import (
    FourierKernelApprox,
    QrState,
    cosine_column,
    evaluate_approx,
    progressive_fit,
    qr_append_column,
    sample_kernel,
    to_complex_coeffs,
    trajectory_csv,
)
from fourier_bilateral.kernels import eval_kernel, exponential, gaussian, tabulated
from oracles import cosine_lstsq_normal_equations


def approx_from(d, T=10):
    d = np.asarray(d, dtype=float)
    return FourierKernelApprox(T=T, omega=math.pi / T, N=d.size - 1, d=d,
                               residual_norm=0.0, max_pointwise_error=0.0)


class TestSampleKernel:
    def test_gaussian(self):
        np.testing.assert_allclose(
            sample_kernel(gaussian(30), 2),
            [1.0, math.exp(-1 / 1800), math.exp(-4 / 1800)], rtol=1e-15)

    def test_tabulated(self):
        np.testing.assert_array_equal(sample_kernel(tabulated([1, 0.5, 0.25]), 2), [1, 0.5, 0.25])

    def test_exponential(self):
        np.testing.assert_allclose(sample_kernel(exponential(1), 1), [1.0, math.exp(-1)], rtol=1e-15)

    @pytest.mark.parametrize("T", [0, -3, 2.5])
    def test_bad_T(self, T):
        with pytest.raises(ConfigurationError):
            sample_kernel(gaussian(30), T)


class TestQrAppend:
    def test_orthogonal_column(self):
        s = QrState.start(np.ones(2), np.array([1.0, 0.0]))
        s2 = qr_append_column(s, np.array([1.0, -1.0]))
        np.testing.assert_allclose(s2.Q[:, 1], [1 / math.sqrt(2), -1 / math.sqrt(2)], atol=1e-15)
        assert s2.R[0, 1] == pytest.approx(0.0, abs=1e-15)
        assert s2.R[1, 1] == pytest.approx(math.sqrt(2), rel=1e-15)
        # p = Q^T b
        np.testing.assert_allclose(s2.p, s2.Q.T @ s2.b, atol=1e-15)

    def test_dependent_column(self):
        s = QrState.start(np.ones(5), np.arange(5.0))
        s = qr_append_column(s, cosine_column(1, 4))
        with pytest.raises(LinearDependenceError):
            qr_append_column(s, cosine_column(1, 4))
        assert s.ncols == 2

    def test_matches_full_qr_T217(self):
        T = 217
        b = sample_kernel(gaussian(30), T)
        a = cosine_column(1, T)
        s = qr_append_column(QrState.start(np.ones(T + 1), b), a)
        A = np.column_stack([np.ones(T + 1), a])
        assert np.max(np.abs(A - s.Q @ s.R)) <= 1e-10
        Q_ref, R_ref = np.linalg.qr(A)
        signs = np.sign(np.diag(R_ref))
        np.testing.assert_allclose(s.R, signs[:, None] * R_ref, atol=1e-10)
        np.testing.assert_allclose(s.Q, Q_ref * signs, atol=1e-10)

    def test_state_invariants_through_fit(self):
        T = 217
        b = sample_kernel(gaussian(30), T)
        s = QrState.start(np.ones(T + 1), b)
        A = np.ones((T + 1, 1))
        for n in range(1, 16):
            a = cosine_column(n, T)
            s = qr_append_column(s, a)
            A = np.column_stack([A, a])
            k = s.ncols
            assert np.max(np.abs(s.Q.T @ s.Q - np.eye(k))) <= 1e-10
            assert np.all(np.diag(s.R) > 0)
            assert np.array_equal(s.R, np.triu(s.R))
            assert np.max(np.abs(A - s.Q @ s.R)) <= 1e-10
            d = s.solve()
            assert np.max(np.abs(s.R @ d - s.p)) <= 1e-10


class TestProgressiveFit:
    def test_paper_order_eps_1e3(self):
        fit = progressive_fit(gaussian(30), 217, 1e-3)
        # the order count in the published table includes the constant column
        assert fit.n_terms == 10
        assert fit.N == 9

    def test_paper_order_eps_1e8(self):
        fit = progressive_fit(gaussian(30), 217, 1e-8)
        assert fit.n_terms == 15
        assert fit.N == 14

    def test_exact_first_harmonic(self):
        T = 8
        fit = progressive_fit(tabulated([math.cos(math.pi * t / T) for t in range(T + 1)]), T, 1e-9)
        assert fit.N == 1
        np.testing.assert_allclose(fit.d, [0.0, 1.0], atol=1e-12)
        assert fit.residual_norm <= 1e-12

    @pytest.mark.parametrize("T", [1, 5, 217])
    def test_constant_kernel(self, T):
        fit = progressive_fit(tabulated([1.0] * (T + 1)), T, 1e-6)
        assert fit.N == 0
        np.testing.assert_allclose(fit.d, [1.0], rtol=1e-15)
        assert fit.residual_norm <= 1e-14

    @pytest.mark.parametrize("eps", [0.0, -1.0, math.sqrt(218), 100.0])
    def test_bad_epsilon(self, eps):
        with pytest.raises(ConfigurationError):
            progressive_fit(gaussian(30), 217, eps)

    def test_basis_columns_and_fields(self):
        fit = progressive_fit(gaussian(20), 100, 1e-4)
        assert len(fit.d) == fit.N + 1
        assert fit.omega * fit.T == pytest.approx(math.pi, rel=1e-15)
        t = np.arange(101.0)
        A = np.cos(np.outer(t, np.arange(fit.N + 1)) * math.pi / 100)
        b = sample_kernel(gaussian(20), 100)
        assert fit.residual_norm == pytest.approx(np.linalg.norm(b - A @ fit.d), rel=1e-12)
        assert fit.max_pointwise_error == pytest.approx(np.max(np.abs(b - A @ fit.d)), rel=1e-12)

    def test_minimal_order(self):
        fit = progressive_fit(gaussian(30), 217, 1e-3)
        prev = fit.trajectory[-2]
        assert prev[0] == fit.N - 1 and prev[1] > 1e-3

    def test_certificate_exhaustive_scan(self):
        fit = progressive_fit(gaussian(30), 217, 1e-3)
        t = np.arange(218.0)
        err = np.abs(eval_kernel(gaussian(30), t) - evaluate_approx(fit, t))
        assert err.max() <= 1e-3
        assert fit.max_pointwise_error <= fit.residual_norm <= 1e-3

    def test_trajectory_csv(self):
        fit = progressive_fit(gaussian(30), 217, 1e-2)
        lines = trajectory_csv(fit).strip().splitlines()
        assert len(lines) == fit.N + 1
        last = [float(v) for v in lines[-1].split(",")]
        assert int(last[0]) == fit.N
        assert last[1] == fit.residual_norm
        np.testing.assert_array_equal(last[2:], fit.d)


@settings(max_examples=40, deadline=None)
@given(
    family=st.sampled_from(["gaussian", "exponential"]),
    sigma=st.floats(3, 200),
    T=st.integers(2, 300),
    log_eps=st.floats(-8, -1),
)
def test_fit_properties(family, sigma, T, log_eps):
    kernel = gaussian(sigma) if family == "gaussian" else exponential(sigma)
    eps = 10.0**log_eps
    fit = progressive_fit(kernel, T, eps)
    assert fit.N <= T
    assert fit.max_pointwise_error <= fit.residual_norm <= eps
    errs = [e for _, e, _ in fit.trajectory]
    assert all(b <= a * (1 + 1e-12) + 1e-15 for a, b in zip(errs, errs[1:]))


@pytest.mark.parametrize("family", ["gaussian", "exponential"])
@pytest.mark.parametrize("T,sigma", [(16, 5.0), (40, 10.0), (64, 20.0), (64, 8.0)])
def test_qr_matches_normal_equations(family, T, sigma):
    kernel = gaussian(sigma) if family == "gaussian" else exponential(sigma)
    fit = progressive_fit(kernel, T, 1e-12 if family == "gaussian" else 1e-3)
    for N, _, d in fit.trajectory:
        if N > 12:
            break
        ref = cosine_lstsq_normal_equations(sample_kernel(kernel, T), N)
        np.testing.assert_allclose(d, ref, atol=1e-8, rtol=0)


class TestEvaluate:
    def test_constant(self):
        assert evaluate_approx(approx_from([1.0]), 3.7) == 1.0

    def test_cos_pi(self):
        assert evaluate_approx(approx_from([0.0, 1.0], T=10), 10) == pytest.approx(-1.0, abs=1e-15)

    def test_vectorized(self):
        a = approx_from([0.5, 0.25, 0.125], T=7)
        t = np.linspace(-7, 7, 15)
        np.testing.assert_allclose(a(t), [a(float(x)) for x in t], rtol=1e-15)


class TestComplexCoeffs:
    def test_examples(self):
        np.testing.assert_array_equal(to_complex_coeffs(approx_from([1.0])), [1.0])
        np.testing.assert_array_equal(to_complex_coeffs(approx_from([1.0, 0.5])), [0.25, 1.0, 0.25])

    def test_sum_matches_evaluation(self):
        fit = progressive_fit(gaussian(30), 217, 1e-3)
        c = to_complex_coeffs(fit)
        n = np.arange(-fit.N, fit.N + 1)
        assert c.sum() == pytest.approx(evaluate_approx(fit, 0.0), rel=1e-13)
        assert c.sum() == pytest.approx(fit.d.sum(), rel=1e-13)
        for t in (0.0, 13.5, 100.0, 217.0):
            z = np.sum(c * np.exp(1j * n * fit.omega * t))
            assert abs(z.imag) < 1e-13
            assert z.real == pytest.approx(evaluate_approx(fit, t), abs=1e-13)
