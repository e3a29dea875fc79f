"""Least-squares cosine approximation of a range kernel on the integer grid.

The kernel is sampled at ``t = 0..T`` and fitted by

    phi_N(t) = d_0 + sum_{n=1}^{N} d_n cos(n * omega * t),   omega = pi / T,

growing ``N`` one harmonic at a time. Each new column is orthogonalized
against the current thin QR factor (modified Gram-Schmidt), so every step
only costs one projection sweep and a back-substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_triangular

from .errors import ConfigurationError, LinearDependenceError, NumericalBreakdownError
from .kernels import RangeKernel, eval_kernel

# Relative residual norm below which an appended column counts as dependent.
DEPENDENCE_TOL = 1e-12


@dataclass
class QrState:
    """Thin QR factorization ``A = Q R`` plus the projected target ``p = Q^T b``."""

    Q: np.ndarray
    R: np.ndarray
    p: np.ndarray
    b: np.ndarray

    @classmethod
    def start(cls, a: np.ndarray, b: np.ndarray) -> "QrState":
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        r = np.linalg.norm(a)
        if r == 0.0:
            raise LinearDependenceError("first column is zero")
        q = a / r
        return cls(Q=q[:, None], R=np.array([[r]]), p=np.array([q @ b]), b=b)

    @property
    def ncols(self) -> int:
        return self.Q.shape[1]

    def solve(self) -> np.ndarray:
        """Back-substitute ``R d = p``."""
        return solve_triangular(self.R, self.p, lower=False)


def qr_append_column(state: QrState, a: np.ndarray) -> QrState:
    """Return a new state with column ``a`` appended to the factorization.

    Raises LinearDependenceError when the orthogonalized residual of ``a``
    is below ``DEPENDENCE_TOL * ||a||``; the input state is left untouched.
    """
    v = np.array(a, dtype=float)
    if v.shape != state.b.shape:
        raise ValueError(f"column has length {v.size}, expected {state.b.size}")
    k = state.ncols
    norm_a = np.linalg.norm(v)
    r = np.zeros(k + 1)
    for j in range(k):
        q = state.Q[:, j]
        r[j] = v @ q
        v -= r[j] * q
    r[k] = np.linalg.norm(v)
    if r[k] <= DEPENDENCE_TOL * norm_a:
        raise LinearDependenceError(
            f"column {k} is dependent (residual {r[k]:.3g}, norm {norm_a:.3g})"
        )
    v /= r[k]
    R = np.zeros((k + 1, k + 1))
    R[:k, :k] = state.R
    R[:, k] = r
    return QrState(
        Q=np.column_stack([state.Q, v]),
        R=R,
        p=np.append(state.p, v @ state.b),
        b=state.b,
    )


@dataclass(eq=False)
class FourierKernelApprox:
    """Cosine-series fit of a range kernel on ``{0, ..., T}``.

    ``N`` is the highest harmonic, so ``d`` has ``N + 1`` entries and a
    constant-only fit has ``N == 0``. ``trajectory`` records ``(N, E, d)``
    for every least-squares solve made while growing the basis.
    """

    T: int
    omega: float
    N: int
    d: np.ndarray
    residual_norm: float
    max_pointwise_error: float
    trajectory: list = field(default_factory=list, repr=False)

    @property
    def n_terms(self) -> int:
        """Number of basis columns, ``N + 1``."""
        return self.N + 1

    def __call__(self, t):
        return evaluate_approx(self, t)


def sample_kernel(kernel: RangeKernel, T: int) -> np.ndarray:
    if int(T) != T or T < 1:
        raise ConfigurationError(f"T must be a positive integer, got {T!r}")
    return np.asarray(eval_kernel(kernel, np.arange(int(T) + 1, dtype=float)), dtype=float)


def cosine_column(n: int, T: int) -> np.ndarray:
    t = np.arange(T + 1, dtype=float)
    return np.cos(n * (math.pi / T) * t)


def progressive_fit(kernel: RangeKernel, T: int, epsilon: float) -> FourierKernelApprox:
    """Smallest-order cosine fit whose l2 residual on ``0..T`` is ``<= epsilon``.

    The residual is recomputed from the explicit basis matrix after every
    solve rather than read off the QR factors.
    """
    b = sample_kernel(kernel, T)
    T = int(T)
    if not (epsilon > 0 and epsilon < math.sqrt(T + 1)):
        raise ConfigurationError(
            f"epsilon must lie in (0, sqrt(T+1)) = (0, {math.sqrt(T + 1):.4g}), got {epsilon!r}"
        )

    A = np.ones((T + 1, 1))
    state = QrState.start(A[:, 0], b)
    d = state.solve()
    E = float(np.linalg.norm(b - A @ d))
    trajectory = [(0, E, d.copy())]
    N = 0
    while E > epsilon:
        if N + 1 > T:
            raise NumericalBreakdownError(
                f"residual {E:.3g} still above {epsilon:.3g} with a full basis of {T + 1} columns"
            )
        a = cosine_column(N + 1, T)
        try:
            state = qr_append_column(state, a)
        except LinearDependenceError as exc:
            raise NumericalBreakdownError(
                f"basis exhausted at N={N} with residual {E:.3g} > {epsilon:.3g}"
            ) from exc
        N += 1
        A = np.column_stack([A, a])
        d = state.solve()
        E = float(np.linalg.norm(b - A @ d))
        trajectory.append((N, E, d.copy()))

    return FourierKernelApprox(
        T=T,
        omega=math.pi / T,
        N=N,
        d=d,
        residual_norm=E,
        max_pointwise_error=float(np.max(np.abs(b - A @ d))),
        trajectory=trajectory,
    )


def evaluate_approx(approx: FourierKernelApprox, t):
    scalar = np.ndim(t) == 0
    t = np.asarray(t, dtype=float)
    n = np.arange(approx.N + 1)
    out = np.cos(np.multiply.outer(t, n) * approx.omega) @ np.asarray(approx.d)
    return float(out) if scalar else out


def to_complex_coeffs(approx: FourierKernelApprox) -> np.ndarray:
    """Coefficients ``c_{-N} .. c_N`` of the equivalent complex-exponential sum."""
    d = np.asarray(approx.d, dtype=float)
    half = d[1:] / 2.0
    return np.concatenate([half[::-1], d[:1], half])


def trajectory_csv(approx: FourierKernelApprox) -> str:
    """One ``N,E,d_0,...,d_N`` line per solve made during the fit."""
    lines = []
    for n, err, d in approx.trajectory:
        lines.append(",".join([str(n), repr(err)] + [repr(float(x)) for x in d]))
    return "\n".join(lines) + "\n"
