"""Fast bilateral filtering with least-squares Fourier range kernels."""

from .analysis import AccuracyReport, error_bound, linf_error
from .bilateral import (
    FilterConfig,
    bilateral_exact,
    bilateral_fast,
    filter_image,
    local_dynamic_range,
)
from .errors import (
    ConfigurationError,
    InputDomainError,
    LinearDependenceError,
    NumericalAnomalyError,
    NumericalBreakdownError,
    PgmParseError,
)
from .kernel_approx import (
    FourierKernelApprox,
    QrState,
    evaluate_approx,
    progressive_fit,
    qr_append_column,
    sample_kernel,
    to_complex_coeffs,
)
from .kernels import RangeKernel, eval_kernel, exponential, gaussian, load_table, tabulated
from .pgm import read_pgm, write_pgm
from .spatial import SpatialKernel, convolve, make_spatial

__version__ = "0.1.0"
