"""Hahn-Exton q-Bessel functions, discrete q-Hankel / q-Fourier transforms on
the geometric lattice {q^k : k in Z}, and a numerical verification engine for
the orthogonality, addition and limit identities they satisfy.
"""

from .errors import (
    DivergentSeriesError,
    DomainError,
    InadmissibleBranchError,
    LowerParamPoleError,
    NoConvergenceError,
    PoleError,
    QHankelError,
    UnknownFunctionError,
    WindowTooSmallError,
)
from .qseries import (
    PhiParams,
    QBase,
    SeriesValue,
    E_q,
    e_q,
    majorant,
    phi11_regularized,
    phi21,
    phi_rs,
    q_gamma,
    q_pochhammer,
    q_pochhammer_inf,
    q_pochhammer_multi,
)
from .bessel import (
    Order,
    QDerivativeSpec,
    c_alpha,
    classical_0f1,
    classical_bessel,
    hahn_exton_j,
    jackson_j1,
    jackson_j2,
    q_cos,
    q_derivative,
    q_second_derivative_shifted,
    q_sin,
)
from .lattice import QLatticeFunction, q_integral
from .transforms import (
    TransformConfig,
    biorthogonality_sum,
    dual_orthogonality_sum,
    fourier_cos,
    fourier_sin,
    hankel_forward,
    hankel_inverse,
    hansen_lommel_sum,
)
from .report import IdentityReport
from .addition import (
    BranchChoice,
    GrafParams,
    b3_transform_check,
    gen_fn_check,
    graf_jackson_check,
    graf_rhs,
    graf_sum,
    graf_symmetric,
    heine_expansion_check,
    poisson_kernel,
    three_term_b2_check,
    unit_product_check,
    weber_sonine_check,
)
from .jacobi import (
    LittleQJacobiParams,
    little_q_jacobi,
    lqj_limit_to_orthogonality,
    lqj_orthogonality,
    prop_a1_check,
    prop_a2_check,
)
from .estimators import (
    QFourierCosineTransform,
    QFourierSineTransform,
    QHankelTransform,
)

__version__ = "0.1.0"

__all__ = [
    "QBase", "SeriesValue", "PhiParams", "Order", "QDerivativeSpec",
    "QLatticeFunction", "TransformConfig", "IdentityReport",
    "GrafParams", "BranchChoice", "LittleQJacobiParams",
    "q_pochhammer", "q_pochhammer_inf", "q_pochhammer_multi",
    "phi_rs", "phi21", "phi11_regularized", "majorant",
    "e_q", "E_q", "q_gamma",
    "hahn_exton_j", "c_alpha", "jackson_j1", "jackson_j2",
    "q_cos", "q_sin", "classical_bessel", "classical_0f1",
    "q_derivative", "q_second_derivative_shifted",
    "q_integral", "hankel_forward", "hankel_inverse",
    "fourier_cos", "fourier_sin",
    "hansen_lommel_sum", "dual_orthogonality_sum", "biorthogonality_sum",
    "gen_fn_check", "unit_product_check", "graf_sum", "graf_rhs",
    "graf_symmetric", "poisson_kernel", "weber_sonine_check",
    "heine_expansion_check", "graf_jackson_check",
    "b3_transform_check", "three_term_b2_check",
    "little_q_jacobi", "lqj_orthogonality", "prop_a1_check",
    "prop_a2_check", "lqj_limit_to_orthogonality",
    "QHankelTransform", "QFourierCosineTransform", "QFourierSineTransform",
    "QHankelError", "DomainError", "DivergentSeriesError",
    "LowerParamPoleError", "NoConvergenceError", "PoleError",
    "WindowTooSmallError", "InadmissibleBranchError", "UnknownFunctionError",
]
