"""The q-Bessel function family and q-trigonometric kernels.

Covers the third (Hahn-Exton / Jackson) q-Bessel function in the base-q^2
normalization used by the lattice transforms, Exton's original normalization,
the first and second Jackson q-Bessel coefficient kernels, q-cosine/q-sine,
classical comparators for limit demonstrations, and the q-derivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, NoConvergenceError, PoleError
from .qseries import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    PhiParams,
    QBase,
    SeriesValue,
    as_qbase,
    euler_inf,
    laurent_coef_0phi1,
    phi11_reg_int,
    phi11_regularized,
    phi_rs,
    q_pochhammer,
    q_pochhammer_inf,
    qpoch_int_inf,
)


@dataclass(frozen=True)
class Order:
    """Real order parameter of a q-Bessel function.

    Negative integers are rejected outright (the function degenerates there);
    transform and orthogonality entry points additionally require alpha > -1.
    """

    alpha: float

    def __post_init__(self):
        a = self.alpha
        if isinstance(a, complex) and a.imag != 0:
            raise DomainError("complex orders are not supported")
        a = float(a.real if isinstance(a, complex) else a)
        if a < 0 and abs(a - round(a)) < 1e-12:
            raise DomainError(f"order must not be a negative integer, got {a}")
        object.__setattr__(self, "alpha", a)


def as_order(alpha) -> Order:
    return alpha if isinstance(alpha, Order) else Order(float(alpha))


@dataclass(frozen=True)
class QDerivativeSpec:
    q: QBase

    def __post_init__(self):
        object.__setattr__(self, "q", as_qbase(self.q))


# ---------------------------------------------------------------------------
# Hahn-Exton q-Bessel function, base q^2 normalization
# ---------------------------------------------------------------------------

def hahn_exton_j(alpha, z, q, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Hahn-Exton q-Bessel function J_alpha(z; q^2).

    Defined as z^alpha (q^(2 alpha + 2); q^2)_inf / (q^2; q^2)_inf
    * 1phi1(0; q^(2 alpha + 2); q^2, q^2 z^2); note that both the series base
    and the products run in q^2.  Non-integer powers take the principal
    branch; lattice callers only ever pass z = q^k > 0 so the cut is never
    hit in transform paths.  For large |z| the two slots of the regularized
    kernel are swapped, which keeps the summation free of cancellation.
    """
    alpha = as_order(alpha).alpha
    qb = as_qbase(q)
    qh = qb.q * qb.q  # the effective base
    z = complex(z)
    if z == 0:
        if alpha == 0:
            return SeriesValue(1.0 + 0.0j, 0.0, 1)
        if alpha > 0:
            return SeriesValue(0.0 + 0.0j, 0.0, 1)
        raise DomainError("z = 0 is a pole for negative non-integer order")
    w = qh ** (alpha + 1.0)
    arg = qh * z * z
    if abs(arg) <= max(1.0, abs(w)):
        phi = phi11_regularized(w, arg, qh, tol=tol)
    else:
        phi = phi11_regularized(arg, w, qh, tol=tol)
    pref = z ** alpha / euler_inf(qh)
    return SeriesValue(pref * phi.value, abs(pref) * phi.abs_error_bound,
                       phi.terms_used)


@lru_cache(maxsize=1 << 18)
def hahn_exton_j_lattice(p: int, alpha: float, q: float) -> float:
    """J_alpha(q^p; q^2) at a lattice point, stable for any integer p.

    Uses q^(p alpha) times the regularized kernel; for p < 0 the lattice slot
    of the kernel carries the exactly-vanishing products, so the value decays
    with the Gaussian factor instead of being computed by catastrophic
    cancellation.
    """
    qh = q * q
    if p >= 0:
        phi = phi11_regularized(qh ** (alpha + 1.0), qh ** (p + 1), qh).value.real
    else:
        phi = phi11_reg_int(p + 1, qh ** (alpha + 1.0), qh).real
    return q ** (p * alpha) * phi / euler_inf(qh)


def c_alpha(alpha, x, q, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Exton's normalization of the third q-Bessel function.

    (1-q)^alpha (q^(alpha+1); q)_inf / (q; q)_inf
    * 1phi1(0; q^(alpha+1); q, x (1-q)^2), base q itself.  Related to
    hahn_exton_j by the substitutions q -> q^2, x -> (z/(1-q))^2 up to the
    power prefactor.
    """
    alpha = as_order(alpha).alpha
    qb = as_qbase(q)
    q = qb.q
    x = complex(x)
    phi = phi11_regularized(q ** (alpha + 1.0), x * (1.0 - q) ** 2, q, tol=tol)
    pref = (1.0 - q) ** alpha / euler_inf(q)
    return SeriesValue(pref * phi.value, abs(pref) * phi.abs_error_bound,
                       phi.terms_used)


# ---------------------------------------------------------------------------
# Jackson q-Bessel coefficient kernels (first and second kind)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def jackson1_coef(n: int, z: complex, q: float) -> complex:
    """Bare first-kind Jackson kernel value, cached for bilateral sums.

    z^n (q^{n+1};q)_inf / (q;q)_inf * 2phi1(0, 0; q^{n+1}; q, -z^2) with the
    power prefactor folded into the series (safe for any integer n, z = 0
    included); |z| < 1 is required for convergence.
    """
    z = complex(z)
    k0 = max(0, -n)
    t = (-1.0) ** k0 * qpoch_int_inf(k0 + n + 1, q) + 0.0j
    t *= z ** (n + 2 * k0) / q_pochhammer(q, q, k0).real
    s = t
    small = 0
    k = k0
    while small < 2:
        t *= -(z * z) / ((1.0 - q ** (n + k + 1)) * (1.0 - q ** (k + 1)))
        k += 1
        s += t
        if k - k0 > DEFAULT_MAX_TERMS:
            raise NoConvergenceError("first-kind Jackson kernel did not converge")
        if abs(t) <= DEFAULT_TOL * (1.0 + abs(s)):
            small += 1
        else:
            small = 0
    return s / euler_inf(q)


@lru_cache(maxsize=1 << 18)
def jackson2_coef(n: int, z: complex, q: float) -> complex:
    """Bare second-kind Jackson kernel value (entire in z), cached."""
    return laurent_coef_0phi1(n, complex(z), q)


def jackson_j1(n: int, z, q, tol: float = DEFAULT_TOL) -> SeriesValue:
    """First-kind Jackson kernel z^n (q^(n+1); q)_inf / (q; q)_inf
    * 2phi1(0, 0; q^(n+1); q, -z^2), for any integer n, |z| < 1.

    Negative n follows the prematurely-terminating series convention, under
    which the leading terms vanish and the kernel stays finite.
    """
    qb = as_qbase(q)
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError("jackson_j1 needs |z| < 1 for its 2phi1 series")
    val = jackson1_coef(n, z, qb.q)
    return SeriesValue(val, 8.0 * tol * (1.0 + abs(val)), abs(n) + 8)


def jackson_j2(n: int, z, q, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Second-kind Jackson kernel z^n q^(n(n-1)/2) (q^(n+1); q)_inf / (q; q)_inf
    * 0phi1(-; q^(n+1); q, -q^n z^2); entire in z, any integer n."""
    qb = as_qbase(q)
    z = complex(z)
    val = jackson2_coef(n, z, qb.q)
    return SeriesValue(val, 8.0 * tol * (1.0 + abs(val)), abs(n) + 8)


# ---------------------------------------------------------------------------
# q-cosine and q-sine
# ---------------------------------------------------------------------------

def q_cos(z, q, tol: float = DEFAULT_TOL) -> SeriesValue:
    """cos(z; q^2) = 1phi1(0; q; q^2, q^2 z^2)."""
    qb = as_qbase(q)
    q = qb.q
    z = complex(z)
    return phi_rs(PhiParams((0.0,), (q,), QBase(q * q), q * q * z * z), tol=tol)


def q_sin(z, q, tol: float = DEFAULT_TOL) -> SeriesValue:
    """sin(z; q^2) = z/(1-q) * 1phi1(0; q^3; q^2, q^2 z^2)."""
    qb = as_qbase(q)
    q = qb.q
    z = complex(z)
    phi = phi_rs(PhiParams((0.0,), (q ** 3,), QBase(q * q), q * q * z * z), tol=tol)
    pref = z / (1.0 - q)
    return SeriesValue(pref * phi.value, abs(pref) * phi.abs_error_bound,
                       phi.terms_used)


@lru_cache(maxsize=1 << 18)
def q_cos_lattice(p: int, q: float) -> float:
    """cos(q^p; q^2) at a lattice point, stable for any integer p."""
    qh = q * q
    if p >= 0:
        return q_cos(q ** p, q).value.real
    num = phi11_reg_int(p + 1, q, qh).real
    return num / q_pochhammer_inf(q, qh).value.real


@lru_cache(maxsize=1 << 18)
def q_sin_lattice(p: int, q: float) -> float:
    """sin(q^p; q^2) at a lattice point, stable for any integer p."""
    qh = q * q
    if p >= 0:
        return q_sin(q ** p, q).value.real
    num = phi11_reg_int(p + 1, q ** 3, qh).real
    return q ** p / (1.0 - q) * num / q_pochhammer_inf(q ** 3, qh).value.real


# ---------------------------------------------------------------------------
# classical comparators (used only by limit demonstrations)
# ---------------------------------------------------------------------------

def classical_bessel(alpha: float, x: float, max_terms: int = 400) -> float:
    """Classical Bessel J_alpha(x) by direct series summation, alpha > -1."""
    alpha = float(alpha)
    x = float(x)
    if alpha <= -1.0:
        raise DomainError("classical comparator needs alpha > -1")
    if x == 0.0:
        return 1.0 if alpha == 0.0 else 0.0
    t = (x / 2.0) ** alpha / math.gamma(alpha + 1.0)
    s = t
    for k in range(max_terms):
        t *= -(x * x / 4.0) / ((k + 1.0) * (alpha + k + 1.0))
        s += t
        if abs(t) <= 1e-17 * (1.0 + abs(s)):
            return s
    raise NoConvergenceError("classical Bessel series did not converge")


def classical_0f1(c: float, z, max_terms: int = 400) -> complex:
    """Confluent limit series 0F1(-; c; z) for complex z."""
    c = float(c)
    if c <= 0 and abs(c - round(c)) < 1e-12:
        raise PoleError(f"0F1 lower parameter pole at c = {c}")
    z = complex(z)
    t = 1.0 + 0.0j
    s = t
    for k in range(max_terms):
        t *= z / ((c + k) * (k + 1.0))
        s += t
        if abs(t) <= 1e-17 * (1.0 + abs(s)):
            return s
    raise NoConvergenceError("0F1 series did not converge")


# ---------------------------------------------------------------------------
# q-derivatives
# ---------------------------------------------------------------------------

def q_derivative(f, z, spec: QDerivativeSpec):
    """Exact q-difference quotient (f(z) - f(qz)) / ((1-q) z)."""
    q = spec.q.q if isinstance(spec, QDerivativeSpec) else as_qbase(spec).q
    z = complex(z)
    if z == 0:
        raise DomainError("q-derivative is undefined at z = 0")
    return (f(z) - f(q * z)) / ((1.0 - q) * z)


def q_second_derivative_shifted(f, z, q):
    """(D_q^2 f)(z/q), via the explicit three-point stencil.

    Using the closed form q z^-2 (1-q)^-2 (q f(z/q) - (1+q) f(z) + f(qz))
    rather than two nested difference quotients avoids one cancellation
    level.
    """
    q = as_qbase(q).q
    z = complex(z)
    if z == 0:
        raise DomainError("q-derivative is undefined at z = 0")
    num = q * f(z / q) - (1.0 + q) * f(z) + f(q * z)
    return q * num / (z * z * (1.0 - q) ** 2)
