"""Univariate distribution kernel.

Provides density, CDF, quantile and sampling for the handful of laws the
rest of the library builds on: standard normal, Student-t, skew-normal,
beta, binomial and the uniform on (0,1).  All special functions are
implemented locally (regularized incomplete beta via a Lentz continued
fraction, the skew-normal CDF via Owen's T function), so the runtime
package has no dependency beyond numpy.

Quantiles of the continuous families are computed by a safeguarded
bisection/Newton iteration on the CDF, converged to 1e-12 absolute.
Samplers are pure functions of a caller-owned ``numpy.random.Generator``;
nothing in this module keeps RNG state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_INV_SQRT_2PI = 1.0 / _SQRT_2PI

QUANTILE_ATOL = 1e-12


# ---------------------------------------------------------------------------
# special functions
# ---------------------------------------------------------------------------

def norm_pdf(x: float) -> float:
    return _INV_SQRT_2PI * math.exp(-0.5 * x * x)


def norm_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / _SQRT2)


def norm_sf(x: float) -> float:
    # survival function; keeps full relative precision in the upper tail
    return 0.5 * math.erfc(x / _SQRT2)


# Acklam's rational approximation for the normal quantile, polished by one
# Halley step.  Accurate to double precision over (0, 1).
_ACK_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
          1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_ACK_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
          6.680131188771972e+01, -1.328068155288572e+01)
_ACK_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
          -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_ACK_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
          3.754408661907416e+00)


def norm_quantile(p: float) -> float:
    if not 0.0 < p < 1.0:
        raise DomainError(f"quantile needs p in (0,1), got {p}")
    p_low, p_high = 0.02425, 1.0 - 0.02425
    if p < p_low:
        q = math.sqrt(-2.0 * math.log(p))
        x = ((((( _ACK_C[0]*q + _ACK_C[1])*q + _ACK_C[2])*q + _ACK_C[3])*q + _ACK_C[4])*q + _ACK_C[5]) / \
            (((( _ACK_D[0]*q + _ACK_D[1])*q + _ACK_D[2])*q + _ACK_D[3])*q + 1.0)
    elif p <= p_high:
        q = p - 0.5
        r = q * q
        x = ((((( _ACK_A[0]*r + _ACK_A[1])*r + _ACK_A[2])*r + _ACK_A[3])*r + _ACK_A[4])*r + _ACK_A[5])*q / \
            ((((( _ACK_B[0]*r + _ACK_B[1])*r + _ACK_B[2])*r + _ACK_B[3])*r + _ACK_B[4])*r + 1.0)
    else:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        x = -((((( _ACK_C[0]*q + _ACK_C[1])*q + _ACK_C[2])*q + _ACK_C[3])*q + _ACK_C[4])*q + _ACK_C[5]) / \
            (((( _ACK_D[0]*q + _ACK_D[1])*q + _ACK_D[2])*q + _ACK_D[3])*q + 1.0)
    # Halley polish
    e = norm_cdf(x) - p
    u = e * _SQRT_2PI * math.exp(0.5 * x * x)
    x = x - u / (1.0 + 0.5 * x * u)
    return x


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 300):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            return h
    raise RuntimeError(f"incomplete beta continued fraction failed: a={a} b={b} x={x}")


def betainc_reg(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b) for a, b > 0."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def log_beta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


_OWENS_NODES, _OWENS_WEIGHTS = np.polynomial.legendre.leggauss(32)


def owens_t(h: float, a: float) -> float:
    """Owen's T function, by Gauss-Legendre on its defining integral.

    T(h, a) = (1/2pi) * int_0^a exp(-h^2 (1+x^2)/2) / (1+x^2) dx.
    The integrand is smooth and bounded, so 32 nodes give near machine
    precision for the slant magnitudes used here.
    """
    if a == 0.0:
        return 0.0
    sign = 1.0 if a > 0.0 else -1.0
    a = abs(a)
    t = 0.5 * a * (_OWENS_NODES + 1.0)
    g = np.exp(-0.5 * (h * h) * (1.0 + t * t)) / (1.0 + t * t)
    return sign * 0.5 * a * float(_OWENS_WEIGHTS @ g) / (2.0 * math.pi)


# ---------------------------------------------------------------------------
# distribution families
# ---------------------------------------------------------------------------

class Distribution:
    """Common interface of every family.

    Subclasses set ``family`` and implement density/cdf/sample; the
    safeguarded quantile inversion below is shared by the continuous
    families that do not override it with something faster.
    """

    family: str = "abstract"
    is_continuous: bool = True
    is_symmetric: bool = False

    def support(self) -> tuple[float, float]:
        return (-math.inf, math.inf)

    def mode(self) -> float:
        raise NotImplementedError

    def unimodal_continuous(self) -> bool:
        """True when the density is continuous, unimodal and non-flat."""
        return False

    def density(self, u: float) -> float:
        raise NotImplementedError

    def cdf(self, u: float) -> float:
        raise NotImplementedError

    def sf(self, u: float) -> float:
        """Survival function.  Overridden where 1 - cdf would lose precision."""
        return 1.0 - self.cdf(u)

    def density_derivative(self, u: float) -> float:
        """Derivative of the density; used to speed up level matching."""
        h = 1e-6 * (1.0 + abs(u))
        return (self.density(u + h) - self.density(u - h)) / (2.0 * h)

    def quantile(self, p: float) -> float:
        if not 0.0 < p < 1.0:
            raise DomainError(f"quantile needs p in (0,1), got {p}")
        return self._invert_cdf(p)

    def sample(self, rng: np.random.Generator, m: int) -> np.ndarray:
        raise NotImplementedError

    # -- helpers ------------------------------------------------------------

    def _check_finite(self, u: float) -> float:
        u = float(u)
        if not math.isfinite(u):
            raise DomainError(f"non-finite argument {u}")
        return u

    def _check_m(self, m: int) -> int:
        m = int(m)
        if m < 1:
            raise DomainError(f"sample size must be >= 1, got {m}")
        return m

    def _bracket_quantile(self, p: float) -> tuple[float, float]:
        lo, hi = self.support()
        if math.isinf(lo):
            lo = -1.0
            while self.cdf(lo) > p:
                lo *= 2.0
        if math.isinf(hi):
            hi = 1.0
            while self.cdf(hi) < p:
                hi *= 2.0
        return lo, hi

    def _invert_cdf(self, p: float) -> float:
        """Bisection with Newton acceleration on the CDF, to 1e-12 absolute."""
        lo, hi = self._bracket_quantile(p)
        x = 0.5 * (lo + hi)
        for _ in range(200):
            fx = self.cdf(x) - p
            if fx > 0.0:
                hi = x
            else:
                lo = x
            dfx = self.density(x)
            step_ok = False
            if dfx > 0.0:
                x_new = x - fx / dfx
                if lo < x_new < hi:
                    x = x_new
                    step_ok = True
            if not step_ok:
                x = 0.5 * (lo + hi)
            if hi - lo <= QUANTILE_ATOL:
                return x
        return x


@dataclass(frozen=True)
class Normal(Distribution):
    """Standard normal."""

    family = "normal"
    is_symmetric = True

    def mode(self) -> float:
        return 0.0

    def unimodal_continuous(self) -> bool:
        return True

    def density(self, u):
        return norm_pdf(self._check_finite(u))

    def cdf(self, u):
        u = float(u)
        if math.isinf(u):
            return 0.0 if u < 0 else 1.0
        return norm_cdf(u)

    def sf(self, u):
        u = float(u)
        if math.isinf(u):
            return 1.0 if u < 0 else 0.0
        return norm_sf(u)

    def density_derivative(self, u):
        return -u * norm_pdf(u)

    def quantile(self, p):
        return norm_quantile(p)

    def sample(self, rng, m):
        return rng.standard_normal(self._check_m(m))


@dataclass(frozen=True)
class StudentT(Distribution):
    """Student-t with ``df`` degrees of freedom.

    The CDF uses closed forms for df in {1, 2, 3} (the expensive inner loop
    of the level-set machinery lives on these) and the regularized
    incomplete beta otherwise.
    """

    df: float

    family = "student-t"
    is_symmetric = True

    def __post_init__(self):
        if self.df <= 0:
            raise DomainError("degrees of freedom must be positive")

    def mode(self) -> float:
        return 0.0

    def unimodal_continuous(self) -> bool:
        return True

    def density(self, u):
        u = self._check_finite(u)
        nu = self.df
        lognorm = (math.lgamma(0.5 * (nu + 1.0)) - math.lgamma(0.5 * nu)
                   - 0.5 * math.log(nu * math.pi))
        return math.exp(lognorm - 0.5 * (nu + 1.0) * math.log1p(u * u / nu))

    def cdf(self, u):
        u = float(u)
        if math.isinf(u):
            return 0.0 if u < 0 else 1.0
        nu = self.df
        if nu == 1.0:
            return 0.5 + math.atan(u) / math.pi
        if nu == 2.0:
            return 0.5 + 0.5 * u / math.sqrt(2.0 + u * u)
        if nu == 3.0:
            t = u / math.sqrt(3.0)
            return 0.5 + (math.atan(t) + t / (1.0 + t * t)) / math.pi
        x = nu / (nu + u * u)
        tail = 0.5 * betainc_reg(0.5 * nu, 0.5, x)
        return 1.0 - tail if u >= 0.0 else tail

    def sf(self, u):
        return self.cdf(-float(u))

    def density_derivative(self, u):
        u = float(u)
        return self.density(u) * (-(self.df + 1.0) * u / (self.df + u * u))

    def sample(self, rng, m):
        return rng.standard_t(self.df, self._check_m(m))


@dataclass(frozen=True)
class SkewNormal(Distribution):
    """Skew-normal with slant parameter ``slant``.

    Density 2*phi(u)*Phi(slant*u); CDF Phi(u) - 2*T(u, slant) with Owen's T.
    Sampling uses the exact two-normal representation
    U = delta*|Z1| + sqrt(1-delta^2)*Z2, delta = slant/sqrt(1+slant^2).
    """

    slant: float

    family = "skew-normal"

    def __post_init__(self):
        if not math.isfinite(self.slant):
            raise DomainError("slant must be finite")

    @lru_cache(maxsize=None)
    def mode(self) -> float:
        k = self.slant
        if k == 0.0:
            return 0.0
        # stationary point of the density: k*phi(k*u) = u*Phi(k*u)
        lo, hi = (1e-12, 2.0) if k > 0 else (-2.0, -1e-12)

        def g(u):
            return k * norm_pdf(k * u) - u * norm_cdf(k * u)

        while g(hi if k > 0 else lo) > 0.0:
            if k > 0:
                hi *= 2.0
            else:
                lo *= 2.0
        for _ in range(100):
            m = 0.5 * (lo + hi)
            if g(m) > 0.0:
                lo = m
            else:
                hi = m
        return 0.5 * (lo + hi)

    def unimodal_continuous(self) -> bool:
        return True

    def density(self, u):
        u = self._check_finite(u)
        return 2.0 * norm_pdf(u) * norm_cdf(self.slant * u)

    def cdf(self, u):
        u = float(u)
        if math.isinf(u):
            return 0.0 if u < 0 else 1.0
        return norm_cdf(u) - 2.0 * owens_t(u, self.slant)

    def sf(self, u):
        # 1 - Phi(u) + 2 T(u, slant): both terms positive for u > 0, so the
        # upper tail keeps relative precision
        u = float(u)
        if math.isinf(u):
            return 1.0 if u < 0 else 0.0
        return norm_sf(u) + 2.0 * owens_t(u, self.slant)

    def density_derivative(self, u):
        u = float(u)
        k = self.slant
        return 2.0 * norm_pdf(u) * (k * norm_pdf(k * u) - u * norm_cdf(k * u))

    def sample(self, rng, m):
        m = self._check_m(m)
        delta = self.slant / math.sqrt(1.0 + self.slant * self.slant)
        z1 = rng.standard_normal(m)
        z2 = rng.standard_normal(m)
        return delta * np.abs(z1) + math.sqrt(1.0 - delta * delta) * z2


@dataclass(frozen=True)
class Beta(Distribution):
    """Beta distribution on (0, 1) with shape parameters a, b > 0."""

    a: float
    b: float

    family = "beta"

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise DomainError("beta shapes must be positive")

    def support(self):
        return (0.0, 1.0)

    def mode(self) -> float:
        if self.a > 1.0 and self.b > 1.0:
            return (self.a - 1.0) / (self.a + self.b - 2.0)
        if self.a <= 1.0 < self.b:
            return 0.0
        if self.b <= 1.0 < self.a:
            return 1.0
        return 0.5

    def unimodal_continuous(self) -> bool:
        # interior mode with strictly decreasing flanks; excludes the flat
        # a = b = 1 case and the U/J-shaped ones
        return self.a >= 1.0 and self.b >= 1.0 and not (self.a == 1.0 and self.b == 1.0)

    def mean(self) -> float:
        return self.a / (self.a + self.b)

    def density(self, u):
        u = self._check_finite(u)
        if u < 0.0 or u > 1.0:
            raise DomainError(f"{u} outside the support of a beta density")
        if u == 0.0:
            if self.a > 1.0:
                return 0.0
            if self.a == 1.0:
                return math.exp(-log_beta(self.a, self.b))
            raise DomainError("beta density unbounded at 0")
        if u == 1.0:
            if self.b > 1.0:
                return 0.0
            if self.b == 1.0:
                return math.exp(-log_beta(self.a, self.b))
            raise DomainError("beta density unbounded at 1")
        logpdf = ((self.a - 1.0) * math.log(u) + (self.b - 1.0) * math.log1p(-u)
                  - log_beta(self.a, self.b))
        return math.exp(logpdf)

    def cdf(self, u):
        u = float(u)
        if u <= 0.0:
            return 0.0
        if u >= 1.0:
            return 1.0
        return betainc_reg(self.a, self.b, u)

    def sf(self, u: float) -> float:
        """Survival function, evaluated in the numerically stable direction."""
        u = float(u)
        if u <= 0.0:
            return 1.0
        if u >= 1.0:
            return 0.0
        return betainc_reg(self.b, self.a, 1.0 - u)

    def density_derivative(self, u):
        u = float(u)
        if u <= 0.0 or u >= 1.0:
            raise DomainError("derivative needs an interior point")
        return self.density(u) * ((self.a - 1.0) / u - (self.b - 1.0) / (1.0 - u))

    def sf_quantile(self, q: float) -> float:
        """Solves sf(x) = q; returned as 1 - (lower quantile of the mirror)."""
        return 1.0 - Beta(self.b, self.a).quantile(q)

    def sample(self, rng, m):
        return rng.beta(self.a, self.b, self._check_m(m))


@dataclass(frozen=True)
class Binomial(Distribution):
    """Binomial(n, p); density() returns the pmf at integer points."""

    n: int
    p: float

    family = "binomial"
    is_continuous = False

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("need at least one trial")
        if not 0.0 <= self.p <= 1.0:
            raise DomainError("success probability outside [0,1]")

    def support(self):
        return (0.0, float(self.n))

    def density(self, u):
        u = self._check_finite(u)
        k = round(u)
        if abs(u - k) > 1e-9 or k < 0 or k > self.n:
            return 0.0
        return self.pmf(int(k))

    def pmf(self, k: int) -> float:
        if k < 0 or k > self.n:
            return 0.0
        if self.p == 0.0:
            return 1.0 if k == 0 else 0.0
        if self.p == 1.0:
            return 1.0 if k == self.n else 0.0
        logpmf = (math.lgamma(self.n + 1) - math.lgamma(k + 1)
                  - math.lgamma(self.n - k + 1)
                  + k * math.log(self.p) + (self.n - k) * math.log1p(-self.p))
        return math.exp(logpmf)

    def cdf(self, u):
        u = float(u)
        k = math.floor(u + 1e-12)
        if k < 0:
            return 0.0
        if k >= self.n:
            return 1.0
        # P(X <= k) = I_{1-p}(n-k, k+1)
        return betainc_reg(self.n - k, k + 1.0, 1.0 - self.p)

    def quantile(self, p):
        if not 0.0 < p < 1.0:
            raise DomainError(f"quantile needs p in (0,1), got {p}")
        acc = 0.0
        for k in range(self.n + 1):
            acc += self.pmf(k)
            if acc >= p - 1e-15:
                return float(k)
        return float(self.n)

    def sample(self, rng, m):
        return rng.binomial(self.n, self.p, self._check_m(m))


@dataclass(frozen=True)
class Uniform01(Distribution):
    """Uniform on (0, 1)."""

    family = "uniform01"

    def support(self):
        return (0.0, 1.0)

    def mode(self) -> float:
        return 0.5

    def unimodal_continuous(self) -> bool:
        return False  # flat density: every point is a mode

    def density(self, u):
        u = self._check_finite(u)
        return 1.0 if 0.0 <= u <= 1.0 else 0.0

    def cdf(self, u):
        return min(1.0, max(0.0, float(u)))

    def quantile(self, p):
        if not 0.0 < p < 1.0:
            raise DomainError(f"quantile needs p in (0,1), got {p}")
        return p

    def sample(self, rng, m):
        return rng.uniform(0.0, 1.0, self._check_m(m))


def normal() -> Normal:
    return Normal()


def student_t(df: float) -> StudentT:
    return StudentT(df)


def skew_normal(slant: float) -> SkewNormal:
    return SkewNormal(slant)


def beta(a: float, b: float) -> Beta:
    return Beta(a, b)


def binomial(n: int, p: float) -> Binomial:
    return Binomial(n, p)


def uniform01() -> Uniform01:
    return Uniform01()
