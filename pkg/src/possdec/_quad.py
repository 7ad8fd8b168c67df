"""Small Gauss-Legendre quadrature toolkit used by the integration-heavy
modules.

Everything here works on plain Python callables ``f(x) -> float``.  The
routines are deterministic: node placement depends only on the interval
partition, never on RNG state or dict iteration order.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import NonPrevisibleError


@lru_cache(maxsize=None)
def gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def gl_panel(f: Callable[[float], float], a: float, b: float, n: int = 16) -> float:
    """Fixed-order Gauss-Legendre estimate of the integral of f over [a, b]."""
    x, w = gl_nodes(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    total = 0.0
    for xi, wi in zip(x, w):
        total += wi * f(mid + half * xi)
    return half * total


def adaptive_gl(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol_abs: float,
    n: int = 16,
    max_depth: int = 14,
) -> tuple[float, float]:
    """Adaptive Gauss-Legendre on [a, b].

    Splits a panel whenever the whole-panel estimate disagrees with the sum
    of the two half-panel estimates by more than the panel's share of
    ``tol_abs``.  Returns (value, error_estimate).
    """
    whole = gl_panel(f, a, b, n)
    return _adapt(f, a, b, whole, tol_abs, n, max_depth)


def _adapt(f, a, b, whole, tol_abs, n, depth):
    mid = 0.5 * (a + b)
    left = gl_panel(f, a, mid, n)
    right = gl_panel(f, mid, b, n)
    err = abs(left + right - whole)
    if err <= tol_abs or depth <= 0:
        return left + right, err
    vl, el = _adapt(f, a, mid, left, 0.5 * tol_abs, n, depth - 1)
    vr, er = _adapt(f, mid, b, right, 0.5 * tol_abs, n, depth - 1)
    return vl + vr, el + er


def integrate_line(
    f: Callable[[float], float],
    center: float,
    scale: float,
    rel_tol: float = 1e-8,
    n: int = 16,
    max_doublings: int = 64,
) -> tuple[float, float]:
    """Integral of a decaying integrand over the whole real line.

    Works outward from ``center`` over geometrically widening panels
    (symmetric pairs, so even/odd structure around the center is preserved
    exactly by the rule).  Each wing stops once its panel contributions have
    entered a decaying regime and the extrapolated remainder is below the
    tolerance.  Raises NonPrevisibleError if a wing shows no decay after
    exhausting the doubling budget.
    """
    total = gl_panel(f, center - scale, center + scale, n)
    err = 0.0
    for sign in (-1.0, 1.0):
        inner = scale
        width = scale
        prev = math.inf
        stalled = 0
        for _ in range(max_doublings):
            lo = center + sign * inner
            hi = center + sign * (inner + width)
            part = gl_panel(f, min(lo, hi), max(lo, hi), n)
            total += part
            inner += width
            width *= 2.0
            apart = abs(part)
            if apart >= prev and apart > rel_tol * max(abs(total), 1e-300):
                stalled += 1
                if stalled >= 3:
                    raise NonPrevisibleError(
                        "integrand shows no tail decay; integral diverges"
                    )
            else:
                stalled = 0
            if apart < prev:
                ratio = apart / prev if prev > 0 else 0.0
                tail = apart * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf
            else:
                tail = apart
            prev = apart
            if apart <= 0.25 * rel_tol * abs(total) and tail <= 0.5 * rel_tol * abs(
                total
            ):
                err += tail
                break
        else:
            raise NonPrevisibleError("tail integral did not converge")
    return total, err


def integrate_unit(
    f: Callable[[float], float],
    rel_tol: float = 1e-8,
    n: int = 16,
    max_halvings: int = 52,
) -> tuple[float, float]:
    """Integral over (0, 1) tolerant of integrable endpoint singularities.

    Dyadic panels shrink toward both endpoints; refinement at an endpoint
    stops once the extrapolated remainder there is negligible.  Raises
    NonPrevisibleError when panel contributions near an endpoint do not
    decay (non-integrable singularity).
    """
    total = gl_panel(f, 0.25, 0.75, n)
    err = 0.0
    for left in (True, False):
        edge = 0.25
        prev = math.inf
        stalled = 0
        for _ in range(max_halvings):
            nxt = 0.5 * edge
            a, b = (nxt, edge) if left else (1.0 - edge, 1.0 - nxt)
            part = gl_panel(f, a, b, n)
            if not math.isfinite(part):
                raise NonPrevisibleError("integrand is infinite near an endpoint")
            total += part
            edge = nxt
            apart = abs(part)
            if apart >= prev and apart > rel_tol * max(abs(total), 1e-300):
                stalled += 1
                if stalled >= 6:
                    raise NonPrevisibleError(
                        "endpoint singularity is not integrable"
                    )
            else:
                stalled = 0
            if apart < prev:
                ratio = apart / prev if prev > 0 else 0.0
                tail = apart * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf
            else:
                tail = apart
            prev = apart
            if apart <= 0.25 * rel_tol * abs(total) and tail <= 0.5 * rel_tol * abs(
                total
            ):
                err += tail
                break
        else:
            raise NonPrevisibleError("endpoint refinement did not converge")
    return total, err
