"""Numeric evaluation of the squared-generator spectral density on (0, e).

The law of T*T for the quasi-nilpotent generator is absolutely continuous on
[0, e] with density phi given parametrically: with
rho(v) = (sin v / v) exp(v cot v) on (0, pi), which decreases from e to 0,

    phi(rho(v)) = (1/pi) sin(v) exp(-v cot v).

All integrals are taken in the v-parameter, where the integrand

    -phi(rho(v)) rho'(v) = ((v - sin v)^2 + 2 v sin v (1 - cos v)) / (pi v^2)

is smooth on [0, pi]; the x-form has a 1/(x log^2 x) spike at 0 that the
substitution removes entirely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import CapExceededError

SUPPORT_UPPER = math.e  # the spectral law of T*T lives on [0, e]
DEFAULT_MOMENT_CAP = 8
_V_EPS = 1e-8
_PHI_TOL = 1e-13 * math.e


@dataclass(frozen=True)
class DensityPoint:
    """A point on the density curve: x in (0, e), phi(x), and its parameter v."""

    x: float
    phi: float
    v: float


def _v_cot_v(v: float) -> float:
    if v < 1e-6:
        return 1.0 - v * v / 3.0  # series; avoids 0/0 at the origin
    return v * math.cos(v) / math.sin(v)


def rho(v: float) -> float:
    """(sin v / v) exp(v cot v); strictly decreasing, rho(0+) = e, rho(pi-) = 0."""
    if not 0.0 <= v <= math.pi:
        raise ValueError(f"rho requires 0 <= v <= pi, got {v}")
    if v == 0.0:
        return math.e
    if v == math.pi:
        return 0.0
    sinc = math.sin(v) / v
    if sinc <= 0.0:
        return 0.0
    return sinc * math.exp(_v_cot_v(v))


def rho_prime(v: float) -> float:
    """d rho/dv via the logarithmic derivative 2 cot v - 1/v - v/sin^2 v."""
    if not 0.0 < v < math.pi:
        raise ValueError(f"rho_prime requires 0 < v < pi, got {v}")
    s = math.sin(v)
    return rho(v) * (2.0 * math.cos(v) / s - 1.0 / v - v / (s * s))


def _phi_of_v(v: float) -> float:
    exponent = -_v_cot_v(v)
    if exponent > 700.0:  # the density diverges at the lower support edge
        return math.inf
    return math.sin(v) * math.exp(exponent) / math.pi


def _solve_v(x: float) -> float:
    """Bisect rho(v) = x on (0, pi); rho is strictly decreasing."""
    lo, hi = _V_EPS, math.pi - _V_EPS
    if x >= rho(lo):
        raise ValueError(f"{x} is too close to the upper support endpoint to resolve")
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        val = rho(mid)
        if abs(val - x) <= _PHI_TOL:
            break
        if val > x:
            lo = mid
        else:
            hi = mid
    return mid


def phi_at(x: float) -> float:
    """Density at x in (0, e), by bisecting the parametrization.

    rho is strictly decreasing, so bisection is unconditionally safe; it runs
    until the bracket pinpoints rho(v) within 1e-13 * e of x.
    """
    if not 0.0 < x < SUPPORT_UPPER:
        raise ValueError(f"phi is defined on (0, e); got {x}")
    return _phi_of_v(_solve_v(x))


def density_point_at(x: float) -> DensityPoint:
    """Like :func:`phi_at` but keeping the located parameter value."""
    if not 0.0 < x < SUPPORT_UPPER:
        raise ValueError(f"phi is defined on (0, e); got {x}")
    v = _solve_v(x)
    return DensityPoint(x, _phi_of_v(v), v)


def _weight(v: float) -> float:
    # -phi(rho(v)) * rho'(v), simplified; smooth with limits 0 at 0, 1/pi at pi
    if v < 1e-9:
        return 0.0
    s = math.sin(v)
    return ((v - s) ** 2 + 2.0 * v * s * (1.0 - math.cos(v))) / (math.pi * v * v)


def density_moment(p: int, max_p: int = DEFAULT_MOMENT_CAP) -> float:
    """integral of x^p phi(x) dx over (0, e), via adaptive quadrature in v."""
    if p < 0:
        raise ValueError("moment order must be nonnegative")
    if p > max_p:
        raise CapExceededError(f"moment order {p} exceeds the cap of {max_p}")

    def integrand(v: float) -> float:
        w = _weight(v)
        return w if p == 0 else w * rho(v) ** p

    value, _err = quad(integrand, 0.0, math.pi, epsabs=1e-12, epsrel=1e-12, limit=200)
    return value


def density_grid(num_points: int = 200) -> list[DensityPoint]:
    """Sample the density curve on a uniform v-grid, returned with x increasing.

    Points whose x underflows to 0 or whose density overflows (the curve
    diverges at the lower support edge) are dropped, so fewer than
    ``num_points`` entries may come back for very fine grids.
    """
    if num_points < 1:
        raise ValueError("need at least one grid point")
    pts = []
    for i in range(1, num_points + 1):
        v = math.pi * i / (num_points + 1)
        x = rho(v)
        phi = _phi_of_v(v)
        if x > 0.0 and math.isfinite(phi):
            pts.append(DensityPoint(x, phi, v))
    pts.reverse()  # rho decreases in v, so reversing sorts by x
    return pts
