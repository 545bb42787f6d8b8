"""Scalar special functions for the Z2^N Dunkl setting.

Everything here is pure and reentrant: gamma, the normalized modified
Bessel series ``jhat``, Laguerre polynomials, and the one-dimensional /
product Dunkl kernels built from them.  All kernel-style functions accept
numpy arrays and broadcast elementwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import special as _sp

from .errors import DomainError, RangeError, UsageError

# Default ceiling on |u| for normalized_ibessel and the kernels built on it.
# Callers that know their quadrature geometry may raise it explicitly.
U_MAX_DEFAULT = 80.0

# Below this magnitude the direct power series is used (it is cheap and
# suffers no cancellation there); above, the Amos-backed Bessel routines
# take over.  Chosen so the worst-case alternating-series amplification at
# the cutoff stays ~1e2 (three digits lost at most).
_SERIES_CUTOFF = 8.0
_SERIES_RELTOL = 1e-15
_SERIES_MAX_TERMS = 200


def gamma_fn(x):
    """Gamma function for real x > 0.

    Backed by the C library implementation (relative error well under
    1e-13 on [0.5, 50]); non-positive or non-finite arguments are domain
    errors because every caller in this package needs a finite positive
    value.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"gamma_fn requires x > 0, got {x!r}")
    return math.gamma(x)


@dataclass(frozen=True)
class BesselOrder:
    """Order nu >= -1/2 of a normalized Bessel-type kernel."""

    nu: float

    def __post_init__(self):
        nu = float(self.nu)
        if not math.isfinite(nu) or nu < -0.5:
            raise DomainError(f"Bessel order must satisfy nu >= -1/2, got {self.nu!r}")
        object.__setattr__(self, "nu", nu)

    def shift(self, by=1):
        return BesselOrder(self.nu + by)


@dataclass(frozen=True)
class Multiplicity:
    """Multiplicity vector mu for Z2^N, one weight per coordinate sign-flip.

    Carries the derived constants used throughout: the homogeneity index
    gamma = sum(mu), the Mehta-type normalization c_k, the radial index
    lambda = gamma + N/2 - 1 and the per-coordinate Bessel orders
    nu_j = mu_j - 1/2.  ``mu_exact`` keeps the exact (dyadic) rationals so
    the polynomial algebra downstream never rounds.
    """

    mu: tuple
    mu_exact: tuple

    def __init__(self, mu):
        try:
            values = [Fraction(m) for m in mu]
        except (TypeError, ValueError) as exc:
            raise DomainError(f"multiplicity entries must be numeric: {mu!r}") from exc
        if len(values) < 1:
            raise DomainError("multiplicity vector must have N >= 1 entries")
        if any(v < 0 for v in values):
            raise DomainError(f"multiplicity entries must be >= 0, got {mu!r}")
        object.__setattr__(self, "mu_exact", tuple(values))
        object.__setattr__(self, "mu", tuple(float(v) for v in values))

    @property
    def dim(self):
        return len(self.mu)

    @property
    def gamma_index(self):
        """gamma = sum_j mu_j (degree of homogeneity of w_k is 2*gamma)."""
        return float(sum(self.mu_exact))

    @property
    def gamma_exact(self):
        return sum(self.mu_exact)

    @property
    def mehta_constant(self):
        """c_k = (integral of exp(-|x|^2) w_k(x) dx)^-1 = prod 1/Gamma(mu_j + 1/2)."""
        out = 1.0
        for m in self.mu:
            out /= gamma_fn(m + 0.5)
        return out

    @property
    def lambda_index(self):
        """lambda = gamma + N/2 - 1, the radial Bessel index."""
        return self.gamma_index + 0.5 * self.dim - 1.0

    @property
    def orders(self):
        """Per-coordinate Bessel orders nu_j = mu_j - 1/2."""
        return tuple(BesselOrder(m - 0.5) for m in self.mu)

    def weight(self, x):
        """w_k(x) = prod_j |x_j|^(2 mu_j); x has shape (..., N)."""
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.dim:
            raise UsageError(f"points have dim {x.shape[-1]}, multiplicity has dim {self.dim}")
        out = np.ones(x.shape[:-1])
        for j, m in enumerate(self.mu):
            if m != 0.0:
                out = out * np.abs(x[..., j]) ** (2.0 * m)
        return out


def _jhat_series(nu, u):
    """Direct power series for jhat_nu; only safe for moderate |u|."""
    u = np.asarray(u, dtype=complex)
    q = u * u / 4.0
    term = np.ones_like(q)
    total = np.ones_like(q)
    scale = 1.0
    for n in range(_SERIES_MAX_TERMS):
        term = term * q / ((n + 1.0) * (n + 1.0 + nu))
        total = total + term
        scale = max(scale, float(np.max(np.abs(total))) if total.size else 1.0)
        if n >= 2 and float(np.max(np.abs(term))) < _SERIES_RELTOL * scale:
            return total
    raise RangeError("normalized_ibessel series failed to converge (argument too large)")


def _jhat_amos(nu, u):
    """jhat via Amos Bessel routines: Gamma(nu+1) (w/2)^(-nu) I_nu(w).

    Uses the evenness jhat(-u) = jhat(u) to keep Re(w) >= 0, away from the
    principal branch cuts of the power and of I_nu.  Negative orders go
    through the contiguous relation

        jhat_nu = jhat_{nu+1} + (u^2/4) jhat_{nu+2} / ((nu+1)(nu+2)),

    because the Amos reflection formula for I_{-|nu|} cancels badly at
    complex arguments; the two raised orders are positive and the relation
    runs in the stable (decreasing-magnitude) direction.
    """
    u = np.asarray(u, dtype=complex)
    if nu == -0.5:
        # jhat_{-1/2}(u) = cosh(u); avoids the 1/sqrt prefactor entirely.
        return np.cosh(u)
    if nu < 0.0:
        return _jhat_amos(nu + 1.0, u) + (u * u / 4.0) / (
            (nu + 1.0) * (nu + 2.0)
        ) * _jhat_amos(nu + 2.0, u)
    flip = (u.real < 0) | ((u.real == 0) & (u.imag < 0))
    w = np.where(flip, -u, u)
    imag_axis = bool(np.all(w.real == 0))
    if imag_axis:
        # w = i t, t >= 0: jhat(it) = Gamma(nu+1) (t/2)^(-nu) J_nu(t), all real.
        t = w.imag
        vals = np.where(t > 0, _sp.jv(nu, t), 1.0)
        pref = np.where(t > 0, np.power(np.where(t > 0, t, 1.0) / 2.0, -nu), 1.0)
        return (math.gamma(nu + 1.0) * pref * vals).astype(complex)
    body = _sp.iv(nu, w)
    pref = np.power(w / 2.0, -nu)
    return math.gamma(nu + 1.0) * pref * body


def normalized_ibessel(order, u, u_max=U_MAX_DEFAULT):
    """Normalized entire Bessel-type function

        jhat_nu(u) = Gamma(nu+1) * sum_{n>=0} (u/2)^(2n) / (n! Gamma(n+nu+1)).

    Even and entire in u, with jhat_nu(0) = 1 and jhat_nu(i x) equal to the
    classical normalized spherical Bessel function j_nu(x).  Accepts scalar
    or array u (complex); |u| above ``u_max`` raises RangeError, which
    signals the caller to shrink its quadrature box (or pass a larger
    ceiling after checking its own resolution).
    """
    if not isinstance(order, BesselOrder):
        order = BesselOrder(order)
    nu = order.nu
    u_arr = np.asarray(u, dtype=complex)
    amax = float(np.max(np.abs(u_arr))) if u_arr.size else 0.0
    if not math.isfinite(amax) or amax > u_max:
        raise RangeError(
            f"normalized_ibessel: |u| = {amax:.3g} exceeds u_max = {u_max:.3g}; "
            "shrink the quadrature box or raise u_max explicitly"
        )
    small = np.abs(u_arr) <= _SERIES_CUTOFF
    if np.all(small):
        out = _jhat_series(nu, u_arr)
    elif not np.any(small):
        out = _jhat_amos(nu, u_arr)
    else:
        out = np.empty(u_arr.shape, dtype=complex)
        out[small] = _jhat_series(nu, u_arr[small])
        out[~small] = _jhat_amos(nu, u_arr[~small])
    if np.isscalar(u) or np.ndim(u) == 0:
        return complex(out)
    return out


def laguerre_eval(m, a, t):
    """Laguerre polynomial L_m^{(a)}(t) by the three-term recurrence.

    Vectorized in t; exact (up to rounding) for all m, and literally exact
    for m <= 2 where the recurrence reduces to the closed forms.
    """
    if m < 0 or int(m) != m:
        raise DomainError(f"Laguerre degree must be a non-negative integer, got {m!r}")
    a = float(a)
    if a <= -1.0:
        raise DomainError(f"Laguerre parameter must satisfy a > -1, got {a!r}")
    t = np.asarray(t, dtype=float) if not np.isscalar(t) else t
    prev = np.ones_like(t, dtype=float) if not np.isscalar(t) else 1.0
    if m == 0:
        return prev
    cur = 1.0 + a - t
    for k in range(1, m):
        prev, cur = cur, ((2.0 * k + 1.0 + a - t) * cur - (k + a) * prev) / (k + 1.0)
    return cur


def dunkl_kernel_1d(order, z, y, u_max=U_MAX_DEFAULT):
    """One-dimensional Dunkl kernel for Z2 at Bessel order nu,

        K_nu(z, y) = jhat_nu(z y) + (z y / (2 (nu+1))) jhat_{nu+1}(z y),

    the analytic continuation of j_nu(xy) + i xy j_{nu+1}(xy)/(2(nu+1)) at
    z = ix.  Satisfies K(0, y) = 1, |K(ix, y)| <= 1 for real x, y, and is
    a function of the product z*y alone.  For nu = -1/2 it reduces to
    exp(z y).  Broadcasts over arrays in z and y.
    """
    if not isinstance(order, BesselOrder):
        order = BesselOrder(order)
    u = np.asarray(z, dtype=complex) * np.asarray(y, dtype=complex)
    first = normalized_ibessel(order, u, u_max=u_max)
    second = normalized_ibessel(order.shift(1), u, u_max=u_max)
    out = first + u / (2.0 * (order.nu + 1.0)) * second
    if np.ndim(u) == 0:
        return complex(out)
    return out


def dunkl_kernel_prod(mult, z, y, u_max=U_MAX_DEFAULT):
    """Product Dunkl kernel for W = Z2^N: K(z, y) = prod_j K_{nu_j}(z_j, y_j).

    z and y are vectors (or arrays with trailing axis of length N); equals
    1 at z = 0 and reduces to exp(i<x, y>) when all mu_j = 0 and z = ix.
    """
    z = np.asarray(z, dtype=complex)
    y = np.asarray(y, dtype=complex)
    n = mult.dim
    if z.shape[-1] != n or y.shape[-1] != n:
        raise UsageError(
            f"dimension mismatch: multiplicity has N={n}, z has {z.shape[-1]}, y has {y.shape[-1]}"
        )
    out = None
    for j, order in enumerate(mult.orders):
        factor = dunkl_kernel_1d(order, z[..., j], y[..., j], u_max=u_max)
        out = factor if out is None else out * factor
    return out
