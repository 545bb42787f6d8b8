"""Operator-theoretic numerics for the one-parameter transform group:
spectral projections, the resolvent of the generator, two independent
realizations of the generator itself, and difference-quotient convergence.

Group applications inside the s-integrals always go through the spectral
route (the integral route is singular at s in pi*Z, which every s-grid
hits).  Projections use the equispaced trapezoid rule, which is exact on
band-limited expansions by the Nyquist condition; the resolvent and the
semigroup-calculus integrals use composite Gauss-Legendre in s because
their integrands are not 2*pi-periodic.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .errors import DomainError, UsageError
from .polyengine import GaussPoly, MultiPoly, RationalComplex
from .quadrature import gauss_legendre
from .specfun import Multiplicity
from .transform import TransformPlan, fdt_integral, fdt_integral_on_grid, hermite_expand


class GroupSampler:
    """Samples of the 2*pi-periodic path s -> D_k^s on equispaced nodes.

    Q must satisfy the Nyquist condition Q >= 2*M + 2 so that the
    trapezoid rule is exact on expansions band-limited at degree M.
    Expansions are cached per function object (write-once, read-many).
    """

    def __init__(self, plan, q=64):
        if not isinstance(plan, TransformPlan):
            raise UsageError("GroupSampler needs a TransformPlan template")
        q = int(q)
        if q < 2 * plan.M + 2:
            raise DomainError(
                f"Q = {q} violates the Nyquist condition Q >= 2M+2 = {2 * plan.M + 2}"
            )
        self.plan = plan
        self.q = q
        self.s_nodes = 2.0 * math.pi * np.arange(q) / q
        self._cache = {}

    def expand(self, f):
        key = id(f)
        entry = self._cache.get(key)
        if entry is None or entry[0] is not f:
            entry = (f, hermite_expand(f, self.plan))
            self._cache[key] = entry
        return entry[1]

    def group_apply(self, f, s):
        """D_k^s f as a Hermite expansion (spectral route)."""
        return self.expand(f).map_coeffs(lambda n, c: cmath.exp(1j * n * s) * c)


def spectral_projection(f, n, sampler):
    """Spectral projection P_n f = (1/2pi) integral_0^{2pi} e^{-ins} D_k^s f ds
    by the equispaced trapezoid rule over the sampler nodes.

    Picks the total-degree-n component for n >= 0 and vanishes for n < 0
    (computed, not assumed)."""
    n = int(n)
    base = sampler.expand(f)
    factors = {}
    for d in {sum(nu) for nu in base.basis.indices}:
        factors[d] = complex(np.mean(np.exp(1j * (d - n) * sampler.s_nodes)))
    return base.map_coeffs(lambda d, c: factors[d] * c)


def _distance_to_int_times_i(lam):
    lam = complex(lam)
    return math.hypot(lam.real, lam.imag - round(lam.imag))


def _s_line_integral(lam, degrees, upper):
    """integral_0^upper e^{-lam s} e^{i d s} ds per degree d, by composite
    Gauss-Legendre (the integrand is smooth but not periodic)."""
    maxfreq = max(degrees) + abs(lam)
    panels = max(8, int(math.ceil(abs(upper) * (maxfreq + 2.0) / 5.0)))
    nodes, weights = gauss_legendre(12)
    edges = np.linspace(0.0, upper, panels + 1)
    out = {}
    svals = []
    wvals = []
    for a, b in zip(edges[:-1], edges[1:]):
        svals.append(0.5 * (b - a) * nodes + 0.5 * (a + b))
        wvals.append(0.5 * (b - a) * weights)
    svals = np.concatenate(svals)
    wvals = np.concatenate(wvals)
    for d in degrees:
        out[d] = complex(np.sum(wvals * np.exp((1j * d - lam) * svals)))
    return out


def resolvent_apply(f, lam, sampler, min_distance=0.1):
    """Resolvent R(lam, T) f = (1 - e^{-2 pi lam})^{-1}
    integral_0^{2pi} e^{-lam s} D_k^s f ds.

    Refuses lam within ``min_distance`` of i*Z where the prefactor blows up
    and the quadrature conditioning degrades.  On eigenfunctions the result
    is h_nu / (lam - i |nu|)."""
    lam = complex(lam)
    if _distance_to_int_times_i(lam) < min_distance:
        raise DomainError(
            f"lambda = {lam} is within {min_distance} of i*Z; resolvent refused"
        )
    base = sampler.expand(f)
    degrees = sorted({sum(nu) for nu in base.basis.indices})
    integrals = _s_line_integral(lam, degrees, 2.0 * math.pi)
    pref = 1.0 / (1.0 - cmath.exp(-2.0 * math.pi * lam))
    return base.map_coeffs(lambda d, c: pref * integrals[d] * c)


def generator_exact(f, mult):
    """Exact generator on Gaussian-polynomial functions:

        T f = -i (gamma + N/2) f + (i/2)(|x|^2 - Delta_k) f,

    computed in exact rational-complex arithmetic.  T h_nu = i |nu| h_nu."""
    if not isinstance(f, GaussPoly):
        raise UsageError("generator_exact acts on GaussPoly")
    if mult.dim != f.dim:
        raise UsageError("multiplicity and function dimensions differ")
    g = mult.gamma_exact + Fraction(mult.dim, 2)
    lap = f.dunkl_laplacian(mult).poly
    rsq = MultiPoly.radius_sq(f.dim)
    half_i = RationalComplex(0, Fraction(1, 2))
    poly = RationalComplex(0, -1) * g * f.poly + half_i * (rsq * f.poly - lap)
    return GaussPoly(poly)


def generator_integral(f, mult, grid, xs, u_max=None, diagnostics=False):
    """Generator realized by two numerical Dunkl transforms (alpha = -pi/2):

        T f(x) = -i (gamma + N/2) f(x) + (i/2) |x|^2 f(x)
                 + (i/2) D_k[ |y|^2 (D_k f)(y) ](-x).

    Matches generator_exact on Gaussian-polynomial inputs to quadrature
    tolerance.  With ``diagnostics=True`` also returns the unitarity defect
    of the inner transform, |(|D_k f| - |f|)| / |f| in L2 on the grid: an
    underresolved grid shows up there instead of passing silently."""
    plan = TransformPlan(mult, -0.5 * math.pi, grid=grid, M=0)
    xs = np.asarray(xs, dtype=float)
    if xs.ndim == 1:
        xs = xs[:, None] if mult.dim == 1 else xs[None, :]
    fvals = grid.values(f).astype(complex)
    first = fdt_integral_on_grid(fvals, plan, u_max=u_max)
    weighted = np.sum(grid.nodes**2, axis=-1) * first
    second = fdt_integral(weighted, plan, -xs, u_max=u_max)
    fx = np.asarray(f(xs), dtype=complex)
    g = mult.gamma_index + 0.5 * mult.dim
    out = -1j * g * fx + 0.5j * np.sum(xs * xs, axis=-1) * fx + 0.5j * second
    if not diagnostics:
        return out
    norm_in = math.sqrt(float(np.sum(grid.weights * np.abs(fvals) ** 2)))
    norm_out = math.sqrt(float(np.sum(grid.weights * np.abs(first) ** 2)))
    defect = abs(norm_out - norm_in) / norm_in if norm_in > 0 else 0.0
    return out, {"unitarity_defect": defect}


def difference_quotient(f, alpha_seq, plan):
    """L2 residuals |(D^a f - f)/a - T f| along a decreasing sequence of
    orders; first order in a for band-limited f.

    The quotient uses the spectral route (the integral route has no kernel
    as a -> 0) and T f carries the exact eigenvalues i|nu|."""
    base = hermite_expand(f, plan)
    out = []
    for a in alpha_seq:
        a = float(a)
        if a == 0.0:
            raise DomainError("difference quotient needs nonzero orders")
        resid_sq = 0.0
        for nu, c in zip(base.basis.indices, base.coeffs):
            n = sum(nu)
            factor = (cmath.exp(1j * n * a) - 1.0) / a - 1j * n
            resid_sq += abs(factor * c) ** 2
        out.append((a, math.sqrt(resid_sq)))
    return out


def observed_order(residuals):
    """Least-squares slope of log residual vs log step; ~1.0 for first-order
    convergence.  Pairs with zero residual are skipped."""
    pts = [(a, r) for a, r in residuals if r > 0.0]
    if len(pts) < 2:
        return None
    xs = np.log([a for a, _ in pts])
    ys = np.log([r for _, r in pts])
    slope = np.polyfit(xs, ys, 1)[0]
    return float(slope)


def eigen_decomposition_sum(f, sampler, n_max, apply_generator=False):
    """sum_{n=0..n_max} P_n f (or sum i n P_n f when ``apply_generator``),
    assembled from literal projections; reproduces f (resp. T f) up to the
    mass dropped beyond n_max."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    total = None
    for n in range(n_max + 1):
        term = spectral_projection(f, n, sampler)
        if apply_generator:
            term = term * (1j * n)
        total = term if total is None else total + term
    return total


def group_integral(f, upper, plan):
    """integral_0^upper D_k^s f ds as a Hermite expansion, by composite
    Gauss-Legendre in s over the spectral route."""
    base = hermite_expand(f, plan)
    degrees = sorted({sum(nu) for nu in base.basis.indices})
    integrals = _s_line_integral(0.0, degrees, float(upper))
    return base.map_coeffs(lambda d, c: integrals[d] * c)


def expansion_generator(expansion, mult):
    """Exact T applied to a Hermite expansion via its GaussPoly form."""
    return generator_exact(expansion.to_gauss_poly(), mult)
