"""Deterministic quadrature for the weighted measure w_k(y) dy on R^N.

Grids are tensor products of half-axis Gauss-Jacobi rules (the weight
|y|^(2 mu_j) is folded into the node weights exactly, and the two half-axis
panels meet at the cusp without placing a node on it).  Every grid is
validated at construction against the Mehta integral.  A uniform-angle
rule on the unit circle carries the normalized surface measure used by the
Funk-Hecke checks.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special as _sp

from .errors import CalibrationError, DomainError, RangeError, UsageError
from .specfun import Multiplicity, gamma_fn

_CALIBRATION_RTOL = 1e-9


def gauss_legendre(n):
    """Gauss-Legendre nodes and weights on [-1, 1].

    Nodes/weights accurate to ~1e-14 (Golub-Welsch via numpy); the weights
    sum to 2 and the rule integrates x^k exactly for k <= 2n-1.
    """
    if not (1 <= n <= 512):
        raise RangeError(f"gauss_legendre supports 1 <= n <= 512, got {n}")
    return np.polynomial.legendre.leggauss(int(n))


def jacobi_halfline(n, exponent, length):
    """Nodes/weights for integral_0^length g(t) t^exponent dt, g smooth.

    Gauss-Jacobi rule with the algebraic endpoint factor t^exponent folded
    into the weights, so the cusp at 0 costs no accuracy.  exponent > -1.
    """
    if exponent <= -1.0:
        raise DomainError(f"jacobi_halfline needs exponent > -1, got {exponent}")
    if n < 1:
        raise DomainError("jacobi_halfline needs n >= 1")
    if exponent == 0.0:
        x, w = gauss_legendre(n)
    else:
        x, w = _sp.roots_jacobi(int(n), 0.0, float(exponent))
    t = 0.5 * length * (x + 1.0)
    wt = w * (0.5 * length) ** (exponent + 1.0)
    return t, wt


@dataclass(frozen=True, eq=False)
class QuadGrid:
    """Tensor quadrature grid on [-L, L]^N with w_k folded into the weights.

    ``axes_nodes[j]`` / ``axes_weights[j]`` are the per-axis rules (weights
    already include |t|^(2 mu_j)); ``nodes`` (npts, N) and ``weights``
    (npts,) are the flattened tensor product in row-major (first axis
    slowest) order.  Summation is numpy's pairwise reduction, deterministic
    at a fixed thread count of 1.
    """

    mult: Multiplicity
    box: float
    points_per_axis: int
    axes_nodes: tuple = field(repr=False)
    axes_weights: tuple = field(repr=False)
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return self.mult.dim

    @property
    def shape(self):
        return tuple(len(t) for t in self.axes_nodes)

    def values(self, f):
        """Evaluate f on the flattened nodes; f may already be an array."""
        if isinstance(f, np.ndarray):
            if f.shape != (self.nodes.shape[0],):
                raise UsageError(
                    f"value array has shape {f.shape}, grid has {self.nodes.shape[0]} nodes"
                )
            return f
        return np.asarray(f(self.nodes))

    def integrate(self, f):
        """Integral of f against w_k(y) dy over the box."""
        return np.sum(self.weights * self.values(f))

    def inner(self, f, g):
        """<f, g> = integral of f * conj(g) * w_k."""
        return np.sum(self.weights * self.values(f) * np.conj(self.values(g)))

    def norm_l2(self, f):
        vals = self.values(f)
        return math.sqrt(float(np.sum(self.weights * np.abs(vals) ** 2).real))

    def to_tensor(self, values):
        return np.asarray(values).reshape(self.shape)

    def to_json(self):
        return {
            "dim": self.dim,
            "mu": [float(m) for m in self.mult.mu],
            "L": self.box,
            "n": self.points_per_axis,
        }

    @staticmethod
    def from_json(obj):
        return build_grid(Multiplicity(obj["mu"]), L=obj["L"], n=obj["n"])


def build_grid(mult, L=8.0, n=None):
    """Build the tensor rule for integral over [-L, L]^N of f(y) w_k(y) dy.

    ``n`` is the point count per half-axis panel (2n points per axis);
    defaults to 120 for N = 1 and 80 for N >= 2.  Construction verifies the
    Mehta calibration sum(w * exp(-|y|^2)) = 1/c_k to relative 1e-9 and
    raises CalibrationError otherwise.
    """
    if L <= 0:
        raise DomainError(f"box half-width must be positive, got {L}")
    if n is None:
        n = 120 if mult.dim == 1 else 80
    if n < 8:
        raise DomainError(f"need at least 8 points per panel, got {n}")
    axes_nodes, axes_weights = [], []
    for m in mult.mu:
        t, wt = jacobi_halfline(n, 2.0 * m, L)
        order = np.argsort(t)
        t, wt = t[order], wt[order]
        axes_nodes.append(np.concatenate([-t[::-1], t]))
        axes_weights.append(np.concatenate([wt[::-1], wt]))
    mesh = np.meshgrid(*axes_nodes, indexing="ij")
    nodes = np.stack([m.ravel() for m in mesh], axis=-1)
    wmesh = np.meshgrid(*axes_weights, indexing="ij")
    weights = np.ones(nodes.shape[0])
    for w in wmesh:
        weights = weights * w.ravel()
    grid = QuadGrid(
        mult=mult,
        box=float(L),
        points_per_axis=int(n),
        axes_nodes=tuple(axes_nodes),
        axes_weights=tuple(axes_weights),
        nodes=nodes,
        weights=weights,
    )
    total = 1.0
    for t, wt in zip(axes_nodes, axes_weights):
        total *= float(np.sum(wt * np.exp(-(t**2))))
    target = 1.0 / mult.mehta_constant
    if abs(total - target) > _CALIBRATION_RTOL * abs(target):
        raise CalibrationError(
            f"grid failed Mehta calibration: got {total!r}, expected {target!r} "
            f"(L={L}, n={n}, mu={mult.mu})"
        )
    return grid


def inner_product(f, g, grid):
    """<f, g> = sum_i w_i f(x_i) conj(g(x_i)) on the grid."""
    return grid.inner(f, g)


@dataclass(frozen=True, eq=False)
class CircleGrid:
    """Uniform-angle rule for the normalized surface measure on S^1.

    Weights are exactly 1/n each, so the total mass is exactly 1; the rule
    is spectrally accurate for smooth periodic integrands (the non-smooth
    weight w_k converges algebraically, so identity checks against it use
    large n).
    """

    angles: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def size(self):
        return len(self.angles)

    @property
    def points(self):
        """Unit vectors (n, 2) on the circle."""
        return np.stack([np.cos(self.angles), np.sin(self.angles)], axis=-1)

    def integrate(self, values):
        return np.sum(self.weights * np.asarray(values))

    def surface_weight_mass(self, mult):
        """d_k = integral of w_k over the circle against d(sigma)."""
        if mult.dim != 2:
            raise UsageError("circle rule carries the N = 2 surface measure")
        return float(self.integrate(mult.weight(self.points)))


def circle_grid(n):
    """Uniform trapezoid rule on the circle with weights 1/n."""
    if n < 8:
        raise DomainError(f"circle_grid needs n >= 8, got {n}")
    n = int(n)
    angles = 2.0 * math.pi * np.arange(n) / n
    return CircleGrid(angles=angles, weights=np.full(n, 1.0 / n))


def circle_identity_residual(mult, n=1 << 20):
    """Relative residual of c_k^-1 = pi^(N/2) Gamma(lambda+1) d_k / Gamma(N/2).

    Relates the Mehta constant to the circle mass d_k for N = 2; the
    default n overcomes the algebraic cusp of w_k on the circle.
    """
    if mult.dim != 2:
        raise UsageError("the c_k/d_k relation is exercised for N = 2 only")
    circle = circle_grid(n)
    d_k = circle.surface_weight_mass(mult)
    lhs = 1.0 / mult.mehta_constant
    rhs = math.pi * gamma_fn(mult.lambda_index + 1.0) * d_k / gamma_fn(1.0)
    return abs(lhs - rhs) / abs(lhs)
