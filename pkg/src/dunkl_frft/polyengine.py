"""Exact algebra for Z2^N Dunkl operators on polynomials and
Gaussian-times-polynomial functions.

Coefficients are exact complex rationals (pairs of Fractions), so Dunkl
derivatives, the Dunkl Laplacian, the nilpotent heat exponential and the
Hermite operator Delta_k - |x|^2 all run without rounding; floating point
enters only at evaluation time.  The generalized Hermite basis is built as
tensor products of one-dimensional heat-regularized monomials.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DomainError, RangeError, UsageError
from .specfun import Multiplicity, gamma_fn, laguerre_eval


class RationalComplex:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def coerce(value):
        out = RationalComplex._try_coerce(value)
        if out is None:
            raise UsageError(f"cannot use {type(value).__name__} as an exact coefficient")
        return out

    @staticmethod
    def _try_coerce(value):
        if isinstance(value, RationalComplex):
            return value
        if isinstance(value, complex):
            return RationalComplex(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, (int, float, Fraction, str)):
            return RationalComplex(Fraction(value))
        if isinstance(value, np.integer):
            return RationalComplex(Fraction(int(value)))
        if isinstance(value, np.floating):
            return RationalComplex(Fraction(float(value)))
        if isinstance(value, np.complexfloating):
            c = complex(value)
            return RationalComplex(Fraction(c.real), Fraction(c.imag))
        return None

    def __add__(self, other):
        other = RationalComplex._try_coerce(other)
        if other is None:
            return NotImplemented
        return RationalComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return RationalComplex(-self.re, -self.im)

    def __sub__(self, other):
        other = RationalComplex._try_coerce(other)
        if other is None:
            return NotImplemented
        return RationalComplex(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        other = RationalComplex._try_coerce(other)
        if other is None:
            return NotImplemented
        return RationalComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return RationalComplex(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = RationalComplex._try_coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"RationalComplex({self.re!r}, {self.im!r})"


def _as_coeff(value):
    return RationalComplex.coerce(value)


class MultiPoly:
    """Polynomial in N variables with exact complex-rational coefficients.

    Treated as immutable: all operations return new instances, zero
    coefficients are never stored, and float conversion happens only in
    ``__call__``.
    """

    __slots__ = ("dim", "terms", "_float_cache")

    def __init__(self, dim, terms=None):
        if dim < 1:
            raise DomainError(f"polynomial dimension must be >= 1, got {dim}")
        self.dim = int(dim)
        clean = {}
        for exponents, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exponents)
            if len(key) != self.dim or any(e < 0 for e in key):
                raise UsageError(f"bad multi-index {exponents!r} for dim {self.dim}")
            c = _as_coeff(coeff)
            if c:
                clean[key] = c
        self.terms = clean
        self._float_cache = None

    @staticmethod
    def zero(dim):
        return MultiPoly(dim)

    @staticmethod
    def constant(value, dim):
        return MultiPoly(dim, {(0,) * dim: value})

    @staticmethod
    def monomial(exponents, coeff=1):
        return MultiPoly(len(exponents), {tuple(exponents): coeff})

    @staticmethod
    def variable(j, dim):
        exps = [0] * dim
        exps[j] = 1
        return MultiPoly(dim, {tuple(exps): 1})

    @staticmethod
    def radius_sq(dim):
        """The polynomial |x|^2 = sum_j x_j^2."""
        out = MultiPoly(dim)
        for j in range(dim):
            e = [0] * dim
            e[j] = 2
            out = out + MultiPoly(dim, {tuple(e): 1})
        return out

    @property
    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self):
        """The common total degree of all terms, or None if inhomogeneous."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None if degrees else 0

    def _binary(self, other, sign):
        if isinstance(other, MultiPoly):
            if other.dim != self.dim:
                raise UsageError("polynomial dimensions differ")
            out = dict(self.terms)
            for key, c in other.terms.items():
                val = out.get(key, RationalComplex()) + (c if sign > 0 else -c)
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
            return MultiPoly(self.dim, out)
        return self._binary(MultiPoly.constant(other, self.dim), sign)

    def __add__(self, other):
        return self._binary(other, +1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, -1)

    def __neg__(self):
        return MultiPoly(self.dim, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            if other.dim != self.dim:
                raise UsageError("polynomial dimensions differ")
            out = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    key = tuple(a + b for a, b in zip(ka, kb))
                    val = out.get(key, RationalComplex()) + ca * cb
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
            return MultiPoly(self.dim, out)
        c = _as_coeff(other)
        if not c:
            return MultiPoly.zero(self.dim)
        return MultiPoly(self.dim, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def times_coordinate(self, j):
        out = {}
        for key, c in self.terms.items():
            shifted = list(key)
            shifted[j] += 1
            out[tuple(shifted)] = c
        return MultiPoly(self.dim, out)

    def conjugate(self):
        return MultiPoly(self.dim, {k: c.conjugate() for k, c in self.terms.items()})

    def _floats(self):
        if self._float_cache is None:
            exps = np.array(sorted(self.terms), dtype=int).reshape(len(self.terms), self.dim)
            coeffs = np.array([complex(self.terms[tuple(e)]) for e in exps], dtype=complex)
            self._float_cache = (exps, coeffs)
        return self._float_cache

    def __call__(self, x):
        """Evaluate at points x of shape (..., N); returns complex values."""
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.dim:
            raise UsageError(f"points have dim {x.shape[-1]}, polynomial has dim {self.dim}")
        if not self.terms:
            return np.zeros(x.shape[:-1], dtype=complex)
        exps, coeffs = self._floats()
        maxdeg = int(exps.max())
        powers = np.ones((maxdeg + 1,) + x.shape, dtype=float)
        for d in range(1, maxdeg + 1):
            powers[d] = powers[d - 1] * x
        out = np.zeros(x.shape[:-1], dtype=complex)
        for e, c in zip(exps, coeffs):
            mono = np.ones(x.shape[:-1])
            for j in range(self.dim):
                if e[j]:
                    mono = mono * powers[e[j], ..., j]
            out += c * mono
        return out

    def to_json(self):
        return {
            "dim": self.dim,
            "terms": [
                {"exp": list(k), "re": str(c.re), "im": str(c.im)}
                for k, c in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(obj):
        terms = {}
        for t in obj["terms"]:
            terms[tuple(t["exp"])] = RationalComplex(
                Fraction(t.get("re", "0")), Fraction(t.get("im", "0"))
            )
        return MultiPoly(obj["dim"], terms)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for key, c in sorted(self.terms.items()):
            mono = "*".join(f"x{j}^{e}" for j, e in enumerate(key) if e) or "1"
            bits.append(f"({complex(c):.6g})*{mono}")
        return "MultiPoly[" + " + ".join(bits) + "]"


def dunkl_derivative(p, j, mult):
    """Dunkl derivative T_j for Z2^N, exactly on the coefficient map.

    On a monomial factor x_j^n: n x_j^(n-1) for even n, (n + 2 mu_j)
    x_j^(n-1) for odd n; other coordinates ride along.
    """
    if j < 0 or j >= p.dim:
        raise UsageError(f"axis {j} out of range for dim {p.dim}")
    if mult.dim != p.dim:
        raise UsageError("multiplicity and polynomial dimensions differ")
    two_mu = 2 * mult.mu_exact[j]
    out = {}
    for key, c in p.terms.items():
        n = key[j]
        if n == 0:
            continue
        factor = Fraction(n) if n % 2 == 0 else Fraction(n) + two_mu
        shifted = list(key)
        shifted[j] -= 1
        skey = tuple(shifted)
        val = out.get(skey, RationalComplex()) + c * factor
        if val:
            out[skey] = val
        else:
            out.pop(skey, None)
    return MultiPoly(p.dim, out)


def dunkl_laplacian(p, mult):
    """Generalized Laplacian Delta_k = sum_j T_j^2, exact."""
    out = MultiPoly.zero(p.dim)
    for j in range(p.dim):
        out = out + dunkl_derivative(dunkl_derivative(p, j, mult), j, mult)
    return out


def heat_exp_poly(p, c, mult):
    """exp(c * Delta_k) p as the finite nilpotent sum sum_s c^s Delta_k^s p / s!.

    Exact whenever c is rational (floats and complex values are coerced to
    their exact dyadic representation, so the arithmetic never rounds).
    """
    scale = _as_coeff(c)
    out = p
    term = p
    s = 0
    while True:
        term = dunkl_laplacian(term, mult)
        if term.is_zero:
            return out
        s += 1
        coeff = RationalComplex(1)
        for _ in range(s):
            coeff = coeff * scale
        coeff = coeff * Fraction(1, math.factorial(s))
        out = out + term * coeff
        if s > p.degree:
            raise RangeError("heat exponential failed to terminate (non-nilpotent input?)")


class GaussPoly:
    """Function of the form poly(x) * exp(-|x|^2 / 2), closed under the
    Dunkl operators and coordinate multiplication.

    The closure rule T_j(q * G) = (T_j q - x_j q) * G (with G the Gaussian)
    keeps everything inside the class with exact coefficients.
    """

    __slots__ = ("poly",)

    def __init__(self, poly):
        if not isinstance(poly, MultiPoly):
            raise UsageError("GaussPoly wraps a MultiPoly")
        self.poly = poly

    @property
    def dim(self):
        return self.poly.dim

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self.poly(x) * np.exp(-0.5 * np.sum(x * x, axis=-1))

    def __add__(self, other):
        if isinstance(other, GaussPoly):
            return GaussPoly(self.poly + other.poly)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, GaussPoly):
            return GaussPoly(self.poly - other.poly)
        return NotImplemented

    def __mul__(self, scalar):
        return GaussPoly(self.poly * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussPoly(-self.poly)

    def __eq__(self, other):
        return isinstance(other, GaussPoly) and self.poly == other.poly

    def __hash__(self):
        return hash(("GaussPoly", self.poly))

    def times_coordinate(self, j):
        return GaussPoly(self.poly.times_coordinate(j))

    def dunkl_derivative(self, j, mult):
        return GaussPoly(dunkl_derivative(self.poly, j, mult) - self.poly.times_coordinate(j))

    def dunkl_laplacian(self, mult):
        out = MultiPoly.zero(self.dim)
        for j in range(self.dim):
            out = out + self.dunkl_derivative(j, mult).dunkl_derivative(j, mult).poly
        return GaussPoly(out)

    def __repr__(self):
        return f"GaussPoly({self.poly!r})"


def hermite_operator(f, mult):
    """(Delta_k - |x|^2) f for a GaussPoly f, exactly."""
    if not isinstance(f, GaussPoly):
        raise UsageError("hermite_operator acts on GaussPoly")
    rsq = MultiPoly.radius_sq(f.dim)
    return GaussPoly(f.dunkl_laplacian(mult).poly - rsq * f.poly)


def eval_function(f, x):
    """Evaluate a MultiPoly or GaussPoly (or any callable) at points x."""
    if isinstance(f, (MultiPoly, GaussPoly)):
        return f(np.asarray(x, dtype=float))
    return f(np.asarray(x, dtype=float))


def _axis_multiplicity(mult, j):
    return Multiplicity([mult.mu_exact[j]])


def _pochhammer(base, count):
    """(base)_count = base (base+1) ... (base+count-1), exact on Fractions."""
    out = Fraction(1)
    for i in range(count):
        out *= base + i
    return out


def _poly_weighted_norm_sq(poly_1d, mu_exact):
    """norm^2 of (poly * exp(-t^2/2)) in L^2(|t|^(2 mu) dt).

    The Gaussian moments Gamma(s + mu + 1/2) share the factor Gamma(mu+1/2);
    the remaining Pochhammer ratios are summed exactly in rationals so the
    heavy sign cancellation at high degree costs no precision.
    """
    base = mu_exact + Fraction(1, 2)
    total = Fraction(0)
    items = list(poly_1d.terms.items())
    for (a,), ca in items:
        for (b,), cb in items:
            if (a + b) % 2 == 0:
                total += (ca * cb.conjugate()).re * _pochhammer(base, (a + b) // 2)
    return float(total) * gamma_fn(float(base))


def hermite_poly_1d(n, mu_exact):
    """Exact polynomial part of the degree-n heat-regularized monomial,
    exp(-Delta_k/4) t^n, for the one-dimensional multiplicity mu."""
    axis = Multiplicity([mu_exact])
    return heat_exp_poly(MultiPoly.monomial((n,)), Fraction(-1, 4), axis)


class HermiteBasis:
    """Orthonormal generalized Hermite functions h_nu for |nu| <= max_degree.

    One-dimensional families are built per axis by applying the heat
    exponential exp(-Delta_k/4) to monomials and normalizing in
    L^2(|t|^(2 mu_j) dt); the leading coefficient stays positive.  The
    N-dimensional h_nu are tensor products, orthonormal under w_k and
    eigenfunctions of the Dunkl transform with eigenvalue (-i)^|nu|.
    Instances are immutable after construction.
    """

    def __init__(self, mult, max_degree):
        if max_degree < 0:
            raise DomainError("max_degree must be >= 0")
        self.mult = mult
        self.max_degree = int(max_degree)
        self._axis_polys = []
        self._axis_norms = []
        self._axis_float = []
        for j in range(mult.dim):
            polys, norms, floats = [], [], []
            for n in range(self.max_degree + 1):
                poly = hermite_poly_1d(n, mult.mu_exact[j])
                norm = math.sqrt(_poly_weighted_norm_sq(poly, mult.mu_exact[j]))
                polys.append(poly)
                norms.append(norm)
                coeffs = np.zeros(n + 1)
                for (a,), c in poly.terms.items():
                    coeffs[a] = float(c.re) / norm
                floats.append(coeffs)
            self._axis_polys.append(polys)
            self._axis_norms.append(norms)
            self._axis_float.append(floats)
        self.indices = tuple(
            sorted(_graded_indices(mult.dim, self.max_degree), key=lambda nu: (sum(nu), nu))
        )
        self._functions = {}

    @property
    def dim(self):
        return self.mult.dim

    @property
    def size(self):
        return len(self.indices)

    @property
    def norms(self):
        """Normalization constants applied to each tensor product, keyed
        like ``indices``."""
        return tuple(
            float(np.prod([1.0 / self._axis_norms[j][nu[j]] for j in range(self.dim)]))
            for nu in self.indices
        )

    def function(self, nu):
        """The orthonormalized h_nu as an exact GaussPoly.

        The float normalization constant is folded into the rational
        coefficients exactly (floats are dyadic rationals), so downstream
        algebra on h_nu stays exact.
        """
        nu = tuple(int(v) for v in nu)
        if len(nu) != self.dim:
            raise UsageError(f"multi-index {nu} has wrong length for dim {self.dim}")
        if any(v < 0 for v in nu) or sum(nu) > self.max_degree:
            raise RangeError(f"multi-index {nu} outside basis range |nu| <= {self.max_degree}")
        if nu not in self._functions:
            poly = MultiPoly.constant(1, self.dim)
            scale = Fraction(1)
            for j, n in enumerate(nu):
                embedded = _embed_axis_poly(self._axis_polys[j][n], j, self.dim)
                poly = poly * embedded
                scale *= Fraction(1.0 / self._axis_norms[j][n])
            self._functions[nu] = GaussPoly(poly * scale)
        return self._functions[nu]

    def eval_axis(self, j, n, t):
        """Normalized 1-D Hermite function of degree n on axis j at points t."""
        t = np.asarray(t, dtype=float)
        coeffs = self._axis_float[j][n]
        return np.polynomial.polynomial.polyval(t, coeffs) * np.exp(-0.5 * t * t)

    def axis_matrix(self, j, t):
        """Matrix (max_degree+1, len(t)) of normalized 1-D values on axis j."""
        t = np.asarray(t, dtype=float)
        gauss = np.exp(-0.5 * t * t)
        out = np.empty((self.max_degree + 1, t.size))
        for n in range(self.max_degree + 1):
            out[n] = np.polynomial.polynomial.polyval(t, self._axis_float[j][n]) * gauss
        return out

    def eval_index(self, nu, x):
        """h_nu at points x of shape (..., N)."""
        x = np.asarray(x, dtype=float)
        out = np.ones(x.shape[:-1])
        for j, n in enumerate(nu):
            out = out * self.eval_axis(j, n, x[..., j])
        return out


def _graded_indices(dim, max_degree):
    if dim == 1:
        return [(n,) for n in range(max_degree + 1)]
    out = []
    for first in range(max_degree + 1):
        for rest in _graded_indices(dim - 1, max_degree - first):
            out.append((first,) + rest)
    return out


def _embed_axis_poly(poly_1d, j, dim):
    terms = {}
    for (a,), c in poly_1d.terms.items():
        key = [0] * dim
        key[j] = a
        terms[tuple(key)] = c
    return MultiPoly(dim, terms)


def hermite_function(nu, basis):
    """The orthonormalized h_nu from a prepared basis (range-checked)."""
    return basis.function(nu)


def hermite_closed_form_1d(n, mu, t):
    """Closed Laguerre form of the normalized 1-D Hermite function.

    Even degrees:  (-1)^m sqrt(m!/Gamma(m+mu+1/2)) L_m^(mu-1/2)(t^2) e^(-t^2/2)
    Odd degrees:   (-1)^m sqrt(m!/Gamma(m+mu+3/2)) t L_m^(mu+1/2)(t^2) e^(-t^2/2)

    Independent of the heat-exponential construction; used to cross-check it.
    """
    t = np.asarray(t, dtype=float)
    m, parity = divmod(n, 2)
    if parity == 0:
        const = (-1.0) ** m * math.sqrt(math.factorial(m) / gamma_fn(m + mu + 0.5))
        return const * laguerre_eval(m, mu - 0.5, t * t) * np.exp(-0.5 * t * t)
    const = (-1.0) ** m * math.sqrt(math.factorial(m) / gamma_fn(m + mu + 1.5))
    return const * t * laguerre_eval(m, mu + 0.5, t * t) * np.exp(-0.5 * t * t)


class HermiteExpansion:
    """Finite combination sum_nu c_nu h_nu over a HermiteBasis.

    The coefficients are the primary artifact; evaluation, norms and
    linear operations all go through them.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs):
        self.basis = basis
        arr = np.asarray(coeffs, dtype=complex)
        if arr.shape != (basis.size,):
            raise UsageError(f"expected {basis.size} coefficients, got {arr.shape}")
        self.coeffs = arr

    @classmethod
    def from_terms(cls, basis, terms):
        """Build from {nu: coefficient} pairs."""
        coeffs = np.zeros(basis.size, dtype=complex)
        lookup = {nu: i for i, nu in enumerate(basis.indices)}
        for nu, c in terms.items():
            key = tuple(int(v) for v in nu)
            if key not in lookup:
                raise RangeError(f"multi-index {key} outside basis range")
            coeffs[lookup[key]] += c
        return cls(basis, coeffs)

    def coefficient(self, nu):
        nu = tuple(int(v) for v in nu)
        for i, idx in enumerate(self.basis.indices):
            if idx == nu:
                return complex(self.coeffs[i])
        raise RangeError(f"multi-index {nu} outside basis range")

    def degree_mass(self, n):
        """l2 mass of the coefficients at total degree n."""
        mask = np.array([sum(nu) == n for nu in self.basis.indices])
        return float(np.sum(np.abs(self.coeffs[mask]) ** 2))

    def norm_l2(self):
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2)))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        tables = [self.basis.axis_matrix(j, x[..., j].ravel()) for j in range(self.basis.dim)]
        flat = np.zeros(x[..., 0].size, dtype=complex)
        for c, nu in zip(self.coeffs, self.basis.indices):
            if c == 0:
                continue
            prod = tables[0][nu[0]]
            for j in range(1, self.basis.dim):
                prod = prod * tables[j][nu[j]]
            flat += c * prod
        return flat.reshape(x.shape[:-1])

    def map_coeffs(self, fn):
        """New expansion with coefficients fn(|nu|, c) per index."""
        out = np.array(
            [fn(sum(nu), c) for nu, c in zip(self.basis.indices, self.coeffs)], dtype=complex
        )
        return HermiteExpansion(self.basis, out)

    def __add__(self, other):
        self._check(other)
        return HermiteExpansion(self.basis, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return HermiteExpansion(self.basis, self.coeffs - other.coeffs)

    def __mul__(self, scalar):
        return HermiteExpansion(self.basis, self.coeffs * scalar)

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, HermiteExpansion) or other.basis is not self.basis:
            raise UsageError("expansions must share a basis")

    def to_gauss_poly(self):
        """Exact GaussPoly with the float coefficients folded in as dyadic
        rationals; re/im parts handled exactly."""
        total = MultiPoly.zero(self.basis.dim)
        for c, nu in zip(self.coeffs, self.basis.indices):
            if c == 0:
                continue
            h = self.basis.function(nu)
            total = total + h.poly * RationalComplex(Fraction(c.real), Fraction(c.imag))
        return GaussPoly(total)
