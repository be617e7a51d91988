"""Dense complex polynomials and balanced Laurent polynomials.

Two containers back everything else in the library:

* :class:`Poly` holds an ordinary polynomial as a coefficient array,
  constant term first, trailing coefficient nonzero.
* :class:`BalancedLaurent` holds a Laurent polynomial whose exponents may be
  half-integers.  Exponents are stored doubled (``lo2`` is twice the lowest
  exponent), so half-integer bookkeeping reduces to parity tracking and no
  ring extension by sqrt(Z) is ever materialized.

Coefficients are double precision complex throughout; degrees stay small
(tens), so all products are schoolbook.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

import numpy as np

from .errors import ValidationError

Scalar = Union[int, float, complex]


def _trim(coeffs: np.ndarray) -> np.ndarray:
    """Drop exactly-zero trailing coefficients."""
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


class Poly:
    """Immutable dense polynomial over the complex numbers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=complex)
        object.__setattr__(self, "coeffs", _trim(c))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly([])

    @staticmethod
    def one() -> "Poly":
        return Poly([1.0])

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly([c])

    @staticmethod
    def x() -> "Poly":
        return Poly([0.0, 1.0])

    @staticmethod
    def from_roots(roots: Sequence[Scalar], leading: Scalar = 1.0) -> "Poly":
        if leading == 0:
            raise ValidationError("leading coefficient must be nonzero")
        c = np.array([complex(leading)])
        for r in roots:
            c = np.convolve(c, np.array([-complex(r), 1.0]))
        return Poly(c)

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def linf(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if len(self.coeffs) else 0.0

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1]) if len(self.coeffs) else 0.0

    def coeff(self, k: int) -> complex:
        return complex(self.coeffs[k]) if 0 <= k < len(self.coeffs) else 0.0

    def chop(self, tol: float) -> "Poly":
        """Zero out coefficients below ``tol`` in absolute value."""
        if self.is_zero:
            return self
        c = self.coeffs.copy()
        c[np.abs(c) <= tol] = 0.0
        return Poly(c)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = a.copy()
        c[: len(b)] += b
        return Poly(c)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly.zero()
            return Poly(np.convolve(self.coeffs, other.coeffs))
        return Poly(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __divmod__(self, den: "Poly") -> tuple["Poly", "Poly"]:
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < den.degree:
            return Poly.zero(), self
        rem = self.coeffs.astype(complex).copy()
        dc = den.coeffs
        dd = den.degree
        lead = dc[-1]
        q = np.zeros(self.degree - dd + 1, dtype=complex)
        for k in range(self.degree - dd, -1, -1):
            q[k] = rem[k + dd] / lead
            rem[k : k + dd + 1] -= q[k] * dc
        return Poly(q), Poly(rem[:dd] if dd > 0 else [])

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and len(self.coeffs) == len(other.coeffs) \
            and bool(np.all(self.coeffs == other.coeffs))

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __call__(self, z):
        """Horner evaluation; accepts scalars or numpy arrays."""
        if self.is_zero:
            return np.zeros_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 0.0
        acc = np.full_like(np.asarray(z, dtype=complex), self.coeffs[-1]) if np.ndim(z) \
            else complex(self.coeffs[-1])
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        return acc

    # -- transforms ---------------------------------------------------

    def shift(self, delta: Scalar) -> "Poly":
        """Return p(z + delta), exactly (repeated synthetic division)."""
        d = complex(delta)
        if self.is_zero or d == 0:
            return self
        return Poly(_shift_coeffs(self.coeffs, d))

    def conj_coeffs(self) -> "Poly":
        return Poly(np.conj(self.coeffs))

    def star_reflect(self) -> "Poly":
        """conj(p)(-z): conjugate coefficients, then negate the argument."""
        signs = np.array([(-1) ** k for k in range(len(self.coeffs))])
        return Poly(np.conj(self.coeffs) * signs)

    def derivative(self) -> "Poly":
        if self.degree < 1:
            return Poly.zero()
        return Poly(self.coeffs[1:] * np.arange(1, len(self.coeffs)))

    def scale_var(self, lam: Scalar) -> "Poly":
        """Return p(lam * z)."""
        return Poly(self.coeffs * np.power(complex(lam), np.arange(len(self.coeffs))))

    def reversed_coeffs(self, n: int | None = None) -> "Poly":
        """Return z^n * p(1/z) as a polynomial (n defaults to the degree)."""
        if self.is_zero:
            return self
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValidationError("reversal order below degree")
        c = np.zeros(n + 1, dtype=complex)
        c[n - self.degree:] = self.coeffs[::-1]
        return Poly(c)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def _shift_coeffs(coeffs: np.ndarray, d: complex) -> np.ndarray:
    """Coefficients of p(z + d) via repeated synthetic division by (z - d)."""
    work = coeffs.astype(complex).copy()
    n = len(work)
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        # one synthetic division pass of work[k:] by (z - d)
        for i in range(n - 2, k - 1, -1):
            work[i] = work[i] + work[i + 1] * d
        out[k] = work[k]
    return out


class BalancedLaurent:
    """Laurent polynomial with doubled-integer exponent bookkeeping.

    ``coeffs[k]`` multiplies Z^((lo2 + 2k)/2).  All exponents of one value
    share parity; balanced constructors produce symmetric spans
    a Z^N + ... + b Z^(-N) with N possibly a half-integer.
    """

    __slots__ = ("lo2", "coeffs")

    def __init__(self, lo2: int, coeffs: Iterable[Scalar] = ()):
        c = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=complex)
        # trim both ends
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        c = _trim(c[start:])
        object.__setattr__(self, "lo2", int(lo2) + 2 * start if len(c) else 0)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("BalancedLaurent is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "BalancedLaurent":
        return BalancedLaurent(0, [])

    @staticmethod
    def one() -> "BalancedLaurent":
        return BalancedLaurent(0, [1.0])

    @staticmethod
    def const(c: Scalar) -> "BalancedLaurent":
        return BalancedLaurent(0, [c])

    @staticmethod
    def zpow(k2: int, c: Scalar = 1.0) -> "BalancedLaurent":
        """c * Z^(k2/2)."""
        return BalancedLaurent(k2, [c])

    @staticmethod
    def from_roots(roots: Sequence[Scalar], leading: Scalar = 1.0) -> "BalancedLaurent":
        """leading * Z^(-m/2) * prod (Z - r_i), centered so the span is balanced."""
        if leading == 0:
            raise ValidationError("leading coefficient must be nonzero")
        for r in roots:
            if r == 0:
                raise ValidationError("zero is never a root of a balanced Laurent polynomial")
        p = Poly.from_roots(roots, leading)
        return BalancedLaurent(-len(roots), p.coeffs)

    # -- structure ----------------------------------------------------

    @property
    def hi2(self) -> int:
        return self.lo2 + 2 * (len(self.coeffs) - 1) if len(self.coeffs) else 0

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def is_balanced(self) -> bool:
        return self.is_zero or self.hi2 == -self.lo2

    @property
    def parity(self) -> int:
        """0 for integer exponents, 1 for half-integer."""
        return abs(self.lo2) % 2

    @property
    def exps2(self) -> np.ndarray:
        return self.lo2 + 2 * np.arange(len(self.coeffs))

    @property
    def linf(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if len(self.coeffs) else 0.0

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1]) if len(self.coeffs) else 0.0

    @property
    def trailing(self) -> complex:
        return complex(self.coeffs[0]) if len(self.coeffs) else 0.0

    def coeff2(self, k2: int) -> complex:
        """Coefficient of Z^(k2/2)."""
        idx = (k2 - self.lo2) // 2
        if (k2 - self.lo2) % 2 != 0 or not 0 <= idx < len(self.coeffs):
            return 0.0
        return complex(self.coeffs[idx])

    def chop(self, tol: float) -> "BalancedLaurent":
        if self.is_zero:
            return self
        c = self.coeffs.copy()
        c[np.abs(c) <= tol] = 0.0
        return BalancedLaurent(self.lo2, c)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "BalancedLaurent") -> "BalancedLaurent":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if (self.lo2 - other.lo2) % 2 != 0:
            raise ValidationError("cannot add Laurent polynomials of opposite exponent parity")
        lo2 = min(self.lo2, other.lo2)
        hi2 = max(self.hi2, other.hi2)
        c = np.zeros((hi2 - lo2) // 2 + 1, dtype=complex)
        i = (self.lo2 - lo2) // 2
        c[i : i + len(self.coeffs)] += self.coeffs
        j = (other.lo2 - lo2) // 2
        c[j : j + len(other.coeffs)] += other.coeffs
        return BalancedLaurent(lo2, c)

    def __sub__(self, other: "BalancedLaurent") -> "BalancedLaurent":
        return self + (-other)

    def __neg__(self) -> "BalancedLaurent":
        return BalancedLaurent(self.lo2, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, BalancedLaurent):
            if self.is_zero or other.is_zero:
                return BalancedLaurent.zero()
            return BalancedLaurent(self.lo2 + other.lo2,
                                   np.convolve(self.coeffs, other.coeffs))
        return BalancedLaurent(self.lo2, self.coeffs * complex(other))

    __rmul__ = __mul__

    def __divmod__(self, den: "BalancedLaurent") -> tuple["BalancedLaurent", "BalancedLaurent"]:
        """Division treating both as polynomials shifted by their lo2."""
        if den.is_zero:
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero:
            return BalancedLaurent.zero(), BalancedLaurent.zero()
        q, r = divmod(Poly(self.coeffs), Poly(den.coeffs))
        return (BalancedLaurent(self.lo2 - den.lo2, q.coeffs),
                BalancedLaurent(self.lo2, r.coeffs))

    def __eq__(self, other) -> bool:
        return (isinstance(other, BalancedLaurent) and self.lo2 == other.lo2
                and len(self.coeffs) == len(other.coeffs)
                and bool(np.all(self.coeffs == other.coeffs)))

    def __hash__(self):
        return hash((self.lo2, self.coeffs.tobytes()))

    # -- evaluation ---------------------------------------------------

    def __call__(self, z):
        """Evaluate with principal powers for half-integer exponents.

        Consistent across factors: products with integer total parity are
        branch independent.
        """
        if self.is_zero:
            return np.zeros_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 0.0
        z = np.asarray(z, dtype=complex) if np.ndim(z) else complex(z)
        if self.parity == 0:
            acc = np.zeros_like(z) if np.ndim(z) else 0.0 + 0.0j
            for c in self.coeffs[::-1]:
                acc = acc * z + c
            return acc * z ** (self.lo2 // 2)
        t = self.exps2 / 2.0
        if np.ndim(z):
            return np.sum(self.coeffs[:, None] * np.power(z[None, :], t[:, None]), axis=0)
        return complex(np.sum(self.coeffs * np.power(z, t)))

    def eval_at_logz(self, logz):
        """Evaluate at Z = exp(logz) via exact exponent arithmetic.

        Avoids branch ambiguity: Z^t is computed as exp(t * logz).
        """
        t = self.exps2 / 2.0
        logz = np.asarray(logz, dtype=complex) if np.ndim(logz) else complex(logz)
        if np.ndim(logz):
            return np.sum(self.coeffs[:, None] * np.exp(t[:, None] * logz[None, :]), axis=0)
        return complex(np.sum(self.coeffs * np.exp(t * logz)))

    # -- transforms ---------------------------------------------------

    def scale_arg(self, lam: Scalar) -> "BalancedLaurent":
        """Return p(lam * Z); lam^t uses the principal power for half exponents."""
        if lam == 0:
            raise ValidationError("multiplicative shift requires a nonzero factor")
        t = self.exps2 / 2.0
        return BalancedLaurent(self.lo2, self.coeffs * np.power(complex(lam), t))

    def star_reflect(self) -> "BalancedLaurent":
        """conj(p)(Z^(-1)): conjugate coefficients and invert exponents."""
        return BalancedLaurent(-self.hi2, np.conj(self.coeffs)[::-1])

    def conj_coeffs(self) -> "BalancedLaurent":
        return BalancedLaurent(self.lo2, np.conj(self.coeffs))

    def __repr__(self):
        return f"BalancedLaurent(lo2={self.lo2}, coeffs={list(self.coeffs)!r})"


PolyLike = Union[Poly, BalancedLaurent]


# -- module-level operations -------------------------------------------


def from_roots(roots: Sequence[Scalar], leading: Scalar, kind: str) -> PolyLike:
    """Build a polynomial with the given root multiset and leading coefficient.

    ``kind`` is "poly" or "balanced"; the balanced kind centers exponents and
    rejects zero roots.
    """
    if kind == "poly":
        return Poly.from_roots(roots, leading)
    if kind == "balanced":
        return BalancedLaurent.from_roots(roots, leading)
    raise ValidationError(f"unknown kind {kind!r}")


def shift_arg(p: PolyLike, *, delta: Scalar | None = None,
              factor: Scalar | None = None) -> PolyLike:
    """Argument shift: p(z + delta) for Poly, p(factor * Z) for BalancedLaurent."""
    if isinstance(p, Poly):
        if delta is None:
            raise ValidationError("Poly shift requires delta")
        return p.shift(delta)
    if factor is None:
        raise ValidationError("Laurent shift requires a multiplicative factor")
    return p.scale_arg(factor)


def star_reflect(p: PolyLike) -> PolyLike:
    """Coefficientwise conjugation composed with z -> -z (Poly) or Z -> 1/Z."""
    return p.star_reflect()
