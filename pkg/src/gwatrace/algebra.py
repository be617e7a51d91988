"""Generalized Weyl algebras A_c and their q-deformations.

The filtered algebra is realized inside C[x, 1/x, d/dx]: v = x, z = x d/dx,
u = (1/x)(z - c_1)...(z - c_n).  The q-algebra is realized through the
dilation operator D acting by p(x) -> p(q^2 x): u = x, Z = D, and v is the
normalized product (1/x) prod (D - q^{2 c_i}) Z^{-m} / q^{sum c}.

Elements are stored in normal form as finitely supported maps
weight j -> coefficient polynomial, with the coefficient written to the
right of x^j.  The product rule is

    (x^j R) (x^k S) = x^{j+k} R(z + k) S(z)        (filtered)
    (x^j R) (x^k S) = x^{j+k} R(q^{2k} Z) S(Z)     (q)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (GenericityViolation, ParityViolation, SumNotInteger,
                     Unsupported, ValidationError, VariantMismatch)
from .poly import BalancedLaurent, Poly, PolyLike

GENERICITY_TOL = 1e-9
RELATION_TOL = 1e-10

FILTERED = "filtered"
Q = "q"


def int_distance(x: complex) -> float:
    """Distance from x to the nearest integer in the complex plane."""
    return abs(x - round(x.real))


def q_lattice_distance(x: complex, q: float) -> float:
    """Distance from x to the lattice Z + (pi i / ln q) Z."""
    step = math.pi / math.log(q)  # negative real; lattice points are i*step*l + k
    l = round(x.imag / step)
    rem = x - 1j * step * l
    return abs(rem - round(rem.real))


def qpow(q: float, e: complex) -> complex:
    """q^e for positive real q and complex e, via the real logarithm."""
    return complex(np.exp(complex(e) * math.log(q)))


@dataclass(frozen=True)
class AlgebraParams:
    """Deformation parameters: variant tag, parameter list c, and q."""

    variant: str
    c: tuple[complex, ...]
    q: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(complex(x) for x in self.c))
        if self.variant not in (FILTERED, Q):
            raise ValidationError(f"unknown variant {self.variant!r}")
        if self.variant == Q:
            if self.q is None or self.q <= 0 or self.q == 1:
                raise ValidationError("q variant requires a positive q different from 1")

    @property
    def n(self) -> int:
        return len(self.c)

    def normalized(self) -> "AlgebraParams":
        """Map q > 1 to 1/q.  Z then denotes the inverse dilation; c is unchanged."""
        if self.variant == Q and self.q > 1:
            return AlgebraParams(Q, self.c, 1.0 / self.q)
        return self

    def validate(self) -> None:
        if self.n == 0:
            raise ValidationError("at least one parameter required")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                d = self.c[i] - self.c[j]
                if self.variant == FILTERED:
                    if int_distance(d) <= GENERICITY_TOL:
                        raise GenericityViolation(
                            f"c[{i}] - c[{j}] = {d} is within {GENERICITY_TOL} of an integer")
                else:
                    if q_lattice_distance(d, self.q) <= GENERICITY_TOL:
                        raise GenericityViolation(
                            f"c[{i}] - c[{j}] = {d} is within {GENERICITY_TOL} of the q-lattice")
        if self.variant == Q:
            if self.n % 2 != 0:
                raise ParityViolation("q variant requires n = 2m even")
            s = sum(self.c)
            if int_distance(s) > GENERICITY_TOL:
                raise SumNotInteger(f"sum of c = {s} is not an integer")


class GWAElement:
    """Normal-form element of A_c or of a Harish-Chandra bimodule.

    Immutable by convention: operations return fresh elements; ``terms`` is
    never mutated after construction.
    """

    __slots__ = ("variant", "q", "terms")

    def __init__(self, variant: str, terms: dict[int, PolyLike] | None = None,
                 q: float | None = None):
        self.variant = variant
        self.q = q
        clean: dict[int, PolyLike] = {}
        for j, p in (terms or {}).items():
            if not p.is_zero:
                clean[int(j)] = p
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(variant: str, q: float | None = None) -> "GWAElement":
        return GWAElement(variant, {}, q)

    @staticmethod
    def term(variant: str, j: int, coeff: PolyLike, q: float | None = None) -> "GWAElement":
        return GWAElement(variant, {j: coeff}, q)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def weights(self) -> list[int]:
        return sorted(self.terms)

    def coeff(self, j: int) -> PolyLike:
        if j in self.terms:
            return self.terms[j]
        return Poly.zero() if self.variant == FILTERED else BalancedLaurent.zero()

    @property
    def linf(self) -> float:
        return max((p.linf for p in self.terms.values()), default=0.0)

    def chop(self, tol: float) -> "GWAElement":
        return GWAElement(self.variant,
                          {j: p.chop(tol) for j, p in self.terms.items()}, self.q)

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other: "GWAElement") -> None:
        if self.variant != other.variant:
            raise VariantMismatch(f"{self.variant} vs {other.variant}")
        if self.variant == Q and abs((self.q or 0) - (other.q or 0)) > 1e-15:
            raise VariantMismatch("mismatched q values")

    def __add__(self, other: "GWAElement") -> "GWAElement":
        self._check_compatible(other)
        terms = dict(self.terms)
        for j, p in other.terms.items():
            terms[j] = terms[j] + p if j in terms else p
        return GWAElement(self.variant, terms, self.q)

    def __sub__(self, other: "GWAElement") -> "GWAElement":
        return self + (-other)

    def __neg__(self) -> "GWAElement":
        return GWAElement(self.variant, {j: -p for j, p in self.terms.items()}, self.q)

    def scale(self, c: complex) -> "GWAElement":
        return GWAElement(self.variant, {j: p * c for j, p in self.terms.items()}, self.q)

    def __mul__(self, other):
        if not isinstance(other, GWAElement):
            return self.scale(complex(other))
        return element_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, GWAElement):  # pragma: no cover
            return element_mul(other, self)
        return self.scale(complex(other))

    def __eq__(self, other) -> bool:
        return (isinstance(other, GWAElement) and self.variant == other.variant
                and self.terms == other.terms)

    # -- evaluation ---------------------------------------------------

    def apply_monomial(self, s: complex) -> dict[int, complex]:
        """Action on x^s: returns {j: coefficient of x^{s+j}}.

        Filtered: x^j R(z) sends x^s to R(s) x^{s+j}.  q: R is evaluated at
        Z = q^{2s}, computed through exact exponent arithmetic.
        """
        out: dict[int, complex] = {}
        for j, p in self.terms.items():
            if self.variant == FILTERED:
                out[j] = complex(p(s))
            else:
                out[j] = complex(p.eval_at_logz(2 * complex(s) * math.log(self.q)))
        return out

    def __repr__(self):
        body = ", ".join(f"x^{j}*{p!r}" for j, p in sorted(self.terms.items()))
        return f"GWAElement({self.variant}: {body or '0'})"


def element_mul(e1: GWAElement, e2: GWAElement) -> GWAElement:
    """Bilinear associative normal-form product."""
    e1._check_compatible(e2)
    terms: dict[int, PolyLike] = {}
    for j, r in e1.terms.items():
        for k, s in e2.terms.items():
            if e1.variant == FILTERED:
                c = r.shift(k) * s
            else:
                c = r.scale_arg(e1.q ** (2 * k)) * s
            key = j + k
            terms[key] = terms[key] + c if key in terms else c
    return GWAElement(e1.variant, terms, e1.q)


def filtration_degree(e: GWAElement, n: int):
    """max over terms of n*j + 2*deg R; -inf for the zero element."""
    if e.variant != FILTERED:
        raise Unsupported("filtration degree is defined for the filtered variant")
    if e.is_zero:
        return float("-inf")
    return max(n * j + 2 * p.degree for j, p in e.terms.items())


@dataclass(frozen=True)
class DefiningPoly:
    """The structure polynomial P with its normalization convention tag."""

    poly: PolyLike
    convention: str  # "monic-shifted-roots" (filtered) | "q-symmetric"


@dataclass(frozen=True)
class Algebra:
    """A_c with generators in normal form and verified defining relations."""

    params: AlgebraParams
    P: DefiningPoly
    u: GWAElement
    v: GWAElement
    z: GWAElement
    zinv: GWAElement | None = None
    residuals: dict = field(default_factory=dict, compare=False)

    @property
    def variant(self) -> str:
        return self.params.variant

    @property
    def n(self) -> int:
        return self.params.n

    def gens(self) -> dict[str, GWAElement]:
        g = {"u": self.u, "v": self.v, "z": self.z}
        if self.zinv is not None:
            g["Zinv"] = self.zinv
        return g

    def one(self) -> GWAElement:
        c = Poly.one() if self.variant == FILTERED else BalancedLaurent.one()
        return GWAElement.term(self.variant, 0, c, self.params.q)


def make_algebra(params: AlgebraParams) -> Algebra:
    """Build A_c with generators u, v, z (or Z) and check the relations."""
    params = params.normalized()
    params.validate()
    n, c = params.n, params.c

    if params.variant == FILTERED:
        P = Poly.from_roots([ci - 0.5 for ci in c], 1.0)
        u = GWAElement.term(FILTERED, -1, Poly.from_roots(c, 1.0))
        v = GWAElement.term(FILTERED, 1, Poly.one())
        z = GWAElement.term(FILTERED, 0, Poly.x())
        alg = Algebra(params, DefiningPoly(P, "monic-shifted-roots"), u, v, z)
    else:
        q = params.q
        m = n // 2
        sumc = sum(c)
        P = BalancedLaurent.from_roots([qpow(q, 2 * ci - 1) for ci in c],
                                       qpow(q, m - sumc))
        u = GWAElement.term(Q, 1, BalancedLaurent.one(), q)
        # v = x^{-1} prod(D - q^{2 c_i}), right-normalized by Z^{-m} and q^{-sum c}
        vcoeff = BalancedLaurent.from_roots([qpow(q, 2 * ci) for ci in c],
                                            qpow(q, -sumc))
        v = GWAElement.term(Q, -1, vcoeff, q)
        z = GWAElement.term(Q, 0, BalancedLaurent.zpow(2), q)
        zinv = GWAElement.term(Q, 0, BalancedLaurent.zpow(-2), q)
        alg = Algebra(params, DefiningPoly(P, "q-symmetric"), u, v, z, zinv)

    res = relation_residuals(alg)
    alg.residuals.update(res)
    worst = max(res.values())
    if worst > RELATION_TOL:
        raise ValidationError(f"defining relations violated: residuals {res}")
    return alg


def relation_residuals(alg: Algebra) -> dict[str, float]:
    """Coefficientwise-max residuals of the defining relations, relative to scale."""
    u, v, z = alg.u, alg.v, alg.z
    P = alg.P.poly

    def rel(lhs: GWAElement, rhs: GWAElement) -> float:
        scale = max(1.0, lhs.linf, rhs.linf)
        return (lhs - rhs).linf / scale

    if alg.variant == FILTERED:
        mk = lambda p: GWAElement.term(FILTERED, 0, p)
        return {
            "uv=P(z+1/2)": rel(u * v, mk(P.shift(0.5))),
            "vu=P(z-1/2)": rel(v * u, mk(P.shift(-0.5))),
            "[z,u]=-u": rel(z * u - u * z, -u),
            "[z,v]=v": rel(z * v - v * z, v),
        }
    q = alg.params.q
    mk = lambda p: GWAElement.term(Q, 0, p, q)
    return {
        "uv=P(Z/q)": rel(u * v, mk(P.scale_arg(1.0 / q))),
        "vu=P(qZ)": rel(v * u, mk(P.scale_arg(q))),
        "Zu=q^2uZ": rel(z * u, (u * z).scale(q ** 2)),
        "Zv=q^-2vZ": rel(z * v, (v * z).scale(q ** -2)),
        "ZZinv=1": rel(z * alg.zinv, alg.one()),
    }
