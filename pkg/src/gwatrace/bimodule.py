"""Harish-Chandra bimodules M_{c,c'} between A_c and A_{c'}.

M_{c,c'} consists of the operators sending each x^{c'_i} C[x] into
x^{c_i} C[x].  Its ad-z weight-j eigenspace is x^j R_j C[z] (filtered) or
x^j R_j C[Z, 1/Z] (q), where the monic polynomial R_j is pinned by an
explicit arithmetic-progression root set.  Root sets are always built from
that description, never by numerical factoring.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .algebra import (FILTERED, GENERICITY_TOL, Q, AlgebraParams, GWAElement,
                      qpow)
from .errors import MembershipViolation, ValidationError, VariantMismatch
from .poly import BalancedLaurent, Poly, PolyLike

MEMBERSHIP_TOL = 1e-9


@dataclass(frozen=True)
class BimoduleSpec:
    """Parameter pair (c, c') with integer gaps, plus the variant tag."""

    variant: str
    c: tuple[complex, ...]
    c_prime: tuple[complex, ...]
    q: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(complex(x) for x in self.c))
        object.__setattr__(self, "c_prime", tuple(complex(x) for x in self.c_prime))

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def gaps(self) -> tuple[int, ...]:
        """Integer differences c_i - c'_i."""
        return tuple(round((ci - cpi).real) for ci, cpi in zip(self.c, self.c_prime))

    def left_params(self) -> AlgebraParams:
        return AlgebraParams(self.variant, self.c, self.q)

    def right_params(self) -> AlgebraParams:
        return AlgebraParams(self.variant, self.c_prime, self.q)

    def reversed(self) -> "BimoduleSpec":
        return BimoduleSpec(self.variant, self.c_prime, self.c, self.q)

    @staticmethod
    def regular(params: AlgebraParams) -> "BimoduleSpec":
        """The regular bimodule M_{c,c} = A_c."""
        return BimoduleSpec(params.variant, params.c, params.c, params.q)

    def validate(self) -> None:
        if len(self.c) != len(self.c_prime):
            raise ValidationError("c and c' must have equal length")
        for i, (ci, cpi) in enumerate(zip(self.c, self.c_prime)):
            d = ci - cpi
            if abs(d - round(d.real)) > GENERICITY_TOL:
                raise ValidationError(f"c[{i}] - c'[{i}] = {d} is not an integer")
        self.left_params().validate()
        self.right_params().validate()


@lru_cache(maxsize=None)
def rj_roots(spec: BimoduleSpec, j: int) -> tuple[complex, ...]:
    """The exact root multiset of R_j, straight from the progression rule."""
    roots: list[complex] = []
    for cpi, g in zip(spec.c_prime, spec.gaps):
        count = g - j
        if count > 0:
            if spec.variant == FILTERED:
                roots.extend(cpi + l for l in range(count))
            else:
                roots.extend(qpow(spec.q, 2 * (cpi + l)) for l in range(count))
    return tuple(roots)


@lru_cache(maxsize=None)
def compute_Rj(spec: BimoduleSpec, j: int) -> PolyLike:
    """Monic weight-j eigenspace generator; cached per (spec, j).

    Filtered roots: c'_i, c'_i + 1, ..., c_i - j - 1 over i with
    c_i - c'_i - j > 0.  q roots: the geometric progression
    q^{2 c'_i}, q^{2 c'_i + 2}, ..., q^{2 c_i - 2j - 2}.  The q polynomial is
    balanced (centered exponents, possibly half-integer).
    """
    roots = rj_roots(spec, j)
    if spec.variant == FILTERED:
        return Poly.from_roots(roots, 1.0)
    return BalancedLaurent.from_roots(roots, 1.0)


def _deflate(coeffs: np.ndarray, r: complex) -> np.ndarray:
    """Synthetic division of a coefficient array by (z - r), remainder dropped."""
    out = np.zeros(len(coeffs) - 1, dtype=complex)
    acc = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        out[k] = acc
        acc = coeffs[k] + r * acc
    return out


def _root_quotient(coeff: PolyLike, roots: tuple[complex, ...]) -> PolyLike | None:
    """Deflate coeff by each known root; None if the degree is too small.

    Root-by-root deflation is far better conditioned than one division by the
    expanded product when the progression is long.
    """
    arr = coeff.coeffs
    if len(arr) - 1 < len(roots):
        return None
    for r in sorted(roots, key=abs):
        arr = _deflate(arr, r)
    if isinstance(coeff, Poly):
        return Poly(arr)
    return BalancedLaurent(coeff.lo2 + len(roots), arr)


def _division_defect(spec: BimoduleSpec, j: int, coeff: PolyLike) -> tuple[float, PolyLike | None]:
    """Relative norm of coeff - R_j * (deflated quotient), plus the quotient."""
    if coeff.is_zero:
        return 0.0, coeff
    quot = _root_quotient(coeff, rj_roots(spec, j))
    if quot is None:
        return 1.0, None
    recon = compute_Rj(spec, j) * quot
    return (coeff - recon).linf / max(coeff.linf, 1e-300), quot


def weight_quotient(spec: BimoduleSpec, j: int, coeff: PolyLike,
                    tol: float = MEMBERSHIP_TOL) -> PolyLike:
    """Divide a weight-j coefficient by R_j, raising MembershipViolation."""
    defect, quot = _division_defect(spec, j, coeff)
    if defect > tol:
        raise MembershipViolation(
            f"weight {j} coefficient not divisible by R_{j} "
            f"(relative remainder {defect:.2e})")
    return quot


def membership(spec: BimoduleSpec, e: GWAElement, tol: float = MEMBERSHIP_TOL) -> bool:
    """True iff every weight coefficient of e is divisible by the matching R_j."""
    if e.variant != spec.variant:
        raise VariantMismatch(f"{e.variant} element against {spec.variant} bimodule")
    return all(_division_defect(spec, j, coeff)[0] <= tol
               for j, coeff in e.terms.items())


def basis(spec: BimoduleSpec, j: int, D: int) -> list[GWAElement]:
    """Weight-j basis x^j R_j z^k, k = 0..D (filtered) or k = -D..D (q)."""
    if D < 0:
        raise ValidationError("degree bound must be nonnegative")
    rj = compute_Rj(spec, j)
    out = []
    if spec.variant == FILTERED:
        for k in range(D + 1):
            out.append(GWAElement.term(FILTERED, j, rj * Poly([0] * k + [1])))
    else:
        for k in range(-D, D + 1):
            out.append(GWAElement.term(Q, j, rj * BalancedLaurent.zpow(2 * k), spec.q))
    return out


def morita_mul(spec: BimoduleSpec, m: GWAElement, n: GWAElement) -> GWAElement:
    """Product M_{c,c'} x M_{c',c} -> A_c, with membership assertions."""
    if not membership(spec, m):
        raise MembershipViolation("left factor is not in M_{c,c'}")
    if not membership(spec.reversed(), n):
        raise MembershipViolation("right factor is not in M_{c',c}")
    prod = m * n
    if not membership(BimoduleSpec.regular(spec.left_params()), prod):
        raise MembershipViolation("Morita product escaped A_c")
    return prod


def shift_parameters(spec: BimoduleSpec, r: float
                     ) -> tuple[BimoduleSpec, Callable[[GWAElement], GWAElement]]:
    """Half-integer recentering: c -> c + r, c' -> c' - r.

    The returned map realizes m -> x^r m x^r as a weight shift by 2r with the
    matching argument shift of every coefficient.
    """
    two_r = 2 * r
    if abs(two_r - round(two_r)) > 1e-12:
        raise ValidationError("shift must be a half-integer")
    two_r = round(two_r)
    new_spec = BimoduleSpec(spec.variant,
                            tuple(ci + r for ci in spec.c),
                            tuple(cpi - r for cpi in spec.c_prime),
                            spec.q)

    def mapper(e: GWAElement) -> GWAElement:
        terms = {}
        for j, p in e.terms.items():
            if spec.variant == FILTERED:
                terms[j + two_r] = p.shift(r)
            else:
                terms[j + two_r] = p.scale_arg(qpow(spec.q, two_r))
        return GWAElement(e.variant, terms, e.q)

    return new_spec, mapper
