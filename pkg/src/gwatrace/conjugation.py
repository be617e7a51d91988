"""Antilinear conjugation data and the bimodule isomorphism phi.

The conjugation rho: A_c -> conj(A_{c'}) sends v -> a u, u -> b v, z -> -z
(filtered, with |a| = 1 and a b = (-1)^n) or u -> a v, v -> b u, Z -> 1/Z
(q, with a b = 1).  It exists only when an involution sigma pairs the
parameters through c_i + conj(c'_{sigma(i)}) = 1.

phi realizes M_{c,c'} ~ M_{c',c,rho}:

    phi(x^j R_j R) = x^{-j} S_{-j} star_reflect(R)

with S_j pinned by explicit root sets and a leading-coefficient rule.  The
scalar freedom in phi is fixed so the normalized products
(a i^n)^{-j} R_j(t-j) S_{-j}(t) are real on the lines Re t = j/2 (filtered),
resp. a^{-j} R_j(q^{-j} z) S_{-j}(q^j z) real on the unit circle (q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import FILTERED, Q, GWAElement, qpow
from .bimodule import BimoduleSpec, compute_Rj, weight_quotient
from .errors import (AmbiguousPairing, MembershipViolation, NoPairing,
                     ValidationError)
from .poly import BalancedLaurent, Poly, PolyLike

PAIRING_TOL = 1e-9
EXACT_DIV_TOL = 1e-9


def _match_sigma(spec: BimoduleSpec) -> tuple[int, ...]:
    """Find the involution with c_i + conj(c'_{sigma(i)}) = 1."""
    n = spec.n
    sigma = []
    for i, ci in enumerate(spec.c):
        hits = [j for j, cpj in enumerate(spec.c_prime)
                if abs(ci + cpj.conjugate() - 1) <= PAIRING_TOL]
        if not hits:
            raise NoPairing(f"no partner for c[{i}] = {ci}: the bimodule admits no rho")
        if len(hits) > 1:
            raise AmbiguousPairing(f"c[{i}] pairs with {hits} within tolerance")
        sigma.append(hits[0])
    for i in range(n):
        if sigma[sigma[i]] != i:
            raise NoPairing("pairing is not an involution")
    return tuple(sigma)


@dataclass(frozen=True)
class ConjugationData:
    """rho = (a, b, sigma) together with the phi normalization constant."""

    spec: BimoduleSpec
    sigma: tuple[int, ...]
    a: complex
    b: complex
    C_phi: complex
    epsilon: int | None = None    # filtered sign: a = epsilon i^n e^{-i pi tau}
    tau: float | None = None      # filtered twist exponent, t = e^{2 pi i tau}
    abs_a: float | None = None    # q modulus of a
    s: float | None = None        # q phase exponent, a = |a| e^{2 pi i s}
    rho_label: str | None = None  # '+' or '-' (filtered); anchored at n = 1
    _sj_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def variant(self) -> str:
        return self.spec.variant

    @property
    def t(self) -> complex:
        """Twist scalar b / a of the trace automorphism g_t."""
        return self.b / self.a


def build_conjugation(spec: BimoduleSpec, *, epsilon: int | None = None,
                      rho_label: str | None = None, tau: float | None = None,
                      abs_a: float = 1.0, s: float = 0.0) -> ConjugationData:
    """Validate pairing, derive (a, b), and fix the phi scalar.

    Filtered inputs: tau in [0, 1) plus either epsilon in {+1, -1} or a
    rho_label '+'/'-'; the label maps to epsilon = +-(-1)^n so that the n = 1
    Weyl case certifies positive exactly for rho_+ (the paper's parity rule
    epsilon = (-1)^{n+k} with k the lowest degree of an admissible G).
    q inputs: abs_a > 0 and s in [0, 1), giving a = |a| e^{2 pi i s}, b = 1/a.
    """
    spec.validate()
    sigma = _match_sigma(spec)
    n = spec.n
    d = sum(spec.gaps)

    if spec.variant == FILTERED:
        if tau is None or not 0 <= tau < 1:
            raise ValidationError("filtered conjugation requires tau in [0, 1)")
        plus_eps = 1 if n % 2 == 0 else -1
        if epsilon is None:
            if rho_label not in ("+", "-"):
                raise ValidationError("give epsilon or rho_label '+'/'-'")
            epsilon = plus_eps if rho_label == "+" else -plus_eps
        if epsilon not in (1, -1):
            raise ValidationError("epsilon must be +1 or -1")
        label = "+" if epsilon == plus_eps else "-"
        a = epsilon * 1j ** n * np.exp(-1j * math.pi * tau)
        b = (-1) ** n / a
        c_phi = 1j ** d
        return ConjugationData(spec, sigma, complex(a), complex(b), complex(c_phi),
                               epsilon=epsilon, tau=float(tau), rho_label=label)

    if abs_a <= 0:
        raise ValidationError("q conjugation requires |a| > 0")
    if not 0 <= s < 1:
        raise ValidationError("q conjugation requires s in [0, 1)")
    a = abs_a * np.exp(2j * math.pi * s)
    b = 1.0 / a
    c_phi = _q_cphi(spec)
    return ConjugationData(spec, sigma, complex(a), complex(b), complex(c_phi),
                           abs_a=float(abs_a), s=float(s))


def _q_cphi(spec: BimoduleSpec) -> complex:
    """Unimodular phase making R_0 S_0 real on the unit circle.

    For a balanced Laurent f with root multiset closed under r -> 1/conj(r),
    reality on |z| = 1 forces lead(f)^2 = prod(-conj(r)).  The principal
    square root fixes the remaining sign; any other unimodular choice only
    rescales phi.
    """
    prod = 1.0 + 0.0j
    for ci, cpi, g in zip(spec.c, spec.c_prime, spec.gaps):
        for l in range(g):            # roots of R_0
            prod *= -np.conj(qpow(spec.q, 2 * (cpi + l)))
        for l in range(-g):           # roots of S_0
            prod *= -np.conj(qpow(spec.q, 2 * (ci + l)))
    c = complex(np.sqrt(prod))
    return c / abs(c)


def _s_roots_filtered(spec: BimoduleSpec, j: int) -> list[complex]:
    """Roots c_i, ..., c'_i - j - 1 over i with c'_i - j - 1 >= c_i."""
    roots: list[complex] = []
    for ci, g in zip(spec.c, spec.gaps):
        count = -g - j
        if count > 0:
            roots.extend(ci + l for l in range(count))
    return roots


def _deg_R(spec: BimoduleSpec, j: int) -> int:
    return sum(max(g - j, 0) for g in spec.gaps)


def _q_P(spec_c: tuple[complex, ...], q: float) -> BalancedLaurent:
    m = len(spec_c) // 2
    sumc = sum(spec_c)
    return BalancedLaurent.from_roots([qpow(q, 2 * ci - 1) for ci in spec_c],
                                      qpow(q, m - sumc))


def _q_L(spec: BimoduleSpec, j: int) -> BalancedLaurent:
    """L_j = R_j / R_{j+1}: monic, roots q^{2 c_i - 2j - 2} for c_i - j - 1 >= c'_i."""
    roots = [qpow(spec.q, 2 * ci - 2 * j - 2)
             for ci, g in zip(spec.c, spec.gaps) if g - j - 1 >= 0]
    return BalancedLaurent.from_roots(roots, 1.0)


def _exact_div(num: BalancedLaurent, den: BalancedLaurent) -> BalancedLaurent:
    q, r = divmod(num, den)
    if r.linf > EXACT_DIV_TOL * max(num.linf, 1e-300):
        raise ValidationError("expected exact Laurent division "
                              f"(relative remainder {r.linf / num.linf:.2e})")
    return q


def compute_Sj(conj: ConjugationData, j: int) -> PolyLike:
    """S_j with the root set of the phi lemma and the pinned normalization.

    Filtered: closed form, leading coefficient C_phi (-1)^{deg R_{-j}} a^{-j}.
    q: built recursively from S_0 through the exact quotient identities
    a P_{c'}(q^{1+2K} Z) = M_K(Z) star_reflect(L_{-K-1}), M_K = S_K / S_{K+1};
    cached, fill is compute-then-insert idempotent.
    """
    spec = conj.spec
    if spec.variant == FILTERED:
        key = j
        if key in conj._sj_cache:
            return conj._sj_cache[key]
        lead = conj.C_phi * (-1) ** _deg_R(spec, -j) * conj.a ** (-j)
        out = Poly.from_roots(_s_roots_filtered(spec, j), lead)
        conj._sj_cache[key] = out
        return out

    cache = conj._sj_cache
    if j in cache:
        return cache[j]
    if 0 not in cache:
        roots0 = [qpow(spec.q, 2 * (ci + l))
                  for ci, g in zip(spec.c, spec.gaps) for l in range(-g)]
        cache[0] = conj.C_phi * BalancedLaurent.from_roots(roots0, 1.0)
    p_cprime = _q_P(spec.c_prime, spec.q)

    def M(K: int) -> BalancedLaurent:
        num = conj.a * p_cprime.scale_arg(qpow(spec.q, 1 + 2 * K))
        return _exact_div(num, _q_L(spec, -K - 1).star_reflect())

    k_lo = min(cache)
    while k_lo > j:
        cache[k_lo - 1] = cache[k_lo] * M(k_lo - 1)
        k_lo -= 1
    k_hi = max(cache)
    while k_hi < j:
        cache[k_hi + 1] = _exact_div(cache[k_hi], M(k_hi))
        k_hi += 1
    return cache[j]


def apply_phi(conj: ConjugationData, m: GWAElement) -> GWAElement:
    """Termwise x^j R_j R -> x^{-j} S_{-j} star_reflect(R); antilinear."""
    spec = conj.spec
    terms: dict[int, PolyLike] = {}
    for j, coeff in m.terms.items():
        quot = weight_quotient(spec, j, coeff)
        out = compute_Sj(conj, -j) * quot.star_reflect()
        terms[-j] = terms[-j] + out if -j in terms else out
    return GWAElement(m.variant, terms, m.q)


def reverse_conjugation(conj: ConjugationData) -> ConjugationData:
    """The same rho data viewed from M_{c',c}; used for the psi map."""
    if conj.variant == FILTERED:
        return build_conjugation(conj.spec.reversed(), epsilon=conj.epsilon,
                                 tau=conj.tau)
    return build_conjugation(conj.spec.reversed(), abs_a=conj.abs_a, s=conj.s)


def rs_product_profile(conj: ConjugationData, j: int, samples: int = 64,
                       extent: float = 6.0) -> np.ndarray:
    """Sample the normalized R_j S_{-j} product along its critical set.

    Filtered: (a i^n)^{-j} R_j(t - j) S_{-j}(t) on the line Re t = j/2,
    Im t in [-extent, extent].  q: a^{-j} R_j(q^{-j} z) S_{-j}(q^j z) on the
    unit circle.  The phi normalization makes these real, and positive for
    large |Im t| in the filtered case.
    """
    spec = conj.spec
    rj = compute_Rj(spec, j)
    smj = compute_Sj(conj, -j)
    if spec.variant == FILTERED:
        y = np.linspace(-extent, extent, samples)
        t = j / 2 + 1j * y
        scale = (conj.a * 1j ** spec.n) ** (-j)
        return scale * rj(t - j) * smj(t)
    theta = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    z = np.exp(1j * theta)
    scale = conj.a ** (-j)
    return scale * rj(spec.q ** (-j) * z) * smj(spec.q ** j * z)
