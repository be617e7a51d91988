"""Scratch validation of the core algebra/bimodule/conjugation machinery."""
import numpy as np
from gwatrace import *
from gwatrace.algebra import FILTERED, Q, qpow
from gwatrace.bimodule import weight_quotient

rng = np.random.default_rng(0)

# 1. filtered Weyl
alg = make_algebra(AlgebraParams("filtered", (0.5,)))
print("weyl residuals:", alg.residuals)
uv = alg.u * alg.v
print("uv terms:", uv.terms)   # expect {0: z+1/2}
vu = alg.v * alg.u
print("vu terms:", vu.terms)

# 2. q algebra
algq = make_algebra(AlgebraParams("q", (0.5 + 0.3j, 0.5 - 0.3j), 0.7))
print("q residuals:", algq.residuals)

# 3. n=4 filtered random generic
c4 = tuple(rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1) for _ in range(4))
alg4 = make_algebra(AlgebraParams("filtered", c4))
print("n=4 residuals:", max(alg4.residuals.values()))

# 4. compute_Rj examples
spec = BimoduleSpec("filtered", (0.25,), (-1.75,))
r0 = compute_Rj(spec, 0)
print("R0 roots via coeffs:", r0.coeffs)   # expect (z+1.75)(z+0.75) = 1.3125+2.5z+z^2
print("R2:", compute_Rj(spec, 2).coeffs)

# 5. membership
e = GWAElement.term("filtered", 0, Poly.one())
print("1 in M(0.25, -1.75)?", membership(spec, e))   # False
print("R0 in M?", membership(spec, GWAElement.term("filtered", 0, r0)))  # True

# 6. conjugation, filtered regular n=1 (Weyl)
spec_w = BimoduleSpec.regular(AlgebraParams("filtered", (0.5,)))
conj = build_conjugation(spec_w, rho_label="+", tau=0.25)
print("a, b, t:", conj.a, conj.b, conj.t, "eps", conj.epsilon, "label", conj.rho_label)
print("C_phi:", conj.C_phi)
phi1 = apply_phi(conj, GWAElement.term("filtered", 0, Poly.one()))
print("phi(1):", phi1.terms)   # expect C_phi = 1
phiv = apply_phi(conj, GWAElement.term("filtered", 1, Poly.one()))
print("phi(v):", phiv.terms, "expect a*u with a =", conj.a)

def intertwine_residuals(spec, conj, m, algL, algR):
    """Six identities of the phi lemma."""
    from gwatrace.conjugation import apply_phi
    phi = lambda x: apply_phi(conj, x)
    out = {}
    if spec.variant == "filtered":
        pairs = [
            ("z.", algL.z * m, lambda pm: (algR.z * pm).scale(-1)),
            ("v.", algL.v * m, lambda pm: (algR.u * pm).scale(conj.a)),
            ("u.", algL.u * m, lambda pm: (algR.v * pm).scale(conj.b)),
            (".z", m * algR.z, lambda pm: (pm * algL.z).scale(-1)),
            (".v", m * algR.v, lambda pm: (pm * algL.u).scale(conj.a)),
            (".u", m * algR.u, lambda pm: (pm * algL.v).scale(conj.b)),
        ]
    else:
        pairs = [
            ("Z.", algL.z * m, lambda pm: algR.zinv * pm),
            ("u.", algL.u * m, lambda pm: (algR.v * pm).scale(conj.a)),
            ("v.", algL.v * m, lambda pm: (algR.u * pm).scale(conj.b)),
            (".Z", m * algR.z, lambda pm: pm * algL.zinv),
            (".u", m * algR.u, lambda pm: (pm * algL.v).scale(conj.a)),
            (".v", m * algR.v, lambda pm: (pm * algL.u).scale(conj.b)),
        ]
    pm = phi(m)
    for name, lhs_m, rhs_f in pairs:
        lhs = phi(lhs_m)
        rhs = rhs_f(pm)
        scale = max(1.0, lhs.linf, rhs.linf)
        out[name] = (lhs - rhs).linf / scale
    return out

def random_member(spec, rng, jmax=8, deg=4):
    from gwatrace.bimodule import compute_Rj, basis
    variant = spec.variant
    terms = {}
    for _ in range(3):
        j = int(rng.integers(-jmax, jmax + 1))
        rj = compute_Rj(spec, j)
        if variant == "filtered":
            q = Poly(rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1))
            terms[j] = rj * q
        else:
            q = BalancedLaurent(-deg, rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1))
            terms[j] = rj * q
    return GWAElement(variant, terms, spec.q)

# filtered nontrivial bimodule n=1: c=1+0.3i, c'=0.3i
specb = BimoduleSpec("filtered", (1 + 0.3j,), (0.3j,))
conjb = build_conjugation(specb, rho_label="+", tau=0.3)
algL = make_algebra(specb.left_params())
algR = make_algebra(specb.right_params())
worst = 0.0
for _ in range(20):
    m = random_member(specb, rng)
    res = intertwine_residuals(specb, conjb, m, algL, algR)
    worst = max(worst, max(res.values()))
print("filtered n=1 bimodule intertwining worst:", worst)

# filtered n=2 sigma swap: c1 free complex, c2 = 1 + d - conj(c1)
c1 = 0.6 + 0.7j
d = 2
c2 = 1 + d - np.conj(c1)
spec2 = BimoduleSpec("filtered", (c1, c2), (c1 - d, c2 - d))
conj2 = build_conjugation(spec2, rho_label="-", tau=0.8)
print("sigma n=2 swap:", conj2.sigma)
algL2 = make_algebra(spec2.left_params())
algR2 = make_algebra(spec2.right_params())
worst = 0.0
for _ in range(20):
    m = random_member(spec2, rng, jmax=6, deg=3)
    res = intertwine_residuals(spec2, conj2, m, algL2, algR2)
    worst = max(worst, max(res.values()))
print("filtered n=2 swap intertwining worst:", worst)

# q case sigma=id: c = (r1+ib, r2-ib) with 2r integer, r1+r2 integer
q = 0.7
c1q = 1.0 + 0.4j
c2q = 1.0 - 0.4j
cq = (c1q, c2q)
cpq = tuple(1 - np.conj(x) for x in cq)
specq = BimoduleSpec("q", cq, cpq, q)
print("q gaps:", specq.gaps)
conjq = build_conjugation(specq, abs_a=1.1, s=0.2)
algLq = make_algebra(specq.left_params())
algRq = make_algebra(specq.right_params())
worst = 0.0
for _ in range(20):
    m = random_member(specq, rng, jmax=5, deg=3)
    res = intertwine_residuals(specq, conjq, m, algLq, algRq)
    worst = max(worst, max(res.values()))
print("q n=2 id intertwining worst:", worst)

# q sigma swap real: c1 real with 2c1 not integer, c2 = 1 + d - c1
c1s, ds = 0.3, 1
c2s = 1 + ds - c1s
specqs = BimoduleSpec("q", (c1s, c2s), (c1s - ds, c2s - ds), 0.6)
conjqs = build_conjugation(specqs, abs_a=0.9, s=0.65)
print("q swap sigma:", conjqs.sigma)
algLs = make_algebra(specqs.left_params())
algRs = make_algebra(specqs.right_params())
worst = 0.0
for _ in range(20):
    m = random_member(specqs, rng, jmax=5, deg=3)
    res = intertwine_residuals(specqs, conjqs, m, algLs, algRs)
    worst = max(worst, max(res.values()))
print("q n=2 swap intertwining worst:", worst)

# rs profiles real
for j in range(-3, 4):
    prof = rs_product_profile(conjb, j, samples=32)
    rel = np.max(np.abs(prof.imag)) / max(np.max(np.abs(prof)), 1e-300)
    print(f"filtered profile j={j}: imag/mag = {rel:.2e}, tail value {prof[0]:.4g}")
for j in range(-2, 3):
    prof = rs_product_profile(conjq, j, samples=32)
    rel = np.max(np.abs(prof.imag)) / max(np.max(np.abs(prof)), 1e-300)
    print(f"q profile j={j}: imag/mag = {rel:.2e}")
