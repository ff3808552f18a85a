"""The identity suite V1..V20.

Each check returns an :class:`Outcome`; the runner in :mod:`.report` wraps it
with timing and metadata.  Checks never raise for a mathematical failure:
they record the first counterexample as a witness and continue.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from ..cit import catalogue as cat
from ..cit.classical import (
    SEMISTABLE,
    UNSTABLE,
    discriminant,
    j_invariant,
    resultant_discriminant,
    stability_classify,
)
from ..cit.synthesis import CovariantSpec, synthesize_space
from ..duality import big_psi, check_duality_theorem, proportional, psi1, psi2
from ..families import (
    OMEGA,
    bold_c,
    bold_q,
    c,
    cubic_family,
    generic_form,
    matrix_cubic_fourier,
    matrix_cubic_torus,
    matrix_rotation_quartic,
    q,
    random_form,
    random_rational_form,
    random_sl,
    sample_ts,
    sylvester_quintic,
    symbols,
)
from ..forms import Form, apply_linear, hat, hessian, tilde
from ..milnor import (
    associated_form,
    build_reduction,
    closed_form_delta_phi,
    delta_phi,
    discriminant_scalar,
    equivariance_check,
    reduction_delta_phi,
    verify_inverse_system,
)
from ..parse import parse_form
from ..poly import Poly
from ..scalars import QQ, format_rational, is_rational

SYMBOLIC_FULL = "symbolic-full"
SYMBOLIC_FAMILY = "symbolic-family"
SAMPLED = "sampled"

RATIONAL_DOMAIN = "rationals p/q with |p| <= 2^31, 1 <= q <= 2^31"
FAMILY_T_DOMAIN = "rationals p/q with |p| <= 40, 1 <= q <= 7"
SMALL_INT_DOMAIN = "integers in [-5, 5]"


def render(x):
    if isinstance(x, Form):
        return str(x)
    if is_rational(x):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return [render(v) for v in x]
    if isinstance(x, dict):
        return {str(k): render(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass
class Outcome:
    samples: int = 0
    domain: str | None = None
    degree: int | None = None
    witness: dict | None = None
    details: dict = field(default_factory=dict)
    cases: int = 0

    @property
    def passed(self) -> bool:
        return self.witness is None

    def expect(self, ok: bool, **witness) -> bool:
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = {k: render(v) for k, v in witness.items()}
        return ok


# -- shared symbolic computations ---------------------------------------------------
@lru_cache(maxsize=None)
def generic_quartic():
    return generic_form(2, 4)


@lru_cache(maxsize=None)
def generic_quartic_delta_phi():
    return reduction_delta_phi(generic_quartic())


@lru_cache(maxsize=None)
def cubic_symbols():
    return symbols("a", "b", "c", "d")


@lru_cache(maxsize=None)
def symbolic_cubic():
    return cubic_family(*cubic_symbols())


@lru_cache(maxsize=None)
def symbolic_cubic_delta_phi():
    return reduction_delta_phi(symbolic_cubic())


@lru_cache(maxsize=None)
def symbolic_quintic():
    return sylvester_quintic(*symbols("a", "b", "c"))


def _inv(name, f):
    return cat.evaluate(name, f)


def _quartic_invariants(f):
    I2, I3 = _inv("I2", f), _inv("I3", f)
    return I2, I3, I2**3 - 27 * I3**2


def _cubic_invariants(f):
    I4, I6 = _inv("I4", f), _inv("I6", f)
    return I4, I6, I6**2 + 64 * I4**3


def _nondegenerate(n, d, r, maker):
    while True:
        f = maker(n, d, r)
        if discriminant(f) != 0:
            return f


def _rat_form(n, d, r):
    return random_rational_form(n, d, r)


def _int_form(n, d, r):
    return random_form(n, d, r, size=5)


def _ts_quartic(count, seed):
    return sample_ts(count, exclude=(0, 2, -2, 6, -6), seed=seed)


def _ts_cubic(count, seed):
    return sample_ts(count, exclude=(0, 6, -3), seed=seed)


# -- V1 .. V3: families ---------------------------------------------------------------
def check_v1(samples, r: random.Random) -> Outcome:
    out = Outcome(domain=FAMILY_T_DOMAIN)
    ts = _ts_quartic(samples or 25, r.randrange(1 << 30))
    out.samples = len(ts)
    for t in ts:
        af = associated_form(q(t))
        out.expect(af.form == bold_q(t), t=t, computed=af.form, expected=bold_q(t))
        out.expect(proportional(af.form, q(-12 / t).as_dual()), t=t, computed=af.form, expected=q(-12 / t))
        twice = associated_form(af.olddef).form
        out.expect(proportional(twice, q(t).as_dual()), t=t, computed=twice, expected=q(t))
    return out


def check_v2(samples, r) -> Outcome:
    out = Outcome(domain=FAMILY_T_DOMAIN)
    ts = _ts_cubic(samples or 25, r.randrange(1 << 30))
    out.samples = len(ts)
    for t in ts:
        af = associated_form(c(t))
        out.expect(af.form == bold_c(t), t=t, computed=af.form, expected=bold_c(t))
        out.expect(proportional(af.form, c(-18 / t).as_dual()), t=t, computed=af.form, expected=c(-18 / t))
        twice = associated_form(af.olddef).form
        out.expect(proportional(twice, c(t).as_dual()), t=t, computed=twice, expected=c(t))
    return out


def check_v3(samples, r) -> Outcome:
    out = Outcome(domain=FAMILY_T_DOMAIN)
    count = samples or 25
    for t in _ts_quartic(count, r.randrange(1 << 30)):
        J = j_invariant(q(t))
        out.expect(J == (t * t + 12) ** 3 / (108 * (t * t - 4) ** 2), t=t, J=J)
        Jb = j_invariant(associated_form(q(t)).olddef)
        out.expect(Jb == J / (J - 1), t=t, J=J, J_assoc=Jb)
    for t in _ts_cubic(count, r.randrange(1 << 30)):
        J = j_invariant(c(t))
        out.expect(J == -(t**3) * (t**3 - 216) ** 3 / (2**6 * 3**3 * (t**3 + 27) ** 3), t=t, J=J)
        Jb = j_invariant(associated_form(c(t)).olddef)
        out.expect(Jb == 1 / J, t=t, J=J, J_assoc=Jb)
    out.samples = 2 * count
    return out


# -- V4, V5: pullbacks ------------------------------------------------------------------
def check_v4(samples, r) -> Outcome:
    out = Outcome(degree=24)
    f = generic_quartic()
    I2, I3, D = _quartic_invariants(f)
    G = generic_quartic_delta_phi().as_primal()
    J2, J3, DG = _quartic_invariants(G)
    out.expect(J2 - D * I2 * QQ(1, 2**8 * 3**3) == 0, identity="I2(Delta Phi) = Delta I2 / (2^8 3^3)")
    out.expect(J3 + D**2 * QQ(1, 2**12 * 3**6) == 0, identity="I3(Delta Phi) = -Delta^2 / (2^12 3^6)")
    out.expect(DG - D**3 * I3**2 * QQ(1, 2**24 * 3**6) == 0, identity="Delta(Delta Phi) = Delta^3 I3^2 / (2^24 3^6)")
    out.details["indeterminates"] = sorted(I2.used_gens())
    return out


def _cubic_pullbacks(out, f, G, tag):
    I4, I6, D = _cubic_invariants(f)
    J4, J6, DG = _cubic_invariants(G)
    out.expect(J4 == -D**3 * QQ(1, 2**12 * 3**12), where=tag, identity="I4(Delta Phi) = -Delta^3 / (2^12 3^12)", f=f)
    out.expect(J6 == -I6 * D**4 * QQ(1, 2**15 * 3**18), where=tag, identity="I6(Delta Phi) = -I6 Delta^4 / (2^15 3^18)", f=f)
    out.expect(DG == -(I4**3) * D**8 * QQ(1, 2**24 * 3**36), where=tag, identity="Delta(Delta Phi) = -I4^3 Delta^8 / (2^24 3^36)", f=f)


def check_v5(samples, r) -> Outcome:
    out = Outcome(domain=RATIONAL_DOMAIN, degree=108)
    _cubic_pullbacks(out, symbolic_cubic(), symbolic_cubic_delta_phi().as_primal(), "family")
    n = samples if samples is not None else 50
    for _ in range(n):
        f = _nondegenerate(3, 3, r, _rat_form)
        _cubic_pullbacks(out, f, reduction_delta_phi(f).as_primal(), "sample")
    out.samples = n
    return out


# -- V6: equivariance ---------------------------------------------------------------------
def check_v6(samples, r) -> Outcome:
    out = Outcome(domain=SMALL_INT_DOMAIN + " (forms); products of integer shears and signed permutations (matrices)")
    M = matrix_rotation_quartic()
    for t in (QQ(1), QQ(3), QQ(-5, 2)):
        moved = apply_linear(q(t), M)
        target = q((-2 * t + 12) / (t + 2))
        out.expect(proportional(moved, target), matrix="rotation", t=t, moved=moved, expected=target)
        out.expect(equivariance_check(q(t), M), matrix="rotation", t=t)
    T = matrix_cubic_torus()
    F = matrix_cubic_fourier()
    for t in (QQ(1), QQ(2), QQ(-7, 3)):
        moved = apply_linear(c(t), T)
        out.expect(proportional(moved, c(OMEGA * t)), matrix="torus", t=t, moved=moved)
        out.expect(equivariance_check(c(t), T), matrix="torus", t=t)
        moved = apply_linear(c(t), F)
        target = c((-3 * t + 18) / (t + 3))
        out.expect(proportional(moved, target), matrix="fourier", t=t, moved=moved, expected=target)
        out.expect(equivariance_check(c(t), F), matrix="fourier", t=t)
    n = samples if samples is not None else 5
    for (nv, d) in ((2, 4), (2, 5), (3, 3)):
        for _ in range(n):
            f = _nondegenerate(nv, d, r, _int_form)
            C = random_sl(nv, r)
            out.expect(equivariance_check(f, C), f=f, matrix=C.matrix.tolist())
    out.samples = 3 * n
    return out


# -- V7 .. V10: binary quartic contravariant --------------------------------------------
def check_v7(samples, r) -> Outcome:
    out = Outcome(degree=4)
    f = generic_quartic()
    lhs = generic_quartic_delta_phi()
    rhs = closed_form_delta_phi(f)
    out.expect(lhs == rhs, identity="hat(Delta Phi) = I2 H / (2^7 3^3) - I3 id / 2^4")
    spot = hat(delta_phi(q(1), "reduction"))
    want = q(-12) * QQ(-1, 384)
    out.expect(spot == want, spot="q_1", computed=spot, expected=want)
    return out


def check_v8(samples, r) -> Outcome:
    out = Outcome(degree=16)
    f = generic_quartic()
    I2, I3, D = _quartic_invariants(f)
    G = generic_quartic_delta_phi().as_primal()
    twice = reduction_delta_phi(G).as_primal()
    out.expect(twice == f * (-I3 * D**2 * QQ(1, 2**20 * 3**6)), identity="(Delta Phi)o(Delta Phi) = -I3 Delta^2 / (2^20 3^6) id")
    g = delta_phi(q(1), "reduction").as_primal()
    spot = delta_phi(g, "reduction").coeff((4, 0))
    want = -QQ(35, 2**31 * 3**5)
    out.expect(spot == want, spot="z1^4 coefficient at q_1", computed=spot, expected=want)
    out.details["spot_q1_z1^4"] = format_rational(spot)
    return out


def check_v9(samples, r) -> Outcome:
    out = Outcome(degree=8)
    f = generic_quartic()
    I2, I3, D = _quartic_invariants(f)
    H = hessian(f)
    G = generic_quartic_delta_phi().as_primal()
    out.expect(hessian(G) == tilde(H).as_primal() * (-D * QQ(1, 2**8 * 3**3)), identity="H o (Delta Phi) = -Delta tilde(H) / (2^8 3^3)")
    lhs = reduction_delta_phi(H)
    rhs = tilde(f) * (2**9 * 3**6 * I2**2 * I3) - tilde(H) * (2**6 * 3**6 * I3**2)
    out.expect(lhs == rhs, identity="(Delta Phi) o H = 2^9 3^6 I2^2 I3 tilde(id) - 2^6 3^6 I3^2 tilde(H)")
    return out


def check_v10(samples, r) -> Outcome:
    out = Outcome(degree=6)
    f = generic_quartic()
    I2, I3, _ = _quartic_invariants(f)
    H = hessian(f)
    out.expect(_inv("I2", H) == 2**6 * 3**3 * I2**2, identity="I2 o H = 2^6 3^3 I2^2")
    out.expect(_inv("I3", H) == 2**10 * 3**6 * I3**2 - 2**9 * 3**3 * I2**3, identity="I3 o H = 2^10 3^6 I3^2 - 2^9 3^3 I2^3")
    out.expect(hessian(H) == f * (2**10 * 3**6 * I3) - H * (2**6 * 3**3 * I2), identity="H o H = 2^10 3^6 I3 id - 2^6 3^3 I2 H")
    return out


# -- V11, V12: ternary cubic contravariant ---------------------------------------------
def check_v11(samples, r) -> Outcome:
    out = Outcome(domain=RATIONAL_DOMAIN, degree=9)
    f = symbolic_cubic()
    out.expect(symbolic_cubic_delta_phi() == closed_form_delta_phi(f), where="family", identity="Delta Phi = -I6 P / 36 - I4 Q / 27")
    n = samples if samples is not None else 50
    for _ in range(n):
        g = _rat_form(3, 3, r)
        lhs, rhs = reduction_delta_phi(g), closed_form_delta_phi(g)
        out.expect(lhs == rhs, where="sample", f=g, reduction=lhs, closed_form=rhs)
    spot = delta_phi(c(0), "reduction")
    want = _inv("P", c(0)) * (-_inv("I6", c(0)) * QQ(1, 36))
    out.expect(spot == want and spot == Form(3, 3, {(1, 1, 1): QQ(1, 36)}, dual=True), spot="c_0", computed=spot, expected=want)
    out.samples = n
    return out


def check_v12(samples, r) -> Outcome:
    out = Outcome(domain=RATIONAL_DOMAIN, degree=81)
    n = samples if samples is not None else 50
    for _ in range(n):
        f = _nondegenerate(3, 3, r, _rat_form)
        I4, I6, D = _cubic_invariants(f)
        G = reduction_delta_phi(f).as_primal()
        H = hessian(f)
        twice = reduction_delta_phi(G).as_primal()
        out.expect(twice == f * (-(I4**2) * D**6 * QQ(1, 2**21 * 3**30)), f=f, identity="(Delta Phi)o(Delta Phi) = -I4^2 Delta^6 / (2^21 3^30) id")
        out.expect(_inv("I4", G) == -D**3 * QQ(1, 2**12 * 3**12), f=f, identity="I4 o (Delta Phi)")
        out.expect(_inv("I6", G) == -I6 * D**4 * QQ(1, 2**15 * 3**18), f=f, identity="I6 o (Delta Phi)")
        out.expect(_inv("P", G) == H.as_dual() * (D**2 * QQ(1, 2**10 * 3**12)), f=f, identity="P o (Delta Phi) = H Delta^2 / (2^10 3^12)")
        q_rhs = H.as_dual() * (-I6 * D**3 * QQ(1, 2**15 * 3**17)) - f.as_dual() * (I4**2 * D**3 * QQ(1, 2**9 * 3**15))
        out.expect(_inv("Q", G) == q_rhs, f=f, identity="Q o (Delta Phi)")
    out.samples = n
    return out


# -- V13, V14: binary quintic ------------------------------------------------------------
def _quintic_covariants(f):
    return {k: _inv(k, f) for k in ("C40", "C26", "C15", "C51", "C33", "C22", "C44")}


def check_v13(samples, r) -> Outcome:
    out = Outcome(domain=SMALL_INT_DOMAIN, degree=6)
    f = symbolic_quintic()
    red = hat(reduction_delta_phi(f))
    C = _quintic_covariants(f)
    rhs = (
        C["C26"] * (C["C40"] * QQ(1, 20))
        - C["C15"] * C["C51"] * QQ(3, 50)
        + C["C33"] * C["C33"] * QQ(27, 10)
        - C["C22"] ** 3 * QQ(1, 10)
    )
    out.expect(red == rhs, where="Sylvester family", identity="hat(Delta Phi) = C40 C26/20 - 3 C15 C51/50 + 27 C33^2/10 - C22^3/10")
    n = samples if samples is not None else 10
    for _ in range(n):
        g = _nondegenerate(2, 5, r, _int_form)
        a, b = reduction_delta_phi(g), closed_form_delta_phi(g)
        out.expect(a == b, where="sample", f=g, reduction=a, closed_form=b)
    out.samples = n
    return out


def _relation(C):
    return (
        C["C26"] * C["C40"]
        - C["C15"] * C["C51"]
        + C["C33"] * C["C33"] * 9
        - C["C22"] ** 3
        + C["C22"] * C["C44"] * 2
    )


def check_v14(samples, r) -> Outcome:
    out = Outcome(domain=SMALL_INT_DOMAIN, degree=6)
    rel = _relation(_quintic_covariants(symbolic_quintic()))
    out.expect(rel.is_zero(), where="Sylvester family", residual=rel)
    space = synthesize_space(CovariantSpec(2, 5, 6, 6))
    out.details["space_dimension"] = space.dimension
    out.expect(space.dimension == 4, dimension=space.dimension)
    n = samples if samples is not None else 10
    for _ in range(n):
        g = _int_form(2, 5, r)
        C = _quintic_covariants(g)
        out.expect(_relation(C).is_zero(), where="sample", f=g)
    # the five products span a 4-dimensional space of covariants on random quintics
    probes = [_int_form(2, 5, r) for _ in range(6)]
    vecs = []
    for name in ("C40*C26", "C15*C51", "C33^2", "C22^3", "C22*C44"):
        parts = []
        for g in probes:
            C = _quintic_covariants(g)
            prod = {
                "C40*C26": C["C26"] * C["C40"],
                "C15*C51": C["C15"] * C["C51"],
                "C33^2": C["C33"] * C["C33"],
                "C22^3": C["C22"] ** 3,
                "C22*C44": C["C22"] * C["C44"],
            }[name]
            parts.append(prod)
        vecs.append(parts)
    out.expect(_products_rank(vecs) == 4, products_rank=_products_rank(vecs))
    out.samples = n
    return out


def _products_rank(vecs) -> int:
    from ..forms import monomial_basis
    from ..linalg.matrix import Matrix, rank

    basis = monomial_basis(2, 6)
    rows = [[x for g in parts for x in g.coefficient_vector(basis)] for parts in vecs]
    return rank(Matrix(rows))


# -- V15, V16: the reduction determinant and denominators --------------------------------
def check_v15(samples, r) -> Outcome:
    out = Outcome(degree=None)
    scalars = {}
    for d in (3, 4, 5):
        try:
            scalars[d] = discriminant_scalar(d)
            out.expect(bool(scalars[d]), d=d, scalar=scalars[d])
        except Exception as exc:  # a remainder means D is not proportional to Delta
            out.expect(False, d=d, error=str(exc))
    out.details["scalars"] = {str(d): format_rational(v) for d, v in scalars.items()}
    out.details["delta_used"] = {"3": "Res(f_z1, f_z2)", "4": "I2^3 - 27 I3^2", "5": "C40^2 - 128 C80"}
    return out


def check_v16(samples, r) -> Outcome:
    out = Outcome()
    (t,) = symbols("t")
    for name, f in (("q_t", q(t)), ("c_t", c(t)), ("generic quartic", generic_quartic()), ("cubic family", symbolic_cubic())):
        try:
            G = reduction_delta_phi(f)
            ok = all(isinstance(v, Poly) or is_rational(v) for v in G.coeffs.values())
        except Exception as exc:
            G, ok = str(exc), False
        out.expect(ok, family=name, result=G)
    R = build_reduction(q(t))
    out.details["D(q_t)"] = str(R.det)
    return out


# -- V17 .. V20: duality and exceptional orbits ----------------------------------------
def check_v17(samples, r) -> Outcome:
    out = Outcome(domain=SMALL_INT_DOMAIN)
    n = samples if samples is not None else 10
    for (nv, d) in ((2, 4), (2, 5), (3, 3)):
        for _ in range(n):
            f = _nondegenerate(nv, d, r, _int_form)
            out.expect(psi1(f).same_as(psi2(f)), f=f, claim="psi1 = psi2")
            out.expect(psi1(f).rank == nv * nv, f=f, claim="rank n^2")
            out.expect(proportional(big_psi(f).normal, associated_form(f).form), f=f, claim="normal of Psi ~ Phi")
    for text, nv in (("z1^2 z2^2", 2), ("z1 z2 z3", 3)):
        g = parse_form(text, nv)
        out.expect(psi1(g).rank < nv * nv, f=g, claim="rank drops on the semistable orbit")
    out.samples = 3 * n
    return out


def check_v18(samples, r) -> Outcome:
    out = Outcome(domain=FAMILY_T_DOMAIN + "; random SL_n transforms")
    n = samples if samples is not None else 10
    for t in _ts_quartic(5, r.randrange(1 << 30)):
        out.expect(check_duality_theorem(q(t)), f=q(t))
        normal = psi2(q(t)).normal
        out.expect(proportional(normal, q(-12 / t).as_dual()), f=q(t), normal=normal)
    for t in _ts_cubic(5, r.randrange(1 << 30)):
        out.expect(check_duality_theorem(c(t)), f=c(t))
        normal = psi2(c(t)).normal
        out.expect(proportional(normal, c(-18 / t).as_dual()), f=c(t), normal=normal)
    for base in (q(QQ(1)), c(QQ(1))):
        for _ in range(n):
            g = apply_linear(base, random_sl(base.n, r))
            out.expect(check_duality_theorem(g), f=g)
    out.samples = 2 * n
    return out


def check_v19(samples, r) -> Outcome:
    out = Outcome(domain=SMALL_INT_DOMAIN)
    for f in (q(0), c(0), q(QQ(1)), c(QQ(1))):
        out.expect(verify_inverse_system(f), f=f)
    n = samples if samples is not None else 5
    for (nv, d) in ((2, 4), (2, 5), (3, 3)):
        for _ in range(n):
            f = _nondegenerate(nv, d, r, _int_form)
            out.expect(verify_inverse_system(f), f=f)
        out.expect(verify_inverse_system(apply_linear(q(QQ(1)), random_sl(2, r))), f="SL_2 transform of q_1")
    out.samples = 3 * n
    return out


def check_v20(samples, r) -> Outcome:
    out = Outcome()
    p0, c0 = associated_form(q(0)).olddef, associated_form(c(0)).olddef
    out.expect(discriminant(p0) == 0, f="olddef Phi(q_0)", value=p0)
    out.expect(discriminant(c0) == 0, f="olddef Phi(c_0)", value=c0)
    for t in (0, 6, -6):
        J = j_invariant(q(QQ(t)))
        out.expect(J == 1, f=f"q_{t}", J=J)
    for tau in (QQ(1), OMEGA, OMEGA * OMEGA):
        g = c(tau * 6)
        out.expect(_inv("I4", g) == 0 and j_invariant(g) == 0, f=g, I4=_inv("I4", g))
    out.expect(j_invariant(c(QQ(0))) == 0, f="c_0")
    strata = {
        "z1^2 z2^2": (2, SEMISTABLE),
        "z1^4": (2, UNSTABLE),
        "z1 z2 z3": (3, SEMISTABLE),
        "z1^3": (3, UNSTABLE),
    }
    for text, (nv, want) in strata.items():
        got = stability_classify(parse_form(text, nv))
        out.expect(got == want, f=text, stratum=got, expected=want)
    for text, nv in (("z1^2 z2^2", 2), ("z1 z2 z3", 3)):
        val = closed_form_delta_phi(parse_form(text, nv))
        out.expect(val.is_zero(), f=text, closed_form=val)
    out.expect(resultant_discriminant(parse_form("z1^2 z2^2", 2)) == 0, f="z1^2 z2^2", claim="resultant zero test")
    return out


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    mode: str
    run: object


CHECKS = [
    Check("V1", "Phi(q_t) = (t z1*^4 - 12 z1*^2 z2*^2 + t z2*^4)/(72(t^2-4)) ~ q_{-12/t}; Phi(Phi(q_t)) ~ q_t", SAMPLED, check_v1),
    Check("V2", "Phi(c_t) = -(t sum z_i*^3 - 18 z1* z2* z3*)/(24(t^3+27)) ~ c_{-18/t}; Phi(Phi(c_t)) ~ c_t", SAMPLED, check_v2),
    Check("V3", "J(Phi(q_t)) = J(q_t)/(J(q_t)-1); J(Phi(c_t)) = 1/J(c_t)", SAMPLED, check_v3),
    Check("V4", "I2(Phi f) = I2/(2^8 3^3 Delta), I3(Phi f) = -1/(2^12 3^6 Delta), Delta(Phi f) = I3^2/(2^24 3^6 Delta^3)", SYMBOLIC_FULL, check_v4),
    Check("V5", "I4(Phi f) = -1/(2^12 3^12 Delta), I6(Phi f) = -I6/(2^15 3^18 Delta^2), Delta(Phi f) = -I4^3/(2^24 3^36 Delta^4)", SYMBOLIC_FAMILY, check_v5),
    Check("V6", "Phi(C.f) = det(C)^2 C.Phi(f); olddef: det(C)^2 (C^-1)^T.Phi(f)", SAMPLED, check_v6),
    Check("V7", "hat(Delta Phi) = I2 H/(2^7 3^3) - I3 id/2^4", SYMBOLIC_FULL, check_v7),
    Check("V8", "(Delta Phi)o(Delta Phi) = -I3 Delta^2/(2^20 3^6) id", SYMBOLIC_FULL, check_v8),
    Check("V9", "H o (Delta Phi) = -Delta tilde(H)/(2^8 3^3); (Delta Phi) o H = 2^9 3^6 I2^2 I3 tilde(id) - 2^6 3^6 I3^2 tilde(H)", SYMBOLIC_FULL, check_v9),
    Check("V10", "I2 o H = 2^6 3^3 I2^2, I3 o H = 2^10 3^6 I3^2 - 2^9 3^3 I2^3, H o H = 2^10 3^6 I3 id - 2^6 3^3 I2 H", SYMBOLIC_FULL, check_v10),
    Check("V11", "Delta Phi = -I6 P/36 - I4 Q/27 (ternary cubics)", SYMBOLIC_FAMILY, check_v11),
    Check("V12", "(Delta Phi)o(Delta Phi) = -I4^2 Delta^6/(2^21 3^30) id with I4, I6, P, Q composed with Delta Phi", SAMPLED, check_v12),
    Check("V13", "hat(Delta Phi) = C40 C26/20 - 3 C15 C51/50 + 27 C33^2/10 - C22^3/10 (binary quintics)", SYMBOLIC_FAMILY, check_v13),
    Check("V14", "C40 C26 - C15 C51 + 9 C33^2 - C22^3 + 2 C22 C44 = 0; degree 6 order 6 covariants have dimension 4", SYMBOLIC_FAMILY, check_v14),
    Check("V15", "D(f) = det A(f) is a constant multiple of Delta(f) for binary d = 3, 4, 5", SYMBOLIC_FULL, check_v15),
    Check("V16", "Delta * mu is polynomial (the denominator of mu is Delta to the first power)", SYMBOLIC_FAMILY, check_v16),
    Check("V17", "psi1 = psi2; the normal of W_f is proportional to Phi(f)", SAMPLED, check_v17),
    Check("V18", "orbit tangent hyperplane at f = ker polar_pair(Phi(f), .)", SAMPLED, check_v18),
    Check("V19", "olddef Phi(f) is a Macaulay inverse system of the Milnor algebra", SAMPLED, check_v19),
    Check("V20", "Delta(Phi(q_0)) = Delta(Phi(c_0)) = 0; J(q_0) = J(q_6) = J(q_-6) = 1; I4(c_{6 tau}) = 0; stability strata", SYMBOLIC_FAMILY, check_v20),
]

CHECK_IDS = [ch.id for ch in CHECKS]
BY_ID = {ch.id: ch for ch in CHECKS}
