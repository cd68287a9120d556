"""Cleft extensions and their equivalence with Galois extensions with normal basis.

A cleft witness is a pair ``h, h⁻¹: H -> A`` where ``h`` is a comodule
morphism and four convolution-type conditions ``c1``..``c4`` hold.  This
module verifies such witnesses, derives their basic properties, and builds
each side of the equivalence from the other:

* :func:`galois_from_cleft` writes down ``γ⁻¹`` and a normal basis from
  ``(h, h⁻¹)``;
* :func:`cleft_from_galois` writes down ``(h, h⁻¹)`` from ``γ⁻¹``, a normal
  basis and the morphism ``m_A``;
* :func:`roundtrip` chains the two and re-verifies every constructed witness.

The hypothesis that ``A⊗-`` preserves coequalizers holds automatically for
vector spaces and is not checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlmostLinealityRequired, DoesNotEqualize, NotAHopfQuasigroup, NotInvertible
from .factorization import factor_through_coequalizer, invert
from .galois import (
    CoinvariantData,
    ComoduleMagma,
    GaloisWitness,
    GammaData,
    NablaData,
    NormalBasisWitness,
    TensorOverCoinv,
    build_mA,
    canonical_gamma,
    check_asubh2,
    check_asubh3,
    check_comodule_magma,
    check_gamma_inv_almost_lineal,
    check_normal_basis,
    coinvariants,
    example_normal_basis,
    is_galois,
    nabla,
    tensor_over_coinvariants,
)
from .report import CheckResult, Report, check_equal, check_flag
from .tensor import LinMap, compose_all, identity, tensor
from .whq import convolution, is_weak

T, C = tensor, compose_all


@dataclass(frozen=True, eq=False)
class CleftWitness:
    """Cleaving morphism ``h`` and its convolution-type inverse ``h⁻¹``."""

    h: LinMap
    h_inv: LinMap

    @classmethod
    def regular(cls, cm: ComoduleMagma) -> CleftWitness:
        """``h = id_H``, ``h⁻¹ = λ_H`` for ``(H, δ_H)``."""
        if not cm.regular:
            raise ValueError("the identity cleaving map is defined for (H, δ_H)")
        return cls(cm.idH, cm.H.lam)


def _conv(cm: ComoduleMagma, f: LinMap, g: LinMap) -> LinMap:
    return convolution(f, g, cm.H.comonoid, cm.A)


def _left_twisted(cm: ComoduleMagma, f: LinMap, g: LinMap) -> LinMap:
    """``μ_A∘(μ_A⊗A)∘(A⊗f⊗g)∘(A⊗δ_H)``."""
    mA = cm.A.mu
    return C(mA, T(mA, cm.idA), T(cm.idA, f, g), T(cm.idA, cm.H.delta))


def _coaction_twist(cm: ComoduleMagma, f: LinMap) -> LinMap:
    """``(A⊗μ_H)∘(c_{H,A}⊗H)∘(H⊗(ρ∘f))∘δ_H``."""
    H, I = cm.H, cm.idH
    return C(T(cm.idA, H.mu), T(cm.cHA, I), T(I, C(cm.rho, f)), H.delta)


def _c1_rhs(cm: ComoduleMagma) -> LinMap:
    """``(A⊗(ε∘μ_H))∘(c_{H,A}⊗H)∘(H⊗(ρ∘η_A))``."""
    H = cm.H
    return C(T(cm.idA, H.eps_mu), T(cm.cHA, cm.idH), T(cm.idH, cm.rho_eta))


def check_cleft(cm: ComoduleMagma, w: CleftWitness) -> Report:
    """Comodule-morphism property of ``h`` and conditions ``c1``..``c4``."""
    H, A, h, hi = cm.H, cm.idA, w.h, w.h_inv
    r = Report("cleft witness")
    r.equal("h-comodule", C(cm.rho, h), C(T(h, cm.idH), H.delta))
    r.equal("c1", _conv(cm, hi, h), _c1_rhs(cm))
    r.equal("c2", _coaction_twist(cm, hi), C(T(A, H.piRbar), cm.rho, hi))
    r.equal("c3", _left_twisted(cm, hi, h), C(cm.A.mu, T(A, _conv(cm, hi, h))))
    r.equal("c4", _left_twisted(cm, h, hi), C(cm.A.mu, T(A, _conv(cm, h, hi))))
    return r


def check_cleft_hq(cm: ComoduleMagma, w: CleftWitness) -> Report:
    """The Hopf-quasigroup form ``d1``..``d4`` and the strengthened ``d4-new``."""
    H, A, h, hi = cm.H, cm.idA, w.h, w.h_inv
    etaA_eps = C(cm.A.eta, H.eps)
    A_eps = T(A, H.eps)
    r = Report("cleft witness (Hopf quasigroup)")
    r.equal("h-comodule", C(cm.rho, h), C(T(h, cm.idH), H.delta))
    r.equal("d1", _conv(cm, hi, h), etaA_eps)
    r.equal("d2", _coaction_twist(cm, hi), T(hi, H.eta))
    r.equal("d3", _left_twisted(cm, hi, h), A_eps)
    r.equal("d4", _left_twisted(cm, h, hi), C(cm.A.mu, T(A, _conv(cm, h, hi))))
    r.equal("d4-new", _left_twisted(cm, h, hi), A_eps)
    return r


# -- basic properties ------------------------------------------------------------


def q_map(cm: ComoduleMagma, w: CleftWitness) -> LinMap:
    """``q_A = μ_A∘(A⊗h⁻¹)∘ρ``."""
    return C(cm.A.mu, T(cm.idA, w.h_inv), cm.rho)


@dataclass(frozen=True, eq=False)
class CleftProperties:
    """``p_A`` with ``q_A = i_A∘p_A`` (``None`` if ``q_A`` does not factor)."""

    pA: LinMap | None
    report: Report = field(repr=False)


def _factor(coinv: CoinvariantData, name: str, t: LinMap, r: Report) -> LinMap | None:
    try:
        u = coinv.factor(t)
    except DoesNotEqualize as exc:
        r.flag(name, False, exc.witness, "does not factor through the coinvariants")
        return None
    r.equal(name, C(coinv.i, u), t)
    return u


def cleft_properties(cm: ComoduleMagma, coinv: CoinvariantData, w: CleftWitness) -> CleftProperties:
    """Factorization of ``h∗h⁻¹`` and ``q_A`` through ``i_A`` and the
    convolution identities that follow from ``c1``..``c3``.

    The last identity needs ``AsubH-2`` and is only evaluated when it holds.
    """
    H, A, I, h, hi, mA, rho = cm.H, cm.idA, cm.idH, w.h, w.h_inv, cm.A.mu, cm.rho
    r = Report("cleft properties")
    hh = _conv(cm, h, hi)
    hih = _conv(cm, hi, h)
    q = q_map(cm, w)
    _factor(coinv, "i-h-hinv", hh, r)
    pA = _factor(coinv, "i-qA", q, r)
    r.equal("ii", C(mA, T(hih, A)), C(T(A, H.eps_mu), T(cm.cHA, I), T(I, rho)))
    r.equal("iii-left", _conv(cm, hih, hi), hi)
    r.equal("iii-right", _conv(cm, hi, hh), hi)
    r.equal("iv-left", _conv(cm, h, hih), h)
    r.equal("iv-right", _conv(cm, hh, h), h)
    r.equal("v", C(mA, T(A, hih), rho), A)
    if check_asubh2(cm, coinv).passed:
        r.equal("vi", C(mA, T(mA, A), T(A, q, h), T(A, rho)), mA)
    return CleftProperties(pA, r)


@dataclass(frozen=True)
class EquivalencePair:
    """Both sides of a stated equivalence, evaluated independently."""

    name: str
    lhs: CheckResult
    rhs: CheckResult

    @property
    def values(self) -> tuple[bool, bool]:
        return self.lhs.passed, self.rhs.passed

    @property
    def agree(self) -> bool:
        return self.lhs.passed == self.rhs.passed

    def as_check(self) -> CheckResult:
        """Passes when both sides hold; the witness names the side that failed."""
        if self.lhs.passed and self.rhs.passed:
            return CheckResult(self.name, True)
        bad = self.lhs if not self.lhs.passed else self.rhs
        return CheckResult(self.name, False, {"side": bad.name, **bad.witness})


def check_c2_equivalence(cm: ComoduleMagma, w: CleftWitness) -> EquivalencePair:
    """``c2`` against ``ρ∘h⁻¹ = (h⁻¹⊗λ_H)∘c_{H,H}∘δ_H``."""
    H, hi = cm.H, w.h_inv
    lhs = check_equal("c2", _coaction_twist(cm, hi), C(T(cm.idA, H.piRbar), cm.rho, hi))
    rhs = check_equal("primeraequiv", C(cm.rho, hi), C(T(hi, H.lam), H.c, H.delta))
    return EquivalencePair("c2-equivalence", lhs, rhs)


def check_c4_equivalence(cm: ComoduleMagma, coinv: CoinvariantData, w: CleftWitness) -> EquivalencePair:
    """``c4`` against ``μ_A∘(μ_A⊗h⁻¹)∘(A⊗ρ) = μ_A∘(A⊗q_A)``."""
    A, mA, h, hi = cm.idA, cm.A.mu, w.h, w.h_inv
    lhs = check_equal("c4", _left_twisted(cm, h, hi), C(mA, T(A, _conv(cm, h, hi))))
    rhs = check_equal("segundaequiv", C(mA, T(mA, hi), T(A, cm.rho)), C(mA, T(A, q_map(cm, w))))
    return EquivalencePair("c4-equivalence", lhs, rhs)


# -- cleft => Galois with normal basis ------------------------------------------


@dataclass(frozen=True, eq=False)
class GaloisFromCleft:
    galois: GaloisWitness
    normal_basis: NormalBasisWitness | None
    omega: LinMap | None
    omega_prime: LinMap | None
    report: Report = field(repr=False)
    normal_basis_report: Report | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.report.passed and (self.normal_basis_report is None or self.normal_basis_report.passed)


def inverse_gamma_from_cleft(cm: ComoduleMagma, toc: TensorOverCoinv, nab: NablaData, w: CleftWitness) -> LinMap:
    """``n_A∘(μ_A⊗A)∘(A⊗((h⁻¹⊗h)∘δ_H))∘i_{A⊗H}``."""
    return C(toc.n.arrow, T(cm.A.mu, cm.idA), T(cm.idA, C(T(w.h_inv, w.h), cm.H.delta)), nab.i)


def galois_from_cleft(
    cm: ComoduleMagma,
    coinv: CoinvariantData,
    toc: TensorOverCoinv,
    nab: NablaData,
    w: CleftWitness,
    gamma: GammaData | None = None,
    pA: LinMap | None = None,
) -> GaloisFromCleft:
    """Build ``γ⁻¹`` and the normal basis ``Ω = ω'∘ω`` from a cleft witness.

    ``p_A`` is the factorization of ``q_A`` through the coinvariants; it is
    recomputed here unless given.
    """
    H, A, I, mA, rho, i = cm.H, cm.idA, cm.idH, cm.A.mu, cm.rho, coinv.i
    h, hi = w.h, w.h_inv
    if gamma is None:
        gamma = canonical_gamma(cm, coinv, nab, toc)
    g_inv = inverse_gamma_from_cleft(cm, toc, nab, w)
    gw = GaloisWitness(gamma.gamma, g_inv)
    r = Report("Galois from cleft")
    hih = _conv(cm, hi, h)
    r.equal("aux-fin-1", C(mA, T(A, hih)), C(T(A, H.eps), nab.nabla))
    r.equal("aux-fin-2", C(T(C(mA, T(A, hih)), I), T(A, H.delta)), nab.nabla)
    r.extend(gw.check().checks)
    try:
        exact = invert(gamma.gamma)
    except NotInvertible as exc:
        r.flag("gamma-inv-exact", False, {"rank": exc.rank, "dim": exc.dim})
    else:
        r.equal("gamma-inv-exact", g_inv, exact)
    r.add(check_gamma_inv_almost_lineal(cm, gw, toc, nab, g_inv))
    if pA is None:
        try:
            pA = coinv.factor(q_map(cm, w))
        except DoesNotEqualize as exc:
            r.flag("i-qA", False, exc.witness, "q_A does not factor through the coinvariants")
            return GaloisFromCleft(gw, None, None, None, r)
    CI = identity(coinv.space, cm.field)
    omega = C(mA, T(i, h))
    omega_p = C(T(pA, I), rho)
    Omega = C(omega_p, omega)
    r.equal("omega-section", C(omega, omega_p), A)
    r.equal("omega-ia", C(T(i, I), Omega), C(T(mA, I), T(i, C(T(_conv(cm, h, hi), I), H.delta))))
    r.equal("old-equa", C(pA, mA, T(i, A)), C(coinv.mu, T(CI, pA)))
    r.equal("omega-fin", Omega, C(T(C(coinv.mu, T(CI, pA)), I), T(CI, C(rho, h))))
    nbw = NormalBasisWitness.from_omega(Omega, omega_p, omega)
    return GaloisFromCleft(gw, nbw, omega, omega_p, r, check_normal_basis(cm, coinv, nbw))


# -- Galois with normal basis => cleft ------------------------------------------


@dataclass(frozen=True, eq=False)
class CleftFromGalois:
    witness: CleftWitness
    mA: LinMap
    report: Report = field(repr=False)
    cleft_report: Report = field(repr=False)
    properties: CleftProperties = field(repr=False)

    @property
    def passed(self) -> bool:
        return self.report.passed and self.cleft_report.passed and self.properties.report.passed


def cleft_from_galois(
    cm: ComoduleMagma,
    coinv: CoinvariantData,
    toc: TensorOverCoinv,
    nab: NablaData,
    galois: GaloisWitness,
    nbw: NormalBasisWitness,
) -> CleftFromGalois:
    """``h = ω∘(η_{A^coH}⊗H)`` with ``ω = b⁻¹∘r`` and
    ``h⁻¹ = m_A∘γ⁻¹∘p_{A⊗H}∘(η_A⊗H)``.

    Raises :class:`AlmostLinealityRequired` if ``γ⁻¹`` is not almost lineal.
    """
    H, A, I, mA = cm.H, cm.idA, cm.idH, cm.A.mu
    al = check_gamma_inv_almost_lineal(cm, galois, toc, nab)
    if not al.passed:
        raise AlmostLinealityRequired("the inverse canonical morphism is not almost lineal", witness=al.witness)
    b_inv = nbw.b_inv if nbw.b_inv is not None else invert(nbw.b)
    omega = C(b_inv, nbw.r)
    h = C(omega, T(coinv.eta, I))
    ma = build_mA(cm, coinv, toc, galois, nab, nbw)
    m = ma.mA
    h_inv = C(m, galois.gamma_inv, nab.p, T(cm.A.eta, I))
    w = CleftWitness(h, h_inv)
    r = Report("cleft from Galois")
    r.add(al)
    r.extend(ma.report.checks)
    mu_bar = factor_through_coequalizer(toc.n, mA)
    r.equal("igualdadmsubAomega", mu_bar, C(mA, T(m, h), toc.rho2))
    r.equal("igualdadmsubAomega-2", mu_bar, C(T(A, H.eps), nab.i, galois.gamma))
    return CleftFromGalois(w, m, r, check_cleft(cm, w), cleft_properties(cm, coinv, w))


# -- Hopf quasigroups -------------------------------------------------------------


def corollary_hq(cm: ComoduleMagma, w: CleftWitness | None = None) -> Report:
    """The Hopf-quasigroup form of the equivalence.

    Raises :class:`NotAHopfQuasigroup` when ``Π^L = Π^R = η∘ε`` fails.
    Starting from the cleft witness ``w`` (default ``h = id``, ``h⁻¹ = λ``),
    checks the strengthened conditions, builds the normal basis (which must
    have ``Ω = id`` and ``b∘η_A = η_{A^coH}⊗η_H``), rebuilds a cleft witness
    from it and checks that it is a two-sided convolution inverse pair with
    ``h`` total.
    """
    H, A, I, mA = cm.H, cm.idA, cm.idH, cm.A.mu
    if is_weak(H):
        raise NotAHopfQuasigroup(
            "the target and source morphisms differ from η∘ε", witness={"structure": H.label or "H"}
        )
    if w is None:
        w = CleftWitness.regular(cm)
    coinv = coinvariants(cm)
    nab = nabla(cm)
    toc = tensor_over_coinvariants(cm, coinv)
    CI = identity(coinv.space, cm.field)
    etaA_eps = C(cm.A.eta, H.eps)
    r = Report("Hopf quasigroup equivalence")
    r.equal("nabla-identity", nab.nabla, T(A, I))
    r.equal("ia-hquasi", C(cm.rho, coinv.i), T(coinv.i, H.eta))
    r.extend(c for c in check_cleft_hq(cm, w).checks if c.name != "h-comodule")
    r.equal("hinv-h", _conv(cm, w.h_inv, w.h), etaA_eps)
    r.equal("h-hinv", _conv(cm, w.h, w.h_inv), etaA_eps)
    props = cleft_properties(cm, coinv, w)
    if props.pA is None:
        r.flag("i-qA", False, props.report["i-qA"].witness)
        return r
    r.equal("fin-fin", C(coinv.mu, T(CI, C(props.pA, w.h))), T(CI, H.eps))
    gfc = galois_from_cleft(cm, coinv, toc, nab, w, pA=props.pA)
    r.equal("omega-identity", C(gfc.omega_prime, gfc.omega), T(CI, I))
    r.equal("b-unit", C(gfc.omega_prime, cm.A.eta), T(coinv.eta, H.eta))
    cfg = cleft_from_galois(cm, coinv, toc, nab, gfc.galois, gfc.normal_basis)
    h2, hi2 = cfg.witness.h, cfg.witness.h_inv
    r.equal("rebuilt-h-hinv", _conv(cm, h2, hi2), etaA_eps)
    r.equal("rebuilt-hinv-h", _conv(cm, hi2, h2), etaA_eps)
    r.equal("rebuilt-h-total", C(h2, H.eta), cm.A.eta)
    return r


# -- round trips --------------------------------------------------------------------


@dataclass(eq=False)
class EquivalenceReport:
    """One pass through both directions of the equivalence.

    ``roundtrip`` is true exactly when every report passed, including the
    verification of the witnesses rebuilt at the end.
    """

    direction: str
    inputs: list[str]
    witnesses: dict[str, LinMap]
    reports: list[Report]

    @property
    def roundtrip(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "inputs": list(self.inputs),
            "witnesses": {k: {"dom": _sig(v.dom), "cod": _sig(v.cod)} for k, v in self.witnesses.items()},
            "roundtrip": self.roundtrip,
            "reports": [r.to_json() for r in self.reports],
        }


def _sig(sig) -> list:
    return [[name, dim] for name, dim in sig]


def _prefixed(title: str, rep: Report) -> Report:
    return Report(f"{title}: {rep.title}", list(rep.checks))


def roundtrip(
    cm: ComoduleMagma,
    start: str = "cleft",
    witness: CleftWitness | None = None,
    normal_basis: NormalBasisWitness | None = None,
    gamma_inv: LinMap | None = None,
) -> EquivalenceReport:
    """Run the equivalence from ``start`` ("cleft" or "galois") and back.

    Missing witnesses default to ``h = id``, ``h⁻¹ = λ`` and to the regular
    normal basis of ``(H, δ_H)``; for other comodule magmas they must be given.
    Without ``gamma_inv`` the canonical morphism is inverted exactly.
    """
    if start not in ("cleft", "galois"):
        raise ValueError(f"unknown starting side {start!r}")
    reports = [check_comodule_magma(cm)]
    witnesses: dict[str, LinMap] = {}
    inputs: list[str] = []
    out = EquivalenceReport(start, inputs, witnesses, reports)
    if not reports[0].passed:
        return out
    coinv = coinvariants(cm)
    nab = nabla(cm)
    reports += [coinv.report, nab.report]
    gates = Report("gates")
    gates.add(check_asubh2(cm, coinv))
    gates.add(check_asubh3(cm, coinv))
    reports.append(gates)
    if not gates.passed:
        return out
    toc = tensor_over_coinvariants(cm, coinv)
    gamma = canonical_gamma(cm, coinv, nab, toc)
    reports += [toc.report, gamma.report]

    if start == "cleft":
        if witness is None:
            witness = CleftWitness.regular(cm)
            inputs.append("h = id, h_inv = lambda")
        else:
            inputs.append("h, h_inv from input")
        witnesses.update(h=witness.h, h_inv=witness.h_inv)
        reports.append(check_cleft(cm, witness))
        props = cleft_properties(cm, coinv, witness)
        reports.append(props.report)
        eqs = Report("equivalent conditions")
        eqs.add(check_c2_equivalence(cm, witness).as_check())
        eqs.add(check_c4_equivalence(cm, coinv, witness).as_check())
        reports.append(eqs)
        if not all(r.passed for r in reports):
            return out
        gfc = galois_from_cleft(cm, coinv, toc, nab, witness, gamma, props.pA)
        reports.append(gfc.report)
        if gfc.normal_basis_report is not None:
            reports.append(gfc.normal_basis_report)
        if not gfc.passed:
            return out
        witnesses.update(gamma_inv=gfc.galois.gamma_inv, Omega=gfc.normal_basis.Omega, b=gfc.normal_basis.b)
        try:
            back = cleft_from_galois(cm, coinv, toc, nab, gfc.galois, gfc.normal_basis)
        except AlmostLinealityRequired as exc:
            reports.append(Report("cleft from Galois", [check_flag("almostlineal", False, exc.witness)]))
            return out
        witnesses.update(h_rebuilt=back.witness.h, h_inv_rebuilt=back.witness.h_inv)
        reports += [back.report, _prefixed("rebuilt", back.cleft_report), _prefixed("rebuilt", back.properties.report)]
        return out

    if gamma_inv is not None:
        gw = GaloisWitness(gamma.gamma, gamma_inv)
        inputs.append("gamma_inv from input")
    else:
        try:
            gw = is_galois(gamma)
        except NotInvertible as exc:
            reports.append(Report("Galois", [check_flag("gamma-invertible", False, {"rank": exc.rank, "dim": exc.dim})]))
            return out
        inputs.append("gamma_inv by exact inversion")
    galois_rep = Report("Galois", gw.check().checks)
    galois_rep.add(check_gamma_inv_almost_lineal(cm, gw, toc, nab))
    reports.append(galois_rep)
    if normal_basis is None:
        normal_basis = example_normal_basis(cm, coinv)
        inputs.append("regular normal basis")
    else:
        inputs.append("normal basis from input")
    witnesses.update(gamma_inv=gw.gamma_inv, Omega=normal_basis.Omega, b=normal_basis.b)
    reports.append(check_normal_basis(cm, coinv, normal_basis))
    if not all(r.passed for r in reports):
        return out
    fwd = cleft_from_galois(cm, coinv, toc, nab, gw, normal_basis)
    witnesses.update(h=fwd.witness.h, h_inv=fwd.witness.h_inv)
    reports += [fwd.report, fwd.cleft_report, fwd.properties.report]
    if not fwd.passed:
        return out
    back = galois_from_cleft(cm, coinv, toc, nab, fwd.witness, gamma, fwd.properties.pA)
    reports.append(_prefixed("rebuilt", back.report))
    if back.normal_basis_report is not None:
        reports.append(_prefixed("rebuilt", back.normal_basis_report))
    witnesses.update(gamma_inv_rebuilt=back.galois.gamma_inv)
    return out


__all__ = [
    "CleftFromGalois",
    "CleftProperties",
    "CleftWitness",
    "EquivalencePair",
    "EquivalenceReport",
    "GaloisFromCleft",
    "check_c2_equivalence",
    "check_c4_equivalence",
    "check_cleft",
    "check_cleft_hq",
    "cleft_from_galois",
    "cleft_properties",
    "corollary_hq",
    "galois_from_cleft",
    "inverse_gamma_from_cleft",
    "q_map",
    "roundtrip",
]
