"""Weak Hopf quasigroups given by structure constants.

A :class:`Whq` bundles unit, product, counit, coproduct and antipode on one
space ``H``.  It can be built from arbitrary (even broken) data; the checkers
in this module decide exactly which laws hold and report a counterexample for
each one that does not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import cached_property

from .errors import AssociativityFailure, NotAWhq, NotInvertible, SignatureMismatch
from .factorization import SplitPair, coequalizer, equalizer, invert, same_subspace, split_idempotent
from .field import FieldSpec
from .report import Report, check_equal
from .tensor import K, LinMap, SpaceSig, compose_all, first_difference, identity, sig_dim, sig_str, swap, tensor


def _expect(name: str, f: LinMap, dom: SpaceSig, cod: SpaceSig) -> None:
    if f.dom != dom or f.cod != cod:
        raise SignatureMismatch(
            f"{name}: expected {sig_str(dom)} -> {sig_str(cod)}, got {sig_str(f.dom)} -> {sig_str(f.cod)}",
            (dom, cod),
            (f.dom, f.cod),
        )


@dataclass(frozen=True, eq=False)
class UnitalMagma:
    """``eta: K -> A`` and ``mu: A⊗A -> A``; associativity is not assumed."""

    eta: LinMap
    mu: LinMap

    def __post_init__(self):
        A = self.eta.cod
        _expect("eta", self.eta, K, A)
        _expect("mu", self.mu, A + A, A)

    @property
    def space(self) -> SpaceSig:
        return self.eta.cod

    @property
    def dim(self) -> int:
        return sig_dim(self.space)

    @property
    def field(self) -> FieldSpec:
        return self.mu.field

    def check(self, report: Report | None = None) -> Report:
        report = report or Report("unital magma")
        A = identity(self.space, self.field)
        report.equal("unit-right", compose_all(self.mu, tensor(A, self.eta)), A)
        report.equal("unit-left", compose_all(self.mu, tensor(self.eta, A)), A)
        return report


@dataclass(frozen=True, eq=False)
class Comonoid:
    """``eps: D -> K`` and ``delta: D -> D⊗D``."""

    eps: LinMap
    delta: LinMap

    def __post_init__(self):
        D = self.eps.dom
        _expect("eps", self.eps, D, K)
        _expect("delta", self.delta, D, D + D)

    @property
    def space(self) -> SpaceSig:
        return self.eps.dom

    @property
    def dim(self) -> int:
        return sig_dim(self.space)

    @property
    def field(self) -> FieldSpec:
        return self.delta.field

    def check(self, report: Report | None = None) -> Report:
        report = report or Report("comonoid")
        D = identity(self.space, self.field)
        d, e = self.delta, self.eps
        report.equal("counit-right", compose_all(tensor(D, e), d), D)
        report.equal("counit-left", compose_all(tensor(e, D), d), D)
        report.equal("coassociativity", compose_all(tensor(d, D), d), compose_all(tensor(D, d), d))
        return report


def convolution(f: LinMap, g: LinMap, comagma: Comonoid, magma: UnitalMagma) -> LinMap:
    """``f ∗ g = μ_A ∘ (f⊗g) ∘ δ_D`` for ``f, g: D -> A``."""
    D, A = comagma.space, magma.space
    _expect("convolution left factor", f, D, A)
    _expect("convolution right factor", g, D, A)
    return compose_all(magma.mu, tensor(f, g), comagma.delta)


@dataclass(frozen=True, eq=False)
class Whq:
    """Candidate weak Hopf quasigroup on the space ``H = eta.cod``.

    ``validated`` records that :func:`validate` accepted the data; derived
    maps are computed lazily and cached.
    """

    eta: LinMap
    mu: LinMap
    eps: LinMap
    delta: LinMap
    lam: LinMap
    labels: tuple = ()
    validated: bool = False

    def __post_init__(self):
        H = self.eta.cod
        if len(H) != 1:
            raise SignatureMismatch(f"a Whq lives on a single named space, got {sig_str(H)}")
        _expect("eta", self.eta, K, H)
        _expect("mu", self.mu, H + H, H)
        _expect("eps", self.eps, H, K)
        _expect("delta", self.delta, H, H + H)
        _expect("lambda", self.lam, H, H)
        fields = {m.field for m in (self.eta, self.mu, self.eps, self.delta, self.lam)}
        if len(fields) != 1:
            raise SignatureMismatch(f"structure maps over different fields: {sorted(map(str, fields))}")
        if self.labels and len(self.labels) != self.dim:
            raise ValueError(f"{len(self.labels)} basis labels for a space of dimension {self.dim}")

    # -- shape ------------------------------------------------------------

    @property
    def H(self) -> SpaceSig:
        return self.eta.cod

    @property
    def dim(self) -> int:
        return sig_dim(self.H)

    @property
    def field(self) -> FieldSpec:
        return self.mu.field

    @property
    def magma(self) -> UnitalMagma:
        return UnitalMagma(self.eta, self.mu)

    @property
    def comonoid(self) -> Comonoid:
        return Comonoid(self.eps, self.delta)

    def label(self, index: int) -> str:
        return str(self.labels[index]) if self.labels else str(index)

    # -- frequently used composites ----------------------------------------

    @cached_property
    def id(self) -> LinMap:
        return identity(self.H, self.field)

    @cached_property
    def c(self) -> LinMap:
        return swap(self.H, self.H, self.field)

    @cached_property
    def eps_mu(self) -> LinMap:
        """``ε∘μ: H⊗H -> K``."""
        return compose_all(self.eps, self.mu)

    @cached_property
    def delta_eta(self) -> LinMap:
        """``δ∘η: K -> H⊗H``."""
        return compose_all(self.delta, self.eta)

    @cached_property
    def eta_eps(self) -> LinMap:
        return compose_all(self.eta, self.eps)

    @cached_property
    def mu_HH(self) -> LinMap:
        """Product of ``H⊗H``: ``(μ⊗μ)∘(H⊗c⊗H)``."""
        I = self.id
        return compose_all(tensor(self.mu, self.mu), tensor(I, self.c, I))

    @cached_property
    def delta_HH(self) -> LinMap:
        """Coproduct of ``H⊗H``: ``(H⊗c⊗H)∘(δ⊗δ)``."""
        I = self.id
        return compose_all(tensor(I, self.c, I), tensor(self.delta, self.delta))

    def conv(self, f: LinMap, g: LinMap) -> LinMap:
        return convolution(f, g, self.comonoid, self.magma)

    # -- projections -------------------------------------------------------

    @cached_property
    def piL(self) -> LinMap:
        """Target projection ``id ∗ λ``."""
        return self.conv(self.id, self.lam)

    @cached_property
    def piR(self) -> LinMap:
        """Source projection ``λ ∗ id``."""
        return self.conv(self.lam, self.id)

    @cached_property
    def piL_closed(self) -> LinMap:
        """``((ε∘μ)⊗H)∘(H⊗c)∘((δ∘η)⊗H)``."""
        I = self.id
        return compose_all(tensor(self.eps_mu, I), tensor(I, self.c), tensor(self.delta_eta, I))

    @cached_property
    def piR_closed(self) -> LinMap:
        """``(H⊗(ε∘μ))∘(c⊗H)∘(H⊗(δ∘η))``."""
        I = self.id
        return compose_all(tensor(I, self.eps_mu), tensor(self.c, I), tensor(I, self.delta_eta))

    @cached_property
    def piLbar(self) -> LinMap:
        """``(H⊗(ε∘μ))∘((δ∘η)⊗H)``."""
        I = self.id
        return compose_all(tensor(I, self.eps_mu), tensor(self.delta_eta, I))

    @cached_property
    def piRbar(self) -> LinMap:
        """``((ε∘μ)⊗H)∘(H⊗(δ∘η))``."""
        I = self.id
        return compose_all(tensor(self.eps_mu, I), tensor(I, self.delta_eta))


@dataclass(frozen=True, eq=False)
class Projections:
    piL: LinMap
    piR: LinMap
    piLbar: LinMap
    piRbar: LinMap
    agreement: Report

    @property
    def closed_forms_agree(self) -> bool:
        return self.agreement.passed


def projections(H: Whq) -> Projections:
    """The four canonical idempotents, plus a report comparing the
    convolution definitions of ``Π^L``/``Π^R`` with their closed forms."""
    agreement = Report("projection closed forms")
    agreement.equal("piL = closed form", H.piL, H.piL_closed)
    agreement.equal("piR = closed form", H.piR, H.piR_closed)
    return Projections(H.piL, H.piR, H.piLbar, H.piRbar, agreement)


# -- axioms -------------------------------------------------------------------


def check_axioms(H: Whq) -> Report:
    """Every defining law, evaluated exactly on the full tensor-power domain."""
    r = Report("axioms")
    H.magma.check(r)
    H.comonoid.check(r)
    I, c, m, d, e = H.id, H.c, H.mu, H.delta, H.eps
    lam, em, du = H.lam, H.eps_mu, H.delta_eta

    r.equal("a1", compose_all(d, m), compose_all(tensor(m, m), H.delta_HH))

    a2 = compose_all(em, tensor(m, I))
    r.equal("a2-i", a2, compose_all(em, tensor(I, m)))
    r.equal("a2-ii", a2, compose_all(tensor(em, em), tensor(I, d, I)))
    r.equal("a2-iii", a2, compose_all(tensor(em, em), tensor(I, compose_all(c, d), I)))

    a3 = compose_all(tensor(d, I), d, H.eta)
    dd = tensor(du, du)
    r.equal("a3-i", a3, compose_all(tensor(I, m, I), dd))
    r.equal("a3-ii", a3, compose_all(tensor(I, compose_all(m, c), I), dd))

    piL, piR = H.piL, H.piR
    r.equal("a4-1", piL, H.piL_closed)
    r.equal("a4-2", piR, H.piR_closed)
    r.equal("a4-3-i", H.conv(lam, piL), lam)
    r.equal("a4-3-ii", H.conv(piR, lam), lam)
    r.equal("a4-4", compose_all(m, tensor(lam, m), tensor(d, I)), compose_all(m, tensor(piR, I)))
    r.equal(
        "a4-5",
        compose_all(m, tensor(I, m), tensor(I, lam, I), tensor(d, I)),
        compose_all(m, tensor(piL, I)),
    )
    r.equal("a4-6", compose_all(m, tensor(m, lam), tensor(I, d)), compose_all(m, tensor(I, piL)))
    r.equal(
        "a4-7",
        compose_all(m, tensor(m, I), tensor(I, lam, I), tensor(I, d)),
        compose_all(m, tensor(I, piR)),
    )
    return r


def validate(H: Whq) -> Whq:
    """Return ``H`` flagged as validated, or raise :class:`NotAWhq`."""
    report = check_axioms(H)
    if not report.passed:
        bad = report.first_failure
        raise NotAWhq(f"axiom {bad.name} fails", witness={"check": bad.name, **bad.witness})
    return H if H.validated else replace(H, validated=True)


def _require_valid(H: Whq) -> Whq:
    return H if H.validated else validate(H)


# -- classification -----------------------------------------------------------


class StructureKind(str, enum.Enum):
    HOPF_ALGEBRA = "HopfAlgebra"
    WEAK_HOPF_ALGEBRA = "WeakHopfAlgebra"
    HOPF_QUASIGROUP = "HopfQuasigroup"
    WEAK_HOPF_QUASIGROUP_PROPER = "WeakHopfQuasigroupProper"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    kind: StructureKind
    associative: bool
    weak: bool
    associator_witness: tuple | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "associative": self.associative, "weak": self.weak}
        if self.associator_witness is not None:
            out["associator_witness"] = list(self.associator_witness)
        return out


def associator_witness(H: Whq) -> tuple | None:
    """First basis triple ``(a, b, c)`` with ``(ab)c ≠ a(bc)``, or ``None``."""
    I, m = H.id, H.mu
    diff = first_difference(compose_all(m, tensor(m, I)), compose_all(m, tensor(I, m)))
    return None if diff is None else diff["input"]


def is_weak(H: Whq) -> bool:
    """Whether ``Π^L = Π^R = η∘ε`` fails (so ``ε`` and ``δ`` are not
    multiplicative)."""
    return not (H.piL == H.eta_eps and H.piR == H.eta_eps)


def classify(H: Whq) -> Classification:
    H = _require_valid(H)
    witness = associator_witness(H)
    weak = is_weak(H)
    assoc = witness is None
    if assoc:
        kind = StructureKind.WEAK_HOPF_ALGEBRA if weak else StructureKind.HOPF_ALGEBRA
    else:
        kind = StructureKind.WEAK_HOPF_QUASIGROUP_PROPER if weak else StructureKind.HOPF_QUASIGROUP
    return Classification(kind, assoc, weak, witness)


# -- derived identities ---------------------------------------------------------


def check_identity_suite(H: Whq) -> Report:
    """Exact evaluation of the derived identities that every weak Hopf
    quasigroup satisfies."""
    r = Report("identities")
    I, c, m, d, e, u = H.id, H.c, H.mu, H.delta, H.eps, H.eta
    lam, em, du = H.lam, H.eps_mu, H.delta_eta
    piL, piR, piLb, piRb = H.piL, H.piR, H.piLbar, H.piRbar
    T, C = tensor, compose_all

    r.equal("pi-l-i", H.conv(piL, I), I)
    r.equal("pi-l-ii", H.conv(I, piR), I)
    r.equal("pi-eta-i", C(piL, u), u)
    r.equal("pi-eta-ii", C(piR, u), u)
    r.equal("pi-varep-i", C(e, piL), e)
    r.equal("pi-varep-ii", C(e, piR), e)
    r.equal("lambda-eta", C(lam, u), u)
    r.equal("eps-lambda", C(e, lam), e)
    for name, p in (("piL", piL), ("piR", piR), ("piLbar", piLb), ("piRbar", piRb)):
        r.equal(f"idempotent-{name}", C(p, p), p)

    r.equal("mu-pi-l", C(m, T(I, piL)), C(T(em, I), T(I, c), T(d, I)))
    r.equal("mu-pi-r", C(m, T(piR, I)), C(T(I, em), T(c, I), T(I, d)))
    r.equal("mu-pi-l-var", C(m, T(I, piLb)), C(T(I, em), T(d, I)))
    r.equal("mu-pi-r-var", C(m, T(piRb, I)), C(T(em, I), T(I, d)))
    r.equal("delta-pi-l", C(T(I, piL), d), C(T(m, I), T(I, c), T(du, I)))
    r.equal("delta-pi-r", C(T(piR, I), d), C(T(I, m), T(c, I), T(I, du)))
    r.equal("delta-pi-l-var", C(T(piLb, I), d), C(T(I, m), T(du, I)))
    r.equal("delta-pi-r-var", C(T(I, piRb), d), C(T(m, I), T(I, du)))

    r.equal("pi-delta-mu-pi-1", C(piL, m, T(I, piL)), C(piL, m))
    r.equal("pi-delta-mu-pi-2", C(piR, m, T(piR, I)), C(piR, m))
    r.equal("pi-delta-mu-pi-3", C(T(I, piL), d, piL), C(d, piL))
    r.equal("pi-delta-mu-pi-4", C(T(piR, I), d, piR), C(d, piR))

    r.equal("pi-composition-1-i", C(piL, piLb), piL)
    r.equal("pi-composition-1-ii", C(piL, piRb), piRb)
    r.equal("pi-composition-2-i", C(piLb, piL), piLb)
    r.equal("pi-composition-2-ii", C(piRb, piL), piL)
    r.equal("pi-composition-3-i", C(piR, piLb), piLb)
    r.equal("pi-composition-3-ii", C(piR, piRb), piR)
    r.equal("pi-composition-4-i", C(piLb, piR), piR)
    r.equal("pi-composition-4-ii", C(piRb, piR), piRb)

    r.equal("pi-antipode-composition-1-i", C(piL, lam), C(piL, piR))
    r.equal("pi-antipode-composition-1-ii", C(piL, lam), C(lam, piR))
    r.equal("pi-antipode-composition-2-i", C(piR, lam), C(piR, piL))
    r.equal("pi-antipode-composition-2-ii", C(piR, lam), C(lam, piL))
    r.equal("pi-antipode-composition-3-i", piL, C(piRb, lam))
    r.equal("pi-antipode-composition-3-ii", piL, C(lam, piLb))
    r.equal("pi-antipode-composition-4-i", piR, C(piLb, lam))
    r.equal("pi-antipode-composition-4-ii", piR, C(lam, piRb))

    r.equal("mu-assoc-1-i", C(m, T(m, I), T(I, C(T(piL, I), d))), m)
    r.equal("mu-assoc-1-ii", C(m, T(m, piR), T(I, d)), m)
    r.equal("mu-assoc-2-i", C(m, T(piL, m), T(d, I)), m)
    r.equal("mu-assoc-2-ii", C(m, T(I, C(m, T(piR, I))), T(d, I)), m)
    m_lam = C(m, T(lam, I))
    r.equal("mu-assoc-3-i", C(m, T(lam, C(m, T(piL, I))), T(d, I)), m_lam)
    r.equal("mu-assoc-3-ii", C(m, T(piR, m_lam), T(d, I)), m_lam)
    lam_m = C(m, T(I, lam))
    r.equal("mu-assoc-4-i", C(m, T(m, I), T(I, C(T(lam, piL), d))), lam_m)
    r.equal("mu-assoc-4-ii", C(m, T(m, I), T(I, C(T(piR, lam), d))), lam_m)

    dHH = H.delta_HH
    r.equal("2-mu-delta-pi-l", C(T(m, C(m, T(I, piL))), dHH), C(T(m, I), T(I, c), T(d, I)))
    r.equal("2-mu-delta-pi-r", C(T(C(m, T(piR, I)), m), dHH), C(T(I, m), T(c, I), T(I, d)))

    r.equal("anti-antipode-1", C(lam, m), C(m, c, T(lam, lam)))
    r.equal("anti-antipode-2", C(d, lam), C(T(lam, lam), c, d))

    r.extend(_hl_identities(H))
    r.equal("pi-mu-pi-pi", C(piL, m, T(piL, piL)), C(m, T(piL, piL)))
    r.equal("pil-mu-pirvar-h", C(piRb, m, T(piRb, I)), C(piRb, m))
    return r


def _hl_identities(H: Whq) -> list:
    """Identities saying that the image of ``Π^L`` multiplies associatively
    with everything (stated for the idempotent ``Π^L`` instead of ``i_L``,
    which is equivalent since ``i_L`` is injective and ``Π^L = i_L∘p_L``)."""
    I, c, m, d = H.id, H.c, H.mu, H.delta
    iL = H.piL
    T, C = tensor, compose_all
    return [
        check_equal("aux-1-monoid-hl", C(d, m, T(iL, I)), C(T(m, I), T(iL, d))),
        check_equal("aux-2-monoid-hl", C(d, m, T(I, iL)), C(T(m, I), T(I, c), T(d, iL))),
        check_equal("monoid-hl-1", C(m, T(C(m, T(iL, I)), I)), C(m, T(iL, m))),
        check_equal("monoid-hl-2", C(m, T(I, C(m, T(iL, I)))), C(m, T(C(m, T(I, iL)), I))),
        check_equal("monoid-hl-3", C(m, T(I, C(m, T(I, iL)))), C(m, T(m, iL))),
    ]


# -- the monoid H_L -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HLMonoid:
    split: SplitPair
    eta: LinMap
    mu: LinMap
    eps: LinMap
    delta: LinMap
    report: Report = field(repr=False)

    @property
    def dim(self) -> int:
        return self.split.image_dim


def hl_monoid(H: Whq) -> HLMonoid:
    """Split ``Π^L`` and transport the structure to its image ``H_L``.

    Raises :class:`AssociativityFailure` if the induced product is not
    associative (impossible for a valid input).
    """
    H = _require_valid(H)
    I, m, d = H.id, H.mu, H.delta
    sp = split_idempotent(H.piL, "HL")
    iL, pL = sp.i, sp.p
    eta = compose_all(pL, H.eta)
    mu = compose_all(pL, m, tensor(iL, iL))
    eps = compose_all(H.eps, iL)
    delta = compose_all(tensor(pL, pL), d, iL)

    r = Report("H_L monoid")
    r.extend(_hl_identities(H))
    r.equal("iL-closed-under-mu", compose_all(iL, mu), compose_all(m, tensor(iL, iL)))
    r.equal("iL-preserves-eta", compose_all(iL, eta), H.eta)
    eq = equalizer(d, compose_all(tensor(I, H.piL), d), "HL")
    r.flag(
        "equalizer-characterization",
        same_subspace(eq.arrow, iL),
        {"equalizer_dim": eq.object_dim, "image_dim": sp.image_dim},
    )
    q = coequalizer(m, compose_all(m, tensor(I, H.piL)), "HL")
    try:
        invert(compose_all(q.arrow, iL))
        ok, wit = True, None
    except NotInvertible as exc:
        ok, wit = False, {"coequalizer_dim": q.object_dim, "image_dim": sp.image_dim, "rank": exc.rank}
    r.flag("coequalizer-characterization", ok, wit)
    HL = identity(eta.cod, H.field)
    r.equal("unit-right", compose_all(mu, tensor(HL, eta)), HL)
    r.equal("unit-left", compose_all(mu, tensor(eta, HL)), HL)
    assoc = r.equal("associativity", compose_all(mu, tensor(HL, mu)), compose_all(mu, tensor(mu, HL)))
    if not assoc.passed:
        raise AssociativityFailure("the product on H_L is not associative", witness=assoc.witness)
    return HLMonoid(sp, eta, mu, eps, delta, r)
