"""The structure file: a self-describing JSON document.

Layout::

    {
      "format": "whqlab-structure/1",
      "field": "Q" | "GF(p)",
      "spaces": [{"name": "H", "dim": 6}, ...],
      "basis": {"H": ["e", "a", ...]},                      # optional labels
      "morphisms": {
        "mu": {"dom": ["H", "H"], "cod": ["H"],
               "entries": [[row, col, "scalar"], ...]},      # [] is the unit K
        ...
      },
      "bindings": {
        "whq": {"eta": ..., "mu": ..., "eps": ..., "delta": ..., "lambda": ...},
        "comodule": {"eta": ..., "mu": ..., "rho": ...},                 # optional
        "cleft": {"h": ..., "h_inv": ...},                              # optional
        "galois": {"gamma_inv_lift": ...},                              # optional
        "normal_basis": {"Omega_lift": ..., "b_lift": ...}              # optional
      },
      "metadata": {...},
      "cayley": {...}, "groupoid": {...}                                # optional
    }

Rows and columns are flat row-major indices over the tensor product of the
listed spaces.  Scalars are strings in the declared field ("-3/7", "5 mod 11").

Witnesses whose natural domain is an image object (``A□H``, ``A^coH⊗H``,
``A^coH×H``) are stored as lifts between plain tensor spaces, so that a file
does not depend on how those images are split:

* ``gamma_inv_lift: A⊗H -> A⊗A`` with ``γ⁻¹ = n_A∘lift∘i_{A⊗H}``;
* ``Omega_lift: A⊗H -> A⊗H`` with ``(i_A⊗H)∘Ω = lift∘(i_A⊗H)``;
* ``b_lift: A -> A⊗H`` with ``(i_A⊗H)∘s∘b = lift``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import StructureFileError
from .field import FieldSpec
from .galois import CoinvariantData, ComoduleMagma, GaloisWitness, NablaData, NormalBasisWitness, TensorOverCoinv
from .generators import CayleyTable, GroupoidPresentation
from .report import Report
from .tensor import LinMap, compose_all, tensor
from .whq import UnitalMagma, Whq

FORMAT = "whqlab-structure/1"
WHQ_ROLES = ("eta", "mu", "eps", "delta", "lambda")

T, C = tensor, compose_all


@dataclass
class StructureFile:
    field: FieldSpec
    spaces: dict[str, int]
    morphisms: dict[str, LinMap]
    bindings: dict[str, dict[str, str]]
    basis: dict[str, list[str]] = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)
    cayley: CayleyTable | None = None
    groupoid: GroupoidPresentation | None = None

    # -- access ---------------------------------------------------------------

    def bound(self, group: str, role: str) -> LinMap:
        try:
            name = self.bindings[group][role]
        except KeyError as exc:
            raise StructureFileError(f"no binding for {group}.{role}") from exc
        try:
            return self.morphisms[name]
        except KeyError as exc:
            raise StructureFileError(f"binding {group}.{role} names unknown morphism {name!r}") from exc

    def has(self, group: str) -> bool:
        return group in self.bindings

    def whq(self) -> Whq:
        maps = [self.bound("whq", r) for r in WHQ_ROLES]
        names = _sig_names(maps[0].cod)
        labels = tuple(self.basis.get(names[0], ())) if len(names) == 1 else ()
        try:
            return Whq(*maps, labels=labels)
        except Exception as exc:
            raise StructureFileError(f"whq bindings do not type-check: {exc}") from exc

    def comodule(self, H: Whq | None = None) -> ComoduleMagma:
        """The bound comodule magma, or ``(H, δ_H)`` when none is bound."""
        H = H or self.whq()
        if not self.has("comodule"):
            return ComoduleMagma.of_whq(H)
        eta, mu, rho = (self.bound("comodule", r) for r in ("eta", "mu", "rho"))
        try:
            return ComoduleMagma(H, UnitalMagma(eta, mu), rho)
        except Exception as exc:
            raise StructureFileError(f"comodule bindings do not type-check: {exc}") from exc

    def maybe(self, group: str, role: str) -> LinMap | None:
        return self.bound(group, role) if group in self.bindings and role in self.bindings[group] else None

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {
            "format": FORMAT,
            "field": self.field.name,
            "spaces": [{"name": n, "dim": d} for n, d in self.spaces.items()],
        }
        if self.basis:
            out["basis"] = {k: list(v) for k, v in self.basis.items()}
        out["morphisms"] = {name: _map_json(f) for name, f in self.morphisms.items()}
        out["bindings"] = {g: dict(roles) for g, roles in self.bindings.items()}
        out["metadata"] = self.metadata
        if self.cayley is not None:
            out["cayley"] = self.cayley.to_json()
        if self.groupoid is not None:
            out["groupoid"] = self.groupoid.to_json()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def from_json(cls, data: dict) -> StructureFile:
        if not isinstance(data, dict):
            raise StructureFileError("a structure file is a JSON object")
        fmt = data.get("format")
        if fmt != FORMAT:
            raise StructureFileError(f"unsupported format {fmt!r} (expected {FORMAT!r})")
        try:
            fld = FieldSpec.from_name(str(data.get("field", "Q")))
        except ValueError as exc:
            raise StructureFileError(str(exc)) from exc
        spaces: dict[str, int] = {}
        for s in data.get("spaces", []):
            try:
                name, dim = str(s["name"]), int(s["dim"])
            except (KeyError, TypeError, ValueError) as exc:
                raise StructureFileError(f"bad space declaration {s!r}") from exc
            if name == "K" or name in spaces or dim < 0:
                raise StructureFileError(f"bad or duplicate space {name!r}")
            spaces[name] = dim
        basis = {str(k): [str(x) for x in v] for k, v in data.get("basis", {}).items()}
        for k, v in basis.items():
            if spaces.get(k) != len(v):
                raise StructureFileError(f"basis for {k!r} does not match its declared dimension")
        morphisms = {str(n): _map_from_json(n, m, spaces, fld) for n, m in data.get("morphisms", {}).items()}
        bindings = {str(g): {str(r): str(n) for r, n in roles.items()} for g, roles in data.get("bindings", {}).items()}
        for g, roles in bindings.items():
            for r, n in roles.items():
                if n not in morphisms:
                    raise StructureFileError(f"binding {g}.{r} names unknown morphism {n!r}")
        try:
            cayley = CayleyTable.from_json(data["cayley"]) if "cayley" in data else None
            groupoid = GroupoidPresentation.from_json(data["groupoid"]) if "groupoid" in data else None
        except (KeyError, TypeError, ValueError) as exc:
            raise StructureFileError(f"bad table or groupoid section: {exc}") from exc
        return cls(fld, spaces, morphisms, bindings, basis, dict(data.get("metadata", {})), cayley, groupoid)

    @classmethod
    def loads(cls, text: str) -> StructureFile:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StructureFileError(f"not valid JSON: {exc}") from exc
        return cls.from_json(data)

    @classmethod
    def read(cls, path: str | Path) -> StructureFile:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise StructureFileError(f"cannot read {path}: {exc.strerror or exc}") from exc
        return cls.loads(text)


def _sig_names(sig) -> list[str]:
    return [n for n, _ in sig]


def _map_json(f: LinMap) -> dict:
    return {
        "dom": _sig_names(f.dom),
        "cod": _sig_names(f.cod),
        "entries": [[r, c, f.field.format(v)] for r, c, v in f.entries()],
    }


def _map_from_json(name, m, spaces: dict[str, int], fld: FieldSpec) -> LinMap:
    try:
        dom_names, cod_names, entries = m["dom"], m["cod"], m["entries"]
    except (KeyError, TypeError) as exc:
        raise StructureFileError(f"morphism {name!r} needs dom, cod and entries") from exc
    for s in (*dom_names, *cod_names):
        if s not in spaces:
            raise StructureFileError(f"morphism {name!r} uses undeclared space {s!r}")
    dom = tuple((s, spaces[s]) for s in dom_names)
    cod = tuple((s, spaces[s]) for s in cod_names)
    triples = []
    for e in entries:
        try:
            r, c, v = e
            triples.append((int(r), int(c), fld.parse(v)))
        except (TypeError, ValueError) as exc:
            raise StructureFileError(f"morphism {name!r}: bad entry {e!r}: {exc}") from exc
    try:
        return LinMap.from_entries(dom, cod, triples, fld)
    except (IndexError, ValueError) as exc:
        raise StructureFileError(f"morphism {name!r}: {exc}") from exc


# -- building files -------------------------------------------------------------


def from_whq(
    H: Whq,
    metadata: dict | None = None,
    cayley: CayleyTable | None = None,
    groupoid: GroupoidPresentation | None = None,
    witnesses: bool = True,
) -> StructureFile:
    """A file for ``H``; with ``witnesses``, also the cleft witness
    ``h = id, h⁻¹ = λ`` and the lifts of the regular Galois and normal-basis
    witnesses of ``(H, δ_H)``."""
    (name, dim), = H.H
    morphisms = {"eta": H.eta, "mu": H.mu, "eps": H.eps, "delta": H.delta, "lambda": H.lam}
    bindings = {"whq": {r: r for r in WHQ_ROLES}}
    if witnesses:
        I = H.id
        morphisms["h"] = I
        morphisms["h_inv"] = H.lam
        morphisms["gamma_inv_lift"] = C(T(H.mu, I), T(I, H.lam, I), T(I, H.delta))
        morphisms["Omega_lift"] = C(T(H.piL, I), H.delta, H.mu)
        morphisms["b_lift"] = C(T(H.piL, I), H.delta)
        bindings["cleft"] = {"h": "h", "h_inv": "h_inv"}
        bindings["galois"] = {"gamma_inv_lift": "gamma_inv_lift"}
        bindings["normal_basis"] = {"Omega_lift": "Omega_lift", "b_lift": "b_lift"}
    basis = {name: [H.label(k) for k in range(dim)]} if H.labels else {}
    return StructureFile(H.field, {name: dim}, morphisms, bindings, basis, metadata or {}, cayley, groupoid)


# -- lifted witnesses -------------------------------------------------------------


def gamma_inv_from_lift(toc: TensorOverCoinv, nab: NablaData, lift: LinMap) -> LinMap:
    return C(toc.n.arrow, lift, nab.i)


def galois_witness_from_lift(gamma: LinMap, toc: TensorOverCoinv, nab: NablaData, lift: LinMap) -> GaloisWitness:
    return GaloisWitness(gamma, gamma_inv_from_lift(toc, nab, lift))


def normal_basis_from_lifts(
    cm: ComoduleMagma, coinv: CoinvariantData, Omega_lift: LinMap, b_lift: LinMap
) -> tuple[NormalBasisWitness | None, Report]:
    """Restrict the lifts to ``A^coH⊗H``; the report checks that they land there."""
    I = cm.idH
    iI = T(coinv.i, I)
    ret = T(coinv.eq.retraction, I)
    rep = Report("normal basis input")
    Omega = C(ret, Omega_lift, iI)
    rep.equal("omega-lift-closed", C(iI, Omega), C(Omega_lift, iI))
    b_through = C(ret, b_lift)
    rep.equal("b-lift-closed", C(iI, b_through), b_lift)
    if not rep.passed:
        return None, rep
    return NormalBasisWitness.from_omega(Omega, b_through), rep


__all__ = [
    "FORMAT",
    "StructureFile",
    "from_whq",
    "galois_witness_from_lift",
    "gamma_inv_from_lift",
    "normal_basis_from_lifts",
]
