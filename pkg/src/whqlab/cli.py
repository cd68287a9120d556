"""Command-line interface.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on an
input error (unreadable file, bad expression, type error).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

from . import __version__
from .cleft import CleftWitness, check_c2_equivalence, check_c4_equivalence, check_cleft, cleft_properties, corollary_hq, roundtrip
from .dsl import check_identity, comodule_context
from .errors import VerificationError, WhqError
from .field import FieldSpec
from .galois import analyze, check_comodule_magma, check_gamma_inv_almost_lineal, check_normal_basis, coinvariants, gamma_inv_formula, nabla, tensor_over_coinvariants
from .generators import (
    CayleyTable,
    GroupoidPresentation,
    chein_double,
    cyclic_table,
    disjoint_union,
    group_algebra,
    group_as_groupoid,
    groupoid_algebra,
    ip_check,
    load_table,
    loop_algebra,
    loopoid_algebra,
    non_ip_loop,
    pair_groupoid,
    symmetric_table,
)
from .report import Report, jsonable
from .structfile import StructureFile, from_whq, galois_witness_from_lift, gamma_inv_from_lift, normal_basis_from_lifts
from .tensor import compose_all, tensor, zero
from .whq import check_axioms, check_identity_suite, classify, hl_monoid

T, C = tensor, compose_all

MUTATIONS = (
    "zero-antipode",
    "antipode-pil",
    "wrong-coaction",
    "perturbed-gamma-inv",
    "non-ip-table",
    "broken-omega",
)


@dataclass
class Outcome:
    command: str
    input: str
    reports: list[Report] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    error: dict | None = None
    quiet: bool = False

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.reports)

    def first_failure(self) -> dict | None:
        for r in self.reports:
            c = r.first_failure
            if c is not None:
                return {"report": r.title, "check": c.name}
        return None

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "input": self.input,
            "status": "pass" if self.passed else "fail",
            "info": self.info,
            "reports": [r.to_json() for r in self.reports],
        }
        ff = self.first_failure()
        if ff is not None:
            out["first_failure"] = ff
        if self.error is not None:
            out["error"] = self.error
        return out

    def human(self, verbose: bool) -> str:
        lines = [f"whqlab {self.command} {self.input}"]
        for k, v in self.info.items():
            lines.append(f"  {k}: {_fmt_info(v)}")
        for r in self.reports:
            npass = len(r.checks) - len(r.failures)
            lines.append(f"{r.title}: {'PASS' if r.passed else 'FAIL'} ({npass}/{len(r.checks)})")
            for c in r.checks:
                if verbose or not c.passed:
                    lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}")
                    if c.witness is not None:
                        lines.append(f"        witness: {json.dumps(jsonable(c.witness, str), ensure_ascii=False)}")
        if self.error is not None:
            lines.append(f"error ({self.error['type']}): {self.error['message']}")
            if "witness" in self.error:
                lines.append(f"        witness: {json.dumps(self.error['witness'], ensure_ascii=False)}")
        ff = self.first_failure()
        if ff is not None:
            lines.append(f"first failed check: {ff['report']} / {ff['check']}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _fmt_info(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


# -- table and structure sources -----------------------------------------------


def table_from_spec(spec: str) -> CayleyTable:
    """``c2``/``c3``/``s3`` (shipped), ``cN`` (cyclic), ``sN`` (symmetric),
    ``chein:SPEC`` (Chein double), ``nonip:N``, or a path to a JSON file
    holding a table or a structure file with a ``cayley`` section."""
    if spec.startswith("chein:"):
        return chein_double(table_from_spec(spec[len("chein:"):]))
    if spec.startswith("nonip:"):
        return non_ip_loop(int(spec[len("nonip:"):]))
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"cannot read table {spec}: {exc}") from exc
        if "cayley" in data:
            data = data["cayley"]
        return CayleyTable.from_json(data)
    if spec in ("c2", "c3", "s3"):
        return load_table(spec)
    if len(spec) > 1 and spec[0] in "cs" and spec[1:].isdigit():
        n = int(spec[1:])
        return cyclic_table(n) if spec[0] == "c" else symmetric_table(n)
    raise ValueError(f"unknown table {spec!r}")


def _generate(args) -> tuple:
    fld = FieldSpec.from_name(args.field)
    fam = args.family
    params: dict = {}
    cayley = groupoid = None
    if fam in ("group", "loop", "chein"):
        t = table_from_spec(args.table)
        params["table"] = args.table
        if fam == "chein":
            t = chein_double(t)
        cayley = t
        H = group_algebra(t, fld) if fam == "group" else loop_algebra(t, fld)
    elif fam == "pair-groupoid":
        params["objects"] = args.objects
        groupoid = pair_groupoid(args.objects)
        H = groupoid_algebra(groupoid, fld)
    elif fam == "groupoid":
        if args.presentation:
            data = json.loads(Path(args.presentation).read_text(encoding="utf-8"))
            groupoid = GroupoidPresentation.from_json(data.get("groupoid", data))
            params["presentation"] = args.presentation
        else:
            groupoid = group_as_groupoid(table_from_spec(args.table))
            params["table"] = args.table
        copies = args.copies
        params["copies"] = copies
        base = groupoid
        for _ in range(copies - 1):
            groupoid = disjoint_union(groupoid, base)
        H = groupoid_algebra(groupoid, fld)
    else:
        t = table_from_spec(args.table)
        params.update(objects=args.objects, table=args.table)
        cayley = t
        H = loopoid_algebra(args.objects, t, fld)
    meta = {"family": fam, "params": params, "field": fld.name}
    return H, from_whq(H, meta, cayley, groupoid, witnesses=not args.no_witnesses)


# -- commands -------------------------------------------------------------------


def cmd_gen(args, out: Outcome) -> None:
    H, sf = _generate(args)
    out.info.update(family=args.family, dim=H.dim, output=args.output)
    text = sf.dumps()
    if args.output == "-":
        sys.stdout.write(text)
        out.quiet = True
    else:
        Path(args.output).write_text(text, encoding="utf-8")


def cmd_check(args, out: Outcome) -> None:
    sf = StructureFile.read(args.file)
    if sf.cayley is not None:
        tab = Report("table")
        res = ip_check(sf.cayley)
        tab.flag("table-ip", res.is_ip, res.witness)
        out.reports.append(tab)
    H = sf.whq()
    out.info["dim"] = H.dim
    ax = check_axioms(H)
    out.reports += [ax, check_identity_suite(H)]
    if not ax.passed:
        return
    H = replace(H, validated=True)
    cl = classify(H)
    out.info["classification"] = cl.to_json()
    hl = hl_monoid(H)
    out.info["dim_HL"] = hl.split.image_dim
    out.reports.append(hl.report)


def _stage_data(cm):
    coinv = coinvariants(cm)
    nab = nabla(cm)
    toc = tensor_over_coinvariants(cm, coinv)
    return coinv, nab, toc


def cmd_galois(args, out: Outcome) -> None:
    sf = StructureFile.read(args.file)
    H = sf.whq()
    cm = sf.comodule(H)
    a = analyze(cm)
    out.reports += a.reports()
    if a.coinv is not None:
        out.info["dim_coinvariants"] = a.coinv.dim
    if a.nabla is not None:
        out.info["dim_box"] = a.nabla.box_dim
    if a.toc is not None:
        out.info["dim_tensor_over_coinvariants"] = a.toc.dim
    if a.gamma is None:
        return
    if a.witness is not None and cm.regular:
        closed = Report("closed forms")
        closed.equal("gamma-inv-formula", gamma_inv_formula(cm, a.toc, a.nabla), a.witness.gamma_inv)
        out.reports.append(closed)
    lift = sf.maybe("galois", "gamma_inv_lift")
    if lift is not None:
        gw = galois_witness_from_lift(a.gamma.gamma, a.toc, a.nabla, lift)
        rep = Report("Galois witness from file", gw.check().checks)
        rep.add(check_gamma_inv_almost_lineal(cm, gw, a.toc, a.nabla))
        out.reports.append(rep)
    if sf.has("normal_basis"):
        nbw, rep = normal_basis_from_lifts(cm, a.coinv, sf.bound("normal_basis", "Omega_lift"), sf.bound("normal_basis", "b_lift"))
        out.reports.append(rep)
        if nbw is not None:
            out.reports.append(check_normal_basis(cm, a.coinv, nbw))


def _cleft_witness(sf: StructureFile, cm) -> CleftWitness:
    if sf.has("cleft"):
        return CleftWitness(sf.bound("cleft", "h"), sf.bound("cleft", "h_inv"))
    if cm.regular:
        return CleftWitness.regular(cm)
    raise ValueError("no cleft witness bound and the comodule magma is not (H, δ_H)")


def cmd_cleft(args, out: Outcome) -> None:
    sf = StructureFile.read(args.file)
    H = sf.whq()
    cm = sf.comodule(H)
    w = _cleft_witness(sf, cm)
    out.reports += [check_comodule_magma(cm), check_cleft(cm, w)]
    coinv = coinvariants(cm)
    out.reports.append(cleft_properties(cm, coinv, w).report)
    eqs = Report("equivalent conditions")
    for pair in (check_c2_equivalence(cm, w), check_c4_equivalence(cm, coinv, w)):
        eqs.add(pair.as_check())
        out.info[pair.name] = list(pair.values)
    out.reports.append(eqs)
    if args.hq:
        out.reports.append(corollary_hq(cm, w))


def cmd_roundtrip(args, out: Outcome) -> None:
    sf = StructureFile.read(args.file)
    H = sf.whq()
    cm = sf.comodule(H)
    witness = normal_basis = gamma_inv = None
    if args.start == "cleft":
        witness = _cleft_witness(sf, cm)
    else:
        if sf.has("normal_basis") or sf.maybe("galois", "gamma_inv_lift") is not None:
            coinv, nab, toc = _stage_data(cm)
            lift = sf.maybe("galois", "gamma_inv_lift")
            if lift is not None:
                gamma_inv = gamma_inv_from_lift(toc, nab, lift)
            if sf.has("normal_basis"):
                normal_basis, rep = normal_basis_from_lifts(
                    cm, coinv, sf.bound("normal_basis", "Omega_lift"), sf.bound("normal_basis", "b_lift")
                )
                out.reports.append(rep)
                if normal_basis is None:
                    return
        elif not cm.regular:
            raise ValueError("no normal basis bound and the comodule magma is not (H, δ_H)")
    er = roundtrip(cm, args.start, witness, normal_basis, gamma_inv)
    out.reports += er.reports
    out.info.update(direction=er.direction, inputs=er.inputs, roundtrip=er.roundtrip)
    out.info["witnesses"] = sorted(er.witnesses)


def cmd_eval(args, out: Outcome) -> None:
    sf = StructureFile.read(args.file)
    H = sf.whq()
    cm = sf.comodule(H)
    ctx = comodule_context(cm, sf.morphisms)
    for name, dim in sf.spaces.items():
        ctx.spaces.setdefault(name, dim)
    rep = Report("eval")
    rep.add(check_identity(args.lhs, args.rhs, ctx, args.name))
    out.reports.append(rep)


def cmd_mutate(args, out: Outcome) -> None:
    sf = StructureFile.read(args.file)
    H = sf.whq()
    kind = args.kind
    lam_name = sf.bindings["whq"]["lambda"]
    if kind == "zero-antipode":
        sf.morphisms[lam_name] = zero(H.lam.dom, H.lam.cod, H.field)
    elif kind == "antipode-pil":
        sf.morphisms[lam_name] = C(H.lam, H.piL)
    elif kind == "wrong-coaction":
        sf.morphisms["rho"] = C(H.delta, H.piL)
        sf.bindings["comodule"] = {"eta": sf.bindings["whq"]["eta"], "mu": sf.bindings["whq"]["mu"], "rho": "rho"}
    elif kind == "perturbed-gamma-inv":
        lift = sf.maybe("galois", "gamma_inv_lift")
        if lift is None:
            I = H.id
            lift = C(T(H.mu, I), T(I, H.lam, I), T(I, H.delta))
        sf.morphisms["gamma_inv_lift"] = lift.scale(2)
        sf.bindings["galois"] = {"gamma_inv_lift": "gamma_inv_lift"}
    elif kind == "non-ip-table":
        sf.cayley = non_ip_loop(5)
    else:
        if not sf.has("normal_basis"):
            raise ValueError("broken-omega needs normal-basis bindings")
        om = sf.bound("normal_basis", "Omega_lift")
        sf.morphisms[sf.bindings["normal_basis"]["Omega_lift"]] = zero(om.dom, om.cod, H.field)
    sf.metadata = {**sf.metadata, "mutation": kind}
    Path(args.output).write_text(sf.dumps(), encoding="utf-8")
    out.info.update(mutation=kind, output=args.output)


COMMANDS = {
    "gen": cmd_gen,
    "check": cmd_check,
    "galois": cmd_galois,
    "cleft": cmd_cleft,
    "roundtrip": cmd_roundtrip,
    "eval": cmd_eval,
    "mutate": cmd_mutate,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="whqlab", description="Exact verification toolkit for weak Hopf quasigroups.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the machine-readable report to PATH")
    common.add_argument("--format", choices=("human", "json"), default="human", help="report printed on stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a structure file")
    g.add_argument("family", choices=("group", "loop", "chein", "groupoid", "pair-groupoid", "loopoid"))
    g.add_argument("--table", default="s3", help="c2, c3, s3, cN, sN, chein:SPEC, nonip:N or a JSON path")
    g.add_argument("--objects", type=int, default=2, help="number of objects (pair-groupoid, loopoid)")
    g.add_argument("--presentation", help="JSON groupoid presentation (groupoid)")
    g.add_argument("--copies", type=int, default=1, help="disjoint copies of the groupoid (groupoid)")
    g.add_argument("--field", default="Q", help="Q or GF(p)")
    g.add_argument("--no-witnesses", action="store_true", help="omit the regular cleft/Galois witnesses")
    g.add_argument("-o", "--output", required=True, help="output path, or - for stdout")

    for name, text in (
        ("check", "axioms, derived identities, classification and H_L"),
        ("galois", "coinvariants, canonical morphism, inverse and normal basis"),
        ("cleft", "cleft conditions and their consequences"),
    ):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("file")
        if name == "cleft":
            s.add_argument("--hq", action="store_true", help="also run the Hopf-quasigroup form")

    r = sub.add_parser("roundtrip", parents=[common], help="cleft <-> Galois with normal basis, end to end")
    r.add_argument("file")
    r.add_argument("--from", dest="start", choices=("cleft", "galois"), default="cleft")

    e = sub.add_parser("eval", parents=[common], help="compare two morphism expressions")
    e.add_argument("file")
    e.add_argument("--lhs", required=True)
    e.add_argument("--rhs", required=True)
    e.add_argument("--name", help="check name in the report")

    m = sub.add_parser("mutate", parents=[common], help="write a deliberately broken copy of a structure file")
    m.add_argument("file")
    m.add_argument("--kind", choices=MUTATIONS, required=True)
    m.add_argument("-o", "--output", required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    source = getattr(args, "file", None) or getattr(args, "family", "")
    out = Outcome(args.command, str(source))
    code = None
    try:
        COMMANDS[args.command](args, out)
    except VerificationError as exc:
        out.error = {"type": type(exc).__name__, "message": str(exc)}
        if exc.witness is not None:
            out.error["witness"] = jsonable(exc.witness, str)
        code = 1
    except (WhqError, ValueError, OSError, KeyError) as exc:
        out.error = {"type": type(exc).__name__, "message": str(exc)}
        code = 2
    if code is None:
        code = 0 if out.passed else 1
    doc = json.dumps(out.to_json(), indent=1, ensure_ascii=False) + "\n"
    if args.json:
        Path(args.json).write_text(doc, encoding="utf-8")
    if not out.quiet:
        sys.stdout.write(doc if args.format == "json" else out.human(args.verbose) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
