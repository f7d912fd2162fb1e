"""Command-line entry points.

    novalg check SPEC (--profile NAME | --identity IDS) [--report PATH]
    novalg construct SPEC CONSTRUCTION [--out PATH] [...]
    novalg search SPEC --grid "a,b,c" [--budget N] [--emit-bialgebras PREFIX]

Exit codes: 0 all checks pass, 1 identity or contract failure, 2 input error,
3 search budget refusal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import (
    CATALOG,
    PROFILES,
    check_identities,
    check_profile,
)
from .linalg import LinalgError, LinMap, parse_rational
from .model import (
    ActionFamily,
    AlgebraSpec,
    BudgetError,
    Report,
    SpecError,
    VerificationError,
    Witness,
    all_pass,
)
from .specfile import (
    parse_matched_pair,
    parse_spec,
    parse_tensor,
    tensor_to_text,
    write_matched_pair,
    write_reports,
    write_spec,
    write_tensor,
)
from . import constructions as cons
from . import derived as der
from . import ybe

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

CONSTRUCTIONS = (
    "dual-rep", "adjoint", "coadjoint", "semidirect-nn", "bowtie-nn", "manin",
    "matched-pair", "double-construction", "triangular", "lift-o-operator",
    "gelfand", "gelfand-dual", "pre-novikov-from-o", "pre-novikov-from-dendriform",
    "pre-novikov-from-qf", "derive-nn-bialgebra", "adjoint-form",
)


def _print_reports(reports, file=sys.stdout):
    for r in reports:
        print(r.summary(), file=file)
    print("aggregate:", "pass" if all_pass(reports) else "fail", file=file)


def _rep_from_spec(spec: AlgebraSpec):
    for name in ("lprec", "rprec", "lsucc", "rsucc"):
        if name not in spec.ops:
            raise SpecError(
                f"representation data needs op cube {name!r} "
                "(action of the i-th basis vector as rows [i, j, k, scalar])")
    algebra = AlgebraSpec(dim=spec.dim,
                          ops={"prec": spec.ops["prec"], "succ": spec.ops["succ"]},
                          weight=spec.weight)
    return cons.NNRepresentation(
        algebra=algebra,
        lprec=ActionFamily.from_cube(spec.ops["lprec"]),
        rprec=ActionFamily.from_cube(spec.ops["rprec"]),
        lsucc=ActionFamily.from_cube(spec.ops["lsucc"]),
        rsucc=ActionFamily.from_cube(spec.ops["rsucc"]),
        theta=spec.maps.get("theta"),
    )


def _rep_cubes(spec: AlgebraSpec, rep) -> AlgebraSpec:
    ops = dict(spec.ops)
    ops["lprec"] = rep.lprec.to_cube()
    ops["rprec"] = rep.rprec.to_cube()
    ops["lsucc"] = rep.lsucc.to_cube()
    ops["rsucc"] = rep.rsucc.to_cube()
    return spec.with_members(ops=ops)


def cmd_check(args) -> int:
    spec = parse_spec(args.spec)
    if args.profile:
        reports = check_profile(spec, args.profile, witness_cap=args.witness_cap)
    else:
        idents = [s for chunk in args.identity for s in chunk.split(",") if s]
        if not idents:
            raise SpecError("no identities given")
        reports = check_identities(spec, idents, witness_cap=args.witness_cap)
    _print_reports(reports)
    if args.report:
        write_reports(reports, args.report)
    return EXIT_PASS if all_pass(reports) else EXIT_FAIL


def _adjoint_form_report(spec: AlgebraSpec, m: LinMap, adj: LinMap) -> Report:
    B = spec.forms["form"]
    n = spec.dim
    witnesses = []
    violations = 0
    for i in range(n):
        for j in range(n):
            lhs = sum(m.entries[k][i] * B.entries[k][j] for k in range(n))
            rhs = sum(B.entries[i][k] * adj.entries[k][j] for k in range(n))
            if lhs != rhs:
                violations += 1
                if len(witnesses) < 16:
                    witnesses.append(Witness((i, j), (lhs - rhs,)))
    return Report(identity="ADJOINT-DEF", violations=violations, witnesses=tuple(witnesses))


def _run_construction(args):
    """Returns (files_written, contract_reports)."""
    name = args.construction
    written = []

    def emit(spec_out):
        if args.out:
            write_spec(spec_out, args.out)
            written.append(args.out)

    if name == "bowtie-nn":
        mp = parse_matched_pair(args.spec)
        reports = mp.check()
        if not all_pass(reports):
            raise VerificationError("matched pair failed verification", reports)
        out = cons.bowtie_nn(mp)
        contract = check_profile(out, "nn-algebra")
        emit(out)
        return written, contract

    spec = parse_spec(args.spec)

    if name == "adjoint" or name == "coadjoint":
        rep = cons.adjoint_nn(spec) if name == "adjoint" else cons.coadjoint_nn(spec)
        out = _rep_cubes(spec, rep)
        contract = check_profile(out, "nn-representation")
        emit(out)
    elif name == "dual-rep":
        rep = cons.dual_nn_representation(_rep_from_spec(spec))
        out = _rep_cubes(spec, rep)
        contract = check_profile(out, "nn-representation")
        emit(out)
    elif name == "semidirect-nn":
        rep = _rep_from_spec(spec)
        reports = rep.check()
        if not all_pass(reports):
            raise VerificationError("representation failed verification", reports)
        out = cons.semidirect_nn(spec, rep)
        contract = check_profile(out, "nn-algebra")
        emit(out)
    elif name == "manin":
        out = cons.manin_from_bialgebra(spec)
        contract = check_identities(out, cons.MANIN_CONTRACT)
        emit(out)
    elif name == "matched-pair":
        mp = cons.matched_pair_from_bialgebra(spec)
        contract = mp.check()
        if args.out:
            write_matched_pair(mp, args.out)
            written.append(args.out)
    elif name == "double-construction":
        out = cons.double_construction(spec)
        contract = check_identities(out, cons.DOUBLE_CONTRACT)
        emit(out)
    elif name == "triangular":
        if not args.r:
            raise SpecError("triangular needs --r TENSORFILE")
        r = parse_tensor(args.r)
        out = ybe.triangular_bialgebra(spec, r)
        contract = check_profile(out, "nn-bialgebra")
        emit(out)
    elif name == "lift-o-operator":
        rep = _rep_from_spec(spec)
        if "T" not in spec.maps:
            raise SpecError("lift needs map 'T'")
        problem = ybe.OOperatorProblem(spec=rep.algebra, rep=rep, T=spec.maps["T"])
        lifted, r = ybe.lift_o_operator(problem)
        contract = [ybe.nybe_report(lifted, r)] + check_profile(lifted, "nn-algebra")
        emit(lifted)
        if args.out:
            rpath = args.out_r or str(Path(args.out).with_suffix(".r.tensor"))
            write_tensor(r, rpath)
            written.append(rpath)
    elif name == "gelfand":
        out = der.gelfand_nn(spec)
        contract = check_profile(out, "nn-algebra")
        emit(out)
    elif name == "gelfand-dual":
        out = der.gelfand_dual(spec)
        contract = check_profile(out, "nn-coalgebra")
        emit(out)
    elif name == "pre-novikov-from-o":
        rep = _rep_from_spec(spec)
        if "T" not in spec.maps:
            raise SpecError("this construction needs map 'T'")
        problem = ybe.OOperatorProblem(spec=rep.algebra, rep=rep, T=spec.maps["T"])
        p = der.pre_novikov_from_o_operator(problem)
        out = AlgebraSpec(dim=p.dim, ops={"lhd1": p.lhd1, "lhd2": p.lhd2,
                                          "rhd1": p.rhd1, "rhd2": p.rhd2})
        contract = check_profile(out, "pre-novikov")
        emit(out)
    elif name == "pre-novikov-from-dendriform":
        p = der.pre_novikov_from_diff_dendriform(spec)
        out = AlgebraSpec(dim=p.dim, ops={"lhd1": p.lhd1, "lhd2": p.lhd2,
                                          "rhd1": p.rhd1, "rhd2": p.rhd2})
        contract = check_profile(out, "pre-novikov")
        emit(out)
    elif name == "pre-novikov-from-qf":
        p = der.pre_novikov_from_quasi_frobenius(spec)
        out = AlgebraSpec(dim=p.dim, ops={"lhd1": p.lhd1, "lhd2": p.lhd2,
                                          "rhd1": p.rhd1, "rhd2": p.rhd2})
        contract = check_profile(out, "pre-novikov")
        emit(out)
    elif name == "derive-nn-bialgebra":
        out = der.derive_nn_bialgebra(spec)
        contract = check_profile(out, "nn-bialgebra")
        emit(out)
    elif name == "adjoint-form":
        mname = args.map or "partial"
        if mname not in spec.maps:
            raise SpecError(f"no map {mname!r} in the spec")
        if "form" not in spec.forms:
            raise SpecError("adjoint-form needs form 'form'")
        adj = cons.adjoint_wrt_form(spec.maps[mname], spec.forms["form"])
        out = spec.with_members(maps={**spec.maps, "partial_hat": adj})
        contract = [_adjoint_form_report(spec, spec.maps[mname], adj)]
        emit(out)
    else:
        raise SpecError(f"unknown construction {name!r}")
    return written, contract


def cmd_construct(args) -> int:
    written, contract = _run_construction(args)
    _print_reports(contract)
    for path in written:
        print("wrote", path)
    if args.report:
        write_reports(contract, args.report)
    return EXIT_PASS if all_pass(contract) else EXIT_FAIL


def cmd_search(args) -> int:
    spec = parse_spec(args.spec)
    raw = [s.strip() for s in args.grid.split(",") if s.strip()]
    if not raw:
        raise SpecError("empty --grid")
    values = [parse_rational(s) for s in raw]
    hits = ybe.search_nybe(spec, values, budget=args.budget)
    n = spec.dim
    free = n * (n - 1) // 2
    print(f"candidates: {len(set(values)) ** free}")
    for pos, r in enumerate(hits):
        print(f"solution {pos}: {tensor_to_text(r)}")
        if args.emit_bialgebras:
            out = ybe.triangular_bialgebra(spec, r)
            path = f"{args.emit_bialgebras}-{pos:03d}.alg"
            write_spec(out, path)
            print("wrote", path)
    print(f"solutions: {len(hits)}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="novalg",
        description="Exact-arithmetic workbench for Novikov-type algebraic structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", help="verify identities or a profile on a spec file",
        epilog="profiles: " + ", ".join(sorted(PROFILES)))
    p_check.add_argument("spec")
    group = p_check.add_mutually_exclusive_group(required=True)
    group.add_argument("--profile", choices=sorted(PROFILES), metavar="NAME")
    group.add_argument("--identity", action="append", default=[], metavar="ID[,ID...]")
    p_check.add_argument("--report", metavar="PATH")
    p_check.add_argument("--witness-cap", type=int, default=16, metavar="N")
    p_check.set_defaults(fn=cmd_check)

    p_cons = sub.add_parser("construct", help="run a construction on a spec file")
    p_cons.add_argument("spec")
    p_cons.add_argument("construction", choices=CONSTRUCTIONS, metavar="CONSTRUCTION",
                        help=", ".join(CONSTRUCTIONS))
    p_cons.add_argument("--out", metavar="PATH")
    p_cons.add_argument("--out-r", metavar="PATH", help="tensor output for lift-o-operator")
    p_cons.add_argument("--r", metavar="PATH", help="tensor input for triangular")
    p_cons.add_argument("--map", metavar="NAME", help="map name for adjoint-form")
    p_cons.add_argument("--report", metavar="PATH")
    p_cons.set_defaults(fn=cmd_construct)

    p_search = sub.add_parser("search", help="exhaustive antisymmetric solution search")
    p_search.add_argument("spec")
    p_search.add_argument("--grid", required=True, metavar="a,b,c",
                          help="comma-separated rational values")
    p_search.add_argument("--budget", type=int, default=10 ** 6, metavar="N")
    p_search.add_argument("--emit-bialgebras", metavar="PREFIX")
    p_search.set_defaults(fn=cmd_search)
    return parser


def _normalize_argv(argv):
    # allow `--grid "-2,-1,0"`: merge the value so argparse does not read it
    # as an option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--grid", "--identity") and i + 1 < len(argv) \
                and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.fn(args)
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        if exc.reports:
            _print_reports(exc.reports, file=sys.stderr)
        return EXIT_FAIL
    except (SpecError, LinalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
