"""Command-line surface: build standard groups, verify suites, run
searches and probes, emit delimited records and optional figures.

Exit codes: 0 all checks pass, 1 check failures, 2 usage or parse
errors, 3 search budget exhausted.  All report numbers are exact
rationals; figures are an optional rendering of the same data.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .chains import chain_suite_rows, make_kkl_generators, make_standard_chain, minimality_probe
from .cvgraph import check_cv_criterion
from .errors import UnboundGenerator
from .higman import co_move, search_higman
from .intervals import Arc, IntervalLine, format_rat, parse_rat
from .plmaps import PLMapCircle
from .report import CheckReport, failed, skipped
from .rings import cv_witness_data, derived_assignment, make_standard_ring5, ring_suite_rows, validate_ring
from .serialize import (WitnessData, parse_witness_file, read_group_file,
                        render_group, render_witness_file, write_maps_file)
from .words import parse_word, word_eval

EXIT_OK = 0
EXIT_CHECKS = 1
EXIT_USAGE = 2
EXIT_NOTFOUND = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plgroups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write standard map and group files")
    p.add_argument("kind", choices=["chain", "ring", "kkl"])
    p.add_argument("--n", type=int, help="chain length")
    p.add_argument("--standard", action="store_true", help="the calibrated five-ring")
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("group")
    p.add_argument("--suite", choices=["chain", "ring", "cv", "all"], required=True)
    p.add_argument("--witness", help="witness file for the graph criterion")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--figure", help="render the support diagram to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="certificate and mover searches")
    p.add_argument("kind", choices=["higman", "move"])
    p.add_argument("group")
    p.add_argument("--s1")
    p.add_argument("--s2")
    p.add_argument("--g")
    p.add_argument("--k", help='closed set, e.g. "[5/2,11/4]"')
    p.add_argument("--j", help='open interval or arc, e.g. "(3,4)"')
    p.add_argument("--max-len", type=int, default=2)
    p.add_argument("--require-commutator", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("orbit", help="orbit coverage probe, CSV output")
    p.add_argument("group")
    p.add_argument("--gen", action="append", help="restrict to these generators")
    p.add_argument("--seed", required=True)
    p.add_argument("--window", required=True, help='closed window "[a,b]"')
    p.add_argument("--eps", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out", help="CSV file (default stdout)")
    p.add_argument("--figure", help="render the coverage curve to this file")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("plotdata", help="support diagram records")
    p.add_argument("group")
    p.add_argument("--include-derived", action="store_true",
                   help="also list the conjugate generators of a five-ring")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--figure", help="render the diagram to this file")
    p.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


# --------------------------------------------------------------------------
# build

def cmd_build(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.kind == "chain":
        if args.n is None or args.n < 2:
            print("error: build chain needs --n >= 2", file=sys.stderr)
            return EXIT_USAGE
        system = make_standard_chain(args.n)
        write_maps_file(out / "chain.maps", dict(zip(system.names, system.maps)))
        (out / "chain.group").write_text(render_group("chain", system.names, "chain.maps"))
        print(f"wrote {out / 'chain.maps'} and {out / 'chain.group'}")
    elif args.kind == "ring":
        if not args.standard:
            print("error: build ring requires --standard", file=sys.stderr)
            return EXIT_USAGE
        ring = make_standard_ring5()
        write_maps_file(out / "ring.maps", dict(zip(ring.names, ring.maps)))
        (out / "ring.group").write_text(
            render_group("ring", ring.names, "ring.maps", modulus=ring.modulus))
        data = cv_witness_data(ring)
        wd = WitnessData(defs=data.defs, edges=data.witnesses,
                         classes=list(data.classes), dense=dict(data.dense))
        (out / "ring.witness").write_text(render_witness_file(wd))
        print(f"wrote {out / 'ring.maps'}, {out / 'ring.group'} and {out / 'ring.witness'}")
    else:
        a, b = make_kkl_generators()
        write_maps_file(out / "kkl.maps", {"a": a, "b": b})
        (out / "kkl.group").write_text(render_group("set", ("a", "b"), "kkl.maps"))
        print(f"wrote {out / 'kkl.maps'} and {out / 'kkl.group'}")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify

def _group_kind(gf) -> str:
    first = gf.maps[gf.gen_names[0]]
    return "circle" if isinstance(first, PLMapCircle) else "line"


def _cv_rows(gf, witness: WitnessData | None, derived=None):
    """Graph-criterion rows from a witness package, or defaults-only.

    Without witnesses only commuting pairs get their default edge word;
    other pairs are reported SKIP and the completeness row fails, and no
    class can be verified.
    """
    env = gf.assignment()
    if witness is None and derived is not None:
        witness = WitnessData(defs=derived.defs, edges=dict(derived.witnesses),
                              classes=list(derived.classes), dense=dict(derived.dense))
    if witness is None:
        witness = WitnessData()
    for name, word in witness.defs.items():
        env = env.extended({name: word_eval(word, env)})
    S = tuple(gf.gen_names) + tuple(n for n in witness.defs if n not in gf.gen_names)
    if witness.classes:
        rep = check_cv_criterion(env, S, witness.edges, witness.classes,
                                 witness.dense)
        return list(rep.rows), rep.hypotheses_verified
    from .cvgraph import build_delta
    _, rows = build_delta(env, S, witness.edges)
    rows.append(failed("CV_CLASS", "no conjugacy classes declared"))
    rows.append(skipped("CV_DENSE", "no classes to test"))
    return rows, False


def cmd_verify(args) -> int:
    gf = read_group_file(Path(args.group))
    witness = None
    if args.witness:
        witness = parse_witness_file(Path(args.witness).read_text())
    kind = _group_kind(gf)
    maps = [gf.maps[n] for n in gf.gen_names]
    rows = []
    cv_part = False

    if args.suite in ("chain",):
        if kind != "line":
            raise ValueError("the chain suite needs line maps")
        rows = chain_suite_rows(maps, gf.gen_names)
    elif args.suite == "ring":
        if kind != "circle":
            raise ValueError("the ring suite needs circle maps")
        rows, _ = ring_suite_rows(maps, gf.gen_names)
    elif args.suite == "cv":
        rows, _ = _cv_rows(gf, witness)
        cv_part = True
    else:  # all
        if kind == "line":
            rows = chain_suite_rows(maps, gf.gen_names)
        else:
            rows, system = ring_suite_rows(maps, gf.gen_names)
            derived = None
            if witness is None and system is not None and system.m == 5:
                hypotheses_ok = all(r.status == "PASS" for r in rows
                                    if r.check_id.startswith("L35_"))
                if hypotheses_ok:
                    derived = cv_witness_data(system)
            if witness is not None or derived is not None:
                cv_rows, _ = _cv_rows(gf, witness, derived)
                rows.extend(cv_rows)
                cv_part = True

    report = CheckReport(tuple(rows))
    if cv_part:
        verdict = "HYPOTHESES-VERIFIED" if report.all_pass else "HYPOTHESES-NOT-VERIFIED"
    else:
        verdict = "PASS" if report.all_pass else "FAIL"
    report = CheckReport(report.rows, verdict)

    if args.figure:
        _render_group_figure(gf, args.figure, include_derived=False)
    if args.format == "structured":
        doc = {"group": args.group, "suite": args.suite}
        doc.update(report.to_dict())
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(report.render_text())
    return report.exit_code


# --------------------------------------------------------------------------
# search

_CLOSED_RE = re.compile(r"\[([^\],]+),([^\]]+)\]")
_OPEN_RE = re.compile(r"^\(([^),]+),([^)]+)\)$")


def _search_env(gf):
    env = gf.assignment()
    if gf.kind == "ring" and len(gf.gen_names) == 5:
        try:
            system = validate_ring([gf.maps[n] for n in gf.gen_names], gf.gen_names)
            env, _ = derived_assignment(system)
        except ValueError:
            pass
    return env


def cmd_search(args) -> int:
    gf = read_group_file(Path(args.group))
    env = _search_env(gf)
    if args.kind == "higman":
        if not (args.s1 and args.s2 and args.g):
            print("error: search higman needs --s1, --s2 and --g", file=sys.stderr)
            return EXIT_USAGE
        for nm in (args.s1, args.s2):
            if nm not in env:
                print(f"error: {UnboundGenerator(nm)}", file=sys.stderr)
                return EXIT_USAGE
        g = parse_word(args.g)
        for name, _ in g.letters:
            if name not in env:
                print(f"error: {UnboundGenerator(name)}", file=sys.stderr)
                return EXIT_USAGE
        cert = search_higman(env, args.s1, args.s2, g, args.max_len,
                             alphabet=gf.gen_names)
        if cert is None:
            print(f"NOTFOUND max-len {args.max_len}")
            return EXIT_NOTFOUND
        print(cert.render())
        return EXIT_OK

    if not (args.k and args.j):
        print("error: search move needs --k and --j", file=sys.stderr)
        return EXIT_USAGE
    pieces = tuple((parse_rat(a), parse_rat(b)) for a, b in _CLOSED_RE.findall(args.k))
    if not pieces:
        raise ValueError(f"no closed pieces in {args.k!r}")
    m = _OPEN_RE.match(args.j.strip())
    if not m:
        raise ValueError(f"bad open target {args.j!r}")
    lo, hi = parse_rat(m.group(1)), parse_rat(m.group(2))
    if env.kind == "circle":
        target = Arc(env.modulus, lo, hi)
    else:
        target = IntervalLine(lo, hi)
    word = co_move(env, pieces, target, args.max_len,
                   require_commutator=args.require_commutator,
                   alphabet=gf.gen_names)
    if word is None:
        print(f"NOTFOUND max-len {args.max_len}")
        return EXIT_NOTFOUND
    print(f"move {word.compact()}")
    return EXIT_OK


# --------------------------------------------------------------------------
# orbit probe

def cmd_orbit(args) -> int:
    gf = read_group_file(Path(args.group))
    env = gf.assignment()
    if args.gen:
        for nm in args.gen:
            if nm not in env:
                print(f"error: {UnboundGenerator(nm)}", file=sys.stderr)
                return EXIT_USAGE
        env = env.subset(args.gen)
    m = _CLOSED_RE.match(args.window.strip())
    if not m:
        raise ValueError(f"bad window {args.window!r}, expected [a,b]")
    window = (parse_rat(m.group(1)), parse_rat(m.group(2)))
    report = minimality_probe(env, parse_rat(args.seed), window,
                              parse_rat(args.eps), args.depth)
    lines = ["depth,points,coverageNum,coverageDen"]
    lines.extend(f"{r.depth},{r.points},{r.hits},{r.cells}" for r in report.rows)
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.figure:
        from .figures import render_coverage
        render_coverage(report.rows, args.figure)
    return EXIT_OK


# --------------------------------------------------------------------------
# plot data

def _support_records(gf, include_derived: bool):
    records = []
    moduli = None
    maps = dict(zip(gf.gen_names, (gf.maps[n] for n in gf.gen_names)))
    if include_derived and gf.kind == "ring" and len(gf.gen_names) == 5:
        system = validate_ring([gf.maps[n] for n in gf.gen_names], gf.gen_names)
        env, names = derived_assignment(system)
        maps = {n: env[n] for n in names}
    for name, mp in maps.items():
        supp = mp.support()
        if isinstance(mp, PLMapCircle):
            moduli = mp.modulus
            arcs = supp.arcs if not supp.full else (Arc(mp.modulus, 0, 0),)
            for a in arcs:
                records.append((name, a.start, a.end, mp.modulus))
        else:
            for piece in supp.pieces:
                records.append((name, piece.lo, piece.hi, None))
    return records, moduli


def cmd_plotdata(args) -> int:
    gf = read_group_file(Path(args.group))
    records, modulus = _support_records(gf, args.include_derived)
    lines = []
    for name, lo, hi, mod in records:
        if mod is not None:
            lines.append(f"ARC {name} {format_rat(lo)} {format_rat(hi)} mod {format_rat(mod)}")
        else:
            lines.append(f"ARC {name} {format_rat(lo)} {format_rat(hi)}")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.figure:
        _render_records_figure(records, modulus, args.figure)
    return EXIT_OK


def _render_records_figure(records, modulus, path) -> None:
    from .figures import render_supports
    render_supports([(n, lo, hi) for n, lo, hi, _ in records], path, modulus=modulus)


def _render_group_figure(gf, path, include_derived: bool) -> None:
    records, modulus = _support_records(gf, include_derived)
    _render_records_figure(records, modulus, path)


if __name__ == "__main__":
    sys.exit(main())
