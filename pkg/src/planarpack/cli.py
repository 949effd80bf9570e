"""Command-line entry point: ``planarpack <subcommand> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import embed, gadgets, harness, solvers, textfmt
from .sat import BudgetExceeded, associated_graph, read_dimacs
from .witness import CycleWitness, PartitionWitness, PathWitness

EXIT_YES, EXIT_NO, EXIT_BUDGET = 0, 1, 2
SOLVE_PROBLEMS = (*gadgets.PROBLEMS, "acyclic-cut")


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def _edge_lines(tag: str, es) -> list[str]:
    pairs = sorted(tuple(sorted(map(str, e))) for e in es)
    return [f"{tag} {a} {b}" for a, b in pairs]


# -- subcommands --------------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = harness.CorpusSpec(
        seed=args.seed,
        count=args.count,
        n_range=(args.n_min, args.n_max),
        m_range=(args.m_min, args.m_max),
        clause_size=(args.size_min, args.size_max),
        allow_large=args.allow_large,
    )
    entries = harness.generate_corpus(spec)
    harness.write_corpus(entries, args.out)
    print(f"wrote {len(entries)} instances to {args.out}")
    return 0


def cmd_reduce(args) -> int:
    entry = harness.load_entry(args.cnf, args.embedding)
    inst = gadgets.reduce(entry.phi, entry.rotation, args.problem)
    _emit(textfmt.format_instance(inst), args.output)
    return 0


def cmd_solve(args) -> int:
    doc = textfmt.parse(Path(args.instance).read_text(encoding="utf-8"))
    meta = {rec[0]: rec[1:] for rec in doc.meta}
    problem = args.problem or (meta.get("problem") or [None])[0]
    if problem is None:
        raise SystemExit("error: --problem is required for files without 'meta problem'")
    g = doc.graph
    s = textfmt._id(args.s) if args.s else (textfmt._id(meta["s"][0]) if "s" in meta else None)
    t = textfmt._id(args.t) if args.t else (textfmt._id(meta["t"][0]) if "t" in meta else None)
    try:
        if problem == "acyclic-cut":
            rot = doc.rotation or embed.find_planar_embedding(g)
            if rot is None:
                raise SystemExit("error: graph is not planar")
            w = solvers.find_acyclic_cut(g, rot, args.budget)
        elif problem == "stpath":
            if s is None or t is None:
                raise SystemExit("error: stpath needs s and t (meta or --s/--t)")
            w = solvers.find_nonseparating_st_path(g, s, t, args.budget)
        else:
            w = solvers.find_witness(g, problem, budget=args.budget)
    except BudgetExceeded:
        print("BUDGET")
        return EXIT_BUDGET
    if w is None:
        print("NO")
        return EXIT_NO
    lines = ["YES"]
    if isinstance(w, CycleWitness):
        lines += _edge_lines("e", w.edges)
    elif isinstance(w, PathWitness):
        lines.append("path " + " ".join(map(str, w.vertices)))
        lines += _edge_lines("e", w.edges)
    elif isinstance(w, PartitionWitness):
        lines += _edge_lines("tree", w.tree)
        lines += _edge_lines("span", w.spanning_tree)
    else:
        lines += _edge_lines("cut", w)
    print("\n".join(lines))
    return EXIT_YES


def cmd_verify(args) -> int:
    entries = harness.load_corpus(args.corpus)
    if not entries:
        raise SystemExit(f"error: no .cnf files in {args.corpus}")
    problems = tuple(args.problems.split(","))
    try:
        report = harness.verify_corpus(entries, problems, args.budget, args.workers, args.dump)
    except harness.VerificationFailure as exc:
        print(f"DISAGREEMENT: {exc}", file=sys.stderr)
        return 1
    if args.report:
        Path(args.report).write_text(report.to_jsonl(), encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(report.to_jsonl())
    print(report.summary())
    return 0 if report.passed else 1


def cmd_export_dot(args) -> int:
    doc = textfmt.parse(Path(args.instance).read_text(encoding="utf-8"))
    meta = {rec[0]: rec[1:] for rec in doc.meta}
    s = textfmt._id(meta["s"][0]) if "s" in meta else None
    t = textfmt._id(meta["t"][0]) if "t" in meta else None
    _emit(textfmt.to_dot(doc.graph, s, t), args.output)
    return 0


def cmd_fixtures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    fig2 = harness.fig2_fixture()
    rot = embed.find_planar_embedding(fig2)
    (out / "fig2.graph").write_text(textfmt.format_embedded_graph(fig2, rot), encoding="utf-8", newline="\n")
    phi = harness.phi0()
    (out / "phi0.cnf").write_text("c phi0\n" + phi.to_dimacs(), encoding="utf-8", newline="\n")
    g = associated_graph(phi)
    (out / "phi0.emb").write_text(
        textfmt.format_embedded_graph(g, embed.find_planar_embedding(g)), encoding="utf-8", newline="\n"
    )
    print(f"wrote fig2.graph, phi0.cnf, phi0.emb to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarpack", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a seeded corpus of planar CNFs")
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--n-min", type=int, default=3)
    g.add_argument("--n-max", type=int, default=4)
    g.add_argument("--m-min", type=int, default=1)
    g.add_argument("--m-max", type=int, default=4)
    g.add_argument("--size-min", type=int, default=1)
    g.add_argument("--size-max", type=int, default=3)
    g.add_argument("--allow-large", action="store_true", help="skip the n<=6, m<=8 guard")
    g.add_argument("--out", required=True, help="output directory")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("reduce", help="reduce a DIMACS file to a graph instance")
    r.add_argument("cnf")
    r.add_argument("--embedding", help="embedding file for the associated graph")
    r.add_argument("--problem", choices=gadgets.PROBLEMS, default=gadgets.CYCLE)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_reduce)

    s = sub.add_parser("solve", help="run an exact oracle on an instance or graph file")
    s.add_argument("instance")
    s.add_argument("--problem", choices=SOLVE_PROBLEMS)
    s.add_argument("--budget", type=int, default=None, help="search node limit")
    s.add_argument("--s")
    s.add_argument("--t")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check reduction equivalence over a corpus directory")
    v.add_argument("corpus")
    v.add_argument("--problems", default=",".join(gadgets.PROBLEMS))
    v.add_argument("--budget", type=int, default=None)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--report", help="write line-delimited JSON rows here")
    v.add_argument("--dump", help="directory for artifacts of failing instances")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("export-dot", help="render an instance or graph file as DOT")
    d.add_argument("instance")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_export_dot)

    f = sub.add_parser("fixtures", help="write the built-in fixture files")
    f.add_argument("--out", default=".")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
