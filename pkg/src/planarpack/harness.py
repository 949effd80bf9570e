"""Seeded corpora, fixtures and end-to-end reduction checks."""

from __future__ import annotations

import hashlib
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import embed, gadgets, solvers, textfmt
from .graph import Graph
from .sat import BudgetExceeded, PlanarCnf, associated_graph, brute_force_sat, evaluate, normalize, read_dimacs
from .witness import WitnessError

log = logging.getLogger(__name__)

MAX_N = 6
MAX_M = 8
CLAUSE_RETRIES = 100


class CorpusError(ValueError):
    pass


class VerificationFailure(AssertionError):
    """The reduction and the SAT oracle disagree, or an artifact is malformed."""


# -- fixtures ----------------------------------------------------------------------


def fig2_fixture() -> Graph:
    """Five vertices, seven edges; ``abca`` is a nonseparating cycle, ``abdea`` is not."""
    pairs = ["ae", "ed", "db", "dc", "ab", "bc", "ca"]
    return Graph("abcde", [tuple(p) for p in pairs], name="fig2")


def phi0() -> PlanarCnf:
    return normalize([[1, 2], [-1, -2]], 3)


def unit_pair() -> PlanarCnf:
    return normalize([[1], [-1]], 3)


def zero_clause() -> PlanarCnf:
    return normalize([], 3)


FIXTURES = (("phi0", phi0), ("unit-pair", unit_pair), ("zero-clause", zero_clause))


# -- corpora -----------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 1
    count: int = 10
    n_range: tuple[int, int] = (3, 4)
    m_range: tuple[int, int] = (1, 4)
    clause_size: tuple[int, int] = (1, 3)
    problems: tuple[str, ...] = gadgets.PROBLEMS
    allow_large: bool = False

    def validate(self) -> None:
        for name, (lo, hi), floor in (
            ("n", self.n_range, 1),
            ("m", self.m_range, 0),
            ("clause size", self.clause_size, 1),
        ):
            if lo < floor or lo > hi:
                raise CorpusError(f"bad {name} range {lo}..{hi}")
        if self.count < 0:
            raise CorpusError("count must be nonnegative")
        if not self.allow_large and (self.n_range[1] > MAX_N or self.m_range[1] > MAX_M):
            raise CorpusError(f"ranges exceed oracle budgets (n <= {MAX_N}, m <= {MAX_M})")
        for p in self.problems:
            if p not in gadgets.PROBLEMS:
                raise CorpusError(f"unknown problem {p!r}")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    phi: PlanarCnf
    rotation: dict = field(compare=False, repr=False)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.phi.to_dimacs().encode()).hexdigest()


def _random_clause(rng: random.Random, n: int, size: int) -> list[int] | None:
    for _ in range(CLAUSE_RETRIES):
        lits = rng.sample([x for i in range(1, n + 1) for x in (i, -i)], min(size, 2 * n))
        if len(lits) == size and not any(-x in lits for x in lits):
            return lits
    return None


def _entry(name: str, phi: PlanarCnf) -> CorpusEntry | None:
    rot = embed.find_planar_embedding(associated_graph(phi))
    return None if rot is None else CorpusEntry(name, phi, rot)


def generate_corpus(spec: CorpusSpec) -> list[CorpusEntry]:
    """Fixtures followed by ``spec.count`` seeded random planar instances."""
    spec.validate()
    out = [_entry(name, make()) for name, make in FIXTURES]
    rng = random.Random(spec.seed)
    made, attempts = 0, 0
    while made < spec.count and attempts < 50 * spec.count:
        attempts += 1
        n = rng.randint(*spec.n_range)
        m = rng.randint(*spec.m_range)
        clauses = [_random_clause(rng, n, rng.randint(*spec.clause_size)) for _ in range(m)]
        if any(c is None for c in clauses):
            continue
        e = _entry(f"r{spec.seed}-{made:03d}", normalize(clauses, n))
        if e is None:
            continue
        out.append(e)
        made += 1
    if spec.count and not made:
        raise CorpusError("no random instance survived filtering; widen the ranges")
    if made < spec.count:
        log.warning("only %d of %d instances generated", made, spec.count)
    return out


def write_corpus(entries: list[CorpusEntry], directory) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for e in entries:
        cnf = d / f"{e.name}.cnf"
        emb = d / f"{e.name}.emb"
        cnf.write_text(f"c {e.name}\n" + e.phi.to_dimacs(), encoding="utf-8", newline="\n")
        g = associated_graph(e.phi)
        emb.write_text(textfmt.format_embedded_graph(g, e.rotation), encoding="utf-8", newline="\n")
        paths += [cnf, emb]
    return paths


def load_entry(cnf_path, emb_path=None) -> CorpusEntry:
    cnf_path = Path(cnf_path)
    phi = read_dimacs(cnf_path)
    if emb_path is None:
        guess = cnf_path.with_suffix(".emb")
        emb_path = guess if guess.exists() else None
    if emb_path is None:
        e = _entry(cnf_path.stem, phi)
        if e is None:
            raise CorpusError(f"{cnf_path}: associated graph is not planar")
        return e
    g, rot = textfmt.parse_embedded_graph(Path(emb_path).read_text(encoding="utf-8"))
    if set(g.edges) != set(associated_graph(phi).edges) or rot is None:
        raise CorpusError(f"{emb_path}: embedding does not match the formula")
    return CorpusEntry(cnf_path.stem, phi, rot)


def load_corpus(directory) -> list[CorpusEntry]:
    return [load_entry(p) for p in sorted(Path(directory).glob("*.cnf"))]


# -- verification -----------------------------------------------------------------


@dataclass
class ReportRow:
    digest: str
    name: str
    problem: str
    sat: bool
    vertices: int
    edges: int
    max_degree: int
    euler: bool
    violations: list[str]
    oracle: str  # YES, NO or BUDGET
    roundtrip: str
    agree: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _dump(dump_dir, entry: CorpusEntry, inst, note: str) -> None:
    if dump_dir is None:
        return
    d = Path(dump_dir)
    d.mkdir(parents=True, exist_ok=True)
    stem = f"{entry.name}-{inst.problem}"
    (d / f"{stem}.cnf").write_text(entry.phi.to_dimacs(), encoding="utf-8")
    (d / f"{stem}.inst").write_text(textfmt.format_instance(inst), encoding="utf-8")
    (d / f"{stem}.txt").write_text(note + "\n", encoding="utf-8")


def _roundtrip(inst, f) -> str:
    problem = inst.problem
    if problem == gadgets.PARTITION:
        w = gadgets.forward_witness_partition(inst, f)
        ok, why = solvers.check_witness(inst.graph, w, problem)
        return "ok" if ok else f"builder witness rejected: {why}"
    w = gadgets.forward_witness_cycle(inst, f)
    ok, why = solvers.check_witness(inst.graph, w, problem, inst.s, inst.t)
    if not ok:
        return f"forward witness rejected: {why}"
    back = gadgets.backward_witness(inst, w)
    return "ok" if tuple(back) == tuple(f) else f"round trip gave {back}"


def verify_reduction(
    entry: CorpusEntry | PlanarCnf, problem: str, budget: int | None = None, dump_dir=None
) -> ReportRow:
    """Run SAT oracle, reduction, instance checks, graph oracle and witness round trip."""
    if isinstance(entry, PlanarCnf):
        entry = _entry("phi", entry)
        if entry is None:
            raise CorpusError("associated graph is not planar")
    phi = entry.phi
    f = brute_force_sat(phi)
    inst = gadgets.reduce(phi, entry.rotation, problem)
    g = inst.graph
    violations = gadgets.check_instance(inst)
    euler = embed.check_planar_embedding(g, inst.rotation)

    problems: list[str] = list(violations)
    try:
        w = solvers.find_witness(g, problem, inst.s, inst.t, budget=budget)
        oracle = "NO" if w is None else "YES"
    except BudgetExceeded:
        w, oracle = None, "BUDGET"
    if w is not None:
        ok, why = solvers.check_witness(g, w, problem, inst.s, inst.t)
        if not ok:
            problems.append(f"oracle witness rejected: {why}")
        elif problem != gadgets.PARTITION:
            try:
                back = gadgets.backward_witness(inst, w)
                if not evaluate(phi, back):
                    problems.append("oracle witness decodes to a non-satisfying assignment")
            except WitnessError as exc:
                problems.append(f"oracle witness does not decode: {exc}")
    roundtrip = "n/a"
    if f is not None:
        try:
            roundtrip = _roundtrip(inst, f)
        except WitnessError as exc:
            roundtrip = f"error: {exc}"
        if roundtrip != "ok":
            problems.append(roundtrip)

    sat = f is not None
    agree = oracle == ("YES" if sat else "NO")
    row = ReportRow(
        entry.digest, entry.name, problem, sat, len(g), g.num_edges, g.max_degree(),
        euler, violations, oracle, roundtrip, agree and not problems,
    )
    if oracle != "BUDGET" and not agree:
        problems.insert(0, f"SAT says {'yes' if sat else 'no'}, graph oracle says {oracle}")
    if problems and (oracle != "BUDGET" or violations):
        note = f"{entry.name} [{problem}]: " + "; ".join(problems)
        _dump(dump_dir, entry, inst, note)
        raise VerificationFailure(note)
    return row


@dataclass
class Report:
    rows: list[ReportRow]

    @property
    def passed(self) -> bool:
        return bool(self.rows) and all(r.agree for r in self.rows)

    def to_jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.rows)

    def summary(self) -> str:
        lines = []
        for p in gadgets.PROBLEMS:
            rows = [r for r in self.rows if r.problem == p]
            if not rows:
                continue
            agree = sum(r.agree for r in rows)
            sat = sum(r.sat for r in rows)
            budget = sum(r.oracle == "BUDGET" for r in rows)
            lines.append(
                f"{p}: {agree}/{len(rows)} agree ({sat} satisfiable, {budget} over budget)"
            )
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _verify_job(args):
    entry, problem, budget, dump_dir = args
    return verify_reduction(entry, problem, budget, dump_dir)


def verify_corpus(
    entries: list[CorpusEntry],
    problems=gadgets.PROBLEMS,
    budget: int | None = None,
    workers: int = 1,
    dump_dir=None,
) -> Report:
    jobs = [(e, p, budget, dump_dir) for e in entries for p in problems]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_verify_job, jobs))
    else:
        rows = [_verify_job(j) for j in jobs]
    rows.sort(key=lambda r: (r.digest, r.problem, r.name))
    return Report(rows)
