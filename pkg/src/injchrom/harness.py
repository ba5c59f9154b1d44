"""Batch verification of the conjectured bounds over graph streams.

A run reads graphs from a graph6 file, the internal generator or a list of
family members, applies the structural filters, computes the injective
chromatic number (or just enough of it to place the graph against the
bound), and folds the verdicts into an :class:`AttainmentTable`.  Violations
are appended to a JSON-lines log as soon as they are known.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
import time
import urllib.error
import urllib.request
from collections import Counter
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice
from pathlib import Path

from .codec import Graph6Error, parse_graph6, to_graph6_str
from .conjectures import BoundError, BoundFn, VerdictKind, get_bound, verdict
from .families import (
    FIXTURE_FILE,
    MANIFEST,
    FamilySpec,
    FixtureError,
    build,
    find_lemma_triangle,
    fixture_dir,
    graph6_digest,
    load_manifest,
)
from .graphcore import Graph
from .injsolver import (
    BudgetExhausted,
    greedy_upper_bound,
    injective_chromatic_number,
    injective_k_colorable,
    verify_injective,
)
from .metrics import diameter, girth, is_planar, vertex_connectivity_at_least
from .smallgen import GenSpec, generate

__all__ = [
    "HarnessError",
    "AttainmentTable",
    "RunConfig",
    "ViolationRecord",
    "GraphOutcome",
    "CheckResult",
    "evaluate_graph",
    "run_check",
    "report",
    "reverify",
    "chi_i_records",
    "fetch_fixture",
    "verify_fixtures",
    "HOG_URL_ENV",
]

HOG_URL_ENV = "INJCHROM_HOG_URL"
DEFAULT_HOG_URL = "https://houseofgraphs.org/api/graphs/{id}/graph6"


class HarnessError(RuntimeError):
    """Operational failure: bad configuration, unreadable input, I/O trouble."""


def _fmt_girth(g: float) -> str:
    return "inf" if math.isinf(g) else str(int(g))


# aggregation -------------------------------------------------------------------------


@dataclass
class AttainmentTable:
    """Counts of graphs attaining a bound, keyed by ``(order, max degree)``.

    ``orders`` records every order seen so that orders without attainers
    still get a row of zeros.
    """

    bound: str = ""
    counts: Counter = field(default_factory=Counter)
    orders: set = field(default_factory=set)

    def add(self, n: int, delta: int, k: int = 1) -> None:
        self.counts[(n, delta)] += k
        self.orders.add(n)

    def see(self, n: int) -> None:
        self.orders.add(n)

    def merge(self, other: AttainmentTable) -> AttainmentTable:
        out = AttainmentTable(self.bound or other.bound, self.counts + other.counts, self.orders | other.orders)
        return out

    def total(self) -> int:
        return sum(self.counts.values())

    def as_dict(self) -> dict:
        return {
            "bound": self.bound,
            "orders": sorted(self.orders),
            "counts": [{"n": n, "delta": d, "count": c} for (n, d), c in sorted(self.counts.items()) if c],
        }

    @classmethod
    def from_dict(cls, data: dict) -> AttainmentTable:
        t = cls(data.get("bound", ""))
        for n in data.get("orders", []):
            t.orders.add(n)
        for row in data.get("counts", []):
            t.add(row["n"], row["delta"], row["count"])
        return t

    def row(self, n: int) -> dict[int, int]:
        return {d: c for (m, d), c in self.counts.items() if m == n and c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, AttainmentTable):
            return NotImplemented
        return self.as_dict() == other.as_dict()


def report(table: AttainmentTable, fmt: str = "csv") -> bytes:
    """Render ``table`` as CSV (rows = order, columns = max degree) or JSON."""
    if fmt == "json":
        return (json.dumps(table.as_dict(), indent=1, sort_keys=True) + "\n").encode()
    if fmt != "csv":
        raise HarnessError(f"unknown report format {fmt!r}")
    deltas = sorted({d for (_, d), c in table.counts.items() if c})
    orders = sorted(table.orders | {n for (n, _), c in table.counts.items() if c}) if deltas else []
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [str(d) for d in deltas])
    for n in orders:
        w.writerow([n] + [table.counts.get((n, d), 0) for d in deltas])
    return buf.getvalue().encode()


# per-graph records --------------------------------------------------------------------


@dataclass(frozen=True)
class ViolationRecord:
    graph6: str
    n: int
    delta: int
    girth: float
    chi_i: int
    bound: int
    bound_name: str
    witness: tuple[int, ...]

    def to_json(self) -> str:
        d = asdict(self)
        d["girth"] = _fmt_girth(self.girth)
        d["witness"] = list(self.witness)
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> ViolationRecord:
        d = json.loads(line)
        d["girth"] = math.inf if d["girth"] == "inf" else int(d["girth"])
        d["witness"] = tuple(d["witness"])
        return cls(**d)


def reverify(rec: ViolationRecord) -> bool:
    """Rebuild the graph from its graph6 string and confirm the violation from scratch."""
    g = parse_graph6(rec.graph6.encode("ascii"))
    b = get_bound(rec.bound_name)
    if g.max_degree() != rec.delta or b(rec.delta) != rec.bound:
        return False
    if not verify_injective(g, rec.witness) or len(set(rec.witness)) != rec.chi_i:
        return False
    res = injective_chromatic_number(g)
    return res.chi_i == rec.chi_i and rec.chi_i > rec.bound


@dataclass(frozen=True)
class GraphOutcome:
    """What happened to one input graph.

    ``status`` is one of ``filtered``, ``inapplicable``, ``satisfies``,
    ``attains``, ``violates``, ``unresolved`` or ``computed`` (raw mode).
    """

    index: int
    graph6: str
    n: int
    delta: int
    girth: float
    status: str
    chi_i: int | None = None
    bound: int | None = None
    witness: tuple[int, ...] | None = None
    lower: int | None = None
    upper: int | None = None
    vacuous: bool = False


@dataclass(frozen=True)
class _Filters:
    min_degree: int = 0
    girth_min: int = 0
    connectivity_min: int = 0
    planar: bool = False


def _passes(g: Graph, f: _Filters, g_girth: float) -> bool:
    if g.n and g.min_degree() < f.min_degree:
        return False
    if f.girth_min and g_girth < f.girth_min:
        return False
    if f.connectivity_min and not vertex_connectivity_at_least(g, f.connectivity_min):
        return False
    if f.planar and not is_planar(g):
        return False
    return True


def evaluate_graph(g: Graph, index: int, bound: BoundFn | None, filters: _Filters,
                   budget: int | None = None, strict: bool = False, line: str | None = None) -> GraphOutcome:
    """Filter and classify one graph.

    With a bound ``b`` the solver is only asked what it must answer: a greedy
    colouring below ``b`` or an injective ``(b-1)``-colouring settles
    Satisfies, a ``b``-colouring settles Attains, and only a Violates case is
    solved exactly (for its certificate).
    """
    g6 = line if line is not None else to_graph6_str(g)
    delta = g.max_degree()
    g_girth = girth(g)
    base = dict(index=index, graph6=g6, n=g.n, delta=delta, girth=g_girth)
    if not _passes(g, filters, g_girth):
        return GraphOutcome(status="filtered", **base)
    if bound is None:
        try:
            res = injective_chromatic_number(g, budget=budget)
        except BudgetExhausted as e:
            return GraphOutcome(status="unresolved", lower=e.lower, upper=e.upper, **base)
        return GraphOutcome(status="computed", chi_i=res.chi_i, witness=res.witness.colors, **base)
    if not bound.girth_ok(g_girth):
        if strict:
            raise BoundError(f"graph {index}: {bound.name} bound needs girth >= {bound.min_girth}")
        return GraphOutcome(status="inapplicable", **base)
    if delta < bound.min_delta:
        v = verdict(g, bound, 0, strict=strict, delta=delta, g_girth=g_girth)
        return GraphOutcome(status="satisfies", vacuous=v.vacuous, **base)
    b = bound(delta)
    try:
        k, col = greedy_upper_bound(g)
        if k < b:
            return GraphOutcome(status="satisfies", bound=b, upper=k, **base)
        if b >= 1 and injective_k_colorable(g, b - 1, budget=budget) is not None:
            return GraphOutcome(status="satisfies", bound=b, upper=b - 1, **base)
        c = injective_k_colorable(g, b, budget=budget)
        if c is not None:
            return GraphOutcome(status="attains", chi_i=b, bound=b, witness=c.colors, **base)
        res = injective_chromatic_number(g, budget=budget)
    except BudgetExhausted as e:
        return GraphOutcome(status="unresolved", bound=b, lower=e.lower, upper=e.upper, **base)
    kind = verdict(g, bound, res.chi_i, delta=delta, g_girth=g_girth).kind
    assert kind is VerdictKind.VIOLATES
    return GraphOutcome(status="violates", chi_i=res.chi_i, bound=b, witness=res.witness.colors, **base)


# run configuration ---------------------------------------------------------------------


@dataclass
class RunConfig:
    """One input source (``input_path``, ``gen`` or ``families``) plus filters and outputs."""

    input_path: str | None = None
    gen: GenSpec | None = None
    families: list[FamilySpec] | None = None
    min_degree: int = 0
    girth_min: int = 0
    connectivity_min: int = 0
    planar: bool = False
    bound: str | None = "luzar"
    output_dir: str | None = None
    workers: int = 1
    node_budget: int | None = None
    strict: bool = False
    chunk_size: int = 256

    def validate(self) -> None:
        sources = [self.input_path is not None, self.gen is not None, self.families is not None]
        if sum(sources) != 1:
            raise HarnessError("exactly one input source is required")
        if self.workers < 1:
            raise HarnessError("worker count must be at least 1")
        if self.chunk_size < 1:
            raise HarnessError("chunk size must be at least 1")
        if self.bound is not None:
            get_bound(self.bound)
        if self.gen is not None:
            self.gen.validate()

    def filters(self) -> _Filters:
        md = self.min_degree
        if self.bound is not None:
            # degree-1 vertices never create a counterexample to a conjecture bound
            md = max(md, 2)
        return _Filters(md, self.girth_min, self.connectivity_min, self.planar)


@dataclass
class CheckResult:
    table: AttainmentTable
    violations: list[ViolationRecord]
    unresolved: list[GraphOutcome]
    summary: dict

    @property
    def exit_code(self) -> int:
        return 1 if self.violations else 0


def _source_lines(cfg: RunConfig) -> Iterator[str]:
    if cfg.input_path is not None:
        path = cfg.input_path
        try:
            fh = open(path, "rb") if path != "-" else None
        except OSError as e:
            raise HarnessError(f"cannot open {path}: {e}") from None
        stream = fh if fh is not None else sys.stdin.buffer
        try:
            for lineno, raw in enumerate(stream, 1):
                s = raw.strip()
                if not s or s.startswith(b">>graph6<<") and not s[10:]:
                    continue
                if s.startswith(b">>graph6<<"):
                    s = s[10:]
                try:
                    parse_graph6(s)
                except Graph6Error as e:
                    if cfg.strict:
                        raise HarnessError(f"line {lineno}: {e}") from None
                    continue
                yield s.decode("ascii")
        finally:
            if fh is not None:
                fh.close()
    elif cfg.gen is not None:
        for g in generate(cfg.gen):
            yield to_graph6_str(g)
    else:
        for spec in cfg.families:
            yield to_graph6_str(build(spec).graph)


def _chunk_worker(args) -> list[GraphOutcome]:
    start, lines, bound_name, filters, budget, strict = args
    bound = get_bound(bound_name) if bound_name else None
    out = []
    for i, line in enumerate(lines):
        g = parse_graph6(line.encode("ascii"))
        out.append(evaluate_graph(g, start + i, bound, filters, budget, strict, line))
    return out


def _gen_worker(args) -> list[GraphOutcome]:
    spec, part, bound_name, filters, budget, strict = args
    bound = get_bound(bound_name) if bound_name else None
    out = []
    for i, g in enumerate(generate(spec, part=part)):
        out.append(evaluate_graph(g, i, bound, filters, budget, strict))
    return out


def _chunks(lines: Iterable[str], size: int) -> Iterator[tuple[int, list[str]]]:
    it = iter(lines)
    start = 0
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield start, block
        start += len(block)


class _ViolationLog:
    def __init__(self, path: Path | None):
        self.path = path
        self.fh = None
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            self.fh = open(path, "a", encoding="utf-8")

    def write(self, rec: ViolationRecord) -> None:
        if self.fh is None:
            return
        self.fh.write(rec.to_json() + "\n")
        self.fh.flush()
        os.fsync(self.fh.fileno())

    def close(self) -> None:
        if self.fh is not None:
            self.fh.close()


def _outcome_stream(cfg: RunConfig, filters: _Filters) -> Iterator[GraphOutcome]:
    budget, strict, bname = cfg.node_budget, cfg.strict, cfg.bound
    if cfg.gen is not None and cfg.workers > 1:
        # split the generation tree itself; each share is solved where it is generated
        jobs = [(cfg.gen, (i, cfg.workers), bname, filters, budget, strict) for i in range(cfg.workers)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
            for block in ex.map(_gen_worker, jobs):
                yield from block
        return
    chunks = ((s, b, bname, filters, budget, strict) for s, b in _chunks(_source_lines(cfg), cfg.chunk_size))
    if cfg.workers == 1:
        for job in chunks:
            yield from _chunk_worker(job)
        return
    with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
        for block in ex.map(_chunk_worker, chunks):
            yield from block


def run_check(cfg: RunConfig) -> CheckResult:
    """Run a verification pass; the table does not depend on the worker count."""
    cfg.validate()
    filters = cfg.filters()
    out_dir = Path(cfg.output_dir) if cfg.output_dir else None
    log = _ViolationLog(out_dir / "violations.jsonl" if out_dir else None)
    table = AttainmentTable(cfg.bound or "")
    status_counts: Counter = Counter()
    violations: list[ViolationRecord] = []
    unresolved: list[GraphOutcome] = []
    chi_counts: Counter = Counter()
    t0, c0 = time.perf_counter(), time.process_time()
    try:
        for o in _outcome_stream(cfg, filters):
            status_counts[o.status] += 1
            if o.status == "filtered":
                continue
            table.see(o.n)
            if o.status == "attains":
                table.add(o.n, o.delta)
            elif o.status == "violates":
                rec = ViolationRecord(o.graph6, o.n, o.delta, o.girth, o.chi_i, o.bound, cfg.bound, o.witness)
                violations.append(rec)
                log.write(rec)
            elif o.status == "unresolved":
                unresolved.append(o)
            elif o.status == "computed":
                chi_counts[(o.n, o.chi_i)] += 1
    except OSError as e:
        raise HarnessError(f"I/O failure: {e}") from None
    finally:
        log.close()
    violations.sort(key=lambda r: (r.n, r.graph6))
    unresolved.sort(key=lambda o: (o.n, o.graph6))
    summary = {
        "bound": cfg.bound,
        "graphs": sum(status_counts.values()),
        "status": dict(sorted(status_counts.items())),
        "attaining": table.total(),
        "violations": len(violations),
        "unresolved": len(unresolved),
        "workers": cfg.workers,
        "wall_seconds": round(time.perf_counter() - t0, 3),
        "cpu_seconds_main": round(time.process_time() - c0, 3),
    }
    if chi_counts:
        summary["chi_i_counts"] = [{"n": n, "chi_i": k, "count": c} for (n, k), c in sorted(chi_counts.items())]
    if out_dir is not None:
        try:
            (out_dir / "table.csv").write_bytes(report(table, "csv"))
            (out_dir / "table.json").write_bytes(report(table, "json"))
            if unresolved:
                with open(out_dir / "unresolved.jsonl", "w", encoding="utf-8") as fh:
                    for o in unresolved:
                        fh.write(json.dumps({"graph6": o.graph6, "n": o.n, "delta": o.delta,
                                             "lower": o.lower, "upper": o.upper}) + "\n")
            (out_dir / "summary.json").write_text(json.dumps(summary, indent=1) + "\n", encoding="utf-8")
        except OSError as e:
            raise HarnessError(f"I/O failure: {e}") from None
    return CheckResult(table, violations, unresolved, summary)


# chi-i records ------------------------------------------------------------------------


def chi_i_records(lines: Iterable[bytes], strict: bool = False, budget: int | None = None,
                  errors: list[str] | None = None) -> Iterator[str]:
    """One ``"n delta girth chi_i"`` line per decodable input line, in input order.

    Undecodable lines are reported into ``errors`` and skipped, or raise
    :class:`~injchrom.codec.Graph6Error` in strict mode.  A budget-exhausted
    solve prints the bracket ``lo..hi`` in place of the value.
    """
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s:
            continue
        if s.startswith(b">>graph6<<"):
            s = s[10:]
            if not s:
                continue
        try:
            g = parse_graph6(s)
        except Graph6Error as e:
            msg = f"line {lineno}: {e}"
            if strict:
                raise Graph6Error(msg, lineno) from None
            if errors is not None:
                errors.append(msg)
            continue
        try:
            val = str(injective_chromatic_number(g, budget=budget).chi_i)
        except BudgetExhausted as e:
            val = f"{e.lower}..{e.upper}"
        yield f"{g.n} {g.max_degree()} {_fmt_girth(girth(g))} {val}"


# fixtures -----------------------------------------------------------------------------


def _invariants(g: Graph) -> dict:
    d = diameter(g)
    gi = girth(g)
    return {
        "n": g.n,
        "m": g.size,
        "max_degree": g.max_degree(),
        "girth": None if math.isinf(gi) else int(gi),
        "diameter": None if math.isinf(d) else int(d),
        "chi_i": injective_chromatic_number(g).chi_i,
    }


def _check_against(entry: dict, g: Graph, exact: bool) -> list[str]:
    inv = _invariants(g)
    keys = ["n", "max_degree", "diameter", "chi_i"] + (["m", "girth"] if exact else [])
    return [f"{k}: expected {entry[k]}, got {inv[k]}" for k in keys if entry.get(k) != inv[k]]


def verify_fixtures(directory: Path | None = None) -> dict[str, list[str]]:
    """Recompute every fixture's invariants; returns problems per fixture (empty lists when fine)."""
    from .families import fixture

    d = directory or fixture_dir()
    manifest = load_manifest(d)
    out = {}
    for name, entry in sorted(manifest["fixtures"].items()):
        try:
            g = fixture(name, d).graph
        except FixtureError as e:
            out[name] = [str(e)]
            continue
        out[name] = _check_against(entry, g, exact=True)
    return out


def fetch_fixture(hog_id: int, network: bool = False, directory: Path | None = None,
                  url_template: str | None = None, opener=None, timeout: float = 30.0) -> str:
    """Return the graph6 record for a House of Graphs id, optionally refreshing it online.

    Offline (the default) the shipped record is returned.  With ``network``
    the record is downloaded, checked against the manifest's expected
    invariants, and only then written into the fixture directory; a
    mismatch raises and leaves the files untouched.
    """
    d = directory or fixture_dir()
    manifest = load_manifest(d)
    key = next((k for k, e in manifest["fixtures"].items() if e.get("hog_id") == int(hog_id)), None)
    lines_path = d / FIXTURE_FILE
    if not network:
        if key is None:
            raise FixtureError(
                f"no shipped fixture for id {hog_id}; rerun with network access enabled "
                f"(injchrom fixtures fetch {hog_id} --network) to download it"
            )
        lines = [ln.strip() for ln in lines_path.read_text(encoding="ascii").splitlines() if ln.strip()]
        return lines[manifest["fixtures"][key]["index"]]
    template = url_template or os.environ.get(HOG_URL_ENV, DEFAULT_HOG_URL)
    url = template.format(id=int(hog_id))
    open_url = opener or urllib.request.urlopen
    try:
        with open_url(url, timeout=timeout) as resp:
            payload = resp.read()
    except (urllib.error.URLError, OSError) as e:
        raise FixtureError(f"download of {url} failed: {e}") from None
    text = payload.decode("ascii", errors="replace").strip().splitlines()
    text = [t.strip() for t in text if t.strip()]
    if not text:
        raise FixtureError(f"empty response from {url}")
    line = text[-1]
    if line.startswith(">>graph6<<"):
        line = line[10:]
    try:
        g = parse_graph6(line.encode("ascii"))
    except Graph6Error as e:
        raise FixtureError(f"downloaded record does not decode: {e}") from None
    if key is None:
        raise FixtureError(f"id {hog_id} has no manifest entry to verify against; refusing to store")
    entry = manifest["fixtures"][key]
    problems = _check_against(entry, g, exact=not entry.get("substitute", False))
    if problems:
        raise FixtureError(f"downloaded graph for id {hog_id} fails verification: " + "; ".join(problems))
    marks = entry.get("marks")
    if entry.get("substitute") and marks and {"u", "v", "w"} <= set(marks):
        t = find_lemma_triangle(g)
        if t is None:
            raise FixtureError(f"downloaded graph for id {hog_id} has no triangle meeting the lemma hypotheses")
        marks = {"u": t[0], "v": t[1], "w": t[2]}
    lines = [ln.strip() for ln in lines_path.read_text(encoding="ascii").splitlines() if ln.strip()]
    lines[entry["index"]] = line
    entry.update(sha256=graph6_digest(line), substitute=False, m=g.size, girth=_invariants(g)["girth"],
                 source=f"downloaded from {url}")
    entry.pop("edges", None)
    if marks is not None:
        entry["marks"] = marks
    tmp_lines = lines_path.with_suffix(".g6.tmp")
    tmp_manifest = (d / MANIFEST).with_suffix(".json.tmp")
    tmp_lines.write_text("\n".join(lines) + "\n", encoding="ascii")
    tmp_manifest.write_text(json.dumps(manifest, indent=1) + "\n", encoding="utf-8")
    os.replace(tmp_lines, lines_path)
    os.replace(tmp_manifest, d / MANIFEST)
    return line

