"""Corpus sweeps: enumeration or graph6 ingestion, filters, per-graph tasks.

Records are plain JSON-able dicts.  Output is ordered by canonical graph6
key and contains no timestamps, so a sweep re-run with the same config is
byte-identical regardless of worker count.  Timing goes to stderr only.
"""

from __future__ import annotations

import dataclasses
import json
import os
import sys
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional, TextIO

from .circumference import Budget, circumference
from .enumeration import MAX_ENUMERATION_N, canonical_graph6, enumerate_connected
from .graphs import Graph, Graph6Error, from_graph6, is_connected, is_two_connected, to_graph6
from .heavy import heavy_vertices, is_pattern_heavy
from .ocycle import CycleSeq, heavy_cycle_or_certificate
from .patterns import is_pattern_free, pattern_by_name
from .theorems import THEOREM_CHECKS, CheckOutcome

#: the concrete members of the pattern library; the parametric star K_{1,k}
#: needs a k and so has no fixed analyze flag
CONCRETE_PATTERNS = ("p3", "p4", "k3", "c4", "k1_3", "k1_4", "k1_5")

TASKS = ("analyze", "theorem:1", "theorem:2", "theorem:3", "theorem:4")
FORMATS = ("json", "jsonl", "g6")


class SweepError(RuntimeError):
    """Configuration or corpus problem that aborts a sweep."""


@dataclass
class SweepConfig:
    source: str = "enumerate"  # "enumerate", "-" for stdin, or a graph6 file path
    min_n: int = 1
    max_n: int = 8
    filters: tuple[str, ...] = ()
    task: str = "analyze"
    budget_seconds: float = 600.0
    budget_nodes: int = 100_000_000
    output: Optional[str] = None  # path; None writes to stdout
    output_format: str = "jsonl"
    jobs: int = 1
    on_malformed: str = "abort"  # abort | skip

    def validate(self) -> None:
        if self.task not in TASKS:
            raise SweepError(f"unknown task {self.task!r}; choose from {TASKS}")
        if self.output_format not in FORMATS:
            raise SweepError(
                f"unknown output format {self.output_format!r}; choose from {FORMATS}"
            )
        if self.on_malformed not in ("abort", "skip"):
            raise SweepError("on_malformed must be 'abort' or 'skip'")
        if self.source == "enumerate" and not (
            1 <= self.min_n <= self.max_n <= MAX_ENUMERATION_N
        ):
            raise SweepError(
                f"enumerate range must satisfy 1 <= min_n <= max_n <= {MAX_ENUMERATION_N}"
            )
        for f in self.filters:
            compile_filter(f)  # raises on junk

    def budget(self) -> Budget:
        return Budget(self.budget_seconds, self.budget_nodes)


def compile_filter(spec: str) -> Callable[[Graph], bool]:
    if spec == "connected":
        return is_connected
    if spec == "two-connected":
        return is_two_connected
    if spec.startswith("pattern-free:"):
        pat = pattern_by_name(spec.split(":", 1)[1])
        return lambda g: is_pattern_free(g, pat)
    if spec.startswith("pattern-heavy:"):
        pat = pattern_by_name(spec.split(":", 1)[1])
        return lambda g: is_pattern_heavy(g, pat)[0]
    raise SweepError(
        f"unknown filter {spec!r}; use connected, two-connected, "
        f"pattern-free:<name>, pattern-heavy:<name>"
    )


def _read_graph6_lines(lines: Iterable[str], on_malformed: str) -> Iterator[Graph]:
    malformed = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield from_graph6(line)
        except Graph6Error as e:
            if on_malformed == "abort":
                raise SweepError(f"malformed graph6 at line {lineno}: {e}") from e
            malformed += 1
            print(f"skipping malformed graph6 at line {lineno}: {e}", file=sys.stderr)


def iter_corpus(cfg: SweepConfig) -> Iterator[Graph]:
    if cfg.source == "enumerate":
        for n in range(cfg.min_n, cfg.max_n + 1):
            yield from enumerate_connected(n)
    elif cfg.source == "-":
        yield from _read_graph6_lines(sys.stdin, cfg.on_malformed)
    else:
        with open(cfg.source) as fh:
            yield from _read_graph6_lines(fh, cfg.on_malformed)


def certificate_to_dict(cert) -> dict:
    return {"kind": cert.kind} | dataclasses.asdict(cert)


def analyze(g: Graph, budget: Budget = Budget()) -> dict:
    """One flat record of everything the library can say about g."""
    rec: dict = {
        "graph6": to_graph6(g),
        "n": g.n,
        "edges": g.edge_count,
        "connected": is_connected(g),
        "two_connected": is_two_connected(g),
        "heavy": sorted(heavy_vertices(g)),
    }
    res = circumference(g, budget)
    rec["circumference"] = res.length
    rec["circumference_exhausted"] = res.exhausted
    if not res.exhausted:
        rec["circumference_upper_bound"] = res.upper_bound
    if rec["connected"]:
        out = heavy_cycle_or_certificate(g)
        if isinstance(out, CycleSeq):
            rec["heavy_cycle"] = list(out.verts)
            rec["certificate"] = None
        else:
            rec["heavy_cycle"] = None
            rec["certificate"] = certificate_to_dict(out)
    else:
        rec["heavy_cycle"] = None
        rec["certificate"] = None
    for name in CONCRETE_PATTERNS:
        pat = pattern_by_name(name)
        rec[f"{name}_free"] = is_pattern_free(g, pat)
        rec[f"{name}_heavy"] = is_pattern_heavy(g, pat)[0]
    return rec


def _run_task(
    key_g6: str, task: str = "analyze", budget_seconds: float = 600.0,
    budget_nodes: int = 100_000_000,
) -> dict:
    g = from_graph6(key_g6.split(" ", 1)[1])
    if task == "analyze":
        rec = analyze(g, Budget(budget_seconds, budget_nodes))
        rec["key"] = key_g6.split(" ", 1)[0]
        return rec
    check = THEOREM_CHECKS[task.split(":", 1)[1]]
    out: CheckOutcome = check(g)
    return {
        "key": key_g6.split(" ", 1)[0],
        "graph6": to_graph6(g),
        "status": out.status,
        "reason": out.reason,
        "detail": out.detail,
    }


def resolve_jobs(jobs: int) -> int:
    env = os.environ.get("HEAVYCYCLE_JOBS")
    if env:
        try:
            jobs = int(env)
        except ValueError as e:
            raise SweepError(f"HEAVYCYCLE_JOBS must be an integer, got {env!r}") from e
    return max(1, jobs)


@dataclass
class SweepResult:
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    exit_code: int = 0


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Filter the corpus, run the task per graph, aggregate deterministically."""
    cfg.validate()
    preds = [compile_filter(f) for f in cfg.filters]
    items: list[str] = []  # "canonicalkey originalg6"
    for g in iter_corpus(cfg):
        if all(p(g) for p in preds):
            items.append(f"{canonical_graph6(g)} {to_graph6(g)}")
    items.sort()  # graph6 leads with the order byte, so this sorts by n first
    worker = partial(
        _run_task,
        task=cfg.task,
        budget_seconds=cfg.budget_seconds,
        budget_nodes=cfg.budget_nodes,
    )
    jobs = resolve_jobs(cfg.jobs)
    if jobs > 1 and len(items) > 1:
        with Pool(jobs) as pool:
            records = list(pool.imap(worker, items, chunksize=16))
    else:
        records = [worker(it) for it in items]
    summary: dict = {"task": cfg.task, "graphs": len(records)}
    exit_code = 0
    if cfg.task != "analyze":
        counts: dict[str, int] = {}
        for r in records:
            counts[r["status"]] = counts.get(r["status"], 0) + 1
        summary["status_counts"] = counts
        if counts.get("fail"):
            exit_code = 1
        elif counts.get("inconclusive"):
            exit_code = 2
    else:
        if any(not r["circumference_exhausted"] for r in records):
            exit_code = 2
            summary["inconclusive_circumference"] = sum(
                1 for r in records if not r["circumference_exhausted"]
            )
    return SweepResult(records, summary, exit_code)


def write_report(result: SweepResult, cfg: SweepConfig, fh: Optional[TextIO] = None) -> None:
    """Serialize; byte-identical for identical configs (no timestamps)."""
    close = False
    if fh is None:
        if cfg.output:
            fh = open(cfg.output, "w")
            close = True
        else:
            fh = sys.stdout
    try:
        if cfg.output_format == "g6":
            for r in result.records:
                fh.write(r["key"] + "\n")
        elif cfg.output_format == "jsonl":
            for r in result.records:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
        else:
            doc = {
                "config": {
                    "source": cfg.source,
                    "min_n": cfg.min_n,
                    "max_n": cfg.max_n,
                    "filters": list(cfg.filters),
                    "task": cfg.task,
                },
                "summary": result.summary,
                "records": result.records,
            }
            fh.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    finally:
        if close:
            fh.close()
