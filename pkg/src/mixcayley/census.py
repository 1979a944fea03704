"""Enumerate connection sets of a group and cross-check all three routes.

Masks use the canonical element order: bit k stands for element k + 1
(the identity is never in S).  Records are written as JSON lines after a
header ``{"schema":1,"group":...,"kind":...,"seed":...}``.
"""
from __future__ import annotations

import json
import multiprocessing
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Iterator, Optional

from mixcayley.criteria import check_main
from mixcayley.errors import PreconditionError, RouteDisagreement
from mixcayley.group import ExtGroup, parse_group_spec, split_connection_set
from mixcayley.spectrum import adjacency, exact_spectrum, is_integral_numeric, numeric_spectrum

KINDS = ("all", "undirected", "directed")
SCHEMA = 1

# groups of order <= 16 covering every family the parser knows
CATALOG = (
    "dihedral(6)",
    "dihedral(8)",
    "dihedral(10)",
    "dihedral(12)",
    "dicyclic(4;2)",
    "dicyclic(2x4;0,2)",
    "semidihedral(8)",
    "modular(8)",
)


@dataclass
class CensusRecord:
    group_spec: str
    mask: int
    kind: str
    verdict_criteria: bool
    verdict_exact: bool
    verdict_numeric: bool
    spectrum: list
    elapsed_us: int = 0

    @property
    def agrees(self) -> bool:
        return self.verdict_criteria == self.verdict_exact == self.verdict_numeric

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


@dataclass
class CensusSummary:
    group_spec: str
    totals: dict = field(default_factory=dict)
    integral: dict = field(default_factory=dict)
    integral_directed_examples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


# -- mask enumeration ------------------------------------------------------------

def _symmetric_units(G: ExtGroup) -> list[int]:
    """Involutions and inverse pairs as bit patterns; undirected masks are their unions."""
    invols, pairs = G.inverse_pairs()
    return [1 << (g - 1) for g in invols] + [(1 << (g - 1)) | (1 << (h - 1)) for g, h in pairs]


def mask_count(G: ExtGroup, kind: str) -> int:
    invols, pairs = G.inverse_pairs()
    if kind == "all":
        return 1 << (G.order - 1)
    if kind == "undirected":
        return 1 << (len(invols) + len(pairs))
    if kind == "directed":
        return 3 ** len(pairs)
    raise PreconditionError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def _mask_at(G: ExtGroup, kind: str, k: int) -> int:
    """The k-th mask of ``kind`` in a fixed (not sorted) enumeration."""
    if kind == "all":
        return k
    if kind == "undirected":
        return sum(u for j, u in enumerate(_symmetric_units(G)) if k >> j & 1)
    _, pairs = G.inverse_pairs()
    mask = 0
    for g, h in pairs:
        k, choice = divmod(k, 3)
        if choice == 1:
            mask |= 1 << (g - 1)
        elif choice == 2:
            mask |= 1 << (h - 1)
    return mask


def enumerate_masks(G: ExtGroup, kind: str = "all", limit: Optional[int] = None,
                    seed: Optional[int] = None) -> list[int]:
    """Masks of the requested kind in increasing order.

    ``undirected`` means S^-1 = S, ``directed`` means S and S^-1 are
    disjoint.  When there are more than ``limit`` masks a uniform sample of
    ``limit`` of them is drawn with ``random.Random(seed)``; a seed is then
    mandatory.
    """
    count = mask_count(G, kind)
    if limit is None or count <= limit:
        if kind == "all":
            return list(range(count))
        return sorted(_mask_at(G, kind, k) for k in range(count))
    if seed is None:
        raise PreconditionError(
            f"{count} masks exceed the limit {limit}: a sampling seed is required")
    picks = random.Random(seed).sample(range(count), limit)
    return sorted(_mask_at(G, kind, k) for k in picks)


# -- evaluation --------------------------------------------------------------------

def evaluate_mask(G: ExtGroup, mask: int, spec: str = "", timing: bool = False) -> CensusRecord:
    """All three verdicts for one mask."""
    t0 = time.perf_counter_ns()
    cs = split_connection_set(G, mask)
    crit = check_main(G, cs).overall
    rep = exact_spectrum(G, cs)
    numeric = is_integral_numeric(numeric_spectrum(adjacency(G, cs)))
    elapsed = (time.perf_counter_ns() - t0) // 1000 if timing else 0
    return CensusRecord(spec or str(G), mask, cs.kind, crit, rep.integral, numeric,
                        rep.exact if rep.integral else [None] * G.order, elapsed)


_worker_group: Optional[ExtGroup] = None
_worker_args: tuple = ()


def _init_worker(spec: str, timing: bool) -> None:
    global _worker_group, _worker_args
    _worker_group = parse_group_spec(spec)
    _worker_args = (spec, timing)


def _work(mask: int) -> CensusRecord:
    return evaluate_mask(_worker_group, mask, *_worker_args)


def iter_records(spec: str, masks: Iterable[int], workers: int = 1,
                 timing: bool = False, chunksize: int = 64) -> Iterator[CensusRecord]:
    """Records in the order of ``masks``, whatever the worker count."""
    if workers <= 1:
        G = parse_group_spec(spec)
        for mask in masks:
            yield evaluate_mask(G, mask, spec, timing)
        return
    with multiprocessing.Pool(workers, _init_worker, (spec, timing)) as pool:
        yield from pool.imap(_work, masks, chunksize)


def summarize(spec: str, records: Iterable[CensusRecord], max_examples: int = 10) -> CensusSummary:
    """Per-kind totals and integral counts, folded from the records alone."""
    totals, integral = Counter(), Counter()
    examples = []
    for r in records:
        totals[r.kind] += 1
        if r.verdict_exact:
            integral[r.kind] += 1
            if r.kind == "directed" and len(examples) < max_examples:
                examples.append(r.mask)
    return CensusSummary(spec, dict(sorted(totals.items())), dict(sorted(integral.items())), examples)


def header(spec: str, kind: str, seed: Optional[int]) -> str:
    return json.dumps({"schema": SCHEMA, "group": spec, "kind": kind, "seed": seed},
                      separators=(",", ":"))


def run_census(spec: str, kind: str = "all", limit: Optional[int] = None,
               workers: int = 1, seed: Optional[int] = None, out: Optional[IO[str]] = None,
               keep_records: bool = True, timing: bool = False):
    """Evaluate every selected mask of one group by all three routes.

    Returns ``(records, summary)``; ``records`` is empty when
    ``keep_records`` is False.  If ``out`` is given the JSONL stream is
    written to it.  A disagreement between routes raises
    ``RouteDisagreement`` carrying the offending record, after the records
    before it have been written.
    """
    G = parse_group_spec(spec)
    spec = G.name or spec
    masks = enumerate_masks(G, kind, limit, seed)
    if out is not None:
        out.write(header(spec, kind, seed) + "\n")
    records = []
    totals, integral = Counter(), Counter()
    examples = []
    for rec in iter_records(spec, masks, workers, timing):
        if out is not None:
            out.write(rec.to_json() + "\n")
        if not rec.agrees:
            raise RouteDisagreement(rec)
        totals[rec.kind] += 1
        if rec.verdict_exact:
            integral[rec.kind] += 1
            if rec.kind == "directed" and len(examples) < 10:
                examples.append(rec.mask)
        if keep_records:
            records.append(rec)
    summary = CensusSummary(spec, dict(sorted(totals.items())), dict(sorted(integral.items())),
                            examples)
    return records, summary


def read_jsonl(lines: Iterable[str]) -> tuple[dict, list[CensusRecord]]:
    """Parse a census stream back into its header and records."""
    it = iter(lines)
    head = json.loads(next(it))
    return head, [CensusRecord(**json.loads(line)) for line in it if line.strip()]
