"""Exhaustive search for minimal universal permutations.

Candidates are scanned length by length, each length fully enumerated in
lexicographic order, so a returned minimum comes with complete nonexistence
counts for every shorter length.  A single node budget (candidates times
patterns, estimated a priori per length) gates every run; exceeding it
raises instead of truncating, because the nonexistence half of the result
is only meaningful when enumeration is complete.

Within a candidate, patterns are checked in a fixed order that fails fast
(longest decreasing pattern first: a universal candidate must devote an
entire decreasing run of length n to it, which most candidates lack).  The
order never changes results, only speed.

Parallel runs partition each length into contiguous rank ranges and reduce
to the smallest witness rank, so serial and parallel reports are identical.
"""

from __future__ import annotations

import dataclasses
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor

from . import kernels
from .classes import ClassTag, class_count, class_tuples, coerce_tag, in_class
from .errors import BudgetExceededError, InternalDefectError
from .layered import enumerate_layered
from .perms import Permutation
from .universal import verify_universal

DEFAULT_BUDGET = 50_000_000
_SERIAL_CUTOFF = 2048  # below this many candidates a parallel split is noise
_REALIZE_CHUNK = 4096

MIN_5UNIVERSAL_AV231_LEN11 = Permutation((1, 5, 11, 9, 3, 2, 8, 4, 7, 6, 10))
AVOIDING_5UNIVERSAL_AV231_LEN12 = Permutation((1, 11, 3, 2, 10, 7, 5, 4, 6, 9, 8, 12))


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("SUPERPATTERN_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def _decreasing_run_length(t: tuple[int, ...]) -> int:
    best = [1] * len(t)
    out = 0
    for i in range(len(t)):
        b = 0
        for j in range(i):
            if t[j] > t[i] and best[j] > b:
                b = best[j]
        best[i] = b + 1
        if best[i] > out:
            out = best[i]
    return out


def _ordered_pattern_tuples(tag: ClassTag, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        sorted(class_tuples(tag, n), key=lambda t: (-_decreasing_run_length(t), t))
    )


def _ordered_pattern_profiles(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        sorted(
            (p.sizes for p in enumerate_layered(n)),
            key=lambda s: (-max(s, default=0), s),
        )
    )


def _realize_tuple(parts: tuple[int, ...]) -> tuple[int, ...]:
    vals: list[int] = []
    off = 0
    for s in parts:
        vals.extend(range(off + s, off, -1))
        off += s
    return tuple(vals)


def _scan_range(
    ctag: ClassTag,
    m: int,
    mode: str,
    patterns: tuple[tuple[int, ...], ...],
    lo: int,
    hi: int,
) -> int:
    """First rank in [lo, hi) whose candidate contains every pattern, or -1."""
    if mode == "profiles":
        rank, _ = kernels.scan_layered(m, patterns, lo, hi)
        return rank
    if ctag is ClassTag.ALL:
        rank, _ = kernels.scan_all_perms(m, patterns, lo, hi)
        return rank
    if ctag in (ClassTag.AV231, ClassTag.AV321):
        candidates = list(class_tuples(ctag, m))
        rank, _ = kernels.scan_perm_list(candidates, patterns, lo, hi)
        return rank
    # Layered candidates checked against non-layered patterns: realize the
    # compositions in chunks and run the generic scan on each chunk.
    r = lo
    while r < hi:
        stop = min(r + _REALIZE_CHUNK, hi)
        chunk = [
            _realize_tuple(kernels.composition_at_rank(m, rr)) for rr in range(r, stop)
        ]
        idx, _ = kernels.scan_perm_list(chunk, patterns, 0, len(chunk))
        if idx >= 0:
            return r + idx
        r = stop
    return -1


def _scan_chunk(args) -> int:
    ctag_value, m, mode, patterns, lo, hi = args
    return _scan_range(ClassTag(ctag_value), m, mode, patterns, lo, hi)


def _scan_length(
    ctag: ClassTag,
    m: int,
    mode: str,
    patterns: tuple[tuple[int, ...], ...],
    total: int,
    jobs: int,
) -> int | None:
    """Witness rank within length m, or None when the length is exhausted."""
    if jobs <= 1 or total < _SERIAL_CUTOFF:
        rank = _scan_range(ctag, m, mode, patterns, 0, total)
        return rank if rank >= 0 else None
    bounds = [total * i // jobs for i in range(jobs + 1)]
    args = [
        (ctag.value, m, mode, patterns, bounds[i], bounds[i + 1])
        for i in range(jobs)
        if bounds[i] < bounds[i + 1]
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        ranks = list(pool.map(_scan_chunk, args))
    found = [r for r in ranks if r >= 0]
    return min(found) if found else None


def _candidate_at(ctag: ClassTag, m: int, rank: int) -> Permutation:
    if ctag is ClassTag.LAYERED:
        return Permutation(_realize_tuple(kernels.composition_at_rank(m, rank)))
    if ctag is ClassTag.ALL:
        return Permutation(kernels.permutation_at_rank(m, rank))
    candidates = list(class_tuples(ctag, m))
    return Permutation(candidates[rank])


@dataclasses.dataclass(frozen=True)
class SearchReport:
    n: int
    pattern_class: ClassTag
    candidate_class: ClassTag
    min_length: int
    witness: Permutation
    candidates_examined: int
    lengths_exhausted: tuple[tuple[int, int], ...]
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern_class": self.pattern_class.value,
            "candidate_class": self.candidate_class.value,
            "min_length": self.min_length,
            "witness": str(self.witness),
            "candidates_examined": self.candidates_examined,
            "lengths_exhausted": [[m, c] for m, c in self.lengths_exhausted],
            "elapsed_ms": self.elapsed_ms,
        }


def minimal_superpattern(
    n: int,
    pattern_class: ClassTag | str,
    candidate_class: ClassTag | str,
    *,
    budget: int | None = None,
    jobs: int = 1,
) -> SearchReport:
    """Smallest length at which some candidate-class member contains every
    length-n member of the pattern class, with the lexicographically first
    witness at that length and full enumeration counts below it."""
    t0 = time.perf_counter()
    ptag = coerce_tag(pattern_class)
    ctag = coerce_tag(candidate_class)
    budget_limit = resolve_budget(budget)
    if ptag is ClassTag.LAYERED and ctag is ClassTag.LAYERED:
        mode = "profiles"
        patterns: tuple[tuple[int, ...], ...] = _ordered_pattern_profiles(n)
    else:
        mode = "tuples"
        patterns = _ordered_pattern_tuples(ptag, n)
    pattern_count = max(len(patterns), 1)
    exhausted: list[tuple[int, int]] = []
    used = 0
    m = n
    while True:
        total = class_count(ctag, m)
        estimate = total * pattern_count
        if used + estimate > budget_limit:
            raise BudgetExceededError(
                f"scanning length {m} needs ~{used + estimate} nodes, over the "
                f"budget of {budget_limit}; lengths {n}..{m - 1} were exhausted",
                lengths_exhausted=exhausted,
                estimated=used + estimate,
                budget=budget_limit,
            )
        used += estimate
        rank = _scan_length(ctag, m, mode, patterns, total, jobs)
        if rank is None:
            exhausted.append((m, total))
            m += 1
            continue
        witness = _candidate_at(ctag, m, rank)
        report = SearchReport(
            n=n,
            pattern_class=ptag,
            candidate_class=ctag,
            min_length=m,
            witness=witness,
            candidates_examined=sum(c for _, c in exhausted) + rank + 1,
            lengths_exhausted=tuple(exhausted),
            elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
        )
        _check_report(report)
        return report


def _check_report(report: SearchReport) -> None:
    if not in_class(report.witness, report.candidate_class):
        raise InternalDefectError("search witness is outside its candidate class")
    if not verify_universal(report.witness, report.n, report.pattern_class).ok:
        raise InternalDefectError("search witness failed re-verification")
    for m, count in report.lengths_exhausted:
        if m >= report.min_length or count != class_count(report.candidate_class, m):
            raise InternalDefectError("incomplete nonexistence enumeration")


@dataclasses.dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    details: dict

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


@dataclasses.dataclass(frozen=True)
class Claims231Report:
    claims: tuple[ClaimResult, ...]
    all_passed: bool
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        return {
            "claims": [c.to_json_dict() for c in self.claims],
            "all_passed": self.all_passed,
            "elapsed_ms": self.elapsed_ms,
        }


def check_claims_231(
    *, verify_minimality: bool = False, budget: int | None = None
) -> Claims231Report:
    """Verify the recorded facts about 5-universal permutations for the
    231-avoiding class.

    In order: the known length-11 witness is 5-universal; that witness
    itself contains 231; no 231-avoiding permutation of length 11 is
    5-universal (exhaustive over all 58786 of them); and the known
    231-avoiding length-12 witness is 5-universal.  With verify_minimality,
    additionally exhaust all permutations of lengths 5..10 to confirm that
    11 is minimal over unrestricted candidates (expensive; needs an
    enlarged budget).
    """
    t0 = time.perf_counter()
    budget_limit = resolve_budget(budget)
    patterns = _ordered_pattern_tuples(ClassTag.AV231, 5)
    claims = []

    report1 = verify_universal(MIN_5UNIVERSAL_AV231_LEN11, 5, ClassTag.AV231)
    claims.append(
        ClaimResult(
            name="length-11 witness is 5-universal for av231",
            passed=report1.ok,
            details={"patterns_checked": report1.patterns_checked},
        )
    )

    embedding = kernels.lex_min_embedding((2, 3, 1), MIN_5UNIVERSAL_AV231_LEN11.values)
    claims.append(
        ClaimResult(
            name="length-11 witness itself contains 231",
            passed=embedding is not None,
            details={
                "positions": None
                if embedding is None
                else [p + 1 for p in embedding]
            },
        )
    )

    candidates = list(class_tuples(ClassTag.AV231, 11))
    estimate = len(candidates) * len(patterns)
    if estimate > budget_limit:
        raise BudgetExceededError(
            f"length-11 exhaustion needs ~{estimate} nodes, over {budget_limit}",
            estimated=estimate,
            budget=budget_limit,
        )
    used = estimate
    rank, scanned = kernels.scan_perm_list(candidates, patterns, 0, len(candidates))
    claims.append(
        ClaimResult(
            name="no 231-avoiding length-11 permutation is 5-universal for av231",
            passed=rank == -1,
            details={
                "candidates_checked": scanned,
                "counterexample": None
                if rank == -1
                else " ".join(map(str, candidates[rank])),
            },
        )
    )

    avoiding = in_class(AVOIDING_5UNIVERSAL_AV231_LEN12, ClassTag.AV231)
    report4 = verify_universal(AVOIDING_5UNIVERSAL_AV231_LEN12, 5, ClassTag.AV231)
    claims.append(
        ClaimResult(
            name="length-12 witness avoids 231 and is 5-universal for av231",
            passed=avoiding and report4.ok,
            details={
                "avoids_231": avoiding,
                "patterns_checked": report4.patterns_checked,
            },
        )
    )

    if verify_minimality:
        for m in range(5, 11):
            estimate = math.factorial(m) * len(patterns)
            if used + estimate > budget_limit:
                raise BudgetExceededError(
                    f"minimality scan at length {m} needs ~{used + estimate} nodes, "
                    f"over {budget_limit}",
                    estimated=used + estimate,
                    budget=budget_limit,
                )
            used += estimate
            rank, scanned = kernels.scan_all_perms(m, patterns, 0, math.factorial(m))
            claims.append(
                ClaimResult(
                    name=f"no permutation of length {m} is 5-universal for av231",
                    passed=rank == -1,
                    details={"candidates_checked": scanned},
                )
            )

    return Claims231Report(
        claims=tuple(claims),
        all_passed=all(c.passed for c in claims),
        elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
    )


@dataclasses.dataclass(frozen=True)
class Conjecture321Report:
    n: int
    min_length: int
    all_search: SearchReport
    holds: bool
    avoiding_witness: Permutation | None
    avoiding_candidates_examined: int
    avoiding_total: int
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "min_length": self.min_length,
            "all_search": self.all_search.to_json_dict(),
            "holds": self.holds,
            "avoiding_witness": None
            if self.avoiding_witness is None
            else str(self.avoiding_witness),
            "avoiding_candidates_examined": self.avoiding_candidates_examined,
            "avoiding_total": self.avoiding_total,
            "elapsed_ms": self.elapsed_ms,
        }


def check_conjecture_321(
    n: int, *, budget: int | None = None, jobs: int = 1
) -> Conjecture321Report:
    """Decide whether some shortest n-universal permutation for the
    321-avoiding class itself avoids 321.

    First finds the minimum length L over unrestricted candidates, then
    scans the 321-avoiders of length exactly L for a universal one.  The
    verdict is whatever the exhaustive runs say.
    """
    t0 = time.perf_counter()
    budget_limit = resolve_budget(budget)
    all_search = minimal_superpattern(
        n, ClassTag.AV321, ClassTag.ALL, budget=budget_limit, jobs=jobs
    )
    length = all_search.min_length
    patterns = _ordered_pattern_tuples(ClassTag.AV321, n)
    phase1 = sum(
        class_count(ClassTag.ALL, m) * len(patterns) for m in range(n, length + 1)
    )
    candidates = list(class_tuples(ClassTag.AV321, length))
    phase2 = len(candidates) * len(patterns)
    if phase1 + phase2 > budget_limit:
        raise BudgetExceededError(
            f"avoiding-candidate scan needs ~{phase1 + phase2} nodes, over "
            f"{budget_limit}",
            estimated=phase1 + phase2,
            budget=budget_limit,
        )
    rank, scanned = kernels.scan_perm_list(candidates, patterns, 0, len(candidates))
    witness = None if rank == -1 else Permutation(candidates[rank])
    if witness is not None:
        if not verify_universal(witness, n, ClassTag.AV321).ok:
            raise InternalDefectError("avoiding witness failed re-verification")
    return Conjecture321Report(
        n=n,
        min_length=length,
        all_search=all_search,
        holds=witness is not None,
        avoiding_witness=witness,
        avoiding_candidates_examined=scanned,
        avoiding_total=len(candidates),
        elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
    )
