"""Exhaustive desk-scale verification of the decomposition claims.

For every nonperiodic cyclically reduced word in a length range this module
decomposes the word, re-checks each structural claim the decomposition rests
on, and records violations as anomalies instead of crashing: a single
counterexample is the most valuable possible output of a campaign, so it is
reported, never swallowed. Reports are deterministic for fixed inputs no
matter how many worker processes run the checks.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .analysis import (
    AscentPlacementError,
    Comparator,
    InvariantViolationError,
    LengthOneError,
    MagnusOrder,
    PeriodicWordError,
    ascent_descent_spans,
    decompose,
    is_descent,
    prefix_profile,
)
from .series import TruncationPolicy
from .words import (
    Letter,
    NotCyclicallyReducedError,
    Word,
    _intervals_overlap,
    _prefix_count,
    inverse,
    is_monotonic,
    is_periodic,
    occurrences,
    rotation_set,
)

REPORT_SCHEMA = "orderword-report-1"


@dataclass(frozen=True)
class Anomaly:
    """One labeled violation of a checked claim."""

    label: str
    detail: str

    def to_dict(self) -> dict:
        return {"label": self.label, "detail": self.detail}


@dataclass
class WordReport:
    """Everything check_word established about one word."""

    word: Word
    decomposition_summary: dict | None
    ascent_uniquely_positioned: bool | None
    descent_status: str | None  # "unique" | "internal_in_A" | "empty"
    monotonic: bool
    weinbaum_count: int
    anomalies: list[Anomaly]

    @property
    def ok(self) -> bool:
        return not self.anomalies

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "length": len(self.word),
            "decomposition": self.decomposition_summary,
            "ascent_uniquely_positioned": self.ascent_uniquely_positioned,
            "descent_status": self.descent_status,
            "monotonic": self.monotonic,
            "weinbaum_count": self.weinbaum_count,
            "anomalies": [a.to_dict() for a in self.anomalies],
        }


def _letters_key(letters: tuple[Letter, ...]) -> tuple[tuple[int, int], ...]:
    # Lexicographic letter order: generator-major, positive sign first,
    # so a < A < b < B ...
    return tuple((l.generator, 0 if l.sign > 0 else 1) for l in letters)


def canonical_representative(w: Word) -> Word:
    """The lexicographically least element of the rotation set of w."""
    elements = rotation_set(w).elements
    return min(elements, key=lambda e: _letters_key(e.word.letters)).word


def enumerate_cyclically_reduced(rank: int, length: int, dedup: str = "none") -> Iterator[Word]:
    """Yield all cyclically reduced words of one length in lexicographic order.

    With ``dedup="rotation_class"`` only canonical representatives are
    yielded: the words that are the least element of their own rotation set.
    """
    if dedup not in ("none", "rotation_class"):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    if rank < 1 or length < 1:
        raise ValueError("rank and length must be positive")
    alphabet = [Letter(g, s) for g in range(1, rank + 1) for s in (1, -1)]
    prefix: list[Letter] = []

    def walk() -> Iterator[Word]:
        if len(prefix) == length:
            if length == 1 or prefix[0] != prefix[-1].inverse():
                w = Word(tuple(prefix), rank)
                if dedup == "none" or canonical_representative(w) == w:
                    yield w
            return
        for letter in alphabet:
            if prefix and letter == prefix[-1].inverse():
                continue
            prefix.append(letter)
            yield from walk()
            prefix.pop()

    yield from walk()


def cyclically_reduced_count(rank: int, length: int) -> int:
    """Closed-form count of cyclically reduced words (transfer-matrix trace)."""
    if rank < 1 or length < 1:
        raise ValueError("rank and length must be positive")
    return (2 * rank - 1) ** length + (rank - 1) * (-1) ** length + rank


def _mobius(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def nonperiodic_count(rank: int, length: int) -> int:
    """Closed-form count of nonperiodic cyclically reduced words."""
    return sum(
        _mobius(length // d) * cyclically_reduced_count(rank, d)
        for d in range(1, length + 1)
        if length % d == 0
    )


def rotation_class_count(rank: int, length: int) -> int:
    """Number of rotation classes of nonperiodic cyclically reduced words.

    Every such class has exactly 2 * length distinct elements: the rotations
    of a nonperiodic word are pairwise distinct, and none can equal a rotation
    of the inverse because no nontrivial element of a bi-orderable group is
    conjugate to its own inverse.
    """
    total = nonperiodic_count(rank, length)
    classes, remainder = divmod(total, 2 * length)
    if remainder:
        raise AssertionError(f"class size 2n violated at rank {rank}, length {length}")
    return classes


def weinbaum_factorizations(w: Word) -> tuple[tuple[Word, Word], ...]:
    """All splits rotation = U * V with both halves uniquely positioned in w.

    Scans every rotation of w itself (not of the inverse) in offset order and
    every split point in order; nonperiodic cyclically reduced input required.
    """
    if len(w) <= 1:
        raise LengthOneError("factorization needs a word of length at least 2")
    if not w.is_cyclically_reduced:
        raise NotCyclicallyReducedError(f"{w!r} is not cyclically reduced")
    if is_periodic(w):
        raise PeriodicWordError(f"{w!r} is a proper power")
    elements = rotation_set(w).elements
    n = len(w)
    unique_memo: dict[tuple[Letter, ...], bool] = {}

    def unique(letters: tuple[Letter, ...]) -> bool:
        hit = unique_memo.get(letters)
        if hit is None:
            hit = unique_memo[letters] = _prefix_count(letters, elements) == 1
        return hit

    out = []
    for element in elements[:n]:
        letters = element.word.letters
        for cut in range(1, n):
            head, tail = letters[:cut], letters[cut:]
            if unique(head) and unique(tail):
                out.append((Word(head, w.rank), Word(tail, w.rank)))
    return tuple(out)


def check_word(w: Word, cmp: Comparator, check_monotonic: bool = True) -> WordReport:
    """Decompose one word and audit every claim; violations become anomalies.

    Precondition violations (empty, length one, periodic, not cyclically
    reduced) raise; everything the decomposition asserts about a valid word is
    verified here and reported, never raised.
    """
    anomalies: list[Anomaly] = []
    monotonic = is_monotonic(w)
    try:
        dec = decompose(w, cmp)
    except (AscentPlacementError, InvariantViolationError) as exc:
        anomalies.append(Anomaly("decomposition_failed", str(exc)))
        return WordReport(
            word=w,
            decomposition_summary=None,
            ascent_uniquely_positioned=None,
            descent_status=None,
            monotonic=monotonic,
            weinbaum_count=len(weinbaum_factorizations(w)),
            anomalies=anomalies,
        )

    elements = rotation_set(w).elements
    ascent = dec.ascent
    descent = dec.descent

    # The maximal ascent must be a prefix of exactly one rotation.
    prefix_hits = _prefix_count(ascent.letters, elements)
    ascent_unique = prefix_hits == 1
    if not ascent_unique:
        anomalies.append(
            Anomaly(
                "ascent_not_uniquely_positioned",
                f"{ascent} is a prefix of {prefix_hits} rotations of {w}",
            )
        )

    # Any extra copy of the descent inside the chosen rotation must sit
    # strictly inside the ascent span.
    if not descent:
        descent_status = "empty"
    else:
        descent_status = "unique" if dec.descent_unique else "internal_in_A"
        boundary = len(ascent)
        for occ in occurrences(descent, dec.chosen):
            if occ.start == boundary:
                continue
            if occ.start < 1 or occ.end > boundary - 1:
                anomalies.append(
                    Anomaly(
                        "descent_occurrence_outside_ascent",
                        f"{descent} recurs at offset {occ.start} of {dec.chosen}",
                    )
                )

    # Under the series order, an empty descent must coincide with monotonicity.
    if check_monotonic and dec.descent_empty != monotonic:
        anomalies.append(
            Anomaly(
                "monotonic_descent_mismatch",
                f"monotonic={monotonic} but descent={descent}",
            )
        )

    # Structure of every rotation that contains the maximal ascent.
    for element in elements:
        host = element.word
        found = occurrences(ascent, host)
        if not found:
            continue
        if cmp.sign(host) <= 0:
            anomalies.append(Anomaly("host_not_positive", f"{host} contains {ascent}"))
        if len(found) != 1:
            anomalies.append(
                Anomaly("ascent_repeated_in_host", f"{ascent} occurs {len(found)}x in {host}")
            )
        if occurrences(ascent, inverse(host)):
            anomalies.append(
                Anomaly("ascent_in_inverse_host", f"{ascent} also occurs in {inverse(host)}")
            )
        profile = prefix_profile(host, cmp)
        low, peak = profile.low_index, profile.peak_index
        if not (low < peak and host.letters[low:peak] == ascent.letters):
            anomalies.append(
                Anomaly(
                    "peak_low_slice_mismatch",
                    f"host {host}: low {low}, peak {peak}, ascent {ascent}",
                )
            )
        if host.letters[: len(ascent)] == ascent.letters and len(host) > len(ascent):
            if not is_descent(host[len(ascent) :], cmp):
                anomalies.append(
                    Anomaly("host_remainder_not_descent", f"{host} after {ascent}")
                )

    # Overlap structure of ascents and descents inside every rotation.
    for element in elements:
        ascents, descents = ascent_descent_spans(element.word, cmp)
        asc_sorted = sorted(ascents)
        desc_sorted = sorted(descents)
        for idx, (s1, e1) in enumerate(asc_sorted):
            for s2, e2 in asc_sorted[idx + 1 :]:
                if s2 >= e1:
                    break
                if _intervals_overlap(s1, e1, s2, e2):
                    piece = (max(s1, s2), min(e1, e2))
                    if piece not in ascents:
                        anomalies.append(
                            Anomaly(
                                "ascent_overlap_not_ascent",
                                f"{element.word}: spans {(s1, e1)} and {(s2, e2)}",
                            )
                        )
        for s1, e1 in asc_sorted:
            for s2, e2 in desc_sorted:
                if _intervals_overlap(s1, e1, s2, e2):
                    anomalies.append(
                        Anomaly(
                            "ascent_descent_overlap",
                            f"{element.word}: ascent {(s1, e1)} vs descent {(s2, e2)}",
                        )
                    )

    weinbaum = weinbaum_factorizations(w)
    if not weinbaum:
        anomalies.append(Anomaly("no_weinbaum_factorization", str(w)))

    return WordReport(
        word=w,
        decomposition_summary={
            "source": str(dec.source),
            "chosen": str(dec.chosen),
            "origin": dec.origin,
            "ascent": str(dec.ascent),
            "descent": str(dec.descent) if dec.descent else "1",
            "descent_unique": dec.descent_unique,
        },
        ascent_uniquely_positioned=ascent_unique,
        descent_status=descent_status,
        monotonic=monotonic,
        weinbaum_count=len(weinbaum),
        anomalies=anomalies,
    )


@dataclass
class CampaignReport:
    """Aggregated, deterministic outcome of checking one length range."""

    schema_version: str
    rank: int
    min_length: int
    max_length: int
    order: str
    dedup: str
    checks: list[str]
    words_checked: int
    words_checked_by_length: dict[str, int]
    nonperiodic_count: int
    anomaly_count: int
    weinbaum_min: int | None
    descent_ratio_histogram: dict[str, int]
    counterexamples: list[dict]
    duration_seconds: float

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "rank": self.rank,
            "min_length": self.min_length,
            "max_length": self.max_length,
            "order": self.order,
            "dedup": self.dedup,
            "checks": list(self.checks),
            "words_checked": self.words_checked,
            "words_checked_by_length": dict(self.words_checked_by_length),
            "nonperiodic_count": self.nonperiodic_count,
            "anomaly_count": self.anomaly_count,
            "weinbaum_min": self.weinbaum_min,
            "descent_ratio_histogram": dict(self.descent_ratio_histogram),
            "counterexamples": list(self.counterexamples),
            "duration_seconds": self.duration_seconds,
        }


def write_report(report: CampaignReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(report.to_dict(), handle, indent=2, sort_keys=True)
        handle.write("\n")


def _summary(report: WordReport) -> tuple:
    dec = report.decomposition_summary
    descent_len = None
    if dec is not None:
        descent_len = 0 if dec["descent"] == "1" else len(dec["descent"])
    return (
        len(report.word),
        descent_len,
        report.weinbaum_count,
        report.to_dict() if report.anomalies else None,
        len(report.anomalies),
    )


def _campaign_chunk(args: tuple) -> list[tuple]:
    letters_list, rank, precedence, cap, check_monotonic = args
    policy = TruncationPolicy(cap=cap) if cap is not None else TruncationPolicy()
    cmp = MagnusOrder(rank, precedence=precedence, policy=policy)
    out = []
    for letters in letters_list:
        report = check_word(Word(letters, rank), cmp, check_monotonic=check_monotonic)
        out.append(_summary(report))
    return out


def run_campaign(
    rank: int,
    min_length: int,
    max_length: int,
    precedence: tuple[int, ...] | None = None,
    workers: int = 1,
    out_path: str | None = None,
    dedup: str = "rotation_class",
    cap: int | None = None,
    check_monotonic: bool | None = None,
) -> CampaignReport:
    """Check every nonperiodic cyclically reduced word in a length range.

    The monotonicity check runs only under the canonical variable precedence
    unless forced via ``check_monotonic``. Report content is independent of
    ``workers``, except the wall-clock ``duration_seconds``.
    """
    if not 1 <= min_length <= max_length:
        raise ValueError("need 1 <= min_length <= max_length")
    if workers < 1:
        raise ValueError("workers must be positive")
    canonical = precedence is None or tuple(precedence) == tuple(range(1, rank + 1))
    if check_monotonic is None:
        check_monotonic = canonical

    started = time.perf_counter()
    todo: list[tuple[Letter, ...]] = []
    by_length: dict[str, int] = {}
    for length in range(max(2, min_length), max_length + 1):
        count = 0
        for w in enumerate_cyclically_reduced(rank, length, dedup=dedup):
            if is_periodic(w):
                continue
            todo.append(w.letters)
            count += 1
        by_length[str(length)] = count

    if workers == 1 or len(todo) < 2 * workers:
        summaries = _campaign_chunk((todo, rank, precedence, cap, check_monotonic))
    else:
        chunk_count = workers * 4
        size = -(-len(todo) // chunk_count)
        chunks = [
            (todo[i : i + size], rank, precedence, cap, check_monotonic)
            for i in range(0, len(todo), size)
        ]
        summaries = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_campaign_chunk, chunks):
                summaries.extend(part)

    histogram: dict[str, int] = {}
    counterexamples: list[dict] = []
    weinbaum_min: int | None = None
    anomaly_count = 0
    for length, descent_len, weinbaum_count, bad_report, n_anomalies in summaries:
        if descent_len is not None:
            key = str(Fraction(descent_len, length))
            histogram[key] = histogram.get(key, 0) + 1
        if weinbaum_min is None or weinbaum_count < weinbaum_min:
            weinbaum_min = weinbaum_count
        anomaly_count += n_anomalies
        if bad_report is not None:
            counterexamples.append(bad_report)

    order = MagnusOrder(rank, precedence=precedence).description
    checks = ["unique_ascent", "descent_placement"]
    if check_monotonic:
        checks.append("monotonic_descent")
    checks += ["host_structure", "overlap_structure", "weinbaum"]
    report = CampaignReport(
        schema_version=REPORT_SCHEMA,
        rank=rank,
        min_length=min_length,
        max_length=max_length,
        order=order,
        dedup=dedup,
        checks=checks,
        words_checked=len(todo),
        words_checked_by_length=by_length,
        nonperiodic_count=len(todo),
        anomaly_count=anomaly_count,
        weinbaum_min=weinbaum_min,
        descent_ratio_histogram=dict(sorted(histogram.items())),
        counterexamples=counterexamples,
        duration_seconds=time.perf_counter() - started,
    )
    if out_path is not None:
        write_report(report, out_path)
    return report
