"""Truncated integer power series in noncommuting variables, and the word order.

A series is a finite dict from monomials to exact ints, truncated at a total
degree bound. Generator i maps to 1 + X_i, its inverse to the alternating
geometric series 1 - X_i + X_i^2 - ..., so inverse pairs telescope to 1
exactly at every bound. Comparing two series coefficient-by-coefficient along
a fixed monomial enumeration gives a total order on words.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .words import Letter, Word

# A monomial is the tuple of variable indices read left to right:
# () is the constant term, (1, 2) is X1*X2, (2, 2) is X2^2.
Monomial = tuple[int, ...]


class SeriesOrderOutcome(Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL_UP_TO_BOUND = "equal_up_to_bound"


class Ordering(Enum):
    """Outcome of comparing two words under a total order."""

    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"


class UndecidedAtCapError(RuntimeError):
    """Two distinct words still compared equal at the truncation cap."""


@dataclass(frozen=True)
class TruncatedSeries:
    """An exact-integer series over noncommuting X_1..X_rank, cut at degree_bound.

    ``coefficients`` maps monomials to nonzero ints; omitted monomials are zero.
    For example 1 + X1 - X2 at rank 2, bound 1 is::

        TruncatedSeries(2, 1, {(): 1, (1,): 1, (2,): -1})
    """

    rank: int
    degree_bound: int
    coefficients: dict[Monomial, int]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        for monomial, coeff in self.coefficients.items():
            if len(monomial) > self.degree_bound:
                raise ValueError(f"monomial {monomial} exceeds degree bound {self.degree_bound}")
            if any(not 1 <= i <= self.rank for i in monomial):
                raise ValueError(f"monomial {monomial} has an index outside rank {self.rank}")
            if coeff == 0:
                raise ValueError("zero coefficients must be omitted")

    def coefficient(self, monomial: Monomial) -> int:
        return self.coefficients.get(monomial, 0)


def one(rank: int, degree_bound: int) -> TruncatedSeries:
    """The multiplicative identity series."""
    return TruncatedSeries(rank, degree_bound, {(): 1})


def atom_series(generator: int, sign: int, rank: int, degree_bound: int) -> TruncatedSeries:
    """Series image of a single letter: 1 + X_g, or its inverse 1 - X_g + X_g^2 - ..."""
    if not 1 <= generator <= rank:
        raise ValueError(f"generator {generator} outside rank {rank}")
    if sign == 1:
        coeffs = {(): 1}
        if degree_bound >= 1:
            coeffs[(generator,)] = 1
    elif sign == -1:
        coeffs = {(generator,) * d: (-1) ** d for d in range(degree_bound + 1)}
    else:
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return TruncatedSeries(rank, degree_bound, coeffs)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Noncommutative product, truncated at min of the two bounds."""
    if a.rank != b.rank:
        raise ValueError("cannot multiply series of different ranks")
    bound = min(a.degree_bound, b.degree_bound)
    by_degree: dict[int, list[tuple[Monomial, int]]] = {}
    for mb, cb in b.coefficients.items():
        by_degree.setdefault(len(mb), []).append((mb, cb))
    coeffs: dict[Monomial, int] = {}
    for ma, ca in a.coefficients.items():
        room = bound - len(ma)
        if room < 0:
            continue
        for degree in range(room + 1):
            for mb, cb in by_degree.get(degree, ()):
                key = ma + mb
                value = coeffs.get(key, 0) + ca * cb
                if value:
                    coeffs[key] = value
                elif key in coeffs:
                    del coeffs[key]
    return TruncatedSeries(a.rank, bound, coeffs)


def truncate(s: TruncatedSeries, degree_bound: int) -> TruncatedSeries:
    """Drop all terms above a (smaller or equal) degree bound."""
    if degree_bound > s.degree_bound:
        raise ValueError("cannot extend a truncated series")
    return TruncatedSeries(
        s.rank,
        degree_bound,
        {m: c for m, c in s.coefficients.items() if len(m) <= degree_bound},
    )


def mu(w: Word, degree_bound: int) -> TruncatedSeries:
    """Series image of a word: the product of its letters' atom series."""
    acc = one(w.rank, degree_bound)
    for letter in w.letters:
        acc = mul(acc, atom_series(letter.generator, letter.sign, w.rank, degree_bound))
    return acc


def _check_precedence(precedence: tuple[int, ...] | None, rank: int) -> tuple[int, ...]:
    if precedence is None:
        return tuple(range(1, rank + 1))
    if sorted(precedence) != list(range(1, rank + 1)):
        raise ValueError(f"precedence {precedence} is not a permutation of 1..{rank}")
    return tuple(precedence)


def _monomial_key(precedence: tuple[int, ...]):
    # Enumeration order: ascending total degree, then lexicographic with the
    # highest-precedence variable first within each degree.
    position = {g: i for i, g in enumerate(precedence)}

    def key(monomial: Monomial):
        return len(monomial), tuple(position[i] for i in monomial)

    return key


def compare_series(
    a: TruncatedSeries,
    b: TruncatedSeries,
    precedence: tuple[int, ...] | None = None,
) -> SeriesOrderOutcome:
    """Compare at the first monomial, in enumeration order, whose coefficients differ."""
    if a.rank != b.rank:
        raise ValueError("cannot compare series of different ranks")
    if a.degree_bound != b.degree_bound:
        raise ValueError("cannot compare series truncated at different bounds")
    key = _monomial_key(_check_precedence(precedence, a.rank))
    differing = [
        m
        for m in set(a.coefficients) | set(b.coefficients)
        if a.coefficients.get(m, 0) != b.coefficients.get(m, 0)
    ]
    if not differing:
        return SeriesOrderOutcome.EQUAL_UP_TO_BOUND
    first = min(differing, key=key)
    if a.coefficients.get(first, 0) > b.coefficients.get(first, 0):
        return SeriesOrderOutcome.GREATER
    return SeriesOrderOutcome.LESS


def _monomial_text(monomial: Monomial) -> str:
    parts = []
    i = 0
    while i < len(monomial):
        j = i
        while j < len(monomial) and monomial[j] == monomial[i]:
            j += 1
        run = j - i
        parts.append(f"X{monomial[i]}" + (f"^{run}" if run > 1 else ""))
        i = j
    return "".join(parts)


def series_text(s: TruncatedSeries, precedence: tuple[int, ...] | None = None) -> str:
    """Human-readable rendering in enumeration order, e.g. ``1 + X1 - X2 + O(2)``."""
    key = _monomial_key(_check_precedence(precedence, s.rank))
    terms = sorted(s.coefficients.items(), key=lambda item: key(item[0]))
    if not terms:
        rendered = "0"
    else:
        chunks = []
        for monomial, coeff in terms:
            magnitude = abs(coeff)
            if monomial == ():
                body = str(magnitude)
            else:
                body = ("" if magnitude == 1 else str(magnitude)) + _monomial_text(monomial)
            if not chunks:
                chunks.append(("-" if coeff < 0 else "") + body)
            else:
                chunks.append(("- " if coeff < 0 else "+ ") + body)
        rendered = " ".join(chunks)
    return f"{rendered} + O({s.degree_bound + 1})"


@dataclass(frozen=True)
class TruncationPolicy:
    """How far to escalate degree bounds when a comparison stays undecided.

    Bounds start at ``start`` and multiply by ``growth`` up to a cap; the
    default cap for a pair of words is max(8, 2 * combined length). Bounds
    much above ~20 are impractical: the series grow as 2^bound monomials.
    """

    start: int = 2
    growth: int = 2
    cap: int | None = None

    def __post_init__(self) -> None:
        if self.start < 1 or self.growth < 2:
            raise ValueError("policy needs start >= 1 and growth >= 2")
        if self.cap is not None and self.cap < 1:
            raise ValueError("cap must be positive")

    def bounds_for(self, combined_length: int):
        cap = self.cap if self.cap is not None else max(8, 2 * combined_length)
        bound = min(self.start, cap)
        while True:
            yield bound
            if bound >= cap:
                return
            bound = min(bound * self.growth, cap)


class MuCache:
    """Per-order memo of word images, grown one letter at a time.

    Looking up a word at a bound reuses the longest cached prefix, so scanning
    the prefixes of a word costs one series multiplication per letter.
    """

    def __init__(self, max_entries: int = 500_000) -> None:
        self._store: dict[tuple[int, tuple[Letter, ...]], TruncatedSeries] = {}
        self._max_entries = max_entries
        self._rank: int | None = None

    def mu_of(self, letters: tuple[Letter, ...], rank: int, bound: int) -> TruncatedSeries:
        if self._rank is None:
            self._rank = rank
        elif self._rank != rank:
            raise ValueError("one MuCache cannot serve two ranks")
        store = self._store
        cached = store.get((bound, letters))
        if cached is not None:
            return cached
        if len(store) > self._max_entries:
            store.clear()
        start = len(letters) - 1
        series = None
        while start > 0:
            series = store.get((bound, letters[:start]))
            if series is not None:
                break
            start -= 1
        if series is None:
            start = 0
            series = one(rank, bound)
            store[(bound, ())] = series
        for i in range(start, len(letters)):
            letter = letters[i]
            series = mul(series, atom_series(letter.generator, letter.sign, rank, bound))
            store[(bound, letters[: i + 1])] = series
        return series


def _compare_letter_sequences(
    lv: tuple[Letter, ...],
    lw: tuple[Letter, ...],
    rank: int,
    policy: TruncationPolicy,
    precedence: tuple[int, ...] | None,
    cache: MuCache | None,
) -> Ordering:
    if lv == lw:
        return Ordering.EQUAL
    for bound in policy.bounds_for(len(lv) + len(lw)):
        if cache is not None:
            sv = cache.mu_of(lv, rank, bound)
            sw = cache.mu_of(lw, rank, bound)
        else:
            sv = mu(Word(lv, rank), bound)
            sw = mu(Word(lw, rank), bound)
        outcome = compare_series(sv, sw, precedence)
        if outcome is SeriesOrderOutcome.GREATER:
            return Ordering.GREATER
        if outcome is SeriesOrderOutcome.LESS:
            return Ordering.LESS
    raise UndecidedAtCapError(
        f"distinct words compared equal up to the cap "
        f"(lengths {len(lv)} and {len(lw)}); raise the truncation cap"
    )


def magnus_compare_words(
    v: Word,
    w: Word,
    policy: TruncationPolicy | None = None,
    precedence: tuple[int, ...] | None = None,
    cache: MuCache | None = None,
) -> Ordering:
    """Order two words by their series images, escalating the bound per policy.

    Returns EQUAL only for identical reduced words; for distinct words the
    first differing coefficient decides, and exhausting the cap without a
    difference raises :class:`UndecidedAtCapError`.
    """
    if v.rank != w.rank:
        raise ValueError("cannot compare words of different ranks")
    _check_precedence(precedence, v.rank)
    return _compare_letter_sequences(
        v.letters, w.letters, v.rank, policy or TruncationPolicy(), precedence, cache
    )
