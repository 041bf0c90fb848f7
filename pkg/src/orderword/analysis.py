"""Ascent/descent structure of words under a bi-invariant total order.

An ascent is a nonempty word all of whose nonempty prefixes and suffixes sit
above the identity; a descent sits below. Every cyclically reduced word has a
unique largest ascent among the subwords of its rotation set, and rotating
that ascent to the front splits the word into ascent * descent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (
    MuCache,
    Ordering,
    TruncationPolicy,
    _compare_letter_sequences,
    magnus_compare_words,
)
from .words import (
    Letter,
    NotCyclicallyReducedError,
    Occurrence,
    Rotation,
    Word,
    identity,
    is_periodic,
    occurrences,
    rotation_set,
    uniquely_positioned,
)

_ORDERING_SIGN = {Ordering.GREATER: 1, Ordering.EQUAL: 0, Ordering.LESS: -1}


class PeriodicWordError(ValueError):
    """The word is a proper power, so the decomposition is not defined."""


class LengthOneError(ValueError):
    """The word is too short to decompose."""


class AscentPlacementError(RuntimeError):
    """No rotation starts with the maximal ascent; this should never happen."""


class InvariantViolationError(RuntimeError):
    """A structural fact the decomposition relies on failed to hold."""


class Comparator:
    """Contract for a total strict order on words of one rank.

    Implementations supply :meth:`compare`; everything else derives from it.
    Instances must be safe to share across worker processes after pickling or
    reconstruction (all state here is a cache, never a result).
    """

    rank: int
    description: str = "order"

    def compare(self, v: Word, w: Word) -> Ordering:
        raise NotImplementedError

    def greater(self, v: Word, w: Word) -> bool:
        return self.compare(v, w) is Ordering.GREATER

    def less(self, v: Word, w: Word) -> bool:
        return self.compare(v, w) is Ordering.LESS

    def sign(self, w: Word) -> int:
        """+1, 0 or -1 as w compares to the identity."""
        return _ORDERING_SIGN[self.compare(w, identity(self.rank))]

    def _sign_letters(self, letters: tuple[Letter, ...]) -> int:
        # Internal fast path used by the span scans; semantics match sign().
        return self.sign(Word(letters, self.rank))

    def max_word(self, words) -> Word:
        best = None
        for w in words:
            if best is None or self.greater(w, best):
                best = w
        if best is None:
            raise ValueError("max_word of an empty collection")
        return best

    def min_word(self, words) -> Word:
        best = None
        for w in words:
            if best is None or self.less(w, best):
                best = w
        if best is None:
            raise ValueError("min_word of an empty collection")
        return best


class MagnusOrder(Comparator):
    """The series-induced bi-order, with per-instance caching.

    ``precedence`` permutes which variable dominates the monomial enumeration;
    the default (1, 2, ..., rank) puts X1 first, so generator 1 is the
    largest single letter. Distinct precedences are distinct bi-orders.
    """

    def __init__(
        self,
        rank: int = 2,
        precedence: tuple[int, ...] | None = None,
        policy: TruncationPolicy | None = None,
    ) -> None:
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        self.precedence = tuple(precedence) if precedence is not None else None
        if self.precedence is not None and sorted(self.precedence) != list(range(1, rank + 1)):
            raise ValueError(f"precedence {precedence} is not a permutation of 1..{rank}")
        self.policy = policy or TruncationPolicy()
        self._cache = MuCache()
        self._sign_memo: dict[tuple[Letter, ...], int] = {}

    @property
    def description(self) -> str:
        order = self.precedence or tuple(range(1, self.rank + 1))
        return "magnus(" + ">".join(f"x{g}" for g in order) + ")"

    def compare(self, v: Word, w: Word) -> Ordering:
        return magnus_compare_words(v, w, self.policy, self.precedence, self._cache)

    def sign(self, w: Word) -> int:
        return self._sign_letters(w.letters)

    def _sign_letters(self, letters: tuple[Letter, ...]) -> int:
        memo = self._sign_memo
        cached = memo.get(letters)
        if cached is None:
            outcome = _compare_letter_sequences(
                letters, (), self.rank, self.policy, self.precedence, self._cache
            )
            cached = memo[letters] = _ORDERING_SIGN[outcome]
        return cached


def is_ascent(u: Word, cmp: Comparator) -> bool:
    """True iff u is nonempty and every nonempty prefix and suffix exceeds 1."""
    letters = u.letters
    n = len(letters)
    if n == 0:
        return False
    return all(cmp._sign_letters(letters[:i]) > 0 for i in range(1, n + 1)) and all(
        cmp._sign_letters(letters[i:]) > 0 for i in range(1, n)
    )


def is_descent(u: Word, cmp: Comparator) -> bool:
    """True iff u is nonempty and every nonempty prefix and suffix is below 1."""
    letters = u.letters
    n = len(letters)
    if n == 0:
        return False
    return all(cmp._sign_letters(letters[:i]) < 0 for i in range(1, n + 1)) and all(
        cmp._sign_letters(letters[i:]) < 0 for i in range(1, n)
    )


@dataclass(frozen=True)
class PrefixProfile:
    """Positions of the order-largest and order-smallest prefix of a word.

    The n+1 prefixes of a reduced word are pairwise distinct group elements,
    so peak and low are unique; they coincide only for the empty host.
    """

    host: Word
    peak_index: int
    low_index: int

    @property
    def peak(self) -> Word:
        return self.host[: self.peak_index]

    @property
    def low(self) -> Word:
        return self.host[: self.low_index]

    @property
    def degenerate(self) -> bool:
        return len(self.host) == 0


def prefix_profile(w: Word, cmp: Comparator) -> PrefixProfile:
    """Scan all prefixes of w and record where the order peak and low fall."""
    letters = w.letters
    peak_index = low_index = 0
    peak = low = ()
    for i in range(1, len(letters) + 1):
        prefix = letters[:i]
        if (
            _compare_letter_sequences_via(cmp, prefix, peak)
            is Ordering.GREATER
        ):
            peak, peak_index = prefix, i
        if _compare_letter_sequences_via(cmp, prefix, low) is Ordering.LESS:
            low, low_index = prefix, i
    return PrefixProfile(host=w, peak_index=peak_index, low_index=low_index)


def _compare_letter_sequences_via(
    cmp: Comparator, lv: tuple[Letter, ...], lw: tuple[Letter, ...]
) -> Ordering:
    if isinstance(cmp, MagnusOrder):
        return _compare_letter_sequences(
            lv, lw, cmp.rank, cmp.policy, cmp.precedence, cmp._cache
        )
    return cmp.compare(Word(lv, cmp.rank), Word(lw, cmp.rank))


def ascent_descent_spans(
    w: Word, cmp: Comparator
) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
    """Index spans [i, j) of all ascent and all descent subwords of w."""
    letters = w.letters
    n = len(letters)
    sign = {}
    for i in range(n):
        for j in range(i + 1, n + 1):
            sign[i, j] = cmp._sign_letters(letters[i:j])
    # A span is an ascent iff every prefix span and suffix span is positive;
    # both conditions extend one letter at a time.
    pref_pos, pref_neg = {}, {}
    for i in range(n):
        all_pos = all_neg = True
        for j in range(i + 1, n + 1):
            s = sign[i, j]
            all_pos = all_pos and s > 0
            all_neg = all_neg and s < 0
            pref_pos[i, j] = all_pos
            pref_neg[i, j] = all_neg
    ascents, descents = set(), set()
    for j in range(1, n + 1):
        all_pos = all_neg = True
        for i in range(j - 1, -1, -1):
            s = sign[i, j]
            all_pos = all_pos and s > 0
            all_neg = all_neg and s < 0
            if all_pos and pref_pos[i, j]:
                ascents.add((i, j))
            if all_neg and pref_neg[i, j]:
                descents.add((i, j))
    return ascents, descents


@dataclass(frozen=True)
class MaximalAscent:
    """The order-largest ascent among subwords of a rotation set."""

    ascent: Word
    host: Word
    origin: str
    occurrences: tuple[Occurrence, ...]


def _locate(ascent_letters: tuple[Letter, ...], elements: tuple[Rotation, ...], rank: int):
    target = Word(ascent_letters, rank)
    for element in elements:
        found = occurrences(target, element.word)
        if found:
            return MaximalAscent(target, element.word, element.origin, found)
    raise AscentPlacementError("maximal ascent vanished from its own rotation set")


def maximal_ascent(w: Word, cmp: Comparator, algorithm: str = "peaklow") -> MaximalAscent:
    """The unique order-largest ascent over all subwords of the rotation set of w.

    ``algorithm="bruteforce"`` classifies every subword of every rotation;
    ``"peaklow"`` takes, per rotation, the slice from the low prefix to the
    peak prefix. Both must return the same word; among rotations containing
    it, the first in rotation-set order is reported as host.
    """
    if len(w) == 0:
        raise ValueError("the empty word has no ascent")
    elements = rotation_set(w).elements
    candidates: set[tuple[Letter, ...]] = set()
    if algorithm == "bruteforce":
        for element in elements:
            letters = element.word.letters
            spans, _ = ascent_descent_spans(element.word, cmp)
            candidates.update(letters[i:j] for i, j in spans)
    elif algorithm == "peaklow":
        for element in elements:
            profile = prefix_profile(element.word, cmp)
            if profile.low_index < profile.peak_index:
                candidates.add(element.word.letters[profile.low_index : profile.peak_index])
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if not candidates:
        raise AscentPlacementError(f"no ascent found among subwords of {w!r}")
    best = None
    for candidate in candidates:
        if best is None or _compare_letter_sequences_via(cmp, candidate, best) is Ordering.GREATER:
            best = candidate
    return _locate(best, elements, w.rank)


@dataclass(frozen=True)
class Decomposition:
    """A word rotated so its maximal ascent is the prefix: chosen = ascent * descent."""

    source: Word
    chosen: Word
    origin: str
    ascent: Word
    descent: Word
    ascent_occurrences: tuple[Occurrence, ...]
    descent_unique: bool | None

    @property
    def descent_empty(self) -> bool:
        return len(self.descent) == 0


def decompose(w: Word, cmp: Comparator, algorithm: str = "peaklow") -> Decomposition:
    """Split a rotation of w (or of w^-1) as maximal ascent times descent.

    Requires a cyclically reduced, nonperiodic word of length > 1. The chosen
    rotation is the unique one starting with the maximal ascent; the remainder
    is verified to be empty or a descent before returning.
    """
    if len(w) <= 1:
        raise LengthOneError("decomposition needs a word of length at least 2")
    if not w.is_cyclically_reduced:
        raise NotCyclicallyReducedError(f"{w!r} is not cyclically reduced")
    if is_periodic(w):
        raise PeriodicWordError(f"{w!r} is a proper power")
    found = maximal_ascent(w, cmp, algorithm=algorithm)
    elements = rotation_set(w).elements
    ascent_letters = found.ascent.letters
    chosen = origin = None
    for element in elements:
        if element.word.letters[: len(ascent_letters)] == ascent_letters:
            chosen, origin = element.word, element.origin
            break
    if chosen is None:
        raise AscentPlacementError(f"no rotation of {w!r} starts with the maximal ascent")
    descent = chosen[len(ascent_letters) :]
    if len(descent) and not is_descent(descent, cmp):
        raise InvariantViolationError(
            f"remainder {descent!r} after the maximal ascent is not a descent"
        )
    return Decomposition(
        source=w,
        chosen=chosen,
        origin=origin,
        ascent=found.ascent,
        descent=descent,
        ascent_occurrences=occurrences(found.ascent, chosen),
        descent_unique=uniquely_positioned(descent, w) if len(descent) else None,
    )
