"""Truncated noncommutative series arithmetic and the induced word order."""

from __future__ import annotations

import random
from itertools import combinations

import pytest
import sympy

from orderword import (
    MuCache,
    Ordering,
    SeriesOrderOutcome,
    TruncatedSeries,
    TruncationPolicy,
    UndecidedAtCapError,
    Word,
    atom_series,
    compare_series,
    concat,
    identity,
    inverse,
    magnus_compare_words,
    mu,
    mul,
    one,
    parse_word,
    series_text,
    truncate,
)
from wordgen import all_reduced, random_reduced

P = lambda text, rank=2: parse_word(text, rank)  # noqa: E731


# ---------------------------------------------------------------- independent oracle

def sympy_mu(w: Word, bound: int) -> dict[tuple[int, ...], int]:
    """Expand the series image of a word with sympy's noncommutative symbols."""
    symbols = {
        g: sympy.Symbol(f"X{g}", commutative=False) for g in range(1, w.rank + 1)
    }
    product = sympy.Integer(1)
    for letter in w.letters:
        x = symbols[letter.generator]
        if letter.sign > 0:
            atom = 1 + x
        else:
            atom = sum((-x) ** d for d in range(bound + 1))
        product = sympy.expand(product * atom)
    coefficients: dict[tuple[int, ...], int] = {}
    for term in sympy.Add.make_args(product):
        coeff = 1
        indices: list[int] = []
        for factor in sympy.Mul.make_args(term):
            if factor.is_Integer:
                coeff *= int(factor)
            elif factor.is_Pow:
                base, exponent = factor.args
                indices.extend([int(str(base)[1:])] * int(exponent))
            else:
                indices.append(int(str(factor)[1:]))
        if len(indices) > bound:
            continue
        key = tuple(indices)
        total = coefficients.get(key, 0) + coeff
        if total:
            coefficients[key] = total
        elif key in coefficients:
            del coefficients[key]
    return coefficients


def test_mu_matches_sympy_oracle_goldens():
    assert sympy_mu(P("aB"), 1) == {(): 1, (1,): 1, (2,): -1}
    assert sympy_mu(P("abAB"), 2) == {(): 1, (1, 2): 1, (2, 1): -1}


def test_mu_matches_sympy_oracle_random():
    rng = random.Random(201)
    for _ in range(40):
        w = random_reduced(rng, rng.randint(0, 6))
        bound = rng.randint(1, 4)
        assert mu(w, bound).coefficients == sympy_mu(w, bound)


# ---------------------------------------------------------------- atoms and products

def test_atom_series_goldens():
    assert atom_series(1, 1, 2, 3).coefficients == {(): 1, (1,): 1}
    assert atom_series(2, -1, 2, 2).coefficients == {(): 1, (2,): -1, (2, 2): 1}
    assert atom_series(1, -1, 2, 0).coefficients == {(): 1}


def test_atom_series_validation():
    with pytest.raises(ValueError):
        atom_series(3, 1, 2, 2)
    with pytest.raises(ValueError):
        atom_series(1, 0, 2, 2)


def test_mul_goldens():
    a = atom_series(1, 1, 2, 1)
    b = atom_series(2, -1, 2, 1)
    assert mul(a, b).coefficients == {(): 1, (1,): 1, (2,): -1}
    telescoped = mul(atom_series(1, 1, 2, 2), atom_series(1, -1, 2, 2))
    assert telescoped.coefficients == {(): 1}
    distributed = mul(atom_series(1, 1, 2, 2), atom_series(2, 1, 2, 2))
    assert distributed.coefficients == {(): 1, (1,): 1, (2,): 1, (1, 2): 1}


def test_mul_uses_min_bound_and_checks_rank():
    product = mul(one(2, 5), one(2, 3))
    assert product.degree_bound == 3
    with pytest.raises(ValueError):
        mul(one(2, 2), one(3, 2))


def test_mu_goldens():
    assert mu(P("aB"), 1).coefficients == {(): 1, (1,): 1, (2,): -1}
    assert mu(identity(2), 5).coefficients == {(): 1}
    assert mu(P("abAB"), 2).coefficients == {(): 1, (1, 2): 1, (2, 1): -1}


def test_inverse_pairs_telescope_exactly():
    # Exhaustive at small size, then seeded longer samples.
    for n in range(0, 5):
        for w in all_reduced(2, n):
            for bound in (1, 3):
                assert mul(mu(w, bound), mu(inverse(w), bound)).coefficients == {(): 1}
    rng = random.Random(202)
    for _ in range(60):
        w = random_reduced(rng, rng.randint(5, 10))
        bound = rng.randint(1, 6)
        assert mul(mu(w, bound), mu(inverse(w), bound)).coefficients == {(): 1}


def test_homomorphism_on_random_pairs():
    rng = random.Random(203)
    for _ in range(80):
        v = random_reduced(rng, rng.randint(0, 8))
        w = random_reduced(rng, rng.randint(0, 8))
        bound = rng.randint(1, 4)
        assert mul(mu(v, bound), mu(w, bound)).coefficients == mu(
            concat(v, w), bound
        ).coefficients


def test_degree_one_coefficients_are_exponent_sums():
    rng = random.Random(204)
    for _ in range(60):
        w = random_reduced(rng, rng.randint(0, 10))
        image = mu(w, 1)
        for g in (1, 2):
            total = sum(l.sign for l in w.letters if l.generator == g)
            assert image.coefficient((g,)) == total


# ---------------------------------------------------------------- series values

def test_truncated_series_validation():
    with pytest.raises(ValueError):
        TruncatedSeries(2, 1, {(1, 1): 1})
    with pytest.raises(ValueError):
        TruncatedSeries(2, 2, {(3,): 1})
    with pytest.raises(ValueError):
        TruncatedSeries(2, 2, {(1,): 0})
    with pytest.raises(ValueError):
        TruncatedSeries(0, 2, {})
    with pytest.raises(ValueError):
        TruncatedSeries(2, -1, {})


def test_truncate_drops_high_terms_and_refuses_extension():
    s = mu(P("aa"), 3)
    cut = truncate(s, 1)
    assert cut.coefficients == {(): 1, (1,): 2}
    with pytest.raises(ValueError):
        truncate(cut, 2)


# ---------------------------------------------------------------- comparison

def test_compare_series_golden():
    bigger = TruncatedSeries(2, 1, {(): 1, (1,): 1, (2,): 3})
    smaller = TruncatedSeries(2, 1, {(): 1, (1,): 1, (2,): 1})
    assert compare_series(bigger, smaller) is SeriesOrderOutcome.GREATER
    assert compare_series(smaller, bigger) is SeriesOrderOutcome.LESS


def test_compare_series_equal_and_x1_before_x2():
    s = mu(P("a"), 2)
    assert compare_series(s, s) is SeriesOrderOutcome.EQUAL_UP_TO_BOUND
    with_x1 = TruncatedSeries(2, 1, {(): 1, (1,): 1})
    with_x2 = TruncatedSeries(2, 1, {(): 1, (2,): 1})
    assert compare_series(with_x1, with_x2) is SeriesOrderOutcome.GREATER


def test_compare_series_orders_degree_before_lex():
    # A degree-1 difference must dominate any degree-2 difference.
    a = TruncatedSeries(2, 2, {(): 1, (2,): 1})
    b = TruncatedSeries(2, 2, {(): 1, (1, 1): 50})
    assert compare_series(a, b) is SeriesOrderOutcome.GREATER


def test_compare_series_lex_within_degree_two():
    # Enumeration within degree 2: X1X1, X1X2, X2X1, X2X2.
    x1x2 = TruncatedSeries(2, 2, {(1, 2): 1})
    x2x1 = TruncatedSeries(2, 2, {(2, 1): 1})
    assert compare_series(x1x2, x2x1) is SeriesOrderOutcome.GREATER
    assert compare_series(x1x2, x2x1, precedence=(2, 1)) is SeriesOrderOutcome.LESS


def test_compare_series_validation():
    with pytest.raises(ValueError):
        compare_series(one(2, 1), one(2, 2))
    with pytest.raises(ValueError):
        compare_series(one(2, 1), one(3, 1))
    with pytest.raises(ValueError):
        compare_series(one(2, 1), one(2, 1), precedence=(1, 1))


# ---------------------------------------------------------------- rendering

def test_series_text_goldens():
    assert series_text(mu(P("aB"), 1)) == "1 + X1 - X2 + O(2)"
    assert series_text(mu(P("aa"), 2)) == "1 + 2X1 + X1^2 + O(3)"
    assert series_text(mu(identity(2), 0)) == "1 + O(1)"
    assert series_text(TruncatedSeries(2, 1, {})) == "0 + O(2)"
    assert series_text(TruncatedSeries(2, 1, {(1,): -2})) == "-2X1 + O(2)"
    assert series_text(mu(P("abAB"), 2)) == "1 + X1X2 - X2X1 + O(3)"


def test_series_text_respects_precedence():
    assert series_text(mu(P("aB"), 1), precedence=(2, 1)) == "1 - X2 + X1 + O(2)"


# ---------------------------------------------------------------- truncation policy

def test_policy_bound_schedule():
    assert list(TruncationPolicy().bounds_for(10)) == [2, 4, 8, 16, 20]
    assert list(TruncationPolicy().bounds_for(1)) == [2, 4, 8]
    assert list(TruncationPolicy(cap=5).bounds_for(100)) == [2, 4, 5]
    assert list(TruncationPolicy(start=3, growth=3, cap=30).bounds_for(0)) == [3, 9, 27, 30]
    assert list(TruncationPolicy(cap=1).bounds_for(50)) == [1]


def test_policy_validation():
    with pytest.raises(ValueError):
        TruncationPolicy(start=0)
    with pytest.raises(ValueError):
        TruncationPolicy(growth=1)
    with pytest.raises(ValueError):
        TruncationPolicy(cap=0)


# ---------------------------------------------------------------- word comparison

def test_magnus_compare_goldens():
    assert magnus_compare_words(P("a"), P("b")) is Ordering.GREATER
    assert magnus_compare_words(P("aB"), identity(2)) is Ordering.GREATER
    assert magnus_compare_words(P("abAB"), identity(2)) is Ordering.GREATER


def test_magnus_compare_equal_only_for_identical_words():
    assert magnus_compare_words(P("ab"), P("ab")) is Ordering.EQUAL
    for v, w in combinations(all_reduced(2, 2), 2):
        assert magnus_compare_words(v, w) is not Ordering.EQUAL


def test_magnus_compare_antisymmetry_exhaustive_small():
    words = [w for n in range(0, 4) for w in all_reduced(2, n)]
    flipped = {Ordering.GREATER: Ordering.LESS, Ordering.LESS: Ordering.GREATER}
    for v, w in combinations(words, 2):
        forward = magnus_compare_words(v, w)
        assert magnus_compare_words(w, v) is flipped[forward]


def test_magnus_compare_bi_invariance():
    rng = random.Random(205)
    for _ in range(150):
        v = random_reduced(rng, rng.randint(0, 6))
        w = random_reduced(rng, rng.randint(0, 6))
        if v == w:
            continue
        verdict = magnus_compare_words(v, w)
        u = random_reduced(rng, rng.randint(0, 4))
        z = random_reduced(rng, rng.randint(0, 4))
        translated = magnus_compare_words(concat(u, v, z), concat(u, w, z))
        assert translated is verdict


def test_magnus_compare_swapped_precedence():
    assert magnus_compare_words(P("a"), P("b"), precedence=(2, 1)) is Ordering.LESS


def test_magnus_compare_validation():
    with pytest.raises(ValueError):
        magnus_compare_words(P("a"), parse_word("a", 3))
    with pytest.raises(ValueError):
        magnus_compare_words(P("a"), P("b"), precedence=(1, 1))


def test_undecided_at_cap_is_loud():
    # The commutator's image is 1 + O(2), so a cap of 1 cannot separate it from 1.
    policy = TruncationPolicy(cap=1)
    with pytest.raises(UndecidedAtCapError):
        magnus_compare_words(P("abAB"), identity(2), policy=policy)


# ---------------------------------------------------------------- caching

def test_mu_cache_matches_direct_mu():
    rng = random.Random(206)
    cache = MuCache()
    for _ in range(60):
        w = random_reduced(rng, rng.randint(0, 9))
        bound = rng.randint(1, 5)
        assert cache.mu_of(w.letters, 2, bound).coefficients == mu(w, bound).coefficients
    # Repeat lookups hit the memo and stay correct.
    w = P("abAB")
    assert cache.mu_of(w.letters, 2, 4).coefficients == mu(w, 4).coefficients
    assert cache.mu_of(w.letters, 2, 4).coefficients == mu(w, 4).coefficients


def test_mu_cache_serves_one_rank():
    cache = MuCache()
    cache.mu_of(P("ab").letters, 2, 2)
    with pytest.raises(ValueError):
        cache.mu_of(parse_word("abc", 3).letters, 3, 2)


def test_mu_cache_flushes_when_full():
    cache = MuCache(max_entries=4)
    rng = random.Random(207)
    for _ in range(20):
        w = random_reduced(rng, 4)
        assert cache.mu_of(w.letters, 2, 2).coefficients == mu(w, 2).coefficients
