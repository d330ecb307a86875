import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affsym.errors import (
    FullSetError,
    MarkDeletionNotReducedError,
    NotACoverError,
    WordIsReducedError,
)
from affsym.group import bruhat_leq, elements_of_length, from_window, identity, simple
from affsym.words import (
    CyclicSubset,
    Word,
    canonical_cd_word,
    cd_element,
    cd_subset,
    count_reduced_words,
    cyclically_decreasing_elements,
    evaluate,
    insertion_index,
    is_cyclically_decreasing,
    is_reduced,
    marked_index,
    maximal_cyclic_intervals,
    parse_word,
    reduced_words,
)


def all_words(n, length):
    for letters in itertools.product(range(n), repeat=length):
        yield Word(n, letters)


reduced_word_inputs = st.integers(min_value=2, max_value=5).flatmap(
    lambda n: st.tuples(
        st.just(n), st.lists(st.integers(min_value=0, max_value=n - 1), max_size=9)
    )
)


def greedy_reduced(n, letters):
    """Keep only the letters that extend a reduced word."""
    kept = []
    w = identity(n)
    for i in letters:
        if w(i) < w(i + 1):
            kept.append(i)
            w = w.times_simple(i)
    return Word(n, tuple(kept))


# ---------------------------------------------------------------------------
# evaluation and reducedness


def test_evaluate_examples():
    assert evaluate(parse_word(4, "310")) == from_window(4, [-1, 1, 4, 6])
    assert evaluate(Word(3, ())) == identity(3)
    w = evaluate(parse_word(5, "3410321042"))
    assert w.length() == 10


def test_is_reduced_examples():
    assert not is_reduced(parse_word(2, "00"))
    assert is_reduced(parse_word(5, "3410321042"))
    assert not is_reduced(parse_word(5, "34101321042"))


@given(reduced_word_inputs)
def test_is_reduced_agrees_with_length(pair):
    n, letters = pair
    a = Word(n, tuple(letters))
    assert is_reduced(a) == (evaluate(a).length() == len(a))


# ---------------------------------------------------------------------------
# reduced word enumeration


def test_reduced_words_identity():
    assert reduced_words(identity(3)) == [Word(3, ())]


def test_reduced_words_long_element_of_s3():
    got = {str(a) for a in reduced_words(from_window(3, [3, 2, 1]))}
    assert got == {"121", "212"}


@pytest.mark.parametrize("n,l", [(2, 4), (3, 4)])
def test_reduced_words_against_brute_force(n, l):
    for w in elements_of_length(n, l):
        oracle = sorted(a.letters for a in all_words(n, l) if evaluate(a) == w)
        assert [a.letters for a in reduced_words(w)] == oracle


def test_reduced_word_count_additivity_example():
    assert count_reduced_words(from_window(4, [1, -1, 4, 6])) == count_reduced_words(
        from_window(4, [-3, 3, 4, 6])
    ) + count_reduced_words(from_window(4, [-2, 1, 4, 7]))


# ---------------------------------------------------------------------------
# strong exchange


def test_marked_index_examples():
    v = evaluate(parse_word(5, "3410321042"))
    assert marked_index(parse_word(5, "34102321042"), v) == 5
    assert marked_index(parse_word(2, "10"), evaluate(parse_word(2, "1"))) == 2
    with pytest.raises(NotACoverError):
        marked_index(parse_word(5, "34102321042"), identity(5))


@given(reduced_word_inputs, st.integers(min_value=1, max_value=10))
def test_marked_index_round_trip_random(pair, k):
    n, letters = pair
    a = greedy_reduced(n, letters)
    if len(a) == 0:
        return
    k = (k - 1) % len(a) + 1
    deletion = a.delete(k)
    if is_reduced(deletion):
        assert marked_index(a, evaluate(deletion)) == k


def exhaustive_exchange(n, max_len):
    for l in range(1, max_len + 1):
        for a in all_words(n, l):
            if not is_reduced(a):
                continue
            for k in range(1, l + 1):
                deletion = a.delete(k)
                if is_reduced(deletion):
                    assert marked_index(a, evaluate(deletion)) == k
                else:
                    with pytest.raises(NotACoverError):
                        marked_index(a, evaluate(deletion))


@pytest.mark.parametrize("n", [2, 3])
def test_marked_index_round_trip_exhaustive(n):
    exhaustive_exchange(n, 6)


# ---------------------------------------------------------------------------
# unique insertion


def test_insertion_index_examples():
    assert insertion_index(parse_word(5, "34101321042"), 5) == 11
    assert insertion_index(parse_word(5, "34101321041"), 11) == 3
    assert insertion_index(parse_word(2, "00"), 1) == 2


def test_insertion_index_errors():
    with pytest.raises(WordIsReducedError):
        insertion_index(parse_word(3, "12"), 1)
    with pytest.raises(MarkDeletionNotReducedError):
        insertion_index(parse_word(2, "0000"), 1)


def insertion_oracle(a, i):
    """Replay the constructive proof of the unique-insertion lemma."""
    prefix_with_mark = Word(a.n, a.letters[:i])
    if is_reduced(prefix_with_mark):
        for j in range(i + 1, len(a) + 1):
            if not is_reduced(Word(a.n, a.letters[:j])):
                return j
        raise AssertionError("word was reduced after all")
    # mirror case on the reversed word
    reversed_word = Word(a.n, tuple(reversed(a.letters)))
    j = insertion_oracle(reversed_word, len(a) + 1 - i)
    return len(a) + 1 - j


@pytest.mark.parametrize("n", [2, 3])
def test_insertion_index_exhaustive_with_oracle(n):
    for l in range(2, 7):
        for a in all_words(n, l):
            if is_reduced(a):
                continue
            for i in range(1, l + 1):
                if not is_reduced(a.delete(i)):
                    continue
                j = insertion_index(a, i)
                others = [
                    k for k in range(1, l + 1) if k != i and is_reduced(a.delete(k))
                ]
                assert others == [j]
                assert evaluate(a.delete(j)) == evaluate(a.delete(i))
                assert insertion_oracle(a, i) == j


def test_deletion_pair_property():
    # every non-reduced word admits a two-letter deletion with equal value
    for n in (2, 3):
        for l in range(2, 6):
            for a in all_words(n, l):
                if is_reduced(a):
                    continue
                w = evaluate(a)
                pairs = [
                    (i, j)
                    for i in range(1, l + 1)
                    for j in range(i + 1, l + 1)
                    if evaluate(a.delete(j).delete(i)) == w
                ]
                assert pairs


# ---------------------------------------------------------------------------
# cyclically decreasing structure


def test_is_cyclically_decreasing_examples():
    assert is_cyclically_decreasing(parse_word(5, "320"))
    assert not is_cyclically_decreasing(parse_word(5, "203"))
    assert is_cyclically_decreasing(parse_word(4, "103"))
    assert is_cyclically_decreasing(Word(4, ()))
    assert not is_cyclically_decreasing(parse_word(4, "11"))


def test_maximal_cyclic_intervals():
    assert maximal_cyclic_intervals(CyclicSubset(5, (0, 2, 3))) == [(2, 3), (0,)]
    assert maximal_cyclic_intervals(CyclicSubset(4, (0, 1, 3))) == [(3, 0, 1)]
    assert maximal_cyclic_intervals(CyclicSubset(4, ())) == []


def test_canonical_cd_word_and_element():
    A = CyclicSubset(5, (0, 2, 3))
    assert str(canonical_cd_word(A)) == "320"
    assert cd_element(A).length() == 3
    assert {str(a) for a in reduced_words(cd_element(A))} == {"320", "302", "032"}
    assert cd_element(CyclicSubset(3, ())) == identity(3)
    assert cd_element(CyclicSubset(4, (2,))) == simple(4, 2)
    with pytest.raises(FullSetError):
        CyclicSubset(3, (0, 1, 2))


def test_cd_subset_round_trip():
    for n in range(2, 6):
        for k in range(n):
            for members in itertools.combinations(range(n), k):
                A = CyclicSubset(n, members)
                assert cd_subset(cd_element(A)) == A
    assert cd_subset(identity(4)) == CyclicSubset(4, ())


def test_cd_subset_absent_for_non_cd_elements():
    # period 2 admits no cyclically decreasing element past length 1
    for l in (2, 3):
        for w in elements_of_length(2, l):
            assert cd_subset(w) is None
    assert cd_subset(evaluate(parse_word(3, "01"))) is None


def shuffles(words):
    if not words:
        yield ()
        return
    first, rest = words[0], words[1:]
    for tail in shuffles(rest):
        for positions in itertools.combinations(range(len(first) + len(tail)), len(first)):
            chosen = set(positions)
            out, fi, ti = [], 0, 0
            for k in range(len(first) + len(tail)):
                if k in chosen:
                    out.append(first[fi])
                    fi += 1
                else:
                    out.append(tail[ti])
                    ti += 1
            yield tuple(out)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_shuffle_law(n):
    for k in range(n):
        for members in itertools.combinations(range(n), k):
            A = CyclicSubset(n, members)
            words = [tuple(reversed(run)) for run in maximal_cyclic_intervals(A)]
            expected = set(shuffles(words))
            got = {a.letters for a in reduced_words(cd_element(A))}
            assert got == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_boolean_lattice(n):
    subsets = [
        tuple(c) for k in range(n) for c in itertools.combinations(range(n), k)
    ]
    elements = {members: cd_element(CyclicSubset(n, members)) for members in subsets}
    assert len(set(elements.values())) == 2**n - 1
    assert len(cyclically_decreasing_elements(n)) == 2**n - 1
    for a in subsets:
        for b in subsets:
            assert (set(a) <= set(b)) == bruhat_leq(elements[a], elements[b])


def test_cd_count_n5():
    assert len(set(cyclically_decreasing_elements(5))) == 2**5 - 1


def test_word_text_formats():
    assert str(parse_word(5, "3410321042")) == "3410321042"
    assert parse_word(12, "10,3,0").letters == (10, 3, 0)
    assert str(Word(12, (10, 3, 0))) == "10,3,0"
    assert parse_word(3, "").letters == ()
