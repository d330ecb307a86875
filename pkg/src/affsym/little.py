"""The affine Little bijection, word level and factor level.

A v-marked word is a word with one distinguished letter whose deletion
is a reduced word for v.  The affine Little graph puts one out-edge on
each v-marked word: decrement the marked letter mod n, and re-mark at
the unique other deletable position when the result is not reduced.
Iterating until the word is reduced again defines phi, a bijection of
the reduced v-marked words; restricted to reduced words of right
r-covers of v it lands in the reduced words of left r-covers.

The same walk runs on tuples of cyclically decreasing factors: the
marked factor takes one set-level cover step (slide the marked run down
by one) and the mark moves between factors through the unique-insertion
lemma, giving a bijection of factor tuples with fixed length profile.

Every v of an operation is passed explicitly; marked words do not store
it, since one word can be marked for different v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CycleOverflowError,
    FormatError,
    InvalidDecompositionError,
    MarkAbsentError,
    NotLeftRCoverError,
    NotReducedError,
    NotRightRCoverError,
    NotVMarkedError,
)
from .group import AffinePermutation, Reflection, as_reflection
from .words import (
    CyclicSubset,
    Word,
    canonical_cd_word,
    cd_element,
    count_reduced_words,
    evaluate,
    insertion_index,
    is_reduced,
    marked_index,
    parse_word,
    reduced_words,
)


@dataclass(frozen=True)
class MarkedWord:
    """A word with a distinguished 1-based position."""

    word: Word
    mark: int

    def __post_init__(self):
        if not 1 <= self.mark <= len(self.word):
            raise FormatError(f"mark {self.mark} outside word of length {len(self.word)}")

    def __str__(self) -> str:
        return f"{self.word}@{self.mark}"

    @property
    def marked_letter(self) -> int:
        return self.word[self.mark - 1]


def parse_marked_word(n: int, text: str) -> MarkedWord:
    """Parse the `word@mark` format, mark 1-based."""
    word_text, sep, mark_text = text.partition("@")
    if not sep:
        raise FormatError(f"marked word needs an @mark suffix: {text!r}")
    try:
        mark = int(mark_text)
    except ValueError as exc:
        raise FormatError(f"bad mark in {text!r}") from exc
    return MarkedWord(parse_word(n, word_text), mark)


def is_v_marked(v: AffinePermutation, m: MarkedWord) -> bool:
    deletion = m.word.delete(m.mark)
    return is_reduced(deletion) and evaluate(deletion) == v


def _require_v_marked(v: AffinePermutation, m: MarkedWord) -> None:
    if not is_v_marked(v, m):
        raise NotVMarkedError(f"{m} is not v-marked for v = {list(v.window)}")


@dataclass(frozen=True)
class PQPair:
    """The reflection data (p, q) of a marked word, with evaluate = v * t_{p,q}.

    Pairs related by a simultaneous shift (p + kn, q + kn) are identified;
    the stored representative has min(p, q) in [1, n].
    """

    n: int
    p: int
    q: int

    def __post_init__(self):
        if (self.p - self.q) % self.n == 0:
            raise FormatError(f"degenerate pair ({self.p},{self.q}) mod {self.n}")
        shift = (((min(self.p, self.q) - 1) % self.n) + 1) - min(self.p, self.q)
        object.__setattr__(self, "p", self.p + shift)
        object.__setattr__(self, "q", self.q + shift)

    def reflection(self) -> Reflection:
        return Reflection(self.n, self.p, self.q)


def pq(v: AffinePermutation, m: MarkedWord) -> PQPair:
    """p = y^-1(t), q = y^-1(t+1) for t the marked letter, y the suffix.

    Here y evaluates the letters after the mark, so the full word
    evaluates to v * t_{p,q}; p < q exactly when the word is reduced.
    """
    _require_v_marked(v, m)
    suffix = Word(m.word.n, m.word.letters[m.mark :])
    y_inv = evaluate(suffix).inverse()
    t = m.marked_letter
    return PQPair(m.word.n, y_inv(t), y_inv(t + 1))


# ---------------------------------------------------------------------------
# The affine Little graph


def forward_step(v: AffinePermutation, m: MarkedWord) -> MarkedWord:
    """The unique out-edge: decrement the marked letter mod n and re-mark.

    The mark stays put when the new word is reduced and otherwise moves
    to the unique other position whose deletion is a reduced word for v.
    """
    _require_v_marked(v, m)
    n = m.word.n
    new_word = m.word.replace(m.mark, (m.marked_letter - 1) % n)
    if is_reduced(new_word):
        return MarkedWord(new_word, m.mark)
    return MarkedWord(new_word, insertion_index(new_word, m.mark))


def backward_step(v: AffinePermutation, m: MarkedWord) -> MarkedWord:
    """The unique in-edge: re-mark first, then increment that letter mod n."""
    _require_v_marked(v, m)
    n = m.word.n
    k = m.mark if is_reduced(m.word) else insertion_index(m.word, m.mark)
    new_word = m.word.replace(k, (m.word[k - 1] + 1) % n)
    return MarkedWord(new_word, k)


def _phi_cap(v: AffinePermutation, length: int) -> int:
    # every v-marked word of this length inserts one of n letters at one
    # of `length` positions into some reduced word of v
    return v.n * length * count_reduced_words(v) + 1


def phi(v: AffinePermutation, m: MarkedWord) -> tuple[MarkedWord, list[MarkedWord]]:
    """First reduced v-marked word after m on its cycle, plus the path.

    The path lists every vertex visited after m, non-reduced
    intermediates included, ending with the returned vertex.  Cycles of
    the graph are finite and never loops, which the iteration cap turns
    into a runtime check.
    """
    _require_v_marked(v, m)
    if not is_reduced(m.word):
        raise NotReducedError(f"{m} is not a reduced marked word")
    path = []
    current = m
    for _ in range(_phi_cap(v, len(m.word))):
        current = forward_step(v, current)
        path.append(current)
        if is_reduced(current.word):
            return current, path
    raise CycleOverflowError(f"phi cycle through {m} exceeded its cap")


def phi_inverse(v: AffinePermutation, m: MarkedWord) -> tuple[MarkedWord, list[MarkedWord]]:
    """Inverse of phi, by iterating backward steps; same path convention."""
    _require_v_marked(v, m)
    if not is_reduced(m.word):
        raise NotReducedError(f"{m} is not a reduced marked word")
    path = []
    current = m
    for _ in range(_phi_cap(v, len(m.word))):
        current = backward_step(v, current)
        path.append(current)
        if is_reduced(current.word):
            return current, path
    raise CycleOverflowError(f"phi inverse cycle through {m} exceeded its cap")


def _require_r_cover(v: AffinePermutation, r: int, w: AffinePermutation, side: str) -> None:
    t = None
    if w.length() == v.length() + 1:
        t = as_reflection(v.inverse() * w)
    if side == "right":
        if t is None or (t.a - r) % v.n != 0:
            raise NotRightRCoverError(
                f"{list(w.window)} is not a right {r}-cover of {list(v.window)}"
            )
    else:
        if t is None or (t.b - r) % v.n != 0:
            raise NotLeftRCoverError(
                f"{list(w.window)} is not a left {r}-cover of {list(v.window)}"
            )


def phi_r(v: AffinePermutation, r: int, a: Word) -> tuple[AffinePermutation, Word]:
    """Apply phi to a reduced word of a right r-cover of v.

    Marks a by strong exchange, runs phi, and returns the evaluated
    element together with its reduced word; the element is a left
    r-cover of v.
    """
    if not is_reduced(a):
        raise NotReducedError(f"word {a} is not reduced")
    _require_r_cover(v, r, evaluate(a), "right")
    out, _ = phi(v, MarkedWord(a, marked_index(a, v)))
    return evaluate(out.word), out.word


def little_trace(v: AffinePermutation, m: MarkedWord) -> list[tuple[MarkedWord, PQPair]]:
    """The phi trace rows, input first, each with its (p, q) pair."""
    out, path = phi(v, m)
    return [(vertex, pq(v, vertex)) for vertex in [m] + path]


def v_marked_words(v: AffinePermutation) -> list[MarkedWord]:
    """All v-marked words of length l(v) + 1, in deterministic order."""
    out = []
    for b in reduced_words(v):
        for mark in range(1, len(b) + 2):
            for letter in range(v.n):
                letters = b.letters[: mark - 1] + (letter,) + b.letters[mark - 1 :]
                out.append(MarkedWord(Word(v.n, letters), mark))
    return out


# ---------------------------------------------------------------------------
# Set-level step on cyclically decreasing covers


@dataclass(frozen=True)
class MarkedSubset:
    """A proper subset of Z/nZ with one distinguished member."""

    subset: CyclicSubset
    mark: int

    def __post_init__(self):
        if self.mark not in self.subset:
            raise MarkAbsentError(f"mark {self.mark} not in subset {self.subset}")


def cd_cover_step(ms: MarkedSubset) -> MarkedSubset:
    """Slide the marked run down: replace mark i by i-j-1 for maximal j
    with {i, i-1, ..., i-j} inside the subset.

    This is the factor-level forward step; it is independent of any
    reduced-word choice.
    """
    n, members = ms.subset.n, set(ms.subset.members)
    i = ms.mark % n
    j = 0
    while (i - j - 1) % n in members:
        j += 1
    new_mark = (i - j - 1) % n
    assert new_mark not in members, "run maximality violated"
    new_members = (members - {i}) | {new_mark}
    return MarkedSubset(CyclicSubset(n, tuple(new_members)), new_mark)


def cd_cover_step_back(ms: MarkedSubset) -> MarkedSubset:
    """Inverse slide: replace mark i by i+k+1 for maximal k with
    {i, i+1, ..., i+k} inside the subset."""
    n, members = ms.subset.n, set(ms.subset.members)
    i = ms.mark % n
    k = 0
    while (i + k + 1) % n in members:
        k += 1
    new_mark = (i + k + 1) % n
    assert new_mark not in members, "run maximality violated"
    new_members = (members - {i}) | {new_mark}
    return MarkedSubset(CyclicSubset(n, tuple(new_members)), new_mark)


# ---------------------------------------------------------------------------
# Factor tuples (alpha-decompositions) and the generalized algorithm


@dataclass(frozen=True)
class AlphaDecomposition:
    """A length-additive tuple of cyclically decreasing factors."""

    n: int
    factors: tuple[CyclicSubset, ...]

    def __post_init__(self):
        for factor in self.factors:
            if factor.n != self.n:
                raise InvalidDecompositionError("factors with mixed periods")
        if self.product().length() != sum(len(f) for f in self.factors):
            raise InvalidDecompositionError(
                f"factor lengths do not add: {self}"
            )

    @property
    def alpha(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.factors)

    def product(self) -> AffinePermutation:
        return _product(self.n, self.factors)

    def __str__(self) -> str:
        return "/".join(str(f) for f in self.factors)


def _product(n: int, factors) -> AffinePermutation:
    w = evaluate(Word(n, ()))
    for factor in factors:
        w = w * cd_element(factor)
    return w


def parse_decomposition(n: int, text: str) -> AlphaDecomposition:
    """Parse slash-separated factor subsets, e.g. `34/02/1`."""
    factors = []
    for part in text.strip().split("/"):
        factors.append(CyclicSubset(n, parse_word(n, part).letters))
    return AlphaDecomposition(n, tuple(factors))


def _concat_word(n: int, factors) -> Word:
    letters = []
    for factor in factors:
        letters.extend(canonical_cd_word(factor).letters)
    return Word(n, tuple(letters))


def _locate(n: int, factors, position: int) -> tuple[int, int]:
    """Map a 1-based concatenation position to (factor index, letter)."""
    offset = 0
    for f, factor in enumerate(factors):
        if position <= offset + len(factor):
            return f, canonical_cd_word(factor)[position - offset - 1]
        offset += len(factor)
    raise AssertionError("position outside concatenation")


def _mark_position(n: int, factors, f: int, letter: int) -> int:
    offset = sum(len(factor) for factor in factors[:f])
    return offset + canonical_cd_word(factors[f]).letters.index(letter) + 1


def _decomposition_mark(v: AffinePermutation, factors) -> tuple[int, int]:
    """Factor index and letter whose deletion leaves a decomposition of v."""
    word = _concat_word(v.n, factors)
    return _locate(v.n, factors, marked_index(word, v))


def _walk_cap(n: int, factors) -> int:
    states = math.prod(math.comb(n, len(f)) for f in factors)
    return states * max(1, sum(len(f) for f in factors)) * n + 1


def _generalized_walk(v, factors, step) -> tuple[CyclicSubset, ...]:
    factors = list(factors)
    f, letter = _decomposition_mark(v, factors)
    for _ in range(_walk_cap(v.n, factors)):
        moved = step(MarkedSubset(factors[f], letter))
        factors[f] = moved.subset
        if is_reduced(_concat_word(v.n, factors)):
            return tuple(factors)
        position = _mark_position(v.n, factors, f, moved.mark)
        g, letter = _locate(v.n, factors, insertion_index(_concat_word(v.n, factors), position))
        assert g != f, "re-mark landed in the moved factor"
        f = g
    raise CycleOverflowError("generalized walk exceeded its cap")


def generalized_little(
    v: AffinePermutation, r: int, d: AlphaDecomposition
) -> AlphaDecomposition:
    """Factor-level Little step: maps a factor tuple of a right r-cover of
    v to one of a left r-cover, preserving the length profile alpha."""
    _require_r_cover(v, r, d.product(), "right")
    out = AlphaDecomposition(d.n, _generalized_walk(v, d.factors, cd_cover_step))
    assert out.alpha == d.alpha
    return out


def inverse_generalized_little(
    v: AffinePermutation, r: int, d: AlphaDecomposition
) -> AlphaDecomposition:
    """Inverse factor-level step, from left r-covers back to right r-covers."""
    _require_r_cover(v, r, d.product(), "left")
    out = AlphaDecomposition(d.n, _generalized_walk(v, d.factors, cd_cover_step_back))
    assert out.alpha == d.alpha
    return out
