"""Reduced words in free groups with numbered generators.

A word is stored as a tuple of nonzero integers: letter ``+j`` stands for the
generator ``x_j`` and ``-j`` for its inverse.  A word is *reduced* when no
letter sits next to its own inverse, i.e. the tuple never contains the
adjacent pair ``(a, -a)``.  Words do not carry a rank; operations that depend
on the number of generators take ``rank`` as an argument, which is either an
integer ``k >= 2`` or :data:`OMEGA` for countably many generators.

The module also provides the canonical enumeration of all reduced words (the
basis for the integer labeling of the Cayley tree) and the classification of
words into the 2k "first letter" classes that drive the decomposition of the
line: for each generator index ``j`` there is a plus class and a minus class,
and one distinguished index (the *special* one) absorbs the identity and the
pure positive powers of its generator into the minus class.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, NamedTuple

#: Rank marker for the free group on countably many generators.
OMEGA = float("inf")

PLUS = 1
MINUS = -1

_CLASS_LETTERS = ("A", "B", "C", "D")


class RankError(ValueError):
    """Rank is not an integer >= 2 or OMEGA."""


class InvalidLetterError(ValueError):
    """A letter is zero, not an integer, or outside the rank context."""


class UnreducedWordError(ValueError):
    """A word that must already be reduced contains an adjacent inverse pair."""


def check_rank(rank) -> None:
    if rank == OMEGA:
        return
    if isinstance(rank, int) and rank >= 2:
        return
    raise RankError(f"rank must be an integer >= 2 or OMEGA, got {rank!r}")


def is_finite_rank(rank) -> bool:
    check_rank(rank)
    return rank != OMEGA


def special_index(rank) -> int:
    """The generator index whose minus class absorbs the identity.

    For finite rank k the special index is k; for rank OMEGA it is 1.
    """
    check_rank(rank)
    return 1 if rank == OMEGA else rank


def _check_letter(a, rank=None) -> None:
    if not isinstance(a, int) or a == 0:
        raise InvalidLetterError(f"letter must be a nonzero integer, got {a!r}")
    if rank is not None and rank != OMEGA and abs(a) > rank:
        raise InvalidLetterError(f"letter {a} exceeds rank {rank}")


class Word:
    """An immutable reduced word.

    Supports ``u * v`` (multiplication with free reduction) and ``~u``
    (inversion).  The constructor rejects unreduced input; use :func:`reduce`
    to reduce an arbitrary letter sequence.
    """

    __slots__ = ("letters",)

    letters: tuple[int, ...]

    def __init__(self, letters: Iterable[int] = ()):
        tup = tuple(letters)
        for a in tup:
            _check_letter(a)
        for x, y in zip(tup, tup[1:]):
            if x == -y:
                raise UnreducedWordError(
                    f"adjacent inverse pair ({x}, {y}); use reduce() for raw sequences"
                )
        self.letters = tup

    @classmethod
    def _from_reduced(cls, letters: tuple[int, ...]) -> "Word":
        # Internal fast path: caller guarantees the tuple is already reduced.
        w = object.__new__(cls)
        w.letters = letters
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


#: The empty word.
IDENTITY = Word()


def reduce(letters: Iterable[int], rank=None) -> Word:
    """Freely reduce a letter sequence.

    Cancellation is confluent, so the single left-to-right stack pass used
    here gives the same result as cancelling in any other order.
    """
    out: list[int] = []
    for a in letters:
        _check_letter(a, rank)
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return Word._from_reduced(tuple(out))


def multiply(u: Word, v: Word) -> Word:
    """Concatenate two reduced words and cancel across the boundary."""
    a = u.letters
    b = v.letters
    i = len(a)
    j = 0
    nb = len(b)
    while i > 0 and j < nb and a[i - 1] == -b[j]:
        i -= 1
        j += 1
    return Word._from_reduced(a[:i] + b[j:])


def invert(u: Word) -> Word:
    return Word._from_reduced(tuple(-a for a in reversed(u.letters)))


class WordClass(NamedTuple):
    """A class in the 2k-way partition: a generator pair and a side."""

    pair: int
    side: int  # PLUS or MINUS

    def label(self, rank) -> str:
        """Display name: A/B/C/D for rank 2, A_j/B_j otherwise."""
        if rank == 2:
            return _CLASS_LETTERS[2 * (self.pair - 1) + (0 if self.side == PLUS else 1)]
        return f"{'A' if self.side == PLUS else 'B'}_{self.pair}"


def classify_word(w: Word, rank) -> WordClass:
    """Assign a reduced word to exactly one of the 2k classes.

    For a non-special index j, membership is decided by the first letter
    alone.  For the special index s, the plus class additionally excludes the
    pure positive powers of ``x_s``, which land in the minus class together
    with the identity.
    """
    s = special_index(rank)
    letters = w.letters
    for a in letters:
        _check_letter(a, rank)
    if not letters:
        return WordClass(s, MINUS)
    first = letters[0]
    j = abs(first)
    if j != s:
        return WordClass(j, PLUS if first > 0 else MINUS)
    if first < 0:
        return WordClass(s, MINUS)
    if all(a == first for a in letters):
        return WordClass(s, MINUS)
    return WordClass(s, PLUS)


# ---------------------------------------------------------------------------
# Canonical enumeration.
#
# Letters are ordered x_1 < x_1^-1 < x_2 < x_2^-1 < ...  For finite rank the
# words are enumerated by (length, lexicographic).  For rank OMEGA that order
# has no first word of length 2, so words are grouped into finite buckets by
# weight(w) = len(w) + sum of generator indices, buckets in increasing weight,
# and (length, lexicographic) inside each bucket.  Both schemes are
# prefix-stable: enumerating more words never reorders earlier ones.
# ---------------------------------------------------------------------------


def letter_sort_key(a: int) -> tuple[int, int]:
    return (abs(a), 0 if a > 0 else 1)


def ordered_letters(k: int) -> list[int]:
    return [s for j in range(1, k + 1) for s in (j, -j)]


def word_weight(letters: Iterable[int]) -> int:
    total = 0
    n = 0
    for a in letters:
        total += abs(a)
        n += 1
    return total + n


def _lex_words_of_length(k: int, length: int) -> Iterator[tuple[int, ...]]:
    letters = ordered_letters(k)
    word: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == length:
            yield tuple(word)
            return
        last = word[-1] if word else 0
        for a in letters:
            if a == -last:
                continue
            word.append(a)
            yield from rec()
            word.pop()

    yield from rec()


def _omega_bucket(weight: int) -> list[tuple[int, ...]]:
    """All reduced words of the given weight, in (length, lex) order."""
    if weight == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    word: list[int] = []

    def rec(remaining: int, budget: int) -> None:
        if remaining == 0:
            if budget == 0:
                out.append(tuple(word))
            return
        last = word[-1] if word else 0
        top = budget - (remaining - 1)
        for i in range(1, top + 1):
            for a in (i, -i):
                if a == -last:
                    continue
                word.append(a)
                rec(remaining - 1, budget - i)
                word.pop()

    for length in range(1, weight // 2 + 1):
        rec(length, weight - length)
    return out


def iter_words(rank) -> Iterator[Word]:
    """Yield every reduced word exactly once, in canonical order."""
    check_rank(rank)
    if rank == OMEGA:
        for weight in itertools.count(0):
            for letters in _omega_bucket(weight):
                yield Word._from_reduced(letters)
    else:
        yield IDENTITY
        for length in itertools.count(1):
            for letters in _lex_words_of_length(rank, length):
                yield Word._from_reduced(letters)


def enumerate_words(rank, count: int) -> list[Word]:
    """The first ``count`` words of the canonical enumeration."""
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    return list(itertools.islice(iter_words(rank), count))


# ---------------------------------------------------------------------------
# Text form.  Tokens are x<j> / X<j> with an optional ^<m> exponent; a
# negative exponent flips the letter.  g, G, h, H abbreviate x1, X1, x2, X2.
# The empty word prints as "e".  Canonical output collapses runs: "x1^3 X2".
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"^([xX])([0-9]+)(?:\^(-?[0-9]+))?$")
_ALIAS = {"g": 1, "G": -1, "h": 2, "H": -2}
_ALIAS_RE = re.compile(r"^([gGhH])(?:\^(-?[0-9]+))?$")


class WordSyntaxError(ValueError):
    """Unparseable word text."""


def parse_word(text: str, rank=None) -> Word:
    """Parse the textual word grammar; the result is reduced."""
    letters: list[int] = []
    for tok in text.split():
        if tok == "e":
            continue
        m = _TOKEN_RE.match(tok)
        if m:
            base = int(m.group(2))
            if base == 0:
                raise WordSyntaxError(f"generator index must be >= 1: {tok!r}")
            a = base if m.group(1) == "x" else -base
            exp = int(m.group(3)) if m.group(3) is not None else 1
        else:
            m = _ALIAS_RE.match(tok)
            if not m:
                raise WordSyntaxError(f"bad token {tok!r}")
            a = _ALIAS[m.group(1)]
            exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise WordSyntaxError(f"exponent must be nonzero: {tok!r}")
        if exp < 0:
            a = -a
            exp = -exp
        letters.extend([a] * exp)
    return reduce(letters, rank)


def format_word(w: Word) -> str:
    """Canonical text for a word; inverse of :func:`parse_word` on outputs."""
    if not w.letters:
        return "e"
    parts = []
    for a, run in itertools.groupby(w.letters):
        m = sum(1 for _ in run)
        tok = f"{'x' if a > 0 else 'X'}{abs(a)}"
        parts.append(tok if m == 1 else f"{tok}^{m}")
    return " ".join(parts)
