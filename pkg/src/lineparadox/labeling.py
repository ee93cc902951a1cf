"""Bijective integer labeling of the vertices of a free group's Cayley tree.

Vertices are reduced words.  The canonical enumeration from
:mod:`.freegroup` assigns each word a position 0, 1, 2, ...; the zigzag

    position 0 -> label 0,   position 2n-1 -> label n (n >= 1),
    position 2n -> label -n (n >= 1)

then turns positions into labels covering all of the integers.  Both
directions are computed in closed form: for finite rank by counting shorter
words and lexicographic offsets in base 2k-1, for rank OMEGA by memoized
counts of reduced words with a given length and index sum (one weight bucket
at a time).  Computed pairs are cached per labeling instance; the cache only
grows and never changes an existing entry.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .freegroup import (
    OMEGA,
    Word,
    check_rank,
    invert,
    multiply,
    ordered_letters,
    word_weight,
)


class UnsupportedRankError(ValueError):
    """Operation requires a finite rank."""


def label_from_position(pos: int) -> int:
    if pos < 0:
        raise ValueError(f"position must be nonnegative, got {pos}")
    if pos == 0:
        return 0
    return (pos + 1) // 2 if pos % 2 else -(pos // 2)


def position_from_label(n: int) -> int:
    if n == 0:
        return 0
    return 2 * n - 1 if n > 0 else -2 * n


def _letter_rank(a: int) -> int:
    return (abs(a) - 1) * 2 + (1 if a < 0 else 0)


def _letter_from_rank(d: int) -> int:
    j = d // 2 + 1
    return j if d % 2 == 0 else -j


def _position_finite(k: int, letters: tuple[int, ...]) -> int:
    length = len(letters)
    if length == 0:
        return 0
    base = 2 * k - 1
    pos = 1
    block = 2 * k
    for _ in range(1, length):
        pos += block
        block *= base
    r = _letter_rank(letters[0])
    for prev, cur in zip(letters, letters[1:]):
        d = _letter_rank(cur)
        if d > _letter_rank(-prev):
            d -= 1
        r = r * base + d
    return pos + r


def _letters_finite(k: int, pos: int) -> tuple[int, ...]:
    if pos == 0:
        return ()
    base = 2 * k - 1
    length = 1
    start = 1
    block = 2 * k
    while pos >= start + block:
        start += block
        block *= base
        length += 1
    r = pos - start
    weight = base ** (length - 1)
    d, r = divmod(r, weight)
    letters = [_letter_from_rank(d)]
    for _ in range(length - 1):
        weight //= base
        d, r = divmod(r, weight)
        if d >= _letter_rank(-letters[-1]):
            d += 1
        letters.append(_letter_from_rank(d))
    return tuple(letters)


# --- rank OMEGA: closed-form counting over weight buckets -------------------


@functools.lru_cache(maxsize=None)
def _tail_count(r: int, s: int, prev: int) -> int:
    """Reduced continuations of r letters with index sum s after index prev.

    ``prev == 0`` means no preceding letter.  Counts are symmetric in the
    sign of the preceding letter, so only its index matters.
    """
    if r == 0:
        return 1 if s == 0 else 0
    total = 0
    for i in range(1, s - r + 2):
        total += (1 if i == prev else 2) * _tail_count(r - 1, s - i, i)
    return total


@functools.lru_cache(maxsize=None)
def _bucket_size(weight: int) -> int:
    if weight == 0:
        return 1
    return sum(_tail_count(length, weight - length, 0) for length in range(1, weight // 2 + 1))


@functools.lru_cache(maxsize=None)
def _bucket_start(weight: int) -> int:
    if weight == 0:
        return 0
    return _bucket_start(weight - 1) + _bucket_size(weight - 1)


def _letters_before(a: int) -> Iterator[int]:
    """Letters strictly smaller than ``a`` in the canonical letter order."""
    ia = abs(a)
    for i in range(1, ia):
        yield i
        yield -i
    if a < 0:
        yield ia


def _position_omega(letters: tuple[int, ...]) -> int:
    length = len(letters)
    weight = word_weight(letters)
    pos = _bucket_start(weight)
    for shorter in range(1, length):
        pos += _tail_count(shorter, weight - shorter, 0)
    srem = weight - length
    prev = 0
    for t, a in enumerate(letters):
        after = length - t - 1
        for cand in _letters_before(a):
            if cand == -prev:
                continue
            pos += _tail_count(after, srem - abs(cand), abs(cand))
        prev = a
        srem -= abs(a)
    return pos


def _letters_omega(pos: int) -> tuple[int, ...]:
    weight = 0
    while _bucket_start(weight + 1) <= pos:
        weight += 1
    r = pos - _bucket_start(weight)
    if weight == 0:
        return ()
    length = 1
    while True:
        c = _tail_count(length, weight - length, 0)
        if r < c:
            break
        r -= c
        length += 1
    letters: list[int] = []
    srem = weight - length
    prev = 0
    for t in range(length):
        after = length - t - 1
        chosen = 0
        for i in range(1, srem - after + 1):
            for cand in (i, -i):
                if cand == -prev:
                    continue
                c = _tail_count(after, srem - i, i)
                if r < c:
                    chosen = cand
                    break
                r -= c
            if chosen:
                break
        assert chosen, "position decoding ran past the bucket"
        letters.append(chosen)
        prev = chosen
        srem -= abs(chosen)
    return tuple(letters)


class VertexLabeling:
    """The canonical label <-> word bijection for one rank.

    Two labelings of the same rank are the same function, so equality is by
    rank.  Instances memoize every pair they compute, in both directions.
    """

    def __init__(self, rank):
        check_rank(rank)
        self.rank = rank
        self._word_by_pos: dict[int, Word] = {}
        self._pos_by_letters: dict[tuple[int, ...], int] = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexLabeling) and self.rank == other.rank

    def __hash__(self) -> int:
        return hash(("VertexLabeling", self.rank))

    def __repr__(self) -> str:
        r = "omega" if self.rank == OMEGA else self.rank
        return f"VertexLabeling(rank={r})"

    def word_of_label(self, n: int) -> Word:
        pos = position_from_label(n)
        w = self._word_by_pos.get(pos)
        if w is None:
            if self.rank == OMEGA:
                letters = _letters_omega(pos)
            else:
                letters = _letters_finite(self.rank, pos)
            w = Word._from_reduced(letters)
            self._word_by_pos[pos] = w
            self._pos_by_letters[letters] = pos
        return w

    def label_of_word(self, w: Word) -> int:
        pos = self._pos_by_letters.get(w.letters)
        if pos is None:
            if self.rank == OMEGA:
                pos = _position_omega(w.letters)
            else:
                if any(abs(a) > self.rank for a in w.letters):
                    raise ValueError(
                        f"word {w} uses generators beyond rank {self.rank}"
                    )
                pos = _position_finite(self.rank, w.letters)
            self._pos_by_letters[w.letters] = pos
            self._word_by_pos[pos] = w
        return label_from_position(pos)

    def connecting_word(self, m: int, n: int) -> Word:
        """The unique reduced word whose tree action sends label m to label n."""
        return multiply(self.word_of_label(n), invert(self.word_of_label(m)))

    def ball(self, radius: int) -> "CayleyBall":
        if self.rank == OMEGA:
            raise UnsupportedRankError("Cayley balls are only materialized for finite rank")
        if radius < 0:
            raise ValueError(f"radius must be nonnegative, got {radius}")
        k = self.rank
        count = ball_vertex_count(k, radius)
        entries = []
        signed = ordered_letters(k)
        for pos in range(count):
            w = self.word_of_label(label_from_position(pos))
            neighbors: dict[int, int | None] = {}
            for a in signed:
                v = multiply(Word._from_reduced((a,)), w)
                neighbors[a] = self.label_of_word(v) if len(v) <= radius else None
            entries.append(BallEntry(label_from_position(pos), w, neighbors))
        return CayleyBall(rank=k, radius=radius, entries=tuple(entries))


def ball_vertex_count(k: int, radius: int) -> int:
    """Number of reduced words of length <= radius over rank k."""
    if radius == 0:
        return 1
    return 1 + 2 * k * ((2 * k - 1) ** radius - 1) // (2 * k - 2)


@dataclass(frozen=True)
class BallEntry:
    label: int
    word: Word
    #: Keyed by signed letter: a -> label of (letter a) * word, or None when
    #: that neighbor lies outside the ball.
    neighbors: Mapping[int, int | None]


@dataclass(frozen=True)
class CayleyBall:
    rank: int
    radius: int
    entries: tuple[BallEntry, ...]

    def labels(self) -> list[int]:
        return [e.label for e in self.entries]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield each tree edge once as (tail label, head label, generator).

        The head is the image of the tail under left multiplication by the
        generator, so every edge appears exactly once with a positive letter.
        """
        for e in self.entries:
            for j in range(1, self.rank + 1):
                head = e.neighbors[j]
                if head is not None:
                    yield (e.label, head, j)
