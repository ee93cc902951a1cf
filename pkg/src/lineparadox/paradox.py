"""The paradoxical decomposition of the line, verified mechanically.

Each unit interval [n, n+1) inherits the class of the word labeling n, giving
2k classes for rank k.  For every generator pair j the plus class and the
rigid image of the minus class tile the line exactly once, so the single
partition reassembles into k full copies (countably many at rank OMEGA).
The verifiers below check this on finite windows by exhaustive sweep: the
partition check evaluates every class predicate independently on every
integer, and the reassembly check decides membership in the translated class
by pulling each integer back through the inverse generator.

Pulled-back membership is computed on the word itself, classifying
``x_j^-1 * w_n`` directly.  That equals classifying the integer image of the
inverse tree permutation, because label-of-word and word-of-label invert
each other; at rank OMEGA the word route also avoids materializing the
astronomically large integer labels of heavy words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .freegroup import (
    MINUS,
    OMEGA,
    PLUS,
    Word,
    WordClass,
    _lex_words_of_length,
    check_rank,
    classify_word,
    format_word,
    special_index,
)
from .labeling import VertexLabeling, ball_vertex_count
from .permutation import TreePermutation, _tree_fixed_indices
from .rigid import PiecewiseRigidMap, as_rational, floor_part


class BudgetExceededError(RuntimeError):
    """A combinatorial sweep would exceed its configured word budget."""


def rank_token(rank):
    """JSON-friendly rank value: the integer, or the string "omega"."""
    return "omega" if rank == OMEGA else rank


def _is_member(letters: tuple[int, ...], j: int, side: int, s: int) -> bool:
    """Class membership by the first-letter rules, evaluated standalone."""
    if j != s:
        return bool(letters) and letters[0] == (j if side == PLUS else -j)
    if side == PLUS:
        return bool(letters) and letters[0] == s and any(a != s for a in letters)
    return not letters or letters[0] == -s or all(a == s for a in letters)


@dataclass
class PartitionReport:
    window: tuple[int, int]
    rank: object
    counts: dict[str, int]
    violations: list[tuple[int, str]] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(self.counts.values())

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class ReassemblyReport:
    window: tuple[int, int]
    rank: object
    pairs: tuple[int, ...]
    covered: dict[int, int]
    violations: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class MeasureAuditReport:
    """Interval-count bookkeeping: classes sum to the window, each pair covers it."""

    window: tuple[int, int]
    rank: object
    interval_count: int
    counts: dict[str, int]
    coverage: dict[int, int]
    components_passed: bool

    @property
    def passed(self) -> bool:
        return (
            self.components_passed
            and sum(self.counts.values()) == self.interval_count
            and all(c == self.interval_count for c in self.coverage.values())
        )


@dataclass
class FreeActionReport:
    window: tuple[int, int]
    max_length: int
    words_checked: int
    fixed_point_violations: list[tuple[str, int]] = field(default_factory=list)
    distinct_actions: bool = True

    @property
    def passed(self) -> bool:
        return not self.fixed_point_violations and self.distinct_actions


class ParadoxInstance:
    """One rank's decomposition: labeling, generators, and verifiers."""

    def __init__(self, rank, labeling: VertexLabeling | None = None):
        check_rank(rank)
        if labeling is None:
            labeling = VertexLabeling(rank)
        elif labeling.rank != rank:
            raise ValueError("labeling rank does not match instance rank")
        self.rank = rank
        self.labeling = labeling

    @property
    def special(self) -> int:
        return special_index(self.rank)

    def generator(self, j: int) -> TreePermutation:
        self._check_pair(j)
        return TreePermutation(Word((j,)), self.labeling)

    def rigid_generator(self, j: int) -> PiecewiseRigidMap:
        return PiecewiseRigidMap(self.generator(j))

    def _check_pair(self, j: int) -> None:
        if j < 1 or (self.rank != OMEGA and j > self.rank):
            raise ValueError(f"generator index {j} out of range for rank {rank_token(self.rank)}")

    def pairs(self, pair_limit: int | None = None) -> range:
        """The generator pairs a finite sweep covers; OMEGA needs a limit."""
        if self.rank != OMEGA:
            return range(1, self.rank + 1)
        if pair_limit is None:
            raise ValueError("rank OMEGA sweeps need an explicit pair limit")
        if pair_limit < 1:
            raise ValueError(f"pair limit must be >= 1, got {pair_limit}")
        return range(1, pair_limit + 1)

    def class_names(self, pair_limit: int | None = None) -> list[str]:
        names = []
        for j in self.pairs(pair_limit):
            names.append(WordClass(j, PLUS).label(self.rank))
            names.append(WordClass(j, MINUS).label(self.rank))
        if self.rank == OMEGA:
            names.append("overflow")
        return names

    def classify_interval(self, n: int) -> WordClass:
        return classify_word(self.labeling.word_of_label(n), self.rank)

    def classify_point(self, x) -> WordClass:
        return self.classify_interval(floor_part(as_rational(x)))

    def verify_partition(self, lo: int, hi: int, pair_limit: int | None = None) -> PartitionReport:
        """Every label in [lo, hi] must satisfy exactly one class predicate.

        All predicates are evaluated independently per integer, then
        cross-checked against the direct classifier.  At rank OMEGA, classes
        with pair index beyond the limit are tallied as "overflow"; the
        classification itself stays total.
        """
        s = self.special
        pairs = self.pairs(pair_limit)
        counts: dict[str, int] = {name: 0 for name in self.class_names(pair_limit)}
        violations: list[tuple[int, str]] = []
        top = pairs[-1]
        for n in range(lo, hi + 1):
            word = self.labeling.word_of_label(n)
            letters = word.letters
            hits = [
                WordClass(j, side)
                for j in pairs
                for side in (PLUS, MINUS)
                if _is_member(letters, j, side, s)
            ]
            overflow = self.rank == OMEGA and bool(letters) and abs(letters[0]) > top
            if len(hits) + (1 if overflow else 0) != 1:
                violations.append((n, f"matched {len(hits) + (1 if overflow else 0)} classes"))
                continue
            direct = classify_word(word, self.rank)
            if overflow:
                if direct.pair <= top:
                    violations.append((n, "overflow disagrees with classifier"))
                    continue
                counts["overflow"] += 1
            else:
                if direct != hits[0]:
                    violations.append((n, f"predicate {hits[0]} disagrees with classifier {direct}"))
                    continue
                counts[direct.label(self.rank)] += 1
        return PartitionReport((lo, hi), self.rank, counts, violations)

    def verify_reassembly(
        self, lo: int, hi: int, pairs: Iterable[int] | None = None
    ) -> ReassemblyReport:
        """For each pair j, each label lies in the plus class or in the rigid
        image of the minus class, never both and never neither."""
        s = self.special
        pair_list = tuple(pairs) if pairs is not None else tuple(self.pairs())
        for j in pair_list:
            self._check_pair(j)
        covered = {j: 0 for j in pair_list}
        violations: list[tuple[int, int, str]] = []
        for n in range(lo, hi + 1):
            letters = self.labeling.word_of_label(n).letters
            for j in pair_list:
                in_plus = _is_member(letters, j, PLUS, s)
                # Pull n back through the inverse generator at the word level.
                if letters and letters[0] == j:
                    pulled = letters[1:]
                else:
                    pulled = (-j,) + letters
                in_image = _is_member(pulled, j, MINUS, s)
                if in_plus and in_image:
                    violations.append((j, n, "double-covered"))
                elif not in_plus and not in_image:
                    violations.append((j, n, "uncovered"))
                else:
                    covered[j] += 1
        return ReassemblyReport((lo, hi), self.rank, pair_list, covered, violations)

    def measure_audit(self, lo: int, hi: int, pair_limit: int | None = None) -> MeasureAuditReport:
        part = self.verify_partition(lo, hi, pair_limit)
        reas = self.verify_reassembly(lo, hi, self.pairs(pair_limit))
        size = hi - lo + 1 if hi >= lo else 0
        return MeasureAuditReport(
            window=(lo, hi),
            rank=self.rank,
            interval_count=size,
            counts=part.counts,
            coverage=reas.covered,
            components_passed=part.passed and reas.passed,
        )

    def certify_free_action(
        self,
        max_length: int,
        lo: int,
        hi: int,
        word_budget: int = 1_000_000,
        pair_limit: int | None = None,
    ) -> FreeActionReport:
        """Check that every nonempty word up to the given length acts with no
        fixed point in the window, and that all those actions are distinct.

        Distinctness is witnessed on label 0: the action sends 0 to the label
        of the word itself, and the labeling is injective.
        """
        if max_length < 1:
            raise ValueError(f"max_length must be >= 1, got {max_length}")
        k = self.rank if self.rank != OMEGA else self.pairs(pair_limit)[-1]
        total = ball_vertex_count(k, max_length) - 1
        if total > word_budget:
            raise BudgetExceededError(
                f"{total} words of length <= {max_length} exceed the budget of {word_budget}"
            )
        window = [self.labeling.word_of_label(n).letters for n in range(lo, hi + 1)]
        violations: list[tuple[str, int]] = []
        images_of_zero: set[int] = set()
        checked = 0
        for length in range(1, max_length + 1):
            for letters in _lex_words_of_length(k, length):
                checked += 1
                for idx in _tree_fixed_indices(letters, window):
                    violations.append((format_word(Word._from_reduced(letters)), lo + idx))
                images_of_zero.add(self.labeling.label_of_word(Word._from_reduced(letters)))
        return FreeActionReport(
            window=(lo, hi),
            max_length=max_length,
            words_checked=checked,
            fixed_point_violations=violations,
            distinct_actions=len(images_of_zero) == checked,
        )


def verification_summary(
    instance: ParadoxInstance,
    lo: int,
    hi: int,
    pair_limit: int | None = None,
    free_check: int | None = None,
    word_budget: int = 1_000_000,
) -> dict:
    """The combined verification record serialized by the command line."""
    part = instance.verify_partition(lo, hi, pair_limit)
    reas = instance.verify_reassembly(lo, hi, instance.pairs(pair_limit))
    violations: list[dict] = []
    for n, reason in part.violations:
        violations.append({"kind": "partition", "pair": None, "n": n, "reason": reason})
    for j, n, reason in reas.violations:
        violations.append({"kind": "reassembly", "pair": j, "n": n, "reason": reason})
    summary = {
        "window": [lo, hi],
        "rank": rank_token(instance.rank),
        "counts": dict(part.counts),
        "coverage": {str(j): c for j, c in reas.covered.items()},
        "violations": violations,
        "pass": part.passed and reas.passed,
    }
    if free_check is not None:
        free = instance.certify_free_action(
            free_check, lo, hi, word_budget=word_budget, pair_limit=pair_limit
        )
        for word_text, n in free.fixed_point_violations:
            violations.append(
                {"kind": "free_action", "pair": None, "n": n, "reason": f"fixed by {word_text}"}
            )
        summary["free_action"] = {
            "max_length": free.max_length,
            "words_checked": free.words_checked,
            "distinct_actions": free.distinct_actions,
            "pass": free.passed,
        }
        summary["pass"] = summary["pass"] and free.passed
    return summary
