"""Piecewise rigid maps of the real line driven by integer permutations.

For an integer permutation p, the induced map is

    f(x) = p(floor(x)) + frac(x)

which translates each unit interval [n, n+1) rigidly onto [p(n), p(n)+1).
All arithmetic is exact over the rationals (:class:`fractions.Fraction`);
floats never enter evaluation.  Maps are either a single permutation-induced
map or a composite chain.  A composite keeps its formal factor sequence for
display and audit, but when all factors share a backing form the composition
collapses to a single permutation used for evaluation; the two views agree
pointwise because unit-interval translations compose interval-by-interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import NamedTuple

from .permutation import (
    CyclePermutation,
    IntegerPermutation,
    TreePermutation,
    compose,
)

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("rigid maps are exact; pass Fraction, int, or a string like '3/2'")
    return Fraction(x)


def floor_part(x: Fraction) -> int:
    return x.numerator // x.denominator


def fractional_part(x: Fraction) -> Fraction:
    return x - floor_part(x)


class Piece(NamedTuple):
    """One unit interval [start, start+1) and its rigid displacement."""

    start: int
    offset: int
    slope: int = 1


def _collapse(factors: tuple[IntegerPermutation, ...]) -> IntegerPermutation | None:
    if len(factors) == 1:
        return factors[0]
    if all(isinstance(p, TreePermutation) for p in factors):
        labelings = {p.labeling for p in factors}
        if len(labelings) != 1:
            return None
    elif not all(isinstance(p, CyclePermutation) for p in factors):
        return None
    out = factors[0]
    for p in factors[1:]:
        out = compose(out, p)
    return out


class PiecewiseRigidMap:
    """A rigid interval-translation bijection of the line."""

    __slots__ = ("factors", "permutation", "_inverse")

    def __init__(self, permutation: IntegerPermutation):
        self.factors: tuple[IntegerPermutation, ...] = (permutation,)
        self.permutation: IntegerPermutation | None = permutation
        self._inverse: PiecewiseRigidMap | None = None

    @classmethod
    def _composite(cls, factors: tuple[IntegerPermutation, ...], collapse: bool) -> "PiecewiseRigidMap":
        f = object.__new__(cls)
        f.factors = factors
        f.permutation = _collapse(factors) if collapse else None
        f._inverse = None
        return f

    @property
    def is_atomic(self) -> bool:
        return len(self.factors) == 1

    def image_of_integer(self, n: int) -> int:
        if self.permutation is not None:
            return self.permutation.apply(n)
        for p in reversed(self.factors):
            n = p.apply(n)
        return n

    def eval(self, x) -> Fraction:
        x = as_rational(x)
        n = floor_part(x)
        return self.image_of_integer(n) + (x - n)

    __call__ = eval

    def inverse(self) -> "PiecewiseRigidMap":
        if self._inverse is None:
            factors = tuple(p.inverse() for p in reversed(self.factors))
            inv = PiecewiseRigidMap._composite(factors, collapse=self.permutation is not None)
            inv._inverse = self
            self._inverse = inv
        return self._inverse

    def eval_inverse(self, y) -> Fraction:
        return self.inverse().eval(y)

    def pieces_in_window(self, lo: int, hi: int) -> list[Piece]:
        """One piece per integer n in [lo, hi), half-open at hi."""
        return [Piece(n, self.image_of_integer(n) - n) for n in range(lo, hi)]

    def discontinuities_in_window(self, lo: int, hi: int) -> list[int]:
        """Integers n in [lo, hi] where the one-sided limits disagree.

        The left limit at n is image(n-1) + 1 and the value is image(n), so a
        jump happens exactly when those differ.  Between integers the map is
        an exact translation, so this list is the entire discontinuity set in
        the window.
        """
        return [
            n
            for n in range(lo, hi + 1)
            if self.image_of_integer(n) - self.image_of_integer(n - 1) != 1
        ]

    def __repr__(self) -> str:
        inner = ", ".join(repr(p) for p in self.factors)
        return f"PiecewiseRigidMap[{inner}]"


def identity_map() -> PiecewiseRigidMap:
    return PiecewiseRigidMap(CyclePermutation(()))


def compose_maps(f: PiecewiseRigidMap, g: PiecewiseRigidMap, collapse: bool = True) -> PiecewiseRigidMap:
    """The pointwise composition x -> f(g(x)).

    The factor sequence is retained; when the factors share a backing form
    (and, for tree permutations, a labeling) the result also carries the
    collapsed single permutation.
    """
    return PiecewiseRigidMap._composite(f.factors + g.factors, collapse)


@dataclass
class RigidityReport:
    """Outcome of :func:`rigidity_audit`, with witnesses for any failure."""

    window: tuple[int, int]
    samples: int
    #: (x, eval(x), round-trip or colliding x) triples that broke bijectivity.
    bijection_failures: list[tuple] = field(default_factory=list)
    #: (x1, x2, f(x2) - f(x1)) triples with a non-unit within-piece slope.
    slope_failures: list[tuple] = field(default_factory=list)
    #: All discontinuity locations in the window; integers by construction.
    discontinuities: list[int] = field(default_factory=list)

    @property
    def bijective_ok(self) -> bool:
        return not self.bijection_failures

    @property
    def slope_ok(self) -> bool:
        return not self.slope_failures

    @property
    def discontinuities_discrete_ok(self) -> bool:
        # Finitely many integer jumps in a bounded window cannot accumulate.
        return all(isinstance(n, int) for n in self.discontinuities)

    @property
    def passed(self) -> bool:
        return self.bijective_ok and self.slope_ok and self.discontinuities_discrete_ok

    def to_dict(self) -> dict:
        return {
            "window": list(self.window),
            "samples": self.samples,
            "bijective": self.bijective_ok,
            "unit_slope": self.slope_ok,
            "discontinuities": list(self.discontinuities),
            "pass": self.passed,
        }


def _sample_point(rng: Random, lo: int, hi: int) -> Fraction:
    n = rng.randrange(lo, hi)
    den = rng.randrange(2, 1000)
    return n + Fraction(rng.randrange(0, den), den)


def rigidity_audit(
    f: PiecewiseRigidMap, lo: int, hi: int, samples: int, seed: int = 0
) -> RigidityReport:
    """Check bijectivity, unit slope, and discreteness of jumps on [lo, hi].

    Bijectivity is probed on ``samples`` random rational points by an exact
    inverse round-trip plus collision detection of images.  Unit slope is
    probed on random pairs inside a common unit interval, again exactly.
    Discontinuities are enumerated definitionally from the one-sided limits
    at integers rather than estimated numerically.
    """
    if lo >= hi:
        raise ValueError(f"audit window must satisfy lo < hi, got [{lo}, {hi}]")
    rng = Random(seed)
    report = RigidityReport(window=(lo, hi), samples=samples)

    seen: dict[Fraction, Fraction] = {}
    for _ in range(samples):
        x = _sample_point(rng, lo, hi)
        y = f.eval(x)
        back = f.eval_inverse(y)
        if back != x:
            report.bijection_failures.append((x, y, back))
        prior = seen.get(y)
        if prior is not None and prior != x:
            report.bijection_failures.append((x, y, prior))
        seen[y] = x

    for _ in range(samples // 2):
        n = rng.randrange(lo, hi)
        den1 = rng.randrange(2, 1000)
        den2 = rng.randrange(2, 1000)
        x1 = n + Fraction(rng.randrange(0, den1), den1)
        x2 = n + Fraction(rng.randrange(0, den2), den2)
        if f.eval(x2) - f.eval(x1) != x2 - x1:
            report.slope_failures.append((x1, x2, f.eval(x2) - f.eval(x1)))

    report.discontinuities = f.discontinuities_in_window(lo, hi)
    return report
