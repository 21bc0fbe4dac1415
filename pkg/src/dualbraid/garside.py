"""Greedy normal form, equality, divisibility and tails for band words.

Equality of band words is decided through the left-greedy normal form
over non-crossing partitions: two words represent the same monoid
element exactly when their factor sequences coincide.  Left division is
read off the first factor of the normal form; right division is
obtained from left division through the flip anti-automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ncp
from .ncp import NonCrossingPartition
from .words import BandLetter, BandWord, flip_reverse


@dataclass(frozen=True)
class GreedyNF:
    """Left-greedy factorization; the empty factor list is the trivial braid."""

    n: int
    factors: tuple[NonCrossingPartition, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def word(self) -> BandWord:
        out = BandWord(self.n)
        for factor in self.factors:
            out = out * ncp.ncp_word(factor)
        return out


def _normalize(n: int, factors: list[NonCrossingPartition]) -> tuple[NonCrossingPartition, ...]:
    # Bubble passes: slide the movable part of each factor into its left
    # neighbour until every adjacent pair is left-weighted.
    factors = [f for f in factors if not f.is_trivial()]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            head, tail = factors[i], factors[i + 1]
            slide = ncp.meet(ncp.right_complement(head), tail)
            if not slide.is_trivial():
                factors[i] = ncp.simple_product(head, slide)
                factors[i + 1] = ncp.left_quotient(slide, tail)
                changed = True
        factors = [f for f in factors if not f.is_trivial()]
    return tuple(factors)


def gnf(w: BandWord) -> GreedyNF:
    """The unique left-greedy normal form of the element represented by w."""
    factors = [ncp.letter_ncp(letter, w.n) for letter in w.letters]
    return GreedyNF(w.n, _normalize(w.n, factors))


def equal(u: BandWord, v: BandWord) -> bool:
    """True iff u and v represent the same monoid element."""
    if u.n != v.n:
        raise ValueError("strand count mismatch")
    return gnf(u).factors == gnf(v).factors


def canonical_key(w: BandWord) -> tuple:
    """Hashable identifier of the monoid element represented by w."""
    return (w.n, tuple(f.blocks for f in gnf(w).factors))


def left_divides(g: BandWord, w: BandWord) -> bool:
    """True iff there is a positive u with w = g * u."""
    return _left_quotient_or_none(w, g) is not None


def left_quotient(w: BandWord, g: BandWord) -> BandWord:
    """The positive u with w = g * u; raises if g does not left-divide w."""
    quotient = _left_quotient_or_none(w, g)
    if quotient is None:
        raise ValueError("not a left divisor")
    return quotient


def _left_quotient_or_none(w: BandWord, g: BandWord) -> BandWord | None:
    if w.n != g.n:
        raise ValueError("strand count mismatch")
    factors = list(gnf(w).factors)
    for letter in g.letters:
        simple = ncp.letter_ncp(letter, w.n)
        if not factors:
            return None
        # The first factor is the maximal simple left divisor, so a
        # generator divides the element iff it divides that factor.
        if not ncp.refines(simple, factors[0]):
            return None
        factors[0] = ncp.left_quotient(simple, factors[0])
        factors = list(_normalize(w.n, factors))
    return GreedyNF(w.n, tuple(factors)).word()


def right_divides(g: BandWord, w: BandWord) -> bool:
    """True iff there is a positive u with w = u * g."""
    if w.n != g.n:
        raise ValueError("strand count mismatch")
    return left_divides(flip_reverse(g), flip_reverse(w))


def right_quotient(w: BandWord, g: BandWord) -> BandWord:
    """The positive u with w = u * g; raises if g does not right-divide w."""
    return flip_reverse(left_quotient(flip_reverse(w), flip_reverse(g)))


def tail(w: BandWord, m: int) -> BandWord:
    """Maximal right divisor of w whose letters all satisfy q <= m.

    Greedy fixpoint: the right divisors lying in the m-strand submonoid
    are closed under right lcm, so extracting any dividing generator and
    recursing reaches the maximal one.
    """
    if not (2 <= m < w.n):
        raise ValueError("m must satisfy 2 <= m < n")
    generators = [
        BandLetter(p, q) for q in range(2, m + 1) for p in range(1, q)
    ]
    remainder = w
    collected: list[BandLetter] = []
    progress = True
    while progress:
        progress = False
        for letter in generators:
            g = BandWord(w.n, (letter,))
            if right_divides(g, remainder):
                remainder = right_quotient(remainder, g)
                collected.insert(0, letter)
                progress = True
                break
    return BandWord(w.n, tuple(collected))
