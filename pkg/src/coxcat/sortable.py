"""Sorting words and sortable elements for a fixed Coxeter-element word.

The sorting word of w is the greedy (equivalently, lexicographically
first) reduced subword of the infinite repetition c|c|c|... ; w is
sortable when the letter sets of consecutive factors weakly decrease
under inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qseries import SizeGuardError
from .signedperm import (
    Perm,
    check_perm,
    enumerate_group,
    length_s,
)

SORTABLE_GUARDS = {"A": 8, "B": 5, "D": 4}


@dataclass(frozen=True)
class SortingWord:
    """A reduced word chopped into factors by the passes through c."""

    factors: tuple[tuple[int, ...], ...]

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(l for f in self.factors for l in f)

    def factor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f) for f in self.factors)

    def is_sortable_chain(self) -> bool:
        sets = self.factor_sets()
        return all(sets[i] >= sets[i + 1] for i in range(len(sets) - 1))

    def __len__(self) -> int:
        return sum(len(f) for f in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "e"
        return " | ".join(" ".join(f"s{l}" for l in f) for f in self.factors)

    @classmethod
    def parse(cls, s: str) -> "SortingWord":
        s = s.strip()
        if s in ("", "e"):
            return cls(())
        factors = []
        for chunk in s.split("|"):
            factors.append(tuple(int(tok[1:]) for tok in chunk.split()))
        return cls(tuple(factors))


def _check_c_word(c_word, n: int, family: str):
    expect = set(range(1, n)) if family == "A" else set(range(0, n))
    if list(c_word) and (set(c_word) != expect or len(c_word) != len(expect)):
        raise ValueError(f"not a Coxeter word for {family}{n}: {c_word!r}")
    if not list(c_word) and expect:
        raise ValueError(f"not a Coxeter word for {family}{n}: {c_word!r}")


def c_sorting_word(w: Perm, c_word, family: str) -> SortingWord:
    """Greedy scan of c|c|c|...: consume a letter iff it is a left descent.

    The inverse of the shrinking remainder is kept as the array of signed
    positions of each value, which makes every descent test and update O(1).
    """
    n = len(w)
    check_perm(w, family)
    _check_c_word(c_word, n, family)
    remaining = length_s(w, family)
    # pos[v-1] = signed position p with w(p) = v
    pos = [0] * n
    for p, v in enumerate(w, start=1):
        if v > 0:
            pos[v - 1] = p
        else:
            pos[-v - 1] = -p
    factors = []
    while remaining:
        factor = []
        for s in c_word:
            if s == 0:
                if family == "B":
                    descent = pos[0] < 0
                else:
                    descent = pos[0] + pos[1] < 0
            else:
                descent = pos[s - 1] > pos[s]
            if descent:
                if s == 0:
                    if family == "B":
                        pos[0] = -pos[0]
                    else:
                        pos[0], pos[1] = -pos[1], -pos[0]
                else:
                    pos[s - 1], pos[s] = pos[s], pos[s - 1]
                factor.append(s)
                remaining -= 1
                if not remaining:
                    break
        factors.append(tuple(factor))
    return SortingWord(tuple(factors))


def is_c_sortable(w: Perm, c_word, family: str) -> bool:
    return c_sorting_word(w, c_word, family).is_sortable_chain()


def enumerate_sortables(family: str, n: int, c_word=None, unsafe: bool = False) -> list[Perm]:
    """All sortable elements for the given Coxeter word, by filtering the group."""
    guard = SORTABLE_GUARDS[family]
    rank = n - 1 if family == "A" else n
    if rank > guard and not unsafe:
        raise SizeGuardError(
            f"sortable enumeration guarded at rank {guard} for type {family}"
        )
    if c_word is None:
        c_word = tuple(range(n - 1, 0, -1)) if family == "A" else tuple(range(n - 1, -1, -1))
    return [w for w in enumerate_group(family, n) if is_c_sortable(w, c_word, family)]


def avoids_231(p: Perm) -> bool:
    """No indices i < j < k with p[k] < p[i] < p[j]."""
    check_perm(p, "A")
    n = len(p)
    # best[j]: the largest value playing the "2" before position j, given "3" = p[j]
    best = 0
    for j in range(1, n - 1):
        for i in range(j):
            if p[i] < p[j] and p[i] > best:
                best = p[i]
        for k in range(j + 1, n):
            if p[k] < best:
                return False
    return True
