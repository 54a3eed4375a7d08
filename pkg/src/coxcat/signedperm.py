"""Permutations and signed permutations with their classical statistics.

Elements are tuples of nonzero integers (one-line notation) whose absolute
values form a permutation of 1..n; the group law extends by sigma(-i) =
-sigma(i).  Type A restricts to all-positive entries, type D to an even
number of negative ones.  Composition is (p * q)(i) = p(q(i)), so simple
reflections act on positions under right multiplication.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache

from .qseries import SizeGuardError

Perm = tuple[int, ...]
Cycle = tuple[int, ...]

BFS_ORDER_GUARD = 50_000

_FACTORIAL = [1]
for _i in range(1, 16):
    _FACTORIAL.append(_FACTORIAL[-1] * _i)


def check_perm(p: Perm, family: str = "B") -> None:
    n = len(p)
    if sorted(abs(v) for v in p) != list(range(1, n + 1)) or 0 in p:
        raise ValueError(f"not a signed permutation: {p!r}")
    if family == "A" and any(v < 0 for v in p):
        raise ValueError(f"type A forbids negative entries: {p!r}")
    if family == "D" and sum(1 for v in p if v < 0) % 2:
        raise ValueError(f"type D needs an even number of negatives: {p!r}")


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def apply_value(p: Perm, v: int) -> int:
    return p[v - 1] if v > 0 else -p[-v - 1]


def mul(p: Perm, q: Perm) -> Perm:
    """Composition p after q: (p * q)(i) = p(q(i))."""
    return tuple(apply_value(p, v) for v in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for pos, v in enumerate(p, start=1):
        if v > 0:
            out[v - 1] = pos
        else:
            out[-v - 1] = -pos
    return tuple(out)


def inv_word(w) -> int:
    """Number of pairs i < j with w[i] > w[j], for any integer sequence."""
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def neg_set(p: Perm) -> set[int]:
    return {i for i, v in enumerate(p, start=1) if v < 0}


def neg(p: Perm) -> int:
    return sum(1 for v in p if v < 0)


def length_s(p: Perm, family: str) -> int:
    """Coxeter length: inversions, corrected by the negative entries in B/D."""
    check_perm(p, family)
    base = inv_word(p)
    if family == "A":
        return base
    drop = -sum(v for v in p if v < 0)
    if family == "B":
        return base + drop
    if family == "D":
        return base + drop - neg(p)
    raise ValueError(f"unknown family {family!r}")


def descent_set_word(w) -> set[int]:
    """1-indexed descent positions of an integer sequence."""
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def maj_word(w) -> int:
    return sum(descent_set_word(w))


def des_set(p: Perm) -> set[int]:
    return descent_set_word(p)


def des(p: Perm) -> int:
    return len(descent_set_word(p))


def maj(p: Perm, family: str) -> int:
    """Major index: A uses the one-line word; B doubles it and adds neg;
    D subtracts the negative entries and their count."""
    check_perm(p, family)
    base = maj_word(p)
    if family == "A":
        return base
    if family == "B":
        return 2 * base + neg(p)
    if family == "D":
        return base - sum(v for v in p if v < 0) - neg(p)
    raise ValueError(f"unknown family {family!r}")


def ides_set(p: Perm) -> set[int]:
    return des_set(inverse(p))


def ides(p: Perm) -> int:
    return des(inverse(p))


def imaj(p: Perm, family: str) -> int:
    return maj(inverse(p), family)


def rev(p: Perm) -> Perm:
    """Rewrite the negative values, in place, in reversed relative order.

    >>> rev((2, -4, 3, -1))
    (2, -1, 3, -4)
    """
    negatives = [v for v in p if v < 0]
    negatives.reverse()
    it = iter(negatives)
    return tuple(next(it) if v < 0 else v for v in p)


def to_cycles(p: Perm) -> tuple[Cycle, ...]:
    """Cycle notation; a trailing entry -first marks a sign-crossing cycle.

    Cycles are sorted by minimal absolute entry and start at that entry
    with positive sign; fixed points are omitted.

    >>> to_cycles((4, 2, 6, 5, 1, 3))
    ((1, 4, 5), (3, 6))
    """
    check_perm(p)
    seen = set()
    cycles = []
    for m in range(1, len(p) + 1):
        if m in seen or apply_value(p, m) == m:
            continue
        orbit = [m]
        v = apply_value(p, m)
        while v != m and v != -m:
            orbit.append(v)
            seen.add(abs(v))
            v = apply_value(p, v)
        seen.add(m)
        if v == -m:
            orbit.append(-m)
        cycles.append(tuple(orbit))
    return tuple(cycles)


def from_cycles(cycles, n: int) -> Perm:
    """Build a signed permutation from disjoint cycles on 1..n."""
    out = list(range(1, n + 1))
    used: set[int] = set()

    def send(a: int, b: int):
        out[abs(a) - 1] = b if a > 0 else -b

    for cyc in cycles:
        if len(cyc) < 2:
            raise ValueError(f"cycle too short: {cyc!r}")
        body = cyc[:-1] if cyc[-1] == -cyc[0] else cyc
        absvals = [abs(v) for v in body]
        if len(set(absvals)) != len(absvals):
            raise ValueError(f"repeated entry in cycle {cyc!r}")
        if used & set(absvals):
            raise ValueError("cycles are not disjoint")
        if any(not 1 <= a <= n for a in absvals):
            raise ValueError(f"entry out of range in cycle {cyc!r}")
        used.update(absvals)
        for a, b in zip(cyc, cyc[1:]):
            send(a, b)
        if cyc[-1] != -cyc[0]:
            send(cyc[-1], cyc[0])
    return tuple(out)


def cycles_str(cycles) -> str:
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(v) for v in c) + ")" for c in cycles)


def parse_cycles(s: str) -> tuple[Cycle, ...]:
    s = s.replace(" ", "")
    if s in ("", "()"):
        return ()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad cycle string {s!r}")
    out = []
    for chunk in s[1:-1].split(")("):
        out.append(tuple(int(v) for v in chunk.split(",") if v))
    return tuple(out)


def length_t(p: Perm) -> int:
    """Absolute (reflection) length via the cycle decomposition; types A and B."""
    return sum(len(c) - 1 for c in to_cycles(p))


def reflections(family: str, n: int) -> list[Perm]:
    """All reflections: transpositions, sign-swapping pairs, and (B only) sign flips."""
    out = []
    ident = list(range(1, n + 1))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            t = ident.copy()
            t[i - 1], t[j - 1] = j, i
            out.append(tuple(t))
            if family in ("B", "D"):
                t = ident.copy()
                t[i - 1], t[j - 1] = -j, -i
                out.append(tuple(t))
    if family == "B":
        for i in range(1, n + 1):
            t = ident.copy()
            t[i - 1] = -i
            out.append(tuple(t))
    return out


def group_order(family: str, n: int) -> int:
    if family == "A":
        return _FACTORIAL[n]
    if family == "B":
        return _FACTORIAL[n] << n
    if family == "D":
        return _FACTORIAL[n] << (n - 1)
    raise ValueError(f"unknown family {family!r}")


def enumerate_group(family: str, n: int):
    """Iterate the whole group, deterministically."""
    if family == "A":
        yield from itertools.permutations(range(1, n + 1))
        return
    for base in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            if family == "D" and mask.bit_count() % 2:
                continue
            yield tuple(-v if mask >> i & 1 else v for i, v in enumerate(base))


@lru_cache(maxsize=None)
def _abs_length_table(family: str, n: int) -> dict[Perm, int]:
    if group_order(family, n) > BFS_ORDER_GUARD:
        raise SizeGuardError(f"group {family}{n} too large for reflection BFS")
    gens = reflections(family, n)
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        d = dist[w] + 1
        for t in gens:
            u = mul(w, t)
            if u not in dist:
                dist[u] = d
                queue.append(u)
    return dist


def length_t_bfs(p: Perm, family: str) -> int:
    """Reflection length as graph distance in the full-reflection Cayley graph."""
    check_perm(p, family)
    return _abs_length_table(family, len(p))[p]


def leq_t(u: Perm, v: Perm, family: str) -> bool:
    """Absolute order: l_T(v) == l_T(u) + l_T(u^-1 v)."""
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    w = mul(inverse(u), v)
    if family == "D":
        table = _abs_length_table("D", len(u))
        return table[v] == table[u] + table[w]
    return length_t(v) == length_t(u) + length_t(w)


def simple_reflection(i: int, n: int, family: str = "B") -> Perm:
    """s_i for i >= 1 swaps positions i, i+1; s_0 is the type-specific extra one."""
    line = list(range(1, n + 1))
    if i == 0:
        if family == "B":
            line[0] = -1
        elif family == "D":
            line[0], line[1] = -2, -1
        else:
            raise ValueError("type A has no s_0")
    else:
        line[i - 1], line[i] = line[i], line[i - 1]
    return tuple(line)


def word_to_perm(word, n: int, family: str = "B") -> Perm:
    """Evaluate a word in simple reflections by right multiplication."""
    line = list(range(1, n + 1))
    for i in word:
        if i == 0:
            if family == "B":
                line[0] = -line[0]
            elif family == "D":
                line[0], line[1] = -line[1], -line[0]
            else:
                raise ValueError("type A has no s_0")
        else:
            line[i - 1], line[i] = line[i], line[i - 1]
    return tuple(line)


def coxeter_element(family: str, n: int, variant: str = "sorting") -> tuple[Perm, tuple[int, ...]]:
    """A Coxeter element together with its defining reduced word.

    ``variant="sorting"`` gives the word s_{n-1} ... s_1 (type A) or
    s_{n-1} ... s_1 s_0 (types B/D) used for sorting words; ``variant="nc"``
    gives the cycles (1,2,...,n) and (1,2,...,n,-1) used for the
    non-crossing partition interval.
    """
    if variant in ("sorting", "long-cycle-down"):
        if family == "A":
            word = tuple(range(n - 1, 0, -1))
        else:
            word = tuple(range(n - 1, -1, -1))
    elif variant in ("nc", "standard"):
        if family == "A":
            word = tuple(range(1, n))
        elif family == "B":
            word = tuple(range(0, n))
        else:
            raise ValueError("no standard nc variant for type D")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return word_to_perm(word, n, family), word


def to_json(p: Perm) -> list[int]:
    return list(p)


def from_json(data) -> Perm:
    p = tuple(int(v) for v in data)
    check_perm(p)
    return p
