"""Non-crossing partitions: absolute-order intervals and set-partition models.

Type A partitions live on 1..n; type B partitions live on +-1..+-n, are
closed under negation and have at most one self-negative block, with
crossings judged in the order -1 < -2 < ... < -n < 1 < 2 < ... < n.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import rootposets
from .qseries import GroupType, QPoly
from .signedperm import (
    Perm,
    apply_value,
    check_perm,
    coxeter_element,
    enumerate_group,
    inverse,
    length_s,
    length_t,
    _abs_length_table,
    leq_t,
    mul,
    rev,
    simple_reflection,
    to_cycles,
)

Block = frozenset[int]
SetPartition = frozenset[Block]


def _order_key_b(v: int) -> tuple[int, int]:
    # -1 < -2 < ... < -n < 1 < 2 < ... < n
    return (0, -v) if v < 0 else (1, v)


def check_partition_a(p: SetPartition, n: int) -> None:
    seen: set[int] = set()
    for block in p:
        if not block or seen & block:
            raise ValueError("blocks must be nonempty and disjoint")
        seen |= block
    if seen != set(range(1, n + 1)):
        raise ValueError(f"blocks do not cover 1..{n}")


def check_partition_b(p: SetPartition, n: int) -> None:
    seen: set[int] = set()
    symmetric = 0
    for block in p:
        if not block or seen & block:
            raise ValueError("blocks must be nonempty and disjoint")
        seen |= block
        negated = frozenset(-v for v in block)
        if negated == block:
            symmetric += 1
        elif negated not in p:
            raise ValueError("blocks must close under negation")
    if symmetric > 1:
        raise ValueError("at most one self-negative block is allowed")
    full = set(range(1, n + 1)) | set(range(-n, 0))
    if seen != full:
        raise ValueError(f"blocks do not cover +-1..+-{n}")


def _blocks_cross(x: Block, y: Block, key) -> bool:
    # crossing iff the merged sequence of block labels alternates 4+ times
    merged = sorted([(v, 0) for v in x] + [(v, 1) for v in y], key=lambda t: key(t[0]))
    collapsed = [merged[0][1]]
    for _, who in merged[1:]:
        if who != collapsed[-1]:
            collapsed.append(who)
    return len(collapsed) >= 4


def is_noncrossing_a(p: SetPartition) -> bool:
    blocks = list(p)
    return not any(
        _blocks_cross(blocks[i], blocks[j], int)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
    )


def is_noncrossing_b(p: SetPartition, n: int | None = None) -> bool:
    if n is None:
        n = max(abs(v) for b in p for v in b)
    check_partition_b(p, n)
    blocks = list(p)
    return not any(
        _blocks_cross(blocks[i], blocks[j], _order_key_b)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
    )


def _lt(t: GroupType):
    if t.family == "D":
        table = _abs_length_table("D", t.n)
        return table.__getitem__
    return length_t


def nc_elements(t: GroupType, c: Perm | None = None) -> list[Perm]:
    """The interval [1, c] in absolute order; defaults to the standard c."""
    if c is None:
        c = coxeter_element(t.family, t.n, "nc" if t.family != "D" else "sorting")[0]
    lt = _lt(t)
    if lt(c) != t.rank:
        raise ValueError(f"{c!r} is not a Coxeter element of {t}")
    return [w for w in enumerate_group(t.family, t.n) if leq_t(w, c, t.family)]


def rev_nc(t: GroupType, c: Perm | None = None) -> list[Perm]:
    """The image of the non-crossing interval under the rev involution."""
    return [rev(w) for w in nc_elements(t, c)]


def nc_perm_test_a(p: Perm) -> bool:
    """Below the long cycle iff all cycles increase and pairwise do not cross."""
    check_perm(p, "A")
    cycles = to_cycles(p)
    if any(list(c) != sorted(c) for c in cycles):
        return False
    blocks = [frozenset(c) for c in cycles]
    return not any(
        _blocks_cross(blocks[i], blocks[j], int)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
    )


def partition_to_perm_a(p: SetPartition, n: int) -> Perm:
    """Blocks become increasing cycles; requires a non-crossing input."""
    check_partition_a(p, n)
    if not is_noncrossing_a(p):
        raise ValueError("partition is crossing")
    out = list(range(1, n + 1))
    for block in p:
        vals = sorted(block)
        for a, b in zip(vals, vals[1:] + vals[:1]):
            out[a - 1] = b
    return tuple(out)


def perm_to_partition_a(p: Perm) -> SetPartition:
    check_perm(p, "A")
    if not nc_perm_test_a(p):
        raise ValueError("permutation is not non-crossing")
    return frozenset(
        frozenset(orbit) for orbit in _orbits(p, range(1, len(p) + 1))
    )


def partition_to_perm_b(p: SetPartition, n: int) -> Perm:
    """Blocks ordered by -1 < -2 < ... < -n < 1 < ... < n become cycles."""
    if not is_noncrossing_b(p, n):
        raise ValueError("partition is crossing")
    send: dict[int, int] = {}
    for block in p:
        vals = sorted(block, key=_order_key_b)
        for a, b in zip(vals, vals[1:] + vals[:1]):
            send[a] = b
    if any(send[-v] != -w for v, w in send.items()):
        raise ValueError("blocks are inconsistent under negation")
    perm = tuple(send[i] for i in range(1, n + 1))
    check_perm(perm)
    return perm


def perm_to_partition_b(p: Perm) -> SetPartition:
    check_perm(p)
    n = len(p)
    blocks = frozenset(
        frozenset(orbit)
        for orbit in _orbits(p, list(range(1, n + 1)) + list(range(-n, 0)))
    )
    check_partition_b(blocks, n)
    return blocks


def _orbits(p: Perm, values) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for start in values:
        if start in seen:
            continue
        orbit = {start}
        v = apply_value(p, start)
        while v != start:
            orbit.add(v)
            v = apply_value(p, v)
        seen |= orbit
        out.append(orbit)
    return out


@lru_cache(maxsize=None)
def coxeter_elements_d4() -> tuple[Perm, ...]:
    """The conjugacy class of the standard Coxeter element of D_4."""
    c0 = coxeter_element("D", 4, "sorting")[0]
    gens = [simple_reflection(i, 4, "D") for i in range(4)]
    cls = {c0}
    frontier = [c0]
    while frontier:
        w = frontier.pop()
        for s in gens:
            u = mul(mul(s, w), s)
            if u not in cls:
                cls.add(u)
                frontier.append(u)
    # conjugacy class size must match the orbit-stabilizer count
    group = list(enumerate_group("D", 4))
    centralizer = sum(1 for g in group if mul(g, c0) == mul(c0, g))
    if len(cls) * centralizer != len(group):
        raise AssertionError("conjugacy class size mismatch")
    return tuple(sorted(cls))


def d4_counterexample() -> dict:
    """Check that neither family of rank-4 type-D identities can hold.

    For every Coxeter element c of D_4 the ideal-size polynomial differs
    from the length generating function over rev([1, c]); the same holds
    over the sortable elements for every ordering of the simple
    reflections, although all counts agree at q = 1.
    """
    from .sortable import is_c_sortable

    t = GroupType("D", 4)
    cat_poly = rootposets.cat_q(t)
    table = _abs_length_table("D", 4)
    group = list(enumerate_group("D", 4))
    report = {"identity": "d4-counterexample", "rank": 4, "checked": 0, "failures": []}
    cardinality = cat_poly(1)

    for c in coxeter_elements_d4():
        report["checked"] += 1
        interval = [
            w for w in group if table[w] + table[mul(inverse(w), c)] == table[c]
        ]
        poly = _length_poly([rev(w) for w in interval])
        if poly == cat_poly:
            report["failures"].append({"check": "nc-side-equality", "c": repr(c)})
        if poly(1) != cardinality or len(interval) != cardinality:
            report["failures"].append({"check": "nc-side-cardinality", "c": repr(c)})

    for word in itertools.permutations(range(4)):
        report["checked"] += 1
        sortables = [w for w in group if is_c_sortable(w, word, "D")]
        poly = _length_poly(sortables)
        if poly == cat_poly:
            report["failures"].append({"check": "sortable-side-equality", "word": repr(word)})
        if len(sortables) != cardinality:
            report["failures"].append({"check": "sortable-side-cardinality", "word": repr(word)})

    return report


def _length_poly(elements) -> QPoly:
    vals = [length_s(w, "D") for w in elements]
    out = [0] * (max(vals, default=0) + 1)
    for v in vals:
        out[v] += 1
    return QPoly(out)


def partition_to_json(p: SetPartition) -> list[list[int]]:
    return sorted((sorted(b) for b in p), key=lambda b: b[0])


def partition_from_json(data) -> SetPartition:
    return frozenset(frozenset(int(v) for v in b) for b in data)
