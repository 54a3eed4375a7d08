"""Root posets of types A, B and D; order ideals and their Dyck-path dictionary.

Positive roots are tagged tuples: ``("diff", a, b)`` is e_b - e_a with
a < b, ``("short", b)`` is e_b (type B only), and ``("sum", a, b)`` is
e_a + e_b with a < b (types B and D).  The covering relation is
"difference is a simple root"; order ideals under it are the non-nesting
partitions of the group.
"""

from __future__ import annotations

import re
from functools import lru_cache

from . import paths
from .qseries import GroupType, QPoly, SizeGuardError

Root = tuple
Cell = tuple[int, int]

IDEAL_GUARDS = {"A": 9, "B": 6, "D": 5}


def diff(a: int, b: int) -> Root:
    return ("diff", a, b)


def short(b: int) -> Root:
    return ("short", b)


def sum_root(a: int, b: int) -> Root:
    return ("sum", a, b)


def root_str(r: Root) -> str:
    if r[0] == "diff":
        return f"e{r[2]}-e{r[1]}"
    if r[0] == "short":
        return f"e{r[1]}"
    return f"e{r[1]}+e{r[2]}"


_ROOT_RE = re.compile(r"^e(\d+)([+-]e(\d+))?$")


def parse_root(s: str) -> Root:
    m = _ROOT_RE.match(s.replace(" ", ""))
    if not m:
        raise ValueError(f"bad root string {s!r}")
    x = int(m.group(1))
    if m.group(2) is None:
        return short(x)
    y = int(m.group(3))
    if m.group(2).startswith("+"):
        return sum_root(min(x, y), max(x, y))
    return diff(y, x)


def root_vector(r: Root, n: int) -> tuple[int, ...]:
    v = [0] * n
    if r[0] == "diff":
        v[r[1] - 1] -= 1
        v[r[2] - 1] += 1
    elif r[0] == "short":
        v[r[1] - 1] += 1
    else:
        v[r[1] - 1] += 1
        v[r[2] - 1] += 1
    return tuple(v)


def root_height(r: Root, family: str) -> int:
    if r[0] == "diff":
        return r[2] - r[1]
    if r[0] == "short":
        return r[1]
    return r[1] + r[2] - (2 if family == "D" else 0)


def positive_roots(t: GroupType) -> list[Root]:
    """All positive roots, sorted by height then serialized form."""
    n = t.n
    roots: list[Root] = [diff(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]
    if t.family == "B":
        roots += [short(b) for b in range(1, n + 1)]
    if t.family in ("B", "D"):
        roots += [sum_root(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]
    roots.sort(key=lambda r: (root_height(r, t.family), root_str(r)))
    return roots


def simple_roots(t: GroupType) -> list[Root]:
    n = t.n
    simples = [diff(i, i + 1) for i in range(1, n)]
    if t.family == "B":
        simples.append(short(1))
    if t.family == "D":
        simples.append(sum_root(1, 2))
    return simples


class RootPoset:
    """The poset of positive roots under the simple-difference covering."""

    def __init__(self, t: GroupType):
        if t.family not in ("A", "B", "D"):
            raise ValueError(f"no root poset for family {t.family!r}")
        self.type = t
        self.roots = positive_roots(t)
        self.index = {r: i for i, r in enumerate(self.roots)}
        n = t.n
        vecs = [root_vector(r, n) for r in self.roots]
        simple_vecs = {root_vector(s, n) for s in simple_roots(t)}
        m = len(self.roots)
        self.lower_covers: list[list[int]] = [[] for _ in range(m)]
        self.upper_covers: list[list[int]] = [[] for _ in range(m)]
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                d = tuple(vecs[j][k] - vecs[i][k] for k in range(n))
                if d in simple_vecs:
                    # roots[j] covers roots[i]
                    self.lower_covers[j].append(i)
                    self.upper_covers[i].append(j)
        self._below = [frozenset(self._descend(i)) for i in range(m)]

    def _descend(self, i: int) -> set[int]:
        out = {i}
        stack = [i]
        while stack:
            for k in self.lower_covers[stack.pop()]:
                if k not in out:
                    out.add(k)
                    stack.append(k)
        return out

    def leq(self, a: Root, b: Root) -> bool:
        return self.index[a] in self._below[self.index[b]]

    def down_set(self, r: Root) -> frozenset[Root]:
        return frozenset(self.roots[k] for k in self._below[self.index[r]])

    def is_ideal(self, rs: frozenset[Root]) -> bool:
        idx = {self.index[r] for r in rs}
        return all(set(self.lower_covers[i]) <= idx for i in idx)

    def ideal_from_antichain(self, antichain) -> frozenset[Root]:
        out: set[Root] = set()
        for r in antichain:
            out |= self.down_set(r)
        return frozenset(out)

    def maximal_elements(self, ideal: frozenset[Root]) -> list[Root]:
        idx = {self.index[r] for r in ideal}
        return [
            self.roots[i]
            for i in sorted(idx)
            if not any(j in idx for j in self.upper_covers[i])
        ]

    def is_antichain(self, rs) -> bool:
        rs = list(rs)
        return all(
            not self.leq(a, b) and not self.leq(b, a)
            for i, a in enumerate(rs)
            for b in rs[i + 1 :]
        )

    def ideals(self, unsafe: bool = False) -> list[frozenset[Root]]:
        """All order ideals, by backtracking along a height linear extension."""
        guard = IDEAL_GUARDS[self.type.family]
        if self.type.rank > guard and not unsafe:
            raise SizeGuardError(
                f"ideal enumeration guarded at rank {guard} for type {self.type.family}"
            )
        m = len(self.roots)
        lower = self.lower_covers  # roots are already height-sorted
        out: list[frozenset[Root]] = []
        chosen: list[int] = []
        included = bytearray(m)

        def rec(k: int):
            if k == m:
                out.append(frozenset(self.roots[i] for i in chosen))
                return
            rec(k + 1)
            if all(included[j] for j in lower[k]):
                included[k] = 1
                chosen.append(k)
                rec(k + 1)
                chosen.pop()
                included[k] = 0

        rec(0)
        return out


@lru_cache(maxsize=None)
def root_poset(t: GroupType) -> RootPoset:
    return RootPoset(t)


def ideals(t: GroupType, unsafe: bool = False) -> list[frozenset[Root]]:
    return root_poset(t).ideals(unsafe=unsafe)


def cat_q(t: GroupType, unsafe: bool = False) -> QPoly:
    """Generating polynomial of ideal sizes; the q-Catalan number by areas."""
    sizes = [len(i) for i in ideals(t, unsafe=unsafe)]
    counts = [0] * (max(sizes, default=0) + 1)
    for s in sizes:
        counts[s] += 1
    return QPoly(counts)


def cell_of_root_a(r: Root, n: int) -> Cell:
    if r[0] != "diff":
        raise ValueError("type A has only difference roots")
    return (n - r[2], n - r[1])


def root_of_cell_a(cell: Cell, n: int) -> Root:
    i, j = cell
    if not 0 <= i < j < n:
        raise ValueError(f"invalid type-A cell {cell!r}")
    return diff(n - j, n - i)


def cell_of_root_b(r: Root, n: int) -> Cell:
    """Planar coordinates of a type-B root: column n-b, diagonal offset k.

    Writing b for the larger index of the root and k for its offset
    (b - a for differences, b for the short root e_b, a + b for sums) the
    cell is (n - b, n - b + k).
    """
    if r[0] == "diff":
        b, k = r[2], r[2] - r[1]
    elif r[0] == "short":
        b, k = r[1], r[1]
    else:
        b, k = r[2], r[1] + r[2]
    return (n - b, n - b + k)


def root_of_cell_b(cell: Cell, n: int) -> Root:
    i, j = cell
    if not (0 <= i < j <= 2 * n - 1 - i):
        raise ValueError(f"invalid type-B cell {cell!r}")
    b, k = n - i, j - i
    if k < b:
        return diff(b - k, b)
    if k == b:
        return short(b)
    return sum_root(k - b, b)


def ideal_cells(t: GroupType, ideal: frozenset[Root]) -> frozenset[Cell]:
    n = t.n
    if t.family == "A":
        return frozenset(cell_of_root_a(r, n) for r in ideal)
    if t.family == "B":
        return frozenset(cell_of_root_b(r, n) for r in ideal)
    raise ValueError("no planar cells for type D")


def ideal_from_cells(t: GroupType, cells: frozenset[Cell]) -> frozenset[Root]:
    n = t.n
    if t.family == "A":
        return frozenset(root_of_cell_a(c, n) for c in cells)
    if t.family == "B":
        return frozenset(root_of_cell_b(c, n) for c in cells)
    raise ValueError("no planar cells for type D")


def ideal_to_dyck(t: GroupType, ideal: frozenset[Root]) -> str:
    """The Dyck word whose cell set realizes the ideal; area equals |ideal|."""
    cells = ideal_cells(t, ideal)
    if t.family == "A":
        return paths.path_a_from_cells(cells, t.n)
    return paths.path_b_from_cells(cells, t.n)


def dyck_to_ideal(t: GroupType, word: str) -> frozenset[Root]:
    if t.family == "A":
        return ideal_from_cells(t, paths.cells_a(word))
    return ideal_from_cells(t, paths.cells_b(word))


def ideal_des(t: GroupType, ideal: frozenset[Root]) -> set[int]:
    return paths.descent_set(ideal_to_dyck(t, ideal))


def ideal_maj(t: GroupType, ideal: frozenset[Root]) -> int:
    word = ideal_to_dyck(t, ideal)
    return paths.maj_a(word) if t.family == "A" else paths.maj_b(word)


def lift_delta(t: GroupType, ideal: frozenset[Root]) -> frozenset[Root]:
    """Embed an ideal one rank up by shifting its cells and filling the
    bottom row (type A) or the bottom two rows (type B)."""
    if t.family not in ("A", "B"):
        raise ValueError("lift is defined for types A and B")
    big = GroupType(t.family, t.rank + 1)
    n = big.n
    shift = 1 if t.family == "A" else 2
    cells = {(i, j + shift) for i, j in ideal_cells(t, ideal)}
    if t.family == "A":
        cells |= {(i, i + 1) for i in range(n - 1)}
    else:
        cells |= {(i, i + 1) for i in range(n)}
        cells |= {(i, i + 2) for i in range(n - 1)}
    out = ideal_from_cells(big, frozenset(cells))
    if not root_poset(big).is_ideal(out):
        raise AssertionError("lift produced a non-ideal")
    return out


def ideal_to_arc_partition_a(t: GroupType, ideal: frozenset[Root]) -> frozenset[frozenset[int]]:
    """The non-nesting set partition whose arcs are the maximal roots."""
    if t.family != "A":
        raise ValueError("arc partitions here are type A only")
    n = t.n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in root_poset(t).maximal_elements(ideal):
        ra, rb = find(r[1]), find(r[2])
        parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, set[int]] = {}
    for x in range(1, n + 1):
        blocks.setdefault(find(x), set()).add(x)
    return frozenset(frozenset(b) for b in blocks.values())


def ideal_str(ideal: frozenset[Root]) -> str:
    return "[" + ",".join(f'"{s}"' for s in sorted(root_str(r) for r in ideal)) + "]"


def ideal_to_json(ideal: frozenset[Root]) -> dict:
    return {"roots": sorted(root_str(r) for r in ideal)}


def ideal_from_json(data: dict) -> frozenset[Root]:
    return frozenset(parse_root(s) for s in data["roots"])
