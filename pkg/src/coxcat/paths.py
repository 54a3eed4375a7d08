"""Dyck paths of types A and B with their area and major-index statistics.

A path is a plain string over the alphabet {"N", "E"} (north/east steps).
Type A paths are balanced words of length 2n weakly above the diagonal;
type B paths have 2n steps and every prefix weakly above the diagonal,
with a free endpoint.  Both identify with staircase-closed sets of cells
``(i, j)`` (0-indexed column, row) lying below the path.
"""

from __future__ import annotations

from .qseries import QPoly, SizeGuardError

Cell = tuple[int, int]

AREA_GUARD_A = 12
AREA_GUARD_B = 8


def is_dyck_a(word: str) -> bool:
    """Balanced N/E word whose prefixes never have more E's than N's."""
    n2 = len(word)
    if n2 % 2 or any(c not in "NE" for c in word):
        return False
    lvl = 0
    for c in word:
        lvl += 1 if c == "N" else -1
        if lvl < 0:
            return False
    return lvl == 0


def is_dyck_b(word: str) -> bool:
    """N/E word of even length whose prefixes never have more E's than N's."""
    if len(word) % 2 or any(c not in "NE" for c in word):
        return False
    lvl = 0
    for c in word:
        lvl += 1 if c == "N" else -1
        if lvl < 0:
            return False
    return True


def _check(word: str, family: str) -> int:
    ok = is_dyck_a(word) if family == "A" else is_dyck_b(word)
    if not ok:
        raise ValueError(f"not a type-{family} Dyck word: {word!r}")
    return len(word) // 2


def enumerate_a(n: int) -> list[str]:
    """All type-A Dyck words of semilength n, in lexicographic order (E < N)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[str] = []

    def rec(prefix: list[str], norths: int, easts: int):
        if norths + easts == 2 * n:
            out.append("".join(prefix))
            return
        if easts < norths:
            prefix.append("E")
            rec(prefix, norths, easts + 1)
            prefix.pop()
        if norths < n:
            prefix.append("N")
            rec(prefix, norths + 1, easts)
            prefix.pop()

    rec([], 0, 0)
    return out


def enumerate_b(n: int) -> list[str]:
    """All type-B Dyck words of 2n steps, in lexicographic order (E < N)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[str] = []

    def rec(prefix: list[str], norths: int, easts: int):
        if norths + easts == 2 * n:
            out.append("".join(prefix))
            return
        if easts < norths:
            prefix.append("E")
            rec(prefix, norths, easts + 1)
            prefix.pop()
        prefix.append("N")
        rec(prefix, norths + 1, easts)
        prefix.pop()

    rec([], 0, 0)
    return out


def _north_columns(word: str) -> list[int]:
    """x-coordinate (number of earlier east steps) of the north step in each row."""
    xs = []
    easts = 0
    for c in word:
        if c == "N":
            xs.append(easts)
        else:
            easts += 1
    return xs


def cells_a(word: str) -> frozenset[Cell]:
    """Cells (i, j), 0 <= i < j < n, strictly below the path and above the diagonal."""
    _check(word, "A")
    xs = _north_columns(word)
    return frozenset((i, j) for j, x in enumerate(xs) for i in range(x, j))


def area_a(word: str) -> int:
    return len(cells_a(word))


def cells_b(word: str) -> frozenset[Cell]:
    """Cells (i, j), 0 <= i < j <= 2n-1-i, below a type-B path."""
    n = _check(word, "B")
    xs = _north_columns(word)
    return frozenset(
        (i, j) for j, x in enumerate(xs) for i in range(x, min(j, 2 * n - j))
    )


def area_b(word: str) -> int:
    return len(cells_b(word))


def path_a_from_cells(cells: frozenset[Cell], n: int) -> str:
    """Inverse of cells_a: the unique Dyck word with the given cell set."""
    counts = [0] * n
    for i, j in cells:
        if not 0 <= i < j < n:
            raise ValueError(f"invalid type-A cell {(i, j)}")
        counts[j] += 1
    xs = [j - counts[j] for j in range(n)]
    return _word_from_columns(xs, 2 * n, n)


def path_b_from_cells(cells: frozenset[Cell], n: int) -> str:
    """Inverse of cells_b for staircase-closed cell sets."""
    counts = [0] * (2 * n)
    for i, j in cells:
        if not (0 <= i < j <= 2 * n - 1 - i):
            raise ValueError(f"invalid type-B cell {(i, j)}")
        counts[j] += 1
    xs = [j - counts[j] for j in range(n)]
    # rows at or above height n are crossed iff they carry a cell, contiguously
    m = n
    for j in range(n, 2 * n):
        if counts[j]:
            if j != m:
                raise ValueError("cell rows are not contiguous")
            xs.append(2 * n - j - counts[j])
            m += 1
    return _word_from_columns(xs, 2 * n, n)


def _word_from_columns(xs: list[int], total: int, n: int) -> str:
    word = []
    easts = 0
    prev = 0
    for j, x in enumerate(xs):
        if x < prev or x > j:
            raise ValueError("cell set is not staircase-closed")
        word.append("E" * (x - easts))
        word.append("N")
        easts = x
        prev = x
    word.append("E" * (total - len(xs) - easts))
    out = "".join(word)
    if len(out) != total:
        raise ValueError("cell set does not fit a path of the requested size")
    return out


def descent_set(word: str, order: str = "NE") -> set[int]:
    """1-indexed positions i with word[i] > word[i+1] in the given step order.

    ``order="NE"`` means N < E (the Dyck-path convention); ``order="EN"``
    means E < N (the free-lattice-path convention).
    """
    rank = {order[0]: 0, order[1]: 1}
    return {
        i + 1
        for i in range(len(word) - 1)
        if rank[word[i]] > rank[word[i + 1]]
    }


def maj_a(word: str) -> int:
    """Sum of 2n - i over descents of the word, with N < E."""
    n = _check(word, "A")
    return sum(2 * n - i for i in descent_set(word))


def conjugate_a(word: str) -> str:
    """Reverse the word and swap N with E; an involution on Dyck words."""
    _check(word, "A")
    swap = {"N": "E", "E": "N"}
    return "".join(swap[c] for c in reversed(word))


def neg_b(word: str) -> int:
    """Number of east steps of a type-B path."""
    _check(word, "B")
    return word.count("E")


def des_b(word: str) -> int:
    _check(word, "B")
    return len(descent_set(word))


def maj_b(word: str) -> int:
    """Twice (number of east steps plus the sum of 2n - i over descents)."""
    n = _check(word, "B")
    return 2 * (word.count("E") + sum(2 * n - i for i in descent_set(word)))


def lattice_maj(word: str) -> int:
    """Sum of 2n - i over descents with respect to E < N, for any N/E word."""
    n2 = len(word)
    return sum(n2 - i for i in descent_set(word, order="EN"))


def unfold_lattice_to_b(word: str) -> str:
    """Map an unrestricted balanced lattice word onto a type-B Dyck word.

    For each depth d < 0, the first east step descending to level d is
    replaced by a north step.  Major index doubles: maj_b of the image
    equals twice the E<N major index of the input.
    """
    n2 = len(word)
    if n2 % 2 or word.count("N") != n2 // 2 or any(c not in "NE" for c in word):
        raise ValueError(f"not a balanced lattice word: {word!r}")
    flips = set()
    seen = 0  # deepest level already assigned a flip
    lvl = 0
    for pos, c in enumerate(word):
        lvl += 1 if c == "N" else -1
        if c == "E" and lvl < 0 and lvl < seen:
            flips.add(pos)
            seen = lvl
    return "".join("N" if i in flips else c for i, c in enumerate(word))


def split_lower_upper(word: str) -> tuple[str, str]:
    """Split a type-B path into its balanced lower part and the upper suffix.

    The lower part replaces every north step after the n-th by an east
    step; the upper part is the suffix following the n-th north step, and
    is empty when the path is balanced (nothing rises above height n).
    """
    n = _check(word, "B")
    norths = 0
    cut = len(word)
    for pos, c in enumerate(word):
        if c == "N":
            norths += 1
            if norths == n:
                cut = pos + 1
                break
    lower = word[:cut] + word[cut:].replace("N", "E")
    upper = word[cut:] if "N" in word[cut:] else ""
    return lower, upper


def partition_of_path(word: str) -> tuple[int, ...]:
    """The partition above a type-A path inside the staircase, largest part first."""
    _check(word, "A")
    xs = _north_columns(word)
    lam = [x for x in reversed(xs) if x > 0]
    return tuple(lam)


def path_from_partition(lam: tuple[int, ...], n: int) -> str:
    """Inverse of partition_of_path for partitions inside the (n-1, ..., 1) staircase."""
    parts = list(lam) + [0] * (n - len(lam))
    if len(parts) != n or any(parts[i] < parts[i + 1] for i in range(n - 1)):
        raise ValueError("not a weakly decreasing partition fitting the staircase")
    xs = list(reversed(parts))
    if any(x > j for j, x in enumerate(xs)):
        raise ValueError("partition does not fit inside the staircase")
    return _word_from_columns(xs, 2 * n, n)


def area_polynomial(family: str, n: int, unsafe: bool = False) -> QPoly:
    """Generating polynomial of the area statistic over all paths."""
    _guard(family, n, unsafe)
    if family == "A":
        sizes = [area_a(w) for w in enumerate_a(n)]
    else:
        sizes = [area_b(w) for w in enumerate_b(n)]
    return _gen_poly(sizes)


def maj_polynomial(family: str, n: int, unsafe: bool = False) -> QPoly:
    """Generating polynomial of the major index over all paths."""
    _guard(family, n, unsafe)
    if family == "A":
        sizes = [maj_a(w) for w in enumerate_a(n)]
    else:
        sizes = [maj_b(w) for w in enumerate_b(n)]
    return _gen_poly(sizes)


def _guard(family: str, n: int, unsafe: bool):
    if family not in ("A", "B"):
        raise ValueError(f"no paths of type {family!r}")
    limit = AREA_GUARD_A if family == "A" else AREA_GUARD_B
    if n > limit and not unsafe:
        raise SizeGuardError(f"type {family} path enumeration guarded at n <= {limit}")


def _gen_poly(values: list[int]) -> QPoly:
    out = [0] * (max(values, default=0) + 1)
    for v in values:
        out[v] += 1
    return QPoly(out)


def to_json(word: str) -> dict:
    return {"steps": word}


def from_json(data: dict) -> str:
    return data["steps"]


def cells_to_json(cells: frozenset[Cell]) -> list[list[int]]:
    return [list(c) for c in sorted(cells)]


def cells_from_json(data) -> frozenset[Cell]:
    return frozenset((int(i), int(j)) for i, j in data)
