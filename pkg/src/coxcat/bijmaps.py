"""The statistic-preserving bijections between the Catalan families.

``phi`` peels an order ideal into shells (maximal antichains) and reads
each shell as a set of disjoint cycles; iterating over the stripped ideal
yields a signed permutation.  ``psi_a``/``psi_b`` read the cells under a
Dyck path, diagonal by diagonal, as a sorting word.  The verifiers check
the counting and major-index identities exhaustively at a given rank.

Shelling conventions.  A root unfolds to one or two intervals over the
signed baseline -n < ... < -1 < 1 < ... < n:

* ``diff(a, b)``  -> (a, b) and (-b, -a),
* ``short(b)``    -> (-1, b) and (-b, 1),
* ``sum(a, b)``   -> (-(a+1), b) and (-b, a+1),

where coinciding mirror images (the right-boundary roots) collapse to a
single symmetric interval.  Sorted by left endpoint, the intervals of an
antichain split into blocks wherever the previous right endpoint is
strictly smaller than the next left endpoint; inside a block every
touching pair contributes a chain point.  A block fixed by negation
yields the sign-crossing cycle on its positive endpoints, and mirror-pair
blocks are emitted once, as the cycle of the positive one.
"""

from __future__ import annotations

from functools import lru_cache

from . import paths, rootposets, signedperm
from .noncrossing import rev_nc
from .qseries import GroupType
from .sortable import SortingWord, c_sorting_word, enumerate_sortables
from .signedperm import Perm

Root = rootposets.Root


def _unfold_spans(root: Root, family: str) -> set[tuple[int, int]]:
    if family == "A":
        return {(root[1], root[2])}
    if root[0] == "diff":
        return {(root[1], root[2]), (-root[2], -root[1])}
    if root[0] == "short":
        return {(-1, root[1]), (-root[1], 1)}
    a, b = root[1], root[2]
    return {(-(a + 1), b), (-b, a + 1)}


def shell_cycles(maximal, family: str) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles read off one shell (an antichain of roots)."""
    spans: list[tuple[int, int]] = []
    for r in maximal:
        spans.extend(_unfold_spans(r, family))
    spans.sort()
    # an antichain unfolds to spans with strictly increasing lo AND hi
    if any(a[0] >= b[0] or a[1] >= b[1] for a, b in zip(spans, spans[1:])):
        raise ValueError("not an antichain: nested or repeated spans")

    blocks: list[list[tuple[int, int]]] = []
    for span in spans:
        if blocks and blocks[-1][-1][1] >= span[0]:
            blocks[-1].append(span)
        else:
            blocks.append([span])

    cycles = []
    for block in blocks:
        seq = [block[0][0]]
        for prev, cur in zip(block, block[1:]):
            if cur[0] == prev[1]:
                seq.append(cur[0])
        seq.append(block[-1][1])
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError("block endpoints are not increasing")
        if seq[0] == -seq[-1]:
            if set(seq) != {-v for v in seq}:
                raise ValueError("fold block is not symmetric")
            positives = [v for v in seq if v > 0]
            cycles.append(tuple(positives) + (-positives[0],))
        elif seq[0] > 0:
            cycles.append(tuple(seq))
        elif seq[-1] >= 0:
            raise ValueError("asymmetric block straddling the fold")
    return tuple(cycles)


def strip_ideal(t: GroupType, ideal: frozenset[Root]) -> frozenset[Root]:
    """Shrink every cell (i, j) with j - i > 2 to (i+1, j-1); drop the rest."""
    cells = rootposets.ideal_cells(t, ideal)
    inner = frozenset((i + 1, j - 1) for i, j in cells if j - i > 2)
    return rootposets.ideal_from_cells(t, inner)


def phi(t: GroupType, ideal: frozenset[Root]) -> Perm:
    """Shell an ideal into cycles; the product is the image permutation."""
    poset = rootposets.root_poset(t)
    cycles: list[tuple[int, ...]] = []
    seen: set[int] = set()
    cur = ideal
    while cur:
        shell = shell_cycles(poset.maximal_elements(cur), t.family)
        for cyc in shell:
            body = {abs(v) for v in cyc[:-1]} if cyc[-1] == -cyc[0] else {abs(v) for v in cyc}
            if body & seen:
                raise AssertionError("shell cycles are not disjoint")
            seen |= body
        cycles.extend(shell)
        cur = strip_ideal(t, cur)
    return signedperm.from_cycles(cycles, t.n)


def _psi_factors_a(cells: frozenset[tuple[int, int]], n: int) -> tuple[tuple[int, ...], ...]:
    factors = []
    for f in range(1, n):
        diag = sorted((i, j) for i, j in cells if j - i == f)
        if not diag:
            break
        factors.append(tuple(n - 1 - i for i, _ in diag))
    return tuple(factors)


def psi_a(word: str) -> tuple[Perm, SortingWord]:
    """Label cell (i, j) by letter n-1-i and read the diagonals in order."""
    n = len(word) // 2
    factors = _psi_factors_a(paths.cells_a(word), n)
    sw = SortingWord(factors)
    return signedperm.word_to_perm(sw.letters, n, "A"), sw


def psi_b(word: str) -> tuple[Perm, SortingWord]:
    """Type-B cell reading: lower cells as in type A, upper cells by rows.

    Lower cells (j < n) carry letter n-1-i; upper cells (j >= n) carry
    letter 2n-1-i-j.  Factor f reads the lower diagonal j - i = f by
    ascending i, then the upper column i = n - f by ascending j.
    """
    n = len(word) // 2
    ordered = sorted(paths.cells_b(word))
    factors = []
    for f in range(1, 2 * n):
        letters = [n - 1 - i for i, j in ordered if j < n and j - i == f]
        letters += [2 * n - 1 - i - j for i, j in ordered if j >= n and i == n - f]
        if not letters:
            break
        factors.append(tuple(letters))
    sw = SortingWord(tuple(factors))
    return signedperm.word_to_perm(sw.letters, n, "B"), sw


@lru_cache(maxsize=None)
def phi_inverse_table(t: GroupType) -> dict[Perm, frozenset[Root]]:
    return {phi(t, i): i for i in rootposets.ideals(t)}


@lru_cache(maxsize=None)
def psi_inverse_table(family: str, n: int) -> dict[Perm, str]:
    words = paths.enumerate_a(n) if family == "A" else paths.enumerate_b(n)
    fn = psi_a if family == "A" else psi_b
    return {fn(w)[0]: w for w in words}


def _report(identity: str, rank: int) -> dict:
    return {"identity": identity, "rank": rank, "checked": 0, "failures": []}


def _fail(report: dict, what: str, **context):
    entry = {"check": what}
    entry.update({k: repr(v) for k, v in context.items()})
    report["failures"].append(entry)


def verify_phi_theorems(t: GroupType, unsafe: bool = False) -> dict:
    """Exhaustively check the shelling bijection and its statistics at rank t."""
    fam, n = t.family, t.n
    two_n = n * (n - 1) if fam == "A" else 2 * n * n
    report = _report(f"phi{fam}", t.rank)
    images = {}
    for ideal in rootposets.ideals(t, unsafe=unsafe):
        report["checked"] += 1
        sigma = phi(t, ideal)
        if signedperm.length_s(sigma, fam) != len(ideal):
            _fail(report, "length", ideal=sorted(map(rootposets.root_str, ideal)), image=sigma)
        total = (
            rootposets.ideal_maj(t, ideal)
            + signedperm.maj(sigma, fam)
            + signedperm.imaj(sigma, fam)
        )
        if total != two_n:
            _fail(report, "maj-identity", ideal=sorted(map(rootposets.root_str, ideal)), total=total)
        if fam == "A":
            if len(rootposets.ideal_des(t, ideal)) + signedperm.des(sigma) != n - 1:
                _fail(report, "des-sum", ideal=sorted(map(rootposets.root_str, ideal)))
        if sigma in images:
            _fail(report, "injectivity", image=sigma)
        images[sigma] = ideal
    target = set(rev_nc(t))
    if set(images) != target:
        _fail(report, "image-set", missing=sorted(target - set(images))[:3])
    if fam == "A":
        for sigma in target:
            if signedperm.des(sigma) != signedperm.ides(sigma):
                _fail(report, "des-ides", image=sigma)
    if fam == "B":
        big = GroupType("B", t.rank + 1)
        for sigma, ideal in images.items():
            lifted = phi(big, rootposets.lift_delta(t, ideal))
            if lifted != sigma + (-(n + 1),):
                _fail(report, "lift-identity", ideal=sorted(map(rootposets.root_str, ideal)))
    return report


def verify_psi_theorems(t: GroupType, unsafe: bool = False) -> dict:
    """Exhaustively check the cell-reading bijection and its statistics."""
    fam, n = t.family, t.n
    two_n = n * (n - 1) if fam == "A" else 2 * n * n
    report = _report(f"psi{fam}", t.rank)
    words = paths.enumerate_a(n) if fam == "A" else paths.enumerate_b(n)
    c_word = (
        tuple(range(n - 1, 0, -1)) if fam == "A" else tuple(range(n - 1, -1, -1))
    )
    images = {}
    for word in words:
        report["checked"] += 1
        sigma, sw = (psi_a if fam == "A" else psi_b)(word)
        area = paths.area_a(word) if fam == "A" else paths.area_b(word)
        if signedperm.length_s(sigma, fam) != area or len(sw) != area:
            _fail(report, "length", word=word, image=sigma)
        if c_sorting_word(sigma, c_word, fam) != sw or not sw.is_sortable_chain():
            _fail(report, "sorting-word", word=word, emitted=str(sw))
        maj_d = paths.maj_a(word) if fam == "A" else paths.maj_b(word)
        total = maj_d + signedperm.maj(sigma, fam) + signedperm.imaj(sigma, fam)
        if total != two_n:
            _fail(report, "maj-identity", word=word, total=total)
        if fam == "A":
            easts_after = len(word) - word.rindex("N") - 1 if "N" in word else 0
            if easts_after:
                k = easts_after
                if sigma[k - 1] != 1 or not set(range(1, k)) <= signedperm.des_set(sigma):
                    _fail(report, "last-descent", word=word, image=sigma)
        else:
            if paths.neg_b(word) + signedperm.neg(sigma) != n:
                _fail(report, "neg-sum", word=word, image=sigma)
            lower, _ = paths.split_lower_upper(word)
            sigma1, _ = psi_a(lower)
            if signedperm.ides_set(sigma) != signedperm.ides_set(sigma1):
                _fail(report, "ides-split", word=word)
            if signedperm.imaj(sigma, "B") != signedperm.imaj(sigma1, "B") + signedperm.neg(sigma):
                _fail(report, "imaj-split", word=word)
        if sigma in images:
            _fail(report, "injectivity", image=sigma)
        images[sigma] = word
    target = set(enumerate_sortables(fam, n, c_word, unsafe=unsafe))
    if set(images) != target:
        _fail(report, "image-set", missing=sorted(target - set(images))[:3])
    return report
