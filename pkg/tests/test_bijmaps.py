import pytest

from coxcat import bijmaps as bm
from coxcat import paths
from coxcat import rootposets as rp
from coxcat import signedperm as sp
from coxcat.noncrossing import rev_nc
from coxcat.qseries import GroupType, QPoly
from coxcat.sortable import enumerate_sortables


A8_IDEAL = frozenset(
    rp.diff(a, b)
    for a, b in [
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9),
        (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (7, 9), (1, 4), (2, 5), (3, 6),
    ]
)

B4_IDEAL_ANTICHAIN = [rp.diff(1, 4), rp.short(1)]


def b4_ideal():
    return rp.root_poset(GroupType("B", 4)).ideal_from_antichain(B4_IDEAL_ANTICHAIN)


class TestShellCycles:
    def test_a_worked_example(self):
        maximal = [rp.diff(1, 4), rp.diff(2, 5), rp.diff(3, 6), rp.diff(5, 7), rp.diff(7, 9)]
        assert bm.shell_cycles(maximal, "A") == ((1, 7, 9),)

    def test_b_worked_example(self):
        assert bm.shell_cycles([rp.diff(1, 4), rp.short(1)], "B") == ((1, 4, -1),)

    def test_b_strict_overlap_through_fold(self):
        # pinned by the oracle suite: the unique choice keeping l_S = area
        assert bm.shell_cycles([rp.short(2), rp.diff(1, 4)], "B") == ((4, -4),)

    def test_two_short_sum_roots(self):
        # {e_3, e_1+e_2} is an antichain in B_3 with two fold-touching roots
        assert bm.shell_cycles([rp.short(3), rp.sum_root(1, 2)], "B") == ((3, -3),)

    def test_touching_chains(self):
        # [5,7] and [7,9] touch, so 7 is a chain point; [1,4]..[3,6] overlap strictly
        maximal = [rp.diff(2, 3), rp.diff(3, 4), rp.diff(4, 5)]
        assert bm.shell_cycles(maximal, "A") == ((2, 3, 4, 5),)

    def test_split_blocks(self):
        maximal = [rp.diff(1, 2), rp.diff(3, 4)]
        assert bm.shell_cycles(maximal, "A") == ((1, 2), (3, 4))

    def test_nested_rejected(self):
        with pytest.raises(ValueError):
            bm.shell_cycles([rp.diff(1, 4), rp.diff(2, 3)], "A")


class TestStrip:
    def test_a_worked_example(self):
        t = GroupType("A", 8)
        got = bm.strip_ideal(t, A8_IDEAL)
        assert got == frozenset([rp.diff(2, 3), rp.diff(3, 4), rp.diff(4, 5)])

    def test_low_ideals_empty(self):
        t = GroupType("A", 4)
        low = frozenset([rp.diff(1, 2), rp.diff(1, 3)])
        assert bm.strip_ideal(t, low) == frozenset()

    def test_full_b3(self):
        t = GroupType("B", 3)
        full = frozenset(rp.positive_roots(t))
        assert bm.strip_ideal(t, full) == frozenset(
            [rp.diff(1, 2), rp.short(1), rp.short(2), rp.sum_root(1, 2)]
        )

    @pytest.mark.parametrize("fam,rank", [("A", 5), ("B", 4)])
    def test_strip_yields_ideals(self, fam, rank):
        t = GroupType(fam, rank)
        poset = rp.root_poset(t)
        for ideal in rp.ideals(t):
            assert poset.is_ideal(bm.strip_ideal(t, ideal))


class TestPhi:
    def test_a8_worked_example(self):
        t = GroupType("A", 8)
        sigma = bm.phi(t, A8_IDEAL)
        assert sigma == (7, 3, 4, 5, 2, 6, 9, 8, 1)
        assert sp.to_cycles(sigma) == ((1, 7, 9), (2, 3, 4, 5))
        assert sp.length_s(sigma, "A") == len(A8_IDEAL) == 17
        # 35 + 20 + 17 = 72 = 9 * 8
        assert rp.ideal_maj(t, A8_IDEAL) + sp.maj(sigma, "A") + sp.imaj(sigma, "A") == 72

    def test_a8_lift_worked_example(self):
        t, big = GroupType("A", 8), GroupType("A", 9)
        lifted = rp.lift_delta(t, A8_IDEAL)
        sigma = bm.phi(big, lifted)
        assert sigma == (10, 6, 3, 4, 5, 7, 2, 9, 8, 1)
        assert sp.to_cycles(sigma) == ((1, 10), (2, 6, 7), (8, 9))
        # 39 + 26 + 25 = 90 = 9 * 10
        assert rp.ideal_maj(big, lifted) + sp.maj(sigma, "A") + sp.imaj(sigma, "A") == 90

    def test_b4_worked_example(self):
        t = GroupType("B", 4)
        ideal = b4_ideal()
        sigma = bm.phi(t, ideal)
        assert sigma == (4, 3, 2, -1)
        assert sp.length_s(sigma, "B") == len(ideal) == 7

    def test_b4_lift_worked_example(self):
        t, big = GroupType("B", 4), GroupType("B", 5)
        lifted = rp.lift_delta(t, b4_ideal())
        assert bm.phi(big, lifted) == (4, 3, 2, -1, -5)

    def test_b2_full_ideal(self):
        t = GroupType("B", 2)
        assert bm.phi(t, frozenset(rp.positive_roots(t))) == (-1, -2)

    def test_empty(self):
        assert bm.phi(GroupType("A", 3), frozenset()) == sp.identity(4)

    @pytest.mark.parametrize("fam,rank", [("A", 2), ("A", 5), ("B", 2), ("B", 4)])
    def test_bijection_onto_rev_nc(self, fam, rank):
        t = GroupType(fam, rank)
        images = [bm.phi(t, ideal) for ideal in rp.ideals(t)]
        assert len(set(images)) == len(images)
        assert set(images) == set(rev_nc(t))

    def test_inverse_table(self):
        t = GroupType("B", 3)
        table = bm.phi_inverse_table(t)
        for ideal in rp.ideals(t):
            assert table[bm.phi(t, ideal)] == ideal


class TestPsi:
    def test_a_worked_example(self):
        sigma, sw = bm.psi_a("NNNNEEENNEEE")
        assert sigma == (6, 2, 1, 5, 4, 3)
        assert sw.factors == ((5, 4, 3, 2, 1), (5, 4, 2), (5,))
        assert sp.length_s(sigma, "A") == paths.area_a("NNNNEEENNEEE") == 9

    def test_b_worked_example(self):
        sigma, sw = bm.psi_b("NNNNEEENNNNE")
        assert sigma == (1, -2, -6, 5, 4, 3)
        assert sw.factors == ((5, 4, 3, 2, 1, 0), (5, 4, 2, 1, 0), (5, 2, 1))
        assert sp.length_s(sigma, "B") == paths.area_b("NNNNEEENNNNE") == 14
        # inv 6 plus dropped negatives 8
        assert sp.inv_word(sigma) == 6

    def test_small_cases(self):
        assert bm.psi_a("NENE")[0] == (1, 2)
        assert bm.psi_a("NNEE") == ((2, 1), bm.SortingWord(((1,),)))
        sigma, sw = bm.psi_b("NENN")
        assert sigma == (-1, 2)
        assert sw.factors == ((0,),)

    def test_b_split_product(self):
        # the image factors as psi_a(lower part) times the upper-cell product
        word = "NNNNEEENNNNE"
        sigma, _ = bm.psi_b(word)
        lower, upper = paths.split_lower_upper(word)
        sigma1, _ = bm.psi_a(lower)
        upper_word = (0, 1, 2, 0, 1)
        sigma2 = sp.word_to_perm(upper_word, 6, "B")
        assert sigma == sp.mul(sigma1, sigma2)
        assert sp.ides_set(sigma) == sp.ides_set(sigma1)

    @pytest.mark.parametrize("fam,n", [("A", 2), ("A", 6), ("B", 2), ("B", 4)])
    def test_bijection_onto_sortables(self, fam, n):
        words = paths.enumerate_a(n) if fam == "A" else paths.enumerate_b(n)
        fn = bm.psi_a if fam == "A" else bm.psi_b
        images = [fn(w)[0] for w in words]
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_sortables(fam, n))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_round_trip_by_table(self, n):
        table = bm.psi_inverse_table("A", n)
        for w in paths.enumerate_a(n):
            assert table[bm.psi_a(w)[0]] == w


class TestVerifiers:
    @pytest.mark.parametrize("fam,rank", [("A", 4), ("B", 3)])
    def test_clean_reports(self, fam, rank):
        t = GroupType(fam, rank)
        for verify in (bm.verify_phi_theorems, bm.verify_psi_theorems):
            report = verify(t)
            assert report["failures"] == []
            assert report["checked"] == len(rp.ideals(t))
            assert set(report) >= {"identity", "rank", "checked", "failures"}

    def test_generating_function_identity(self):
        # sum over ideals of q^maj equals sum over rev(NC) of q^(2N - maj - imaj)
        for t in [GroupType("A", 4), GroupType("B", 3)]:
            n = t.n
            two_n = n * (n - 1) if t.family == "A" else 2 * n * n
            lhs: dict[int, int] = {}
            for ideal in rp.ideals(t):
                m = rp.ideal_maj(t, ideal)
                lhs[m] = lhs.get(m, 0) + 1
            rhs: dict[int, int] = {}
            for w in rev_nc(t):
                m = two_n - sp.maj(w, t.family) - sp.imaj(w, t.family)
                rhs[m] = rhs.get(m, 0) + 1
            assert lhs == rhs
