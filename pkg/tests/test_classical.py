from itertools import permutations

import pytest

from rimhooks import (
    Partition,
    Rpp,
    SsytPair,
    Tableau,
    biword,
    build,
    check_rsk_transpose,
    check_syt_diagonals,
    diag_partition,
    gk_chain_max,
    hg,
    hg_inv,
    is_permutation_matrix,
    permutation_matrix,
    rectangle_cells,
    rsk,
    rsk_inv,
)
from rimhooks.enumeration import enumerate_rpps, enumerate_tableaux
from conftest import all_partitions


class TestHillmanGrassl:
    def test_zero(self):
        assert hg(Rpp.zero(Partition((3, 2)))).is_zero()

    def test_single_cell_column(self):
        t = hg(Rpp(Partition((1,)), ((4,),)))
        assert t.rows == ((4,),)

    def test_two_by_two_single_extraction(self):
        # one walk picks up the whole filling: (2,1) east (2,2) north (1,2)
        t = hg(Rpp(Partition((2, 2)), ((0, 1), (1, 1))))
        assert t.rows == ((1, 0), (0, 0))

    def test_two_by_two_two_extractions(self):
        t = hg(Rpp(Partition((2, 2)), ((0, 1), (1, 2))))
        assert t.rows == ((0, 1), (1, 0))

    def test_weighted_size_identity(self):
        for shape in all_partitions(7):
            for pi in enumerate_rpps(shape, 5):
                assert hg(pi).weighted_size == pi.size

    def test_roundtrip(self):
        for shape in all_partitions(7):
            for pi in enumerate_rpps(shape, 5):
                assert hg_inv(hg(pi)) == pi

    def test_inverse_of_zero(self):
        assert hg_inv(Tableau.zero(Partition((2, 2)))).is_zero()

    def test_inverse_example(self):
        pi = hg_inv(Tableau(Partition((2, 2)), ((1, 0), (0, 0))))
        assert pi.rows == ((0, 1), (1, 1))


class TestRsk:
    def test_golden_pair(self):
        pair = rsk(Tableau(Partition((3, 3, 3)), ((1, 1, 2), (0, 1, 0), (3, 0, 0))))
        assert pair.p.rows == ((1, 1, 1, 1), (2, 2, 3), (3,))
        assert pair.q.rows == ((1, 1, 1, 1), (2, 3, 3), (3,))

    def test_zero_matrix(self):
        pair = rsk(Tableau.zero(Partition((2, 2))))
        assert pair.shape == Partition(())

    def test_biword_is_sorted(self):
        t = Tableau(Partition((2, 2)), ((2, 1), (0, 3)))
        pairs = biword(t)
        assert pairs == sorted(pairs)
        assert len(pairs) == t.total

    def test_roundtrip_small_totals(self):
        from rimhooks.verify import _tableaux_by_total

        shape = Partition((3, 3, 3))
        seen = 0
        for t in _tableaux_by_total(shape, 6):
            assert rsk_inv(rsk(t), shape) == t
            seen += 1
        assert seen == 5005

    def test_shape_mismatch_rejected(self):
        p = Rpp(Partition((2,)), ((1, 1),))
        q = Rpp(Partition((1, 1)), ((1,), (2,)))
        with pytest.raises(ValueError, match="shapes differ"):
            SsytPair(p, q)

    def test_non_column_strict_rejected(self):
        grid = Rpp(Partition((1, 1)), ((1,), (1,)))
        with pytest.raises(ValueError, match="column-strict"):
            SsytPair(grid, grid)

    def test_permutation_matrices_give_standard_tableaux(self):
        for word in permutations((1, 2, 3)):
            pair = rsk(permutation_matrix(word))
            entries = sorted(v for _, v in pair.q.entries())
            assert entries == [1, 2, 3]


class TestDiagPartition:
    def test_golden(self, steep_example):
        assert diag_partition(steep_example, 0) == Partition((4, 3, 1))
        assert diag_partition(steep_example, -1) == Partition((4, 2))

    def test_zero(self):
        assert diag_partition(Rpp.zero(Partition((3, 2))), 0) == Partition(())

    def test_missing_diagonal(self, steep_example):
        assert diag_partition(steep_example, 9) == Partition(())


class TestRectangles:
    def test_full_square(self):
        shape = Partition((3, 3, 3))
        assert len(rectangle_cells(shape, 0)) == 9
        assert rectangle_cells(shape, 2) == ((1, 1), (1, 2), (1, 3))
        assert rectangle_cells(shape, 9) == ()

    def test_staircase(self):
        shape = Partition((4, 3, 1))
        # south-easternmost content 0 cell is (2,2)
        assert rectangle_cells(shape, 0) == ((1, 1), (1, 2), (2, 1), (2, 2))


class TestGreeneKleitman:
    def test_golden_values(self):
        t = Tableau(Partition((3, 3, 3)), ((1, 1, 2), (0, 1, 0), (3, 0, 0)))
        assert gk_chain_max(t, 0, 1, "weak") == 4
        assert gk_chain_max(t, 0, 4, "strict") == 8

    def test_zero(self):
        t = Tableau.zero(Partition((2, 2)))
        assert gk_chain_max(t, 0, 3, "weak") == 0

    def test_partial_sums_against_rsk_shape(self):
        # Greene's theorem: the insertion shape of the rectangle-restricted
        # matrix carries the same chain maxima
        shape = Partition((3, 3, 3))
        count = 0
        for t in enumerate_tableaux(shape, 5):
            for k in (-1, 0, 1):
                cells = rectangle_cells(shape, k)
                rect = Partition((cells[-1][1],) * cells[-1][0])
                grid = [[0] * rect.parts[0] for _ in range(rect.length)]
                for (i, j) in cells:
                    grid[i - 1][j - 1] = t.value((i, j))
                mu = rsk(Tableau(rect, grid)).shape
                nu = mu.conjugate()
                for r in (1, 2, 3):
                    assert sum(mu.parts[:r]) == gk_chain_max(t, k, r, "weak")
                    assert sum(nu.parts[:r]) == gk_chain_max(t, k, r, "strict")
                count += 1
        assert count > 100

    def test_bad_arguments(self):
        t = Tableau.zero(Partition((2, 2)))
        with pytest.raises(ValueError):
            gk_chain_max(t, 0, 0, "weak")
        with pytest.raises(ValueError):
            gk_chain_max(t, 0, 1, "diagonal")

    def test_against_transparent_oracle(self):
        # oracle: recurse over every chain multiset within the capacities,
        # with no search-space reductions at all
        import itertools
        import random

        def comparable(u, v, kind):
            if kind == "weak":
                return (u[0] <= v[0] and u[1] <= v[1]) or (
                    v[0] <= u[0] and v[1] <= u[1]
                )
            return (u[0] > v[0] and u[1] < v[1]) or (v[0] > u[0] and v[1] < u[1])

        def oracle(t, k, r, kind):
            cells = [u for u in rectangle_cells(t.shape, k) if t.value(u)]
            caps = {u: t.value(u) for u in cells}
            chains = []
            for size in range(1, len(cells) + 1):
                for sub in itertools.combinations(cells, size):
                    if all(comparable(a, b, kind) for a, b in itertools.combinations(sub, 2)):
                        if kind == "strict":
                            chains.append({u: 1 for u in sub})
                        else:
                            for mult in itertools.product(
                                *(range(1, caps[u] + 1) for u in sub)
                            ):
                                chains.append(dict(zip(sub, mult)))
            best = 0

            def rec(remaining, depth, used):
                nonlocal best
                best = max(best, used)
                if depth == 0:
                    return
                for chain in chains:
                    if any(remaining[u] < m for u, m in chain.items()):
                        continue
                    nxt = dict(remaining)
                    for u, m in chain.items():
                        nxt[u] -= m
                    rec(nxt, depth - 1, used + sum(chain.values()))

            rec(dict(caps), r, 0)
            return best

        rng = random.Random(7)
        shape = Partition((2, 2))
        for _ in range(40):
            t = Tableau(shape, [[rng.randint(0, 2) for _ in range(2)] for _ in range(2)])
            for k in (-1, 0, 1):
                for r in (1, 2):
                    for kind in ("weak", "strict"):
                        assert oracle(t, k, r, kind) == gk_chain_max(t, k, r, kind)


class TestSquareTheorems:
    def test_syt_smallest(self):
        assert check_syt_diagonals(Rpp(Partition((1,)), ((1,),)))

    def test_syt_two(self):
        assert check_syt_diagonals(Rpp(Partition((2, 2)), ((0, 1), (1, 2))))

    def test_syt_three_exhaustive(self):
        shape = Partition((3, 3, 3))
        qualifying = [
            pi
            for pi in enumerate_rpps(shape, 9)
            if all(pi.trace(k) == 3 - k and pi.trace(-k) == 3 - k for k in range(3))
        ]
        assert len(qualifying) == 6
        assert all(check_syt_diagonals(pi) for pi in qualifying)

    def test_syt_precondition(self):
        with pytest.raises(ValueError):
            check_syt_diagonals(Rpp.zero(Partition((2, 2))))
        with pytest.raises(ValueError):
            check_syt_diagonals(Rpp.zero(Partition((2, 1))))

    def test_rsk_transpose_exhaustive(self):
        for n in (1, 2, 3, 4):
            for word in permutations(range(1, n + 1)):
                assert check_rsk_transpose(permutation_matrix(word))

    def test_rsk_transpose_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            check_rsk_transpose(Tableau.zero(Partition((2, 2))))

    def test_involution_on_permutations(self):
        for word in permutations((1, 2, 3)):
            sigma = permutation_matrix(word)
            tau = hg(build(sigma))
            assert is_permutation_matrix(tau)
            assert hg(build(tau)) == sigma

    def test_not_an_involution_in_general(self):
        shape = Partition((3, 3))
        t = Tableau(shape, ((0, 0, 1), (1, 1, 0)))
        once = hg(build(t))
        assert hg(build(once)) != t


class TestPermutationMatrices:
    def test_one_line_notation(self):
        t = permutation_matrix((3, 1, 2))
        assert t.rows == ((0, 0, 1), (1, 0, 0), (0, 1, 0))
        assert is_permutation_matrix(t)

    def test_rejects_non_permutation_word(self):
        with pytest.raises(ValueError):
            permutation_matrix((1, 1, 3))

    def test_predicate_rejects_other_grids(self):
        assert not is_permutation_matrix(Tableau.zero(Partition((2, 2))))
        assert not is_permutation_matrix(
            Tableau(Partition((2, 1)), ((1, 0), (0,)))
        )
