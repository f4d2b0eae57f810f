import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieconvex.rootdata import (
    NotationError,
    build_root_system,
    dominates,
    dual_weight,
    from_simple_root_coords,
    in_root_lattice,
    inner_product,
    is_dominant,
    pairing,
    parse_partition,
    parse_root_system,
    parse_weight,
    partition_to_weight,
    reflect,
    reflection_word,
    root_pairing,
    simple_root_coords,
    to_dominant,
    weight_to_partition,
    weyl_dim,
    weyl_group_order,
    weyl_orbit,
)

import oracles

A1, A2, A3 = (build_root_system("A", n) for n in (1, 2, 3))
B2, B3 = build_root_system("B", 2), build_root_system("B", 3)
SMALL = [A1, A2, A3, B2, B3]


def weights(rs, lo=-3, hi=3):
    return st.tuples(*[st.integers(lo, hi)] * rs.rank)


class TestBuild:
    def test_a1(self):
        assert A1.cartan == ((2,),)
        assert A1.positive_roots == ((2,),)

    def test_a2_roots(self):
        assert set(A2.positive_roots) == {(2, -1), (-1, 2), (1, 1)}

    def test_b3(self):
        assert len(B3.positive_roots) == 9
        assert B3.symmetrizer == (1, 1, Fraction(1, 2))

    @pytest.mark.parametrize("family,rank", [("A", r) for r in range(1, 7)] + [("B", r) for r in range(2, 7)])
    def test_invariants(self, family, rank):
        rs = build_root_system(family, rank)
        n = rs.rank
        assert all(rs.cartan[i][i] == 2 for i in range(n))
        assert all(rs.cartan[i][j] <= 0 for i in range(n) for j in range(n) if i != j)
        expected = n * (n + 1) // 2 if family == "A" else n * n
        assert len(rs.positive_roots) == expected
        for x, r in zip(rs.positive_root_coords, rs.positive_roots):
            assert all(c >= 0 for c in x)
            assert from_simple_root_coords(rs, x) == r
        d = rs.symmetrizer
        for i, j in itertools.product(range(n), repeat=2):
            assert rs.cartan[i][j] * d[j] == rs.cartan[j][i] * d[i]
        # long roots have squared length 2
        assert max(inner_product(rs, r, r) for r in rs.positive_roots) == 2
        assert rs.rho == (1,) * n

    @pytest.mark.parametrize("bad", [("C", 3), ("E", 6), ("B", 1), ("A", 0), ("A", -2)])
    def test_rejects(self, bad):
        with pytest.raises(ValueError, match=str(bad[0]) if bad[0] in "CE" else "rank"):
            build_root_system(*bad)


class TestPairing:
    def test_examples(self):
        assert pairing(A2, (1, 0), 0) == 1
        assert pairing(A2, (1, 0), 1) == 0
        assert pairing(A2, (2, -1), 0) == 2

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            pairing(A2, (1, 0), 2)

    @pytest.mark.parametrize("rs", SMALL, ids=str)
    def test_root_pairs_with_own_coroot(self, rs):
        for k, r in enumerate(rs.positive_roots):
            assert root_pairing(rs, r, k) == 2

    @pytest.mark.parametrize("rs", SMALL, ids=str)
    def test_coroot_matches_inner_product(self, rs):
        for k, r in enumerate(rs.positive_roots):
            for w in itertools.product(range(-1, 2), repeat=rs.rank):
                assert root_pairing(rs, w, k) == 2 * inner_product(rs, w, r) / inner_product(rs, r, r)


def test_is_dominant():
    assert is_dominant(A2, (1, 1))
    assert not is_dominant(A2, (-1, 2))
    assert is_dominant(B3, (0, 0, 0))


class TestToDominant:
    def test_examples(self):
        assert to_dominant(A2, (-1, -1)) == ((1, 1), -1, False)
        assert to_dominant(A2, (1, 1)) == ((1, 1), 1, False)
        assert to_dominant(A2, (-1, 0)) == ((0, 1), 1, True)

    @pytest.mark.parametrize("rs,oracle", [(A1, oracles.a_dominant), (A2, oracles.a_dominant),
                                           (A3, oracles.a_dominant), (B2, oracles.b_dominant),
                                           (B3, oracles.b_dominant)], ids=lambda x: str(x)[:3])
    def test_against_permutation_model(self, rs, oracle):
        for w in itertools.product(range(-3, 4), repeat=rs.rank):
            assert tuple(to_dominant(rs, w)) == oracle(w), w

    @pytest.mark.parametrize("rs", SMALL, ids=str)
    def test_word_recovers_weight(self, rs):
        for w in itertools.product(range(-2, 3), repeat=rs.rank):
            dom = to_dominant(rs, w).dominant
            x = dom
            for i in reversed(reflection_word(rs, w)):
                x = reflect(rs, x, i)
            assert x == w
            assert to_dominant(rs, dom).dominant == dom

    @pytest.mark.parametrize("rs,orbit", [(A2, oracles.a_orbit), (A3, oracles.a_orbit),
                                          (B2, oracles.b_orbit), (B3, oracles.b_orbit)],
                             ids=["A2", "A3", "B2", "B3"])
    def test_orbit(self, rs, orbit):
        for w in itertools.product(range(0, 3), repeat=rs.rank):
            o = weyl_orbit(rs, w)
            assert o == orbit(w)
            assert [x for x in o if is_dominant(rs, x)] == [w]
            assert weyl_group_order(rs) % len(o) == 0


class TestRootLattice:
    def test_examples(self):
        assert in_root_lattice(A2, (2, -1))
        assert not in_root_lattice(A2, (1, 0))
        assert in_root_lattice(B3, (1, 0, 0))

    def test_index(self):
        # [weight lattice : root lattice] = det(cartan)
        for rs, idx in [(A1, 2), (A2, 3), (A3, 4), (B2, 2), (B3, 2)]:
            box = list(itertools.product(range(idx), repeat=rs.rank))
            cosets = {tuple(c % 1 for c in simple_root_coords(rs, w)) for w in box}
            assert len(cosets) == idx

    @pytest.mark.parametrize("rs", SMALL, ids=str)
    def test_roots_in_lattice(self, rs):
        assert all(in_root_lattice(rs, r) for r in rs.positive_roots)

    @given(st.data())
    def test_closed_under_sums(self, data):
        rs = data.draw(st.sampled_from(SMALL))
        u, v = data.draw(weights(rs)), data.draw(weights(rs))
        if in_root_lattice(rs, u) and in_root_lattice(rs, v):
            assert in_root_lattice(rs, [a + b for a, b in zip(u, v)])
            assert in_root_lattice(rs, [a - b for a, b in zip(u, v)])

    def test_a_type_coordinate_sum(self):
        # SL(n): a weight is in Q iff its e-coordinates sum to a multiple of n (zero after centring)
        for w in itertools.product(range(-2, 3), repeat=3):
            e = oracles.a_weight_to_e(w)
            assert in_root_lattice(A3, w) == (sum(e) % 4 == 0)


class TestDual:
    def test_examples(self):
        assert dual_weight(A2, (1, 0)) == (0, 1)
        assert dual_weight(A3, (1, 0, 0)) == (0, 0, 1)
        for w in itertools.product(range(3), repeat=3):
            assert dual_weight(B3, w) == w

    @pytest.mark.parametrize("rs", SMALL, ids=str)
    def test_involution(self, rs):
        for w in itertools.product(range(3), repeat=rs.rank):
            d = dual_weight(rs, w)
            assert dual_weight(rs, d) == w
            assert weyl_dim(rs, d) == weyl_dim(rs, w)

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            dual_weight(A2, (-1, 0))


class TestPartitions:
    def test_examples(self):
        assert partition_to_weight(3, (2, 1, 0)) == (1, 1)
        assert partition_to_weight(3, (0, 0, 0)) == (0, 0)
        assert partition_to_weight(4, (1, 1, 1, 0)) == (0, 0, 1)

    def test_too_many_parts(self):
        with pytest.raises(ValueError):
            partition_to_weight(2, (1, 1, 1))

    def test_column_of_height_n_is_trivial(self):
        assert partition_to_weight(3, (3, 2, 1)) == partition_to_weight(3, (2, 1, 0))

    @given(st.lists(st.integers(0, 5), min_size=1, max_size=5))
    def test_roundtrip(self, coords):
        n = len(coords) + 1
        w = tuple(coords)
        assert partition_to_weight(n, weight_to_partition(n, w)) == w


class TestWeylDim:
    def test_examples(self):
        assert weyl_dim(A2, (1, 0)) == 3
        assert weyl_dim(A2, (1, 1)) == 8
        assert weyl_dim(B3, (1, 0, 0)) == 7

    def test_b_standard_representation(self):
        for l in range(2, 7):
            rs = build_root_system("B", l)
            assert weyl_dim(rs, rs.fundamental(0)) == 2 * l + 1

    def test_hook_content(self):
        for n in (2, 3, 4):
            rs = build_root_system("A", n - 1)
            for w in itertools.product(range(3), repeat=n - 1):
                assert weyl_dim(rs, w) == oracles.hook_content_dim(weight_to_partition(n, w), n)

    def test_big_integers(self):
        rs = build_root_system("A", 6)
        assert weyl_dim(rs, (40,) * 6) == 41 ** 21

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            weyl_dim(A2, (1, -1))


def test_dominance():
    assert dominates(A2, (1, 1), (0, 0))
    assert not dominates(A2, (1, 1), (1, 0))  # different cosets
    assert not dominates(A2, (0, 0), (1, 1))


class TestNotation:
    def test_parse(self):
        rs = parse_root_system("B3")
        assert rs is B3
        assert parse_weight(rs, "[1,0,0]") == (1, 0, 0)
        assert parse_weight(A2, "[ -1 , 2 ]") == (-1, 2)
        assert parse_partition("2,1,0") == (2, 1)

    @pytest.mark.parametrize("text,col", [("[1,x]", 3), ("1,0", 0), ("[1,0", 4), ("[1,,0]", 3), ("[1,0]x", 5)])
    def test_caret_column(self, text, col):
        with pytest.raises(NotationError) as e:
            parse_weight(A2, text)
        assert e.value.column == col

    @pytest.mark.parametrize("text", ["C3", "A", "B1", "x2"])
    def test_bad_root_system(self, text):
        with pytest.raises(NotationError):
            parse_root_system(text)

    @settings(max_examples=50)
    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=2))
    def test_weight_roundtrip(self, coords):
        from lieconvex.rootdata import format_weight
        assert parse_weight(A2, format_weight(coords)) == tuple(coords)
