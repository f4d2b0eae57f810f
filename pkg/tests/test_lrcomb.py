import itertools
import json
import pathlib
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieconvex.charmult import tensor_decompose, weight_multiplicities
from lieconvex.lrcomb import (
    LRTableau,
    SkewShape,
    kostka,
    lr_coefficient,
    lr_decompose,
    lr_product,
    lr_tableaux,
    stretch_probe,
)
from lieconvex.rootdata import build_root_system, partition_to_weight

import oracles

GOLDEN = json.loads((pathlib.Path(__file__).parent / "golden" / "values.json").read_text())


def partitions_in_box(rows, cols):
    return [p for p in itertools.product(range(cols + 1), repeat=rows) if list(p) == sorted(p, reverse=True)]


class TestKostka:
    def test_examples(self):
        assert kostka((2, 1), (2, 1)) == 1
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((1, 1), (2,)) == 0

    def test_size_mismatch(self):
        assert kostka((2, 1), (1, 1)) == 0

    def test_brute_force(self):
        for shape in [(3,), (2, 1), (1, 1, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2), (2, 2, 1), (3, 1, 1)]:
            n = sum(shape)
            for content in itertools.product(range(n + 1), repeat=3):
                if sum(content) == n:
                    assert kostka(shape, content) == oracles.ssyt_count(shape, content), (shape, content)

    @settings(max_examples=50)
    @given(st.permutations([3, 1, 0, 2]))
    def test_content_symmetry(self, content):
        assert kostka((3, 2, 1), content) == kostka((3, 2, 1), (3, 2, 1, 0))

    def test_matches_weight_multiplicity(self):
        for n in (3, 4):
            rs = build_root_system("A", n - 1)
            for shape in partitions_in_box(n, 2):
                ws = weight_multiplicities(rs, partition_to_weight(n, shape))
                for content in itertools.product(range(sum(shape) + 1), repeat=n):
                    if sum(content) != sum(shape):
                        continue
                    mu = tuple(content[i] - content[i + 1] for i in range(n - 1))
                    assert kostka(shape, content) == ws.mult.get(mu, 0)


class TestLR:
    def test_examples(self):
        assert lr_coefficient((2, 1), (), (2, 1)) == 1
        assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
        assert lr_coefficient((1,), (1,), (2, 2)) == 0

    def test_tableaux_are_valid(self):
        tabs = list(lr_tableaux((3, 2, 1), (2, 1), (2, 1)))
        assert len(tabs) == 2
        for t in tabs:
            assert t.is_valid()
            assert t.content() == (2, 1)

    def test_invalid_tableau_detected(self):
        shape = SkewShape((2, 1), (1,))
        assert LRTableau(shape, ((1,), (1,))).is_valid()
        assert not LRTableau(shape, ((2,), (1,))).is_valid()  # reading word starts with 2

    def test_skew_shape_containment(self):
        with pytest.raises(ValueError):
            SkewShape((1,), (2,))

    def test_against_schur_products(self):
        for lam, mu in itertools.combinations_with_replacement([(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)], 2):
            assert lr_product(lam, mu, 3) == oracles.schur_product_decomposition(lam, mu, 3)

    def test_golden_21_21(self):
        expect = {tuple(k): v for k, v in GOLDEN["lr_product_21_21_n3"]}
        assert lr_product((2, 1), (2, 1), 3) == expect
        assert lr_decompose((2, 1), (2, 1), 3) == {
            (2, 2): 1, (3, 0): 1, (0, 3): 1, (1, 1): 2, (0, 0): 1}

    def test_decompose_examples(self):
        assert lr_product((1,), (1,), 3) == {(2,): 1, (1, 1): 1}
        assert lr_decompose((2, 1), (), 3) == {(1, 1): 1}

    def test_part_count(self):
        with pytest.raises(ValueError):
            lr_decompose((1, 1, 1, 1), (1,), 3)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_symmetry(self, data):
        part = st.lists(st.integers(0, 3), max_size=3).map(lambda p: tuple(sorted(p, reverse=True)))
        lam, mu = data.draw(part), data.draw(part)
        for nu in lr_product(lam, mu):
            assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)

    def test_matches_klimyk_at_n4(self):
        rs = build_root_system("A", 3)
        rng = random.Random(11)
        box = partitions_in_box(4, 2)
        for _ in range(40):
            lam, mu = rng.choice(box), rng.choice(box)
            assert lr_decompose(lam, mu, 4) == tensor_decompose(rs, partition_to_weight(4, lam),
                                                                 partition_to_weight(4, mu))


class TestStretch:
    def test_examples(self):
        assert stretch_probe((1,), (1,), (1, 1), 3) == [(1, 1), (2, 1), (3, 1)]
        assert stretch_probe((), (), (), 2) == [(1, 1), (2, 1)]

    def test_golden(self):
        expect = [tuple(x) for x in GOLDEN["stretch_21_21_321"]]
        assert stretch_probe((2, 1), (2, 1), (3, 2, 1), 3) == expect
        assert expect[1][1] >= 2

    def test_bad_mmax(self):
        with pytest.raises(ValueError):
            stretch_probe((1,), (1,), (2,), 0)
