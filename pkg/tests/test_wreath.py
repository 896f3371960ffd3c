"""Wreath-product arithmetic against the defining relation and a faithful copy."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wreathgen.actions import FiniteAction, IntTranslation, apply
from wreathgen.groups import (GroupTooLargeError, Perm, cyclic_group,
                              symmetric_group)
from wreathgen.wreath import WreathProduct

C2 = cyclic_group(2)
SYM3 = symmetric_group(3)
SMALL = WreathProduct(C2, FiniteAction(C2))
OVER_Z = WreathProduct(SYM3, IntTranslation())


def random_z_element(rng, max_shift=4, window=8):
    coords = {x: rng.choice(SYM3.elements)
              for x in range(-window, window + 1) if rng.random() < 0.3}
    return OVER_Z.element(coords, rng.randint(-max_shift, max_shift))


class TestAmbient:
    def test_conjugating_a_coordinate_translates_its_index(self):
        for W in (SMALL, WreathProduct(SYM3, FiniteAction(C2))):
            head_elements = W.action.head.elements
            for g in W.base_group.elements:
                for k in head_elements:
                    kk = W.head_embed(k)
                    for y in W.action.points():
                        assert kk.inverse() * W.base_embed(g, y) * kk == \
                            W.base_embed(g, apply(W.action, y, k))

    def test_orders(self):
        assert SMALL.order() == 8
        assert WreathProduct(SYM3, FiniteAction(C2)).order() == 72
        assert WreathProduct(cyclic_group(3), FiniteAction(SYM3)).order() == 162

    def test_infinite_ambient_has_no_order(self):
        with pytest.raises(ValueError):
            OVER_Z.order()
        with pytest.raises(ValueError):
            OVER_Z.enumerate_elements()

    def test_element_drops_identity_coordinates(self):
        u = SMALL.element({0: C2.identity, 1: C2.elements[1]}, C2.identity)
        assert u.support() == (1,)
        assert u.coordinate(0) == C2.identity

    def test_element_validation(self):
        flip = C2.elements[1]
        with pytest.raises(ValueError):
            SMALL.element({2: flip}, C2.identity)
        with pytest.raises(ValueError):
            SMALL.element({0: Perm.identity(3)}, C2.identity)
        with pytest.raises(ValueError):
            SMALL.element({0: flip}, Perm.identity(3))
        with pytest.raises(ValueError):
            SMALL.element([(0, flip), (0, C2.identity)], C2.identity)
        with pytest.raises(ValueError):
            OVER_Z.element({0: SYM3.elements[1]}, True)

    def test_enumeration_is_deterministic_and_complete(self):
        listed = SMALL.enumerate_elements()
        assert len(listed) == 8
        assert len(set(listed)) == 8
        assert listed == SMALL.enumerate_elements()
        assert listed[0] == SMALL.identity()

    def test_enumeration_cap(self):
        W = WreathProduct(SYM3, FiniteAction(C2))
        with pytest.raises(GroupTooLargeError):
            W.enumerate_elements(cap=10)


class TestElementArithmetic:
    def test_known_product_over_the_integers(self):
        a = SYM3.elements[1]
        c = SYM3.elements[2]
        u = OVER_Z.element({0: a}, 2)
        v = OVER_Z.element({-1: c}, -3)
        expected = OVER_Z.element({0: a, -3: c}, -1)
        assert u * v == expected

    def test_identity_and_inverse(self):
        rng = random.Random(11)
        for _ in range(100):
            u = random_z_element(rng)
            assert u * OVER_Z.identity() == u
            assert OVER_Z.identity() * u == u
            assert u * u.inverse() == OVER_Z.identity()
            assert u.inverse() * u == OVER_Z.identity()

    def test_associativity_over_the_integers(self):
        rng = random.Random(5)
        for _ in range(200):
            u, v, w = (random_z_element(rng) for _ in range(3))
            assert (u * v) * w == u * (v * w)

    def test_head_of_a_product_is_the_product_of_heads(self):
        rng = random.Random(7)
        for _ in range(100):
            u, v = random_z_element(rng), random_z_element(rng)
            assert (u * v).head == u.head + v.head

    def test_support_of_a_product_is_bounded(self):
        rng = random.Random(13)
        for _ in range(200):
            u, v = random_z_element(rng), random_z_element(rng)
            allowed = set(u.support()) | {x - u.head for x in v.support()}
            assert set((u * v).support()) <= allowed

    def test_powers(self):
        rng = random.Random(17)
        for _ in range(50):
            u = random_z_element(rng, max_shift=2, window=3)
            assert u ** 0 == OVER_Z.identity()
            assert u ** 3 == u * u * u
            assert u ** -2 == (u.inverse()) ** 2
            assert u ** 2 * u ** -2 == OVER_Z.identity()

    def test_conjugation_is_by_inverse_on_the_left(self):
        rng = random.Random(19)
        for _ in range(50):
            u, a = random_z_element(rng), random_z_element(rng)
            assert u.conjugate_by(a) == a.inverse() * u * a

    def test_elements_of_different_ambients_do_not_mix(self):
        u = SMALL.identity()
        v = OVER_Z.identity()
        with pytest.raises(ValueError):
            u * v

    def test_coordinate_point_validation(self):
        with pytest.raises(ValueError):
            SMALL.identity().coordinate(5)


class TestFaithfulCopy:
    def test_embedding_is_a_bijective_homomorphism_on_c2_wr_c2(self):
        group, embed = SMALL.imprimitive_embedding()
        elements = SMALL.enumerate_elements()
        images = {embed(u) for u in elements}
        assert len(images) == len(elements) == group.order
        assert images == set(group.elements)
        for u in elements:
            for v in elements:
                assert embed(u * v) == embed(u) * embed(v)

    def test_embedding_spot_checks_on_c3_wr_sym3(self):
        W = WreathProduct(cyclic_group(3), FiniteAction(SYM3))
        group, embed = W.imprimitive_embedding()
        assert group.order == 162
        rng = random.Random(23)
        pool = W.enumerate_elements()
        for _ in range(200):
            u, v = rng.choice(pool), rng.choice(pool)
            assert embed(u * v) == embed(u) * embed(v)

    def test_embedding_rejects_foreign_elements(self):
        _, embed = SMALL.imprimitive_embedding()
        with pytest.raises(ValueError):
            embed(OVER_Z.identity())


class TestAgainstFiniteWindow:
    """Products over the integers against a large cyclic head, support kept clear
    of the wraparound."""

    MODULUS = 40
    OFFSET = 20

    def setup_method(self):
        self.windowed = WreathProduct(SYM3, FiniteAction(cyclic_group(self.MODULUS)))
        self.rotation = self.windowed.action.head.generators[0]

    def to_window(self, u):
        coords = {x + self.OFFSET: g for x, g in u.base}
        head = self.windowed.action.head.identity
        step = self.rotation if u.head >= 0 else self.rotation.inverse()
        for _ in range(abs(u.head)):
            head = head * step
        return self.windowed.element(coords, head)

    def test_products_agree_inside_the_safe_window(self):
        rng = random.Random(29)
        for _ in range(200):
            u = random_z_element(rng, max_shift=4, window=8)
            v = random_z_element(rng, max_shift=4, window=8)
            assert self.to_window(u * v) == self.to_window(u) * self.to_window(v)

    def test_inverses_agree_inside_the_safe_window(self):
        rng = random.Random(31)
        for _ in range(200):
            u = random_z_element(rng, max_shift=4, window=8)
            assert self.to_window(u.inverse()) == self.to_window(u).inverse()


@given(st.lists(st.sampled_from(range(6)), min_size=1, max_size=5),
       st.integers(min_value=-3, max_value=3))
def test_hypothesis_inverse_of_products(indices, shift):
    factors = [OVER_Z.element({i - 2: SYM3.elements[i]}, shift) for i in indices]
    product = OVER_Z.identity()
    for f in factors:
        product = product * f
    reversed_inverses = OVER_Z.identity()
    for f in reversed(factors):
        reversed_inverses = reversed_inverses * f.inverse()
    assert product.inverse() == reversed_inverses
