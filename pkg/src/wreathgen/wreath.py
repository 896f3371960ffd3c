"""Exact wreath-product arithmetic: finitely supported base tuples with a head element.

An element is a pair (w, k): a finitely supported map w from index points to
base-group elements, together with a head element k acting on the points from
the right.  Multiplication follows the convention that conjugating a single
base coordinate by a head element translates its index:

    k^-1 * g@y * k  ==  g@(y.k)

which forces (w1, k1)(w2, k2) = (x -> w1(x) * w2(x.k1), k1 k2).  Every ambient
runs a construction-time self-test of that relation on its generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Union

from .actions import ActionSpec, FiniteAction, IntTranslation, apply, orbit_reps
from .groups import FiniteGroup, GroupTooLargeError, Perm, closure

DEFAULT_ENUMERATION_CAP = 100_000

HeadElement = Union[Perm, int]


@dataclass(frozen=True)
class WreathProduct:
    """The ambient wreath product of a finite base group by an acting head."""

    base_group: FiniteGroup
    action: ActionSpec

    def __post_init__(self) -> None:
        if not isinstance(self.action, (FiniteAction, IntTranslation)):
            raise TypeError(f"unsupported action: {self.action!r}")
        self._self_test()

    def _head_generators(self) -> list[HeadElement]:
        if isinstance(self.action, IntTranslation):
            return [1]
        return list(self.action.head.generators)

    def _self_test(self) -> None:
        # The multiplication formula is only trusted because this relation
        # holds literally; check it on generators before handing out elements.
        for g in self.base_group.generators:
            for k in self._head_generators():
                kk = self.head_embed(k)
                for y in orbit_reps(self.action):
                    lhs = kk.inverse() * self.base_embed(g, y) * kk
                    rhs = self.base_embed(g, apply(self.action, y, k))
                    if lhs != rhs:
                        raise RuntimeError(
                            f"conjugation convention violated: {lhs!r} != {rhs!r}"
                        )

    # -- element constructors ------------------------------------------------

    def element(self, base: Mapping[int, Perm] | Iterable[tuple[int, Perm]],
                head: HeadElement) -> WreathElement:
        """Build an element from a point->base-element mapping and a head element."""
        items = base.items() if isinstance(base, Mapping) else base
        canonical: dict[int, Perm] = {}
        listed: set[int] = set()
        for x, g in items:
            if not self.action.contains_point(x):
                raise ValueError(f"point {x!r} is not in the index set")
            if g not in self.base_group:
                raise ValueError(f"{g!r} is not in the base group")
            if x in listed:
                raise ValueError(f"point {x} listed twice")
            listed.add(x)
            if not g.is_identity():
                canonical[x] = g
        if not self.action.contains_head(head):
            raise ValueError(f"{head!r} is not a head element")
        return WreathElement(self, tuple(sorted(canonical.items())), head)

    def identity(self) -> WreathElement:
        return self.element({}, self.action.head_identity())

    def base_embed(self, g: Perm, x: int) -> WreathElement:
        """The base element g placed at coordinate x."""
        return self.element({x: g}, self.action.head_identity())

    def head_embed(self, head: HeadElement) -> WreathElement:
        return self.element({}, head)

    # -- whole-group views ---------------------------------------------------

    def order(self) -> int:
        if isinstance(self.action, IntTranslation):
            raise ValueError("wreath product over the integers is infinite")
        return len(self.base_group) ** self.action.degree * len(self.action.head)

    def enumerate_elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> list[WreathElement]:
        """All elements, head-major: base tuples cycle fastest, rightmost point fastest."""
        if isinstance(self.action, IntTranslation):
            raise ValueError("wreath product over the integers is infinite")
        if self.order() > cap:
            raise GroupTooLargeError(f"group too large to enumerate: {self.order()} > {cap}")
        points = list(self.action.points())
        out = []
        for head in self.action.head.elements:
            for picks in itertools.product(self.base_group.elements, repeat=len(points)):
                out.append(self.element(dict(zip(points, picks)), head))
        return out

    def imprimitive_embedding(self, cap: int = DEFAULT_ENUMERATION_CAP
                              ) -> tuple[FiniteGroup, Callable[[WreathElement], Perm]]:
        """A faithful permutation copy on points (x, p), plus the embedding map.

        The pair (x, p) is encoded as x * degree(base) + p and moves to
        (x.k, p.w(x)); the returned group is the closure of the embedded
        generators and has the full wreath-product order.
        """
        if isinstance(self.action, IntTranslation):
            raise ValueError("wreath product over the integers is infinite")
        degree_g = self.base_group.degree
        points = list(self.action.points())

        def embed(u: WreathElement) -> Perm:
            if u.ambient != self:
                raise ValueError("element from a different ambient wreath product")
            images = [0] * (len(points) * degree_g)
            lookup = dict(u.base)
            for x in points:
                w_x = lookup.get(x, self.base_group.identity)
                xk = self.action.point_image(x, u.head)
                for p in range(degree_g):
                    images[x * degree_g + p] = xk * degree_g + w_x.images[p]
            return Perm(tuple(images))

        gens = [self.base_embed(g, y)
                for y in orbit_reps(self.action) for g in self.base_group.generators]
        gens += [self.head_embed(k) for k in self._head_generators()]
        if self.order() > cap:
            raise GroupTooLargeError(f"group too large to embed: {self.order()} > {cap}")
        group = closure([embed(u) for u in gens], cap=self.order())
        if len(group) != self.order():
            raise RuntimeError("embedded copy has wrong order")
        return group, embed


@dataclass(frozen=True)
class WreathElement:
    """One wreath-product element: sorted nontrivial base coordinates plus a head."""

    ambient: WreathProduct = field(repr=False)
    base: tuple[tuple[int, Perm], ...]
    head: HeadElement

    def support(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.base)

    def coordinate(self, x: int) -> Perm:
        """The base entry at point x; the base group's identity off the support."""
        if not self.ambient.action.contains_point(x):
            raise ValueError(f"point {x!r} is not in the index set")
        for point, g in self.base:
            if point == x:
                return g
        return self.ambient.base_group.identity

    def is_base(self) -> bool:
        return self.head == self.ambient.action.head_identity()

    def __mul__(self, other: object) -> WreathElement:
        if not isinstance(other, WreathElement):
            return NotImplemented
        if self.ambient != other.ambient:
            raise ValueError("elements live in different ambient wreath products")
        action = self.ambient.action
        new_head = action.head_compose(self.head, other.head)
        k1_inv = action.head_inverse(self.head)
        left = dict(self.base)
        right = dict(other.base)
        points = set(left)
        points.update(action.point_image(z, k1_inv) for z in right)
        identity = self.ambient.base_group.identity
        merged: dict[int, Perm] = {}
        for x in points:
            g = left.get(x, identity) * right.get(action.point_image(x, self.head), identity)
            if not g.is_identity():
                merged[x] = g
        return WreathElement(self.ambient, tuple(sorted(merged.items())), new_head)

    def inverse(self) -> WreathElement:
        action = self.ambient.action
        k_inv = action.head_inverse(self.head)
        flipped = {action.point_image(x, self.head): g.inverse() for x, g in self.base}
        return WreathElement(self.ambient, tuple(sorted(flipped.items())), k_inv)

    def __pow__(self, n: int) -> WreathElement:
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ambient.identity()
        for _ in range(n):
            result = result * self
        return result

    def conjugate_by(self, a: WreathElement) -> WreathElement:
        """a^-1 * self * a."""
        return a.inverse() * self * a

    def __repr__(self) -> str:
        entries = ", ".join(f"{x}: {g.images}" for x, g in self.base)
        head = self.head.images if isinstance(self.head, Perm) else f"shift({self.head:+d})"
        return f"WreathElement({{{entries}}}, head={head})"
