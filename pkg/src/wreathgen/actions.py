"""Head-group actions on index sets: finite faithful actions and integer shifts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .groups import FiniteGroup, Perm, closure, compose

INFINITE = float("inf")


@dataclass(frozen=True)
class FiniteAction:
    """A finite group permuting the points {0, ..., degree-1} it is written on.

    The head group's elements are permutations of the point set itself, so
    the action is faithful by construction: distinct elements are distinct
    point maps.
    """

    head: FiniteGroup

    @property
    def degree(self) -> int:
        return self.head.degree

    def points(self) -> range:
        return range(self.degree)

    def head_identity(self) -> Perm:
        return self.head.identity

    def head_compose(self, a: Perm, b: Perm) -> Perm:
        return compose(a, b)

    def head_inverse(self, h: Perm) -> Perm:
        return h.inverse()

    def contains_head(self, h: object) -> bool:
        return isinstance(h, Perm) and h in self.head

    def contains_point(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self.degree

    def point_image(self, x: int, h: Perm) -> int:
        return h.images[x]


@dataclass(frozen=True)
class IntTranslation:
    """The integers shifting themselves: point x under shift s goes to x + s."""

    def head_identity(self) -> int:
        return 0

    def head_compose(self, a: int, b: int) -> int:
        return a + b

    def head_inverse(self, h: int) -> int:
        return -h

    def contains_head(self, h: object) -> bool:
        return isinstance(h, int) and not isinstance(h, bool)

    def contains_point(self, x: object) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def point_image(self, x: int, s: int) -> int:
        return x + s


ActionSpec = Union[FiniteAction, IntTranslation]


def apply(action: ActionSpec, x: int, h) -> int:
    """The image of point x under head element h (a right action)."""
    if not action.contains_point(x):
        raise ValueError(f"point {x!r} is not in the action's index set")
    if not action.contains_head(h):
        raise ValueError(f"{h!r} is not a head element of this action")
    return action.point_image(x, h)


def orbit_reps(action: ActionSpec) -> list[int]:
    """One representative per head orbit: the least point of each, ascending."""
    if isinstance(action, IntTranslation):
        return [0]
    seen: set[int] = set()
    reps: list[int] = []
    for x in action.points():
        if x in seen:
            continue
        reps.append(x)
        frontier = [x]
        seen.add(x)
        while frontier:
            y = frontier.pop()
            for g in action.head.generators:
                z = action.point_image(y, g)
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
    return reps


def cyclic_orbit(action: ActionSpec, x: int, k) -> list[int]:
    """The finite orbit [x, x·k, x·k², ...] of x under the cyclic group <k>."""
    if isinstance(action, IntTranslation):
        if not action.contains_point(x) or not action.contains_head(k):
            raise ValueError("invalid point or shift")
        if k != 0:
            raise ValueError("orbit of a nonzero shift on the integers is infinite")
        return [x]
    orbit = [x]
    y = apply(action, x, k)
    while y != x:
        orbit.append(y)
        y = action.point_image(y, k)
    return orbit


def cyclic_orbit_size(action: ActionSpec, x: int, k) -> int | float:
    """|x·<k>|, or INFINITE for a nonzero shift of the integers."""
    if isinstance(action, IntTranslation):
        if not action.contains_point(x) or not action.contains_head(k):
            raise ValueError("invalid point or shift")
        return 1 if k == 0 else INFINITE
    return len(cyclic_orbit(action, x, k))


def is_torsion_type(action: ActionSpec) -> bool:
    """Whether some point's whole orbit consists of points with finite cyclic orbits.

    Concretely: there is a point y such that for every x in y's head orbit
    and every head element k, the orbit of x under <k> is finite.  A finite
    action always qualifies; the integers shifting themselves never do,
    since the shift by one already gives every point an infinite orbit.
    """
    if isinstance(action, FiniteAction):
        return True
    return False


def finitely_many_orbits(action: ActionSpec) -> bool:
    """True for both supported families: finite actions and the single-orbit shifts."""
    return True


def regular_action(H: FiniteGroup) -> FiniteAction:
    """H permuting its own element list by right multiplication."""
    gens = []
    for h in H.generators:
        gens.append(Perm(tuple(H.index_of(compose(x, h)) for x in H.elements)))
    head = closure(gens, cap=len(H))
    if len(head) != len(H):
        raise RuntimeError("regular action has wrong order")
    return FiniteAction(head)
