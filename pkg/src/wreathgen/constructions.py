"""Explicit generating-set constructions inside wreath products.

Two strands live here.  Over a finite action: conjugators that collapse a
base tuple spread along a cyclic orbit down to one coordinate, and the
union-of-embeddings invariable generating set for torsion-type actions.
Over the integers: the alpha elements (conjugates of g@0 times the unit
shift), their telescoped power products, the beta conjugates that isolate a
chosen group element at a known coordinate, and the generating set used when
the action is not of torsion type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .actions import FiniteAction, IntTranslation, cyclic_orbit, orbit_reps
from .groups import Perm, generates
from .invgen import invariably_generates
from .wreath import WreathElement, WreathProduct


class CoordinateContractError(Exception):
    """Raised when an isolated coordinate does not match the element it encodes."""


# -- alpha / beta machinery over the integers --------------------------------


@dataclass(frozen=True)
class AlphaElement:
    """A conjugate of g@0 * shift(1) by a finitely supported base tuple.

    `conjugator` is the pure-base tuple b with element == b^-1 * g@0 * t * b,
    and `support_radius` is the least c >= 0 with the support of b inside
    the open window (-c, c).
    """

    element: WreathElement
    g: Perm
    conjugator: WreathElement
    support_radius: int


def _require_int_translation(W: WreathProduct) -> None:
    if not isinstance(W.action, IntTranslation):
        raise ValueError("alpha/beta machinery needs the shift action on the integers")


def _pure_base(W: WreathProduct, coords: Mapping[int, Perm]) -> WreathElement:
    return W.element(coords, 0)


def build_alpha(W: WreathProduct, g: Perm,
                conj_base: Mapping[int, Perm],
                w_correction: Mapping[int, Perm]) -> AlphaElement:
    """Assemble b^-1 * g@0 * shift(1) * b with b = conj_base * w_correction^-1.

    The two mappings are independent base tuples; the element itself is
    computed by literal wreath multiplication, never assembled symbolically.
    """
    _require_int_translation(W)
    if g not in W.base_group:
        raise ValueError(f"{g!r} is not in the base group")
    b = _pure_base(W, conj_base) * _pure_base(W, w_correction).inverse()
    element = b.inverse() * W.base_embed(g, 0) * W.head_embed(1) * b
    support = b.support()
    radius = max((abs(i) for i in support), default=-1) + 1
    return AlphaElement(element, g, b, radius)


def alpha_power_form(alpha_e: AlphaElement, alpha_f: AlphaElement, m: int) -> WreathElement:
    """alpha_e^-m * alpha_f^m by exact repeated multiplication."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return alpha_e.element ** (-m) * alpha_f.element ** m


def _conjugator_window(alpha: AlphaElement) -> list[tuple[int, Perm]]:
    b = alpha.conjugator
    c = alpha.support_radius
    return [(i, b.coordinate(i)) for i in range(-c + 1, c)]


def assemble_alpha_power(alpha_e: AlphaElement, alpha_f: AlphaElement, m: int) -> WreathElement:
    """The predicted closed form of alpha_e^-m * alpha_f^m.

    The inner conjugator blocks telescope away, leaving: the inverted first
    conjugator in place, the first conjugator shifted up by m, the inverted
    second conjugator shifted up by m, a run of f along 1..m, and the second
    conjugator in place.  Must equal alpha_power_form exactly.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    W = alpha_e.element.ambient
    a_window = _conjugator_window(alpha_e)
    b_window = _conjugator_window(alpha_f)
    f = alpha_f.g
    blocks = [
        {i: g.inverse() for i, g in a_window},
        {i + m: g for i, g in a_window},
        {i + m: g.inverse() for i, g in b_window},
        {j: f for j in range(1, m + 1)},
        {i: g for i, g in b_window},
    ]
    result = W.identity()
    for block in blocks:
        result = result * _pure_base(W, block)
    return result


def beta(alpha_e: AlphaElement, alpha_g: AlphaElement, m: int, n: int) -> WreathElement:
    """alpha_e^n * (alpha_e^-m * alpha_g^m) * alpha_e^-n, computed exactly."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    inner = alpha_power_form(alpha_e, alpha_g, m)
    return alpha_e.element ** n * inner * alpha_e.element ** (-n)


def assemble_beta(alpha_e: AlphaElement, alpha_g: AlphaElement, m: int, n: int) -> WreathElement:
    """The predicted closed form of beta: the power form shifted down by n,
    wrapped between the first conjugator's blocks.  Must equal beta exactly."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    W = alpha_e.element.ambient
    a_window = _conjugator_window(alpha_e)
    b_window = _conjugator_window(alpha_g)
    f = alpha_g.g
    blocks = [
        {i: g.inverse() for i, g in a_window},
        {i + m - n: g for i, g in a_window},
        {i + m - n: g.inverse() for i, g in b_window},
        {i - n: f for i in range(1, m + 1)},
        {i - n: g for i, g in b_window},
        {i - n: g.inverse() for i, g in a_window},
        {i: g for i, g in a_window},
    ]
    result = W.identity()
    for block in blocks:
        result = result * _pure_base(W, block)
    return result


@dataclass(frozen=True)
class BetaParams:
    """Exponents (m, n) placing a clean copy of g at coordinate c.

    Needs m beyond both conjugator windows (m > c + max(c, d)) and n large
    enough that the trailing window misses c (d - n < c), with n >= 1.
    """

    m: int
    n: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.c < 0 or self.d < 0:
            raise ValueError("support radii must be >= 0")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not self.m > self.c + max(self.c, self.d):
            raise ValueError(f"m = {self.m} is not beyond the conjugator windows")
        if not self.d - self.n < self.c:
            raise ValueError(f"n = {self.n} leaves the trailing window over coordinate {self.c}")


def choose_mn(c: int, d: int) -> BetaParams:
    """The least admissible exponents for support radii c and d."""
    return BetaParams(m=c + max(c, d) + 1, n=max(1, d - c + 1), c=c, d=d)


def gamma_coordinate(alpha_e: AlphaElement, alpha_g: AlphaElement) -> tuple[int, Perm]:
    """Isolate alpha_g's group element at a known coordinate.

    Builds beta(alpha_e, alpha_g, m + n, n) for the least admissible (m, n)
    and reads the coordinate at c = alpha_e.support_radius, which the block
    arithmetic guarantees to be exactly alpha_g.g; anything else is reported
    as a contract violation, since it would mean the arithmetic is wrong.
    """
    params = choose_mn(alpha_e.support_radius, alpha_g.support_radius)
    element = beta(alpha_e, alpha_g, params.m + params.n, params.n)
    found = element.coordinate(params.c)
    if found != alpha_g.g:
        raise CoordinateContractError(
            f"expected {alpha_g.g!r} at coordinate {params.c}, found {found!r} "
            f"(c={params.c}, d={params.d}, m={params.m}, n={params.n})"
        )
    return params.c, found


# -- orbit-collapse conjugators over finite actions ---------------------------


def _orbit_coords(W: WreathProduct, y: int, k, u: Mapping[int, Perm]) -> tuple[list[int], list[Perm]]:
    orbit = cyclic_orbit(W.action, y, k)
    extra = set(u) - set(orbit)
    if extra:
        raise ValueError(f"coordinates {sorted(extra)} lie off the orbit of {y}")
    identity = W.base_group.identity
    return orbit, [u.get(x, identity) for x in orbit]


def collapse_orbit_product(W: WreathProduct, y: int, k, u: Mapping[int, Perm]) -> Perm:
    """The ordered product of u's coordinates read around the <k>-orbit of y."""
    _, values = _orbit_coords(W, y, k, u)
    out = W.base_group.identity
    for g in values:
        out = out * g
    return out


def collapse_orbit_conjugator(W: WreathProduct, y: int, k, u: Mapping[int, Perm]) -> WreathElement:
    """A base tuple a with a^-1 * (u * v * k) * a = (collapsed u)@y * v * k.

    Repeatedly folding the top orbit coordinate one step down multiplies
    suffixes together, so the conjugator carries the suffix product
    u_j u_{j+1} ... u_d at the j-th orbit point for every j >= 1.  The
    off-orbit part v commutes with all of it and is untouched.
    """
    orbit, values = _orbit_coords(W, y, k, u)
    coords: dict[int, Perm] = {}
    suffix = W.base_group.identity
    for j in range(len(orbit) - 1, 0, -1):
        suffix = values[j] * suffix
        coords[orbit[j]] = suffix
    return _pure_base_finite(W, coords)


def uniform_orbit_conjugator(W: WreathProduct, y: int, k, g: Perm) -> WreathElement:
    """The tuple with g at every point of the <k>-orbit of y.

    Conjugating u@y * v * k by it turns the y coordinate into g^-1 * u * g
    and fixes everything else: the head permutes the orbit cyclically, so
    the tuple commutes with k, and the identical entries cancel off y.
    """
    orbit = cyclic_orbit(W.action, y, k)
    return _pure_base_finite(W, {x: g for x in orbit})


def _pure_base_finite(W: WreathProduct, coords: Mapping[int, Perm]) -> WreathElement:
    return W.element(coords, W.action.head_identity())


# -- explicit invariable generating sets --------------------------------------


def torsion_igset(W: WreathProduct, G_igset: Sequence[Perm],
                  H_igset: Sequence[Perm]) -> tuple[WreathElement, ...]:
    """Invariable generating set for a finite action: base sets at orbit
    representatives, plus the head set embedded.

    Both inputs are checked to invariably generate their own groups first.
    Identity elements are dropped; they never contribute to generation.
    """
    if not isinstance(W.action, FiniteAction):
        raise ValueError("needs a finite action")
    ok, _ = invariably_generates(W.base_group, G_igset)
    if not ok:
        raise ValueError("the base set does not invariably generate the base group")
    ok, _ = invariably_generates(W.action.head, H_igset)
    if not ok:
        raise ValueError("the head set does not invariably generate the head group")
    out: list[WreathElement] = []
    for y in orbit_reps(W.action):
        for g in G_igset:
            element = W.base_embed(g, y)
            if element.base and element not in out:
                out.append(element)
    for h in H_igset:
        element = W.head_embed(h)
        if h != W.action.head_identity() and element not in out:
            out.append(element)
    return tuple(out)


def nottorsion_igset(W: WreathProduct, gensets: Sequence[Sequence[Perm]],
                     t_shifts: Sequence[int], S_H: Sequence[int]) -> tuple[WreathElement, ...]:
    """Invariable generating set over the integer-shift action.

    Takes one plain generating set per orbit (there is a single orbit here),
    one nonzero shift per orbit, and an invariable generating set of shifts
    for the head.  The result is the head set, then each generating set
    embedded at its orbit representative, the same set multiplied by the
    orbit's shift, and the shift itself.  Identities are dropped.
    """
    _require_int_translation(W)
    reps = orbit_reps(W.action)
    if len(gensets) != len(reps) or len(t_shifts) != len(reps):
        raise ValueError(f"need exactly {len(reps)} generating sets and shifts")
    for gens in gensets:
        if not generates(W.base_group, gens):
            raise ValueError("a listed set does not generate the base group")
    for t in t_shifts:
        if t == 0:
            raise ValueError("orbit shifts must have infinite order")
    if not S_H or math.gcd(*(abs(s) for s in S_H)) != 1:
        raise ValueError("the head shifts do not invariably generate the integers")
    out: list[WreathElement] = []

    def push(element: WreathElement) -> None:
        if element != W.identity() and element not in out:
            out.append(element)

    for s in S_H:
        push(W.head_embed(s))
    for y, gens, t in zip(reps, gensets, t_shifts):
        shift = W.head_embed(t)
        for g in gens:
            push(W.base_embed(g, y))
        for g in gens:
            push(W.base_embed(g, y) * shift)
        push(shift)
    return tuple(out)
