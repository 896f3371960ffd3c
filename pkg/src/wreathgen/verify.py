"""Seeded verification suites exercising the identities behind the constructions.

Each suite returns a list of CheckResult records; a failing record carries the
concrete instance that broke.  All randomness is drawn from a Random seeded
with the suite name and the given seed, so runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .actions import FiniteAction, IntTranslation, cyclic_orbit, orbit_reps
from .constructions import (CoordinateContractError, alpha_power_form,
                            assemble_alpha_power, assemble_beta, beta,
                            build_alpha, collapse_orbit_conjugator,
                            collapse_orbit_product, gamma_coordinate,
                            torsion_igset, uniform_orbit_conjugator)
from .groups import FiniteGroup, Perm, class_of, closure, cyclic_group, symmetric_group
from .invgen import invariably_generates
from .wreath import WreathProduct


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class _Recorder:
    results: list[CheckResult] = field(default_factory=list)

    def record(self, name: str, failures: list[str], detail: str = "") -> None:
        if failures:
            self.results.append(CheckResult(name, False, failures[0]))
        else:
            self.results.append(CheckResult(name, True, detail))


def _rng(suite: str, seed: int) -> random.Random:
    return random.Random(f"{suite}:{seed}")


def _random_coords(rng: random.Random, G: FiniteGroup, points, p: float = 0.5
                   ) -> dict[int, Perm]:
    coords = {}
    for x in points:
        if rng.random() < p:
            coords[x] = rng.choice(G.elements)
    return coords


# -- conjugation: single coordinates translate, heads decompose -----------------


def _check_embedded_conjugates(W: WreathProduct, name: str, recorder: _Recorder) -> None:
    G = W.base_group
    head = W.action.head
    elements = W.enumerate_elements()
    failures: list[str] = []
    for u in elements:
        if u.is_base() and len(u.base) == 1:
            (y, g), = u.base
            for a in elements:
                conj = u.conjugate_by(a)
                target = W.action.point_image(y, a.head)
                if conj.support() != (target,) or conj.coordinate(target) not in class_of(G, g):
                    failures.append(f"u={u!r} a={a!r} gave {conj!r}")
                    break
        elif not u.base:
            for a in elements:
                conj = u.conjugate_by(a)
                if conj.head not in class_of(head, u.head):
                    failures.append(f"u={u!r} a={a!r} gave {conj!r}")
                    break
        if failures:
            break
    recorder.record(f"conjugation: embedded elements in {name}", failures,
                    f"{len(elements)} conjugators, exhaustive")


def _check_conjugation_hom(W: WreathProduct, name: str, recorder: _Recorder,
                           rng: random.Random | None, count: int) -> None:
    elements = W.enumerate_elements()
    if rng is None:
        triples = [(u, v, a) for u in elements for v in elements for a in elements]
        mode = "exhaustive"
    else:
        triples = [(rng.choice(elements), rng.choice(elements), rng.choice(elements))
                   for _ in range(count)]
        mode = f"{count} seeded triples"
    failures = []
    for u, v, a in triples:
        if (u * v).conjugate_by(a) != u.conjugate_by(a) * v.conjugate_by(a):
            failures.append(f"u={u!r} v={v!r} a={a!r}")
            break
    recorder.record(f"conjugation: respects products in {name}", failures, mode)


def suite_conjugation(seed: int = 0, count: int = 200) -> list[CheckResult]:
    rng = _rng("conjugation", seed)
    recorder = _Recorder()
    small = WreathProduct(cyclic_group(2), FiniteAction(cyclic_group(2)))
    large = WreathProduct(symmetric_group(3), FiniteAction(cyclic_group(2)))
    _check_embedded_conjugates(small, "c2 wr c2", recorder)
    _check_embedded_conjugates(large, "sym3 wr c2", recorder)
    _check_conjugation_hom(small, "c2 wr c2", recorder, None, count)
    _check_conjugation_hom(large, "sym3 wr c2", recorder, rng, count)
    return recorder.results


# -- coset: collapsing a cyclic-orbit tuple to one coordinate --------------------


def suite_coset(seed: int = 0, count: int = 500) -> list[CheckResult]:
    recorder = _Recorder()
    for base_name, base in (("c2", cyclic_group(2)), ("sym3", symmetric_group(3))):
        for d in (1, 2):
            W = WreathProduct(base, FiniteAction(cyclic_group(d + 1)))
            rng = _rng(f"coset:{base_name}:{d}", seed)
            collapse_failures: list[str] = []
            uniform_failures: list[str] = []
            for _ in range(count):
                k = rng.choice(W.action.head.elements)
                y = rng.randrange(W.action.degree)
                orbit = cyclic_orbit(W.action, y, k)
                off_orbit = [x for x in W.action.points() if x not in orbit]
                u = {x: rng.choice(base.elements) for x in orbit}
                v = _random_coords(rng, base, off_orbit)
                element = W.element({**u, **v}, k)

                a = collapse_orbit_conjugator(W, y, k, u)
                folded = collapse_orbit_product(W, y, k, u)
                expected = W.element({**v, y: folded}, k)
                if element.conjugate_by(a) != expected:
                    collapse_failures.append(f"y={y} k={k!r} u={u} v={v}")

                g = rng.choice(base.elements)
                single = W.element({**v, y: u[y]}, k)
                c = uniform_orbit_conjugator(W, y, k, g)
                expected2 = W.element({**v, y: g.inverse() * u[y] * g}, k)
                if single.conjugate_by(c) != expected2:
                    uniform_failures.append(f"y={y} k={k!r} u0={u[y]!r} g={g!r} v={v}")
            label = f"{base_name} wr c{d + 1}"
            recorder.record(f"coset: collapse along the orbit in {label}",
                            collapse_failures, f"{count} constructed conjugators")
            recorder.record(f"coset: uniform conjugation at one coordinate in {label}",
                            uniform_failures, f"{count} constructed conjugators")
    return recorder.results


# -- alpha / beta / gamma over the integers --------------------------------------


def _random_alpha(rng: random.Random, W: WreathProduct, g: Perm):
    window = range(-4, 5)
    return build_alpha(W, g,
                       _random_coords(rng, W.base_group, window),
                       _random_coords(rng, W.base_group, window))


def suite_alpha(seed: int = 0, count: int = 200) -> list[CheckResult]:
    rng = _rng("alpha", seed)
    W = WreathProduct(symmetric_group(3), IntTranslation())
    recorder = _Recorder()
    identity = W.base_group.identity
    failures = []
    for _ in range(count):
        alpha_e = _random_alpha(rng, W, identity)
        alpha_f = _random_alpha(rng, W, rng.choice(W.base_group.elements))
        m = rng.randint(0, 6)
        direct = alpha_power_form(alpha_e, alpha_f, m)
        assembled = assemble_alpha_power(alpha_e, alpha_f, m)
        if direct != assembled:
            failures.append(
                f"m={m} e-conj={dict(alpha_e.conjugator.base)} "
                f"f={alpha_f.g!r} f-conj={dict(alpha_f.conjugator.base)}")
    recorder.record("alpha: telescoped power product matches its closed form",
                    failures, f"{count} seeded instances, m <= 6")
    return recorder.results


def suite_beta(seed: int = 0, count: int = 200) -> list[CheckResult]:
    rng = _rng("beta", seed)
    W = WreathProduct(symmetric_group(3), IntTranslation())
    recorder = _Recorder()
    identity = W.base_group.identity
    form_failures = []
    head_failures = []
    for _ in range(count):
        alpha_e = _random_alpha(rng, W, identity)
        alpha_g = _random_alpha(rng, W, rng.choice(W.base_group.elements))
        m = rng.randint(0, 6)
        n = rng.randint(0, 4)
        direct = beta(alpha_e, alpha_g, m, n)
        if direct != assemble_beta(alpha_e, alpha_g, m, n):
            form_failures.append(f"m={m} n={n} e-conj={dict(alpha_e.conjugator.base)} "
                                 f"g={alpha_g.g!r} g-conj={dict(alpha_g.conjugator.base)}")
        if direct.head != 0:
            head_failures.append(f"m={m} n={n} head={direct.head}")
    recorder.record("beta: conjugated power product matches its closed form",
                    form_failures, f"{count} seeded instances, m <= 6, n <= 4")
    recorder.record("beta: the head is always the zero shift", head_failures,
                    f"{count} seeded instances")
    return recorder.results


def suite_gamma(seed: int = 0, count: int = 200) -> list[CheckResult]:
    rng = _rng("gamma", seed)
    W = WreathProduct(symmetric_group(3), IntTranslation())
    recorder = _Recorder()
    identity = W.base_group.identity
    targets = [Perm.from_cycles([(0, 1)], 3), Perm.from_cycles([(0, 1, 2)], 3)]
    failures = []
    for _ in range(count):
        alpha_e = _random_alpha(rng, W, identity)
        for g in targets:
            alpha_g = _random_alpha(rng, W, g)
            try:
                point, found = gamma_coordinate(alpha_e, alpha_g)
            except CoordinateContractError as exc:
                failures.append(str(exc))
                continue
            if point != alpha_e.support_radius or found != g:
                failures.append(f"g={g!r} -> ({point}, {found!r})")
    recorder.record("gamma: the chosen coordinate isolates each generator",
                    failures, f"{count} seeded instances, both generators of sym3")
    return recorder.results


# -- igsets: the explicit sets invariably generate --------------------------------


def _igset_ambients() -> list[tuple[str, WreathProduct, list[Perm], list[Perm]]]:
    c2 = cyclic_group(2)
    c3 = cyclic_group(3)
    s3 = symmetric_group(3)
    swap = Perm.from_cycles([(0, 1)], 3)
    rot3 = Perm.from_cycles([(0, 1, 2)], 3)
    return [
        ("c2 wr c2", WreathProduct(c2, FiniteAction(c2)),
         [c2.elements[1]], [c2.elements[1]]),
        ("c3 wr sym3", WreathProduct(c3, FiniteAction(s3)),
         [c3.elements[1]], [swap, rot3]),
    ]


def suite_igsets(seed: int = 0, count: int = 50) -> list[CheckResult]:
    recorder = _Recorder()
    rng = _rng("igsets", seed)
    for name, W, g_set, h_set in _igset_ambients():
        igset = torsion_igset(W, g_set, h_set)
        P, embed = W.imprimitive_embedding()
        ok, witness = invariably_generates(P, [embed(u) for u in igset])
        failures = [] if ok else [f"witness {witness!r}"]
        recorder.record(f"igsets: embedded base and head sets invariably generate {name}",
                        failures, f"order {P.order}, exhaustive tuple search")

        # Generation must also survive replacing the head set by arbitrary
        # conjugates when the full base copies ride along.
        base_gens = [embed(W.base_embed(g, y))
                     for y in orbit_reps(W.action) for g in W.base_group.generators]
        heads = [W.head_embed(h) for h in h_set]
        if W.order() <= 8:
            conjugator_picks = [[a] * len(heads) for a in W.enumerate_elements()]
            mode = "exhaustive conjugators"
        else:
            pool = W.enumerate_elements()
            conjugator_picks = [[rng.choice(pool) for _ in heads] for _ in range(count)]
            mode = f"{count} seeded conjugator choices"
        failures = []
        for picks in conjugator_picks:
            gens = base_gens + [embed(h.conjugate_by(a)) for h, a in zip(heads, picks)]
            if len(closure(gens, cap=P.order)) != P.order:
                failures.append(f"conjugators {picks!r}")
                break
        recorder.record(f"igsets: base copies with any head conjugates generate {name}",
                        failures, mode)
    return recorder.results


SUITES: dict[str, Callable[[int, int], list[CheckResult]]] = {
    "conjugation": suite_conjugation,
    "coset": suite_coset,
    "alpha": suite_alpha,
    "beta": suite_beta,
    "gamma": suite_gamma,
    "igsets": suite_igsets,
}


def run_suites(names: list[str], seed: int = 0, count: int | None = None) -> list[CheckResult]:
    """Run the named suites ('all' for every one) with their default counts."""
    if names == ["all"]:
        names = list(SUITES)
    results: list[CheckResult] = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        suite = SUITES[name]
        if count is None:
            results.extend(suite(seed))
        else:
            results.extend(suite(seed, count))
    return results
