"""Independent oracles and enumeration helpers shared by the test modules.

These deliberately avoid the library's own algorithms: chains are recovered as
connected components of the cycle graph, augmented sets by replaying the
even/odd recipe on those components, and degree maxima by brute-force profile
enumeration (small spaces) or by a downward fixpoint of the constraints, which
computes the same componentwise-largest feasible profile.
"""

from __future__ import annotations

import copy
import itertools
from typing import Any, Callable, Iterator

from gocert import RamificationData, make_ramification


def all_ramifications(max_f: int, p: int, *, min_dim: int = 0) -> Iterator[RamificationData]:
    """All (f, s_inf) with f <= max_f; s_fin_count fixes parity."""
    for f in range(1, max_f + 1):
        for r in range(f + 1 - min_dim):
            for s in itertools.combinations(range(f), r):
                yield make_ramification(f, p, s, len(s) % 2)


def all_vanishing_sets(rd: RamificationData) -> Iterator[frozenset[int]]:
    """Every proper subset (including the empty one) of the split places."""
    splits = [i for i in range(rd.f) if i not in rd.s_inf]
    for r in range(len(splits)):
        for t in itertools.combinations(splits, r):
            yield frozenset(t)


def cycle_components(f: int, occupied: frozenset[int]) -> list[frozenset[int]]:
    """Connected components of occupied places in the cycle graph on Z/f."""
    remaining = set(occupied)
    components = []
    while remaining:
        stack = [min(remaining)]
        comp: set[int] = set()
        while stack:
            x = stack.pop()
            if x not in remaining:
                continue
            remaining.discard(x)
            comp.add(x)
            for y in ((x + 1) % f, (x - 1) % f):
                if y in remaining:
                    stack.append(y)
        components.append(frozenset(comp))
    return components


def replay_augmented_set(f: int, s_inf: frozenset[int], t: frozenset[int]) -> frozenset[int]:
    """Definition replay of the augmented vanishing set on connectivity components.

    For each component, take its intersection with t; when that is odd, add
    the predecessor of the component's backward end.
    """
    occupied = frozenset(s_inf | t)
    if len(occupied) == f:
        raise ValueError("replay undefined on the full cycle")
    augmented: set[int] = set()
    for comp in cycle_components(f, occupied):
        met = comp & t
        augmented |= met
        if len(met) % 2 == 1:
            tails = [x for x in comp if (x - 1) % f not in comp]
            assert len(tails) == 1, "components of a proper subset have one backward end"
            augmented.add((tails[0] - 1) % f)
    return frozenset(augmented)


def scan_constraints(f: int, s_inf: frozenset[int]) -> list[tuple[int, int, int]]:
    """(source, target, exponent) triples by a direct backward scan of the definition."""
    splits = [i for i in range(f) if i not in s_inf]
    triples = []
    for tau in splits:
        n = 1
        while (tau - n) % f in s_inf:
            n += 1
        triples.append((tau, (tau - n) % f, n))
    return triples


def enumerated_profile_max(rd: RamificationData, anchor: int) -> int:
    """Brute-force maximum of the profile total: anchor pinned at one, others in [1, p^f]."""
    f, p = rd.f, rd.p
    splits = [i for i in range(f) if i not in rd.s_inf]
    assert anchor in splits
    constraints = scan_constraints(f, frozenset(rd.s_inf))
    cap = p**f
    free = [tau for tau in splits if tau != anchor]
    best = 0
    for values in itertools.product(range(1, cap + 1), repeat=len(free)):
        profile = dict(zip(free, values))
        profile[anchor] = 1
        if all(profile[src] <= p**exp * profile[tgt] for src, tgt, exp in constraints):
            best = max(best, sum(profile.values()))
    return best


_NEXT_PRIME = {2: 3, 3: 5, 5: 7, 7: 11}


def document_mutations(doc: dict[str, Any]) -> Iterator[tuple[str, dict[str, Any]]]:
    """Deterministic single-field corruptions of a certificate document.

    Every yielded document differs from the original and stays JSON
    serializable; a sound verifier must reject each one.
    """

    def variant(label: str, mutate: Callable[[dict[str, Any]], None]) -> tuple[str, dict[str, Any]] | None:
        mutated = copy.deepcopy(doc)
        mutate(mutated)
        if mutated == doc:
            return None
        return label, mutated

    def set_in(target: dict[str, Any], path: list[Any], value: Any) -> None:
        for key in path[:-1]:
            target = target[key]
        target[path[-1]] = value

    nodes = doc["nodes"]
    root = nodes[0]
    recipes: list[tuple[str, Callable[[dict[str, Any]], None]]] = [
        ("verdict-flip", lambda d: set_in(d, ["verdict"], "inconclusive" if d["verdict"] == "finite" else "finite")),
        ("verdict-error", lambda d: set_in(d, ["verdict"], "error")),
        ("tool-version", lambda d: set_in(d, ["tool_version"], "gocert-0.0.0")),
        ("rigidity-count", lambda d: set_in(d, ["rigidity", "count"], 999)),
        ("rigidity-d", lambda d: set_in(d, ["rigidity", "d"], 2)),
        ("rigidity-euler", lambda d: set_in(d, ["rigidity", "euler_bound"], d["rigidity"]["euler_bound"] + 1)),
        ("rigidity-finite-flip", lambda d: set_in(d, ["rigidity", "finite"], not d["rigidity"]["finite"])),
        ("config-p", lambda d: set_in(d, ["config", "rd", "p"], _NEXT_PRIME[d["config"]["rd"]["p"]])),
        ("config-f", lambda d: set_in(d, ["config", "rd", "f"], d["config"]["rd"]["f"] + 1)),
        ("config-sfin-parity", lambda d: set_in(d, ["config", "rd", "s_fin_count"], d["config"]["rd"]["s_fin_count"] + 1)),
        ("config-sfin-even", lambda d: set_in(d, ["config", "rd", "s_fin_count"], d["config"]["rd"]["s_fin_count"] + 2)),
        ("config-sinf", lambda d: set_in(d, ["config", "rd", "s_inf"], d["config"]["rd"]["s_inf"] + [0])),
        ("config-genus", lambda d: set_in(d, ["config", "curve", "g"], d["config"]["curve"]["g"] + 1)),
        ("config-punctures", lambda d: set_in(d, ["config", "curve", "n"], d["config"]["curve"]["n"] + 2)),
        ("drop-rigidity", lambda d: d.pop("rigidity")),
        ("extra-key", lambda d: set_in(d, ["attestation"], "trust me")),
        ("empty-nodes", lambda d: set_in(d, ["nodes"], [])),
        ("drop-last-node", lambda d: d["nodes"].pop()),
        ("duplicate-last-node", lambda d: d["nodes"].append(copy.deepcopy(d["nodes"][-1]))),
        ("root-degree-bound-down", lambda d: set_in(d, ["nodes", 0, "degree_bound"], (root["degree_bound"] or 1) - 1)),
        ("root-degree-bound-up", lambda d: set_in(d, ["nodes", 0, "degree_bound"], (root["degree_bound"] or 0) + 1)),
        ("root-polarization", lambda d: set_in(d, ["nodes", 0, "polarization_bound"], (root["polarization_bound"] or 0) + 2)),
        ("root-dim", lambda d: set_in(d, ["nodes", 0, "dim"], root["dim"] + 1)),
        ("root-kind", lambda d: set_in(d, ["nodes", 0, "kind"], "stratum_descent" if root["kind"] == "ordinary_locus" else "ordinary_locus")),
        ("root-rd-p", lambda d: set_in(d, ["nodes", 0, "rd", "p"], _NEXT_PRIME[root["rd"]["p"]])),
        ("root-flags", lambda d: set_in(d, ["nodes", 0, "derived_flags"], root["derived_flags"] + ["unchecked"])),
        ("root-prose-drop", lambda d: set_in(d, ["nodes", 0, "prose_steps"], root["prose_steps"][1:])),
    ]
    if root["contradiction"] is not None:
        recipes += [
            ("contradiction-conclusion", lambda d: set_in(
                d, ["nodes", 0, "contradiction", "conclusion"],
                "inconclusive" if root["contradiction"]["conclusion"] == "contradiction" else "contradiction",
            )),
            ("contradiction-hom", lambda d: set_in(
                d, ["nodes", 0, "contradiction", "deg_hom"], root["contradiction"]["deg_hom"] + 1
            )),
            ("contradiction-tangent", lambda d: set_in(
                d, ["nodes", 0, "contradiction", "deg_tangent"], root["contradiction"]["deg_tangent"] - 1
            )),
            ("contradiction-forced", lambda d: set_in(
                d, ["nodes", 0, "contradiction", "forced_iso"], not root["contradiction"]["forced_iso"]
            )),
        ]
    if len(nodes) >= 2:
        child = nodes[1]
        recipes += [
            ("child-dim-not-smaller", lambda d: set_in(d, ["nodes", 1, "dim"], root["dim"])),
            ("child-fiber", lambda d: set_in(d, ["nodes", 1, "fiber_dim"], (child["fiber_dim"] or 0) + 1)),
            ("child-t", lambda d: set_in(d, ["nodes", 1, "t"], child["t"] + [child["rd"]["f"] - 1])),
            ("child-path-truncated", lambda d: set_in(d, ["nodes", 1, "path"], [])),
            ("child-rd-sinf", lambda d: set_in(d, ["nodes", 1, "rd", "s_inf"], child["rd"]["s_inf"][1:])),
        ]
    if len(nodes) >= 3:
        def swap(d: dict[str, Any]) -> None:
            d["nodes"][1], d["nodes"][2] = d["nodes"][2], d["nodes"][1]

        recipes.append(("node-order-swap", swap))

    for label, mutate in recipes:
        produced = variant(label, mutate)
        if produced is not None:
            yield produced


def relaxed_profile_max(rd: RamificationData, anchor: int) -> int:
    """Fixpoint form of the same maximum: lower each degree until every constraint holds.

    Feasible profiles are closed under componentwise max, so the downward
    iteration from the capped profile converges to the largest one; its total
    equals the brute-force maximum.
    """
    f, p = rd.f, rd.p
    splits = [i for i in range(f) if i not in rd.s_inf]
    assert anchor in splits
    constraints = scan_constraints(f, frozenset(rd.s_inf))
    degrees = {tau: p**f for tau in splits}
    degrees[anchor] = 1
    changed = True
    while changed:
        changed = False
        for src, tgt, exp in constraints:
            allowed = p**exp * degrees[tgt]
            if degrees[src] > allowed:
                degrees[src] = allowed
                changed = True
    return sum(degrees.values())
