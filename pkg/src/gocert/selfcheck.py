"""Exhaustive self-check suites over all small configurations.

Every suite enumerates the full configuration space up to the requested degree
bound and checks an invariant against an independent computation (definition
replay, connectivity-based chain finding, or fixpoint relaxation of the degree
constraints).  Failures carry the first counterexample found.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .certificate import build_certificate, verify_certificate
from .hasse import degree_bound, hasse_constraints, max_degree_sum
from .ledger import contradiction_check
from .places import RamificationData, make_ramification, n_tau, shimura_dimension, split_places
from .rigidity import CurveType, classify_filtration, euler_bound, finiteness_verdict, is_special
from .strata import Stratum, decompose_chains, fiber_dimension, induced_ramification


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None
    seconds: float


@dataclass(frozen=True)
class SelfcheckReport:
    max_f: int
    primes: tuple[int, ...]
    suites: tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(suite.passed for suite in self.suites)


def _all_ramifications(max_f: int, p: int) -> Iterator[RamificationData]:
    """Every (f, s_inf) with f <= max_f and s_inf a proper subset of the places."""
    for f in range(1, max_f + 1):
        for r in range(f):
            for s in itertools.combinations(range(f), r):
                yield make_ramification(f, p, s, len(s) % 2)


def _all_strata(max_f: int, p: int) -> Iterator[Stratum]:
    for rd in _all_ramifications(max_f, p):
        splits = split_places(rd)
        for r in range(len(splits)):
            for t in itertools.combinations(splits, r):
                yield Stratum(rd=rd, t=frozenset(t))


def _cycle_components(f: int, occupied: frozenset[int]) -> list[frozenset[int]]:
    """Connected components of the occupied places in the cycle graph on Z/f."""
    remaining = set(occupied)
    components = []
    while remaining:
        stack = [min(remaining)]
        comp = set()
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


def _relaxed_profile_max(rd: RamificationData, anchor: int) -> int:
    """Componentwise-largest constrained profile with the anchor at one, by downward fixpoint."""
    cap = rd.p ** rd.f
    degrees = {tau: cap for tau in split_places(rd)}
    degrees[anchor] = 1
    constraints = hasse_constraints(rd)
    changed = True
    while changed:
        changed = False
        for c in constraints:
            allowed = rd.p ** c.exponent * degrees[c.target]
            if degrees[c.source] > allowed:
                degrees[c.source] = allowed
                changed = True
    return sum(degrees.values())


def _suite_n_tau_tiling(max_f: int, p: int) -> tuple[int, str | None]:
    checked = 0
    for rd in _all_ramifications(max_f, p):
        checked += 1
        if sum(n_tau(rd, tau) for tau in split_places(rd)) != rd.f:
            return checked, f"f={rd.f} s_inf={sorted(rd.s_inf)}"
    return checked, None


def _suite_chain_partition(max_f: int, p: int) -> tuple[int, str | None]:
    checked = 0
    for st in _all_strata(max_f, p):
        checked += 1
        occupied = st.rd.s_inf | st.t
        chains = decompose_chains(st)
        covered: set[int] = set()
        for c in chains:
            if covered & set(c.elements):
                return checked, f"overlap: f={st.rd.f} s_inf={sorted(st.rd.s_inf)} t={sorted(st.t)}"
            covered |= set(c.elements)
            head_next = (c.head + 1) % st.rd.f
            tail_prev = (c.elements[-1] - 1) % st.rd.f
            if head_next in occupied or tail_prev in occupied:
                return checked, f"not maximal: f={st.rd.f} s_inf={sorted(st.rd.s_inf)} t={sorted(st.t)}"
        if covered != occupied:
            return checked, f"not covering: f={st.rd.f} s_inf={sorted(st.rd.s_inf)} t={sorted(st.t)}"
        if {frozenset(c.elements) for c in chains} != set(
            _cycle_components(st.rd.f, frozenset(occupied))
        ):
            return checked, f"component mismatch: f={st.rd.f} s_inf={sorted(st.rd.s_inf)} t={sorted(st.t)}"
    return checked, None


def _suite_induced_parity_growth(max_f: int, p: int) -> tuple[int, str | None]:
    checked = 0
    for st in _all_strata(max_f, p):
        checked += 1
        induced = induced_ramification(st)
        t_new = induced.s_inf - st.rd.s_inf
        label = f"f={st.rd.f} s_inf={sorted(st.rd.s_inf)} t={sorted(st.t)}"
        if (len(induced.s_inf) + induced.s_fin_count) % 2 != 0:
            return checked, f"parity: {label}"
        if not st.t <= (st.rd.s_inf | t_new):
            return checked, f"T not contained in the augmented set: {label}"
        if len(t_new | st.t) % 2 != 0:
            return checked, f"odd augmented set: {label}"
        if (t_new - st.t) & (st.rd.s_inf | st.t):
            return checked, f"augmentation not disjoint: {label}"
    return checked, None


def _suite_dimension_descent(max_f: int, p: int) -> tuple[int, str | None]:
    checked = 0
    for st in _all_strata(max_f, p):
        checked += 1
        label = f"f={st.rd.f} s_inf={sorted(st.rd.s_inf)} t={sorted(st.t)}"
        parent = shimura_dimension(st.rd)
        child = shimura_dimension(induced_ramification(st))
        n = fiber_dimension(st)
        odd = sum(1 for c in decompose_chains(st) if len(set(c.elements) & st.t) % 2 == 1)
        if child != parent - len(st.t) - n:
            return checked, f"descent formula: {label}"
        if n != odd:
            return checked, f"fiber count vs odd chains: {label}"
        if st.t and child >= parent:
            return checked, f"no strict descent: {label}"
    return checked, None


def _suite_degree_oracle(max_f: int, primes: tuple[int, ...]) -> tuple[int, str | None]:
    checked = 0
    for p in primes:
        for rd in _all_ramifications(max_f, p):
            checked += 1
            anchors = split_places(rd)
            expected = max(_relaxed_profile_max(rd, anchor) for anchor in anchors)
            if degree_bound(rd) != expected:
                return checked, f"p={p} f={rd.f} s_inf={sorted(rd.s_inf)}"
            for anchor in anchors:
                if max_degree_sum(rd, anchor) != _relaxed_profile_max(rd, anchor):
                    return checked, f"anchor {anchor}: p={p} f={rd.f} s_inf={sorted(rd.s_inf)}"
    return checked, None


def _suite_degree_monotone(max_f: int, primes: tuple[int, ...]) -> tuple[int, str | None]:
    checked = 0
    ordered = sorted(primes)
    for lo, hi in zip(ordered, ordered[1:]):
        for rd_lo in _all_ramifications(max_f, lo):
            checked += 1
            rd_hi = make_ramification(rd_lo.f, hi, rd_lo.s_inf, rd_lo.s_fin_count)
            if degree_bound(rd_lo) > degree_bound(rd_hi):
                return checked, f"p={lo}->{hi} f={rd_lo.f} s_inf={sorted(rd_lo.s_inf)}"
    return checked, None


def _suite_rigidity_table() -> tuple[int, str | None]:
    checked = 0
    for g in range(11):
        for n in range(11):
            checked += 1
            ct = CurveType(g, n)
            e = euler_bound(ct)
            solutions = classify_filtration(ct)
            if bool(solutions) != (e >= 2):
                return checked, f"(g,n)=({g},{n}): nonempty iff euler>=2 fails"
            singleton_iso = len(solutions) == 1 and solutions[0].higgs_iso
            if is_special(ct) != (e == 2) or singleton_iso != (e == 2):
                return checked, f"(g,n)=({g},{n}): special characterization fails"
            if finiteness_verdict(ct).finite != is_special(ct):
                return checked, f"(g,n)=({g},{n}): verdict disagrees with specialness"
    return checked, None


def _suite_contradiction_agreement() -> tuple[int, str | None]:
    checked = 0
    for g in range(11):
        for n in range(11):
            checked += 1
            ct = CurveType(g, n)
            verdict = contradiction_check(ct, 1, 0)
            if (verdict.conclusion == "contradiction") != (euler_bound(ct) == 2):
                return checked, f"(g,n)=({g},{n})"
    return checked, None


def _suite_certificate_roundtrip(max_f: int, primes: tuple[int, ...]) -> tuple[int, str | None]:
    checked = 0
    curves = (CurveType(2, 0), CurveType(0, 4), CurveType(3, 0))
    for p in primes[:2]:
        for rd in _all_ramifications(min(max_f, 4), p):
            for ct in curves:
                checked += 1
                cert = build_certificate(rd, ct)
                result = verify_certificate(cert)
                if not result:
                    return checked, (
                        f"p={p} f={rd.f} s_inf={sorted(rd.s_inf)} curve=({ct.g},{ct.n}): "
                        + "; ".join(result.failures)
                    )
    return checked, None


def selfcheck(max_f: int, primes: list[int]) -> SelfcheckReport:
    """Run every suite over all configurations with f <= max_f and the given primes."""
    prime_tuple = tuple(primes)
    if max_f < 1:
        return SelfcheckReport(max_f=max_f, primes=prime_tuple, suites=())
    base_p = prime_tuple[0] if prime_tuple else 2
    suites: list[SuiteResult] = []
    runs: list[tuple[str, Callable[[], tuple[int, str | None]]]] = [
        ("n-tau-tiling", lambda: _suite_n_tau_tiling(max_f, base_p)),
        ("chain-partition", lambda: _suite_chain_partition(max_f, base_p)),
        ("induced-parity-growth", lambda: _suite_induced_parity_growth(max_f, base_p)),
        ("dimension-descent", lambda: _suite_dimension_descent(max_f, base_p)),
        ("degree-oracle", lambda: _suite_degree_oracle(max_f, prime_tuple)),
        ("degree-monotone", lambda: _suite_degree_monotone(max_f, prime_tuple)),
        ("rigidity-table", _suite_rigidity_table),
        ("contradiction-agreement", _suite_contradiction_agreement),
        ("certificate-roundtrip", lambda: _suite_certificate_roundtrip(max_f, prime_tuple)),
    ]
    for name, run in runs:
        start = time.perf_counter()
        checked, counterexample = run()
        suites.append(
            SuiteResult(
                name=name,
                passed=counterexample is None,
                checked=checked,
                counterexample=counterexample,
                seconds=time.perf_counter() - start,
            )
        )
    return SelfcheckReport(max_f=max_f, primes=prime_tuple, suites=tuple(suites))
