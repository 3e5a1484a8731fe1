"""Goren-Oort stratum combinatorics: chains, the augmented ramification set, fiber counts.

A stratum is the common vanishing locus of the partial Hasse invariants
indexed by a set T of split places.  The occupied places s_inf | T fall into
maximal backward-Frobenius chains; each chain contributes its intersection
with T to a new ramification set, extended by one extra backward step whenever
that intersection has odd size.  Over the quaternionic datum of the augmented
set the stratum is a (P^1)^N-bundle, with one projective line per odd chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .places import (
    PlaceCycle,
    RamificationData,
    shimura_dimension,
    sigma_pow,
    split_places,
)


@dataclass(frozen=True)
class Stratum:
    """A ramification datum with a proper subset T of its split places."""

    rd: RamificationData
    t: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", frozenset(self.t))
        splits = set(split_places(self.rd))
        if not self.t <= splits:
            raise ValueError(
                f"T {sorted(self.t)} must consist of split places {sorted(splits)}"
            )
        if self.t == splits:
            raise ValueError("T must be a proper subset of the split places")


@dataclass(frozen=True)
class Chain:
    """Maximal backward run head, sigma^{-1} head, ..., sigma^{-m} head of occupied places."""

    cycle: PlaceCycle
    head: int
    length: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.length != len(self.elements) or self.length < 1:
            raise ValueError(f"chain length {self.length} disagrees with elements {self.elements}")
        for j, elem in enumerate(self.elements):
            if elem != sigma_pow(self.cycle, self.head, -j):
                raise ValueError(f"chain elements {self.elements} are not a backward run from {self.head}")


def decompose_chains(st: Stratum) -> tuple[Chain, ...]:
    """Partition s_inf | T into maximal chains, in ascending order of head place.

    A head is an occupied place whose Frobenius successor is free; the chain
    walks backwards from it while places stay occupied.  Undefined when the
    occupied set is the whole cycle (excluded by the stratum invariants).
    """
    f = st.rd.f
    occupied = st.rd.s_inf | st.t
    if len(occupied) == f:
        raise ValueError("chain decomposition is undefined when s_inf and T cover every place")
    chains = []
    for head in sorted(occupied):
        if (head + 1) % f in occupied:
            continue
        elements = [head]
        while (elements[-1] - 1) % f in occupied:
            elements.append((elements[-1] - 1) % f)
        chains.append(
            Chain(cycle=st.rd.cycle, head=head, length=len(elements), elements=tuple(elements))
        )
    return tuple(chains)


def chain_augment(c: Chain, t: frozenset[int]) -> frozenset[int]:
    """Even-size contribution of one chain: c & T, plus one extra backward step if |c & T| is odd."""
    met = frozenset(c.elements) & frozenset(t)
    if len(met) % 2 == 0:
        return met
    return met | {sigma_pow(c.cycle, c.head, -c.length)}


def induced_ramification(st: Stratum) -> RamificationData:
    """Quaternionic datum the stratum fibers over: s_inf extended by every chain contribution.

    The extension has even size, contains T, and adds only places outside
    s_inf | T, so the even-ramification parity is preserved.
    """
    t_aug: set[int] = set()
    for c in decompose_chains(st):
        t_aug |= chain_augment(c, st.t)
    return RamificationData(
        cycle=st.rd.cycle,
        s_inf=st.rd.s_inf | t_aug,
        s_fin_count=st.rd.s_fin_count,
        p=st.rd.p,
    )


def fiber_dimension(st: Stratum) -> int:
    """Number N of projective-line factors in the fibration over the induced datum.

    Computed by dimension bookkeeping (stratum dimension minus base dimension);
    it coincides with the number of chains meeting T in an odd set.
    """
    parent = shimura_dimension(st.rd)
    child = shimura_dimension(induced_ramification(st))
    return (parent - len(st.t)) - child


def strata_children(rd: RamificationData) -> list[tuple[frozenset[int], RamificationData]]:
    """All proper nonempty vanishing sets T with their induced data, in bitmask order.

    Bit j of the mask selects the j-th split place in ascending order.
    Duplicate induced data are kept: the list mirrors the full case split.
    """
    if shimura_dimension(rd) < 1:
        raise ValueError("strata enumeration needs at least one split place")
    splits = split_places(rd)
    m = len(splits)
    children = []
    for mask in range(1, (1 << m) - 1):
        t = frozenset(splits[j] for j in range(m) if mask >> j & 1)
        children.append((t, induced_ramification(Stratum(rd=rd, t=t))))
    return children
