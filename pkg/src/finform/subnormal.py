"""Chain-existence deciders for subnormality notions, with witness chains.

Four kinds of chain are supported between a subgroup A and its group G:
plain subnormal (normal steps only), Kegel-style chains for a formation
(each step normal or with core-quotient in the formation), formation-only
chains (core-quotient steps only), and sigma chains (normal steps or
sigma-primary core-quotients).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .formations import Formation, SigmaPartition, is_sigma_primary
from .groups import Group, Subgroup, core, normal_closure_in, quotient, _normal_in
from .lattice import all_subgroups, DEFAULT_LATTICE_BUDGET

NORMAL_STEP = "normal-step"
F_STEP = "f-step"


@dataclass(frozen=True)
class WitnessChain:
    """An ascending chain from a subgroup to its group, one tag per step."""

    terms: tuple[Subgroup, ...]
    step_kinds: tuple[str, ...]

    def __post_init__(self):
        if len(self.step_kinds) != len(self.terms) - 1:
            raise ValueError("need exactly one step kind per consecutive pair")

    def __len__(self) -> int:
        return len(self.step_kinds)

    def order_trail(self) -> tuple[int, ...]:
        return tuple(t.order for t in self.terms)

    def describe(self) -> str:
        if not self.step_kinds:
            return str(self.terms[0].order)
        bits = [str(self.terms[0].order)]
        for kind, term in zip(self.step_kinds, self.terms[1:]):
            bits.append(f"--{kind}--> {term.order}")
        return " ".join(bits)

    def validate(self, f_quotient_ok: Callable[[Group], bool] | None = None) -> bool:
        """Re-check every step against its tag.

        ``f_quotient_ok`` decides membership of a core-quotient for f-steps;
        it must be supplied when any step is tagged as one.
        """
        for i, kind in enumerate(self.step_kinds):
            low, high = self.terms[i], self.terms[i + 1]
            if not (low.members < high.members):
                return False
            if kind == NORMAL_STEP:
                if not _normal_in(high, low):
                    return False
            elif kind == F_STEP:
                if f_quotient_ok is None:
                    raise ValueError("validating an f-step needs a quotient test")
                if not f_quotient_ok(_core_quotient(low, high)):
                    return False
            else:
                return False
        return True


def _core_quotient(low: Subgroup, high: Subgroup) -> Group:
    """The group high / core(high, low)."""
    G = low.parent
    key = ("core_quotient", low.members, high.members)
    if key not in G._cache:
        cored = core(high, low)
        Hgrp = high.as_group()
        local = Subgroup(Hgrp, high.local_members(cored).tolist(), validate=False)
        G._cache[key] = quotient(Hgrp, local)[0]
    return G._cache[key]


def is_subnormal(G: Group, A: Subgroup) -> WitnessChain | None:
    """Witness chain of normal steps, by iterated normal-closure descent.

    A is subnormal iff the sequence H_0 = G, H_{k+1} = <A^{H_k}> stabilises
    at A; the descent itself is the chain, read upward.
    """
    chain = [G.full_subgroup()]
    while True:
        current = chain[-1]
        if current.members == A.members:
            break
        nxt = normal_closure_in(current, A)
        if nxt.members == current.members:
            return None
        chain.append(nxt)
    chain.reverse()
    return WitnessChain(tuple(chain), (NORMAL_STEP,) * (len(chain) - 1))


StepTest = Callable[[Subgroup, Subgroup], str | None]


def _kf_step(F: Formation) -> StepTest:
    def test(low: Subgroup, high: Subgroup) -> str | None:
        if _normal_in(high, low):
            return NORMAL_STEP
        if F.contains(_core_quotient(low, high)):
            return F_STEP
        return None

    return test


def _f_only_step(F: Formation) -> StepTest:
    def test(low: Subgroup, high: Subgroup) -> str | None:
        if F.contains(_core_quotient(low, high)):
            return F_STEP
        return None

    return test


def _sigma_step(sigma: SigmaPartition) -> StepTest:
    def test(low: Subgroup, high: Subgroup) -> str | None:
        if _normal_in(high, low):
            return NORMAL_STEP
        if is_sigma_primary(_core_quotient(low, high), sigma):
            return F_STEP
        return None

    return test


def _chain_search(
    G: Group,
    A: Subgroup,
    step: StepTest,
    step_cache_key: str,
    lattice_budget: int = DEFAULT_LATTICE_BUDGET,
) -> WitnessChain | None:
    """Breadth-first shortest witness chain over the overgroups of A.

    Ties are broken by lattice index, so witnesses are reproducible. Edge
    verdicts are cached per step kind on the parent group.
    """
    lat = all_subgroups(G, budget=lattice_budget)
    overs = lat.overgroups_of(A)  # ascending lattice indices
    target = len(lat) - 1  # the whole group sorts last
    start = lat.index_of(A)
    if start == target:
        return WitnessChain((lat.subgroups[start],), ())
    edge_cache: dict = G._cache.setdefault(("chain_edges", step_cache_key), {})
    prev: dict[int, tuple[int, str]] = {}
    queue = [start]
    seen = {start}
    while queue:
        nxt_queue = []
        for x in queue:
            Xsub = lat.subgroups[x]
            for y in overs:
                if y in seen or not lat.inclusion[x, y] or y == x:
                    continue
                ekey = (x, y)
                if ekey not in edge_cache:
                    edge_cache[ekey] = step(Xsub, lat.subgroups[y])
                kind = edge_cache[ekey]
                if kind is None:
                    continue
                seen.add(y)
                prev[y] = (x, kind)
                if y == target:
                    terms = [y]
                    kinds = []
                    while terms[-1] != start:
                        p, k = prev[terms[-1]]
                        kinds.append(k)
                        terms.append(p)
                    terms.reverse()
                    kinds.reverse()
                    return WitnessChain(
                        tuple(lat.subgroups[t] for t in terms), tuple(kinds)
                    )
                nxt_queue.append(y)
        queue = nxt_queue
    return None


def is_k_f_subnormal(
    G: Group,
    A: Subgroup,
    F: Formation,
    lattice_budget: int = DEFAULT_LATTICE_BUDGET,
) -> WitnessChain | None:
    """Kegel chain: each step normal or with core-quotient in F."""
    return _chain_search(G, A, _kf_step(F), f"kf:{F.name}", lattice_budget)


def is_f_subnormal(
    G: Group,
    A: Subgroup,
    F: Formation,
    lattice_budget: int = DEFAULT_LATTICE_BUDGET,
) -> WitnessChain | None:
    """Chain of core-quotient steps only."""
    return _chain_search(G, A, _f_only_step(F), f"f:{F.name}", lattice_budget)


def is_sigma_subnormal(
    G: Group,
    A: Subgroup,
    sigma: SigmaPartition,
    lattice_budget: int = DEFAULT_LATTICE_BUDGET,
) -> WitnessChain | None:
    """Chain of normal steps or sigma-primary core-quotient steps."""
    return _chain_search(G, A, _sigma_step(sigma), f"sigma:{sigma.key}", lattice_budget)
