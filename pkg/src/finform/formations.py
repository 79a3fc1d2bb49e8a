"""Formation membership, residuals, central sections, and hypercentres.

A formation here is a named membership predicate over groups plus
hereditary/saturated metadata. The built-ins are the nilpotent,
supersoluble, and soluble classes and the sigma-nilpotent class for a
chosen prime partition; all four are hereditary saturated formations, and
the verification sweeps exercise those laws rather than assuming them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .construct import semidirect_section
from .errors import (
    FormationLawViolated,
    HypercentreNotHypercentral,
    NotNormal,
    UnknownFormation,
)
from .groups import (
    Group,
    Subgroup,
    centralizer,
    centralizer_of_section,
    derived_series,
    generated_subgroup,
    lower_central_series,
    quotient,
)
from .lattice import (
    chief_series_through,
    group_primes,
    is_prime,
    normal_closure,
    normal_hall_subgroup,
    normal_subgroups,
)

# Centrality tests build a semidirect product of a section by a quotient;
# its order can exceed the group-construction cap, so it gets its own guard.
SECTION_PRODUCT_CAP = 4096


# -- sigma partitions -------------------------------------------------------


@dataclass(frozen=True)
class SigmaPartition:
    """A partition of the primes into classes.

    Only finitely many classes are listed; any unlisted prime forms its own
    singleton class. The empty partition therefore means "all singletons".
    """

    classes: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        seen: set[int] = set()
        for cls in self.classes:
            for p in cls:
                if not is_prime(p):
                    raise ValueError(f"{p} is not prime")
                if p in seen:
                    raise ValueError(f"prime {p} appears in two classes")
                seen.add(p)

    @staticmethod
    def from_lists(classes: Iterable[Iterable[int]]) -> "SigmaPartition":
        return SigmaPartition(tuple(frozenset(int(p) for p in c) for c in classes))

    @staticmethod
    def parse(text: str) -> "SigmaPartition":
        """Parse the config syntax ``[[2,3],[5]]``."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"bad sigma partition {text!r}: {e}") from e
        if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
            raise ValueError(f"bad sigma partition {text!r}: expected a list of lists")
        return SigmaPartition.from_lists(data)

    @staticmethod
    def singletons() -> "SigmaPartition":
        return SigmaPartition(())

    def class_key(self, p: int):
        """A hashable identifier of the class containing prime p."""
        for i, cls in enumerate(self.classes):
            if p in cls:
                return ("class", i)
        return ("prime", p)

    def class_primes(self, key) -> frozenset[int]:
        if key[0] == "class":
            return self.classes[key[1]]
        return frozenset((key[1],))

    @property
    def key(self) -> str:
        """Canonical text form, used in formation names and reports."""
        parts = sorted(sorted(cls) for cls in self.classes)
        return json.dumps(parts, separators=(",", ":"))


# -- membership predicates --------------------------------------------------


def is_nilpotent(G: Group) -> bool:
    """Lower central series reaches the trivial subgroup."""
    if "nilpotent" not in G._cache:
        G._cache["nilpotent"] = lower_central_series(G)[-1].order == 1
    return G._cache["nilpotent"]


def is_soluble(G: Group) -> bool:
    """Derived series reaches the trivial subgroup."""
    if "soluble" not in G._cache:
        G._cache["soluble"] = derived_series(G)[-1].order == 1
    return G._cache["soluble"]


def _class_ncl(G: Group, rep: int) -> Subgroup:
    key = ("class_ncl", int(G.class_of()[rep]))
    if key not in G._cache:
        G._cache[key] = normal_closure(G, [rep])
    return G._cache[key]


def _some_minimal_normal(G: Group) -> Subgroup:
    """Any minimal normal subgroup, found by normal-closure descent."""
    reps = [int(c[0]) for c in G.conjugacy_classes() if int(c[0]) != 0]
    current = _class_ncl(G, reps[0])
    changed = True
    while changed:
        changed = False
        for y in reps:
            if y in current.members:
                smaller = _class_ncl(G, y)
                if smaller.members < current.members:
                    current = smaller
                    changed = True
                    break
    return current


def is_supersoluble(G: Group) -> bool:
    """Every chief factor has prime order."""
    if "supersoluble" in G._cache:
        return G._cache["supersoluble"]
    out = True
    if not is_soluble(G):
        out = False
    else:
        Q = G
        while Q.order > 1:
            M = _some_minimal_normal(Q)
            if not is_prime(M.order):
                out = False
                break
            Q = quotient(Q, M)[0]
    G._cache["supersoluble"] = out
    return out


def is_sigma_primary(G: Group, sigma: SigmaPartition) -> bool:
    """All primes of |G| lie in a single class (vacuously true when trivial)."""
    keys = {sigma.class_key(p) for p in group_primes(G)}
    return len(keys) <= 1


def is_sigma_nilpotent(G: Group, sigma: SigmaPartition) -> bool:
    """A normal Hall subgroup exists for every class meeting the group's primes.

    The internal product of those Hall subgroups is then automatically
    direct and equal to the group.
    """
    keys = {sigma.class_key(p) for p in group_primes(G)}
    return all(
        normal_hall_subgroup(G, sigma.class_primes(k)) is not None for k in keys
    )


# -- formations --------------------------------------------------------------


@dataclass(frozen=True)
class Formation:
    """A named group-class predicate with hereditary/saturated metadata.

    The flags are trusted when selecting which theorems apply, but the
    verifier's law sweeps exercise them on the whole catalog.
    """

    name: str
    predicate: Callable[[Group], bool] = field(compare=False)
    hereditary: bool = True
    saturated: bool = True

    def contains(self, G: Group) -> bool:
        key = "in-formation:" + self.name
        if key not in G._cache:
            G._cache[key] = bool(self.predicate(G))
        return G._cache[key]

    def __repr__(self) -> str:
        return f"Formation({self.name})"


NILPOTENT = Formation("nilpotent", is_nilpotent)
SUPERSOLUBLE = Formation("supersoluble", is_supersoluble)
SOLUBLE = Formation("soluble", is_soluble)


def sigma_nilpotent_formation(sigma: SigmaPartition) -> Formation:
    name = f"sigma-nilpotent{sigma.key}"
    return Formation(name, lambda G: is_sigma_nilpotent(G, sigma))


def builtin_formations(sigma: SigmaPartition | None = None) -> list[Formation]:
    out = [NILPOTENT, SUPERSOLUBLE, SOLUBLE]
    if sigma is not None:
        out.append(sigma_nilpotent_formation(sigma))
    return out


def formation_by_selector(selector: str, sigma: SigmaPartition | None = None) -> Formation:
    """Resolve a CLI selector string to a formation."""
    sel = selector.strip().lower()
    if sel == "nilpotent":
        return NILPOTENT
    if sel == "supersoluble":
        return SUPERSOLUBLE
    if sel == "soluble":
        return SOLUBLE
    if sel == "sigma-nilpotent":
        if sigma is None:
            raise UnknownFormation("sigma-nilpotent requires a sigma partition")
        return sigma_nilpotent_formation(sigma)
    raise UnknownFormation(
        f"unknown formation {selector!r}; choose nilpotent, supersoluble, "
        "soluble, or sigma-nilpotent"
    )


# -- residuals ----------------------------------------------------------------


def residual(G: Group, F: Formation) -> Subgroup:
    """Smallest normal subgroup with quotient in F.

    Computed as the intersection of every normal subgroup whose quotient
    lies in F; the result's own quotient is then re-checked, so a broken
    membership predicate surfaces as FormationLawViolated instead of a
    silently wrong residual.
    """
    key = "residual:" + F.name
    if key in G._cache:
        return G._cache[key]
    members = frozenset(range(G.order))
    for N in normal_subgroups(G):
        if F.contains(quotient(G, N)[0]):
            members &= N.members
    out = Subgroup(G, members, validate=False)
    if not F.contains(quotient(G, out)[0]):
        raise FormationLawViolated(
            f"{F.name}: quotient by the candidate residual is not in the class"
        )
    G._cache[key] = out
    return out


# -- central sections ----------------------------------------------------------


def section_product(G: Group, H: Subgroup, K: Subgroup) -> Group:
    """The semidirect product of H/K by G modulo the section's centralizer.

    This single product decides centrality: testing at the full centralizer
    is equivalent to the existential definition over admissible kernels.
    """
    key = ("section_product", H.members, K.members)
    if key not in G._cache:
        C = centralizer_of_section(G, H, K)
        G._cache[key] = semidirect_section(G, H, K, C, order_cap=SECTION_PRODUCT_CAP)
    return G._cache[key]


def is_f_central(G: Group, H: Subgroup, K: Subgroup, F: Formation) -> bool:
    """Whether the normal section H/K is F-central in G."""
    return F.contains(section_product(G, H, K))


def is_sigma_central(G: Group, H: Subgroup, K: Subgroup, sigma: SigmaPartition) -> bool:
    """Whether H/K is sigma-central: the section product is sigma-primary."""
    return is_sigma_primary(section_product(G, H, K), sigma)


# -- hypercentres ----------------------------------------------------------------


CentralTest = Callable[[Subgroup, Subgroup], bool]


def is_hypercentral(G: Group, N: Subgroup, central: CentralTest) -> bool:
    """N = 1, or every chief factor of G below N passes the centrality test."""
    if N.order == 1:
        return True
    series = chief_series_through(G, N)
    for sec in series.factors():
        if sec.top.members <= N.members and not central(sec.top, sec.bottom):
            return False
    return True


def is_f_hypercentral(G: Group, N: Subgroup, F: Formation) -> bool:
    if not N.is_normal():
        raise NotNormal(f"{N} is not normal in {G.label}")
    return is_hypercentral(G, N, lambda t, b: is_f_central(G, t, b, F))


def hypercentre(G: Group, central: CentralTest, cache_name: str) -> Subgroup:
    """Join of all normal subgroups that are hypercentral for the test.

    The join is re-verified hypercentral; a failure would falsify the
    hypercentre law and is raised rather than papered over.
    """
    key = "hypercentre:" + cache_name
    if key in G._cache:
        return G._cache[key]
    members: set[int] = {0}
    hyper = []
    for N in normal_subgroups(G):
        if is_hypercentral(G, N, central):
            hyper.append(N)
            members |= N.members
    Z = generated_subgroup(G, members)
    if not is_hypercentral(G, Z, central):
        raise HypercentreNotHypercentral(
            f"join of hypercentral normals fails its own chief-factor test in {G.label}"
        )
    G._cache[key] = Z
    return Z


def f_hypercentre(G: Group, F: Formation) -> Subgroup:
    """Z_F(G): join of all normal subgroups whose chief factors are F-central."""
    return hypercentre(
        G, lambda t, b: is_f_central(G, t, b, F), cache_name=F.name
    )


def sigma_hypercentre(G: Group, sigma: SigmaPartition) -> Subgroup:
    """Join of normals whose chief factors have sigma-primary section products."""
    return hypercentre(
        G,
        lambda t, b: is_sigma_central(G, t, b, sigma),
        cache_name=f"sigma-central{sigma.key}",
    )


def supersoluble_hypercentre(G: Group) -> Subgroup:
    """Join of normals all of whose chief factors below are cyclic (prime order)."""
    return hypercentre(
        G,
        lambda t, b: is_prime(t.order // b.order),
        cache_name="cyclic-chief",
    )


def is_large(G: Group, N: Subgroup) -> bool:
    """Whether N contains its own centralizer in G."""
    if not N.is_normal():
        raise NotNormal(f"{N} is not normal in {G.label}")
    return centralizer(G, N).members <= N.members
