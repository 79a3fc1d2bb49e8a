"""Group constructions: standard families, products, and semidirect sections."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NotAGroup, NotCentralized, NotNormal, OrderCapExceeded
from .groups import (
    DEFAULT_ORDER_CAP,
    Group,
    Subgroup,
    centralizer_of_section,
    check_order_cap,
    coset_representatives,
    quotient,
)


def from_cayley_table(table, label: str = "G", order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    """Build and fully validate a group from an untrusted square table.

    If the two-sided identity sits at some index e != 0, elements are
    relabelled by the transposition (0 e) so that 0 becomes the identity.
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotAGroup("table is not square")
    n = arr.shape[0]
    check_order_cap(n, order_cap)
    if n == 0 or arr.min() < 0 or arr.max() >= n:
        raise NotAGroup("table entries out of range 0..n-1")
    idx = np.arange(n)
    ident = np.nonzero(
        (arr == idx[None, :]).all(axis=1) & (arr.T == idx[None, :]).all(axis=1)
    )[0]
    if ident.size != 1:
        raise NotAGroup(f"table has {ident.size} two-sided identities, expected 1")
    e = int(ident[0])
    if e != 0:
        perm = idx.copy()
        perm[[0, e]] = perm[[e, 0]]
        arr = perm[arr[np.ix_(perm, perm)]]
    return Group(arr, label=label, validate="full")


# -- permutation closures -------------------------------------------------


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Permutation product: apply p first, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def from_permutation_gens(
    degree: int,
    gens: Iterable[Sequence[int]],
    label: str = "G",
    order_cap: int | None = DEFAULT_ORDER_CAP,
) -> Group:
    """Close generator permutations of {0..degree-1} into a group.

    Elements are indexed in breadth-first discovery order starting from the
    identity, which makes the construction deterministic.
    """
    identity = tuple(range(degree))
    gen_list = []
    for g in gens:
        p = tuple(int(x) for x in g)
        if sorted(p) != list(range(degree)):
            raise NotAGroup(f"generator {p} is not a permutation of 0..{degree - 1}")
        gen_list.append(p)
    index: dict[tuple[int, ...], int] = {identity: 0}
    elements = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gen_list:
                q = compose(p, g)
                if q not in index:
                    if order_cap is not None and len(elements) >= order_cap:
                        raise OrderCapExceeded(
                            f"closure exceeds order cap {order_cap}"
                        )
                    index[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            table[i, j] = index[compose(p, q)]
    grp = Group(table, label=label, validate="none")
    grp.permutations = elements
    return grp


# -- named families --------------------------------------------------------


def trivial() -> Group:
    return Group(np.zeros((1, 1), dtype=np.int32), label="C1", validate="none")


def cyclic(n: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    check_order_cap(n, order_cap)
    idx = np.arange(n, dtype=np.int32)
    return Group((idx[:, None] + idx[None, :]) % n, label=f"C{n}", validate="none")


def _two_part_table(n: int, flip_square: int) -> np.ndarray:
    """Table on pairs (i, j), i mod n, j in {0,1}, with b*a = a^-1*b and
    b^2 = a^flip_square. Encodes dihedral (flip_square=0) and generalized
    quaternion / dicyclic (flip_square=n//2) families; index = 2*i + j."""
    size = 2 * n
    table = np.empty((size, size), dtype=np.int32)
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    if j1 == 0:
                        i, j = (i1 + i2) % n, j2
                    elif j2 == 0:
                        i, j = (i1 - i2) % n, 1
                    else:
                        i, j = (i1 - i2 + flip_square) % n, 0
                    table[2 * i1 + j1, 2 * i2 + j2] = 2 * i + j
    return table


def dihedral(n: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    """Dihedral group of order 2n (symmetries of the n-gon for n >= 3)."""
    if n < 1:
        raise ValueError("dihedral parameter must be >= 1")
    check_order_cap(2 * n, order_cap)
    return Group(_two_part_table(n, 0), label=f"D{2 * n}", validate="none")


def quaternion(order: int = 8, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    """Generalized quaternion group of order 2^k, k >= 3."""
    if order < 8 or order & (order - 1):
        raise ValueError("quaternion order must be a power of two >= 8")
    check_order_cap(order, order_cap)
    n = order // 2
    return Group(_two_part_table(n, n // 2), label=f"Q{order}", validate="none")


def symmetric(n: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    if n < 1:
        raise ValueError("symmetric degree must be >= 1")
    if n == 1:
        g = trivial()
        g.label = "S1"
        return g
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return from_permutation_gens(n, gens, label=f"S{n}", order_cap=order_cap)


def alternating(n: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    if n < 1:
        raise ValueError("alternating degree must be >= 1")
    if n <= 2:
        g = trivial()
        g.label = f"A{n}"
        return g
    gens = []
    for k in range(2, n):
        cycle = list(range(n))
        cycle[0], cycle[1], cycle[k] = cycle[1], cycle[k], cycle[0]
        gens.append(tuple(cycle))
    return from_permutation_gens(n, gens, label=f"A{n}", order_cap=order_cap)


def elem_abelian(p: int, k: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    """Elementary abelian group of order p^k."""
    if k < 1 or p < 2:
        raise ValueError("need a prime p >= 2 and exponent k >= 1")
    if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    check_order_cap(p**k, order_cap)
    g = cyclic(p, order_cap=order_cap)
    for _ in range(k - 1):
        g = direct_product(g, cyclic(p, order_cap=order_cap), order_cap=order_cap)
    g.label = f"elab({p},{k})"
    return g


FAMILY_BUILDERS: dict[str, Callable[..., Group]] = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "quaternion": quaternion,
    "elem_abelian": elem_abelian,
}


def standard_family(kind: str, *params: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    if kind not in FAMILY_BUILDERS:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(FAMILY_BUILDERS)}")
    return FAMILY_BUILDERS[kind](*params, order_cap=order_cap)


# -- products ---------------------------------------------------------------


def direct_product(G: Group, H: Group, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    """Componentwise product; pair (a, b) is encoded as a*|H| + b."""
    check_order_cap(G.order * H.order, order_cap)
    nh = H.order
    a = np.arange(G.order * nh, dtype=np.int32)
    g_part, h_part = a // nh, a % nh
    table = (
        G.table[np.ix_(g_part, g_part)] * nh + H.table[np.ix_(h_part, h_part)]
    ).astype(np.int32)
    return Group(table, label=f"{G.label}x{H.label}", validate="none")


def semidirect_product(
    N: Group,
    H: Group,
    action: np.ndarray,
    label: str | None = None,
    order_cap: int | None = DEFAULT_ORDER_CAP,
    validate_action: bool = True,
) -> Group:
    """External semidirect product N x| H for a left action of H on N.

    ``action[h]`` is the permutation of N's elements induced by h; it must
    be a homomorphism H -> Aut(N). Pair (n, h) is encoded as n*|H| + h and
    multiplies as (n1, h1)(n2, h2) = (n1 * action[h1][n2], h1*h2).
    """
    action = np.asarray(action, dtype=np.int32)
    if action.shape != (H.order, N.order):
        raise ValueError("action table has wrong shape")
    check_order_cap(N.order * H.order, order_cap)
    if validate_action:
        if not np.array_equal(action[0], np.arange(N.order)):
            raise NotAGroup("action of the identity is not trivial")
        lhs = action[:, N.table]
        rhs = N.table[action[:, :, None], action[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise NotAGroup("action values are not automorphisms")
        for h1 in range(H.order):
            if not np.array_equal(action[H.table[h1]], action[h1][action]):
                raise NotAGroup("action is not a homomorphism into Aut(N)")
    nh = H.order
    a = np.arange(N.order * nh, dtype=np.int32)
    n_part, h_part = a // nh, a % nh
    acted = action[h_part[:, None], n_part[None, :]]  # action of row's h on column's n
    table = (N.table[n_part[:, None], acted] * nh + H.table[np.ix_(h_part, h_part)]).astype(
        np.int32
    )
    return Group(table, label=label or f"{N.label}x|{H.label}", validate="none")


def semidirect_section(
    G: Group,
    H: Subgroup,
    K: Subgroup,
    L: Subgroup,
    order_cap: int | None = DEFAULT_ORDER_CAP,
) -> Group:
    """The semidirect product of the section H/K by G/L under conjugation.

    Requires K <= H with both normal in G, L normal in G, and L inside the
    centralizer of H/K (so the action of G/L on cosets is well defined).
    The coset gL acts by sending hK to (g h g^-1)K; reading conjugation on
    the other side yields the same group up to isomorphism.
    """
    for sub, name in ((H, "H"), (K, "K"), (L, "L")):
        if not sub.is_normal():
            raise NotNormal(f"{name} is not normal in {G.label}")
    if not (K.members <= H.members):
        raise ValueError("section requires K <= H")
    C = centralizer_of_section(G, H, K)
    if not (L.members <= C.members):
        lbad = min(L.members - C.members)
        repK = G.table[:, K.array].min(axis=1)
        hbad = next(
            int(h) for h in H.members_tuple if repK[G.conj(int(h), lbad)] != repK[h]
        )
        raise NotCentralized(
            f"element {lbad} does not centralize the section", witness=(lbad, hbad)
        )
    check_order_cap((H.order // K.order) * (G.order // L.order), order_cap)

    Hgrp = H.as_group()
    Ksub = Subgroup(Hgrp, H.local_members(K).tolist(), validate=False)
    sec, sec_proj = quotient(Hgrp, Ksub)
    quo, _ = quotient(G, L)

    # one parent-group representative per section element (first occurrence)
    first_local = np.full(sec.order, -1, dtype=np.int32)
    for local in range(Hgrp.order):
        q = int(sec_proj.mapping[local])
        if first_local[q] < 0:
            first_local[q] = local
    sec_reps = H.array[first_local]
    quo_reps = np.unique(coset_representatives(G, L))

    action = np.empty((quo.order, sec.order), dtype=np.int32)
    for qi in range(quo.order):
        g = int(quo_reps[qi])
        conj = G.table[G.table[g, sec_reps], G.inverse[g]]  # stays in H since H is normal
        action[qi] = sec_proj.mapping[np.searchsorted(H.array, conj)]
    return semidirect_product(
        sec,
        quo,
        action,
        label=f"[{H.order}/{K.order}]({G.label}/{L.order})",
        order_cap=order_cap,
        validate_action=True,
    )
