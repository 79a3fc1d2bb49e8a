import pytest

from finform import (
    SearchBudgetExceeded,
    alternating,
    automorphism_count,
    automorphism_group,
    cyclic,
    dihedral,
    direct_product,
    elem_abelian,
    holomorph,
    is_isomorphic,
    quaternion,
    symmetric,
    trivial,
)
from finform.morphisms import fingerprint, generating_set


class TestIsomorphism:
    def test_identity_witness(self):
        s3 = symmetric(3)
        w = is_isomorphic(s3, s3)
        assert w is not None and w.is_isomorphism()

    def test_c4_vs_klein_negative_by_order_profile(self):
        assert is_isomorphic(cyclic(4), elem_abelian(2, 2)) is None

    def test_product_recognition(self):
        assert is_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)) is not None
        assert is_isomorphic(dihedral(3), symmetric(3)) is not None

    def test_same_order_profile_different_groups(self):
        # D24 and C3 x D8 share the order profile; search must separate them
        d24 = dihedral(12)
        c3d8 = direct_product(cyclic(3), dihedral(4))
        assert sorted(d24.element_orders.tolist()) != sorted(
            c3d8.element_orders.tolist()
        ) or is_isomorphic(d24, c3d8) is None

    def test_witness_is_multiplicative(self):
        a4 = alternating(4)
        p = direct_product(elem_abelian(2, 2), cyclic(3))
        assert is_isomorphic(a4, p) is None
        w = is_isomorphic(a4, a4)
        m = w.mapping
        for a in range(12):
            for b in range(12):
                assert m[a4.table[a, b]] == a4.table[m[a], m[b]]

    def test_equivalence_relation_on_samples(self, catalog12):
        groups = catalog12.groups
        for g in groups:
            assert is_isomorphic(g, g) is not None
        pairs = [(a, b) for a in groups[:8] for b in groups[:8]]
        for a, b in pairs:
            ab = is_isomorphic(a, b) is not None
            ba = is_isomorphic(b, a) is not None
            assert ab == ba
        for a in groups[:6]:
            for b in groups[:6]:
                for c in groups[:6]:
                    if (
                        is_isomorphic(a, b) is not None
                        and is_isomorphic(b, c) is not None
                    ):
                        assert is_isomorphic(a, c) is not None

    def test_budget_raises(self):
        big = elem_abelian(2, 4)
        with pytest.raises(SearchBudgetExceeded):
            is_isomorphic(big, big, budget=3)


class TestAutomorphisms:
    def test_trivial(self):
        assert automorphism_count(trivial()) == 1

    def test_known_orders(self):
        assert automorphism_count(cyclic(3)) == 2
        assert automorphism_count(elem_abelian(2, 2)) == 6
        assert automorphism_count(alternating(4)) == 24
        assert automorphism_count(symmetric(4)) == 24
        assert automorphism_count(quaternion(8)) == 24
        assert automorphism_count(elem_abelian(2, 3)) == 168

    def test_group_structure(self):
        aut = automorphism_group(elem_abelian(2, 2))
        assert aut.order == 6
        assert is_isomorphic(aut, symmetric(3)) is not None

    def test_fingerprint_stability(self):
        assert fingerprint(symmetric(3)) == fingerprint(dihedral(3))
        assert fingerprint(cyclic(4)) != fingerprint(elem_abelian(2, 2))

    def test_generating_set_generates(self):
        from finform import generated_subgroup

        for g in (symmetric(4), quaternion(16), elem_abelian(3, 2)):
            gens = generating_set(g)
            assert generated_subgroup(g, gens).order == g.order


class TestHolomorph:
    def test_trivial(self):
        assert holomorph(trivial()).order == 1

    def test_cyclic3(self):
        h = holomorph(cyclic(3))
        assert h.order == 6
        assert is_isomorphic(h, symmetric(3)) is not None

    def test_klein(self):
        h = holomorph(elem_abelian(2, 2))
        assert h.order == 24
        assert is_isomorphic(h, symmetric(4)) is not None
