import pytest

from finform import (
    LatticeBudgetExceeded,
    all_subgroups,
    alternating,
    chief_series,
    chief_series_through,
    cyclic,
    dihedral,
    elem_abelian,
    frattini,
    generated_subgroup,
    minimal_normal_subgroups,
    normal_hall_subgroup,
    normal_subgroups,
    symmetric,
    trivial,
)
from finform.groups import centralizer_of_section, join
from finform.lattice import g_isomorphic_sections, is_chief_factor


class TestAllSubgroups:
    def test_trivial(self):
        assert len(all_subgroups(trivial())) == 1

    def test_s3(self):
        lat = all_subgroups(symmetric(3))
        assert len(lat) == 6
        assert sorted(s.order for s in lat) == [1, 2, 2, 2, 3, 6]

    def test_s4_count(self):
        assert len(all_subgroups(symmetric(4))) == 30

    def test_closed_under_meet_and_join(self, catalog12):
        for g in catalog12.groups:
            lat = all_subgroups(g)
            members = {s.members for s in lat}
            for a in lat.subgroups:
                for b in lat.subgroups:
                    assert (a.members & b.members) in members
                    assert join(a, b).members in members

    def test_budget(self):
        with pytest.raises(LatticeBudgetExceeded):
            all_subgroups(cyclic(12), budget=10)

    def test_conjugacy_classes_partition(self):
        lat = all_subgroups(symmetric(4))
        sizes = sorted(len(c) for c in lat.conjugacy_classes)
        assert sum(sizes) == 30
        assert lat.class_of.tolist().count(-1) == 0


class TestNormalSubgroups:
    def test_abelian_all_normal(self):
        g = elem_abelian(2, 3)
        assert len(normal_subgroups(g)) == len(all_subgroups(g))

    def test_s4(self):
        assert [n.order for n in normal_subgroups(symmetric(4))] == [1, 4, 12, 24]

    def test_a4(self):
        assert [n.order for n in normal_subgroups(alternating(4))] == [1, 4, 12]

    def test_matches_lattice_filter(self, catalog12):
        for g in catalog12.groups:
            by_seed = {n.members for n in normal_subgroups(g)}
            by_lattice = {
                s.members for s in all_subgroups(g).subgroups if s.is_normal()
            }
            assert by_seed == by_lattice

    def test_minimal_normals(self):
        assert [n.order for n in minimal_normal_subgroups(symmetric(4))] == [4]
        assert sorted(n.order for n in minimal_normal_subgroups(cyclic(6))) == [2, 3]
        a5_like = alternating(4)  # not simple; has V4
        assert [n.order for n in minimal_normal_subgroups(a5_like)] == [4]
        with pytest.raises(ValueError):
            minimal_normal_subgroups(trivial())


class TestChiefSeries:
    def test_s4_series(self):
        series = chief_series(symmetric(4))
        assert [t.order for t in series.terms] == [1, 4, 12, 24]
        assert series.factor_orders() == (4, 3, 2)

    def test_through_term(self):
        s4 = symmetric(4)
        a4 = generated_subgroup(s4, [e for e in range(24) if s4.element_orders[e] == 3])
        series = chief_series_through(s4, a4)
        assert any(t.members == a4.members for t in series.terms)

    def test_through_whole_group(self):
        s4 = symmetric(4)
        series = chief_series_through(s4, s4.full_subgroup())
        assert [t.order for t in series.terms] == [1, 4, 12, 24]

    def test_a4_through_v4(self):
        a4 = alternating(4)
        v4 = minimal_normal_subgroups(a4)[0]
        series = chief_series_through(a4, v4)
        assert [t.order for t in series.terms] == [1, 4, 12]

    def test_every_factor_chief(self, catalog12):
        for g in catalog12.groups:
            series = chief_series(g)
            for sec in series.factors():
                assert is_chief_factor(g, sec.top, sec.bottom)

    def test_jordan_holder_matching(self, catalog24):
        # two independently built series have G-isomorphic factor multisets
        for g in catalog24.groups:
            if g.order > 16:
                continue
            base = chief_series(g).factors()
            for n in normal_subgroups(g):
                other = chief_series_through(g, n).factors()
                assert len(base) == len(other)
                unmatched = list(range(len(base)))
                for sec in other:
                    hit = None
                    for k in unmatched:
                        if g_isomorphic_sections(g, sec, base[k]):
                            hit = k
                            break
                    assert hit is not None, (g.label, sec)
                    unmatched.remove(hit)


class TestFrattini:
    def test_trivial(self):
        assert frattini(trivial()).order == 1

    def test_s4(self):
        assert frattini(symmetric(4)).order == 1

    def test_d8_center(self):
        d8 = dihedral(4)
        from finform import center

        phi = frattini(d8)
        assert phi.order == 2
        assert phi.members == center(d8).members

    def test_nongenerator_property(self, catalog12):
        from finform import generated_subgroup

        for g in catalog12.groups:
            phi = frattini(g)
            assert phi.is_normal()
            lat = all_subgroups(g)
            for s in lat.subgroups:
                if join(s, phi).order == g.order:
                    assert s.order == g.order


class TestNormalHall:
    def test_whole_group(self):
        s3 = symmetric(3)
        assert normal_hall_subgroup(s3, {2, 3}).order == 6

    def test_s3_examples(self):
        s3 = symmetric(3)
        assert normal_hall_subgroup(s3, {3}).order == 3
        assert normal_hall_subgroup(s3, {2}) is None

    def test_matches_normal_scan(self, catalog24):
        # dual route: the element-order construction must agree with a scan
        # of the normal subgroup list for the full primes-part order
        for g in catalog24.groups:
            for primes in ({2}, {3}, {2, 3}, {5}):
                part = 1
                n = g.order
                for p in primes:
                    while n % p == 0:
                        part *= p
                        n //= p
                by_scan = [s for s in normal_subgroups(g) if s.order == part]
                hall = normal_hall_subgroup(g, primes)
                if hall is not None:
                    assert hall.order == part
                    assert any(s.members == hall.members for s in by_scan)
                else:
                    # a normal subgroup of the full part order would itself
                    # be a normal Hall subgroup, so none may exist
                    assert not by_scan


def test_section_centralizer_consistency(catalog12):
    # the centralizer of a chief factor contains the factor's top when the
    # factor is abelian
    for g in catalog12.groups:
        for sec in chief_series(g).factors():
            c = centralizer_of_section(g, sec.top, sec.bottom)
            t = sec.top.as_group()
            if t.is_abelian():
                assert sec.top.members <= c.members
