import pytest

from polyad import bingroup
from polyad.errors import NotGroup


class TestTables:
    def test_cyclic(self):
        g = bingroup.cyclic(6)
        assert g.id == 0
        assert g.inv[2] == 4
        assert g.is_abelian()
        assert g.element_order(1) == 6

    def test_dihedral_relations(self):
        d = bingroup.dihedral(6)
        c, b = 1, 6
        assert d.mul[c][b] == d.mul[b][d.inv[c]]  # cb = bc^-1
        assert d.element_order(b) == 2
        assert not d.is_abelian()
        assert d.center() == frozenset([0, 3])  # e and the half turn

    def test_quaternion_relations(self):
        q = bingroup.quaternion()
        a, b = 1, 4
        assert q.power(a, 4) == 0
        assert q.power(b, 2) == q.power(a, 2)
        assert q.mul[a][b] == q.mul[b][q.power(a, 3)]
        assert q.center() == frozenset([0, 2])
        assert q.exponent() == 4

    def test_symmetric_parity_split(self):
        par = bingroup.symmetric_parity(4)
        assert sum(par) == 12
        s4 = bingroup.symmetric(4)
        A4 = bingroup.alternating_set(4)
        assert s4.is_subgroup(A4) and s4.is_normal(A4)

    def test_validation_rejects_junk(self):
        with pytest.raises(NotGroup):
            bingroup.BinaryGroupTable([[0, 1], [1, 1]])
        with pytest.raises(NotGroup):
            bingroup.BinaryGroupTable([[1, 0], [1, 0]])


class TestSubgroupMachinery:
    def test_s3_subgroup_count(self):
        s3 = bingroup.symmetric(3)
        assert len(s3.all_subgroups()) == 6

    def test_s4_subgroup_count(self):
        s4 = bingroup.symmetric(4)
        assert len(s4.all_subgroups()) == 30

    def test_quotient(self):
        s3 = bingroup.symmetric(3)
        A3 = bingroup.alternating_set(3)
        q, proj = s3.quotient(A3)
        assert q.k == 2

    def test_series(self):
        s4 = bingroup.symmetric(4)
        series = s4.derived_series()
        assert [len(s) for s in series] == [24, 12, 4, 1]
        assert s4.is_solvable() and not s4.is_nilpotent()
        q = bingroup.quaternion()
        assert q.is_nilpotent()

    def test_sylow_of_nilpotent(self):
        z12 = bingroup.cyclic(12)
        assert z12.sylow_subgroup(2) == frozenset([0, 3, 6, 9])
        assert z12.sylow_subgroup(3) == frozenset([0, 4, 8])
        assert z12.hall_subgroup({2, 3}) == frozenset(range(12))


class TestIsomorphism:
    def test_positive(self):
        d3 = bingroup.dihedral(3)
        s3 = bingroup.symmetric(3)
        iso = d3.isomorphism_to(s3)
        assert iso is not None
        for a in range(6):
            for b in range(6):
                assert iso[d3.mul[a][b]] == s3.mul[iso[a]][iso[b]]

    def test_negative(self):
        q = bingroup.quaternion()
        d4 = bingroup.dihedral(4)
        assert q.isomorphism_to(d4) is None  # six vs two elements of order 4

    def test_automorphism_count(self):
        z6 = bingroup.cyclic(6)
        assert len(z6.automorphisms()) == 2
        s3 = bingroup.symmetric(3)
        assert len(s3.automorphisms()) == 6
