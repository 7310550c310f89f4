import itertools
import math
from dataclasses import dataclass
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import m_primary_ideals, polynomials, regions
from toric_bdiv.errors import DimensionMismatch, InvalidInput, NotMPrimary
from toric_bdiv.filtrations import (
    Filtration,
    IdealPower,
    Intersect,
    RegionFiltration,
    Scale,
    ValuationFiltration,
    axioms_check,
    is_saturated,
    norm_value,
    saturate,
)
from toric_bdiv.geometry import INFINITY, Region
from toric_bdiv.monomial import MonomialIdeal, Polynomial
from toric_bdiv.oracles import fekete_estimate, lattice_ideal_oracle
from toric_bdiv.valuations import WeightVector, value_of_ideal

M2 = MonomialIdeal.maximal(2)
XY = MonomialIdeal(2, ((2, 0), (0, 2)))
A3 = MonomialIdeal(2, ((2, 0), (1, 1), (0, 3)))
LAMS = [Q(1, 2), Q(1), Q(3, 2), Q(2), Q(3)]


def V(*w):
    return ValuationFiltration(WeightVector(tuple(Q(x) for x in w)))


def P(*monos):
    return Polynomial(len(monos[0]), {m: 1 for m in monos})


def exhausts_m(F):
    """Whether the union of all a_lam (lam > 0) is m."""
    return all(F.monomial_order(tuple(int(i == j) for j in range(F.n))) > 0 for i in range(F.n))


@dataclass(frozen=True)
class TableFiltration(Filtration):
    """Step function through a table; used to feed axioms_check broken input."""

    table: tuple

    @property
    def n(self):
        return self.table[0][1].n

    def _ideal(self, lam):
        for key, ideal in self.table:
            if lam <= key:
                return ideal
        return self.table[-1][1]

    def monomial_order(self, u):
        return max((key for key, ideal in self.table if tuple(u) in ideal), default=Q(0))

    def generator_box(self, lam):
        return 4


class TestConstructors:
    def test_ideal_at_examples(self):
        assert IdealPower(M2).ideal_at(Q(5, 2)) == M2**3
        assert V(1, 2).ideal_at(2).generators == ((0, 1), (2, 0))
        assert RegionFiltration(Region(((1, 0), (0, 2)))).ideal_at(1).generators == ((0, 2), (1, 0))
        assert IdealPower(M2).ideal_at(0).is_unit

    def test_asymptotic_values(self):
        assert IdealPower(A3).asymptotic_value((1, 1)) == 2
        assert V(2, 1).asymptotic_value((1, 2)) == Q(1, 2)
        assert Scale(3, V(1, 1)).asymptotic_value((1, 1)) == 3
        assert V(1, 1).asymptotic_value((1, 0)) == 0

    def test_asymptotic_regions(self):
        assert IdealPower(XY).asymptotic_region() == Region(((2, 0), (0, 2)))
        assert V(1, 2).asymptotic_region() == Region(((1, 0), (0, Q(1, 2))))
        F = Intersect(IdealPower(XY), V(1, 1))
        assert F.asymptotic_region() == Region(((2, 0), (0, 2)))
        assert F.provenance == "oracle-certified"
        assert IdealPower(XY).provenance == "closed-form"

    def test_invalid(self):
        with pytest.raises(NotMPrimary):
            IdealPower(MonomialIdeal(2, ((1, 0),)))
        with pytest.raises(NotMPrimary):
            V(1, 0)
        with pytest.raises(NotMPrimary):
            RegionFiltration(Region(((1, 1),)))
        with pytest.raises(InvalidInput):
            Scale(0, V(1, 1))
        with pytest.raises(DimensionMismatch):
            Intersect(V(1, 1), V(1, 1, 1))
        with pytest.raises(InvalidInput):
            V(1, 1).ideal_at(-1)
        with pytest.raises(DimensionMismatch):
            V(1, 1).asymptotic_value((1, 1, 1))

    def test_intersection_ideals(self):
        F = Intersect(IdealPower(XY), V(1, 2))
        for lam in LAMS:
            assert F.ideal_at(lam) == IdealPower(XY).ideal_at(lam) & V(1, 2).ideal_at(lam)

    def test_valuation_ideals_match_lattice_oracle(self):
        for w in [(1, 2), (Q(2, 3), Q(5, 4)), (3, 1)]:
            F = V(*w)
            for lam in LAMS:
                oracle = lattice_ideal_oracle(lambda u: F.monomial_order(u) >= lam, 2, 12)
                assert F.ideal_at(lam) == oracle


class TestSaturation:
    def test_examples(self):
        sat = saturate(IdealPower(XY))
        assert sat.ideal_at(1).generators == ((0, 2), (1, 1), (2, 0))
        assert (1, 1) not in IdealPower(XY).ideal_at(1)
        assert is_saturated(IdealPower(XY), [1]) == (False, (1, (1, 1)))
        assert is_saturated(IdealPower(M2), LAMS) == (True, None)
        assert is_saturated(V(1, 2), LAMS)[0]
        for lam in LAMS:
            assert saturate(IdealPower(M2)).ideal_at(lam) == M2 ** math.ceil(lam)

    @settings(max_examples=20, deadline=None)
    @given(regions())
    def test_region_filtrations_are_saturated(self, reg):
        assert is_saturated(RegionFiltration(reg), [Q(1, 2), 1, 2])[0]

    @settings(max_examples=30, deadline=None)
    @given(m_primary_ideals())
    def test_saturation_contains_idempotent_and_keeps_asymptotics(self, a):
        F = IdealPower(a)
        S = saturate(F)
        for lam in [Q(1, 2), 1, 2]:
            assert F.ideal_at(lam).issubset(S.ideal_at(lam))
        assert saturate(S) == S
        for w in [(1, 1), (1, 3), (Q(5, 2), 1), (1, 0)]:
            assert S.asymptotic_value(w) == F.asymptotic_value(w)

    @pytest.mark.parametrize("w", [(1, 1), (1, 2), (Q(3, 2), Q(1, 3)), (5, 7)])
    def test_valuation_filtrations_are_saturated(self, w):
        assert is_saturated(V(*w), LAMS)[0]


class TestNorm:
    def test_examples(self):
        assert norm_value(V(1, 1), P((2, 0), (0, 3))) == 2
        assert norm_value(IdealPower(M2), P((1, 2))) == 3
        assert norm_value(IdealPower(XY), P((1, 1))) == 0
        assert norm_value(IdealPower(XY), Polynomial(2, {})) == INFINITY
        with pytest.raises(DimensionMismatch):
            norm_value(IdealPower(XY), P((1, 1, 1)))

    @pytest.mark.parametrize(
        "F",
        [IdealPower(XY), IdealPower(A3), V(1, 2), RegionFiltration(Region(((3, 0), (1, 1), (0, 2)))), Scale(Q(2, 3), V(2, 1))],
    )
    def test_filtration_rebuilt_from_norm(self, F):
        for lam in LAMS:
            rebuilt = lattice_ideal_oracle(lambda u: F.monomial_order(u) >= lam, 2, 10)
            assert rebuilt == F.ideal_at(lam)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([IdealPower(XY), V(1, 2), RegionFiltration(Region(((2, 0), (Q(1, 2), 1), (0, 3))))]), polynomials(), polynomials())
    def test_norm_axioms(self, F, f, g):
        nv = lambda h: norm_value(F, h)  # noqa: E731
        assert nv(f + g) >= min(nv(f), nv(g))
        assert nv(f * g) >= nv(f) + nv(g)
        in_m = all(any(u) for u in f.support)
        assert nv(f) >= 0
        if nv(f) > 0:
            assert in_m
        if in_m and exhausts_m(F):
            assert nv(f) > 0

    def test_positivity_needs_the_union_to_be_m(self):
        # (x^2, y^2)^ceil(lam) never contains y, so ord(y) = 0 although y is in m
        assert not exhausts_m(IdealPower(XY))
        assert norm_value(IdealPower(XY), P((0, 1))) == 0
        assert exhausts_m(IdealPower(M2)) and exhausts_m(V(1, 2))


class TestBoundedness:
    def test_examples(self):
        assert IdealPower(M2).linear_boundedness() == (1, 1)
        assert V(1, 2).linear_boundedness() == (Q(1, 2), 1)
        assert IdealPower(A3).linear_boundedness() == (2, 3)

    @pytest.mark.parametrize(
        "F",
        [IdealPower(M2), IdealPower(A3), V(1, 2), V(Q(2, 3), 3), RegionFiltration(Region(((Q(5, 2), 0), (1, 1), (0, 4)))),
         Scale(Q(3, 2), V(1, 2)), Intersect(IdealPower(XY), V(1, 3))],
    )
    def test_containments_at_integer_indices(self, F):
        eps, C = F.linear_boundedness()
        for lam in range(1, 7):
            a = F.ideal_at(lam)
            assert (M2 ** math.ceil(C * lam)).issubset(a)
            assert a.issubset(M2 ** math.ceil(eps * lam))


class TestAxioms:
    @pytest.mark.parametrize("F", [IdealPower(XY), V(1, 2), RegionFiltration(Region(((2, 0), (0, 1)))), Intersect(IdealPower(XY), V(1, 2))])
    def test_constructors_pass(self, F):
        rep = axioms_check(F, LAMS, [(a, b) for a in LAMS[:3] for b in LAMS[:3]])
        assert rep.passed, rep
        assert rep.checked == ["m-primary", "decreasing", "multiplicative", "left-continuous"]

    def test_corrupted_table_fails_decreasing(self):
        F = TableFiltration(((Q(1), M2**2), (Q(2), M2)))
        rep = axioms_check(F, [1, 2])
        assert not rep.passed
        assert rep.axiom == "decreasing"
        assert rep.witness["monomial"] in M2 and rep.witness["monomial"] not in M2**2

    def test_non_multiplicative_table(self):
        F = TableFiltration(((Q(1), M2), (Q(2), M2**3)))
        rep = axioms_check(F, [1, 2], [(1, 1)])
        assert not rep.passed and rep.axiom == "multiplicative"

    def test_empty_samples_rejected(self):
        with pytest.raises(InvalidInput):
            axioms_check(V(1, 1), [])


class TestFekete:
    def test_valuation_example(self):
        assert fekete_estimate(V(2, 1), (1, 2), 4) == [(1, 1), (2, Q(1, 2)), (3, Q(2, 3)), (4, Q(1, 2))]

    @pytest.mark.parametrize("a", [M2, XY, A3])
    def test_ideal_power_constant(self, a):
        w = WeightVector((Q(3), Q(2)))
        seq = fekete_estimate(IdealPower(a), w, 8)
        assert {v for _, v in seq} == {value_of_ideal(w, a)}

    def test_doubling_schedule(self):
        assert [m for m, _ in fekete_estimate(V(1, 3), (1, 1), 20, doubling=True)] == [1, 2, 4, 8, 16]

    @settings(max_examples=30, deadline=None)
    @given(m_primary_ideals(), m_primary_ideals(), st.sampled_from([(1, 1), (1, 2), (3, 1), (Q(1, 2), 2)]))
    def test_intersection_region_against_fekete(self, a, b, w):
        F = Intersect(IdealPower(a), IdealPower(b))
        limit = F.asymptotic_value(w)
        seq = fekete_estimate(F, w, 12)
        assert all(v >= limit for _, v in seq)
