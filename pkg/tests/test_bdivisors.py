import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import m_primary_ideals, positive, regions
from toric_bdiv.bdivisors import (
    ConvexVertexSet,
    Fan2D,
    FanPL,
    FromFiltration,
    Sampled,
    Scaled,
    boundedness_constants,
    compare,
    extract_filtration,
    is_cartier_on,
    maximal_ideal_divisor,
    positive_grid,
    vanishing_order,
    z_of_filtration,
    z_of_ideal,
    zero_divisor,
)
from toric_bdiv.errors import (
    DegenerateDivisor,
    DimensionMismatch,
    InvalidInput,
    NotAntiEffective,
    NotMPrimary,
    UnsupportedRepresentation,
)
from toric_bdiv.filtrations import IdealPower, RegionFiltration, Scale, ValuationFiltration
from toric_bdiv.geometry import Region
from toric_bdiv.monomial import MonomialIdeal, Polynomial
from toric_bdiv.oracles import lattice_ideal_oracle
from toric_bdiv.valuations import WeightVector

M2 = MonomialIdeal.maximal(2)
XY = MonomialIdeal(2, ((2, 0), (0, 2)))
A3 = MonomialIdeal(2, ((2, 0), (1, 1), (0, 3)))
ZM = maximal_ideal_divisor(2)
WSTAR = FanPL(((1, 0), (2, 1), (1, 1), (1, 2), (0, 1)), (0, -1, Q(-6, 5), -1, 0))


def V(*w):
    return ValuationFiltration(WeightVector(tuple(Q(x) for x in w)))


def P(*monos):
    return Polynomial(len(monos[0]), {m: 1 for m in monos})


class TestEvaluate:
    def test_examples(self):
        assert FromFiltration(IdealPower(A3)).evaluate((1, 1)) == -2
        assert FanPL(((1, 0), (1, 1), (0, 1)), (0, Q(-3, 2), 0)).evaluate((2, 1)) == Q(-3, 2)
        assert FromFiltration(IdealPower(M2)).evaluate((3, 5)) == -3

    def test_fan_pl_inserts_diagonal_by_interpolation(self):
        W = FanPL(((1, 0), (1, 2), (0, 1)), (0, -2, 0))
        assert W.evaluate((1, 1)) == -1  # phi = -w1 on the cone [(1,0),(1,2)]

    def test_non_primitive_rays_rescale(self):
        assert FanPL(((1, 0), (2, 2), (0, 1)), (0, -2, 0)).evaluate((1, 1)) == -1

    def test_errors(self):
        with pytest.raises(InvalidInput):
            FanPL(((1, 0), (1, 1), (0, 1)), (1, -1, 0))  # nonzero boundary value
        with pytest.raises(InvalidInput):
            FanPL(((1, 0), (1, 1)), (0, -1))  # fan must reach (0,1)
        with pytest.raises(DimensionMismatch):
            ZM.evaluate((1, 1, 1))
        with pytest.raises(InvalidInput):
            ZM.evaluate((-1, 1))

    @settings(max_examples=60, deadline=None)
    @given(regions(n=2), positive, st.tuples(positive, positive))
    def test_homogeneity(self, reg, t, w):
        for W in (ConvexVertexSet(reg.vertices), WSTAR, Scaled(Q(3, 2), WSTAR)):
            assert W.evaluate(tuple(t * x for x in w)) == t * W.evaluate(w)

    @settings(max_examples=30, deadline=None)
    @given(regions(), positive)
    def test_z_commutes_with_scaling(self, reg, c):
        F = RegionFiltration(reg)
        lhs, rhs = z_of_filtration(Scale(c, F)), Scaled(c, z_of_filtration(F))
        for w in positive_grid(reg.dimension, 4):
            assert lhs.evaluate(w) == rhs.evaluate(w)


class TestZ:
    def test_z_of_ideal_examples(self):
        assert z_of_ideal(M2).region == Region(((1, 0), (0, 1)))
        assert compare(z_of_ideal(XY), Scaled(2, ZM)).verdict == "equal"
        assert len(z_of_ideal(A3).region.vertices) == 3
        with pytest.raises(NotMPrimary):
            z_of_ideal(MonomialIdeal(2, ((1, 0),)))

    def test_z_of_filtration_examples(self):
        assert compare(z_of_filtration(IdealPower(M2)), ZM).verdict == "equal"
        assert z_of_filtration(V(1, 2)).region == Region(((1, 0), (0, Q(1, 2))))
        assert z_of_filtration(IdealPower(XY)).region == Region(((2, 0), (0, 2)))

    @settings(max_examples=30, deadline=None)
    @given(m_primary_ideals())
    def test_extraction_of_z_is_integral_closure(self, a):
        E = extract_filtration(z_of_ideal(a))
        reg = z_of_ideal(a).region
        closure = lattice_ideal_oracle(reg.contains, 2, 10)
        assert E.ideal_at(1) == closure
        assert a.issubset(E.ideal_at(1))


class TestCompare:
    def test_examples(self):
        assert compare(ZM, zero_divisor(2)).verdict == "le"
        assert compare(z_of_ideal(XY), ZM).verdict == "le"
        cmp = compare(Scaled(Q(6, 5), ZM), WSTAR)
        assert cmp.verdict == "le" and cmp.certified
        assert ((2, 1), Q(-6, 5), Q(-1)) in cmp.witnesses

    def test_incomparable(self):
        a = ConvexVertexSet(((3, 0), (0, 1)))
        b = ConvexVertexSet(((1, 0), (0, 3)))
        cmp = compare(a, b)
        assert cmp.verdict == "incomparable" and cmp.certified

    def test_three_dimensional_convex(self):
        a = ConvexVertexSet(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        b = ConvexVertexSet(((2, 0, 0), (0, 2, 0), (0, 0, 2)))
        assert compare(b, a).verdict == "le"

    def test_sampled_is_not_certified(self):
        S = Sampled(lambda w: -min(w), 2)
        cmp = compare(S, ZM)
        assert cmp.verdict == "equal" and not cmp.certified
        b = boundedness_constants(S)
        assert b.kind == "div-b" and not b.certified
        with pytest.raises(UnsupportedRepresentation):
            extract_filtration(S)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(regions(n=2), min_size=3, max_size=3))
    def test_partial_order(self, regs):
        Ws = [ConvexVertexSet(r.vertices) for r in regs] + [WSTAR]
        for W in Ws:
            assert compare(W, W).verdict == "equal"
        for A, B in itertools.permutations(Ws, 2):
            ab, ba = compare(A, B).verdict, compare(B, A).verdict
            flip = {"le": "ge", "ge": "le", "equal": "equal", "incomparable": "incomparable"}
            assert ba == flip[ab]
        for A, B, C in itertools.permutations(Ws, 3):
            if compare(A, B).verdict in ("le", "equal") and compare(B, C).verdict in ("le", "equal"):
                assert compare(A, C).verdict in ("le", "equal")


class TestBoundedness:
    def test_examples(self):
        b = boundedness_constants(ZM)
        assert (b.kind, b.epsilon, b.C) == ("div-b", 1, 1)
        b = boundedness_constants(WSTAR)
        assert (b.kind, b.epsilon, b.C, b.certified) == ("div-b", 1, Q(6, 5), True)
        b = boundedness_constants(FanPL(((1, 0), (1, 1), (0, 1)), (0, 0, 0)))
        assert b.kind == "div-plus" and b.degenerate

    def test_not_anti_effective(self):
        W = FanPL(((1, 0), (1, 1), (0, 1)), (0, 1, 0))
        assert boundedness_constants(W).kind == "not-anti-effective"
        with pytest.raises(NotAntiEffective):
            extract_filtration(W)

    def test_div_plus_without_upper_bound(self):
        # phi vanishes on the cone [(1,0),(2,1)], so no eps > 0 works
        W = FanPL(((1, 0), (2, 1), (1, 1), (0, 1)), (0, 0, -1, 0))
        b = boundedness_constants(W)
        assert b.kind == "div-plus" and not b.degenerate

    def test_zero_divisor_rejected(self):
        with pytest.raises(DegenerateDivisor):
            extract_filtration(FanPL(((1, 0), (0, 1)), (0, 0)))


class TestExtraction:
    def test_examples(self):
        E = extract_filtration(ZM)
        for lam in [Q(1, 2), 1, Q(5, 2), 4]:
            assert E.ideal_at(lam) == M2 ** -(-lam // 1)
        E = extract_filtration(Scaled(Q(1, 2), ZM))
        for lam in [1, 2, 3, 5]:
            assert E.ideal_at(lam) == M2 ** -(-Q(lam, 2) // 1)
        E = extract_filtration(WSTAR)
        for lam in range(1, 7):
            assert E.ideal_at(lam) == M2 ** -(-Q(6 * lam, 5) // 1)

    def test_wstar_against_ray_inequality_oracle(self):
        E = extract_filtration(WSTAR)
        for lam in [Q(1, 2), 1, 2, Q(7, 3)]:
            oracle = lattice_ideal_oracle(
                lambda u: 2 * u[0] + u[1] >= lam and u[0] + u[1] >= Q(6, 5) * lam and u[0] + 2 * u[1] >= lam, 2, 10
            )
            assert E.ideal_at(lam) == oracle


class TestVanishingOrder:
    def test_examples(self):
        assert vanishing_order(FromFiltration(V(1, 1)), P((2, 1))) == 3
        assert vanishing_order(FromFiltration(IdealPower(XY)), P((1, 1))) == 1
        assert vanishing_order(FromFiltration(IdealPower(M2)), P((3, 0), (1, 1))) == 2
        assert vanishing_order(IdealPower(XY), P((1, 1))) == 1
        assert vanishing_order(WSTAR, P((1, 1))) == Q(5, 3)

    def test_errors(self):
        with pytest.raises(InvalidInput):
            vanishing_order(ZM, Polynomial(2, {}))
        with pytest.raises(DegenerateDivisor):
            vanishing_order(zero_divisor(2), P((1, 1)))


class TestCartier:
    def test_examples(self):
        assert is_cartier_on(WSTAR, WSTAR.fan)
        assert is_cartier_on(z_of_filtration(V(1, 2)), Fan2D(((1, 0), (1, 2), (0, 1))))
        assert not is_cartier_on(ZM, Fan2D(((1, 0), (0, 1))))
        assert is_cartier_on(ZM, Fan2D(((1, 0), (0, 1))).with_diagonal())
