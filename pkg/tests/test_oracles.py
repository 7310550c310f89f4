import random
from fractions import Fraction as Q

import pytest

from toric_bdiv.bdivisors import FanPL, maximal_ideal_divisor, vanishing_order, z_of_ideal
from toric_bdiv.errors import InsufficientBox, InvalidInput
from toric_bdiv.filtrations import IdealPower, Intersect, RegionFiltration, ValuationFiltration, saturate
from toric_bdiv.geometry import Region
from toric_bdiv.monomial import MonomialIdeal, Polynomial
from toric_bdiv.oracles import fekete_estimate, grid_infimum, saturation_oracle
from toric_bdiv.sampling import random_m_primary_ideal, random_region
from toric_bdiv.valuations import WeightVector, value_of_polynomial

M2 = MonomialIdeal.maximal(2)
XY = MonomialIdeal(2, ((2, 0), (0, 2)))


def V(*w):
    return ValuationFiltration(WeightVector(tuple(Q(x) for x in w)))


class TestGrid:
    def test_examples(self):
        assert grid_infimum(lambda w: (w[0] + w[1]) / (2 * min(w)), 2, 2) == (1, (Q(1, 2), Q(1, 2)))
        val, at = grid_infimum(lambda w: min(3 * w[0], w[0] + w[1]) / min(w), 2, 4)
        assert val == 2 and at[0] == at[1]

    def test_resolution_one_is_barycenter(self):
        assert grid_infimum(lambda w: w[0] + 2 * w[1] + 3 * w[2], 3, 1) == (2, (Q(1, 3),) * 3)

    def test_errors(self):
        with pytest.raises(InvalidInput):
            grid_infimum(lambda w: 1, 2, 0)
        with pytest.raises(InvalidInput):
            grid_infimum(lambda w: None, 2, 3)

    def test_division_by_zero_points_skipped(self):
        val, _ = grid_infimum(lambda w: 1 / (w[0] - Q(1, 2)), 2, 2)
        assert val == -4

    @pytest.mark.parametrize("W", [maximal_ideal_divisor(2), z_of_ideal(MonomialIdeal(2, ((3, 0), (1, 1), (0, 2)))),
                                   FanPL(((1, 0), (2, 1), (1, 1), (1, 2), (0, 1)), (0, -1, Q(-6, 5), -1, 0))])
    def test_grid_bounds_lp_from_above(self, W):
        f = Polynomial(2, {(2, 1): 1, (0, 3): -2})
        lp = vanishing_order(W, f)
        for r in (1, 3, 8):
            val, _ = grid_infimum(lambda w: value_of_polynomial(WeightVector(w), f) / -W.evaluate(w), 2, r)
            assert lp <= val


class TestSaturationOracle:
    def test_examples(self):
        assert saturation_oracle(IdealPower(XY), 1, 4).generators == ((0, 2), (1, 1), (2, 0))
        assert saturation_oracle(IdealPower(M2), 3, 6) == M2**3
        assert saturation_oracle(V(1, 2), 2, 6) == MonomialIdeal(2, ((2, 0), (0, 1)))

    def test_insufficient_box(self):
        with pytest.raises(InsufficientBox):
            saturation_oracle(IdealPower(M2), 5, 3)

    def test_random_agreement(self):
        rng = random.Random(11)
        for _ in range(15):
            F = rng.choice([
                lambda: IdealPower(random_m_primary_ideal(rng, 2)),
                lambda: RegionFiltration(random_region(rng, 2)),
                lambda: Intersect(V(1, rng.randint(1, 3)), IdealPower(random_m_primary_ideal(rng, 2))),
            ])()
            lam = rng.choice([Q(1, 2), 1, Q(3, 2), 2])
            assert saturation_oracle(F, lam, 12) == saturate(F).ideal_at(lam)


class TestFekete:
    def test_examples(self):
        assert fekete_estimate(V(2, 1), (1, 2), 4) == [(1, 1), (2, Q(1, 2)), (3, Q(2, 3)), (4, Q(1, 2))]
        assert {v for _, v in fekete_estimate(IdealPower(M2), (1, 1), 6)} == {1}

    def test_running_minimum_non_increasing_and_bounded(self):
        for F in [V(2, 3), V(Q(1, 2), Q(5, 3)), Intersect(IdealPower(XY), V(1, 3))]:
            w = (1, 2)
            seq = fekete_estimate(F, w, 24)
            mins = [min(v for _, v in seq[: i + 1]) for i in range(len(seq))]
            assert mins == sorted(mins, reverse=True)
            assert all(v >= F.asymptotic_value(w) for _, v in seq)

    def test_rejects_m_max_zero(self):
        with pytest.raises(InvalidInput):
            fekete_estimate(V(1, 1), (1, 1), 0)
