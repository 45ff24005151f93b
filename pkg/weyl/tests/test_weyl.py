"""
Unit tests for twisted graded Weyl modules
"""

from fractions import Fraction

import pytest

from affine.src.affine import affine_data
from cartan.src.cartan import FiniteWeight, irr_char
from cartan.src.errors import InvalidWeight, NotAModuleCharacter, UnsupportedEvenCase
from weyl.src import weyl
from weyl.src.weyl import (
    a2_closed_forms,
    binomial_dimension,
    clear_cache,
    fundamental_dimension,
    fundamental_table,
    kirillov_reshetikhin_dimension,
    summary_identification,
    verify_tensor_property,
    verify_weyl_factorization,
    weyl_char,
    weyl_dim_product,
    weyl_factorization,
    weyl_level,
)


@pytest.fixture
def d43():
    return affine_data("D4(3)")


@pytest.fixture
def a42():
    return affine_data("A4(2)")


@pytest.fixture(autouse=True)
def fresh_cache():
    """Each test starts without memoized fundamental dimensions"""
    clear_cache()
    yield
    clear_cache()


class TestWeylChar:
    """Characters of W(lambda)"""

    def test_levels(self, d43, a42):
        assert weyl_level(d43) == 1
        assert weyl_level(a42) == Fraction(1, 2)

    def test_d43_first_fundamental(self, d43):
        report = weyl_char(d43, FiniteWeight.of(1, 0))
        assert report.dimension == 29
        assert report.decomposition.as_coords() == {(0, 0): 1, (1, 0): 1, (0, 1): 2}
        assert report.identification["predicted_index"] == 0
        assert report.identification["matches"]

    def test_d43_second_fundamental(self, d43):
        report = weyl_char(d43, FiniteWeight.of(0, 1))
        assert report.dimension == 8
        assert report.decomposition.as_coords() == {(0, 0): 1, (0, 1): 1}

    def test_top_degree_is_irreducible(self, d43):
        lam = FiniteWeight.of(0, 1)
        report = weyl_char(d43, lam)
        assert report.graded_character.bucket(0) == irr_char(d43.g0, lam)

    def test_collapse(self, d43):
        report = weyl_char(d43, FiniteWeight.of(1, 0))
        assert report.restricted().dimension() == report.dimension

    @pytest.mark.parametrize("n, dim", [(1, 2), (3, 6), (5, 18)])
    def test_a22_series(self, n, dim):
        report = weyl_char(affine_data("A2(2)"), FiniteWeight.of(n))
        assert report.dimension == dim
        assert report.identification["observed_index"] == 1

    def test_even_case_unsupported(self):
        with pytest.raises(UnsupportedEvenCase):
            weyl_char(affine_data("A2(2)"), FiniteWeight.of(2))

    def test_invalid_weight(self, d43):
        with pytest.raises(InvalidWeight):
            weyl_char(d43, FiniteWeight.of(0, -1))

    def test_zero_weight(self, d43):
        assert weyl_char(d43, FiniteWeight.of(0, 0)).dimension == 1
        assert weyl_dim_product(d43, FiniteWeight.of(0, 0)) == 1

    def test_untwisted_has_no_prediction(self):
        report = weyl_char(affine_data("A1(1)"), FiniteWeight.of(2))
        assert report.identification["predicted_index"] is None
        assert report.dimension == 4


class TestSummaryIdentification:
    """Which V_w(Lambda_j) realizes W(lambda)"""

    def test_a2l_minus_one_parity(self):
        data = affine_data("A3(2)")
        assert summary_identification(data, FiniteWeight.of(0, 1))["predicted_index"] == 0
        assert summary_identification(data, FiniteWeight.of(1, 0))["predicted_index"] == 1

    def test_d_family_parity(self):
        data = affine_data("D4(2)")
        assert summary_identification(data, FiniteWeight.of(1, 0, 0))["predicted_index"] == 0
        assert summary_identification(data, FiniteWeight.of(0, 0, 1))["predicted_index"] == 3

    def test_a2l_even(self, a42):
        assert summary_identification(a42, FiniteWeight.of(0, 1))["predicted_index"] == 2

    @pytest.mark.parametrize(
        "name, coords",
        [("A3(2)", (1, 0)), ("A3(2)", (0, 1)), ("D4(2)", (0, 0, 1)), ("A4(2)", (1, 1))],
    )
    def test_observed_matches(self, name, coords):
        report = weyl_char(affine_data(name), FiniteWeight(coords))
        assert report.identification["matches"]


class TestFundamentalTable:
    """Decompositions and dimensions of W(omega_i)"""

    def test_a42(self, a42):
        rows = fundamental_table(a42)
        assert [row.dimension for row in rows] == [5, 4, 10]
        assert [row.source for row in rows] == ["factorization", "demazure", "kirillov-reshetikhin"]

    def test_doubled_spin_row_is_computed(self, a42):
        """The 2 omega_l row is divided out of W(3 omega_l), not looked up"""
        row = fundamental_table(a42)[-1]
        assert row.weight == FiniteWeight.of(0, 2)
        assert row.decomposition.as_coords() == {(0, 2): 1}
        assert row.dimension == kirillov_reshetikhin_dimension(a42)

    def test_a22(self):
        rows = fundamental_table(affine_data("A2(2)"))
        assert [row.dimension for row in rows] == [2, 3]
        assert rows[1].decomposition.as_coords() == {(2,): 1}

    def test_wrong_divisor(self, a42):
        triple = weyl_char(a42, FiniteWeight.of(0, 3))
        with pytest.raises(NotAModuleCharacter):
            weyl._divide_out(a42, triple, FiniteWeight.of(0, 2), irr_char(a42.g0, FiniteWeight.of(1, 0)))

    def test_a52(self):
        rows = fundamental_table(affine_data("A5(2)"))
        assert [row.dimension for row in rows] == [6, 15, 20]
        assert rows[2].decomposition.as_coords() == {(0, 0, 1): 1, (1, 0, 0): 1}

    def test_d42(self):
        rows = fundamental_table(affine_data("D4(2)"))
        assert [row.dimension for row in rows] == [8, 29, 8]
        assert rows[1].decomposition.as_coords() == {(0, 0, 0): 1, (1, 0, 0): 1, (0, 1, 0): 1}

    @pytest.mark.slow
    def test_e62(self):
        rows = fundamental_table(affine_data("E6(2)"))
        assert [row.dimension for row in rows] == [27, 378, 3732, 79]
        assert rows[2].decomposition.summands() == 15


class TestDimensions:
    """Product formulas for dim W(lambda)"""

    def test_fundamental_dimension_cached(self, d43):
        cache = {}
        assert fundamental_dimension(d43, 1, {"cache": cache}) == 29
        assert cache[("D4(3)", 1)] == 29

    def test_cache_bypass(self, d43):
        assert fundamental_dimension(d43, 2, {"use_cache": False}) == 8

    def test_a2l_lower_fundamental(self, a42):
        assert fundamental_dimension(a42, 1) == 5

    def test_kirillov_reshetikhin(self, a42):
        assert kirillov_reshetikhin_dimension(a42) == 10

    def test_a42_product(self, a42):
        lam = FiniteWeight.of(1, 3)
        assert weyl_dim_product(a42, lam) == 200
        assert binomial_dimension(a42, lam) == 200

    def test_a42_direct_equals_product(self, a42):
        lam = FiniteWeight.of(1, 1)
        assert weyl_char(a42, lam).dimension == weyl_dim_product(a42, lam) == 20

    def test_a52_product(self):
        data = affine_data("A5(2)")
        lam = FiniteWeight.of(1, 1, 0)
        assert weyl_dim_product(data, lam) == weyl_char(data, lam).dimension == 90

    def test_binomial_needs_a2l(self, d43):
        with pytest.raises(InvalidWeight):
            binomial_dimension(d43, FiniteWeight.of(1, 0))

    def test_a2_closed_forms(self):
        assert a2_closed_forms(3) == {"product": 6, "ceiling": 18}


class TestFactorization:
    """Tensor factorizations as g0-modules"""

    def test_predicted_factors(self, a42):
        factors = weyl_factorization(a42, FiniteWeight.of(1, 3))
        assert [(w.coords, e, kind) for w, e, kind in factors] == [
            ((1, 0), 1, "weyl"),
            ((0, 2), 1, "irreducible"),
            ((0, 1), 1, "weyl"),
        ]

    def test_factorization_holds(self, a42):
        assert verify_weyl_factorization(a42, FiniteWeight.of(1, 1))
        assert verify_weyl_factorization(a42, FiniteWeight.of(0, 3))

    def test_d43_factorization(self, d43):
        assert verify_weyl_factorization(d43, FiniteWeight.of(1, 1))

    def test_tensor_property_a11(self):
        data = affine_data("A1(1)")
        assert verify_tensor_property(data, 1, FiniteWeight.of(1), FiniteWeight.of(1))

    def test_tensor_property_twisted(self):
        data = affine_data("A3(2)")
        assert verify_tensor_property(data, 1, FiniteWeight.of(1, 0), FiniteWeight.of(0, 1))
