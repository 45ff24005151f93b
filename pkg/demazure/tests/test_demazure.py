"""
Unit tests for Demazure operators and the modules D(k, lambda)
"""

from fractions import Fraction

import pytest

from affine.src.affine import AffineWeight, affine_data, fundamental, level, reduced_word, rho_hat
from cartan.src.cartan import FiniteWeight, irr_char
from cartan.src.errors import (
    InvalidHighestWeight,
    InvalidIndex,
    InvalidWeight,
    ModeError,
    NonPositiveLevel,
    NonReducedWord,
    NotInX,
)
from characters.src.characters import decompose_g0
from characters.src.formal import FormalCharacter
from demazure.src.demazure import (
    demazure_apply_word,
    demazure_char,
    demazure_D,
    demazure_op,
    extremal_weight,
    is_in_X,
    levels_present,
    target_weight,
    verify_reduced,
)


@pytest.fixture
def a11():
    return affine_data("A1(1)")


@pytest.fixture
def a22():
    return affine_data("A2(2)")


@pytest.fixture
def d43():
    return affine_data("D4(3)")


class TestOperators:
    """Single operators and words"""

    def test_fixed_when_pairing_zero(self, d43):
        chi = FormalCharacter.monomial("affine", fundamental(d43, 0).key())
        assert demazure_op(chi, 1, d43) == chi

    def test_idempotent(self, d43):
        chi = FormalCharacter.monomial("affine", rho_hat(d43).key())
        for i in d43.nodes:
            once = demazure_op(chi, i, d43)
            assert demazure_op(once, i, d43) == once

    def test_last_letter_acts_first(self, a11):
        chi = FormalCharacter.monomial("affine", (1, 0, 1))
        result = demazure_apply_word(chi, [1, 0], a11)
        assert result == demazure_op(demazure_op(chi, 0, a11), 1, a11)
        assert result.dimension() == 4

    def test_index_out_of_range(self, d43):
        chi = FormalCharacter.monomial("affine", rho_hat(d43).key())
        with pytest.raises(InvalidIndex):
            demazure_op(chi, 3, d43)

    def test_requires_affine(self, d43):
        with pytest.raises(ModeError):
            demazure_op(FormalCharacter.monomial("finite", (1, 0)), 1, d43)


class TestDemazureChar:
    """V_w(Lambda) from a highest weight and a word"""

    def test_a11_two_omega(self, a11):
        result = demazure_char(AffineWeight((1, 0), 1), [1, 0], a11)
        assert result.dimension() == 4
        assert result.graded.dimension_by_degree() == {0: 3, 1: 1}
        assert result.graded.bucket(0) == irr_char(a11.g0, FiniteWeight.of(2))

    def test_top_anchor(self, a11):
        result = demazure_char(AffineWeight((1, 0), 1), [1, 0], a11, {"anchor": "top"})
        assert result.graded.dimension_by_degree() == {0: 1, 1: 3}

    def test_empty_word(self, d43):
        result = demazure_char(fundamental(d43, 0), [], d43)
        assert result.dimension() == 1

    def test_not_dominant(self, d43):
        with pytest.raises(InvalidHighestWeight):
            demazure_char(AffineWeight((1, -1, 1), 0), [], d43)

    def test_not_reduced(self, d43):
        with pytest.raises(NonReducedWord):
            demazure_char(fundamental(d43, 0), [0, 0], d43)
        with pytest.raises(NonReducedWord):
            verify_reduced(d43, [1, 2, 1, 2, 1, 2, 1])

    def test_skip_word_check(self, d43):
        result = demazure_char(fundamental(d43, 0), [0, 0], d43, {"verify_word": False})
        assert result.dimension() == 2

    def test_d43_translation(self, d43):
        word = reduced_word(d43, [], FiniteWeight.of(-1, 0))
        result = demazure_char(fundamental(d43, 0), word, d43)
        decomposition = decompose_g0(result.restricted(), d43.g0)
        assert decomposition.as_coords() == {(0, 0): 1, (1, 0): 1, (0, 1): 2}
        assert result.dimension() == 29


class TestModulesDkLambda:
    """The g0-stable Demazure modules"""

    def test_trivial(self, a11):
        assert demazure_D(a11, 1, FiniteWeight.of(0)).dimension() == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_a11_powers_of_two(self, a11, n):
        assert demazure_D(a11, 1, FiniteWeight.of(n)).dimension() == 2**n

    def test_a11_level_two(self, a11):
        result = demazure_D(a11, 2, FiniteWeight.of(2))
        assert result.dimension() == 3
        assert result.restricted() == irr_char(a11.g0, FiniteWeight.of(2))

    def test_a22_half_level(self, a22):
        result = demazure_D(a22, Fraction(1, 2), FiniteWeight.of(1))
        assert result.dimension() == 2
        assert result.highest_weight == fundamental(a22, 1)

    def test_extremal_weight_is_target(self, d43):
        lam = FiniteWeight.of(1, 0)
        result = demazure_D(d43, 1, lam)
        assert extremal_weight(d43, result) == target_weight(d43, lam, 1)

    def test_target_weight(self, a11):
        assert target_weight(a11, FiniteWeight.of(2), 1) == AffineWeight((3, -2), 0)

    def test_levels_constant(self, d43):
        result = demazure_D(d43, 1, FiniteWeight.of(1, 1))
        assert levels_present(d43, result.character) == {1}
        assert level(d43, result.highest_weight) == 1

    def test_string_level(self, a22):
        assert demazure_D(a22, "1/2", FiniteWeight.of(3)).dimension() == 6

    def test_non_positive_level(self, a11):
        with pytest.raises(NonPositiveLevel):
            demazure_D(a11, 0, FiniteWeight.of(1))

    def test_not_in_x(self, a22):
        with pytest.raises(NotInX):
            demazure_D(a22, Fraction(1, 2), FiniteWeight.of(2))

    def test_invalid_weight(self, d43):
        with pytest.raises(InvalidWeight):
            demazure_D(d43, 1, FiniteWeight.of(-1, 0))
        with pytest.raises(InvalidWeight):
            demazure_D(d43, 1, FiniteWeight.of(1))


class TestMembership:
    """The admissible set X"""

    def test_a22_parity(self, a22):
        assert is_in_X(a22, FiniteWeight.of(1), Fraction(1, 2))
        assert not is_in_X(a22, FiniteWeight.of(2), Fraction(1, 2))
        assert is_in_X(a22, FiniteWeight.of(2), 1)

    def test_non_positive_level_is_outside(self, a22):
        assert not is_in_X(a22, FiniteWeight.of(1), 0)
        assert not is_in_X(a22, FiniteWeight.of(1), -1)

    def test_non_dominant_weight(self, a22):
        with pytest.raises(InvalidWeight):
            is_in_X(a22, FiniteWeight.of(-1), 1)
