"""
Demazure operators and characters of the g0-stable Demazure modules D(k, lambda).

Operator order: a word (j_1, ..., j_r) stands for D_{j_1} o ... o D_{j_r}, so the
last letter acts first. A dominance-chain word from the target weight is used as is.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence

from affine.src.affine import (
    AffineData,
    AffineWeight,
    dominance_chain,
    fundamental,
    is_reduced,
    level,
    lift,
    weyl_act,
)
from cartan.src.cartan import FiniteWeight, apply_word
from cartan.src.errors import (
    InvalidHighestWeight,
    InvalidIndex,
    InvalidWeight,
    ModeError,
    NonPositiveLevel,
    NonReducedWord,
    NotInX,
)
from characters.src.characters import GradedCharacter, graded, restrict_to_g0
from characters.src.formal import FormalCharacter, exact, isobaric_step, isobaric_word

logger = logging.getLogger(__name__)


@dataclass
class DemazureResult:
    """Character of V_w(Lambda) together with the data that produced it."""

    highest_weight: AffineWeight
    word: List[int]
    character: FormalCharacter
    graded: GradedCharacter

    def dimension(self) -> int:
        return self.character.dimension()

    def restricted(self) -> FormalCharacter:
        return restrict_to_g0(self.character)


def _check_affine(character: FormalCharacter) -> None:
    if character.mode != "affine":
        raise ModeError("Demazure operators of the affine algebra need an affine character")


def _check_word(data: AffineData, word: Sequence[int]) -> None:
    for i in word:
        if not 0 <= i <= data.rank:
            raise InvalidIndex(f"node {i} outside 0..{data.rank} for {data.name}")


def demazure_op(character: FormalCharacter, i: int, data: AffineData) -> FormalCharacter:
    """D_i applied term by term."""
    _check_affine(character)
    _check_word(data, [i])
    return isobaric_step(character, i, data.root_vector(i))


def demazure_apply_word(
    character: FormalCharacter, word: Sequence[int], data: AffineData
) -> FormalCharacter:
    """D_{word[0]} o ... o D_{word[-1]}(character)."""
    _check_affine(character)
    _check_word(data, word)
    return isobaric_word(character, word, lambda i: i, data.root_vector)


def verify_reduced(data: AffineData, word: Sequence[int]) -> None:
    _check_word(data, word)
    if not is_reduced(data, word):
        raise NonReducedWord(f"word {list(word)} is not reduced in {data.name}")


def demazure_char(
    highest_weight: AffineWeight,
    word: Sequence[int],
    data: AffineData,
    options: Dict | None = None,
) -> DemazureResult:
    """
    Char V_w(Lambda) = D_w(e^Lambda).

    Args:
        highest_weight: dominant integral Lambda
        word: reduced word for w
        data: affine data
        options: ``verify_word`` (default True) checks the word is reduced;
            ``anchor`` is passed to the grading (default "cyclic")

    Returns:
        DemazureResult
    """
    if options is None:
        options = {}
    if not (highest_weight.is_dominant() and highest_weight.is_integral()):
        raise InvalidHighestWeight(f"{highest_weight} is not dominant integral")
    if options.get("verify_word", True):
        verify_reduced(data, word)
    start = FormalCharacter.monomial("affine", highest_weight.key())
    character = demazure_apply_word(start, word, data)
    return DemazureResult(
        highest_weight=highest_weight,
        word=list(word),
        character=character,
        graded=graded(character, options.get("anchor", "cyclic")),
    )


def target_weight(data: AffineData, lam: FiniteWeight, k) -> AffineWeight:
    """w0(lambda) + k Lambda_0 with delta coordinate 0."""
    if lam.rank != data.rank:
        raise InvalidWeight(f"weight {lam} has length {lam.rank}, {data.name} needs {data.rank}")
    lowest = apply_word(data.g0, lam, data.g0.longest_word)
    return lift(data, lowest) + fundamental(data, 0).scaled(exact(k))


def _check_lambda(data: AffineData, lam: FiniteWeight) -> None:
    if lam.rank != data.rank:
        raise InvalidWeight(f"weight {lam} has length {lam.rank}, {data.name} needs {data.rank}")
    if not (lam.is_dominant() and lam.is_integral()):
        raise InvalidWeight(f"weight {lam} is not dominant integral")


def is_in_X(data: AffineData, lam: FiniteWeight, k, options: Dict | None = None) -> bool:
    """True iff k > 0 and the chain from w0(lambda) + k Lambda_0 ends in a dominant integral weight."""
    _check_lambda(data, lam)
    if exact(k) <= 0:
        return False
    dominant, _ = dominance_chain(data, target_weight(data, lam, k), options)
    return dominant.is_integral()


def demazure_D(data: AffineData, k, lam: FiniteWeight, options: Dict | None = None) -> DemazureResult:
    """
    Character of D(k, lambda), the Demazure module with extremal weight
    w0(lambda) + k Lambda_0.

    Args:
        data: affine data
        k: positive rational
        lam: dominant integral g0-weight
        options: ``max_steps`` for the dominance chain, ``anchor`` for the grading

    Returns:
        DemazureResult whose highest weight is the dominant conjugate of the target
    """
    if options is None:
        options = {}
    _check_lambda(data, lam)
    k = exact(k)
    if k <= 0:
        raise NonPositiveLevel(f"level {k} is not positive")
    target = target_weight(data, lam, k)
    dominant, word = dominance_chain(data, target, options)
    if not dominant.is_integral():
        raise NotInX(f"({lam}, {k}) is not in X for {data.name}: chain ends at {dominant}")
    logger.debug(
        "D(%s, %s) in %s: Lambda = %s, word of length %d",
        k, lam, data.name, dominant, len(word),
    )
    return demazure_char(
        dominant,
        word,
        data,
        {"verify_word": False, "anchor": options.get("anchor", "cyclic")},
    )


def extremal_weight(data: AffineData, result: DemazureResult) -> AffineWeight:
    """w(Lambda) for the word stored in result."""
    return weyl_act(data, result.word, result.highest_weight)


def levels_present(data: AffineData, character: FormalCharacter) -> set:
    return {level(data, AffineWeight.from_key(key)) for key in character.keys()}
