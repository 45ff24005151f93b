"""
Formal characters - finite integer combinations of exponentials e^mu.

A character is a sparse map from exponent keys to nonzero integer multiplicities.
Keys are tuples of exact rationals:

* finite mode: the fundamental-weight coordinates (m_1, ..., m_l) of a g0-weight;
* affine mode: the coroot pairings (p_0, ..., p_l) followed by the delta coordinate.

The isobaric (Demazure) kernel also lives here so that finite and affine
characters share one implementation.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from cartan.src.errors import ModeError, NonIntegralPairing

logger = logging.getLogger(__name__)

MODES = ("affine", "finite")

Key = Tuple


def exact(value) -> Fraction | int:
    """Return value as an int when integral, otherwise as a Fraction."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    # sympy Rational, strings like "3/2", floats are rejected
    if isinstance(value, float):
        raise TypeError(f"floating point value {value!r} is not exact")
    if hasattr(value, "p") and hasattr(value, "q"):
        return exact(Fraction(int(value.p), int(value.q)))
    return exact(Fraction(value))


def exact_tuple(values: Iterable) -> Tuple:
    return tuple(exact(v) for v in values)


def is_integral(value) -> bool:
    return isinstance(exact(value), int)


def format_rational(value) -> str:
    """Render an exact rational as "p/q"; integers keep the denominator, "2/1"."""
    value = Fraction(exact(value))
    return f"{value.numerator}/{value.denominator}"


class FormalCharacter:
    """Element of Z[P] (finite mode) or Z[P-hat] (affine mode) in canonical form."""

    __slots__ = ("mode", "_terms")

    def __init__(self, mode: str, terms: Mapping[Key, int] | None = None):
        if mode not in MODES:
            raise ModeError(f"unknown character mode {mode!r}")
        self.mode = mode
        self._terms: Dict[Key, int] = {}
        for key, mult in (terms or {}).items():
            if mult:
                self._terms[exact_tuple(key)] = int(mult)

    @classmethod
    def zero(cls, mode: str) -> "FormalCharacter":
        return cls(mode)

    @classmethod
    def monomial(cls, mode: str, key: Sequence, mult: int = 1) -> "FormalCharacter":
        return cls(mode, {tuple(key): mult})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def multiplicity(self, key: Sequence) -> int:
        return self._terms.get(exact_tuple(key), 0)

    def dimension(self) -> int:
        """Sum of all multiplicities (the value at e^mu = 1)."""
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_items(self):
        return sorted(self._terms.items())

    def map_keys(self, func) -> "FormalCharacter":
        """Push every exponent through func, merging equal images."""
        return self.map_keys_to(self.mode, func)

    def map_keys_to(self, mode: str, func) -> "FormalCharacter":
        merged: Dict[Key, int] = defaultdict(int)
        for key, mult in self._terms.items():
            merged[exact_tuple(func(key))] += mult
        return FormalCharacter(mode, merged)

    def scale(self, factor: int) -> "FormalCharacter":
        return FormalCharacter(
            self.mode, {k: factor * m for k, m in self._terms.items()}
        )

    def _check_mode(self, other: "FormalCharacter") -> None:
        if not isinstance(other, FormalCharacter):
            raise TypeError(f"expected FormalCharacter, got {type(other).__name__}")
        if other.mode != self.mode:
            raise ModeError(
                f"cannot combine {self.mode} and {other.mode} characters"
            )

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check_mode(other)
        merged = defaultdict(int, self._terms)
        for key, mult in other._terms.items():
            merged[key] += mult
        return FormalCharacter(self.mode, merged)

    def __neg__(self) -> "FormalCharacter":
        return self.scale(-1)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __mul__(self, other) -> "FormalCharacter":
        if isinstance(other, int):
            return self.scale(other)
        self._check_mode(other)
        product: Dict[Key, int] = defaultdict(int)
        for key_a, mult_a in self._terms.items():
            for key_b, mult_b in other._terms.items():
                key = tuple(exact(a + b) for a, b in zip(key_a, key_b))
                product[key] += mult_a * mult_b
        return FormalCharacter(self.mode, product)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.mode == other.mode and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Key]:
        return iter(self._terms)

    def __repr__(self) -> str:
        shown = ", ".join(f"{k}: {m}" for k, m in self.sorted_items()[:8])
        more = "" if len(self) <= 8 else f", ... ({len(self)} terms)"
        return f"FormalCharacter({self.mode}, {{{shown}{more}}})"


def add(first: FormalCharacter, second: FormalCharacter) -> FormalCharacter:
    return first + second


def multiply(first: FormalCharacter, second: FormalCharacter) -> FormalCharacter:
    return first * second


def _shift(key: Key, root: Key, times: int) -> Key:
    return tuple(exact(a + times * b) for a, b in zip(key, root))


def isobaric_step(
    character: FormalCharacter, position: int, root: Sequence
) -> FormalCharacter:
    """
    Apply one Demazure operator term by term.

    Args:
        character: the character to act on
        position: key slot holding the pairing <lambda, beta^vee>
        root: key vector of the simple root beta

    Returns:
        D_beta(character), with
        e^lam + e^(lam-beta) + ... + e^(s(lam)) when the pairing n >= 0,
        0 when n = -1 and -(e^(lam+beta) + ... + e^(s(lam)-beta)) when n <= -2.
    """
    root = tuple(root)
    result: Dict[Key, int] = defaultdict(int)
    for key, mult in character.items():
        pairing = key[position]
        if not is_integral(pairing):
            raise NonIntegralPairing(
                f"exponent {key} has pairing {pairing} at slot {position}"
            )
        pairing = int(pairing)
        if pairing >= 0:
            for step in range(pairing + 1):
                result[_shift(key, root, -step)] += mult
        else:
            for step in range(1, -pairing):
                result[_shift(key, root, step)] -= mult
    return FormalCharacter(character.mode, result)


def isobaric_word(
    character: FormalCharacter, word: Sequence[int], position_of, root_of
) -> FormalCharacter:
    """Apply D_{word[0]} o ... o D_{word[-1]}; the last letter acts first."""
    for letter in reversed(list(word)):
        character = isobaric_step(character, position_of(letter), root_of(letter))
    logger.debug("isobaric word of length %d -> %d terms", len(word), len(character))
    return character
