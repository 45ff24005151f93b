"""
Restriction to g0, delta-grading and decomposition into irreducible g0-characters.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from affine.src.affine import AffineData, lift
from cartan.src.cartan import (
    FiniteRootSystem,
    FiniteWeight,
    height,
    irr_char,
    weyl_dim,
)
from cartan.src.errors import EmptyCharacter, ModeError, NonIntegralDegree, NotAModuleCharacter
from characters.src.formal import FormalCharacter, exact, is_integral

logger = logging.getLogger(__name__)

ANCHORS = ("cyclic", "top")


def _require_mode(character: FormalCharacter, mode: str) -> None:
    if character.mode != mode:
        raise ModeError(f"expected a {mode} character, got a {character.mode} one")


def restrict_to_g0(character: FormalCharacter) -> FormalCharacter:
    """Forget the Lambda_0 and delta components: key (p_0, ..., p_l, r) -> (p_1, ..., p_l)."""
    _require_mode(character, "affine")
    return character.map_keys_to("finite", lambda key: key[1:-1])


def lift_finite(data: AffineData, character: FormalCharacter) -> FormalCharacter:
    """Level-zero affine character with the given finite exponents and delta 0."""
    _require_mode(character, "finite")
    return character.map_keys_to(
        "affine", lambda key: lift(data, FiniteWeight(key)).key()
    )


@dataclass
class GradedCharacter:
    """Finite characters indexed by q-degree."""

    buckets: Dict = field(default_factory=dict)
    anchor: str = "cyclic"

    def degrees(self) -> List:
        return sorted(self.buckets)

    def bucket(self, degree) -> FormalCharacter:
        return self.buckets.get(exact(degree), FormalCharacter.zero("finite"))

    def dimension_by_degree(self) -> Dict:
        return {d: self.buckets[d].dimension() for d in self.degrees()}

    def at_q_equals_one(self) -> FormalCharacter:
        total = FormalCharacter.zero("finite")
        for d in self.degrees():
            total = total + self.buckets[d]
        return total

    def dimension(self) -> int:
        return sum(self.dimension_by_degree().values())


def graded(character: FormalCharacter, anchor: str = "cyclic") -> GradedCharacter:
    """
    Bucket an affine character by its delta coordinate.

    Args:
        character: nonempty affine character
        anchor: "cyclic" measures degree as delta - r_min, so the layer holding the
            cyclic vector is degree 0; "top" measures r_top - delta

    Returns:
        GradedCharacter whose buckets sum to restrict_to_g0(character)

    Raises:
        NonIntegralDegree: two exponents sit at delta coordinates that differ
            by a non-integer
    """
    _require_mode(character, "affine")
    if character.is_zero():
        raise EmptyCharacter("cannot grade the zero character")
    if anchor not in ANCHORS:
        raise ValueError(f"unknown grading anchor {anchor!r}")

    deltas = [key[-1] for key in character.keys()]
    base = min(deltas) if anchor == "cyclic" else max(deltas)
    split: Dict = {}
    for key, mult in character.items():
        degree = exact(key[-1] - base if anchor == "cyclic" else base - key[-1])
        if not is_integral(degree):
            raise NonIntegralDegree(f"exponent {key} lies {degree} away from the {anchor} layer")
        split.setdefault(degree, {})
        finite_key = key[1:-1]
        split[degree][finite_key] = split[degree].get(finite_key, 0) + mult
    buckets = {d: FormalCharacter("finite", terms) for d, terms in split.items()}
    return GradedCharacter({d: b for d, b in buckets.items() if not b.is_zero()}, anchor)


def reflect_character(rs: FiniteRootSystem, character: FormalCharacter, i: int) -> FormalCharacter:
    """Apply s_i to every exponent of a finite character."""
    _require_mode(character, "finite")
    root = rs.simple_root(i)
    return character.map_keys(
        lambda key: tuple(c - key[i - 1] * r for c, r in zip(key, root))
    )


def is_w0_invariant(rs: FiniteRootSystem, character: FormalCharacter) -> bool:
    return all(
        reflect_character(rs, character, i) == character for i in range(1, rs.rank + 1)
    )


@dataclass
class IrrDecomposition:
    """Multiset of dominant g0-weights: the summands V(mu)^{mult}."""

    parts: Dict[FiniteWeight, int] = field(default_factory=dict)

    def items(self) -> List[Tuple[FiniteWeight, int]]:
        return sorted(self.parts.items(), key=lambda item: item[0].coords)

    def as_coords(self) -> Dict[Tuple, int]:
        return {mu.coords: mult for mu, mult in self.parts.items()}

    def multiplicity(self, mu: FiniteWeight) -> int:
        return self.parts.get(mu, 0)

    def dimension(self, rs: FiniteRootSystem) -> int:
        return sum(mult * weyl_dim(rs, mu) for mu, mult in self.parts.items())

    def summands(self) -> int:
        return sum(self.parts.values())


def reconstruct(decomposition: IrrDecomposition, rs: FiniteRootSystem) -> FormalCharacter:
    total = FormalCharacter.zero("finite")
    for mu, mult in decomposition.items():
        total = total + irr_char(rs, mu).scale(mult)
    return total


def decompose_g0(
    character: FormalCharacter, rs: FiniteRootSystem, options: Dict | None = None
) -> IrrDecomposition:
    """
    Peel off irreducible characters, highest dominant weight first.

    Args:
        character: W0-invariant finite character
        rs: root system of g0
        options: ``reverse_ties`` flips the lexicographic tie-break between
            dominant weights of equal height (default False)

    Returns:
        IrrDecomposition whose reconstruction is the input character
    """
    if options is None:
        options = {}
    reverse_ties = options.get("reverse_ties", False)
    _require_mode(character, "finite")
    if not is_w0_invariant(rs, character):
        raise NotAModuleCharacter("character is not invariant under the Weyl group of g0")

    def order(mu: FiniteWeight):
        tie = tuple(-c for c in mu.coords) if reverse_ties else mu.coords
        return (height(rs, mu), tie)

    parts: Dict[FiniteWeight, int] = {}
    residual = character
    while not residual.is_zero():
        dominant = [FiniteWeight(k) for k in residual.keys() if all(c >= 0 for c in k)]
        if not dominant:
            raise NotAModuleCharacter("residual character has no dominant weight")
        top = max(dominant, key=order)
        mult = residual.multiplicity(top.coords)
        if mult <= 0:
            raise NotAModuleCharacter(f"weight {top} has multiplicity {mult}")
        parts[top] = mult
        residual = residual - irr_char(rs, top).scale(mult)
    logger.debug("decomposed into %d summands", sum(parts.values()))
    return IrrDecomposition(parts)
