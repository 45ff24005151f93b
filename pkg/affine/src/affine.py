"""
Affine root data, the affine weight lattice and the affine Weyl group action.

Node labels follow the diagrams with a_0 = 1 for every supported type, so that
alpha_0 = delta - theta. Affine weights are written over the basis
(Lambda_0, ..., Lambda_l, delta): ``pairings[i]`` is the coefficient of Lambda_i
(equivalently <lw, alpha_i^vee>) and ``delta`` the coefficient of delta.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, List, Sequence, Tuple

import sympy

from cartan.src.cartan import FiniteRootSystem, FiniteWeight, build_root_system
from cartan.src.errors import (
    ChainDidNotTerminate,
    InvalidIndex,
    InvalidWeight,
    NonPositiveLevel,
    NotInAffineWeylGroup,
    UnsupportedType,
)
from characters.src.formal import exact, exact_tuple, is_integral

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 100000

TYPE_NAME = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*\(\s*([123])\s*\)\s*$")

TWISTED_TYPES = ("A2(2)", "A2l(2)", "A2l-1(2)", "Dl+1(2)", "E6(2)", "D4(3)")


@dataclass(frozen=True)
class AffineWeight:
    """Element sum_i pairings[i] Lambda_i + delta * delta of the affine weight lattice."""

    pairings: Tuple
    delta: Fraction | int = 0

    def __post_init__(self):
        object.__setattr__(self, "pairings", exact_tuple(self.pairings))
        object.__setattr__(self, "delta", exact(self.delta))

    def key(self) -> Tuple:
        return self.pairings + (self.delta,)

    @classmethod
    def from_key(cls, key: Sequence) -> "AffineWeight":
        return cls(tuple(key[:-1]), key[-1])

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(
            tuple(a + b for a, b in zip(self.pairings, other.pairings)),
            self.delta + other.delta,
        )

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "AffineWeight":
        return AffineWeight(tuple(factor * p for p in self.pairings), factor * self.delta)

    def is_dominant(self) -> bool:
        return all(p >= 0 for p in self.pairings)

    def is_integral(self) -> bool:
        return all(is_integral(p) for p in self.pairings)

    def __str__(self) -> str:
        parts = [f"{p}*L{i}" for i, p in enumerate(self.pairings) if p != 0]
        if self.delta != 0:
            parts.append(f"{self.delta}*d")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AffineData:
    """Affine Cartan matrix with marks, comarks, g0 and the invariant form."""

    name: str
    twist_order: int
    cartan: Tuple[Tuple[int, ...], ...]
    marks: Tuple[int, ...]
    comarks: Tuple[int, ...]
    g0: FiniteRootSystem
    theta: FiniteWeight
    form: Tuple[Tuple, ...]

    @property
    def rank(self) -> int:
        return self.g0.rank

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    @property
    def is_twisted(self) -> bool:
        return self.twist_order > 1

    def is_even_twisted_a(self) -> bool:
        """True for the A2l(2) family, where a_0^vee = 2."""
        return self.name.startswith("A") and self.twist_order == 2 and self.comarks[0] == 2

    def root_vector(self, j: int) -> Tuple:
        """Key vector (pairings + delta) of the simple root alpha_j."""
        _check_node(self, j)
        column = tuple(self.cartan[i][j] for i in self.nodes)
        return column + (Fraction(1, self.marks[0]) if j == 0 else 0,)


def supported_types() -> List[str]:
    """Type names understood by affine_data (families shown with small ranks)."""
    return [
        "A2(2)", "A4(2)", "A6(2)",
        "A3(2)", "A5(2)", "A7(2)",
        "D4(2)", "D5(2)", "D6(2)",
        "E6(2)", "D4(3)",
        "A1(1)", "A2(1)", "B2(1)", "C2(1)", "G2(1)", "D4(1)",
    ]


def parse_type_name(name: str) -> Tuple[str, int, int]:
    match = TYPE_NAME.match(name or "")
    if not match:
        raise UnsupportedType(f"cannot parse affine type {name!r}; expected e.g. A4(2)")
    return match.group(1).upper(), int(match.group(2)), int(match.group(3))


def _fixed_point_algebra(letter: str, n: int, m: int) -> Tuple[str, int]:
    if m == 1:
        return letter, n
    if m == 3:
        if (letter, n) == ("D", 4):
            return "G", 2
    elif letter == "A" and n >= 2:
        return ("B", n // 2) if n % 2 == 0 else ("C", (n + 1) // 2)
    elif letter == "D" and n >= 4:
        return "B", n - 1
    elif (letter, n) == ("E", 6):
        return "F", 4
    raise UnsupportedType(f"{letter}{n}({m}) is not a supported affine type")


def _primitive_integer(vector) -> Tuple[int, ...]:
    values = [Fraction(int(v.p), int(v.q)) for v in vector]
    scale = lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    divisor = gcd(*ints)
    ints = [v // divisor for v in ints]
    if ints[0] < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@lru_cache(maxsize=None)
def affine_data(name: str) -> AffineData:
    """
    Build the affine data for a type name such as "A4(2)", "D4(3)" or "A1(1)".

    Args:
        name: base letter, rank digits and twist order in parentheses

    Returns:
        AffineData with Cartan matrix, marks, comarks, g0 and invariant form
    """
    letter, n, m = parse_type_name(name)
    g0_letter, l = _fixed_point_algebra(letter, n, m)
    g0 = build_root_system(g0_letter, l)

    if m == 1:
        theta = g0.highest_root
    elif letter == "A" and n % 2 == 0:
        theta = g0.highest_short_root.scaled(2)
    else:
        theta = g0.highest_short_root

    theta_norm = g0.inner_product(theta, theta)
    size = l + 1
    matrix = [[0] * size for _ in range(size)]
    matrix[0][0] = 2
    for i in range(1, size):
        matrix[i][0] = -theta.coords[i - 1]
        entry = exact(Fraction(-2 * g0.symmetrizer[i - 1] * theta.coords[i - 1], 1) / theta_norm)
        if not isinstance(entry, int):
            raise UnsupportedType(f"non-integral affine Cartan entry for {name}")
        matrix[0][i] = entry
        for j in range(1, size):
            matrix[i][j] = g0.cartan[i - 1][j - 1]

    theta_root = [exact(c) for c in _root_coords(g0, theta)]
    marks = (1,) + tuple(int(c) for c in theta_root)
    comarks = _primitive_integer(sympy.Matrix(matrix).T.nullspace()[0])

    for i in range(size):
        assert sum(matrix[i][j] * marks[j] for j in range(size)) == 0
        assert sum(comarks[j] * matrix[j][i] for j in range(size)) == 0

    scale = [Fraction(comarks[i], marks[i]) for i in range(size)]
    form = tuple(
        exact_tuple(scale[i] * g0.inverse_cartan[i - 1][k - 1] for k in range(1, size))
        for i in range(1, size)
    )
    canonical = f"{letter}{n}({m})"
    data = AffineData(
        name=canonical,
        twist_order=m,
        cartan=tuple(tuple(row) for row in matrix),
        marks=marks,
        comarks=comarks,
        g0=g0,
        theta=theta,
        form=form,
    )
    logger.debug("affine data %s: marks %s comarks %s g0 %s", canonical, marks, comarks, g0.label)
    return data


def _root_coords(g0: FiniteRootSystem, mu: FiniteWeight) -> Tuple:
    return tuple(
        sum(g0.inverse_cartan[r][c] * mu.coords[c] for c in range(g0.rank))
        for r in range(g0.rank)
    )


def _check_node(data: AffineData, i: int) -> None:
    if not 0 <= i <= data.rank:
        raise InvalidIndex(f"node {i} outside 0..{data.rank} for {data.name}")


def _check_weight(data: AffineData, lw: AffineWeight) -> None:
    if len(lw.pairings) != data.rank + 1:
        raise InvalidWeight(
            f"affine weight {lw} has {len(lw.pairings)} pairings, {data.name} needs {data.rank + 1}"
        )


def _check_finite(data: AffineData, mu: FiniteWeight) -> None:
    if mu.rank != data.rank:
        raise InvalidWeight(f"weight {mu} has length {mu.rank}, {data.name} needs {data.rank}")


def pairing(lw: AffineWeight, i: int) -> Fraction | int:
    if not 0 <= i < len(lw.pairings):
        raise InvalidIndex(f"node {i} outside 0..{len(lw.pairings) - 1}")
    return lw.pairings[i]


def level(data: AffineData, lw: AffineWeight) -> Fraction | int:
    """lw(c) with c = sum a_i^vee alpha_i^vee."""
    _check_weight(data, lw)
    return exact(sum(a * p for a, p in zip(data.comarks, lw.pairings)))


def fundamental(data: AffineData, i: int) -> AffineWeight:
    _check_node(data, i)
    return AffineWeight(tuple(1 if j == i else 0 for j in data.nodes), 0)


def delta_weight(data: AffineData) -> AffineWeight:
    return AffineWeight((0,) * (data.rank + 1), 1)


def rho_hat(data: AffineData) -> AffineWeight:
    return AffineWeight((1,) * (data.rank + 1), 0)


def simple_root(data: AffineData, j: int) -> AffineWeight:
    return AffineWeight.from_key(data.root_vector(j))


def lift(data: AffineData, mu: FiniteWeight) -> AffineWeight:
    """Level-zero affine weight with finite part mu, via Lambda_i = omega_i + (a_i^vee/a_0^vee) Lambda_0."""
    _check_finite(data, mu)
    head = -Fraction(
        sum(data.comarks[i + 1] * mu.coords[i] for i in range(data.rank)),
        data.comarks[0],
    )
    return AffineWeight((head,) + mu.coords, 0)


def finite_part(data: AffineData, lw: AffineWeight) -> FiniteWeight:
    _check_weight(data, lw)
    return FiniteWeight(lw.pairings[1:])


def inner_product(data: AffineData, mu: FiniteWeight, nu: FiniteWeight) -> Fraction | int:
    """Normalized invariant form restricted to finite weights."""
    _check_finite(data, mu)
    _check_finite(data, nu)
    return exact(
        sum(
            mu.coords[i] * data.form[i][k] * nu.coords[k]
            for i in range(data.rank)
            for k in range(data.rank)
        )
    )


def simple_reflection(data: AffineData, lw: AffineWeight, i: int) -> AffineWeight:
    """s_i(lw) = lw - <lw, alpha_i^vee> alpha_i."""
    _check_node(data, i)
    _check_weight(data, lw)
    n = lw.pairings[i]
    if n == 0:
        return lw
    root = data.root_vector(i)
    return AffineWeight.from_key(tuple(a - n * b for a, b in zip(lw.key(), root)))


def reflect_sequence(data: AffineData, lw: AffineWeight, word: Sequence[int]) -> AffineWeight:
    """Apply the reflections of word in the order listed."""
    for i in word:
        lw = simple_reflection(data, lw, i)
    return lw


def weyl_act(data: AffineData, word: Sequence[int], lw: AffineWeight) -> AffineWeight:
    """Action of the product s_{word[0]} ... s_{word[-1]}: rightmost letter first."""
    return reflect_sequence(data, lw, list(reversed(list(word))))


def translate(data: AffineData, lw: AffineWeight, mu: FiniteWeight) -> AffineWeight:
    """t_mu(lw) = lw + lw(c) mu - (<lw, mu> + 1/2 <mu, mu> lw(c)) delta."""
    lam = finite_part(data, lw)
    k = level(data, lw)
    shift = lift(data, mu).scaled(k)
    correction = inner_product(data, lam, mu) + Fraction(1, 2) * inner_product(data, mu, mu) * k
    return AffineWeight(
        tuple(a + b for a, b in zip(lw.pairings, shift.pairings)),
        lw.delta - correction,
    )


def in_translation_lattice(data: AffineData, mu: FiniteWeight) -> bool:
    """
    Membership in M: the root lattice of g0 when the affine Cartan matrix is
    symmetric or the twist order exceeds a_0, and nu of the coroot lattice otherwise.
    """
    _check_finite(data, mu)
    coords = [exact(c) for c in _root_coords(data.g0, mu)]
    symmetric = all(
        data.cartan[i][j] == data.cartan[j][i] for i in data.nodes for j in data.nodes
    )
    if symmetric or data.twist_order > data.marks[0]:
        return all(is_integral(c) for c in coords)
    return all(
        is_integral(c * Fraction(data.comarks[i + 1], data.marks[i + 1]))
        for i, c in enumerate(coords)
    )


def _nu_coweight(data: AffineData, i: int) -> FiniteWeight:
    """nu(omega_i^vee) = (a_i / a_i^vee) omega_i."""
    ratio = Fraction(data.marks[i], data.comarks[i])
    return FiniteWeight.fundamental(data.rank, i).scaled(ratio)


def translation_generators(data: AffineData) -> List[FiniteWeight]:
    """Smallest positive multiple of each nu(omega_i^vee) lying in M."""
    result = []
    for i in range(1, data.rank + 1):
        base = _nu_coweight(data, i)
        n = 1
        while not in_translation_lattice(data, base.scaled(n)):
            n += 1
        result.append(base.scaled(n))
    return result


def dominance_chain(
    data: AffineData, lw: AffineWeight, options: Dict | None = None
) -> Tuple[AffineWeight, List[int]]:
    """
    Reflect lw into the dominant chamber.

    Args:
        data: affine data
        lw: positive-level affine weight
        options: ``max_steps`` bounds the number of reflections (default 100000)

    Returns:
        (dominant weight, word); the word's reflections applied left to right to
        lw give the dominant weight, the smallest negative index chosen each step
    """
    if options is None:
        options = {}
    max_steps = options.get("max_steps", DEFAULT_MAX_STEPS)
    if level(data, lw) <= 0:
        raise NonPositiveLevel(f"weight {lw} has level {level(data, lw)}")

    word: List[int] = []
    current = lw
    while True:
        negative = [i for i, p in enumerate(current.pairings) if p < 0]
        if not negative:
            break
        if len(word) >= max_steps:
            raise ChainDidNotTerminate(f"no dominant weight after {max_steps} reflections from {lw}")
        i = negative[0]
        current = simple_reflection(data, current, i)
        word.append(i)
    logger.debug("dominance chain of length %d ends at %s", len(word), current)
    return current, word


def reduced_word(
    data: AffineData, w: Sequence[int], mu: FiniteWeight, options: Dict | None = None
) -> List[int]:
    """
    Reduced word in s_0..s_l for w * t_mu, w given as a word in s_1..s_l.

    The element is read off its action on the regular weight rho-hat.
    """
    _check_finite(data, mu)
    for i in w:
        if not 1 <= i <= data.rank:
            raise InvalidIndex(f"finite Weyl word letter {i} outside 1..{data.rank}")
    if not in_translation_lattice(data, mu):
        raise NotInAffineWeylGroup(f"{mu} is not in the translation lattice of {data.name}")
    image = weyl_act(data, w, translate(data, rho_hat(data), mu))
    _, word = dominance_chain(data, image, options)
    return word


def root_reflect(data: AffineData, i: int, beta: Sequence[int]) -> Tuple[int, ...]:
    """s_i on a root written over the simple affine roots."""
    _check_node(data, i)
    n = sum(beta[j] * data.cartan[i][j] for j in data.nodes)
    out = list(beta)
    out[i] -= n
    return tuple(out)


def act_on_root(data: AffineData, word: Sequence[int], beta: Sequence[int]) -> Tuple[int, ...]:
    """Product action of word on a root; rightmost letter first."""
    beta = tuple(beta)
    for i in reversed(list(word)):
        beta = root_reflect(data, i, beta)
    return beta


def _is_positive(beta: Sequence[int]) -> bool:
    return all(c >= 0 for c in beta) and any(c > 0 for c in beta)


def is_reduced(data: AffineData, word: Sequence[int]) -> bool:
    """s_{i1}...s_{ir} is reduced iff every s_{i1}...s_{i(k-1)}(alpha_{ik}) is positive."""
    word = list(word)
    for k, letter in enumerate(word):
        simple = tuple(1 if j == letter else 0 for j in data.nodes)
        if not _is_positive(act_on_root(data, word[:k], simple)):
            return False
    return True


def positive_real_roots(data: AffineData, max_height: int) -> List[Tuple[int, ...]]:
    """Positive real affine roots of height at most max_height."""
    simple = [tuple(1 if j == i else 0 for j in data.nodes) for i in data.nodes]
    found = set(simple)
    layer = list(simple)
    while layer:
        grown = []
        for beta in layer:
            for i in data.nodes:
                n = sum(beta[j] * data.cartan[i][j] for j in data.nodes)
                if n < 0:
                    image = root_reflect(data, i, beta)
                    if sum(image) <= max_height and image not in found:
                        found.add(image)
                        grown.append(image)
        layer = grown
    return sorted(found, key=lambda r: (sum(r), r))


def inversion_count(data: AffineData, word: Sequence[int], max_height: int) -> int:
    """Number of positive real roots (height <= max_height) sent negative by the product of word."""
    return sum(
        1
        for beta in positive_real_roots(data, max_height)
        if not _is_positive(act_on_root(data, word, beta))
    )


def reduced_words_by_element(data: AffineData, max_length: int) -> Dict[Tuple, List[List[int]]]:
    """
    All reduced words of length <= max_length, grouped by the element they
    represent (identified by its image of rho-hat).
    """
    groups: Dict[Tuple, List[List[int]]] = {rho_hat(data).key(): [[]]}
    frontier: List[List[int]] = [[]]
    for _ in range(max_length):
        grown = []
        for word in frontier:
            for i in data.nodes:
                candidate = word + [i]
                if is_reduced(data, candidate):
                    grown.append(candidate)
                    image = weyl_act(data, candidate, rho_hat(data)).key()
                    groups.setdefault(image, []).append(candidate)
        frontier = grown
    return groups


if __name__ == "__main__":
    for label in ("A2(2)", "D4(3)", "E6(2)"):
        d = affine_data(label)
        print(label, "g0 =", d.g0.label, "marks", d.marks, "comarks", d.comarks)
