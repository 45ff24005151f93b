"""
Finite root systems and Weyl-group combinatorics for the fixed-point algebra g0.

Weights are stored in fundamental-weight coordinates, so <mu, alpha_i^vee> is
simply ``mu.coords[i - 1]``. The Cartan matrix follows A[i][j] = <alpha_j, alpha_i^vee>,
which makes the simple root alpha_j the j-th column of A. Finite Weyl words use
node indices 1..l.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import sympy

from cartan.src.errors import InvalidIndex, InvalidWeight, UnsupportedType
from characters.src.formal import (
    FormalCharacter,
    exact,
    exact_tuple,
    is_integral,
    isobaric_word,
)

logger = logging.getLogger(__name__)

RANK_LIMITS = {
    "A": (1, None),
    "B": (1, None),
    "C": (1, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class FiniteWeight:
    """A g0-weight in fundamental-weight coordinates."""

    coords: Tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", exact_tuple(self.coords))

    @classmethod
    def of(cls, *coords) -> "FiniteWeight":
        return cls(tuple(coords))

    @classmethod
    def zero(cls, rank: int) -> "FiniteWeight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "FiniteWeight":
        if not 1 <= i <= rank:
            raise InvalidIndex(f"fundamental weight index {i} outside 1..{rank}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(is_integral(c) for c in self.coords)

    def __add__(self, other: "FiniteWeight") -> "FiniteWeight":
        return FiniteWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FiniteWeight") -> "FiniteWeight":
        return FiniteWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "FiniteWeight":
        return FiniteWeight(tuple(-a for a in self.coords))

    def scaled(self, factor) -> "FiniteWeight":
        return FiniteWeight(tuple(factor * a for a in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class FiniteRootSystem:
    """Cartan data, positive roots and w0 for one finite type."""

    letter: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple
    inverse_cartan: Tuple[Tuple, ...]
    positive_roots: Tuple[Tuple[int, ...], ...]
    positive_coroots: Tuple[Tuple[int, ...], ...]
    rho: FiniteWeight
    highest_root: FiniteWeight
    highest_short_root: FiniteWeight
    longest_word: Tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.letter}{self.rank}"

    def simple_root(self, i: int) -> Tuple[int, ...]:
        """Weight coordinates of alpha_i (column i of the Cartan matrix)."""
        _check_index(self, i)
        return tuple(self.cartan[r][i - 1] for r in range(self.rank))

    def root_to_weight(self, root_coords: Sequence) -> FiniteWeight:
        return FiniteWeight(
            tuple(
                sum(self.cartan[r][c] * root_coords[c] for c in range(self.rank))
                for r in range(self.rank)
            )
        )

    def inner_product(self, mu: FiniteWeight, nu: FiniteWeight) -> Fraction | int:
        """Invariant form normalized so that long roots have squared length 2."""
        root_coords = to_root_coords(self, nu)
        return exact(
            sum(
                mu.coords[k] * self.symmetrizer[k] * root_coords[k]
                for k in range(self.rank)
            )
        )


def _chain_matrix(rank: int) -> List[List[int]]:
    matrix = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        matrix[i][i] = 2
        if i + 1 < rank:
            matrix[i][i + 1] = -1
            matrix[i + 1][i] = -1
    return matrix


def cartan_matrix(letter: str, rank: int) -> List[List[int]]:
    """
    Cartan matrix in Bourbaki node order, with long/short nodes as follows:

    B_l: alpha_l short.  C_l: alpha_l long.  F4: alpha_1, alpha_2 short.
    G2: alpha_1 long, alpha_2 short.
    """
    if letter not in RANK_LIMITS:
        raise UnsupportedType(f"unknown finite type {letter!r}")
    low, high = RANK_LIMITS[letter]
    if rank < low or (high is not None and rank > high):
        raise UnsupportedType(f"type {letter}{rank} is not supported")

    if letter in ("A", "B", "C") or rank == 1:
        matrix = _chain_matrix(rank)
        if rank >= 2 and letter == "B":
            matrix[rank - 1][rank - 2] = -2
        elif rank >= 2 and letter == "C":
            matrix[rank - 2][rank - 1] = -2
        return matrix

    if letter == "D":
        matrix = _chain_matrix(rank)
        matrix[rank - 2][rank - 1] = matrix[rank - 1][rank - 2] = 0
        matrix[rank - 3][rank - 1] = matrix[rank - 1][rank - 3] = -1
        return matrix

    if letter == "E":
        # 1 - 3 - 4 - 5 - ... with 2 attached to 4
        matrix = [[0] * rank for _ in range(rank)]
        edges = [(1, 3), (2, 4)] + [(k, k + 1) for k in range(3, rank)]
        for i in range(rank):
            matrix[i][i] = 2
        for a, b in edges:
            matrix[a - 1][b - 1] = matrix[b - 1][a - 1] = -1
        return matrix

    if letter == "F":
        matrix = _chain_matrix(4)
        matrix[1][2] = -2
        return matrix

    return [[2, -1], [-3, 2]]


def _symmetrizer(matrix: List[List[int]]) -> Tuple:
    """d_i with d_i A[i][j] = d_j A[j][i], long roots getting d = 1."""
    rank = len(matrix)
    d: List[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(rank):
            if d[j] is None and matrix[i][j] != 0:
                d[j] = d[i] * matrix[i][j] / matrix[j][i]
                queue.append(j)
    top = max(d)
    return exact_tuple(x / top for x in d)


def _positive_roots(matrix: List[List[int]]) -> List[Tuple[int, ...]]:
    """Close the simple roots under addition using alpha-string lengths."""
    rank = len(matrix)
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        next_layer = set()
        for beta in layer:
            for i in range(rank):
                if beta == simple[i]:
                    continue
                down = 0
                gamma = list(beta)
                gamma[i] -= 1
                while tuple(gamma) in roots:
                    down += 1
                    gamma[i] -= 1
                pairing = sum(matrix[i][j] * beta[j] for j in range(rank))
                if down - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    raised = tuple(raised)
                    if raised not in roots:
                        next_layer.add(raised)
        roots |= next_layer
        layer = sorted(next_layer)
    return sorted(roots, key=lambda r: (sum(r), r))


def _longest_word(matrix: List[List[int]]) -> Tuple[int, ...]:
    """Greedy descent from -rho to rho, smallest negative index first."""
    rank = len(matrix)
    weight = [-1] * rank
    word = []
    while True:
        negative = [i for i in range(rank) if weight[i] < 0]
        if not negative:
            return tuple(word)
        i = negative[0]
        n = weight[i]
        weight = [weight[r] - n * matrix[r][i] for r in range(rank)]
        word.append(i + 1)


@lru_cache(maxsize=None)
def build_root_system(letter: str, rank: int) -> FiniteRootSystem:
    """
    Build the root system of type letter + rank.

    Args:
        letter: one of A, B, C, D, E, F, G
        rank: the rank l

    Returns:
        FiniteRootSystem with positive roots generated by closure
    """
    letter = str(letter).upper()
    matrix = cartan_matrix(letter, rank)
    symmetrizer = _symmetrizer(matrix)
    inverse = sympy.Matrix(matrix).inv()
    inverse_cartan = tuple(
        exact_tuple(inverse[r, c] for c in range(rank)) for r in range(rank)
    )
    roots = _positive_roots(matrix)

    def half_norm(root):
        total = sum(
            root[i] * root[j] * symmetrizer[i] * matrix[i][j]
            for i in range(rank)
            for j in range(rank)
        )
        return Fraction(total) / 2

    coroots = []
    for root in roots:
        norm = half_norm(root)
        coroots.append(
            tuple(int(exact(root[i] * symmetrizer[i] / norm)) for i in range(rank))
        )

    def to_weight(root):
        return FiniteWeight(
            tuple(sum(matrix[r][c] * root[c] for c in range(rank)) for r in range(rank))
        )

    shortest = min(half_norm(r) for r in roots)
    short_roots = [r for r in roots if half_norm(r) == shortest]

    rs = FiniteRootSystem(
        letter=letter,
        rank=rank,
        cartan=tuple(tuple(row) for row in matrix),
        symmetrizer=symmetrizer,
        inverse_cartan=inverse_cartan,
        positive_roots=tuple(roots),
        positive_coroots=tuple(coroots),
        rho=FiniteWeight((1,) * rank),
        highest_root=to_weight(roots[-1]),
        highest_short_root=to_weight(short_roots[-1]),
        longest_word=_longest_word(matrix),
    )
    logger.debug(
        "built %s: %d positive roots, w0 of length %d",
        rs.label,
        len(roots),
        len(rs.longest_word),
    )
    return rs


def parse_finite_type(name: str) -> FiniteRootSystem:
    """Build from a label such as "G2" or "B3"."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise UnsupportedType(f"cannot parse finite type {name!r}")
    return build_root_system(name[0].upper(), int(name[1:]))


def _check_index(rs: FiniteRootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise InvalidIndex(f"node {i} outside 1..{rs.rank} for {rs.label}")


def _check_weight(rs: FiniteRootSystem, mu: FiniteWeight) -> None:
    if mu.rank != rs.rank:
        raise InvalidWeight(f"weight {mu} has length {mu.rank}, {rs.label} needs {rs.rank}")


def _check_dominant_integral(rs: FiniteRootSystem, mu: FiniteWeight) -> None:
    _check_weight(rs, mu)
    if not mu.is_integral():
        raise InvalidWeight(f"weight {mu} is not integral")
    if not mu.is_dominant():
        raise InvalidWeight(f"weight {mu} is not dominant")


def reflect(rs: FiniteRootSystem, mu: FiniteWeight, i: int) -> FiniteWeight:
    """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
    _check_index(rs, i)
    _check_weight(rs, mu)
    n = mu.coords[i - 1]
    return FiniteWeight(
        tuple(mu.coords[r] - n * rs.cartan[r][i - 1] for r in range(rs.rank))
    )


def apply_word(rs: FiniteRootSystem, mu: FiniteWeight, word: Sequence[int]) -> FiniteWeight:
    """Apply the reflections of word to mu in the order listed."""
    for i in word:
        mu = reflect(rs, mu, i)
    return mu


def to_root_coords(rs: FiniteRootSystem, mu: FiniteWeight) -> Tuple:
    return exact_tuple(
        sum(rs.inverse_cartan[r][c] * mu.coords[c] for c in range(rs.rank))
        for r in range(rs.rank)
    )


def height(rs: FiniteRootSystem, mu: FiniteWeight) -> Fraction | int:
    """Sum of the simple-root coordinates of mu."""
    return exact(sum(to_root_coords(rs, mu)))


def dominant_conjugate(
    rs: FiniteRootSystem, mu: FiniteWeight
) -> Tuple[FiniteWeight, List[int]]:
    """
    Move mu into the dominant chamber.

    Args:
        rs: the root system
        mu: any weight

    Returns:
        (dominant weight, word) where applying the word left to right to mu
        gives the dominant weight; the smallest negative index is used each step
    """
    _check_weight(rs, mu)
    word = []
    while True:
        negative = [i for i, c in enumerate(mu.coords) if c < 0]
        if not negative:
            return mu, word
        i = negative[0] + 1
        mu = reflect(rs, mu, i)
        word.append(i)


def weyl_orbit(rs: FiniteRootSystem, mu: FiniteWeight) -> List[FiniteWeight]:
    """All W0-conjugates of mu, found by breadth-first reflection."""
    _check_weight(rs, mu)
    seen = {mu}
    queue = deque([mu])
    while queue:
        nu = queue.popleft()
        for i in range(1, rs.rank + 1):
            if nu.coords[i - 1] == 0:
                continue
            image = reflect(rs, nu, i)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen, key=lambda w: w.coords)


def weyl_dim(rs: FiniteRootSystem, mu: FiniteWeight) -> int:
    """
    Weyl dimension formula: product over positive roots of
    <mu + rho, alpha^vee> / <rho, alpha^vee>.
    """
    _check_dominant_integral(rs, mu)
    numerator = 1
    denominator = 1
    for coroot in rs.positive_coroots:
        numerator *= sum(k * (m + 1) for k, m in zip(coroot, mu.coords))
        denominator *= sum(coroot)
    result = Fraction(numerator, denominator)
    if result.denominator != 1 or result <= 0:
        raise InvalidWeight(f"Weyl dimension formula gives {result} for {mu} in {rs.label}")
    return int(result)


def _finite_root_of(rs: FiniteRootSystem):
    return lambda i: rs.simple_root(i)


@lru_cache(maxsize=4096)
def _irr_char_cached(letter: str, rank: int, coords: Tuple) -> FormalCharacter:
    rs = build_root_system(letter, rank)
    start = FormalCharacter.monomial("finite", coords)
    return isobaric_word(
        start, rs.longest_word, lambda i: i - 1, _finite_root_of(rs)
    )


def irr_char(rs: FiniteRootSystem, mu: FiniteWeight) -> FormalCharacter:
    """char V(mu) = D_{w0}(e^mu)."""
    _check_dominant_integral(rs, mu)
    return _irr_char_cached(rs.letter, rs.rank, mu.coords)


def finite_demazure(
    rs: FiniteRootSystem, character: FormalCharacter, word: Sequence[int]
) -> FormalCharacter:
    """D_{word[0]} o ... o D_{word[-1]} on a finite character."""
    for i in word:
        _check_index(rs, i)
    return isobaric_word(character, word, lambda i: i - 1, _finite_root_of(rs))


def alternating_sum(rs: FiniteRootSystem, nu: FiniteWeight) -> FormalCharacter:
    """
    A_nu = sum over w in W0 of sign(w) e^{w(nu)} for a regular dominant nu.
    """
    _check_weight(rs, nu)
    if not all(c > 0 for c in nu.coords):
        raise InvalidWeight(f"weight {nu} is not regular dominant")
    terms = {}
    for image in weyl_orbit(rs, nu):
        _, word = dominant_conjugate(rs, image)
        terms[image.coords] = -1 if len(word) % 2 else 1
    return FormalCharacter("finite", terms)


def weyl_character_check(
    rs: FiniteRootSystem, mu: FiniteWeight, character: FormalCharacter
) -> bool:
    """True iff character * A_rho == A_{mu + rho} (Weyl character formula)."""
    _check_dominant_integral(rs, mu)
    return character * alternating_sum(rs, rs.rho) == alternating_sum(rs, mu + rs.rho)


def _dominant_weights_below(rs: FiniteRootSystem, mu: FiniteWeight) -> List[FiniteWeight]:
    roots = [rs.root_to_weight(r) for r in rs.positive_roots]
    found = {mu}
    queue = deque([mu])
    while queue:
        nu = queue.popleft()
        for alpha in roots:
            lower = nu - alpha
            if lower.is_dominant() and lower not in found:
                found.add(lower)
                queue.append(lower)
    return sorted(found, key=lambda w: (height(rs, mu - w), w.coords))


def freudenthal_char(rs: FiniteRootSystem, mu: FiniteWeight) -> FormalCharacter:
    """char V(mu) from the Freudenthal multiplicity recursion."""
    _check_dominant_integral(rs, mu)
    roots = [rs.root_to_weight(r) for r in rs.positive_roots]
    top = rs.inner_product(mu + rs.rho, mu + rs.rho)
    mults = {}
    for nu in _dominant_weights_below(rs, mu):
        if nu == mu:
            mults[nu] = 1
            continue
        total = Fraction(0)
        for alpha in roots:
            step = 1
            while True:
                above = nu + alpha.scaled(step)
                key, _ = dominant_conjugate(rs, above)
                mult = mults.get(key, 0)
                if not mult:
                    break
                total += mult * rs.inner_product(above, alpha)
                step += 1
        gap = top - rs.inner_product(nu + rs.rho, nu + rs.rho)
        mults[nu] = int(exact(2 * total / gap))
    terms = {}
    for nu, mult in mults.items():
        if mult:
            for image in weyl_orbit(rs, nu):
                terms[image.coords] = mult
    return FormalCharacter("finite", terms)


def dimension_check(rs: FiniteRootSystem, mu: FiniteWeight) -> bool:
    """Multiplicities of irr_char add up to weyl_dim."""
    return irr_char(rs, mu).dimension() == weyl_dim(rs, mu)


if __name__ == "__main__":
    g2 = build_root_system("G", 2)
    print(g2.label, len(g2.positive_roots), "positive roots")
    for i in (1, 2):
        omega = FiniteWeight.fundamental(2, i)
        print(f"dim V(omega_{i}) =", weyl_dim(g2, omega))
