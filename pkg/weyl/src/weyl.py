"""
Twisted graded Weyl modules W(lambda) through their Demazure realization
D(1/a_0^vee, lambda): characters, fundamental decompositions, product dimension
formulas and tensor factorizations as g0-modules.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, NamedTuple, Tuple

from affine.src.affine import AffineData
from cartan.src.cartan import FiniteWeight, irr_char, weyl_dim
from cartan.src.errors import InvalidWeight, NotAModuleCharacter, UnsupportedEvenCase
from characters.src.characters import (
    GradedCharacter,
    IrrDecomposition,
    decompose_g0,
    restrict_to_g0,
)
from characters.src.formal import FormalCharacter
from demazure.src.demazure import DemazureResult, demazure_D

logger = logging.getLogger(__name__)

_FUNDAMENTAL_DIMENSIONS: Dict[Tuple[str, int], int] = {}


@dataclass
class WeylModuleReport:
    lam: FiniteWeight
    level: Fraction
    identification: Dict
    graded_character: GradedCharacter
    dimension: int
    decomposition: IrrDecomposition
    demazure: DemazureResult

    def restricted(self) -> FormalCharacter:
        return self.graded_character.at_q_equals_one()


class FundamentalRow(NamedTuple):
    weight: FiniteWeight
    decomposition: IrrDecomposition
    dimension: int
    source: str


def weyl_level(data: AffineData) -> Fraction:
    """k = 1/a_0^vee, the level at which W(lambda) is a Demazure module."""
    return Fraction(1, data.comarks[0])


def _check_lambda(data: AffineData, lam: FiniteWeight) -> None:
    if lam.rank != data.rank:
        raise InvalidWeight(f"weight {lam} has length {lam.rank}, {data.name} needs {data.rank}")
    if not (lam.is_dominant() and lam.is_integral()):
        raise InvalidWeight(f"weight {lam} is not dominant integral")
    if data.is_even_twisted_a() and lam.coords[-1] % 2 == 0:
        raise UnsupportedEvenCase(
            f"{data.name} Weyl module with even m_{data.rank} = {lam.coords[-1]} is only conjectured"
        )


def summary_identification(data: AffineData, lam: FiniteWeight, dominant=None) -> Dict:
    """
    Which V_w(Lambda_j) the summary of results predicts for W(lambda).

    Args:
        data: affine data
        lam: dominant weight m_1 omega_1 + ... + m_l omega_l
        dominant: optional dominant affine weight found by the dominance chain

    Returns:
        dict with the predicted Lambda index, a description of w and, when
        dominant is given, the observed index and whether they agree
    """
    l = data.rank
    m = lam.coords
    if not data.is_twisted:
        predicted, element = None, "w0 t_lambda (untwisted, not tabulated)"
    elif data.is_even_twisted_a():
        if l == 1:
            predicted, element = 1, "s_1 t_{(n-1) omega}"
        else:
            predicted, element = l, "w0 t_{lambda - omega_l}"
    elif data.name.startswith("A"):
        parity = sum(i * m[i - 1] for i in range(1, l + 1, 2)) % 2
        predicted, element = (0, "w0 t_lambda") if parity == 0 else (1, "w0 t_{lambda - omega_1}")
    elif data.name.startswith("D") and data.twist_order == 2:
        if m[-1] % 2 == 0:
            predicted, element = 0, "w0 t_lambda"
        else:
            predicted, element = l, "w0 t_{lambda - omega_l}"
    else:
        predicted, element = 0, "w0 t_lambda"

    result = {"predicted_index": predicted, "element": element}
    if dominant is not None:
        units = [i for i, p in enumerate(dominant.pairings) if p != 0]
        observed = units[0] if len(units) == 1 and dominant.pairings[units[0]] == 1 else None
        result["observed_index"] = observed
        result["matches"] = predicted is None or observed == predicted
    return result


def weyl_char(data: AffineData, lam: FiniteWeight, options: Dict | None = None) -> WeylModuleReport:
    """
    Character of W(lambda) = D(1/a_0^vee, lambda).

    Args:
        data: affine data
        lam: dominant integral weight; m_l must be odd for A2l(2)
        options: ``use_cache`` stores the fundamental dimensions (default True);
            ``anchor`` and ``max_steps`` are passed on to demazure_D

    Returns:
        WeylModuleReport
    """
    if options is None:
        options = {}
    _check_lambda(data, lam)
    k = weyl_level(data)
    result = demazure_D(data, k, lam, options)
    restricted = restrict_to_g0(result.character)
    decomposition = decompose_g0(restricted, data.g0)
    report = WeylModuleReport(
        lam=lam,
        level=k,
        identification=summary_identification(data, lam, result.highest_weight),
        graded_character=result.graded,
        dimension=result.dimension(),
        decomposition=decomposition,
        demazure=result,
    )
    if options.get("use_cache", True) and sum(lam.coords) == 1:
        i = lam.coords.index(1) + 1
        options.get("cache", _FUNDAMENTAL_DIMENSIONS).setdefault((data.name, i), report.dimension)
    logger.info("W(%s) for %s: dimension %d", lam, data.name, report.dimension)
    return report


def fundamental_dimension(data: AffineData, i: int, options: Dict | None = None) -> int:
    """
    dim W(omega_i).

    Args:
        data: affine data
        i: node 1..l
        options: ``use_cache`` (default True); ``cache`` replaces the shared
            per-process dictionary with a caller-owned one
    """
    if options is None:
        options = {}
    use_cache = options.get("use_cache", True)
    cache = options.get("cache", _FUNDAMENTAL_DIMENSIONS)
    key = (data.name, i)
    if use_cache and key in cache:
        return cache[key]
    omega = FiniteWeight.fundamental(data.rank, i)
    if data.is_even_twisted_a() and i < data.rank:
        # W(omega_i + omega_l) = W(omega_i) (x) W(omega_l) as g0-modules
        spin = FiniteWeight.fundamental(data.rank, data.rank)
        joint = weyl_char(data, omega + spin, options).dimension
        dimension = joint // fundamental_dimension(data, data.rank, options)
    else:
        dimension = weyl_char(data, omega, options).dimension
    if use_cache:
        cache.setdefault(key, dimension)
    return dimension


def clear_cache() -> None:
    _FUNDAMENTAL_DIMENSIONS.clear()


def kirillov_reshetikhin_dimension(data: AffineData) -> int:
    """dim W(2 omega_l) = dim V(2 omega_l) for A2l(2)."""
    return weyl_dim(data.g0, FiniteWeight.fundamental(data.rank, data.rank).scaled(2))


def weyl_dim_product(data: AffineData, lam: FiniteWeight, options: Dict | None = None) -> int:
    """
    dim W(lambda) from the product of fundamental dimensions.

    For A2l(2) with m_l = 2k - 1 the factor for omega_l is
    dim W(2 omega_l)^(k-1) * dim W(omega_l).
    """
    _check_lambda(data, lam)
    l = data.rank
    total = 1
    if data.is_even_twisted_a():
        for i in range(1, l):
            if lam.coords[i - 1]:
                total *= fundamental_dimension(data, i, options) ** lam.coords[i - 1]
        k = (lam.coords[-1] + 1) // 2
        total *= kirillov_reshetikhin_dimension(data) ** (k - 1)
        total *= fundamental_dimension(data, l, options)
        return total
    for i in range(1, l + 1):
        if lam.coords[i - 1]:
            total *= fundamental_dimension(data, i, options) ** lam.coords[i - 1]
    return total


def binomial_dimension(data: AffineData, lam: FiniteWeight) -> int:
    """Closed form (prod C(2l+1, i)^m_i) C(2l+1, l)^(k-1) 2^l for A2l(2)."""
    if not data.is_even_twisted_a():
        raise InvalidWeight(f"binomial closed form applies to A2l(2), not {data.name}")
    _check_lambda(data, lam)
    l = data.rank
    k = (lam.coords[-1] + 1) // 2
    total = 2**l * comb(2 * l + 1, l) ** (k - 1)
    for i in range(1, l):
        total *= comb(2 * l + 1, i) ** lam.coords[i - 1]
    return total


def a2_closed_forms(n: int) -> Dict[str, int]:
    """The two closed forms offered for dim W(n omega) in A2(2), n odd."""
    return {
        "product": 3 ** ((n - 1) // 2) * 2,
        "ceiling": 3 ** ((n + 1) // 2) * 2,
    }


def fundamental_table(data: AffineData, options: Dict | None = None) -> List[FundamentalRow]:
    """Decomposition and dimension of W(omega_i) for every node; plus 2 omega_l for A2l(2)."""
    rows = []
    spin = FiniteWeight.fundamental(data.rank, data.rank)
    for i in range(1, data.rank + 1):
        omega = FiniteWeight.fundamental(data.rank, i)
        if data.is_even_twisted_a() and i < data.rank:
            # m_l = 0 is even, so W(omega_i) comes from the tensor factorization
            report = weyl_char(data, omega + spin, options)
            decomposition = _divide_out(data, report, omega, irr_char(data.g0, spin))
            rows.append(FundamentalRow(omega, decomposition, decomposition.dimension(data.g0), "factorization"))
            continue
        report = weyl_char(data, omega, options)
        rows.append(FundamentalRow(omega, report.decomposition, report.dimension, "demazure"))
    if data.is_even_twisted_a():
        # W(3 omega_l) = V(2 omega_l) (x) W(omega_l)
        spin_report = report
        twice = spin.scaled(2)
        triple = weyl_char(data, spin.scaled(3), options)
        decomposition = _divide_out(data, triple, twice, spin_report.restricted())
        rows.append(
            FundamentalRow(
                twice,
                decomposition,
                triple.dimension // spin_report.dimension,
                "kirillov-reshetikhin",
            )
        )
    return rows


def _divide_out(
    data: AffineData, report: WeylModuleReport, top: FiniteWeight, divisor: FormalCharacter
) -> IrrDecomposition:
    """
    Recover the factor V(top) from char W(lambda) = char V(top) * divisor,
    raising NotAModuleCharacter when the product does not match.
    """
    if irr_char(data.g0, top) * divisor != report.restricted():
        raise NotAModuleCharacter(
            f"W({report.lam}) does not factor as V({top}) times the given character in {data.name}"
        )
    return IrrDecomposition({top: 1})


def weyl_factorization(data: AffineData, lam: FiniteWeight) -> List[Tuple[FiniteWeight, int, str]]:
    """
    Predicted g0-tensor factorization of W(lambda) into fundamental pieces.

    Returns:
        list of (weight, exponent, kind) with kind "weyl" for a factor W(omega_i)
        and "irreducible" for V(2 omega_l) in A2l(2)
    """
    _check_lambda(data, lam)
    l = data.rank
    factors = []
    last = l - 1 if data.is_even_twisted_a() else l
    for i in range(1, last + 1):
        if lam.coords[i - 1]:
            factors.append((FiniteWeight.fundamental(l, i), lam.coords[i - 1], "weyl"))
    if data.is_even_twisted_a():
        k = (lam.coords[-1] + 1) // 2
        if k > 1:
            factors.append((FiniteWeight.fundamental(l, l).scaled(2), k - 1, "irreducible"))
        factors.append((FiniteWeight.fundamental(l, l), 1, "weyl"))
    return factors


def verify_weyl_factorization(data: AffineData, lam: FiniteWeight, options: Dict | None = None) -> bool:
    """Restricted char W(lambda) equals the product of its predicted factors."""
    expected = FormalCharacter.monomial("finite", (0,) * data.rank)
    for weight, exponent, kind in weyl_factorization(data, lam):
        if kind == "weyl" and data.is_even_twisted_a() and weight.coords[-1] == 0:
            # W(omega_i) = V(omega_i) for i < l
            piece = irr_char(data.g0, weight)
        elif kind == "weyl":
            piece = weyl_char(data, weight, options).restricted()
        else:
            piece = irr_char(data.g0, weight)
        for _ in range(exponent):
            expected = expected * piece
    return weyl_char(data, lam, options).restricted() == expected


def verify_tensor_property(
    data: AffineData, k, lam1: FiniteWeight, lam2: FiniteWeight, options: Dict | None = None
) -> bool:
    """
    restrict(D(k, lam1 + lam2)) == restrict(D(k, lam1)) * restrict(D(k, lam2)).

    X-membership failures of any of the three inputs propagate as NotInX.
    """
    whole = restrict_to_g0(demazure_D(data, k, lam1 + lam2, options).character)
    first = restrict_to_g0(demazure_D(data, k, lam1, options).character)
    second = restrict_to_g0(demazure_D(data, k, lam2, options).character)
    return whole == first * second
