"""
Regression suite reproducing the published values and the algebraic laws.

Each check is a zero-argument callable returning (passed, detail). Checks are
independent, so they may run on a thread pool; results are reported in check order.
"""

import itertools
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from affine.src.affine import (
    AffineWeight,
    affine_data,
    fundamental,
    level,
    reduced_word,
    reduced_words_by_element,
    rho_hat,
    translation_generators,
)
from cartan.src.cartan import (
    FiniteWeight,
    build_root_system,
    finite_demazure,
    freudenthal_char,
    irr_char,
    weyl_character_check,
    weyl_dim,
)
from characters.src.characters import decompose_g0, restrict_to_g0
from characters.src.formal import FormalCharacter
from demazure.src.demazure import demazure_apply_word, demazure_char, demazure_D, demazure_op
from weyl.src.weyl import (
    a2_closed_forms,
    binomial_dimension,
    fundamental_table,
    verify_tensor_property,
    verify_weyl_factorization,
    weyl_char,
    weyl_dim_product,
    weyl_level,
)

logger = logging.getLogger(__name__)

SUITES = ("paper", "properties", "all")

FUNDAMENTAL_DIMENSIONS = {
    "E6(2)": [27, 378, 3732, 79],
    "D4(3)": [29, 8],
    "A4(2)": [5, 4, 10],
    "A5(2)": [6, 15, 20],
    "D4(2)": [8, 29, 8],
}

# weights as coordinate tuples, multiplicities as values
FUNDAMENTAL_DECOMPOSITIONS = {
    "D4(3)": [
        {(0, 0): 1, (1, 0): 1, (0, 1): 2},
        {(0, 0): 1, (0, 1): 1},
    ],
    "E6(2)": [
        {(0, 0, 0, 0): 1, (1, 0, 0, 0): 1},
        {(0, 0, 0, 0): 1, (1, 0, 0, 0): 2, (0, 1, 0, 0): 1, (0, 0, 0, 1): 1},
        {
            (0, 0, 0, 0): 2,
            (1, 0, 0, 0): 4,
            (0, 1, 0, 0): 3,
            (0, 0, 0, 1): 3,
            (2, 0, 0, 0): 1,
            (1, 0, 0, 1): 1,
            (0, 0, 1, 0): 1,
        },
        {(0, 0, 0, 0): 1, (1, 0, 0, 0): 1, (0, 0, 0, 1): 1},
    ],
    "A4(2)": [{(1, 0): 1}, {(0, 1): 1}, {(0, 2): 1}],
    "A5(2)": [
        {(1, 0, 0): 1},
        {(0, 1, 0): 1, (0, 0, 0): 1},
        {(0, 0, 1): 1, (1, 0, 0): 1},
    ],
    "D4(2)": [
        {(0, 0, 0): 1, (1, 0, 0): 1},
        {(0, 0, 0): 1, (1, 0, 0): 1, (0, 1, 0): 1},
        {(0, 0, 1): 1},
    ],
}

PRODUCT_LAW_TYPES = ("A2(2)", "A4(2)", "A6(2)", "A3(2)", "A5(2)", "D4(2)", "D4(3)")
TENSOR_TYPES = ("A2(2)", "A4(2)", "A3(2)", "A5(2)", "D4(2)", "D4(3)", "E6(2)", "A1(1)")
ORACLE_TYPES = ("A1", "A2", "B2", "C2", "G2", "B3", "C3", "A4", "B4", "C4", "D4", "F4")

DEFAULT_MAX_COORDINATE = 2
DEFAULT_RANDOM_CHARACTERS = 200
DEFAULT_MAX_WORD_LENGTH = 6
DEFAULT_ORACLE_DIMENSION = 1000
DEFAULT_TENSOR_DIMENSION = 2000


@dataclass
class CheckResult:
    index: int
    name: str
    passed: bool
    detail: str


Check = Tuple[str, Callable[[], Tuple[bool, str]]]


def _weights_up_to(rank: int, bound: int):
    for coords in itertools.product(range(bound + 1), repeat=rank):
        if any(coords):
            yield FiniteWeight(coords)


def check_fundamental_dimensions(name: str, options: Dict) -> Tuple[bool, str]:
    table = fundamental_table(affine_data(name), {"use_cache": False})
    observed = [row.dimension for row in table]
    expected = FUNDAMENTAL_DIMENSIONS[name]
    return observed == expected, f"{observed} vs {expected}"


def check_fundamental_decompositions(name: str, options: Dict) -> Tuple[bool, str]:
    table = fundamental_table(affine_data(name), {"use_cache": False})
    observed = [row.decomposition.as_coords() for row in table]
    expected = FUNDAMENTAL_DECOMPOSITIONS[name]
    return observed == expected, f"{len(observed)} rows"


def check_d43_operator_identity(options: Dict) -> Tuple[bool, str]:
    data = affine_data("D4(3)")
    omega1 = FiniteWeight.fundamental(2, 1)
    word = reduced_word(data, [], -omega1)
    result = demazure_char(fundamental(data, 0), word, data)
    seed = FormalCharacter("finite", {(0, 0): 1, (0, 1): 2, (1, 0): 1})
    expected = finite_demazure(data.g0, seed, data.g0.longest_word)
    restricted = restrict_to_g0(result.character)
    return restricted == expected, f"word length {len(word)}, dimension {restricted.dimension()}"


def check_a2_series(options: Dict) -> Tuple[bool, str]:
    data = affine_data("A2(2)")
    expected = {1: 2, 3: 6, 5: 18, 7: 54}
    observed = {}
    for n in expected:
        observed[n] = weyl_char(data, FiniteWeight.of(n), {"use_cache": False}).dimension
    products = {n: a2_closed_forms(n)["product"] for n in expected}
    ceiling = {n: a2_closed_forms(n)["ceiling"] for n in expected}
    first = weyl_char(data, FiniteWeight.of(1), {"use_cache": False})
    ok = (
        observed == expected == products
        and first.decomposition.as_coords() == {(1,): 1}
    )
    detail = f"computed {observed}; product form matches, ceiling form gives {ceiling}"
    return ok, detail


def check_product_law(name: str, options: Dict) -> Tuple[bool, str]:
    data = affine_data(name)
    bound = options.get("max_coordinate", DEFAULT_MAX_COORDINATE)
    local = {"use_cache": True, "cache": {}}
    checked = 0
    for lam in _weights_up_to(data.rank, bound):
        if data.is_even_twisted_a() and lam.coords[-1] % 2 == 0:
            continue
        direct = weyl_char(data, lam, local).dimension
        if direct != weyl_dim_product(data, lam, local):
            return False, f"lambda {lam}: direct {direct}"
        if data.is_even_twisted_a() and direct != binomial_dimension(data, lam):
            return False, f"lambda {lam}: binomial form disagrees with {direct}"
        checked += 1
    return True, f"{checked} weights"


def tensor_samples(
    name: str, limit: int, bound: int | None = None
) -> List[Tuple[Fraction, FiniteWeight, FiniteWeight]]:
    """
    (k, lambda_1, lambda_2) triples covered by the tensor factorization.

    At k = 1, 2 every lambda is k a_0^vee times a dominant element of the
    translation lattice M, so D(k, lambda) is a translation Demazure module
    V_{t(-mu)}(k Lambda_0). At the Weyl level any dominant pair factors. A2l(2)
    has no such series and yields nothing; its half level is covered by the
    Weyl factorization.

    Args:
        name: affine type
        limit: maximum number of samples
        bound: skip samples whose Weyl-module dimension dim W(lambda_1 + lambda_2),
            an upper bound for every D(k, lambda_1 + lambda_2), exceeds it

    Returns:
        distinct samples, integer levels first
    """
    data = affine_data(name)
    if data.is_even_twisted_a():
        return []
    zero = FiniteWeight.zero(data.rank)
    candidates = []
    for k in (1, 2):
        scaled = [g.scaled(k * data.comarks[0]) for g in translation_generators(data)]
        candidates.extend((Fraction(k), zero, g) for g in scaled)
        candidates.extend(
            (Fraction(k), a, b) for a, b in itertools.combinations_with_replacement(scaled, 2)
        )
    basis = [FiniteWeight.fundamental(data.rank, i) for i in range(1, data.rank + 1)]
    candidates.extend(
        (weyl_level(data), a, b) for a, b in itertools.combinations_with_replacement(basis, 2)
    )

    local = {"use_cache": True, "cache": {}}
    samples = []
    for sample in candidates:
        if len(samples) == limit:
            break
        k, a, b = sample
        if sample in samples:
            continue
        if bound is not None and weyl_dim_product(data, a + b, local) > bound:
            continue
        samples.append(sample)
    return samples


def check_tensor_property(name: str, options: Dict) -> Tuple[bool, str]:
    data = affine_data(name)
    samples = tensor_samples(
        name,
        options.get("tensor_samples", 20),
        options.get("tensor_dimension", DEFAULT_TENSOR_DIMENSION),
    )
    for k, lam1, lam2 in samples:
        if not verify_tensor_property(data, k, lam1, lam2):
            return False, f"k={k}, {lam1} + {lam2}"
    checked = len(samples)
    if data.is_even_twisted_a():
        l = data.rank
        spin = FiniteWeight.fundamental(l, l)
        weights = [spin, spin.scaled(3), spin.scaled(5)] + [
            FiniteWeight.fundamental(l, i) + spin for i in range(1, l)
        ]
        for lam in weights:
            if not verify_weyl_factorization(data, lam, {"use_cache": False}):
                return False, f"factorization of W({lam})"
        checked += len(weights)
    return True, f"{checked} cases"


def check_untwisted_sanity(options: Dict) -> Tuple[bool, str]:
    data = affine_data("A1(1)")
    dims = [demazure_D(data, 1, FiniteWeight.of(n)).dimension() for n in range(1, 9)]
    if dims != [2**n for n in range(1, 9)]:
        return False, f"dimensions {dims}"
    result = demazure_D(data, 1, FiniteWeight.of(2))
    rs = data.g0
    top = result.graded.bucket(0) == irr_char(rs, FiniteWeight.of(2))
    total = restrict_to_g0(result.character) == irr_char(rs, FiniteWeight.of(2)) + irr_char(
        rs, FiniteWeight.of(0)
    )
    return top and total, f"dimensions {dims}"


def _random_affine_character(rng: random.Random, size: int, terms: int) -> FormalCharacter:
    found = {}
    for _ in range(terms):
        key = tuple(rng.randint(-3, 3) for _ in range(size)) + (rng.randint(0, 2),)
        found[key] = rng.choice([-2, -1, 1, 2, 3])
    return FormalCharacter("affine", found)


def check_idempotence(name: str, options: Dict) -> Tuple[bool, str]:
    data = affine_data(name)
    rng = random.Random(f"{options.get('seed', 0)}:{name}")
    samples = options.get("random_characters", DEFAULT_RANDOM_CHARACTERS)
    for _ in range(samples):
        chi = _random_affine_character(rng, data.rank + 1, 4)
        for i in data.nodes:
            once = demazure_op(chi, i, data)
            if demazure_op(once, i, data) != once:
                return False, f"D_{i} not idempotent on {chi}"
    return True, f"{samples} characters"


def check_word_independence(name: str, options: Dict) -> Tuple[bool, str]:
    data = affine_data(name)
    groups = reduced_words_by_element(data, options.get("max_word_length", DEFAULT_MAX_WORD_LENGTH))
    start = FormalCharacter.monomial("affine", rho_hat(data).key())
    compared = 0
    for words in groups.values():
        first = demazure_apply_word(start, words[0], data)
        for word in words[1:]:
            compared += 1
            if demazure_apply_word(start, word, data) != first:
                return False, f"{words[0]} vs {word}"
    return True, f"{len(groups)} elements, {compared} comparisons"


def check_translation_composition(name: str, options: Dict) -> Tuple[bool, str]:
    data = affine_data(name)
    start = FormalCharacter.monomial("affine", fundamental(data, 0).key())
    gens = translation_generators(data)
    for a, b in itertools.combinations_with_replacement(gens, 2):
        word_a = reduced_word(data, [], -a)
        word_b = reduced_word(data, [], -b)
        word_ab = reduced_word(data, [], -(a + b))
        two_step = demazure_apply_word(demazure_apply_word(start, word_b, data), word_a, data)
        if two_step != demazure_apply_word(start, word_ab, data):
            return False, f"{a} and {b}"
    return True, f"{len(gens)} generators"


def check_level_preservation(name: str, options: Dict) -> Tuple[bool, str]:
    data = affine_data(name)
    k = Fraction(1, data.comarks[0])
    spin_only = data.is_even_twisted_a()
    for i in range(1, data.rank + 1):
        lam = FiniteWeight.fundamental(data.rank, i)
        if spin_only and i < data.rank:
            lam = lam + FiniteWeight.fundamental(data.rank, data.rank)
        result = demazure_D(data, k, lam)
        levels = {level(data, AffineWeight.from_key(key)) for key in result.character.keys()}
        if levels != {k * data.comarks[0]}:
            return False, f"levels {levels} for {lam}"
    return True, "all exponents at the target level"


def check_finite_oracles(label: str, options: Dict) -> Tuple[bool, str]:
    rs = build_root_system(label[0], int(label[1:]))
    bound = options.get("oracle_dimension", DEFAULT_ORACLE_DIMENSION)
    checked = 0
    for lam in _weights_up_to(rs.rank, options.get("oracle_coordinate", 2)):
        if weyl_dim(rs, lam) > bound:
            continue
        chi = irr_char(rs, lam)
        if chi != freudenthal_char(rs, lam) or not weyl_character_check(rs, lam, chi):
            return False, f"{label} {lam}"
        if decompose_g0(chi, rs).as_coords() != {lam.coords: 1}:
            return False, f"{label} {lam} does not decompose to itself"
        checked += 1
    return True, f"{checked} weights"


def published_checks(options: Dict) -> List[Check]:
    checks: List[Check] = []
    for name in FUNDAMENTAL_DIMENSIONS:
        checks.append((f"fundamental dimensions {name}", lambda n=name: check_fundamental_dimensions(n, options)))
    for name in FUNDAMENTAL_DECOMPOSITIONS:
        checks.append((f"fundamental decompositions {name}", lambda n=name: check_fundamental_decompositions(n, options)))
    checks.append(("D4(3) translation operator identity", lambda: check_d43_operator_identity(options)))
    checks.append(("A2(2) odd series", lambda: check_a2_series(options)))
    for name in PRODUCT_LAW_TYPES:
        checks.append((f"product dimension law {name}", lambda n=name: check_product_law(n, options)))
    for name in TENSOR_TYPES:
        checks.append((f"tensor property {name}", lambda n=name: check_tensor_property(n, options)))
    checks.append(("A1(1) untwisted sanity", lambda: check_untwisted_sanity(options)))
    return checks


def property_checks(options: Dict) -> List[Check]:
    checks: List[Check] = []
    for name in ("A2(2)", "A4(2)", "A5(2)", "D4(2)", "D4(3)", "E6(2)", "A1(1)"):
        checks.append((f"Demazure idempotence {name}", lambda n=name: check_idempotence(n, options)))
    for name in ("A4(2)", "A3(2)", "D4(3)", "A2(1)"):
        checks.append((f"reduced word independence {name}", lambda n=name: check_word_independence(n, options)))
    for name in ("A2(2)", "A4(2)", "A3(2)", "D4(3)", "A1(1)"):
        checks.append((f"translation composition {name}", lambda n=name: check_translation_composition(n, options)))
    for name in ("A2(2)", "A4(2)", "A5(2)", "D4(2)", "D4(3)"):
        checks.append((f"level preservation {name}", lambda n=name: check_level_preservation(n, options)))
    for label in ORACLE_TYPES:
        checks.append((f"finite character oracles {label}", lambda n=label: check_finite_oracles(n, options)))
    return checks


def build_checks(suite: str, options: Dict) -> List[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    checks = []
    if suite in ("paper", "all"):
        checks += published_checks(options)
    if suite in ("properties", "all"):
        checks += property_checks(options)
    return checks


def _run_one(indexed: Tuple[int, Check]) -> CheckResult:
    index, (name, check) = indexed
    try:
        passed, detail = check()
    except Exception as exc:  # a crashing check is a failing check
        logger.exception("check %s raised", name)
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    logger.info("[%d] %s: %s", index, name, "PASS" if passed else "FAIL")
    return CheckResult(index, name, passed, detail)


def run_verification(suite: str = "paper", options: Dict | None = None) -> List[CheckResult]:
    """
    Run a verification suite.

    Args:
        suite: "paper", "properties" or "all"
        options: ``workers`` (default 1), ``max_coordinate`` (default 2),
            plus per-check knobs such as ``tensor_samples`` and ``random_characters``

    Returns:
        CheckResult list ordered by check index
    """
    if options is None:
        options = {}
    checks = build_checks(suite, options)
    workers = max(1, int(options.get("workers", 1)))
    indexed = list(enumerate(checks, start=1))
    if workers == 1:
        return [_run_one(item) for item in indexed]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, indexed))


def format_results(results: List[CheckResult]) -> str:
    width = max((len(r.name) for r in results), default=10)
    lines = [f"{'#':>3}  {'check':<{width}}  result  detail"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.index:>3}  {r.name:<{width}}  {status:<6}  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
