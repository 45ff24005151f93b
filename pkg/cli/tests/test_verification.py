"""
Unit tests for the regression suite
"""

import pytest

from affine.src.affine import affine_data
from cli.src import verification
from cli.src.verification import (
    DEFAULT_MAX_COORDINATE,
    DEFAULT_MAX_WORD_LENGTH,
    DEFAULT_ORACLE_DIMENSION,
    DEFAULT_RANDOM_CHARACTERS,
    CheckResult,
    build_checks,
    check_a2_series,
    check_d43_operator_identity,
    check_finite_oracles,
    check_fundamental_decompositions,
    check_fundamental_dimensions,
    check_idempotence,
    check_level_preservation,
    check_product_law,
    check_tensor_property,
    check_translation_composition,
    check_untwisted_sanity,
    check_word_independence,
    format_results,
    run_verification,
    tensor_samples,
)
from weyl.src.weyl import clear_cache, weyl_dim_product


@pytest.fixture(autouse=True)
def fresh_cache():
    clear_cache()
    yield
    clear_cache()


@pytest.fixture
def toy_checks(monkeypatch):
    """Replace the real suite with cheap checks, one of which crashes"""

    def boom():
        raise RuntimeError("exploded")

    checks = [
        ("first", lambda: (True, "one")),
        ("second", lambda: (False, "two")),
        ("third", boom),
        ("fourth", lambda: (True, "four")),
    ]
    monkeypatch.setattr(verification, "build_checks", lambda suite, options: checks)
    return checks


class TestRunner:
    """Ordering, parallelism and failure capture"""

    def test_results_in_check_order(self, toy_checks):
        results = run_verification("paper", {"workers": 4})
        assert [r.index for r in results] == [1, 2, 3, 4]
        assert [r.name for r in results] == ["first", "second", "third", "fourth"]

    def test_same_results_for_any_worker_count(self, toy_checks):
        serial = run_verification("paper", {"workers": 1})
        parallel = run_verification("paper", {"workers": 3})
        assert serial == parallel

    def test_crash_is_failure(self, toy_checks):
        third = run_verification("paper")[2]
        assert not third.passed
        assert third.detail == "RuntimeError: exploded"

    def test_format(self):
        text = format_results([CheckResult(1, "alpha", True, "fine"), CheckResult(2, "beta", False, "bad")])
        assert "PASS" in text and "FAIL" in text
        assert text.endswith("1/2 checks passed")


class TestSuites:
    """Suite composition"""

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            build_checks("everything", {})

    def test_all_is_union(self):
        published = build_checks("paper", {})
        properties = build_checks("properties", {})
        combined = build_checks("all", {})
        assert [name for name, _ in combined] == [name for name, _ in published + properties]

    def test_names_unique(self):
        names = [name for name, _ in build_checks("all", {})]
        assert len(names) == len(set(names))

    @pytest.mark.parametrize("label", ["A4", "B4", "C4", "D4", "F4"])
    def test_rank_four_oracles_scheduled(self, label):
        names = [name for name, _ in build_checks("properties", {})]
        assert f"finite character oracles {label}" in names

    def test_default_search_bounds(self):
        assert DEFAULT_MAX_COORDINATE == 2
        assert DEFAULT_RANDOM_CHARACTERS == 200
        assert DEFAULT_MAX_WORD_LENGTH == 6
        assert DEFAULT_ORACLE_DIMENSION == 1000


class TestPublishedValues:
    """Individual checks against the tabulated values"""

    def test_d43_dimensions(self):
        assert check_fundamental_dimensions("D4(3)", {})[0]

    def test_a42_decompositions(self):
        assert check_fundamental_decompositions("A4(2)", {})[0]

    def test_d43_operator_identity(self):
        passed, detail = check_d43_operator_identity({})
        assert passed
        assert "word length 10" in detail

    def test_a2_series(self):
        passed, detail = check_a2_series({})
        assert passed
        assert "ceiling form gives" in detail

    def test_product_law(self):
        assert check_product_law("A4(2)", {"max_coordinate": 1})[0]
        assert check_product_law("D4(3)", {"max_coordinate": 1})[0]

    def test_untwisted(self):
        assert check_untwisted_sanity({})[0]

    def test_tensor_samples_a11(self):
        samples = tensor_samples("A1(1)", 20)
        assert [(k, a.coords, b.coords) for k, a, b in samples] == [
            (1, (0,), (2,)),
            (1, (2,), (2,)),
            (2, (0,), (4,)),
            (2, (4,), (4,)),
            (1, (1,), (1,)),
        ]
        assert len(tensor_samples("A1(1)", 3)) == 3

    def test_tensor_samples_d43(self):
        samples = tensor_samples("D4(3)", 20, 2000)
        assert [(k, a.coords, b.coords) for k, a, b in samples] == [
            (1, (0, 0), (1, 0)),
            (1, (0, 0), (0, 1)),
            (1, (1, 0), (1, 0)),
            (1, (1, 0), (0, 1)),
            (1, (0, 1), (0, 1)),
            (2, (0, 0), (2, 0)),
            (2, (0, 0), (0, 2)),
        ]

    def test_dimension_bound(self):
        for k, lam1, lam2 in tensor_samples("D4(2)", 50, 100):
            assert weyl_dim_product(affine_data("D4(2)"), lam1 + lam2) <= 100

    def test_even_twisted_a_has_no_translation_samples(self):
        assert tensor_samples("A2(2)", 20) == []
        assert tensor_samples("A4(2)", 20) == []

    def test_tensor_property_small(self):
        assert check_tensor_property("A1(1)", {"tensor_samples": 6})[0]
        assert check_tensor_property("A2(2)", {"tensor_samples": 4})[0]
        assert check_tensor_property("A3(2)", {"tensor_samples": 6, "tensor_dimension": 200})[0]

    def test_tensor_property_d42(self):
        passed, detail = check_tensor_property("D4(2)", {"tensor_samples": 8, "tensor_dimension": 400})
        assert passed, detail
        assert detail == "8 cases"

    @pytest.mark.slow
    def test_product_law_wide_grid(self):
        assert check_product_law("A5(2)", {"max_coordinate": 2})[0]
        assert check_product_law("A4(2)", {"max_coordinate": 2})[0]

    @pytest.mark.slow
    def test_full_published_suite(self):
        results = run_verification("paper", {"workers": 2})
        assert all(r.passed for r in results), format_results(results)


class TestPropertyChecks:
    """Algebraic laws"""

    def test_idempotence(self):
        assert check_idempotence("A4(2)", {"random_characters": 5})[0]

    def test_word_independence(self):
        assert check_word_independence("A4(2)", {"max_word_length": 4})[0]

    def test_translation_composition(self):
        assert check_translation_composition("A2(2)", {})[0]

    def test_level_preservation(self):
        assert check_level_preservation("A4(2)", {})[0]

    def test_finite_oracles(self):
        assert check_finite_oracles("B2", {"oracle_coordinate": 1})[0]

    def test_simply_laced_oracles(self):
        passed, detail = check_finite_oracles("A2", {"oracle_coordinate": 2})
        assert passed
        assert detail == "8 weights"

    @pytest.mark.slow
    def test_d4_oracles(self):
        assert check_finite_oracles("D4", {"oracle_coordinate": 1})[0]

    @pytest.mark.slow
    def test_rank_four_oracles(self):
        assert check_finite_oracles("F4", {"oracle_coordinate": 1})[0]

    @pytest.mark.slow
    def test_full_property_suite(self):
        results = run_verification("properties", {"workers": 2})
        assert all(r.passed for r in results), format_results(results)
