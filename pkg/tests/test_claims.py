import pytest

from utils.claims import (
    COMPLETION_VARIANTS, SCOPES, ClaimResult, claims_for_scope, d_acyclic, d_semi_transitive, d_shortcut_free,
    graph_a_claims, level_sets_and_remarks, line_k4_prime_non_representable, line_k4_representable,
    line_k5_contains_line_k4_prime, line_squared_obstructions, line_w5_prime_in_line_mu_c3,
    mycielski_cycle_non_representable,
    rook_semi_transitive, run_claim, shortcut_oracles_agree, statement_laws, unique_completion,
    word_invariances,
)
from utils.config import Settings
from utils.errors import ValidationError


@pytest.mark.parametrize(
    "check",
    [
        line_k4_prime_non_representable,
        line_k4_representable,
        line_k5_contains_line_k4_prime,
        line_w5_prime_in_line_mu_c3,
        graph_a_claims,
        line_squared_obstructions,
        lambda: mycielski_cycle_non_representable(3),
        lambda: d_semi_transitive(2),
        lambda: d_acyclic(4),
        lambda: d_shortcut_free(4),
        lambda: rook_semi_transitive(4),
        lambda: level_sets_and_remarks(3),
        lambda: statement_laws(2024, 60),
        lambda: word_invariances(2024, 40),
        lambda: shortcut_oracles_agree(4),
    ],
)
def test_claims_pass(check):
    result = check()
    assert isinstance(result, ClaimResult)
    assert result.passed, result.detail


@pytest.mark.parametrize("variant", sorted(COMPLETION_VARIANTS))
def test_unique_completion(variant):
    result = unique_completion(variant)
    assert result.passed and result.detail == "a->d, d->c"


def test_unknown_completion_variant():
    with pytest.raises(ValidationError):
        unique_completion("k4")


@pytest.mark.slow
def test_oracles_on_five_vertices():
    assert shortcut_oracles_agree(5).passed


def test_scopes():
    settings = Settings()
    assert [name for name, _ in claims_for_scope("lemma2", settings)] == [f"lemma2[{v}]" for v in COMPLETION_VARIANTS]
    assert len(claims_for_scope("theorem2", settings)) == 21
    everything = claims_for_scope("all", settings)
    assert len(everything) == sum(len(claims_for_scope(s, settings)) for s in SCOPES[1:])
    with pytest.raises(ValidationError):
        claims_for_scope("lemma9", settings)


def test_run_claim_records_time():
    result = run_claim("lemma2", lambda: unique_completion("c4"))
    assert result.passed and result.elapsed >= 0
    assert result.to_dict() == {"claim": "unique completion (c4)", "passed": True, "detail": "a->d, d->c"}
    assert result.line().startswith("[PASS] unique completion (c4)")
