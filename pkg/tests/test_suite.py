"""Check registry and runner: statuses, witnesses, determinism."""

import pytest

import abelian_fourier
from abelian_fourier.errors import UnknownCheck, UnsupportedParams
from abelian_fourier.suite import (
    REGISTRY,
    default_suite,
    overall_status,
    run_check,
    run_check_lenient,
    run_suite,
)
from abelian_fourier.varieties import elliptic_product, make_variety


def test_registry_size_and_names():
    assert len(REGISTRY) == 20
    expected = {
        "fourier_involution",
        "beauville_exp",
        "star_exp_of_R",
        "claim_star",
        "eq35_minclass",
        "tau_equals_R",
        "functoriality",
        "product_exchange",
        "theta_divided",
        "kunneth_R",
        "sigma_triple_sum",
        "beta_surjectivity",
        "divided_square",
        "lemma51_diagram",
        "prop45_pushforward",
        "isogeny_degree",
        "hodge_fourier_unimodular",
        "ihc_certificate_elliptic_products",
        "poincare_normalization",
        "ell_integrality",
    }
    assert set(REGISTRY) == expected


def test_run_check_examples():
    assert run_check("beauville_exp", genus=3).status == "pass"
    assert run_check("fourier_involution", genus=1).status == "pass"
    assert run_check("tau_equals_R", genus=2).status == "pass"


def test_run_check_records_descriptor():
    r = run_check("fourier_involution", genus=2, type=(1, 2))
    assert r.descriptor.name == "fourier_involution"
    assert dict(r.descriptor.params) == {"genus": 2, "type": (1, 2)}
    assert r.status == "pass"
    assert r.runtime_ms >= 0


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_check("no_such_check")


def test_unsupported_params():
    with pytest.raises(UnsupportedParams):
        run_check("beauville_exp", genus=0)
    with pytest.raises(UnsupportedParams):
        run_check("beauville_exp", genus=2, type=(1, 2))
    r = run_check_lenient("beauville_exp", genus=2, type=(1, 2))
    assert r.status == "skipped"


def test_budget_skip():
    r = run_check("claim_star", genus=4)
    assert r.status == "skipped"
    assert "budget" in r.detail
    assert run_check("beauville_exp", genus=6).status == "skipped"


def test_prop45_needs_two_factors():
    assert run_check("prop45_pushforward", genus=1).status == "skipped"
    assert run_check("prop45_pushforward", pairs=((1, 1), (2, 1))).status == "pass"


def test_injected_variety():
    B = elliptic_product((1, 2))
    r = run_check("fourier_involution", variety=B)
    assert r.status == "pass"
    assert dict(r.descriptor.params)["variety"] == B.name
    # a variety without complex structure skips Hodge-dependent checks
    bare = make_variety([[0, 1], [-1, 0]], name="bare")
    r2 = run_check("hodge_fourier_unimodular", variety=bare)
    assert r2.status == "skipped"


def test_corrupted_orientation_fails_with_witness(monkeypatch):
    # negating the orientation convention must be caught by the
    # exponential identity, with a nonzero witness class
    import abelian_fourier.varieties as varieties

    original = varieties._theta_orientation

    def corrupted(E, g, delta):
        return -original(E, g, delta)

    abelian_fourier.clear_caches()
    monkeypatch.setattr(varieties, "_theta_orientation", corrupted)
    try:
        r = run_check("beauville_exp", genus=1)
        assert r.status == "fail"
        assert r.witness is not None and not r.witness.is_zero()
    finally:
        monkeypatch.undo()
        abelian_fourier.clear_caches()
    assert run_check("beauville_exp", genus=1).status == "pass"


def test_suite_determinism():
    grid = [
        ("fourier_involution", {"genus": 2}),
        ("product_exchange", {"genus": 2, "count": 5, "seed": 11}),
        ("isogeny_degree", {"genus": 1, "count": 3, "seed": 11}),
    ]
    a = run_suite(grid)
    b = run_suite(grid)
    strip = lambda rs: [(r.descriptor, r.status, r.witness, r.detail) for r in rs]
    assert strip(a) == strip(b)
    assert overall_status(a)


def test_default_suite_full_grid_names():
    grid = default_suite()
    assert {name for name, _ in grid} == set(REGISTRY)
    grid2 = default_suite(genus=2)
    assert len(grid2) == 20


def test_seed_changes_randomized_checks():
    a = run_check("product_exchange", genus=2, count=3, seed=1)
    b = run_check("product_exchange", genus=2, count=3, seed=2)
    assert a.status == b.status == "pass"
    assert dict(a.descriptor.params)["seed"] != dict(b.descriptor.params)["seed"]
