"""Unit tests for the identity registry and the verification runners."""

import json

import pytest

from truncsym.identities import (
    REGISTRY,
    IdentityReport,
    IdentitySpec,
    default_grid,
    list_identities,
    verify,
    verify_grid,
)

EXPECTED_IDS = [
    "ortho",
    "inv_H",
    "inv_E",
    "newton_E",
    "newton_H",
    "newton_P",
    "cubic_E",
    "cubic_H",
    "pk_from_E",
    "pk_from_H",
    "P_from_E",
    "P_from_H",
    "scalar_c",
    "H_from_P",
    "E_from_P",
    "rec_H",
    "rec_E",
    "roots_H",
    "roots_E",
    "conj_bridge",
    "conv_H",
    "conv_E",
    "conv_roots_h",
    "conv_roots_e",
    "mroots_closed_k1",
    "mroots_closed_k",
    "mroots_closed_km1",
    "powsub_h",
    "powsub_e",
    "vanish_h",
    "vanish_e",
    "mono_H",
    "mono_bridge",
]


def test_registry_lists_every_identity_in_a_stable_order():
    assert list_identities() == EXPECTED_IDS
    assert list(REGISTRY) == EXPECTED_IDS


def test_every_identity_holds_on_a_modest_grid():
    for name in list_identities():
        grid = default_grid(name, n_max=3, s_max=3)
        reports = verify_grid(name, grid)
        assert reports, name
        bad = [r for r in reports if not r.holds]
        assert not bad, (name, [r.params for r in bad])


def test_verify_rejects_unknown_and_misparameterized_calls():
    with pytest.raises(ValueError):
        verify("not_an_identity", k=1)
    with pytest.raises(ValueError):
        verify("ortho", k=0, s=1)  # missing n
    with pytest.raises(ValueError):
        verify("ortho", k=0, s=1, n=1, extra=7)
    with pytest.raises(ValueError):
        verify("vanish_h", k=4, s=2, n=2)  # k must avoid multiples of s
    with pytest.raises(ValueError):
        verify("mroots_closed_km1", lam=(1,))  # weight too small


def test_report_json_is_stable_and_ordered():
    r = verify("ortho", n=1, k=0, s=1)
    line = r.to_json(include_elapsed=False)
    assert line == (
        '{"identity_id": "ortho", "params": {"k": 0, "n": 1, "s": 1}, '
        '"holds": true, "lhs": "1", "rhs": "1"}'
    )
    full = json.loads(r.to_json())
    assert list(full) == ["identity_id", "params", "holds", "lhs", "rhs", "elapsed"]
    assert full["elapsed"] >= 0


def test_partition_identities_report_the_partition():
    r = verify("mroots_closed_k", lam=(2, 1))
    assert r.holds
    assert json.loads(r.to_json())["params"] == {"lam": [2, 1]}


def test_scalar_aggregate_goldens():
    assert verify("scalar_c", k=6, s=2).lhs == "2"
    assert verify("scalar_c", k=5, s=2).lhs == "-1"
    assert verify("scalar_c", k=5, s=2).holds


def test_large_polynomials_are_reported_as_digests():
    r = verify("powsub_h", n=4, k=6, s=2)
    assert r.holds
    assert r.lhs == r.rhs
    assert r.lhs.startswith("<") and "terms, degree" in r.lhs and "sha256" in r.lhs


def test_check_exceptions_fold_into_a_failing_report():
    spec = IdentitySpec(
        name="boom", arity=("k",), check=lambda k: 1 / 0, requires=lambda k: None
    )
    REGISTRY["boom"] = spec
    try:
        r = verify("boom", k=1)
        assert not r.holds
        assert r.lhs.startswith("error: ZeroDivisionError")
    finally:
        del REGISTRY["boom"]


def test_verification_is_deterministic():
    a = verify("newton_E", n=3, k=4, s=2).to_json(include_elapsed=False)
    b = verify("newton_E", n=3, k=4, s=2).to_json(include_elapsed=False)
    assert a == b


def test_grid_runner_skips_invalid_points():
    reports = verify_grid("vanish_h", {"n": range(1, 3), "k": range(1, 7), "s": range(2, 4)})
    assert len(reports) == 14
    assert all(r.holds for r in reports)
    assert all(r.params["k"] % r.params["s"] != 0 for r in reports)


def test_grid_runner_expands_partitions_from_the_weight_range():
    reports = verify_grid("mroots_closed_k", {"k": range(2, 5)})
    lams = [tuple(r.params["lam"]) for r in reports]
    assert (2,) in lams and (2, 1) in lams and (2, 2) in lams
    assert (1, 1) not in lams  # too many parts for the slot count
    assert all(2 <= sum(lam) <= 4 for lam in lams)
    assert all(r.holds for r in reports)


def test_default_grid_shapes():
    g = default_grid("ortho")
    assert set(g) == {"n", "k", "s"}
    assert default_grid("mroots_closed_k")["k"] == range(2, 9)
    assert default_grid("vanish_h")["s"] == range(2, 5)
    with pytest.raises(ValueError):
        default_grid("nope")


def test_report_is_a_plain_dataclass():
    r = IdentityReport(
        identity_id="x", params={"k": 1}, holds=True, lhs="0", rhs="0", elapsed=0.0
    )
    assert json.loads(r.to_json())["holds"] is True
