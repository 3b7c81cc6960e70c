import jsonschema
import pytest

from wittid.fields import Field
from wittid.freealg import LiePoly, Var
from wittid.grammar import parse_polynomial
from wittid.models import onedim_model, satisfies_multilinear
from wittid.verify import (
    PROBE_TUPLES,
    REPORT_SCHEMA,
    SweepConfig,
    VerificationReport,
    canonical_degree_tuples,
    char_contrast,
    independence_check,
    leading_family_members,
    minimality_sweep,
    no_finite_basis_demo,
    orbit_size,
    revalidate_entry,
    variable_independence_check,
    verify_basis_theorem,
)

GF2 = Field.gf(2)


def test_canonical_tuples_and_orbits():
    tuples = list(canonical_degree_tuples(2, 1))
    assert tuples == [(-1, -1), (-1, 0), (-1, 1), (0, 0), (0, 1), (1, 1)]
    assert orbit_size((1, 1, 2)) == 3
    assert orbit_size((0, 0, 0)) == 1
    assert orbit_size((0, 1, 2)) == 6


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(model="ut3:0:2")
    with pytest.raises(ValueError):
        SweepConfig(nmax=0)
    config = SweepConfig(model="w1", family_range="tight")
    assert config.family().bracket_lower_bound == 0


def test_small_sweep_u1_passes():
    report = verify_basis_theorem(SweepConfig(model="u1", nmax=3, dmax=2))
    assert report.passed
    assert report.summary["failed"] == 0
    assert report.summary["skipped"] == 0
    assert report.summary["passed"] == len(report.spaces)
    entry = report.entry_for([2, 4])
    assert entry is None  # outside dmax
    entry = report.entry_for([1, 2])
    assert entry["dimIdentity"] == 0 and entry["dimConsequence"] == 0


def test_small_sweep_w1_passes_including_minus_one_pair():
    report = verify_basis_theorem(
        SweepConfig(model="w1", family_range="wide", nmax=3, dmax=2)
    )
    assert report.passed
    entry = report.entry_for([-1, -1])
    assert entry["dimIdentity"] == 1
    assert entry["dimConsequence"] == 1
    assert entry["sound"] and entry["complete"]


def test_gf3_sweep_reports_soundness_failure_with_witness():
    report = verify_basis_theorem(
        SweepConfig(model="u1", nmax=2, dmax=3, field="gf3")
    )
    assert not report.passed
    entry = report.entry_for([1, 3])
    assert entry["sound"] is False
    witness = parse_polynomial(entry["witness"], Field.gf(3))
    expected = LiePoly.monomial(Field.gf(3), (Var(1, 1), Var(2, 3)))
    assert witness == expected  # equal as Lie elements
    assert revalidate_entry(entry, report.config)


def test_witness_revalidation_rejects_fakes():
    report = verify_basis_theorem(
        SweepConfig(model="u1", nmax=2, dmax=3, field="gf3")
    )
    entry = dict(report.entry_for([1, 3]))
    entry["witness"] = "[x1^1, x2^3] + [x2^3, x1^1]"  # expands to zero mod 2 but not mod 3
    entry["witness"] = "[x2^3, x1^1]"
    assert revalidate_entry(entry, report.config)  # same line, still valid
    entry["sound"], entry["complete"] = True, False
    assert not revalidate_entry(entry, report.config)  # not an identity at all


def test_reports_are_deterministic_once_timings_dropped():
    config = SweepConfig(model="w1", family_range="tight", nmax=3, dmax=1)
    a = verify_basis_theorem(config).to_json(with_timings=False)
    b = verify_basis_theorem(config).to_json(with_timings=False)
    assert a == b


def test_report_schema_and_roundtrip():
    report = verify_basis_theorem(SweepConfig(model="u1", nmax=2, dmax=2))
    obj = report.to_json_dict()
    jsonschema.validate(obj, REPORT_SCHEMA)
    again = VerificationReport.from_json(report.to_json())
    assert again.spaces == report.spaces
    assert again.summary == report.summary
    assert again.passed == report.passed


def test_parallel_workers_match_sequential():
    config = SweepConfig(model="u1", nmax=3, dmax=1)
    sequential = verify_basis_theorem(config)
    parallel = verify_basis_theorem(
        SweepConfig(model="u1", nmax=3, dmax=1, workers=2)
    )
    assert sequential.spaces == parallel.spaces


def test_budget_flags_skipped_spaces():
    config = SweepConfig(model="u1", nmax=4, dmax=2, space_budget_s=0.0)
    report = verify_basis_theorem(config)
    assert report.summary["skipped"] > 0
    assert not report.passed
    skipped = [e for e in report.spaces if e.get("skipped")]
    assert all(e["dimConsequence"] is None for e in skipped)
    jsonschema.validate(report.to_json_dict(), REPORT_SCHEMA)


def test_extra_degree_tuples_are_included_once():
    config = SweepConfig(
        model="w1", nmax=2, dmax=1, extra_degree_tuples=((-1, 3), (1, -1))
    )
    report = verify_basis_theorem(config)
    assert report.entry_for([-1, 3]) is not None
    assert sum(1 for e in report.spaces if e["degrees"] == [-1, 1]) == 1


# -- separation certificates ---------------------------------------------------


def test_independence_examples():
    for (r, s) in [(0, 2), (2, 2), (0, 0)]:
        result = independence_check(r, s, bound=6)
        assert result.ok, (r, s, result.violations)
    assert independence_check(0, 2).collision_merged
    assert not independence_check(2, 2).collision_merged


def test_independence_validation():
    with pytest.raises(ValueError):
        independence_check(2, 0)
    with pytest.raises(ValueError):
        independence_check(0, 1)
    with pytest.raises(ValueError):
        independence_check(-5, 5, bound=3)


def test_variable_independence_examples():
    assert variable_independence_check(-2, bound=6).ok
    assert variable_independence_check(-5, bound=6).ok
    # the separating algebra for degree -2 satisfies the bracket at (0, 0)
    model = onedim_model(GF2, -2)
    f = LiePoly.monomial(GF2, (Var(1, 0), Var(2, 0)))
    assert satisfies_multilinear(model, f)


def test_leading_family_members_order():
    members = leading_family_members(6)
    assert members[0] == (0, 0)
    assert members[1:6] == [(-2, 0), (-1, -1), (-1, 1), (0, 2), (1, 1)]
    assert len(leading_family_members(15)) == 15


def test_no_finite_basis_demo():
    demo = no_finite_basis_demo(1)
    assert demo.ok and len(demo.rows) == 1
    demo = no_finite_basis_demo(10)
    assert demo.ok and len(demo.rows) == 10
    for row in demo.rows:
        assert row["fails_member"] and row["satisfies_rest"]
    with pytest.raises(ValueError):
        no_finite_basis_demo(0)


# -- minimality -----------------------------------------------------------------


def test_minimality_u1():
    report = minimality_sweep("u1", member_bound=2, separation_bound=4)
    assert report.ok
    assert report.member_rows
    assert all(row["ok"] for row in report.member_rows)
    assert not report.sweeps


def test_minimality_w1_probes():
    report = minimality_sweep(
        "w1", member_bound=2, separation_bound=4, nmax=2, dmax=1
    )
    assert set(report.sweeps) == {"wide", "tight"}
    for variant in ("wide", "tight"):
        probes = report.probes[variant]
        assert [p["degrees"] for p in probes] == [list(t) for t in PROBE_TUPLES]
    wide_probe = report.probes["wide"][0]
    assert wide_probe["sound"] and wide_probe["complete"]
    tight_probe = report.probes["tight"][0]
    assert tight_probe["dimIdentity"] == 1
    # the tight family result at (-1, 1) is reported with a witness when
    # the spans differ; the witness must revalidate either way
    if not tight_probe["complete"]:
        assert "witness" in tight_probe
        assert revalidate_entry(tight_probe, report.sweeps["tight"].config)
    # the wide-only member [x1^-1, x2^-1] has no full separation:
    # its algebra violates a single-variable member
    row = next(r for r in report.member_rows if r["member"] == "[x1^-1, x2^-1]")
    assert row["single_violations"] == ["x1^-2"]
    assert not row["ok"]


def test_minimality_rejects_other_models():
    with pytest.raises(ValueError):
        minimality_sweep("onedim:-2")


# -- characteristic contrast -------------------------------------------------------


def test_char_contrast_gf3():
    report = char_contrast(3, bound=3)
    verdicts = {(row["a"], row["b"]): row["holds"] for row in report.rows}
    assert verdicts[(1, 3)] is False
    assert verdicts[(1, 1)] is True
    assert verdicts[(0, 0)] is True
    assert report.any_failed
    with pytest.raises(ValueError):
        char_contrast(2)
    with pytest.raises(ValueError):
        char_contrast(4)
