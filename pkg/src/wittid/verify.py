"""Theorem-level verification harness.

Runs exhaustive desk-scale sweeps over multilinear components, comparing
the identity subspace of a model with the consequence subspace of a
generating family (soundness: consequences are identities; completeness:
identities are consequences), and produces machine-readable reports.
Also provides separation certificates: graded algebras that violate one
family member while satisfying all the others, which is what rules out
any finite generating set.

Reports serialize to JSON with a stable field layout; identical
configurations produce byte-identical reports once the wall-clock
timings section is excluded.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from math import factorial
from typing import Optional, Sequence

from .fields import Field
from .freealg import LiePoly, MultilinearSpace, Var
from .grammar import format_polynomial, parse_polynomial
from .models import onedim_model, parse_model, satisfies_multilinear, u1_model, ut3_model
from .tideal import (
    BasisFamily,
    BudgetExceeded,
    consequence_instances,
    consequence_subspace,
    identity_subspace,
    subspace_contains,
    u1_family,
    w1_family,
)

REPORT_SCHEMA = {
    "type": "object",
    "required": ["config", "spaces", "summary", "timings"],
    "properties": {
        "config": {"type": "object"},
        "spaces": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "n", "degrees", "dimP", "dimIdentity",
                    "dimConsequence", "sound", "complete",
                ],
                "properties": {
                    "n": {"type": "integer", "minimum": 1},
                    "degrees": {"type": "array", "items": {"type": "integer"}},
                    "orbit": {"type": "integer", "minimum": 1},
                    "dimP": {"type": "integer", "minimum": 1},
                    "dimIdentity": {"type": ["integer", "null"]},
                    "dimConsequence": {"type": ["integer", "null"]},
                    "sound": {"type": ["boolean", "null"]},
                    "complete": {"type": ["boolean", "null"]},
                    "witness": {"type": "string"},
                    "skipped": {"type": "boolean"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["passed", "failed", "skipped"],
            "properties": {
                "passed": {"type": "integer"},
                "failed": {"type": "integer"},
                "skipped": {"type": "integer"},
            },
        },
        "timings": {"type": "object"},
    },
}


@dataclass
class SweepConfig:
    """Configuration of a basis-verification sweep."""

    model: str = "u1"                 # "u1" or "w1"
    family_range: str = "wide"        # w1 bracket range: "wide" (>= -1) or "tight" (>= 0)
    nmax: int = 4
    dmax: int = 3
    field: str = "gf2"
    workers: int = 1
    space_budget_s: Optional[float] = None
    extra_degree_tuples: tuple = ()
    seed: Optional[int] = None

    def __post_init__(self):
        if self.nmax < 1 or self.dmax < 0:
            raise ValueError("need nmax >= 1 and dmax >= 0")
        if self.model not in ("u1", "w1"):
            raise ValueError("basis sweeps cover the u1 and w1 models")
        self.extra_degree_tuples = tuple(
            tuple(t) for t in self.extra_degree_tuples
        )

    def family(self) -> BasisFamily:
        if self.model == "u1":
            return u1_family()
        return w1_family(self.family_range)

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "family": self.family().describe(),
            "range": self.family_range if self.model == "w1" else None,
            "field": self.field,
            "nmax": self.nmax,
            "dmax": self.dmax,
            "workers": self.workers,
            "space_budget_s": self.space_budget_s,
            "extra_degree_tuples": [list(t) for t in self.extra_degree_tuples],
            "seed": self.seed,
        }


@dataclass
class VerificationReport:
    """Outcome of a sweep: one entry per canonical degree tuple."""

    config: dict
    spaces: list
    summary: dict
    timings: dict = dataclass_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.summary["failed"] == 0 and self.summary["skipped"] == 0

    def entry_for(self, degrees: Sequence[int]) -> Optional[dict]:
        want = list(degrees)
        for entry in self.spaces:
            if entry["degrees"] == want:
                return entry
        return None

    def to_json_dict(self, with_timings: bool = True) -> dict:
        out = {
            "config": self.config,
            "spaces": self.spaces,
            "summary": self.summary,
            "timings": self.timings if with_timings else {},
        }
        return out

    def to_json(self, with_timings: bool = True) -> str:
        return json.dumps(self.to_json_dict(with_timings), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        return cls(
            config=data["config"],
            spaces=data["spaces"],
            summary=data["summary"],
            timings=data.get("timings", {}),
        )


def canonical_degree_tuples(n: int, dmax: int):
    """Nondecreasing degree tuples with entries in [-dmax, dmax].

    Sweeping these only loses nothing: subspace dimensions and
    containments are invariant under relabeling variables of equal
    degree, and any tuple can be sorted by such a relabeling.
    """
    return itertools.combinations_with_replacement(range(-dmax, dmax + 1), n)


def orbit_size(degrees: Sequence[int]) -> int:
    """Number of distinct reorderings of the degree tuple."""
    count = factorial(len(degrees))
    for d in set(degrees):
        count //= factorial(list(degrees).count(d))
    return count


def _build_model(model_spec: str, field: Field):
    model = parse_model(model_spec, field)
    return model


def _space_entry(payload: tuple) -> dict:
    """Soundness/completeness check of one multilinear component."""
    model_spec, family_kind, family_bound, field_spec, degrees, budget_s = payload
    field = Field.from_spec(field_spec)
    model = _build_model(model_spec, field)
    family = BasisFamily(family_kind, family_bound)
    space = MultilinearSpace.for_degrees(degrees, field)
    entry = {
        "n": len(degrees),
        "degrees": list(degrees),
        "orbit": orbit_size(degrees),
        "dimP": space.dim,
        "dimIdentity": None,
        "dimConsequence": None,
        "sound": None,
        "complete": None,
    }
    ident = identity_subspace(model, space)
    entry["dimIdentity"] = ident.dim
    deadline = time.monotonic() + budget_s if budget_s is not None else None
    try:
        cons = consequence_subspace(family, space, deadline=deadline)
    except BudgetExceeded:
        entry["skipped"] = True
        return entry
    entry["dimConsequence"] = cons.dim
    sound = subspace_contains(ident, cons)
    complete = subspace_contains(cons, ident)
    entry["sound"] = sound
    entry["complete"] = complete
    if not sound:
        for tree in consequence_instances(family, space):
            coords = space.coordinates(tree)
            if not ident.contains_vector(coords):
                entry["witness"] = format_polynomial(space.poly_from_coords(coords))
                break
    elif not complete:
        for row in ident.rows():
            if not cons.contains_vector(row):
                entry["witness"] = format_polynomial(space.poly_from_coords(row))
                break
    return entry


def verify_basis_theorem(config: SweepConfig) -> VerificationReport:
    """Check consequence = identity on every component in range.

    Every canonical degree tuple with n <= nmax variables and degrees
    bounded by dmax is swept once; failures carry an explicit witness
    polynomial. Components whose consequence enumeration exceeds the
    per-space budget are flagged as skipped rather than aborting the
    sweep.
    """
    start = time.monotonic()
    family = config.family()
    tuples = []
    seen = set()
    for n in range(1, config.nmax + 1):
        for degrees in canonical_degree_tuples(n, config.dmax):
            tuples.append(degrees)
            seen.add(degrees)
    for extra in config.extra_degree_tuples:
        key = tuple(sorted(extra))
        if key not in seen:
            tuples.append(key)
            seen.add(key)
    payloads = [
        (
            config.model,
            family.kind,
            family.bracket_lower_bound,
            config.field,
            degrees,
            config.space_budget_s,
        )
        for degrees in tuples
    ]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            entries = list(pool.map(_space_entry, payloads, chunksize=16))
    else:
        entries = [_space_entry(p) for p in payloads]
    summary = {
        "passed": sum(1 for e in entries if e.get("sound") and e.get("complete")),
        "failed": sum(
            1 for e in entries if e.get("sound") is False or e.get("complete") is False
        ),
        "skipped": sum(1 for e in entries if e.get("skipped")),
    }
    timings = {"total_s": round(time.monotonic() - start, 3)}
    return VerificationReport(
        config=config.to_dict(), spaces=entries, summary=summary, timings=timings
    )


def revalidate_entry(entry: dict, config: dict) -> bool:
    """Independently re-check one report entry.

    Skipped or passing entries revalidate trivially. A completeness
    witness must be an identity of the model that row reduction leaves
    outside the consequence span; a soundness witness must lie in the
    consequence span yet take a nonzero value in the model.
    """
    if entry.get("skipped") or (entry.get("sound") and entry.get("complete")):
        return True
    witness_text = entry.get("witness")
    if not witness_text:
        return False
    field = Field.from_spec(config["field"])
    model = _build_model(config["model"], field)
    variant = config.get("range") or "wide"
    family = u1_family() if config["model"] == "u1" else w1_family(variant)
    space = MultilinearSpace.for_degrees(entry["degrees"], field)
    witness = parse_polynomial(witness_text, field)
    coords = space.coordinates(witness)
    ident = identity_subspace(model, space)
    cons = consequence_subspace(family, space)
    if entry.get("sound") is False:
        return cons.contains_vector(coords) and not satisfies_multilinear(model, witness)
    return (
        satisfies_multilinear(model, witness)
        and ident.contains_vector(coords)
        and not cons.contains_vector(coords)
    )


# -- separation certificates -------------------------------------------------


def _bracket_poly(field: Field, a: int, b: int) -> LiePoly:
    return LiePoly.monomial(field, (Var(1, a), Var(2, b)))


def _same_parity_pairs(bound: int):
    for a in range(-bound, bound + 1):
        for b in range(a, bound + 1):
            if (a - b) % 2 == 0:
                yield (a, b)


@dataclass
class IndependenceResult:
    """Certificate that one bracket member is not a consequence of the rest."""

    r: int
    s: int
    bound: int
    fails_member: bool
    checked_pairs: int
    violations: list
    collision_merged: bool

    @property
    def ok(self) -> bool:
        return self.fails_member and not self.violations

    def to_json_dict(self) -> dict:
        return {
            "member": f"[x1^{self.r}, x2^{self.s}]",
            "model": f"ut3:{self.r}:{self.s}",
            "bound": self.bound,
            "fails_member": self.fails_member,
            "checked_pairs": self.checked_pairs,
            "violations": self.violations,
            "collision_merged": self.collision_merged,
            "ok": self.ok,
        }


def independence_check(
    r: int, s: int, bound: int = 6, field: Optional[Field] = None
) -> IndependenceResult:
    """The graded UT(3) algebra with E12 at degree r and E23 at degree s
    violates [x1^r, x2^s] while satisfying every other same-parity
    bracket with degrees bounded by ``bound``."""
    if r > s or (r - s) % 2 != 0:
        raise ValueError("need r <= s of the same parity")
    if bound < max(abs(r), abs(s)):
        raise ValueError("bound must cover |r| and |s|")
    field = field or Field.gf(2)
    model = ut3_model(field, r, s)
    fails_member = not satisfies_multilinear(model, _bracket_poly(field, r, s))
    violations = []
    checked = 0
    for (u, v) in _same_parity_pairs(bound):
        if (u, v) == (r, s):
            continue
        checked += 1
        if not satisfies_multilinear(model, _bracket_poly(field, u, v)):
            violations.append(f"[x1^{u}, x2^{v}]")
    return IndependenceResult(
        r=r,
        s=s,
        bound=bound,
        fails_member=fails_member,
        checked_pairs=checked,
        violations=violations,
        collision_merged=model.collision_merged,
    )


@dataclass
class VariableIndependenceResult:
    """Certificate that one single-variable member is not a consequence of
    the brackets and the other single variables."""

    d: int
    bound: int
    fails_member: bool
    checked_pairs: int
    checked_singles: int
    violations: list

    @property
    def ok(self) -> bool:
        return self.fails_member and not self.violations

    def to_json_dict(self) -> dict:
        return {
            "member": f"x1^{self.d}",
            "model": f"onedim:{self.d}",
            "bound": self.bound,
            "fails_member": self.fails_member,
            "checked_pairs": self.checked_pairs,
            "checked_singles": self.checked_singles,
            "violations": self.violations,
            "ok": self.ok,
        }


def variable_independence_check(
    d: int, bound: int = 6, field: Optional[Field] = None
) -> VariableIndependenceResult:
    """The one-dimensional algebra concentrated in degree d violates x^d
    while satisfying every bracket member and every other x^c."""
    field = field or Field.gf(2)
    model = onedim_model(field, d)
    fails_member = not satisfies_multilinear(model, LiePoly.variable(field, Var(1, d)))
    violations = []
    checked_pairs = 0
    for (u, v) in _same_parity_pairs(bound):
        checked_pairs += 1
        if not satisfies_multilinear(model, _bracket_poly(field, u, v)):
            violations.append(f"[x1^{u}, x2^{v}]")
    checked_singles = 0
    for c in range(-bound, bound + 1):
        if c == d:
            continue
        checked_singles += 1
        if not satisfies_multilinear(model, LiePoly.variable(field, Var(1, c))):
            violations.append(f"x1^{c}")
    return VariableIndependenceResult(
        d=d,
        bound=bound,
        fails_member=fails_member,
        checked_pairs=checked_pairs,
        checked_singles=checked_singles,
        violations=violations,
    )


@dataclass
class NoFiniteBasisReport:
    """Separation certificates for the leading family members: each row's
    model violates exactly its own member among the listed ones, so no
    finite subset of the family generates the rest."""

    members: list
    rows: list

    @property
    def ok(self) -> bool:
        return all(row["fails_member"] and row["satisfies_rest"] for row in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "members": [f"[x1^{r}, x2^{s}]" for (r, s) in self.members],
            "rows": self.rows,
            "ok": self.ok,
        }


def leading_family_members(count: int) -> list:
    """The first bracket members, ordered by |r| + |s|, then (r, s)."""
    out = []
    total = 0
    while len(out) < count:
        batch = set()
        for r in range(-total, total + 1):
            rem = total - abs(r)
            for s in {-rem, rem}:
                if r <= s and (r - s) % 2 == 0:
                    batch.add((r, s))
        out.extend(sorted(batch))
        total += 1
    return out[:count]


def no_finite_basis_demo(count: int, field: Optional[Field] = None) -> NoFiniteBasisReport:
    """Pairwise-separation table for the first ``count`` bracket members."""
    if count < 1:
        raise ValueError("count must be positive")
    field = field or Field.gf(2)
    members = leading_family_members(count)
    rows = []
    for (r, s) in members:
        model = ut3_model(field, r, s)
        fails_member = not satisfies_multilinear(model, _bracket_poly(field, r, s))
        bad = [
            f"[x1^{u}, x2^{v}]"
            for (u, v) in members
            if (u, v) != (r, s)
            and not satisfies_multilinear(model, _bracket_poly(field, u, v))
        ]
        rows.append(
            {
                "member": f"[x1^{r}, x2^{s}]",
                "model": model.name,
                "collision_merged": model.collision_merged,
                "fails_member": fails_member,
                "satisfies_rest": not bad,
                "violations": bad,
            }
        )
    return NoFiniteBasisReport(members=members, rows=rows)


# -- minimality ----------------------------------------------------------------


@dataclass
class MinimalityReport:
    """Per-member separation rows plus, for the polynomial case, the
    basis sweeps under both bracket ranges with the probe components
    (-1, 1) and (-1, 3) always included."""

    model: str
    member_rows: list
    single_rows: list
    sweeps: dict
    probes: dict

    @property
    def ok(self) -> bool:
        rows_ok = all(row["ok"] for row in self.member_rows) and all(
            row["ok"] for row in self.single_rows
        )
        sweeps_ok = True
        for variant, report in self.sweeps.items():
            sound_everywhere = all(
                e.get("sound") is not False for e in report.spaces
            )
            sweeps_ok = sweeps_ok and sound_everywhere
            if variant == "wide":
                sweeps_ok = sweeps_ok and report.passed
        return rows_ok and sweeps_ok

    def to_json_dict(self) -> dict:
        return {
            "model": self.model,
            "member_rows": self.member_rows,
            "single_rows": self.single_rows,
            "sweeps": {
                variant: report.to_json_dict(with_timings=False)
                for variant, report in self.sweeps.items()
            },
            "probes": self.probes,
            "ok": self.ok,
        }


PROBE_TUPLES = ((-1, 1), (-1, 3))


def minimality_sweep(
    model_name: str,
    member_bound: int = 3,
    separation_bound: int = 6,
    nmax: int = 3,
    dmax: int = 2,
    field_spec: str = "gf2",
) -> MinimalityReport:
    """Removal evidence for every family member in range.

    Bracket members get UT(3) separation certificates; single-variable
    members get one-dimensional separations. For the polynomial case the
    sweep runs under both bracket ranges and records the probe
    components, where the tight range may span a proper subspace of the
    identities; those dimensions are reported, not asserted.
    """
    field = Field.from_spec(field_spec)
    member_rows = []
    single_rows = []
    sweeps = {}
    probes = {}
    if model_name == "u1":
        lower = None
    elif model_name == "w1":
        lower = -1
    else:
        raise ValueError("minimality sweeps cover the u1 and w1 models")

    for (r, s) in _same_parity_pairs(member_bound):
        if lower is not None and (r < lower or s < lower):
            continue
        result = independence_check(r, s, bound=separation_bound, field=field)
        row = result.to_json_dict()
        if model_name == "w1":
            model = ut3_model(field, r, s)
            single_bad = [
                f"x1^{c}"
                for c in range(-separation_bound, -1)
                if not satisfies_multilinear(model, LiePoly.variable(field, Var(1, c)))
            ]
            row["single_violations"] = single_bad
            row["ok"] = row["ok"] and not single_bad
        member_rows.append(row)

    if model_name == "w1":
        for c in range(-separation_bound, -1):
            single_rows.append(
                variable_independence_check(c, bound=separation_bound, field=field).to_json_dict()
            )
        for variant in ("wide", "tight"):
            config = SweepConfig(
                model="w1",
                family_range=variant,
                nmax=nmax,
                dmax=dmax,
                field=field_spec,
                extra_degree_tuples=PROBE_TUPLES,
            )
            report = verify_basis_theorem(config)
            sweeps[variant] = report
            probes[variant] = [
                report.entry_for(degrees) for degrees in PROBE_TUPLES
            ]

    return MinimalityReport(
        model=model_name,
        member_rows=member_rows,
        single_rows=single_rows,
        sweeps=sweeps,
        probes=probes,
    )


# -- characteristic contrast ---------------------------------------------------


@dataclass
class ContrastReport:
    """Which equal-parity brackets remain identities of the Laurent model
    over GF(p), p odd. Empirical: the verdicts are measured, not asserted;
    they demonstrate that the family is characteristic-dependent."""

    p: int
    bound: int
    rows: list

    @property
    def any_failed(self) -> bool:
        return any(not row["holds"] for row in self.rows)

    def to_json_dict(self) -> dict:
        return {"p": self.p, "bound": self.bound, "rows": self.rows}


def char_contrast(p: int, bound: int = 4) -> ContrastReport:
    if p == 2 or p < 2:
        raise ValueError("contrast mode needs an odd prime")
    field = Field.gf(p)
    model = u1_model(field)
    rows = []
    for (a, b) in _same_parity_pairs(bound):
        holds = satisfies_multilinear(model, _bracket_poly(field, a, b))
        rows.append({"a": a, "b": b, "member": f"[x1^{a}, x2^{b}]", "holds": holds})
    return ContrastReport(p=p, bound=bound, rows=rows)
