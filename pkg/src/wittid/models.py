"""Concrete Z-graded Lie algebras as sparse structure-constant models.

Every model exposes its homogeneous components as named basis slots per
degree and a bracket given on basis slots; elements are sparse
(degree, slot) -> coefficient maps. Provided models:

* ``u1_model``: basis e_i for all integers i, bracket
  [e_i, e_j] = (j - i) e_{i+j} with the coefficient reduced into the field.
* ``w1_model``: the restriction to degrees >= -1 (components below are zero).
* ``ut3_model(r, s)``: strictly upper triangular 3x3 matrices graded by
  placing E12 at degree r, E23 at degree s and E13 at degree r + s; the
  only nonzero basis bracket is [E12, E23] = E13 (and its opposite with a
  sign). When r + s collides with r or s the spans are merged into one
  two-dimensional component and the model is flagged.
* ``onedim_model(d)``: a one-dimensional abelian algebra concentrated in
  degree d.

Models are immutable after construction and evaluation is pure.
"""

from __future__ import annotations

import itertools
from typing import Dict, Optional

from .fields import Field, Scalar
from .freealg import LiePoly


class ModelElement:
    """Sparse element of a graded model: (degree, slot) -> coefficient."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries: Optional[dict] = None):
        self.field = field
        self.entries = {}
        if entries:
            for key, c in entries.items():
                if not field.is_zero(c):
                    self.entries[key] = c

    @classmethod
    def zero(cls, field: Field) -> "ModelElement":
        return cls(field)

    def __add__(self, other: "ModelElement") -> "ModelElement":
        if self.field != other.field:
            raise ValueError("mixed fields")
        f = self.field
        entries = dict(self.entries)
        for key, c in other.entries.items():
            s = f.add(entries.get(key, f.zero), c)
            if f.is_zero(s):
                entries.pop(key, None)
            else:
                entries[key] = s
        out = ModelElement(f)
        out.entries = entries
        return out

    def scale(self, c: Scalar) -> "ModelElement":
        f = self.field
        if f.is_zero(c):
            return ModelElement.zero(f)
        out = ModelElement(f)
        out.entries = {k: f.mul(c, a) for k, a in self.entries.items()}
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def degrees(self) -> set:
        return {d for d, _ in self.entries}

    def is_homogeneous(self, degree: int) -> bool:
        """Lies in the component of the given degree (zero qualifies)."""
        return all(d == degree for d, _ in self.entries)

    def coeff(self, degree: int, slot: int) -> Scalar:
        return self.entries.get((degree, slot), self.field.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelElement):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __repr__(self):
        return f"ModelElement({self.entries})"


class GradedModel:
    """Base class: a Z-graded Lie algebra given by structure constants."""

    name: str

    def __init__(self, field: Field):
        self.field = field

    def dim(self, degree: int) -> int:
        return len(self.component_slots(degree))

    def component_slots(self, degree: int) -> tuple:
        """Names of the basis slots of the component of this degree."""
        raise NotImplementedError

    def bracket_slots(self, d1: int, i1: int, d2: int, i2: int) -> ModelElement:
        """Bracket of two basis slots."""
        raise NotImplementedError

    def finite_support(self) -> Optional[tuple]:
        """Support degrees when finite, else None."""
        return None

    def basis_element(self, degree: int, slot: int = 0) -> ModelElement:
        slots = self.component_slots(degree)
        if not slots:
            raise ValueError(f"{self.name}: empty component at degree {degree}")
        if not 0 <= slot < len(slots):
            raise ValueError(f"{self.name}: no slot {slot} at degree {degree}")
        return ModelElement(self.field, {(degree, slot): self.field.one})

    def bracket(self, x: ModelElement, y: ModelElement) -> ModelElement:
        f = self.field
        out = ModelElement.zero(f)
        for (d1, i1), c1 in x.entries.items():
            for (d2, i2), c2 in y.entries.items():
                base = self.bracket_slots(d1, i1, d2, i2)
                if not base.is_zero():
                    out = out + base.scale(f.mul(c1, c2))
        return out

    def slot_name(self, degree: int, slot: int) -> str:
        return self.component_slots(degree)[slot]

    def format_element(self, x: ModelElement) -> str:
        if x.is_zero():
            return "0"
        f = self.field
        bits = []
        for (d, i) in sorted(x.entries):
            c = x.entries[(d, i)]
            name = self.slot_name(d, i)
            bits.append(name if c == f.one else f"{f.format_scalar(c)}*{name}")
        return " + ".join(bits)

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, {self.field})"


class WittModel(GradedModel):
    """Derivation algebras with basis e_i and bracket [e_i,e_j] = (j-i)e_{i+j}.

    ``min_degree=None`` keeps all integer degrees (Laurent case);
    ``min_degree=-1`` truncates to the polynomial case, where every
    component below -1 is zero.
    """

    def __init__(self, field: Field, min_degree: Optional[int] = None):
        super().__init__(field)
        self.min_degree = min_degree
        self.name = "u1" if min_degree is None else "w1"

    def component_slots(self, degree: int) -> tuple:
        if self.min_degree is not None and degree < self.min_degree:
            return ()
        return (f"e{degree}",)

    def bracket_slots(self, d1: int, i1: int, d2: int, i2: int) -> ModelElement:
        f = self.field
        coeff = f.from_int(d2 - d1)
        if f.is_zero(coeff):
            return ModelElement.zero(f)
        target = d1 + d2
        if not self.component_slots(target):
            # Cannot happen: within support, products landing below the
            # truncation always carry coefficient zero.
            raise AssertionError(f"bracket left the support at degree {target}")
        return ModelElement(f, {(target, 0): coeff})


class UT3Model(GradedModel):
    """Strictly upper triangular 3x3 matrices with a two-parameter grading."""

    def __init__(self, field: Field, r: int, s: int):
        super().__init__(field)
        if r > s:
            raise ValueError(f"need r <= s, got ({r}, {s})")
        if (r - s) % 2 != 0:
            raise ValueError(f"need r and s of the same parity, got ({r}, {s})")
        self.r = r
        self.s = s
        self.name = f"ut3:{r}:{s}"
        components: Dict[int, list] = {}
        if r == s == 0:
            components[0] = ["E12", "E23", "E13"]
        elif r == s:
            components[r] = ["E12", "E23"]
            components[2 * r] = ["E13"]
        else:
            components[r] = ["E12"]
            components[s] = ["E23"]
            components.setdefault(r + s, []).append("E13")
        self.collision_merged = r != s and (r + s in (r, s))
        self._components = {d: tuple(names) for d, names in components.items()}

    def component_slots(self, degree: int) -> tuple:
        return self._components.get(degree, ())

    def finite_support(self) -> tuple:
        return tuple(sorted(self._components))

    def _locate(self, unit: str) -> tuple:
        for d, names in self._components.items():
            if unit in names:
                return d, names.index(unit)
        raise AssertionError(unit)

    def bracket_slots(self, d1: int, i1: int, d2: int, i2: int) -> ModelElement:
        f = self.field
        a = self._components[d1][i1]
        b = self._components[d2][i2]
        if (a, b) == ("E12", "E23"):
            d, i = self._locate("E13")
            return ModelElement(f, {(d, i): f.one})
        if (a, b) == ("E23", "E12"):
            d, i = self._locate("E13")
            return ModelElement(f, {(d, i): f.neg(f.one)})
        return ModelElement.zero(f)


class OneDimModel(GradedModel):
    """One-dimensional abelian algebra concentrated in a single degree."""

    def __init__(self, field: Field, d: int):
        super().__init__(field)
        self.d = d
        self.name = f"onedim:{d}"

    def component_slots(self, degree: int) -> tuple:
        return ("h",) if degree == self.d else ()

    def finite_support(self) -> tuple:
        return (self.d,)

    def bracket_slots(self, d1: int, i1: int, d2: int, i2: int) -> ModelElement:
        return ModelElement.zero(self.field)


def u1_model(field: Field) -> WittModel:
    """Laurent-derivation algebra: one-dimensional components at every degree."""
    return WittModel(field, min_degree=None)


def w1_model(field: Field) -> WittModel:
    """Polynomial-derivation algebra: components vanish below degree -1."""
    return WittModel(field, min_degree=-1)


def ut3_model(field: Field, r: int, s: int) -> UT3Model:
    return UT3Model(field, r, s)


def onedim_model(field: Field, d: int) -> OneDimModel:
    return OneDimModel(field, d)


def parse_model(text: str, field: Field) -> GradedModel:
    """Parse a model name: ``u1 | w1 | ut3:<r>:<s> | onedim:<d>``."""
    parts = text.strip().lower().split(":")
    if parts == ["u1"]:
        return u1_model(field)
    if parts == ["w1"]:
        return w1_model(field)
    if parts[0] == "ut3" and len(parts) == 3:
        return ut3_model(field, int(parts[1]), int(parts[2]))
    if parts[0] == "onedim" and len(parts) == 2:
        return onedim_model(field, int(parts[1]))
    raise ValueError(f"bad model spec {text!r} (want u1|w1|ut3:<r>:<s>|onedim:<d>)")


def _check_substitution(f: LiePoly, substitution: dict, model: GradedModel):
    for v in sorted(f.variables()):
        if v not in substitution:
            raise ValueError(f"substitution misses variable {v}")
        value = substitution[v]
        if value.field != model.field:
            raise ValueError(f"value for {v} lives over a different field")
        if not value.is_homogeneous(v.degree):
            raise ValueError(
                f"inadmissible substitution: value for {v} is not homogeneous "
                f"of degree {v.degree} (degrees {sorted(value.degrees())})"
            )


def _evaluate_monomial(mono: tuple, substitution: dict, model: GradedModel) -> ModelElement:
    acc = substitution[mono[0]]
    for v in mono[1:]:
        if acc.is_zero():
            return acc
        acc = model.bracket(acc, substitution[v])
    return acc


def evaluate(f: LiePoly, substitution: dict, model: GradedModel) -> ModelElement:
    """Value of f under an admissible substitution, by structure constants."""
    _check_substitution(f, substitution, model)
    out = ModelElement.zero(model.field)
    for mono, c in f.terms.items():
        out = out + _evaluate_monomial(mono, substitution, model).scale(c)
    return out


def satisfies_multilinear(model: GradedModel, f: LiePoly) -> bool:
    """Whether a multilinear polynomial vanishes under every admissible
    substitution, decided on tuples of component basis vectors (which
    suffices by multilinearity)."""
    if not f.is_multilinear():
        raise ValueError("identity check by evaluation is restricted to multilinear input")
    if not f.terms:
        return True
    vars_ = sorted(f.variables())
    per_var = []
    for v in vars_:
        dim = model.dim(v.degree)
        if dim == 0:
            return True  # every admissible value of v is zero
        per_var.append([model.basis_element(v.degree, i) for i in range(dim)])
    for choice in itertools.product(*per_var):
        substitution = dict(zip(vars_, choice))
        if not evaluate(f, substitution, model).is_zero():
            return False
    return True
