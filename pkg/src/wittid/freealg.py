"""The free Z-graded Lie algebra and its multilinear components.

Variables carry a positive index and an integer degree (written
``x3^-1`` for index 3, degree -1). Lie polynomials are stored as formal
combinations of left-normed monomials
``[v0, v1, ..., vk] = [[...[v0, v1], ...], vk]``; arbitrary bracketings
are represented as :class:`Pair` trees. Distinct left-normed monomials
may be proportional as Lie elements (``[x2,x1] = -[x1,x2]``), so
equality of Lie elements is decided through the expansion
``[a, b] -> ab - ba`` into the free associative algebra, a faithful
embedding over any field.

A :class:`MultilinearSpace` is the component of polynomials that are
multilinear in a fixed set of distinct variables. Its dimension is
``(n-1)!`` and it carries the left-normed basis whose monomials all
start with the highest-indexed variable. In the associative expansion of
such a basis monomial, the only word that starts with the leading
variable is the monomial's own letter sequence (coefficient 1), so
coordinates can be read off the words that start with the leading
variable; every conversion is certified by re-expanding against the full
associative image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import factorial
from typing import Iterable, Optional, Sequence, Union

from .fields import Field, Scalar


@dataclass(frozen=True, order=True)
class Var:
    """Graded variable ``x<index>^<degree>``."""

    index: int
    degree: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"variable index must be positive, got {self.index}")

    def __str__(self):
        return f"x{self.index}^{self.degree}"


@dataclass(frozen=True)
class Pair:
    """Bracket node ``[left, right]`` of a tree-shaped Lie element."""

    left: "Tree"
    right: "Tree"


Tree = Union[Var, Pair]
Mono = tuple  # tuple[Var, ...], a left-normed monomial
Word = tuple  # tuple[Var, ...], an associative word


def tree_leaves(t: Tree) -> list:
    if isinstance(t, Var):
        return [t]
    return tree_leaves(t.left) + tree_leaves(t.right)


def mono_to_tree(mono: Sequence[Var]) -> Tree:
    if not mono:
        raise ValueError("empty monomial")
    return reduce(Pair, mono)


class AssocPoly:
    """Element of the free associative algebra on graded variables."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Optional[dict] = None):
        self.field = field
        self.terms = {}
        if terms:
            for word, c in terms.items():
                if not field.is_zero(c):
                    self.terms[word] = c

    @classmethod
    def zero(cls, field: Field) -> "AssocPoly":
        return cls(field)

    @classmethod
    def word(cls, field: Field, word: Sequence[Var], coeff: Optional[Scalar] = None) -> "AssocPoly":
        c = field.one if coeff is None else coeff
        return cls(field, {tuple(word): c})

    def _check_field(self, other: "AssocPoly"):
        if self.field != other.field:
            raise ValueError("mixed fields")

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        self._check_field(other)
        f = self.field
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = f.add(terms.get(w, f.zero), c)
            if f.is_zero(s):
                terms.pop(w, None)
            else:
                terms[w] = s
        out = AssocPoly(f)
        out.terms = terms
        return out

    def __neg__(self) -> "AssocPoly":
        f = self.field
        out = AssocPoly(f)
        out.terms = {w: f.neg(c) for w, c in self.terms.items()}
        return out

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        return self + (-other)

    def __mul__(self, other: "AssocPoly") -> "AssocPoly":
        """Concatenation product."""
        self._check_field(other)
        f = self.field
        terms = {}
        for u, cu in self.terms.items():
            for w, cw in other.terms.items():
                key = u + w
                s = f.add(terms.get(key, f.zero), f.mul(cu, cw))
                if f.is_zero(s):
                    terms.pop(key, None)
                else:
                    terms[key] = s
        out = AssocPoly(f)
        out.terms = terms
        return out

    def scale(self, c: Scalar) -> "AssocPoly":
        f = self.field
        if f.is_zero(c):
            return AssocPoly.zero(f)
        out = AssocPoly(f)
        out.terms = {w: f.mul(c, a) for w, a in self.terms.items()}
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def items_sorted(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (len(kv[0]), tuple((v.index, v.degree) for v in kv[0])),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, AssocPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.items_sorted():
            word = "".join(str(v) for v in w)
            bits.append(word if c == self.field.one else f"{self.field.format_scalar(c)}*{word}")
        return " + ".join(bits)


def _expand_mono(mono: Mono, field: Field) -> dict:
    """Expansion of a left-normed monomial as a word -> coefficient dict."""
    f = field
    acc = {(mono[0],): f.one}
    for v in mono[1:]:
        nxt = {}
        for w, c in acc.items():
            right = w + (v,)
            s = f.add(nxt.get(right, f.zero), c)
            if f.is_zero(s):
                nxt.pop(right, None)
            else:
                nxt[right] = s
            left = (v,) + w
            s = f.add(nxt.get(left, f.zero), f.neg(c))
            if f.is_zero(s):
                nxt.pop(left, None)
            else:
                nxt[left] = s
        acc = nxt
    return acc


def _expand_tree(t: Tree, field: Field) -> AssocPoly:
    if isinstance(t, Var):
        return AssocPoly.word(field, (t,))
    left = _expand_tree(t.left, field)
    right = _expand_tree(t.right, field)
    return left * right - right * left


class LiePoly:
    """Formal combination of left-normed monomials over a field."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Optional[dict] = None):
        self.field = field
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if not field.is_zero(c):
                    self.terms[tuple(mono)] = c

    @classmethod
    def zero(cls, field: Field) -> "LiePoly":
        return cls(field)

    @classmethod
    def monomial(cls, field: Field, variables: Sequence[Var], coeff: Optional[Scalar] = None) -> "LiePoly":
        c = field.one if coeff is None else coeff
        return cls(field, {tuple(variables): c})

    @classmethod
    def variable(cls, field: Field, v: Var) -> "LiePoly":
        return cls.monomial(field, (v,))

    def _check_field(self, other: "LiePoly"):
        if self.field != other.field:
            raise ValueError("mixed fields")

    def __add__(self, other: "LiePoly") -> "LiePoly":
        self._check_field(other)
        f = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(terms.get(m, f.zero), c)
            if f.is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
        out = LiePoly(f)
        out.terms = terms
        return out

    def __neg__(self) -> "LiePoly":
        f = self.field
        out = LiePoly(f)
        out.terms = {m: f.neg(c) for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "LiePoly") -> "LiePoly":
        return self + (-other)

    def scale(self, c: Scalar) -> "LiePoly":
        f = self.field
        if f.is_zero(c):
            return LiePoly.zero(f)
        out = LiePoly(f)
        out.terms = {m: f.mul(c, a) for m, a in self.terms.items()}
        return out

    def expand(self) -> AssocPoly:
        f = self.field
        out = AssocPoly.zero(f)
        for mono, c in self.terms.items():
            part = AssocPoly(f)
            part.terms = dict(_expand_mono(mono, f))
            out = out + part.scale(c)
        return out

    def variables(self) -> set:
        out = set()
        for mono in self.terms:
            out.update(mono)
        return out

    def monomials(self) -> list:
        return sorted(
            self.terms,
            key=lambda m: (len(m), tuple((v.index, v.degree) for v in m)),
        )

    def is_multilinear(self) -> bool:
        """Degree exactly one in each of its variables, in every monomial."""
        if not self.terms:
            return True
        vars_ = self.variables()
        n = len(vars_)
        return all(len(m) == n and set(m) == vars_ for m in self.terms)

    def is_zero(self) -> bool:
        """Zero as a Lie element (decided via the associative expansion)."""
        return self.expand().is_zero()

    def same_terms(self, other: "LiePoly") -> bool:
        """Syntactic equality of the stored combinations."""
        return self.field == other.field and self.terms == other.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LiePoly):
            return NotImplemented
        if self.field != other.field:
            return False
        return self.expand() == other.expand()

    def __repr__(self):
        from .grammar import format_polynomial

        return format_polynomial(self)


def expand_to_associative(x, field: Optional[Field] = None) -> AssocPoly:
    """Image under the bracket expansion ``[a, b] -> ab - ba``.

    Accepts a LiePoly (field attached), a tree, a variable, or a
    left-normed monomial given as a Var tuple (those need the ``field``
    argument). Two Lie elements are equal iff their images are equal.
    """
    if isinstance(x, LiePoly):
        return x.expand()
    if field is None:
        raise ValueError("a field is required to expand a bare tree or monomial")
    if isinstance(x, (Var, Pair)):
        return _expand_tree(x, field)
    if isinstance(x, tuple):
        out = AssocPoly(field)
        out.terms = dict(_expand_mono(x, field))
        return out
    raise TypeError(f"cannot expand {type(x).__name__}")


def zdegree(x) -> int:
    """Z-degree of a variable, tree, monomial, or homogeneous polynomial."""
    if isinstance(x, Var):
        return x.degree
    if isinstance(x, Pair):
        return sum(v.degree for v in tree_leaves(x))
    if isinstance(x, tuple):
        return sum(v.degree for v in x)
    if isinstance(x, (LiePoly, AssocPoly)):
        degrees = {sum(v.degree for v in m) for m in x.terms}
        if not degrees:
            raise ValueError("the zero polynomial has no homogeneous degree")
        if len(degrees) > 1:
            raise ValueError(f"polynomial is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()
    raise TypeError(f"cannot take the degree of {type(x).__name__}")


def is_regular(f: LiePoly) -> bool:
    """True iff every variable of f occurs in every monomial of f."""
    vars_ = f.variables()
    return all(vars_.issubset(set(m)) for m in f.terms)


def apply_ad(f: LiePoly, v: Var, k: int = 1) -> LiePoly:
    """Append v to the right end of every left-normed monomial, k times."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return f
    suffix = (v,) * k
    out = LiePoly(f.field)
    out.terms = {m + suffix: c for m, c in f.terms.items()}
    return out


def multilinearize(
    f: LiePoly, target: Var, fresh_indices: Optional[Sequence[int]] = None
) -> LiePoly:
    """Full polarization of f in the target variable.

    f must be homogeneous of some degree k >= 1 in the target. The k
    occurrence slots are filled with the replacement variables (the
    target itself plus k-1 fresh variables of the same degree) in all k!
    ways and the results are summed. Identifying the fresh variables back
    to the target returns k! copies of f, so over the rationals the
    polarization recovers f up to the distribution count.

    Fresh indices default to max(existing index) + 1, 2, ...; when given
    explicitly they name the occurrences after the first.
    """
    counts = {m: sum(1 for v in m if v == target) for m in f.terms}
    if not counts:
        raise ValueError("cannot multilinearize the zero polynomial")
    k_values = set(counts.values())
    if k_values == {0}:
        raise ValueError(f"target {target} does not occur in the polynomial")
    if len(k_values) != 1:
        raise ValueError(
            f"polynomial is not homogeneous in {target}: occurrence counts {sorted(k_values)}"
        )
    k = k_values.pop()
    if fresh_indices is None:
        start = max(v.index for v in f.variables()) + 1
        fresh_indices = range(start, start + k - 1)
    fresh_indices = tuple(fresh_indices)
    if len(fresh_indices) != k - 1:
        raise ValueError(f"need {k - 1} fresh indices, got {len(fresh_indices)}")
    taken = {v.index for v in f.variables()}
    for i in fresh_indices:
        if i in taken:
            raise ValueError(f"fresh index {i} collides with an existing variable")
    names = (target,) + tuple(Var(i, target.degree) for i in fresh_indices)

    field = f.field
    out = LiePoly.zero(field)
    for mono, c in f.terms.items():
        slots = [i for i, v in enumerate(mono) if v == target]
        for assignment in itertools.permutations(names):
            new = list(mono)
            for slot, name in zip(slots, assignment):
                new[slot] = name
            out = out + LiePoly.monomial(field, new, c)
    return out


class MultilinearSpace:
    """Multilinear component on distinct graded variables, over a field.

    Variables are kept sorted by index; the basis consists of the
    ``(n-1)!`` left-normed monomials that start with the highest-indexed
    variable, enumerated by lexicographic permutation of the rest.
    """

    def __init__(self, variables: Iterable[Var], field: Field):
        vs = sorted(variables, key=lambda v: v.index)
        if not vs:
            raise ValueError("a multilinear space needs at least one variable")
        indices = [v.index for v in vs]
        if len(set(indices)) != len(indices):
            raise ValueError(f"variable indices must be distinct, got {indices}")
        self.field = field
        self.variables = tuple(vs)
        self.n = len(vs)
        self._basis = None
        self._word_id = None
        self._lead_word_ids = None
        self._basis_masks = None       # GF(2): int masks over word ids
        self._basis_expansions = None  # generic: word -> coeff dicts
        self._gf2 = field.kind == "prime" and field.p == 2

    @classmethod
    def for_degrees(cls, degrees: Sequence[int], field: Field) -> "MultilinearSpace":
        return cls((Var(i + 1, d) for i, d in enumerate(degrees)), field)

    @property
    def degrees(self) -> tuple:
        return tuple(v.degree for v in self.variables)

    @property
    def dim(self) -> int:
        return factorial(self.n - 1)

    @property
    def leading(self) -> Var:
        return self.variables[-1]

    @property
    def basis(self) -> list:
        """The left-normed basis monomials, in lexicographic order."""
        if self._basis is None:
            lead, rest = self.variables[-1], self.variables[:-1]
            self._basis = [
                (lead,) + perm for perm in itertools.permutations(rest)
            ]
        return self._basis

    def _ensure_tables(self):
        if self._word_id is not None:
            return
        self._word_id = {
            word: i for i, word in enumerate(itertools.permutations(self.variables))
        }
        lead, rest = self.variables[-1], self.variables[:-1]
        self._lead_word_ids = [
            self._word_id[(lead,) + perm] for perm in itertools.permutations(rest)
        ]
        expansions = [_expand_mono(m, self.field) for m in self.basis]
        if self._gf2:
            masks = []
            for exp in expansions:
                mask = 0
                for word in exp:
                    mask |= 1 << self._word_id[word]
                masks.append(mask)
            self._basis_masks = masks
        else:
            self._basis_expansions = expansions

    def _validate_member(self, x):
        want = set(self.variables)
        if isinstance(x, LiePoly):
            if x.field != self.field:
                raise ValueError("polynomial field does not match the space")
            for mono in x.terms:
                if len(mono) != self.n or set(mono) != want:
                    raise ValueError(
                        f"monomial {mono} is not multilinear in the space variables"
                    )
        else:
            leaves = tree_leaves(x) if isinstance(x, (Var, Pair)) else list(x)
            if len(leaves) != self.n or set(leaves) != want:
                raise ValueError(
                    "input is not multilinear in the space variables "
                    f"(leaves {[str(v) for v in leaves]})"
                )

    def _expansion_dict(self, x) -> dict:
        if isinstance(x, LiePoly):
            return x.expand().terms
        if isinstance(x, (Var, Pair)):
            return _expand_tree(x, self.field).terms
        return _expand_mono(tuple(x), self.field)

    def coordinates(self, x, certify: bool = True) -> tuple:
        """Coordinates of a multilinear element over the left-normed basis.

        Read off the words that start with the leading variable, then
        (by default) certified by checking that the recombination has the
        same associative expansion as the input.
        """
        self._validate_member(x)
        self._ensure_tables()
        f = self.field
        exp = self._expansion_dict(x)
        if self._gf2:
            mask = 0
            for word in exp:
                mask |= 1 << self._word_id[word]
            coords = tuple(
                (mask >> wid) & 1 for wid in self._lead_word_ids
            )
            if certify:
                check = mask
                for c, row in zip(coords, self._basis_masks):
                    if c:
                        check ^= row
                if check != 0:
                    raise AssertionError("certification failed: not a Lie element?")
            return coords
        coords = []
        lead, rest = self.variables[-1], self.variables[:-1]
        for perm in itertools.permutations(rest):
            coords.append(exp.get((lead,) + perm, f.zero))
        coords = tuple(coords)
        if certify:
            acc = {}
            for c, rowexp in zip(coords, self._basis_expansions):
                if f.is_zero(c):
                    continue
                for word, a in rowexp.items():
                    s = f.add(acc.get(word, f.zero), f.mul(c, a))
                    if f.is_zero(s):
                        acc.pop(word, None)
                    else:
                        acc[word] = s
            if acc != exp:
                raise AssertionError("certification failed: not a Lie element?")
        return coords

    def poly_from_coords(self, coords: Sequence[Scalar]) -> LiePoly:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        f = self.field
        return LiePoly(f, dict(zip(self.basis, coords)))

    def __repr__(self):
        vars_ = ", ".join(str(v) for v in self.variables)
        return f"MultilinearSpace({vars_}; {self.field})"


def leftnormed_basis(space: MultilinearSpace) -> list:
    """The (n-1)! left-normed basis monomials of the space."""
    return list(space.basis)


def leftnormed_coordinates(x, space: MultilinearSpace, certify: bool = True) -> tuple:
    """Coordinate vector of a multilinear element over the space basis."""
    return space.coordinates(x, certify=certify)
