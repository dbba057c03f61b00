"""Star configurations of points from general lines in the projective plane.

A configuration X(l) is built from l linear forms, any three of which are
linearly independent.  It carries the C(l,2) pairwise intersection points
and the l "hat products" (product of all forms but one) that generate the
ideal of the point set.
"""

from __future__ import annotations

import itertools
import json
import random
from typing import Sequence

from .fields import Element, Field, check_same_field
from .matrices import ExactMatrix
from .polynomials import HomogeneousPoly, monomials_of_degree, parse_poly, poly_product

RETRY_BUDGET = 100


class GenericityError(ValueError):
    """A set of forms violates the general-position requirement."""


class LinearForm:
    """A nonzero linear form, kept as its coefficient vector."""

    __slots__ = ("field", "coefficients")

    def __init__(self, field: Field, coefficients: Sequence[Element]):
        if all(field.is_zero(c) for c in coefficients):
            raise ValueError("zero linear form")
        self.field = field
        self.coefficients = tuple(coefficients)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def poly(self) -> HomogeneousPoly:
        return HomogeneousPoly.from_coefficients(self.field, self.nvars,
                                                 self.coefficients)

    def evaluate(self, point: "ProjectivePoint") -> Element:
        f = self.field
        total = f.zero()
        for c, x in zip(self.coefficients, point.coordinates):
            total = f.add(total, f.mul(c, x))
        return total

    @classmethod
    def parse(cls, text: str, field: Field, nvars: int = 3) -> "LinearForm":
        p = parse_poly(text, field, nvars, degree=1)
        coeffs = [p.terms.get(tuple(1 if j == i else 0 for j in range(nvars)),
                              field.zero())
                  for i in range(nvars)]
        return cls(field, coeffs)

    def __eq__(self, other):
        return (isinstance(other, LinearForm) and self.field == other.field
                and self.coefficients == other.coefficients)

    def __repr__(self):
        return f"LinearForm({self.poly()})"


class ProjectivePoint:
    """Point with the canonical representative: last nonzero coordinate 1."""

    __slots__ = ("field", "coordinates")

    def __init__(self, field: Field, coordinates: Sequence[Element]):
        coords = list(coordinates)
        last = None
        for i in range(len(coords) - 1, -1, -1):
            if not field.is_zero(coords[i]):
                last = i
                break
        if last is None:
            raise ValueError("all-zero coordinate vector")
        inv = field.inv(coords[last])
        self.field = field
        self.coordinates = tuple(field.mul(c, inv) for c in coords)

    def __eq__(self, other):
        return (isinstance(other, ProjectivePoint) and self.field == other.field
                and self.coordinates == other.coordinates)

    def __hash__(self):
        return hash((self.field, self.coordinates))

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coordinates) + ")"


def det3(field: Field, rows: Sequence[Sequence[Element]]) -> Element:
    (a, b, c), (d, e, f_), (g, h, i) = rows
    m = field.mul
    pos = field.add(field.add(m(a, m(e, i)), m(b, m(f_, g))), m(c, m(d, h)))
    neg = field.add(field.add(m(c, m(e, g)), m(a, m(f_, h))), m(b, m(d, i)))
    return field.sub(pos, neg)


def is_general(forms: Sequence[LinearForm]) -> bool:
    """True iff every 3-subset of coefficient vectors is independent.

    With exactly two forms this degenerates to pairwise independence.
    """
    return _find_degenerate_triple(forms) is None


def _cross(field: Field, a: Sequence[Element], b: Sequence[Element]) -> list[Element]:
    m, s = field.mul, field.sub
    return [s(m(a[1], b[2]), m(a[2], b[1])),
            s(m(a[2], b[0]), m(a[0], b[2])),
            s(m(a[0], b[1]), m(a[1], b[0]))]


def _find_degenerate_triple(forms: Sequence[LinearForm]):
    if len(forms) < 2:
        raise ValueError("need at least two forms")
    field = forms[0].field
    for g in forms[1:]:
        check_same_field(field, g.field)
    if len(forms) == 2:
        cross = _cross(field, forms[0].coefficients, forms[1].coefficients)
        return None if any(not field.is_zero(c) for c in cross) else (0, 1)
    for i, j, k in itertools.combinations(range(len(forms)), 3):
        d = det3(field, [forms[i].coefficients, forms[j].coefficients,
                         forms[k].coefficients])
        if field.is_zero(d):
            return (i, j, k)
    return None


def intersection_point(a: LinearForm, b: LinearForm) -> ProjectivePoint:
    """The point of the two lines: cross product of coefficient vectors."""
    check_same_field(a.field, b.field)
    cross = _cross(a.field, a.coefficients, b.coefficients)
    if all(a.field.is_zero(c) for c in cross):
        raise GenericityError("forms are linearly dependent")
    return ProjectivePoint(a.field, cross)


class StarConfiguration:
    """l general lines, their C(l,2) intersection points, and the hat
    products generating the ideal of the point set."""

    def __init__(self, forms: Sequence[LinearForm],
                 points: dict[tuple[int, int], ProjectivePoint],
                 hat_products: list[HomogeneousPoly]):
        self.forms = list(forms)
        self.l = len(forms)
        self.field = forms[0].field
        self.points = points          # keyed by 1-based (i, j), i < j
        self.hat_products = hat_products

    def point_list(self) -> list[ProjectivePoint]:
        """Points in deterministic (i, j) order."""
        return [self.points[key] for key in sorted(self.points)]

    def point_keys(self) -> list[tuple[int, int]]:
        return sorted(self.points)

    def hat_product_without(self, *skip: int) -> HomogeneousPoly:
        """Product of all forms L_h with 1-based h outside `skip`."""
        field = self.field
        factors = [f.poly() for h, f in enumerate(self.forms, start=1)
                   if h not in skip]
        return poly_product(factors, field, 3)

    def to_json(self) -> dict:
        return {
            **self.field.descriptor(),
            "l": self.l,
            "forms": [[str(c) for c in f.coefficients] for f in self.forms],
            "points": {f"{i},{j}": [str(c) for c in p.coordinates]
                       for (i, j), p in sorted(self.points.items())},
        }

    def __repr__(self):
        return f"StarConfiguration(l={self.l}, field={self.field!r})"


def build_star(forms: Sequence[LinearForm]) -> StarConfiguration:
    """Validate genericity, then compute all points and hat products."""
    bad = _find_degenerate_triple(forms)
    if bad is not None:
        labels = ", ".join(f"L{i + 1}" for i in bad)
        raise GenericityError(f"forms {labels} are linearly dependent")
    l = len(forms)
    points = {}
    if l == 2:
        points[(1, 2)] = intersection_point(forms[0], forms[1])
    else:
        for i, j in itertools.combinations(range(1, l + 1), 2):
            points[(i, j)] = intersection_point(forms[i - 1], forms[j - 1])
    field = forms[0].field
    hats = []
    for i in range(1, l + 1):
        factors = [f.poly() for h, f in enumerate(forms, start=1) if h != i]
        hats.append(poly_product(factors, field, 3))
    return StarConfiguration(forms, points, hats)


def random_general_forms(l: int, seed: int, field: Field,
                         nvars: int = 3,
                         independence: int = 3) -> list[LinearForm]:
    """Deterministic-in-seed sample of l forms in general position.

    `independence` is the subset size required to be linearly independent
    (3 for lines in the plane, n+1 for hyperplanes in P^n).
    """
    if l < 2:
        raise ValueError("need l >= 2")
    rng = random.Random(seed)
    for _ in range(RETRY_BUDGET):
        forms = []
        for _ in range(l):
            while True:
                coeffs = [field.random(rng) for _ in range(nvars)]
                if any(not field.is_zero(c) for c in coeffs):
                    break
            forms.append(LinearForm(field, coeffs))
        if nvars == 3 and independence == 3:
            ok = is_general(forms)
        else:
            ok = _is_general_nd(forms, independence)
        if ok:
            return forms
    raise GenericityError(f"no general forms after {RETRY_BUDGET} draws "
                          "(generator looks broken)")


def _is_general_nd(forms: Sequence[LinearForm], k: int) -> bool:
    """Every k-subset of coefficient vectors has full rank k."""
    field = forms[0].field
    if len(forms) < k:
        subset_sizes = [len(forms)]
    else:
        subset_sizes = [k]
    for size in subset_sizes:
        for subset in itertools.combinations(forms, size):
            m = ExactMatrix(field, [f.coefficients for f in subset])
            if m.rank() < size:
                return False
    return True


def parse_forms(text: str, field: Field, nvars: int = 3) -> list[LinearForm]:
    """One form per line, in plain polynomial notation; blank lines skipped."""
    forms = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            forms.append(LinearForm.parse(line, field, nvars))
    return forms


def hilbert_function(star: StarConfiguration, t: int) -> int:
    """HF(X(l), t) as the rank of the degree-t evaluation matrix.

    Rows are the configuration points, columns the degree-t monomials.
    The closed formula min{C(t+2,2), C(l,2)} is used only as a test oracle.
    """
    if t < 0:
        raise ValueError("degree must be nonnegative")
    basis = monomials_of_degree(3, t)
    field = star.field
    rows = []
    for p in star.point_list():
        coords = p.coordinates
        row = []
        for mono in basis:
            val = field.one()
            for x, e in zip(coords, mono):
                for _ in range(e):
                    val = field.mul(val, x)
            row.append(val)
        rows.append(row)
    return ExactMatrix(field, rows, ncols=len(basis)).rank()


def configuration_to_json_str(star: StarConfiguration) -> str:
    return json.dumps(star.to_json(), indent=2, sort_keys=True)
