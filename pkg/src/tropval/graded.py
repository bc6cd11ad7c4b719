"""Monoid-graded structure-constant algebras and graded valuations.

A `GradedAlgebra` is a vector space with a basis indexed by pairs
``(grade, i)``, where grades are tuples of non-negative integers added
componentwise, together with a finite multiplication table.  The table is
stored symmetrically (the product is commutative) and is *partial*: pairs
outside the truncation window are simply absent, and every universal claim
made by the checkers is "over the defined products".  Grading additivity is
not assumed — a product of two homogeneous elements may spread over several
grades; that spread is exactly what the lower-triangularity and
total-order checkers measure.

Values of graded valuations are rationals-or-bottom; orderings of grades
use full lexicographic tuples of rational functionals, since a single
rational row cannot totally order a higher-rank monoid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve_linear
from .trop import BOTTOM, TropicalValue, trop_add, trop_mul

Grade = tuple[int, ...]
BasisRef = tuple[Grade, int]
Element = dict  # BasisRef -> Fraction


class TruncationError(ValueError):
    """A product left the window where structure constants are defined."""


class AssociativityError(ValueError):
    def __init__(self, triple):
        super().__init__(f"multiplication is not associative on {triple}")
        self.triple = triple


class NotLowerTriangularError(ValueError):
    pass


def _pair_key(b1: BasisRef, b2: BasisRef) -> tuple[BasisRef, BasisRef]:
    return (b1, b2) if b1 <= b2 else (b2, b1)


def grade_sum(g1: Grade, g2: Grade) -> Grade:
    return tuple(a + b for a, b in zip(g1, g2))


class GradedAlgebra:
    """Commutative algebra given by grading components and structure constants."""

    def __init__(self, monoid_dim: int, components: dict, structure: dict,
                 truncation: int, validate: bool = True):
        self.monoid_dim = int(monoid_dim)
        self.components = {}
        for grade, size in components.items():
            g = tuple(int(x) for x in grade)
            if len(g) != self.monoid_dim or any(x < 0 for x in g):
                raise ValueError(f"bad grade {grade}")
            if size > 0:
                self.components[g] = int(size)
        self.truncation = int(truncation)
        self.structure = {}
        for (b1, b2), expansion in structure.items():
            self._check_ref(b1)
            self._check_ref(b2)
            clean = tuple(sorted(
                ((tuple(int(x) for x in g), int(k)), Fraction(c))
                for (g, k), c in expansion if Fraction(c) != 0
            ))
            for target, _ in clean:
                self._check_ref(target)
            self.structure[_pair_key(b1, b2)] = clean
        if validate:
            self._validate_associativity()

    def _check_ref(self, ref: BasisRef) -> None:
        grade, idx = ref
        size = self.components.get(tuple(grade))
        if size is None or not (0 <= idx < size):
            raise ValueError(f"unknown basis element {ref}")

    def basis(self) -> list[BasisRef]:
        out = []
        for grade in sorted(self.components):
            out.extend((grade, i) for i in range(self.components[grade]))
        return out

    # -- multiplication ----------------------------------------------------

    def basis_product(self, b1: BasisRef, b2: BasisRef):
        """Expansion of a basis-pair product, or None when undefined."""
        return self.structure.get(_pair_key(b1, b2))

    def multiply(self, e1: Element, e2: Element) -> Element:
        out: Element = {}
        for b1, c1 in e1.items():
            for b2, c2 in e2.items():
                expansion = self.basis_product(b1, b2)
                if expansion is None:
                    raise TruncationError(
                        f"product {b1} * {b2} is outside the structure table")
                for target, coeff in expansion:
                    s = out.get(target, Fraction(0)) + c1 * c2 * coeff
                    if s == 0:
                        out.pop(target, None)
                    else:
                        out[target] = s
        return out

    def basis_element(self, ref: BasisRef) -> Element:
        self._check_ref(ref)
        return {ref: Fraction(1)}

    # -- validation --------------------------------------------------------

    def _expansion_times_basis(self, expansion, b3: BasisRef):
        out: Element = {}
        for target, coeff in expansion:
            inner = self.basis_product(target, b3)
            if inner is None:
                return None
            for t2, c2 in inner:
                s = out.get(t2, Fraction(0)) + coeff * c2
                if s == 0:
                    out.pop(t2, None)
                else:
                    out[t2] = s
        return out

    def _partners(self) -> dict:
        partners: dict[BasisRef, set] = {}
        for b1, b2 in self.structure:
            partners.setdefault(b1, set()).add(b2)
            partners.setdefault(b2, set()).add(b1)
        return partners

    def _validate_associativity(self) -> None:
        # Commutativity is built into the symmetric table, so the axiom on
        # all ordered triples reduces to (ab)c = (bc)a = (ac)b per multiset.
        # Only triples whose three pairwise products are defined can be
        # checked; candidates come from partner-set intersections rather
        # than a scan over all basis triples.
        partners = self._partners()
        for b1, b2 in sorted(self.structure):
            common = partners.get(b1, set()) & partners.get(b2, set())
            e12 = self.structure[(b1, b2)]
            for b3 in sorted(c for c in common if c >= b2):
                e23 = self.basis_product(b2, b3)
                e13 = self.basis_product(b1, b3)
                p12_3 = self._expansion_times_basis(e12, b3)
                p23_1 = self._expansion_times_basis(e23, b1)
                p13_2 = self._expansion_times_basis(e13, b2)
                if p12_3 is None or p23_1 is None or p13_2 is None:
                    continue
                if p12_3 != p23_1 or p12_3 != p13_2:
                    raise AssociativityError((b1, b2, b3))

    def key(self) -> tuple:
        return (
            self.monoid_dim,
            tuple(sorted(self.components.items())),
            tuple(sorted(self.structure.items())),
        )


def element_key(element: Element) -> tuple:
    return tuple(sorted(element.items()))


def element_add(a: Element, b: Element) -> Element:
    out = dict(a)
    for ref, c in b.items():
        s = out.get(ref, Fraction(0)) + c
        if s == 0:
            out.pop(ref, None)
        else:
            out[ref] = s
    return out


def element_scale(a: Element, c: Fraction | int) -> Element:
    c = Fraction(c)
    if c == 0:
        return {}
    return {ref: c * v for ref, v in a.items()}


@dataclass(frozen=True)
class LexFunctional:
    """Rational linear functionals on grades, compared lexicographically.

    The first row is the scalar value of a graded valuation; further rows
    only break ties, which is how total orders on higher-rank monoids are
    realized with exact arithmetic.
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(
            tuple(Fraction(x) for x in row) for row in self.rows
        ))
        if not self.rows:
            raise ValueError("a functional needs at least one row")

    @classmethod
    def single(cls, row) -> "LexFunctional":
        return cls((tuple(row),))

    @property
    def dim(self) -> int:
        return len(self.rows[0])

    def value(self, grade: Grade) -> tuple[Fraction, ...]:
        return tuple(
            sum((r * g for r, g in zip(row, grade)), Fraction(0))
            for row in self.rows
        )

    def first(self, grade: Grade) -> Fraction:
        row = self.rows[0]
        return sum((r * g for r, g in zip(row, grade)), Fraction(0))

    def separates(self, grades) -> tuple[Grade, Grade] | None:
        """Return a colliding pair of distinct grades, or None when injective."""
        seen: dict[tuple, Grade] = {}
        for g in sorted(grades):
            key = self.value(g)
            if key in seen and seen[key] != g:
                return (seen[key], g)
            seen.setdefault(key, g)
        return None


def tuple_sum(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class GradedValuation:
    """A functional on grades plus finitely many inhomogeneous overrides."""

    functional: LexFunctional
    overrides: tuple = ()

    @classmethod
    def build(cls, algebra: GradedAlgebra, functional: LexFunctional,
              overrides: dict | None = None) -> "GradedValuation":
        items = []
        for element, value in (overrides or {}).items():
            if isinstance(element, dict):
                element = element_key(element)
            grades = {ref[0] for ref, _ in element}
            if len(grades) <= 1:
                raise ValueError(
                    "overrides are for inhomogeneous elements; homogeneous "
                    "values are fixed by the functional")
            cap = max(functional.first(g) for g in grades)
            if not isinstance(value, TropicalValue):
                value = TropicalValue(value)
            if not value.is_bottom and value.value > cap:
                raise ValueError(
                    f"override value {value.to_str()} exceeds the component "
                    f"maximum {cap}")
            items.append((element, value))
        return cls(functional, tuple(sorted(items, key=lambda kv: kv[0])))

    def override_value(self, element: Element) -> TropicalValue | None:
        key = element_key(element)
        for stored, value in self.overrides:
            if stored == key:
                return value
        return None


def graded_value(A: GradedAlgebra, gv: GradedValuation,
                 element: Element) -> TropicalValue:
    """Value of an element: override if present, else max over its grades."""
    if not element:
        return BOTTOM
    hit = gv.override_value(element)
    if hit is not None:
        return hit
    return TropicalValue(max(gv.functional.first(ref[0]) for ref in element))


def value_lex(A: GradedAlgebra, functional: LexFunctional,
              element: Element) -> tuple[Fraction, ...] | None:
    """Lex-tuple value (None for zero), for totally ordered codomains."""
    if not element:
        return None
    return max(functional.value(ref[0]) for ref in element)


# -- samplers ------------------------------------------------------------------


class _PairSampler:
    """Seedable source of element pairs whose product is defined."""

    def __init__(self, A: GradedAlgebra, rng: random.Random):
        self.A = A
        self.rng = rng
        self.keys = sorted(A.structure)
        self.partners = A._partners()
        self.sorted_basis = sorted(self.partners)

    def _pick_compatible(self, opposite: list[BasisRef]) -> BasisRef | None:
        for _ in range(12):
            b = self.rng.choice(self.sorted_basis)
            if all(t in self.partners[b] for t in opposite):
                return b
        return None

    def _coeff(self) -> Fraction:
        return Fraction(self.rng.choice((-3, -2, -1, 1, 2, 3)))

    def sample(self) -> tuple[Element, Element]:
        if not self.keys:
            return {}, {}
        x, y = self.rng.choice(self.keys)
        a: Element = {x: self._coeff()}
        if self.rng.random() < 0.7:
            extra = self._pick_compatible([y])
            if extra is not None:
                a.setdefault(extra, self._coeff())
        b: Element = {y: self._coeff()}
        if self.rng.random() < 0.7:
            extra = self._pick_compatible(sorted(a))
            if extra is not None:
                b.setdefault(extra, self._coeff())
        return a, b


# -- axiom checks ---------------------------------------------------------------


@dataclass(frozen=True)
class GradedCheckReport:
    mode: str  # "graded" | "full"
    pairs_checked: int
    multiplicativity_failures: tuple
    subadditivity_failures: tuple

    @property
    def verdict(self) -> str:
        if self.multiplicativity_failures or self.subadditivity_failures:
            return "fails"
        return "passes"


def _homogeneous_pair_failures(A: GradedAlgebra, gv: GradedValuation) -> list:
    failures = []
    for (b1, b2), expansion in sorted(A.structure.items()):
        product = {target: coeff for target, coeff in expansion}
        lhs = graded_value(A, gv, product)
        rhs = trop_mul(graded_value(A, gv, A.basis_element(b1)),
                       graded_value(A, gv, A.basis_element(b2)))
        if lhs != rhs:
            failures.append((A.basis_element(b1), A.basis_element(b2), lhs, rhs))
    return failures


def _subadditivity_failures(A: GradedAlgebra, gv: GradedValuation,
                            sampler: "_PairSampler", n_samples: int) -> list:
    failures = []
    for _ in range(n_samples):
        a, b = sampler.sample()
        if not a or not b:
            continue
        lhs = graded_value(A, gv, element_add(a, b))
        cap = trop_add(graded_value(A, gv, a), graded_value(A, gv, b))
        if cap < lhs:
            failures.append((a, b, lhs, cap))
    return failures


def check_graded_axioms(A: GradedAlgebra, gv: GradedValuation,
                        seed: int = 0, n_samples: int = 100) -> GradedCheckReport:
    """Graded-valuation axioms: multiplicativity on homogeneous pairs only.

    Homogeneous basis pairs are checked exhaustively over the defined
    products; subadditivity is sampled on inhomogeneous combinations.
    """
    if not graded_value(A, gv, {}).is_bottom:
        raise AssertionError("the zero element must have value -inf")
    sampler = _PairSampler(A, random.Random(seed))
    mult = _homogeneous_pair_failures(A, gv)
    subadd = _subadditivity_failures(A, gv, sampler, n_samples)
    return GradedCheckReport("graded", len(A.structure) + n_samples,
                             tuple(mult), tuple(subadd))


def _override_factor_probe(A: GradedAlgebra, gv: GradedValuation) -> list:
    """Factor each override target as (basis element) * (solved element).

    Solving a * x = k is linear in x once a is fixed, so every override is
    probed deterministically against every basis element.
    """
    failures = []
    basis = A.basis()
    for key, _ in gv.overrides:
        target = {ref: c for ref, c in key}
        for a_ref in basis:
            candidates = [b for b in basis if A.basis_product(a_ref, b) is not None]
            if not candidates:
                continue
            columns = []
            for b in candidates:
                expansion = A.basis_product(a_ref, b)
                columns.append({t: c for t, c in expansion})
            solution = solve_linear(columns, target)
            if solution is None:
                continue
            factor = {b: c for b, c in zip(candidates, solution) if c != 0}
            if not factor:
                continue
            a_el = A.basis_element(a_ref)
            lhs = graded_value(A, gv, target)
            rhs = trop_mul(graded_value(A, gv, a_el), graded_value(A, gv, factor))
            if lhs != rhs:
                failures.append((a_el, factor, lhs, rhs))
    return failures


def check_valuation_axioms(A: GradedAlgebra, gv: GradedValuation,
                           seed: int = 0, n_samples: int = 100) -> GradedCheckReport:
    """Full valuation axioms: multiplicativity on inhomogeneous pairs too.

    Runs the graded check, then probes every override for factorizations
    (where inhomogeneous multiplicativity can break), then samples random
    inhomogeneous pairs.
    """
    sampler = _PairSampler(A, random.Random(seed))
    mult = _homogeneous_pair_failures(A, gv)
    mult.extend(_override_factor_probe(A, gv))
    for _ in range(n_samples):
        a, b = sampler.sample()
        if not a or not b:
            continue
        try:
            product = A.multiply(a, b)
        except TruncationError:
            continue
        lhs = graded_value(A, gv, product)
        rhs = trop_mul(graded_value(A, gv, a), graded_value(A, gv, b))
        if lhs != rhs:
            mult.append((a, b, lhs, rhs))
    subadd = _subadditivity_failures(A, gv, sampler, n_samples)
    return GradedCheckReport("full", len(A.structure) + 2 * n_samples,
                             tuple(mult), tuple(subadd))


def check_lower_triangular(A: GradedAlgebra, h: LexFunctional):
    """Every product grade must weigh at most the sum of the factor grades."""
    for (b1, b2), expansion in sorted(A.structure.items()):
        cap = tuple_sum(h.value(b1[0]), h.value(b2[0]))
        for (g3, k), _ in expansion:
            if h.value(g3) > cap:
                return False, (b1, b2, (g3, k))
    return True, None


@dataclass(frozen=True)
class MonoidTheoremReport:
    cartan_missing: tuple
    order_violations: tuple
    grade_collisions: tuple
    conclusion_failures: tuple
    samples: int

    @property
    def hypotheses_hold(self) -> bool:
        return not (self.cartan_missing or self.order_violations
                    or self.grade_collisions)

    @property
    def conclusion_holds(self) -> bool:
        return not self.conclusion_failures


def check_monoid_theorem(A: GradedAlgebra, w: LexFunctional,
                         seed: int = 0, n_samples: int = 200) -> MonoidTheoremReport:
    """Hypotheses and conclusion of the top-component multiplicativity theorem.

    Hypotheses: every defined basis-pair product has a nonzero component in
    the grade sum, that component is strictly top under w, and w totally
    orders the grades.  Conclusion, sampled on inhomogeneous pairs: the
    lex-tuple value is fully multiplicative.  Conclusion failures would
    contradict the theorem and are reported separately.
    """
    cartan_missing = []
    order_violations = []
    for (b1, b2), expansion in sorted(A.structure.items()):
        top_grade = grade_sum(b1[0], b2[0])
        if not any(t[0] == top_grade for t, c in expansion):
            cartan_missing.append((b1, b2, top_grade))
        top_value = w.value(top_grade)
        for (g3, k), _ in expansion:
            if g3 != top_grade and w.value(g3) >= top_value:
                order_violations.append((b1, b2, (g3, k)))
    collision = w.separates(A.components)
    collisions = (collision,) if collision else ()
    sampler = _PairSampler(A, random.Random(seed))
    conclusion_failures = []
    checked = 0
    for _ in range(n_samples):
        a, b = sampler.sample()
        if not a or not b:
            continue
        try:
            product = A.multiply(a, b)
        except TruncationError:
            continue
        checked += 1
        lhs = value_lex(A, w, product)
        va, vb = value_lex(A, w, a), value_lex(A, w, b)
        rhs = tuple_sum(va, vb) if va is not None and vb is not None else None
        if lhs != rhs:
            conclusion_failures.append((a, b, lhs, rhs))
    return MonoidTheoremReport(tuple(cartan_missing), tuple(order_violations),
                               collisions, tuple(conclusion_failures), checked)


def associated_graded(A: GradedAlgebra, h: LexFunctional) -> GradedAlgebra:
    """Keep only the h-maximal grades of every product (ties all kept)."""
    ok, witness = check_lower_triangular(A, h)
    if not ok:
        raise NotLowerTriangularError(
            f"multiplication is not lower-triangular for this functional: {witness}")
    structure = {}
    for pair, expansion in A.structure.items():
        if not expansion:
            structure[pair] = ()
            continue
        top = max(h.value(t[0]) for t, _ in expansion)
        structure[pair] = tuple(
            (t, c) for t, c in expansion if h.value(t[0]) == top
        )
    return GradedAlgebra(A.monoid_dim, A.components, structure, A.truncation)


def zero_divisor_search(A: GradedAlgebra, bound: int):
    """Search basis pairs with vanishing product; None means none found.

    This is refutation evidence, not a domain proof; it is complete for
    algebras whose graded components are at most one-dimensional.
    """
    for (b1, b2), expansion in sorted(A.structure.items()):
        if sum(b1[0]) > bound or sum(b2[0]) > bound:
            continue
        if not expansion:
            return (b1, b2)
    return None


# -- builders -------------------------------------------------------------------


def monomial_poly_ring(n_vars: int, truncation: int) -> GradedAlgebra:
    """Polynomial ring graded by its own monomials (one-dimensional pieces)."""
    grades = []

    def extend(prefix, remaining, budget):
        if remaining == 0:
            grades.append(tuple(prefix))
            return
        for v in range(budget + 1):
            extend(prefix + [v], remaining - 1, budget - v)

    extend([], n_vars, truncation)
    components = {g: 1 for g in grades}
    structure = {}
    for g1 in grades:
        for g2 in grades:
            if g1 <= g2 and sum(g1) + sum(g2) <= truncation:
                structure[((g1, 0), (g2, 0))] = (((grade_sum(g1, g2), 0), Fraction(1)),)
    return GradedAlgebra(n_vars, components, structure, truncation)


def coarsen(A: GradedAlgebra, matrix: tuple[tuple[int, ...], ...]) -> GradedAlgebra:
    """Push the grading through an integer matrix (rows = new coordinates)."""
    def push(grade: Grade) -> Grade:
        out = tuple(sum(r * g for r, g in zip(row, grade)) for row in matrix)
        if any(x < 0 for x in out):
            raise ValueError("coarsening matrix must keep grades non-negative")
        return out

    offsets: dict[BasisRef, BasisRef] = {}
    components: dict[Grade, int] = {}
    for ref in A.basis():
        new_grade = push(ref[0])
        idx = components.get(new_grade, 0)
        components[new_grade] = idx + 1
        offsets[ref] = (new_grade, idx)
    structure = {}
    for (b1, b2), expansion in A.structure.items():
        new_expansion = tuple(sorted(
            (offsets[t], c) for t, c in expansion
        ))
        structure[_pair_key(offsets[b1], offsets[b2])] = new_expansion
    return GradedAlgebra(len(matrix), components, structure, A.truncation)
