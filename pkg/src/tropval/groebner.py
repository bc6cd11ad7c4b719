"""Weight-refined monomial orders, Buchberger's algorithm, and initial ideals.

Orders compare a rational weight dot product first and break ties with
graded-reverse-lex or lex, so they are total and multiplicative.  A
weight-refined order is global (a well-order on monomials) exactly when all
weights are non-negative; with negative weights, division and Buchberger are
only guaranteed to terminate on homogeneous input.  `initial_ideal` therefore
routes every weight vector, including ones with negative entries, through a
homogenization pipeline:

  1. homogenize the generators with a fresh last variable and compute a
     graded-reverse-lex basis,
  2. strip the common powers of the homogenizing variable (this saturates,
     yielding a basis of the homogenized ideal),
  3. recompute a basis for the weight-refined order, all input homogeneous,
  4. take top-weight forms and set the homogenizing variable to 1.

The result generates the initial ideal of the original ideal for the given
weights.  Monomial containment is decided by saturating at the product of
all variables via the extra-variable trick.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import (
    ExponentVector,
    Polynomial,
    Presentation,
    RingContext,
    WeightVector,
)

GREVLEX = "grevlex"
LEX = "lex"


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


@dataclass(frozen=True)
class MonomialOrder:
    """A total multiplicative order: weight dot product, then a tie-break."""

    weights: tuple[Fraction, ...] | None = None
    tie_break: str = GREVLEX

    def __post_init__(self):
        if self.tie_break not in (GREVLEX, LEX):
            raise ValueError(f"unknown tie break {self.tie_break!r}")
        if self.weights is not None:
            object.__setattr__(
                self, "weights", tuple(Fraction(w) for w in self.weights)
            )

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls(None, GREVLEX)

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(None, LEX)

    @classmethod
    def weighted(cls, w: WeightVector, tie_break: str = GREVLEX) -> "MonomialOrder":
        return cls(tuple(w.weights), tie_break)

    def is_global(self) -> bool:
        """True when every variable is larger than 1 (termination guarantee)."""
        return self.weights is None or all(w >= 0 for w in self.weights)

    def sort_key(self, e: ExponentVector):
        """Key whose natural ordering realizes the monomial order."""
        if self.tie_break == GREVLEX:
            tie = (sum(e), tuple(-x for x in reversed(e)))
        else:
            tie = e
        if self.weights is None:
            return tie
        if len(self.weights) != len(e):
            raise ValueError("dimension mismatch between order and exponent vector")
        return (sum((w * x for w, x in zip(self.weights, e)), Fraction(0)), tie)

    def compare(self, e1: ExponentVector, e2: ExponentVector) -> int:
        """-1, 0, or 1; zero only for identical exponent vectors."""
        if len(e1) != len(e2):
            raise ValueError("dimension mismatch in monomial comparison")
        k1, k2 = self.sort_key(e1), self.sort_key(e2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0


def leading_term(f: Polynomial, order: MonomialOrder) -> tuple[ExponentVector, Fraction]:
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    e = max(f.terms, key=order.sort_key)
    return e, f.terms[e]


def _divides(d: ExponentVector, e: ExponentVector) -> bool:
    return all(a <= b for a, b in zip(d, e))


@dataclass(frozen=True)
class GroebnerBasis:
    """A basis together with its order; reduced bases are canonical."""

    gens: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True
    _leads: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        leads = tuple(leading_term(g, self.order) for g in self.gens)
        object.__setattr__(self, "_leads", leads)


def _check_termination(order: MonomialOrder, polys) -> None:
    if order.is_global():
        return
    if all(p.is_homogeneous() for p in polys):
        return
    raise ValueError(
        "non-global order (negative weights) needs homogeneous input; "
        "use initial_ideal / valuation evaluation, which homogenize internally"
    )


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of multivariate division of f by the basis.

    No term of the result is divisible by a leading monomial of the basis,
    and f minus the result lies in the ideal the basis generates.
    """
    if not gb.gens or f.is_zero:
        return f
    if f.ring != gb.gens[0].ring:
        raise ValueError("polynomial and basis live in different rings")
    # Non-global orders are safe only against homogeneous bases: every
    # reduction then stays inside the finitely many monomials of one degree.
    _check_termination(gb.order, gb.gens)
    key = gb.order.sort_key
    work = dict(f.terms)
    remainder: dict[ExponentVector, Fraction] = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        for g, (lm, lc) in zip(gb.gens, gb._leads):
            if _divides(lm, e):
                shift = tuple(a - b for a, b in zip(e, lm))
                factor = c / lc
                for eg, cg in g.terms.items():
                    if eg == lm:
                        continue
                    target = tuple(a + b for a, b in zip(eg, shift))
                    s = work.get(target, Fraction(0)) - factor * cg
                    if s == 0:
                        work.pop(target, None)
                    else:
                        work[target] = s
                break
        else:
            remainder[e] = c
    return Polynomial(f.ring, remainder)


def _monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    _, lc = leading_term(f, order)
    return f if lc == 1 else f.scale(Fraction(1) / lc)


def _s_poly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    (ef, cf), (eg, cg) = leading_term(f, order), leading_term(g, order)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = Polynomial.monomial(f.ring, tuple(a - b for a, b in zip(lcm, ef)),
                             Fraction(1) / cf)
    mg = Polynomial.monomial(g.ring, tuple(a - b for a, b in zip(lcm, eg)),
                             Fraction(1) / cg)
    return mf * f - mg * g


def buchberger(gens: list[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal the generators span.

    Deterministic for a fixed input: pairs are processed in normal strategy
    (smallest lcm first), and the final basis is interreduced, made monic,
    and sorted by descending leading monomial.
    """
    for g in gens:
        if g.is_zero:
            raise ZeroPolynomialError("ideal generators must be nonzero")
    _check_termination(order, gens)
    basis: list[Polynomial] = []
    for g in gens:
        g = _monic(g, order)
        if g not in basis:
            basis.append(g)
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_key(pair):
        i, j = pair
        ei, _ = leading_term(basis[i], order)
        ej, _ = leading_term(basis[j], order)
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        return (order.sort_key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        ei, _ = leading_term(basis[i], order)
        ej, _ = leading_term(basis[j], order)
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading monomials: s-poly reduces to zero
        s = _s_poly(basis[i], basis[j], order)
        r = normal_form(s, GroebnerBasis(tuple(basis), order, reduced=False))
        if not r.is_zero:
            basis.append(_monic(r, order))
            k = len(basis) - 1
            pairs.update((i2, k) for i2 in range(k))

    # Minimalize: drop generators whose lead is divisible by another lead.
    leads = [leading_term(g, order)[0] for g in basis]
    keep: list[int] = []
    for i, lm in enumerate(leads):
        if any(j != i and _divides(leads[j], lm) and (leads[j] != lm or j < i)
               for j in range(len(basis))):
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]

    # Interreduce tails until stable.
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = GroebnerBasis(
                tuple(minimal[:i] + minimal[i + 1:]), order, reduced=False
            ) if len(minimal) > 1 else None
            if others is None:
                continue
            r = _monic(normal_form(minimal[i], others), order)
            if r != minimal[i]:
                minimal[i] = r
                changed = True
    minimal.sort(key=lambda g: order.sort_key(leading_term(g, order)[0]), reverse=True)
    return GroebnerBasis(tuple(minimal), order, reduced=True)


# -- initial forms and initial ideals -----------------------------------------


def initial_form(f: Polynomial, w: WeightVector,
                 presentation: Presentation | None = None) -> Polynomial:
    """Sum of the terms of f attaining the maximum weight.

    When a presentation with a t-adic coefficient valuation is supplied, the
    uniformizer component of the weights is pinned first.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no initial form")
    if presentation is not None:
        w = presentation.effective_weights(w)
    if len(w.weights) != f.ring.dim:
        raise ValueError("weight vector has wrong dimension for this ring")
    best: Fraction | None = None
    top: dict[ExponentVector, Fraction] = {}
    for e, c in f.terms.items():
        weight = w.dot(e)
        if best is None or weight > best:
            best = weight
            top = {e: c}
        elif weight == best:
            top[e] = c
    return Polynomial(f.ring, top)


def _extended_ring(ring: RingContext) -> RingContext:
    name = "h0"
    while name in ring.variables:
        name += "_"
    return RingContext(ring.variables + (name,))


def _homogenize(f: Polynomial, ext: RingContext) -> Polynomial:
    d = f.total_degree()
    return Polynomial(ext, {e + (d - sum(e),): c for e, c in f.terms.items()})


def _dehomogenize(f: Polynomial, ring: RingContext) -> Polynomial:
    return Polynomial(ring, {e[:-1]: c for e, c in f.terms.items()})


def _strip_last_variable(f: Polynomial, ext: RingContext) -> Polynomial:
    k = min(e[-1] for e in f.terms)
    if k == 0:
        return f
    return Polynomial(ext, {e[:-1] + (e[-1] - k,): c for e, c in f.terms.items()})


def weight_refined_basis(P: Presentation, w: WeightVector) -> tuple[GroebnerBasis, RingContext]:
    """Basis of the homogenized ideal for the weight-refined order.

    Returns the basis (over the extended ring, homogenizing variable last
    with weight 0) together with the extended ring.  Normal forms against it
    realize division by a w-refined basis of the original ideal for any
    rational w, including vectors with negative entries.
    """
    weff = P.effective_weights(w)
    ext = _extended_ring(P.ring)
    if not P.ideal_gens:
        order = MonomialOrder.weighted(WeightVector(weff.weights + (Fraction(0),)))
        return GroebnerBasis((), order, reduced=True), ext
    homogenized = [_homogenize(g, ext) for g in P.ideal_gens]
    g1 = buchberger(homogenized, MonomialOrder.grevlex())
    saturated = [_strip_last_variable(g, ext) for g in g1.gens]
    order = MonomialOrder.weighted(WeightVector(weff.weights + (Fraction(0),)))
    return buchberger(saturated, order), ext


def initial_ideal(P: Presentation, w: WeightVector) -> list[Polynomial]:
    """Generators of the initial ideal of the presented ideal at w.

    Computed as the top-weight forms of a weight-refined basis; the empty
    list is returned for the zero ideal.
    """
    gb, ext = weight_refined_basis(P, w)
    if not gb.gens:
        return []
    weff = P.effective_weights(w)
    w_ext = WeightVector(weff.weights + (Fraction(0),))
    out = []
    for g in gb.gens:
        top = initial_form(g, w_ext)
        out.append(_dehomogenize(top, P.ring))
    out.sort(key=lambda p: p.key())
    return out


def contains_monomial(gens: list[Polynomial], ring: RingContext) -> tuple[bool, Polynomial | None]:
    """Does the ideal spanned by the generators contain a monomial?

    Decided by adjoining u and the generator u*x_1*...*x_n - 1: the extended
    ideal is the unit ideal exactly when some monomial lies in the original.
    The witness is a generator that is itself a monomial when one exists,
    otherwise the smallest power of the product of all variables that lies
    in the ideal.
    """
    gens = [g for g in gens]
    for g in gens:
        if g.is_zero:
            raise ZeroPolynomialError("generators must be nonzero")
    if not gens:
        return False, None
    for g in gens:
        if g.is_monomial():
            e, _ = next(iter(g.terms.items()))
            return True, Polynomial.monomial(ring, e)
    ext = RingContext(ring.variables + (_aux_name(ring),))
    lifted = [Polynomial(ext, {e + (0,): c for e, c in g.terms.items()}) for g in gens]
    product_exps = (1,) * ring.dim + (1,)
    lifted.append(Polynomial(ext, {product_exps: Fraction(1),
                                   (0,) * ext.dim: Fraction(-1)}))
    gb = buchberger(lifted, MonomialOrder.grevlex())
    is_unit = len(gb.gens) == 1 and gb.gens[0] == Polynomial.constant(ext, 1)
    if not is_unit:
        return False, None
    base = buchberger(gens, MonomialOrder.grevlex())
    product = Polynomial.monomial(ring, (1,) * ring.dim)
    power = Polynomial.constant(ring, 1)
    for _ in range(500):
        if normal_form(power, base).is_zero:
            return True, power
        power = power * product
    raise RuntimeError("saturation witness not found within the power bound")


def _aux_name(ring: RingContext) -> str:
    name = "u0"
    while name in ring.variables:
        name += "_"
    return name


def canonical_initial_key(P: Presentation, w: WeightVector) -> tuple:
    """Hashable canonical form of the initial ideal: its reduced grevlex basis."""
    gens = initial_ideal(P, w)
    if not gens:
        return ()
    gb = buchberger(gens, MonomialOrder.grevlex())
    return tuple(g.key() for g in gb.gens)


def same_initial_ideal(P: Presentation, w1: WeightVector, w2: WeightVector) -> bool:
    """Equality of initial ideals, via reduced bases under a fixed order."""
    return canonical_initial_key(P, w1) == canonical_initial_key(P, w2)


@dataclass(frozen=True)
class FanClass:
    """One equivalence class of grid weights with a common initial ideal."""

    representative: WeightVector
    initial_gens: tuple[Polynomial, ...]
    monomial_free: bool
    members: tuple[WeightVector, ...]


def enumerate_fan(P: Presentation, box: int, denominator: int = 1) -> list[FanClass]:
    """Group all grid weights in [-box, box]^n with the given denominator.

    Classes are keyed by equality of initial ideals, listed by their
    lexicographically smallest representative.  Intended for small instances.
    """
    if box < 0 or denominator <= 0:
        raise ValueError("box must be non-negative and denominator positive")
    n = P.ring.dim
    steps = range(-box * denominator, box * denominator + 1)
    buckets: dict[tuple, list[WeightVector]] = {}
    canon_gens: dict[tuple, tuple[Polynomial, ...]] = {}
    for point in itertools.product(steps, repeat=n):
        w = WeightVector(tuple(Fraction(p, denominator) for p in point))
        key = canonical_initial_key(P, w)
        buckets.setdefault(key, []).append(w)
        if key not in canon_gens:
            canon_gens[key] = tuple(initial_ideal(P, w))
    classes = []
    for key, members in buckets.items():
        members.sort(key=lambda v: v.weights)
        gens = canon_gens[key]
        free, _ = contains_monomial(list(gens), P.ring) if gens else (False, None)
        classes.append(FanClass(members[0], gens, not free, tuple(members)))
    classes.sort(key=lambda c: c.representative.weights)
    return classes
