"""Ordered algebraic structures with executable density and shrink witnesses.

Everything here manipulates opaque carrier elements through a
:class:`StructureHandle`: a bundle of operations, a four-valued comparator,
capability flags, and optional witnesses.  Witnesses are plain data holding
functions (split an epsilon into two smaller positive parts, shrink a target
below a bound, find a multiple exceeding a threshold, join two elements);
every claim a witness makes is re-checkable exactly, and the verifiers in
this module do exactly that.  No floating point is used anywhere.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

Element = Any


class OrderResult(enum.Enum):
    """Outcome of comparing two elements under a (possibly partial) order."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


Compare = Callable[[Element, Element], OrderResult]


class CapabilityError(Exception):
    """A structure lacks a flag, operation, or witness the check needs.

    Distinct from ValueError: a ValueError means a precondition on concrete
    values failed; a CapabilityError means the question cannot even be posed
    for this structure.  The CLI maps the former to "violation"/usage errors
    and the latter to "unverifiable".
    """


def total_compare(a: Element, b: Element) -> OrderResult:
    # For carriers whose Python comparisons already realize a total order.
    if a == b:
        return OrderResult.EQUAL
    return OrderResult.LESS if a < b else OrderResult.GREATER


_FLAG_IMPLIES = {
    "field": ("division_ring",),
    "division_ring": ("ring", "semiring"),
    "ring": ("hemiring", "near_ring"),
    "near_ring": ("group",),
    "semiring": ("hemiring",),
    "hemiring": ("commutative_add", "unital", "associative"),
    "group": ("unital", "associative"),
    "total_order": ("join_semilattice",),
}


@dataclass(frozen=True)
class StructureFlags:
    """Capability flags; stronger flags imply weaker ones (use make_flags)."""

    unital: bool = False
    associative: bool = False
    commutative_add: bool = False
    group: bool = False
    near_ring: bool = False
    hemiring: bool = False
    semiring: bool = False
    ring: bool = False
    division_ring: bool = False
    field: bool = False
    total_order: bool = False
    join_semilattice: bool = False


def make_flags(**kwargs: bool) -> StructureFlags:
    """Build flags, closing upward along the implication chain.

    make_flags(field=True) also sets division_ring, ring, semiring, hemiring,
    near_ring, group, commutative_add, unital, associative.
    """
    names = set(k for k, v in kwargs.items() if v)
    unknown = names - set(StructureFlags.__dataclass_fields__)
    if unknown:
        raise TypeError(f"unknown flags: {sorted(unknown)}")
    changed = True
    while changed:
        changed = False
        for name in tuple(names):
            for implied in _FLAG_IMPLIES.get(name, ()):
                if implied not in names:
                    names.add(implied)
                    changed = True
    return StructureFlags(**{name: True for name in names})


@dataclass(frozen=True)
class DensityWitness:
    """split(eps) -> (beta, gamma), both positive, with beta*gamma < eps."""

    split: Callable[[Element], tuple[Element, Element]]
    note: str = ""


@dataclass(frozen=True)
class ShrinkWitness:
    """shrink(alpha, bound) -> (left, right) with left*bound < alpha and
    bound*right < alpha; all of alpha, bound, left, right positive."""

    shrink: Callable[[Element, Element], tuple[Element, Element]]
    note: str = ""


@dataclass(frozen=True)
class ArchimedeanWitness:
    """bound(x, y) -> n >= 1 such that the n-fold sum of x exceeds y."""

    bound: Callable[[Element, Element], int]
    note: str = ""


@dataclass(frozen=True)
class JoinWitness:
    """join(a, b) -> least upper bound of a and b."""

    join: Callable[[Element, Element], Element]
    note: str = ""


@dataclass(frozen=True)
class Violation:
    """One exact counterexample found by a verifier."""

    law: str
    values: tuple
    note: str = ""


@dataclass(frozen=True)
class StructureHandle:
    """A carrier with its operations, order, flags, and optional extras.

    op is the primary (additive) operation; second_op the multiplicative one
    when present.  compare returns one of four outcomes and is the only
    source of order information.  eps_grid is a strictly decreasing tuple of
    positive elements used as default check targets; sample a spread of
    carrier elements for law checks.  fmt renders elements as exact text.
    """

    name: str
    flags: StructureFlags
    op: Callable[[Element, Element], Element]
    compare: Compare
    identity: Element = None
    negate: Callable[[Element], Element] | None = None
    second_op: Callable[[Element, Element], Element] | None = None
    one: Element = None
    invert: Callable[[Element], Element] | None = None
    density: DensityWitness | None = None
    shrink: ShrinkWitness | None = None
    archimedean: ArchimedeanWitness | None = None
    join: JoinWitness | None = None
    eps_grid: tuple = ()
    sample: tuple = ()
    fmt: Callable[[Element], str] = str
    symbols: Mapping[str, Element] = field(default_factory=dict)
    from_rational: Callable[[Any], Element] | None = None
    strict_compat: bool = True
    aliases: tuple[str, ...] = ()
    describe: str = ""
    metrics: tuple = ()
    norms: tuple = ()
    pnorms: tuple = ()

    # -- comparison shorthands ------------------------------------------
    def lt(self, a: Element, b: Element) -> bool:
        return self.compare(a, b) is OrderResult.LESS

    def le(self, a: Element, b: Element) -> bool:
        return self.compare(a, b) in (OrderResult.LESS, OrderResult.EQUAL)

    def eq(self, a: Element, b: Element) -> bool:
        return self.compare(a, b) is OrderResult.EQUAL

    def is_positive(self, a: Element) -> bool:
        return self.lt(self.identity, a)

    def is_nonnegative(self, a: Element) -> bool:
        return self.le(self.identity, a)

    # -- derived operations ---------------------------------------------
    def sub(self, a: Element, b: Element) -> Element:
        if self.negate is None:
            raise CapabilityError(f"{self.name} has no additive inverses")
        return self.op(a, self.negate(b))

    def mul(self, a: Element, b: Element) -> Element:
        if self.second_op is None:
            raise CapabilityError(f"{self.name} has no second operation")
        return self.second_op(a, b)

    def require(self, *flag_names: str) -> None:
        missing = [n for n in flag_names if not getattr(self.flags, n)]
        if missing:
            raise CapabilityError(f"{self.name} lacks: {', '.join(missing)}")


def nat_mul(s: StructureHandle, n: int, x: Element) -> Element:
    """n-fold op-sum of x (n >= 0); doubling needs associativity."""
    if n < 0:
        raise ValueError("repetition count must be nonnegative")
    if n == 0:
        if not s.flags.unital:
            raise CapabilityError(f"{s.name} has no identity for an empty sum")
        return s.identity
    if not s.flags.associative:
        acc = x
        for _ in range(n - 1):
            acc = s.op(acc, x)
        return acc
    acc = None
    base = x
    while n:
        if n & 1:
            acc = base if acc is None else s.op(acc, base)
        n >>= 1
        if n:
            base = s.op(base, base)
    return acc


def nat_pow(s: StructureHandle, x: Element, n: int) -> Element:
    """n-fold second_op-product of x (n >= 0; empty product is one)."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if s.second_op is None:
        raise CapabilityError(f"{s.name} has no second operation")
    if n == 0:
        if s.one is None:
            raise CapabilityError(f"{s.name} has no multiplicative identity")
        return s.one
    acc = None
    base = x
    while n:
        if n & 1:
            acc = base if acc is None else s.second_op(acc, base)
        n >>= 1
        if n:
            base = s.second_op(base, base)
    return acc


def join_fold(s: StructureHandle, items: Iterable[Element], j: JoinWitness | None = None) -> Element:
    j = j if j is not None else s.join
    if j is None:
        raise CapabilityError(f"{s.name} has no join witness")
    it = iter(items)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("join of an empty collection") from None
    for x in it:
        acc = j.join(acc, x)
    return acc


# ---------------------------------------------------------------------------
# density machinery


def checked_split(s: StructureHandle, w: DensityWitness, eps: Element) -> tuple[Element, Element]:
    """Run a split and verify its contract exactly, raising on any breach."""
    if not s.is_positive(eps):
        raise ValueError(f"{s.name}: epsilon {s.fmt(eps)} is not positive")
    beta, gamma = w.split(eps)
    if not s.is_positive(beta) or not s.is_positive(gamma):
        raise ValueError(
            f"{s.name}: split({s.fmt(eps)}) produced a non-positive part "
            f"({s.fmt(beta)}, {s.fmt(gamma)})"
        )
    if not s.lt(s.op(beta, gamma), eps):
        raise ValueError(
            f"{s.name}: split({s.fmt(eps)}) parts do not combine below epsilon"
        )
    return beta, gamma


def split_witness(s: StructureHandle, w: DensityWitness | None) -> DensityWitness:
    w = w if w is not None else s.density
    if w is None:
        raise CapabilityError(f"{s.name} has no density witness")
    return w


def n_split(s: StructureHandle, eps: Element, n: int, w: DensityWitness | None = None) -> list[Element]:
    """Split eps into n positive parts whose op-fold stays strictly below eps.

    n=1 returns the first half of a single split (still strictly below eps);
    larger n repeatedly splits the last part.
    """
    w = split_witness(s, w)
    if n < 1:
        raise ValueError("part count must be at least 1")
    beta, gamma = checked_split(s, w, eps)
    if n == 1:
        if not s.lt(beta, eps):
            raise ValueError(f"{s.name}: split part not below epsilon")
        return [beta]
    parts = [beta, gamma]
    while len(parts) < n:
        parts[-1:] = checked_split(s, w, parts[-1])
    return parts


def fold_op(s: StructureHandle, items: Sequence[Element]) -> Element:
    acc = items[0]
    for x in items[1:]:
        acc = s.op(acc, x)
    return acc


def density_from_unit_interval(s: StructureHandle, alpha: Element) -> DensityWitness:
    """Density witness from one element strictly between 0 and 1.

    Requires a totally ordered near-ring with identity.  The split of eps is
    (a*a*eps, ((1-a)*a)*eps); the two parts combine to exactly a*eps.
    """
    s.require("near_ring", "total_order")
    if s.second_op is None or s.one is None:
        raise CapabilityError(f"{s.name} has no unital multiplication")
    if not (s.lt(s.identity, alpha) and s.lt(alpha, s.one)):
        raise ValueError(
            f"{s.name}: {s.fmt(alpha)} is not strictly between 0 and 1"
        )
    alpha_sq = s.second_op(alpha, alpha)
    # (1 - a)*a equals a - a*a using only right distributivity.
    coeff = s.second_op(s.op(s.one, s.negate(alpha)), alpha)

    def split(eps: Element) -> tuple[Element, Element]:
        return (s.second_op(alpha_sq, eps), s.second_op(coeff, eps))

    return DensityWitness(split, note=f"unit-interval element {s.fmt(alpha)}")


def betweenness(s: StructureHandle, lo: Element, hi: Element, w: DensityWitness | None = None) -> Element:
    """An element strictly between lo and hi in a dense ordered group."""
    s.require("group")
    w = split_witness(s, w)
    if not s.lt(lo, hi):
        raise ValueError(
            f"{s.name}: need {s.fmt(lo)} < {s.fmt(hi)} to interpolate"
        )
    gap = s.op(s.negate(lo), hi)
    beta, _ = checked_split(s, w, gap)
    mid = s.op(lo, beta)
    if not (s.lt(lo, mid) and s.lt(mid, hi)):
        raise ValueError(f"{s.name}: witness produced a bad midpoint")
    return mid


def division_shrink_witness(s: StructureHandle, w: DensityWitness | None = None) -> ShrinkWitness:
    """Shrink witness for dense totally ordered carriers with inverses."""
    s.require("total_order")
    if s.invert is None:
        raise CapabilityError(f"{s.name} has no multiplicative inverses")
    w = split_witness(s, w)

    def shrink(alpha: Element, bound: Element) -> tuple[Element, Element]:
        if not s.is_positive(alpha):
            raise ValueError(f"{s.name}: target {s.fmt(alpha)} must be positive")
        if not s.is_positive(bound):
            raise ValueError(f"{s.name}: bound {s.fmt(bound)} must be positive")
        beta = n_split(s, alpha, 1, w)[0]
        binv = s.invert(bound)
        return (s.second_op(beta, binv), s.second_op(binv, beta))

    return ShrinkWitness(shrink, note="scale a split part by the inverse bound")


def demarr_density_witness(s: StructureHandle) -> DensityWitness:
    """Density witness for ordered division rings where 1 is positive.

    Splits a positive x into two copies of (2/5')x where 2 and 5' are the
    one-fold sums 1+1 and 1+1+1+1+1; works under partial orders.
    """
    s.require("division_ring")
    if not s.lt(s.identity, s.one):
        raise ValueError(f"{s.name}: multiplicative identity is not positive")
    two = nat_mul(s, 2, s.one)
    five = nat_mul(s, 5, s.one)
    c = s.second_op(two, s.invert(five))

    def split(x: Element) -> tuple[Element, Element]:
        part = s.second_op(c, x)
        return (part, part)

    return DensityWitness(split, note="two fifths of x, twice")


def module_density_witness(
    ring: StructureHandle,
    module: StructureHandle,
    smul: Callable[[Element, Element], Element],
    alpha: Element,
) -> DensityWitness:
    """Density witness on a module's positive cone from a scalar in (0, 1).

    Splits a positive m into ((alpha - alpha^2)m, (alpha^2)m); the parts
    combine to exactly alpha*m.
    """
    ring.require("ring", "total_order")
    if not (ring.lt(ring.identity, alpha) and ring.lt(alpha, ring.one)):
        raise ValueError(
            f"{ring.name}: scalar {ring.fmt(alpha)} is not strictly between 0 and 1"
        )
    alpha_sq = ring.second_op(alpha, alpha)
    c1 = ring.sub(alpha, alpha_sq)

    def split(m: Element) -> tuple[Element, Element]:
        return (smul(c1, m), smul(alpha_sq, m))

    return DensityWitness(split, note=f"scalar slice at {ring.fmt(alpha)}")


# ---------------------------------------------------------------------------
# law verifiers (exact; return lists of Violation, empty means pass)


def _pairs_lt(s: StructureHandle, sample: Sequence[Element], strict: bool):
    rel = s.lt if strict else s.le
    for a in sample:
        for b in sample:
            if a is not b and rel(a, b):
                yield a, b


def verify_compatibility(
    s: StructureHandle,
    sample: Sequence[Element] | None = None,
    strict: bool | None = None,
) -> list[Violation]:
    """Check order-compatibility of op (and second_op on the positive cone).

    strict=True checks a<b -> a*c<b*c and c*a<c*b; strict=False checks the
    non-strict variant.  Default comes from the structure's declared mode.
    """
    sample = tuple(sample if sample is not None else s.sample)
    strict = s.strict_compat if strict is None else strict
    rel = s.lt if strict else s.le
    out: list[Violation] = []
    for a, b in _pairs_lt(s, sample, strict):
        for c in sample:
            left_a, left_b = s.op(a, c), s.op(b, c)
            if not rel(left_a, left_b):
                out.append(Violation(
                    "order.compatibility.op-right",
                    (a, b, c, left_a, left_b),
                    f"{s.fmt(a)} vs {s.fmt(b)} with {s.fmt(c)} on the right",
                ))
            right_a, right_b = s.op(c, a), s.op(c, b)
            if not rel(right_a, right_b):
                out.append(Violation(
                    "order.compatibility.op-left",
                    (a, b, c, right_a, right_b),
                    f"{s.fmt(a)} vs {s.fmt(b)} with {s.fmt(c)} on the left",
                ))
    if s.second_op is not None:
        cone = [c for c in sample if (s.is_positive(c) if strict else s.is_nonnegative(c))]
        for a, b in _pairs_lt(s, sample, strict):
            for c in cone:
                left_a, left_b = s.second_op(a, c), s.second_op(b, c)
                if not rel(left_a, left_b):
                    out.append(Violation(
                        "order.compatibility.mul-right",
                        (a, b, c, left_a, left_b),
                        f"{s.fmt(a)} vs {s.fmt(b)} scaled by {s.fmt(c)} on the right",
                    ))
                right_a, right_b = s.second_op(c, a), s.second_op(c, b)
                if not rel(right_a, right_b):
                    out.append(Violation(
                        "order.compatibility.mul-left",
                        (a, b, c, right_a, right_b),
                        f"{s.fmt(a)} vs {s.fmt(b)} scaled by {s.fmt(c)} on the left",
                    ))
    return out


def verify_monoid(s: StructureHandle, sample: Sequence[Element] | None = None) -> list[Violation]:
    """Identity and (if flagged) associativity/commutativity of op."""
    sample = tuple(sample if sample is not None else s.sample)
    out: list[Violation] = []
    if s.flags.unital:
        for a in sample:
            if not (s.eq(s.op(s.identity, a), a) and s.eq(s.op(a, s.identity), a)):
                out.append(Violation("op.identity", (a,)))
    if s.flags.associative:
        small = sample[:6]
        for a in small:
            for b in small:
                for c in small:
                    if not s.eq(s.op(s.op(a, b), c), s.op(a, s.op(b, c))):
                        out.append(Violation("op.associative", (a, b, c)))
    if s.flags.commutative_add:
        for a in sample:
            for b in sample:
                if not s.eq(s.op(a, b), s.op(b, a)):
                    out.append(Violation("op.commutative", (a, b)))
    return out


def verify_group(s: StructureHandle, sample: Sequence[Element] | None = None) -> list[Violation]:
    sample = tuple(sample if sample is not None else s.sample)
    out: list[Violation] = []
    if not s.flags.group or s.negate is None:
        return [Violation("group.capability", (), f"{s.name} is not a group")]
    for a in sample:
        if not s.eq(s.op(a, s.negate(a)), s.identity):
            out.append(Violation("group.inverse-right", (a,)))
        if not s.eq(s.op(s.negate(a), a), s.identity):
            out.append(Violation("group.inverse-left", (a,)))
    return out


def verify_hemiring(s: StructureHandle, sample: Sequence[Element] | None = None) -> list[Violation]:
    """Distributivity and zero-absorption for flagged hemirings."""
    sample = tuple(sample if sample is not None else s.sample)
    out: list[Violation] = []
    if not s.flags.hemiring or s.second_op is None:
        return [Violation("hemiring.capability", (), f"{s.name} is not a hemiring")]
    small = sample[:6]
    for a in small:
        za = s.second_op(s.identity, a)
        az = s.second_op(a, s.identity)
        if not (s.eq(za, s.identity) and s.eq(az, s.identity)):
            out.append(Violation("hemiring.zero-absorbs", (a,)))
        for b in small:
            for c in small:
                lhs = s.second_op(a, s.op(b, c))
                rhs = s.op(s.second_op(a, b), s.second_op(a, c))
                if not s.eq(lhs, rhs):
                    out.append(Violation("hemiring.distributive-left", (a, b, c)))
                lhs = s.second_op(s.op(a, b), c)
                rhs = s.op(s.second_op(a, c), s.second_op(b, c))
                if not s.eq(lhs, rhs):
                    out.append(Violation("hemiring.distributive-right", (a, b, c)))
    return out


def verify_density(
    s: StructureHandle,
    w: DensityWitness | None = None,
    grid: Sequence[Element] | None = None,
    max_parts: int = 4,
) -> list[Violation]:
    """Exercise a density witness over a grid: parts positive, folds below eps."""
    w = split_witness(s, w)
    grid = tuple(grid if grid is not None else s.eps_grid)
    out: list[Violation] = []
    for eps in grid:
        for n in range(1, max_parts + 1):
            try:
                parts = n_split(s, eps, n, w)
            except ValueError as exc:
                out.append(Violation("density.split", (eps, n), str(exc)))
                continue
            if not all(s.is_positive(p) for p in parts):
                out.append(Violation("density.positivity", (eps, tuple(parts))))
            if not s.lt(fold_op(s, parts), eps):
                out.append(Violation("density.fold-below", (eps, tuple(parts))))
    return out


def verify_shrink(
    s: StructureHandle,
    w: ShrinkWitness | None = None,
    targets: Sequence[Element] | None = None,
    bounds: Sequence[Element] | None = None,
) -> list[Violation]:
    """Exercise a shrink witness: both scaled products land strictly below."""
    w = w if w is not None else s.shrink
    if w is None:
        raise CapabilityError(f"{s.name} has no shrink witness")
    if s.second_op is None:
        raise CapabilityError(f"{s.name} has no second operation")
    targets = tuple(targets if targets is not None else s.eps_grid)
    bounds = tuple(bounds if bounds is not None else (x for x in s.sample if s.is_positive(x)))
    out: list[Violation] = []
    for alpha in targets:
        for m in bounds:
            left, right = w.shrink(alpha, m)
            if not (s.is_positive(left) and s.is_positive(right)):
                out.append(Violation("shrink.positivity", (alpha, m, left, right)))
                continue
            if not s.lt(s.second_op(left, m), alpha):
                out.append(Violation("shrink.left-product", (alpha, m, left)))
            if not s.lt(s.second_op(m, right), alpha):
                out.append(Violation("shrink.right-product", (alpha, m, right)))
    return out


def verify_archimedean(
    s: StructureHandle,
    w: ArchimedeanWitness | None = None,
    xs: Sequence[Element] | None = None,
    ys: Sequence[Element] | None = None,
) -> list[Violation]:
    w = w if w is not None else s.archimedean
    if w is None:
        raise CapabilityError(f"{s.name} has no multiple-exceeds witness")
    xs = tuple(xs if xs is not None else (x for x in s.sample if s.is_positive(x)))
    ys = tuple(ys if ys is not None else s.sample)
    out: list[Violation] = []
    for x in xs:
        for y in ys:
            n = w.bound(x, y)
            if n < 1:
                out.append(Violation("archimedean.count", (x, y, n)))
                continue
            if not s.lt(y, nat_mul(s, n, x)):
                out.append(Violation("archimedean.exceeds", (x, y, n)))
    return out


def elements_between(
    s: StructureHandle, lo: Element, hi: Element, candidates: Iterable[Element]
) -> list[Element]:
    """All candidates strictly between lo and hi; empty means a gap."""
    return [c for c in candidates if s.lt(lo, c) and s.lt(c, hi)]
