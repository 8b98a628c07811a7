"""Distances and norms valued in ordered monoids rather than the reals.

A MetricSpace carries points, a codomain structure, and a distance function;
the triangle law combines distances with the codomain's op, so a join
semilattice codomain gives ultrametric-style geometry and an additive one
the familiar kind.  NormedGroup pairs a group with a codomain-valued norm;
its induced metric is d(g, h) = norm(g - h).
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .order import (
    CapabilityError,
    Element,
    OrderResult,
    StructureHandle,
    Violation,
)


@dataclass(frozen=True)
class MetricSpace:
    name: str
    codomain: StructureHandle
    distance: Callable[[Any, Any], Element]
    points: tuple = ()
    point_eq: Callable[[Any, Any], bool] = operator.eq
    fmt_point: Callable[[Any], str] = str


@dataclass(frozen=True)
class NormedGroup:
    name: str
    group: StructureHandle
    codomain: StructureHandle
    norm: Callable[[Element], Element]
    sample: tuple = ()


def absolute_value(s: StructureHandle, x: Element) -> Element:
    """max(x, -x) in a totally ordered group."""
    s.require("group", "total_order")
    nx = s.negate(x)
    return x if s.le(nx, x) else nx


def absolute_value_metric(s: StructureHandle, points: Sequence | None = None) -> MetricSpace:
    """d(x, y) = |x - y| on a totally ordered group (abelian or not)."""
    s.require("group", "total_order")

    def d(x, y):
        return absolute_value(s, s.sub(x, y))

    return MetricSpace(
        name=f"{s.name}.abs",
        codomain=s,
        distance=d,
        points=tuple(points if points is not None else s.sample),
        fmt_point=s.fmt,
    )


def absolute_value_norm(s: StructureHandle, sample: Sequence | None = None) -> NormedGroup:
    s.require("group", "total_order")
    return NormedGroup(
        name=f"{s.name}.abs",
        group=s,
        codomain=s,
        norm=lambda x: absolute_value(s, x),
        sample=tuple(sample if sample is not None else s.sample),
    )


def induced_metric(ng: NormedGroup) -> MetricSpace:
    """The metric a group norm induces: d(g, h) = norm(g * h^-1)."""
    g = ng.group

    def d(x, y):
        return ng.norm(g.sub(x, y))

    return MetricSpace(
        name=f"{ng.name}.induced",
        codomain=ng.codomain,
        distance=d,
        points=ng.sample,
        fmt_point=g.fmt,
    )


def product_metric(name: str, spaces: Sequence[MetricSpace], max_points: int = 12) -> MetricSpace:
    """Componentwise distance combined with the shared codomain's op."""
    if not spaces:
        raise ValueError("need at least one factor")
    codomain = spaces[0].codomain
    for sp in spaces[1:]:
        if sp.codomain is not codomain:
            raise CapabilityError("product factors must share a codomain")
    codomain.require("commutative_add")

    def d(xs, ys):
        acc = None
        for sp, x, y in zip(spaces, xs, ys):
            v = sp.distance(x, y)
            acc = v if acc is None else codomain.op(acc, v)
        return acc

    per_factor = 1
    while (per_factor + 1) ** len(spaces) <= max_points:
        per_factor += 1
    per_factor = max(2, per_factor)
    pts = tuple(itertools.product(*(sp.points[:per_factor] for sp in spaces)))

    def eq(xs, ys):
        return all(sp.point_eq(x, y) for sp, x, y in zip(spaces, xs, ys))

    def fmt(xs):
        return "(" + ", ".join(sp.fmt_point(x) for sp, x in zip(spaces, xs)) + ")"

    return MetricSpace(name=name, codomain=codomain, distance=d,
                       points=pts, point_eq=eq, fmt_point=fmt)


def verify_metric(
    space: MetricSpace,
    triples: Iterable[tuple] | None = None,
    points: Sequence | None = None,
) -> list[Violation]:
    """Exact check of nonnegativity, identity, symmetry, and the triangle law.

    Pair laws run over all point pairs; the triangle law runs over the given
    triples (default: the cube of the first eight points).
    """
    m = space.codomain
    pts = tuple(points if points is not None else space.points)
    out: list[Violation] = []
    for x in pts:
        for y in pts:
            dxy = space.distance(x, y)
            if m.compare(m.identity, dxy) not in (OrderResult.LESS, OrderResult.EQUAL):
                out.append(Violation("metric.nonneg", (x, y, dxy)))
            same = space.point_eq(x, y)
            iszero = m.eq(dxy, m.identity)
            if same != iszero:
                out.append(Violation("metric.identity", (x, y, dxy)))
            if not m.eq(dxy, space.distance(y, x)):
                out.append(Violation("metric.symmetry", (x, y)))
    if triples is None:
        base = pts[:8]
        triples = itertools.product(base, base, base)
    for x, y, z in triples:
        lhs = space.distance(x, z)
        rhs = m.op(space.distance(x, y), space.distance(y, z))
        if not m.le(lhs, rhs):
            out.append(Violation("metric.triangle", (x, y, z, lhs, rhs)))
    return out


def sample_triples(points: Sequence, count: int, rng) -> list[tuple]:
    pts = tuple(points)
    return [
        (rng.choice(pts), rng.choice(pts), rng.choice(pts))
        for _ in range(count)
    ]


def verify_norm(ng: NormedGroup, sample: Sequence | None = None) -> list[Violation]:
    """Exact check of the group-norm laws plus derived consequences.

    Base laws: norm is nonnegative, vanishes exactly at the identity, and
    norm(g - h) <= norm(g) + norm(h).  Derived and also checked: inverse
    invariance, plain subadditivity, and (when the codomain has negation)
    the reverse triangle inequality.
    """
    g, m = ng.group, ng.codomain
    sample = tuple(sample if sample is not None else ng.sample)
    out: list[Violation] = []
    for a in sample:
        na = ng.norm(a)
        if not m.le(m.identity, na):
            out.append(Violation("norm.nonneg", (a, na)))
        if g.eq(a, g.identity) != m.eq(na, m.identity):
            out.append(Violation("norm.definite", (a, na)))
        if not m.eq(ng.norm(g.negate(a)), na):
            out.append(Violation("norm.inverse-invariance", (a,)))
    for a in sample:
        for b in sample:
            bound = m.op(ng.norm(a), ng.norm(b))
            if not m.le(ng.norm(g.sub(a, b)), bound):
                out.append(Violation("norm.subadditive-diff", (a, b)))
            if not m.le(ng.norm(g.op(a, b)), bound):
                out.append(Violation("norm.subadditive", (a, b)))
            if m.negate is not None:
                gap = m.sub(ng.norm(a), ng.norm(b))
                if not m.le(gap, ng.norm(g.sub(a, b))):
                    out.append(Violation("norm.reverse-triangle", (a, b)))
    return out
