"""Named property suites run against a registered structure.

Each suite turns library verifiers into CheckRecords.  A capability the
structure lacks makes the affected check (or the whole suite, when nothing
in it can run) report "unverifiable" rather than failing: not being able
to pose a question is kept distinct from answering it negatively.

Determinism: randomized sampling inside a suite draws from a generator
seeded with (seed, suite, structure), so reports are byte-stable for a
fixed configuration.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import algebra as _algebra
from . import metric as _metric
from .instances import lookup
from .order import (
    CapabilityError,
    OrderResult,
    StructureHandle,
    Violation,
    betweenness,
    checked_split,
    fold_op,
    n_split,
    nat_mul,
    nat_pow,
    split_witness,
    verify_compatibility,
    verify_group,
    verify_hemiring,
    verify_monoid,
)
from .report import PASS, UNVERIFIABLE, VIOLATION, CheckRecord, violation_values
from .sequences import (
    ApartFromZeroWitness,
    CauchyCert,
    ConvCert,
    Seq,
    add_certs,
    apart_tail,
    constant_cert,
    conv_to_cauchy,
    prod_certs,
    refute_distinct_limits,
    scanned_cauchy_cert,
    scanned_conv_cert,
    shift_cert,
    unshift_cert,
    verify_cauchy_cert,
    verify_conv_cert,
)
from .series import (
    MonotoneKind,
    Series,
    alternating_cauchy,
    archimedean_power_modulus,
    bernoulli_check,
    check_monotone,
    condensation_inequalities,
    condense,
    geometric_cert,
    power_limit_is_zero,
    tail_bound,
    terms_vanish,
)
from .termexpr import eval_term, parse_term_expr

SUITE_NAMES = (
    "axioms",
    "density",
    "shrink",
    "metric",
    "sequence",
    "series",
    "condensation",
    "geometric",
    "bernoulli",
    "albert",
)


@dataclass(frozen=True)
class RunConfig:
    """One suite invocation: what to run, against what, how hard, how."""

    structure: str | None = None
    suite: str = "all"
    grid: tuple[str, ...] = ()
    horizon: int = 64
    seed: int = 0
    format: str = "json"

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITE_NAMES:
            raise ValueError(
                f"unknown suite {self.suite!r}; available: all, "
                + ", ".join(SUITE_NAMES)
            )
        if not isinstance(self.horizon, int) or self.horizon < 1:
            raise ValueError("horizon must be a positive integer")
        if not isinstance(self.seed, int):
            raise ValueError("seed must be an integer")
        if self.format not in ("json", "text"):
            raise ValueError("format must be json or text")


def resolve_grid(handle: StructureHandle, raw: Sequence[str]) -> tuple:
    """Grid of positive epsilon values: parsed overrides or the default."""
    if raw:
        vals = tuple(eval_term(parse_term_expr(g), handle, 1) for g in raw)
    else:
        vals = tuple(handle.eps_grid)
    if not vals:
        raise CapabilityError(f"{handle.name} has no epsilon scale registered")
    for v in vals:
        if not handle.is_positive(v):
            raise ValueError(f"{handle.name}: grid value {handle.fmt(v)} is not positive")
    return vals


class _Collector:
    """Accumulates records for one suite run over one structure."""

    def __init__(self, suite: str, handle: StructureHandle):
        self.suite = suite
        self.handle = handle
        self.records: list[CheckRecord] = []

    def emit(self, check_id: str, anchor: str, violations, pass_values=(), fmt=None):
        fmt = fmt or self.handle.fmt
        violations = list(violations)
        if violations:
            status, values = VIOLATION, violation_values(violations, fmt)
        else:
            status, values = PASS, tuple(pass_values)
        self.records.append(CheckRecord(
            suite=self.suite, structure=self.handle.name, check_id=check_id,
            status=status, witness_values=values, paper_anchor=anchor,
        ))

    def unverifiable(self, check_id: str, anchor: str):
        self.records.append(CheckRecord(
            suite=self.suite, structure=self.handle.name, check_id=check_id,
            status=UNVERIFIABLE, witness_values=(), paper_anchor=anchor,
        ))

    def block(self, check_id: str, anchor: str, thunk):
        """thunk() -> (violations, pass_values) or (violations, pass_values, fmt);
        a CapabilityError marks the single check unverifiable, while a
        ValueError (a witness rejected the stock instance) is a violation."""
        try:
            got = thunk()
        except CapabilityError:
            self.unverifiable(check_id, anchor)
            return
        except ValueError as exc:
            self.emit(check_id, anchor,
                      [Violation("value.rejected", (str(exc),))], (), str)
            return
        violations, pass_values = got[0], got[1]
        fmt = got[2] if len(got) > 2 else None
        self.emit(check_id, anchor, violations, pass_values, fmt)


# ---------------------------------------------------------------------------
# individual suites


def _suite_axioms(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("axioms", handle)
    if not handle.sample:
        raise CapabilityError(f"{handle.name} has no sample elements registered")
    sample = tuple(handle.sample)

    col.emit("axioms.magma", "magma.laws", verify_monoid(handle, sample))
    if handle.flags.group:
        col.emit("axioms.group", "group.inverses", verify_group(handle, sample))
    if handle.flags.hemiring and handle.second_op is not None:
        col.emit("axioms.hemiring", "hemiring.laws", verify_hemiring(handle, sample))
    col.emit("axioms.order", "order.relation", _order_violations(handle, sample))
    col.emit(
        "axioms.compatibility", "order.compatibility",
        verify_compatibility(handle, sample),
        pass_values=("strict" if handle.strict_compat else "non-strict",),
    )
    if handle.join is not None:
        col.emit("axioms.join", "order.join", _join_violations(handle, sample))
    for p in handle.pnorms:
        ps = p.sample if p.sample else sample
        col.emit(
            f"axioms.pseudonorm.{p.name}", "norm.ring-compatible",
            _algebra.verify_pseudonorm(p, ps),
            fmt=p.codomain.fmt,
        )
    return col.records


def _order_violations(handle: StructureHandle, sample) -> list[Violation]:
    out: list[Violation] = []
    mirror = {
        OrderResult.LESS: OrderResult.GREATER,
        OrderResult.GREATER: OrderResult.LESS,
        OrderResult.EQUAL: OrderResult.EQUAL,
        OrderResult.INCOMPARABLE: OrderResult.INCOMPARABLE,
    }
    for a in sample:
        if handle.compare(a, a) is not OrderResult.EQUAL:
            out.append(Violation("order.reflexive", (a,)))
        for b in sample:
            r = handle.compare(a, b)
            if handle.compare(b, a) is not mirror[r]:
                out.append(Violation("order.mirror", (a, b)))
            if handle.flags.total_order and r is OrderResult.INCOMPARABLE:
                out.append(Violation("order.total", (a, b)))
    small = sample[:6]
    for a in small:
        for b in small:
            for c in small:
                if handle.lt(a, b) and handle.lt(b, c) and not handle.lt(a, c):
                    out.append(Violation("order.transitive", (a, b, c)))
    return out


def _join_violations(handle: StructureHandle, sample) -> list[Violation]:
    out: list[Violation] = []
    join = handle.join.join
    for a in sample:
        for b in sample:
            j = join(a, b)
            if not (handle.le(a, j) and handle.le(b, j)):
                out.append(Violation("join.upper-bound", (a, b, j)))
                continue
            for c in sample:
                if handle.le(a, c) and handle.le(b, c) and not handle.le(j, c):
                    out.append(Violation("join.least", (a, b, c, j)))
    return out


def _suite_density(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("density", handle)
    w = split_witness(handle, None)
    grid = resolve_grid(handle, cfg.grid)
    for eps in grid:
        viols: list[Violation] = []
        echo: tuple[str, ...] = ()
        try:
            beta, gamma = checked_split(handle, w, eps)
            echo = (handle.fmt(beta), handle.fmt(gamma))
        except ValueError as exc:
            viols.append(Violation("density.split", (eps,), str(exc)))
        for n in (2, 3, 4):
            try:
                parts = n_split(handle, eps, n, w)
            except ValueError as exc:
                viols.append(Violation("density.split-chain", (eps, n), str(exc)))
                continue
            if not all(handle.is_positive(p) for p in parts):
                viols.append(Violation("density.positivity", (eps, tuple(parts))))
            if not handle.lt(fold_op(handle, parts), eps):
                viols.append(Violation("density.fold-below", (eps, tuple(parts))))
        col.emit(f"density.split[{handle.fmt(eps)}]", "order.dense-split",
                 viols, pass_values=echo)
    if handle.one is not None and handle.lt(handle.identity, handle.one):
        def between_block():
            mid = betweenness(handle, handle.identity, handle.one, w)
            return [], (handle.fmt(mid),)
        col.block("density.between", "order.dense-between", between_block)
    return col.records


def _suite_shrink(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("shrink", handle)
    w = handle.shrink
    if w is None:
        raise CapabilityError(f"{handle.name} has no shrink witness")
    if handle.second_op is None:
        raise CapabilityError(f"{handle.name} has no second operation")
    grid = resolve_grid(handle, cfg.grid)
    bounds = tuple(x for x in handle.sample if handle.is_positive(x))[:4]
    if not bounds and handle.one is not None:
        bounds = (handle.one,)
    if not bounds:
        raise CapabilityError(f"{handle.name} has no positive sample elements")
    for alpha in grid:
        viols: list[Violation] = []
        echo: list[str] = []
        for m in bounds:
            beta, gamma = w.shrink(alpha, m)
            if not (handle.is_positive(beta) and handle.is_positive(gamma)):
                viols.append(Violation("shrink.positivity", (alpha, m, beta, gamma)))
                continue
            if not handle.lt(handle.second_op(beta, m), alpha):
                viols.append(Violation("shrink.left-product", (alpha, m, beta)))
            if not handle.lt(handle.second_op(m, gamma), alpha):
                viols.append(Violation("shrink.right-product", (alpha, m, gamma)))
            echo.append(
                f"{handle.fmt(m)}->({handle.fmt(beta)},{handle.fmt(gamma)})"
            )
        col.emit(f"shrink.bound[{handle.fmt(alpha)}]", "order.shrink",
                 viols, pass_values=tuple(echo))
    return col.records


def _suite_metric(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("metric", handle)
    if not handle.metrics and not handle.norms:
        raise CapabilityError(f"{handle.name} has no metric or norm registered")
    for space in handle.metrics:
        pts = tuple(space.points)
        triples = list(itertools.product(pts[:4], pts[:4], pts[:4]))
        if pts:
            triples += _metric.sample_triples(pts, 48, rng)
        col.emit(f"metric.space.{space.name}", "metric.laws",
                 _metric.verify_metric(space, triples=triples),
                 pass_values=(f"points={len(pts)}", f"triples={len(triples)}"),
                 fmt=space.codomain.fmt)
    for ng in handle.norms:
        col.emit(f"metric.norm.{ng.name}", "norm.group-laws",
                 _metric.verify_norm(ng),
                 fmt=ng.codomain.fmt)
    return col.records


def _first_metric(handle: StructureHandle):
    if not handle.metrics:
        raise CapabilityError(f"{handle.name} has no metric space registered")
    return handle.metrics[0]


def _suite_sequence(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("sequence", handle)
    space = _first_metric(handle)
    m = space.codomain
    grid = resolve_grid(m, cfg.grid)
    h = cfg.horizon
    # constants must be points of the metric space: a structure may carry
    # extra elements (a bottom, say) its registered distance does not cover
    pool = tuple(space.points) or tuple(handle.sample)
    if not pool:
        raise CapabilityError(f"{handle.name} has no sample points registered")
    v = pool[0]
    c = constant_cert(space, v)
    mfmt = m.fmt

    def echo_conv(cert: ConvCert):
        return tuple(f"N({mfmt(eps)})={cert.modulus(eps)}" for eps in grid)

    def echo_cauchy(cert: CauchyCert):
        return tuple(f"N({mfmt(eps)})={cert.modulus(eps)}" for eps in grid)

    col.block("sequence.constant", "cauchy.modulus",
              lambda: (verify_conv_cert(c, grid, h), echo_conv(c), mfmt))

    def to_cauchy():
        cc = conv_to_cauchy(c)
        return verify_cauchy_cert(cc, grid, h), echo_cauchy(cc), mfmt
    col.block("sequence.to-cauchy", "cauchy.from-limit", to_cauchy)

    def add_block():
        cs = add_certs(c, c, handle)
        return verify_conv_cert(cs, grid, h), echo_conv(cs), mfmt
    col.block("sequence.add", "cauchy.sum", add_block)

    def shift_block():
        sh = shift_cert(c, 3)
        back = unshift_cert(sh, c.seq, 3)
        return (verify_conv_cert(sh, grid, h) + verify_conv_cert(back, grid, h),
                (), mfmt)
    col.block("sequence.shift", "cauchy.shift", shift_block)

    def uniqueness_block():
        other = next((u for u in pool if not handle.eq(u, v)), None)
        if other is None:
            raise CapabilityError(f"{handle.name} sample has no two distinct points")
        bogus = ConvCert(space, c.seq, other, lambda eps: 1)
        rec = refute_distinct_limits(c, bogus)
        viols = [] if rec.refuted else [Violation(
            "limit.uniqueness", (rec.eps, rec.index),
            "distinct limits were not refuted")]
        return viols, (mfmt(rec.eps), mfmt(rec.beta), mfmt(rec.gamma),
                       str(rec.index)), mfmt
    col.block("sequence.uniqueness", "limit.uniqueness", uniqueness_block)

    def product_block():
        if not handle.pnorms:
            raise CapabilityError(f"{handle.name} has no pseudonorm registered")
        pnr = handle.pnorms[0]
        prod = prod_certs(c, c, pnr)
        return verify_conv_cert(prod, grid, h), echo_conv(prod), mfmt
    col.block("sequence.product", "cauchy.product", product_block)

    def apart_block():
        if not handle.norms:
            raise CapabilityError(f"{handle.name} has no norm registered")
        ng = handle.norms[0]
        w0 = next((u for u in pool if not handle.eq(u, handle.identity)), None)
        if w0 is None:
            raise CapabilityError("apartness needs a nonzero sample point")
        cc = conv_to_cauchy(constant_cert(space, w0, name="const-apart"))
        witness = ApartFromZeroWitness(eps=ng.norm(w0), selector=lambda n: n)
        gamma, n0 = apart_tail(cc, witness, ng)
        return [], (ng.codomain.fmt(gamma), str(n0)), ng.codomain.fmt
    col.block("sequence.apart", "norm.apart-tail", apart_block)

    return col.records


_SERIES_BASES = (Fraction(1, 2), Fraction(2, 3), Fraction(1, 3))


def _sizes_vanish(space, grid, zero, probe) -> bool:
    """True when each grid bound is eventually beaten by the probed sizes."""
    m = space.codomain
    sizes = tuple(space.distance(p, zero) for p in probe)
    return all(any(m.lt(s, eps) for s in sizes) for eps in grid)


def _stock_terms(handle: StructureHandle, space, grid, want_limit: bool):
    """Geometric-style terms whose sizes genuinely vanish at every grid scale.

    Rational bases are tried first; structures whose order ranks every
    rational above some grid bound (an infinitesimal scale) fall through to
    bases built from their published symbols.  Returns (label, terms, limit,
    symbolic) -- symbolic terms double in representation size under index
    doubling, which callers use to keep windows small.
    """
    cands: list[tuple[str, object]] = []
    if handle.from_rational is not None:
        cands.extend(("rational", q) for q in _SERIES_BASES)
    if (handle.second_op is not None and handle.invert is not None
            and handle.one is not None and handle.negate is not None):
        cands.extend(("symbol", name) for name in sorted(handle.symbols))
    for kind, payload in cands:
        try:
            if kind == "rational":
                q = payload
                label = str(q)
                term_at = lambda n, q=q: handle.from_rational(q ** n)
                limit = handle.from_rational(q / (1 - q)) if want_limit else None
            else:
                r = handle.invert(handle.symbols[payload])
                if not (handle.lt(handle.identity, r) and handle.lt(r, handle.one)):
                    continue
                label = handle.fmt(r)
                term_at = lambda n, r=r: nat_pow(handle, r, n)
                limit = None
                if want_limit:
                    one_minus = handle.op(handle.one, handle.negate(r))
                    limit = handle.mul(r, handle.invert(one_minus))
            probe = tuple(term_at(k) for k in range(1, 33))
            if not _sizes_vanish(space, grid, handle.identity, probe):
                continue
            terms = Seq(f"geo-terms({label})", term_at)
            return label, terms, limit, kind == "symbol"
        except (ValueError, TypeError):
            continue
    raise CapabilityError(
        f"{handle.name} hosts no stock terms that vanish at every grid scale"
    )


def _suite_series(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("series", handle)
    space = _first_metric(handle)
    m = space.codomain
    grid = resolve_grid(m, cfg.grid)
    h = cfg.horizon
    _, terms, limit, _ = _stock_terms(handle, space, grid, want_limit=True)
    partials = Series(handle, terms).partials
    c = scanned_conv_cert(space, partials, limit, horizon=h)
    mfmt = m.fmt

    def echo(cert):
        return tuple(f"N({mfmt(eps)})={cert.modulus(eps)}" for eps in grid)

    col.block("series.partials-converge", "series.partial-sums",
              lambda: (verify_conv_cert(c, grid, h), echo(c), mfmt))

    def vanish_block():
        tv = terms_vanish(c, handle, terms)
        return verify_conv_cert(tv, grid, h), echo(tv), mfmt
    col.block("series.terms-vanish", "series.terms-vanish", vanish_block)

    def tail_block():
        cc = conv_to_cauchy(c)
        eps = grid[0]
        n0 = cc.modulus(eps)
        chk = tail_bound(cc, eps, n0, n0 + 5)
        viols = [] if chk.ok else [Violation(
            "series.tail", (eps, chk.m, chk.n, chk.tail_norm))]
        return viols, (mfmt(chk.tail_norm), f"N({mfmt(eps)})={n0}"), mfmt
    col.block("series.tail-bound", "series.tail", tail_block)

    def alternating_block():
        mono = check_monotone(handle, terms,
                              MonotoneKind.STRICTLY_DECREASING_POSITIVE, 32)
        c0 = scanned_conv_cert(space, terms, handle.identity, horizon=h)
        alt = alternating_cauchy(handle, space, terms, mono, c0)
        return verify_cauchy_cert(alt, grid, h), echo(alt), mfmt
    col.block("series.alternating", "series.alternating", alternating_block)

    def squeeze_block():
        from .series import squeeze_cauchy
        zero = constant_cert(space, handle.identity, name="zero-sums")
        cx = conv_to_cauchy(zero)
        cz = conv_to_cauchy(c)
        sq = squeeze_cauchy(handle, space, cx, cz, 1, terms)
        return verify_cauchy_cert(sq, grid, h), echo(sq), mfmt
    col.block("series.squeeze", "series.squeeze", squeeze_block)

    return col.records


def _suite_condensation(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("condensation", handle)
    handle.require("ring", "total_order")
    space = _first_metric(handle)
    m = space.codomain
    grid = resolve_grid(m, cfg.grid)
    _, terms, _, symbolic = _stock_terms(handle, space, grid, want_limit=False)
    mono = check_monotone(handle, terms, MonotoneKind.DECREASING_POSITIVE, 32)
    partials = Series(handle, terms).partials
    base = scanned_cauchy_cert(space, partials, horizon=min(cfg.horizon, 16))
    mfmt = m.fmt
    # condensed partial sums reach index 2^n; symbolic terms grow linearly in
    # representation with the index, so their windows stay narrow
    fwd_h = min(cfg.horizon, 3 if symbolic else 8)

    def echo(cert):
        return tuple(f"N({mfmt(eps)})={cert.modulus(eps)}" for eps in grid)

    forward_holder: list = []

    def forward_block():
        fwd = condense(handle, space, terms, mono, base, "forward")
        forward_holder.append(fwd)
        return verify_cauchy_cert(fwd, grid, fwd_h), echo(fwd), mfmt
    col.block("condensation.forward", "series.condensation", forward_block)

    def backward_block():
        if not forward_holder:
            raise CapabilityError("forward certificate unavailable")
        back = condense(handle, space, terms, mono, forward_holder[0], "backward")
        return verify_cauchy_cert(back, grid, cfg.horizon), echo(back), mfmt
    col.block("condensation.backward", "series.condensation", backward_block)

    col.block("condensation.blocks", "series.condensation-blocks",
              lambda: (condensation_inequalities(
                  handle, terms, ns=range(1, 7),
                  kls=[(k, l) for k in range(0, 4) for l in range(k, 4)]), ()))

    return col.records


def _suite_geometric(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("geometric", handle)
    handle.require("ring", "total_order")
    if handle.from_rational is None or handle.invert is None:
        raise CapabilityError(f"{handle.name} cannot host the stock ratios")
    space = _first_metric(handle)
    m = space.codomain
    grid = resolve_grid(m, cfg.grid)
    h = cfg.horizon
    mfmt = m.fmt

    cands: list[tuple[str, object]] = [("rational", q) for q in _SERIES_BASES]
    cands.extend(("symbol", name) for name in sorted(handle.symbols))
    r = inv = None
    for kind, payload in cands:
        try:
            cand = (handle.from_rational(payload) if kind == "rational"
                    else handle.invert(handle.symbols[payload]))
            if not (handle.lt(handle.identity, cand) and handle.lt(cand, handle.one)):
                continue
            probe = tuple(nat_pow(handle, cand, k) for k in range(1, 33))
            if not _sizes_vanish(space, grid, handle.identity, probe):
                continue
            inv = handle.invert(handle.sub(handle.one, cand))
            r = cand
            break
        except (ValueError, TypeError):
            continue
    if r is None:
        raise CapabilityError(
            f"{handle.name} hosts no stock ratio whose powers vanish at every "
            "grid scale"
        )

    powers = Seq(f"pow({handle.fmt(r)})", lambda n: nat_pow(handle, r, n))
    c0 = scanned_conv_cert(space, powers, handle.identity, horizon=h)

    def cert_block():
        g = geometric_cert(handle, space, r, c0, inv)
        echoes = tuple(f"N({mfmt(eps)})={g.modulus(eps)}" for eps in grid)
        return verify_conv_cert(g, grid, h), (handle.fmt(inv),) + echoes, mfmt
    col.block("geometric.certificate", "series.geometric", cert_block)

    col.block("geometric.power-limit", "series.power-limit",
              lambda: (power_limit_is_zero(handle, c0, r), (), mfmt))

    def modulus_block():
        ap = archimedean_power_modulus(handle, space, r)
        echoes = tuple(f"N({mfmt(eps)})={ap.modulus(eps)}" for eps in grid)
        return verify_conv_cert(ap, grid, h), echoes, mfmt
    col.block("geometric.power-modulus", "series.archimedean-power", modulus_block)

    return col.records


def _suite_bernoulli(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("bernoulli", handle)
    handle.require("hemiring", "total_order")
    if handle.one is None:
        raise CapabilityError(f"{handle.name} has no multiplicative identity")
    grid = resolve_grid(handle, cfg.grid)

    def fmt_xs(xs):
        return tuple(handle.fmt(x) for x in xs)

    def semiring_block():
        pool = tuple(grid) + (handle.identity, handle.one)
        xs = [nat_mul(handle, rng.randint(0, 2), rng.choice(pool))
              if rng.random() < 0.8 else handle.identity
              for _ in range(4)]
        return bernoulli_check(handle, xs, "semiring"), fmt_xs(xs)
    col.block("bernoulli.semiring", "inequality.product-sum", semiring_block)

    def ring_block():
        handle.require("ring")
        small = [u for u in grid if handle.le(u, handle.one)]
        pool = [handle.negate(u) for u in small] + [handle.identity]
        xs = [rng.choice(pool) for _ in range(4)]
        return bernoulli_check(handle, xs, "ring"), fmt_xs(xs)
    col.block("bernoulli.ring", "inequality.product-sum", ring_block)

    def power_block():
        handle.require("ring")
        u = rng.choice(tuple(grid) + (handle.one,))
        n = rng.randint(2, 5)
        return bernoulli_check(handle, [u] * n, "power"), fmt_xs([u] * n) + (str(n),)
    col.block("bernoulli.power", "inequality.power", power_block)

    return col.records


def _suite_albert(handle: StructureHandle, cfg: RunConfig, rng: random.Random):
    col = _Collector("albert", handle)
    if handle.name != "Q":
        raise CapabilityError(
            "structure-constant tables are registered over Q only"
        )
    algs = _algebra.shipped_algebras()
    for name in sorted(algs):
        alg = algs[name]
        pn = _algebra.albert_pseudonorm(alg)
        pairs = []
        for _ in range(24):
            pairs.append(tuple(Fraction(rng.randint(-3, 3)) for _ in range(alg.n)))
        bound = _algebra.structure_bound(alg)
        scale = nat_mul(handle, alg.n, bound)
        col.emit(
            f"albert.{name}", "algebra.pseudonorm",
            _algebra.verify_pseudonorm(pn, pairs),
            pass_values=(f"bound={handle.fmt(bound)}",
                         f"scale={handle.fmt(scale)}"),
            fmt=handle.fmt,
        )
    return col.records


_SUITES = {
    "axioms": _suite_axioms,
    "density": _suite_density,
    "shrink": _suite_shrink,
    "metric": _suite_metric,
    "sequence": _suite_sequence,
    "series": _suite_series,
    "condensation": _suite_condensation,
    "geometric": _suite_geometric,
    "bernoulli": _suite_bernoulli,
    "albert": _suite_albert,
}

_ANCHORS = {
    "axioms": "magma.laws",
    "density": "order.dense-split",
    "shrink": "order.shrink",
    "metric": "metric.laws",
    "sequence": "cauchy.modulus",
    "series": "series.partial-sums",
    "condensation": "series.condensation",
    "geometric": "series.geometric",
    "bernoulli": "inequality.product-sum",
    "albert": "algebra.pseudonorm",
}


def run_suite(cfg: RunConfig) -> list[CheckRecord]:
    """Run the configured suite(s); records come back sorted by check id."""
    if not cfg.structure:
        raise ValueError("a structure key is required")
    handle = lookup(cfg.structure)
    names = SUITE_NAMES if cfg.suite == "all" else (cfg.suite,)
    records: list[CheckRecord] = []
    for name in names:
        rng = random.Random(f"{cfg.seed}:{name}:{handle.name}")
        try:
            records.extend(_SUITES[name](handle, cfg, rng))
        except CapabilityError:
            records.append(CheckRecord(
                suite=name, structure=handle.name,
                check_id=f"{name}.capability", status=UNVERIFIABLE,
                witness_values=(), paper_anchor=_ANCHORS[name],
            ))
    return sorted(records, key=lambda r: r.check_id)
