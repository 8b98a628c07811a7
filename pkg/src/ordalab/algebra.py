"""Ring pseudonorms, structure-constant algebras, and valuation norms.

A PseudonormedRing is a ring together with a norm into an ordered carrier
that is definite, subadditive on differences, and (sub)multiplicative; the
strict flag upgrades submultiplicativity to exact multiplicativity.

A FinDimAlgebra is given purely by structure constants gamma[i][j][k] over a
base field: the product of basis vectors e_i e_j is sum_k gamma[i][j][k] e_k.
From the largest constant M (measured by the base norm) one gets a scaled
coefficient pseudonorm  a -> n*M*sum_i |a_i|  that is always submultiplicative;
the unscaled coefficient sum is not, and `coefficient_pseudonorm` exists to
demonstrate exactly that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .order import (
    Element,
    OrderResult,
    StructureHandle,
    Violation,
    make_flags,
    nat_mul,
)


@dataclass(frozen=True)
class PseudonormedRing:
    name: str
    ring: StructureHandle
    codomain: StructureHandle
    norm: Callable[[Element], Element]
    strict: bool = False
    sample: tuple = ()


def verify_pseudonorm(p: PseudonormedRing, sample: Sequence | None = None) -> list[Violation]:
    """Exact check of definiteness, subadditivity, and (sub)multiplicativity."""
    r, m = p.ring, p.codomain
    sample = tuple(sample if sample is not None else p.sample)
    out: list[Violation] = []
    for a in sample:
        na = p.norm(a)
        if not m.le(m.identity, na):
            out.append(Violation("pseudonorm.nonneg", (a, na)))
        if r.eq(a, r.identity) != m.eq(na, m.identity):
            out.append(Violation("pseudonorm.definite", (a, na)))
    for a in sample:
        for b in sample:
            if r.negate is not None:
                diff = p.norm(r.sub(a, b))
                if not m.le(diff, m.op(p.norm(a), p.norm(b))):
                    out.append(Violation("pseudonorm.subadditive", (a, b)))
            prod = p.norm(r.mul(a, b))
            bound = m.mul(p.norm(a), p.norm(b))
            ok = m.eq(prod, bound) if p.strict else m.le(prod, bound)
            if not ok:
                law = "pseudonorm.multiplicative" if p.strict else "pseudonorm.submultiplicative"
                out.append(Violation(law, (a, b, prod, bound)))
    return out


# ---------------------------------------------------------------------------
# structure-constant algebras


@dataclass(frozen=True)
class FinDimAlgebra:
    """An algebra over `field` defined by structure constants.

    gamma[i][j][k] is the e_k coefficient of e_i * e_j.  Elements are
    coefficient tuples of length n.  No associativity or unit is assumed.
    """

    name: str
    field: StructureHandle
    codomain: StructureHandle
    base_norm: Callable[[Element], Element]
    gamma: tuple
    basis: tuple = ()

    @property
    def n(self) -> int:
        return len(self.gamma)

    def zero(self) -> tuple:
        return (self.field.identity,) * self.n

    def add(self, a, b):
        return tuple(self.field.op(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.field.negate(x) for x in a)

    def multiply(self, a, b):
        f = self.field
        out = [f.identity] * self.n
        for i, ai in enumerate(a):
            if f.eq(ai, f.identity):
                continue
            for j, bj in enumerate(b):
                if f.eq(bj, f.identity):
                    continue
                scale = f.mul(ai, bj)
                for k, g in enumerate(self.gamma[i][j]):
                    if not f.eq(g, f.identity):
                        out[k] = f.op(out[k], f.mul(scale, g))
        return tuple(out)

    def fmt(self, a) -> str:
        names = self.basis if self.basis else tuple(f"e{i+1}" for i in range(self.n))
        return "(" + ", ".join(f"{self.field.fmt(c)}{n}" for c, n in zip(a, names)) + ")"


def element_handle(alg: FinDimAlgebra) -> StructureHandle:
    """The algebra's elements as a structure (trivially ordered)."""

    def compare(a, b):
        return OrderResult.EQUAL if a == b else OrderResult.INCOMPARABLE

    return StructureHandle(
        name=f"{alg.name}.elements",
        flags=make_flags(group=True, commutative_add=True),
        op=alg.add,
        compare=compare,
        identity=alg.zero(),
        negate=alg.neg,
        second_op=alg.multiply,
        sample=(),
        fmt=alg.fmt,
    )


def structure_bound(alg: FinDimAlgebra) -> Element:
    """M: the largest base norm among all structure constants."""
    m = alg.codomain
    m.require("total_order")
    values = [alg.base_norm(g) for plane in alg.gamma for row in plane for g in row]
    best = values[0]
    for v in values[1:]:
        if m.lt(best, v):
            best = v
    return best


def albert_pseudonorm(alg: FinDimAlgebra) -> PseudonormedRing:
    """The scaled coefficient pseudonorm  a -> n*M*sum_i |a_i|.

    M is the structure bound; the n*M scaling is what makes the norm
    submultiplicative for every structure-constant table.
    """
    m = alg.codomain
    m.require("total_order", "hemiring")
    big_m = structure_bound(alg)
    if m.eq(big_m, m.identity):
        raise ValueError(
            f"{alg.name}: all structure constants vanish; the product is "
            "trivial and the scaled norm would not be definite"
        )
    scale = nat_mul(m, alg.n, big_m)

    def norm(a):
        acc = m.identity
        for c in a:
            acc = m.op(acc, alg.base_norm(c))
        return m.mul(scale, acc)

    return PseudonormedRing(
        name=f"{alg.name}.scaled-coefficient",
        ring=element_handle(alg),
        codomain=m,
        norm=norm,
        strict=False,
    )


def coefficient_pseudonorm(alg: FinDimAlgebra) -> PseudonormedRing:
    """The unscaled coefficient sum  a -> sum_i |a_i|  (not submultiplicative
    in general; kept as the designed counterexample to the scaling)."""
    m = alg.codomain

    def norm(a):
        acc = m.identity
        for c in a:
            acc = m.op(acc, alg.base_norm(c))
        return acc

    return PseudonormedRing(
        name=f"{alg.name}.coefficient",
        ring=element_handle(alg),
        codomain=m,
        norm=norm,
        strict=False,
    )


def load_algebra_table(source: str | dict, field: StructureHandle | None = None) -> FinDimAlgebra:
    """Build an algebra from a JSON table {name, n, gamma, basis?}.

    gamma is a flat row-major list of n^3 scalars (index i*n*n + j*n + k);
    an n*n*n nested list is also accepted.  Entries are exact rational
    strings or integers.  Raises ValueError on any shape or parse problem.
    """
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = source
    if not isinstance(data, dict):
        raise ValueError("algebra table must be a JSON object")
    unknown = set(data) - {"name", "n", "gamma", "basis"}
    if unknown:
        raise ValueError(f"unknown table keys: {sorted(unknown)}")
    name = data.get("name", "algebra")
    n = data.get("n")
    gamma = data.get("gamma")
    if not isinstance(n, int) or n < 1:
        raise ValueError("table key 'n' must be a positive integer")
    if field is None:
        from .instances import lookup

        field = lookup("Q")

    def cell(v):
        if isinstance(v, bool) or isinstance(v, float):
            raise ValueError("gamma entries must be exact (integer or rational string)")
        if isinstance(v, int):
            return field.from_rational(Fraction(v))
        if isinstance(v, str):
            return field.from_rational(Fraction(v))
        raise ValueError(f"bad gamma entry {v!r}")

    if not isinstance(gamma, list):
        raise ValueError("gamma must be a flat list of n^3 scalars")
    if len(gamma) == n ** 3 and not any(isinstance(v, list) for v in gamma):
        flat = [cell(v) for v in gamma]
        table = [
            tuple(
                tuple(flat[i * n * n + j * n + k] for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        ]
    elif len(gamma) == n:
        table = []
        for plane in gamma:
            if not (isinstance(plane, list) and len(plane) == n):
                raise ValueError("gamma must be an n*n*n nested list")
            rows = []
            for row in plane:
                if not (isinstance(row, list) and len(row) == n):
                    raise ValueError("gamma must be an n*n*n nested list")
                rows.append(tuple(cell(v) for v in row))
            table.append(tuple(rows))
    else:
        raise ValueError(
            f"gamma must hold n^3 = {n ** 3} scalars (flat) or be n*n*n nested"
        )
    basis = tuple(data.get("basis", ()))
    if basis and len(basis) != n:
        raise ValueError("basis names must match n")
    from .metric import absolute_value

    return FinDimAlgebra(
        name=str(name),
        field=field,
        codomain=field,
        base_norm=lambda c: absolute_value(field, c),
        gamma=tuple(table),
        basis=basis,
    )


def _table_from_products(n: int, products: dict) -> list:
    """gamma as nested lists from {(i, j): {k: coeff}} (missing cells are 0)."""
    g = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), cells in products.items():
        for k, c in cells.items():
            g[i][j][k] = c
    return g


def shipped_algebras() -> dict[str, FinDimAlgebra]:
    """The four bundled structure-constant tables over the rationals."""
    # complex-style plane: basis 1, i with i*i = -1
    gaussian = {
        "name": "Q(i)",
        "n": 2,
        "basis": ["1", "i"],
        "gamma": _table_from_products(2, {
            (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: -1},
        }),
    }
    # quadratic extension with a large constant: basis 1, s with s*s = 10
    sqrt10 = {
        "name": "Q(sqrt10)",
        "n": 2,
        "basis": ["1", "s"],
        "gamma": _table_from_products(2, {
            (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 10},
        }),
    }
    # 2x2 matrices: basis E11, E12, E21, E22; Eab*Ecd = [b=c] Ead
    idx = {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}
    prods = {}
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                prods[(i, j)] = {idx[(a, d)]: 1}
    m2 = {
        "name": "M2(Q)",
        "n": 4,
        "basis": ["E11", "E12", "E21", "E22"],
        "gamma": _table_from_products(4, prods),
    }
    # quaternions: basis 1, i, j, k
    quat = {
        "name": "H(Q)",
        "n": 4,
        "basis": ["1", "i", "j", "k"],
        "gamma": _table_from_products(4, {
            (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
            (1, 0): {1: 1}, (1, 1): {0: -1}, (1, 2): {3: 1}, (1, 3): {2: -1},
            (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {0: -1}, (2, 3): {1: 1},
            (3, 0): {3: 1}, (3, 1): {2: 1}, (3, 2): {1: -1}, (3, 3): {0: -1},
        }),
    }
    return {
        spec["name"]: load_algebra_table(spec)
        for spec in (gaussian, sqrt10, m2, quat)
    }


# ---------------------------------------------------------------------------
# p-adic valuation norm into the exponent semiring


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def padic_valuation(r: Fraction | int, p: int) -> int:
    """The exponent of p in r (r nonzero)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        raise ValueError("the zero element has no valuation")

    def v(n: int) -> int:
        count = 0
        while n % p == 0:
            n //= p
            count += 1
        return count

    return v(abs(r.numerator)) - v(r.denominator)


def padic_norm(r: Fraction | int, p: int):
    """|r|_p as an element of the exponent semiring: None for 0, else the
    negated valuation (larger exponent means larger norm)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        return None
    return -padic_valuation(r, p)
