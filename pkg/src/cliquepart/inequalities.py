"""Valid inequalities for the clique partitioning polytope.

Families implemented: box, triangle, cycle, relaxed cycle, chorded cycle
(with its paired reverse form), plus zero lifting, a rounding certificate
that derives the chorded cycle inequality from boxes and triangles, and
exact evaluation helpers.  Coefficients and right-hand sides are exact.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    EdgeVector,
    Partition,
    edge_count,
    edge_index,
    normalize_edge,
    restricted_growth_strings,
)

Edge = tuple[int, int]

VALIDITY_ENUMERATION_LIMIT = 12


class BudgetExceeded(Exception):
    """Raised when an exhaustive operation is asked to exceed its size guard."""


@dataclass
class Inequality:
    """Sparse linear inequality sum(coeffs[e] * x_e) <= rhs over edges of K_n."""

    n: int
    coeffs: dict[Edge, object]
    rhs: object
    label: str = field(default="custom", compare=False)

    def __post_init__(self):
        clean: dict[Edge, object] = {}
        for (i, j), c in self.coeffs.items():
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i},{j}) invalid for n={self.n}")
            if c != 0:
                clean[(i, j)] = c
        self.coeffs = clean

    def sorted_items(self) -> list[tuple[Edge, object]]:
        """Nonzero coefficients in edge_index order."""
        return sorted(self.coeffs.items(), key=lambda it: edge_index(self.n, *it[0]))

    def nnz(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Inequality)
            and self.n == other.n
            and self.coeffs == other.coeffs
            and self.rhs == other.rhs
        )

    def __repr__(self) -> str:
        return f"Inequality(n={self.n}, label={self.label}, nnz={self.nnz()}, rhs={self.rhs})"


def box_inequalities(n: int) -> list[Inequality]:
    """-x_e <= 0 and x_e <= 1 for every edge, in edge_index order."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = []
    for e in combinations(range(n), 2):
        out.append(Inequality(n, {e: -1}, 0, label="box"))
        out.append(Inequality(n, {e: 1}, 1, label="box"))
    return out


def triangle_inequality(n: int, center: int, a: int, b: int) -> Inequality:
    """x_{a,center} + x_{center,b} - x_{a,b} <= 1 (a, b are the apex pair)."""
    if len({center, a, b}) != 3:
        raise ValueError("nodes must be pairwise distinct")
    ea = normalize_edge(n, a, center)
    eb = normalize_edge(n, center, b)
    eab = normalize_edge(n, a, b)
    return Inequality(n, {ea: 1, eb: 1, eab: -1}, 1, label="triangle")


def triangle_inequalities(n: int) -> list[Inequality]:
    """All 3*C(n,3) triangle inequalities; per sorted triple the center runs
    in ascending order, which fixes a deterministic overall order."""
    if n < 3:
        raise ValueError("need n >= 3")
    out = []
    for a, b, c in combinations(range(n), 3):
        out.append(triangle_inequality(n, a, b, c))
        out.append(triangle_inequality(n, b, a, c))
        out.append(triangle_inequality(n, c, a, b))
    return out


def _check_chord_range(k: int, q: int) -> None:
    if not (2 <= q and 2 * q <= k):
        raise ValueError(f"need 2 <= q <= k/2, got k={k}, q={q}")


def chorded_cycle_rhs(k: int, q: int) -> int:
    return k - math.ceil(k / q)


def chorded_cycle_inequality(k: int, q: int) -> Inequality:
    """sum over i in Z_k of (x_{i,i+1} - x_{i,i+q}) <= k - ceil(k/q).

    Coefficients accumulate per edge, so for q = k/2 each diagonal receives
    -2 (the two endpoints both contribute it as their q-chord).
    """
    _check_chord_range(k, q)
    coeffs: dict[Edge, int] = {}
    for i in range(k):
        e = normalize_edge(k, i, i + 1)
        coeffs[e] = coeffs.get(e, 0) + 1
        c = normalize_edge(k, i, i + q)
        coeffs[c] = coeffs.get(c, 0) - 1
    return Inequality(k, coeffs, chorded_cycle_rhs(k, q), label=f"chorded({k},{q})")


def chorded_cycle_on_sequence(nodes: Sequence[int], n: int, q: int) -> Inequality:
    """Chorded cycle inequality instantiated on an explicit node cycle.

    nodes lists a cycle of distinct nodes of K_n; position arithmetic is
    modulo its length.
    """
    k = len(nodes)
    _check_chord_range(k, q)
    if len(set(nodes)) != k:
        raise ValueError("cycle nodes must be distinct")
    coeffs: dict[Edge, int] = {}
    for i in range(k):
        e = normalize_edge(n, nodes[i], nodes[(i + 1) % k])
        coeffs[e] = coeffs.get(e, 0) + 1
        c = normalize_edge(n, nodes[i], nodes[(i + q) % k])
        coeffs[c] = coeffs.get(c, 0) - 1
    return Inequality(n, coeffs, chorded_cycle_rhs(k, q), label=f"chorded({k},{q})")


def cycle_inequality(k: int, i: int, q: int) -> Inequality:
    """sum_{j=0}^{q-1} x_{i+j,i+j+1} - x_{i,i+q} <= q-1."""
    _check_chord_range(k, q)
    coeffs: dict[Edge, int] = {}
    for j in range(q):
        e = normalize_edge(k, i + j, i + j + 1)
        coeffs[e] = coeffs.get(e, 0) + 1
    c = normalize_edge(k, i, i + q)
    coeffs[c] = coeffs.get(c, 0) - 1
    return Inequality(k, coeffs, q - 1, label="cycle")


def relaxed_cycle_inequality(k: int, i: int, q: int) -> Inequality:
    """Cycle inequality with the chord coefficient deepened to -q."""
    ineq = cycle_inequality(k, i, q)
    c = normalize_edge(k, i, i + q)
    coeffs = dict(ineq.coeffs)
    coeffs[c] = coeffs.get(c, 0) - (q - 1)
    return Inequality(k, coeffs, q - 1, label="relaxed_cycle")


def paired_inequality(k: int, q: int) -> Inequality:
    """The reverse-side partner of the chorded cycle inequality for k = 1 mod q.

    The q-chords of the k-cycle themselves form a k-cycle whose p-chords,
    p = (k-1)/q, are the original cycle edges; the p-chorded inequality on
    that chord cycle is exactly the negated chorded cycle inequality with
    right-hand side k - q - 1.
    """
    _check_chord_range(k, q)
    if (k - 1) % q != 0:
        raise ValueError(f"need k = 1 mod q, got k={k}, q={q}")
    base = chorded_cycle_inequality(k, q)
    coeffs = {e: -c for e, c in base.coeffs.items()}
    p = (k - 1) // q
    return Inequality(k, coeffs, k - q - 1, label=f"chorded({k},{p})")


@dataclass
class CgCertificate:
    """Non-negative combination of boxes and triangles whose rounded-down
    right-hand side yields a chorded cycle inequality."""

    k: int
    q: int
    terms: list[tuple[Inequality, Fraction]]
    combined_rhs: Fraction
    floored_rhs: int


def cg_certificate(k: int, q: int) -> CgCertificate:
    """Certificate deriving chorded_cycle_inequality(k, q).

    For each i in Z_k: the q-1 triangles x_{i,i+j} + x_{i+j,i+j+1} -
    x_{i,i+j+1} <= 1 (j = 1..q-1) with multiplier 1/q, and the box
    -x_{i,i+q} <= 0 with multiplier (q-1)/q.  The combination telescopes to
    the chorded cycle left-hand side with right-hand side k(q-1)/q, whose
    floor is k - ceil(k/q).
    """
    _check_chord_range(k, q)
    terms: list[tuple[Inequality, Fraction]] = []
    tri_mult = Fraction(1, q)
    box_mult = Fraction(q - 1, q)
    for i in range(k):
        for j in range(1, q):
            terms.append((triangle_inequality(k, (i + j) % k, i % k, (i + j + 1) % k), tri_mult))
        terms.append((Inequality(k, {normalize_edge(k, i, i + q): -1}, 0, label="box"), box_mult))
    combined = Fraction(k * (q - 1), q)
    return CgCertificate(k, q, terms, combined, math.floor(combined))


def verify_certificate(cert: CgCertificate, target: Inequality) -> bool:
    """Exact check that the certificate combination reproduces target.

    Requires non-negative multipliers, combined coefficients equal to the
    target coefficients, and floor(combined rhs) equal to the target rhs.
    """
    combo: dict[Edge, Fraction] = {}
    rhs = Fraction(0)
    for ineq, mult in cert.terms:
        if ineq.n != target.n:
            raise ValueError("certificate term dimension does not match target")
        if ineq.label not in ("box", "triangle"):
            return False
        if mult < 0:
            return False
        for e, c in ineq.coeffs.items():
            combo[e] = combo.get(e, Fraction(0)) + mult * c
        rhs += mult * ineq.rhs
    combo = {e: c for e, c in combo.items() if c != 0}
    if combo != {e: Fraction(c) for e, c in target.coeffs.items()}:
        return False
    return math.floor(rhs) == target.rhs


def zero_lift(ineq: Inequality, m: int) -> Inequality:
    """Reinterpret the inequality over K_m, m >= n; new edges get coefficient 0."""
    if m < ineq.n:
        raise ValueError(f"cannot lift from n={ineq.n} down to m={m}")
    return Inequality(m, dict(ineq.coeffs), ineq.rhs, label="lifted")


def evaluate(ineq: Inequality, x: EdgeVector):
    """Exact value of the left-hand side at x."""
    if x.n != ineq.n:
        raise ValueError(f"dimension mismatch: inequality n={ineq.n}, vector n={x.n}")
    e = x.entries
    n = ineq.n
    return sum(c * e[edge_index(n, i, j)] for (i, j), c in ineq.coeffs.items())


def violation(ineq: Inequality, x: EdgeVector):
    """evaluate(x) - rhs; positive iff x violates the inequality."""
    return evaluate(ineq, x) - ineq.rhs


def is_tight(ineq: Inequality, x: EdgeVector) -> bool:
    return evaluate(ineq, x) == ineq.rhs


def evaluate_on_membership(ineq: Inequality, membership: Sequence[int]):
    """Left-hand side at the characteristic vector of a partition given as a
    block-label array, without materializing the vector."""
    return sum(c for (i, j), c in ineq.coeffs.items() if membership[i] == membership[j])


def is_valid_over_polytope(ineq: Inequality, k: int | None = None) -> bool:
    """Exhaustively check validity over all clique partition vectors of K_n.

    Only for small n; larger instances should rely on a certificate.
    """
    n = ineq.n
    if k is not None and k != n:
        raise ValueError(f"enumeration size {k} does not match inequality n={n}")
    if n > VALIDITY_ENUMERATION_LIMIT:
        raise BudgetExceeded(
            f"exhaustive validity check limited to n <= {VALIDITY_ENUMERATION_LIMIT}"
        )
    items = list(ineq.coeffs.items())
    rhs = ineq.rhs
    for memb in restricted_growth_strings(n):
        val = 0
        for (i, j), c in items:
            if memb[i] == memb[j]:
                val += c
        if val > rhs:
            return False
    return True


# --- text format ------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(tok: str) -> Fraction | int:
    """Exact rational literal: integer or p/q.  Floats are rejected."""
    if not _RATIONAL_RE.match(tok):
        raise ValueError(f"not an exact rational literal: {tok!r}")
    if "/" in tok:
        return Fraction(tok)
    return int(tok)


def format_rational(v) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


def format_inequality(ineq: Inequality) -> str:
    """Wire format: header `ineq n=<n> rhs=<r>`, one `<i> <j> <coeff>` line
    per nonzero in edge_index order."""
    lines = [f"ineq n={ineq.n} rhs={format_rational(ineq.rhs)}"]
    for (i, j), c in ineq.sorted_items():
        lines.append(f"{i} {j} {format_rational(c)}")
    return "\n".join(lines) + "\n"


def parse_inequality(text: str) -> Inequality:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty inequality text")
    m = re.match(r"^ineq n=(\d+) rhs=(\S+)$", lines[0])
    if not m:
        raise ValueError(f"bad inequality header: {lines[0]!r}")
    n = int(m.group(1))
    rhs = parse_rational(m.group(2))
    coeffs: dict[Edge, object] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"bad coefficient line: {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        if (i, j) in coeffs:
            raise ValueError(f"duplicate edge ({i},{j})")
        coeffs[(i, j)] = parse_rational(parts[2])
    return Inequality(n, coeffs, rhs)
