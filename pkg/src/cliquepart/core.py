"""Complete-graph data model: edges of K_n, set partitions, 0/1 edge vectors.

Nodes are the integers 0..n-1.  Cycle-related code treats them as integers
modulo k.  All vector entries are exact (int or Fraction); floats are never
used anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


def edge_count(n: int) -> int:
    """Number of edges of K_n."""
    return n * (n - 1) // 2


def edge_index(n: int, i: int, j: int) -> int:
    """Lexicographic index of edge {i,j} of K_n, a bijection onto 0..C(n,2)-1."""
    if not (0 <= i < j < n):
        raise ValueError(f"invalid edge ({i},{j}) for n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def index_edge(n: int, idx: int) -> tuple[int, int]:
    """Inverse of edge_index."""
    if not (0 <= idx < edge_count(n)):
        raise ValueError(f"edge index {idx} out of range for n={n}")
    i = 0
    row = n - 1
    while idx >= row:
        idx -= row
        i += 1
        row -= 1
    return i, i + 1 + idx


def all_edges(n: int) -> Iterator[tuple[int, int]]:
    """Edges of K_n in edge_index order."""
    return combinations(range(n), 2)


def normalize_edge(k: int, a: int, b: int) -> tuple[int, int]:
    """Reduce endpoints mod k and return them as a sorted pair."""
    a %= k
    b %= k
    if a == b:
        raise ValueError(f"degenerate edge ({a},{b}) mod {k}")
    return (a, b) if a < b else (b, a)


class Partition:
    """A set partition of {0,..,n-1} in canonical form.

    Blocks are stored sorted by their minimum element, with elements
    ascending inside each block, so equal partitions compare equal.
    """

    __slots__ = ("blocks", "n")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        cleaned = sorted(tuple(sorted(set(b))) for b in blocks if len(tuple(b)))
        seen: set[int] = set()
        total = 0
        for b in cleaned:
            seen.update(b)
            total += len(b)
        if total != len(seen):
            raise ValueError("blocks are not disjoint")
        if seen and (min(seen) != 0 or max(seen) != len(seen) - 1):
            raise ValueError("blocks must cover 0..n-1")
        self.blocks: tuple[tuple[int, ...], ...] = tuple(cleaned)
        self.n: int = total

    @classmethod
    def from_membership(cls, membership: Sequence[int]) -> "Partition":
        """Build from a block-label array (label of each node)."""
        groups: dict[int, list[int]] = {}
        for node, lab in enumerate(membership):
            groups.setdefault(lab, []).append(node)
        return cls(groups.values())

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls([i] for i in range(n))

    def membership(self) -> list[int]:
        """Block label per node; labels follow canonical block order."""
        out = [0] * self.n
        for lab, block in enumerate(self.blocks):
            for node in block:
                out[node] = lab
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)

    def __repr__(self) -> str:
        inner = ";".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"Partition({inner})"


@dataclass(frozen=True)
class EdgeVector:
    """A dense exact vector indexed by the edges of K_n in edge_index order."""

    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != edge_count(self.n):
            raise ValueError(
                f"expected {edge_count(self.n)} entries for n={self.n}, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def zero(cls, n: int) -> "EdgeVector":
        return cls(n, (0,) * edge_count(n))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "EdgeVector":
        e = [0] * edge_count(n)
        e[edge_index(n, *normalize_edge(n, i, j))] = 1
        return cls(n, tuple(e))

    def __getitem__(self, idx: int):
        return self.entries[idx]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def at(self, i: int, j: int):
        """Entry on edge {i,j} (endpoints taken mod n)."""
        a, b = normalize_edge(self.n, i, j)
        return self.entries[edge_index(self.n, a, b)]

    def __add__(self, other: "EdgeVector") -> "EdgeVector":
        self._check(other)
        return EdgeVector(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "EdgeVector") -> "EdgeVector":
        self._check(other)
        return EdgeVector(self.n, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "EdgeVector":
        return EdgeVector(self.n, tuple(-a for a in self.entries))

    def is_binary(self) -> bool:
        return all(a == 0 or a == 1 for a in self.entries)

    def _check(self, other: "EdgeVector") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")


def characteristic_vector(p: Partition) -> EdgeVector:
    """0/1 edge vector with a 1 exactly on edges inside a block of p."""
    memb = p.membership()
    n = p.n
    return EdgeVector(
        n, tuple(1 if memb[i] == memb[j] else 0 for i, j in combinations(range(n), 2))
    )


def is_clique_partition_vector(n: int, x: EdgeVector) -> bool:
    """Whether a binary edge vector is the characteristic vector of a partition.

    Checks x_ij + x_jk - x_ik <= 1 for every ordered triple of pairwise
    distinct nodes (three rotations per unordered triple).
    """
    if x.n != n:
        raise ValueError(f"vector has n={x.n}, expected {n}")
    if not x.is_binary():
        raise ValueError("vector is not 0/1-valued")
    e = x.entries
    for i, j, k in combinations(range(n), 3):
        ij = e[edge_index(n, i, j)]
        jk = e[edge_index(n, j, k)]
        ik = e[edge_index(n, i, k)]
        if ij + jk - ik > 1 or ij + ik - jk > 1 or ik + jk - ij > 1:
            return False
    return True


def restricted_growth_strings(k: int) -> Iterator[list[int]]:
    """All restricted growth strings of length k in lexicographic order.

    Each yielded list is the block label per node of one set partition of
    Z_k; the same buffer is reused between yields, so copy it if kept.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a = [0] * k
    b = [1] * k  # b[j] = 1 + max(a[:j]); a[j] may range over 0..b[j]
    while True:
        yield a
        j = k - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        nb = b[j] + 1 if a[j] == b[j] else b[j]
        for i in range(j + 1, k):
            a[i] = 0
            b[i] = nb


def enumerate_partitions(k: int) -> Iterator[Partition]:
    """Every set partition of {0,..,k-1} exactly once, in restricted
    growth string lexicographic order."""
    for rgs in restricted_growth_strings(k):
        yield Partition.from_membership(rgs)


class CyclePartition:
    """A partition of Z_k into maximal runs of cyclically consecutive nodes.

    Blocks are stored in cyclic node order (start, start+1, ...) and listed
    by ascending start node, where a start node is one whose predecessor is
    in a different block (node 0 for the single-block partition).
    """

    __slots__ = ("k", "blocks")

    def __init__(self, k: int, blocks: Iterable[Sequence[int]]):
        self.k = k
        normalized = []
        for b in blocks:
            b = list(b)
            if not b:
                raise ValueError("empty block")
            for u, v in zip(b, b[1:]):
                if (u + 1) % k != v:
                    raise ValueError(f"block {b} is not a cyclic interval of Z_{k}")
            normalized.append(tuple(b))
        if sum(len(b) for b in normalized) != k or len(
            {x for b in normalized for x in b}
        ) != k:
            raise ValueError("blocks do not partition Z_k")
        if len(normalized) > 1:
            for b in normalized:
                if (b[0] - 1) % k in set(b):
                    raise ValueError(f"block {b} is not maximal / not anchored at a cut")
        self.blocks: tuple[tuple[int, ...], ...] = tuple(
            sorted(normalized, key=lambda b: b[0])
        )

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def as_partition(self) -> Partition:
        return Partition(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CyclePartition)
            and self.k == other.k
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.k, self.blocks))

    def __repr__(self) -> str:
        inner = ";".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"CyclePartition(k={self.k}, {inner})"


def cycle_runs(membership: Sequence[int]) -> list[list[int]]:
    """Maximal runs of cyclically consecutive co-clustered nodes, each in
    cyclic order, listed by ascending start node."""
    k = len(membership)
    cuts = [i for i in range(k) if membership[i] != membership[(i + 1) % k]]
    if not cuts:
        return [list(range(k))]
    starts = sorted((c + 1) % k for c in cuts)
    runs = []
    for s in starts:
        node = s
        run = [s]
        while membership[node] == membership[(node + 1) % k]:
            node = (node + 1) % k
            run.append(node)
        runs.append(run)
    return runs


def induced_cycle_partition(k: int, p: Partition) -> CyclePartition:
    """Cycle partition induced by p: components of the graph on Z_k whose
    edges are the consecutive pairs {i,i+1} co-clustered in p."""
    if p.n != k:
        raise ValueError(f"partition covers {p.n} nodes, expected {k}")
    return CyclePartition(k, cycle_runs(p.membership()))
