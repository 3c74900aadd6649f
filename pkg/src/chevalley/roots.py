"""Finite root systems in simple-root coordinates with exact arithmetic.

A root is an integer coefficient vector over the simple roots.  Positive
roots are generated as the closure of the simple roots under the simple
reflections and then frozen in the regular ordering: smaller height first,
ties broken so that the vector with the larger value at the first differing
coordinate precedes.  All inner products go through the symmetric bilinear
form of the diagram; form entries are exact rationals, so squared lengths
of 1, 2 and 2/3 coexist without drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .errors import InternalConsistencyError

Root = Tuple[int, ...]
FormMatrix = Tuple[Tuple[Fraction, ...], ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}


@dataclass(frozen=True)
class Diagram:
    """A Dynkin diagram kind plus rank, e.g. B6 or F4."""

    kind: str
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in _MIN_RANK:
            raise ValueError(
                f"unknown diagram kind {self.kind!r}; expected one of A B C D E F G"
            )
        low = _MIN_RANK[self.kind]
        high = _MAX_RANK.get(self.kind)
        if self.rank < low:
            raise ValueError(f"kind {self.kind} requires rank >= {low}, got {self.rank}")
        if high is not None and self.rank > high:
            raise ValueError(f"kind {self.kind} requires rank <= {high}, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"


def positive_root_count(diagram: Diagram) -> int:
    """Number of positive roots, by the classical closed-form count."""
    n = diagram.rank
    if diagram.kind == "A":
        return n * (n + 1) // 2
    if diagram.kind in ("B", "C"):
        return n * n
    if diagram.kind == "D":
        return n * (n - 1)
    if diagram.kind == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    if diagram.kind == "F":
        return 24
    return 6  # G2


def bilinear_form(diagram: Diagram) -> FormMatrix:
    """Symmetric bilinear form on simple-root coordinates.

    Long simple roots have squared length 2 in every kind; short ones have
    squared length 1 (B, C, F) or 2/3 (G).  The last simple root is the
    short one in B, the long one in C and the chain for F4 runs long, long,
    short, short.
    """
    n = diagram.rank
    kind = diagram.kind
    if kind == "F":
        rows = (
            (2, -1, 0, 0),
            (-1, 2, -1, 0),
            (0, -1, 1, Fraction(-1, 2)),
            (0, 0, Fraction(-1, 2), 1),
        )
        return tuple(tuple(Fraction(x) for x in row) for row in rows)
    if kind == "G":
        return (
            (Fraction(2), Fraction(-1)),
            (Fraction(-1), Fraction(2, 3)),
        )
    if kind == "A":
        diag = [Fraction(2)] * n
        edges = {(i, i + 1): Fraction(-1) for i in range(n - 1)}
    elif kind == "B":
        diag = [Fraction(2)] * (n - 1) + [Fraction(1)]
        edges = {(i, i + 1): Fraction(-1) for i in range(n - 1)}
    elif kind == "C":
        diag = [Fraction(1)] * (n - 1) + [Fraction(2)]
        edges = {(i, i + 1): Fraction(-1, 2) for i in range(n - 2)}
        edges[(n - 2, n - 1)] = Fraction(-1)
    elif kind == "D":
        diag = [Fraction(2)] * n
        edges = {(i, i + 1): Fraction(-1) for i in range(n - 2)}
        edges[(n - 3, n - 1)] = Fraction(-1)
    else:  # E6, E7, E8: node 1 hangs off node 3 of the chain 0-2-3-4-...
        diag = [Fraction(2)] * n
        chain = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]
        edges = {edge: Fraction(-1) for edge in chain}
        edges[(1, 3)] = Fraction(-1)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = diag[i]
    for (i, j), value in edges.items():
        matrix[i][j] = value
        matrix[j][i] = value
    return tuple(tuple(row) for row in matrix)


def _regular_order_key(root: Root):
    return (sum(root), tuple(-c for c in root))


def _reflection_closure(form: FormMatrix, rank: int) -> Tuple[Root, ...]:
    """All positive roots, as the simple-reflection closure of the simples.

    Reflecting a positive root in a simple root either stays inside the
    positive cone or lands on a negative root; discarding everything with a
    negative coordinate therefore leaves exactly the positive system once
    the iteration reaches a fixpoint.
    """
    norms = [form[i][i] for i in range(rank)]

    def cartan_pairing(beta: Root, i: int) -> int:
        # 2(beta, alpha_i) / (alpha_i, alpha_i); integral for any root beta.
        value = 2 * sum(form[k][i] * beta[k] for k in range(rank) if beta[k]) / norms[i]
        if value.denominator != 1:
            raise InternalConsistencyError(
                f"non-integral Cartan pairing {value} for root {beta}"
            )
        return int(value)

    simples = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        fresh = []
        for beta in frontier:
            for i in range(rank):
                c = cartan_pairing(beta, i)
                if not c:
                    continue
                image = list(beta)
                image[i] -= c
                mirrored = tuple(image)
                if min(mirrored) >= 0 and mirrored not in found:
                    found.add(mirrored)
                    fresh.append(mirrored)
        frontier = fresh
    return tuple(sorted(found, key=_regular_order_key))


class RootSystem:
    """Immutable bundle of a diagram, its bilinear form and the positive roots.

    ``positive_roots`` holds the regular ordering; ``index`` maps coordinate
    tuples back to positions for O(1) membership, which is the hot path of
    every algorithm downstream.  Negative roots are never stored; callers
    track them as (positive index, sign) pairs.
    """

    def __init__(self, diagram: Diagram, form: FormMatrix, positive_roots: Tuple[Root, ...]):
        self.diagram = diagram
        self.form = form
        self.positive_roots = positive_roots
        self.index: Dict[Root, int] = {root: k for k, root in enumerate(positive_roots)}
        self._squared = tuple(self.inner_product(r, r) for r in positive_roots)

    @property
    def rank(self) -> int:
        return self.diagram.rank

    @property
    def kind(self) -> str:
        return self.diagram.kind

    def __len__(self) -> int:
        return len(self.positive_roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.diagram}, {len(self)} positive roots)"

    def inner_product(self, a: Sequence, b: Sequence) -> Fraction:
        """Exact bilinear-form product of two coordinate vectors."""
        form = self.form
        total = Fraction(0)
        for k, ak in enumerate(a):
            if not ak:
                continue
            row = form[k]
            total += ak * sum(row[l] * bl for l, bl in enumerate(b) if bl)
        return total

    def squared_length(self, i: int) -> Fraction:
        """Squared length of the positive root at index ``i`` (precomputed)."""
        return self._squared[i]

    def squared_length_of(self, coords: Sequence) -> Fraction:
        return self.inner_product(coords, coords)

    def height(self, i: int) -> int:
        return sum(self.positive_roots[i])

    def index_of_root(self, coords: Sequence[int]) -> Optional[int]:
        """Position of ``coords`` in the regular ordering, or None.

        Absence is a value, not an error: negative and mixed-sign vectors
        simply map to None.
        """
        return self.index.get(tuple(coords))

    def index_of_sum(self, i: int, j: int) -> Optional[int]:
        """Index of roots[i] + roots[j] if that sum is a positive root."""
        a = self.positive_roots[i]
        b = self.positive_roots[j]
        return self.index.get(tuple(x + y for x, y in zip(a, b)))


def build_root_system(diagram: Diagram) -> RootSystem:
    """Construct the full positive system for ``diagram`` in regular ordering."""
    form = bilinear_form(diagram)
    roots = _reflection_closure(form, diagram.rank)
    expected = positive_root_count(diagram)
    if len(roots) != expected:
        raise InternalConsistencyError(
            f"{diagram}: closure produced {len(roots)} positive roots, expected {expected}"
        )
    for i in range(diagram.rank):
        if sum(roots[i]) != 1 or roots[i][i] != 1:
            raise InternalConsistencyError(
                f"{diagram}: regular ordering does not start with the simple roots"
            )
    return RootSystem(diagram, form, roots)
