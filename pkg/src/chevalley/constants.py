"""Structure constants N(a, b) of the Chevalley basis, computed recursively.

Seeds: every extraspecial pair gets +(p + 1).  Any other special pair (r, s)
shares its sum with an extraspecial pair (r1, s1), and N(r, s) follows from
the four constants of the quartet's smaller pieces:

    N(r, s) = (N(s-r1, r1) N(s1-r, r) + N(r1, r-r1) N(s1-s, s)) / N(r1, s1)

multiplied by phi = |r1+s1|^2 / |s1|^2 when both root lengths occur among
doubled short roots (kind C).  Kinds where non-simple quartets exist (F, G)
always take the general form that weights each term with exact length
ratios.  A term drops whenever its difference vector is not a root.  Every
recursive call strictly reduces the height of the sum involved, so the
recursion bottoms out on seeds and non-root sums.

Mixed-sign and all-negative pairs reduce to the positive table:

    N(a, b) = N(a+b, -b) |a+b|^2 / |a|^2   (a > 0 > b, a+b > 0)
    N(a, b) = N(-a-b, a) |a+b|^2 / |b|^2   (a > 0 > b, a+b < 0)
    N(-a, -b) = -N(a, b)

All division is exact rational; a non-integral result raises instead of
rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .errors import CartanBracketError, InternalConsistencyError
from .pairs import (
    ExtraspecialAssignment,
    SumDictionary,
    assign_extraspecial_constants,
    build_sum_dictionary,
)
from .roots import RootSystem


@dataclass(frozen=True)
class SignedRoot:
    """A positive-root index together with a sign."""

    index: int
    negative: bool = False

    def opposite(self) -> "SignedRoot":
        return SignedRoot(self.index, not self.negative)


class ConstantMatrix:
    """Antisymmetric table of N values over positive-root indices.

    Unfilled slots hold None (a distinct "unknown" state, so 0 = "sum is
    not a root" can never be confused with "not yet computed").  The
    diagonal is 0 from the start: 2a is never a root.
    """

    __slots__ = ("_table",)

    def __init__(self, size: int):
        self._table: List[List[Optional[int]]] = [[None] * size for _ in range(size)]
        for i in range(size):
            self._table[i][i] = 0

    @property
    def size(self) -> int:
        return len(self._table)

    def get(self, i: int, j: int) -> Optional[int]:
        return self._table[i][j]

    def set_antisymmetric(self, i: int, j: int, value: int) -> None:
        self._table[i][j] = value
        self._table[j][i] = -value

    def set_entry(self, i: int, j: int, value: Optional[int]) -> None:
        """Low-level single-slot write (imports, fault injection in tests)."""
        self._table[i][j] = value

    def is_complete(self) -> bool:
        return all(entry is not None for row in self._table for entry in row)

    def unknown_count(self) -> int:
        return sum(1 for row in self._table for entry in row if entry is None)

    def nonzero_upper(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (i, j, N) for i < j with N nonzero."""
        for i, row in enumerate(self._table):
            for j in range(i + 1, len(row)):
                value = row[j]
                if value:
                    yield i, j, value

    def copy(self) -> "ConstantMatrix":
        duplicate = ConstantMatrix.__new__(ConstantMatrix)
        duplicate._table = [row[:] for row in self._table]
        return duplicate

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstantMatrix):
            return NotImplemented
        return self._table == other._table

    def __repr__(self) -> str:
        return f"ConstantMatrix(size={self.size}, unknown={self.unknown_count()})"


def n_positive(
    system: RootSystem,
    matrix: ConstantMatrix,
    dictionary: SumDictionary,
    assignment: ExtraspecialAssignment,
    r: int,
    s: int,
    force_general: bool = False,
) -> int:
    """N(roots[r], roots[s]) for positive roots, memoized into ``matrix``."""
    if r == s:
        raise ValueError("structure constant needs two distinct positive roots")
    known = matrix.get(r, s)
    if known is not None:
        return known
    isum = system.index_of_sum(r, s)
    if isum is None:
        matrix.set_antisymmetric(r, s, 0)
        return 0
    if isum not in dictionary:
        raise InternalConsistencyError(
            f"sum root {isum} has no extraspecial pair; dictionary is inconsistent"
        )
    head = dictionary.extraspecial_pair(isum)
    r1, s1 = head.i, head.j
    if (r, s) == (r1, s1) or (s, r) == (r1, s1):
        seed = assignment.constant_for(isum)
        value = seed if (r, s) == (r1, s1) else -seed
        matrix.set_antisymmetric(r, s, value)
        return value
    n_seed = matrix.get(r1, s1)
    if n_seed is None:
        n_seed = assignment.constant_for(isum)
        matrix.set_antisymmetric(r1, s1, n_seed)

    roots = system.positive_roots
    base = roots[r1]
    diff_s = tuple(x - y for x, y in zip(roots[s], base))
    diff_r = tuple(x - y for x, y in zip(roots[r], base))
    ind_ds = system.index.get(diff_s)
    ind_dr = system.index.get(diff_r)
    n1 = n2 = n3 = n4 = 0
    if ind_ds is not None:
        n1 = n_positive(system, matrix, dictionary, assignment, ind_ds, r1, force_general)
        n2 = n_positive(system, matrix, dictionary, assignment, ind_ds, r, force_general)
    if ind_dr is not None:
        n3 = n_positive(system, matrix, dictionary, assignment, r1, ind_dr, force_general)
        n4 = n_positive(system, matrix, dictionary, assignment, ind_dr, s, force_general)

    kind = system.kind
    sq = system.squared_length
    if force_general or kind in ("F", "G"):
        # General form: each term carries its exact length ratio.  s1 - r
        # equals s - r1 and s1 - s equals r - r1, so the two differences
        # above are the only vectors needed.
        total = Fraction(0)
        if ind_ds is not None and n1 and n2:
            total += Fraction(n1 * n2) * sq(ind_ds) / (sq(s) * sq(s1))
        if ind_dr is not None and n3 and n4:
            total += Fraction(n3 * n4) * sq(ind_dr) / (sq(r) * sq(s1))
        exact = sq(isum) * total / n_seed
    else:
        exact = Fraction(n1 * n2 + n3 * n4, n_seed)
        if kind == "C":
            exact = exact * sq(isum) / sq(s1)
    if exact.denominator != 1:
        raise InternalConsistencyError(
            f"non-integral constant {exact} for pair ({r}, {s}) in {system.diagram}"
        )
    value = int(exact)
    matrix.set_antisymmetric(r, s, value)
    return value


def compute_all_positive(
    system: RootSystem,
    dictionary: Optional[SumDictionary] = None,
    assignment: Optional[ExtraspecialAssignment] = None,
    force_general: bool = False,
) -> ConstantMatrix:
    """Seed the extraspecial entries, then fill N for every positive pair."""
    if dictionary is None:
        dictionary = build_sum_dictionary(system)
    if assignment is None:
        assignment = assign_extraspecial_constants(system, dictionary)
    matrix = ConstantMatrix(len(system.positive_roots))
    for _, (pair, value) in assignment.items():
        matrix.set_antisymmetric(pair.i, pair.j, value)
    count = matrix.size
    for i in range(count):
        for j in range(i + 1, count):
            n_positive(system, matrix, dictionary, assignment, i, j, force_general)
    if not matrix.is_complete():
        raise InternalConsistencyError("constant matrix left unknown entries after fill")
    return matrix


def n_pos_neg(system: RootSystem, matrix: ConstantMatrix, a: int, b_opposite: int) -> int:
    """N(alpha, beta) for alpha = roots[a] > 0 and beta = -roots[b_opposite] < 0.

    Requires a completed matrix.  Returns 0 when alpha + beta is not a root;
    raises CartanBracketError when beta = -alpha, because that bracket is a
    Cartan element rather than a structure constant.
    """
    if a == b_opposite:
        raise CartanBracketError(
            f"bracket of root {a} with its opposite is the dual root, not a constant"
        )
    alpha = system.positive_roots[a]
    minus_beta = system.positive_roots[b_opposite]
    total = tuple(x - y for x, y in zip(alpha, minus_beta))
    has_pos = any(x > 0 for x in total)
    has_neg = any(x < 0 for x in total)
    if has_pos and has_neg:
        return 0
    if has_pos:
        isum = system.index.get(total)
        if isum is None:
            return 0
        inner = matrix.get(isum, b_opposite)  # N(alpha+beta, -beta)
        if inner is None:
            raise ValueError("matrix must be fully computed before signed queries")
        exact = Fraction(inner) * system.squared_length(isum) / system.squared_length(a)
    else:
        isum = system.index.get(tuple(-x for x in total))
        if isum is None:
            return 0
        inner = matrix.get(isum, a)  # N(-alpha-beta, alpha)
        if inner is None:
            raise ValueError("matrix must be fully computed before signed queries")
        exact = (
            Fraction(inner)
            * system.squared_length(isum)
            / system.squared_length(b_opposite)
        )
    if exact.denominator != 1:
        raise InternalConsistencyError(
            f"non-integral mixed-sign constant {exact} for ({a}, -{b_opposite})"
        )
    return int(exact)


def n_any(system: RootSystem, matrix: ConstantMatrix, a: SignedRoot, b: SignedRoot) -> int:
    """N for any two signed roots, reduced to the positive table.

    Identical signed roots give 0 (the bracket of a root vector with itself
    vanishes); opposite signed roots raise CartanBracketError.
    """
    if a.index == b.index:
        if a.negative != b.negative:
            raise CartanBracketError(
                f"roots {a} and {b} are opposite; their bracket is the dual root"
            )
        return 0
    if not a.negative and not b.negative:
        value = matrix.get(a.index, b.index)
        if value is None:
            raise ValueError("matrix must be fully computed before signed queries")
        return value
    if a.negative and b.negative:
        value = matrix.get(a.index, b.index)
        if value is None:
            raise ValueError("matrix must be fully computed before signed queries")
        return -value
    if not a.negative:
        return n_pos_neg(system, matrix, a.index, b.index)
    return -n_pos_neg(system, matrix, b.index, a.index)
