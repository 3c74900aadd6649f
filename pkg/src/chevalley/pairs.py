"""Special and extraspecial pairs of positive roots.

An ordered pair (r, s) with r before s in regular order is special when
r + s is again a positive root.  Grouping all special pairs by their sum
gives one entry per non-simple positive root; the least pair in each group
is the extraspecial pair, and its first member is always a simple root.
Fixing the structure constant of every extraspecial pair to +(p + 1), with
p the depth of the root string s1 - k*r1, pins down all other constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .errors import InternalConsistencyError
from .roots import RootSystem


@dataclass(frozen=True, order=True)
class SpecialPair:
    """Indices (into the regular ordering) of a special pair, i < j."""

    i: int
    j: int


class SumDictionary:
    """Map from each non-simple positive root to its special pairs.

    Entry lists are sorted ascending by (i, j); the head of each list is
    the extraspecial pair.
    """

    def __init__(self, entries: Dict[int, Tuple[SpecialPair, ...]]):
        self.entries = entries

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, gamma: int) -> bool:
        return gamma in self.entries

    def keys(self):
        return self.entries.keys()

    def items(self):
        return self.entries.items()

    def pairs_for(self, gamma: int) -> Tuple[SpecialPair, ...]:
        try:
            return self.entries[gamma]
        except KeyError:
            raise KeyError(
                f"root index {gamma} has no special-pair decomposition "
                "(it is a simple root or not a key)"
            ) from None

    def extraspecial_pair(self, gamma: int) -> SpecialPair:
        """The extraspecial pair of the sum root ``gamma``."""
        return self.pairs_for(gamma)[0]


def build_sum_dictionary(system: RootSystem) -> SumDictionary:
    """Collect every special pair, grouped by sum, in ascending (i, j) order.

    Iterating i < j ascending means the first pair recorded for each sum is
    the minimal one, i.e. the extraspecial pair.
    """
    count = len(system.positive_roots)
    grouped: Dict[int, List[SpecialPair]] = {}
    for i in range(count):
        for j in range(i + 1, count):
            isum = system.index_of_sum(i, j)
            if isum is not None:
                grouped.setdefault(isum, []).append(SpecialPair(i, j))
    return SumDictionary({gamma: tuple(pairs) for gamma, pairs in grouped.items()})


def extraspecial_constant(system: RootSystem, pair: SpecialPair) -> int:
    """Structure constant +(p + 1) assigned to an extraspecial pair.

    p is the largest k >= 0 with s1 - k*r1 a root.  Every root on that
    string is positive (the difference of comparable positive roots cannot
    be a negative root), so membership in the positive list is the whole
    test; a hit on the negative side would be a construction bug.
    """
    if system.index_of_sum(pair.i, pair.j) is None:
        raise ValueError(f"pair {pair} does not sum to a root")
    r1 = system.positive_roots[pair.i]
    s1 = system.positive_roots[pair.j]
    p = 0
    probe = s1
    while True:
        probe = tuple(x - y for x, y in zip(probe, r1))
        if system.index.get(probe) is not None:
            p += 1
            continue
        if system.index.get(tuple(-x for x in probe)) is not None:
            raise InternalConsistencyError(
                f"root string for {pair} left the positive cone at step {p + 1}"
            )
        return p + 1


class ExtraspecialAssignment:
    """Seed constants: sum index -> (extraspecial pair, value in 1..3)."""

    def __init__(self, values: Dict[int, Tuple[SpecialPair, int]]):
        self.values = values

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> Iterator:
        return self.values.items()

    def pair_for(self, gamma: int) -> SpecialPair:
        return self.values[gamma][0]

    def constant_for(self, gamma: int) -> int:
        return self.values[gamma][1]


def assign_extraspecial_constants(
    system: RootSystem, dictionary: SumDictionary
) -> ExtraspecialAssignment:
    """Assign +(p + 1) to the extraspecial pair of every non-simple root."""
    values = {}
    for gamma, pairs in dictionary.items():
        head = pairs[0]
        values[gamma] = (head, extraspecial_constant(system, head))
    return ExtraspecialAssignment(values)
