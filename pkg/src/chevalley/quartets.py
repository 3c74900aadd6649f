"""Quartets: a special pair joined with the extraspecial pair of its sum.

A quartet is the ordered index tuple (r1, r, s, s1) where (r1, s1) is the
extraspecial pair of some sum and (r, s) is another special pair with the
same sum, so r1 < r < s < s1 in regular order.  Classification drives the
choice of computation formula downstream:

* mono: s - r1 and r - r1 are not both roots (one recursion term dies);
* simple: each of those differences that is a root keeps the length of the
  root it was subtracted from (the length factors cancel);
* phi: |r1 + s1|^2 / |s1|^2, the correction factor that survives in the
  doubled-short-root case; it depends only on the extraspecial pair.

Every quartet in B_n is mono and simple; every quartet in C_n is simple,
and is mono exactly when (r1, s1) != 0.  F4 has 48 quartets of which 38
are simple; the other 10 force the general length-weighted formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import InternalConsistencyError
from .pairs import SumDictionary, build_sum_dictionary
from .roots import RootSystem


@dataclass(frozen=True)
class Quartet:
    r1: int
    r: int
    s: int
    s1: int


@dataclass(frozen=True)
class QuartetClass:
    mono: bool
    simple: bool
    s_minus_r1_is_root: bool
    r_minus_r1_is_root: bool
    phi: Fraction


def enumerate_quartets(
    system: RootSystem, dictionary: Optional[SumDictionary] = None
) -> List[Quartet]:
    """All quartets, sorted by (s1, r); one per non-extraspecial special pair."""
    if dictionary is None:
        dictionary = build_sum_dictionary(system)
    quartets = []
    for gamma, pairs in dictionary.items():
        head = pairs[0]
        for other in pairs[1:]:
            quartet = Quartet(head.i, other.i, other.j, head.j)
            if not (quartet.r1 < quartet.r < quartet.s < quartet.s1):
                raise InternalConsistencyError(
                    f"quartet ordering violated for sum {gamma}: {quartet}"
                )
            quartets.append(quartet)
    quartets.sort(key=lambda q: (q.s1, q.r))
    return quartets


def classify_quartet(system: RootSystem, quartet: Quartet) -> QuartetClass:
    """Exact membership and length flags for one quartet."""
    roots = system.positive_roots
    r1 = roots[quartet.r1]
    diff_s = tuple(x - y for x, y in zip(roots[quartet.s], r1))
    diff_r = tuple(x - y for x, y in zip(roots[quartet.r], r1))
    ind_s = system.index.get(diff_s)
    ind_r = system.index.get(diff_r)
    simple = True
    if ind_s is not None and system.squared_length(ind_s) != system.squared_length(quartet.s):
        simple = False
    if ind_r is not None and system.squared_length(ind_r) != system.squared_length(quartet.r):
        simple = False
    gamma = system.index_of_sum(quartet.r1, quartet.s1)
    if gamma is None:
        raise InternalConsistencyError(f"quartet {quartet} has a non-root sum")
    phi = system.squared_length(gamma) / system.squared_length(quartet.s1)
    return QuartetClass(
        mono=not (ind_s is not None and ind_r is not None),
        simple=simple,
        s_minus_r1_is_root=ind_s is not None,
        r_minus_r1_is_root=ind_r is not None,
        phi=phi,
    )


@dataclass(frozen=True)
class QuartetSummary:
    """Census of the quartets of one root system.

    phi histograms come in three populations because the phi = 1/2 census
    differs between all extraspecial pairs and only those that actually
    carry quartets; both are reported rather than picking one.
    """

    diagram: str
    total: int
    mono: int
    simple: int
    non_simple_ordinals: Tuple[int, ...]
    phi_quartets: Dict[Fraction, int]
    phi_extraspecial_pairs: Dict[Fraction, int]
    phi_quartet_bearing_pairs: Dict[Fraction, int]


def quartet_report(
    system: RootSystem, dictionary: Optional[SumDictionary] = None
) -> QuartetSummary:
    """Counts, non-simple ordinals and phi histograms for ``system``."""
    if dictionary is None:
        dictionary = build_sum_dictionary(system)
    quartets = enumerate_quartets(system, dictionary)
    classes = [classify_quartet(system, q) for q in quartets]

    phi_quartets: Dict[Fraction, int] = {}
    for cls in classes:
        phi_quartets[cls.phi] = phi_quartets.get(cls.phi, 0) + 1

    def pair_phi(gamma: int) -> Fraction:
        head = dictionary.extraspecial_pair(gamma)
        return system.squared_length(gamma) / system.squared_length(head.j)

    phi_pairs: Dict[Fraction, int] = {}
    phi_bearing: Dict[Fraction, int] = {}
    for gamma, pairs in dictionary.items():
        phi = pair_phi(gamma)
        phi_pairs[phi] = phi_pairs.get(phi, 0) + 1
        if len(pairs) > 1:
            phi_bearing[phi] = phi_bearing.get(phi, 0) + 1

    return QuartetSummary(
        diagram=str(system.diagram),
        total=len(quartets),
        mono=sum(1 for cls in classes if cls.mono),
        simple=sum(1 for cls in classes if cls.simple),
        non_simple_ordinals=tuple(
            ordinal for ordinal, cls in enumerate(classes) if not cls.simple
        ),
        phi_quartets=phi_quartets,
        phi_extraspecial_pairs=phi_pairs,
        phi_quartet_bearing_pairs=phi_bearing,
    )
