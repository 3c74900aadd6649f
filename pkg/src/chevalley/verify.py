"""Independent certification of a completed constant matrix.

Five oracles, each a pure function of (system, matrix) reporting witnesses:

* antisymmetry: N(a, b) = -N(b, a) over all ordered index pairs;
* magnitude: |N(a, b)| = p + 1 with p the depth of the root string
  b - k*a, over all signed pairs with a root sum;
* triple ratios: N(a, b)/|c|^2 = N(b, c)/|a|^2 = N(c, a)/|b|^2 whenever
  a + b + c = 0;
* quadruple identity: the three-term sum of N(x, y) N(z, w)/|x+y|^2 over
  the pair matchings of any zero-sum signed quadruple (no two opposite)
  vanishes;
* Jacobi: the bracket assembled on the basis {h_i} + {e_a} from the matrix
  satisfies [[x, y], z] + [[y, z], x] + [[z, x], y] = 0 for every basis
  triple.  A matrix passing this together with antisymmetry defines a Lie
  algebra, which is the end-to-end soundness argument for the whole
  pipeline.

The formula cross-check recomputes the entire matrix under the general
length-weighted recursion and diffs it against the specialized dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .constants import ConstantMatrix, compute_all_positive, n_pos_neg
from .errors import InternalConsistencyError
from .pairs import build_sum_dictionary
from .roots import RootSystem


@dataclass
class CheckResult:
    """Outcome of one oracle: scanned population plus failing witnesses."""

    name: str
    population: int
    failures: List[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerificationReport:
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> CheckResult:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)


_MAX_WITNESSES = 50


class _SignedTables:
    """Signed-root lookup tables shared by the exhaustive scans.

    Signed index a < m means +roots[a]; a >= m means -roots[a - m].
    """

    __slots__ = ("m", "size", "coords", "ids", "sq", "gram_pos", "n")

    def __init__(self, system: RootSystem, matrix: ConstantMatrix):
        pos = system.positive_roots
        m = len(pos)
        self.m = m
        self.size = 2 * m
        coords = list(pos) + [tuple(-x for x in root) for root in pos]
        self.coords = coords
        self.ids = {c: k for k, c in enumerate(coords)}
        sq = [system.squared_length(i) for i in range(m)]
        self.sq = sq + sq
        rank = system.rank
        form = system.form
        transformed = [
            tuple(sum(form[k][l] * root[l] for l in range(rank)) for k in range(rank))
            for root in pos
        ]
        self.gram_pos = [
            [sum(root[k] * image[k] for k in range(rank)) for image in transformed]
            for root in pos
        ]
        table = [[0] * (2 * m) for _ in range(2 * m)]
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                value = matrix.get(i, j)
                if value is None:
                    raise ValueError("matrix must be fully computed before verification")
                table[i][j] = value
                table[m + i][m + j] = -value
                mixed = n_pos_neg(system, matrix, i, j)
                table[i][m + j] = mixed
                table[m + j][i] = -mixed
        self.n = table

    def opposite(self, a: int) -> int:
        return a + self.m if a < self.m else a - self.m

    def gram(self, a: int, b: int) -> Fraction:
        value = self.gram_pos[a % self.m][b % self.m]
        if (a < self.m) != (b < self.m):
            return -value
        return value


def check_antisymmetry(matrix: ConstantMatrix) -> VerificationReport:
    """N(a, b) + N(b, a) = 0 for every ordered pair of positive indices."""
    size = matrix.size
    failures = []
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            forward = matrix.get(i, j)
            backward = matrix.get(j, i)
            if forward is None or backward is None or forward != -backward:
                failures.append((i, j, forward, backward))
    result = CheckResult("antisymmetry", size * (size - 1), failures)
    return VerificationReport([result])


def _scan_magnitude(tables: _SignedTables) -> CheckResult:
    coords = tables.coords
    ids = tables.ids
    table = tables.n
    size = tables.size
    population = 0
    failures = []
    for a in range(size):
        ca = coords[a]
        opp_a = tables.opposite(a)
        row = table[a]
        for b in range(size):
            if b == a or b == opp_a:
                continue
            cb = coords[b]
            if tuple(x + y for x, y in zip(ca, cb)) not in ids:
                continue
            population += 1
            p = 0
            probe = cb
            while True:
                probe = tuple(x - y for x, y in zip(probe, ca))
                if probe in ids:
                    p += 1
                else:
                    break
            if abs(row[b]) != p + 1:
                if len(failures) < _MAX_WITNESSES:
                    failures.append((a, b, row[b], p))
                else:
                    failures.append(("...", "truncated"))
                    return CheckResult("chevalley_magnitude", population, failures)
    return CheckResult("chevalley_magnitude", population, failures)


def check_chevalley_magnitude(system: RootSystem, matrix: ConstantMatrix) -> VerificationReport:
    """|N| = p + 1 over every signed pair whose sum is a root."""
    return VerificationReport([_scan_magnitude(_SignedTables(system, matrix))])


def _scan_tits(tables: _SignedTables) -> CheckResult:
    coords = tables.coords
    ids = tables.ids
    table = tables.n
    sq = tables.sq
    size = tables.size
    population = 0
    failures = []
    for a in range(size):
        ca = coords[a]
        opp_a = tables.opposite(a)
        for b in range(a + 1, size):
            if b == opp_a:
                continue
            c = ids.get(tuple(-(x + y) for x, y in zip(ca, coords[b])))
            if c is None or c < b:
                continue
            population += 1
            first = Fraction(table[a][b]) / sq[c]
            second = Fraction(table[b][c]) / sq[a]
            third = Fraction(table[c][a]) / sq[b]
            if not (first == second == third):
                failures.append((a, b, c, str(first), str(second), str(third)))
                if len(failures) >= _MAX_WITNESSES:
                    return CheckResult("tits_triples", population, failures)
    return CheckResult("tits_triples", population, failures)


def check_tits_triples(system: RootSystem, matrix: ConstantMatrix) -> VerificationReport:
    """Equal ratios N(a, b)/|c|^2 over every zero-sum signed triple."""
    return VerificationReport([_scan_tits(_SignedTables(system, matrix))])


def _scan_carter(tables: _SignedTables) -> CheckResult:
    coords = tables.coords
    ids = tables.ids
    table = tables.n
    sq = tables.sq
    size = tables.size
    opposite = [tables.opposite(a) for a in range(size)]
    population = 0
    failures = []

    def term(x: int, y: int, z: int, w: int) -> Fraction:
        sid = ids.get(tuple(p + q for p, q in zip(coords[x], coords[y])))
        if sid is None:
            return Fraction(0)
        product = table[x][y] * table[z][w]
        if not product:
            return Fraction(0)
        return Fraction(product) / sq[sid]

    for a in range(size):
        ca = coords[a]
        opp_a = opposite[a]
        for b in range(a, size):
            if b == opp_a:
                continue
            opp_b = opposite[b]
            partial = tuple(x + y for x, y in zip(ca, coords[b]))
            for c in range(b, size):
                if c == opp_a or c == opp_b:
                    continue
                d = ids.get(tuple(-(x + y) for x, y in zip(partial, coords[c])))
                if d is None or d < c:
                    continue
                if d == opp_a or d == opp_b or d == opposite[c]:
                    continue
                population += 1
                residual = term(a, b, c, d) + term(b, c, a, d) + term(c, a, b, d)
                if residual:
                    failures.append((a, b, c, d, str(residual)))
                    if len(failures) >= _MAX_WITNESSES:
                        return CheckResult("carter_quadruples", population, failures)
    return CheckResult("carter_quadruples", population, failures)


def check_carter_quadruples(system: RootSystem, matrix: ConstantMatrix) -> VerificationReport:
    """Three-matching identity over every zero-sum signed quadruple."""
    return VerificationReport([_scan_carter(_SignedTables(system, matrix))])


def _scan_jacobi(system: RootSystem, tables: _SignedTables) -> CheckResult:
    rank = system.rank
    size = tables.size
    coords = tables.coords
    ids = tables.ids
    sq = tables.sq
    table = tables.n

    # Bracket of two root vectors: 0 | ("e", target, N) | ("h", signed id),
    # the latter meaning the dual root of that signed root.
    ee: list = [[0] * size for _ in range(size)]
    for a in range(size):
        ca = coords[a]
        opp_a = tables.opposite(a)
        for b in range(size):
            if b == a:
                continue
            if b == opp_a:
                ee[a][b] = ("h", a)
                continue
            sid = ids.get(tuple(x + y for x, y in zip(ca, coords[b])))
            if sid is not None:
                ee[a][b] = ("e", sid, table[a][b])

    # cart[k][b]: eigenvalue of e_b under h_k, an integer for every root.
    cart = []
    for k in range(rank):
        row = []
        for b in range(size):
            value = 2 * tables.gram(b, k) / sq[k]
            if value.denominator != 1:
                raise InternalConsistencyError(
                    f"non-integral Cartan eigenvalue {value} for root {b}"
                )
            row.append(int(value))
        cart.append(row)

    # Dual-root coordinates over {h_k}: h_a = sum coords[a][k] |a_k|^2/|a|^2 h_k.
    hvec = [
        tuple(Fraction(coords[a][k]) * sq[k] / sq[a] for k in range(rank))
        for a in range(size)
    ]

    basis_count = rank + size

    def bracket_basis(x: int, y: int) -> dict:
        if x < rank:
            if y < rank:
                return {}
            value = cart[x][y - rank]
            return {y: value} if value else {}
        if y < rank:
            value = cart[y][x - rank]
            return {x: -value} if value else {}
        cell = ee[x - rank][y - rank]
        if cell == 0:
            return {}
        if cell[0] == "e":
            _, sid, value = cell
            return {rank + sid: value} if value else {}
        dual = hvec[cell[1]]
        return {k: dual[k] for k in range(rank) if dual[k]}

    def accumulate(acc: dict, elem: dict, z: int) -> None:
        for key, coef in elem.items():
            for key2, coef2 in bracket_basis(key, z).items():
                acc[key2] = acc.get(key2, 0) + coef * coef2

    population = 0
    failures = []
    for x in range(basis_count):
        for y in range(x + 1, basis_count):
            bxy = bracket_basis(x, y)
            for z in range(y + 1, basis_count):
                population += 1
                acc: dict = {}
                if bxy:
                    accumulate(acc, bxy, z)
                byz = bracket_basis(y, z)
                if byz:
                    accumulate(acc, byz, x)
                bzx = bracket_basis(z, x)
                if bzx:
                    accumulate(acc, bzx, y)
                if any(acc.values()):
                    failures.append((x, y, z))
                    if len(failures) >= _MAX_WITNESSES:
                        return CheckResult("jacobi", population, failures)
    return CheckResult("jacobi", population, failures)


def check_jacobi(system: RootSystem, matrix: ConstantMatrix) -> VerificationReport:
    """Full Jacobi identity on the basis {h_i : i < rank} + {e_a : a signed}."""
    return VerificationReport([_scan_jacobi(system, _SignedTables(system, matrix))])


def _scan_formula_agreement(system: RootSystem) -> CheckResult:
    specialized = compute_all_positive(system)
    general = compute_all_positive(system, force_general=True)
    dictionary = build_sum_dictionary(system)
    heads = {
        (pairs[0].i, pairs[0].j) for pairs in (dictionary.pairs_for(g) for g in dictionary.keys())
    }
    population = 0
    failures = []
    for i in range(specialized.size):
        for j in range(i + 1, specialized.size):
            if system.index_of_sum(i, j) is None or (i, j) in heads:
                continue
            population += 1
            left = specialized.get(i, j)
            right = general.get(i, j)
            if left != right:
                failures.append((i, j, left, right))
    return CheckResult("formula_cross_check", population, failures)


def cross_check_formulas(system: RootSystem) -> VerificationReport:
    """Specialized dispatch vs general recursion, entry for entry."""
    if system.kind not in ("A", "B", "C", "D", "E"):
        raise ValueError(
            "formula cross-check applies to kinds A, B, C, D, E; "
            f"got {system.diagram}"
        )
    return VerificationReport([_scan_formula_agreement(system)])


def verify_all(
    system: RootSystem,
    matrix: ConstantMatrix,
    with_formula_cross_check: bool = False,
) -> VerificationReport:
    """Run every oracle once, sharing the signed tables."""
    checks = [check_antisymmetry(matrix).checks[0]]
    tables = _SignedTables(system, matrix)
    checks.append(_scan_magnitude(tables))
    checks.append(_scan_tits(tables))
    checks.append(_scan_carter(tables))
    checks.append(_scan_jacobi(system, tables))
    if with_formula_cross_check and system.kind in ("A", "B", "C", "D", "E"):
        checks.append(_scan_formula_agreement(system))
    return VerificationReport(checks)
