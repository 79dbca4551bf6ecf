"""Brute-force local maps between small almost iota-complexes.

This works straight from the definition and shares nothing with the curve
pipeline beyond the complex data types.  A local map ``f: C1 -> C2`` is a
grading-preserving F2[U] chain map with ``f iota1 + iota2 f`` null-homotopic
mod U that is an isomorphism on U-localized homology.

The chain-map and homotopy conditions are linear over F2 in the monomial
coefficients of ``f`` and the constant part of the homotopy ``H``.  The tower
condition is linear too: with U set to 1 the localized homology is one
dimensional, and ``f`` hits its generator iff a fixed cocycle on ``C2`` is
nonzero on the image of a fixed cycle of ``C1``.  So a witness is one affine
solve, and "none" is a proof of absence within the degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .iota import AlmostIotaComplex, ModUMap


@dataclass(frozen=True)
class SearchBudget:
    """Limits on the search.

    ``max_solutions`` bounds enumeration of the solution space; the linear
    tower test means the solver never enumerates, so it only guards callers
    that ask for ``all_local_maps``.
    """

    max_generators: int = 7
    max_u_degree: int = 4
    max_solutions: int = 1 << 16

    def __post_init__(self):
        if min(self.max_generators, self.max_u_degree, self.max_solutions) < 1:
            raise ValueError("budget entries must be positive")


@dataclass(frozen=True)
class SearchResult:
    status: str                      # "found", "none" or "unknown"
    witness: ModUMap | None = None
    dimension: int = 0               # dimension of the homogeneous solution space

    def __bool__(self) -> bool:
        return self.status == "found"


def _at_one_cycles(c: AlmostIotaComplex):
    """A cycle generating H(C at U=1) and a cocycle dual to it."""
    n = c.n
    d1 = linalg.eval_at_one(c.d)                      # rows: targets
    d1t = linalg.rows_transpose(d1, n)
    cycles = linalg.solve_affine([(row, 0) for row in d1], n)[1]
    boundaries = [b for b in d1t if b]                # images of generators
    cocycles = linalg.solve_affine([(col, 0) for col in d1t], n)[1]
    for z in cycles:
        for phi in cocycles:
            if bin(z & phi).count("1") & 1:
                # phi kills boundaries, so it pairs nontrivially with [z].
                if all(not (bin(b & phi).count("1") & 1) for b in boundaries):
                    return z, phi
    return None


def _linear_system(c1: AlmostIotaComplex, c2: AlmostIotaComplex, max_degree: int):
    """Unknowns for f and H and the homogeneous equations on them."""
    n1, n2 = c1.n, c2.n
    g1, g2 = c1.grades, c2.grades
    fvar: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(n2):
        for j in range(n1):
            gap = g2[i] - g1[j]
            if gap >= 0 and gap % 2 == 0 and gap // 2 <= max_degree:
                fvar[(i, j)] = (len(fvar), gap // 2)
    hvar: dict[tuple[int, int], int] = {}
    for i in range(n2):
        for j in range(n1):
            if g2[i] == g1[j] + 1:
                hvar[(i, j)] = len(fvar) + len(hvar)
    nvars = len(fvar) + len(hvar)

    equations: dict[tuple, int] = {}

    def add(key, var):
        equations[key] = equations.get(key, 0) ^ (1 << var)

    # d2 f + f d1 = 0, coefficient by coefficient.
    for (l, j), (v, k) in fvar.items():
        for i in range(n2):
            x = c2.d[i][l]
            while x:
                low = x & -x
                add(("d", i, j, low.bit_length() - 1 + k), v)
                x ^= low
    for (i, l), (v, k) in fvar.items():
        for j in range(n1):
            x = c1.d[l][j]
            while x:
                low = x & -x
                add(("d", i, j, low.bit_length() - 1 + k), v)
                x ^= low
    # f iota1 + iota2 f + H d1 + d2 H has no constant term.
    i1, i2 = linalg.const_part(c1.iota), linalg.const_part(c2.iota)
    e1, e2 = linalg.const_part(c1.d), linalg.const_part(c2.d)
    for (i, l), (v, k) in fvar.items():
        if k:
            continue
        for j in range(n1):
            if i1[l][j]:
                add(("w", i, j), v)
    for (l, j), (v, k) in fvar.items():
        if k:
            continue
        for i in range(n2):
            if i2[i][l]:
                add(("w", i, j), v)
    for (i, l), v in hvar.items():
        for j in range(n1):
            if e1[l][j]:
                add(("w", i, j), v)
    for (l, j), v in hvar.items():
        for i in range(n2):
            if e2[i][l]:
                add(("w", i, j), v)

    system = [(row, 0) for row in equations.values() if row]
    return fvar, system, nvars


def _f_matrix(c1, c2, fvar, solution):
    f = linalg.zeros(c2.n, c1.n)
    for (i, j), (v, k) in fvar.items():
        if solution >> v & 1:
            f[i][j] = 1 << k
    return ModUMap(c1, c2, f)


def search_local_map(c1: AlmostIotaComplex, c2: AlmostIotaComplex,
                     budget: SearchBudget | None = None) -> SearchResult:
    budget = budget or SearchBudget()
    if max(c1.n, c2.n) > budget.max_generators:
        return SearchResult("unknown")
    fvar, system, nvars = _linear_system(c1, c2, budget.max_u_degree)
    homogeneous = linalg.solve_affine(system, nvars)
    dim = len(homogeneous[1])

    tower1, tower2 = _at_one_cycles(c1), _at_one_cycles(c2)
    if tower1 is None or tower2 is None:
        return SearchResult("none", dimension=dim)
    z, _ = tower1
    _, phi = tower2
    # phi(f(z)) at U = 1: entry (i, j) contributes when z_j and phi_i are set.
    tower = 0
    for (i, j), (v, _) in fvar.items():
        if z >> j & 1 and phi >> i & 1:
            tower ^= 1 << v
    solved = linalg.solve_affine(system + [(tower, 1)], nvars)
    if solved is None:
        return SearchResult("none", dimension=dim)
    return SearchResult("found", _f_matrix(c1, c2, fvar, solved[0]), dim)


def is_local_map(f: ModUMap) -> bool:
    """Check a candidate directly against the definition."""
    from .iota import homotopic_mod_U

    c1, c2 = f.source, f.target
    if not f.is_homogeneous():
        return False
    m = [list(r) for r in f.matrix]
    if not linalg.mat_is_zero(linalg.mat_add(linalg.mat_mul(c2.d, m),
                                             linalg.mat_mul(m, c1.d))):
        return False
    left = ModUMap(c1, c2, linalg.mat_mul(m, [list(r) for r in c1.iota]))
    right = ModUMap(c1, c2, linalg.mat_mul([list(r) for r in c2.iota], m))
    if homotopic_mod_U(left, right) is None:
        return False
    t1, t2 = _at_one_cycles(c1), _at_one_cycles(c2)
    if t1 is None or t2 is None:
        return False
    image = _vec_image(linalg.eval_at_one(m), t1[0])
    return bool(bin(image & t2[1]).count("1") & 1)


def _vec_image(rows, v):
    return sum((bin(r & v).count("1") & 1) << i for i, r in enumerate(rows))


def bruteforce_local_equiv(c1: AlmostIotaComplex, c2: AlmostIotaComplex,
                           budget: SearchBudget | None = None) -> str:
    """``"true"``, ``"false"`` or ``"unknown"``."""
    there = search_local_map(c1, c2, budget)
    if there.status == "unknown":
        return "unknown"
    back = search_local_map(c2, c1, budget)
    if back.status == "unknown":
        return "unknown"
    return "true" if there and back else "false"


def all_local_maps(c1: AlmostIotaComplex, c2: AlmostIotaComplex,
                   budget: SearchBudget | None = None) -> list[ModUMap] | None:
    """Every local map within the degree bound, or None past the enumeration cap."""
    budget = budget or SearchBudget()
    if max(c1.n, c2.n) > budget.max_generators:
        return None
    fvar, system, nvars = _linear_system(c1, c2, budget.max_u_degree)
    kernel = linalg.solve_affine(system, nvars)[1]
    if 1 << len(kernel) > budget.max_solutions:
        return None
    fmask = (1 << len(fvar)) - 1
    seen, out = set(), []
    for combo in range(1 << len(kernel)):
        vec = 0
        for b, k in enumerate(kernel):
            if combo >> b & 1:
                vec ^= k
        vec &= fmask
        if vec in seen:
            continue
        seen.add(vec)
        f = _f_matrix(c1, c2, fvar, vec)
        if is_local_map(f):
            out.append(f)
    return out
