"""Precurves on the twice-punctured disk and their reduction to curves.

A precurve is a pair of face differentials joined by a change-of-side matrix:

* ``dU`` acts on the side facing the U-puncture (side 1),
* ``dQ`` acts on the side facing the Q-puncture (side 2),
* ``P`` (over F2) sends side-1 coordinates to side-2 coordinates.

The associated R-complex has differential ``dU + P^-1 dQ P``.  Everything in
this module changes a precurve only by isomorphisms of that R-complex: basis
changes on either side that preserve the face differential exactly, which act
on ``P`` through their constant parts.

Once both faces are in matching form, the remaining freedom is a pair of
groups acting on ``P`` from the two sides.  ``slide_arrows`` drives ``P`` to a
permutation (up to blocks between parallel closed strands) and the curves are
read off by following the matchings and that permutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import linalg
from .coeff import bits_degree, bits_valuation, clmul, exponents, is_monomial_bits
from .iota import Generator, InvalidComplex, RComplex, StandardParams

U_SIDE, Q_SIDE = 1, 2

# Matching roles, ordered so that a basis vector may only be added into one
# with an equal or larger key: bottoms by increasing length, then unmatched
# points, then tops by decreasing length.
BOTTOM, FREE, TOP = 0, 1, 2


class NotPrimitive(ValueError):
    """The curve through the U-puncture is missing, duplicated or malformed."""


@dataclass(frozen=True)
class ElementaryMove:
    """One factor of the change-of-side matrix, read from side 1 to side 2.

    ``crossing`` swaps adjacent positions ``i`` and ``j = i + 1``;
    ``crossover`` adds row ``i`` into row ``j``.  ``end`` says whether the
    indices of a crossover refer to side-1 (1) or side-2 (2) points.
    """

    kind: str
    i: int
    j: int
    position: int = 0
    end: int = 1

    def __post_init__(self):
        if self.kind == "crossing" and self.j != self.i + 1:
            raise ValueError("crossings act on adjacent strands")
        if self.kind == "crossover" and self.i == self.j:
            raise ValueError("crossover arrows need distinct endpoints")
        if self.kind not in ("crossing", "crossover"):
            raise ValueError(f"unknown move {self.kind!r}")


def word_matrix(word, n: int) -> list[int]:
    m = linalg.identity_rows(n)
    for mv in word:
        if mv.kind == "crossing":
            m[mv.i], m[mv.j] = m[mv.j], m[mv.i]
        else:
            m[mv.j] ^= m[mv.i]
    return m


@dataclass(frozen=True)
class Precurve:
    n: int
    dU: tuple[tuple[int, ...], ...]
    dQ: tuple[tuple[int, ...], ...]
    P: tuple[int, ...]
    Pword: tuple[ElementaryMove, ...] = ()
    names: tuple[str, ...] = ()
    grades: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "dU", linalg.mat_freeze(self.dU))
        object.__setattr__(self, "dQ", linalg.mat_freeze(self.dQ))
        object.__setattr__(self, "P", tuple(self.P))
        object.__setattr__(self, "Pword", tuple(self.Pword))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(self.n)))
        if self.grades is not None:
            object.__setattr__(self, "grades", tuple(tuple(g) for g in self.grades))

    def problems(self) -> list[str]:
        out = []
        n = self.n
        for name, m in (("dU", self.dU), ("dQ", self.dQ)):
            if len(m) != n or any(len(r) != n for r in m):
                out.append(f"{name} has the wrong shape")
                continue
            if any(x & 1 for r in m for x in r):
                out.append(f"{name} has constant entries")
            if not linalg.mat_is_zero(linalg.mat_mul(m, m)):
                out.append(f"{name} does not square to zero")
        if len(self.P) != n or linalg.rows_rank(list(self.P)) != n:
            out.append("P is not invertible")
        elif word_matrix(self.Pword, n) != list(self.P):
            out.append("Pword does not multiply out to P")
        return out

    def with_P(self, P, word=None) -> Precurve:
        P = tuple(P)
        if word is None:
            word = decompose_word(P, self.n)
        return replace(self, P=P, Pword=tuple(word))


@dataclass(frozen=True)
class Match:
    """Face differential component ``src -> V^power * dst``."""

    src: int
    dst: int
    power: int


@dataclass(frozen=True)
class SimplyFaced:
    precurve: Precurve
    u_matching: tuple[Match, ...]
    q_matching: tuple[Match, ...]
    sigma: tuple[int, ...] | None = None
    order1: tuple[int, ...] | None = None
    order2: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return self.precurve.n

    def side(self, s: int) -> _Side:
        return _Side.from_matching(self.n, self.u_matching if s == U_SIDE else self.q_matching)

    def unmatched(self, s: int) -> list[int]:
        sd = self.side(s)
        return [i for i in range(self.n) if sd.role[i] == FREE]


@dataclass
class _Side:
    role: list[int]
    partner: list[int]
    power: list[int]

    @classmethod
    def from_matching(cls, n, matching) -> _Side:
        role, partner, power = [FREE] * n, [-1] * n, [0] * n
        for m in matching:
            role[m.src], role[m.dst] = TOP, BOTTOM
            partner[m.src], partner[m.dst] = m.dst, m.src
            power[m.src] = power[m.dst] = m.power
        return cls(role, partner, power)

    def key(self, i: int) -> tuple[int, int]:
        r = self.role[i]
        if r == BOTTOM:
            return (BOTTOM, self.power[i])
        if r == TOP:
            return (TOP, -self.power[i])
        return (FREE, 0)


# -- the two functors ------------------------------------------------------------

def _grades_of(gens) -> tuple[tuple[int, ...], ...] | None:
    if not gens:
        return None
    if all(g.grQ is not None for g in gens):
        return tuple((g.grU, g.grQ) for g in gens)
    return tuple((g.grU,) for g in gens)


def to_precurve(m: RComplex) -> Precurve:
    """Split the differential by face; the change-of-side matrix is the identity."""
    c, u, q = m.parts()
    if any(x for row in c for x in row):
        raise InvalidComplex("to_precurve needs a complex without constant entries")
    n = m.n
    return Precurve(n, u, q, tuple(linalg.identity_rows(n)), (),
                    tuple(g.name for g in m.gens), _grades_of(m.gens))


def _dense(rows, n):
    return linalg.dense_from_rows(list(rows), n)


def from_precurve(pc: Precurve) -> RComplex:
    n = pc.n
    p = _dense(pc.P, n)
    pinv = _dense(linalg.rows_inverse(list(pc.P)), n)
    q = linalg.mat_mul(pinv, linalg.mat_mul(pc.dQ, p))
    if pc.grades is not None:
        gens = tuple(Generator(name, g[0], g[1] if len(g) > 1 else None)
                     for name, g in zip(pc.names, pc.grades))
    else:
        gens = tuple(Generator(name, 0) for name in pc.names)
    return RComplex.from_parts(gens, pc.dU, q)


# -- words for P --------------------------------------------------------------------

def bruhat(P, n: int, rank1, rank2):
    """Factor ``P = L * perm * R`` with L, R unitriangular for the given orders.

    Columns are scanned in increasing ``rank1``; each pivots on its largest
    available row in ``rank2``.  Returns ``(sigma, Linv, Rinv, row_ops,
    col_ops)`` with ``Linv * P * Rinv`` the permutation matrix of ``sigma``
    (side-1 index to side-2 index).
    """
    work = list(P)
    linv = linalg.identity_rows(n)
    rinv = linalg.identity_rows(n)
    sigma = [-1] * n
    used = 0
    row_ops, col_ops = [], []
    for u in sorted(range(n), key=rank1.__getitem__):
        bit = 1 << u
        cand = [j for j in range(n) if work[j] & bit and not used >> j & 1]
        if not cand:
            raise ZeroDivisionError("change-of-side matrix is singular")
        r = max(cand, key=rank2.__getitem__)
        for j in cand:
            if j != r:
                work[j] ^= work[r]
                linv[j] ^= linv[r]
                row_ops.append((j, r))
        others = work[r] & ~bit
        while others:
            low = others & -others
            others ^= low
            work[r] ^= low
            for k in range(n):
                if rinv[k] & bit:
                    rinv[k] ^= low
            col_ops.append((u, low.bit_length() - 1))
        used |= 1 << r
        sigma[u] = r
    return sigma, linv, rinv, row_ops, col_ops


def _crossings(sigma, n: int, start: int):
    """Adjacent transpositions carrying position ``i`` to ``sigma[i]``."""
    at = list(range(n))            # at[pos] = strand currently at pos
    moves = []
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            a, b = at[k], at[k + 1]
            if sigma[a] > sigma[b]:
                at[k], at[k + 1] = b, a
                moves.append(ElementaryMove("crossing", k, k + 1, start + len(moves)))
                changed = True
    return moves


def decompose_word(P, n: int, rank1=None, rank2=None) -> list[ElementaryMove]:
    rank1 = rank1 or list(range(n))
    rank2 = rank2 or list(range(n))
    sigma, _, _, row_ops, col_ops = bruhat(P, n, rank1, rank2)
    word = []
    for u, v in col_ops:
        word.append(ElementaryMove("crossover", v, u, len(word), end=1))
    word += _crossings(sigma, n, len(word))
    for a, r in reversed(row_ops):
        word.append(ElementaryMove("crossover", r, a, len(word), end=2))
    return word


# -- simply-faced normal form ----------------------------------------------------

def _eliminate(m, on_change):
    """Bring a square-zero matrix over F2[V] to matching form in place.

    Pivots are the entries of least valuation (ties by row, then column).
    ``on_change(u, v, c)`` is called for every basis change
    ``e_v -> e_v + c e_u``.
    """
    n = len(m)
    matched = [False] * n
    matches = []

    def change(u, v, c):
        for row in m:
            if row[u]:
                row[v] ^= _mul(c, row[u])
        rv = m[v]
        ru = m[u]
        for j in range(n):
            if rv[j]:
                ru[j] ^= _mul(c, rv[j])
        on_change(u, v, c)

    while True:
        best = None
        for i in range(n):
            if matched[i]:
                continue
            for j in range(n):
                x = m[i][j]
                if x and not matched[j]:
                    key = (bits_valuation(x), not is_monomial_bits(x), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        (k, non_monomial, _, _), y, x = best
        if non_monomial:
            raise InvalidComplex("face differential has no monomial pivot; "
                                 "the input must be homogeneous")
        for y2 in range(n):
            if y2 != y and m[y2][x]:
                change(y2, y, m[y2][x] >> k)
        for x2 in range(n):
            if x2 != x and m[y][x2]:
                change(x, x2, m[y][x2] >> k)
        matched[x] = matched[y] = True
        matches.append(Match(x, y, k))
    return matches


def _mul(a, b):
    from .coeff import clmul
    return clmul(a, b)


def simply_face(pc: Precurve) -> SimplyFaced:
    n = pc.n
    P = list(pc.P)
    du = linalg.mat_copy(pc.dU)
    dq = linalg.mat_copy(pc.dQ)

    def side1(u, v, c):
        if c & 1:
            for j in range(n):
                if P[j] >> u & 1:
                    P[j] ^= 1 << v

    def side2(u, v, c):
        if c & 1:
            P[u] ^= P[v]

    um = _eliminate(du, side1)
    qm = _eliminate(dq, side2)
    for m, mat in ((um, du), (qm, dq)):
        expect = linalg.zeros(n)
        for e in m:
            expect[e.dst][e.src] = 1 << e.power
        if mat != expect:
            raise AssertionError("elimination did not reach matching form")
    out = Precurve(n, du, dq, tuple(P), (), pc.names, pc.grades)
    out = out.with_P(out.P)
    return SimplyFaced(out, tuple(sorted(um, key=lambda e: e.src)),
                       tuple(sorted(qm, key=lambda e: e.src)))


def is_simply_faced(pc: Precurve) -> bool:
    for m in (pc.dU, pc.dQ):
        seen_rows, seen_cols = set(), set()
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                if x:
                    if not is_monomial_bits(x) or i in seen_rows or j in seen_cols:
                        return False
                    seen_rows.add(i)
                    seen_cols.add(j)
    return True


def matching_of(pc: Precurve) -> SimplyFaced:
    """Wrap a precurve that is already simply-faced, without any basis change."""
    if not is_simply_faced(pc):
        raise ValueError("precurve is not simply-faced")

    def collect(m):
        return tuple(sorted((Match(j, i, bits_degree(x)) for i, row in enumerate(m)
                             for j, x in enumerate(row) if x), key=lambda e: e.src))

    return SimplyFaced(pc, collect(pc.dU), collect(pc.dQ))


# -- divergence order ---------------------------------------------------------------

class _Strands:
    """Matchings, grades and the strand permutation of a simply-faced precurve."""

    def __init__(self, s: SimplyFaced, sigma):
        self.n = s.n
        self.sides = {U_SIDE: s.side(U_SIDE), Q_SIDE: s.side(Q_SIDE)}
        g = s.precurve.grades
        self.grade = list(g) if g is not None else [()] * self.n
        self.set_sigma(sigma)

    def set_sigma(self, sigma):
        self.sigma = list(sigma)
        self.sigma_inv = [0] * self.n
        for i, j in enumerate(self.sigma):
            self.sigma_inv[j] = i

    def step(self, side, e):
        """Go around the face at ``e`` and across the arc neighbourhood."""
        p = self.sides[side].partner[e]
        if side == U_SIDE:
            return Q_SIDE, self.sigma[p]
        return U_SIDE, self.sigma_inv[p]

    def walk(self, side, e, limit):
        """Key sequence starting at point ``e`` and how it ends.

        The end is ``("puncture", side, point)`` or ``("closed", base, offset)``.
        """
        keys = []
        seen = {}
        state = (side, e)
        while True:
            sd = self.sides[state[0]]
            if state in seen:
                cycle = list(seen)[seen[state]:]
                base = min(cycle)
                period = len(cycle)
                offset = -cycle.index(base) % period
                # Unroll so that comparisons see whole periods of both strands.
                while len(keys) < limit:
                    keys.append(keys[len(keys) - period])
                return keys, ("closed", base, offset)
            seen[state] = len(seen)
            keys.append(sd.key(state[1]))
            if sd.role[state[1]] == FREE:
                return keys, ("puncture", state[0], state[1])
            state = self.step(*state)

    def orders(self):
        limit = 4 * self.n + 4
        out = {}
        self.walks = {}
        for side in (U_SIDE, Q_SIDE):
            table = {}
            for e in range(self.n):
                keys, end = self.walk(side, e, limit)
                table[e] = (keys, end)
            self.walks[side] = table
            ranked = sorted(range(self.n), key=lambda e: (self.grade[e], table[e][0],
                                                          _end_key(table[e][1])))
            rank = [0] * self.n
            for r, e in enumerate(ranked):
                rank[e] = r
            out[side] = rank
        return out[U_SIDE], out[Q_SIDE]

    def parallel(self, side, a, b) -> bool:
        ka, ea = self.walks[side][a]
        kb, eb = self.walks[side][b]
        return ea[0] == "closed" and eb[0] == "closed" and ka == kb

    def depth(self, side, a, b) -> float:
        """Arc neighbourhoods traversed from ``a`` and ``b`` until they diverge."""
        ka, ea = self.walks[side][a]
        kb, eb = self.walks[side][b]
        for idx, (x, y) in enumerate(zip(ka, kb)):
            if x != y or x[0] == FREE:
                return idx + 1
        if ea[0] == "closed" and eb[0] == "closed":
            return math.inf
        return min(len(ka), len(kb)) + 1


def _end_key(end):
    if end[0] == "puncture":
        return (0, end[1], end[2], 0)
    return (1, end[1][0], end[1][1], end[2])


def order_strands(s: SimplyFaced) -> SimplyFaced:
    """Sort both ends by the divergence order and rewrite the word of P.

    The strand permutation is the one the reduction glues; the orders compare
    the key sequences met along each strand.
    """
    n = s.n
    strands = _Strands(s, strand_permutation(s))
    r1, r2 = strands.orders()
    word = decompose_word(s.precurve.P, n, r1, r2)
    pc = s.precurve.with_P(s.precurve.P, word)
    return replace(s, precurve=pc, sigma=tuple(strands.sigma),
                   order1=tuple(sorted(range(n), key=r1.__getitem__)),
                   order2=tuple(sorted(range(n), key=r2.__getitem__)))


def arrow_depth(s: SimplyFaced, arrow) -> float:
    """Depth of a crossover arrow, or ``math.inf`` between parallel strands.

    ``arrow`` is an :class:`ElementaryMove` or a pair of side-1 points.
    """
    if s.sigma is None:
        s = order_strands(s)
    n = s.n
    if isinstance(arrow, ElementaryMove):
        if arrow.kind != "crossover":
            raise ValueError("only crossover arrows have a depth")
        a, b = arrow.i, arrow.j
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError("arrow endpoints out of range")
        if arrow.end == 2:
            inv = [0] * n
            for i, j in enumerate(s.sigma):
                inv[j] = i
            a, b = inv[a], inv[b]
    else:
        a, b = arrow
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError("arrow endpoints out of range")
    strands = _Strands(s, s.sigma)
    strands.orders()
    forward = strands.depth(U_SIDE, a, b)
    backward = strands.depth(Q_SIDE, s.sigma[a], s.sigma[b])
    return min(forward, backward)


# -- arrow sliding ----------------------------------------------------------------
#
# With both faces in matching form, the basis changes that survive act on P by
# row operations (side 2) and column operations (side 1).  Points of one grade
# and one side are grouped by matching key; an operation may add a point into
# one of equal or larger key, and on equal keys of matched points it must be
# mirrored on the partners.  That makes the remaining problem a bunch of
# chains, and the reduction below eliminates it one block at a time: pick the
# block between the top row class and the lowest column class it meets, bring
# it to normal form by basis changes inside the two classes, glue the unit
# part into strands and split what is left.

ROW, COL = Q_SIDE, U_SIDE


class _Piece:
    """Points of one side and grade that still move together."""

    __slots__ = ("kind", "grade", "points", "partner")

    def __init__(self, kind, grade, points):
        self.kind = kind
        self.grade = grade
        self.points = list(points)
        self.partner = None

    def __repr__(self):
        side = "row" if self.kind == ROW else "col"
        return f"<{side} {self.grade} {self.points}>"


def _couple(a, b):
    if a is not None:
        a.partner = b
    if b is not None:
        b.partner = a


def _cut(piece, first):
    """Split ``piece`` after ``first`` points; empty halves come back as None."""
    head = _Piece(piece.kind, piece.grade, piece.points[:first]) if first else None
    rest = piece.points[first:]
    tail = _Piece(piece.kind, piece.grade, rest) if rest else None
    return head, tail


def _vec_times(v, m):
    """Row vector ``v`` times the row-bitmask matrix ``m``."""
    out = 0
    while v:
        low = v & -v
        out ^= m[low.bit_length() - 1]
        v ^= low
    return out


def _mat_vec(m, v):
    """``m`` applied to the column vector ``v``."""
    return sum((bin(row & v).count("1") & 1) << i for i, row in enumerate(m))


def _rank_form(M, k1, k2):
    """``S, T, r`` with ``S M T`` the rank-``r`` unit block in the top left."""
    W = list(M)
    S = linalg.identity_rows(k1)
    pivots = []
    for c in range(k2):
        r = len(pivots)
        i = next((i for i in range(r, k1) if W[i] >> c & 1), None)
        if i is None:
            continue
        W[r], W[i] = W[i], W[r]
        S[r], S[i] = S[i], S[r]
        for j in range(k1):
            if j != r and W[j] >> c & 1:
                W[j] ^= W[r]
                S[j] ^= S[r]
        pivots.append(c)
    rest = [c for c in range(k2) if c not in pivots]
    where = {c: j for j, c in enumerate(pivots + rest)}
    T = [1 << where[c] for c in range(k2)]
    for i, c in enumerate(pivots):
        for c2 in rest:
            if W[i] >> c2 & 1:
                T[c] ^= 1 << where[c2]
    return S, T, len(pivots)


class _Basis:
    """Incremental echelon basis of bit vectors."""

    def __init__(self):
        self.rows = {}

    def reduce(self, v):
        while v:
            top = v.bit_length() - 1
            if top not in self.rows:
                return v
            v ^= self.rows[top]
        return 0

    def add(self, v) -> bool:
        v = self.reduce(v)
        if v:
            self.rows[v.bit_length() - 1] = v
        return bool(v)


def _kernel(m, k):
    sol = linalg.solve_affine([(row, 0) for row in m], k)
    return sol[1]


def _similarity_form(M, k):
    """Change of basis splitting ``M`` into an invertible part and Jordan chains.

    Returns ``(S, a, chains)``: ``S M S^-1`` is block diagonal with an
    invertible ``a x a`` block first, then nilpotent Jordan blocks.  Each chain
    lists its positions ``p1..pm`` with entry ``(p_i, p_{i+1})`` equal to one.
    """
    power = linalg.identity_rows(k)
    for _ in range(k):
        power = linalg.rows_mul(power, M)
    image = _Basis()
    inv_vecs = []
    for col in linalg.rows_transpose(power, k):
        if image.add(col):
            inv_vecs.append(col)
    # Jordan chains of M on the kernel of its k-th power.
    kernels = [[]]
    mpow = linalg.identity_rows(k)
    while True:
        mpow = linalg.rows_mul(mpow, M)
        ker = _kernel(mpow, k)
        kernels.append(ker)
        if len(ker) == k - len(inv_vecs):
            break
    tops = []
    for j in range(len(kernels) - 1, 0, -1):
        span = _Basis()
        for v in kernels[j - 1]:
            span.add(v)
        for top, length in tops:
            v = top
            for _ in range(length - j):
                v = _mat_vec(M, v)
            span.add(v)
        for v in kernels[j]:
            if span.add(v):
                tops.append((v, j))
    tops.sort(key=lambda t: t[1])
    basis = list(inv_vecs)
    chains = []
    for top, length in tops:
        seq = [top]
        for _ in range(length - 1):
            seq.append(_mat_vec(M, seq[-1]))
        chains.append(list(range(len(basis), len(basis) + length)))
        basis.extend(reversed(seq))
    Qm = linalg.rows_transpose(basis, k)
    S = linalg.rows_inverse(Qm)
    return S, len(inv_vecs), chains


class _Reduction:
    def __init__(self, s: SimplyFaced):
        self.s = s
        n = self.n = s.n
        self.P = list(s.precurve.P)
        self.sides = {U_SIDE: s.side(U_SIDE), Q_SIDE: s.side(Q_SIDE)}
        g = s.precurve.grades
        self.grade = list(g) if g is not None else [()] * n
        self.sigma = [-1] * n
        self.bands = []
        self.chains = {}
        for kind in (ROW, COL):
            side = self.sides[kind]
            classes = {}
            for i in range(n):
                classes.setdefault((self.grade[i], side.key(i)), []).append(i)
            pieces = {}
            for (gr, key), pts in classes.items():
                if key[0] == BOTTOM:
                    continue
                piece = _Piece(kind, gr, pts)
                pieces[(gr, key)] = piece
                if key[0] == TOP:
                    partner = _Piece(kind, self.grade[side.partner[pts[0]]],
                                     [side.partner[p] for p in pts])
                    pkey = (partner.grade, side.key(partner.points[0]))
                    if sorted(partner.points) != sorted(classes[pkey]):
                        raise AssertionError("matched classes differ in size")
                    pieces[pkey] = partner
                    _couple(piece, partner)
            for (gr, key), piece in sorted(pieces.items(), key=lambda kv: kv[0][1]):
                self.chains.setdefault((kind, gr), []).append(piece)

    # basis changes inside a piece, mirrored on its partner
    def _act(self, piece, S):
        pts = piece.points
        if piece.kind == ROW:
            old = [self.P[p] for p in pts]
            for a, p in enumerate(pts):
                self.P[p] = _vec_times(S[a], old)
            return
        for r in range(self.n):
            row = self.P[r]
            v = sum((row >> c & 1) << a for a, c in enumerate(pts))
            if not v:
                continue
            w = _vec_times(v, S)
            for a, c in enumerate(pts):
                if (v ^ w) >> a & 1:
                    row ^= 1 << c
            self.P[r] = row

    def levi(self, piece, S):
        self._act(piece, S)
        f = piece.partner
        if f is not None:
            self._act(f, S if f.kind == piece.kind else linalg.rows_inverse(S))

    def block(self, x, y):
        return [sum((self.P[r] >> c & 1) << j for j, c in enumerate(y.points))
                for r in x.points]

    def replace(self, piece, new):
        chain = self.chains[(piece.kind, piece.grade)]
        i = next(i for i, p in enumerate(chain) if p is piece)
        chain[i:i + 1] = [p for p in new if p is not None]

    def live(self, kind, grade):
        return [p for piece in self.chains.get((kind, grade), ()) for p in piece.points]

    def schur(self, grade, rows, cols):
        """Clear the glued block's rows and columns out of the live part."""
        k = len(rows)
        W = [sum((self.P[r] >> c & 1) << j for j, c in enumerate(cols)) for r in rows]
        Winv = linalg.rows_inverse(W)
        glued = [self.P[r] for r in rows]
        for r in self.live(ROW, grade):
            v = sum((self.P[r] >> c & 1) << j for j, c in enumerate(cols))
            if v:
                coeff = _vec_times(v, Winv)
                self.P[r] ^= _vec_times(coeff, glued)
        assert k == len(cols)

    def run(self):
        while True:
            grades = sorted(g for (kind, g), ch in self.chains.items() if kind == ROW and ch)
            if not grades:
                break
            g = grades[0]
            x = self.chains[(ROW, g)][-1]
            for y in self.chains.get((COL, g), ()):
                M = self.block(x, y)
                if any(M):
                    break
            else:
                raise AssertionError("change-of-side matrix is singular")
            if x.partner is y:
                self.close_up(g, x, y, M)
            else:
                self.glue(g, x, y, M)
        self.certify()

    def glue(self, g, x, y, M):
        S, T, r = _rank_form(M, len(x.points), len(y.points))
        self.levi(x, S)
        self.levi(y, T)
        rows, cols = x.points[:r], y.points[:r]
        for rr, cc in zip(rows, cols):
            self.sigma[cc] = rr
        px, py = x.partner, y.partner
        x1, x2 = _cut(x, r)
        y1, y2 = _cut(y, r)
        self.replace(x, [x2])
        self.replace(y, [y2])
        # Stabilizer of the unit block: the partner of the glued rows sits
        # below the rest, the partner of the glued columns above it.
        px1 = px2 = py1 = py2 = None
        if px is not None:
            px1, px2 = _cut(px, r)
            self.replace(px, [px1, px2])
        if py is not None:
            py1, py2 = _cut(py, r)
            self.replace(py, [py2, py1])
        _couple(x2, px2)
        _couple(y2, py2)
        _couple(px1, py1)
        self.schur(g, rows, cols)

    def close_up(self, g, x, y, M):
        k = len(x.points)
        S, a, chains = _similarity_form(M, k)
        self.levi(x, S)
        M = self.block(x, y)
        rows, cols = [], []
        if a:
            band_rows, band_cols = x.points[:a], y.points[:a]
            self.bands.append((tuple(band_cols), tuple(M[i] & ((1 << a) - 1)
                                                         for i in range(a))))
            for rr, cc in zip(band_rows, band_cols):
                self.sigma[cc] = rr
            rows += band_rows
            cols += band_cols
        by_length = {}
        for ch in chains:
            for p, q in zip(ch, ch[1:]):
                if not M[p] >> q & 1:
                    raise AssertionError("Jordan chain is broken")
                self.sigma[y.points[q]] = x.points[p]
                rows.append(x.points[p])
                cols.append(y.points[q])
            by_length.setdefault(len(ch), []).append(ch)
        tops, bottoms = [], []
        for length in sorted(by_length):
            top = _Piece(ROW, g, [x.points[ch[-1]] for ch in by_length[length]])
            bottom = _Piece(COL, g, [y.points[ch[0]] for ch in by_length[length]])
            _couple(top, bottom)
            tops.append(top)
            bottoms.append(bottom)
        self.replace(x, tops)
        self.replace(y, list(reversed(bottoms)))
        if rows:
            self.schur(g, rows, cols)

    def normal_form(self):
        out = [0] * self.n
        for c, r in enumerate(self.sigma):
            out[r] |= 1 << c
        for cols, X in self.bands:
            rows = [self.sigma[c] for c in cols]
            for i, r in enumerate(rows):
                out[r] &= ~sum(1 << c for c in cols)
                out[r] |= sum((X[i] >> j & 1) << c for j, c in enumerate(cols))
        return out

    def certify(self):
        """Compare rank invariants of the parabolic blocks before and after."""
        if sorted(self.sigma) != list(range(self.n)):
            raise AssertionError("strands do not form a permutation")
        if any(self.grade[c] != self.grade[r] for c, r in enumerate(self.sigma)):
            raise AssertionError("a strand changes grade")
        before, after = self.s.precurve.P, self.normal_form()
        su, sq = self.sides[U_SIDE], self.sides[Q_SIDE]
        by_grade = {}
        for i in range(self.n):
            by_grade.setdefault(self.grade[i], []).append(i)
        for pts in by_grade.values():
            k1 = sorted({su.key(i) for i in pts})
            k2 = sorted({sq.key(i) for i in pts})
            for top in k2:
                rows = [i for i in pts if sq.key(i) >= top]
                for low in k1:
                    mask = sum(1 << i for i in pts if su.key(i) <= low)
                    if (linalg.rows_rank([before[r] & mask for r in rows])
                            != linalg.rows_rank([after[r] & mask for r in rows])):
                        raise AssertionError("reduction changed a rank invariant")

    def multicurve(self) -> Multicurve:
        return _assemble(self.s, self.normal_form(), self.sigma, self.bands)


def slide_arrows(s: SimplyFaced) -> Multicurve:
    red = _Reduction(s)
    red.run()
    return red.multicurve()


def strand_permutation(s: SimplyFaced) -> tuple[int, ...]:
    red = _Reduction(s)
    red.run()
    return tuple(red.sigma)


# -- multicurves -------------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    """Arc between consecutive generators of a component.

    ``direction`` is ``"forward"`` when the earlier generator maps to
    ``V^power`` times the later one, ``"backward"`` otherwise.
    """

    face: str
    power: int
    direction: str


@dataclass(frozen=True)
class CurveComponent:
    generators: tuple[int, ...]
    segments: tuple[Segment, ...]
    start: str
    end: str
    decoration: tuple[int, ...] = (1,)

    @property
    def closed(self) -> bool:
        return self.start == "closed"

    @property
    def rank(self) -> int:
        return len(self.decoration)

    def is_decorated(self) -> bool:
        return self.decoration != (1,) and self.decoration != tuple(
            1 << i for i in range(len(self.decoration)))


@dataclass(frozen=True)
class Multicurve:
    n: int
    components: tuple[CurveComponent, ...]
    names: tuple[str, ...] = ()
    grades: tuple[tuple[int, ...], ...] | None = None
    P: tuple[int, ...] = ()
    sigma: tuple[int, ...] = ()
    u_matching: tuple[Match, ...] = ()
    q_matching: tuple[Match, ...] = ()


def components(mc: Multicurve) -> list[CurveComponent]:
    return list(mc.components)


def multicurve_to_json(mc: Multicurve) -> dict:
    comps = []
    for c in mc.components:
        comps.append({
            "generators": [mc.names[g] if mc.names else g for g in c.generators],
            "segments": [{"face": sg.face, "power": sg.power, "direction": sg.direction}
                         for sg in c.segments],
            "start": c.start, "end": c.end, "decoration": list(c.decoration)})
    return {"n": mc.n, "components": comps}


def multicurve_precurve(mc: Multicurve) -> Precurve:
    """The precurve whose faces are the matchings and whose P is the normal form."""
    n = mc.n
    du, dq = linalg.zeros(n), linalg.zeros(n)
    for m in mc.u_matching:
        du[m.dst][m.src] = 1 << m.power
    for m in mc.q_matching:
        dq[m.dst][m.src] = 1 << m.power
    return Precurve(n, du, dq, mc.P, decompose_word(mc.P, n), mc.names, mc.grades)


def _segment(side: _Side, face: str, a: int, b: int) -> Segment:
    direction = "forward" if side.role[a] == TOP else "backward"
    return Segment(face, side.power[a], direction)


def _assemble(s: SimplyFaced, P, sigma, bands) -> Multicurve:
    n = s.n
    su, sq = s.side(U_SIDE), s.side(Q_SIDE)
    sigma_inv = [0] * n
    for i, j in enumerate(sigma):
        sigma_inv[j] = i

    def u_next(i):
        return su.partner[i] if su.role[i] != FREE else None

    def q_next(i):
        j = sigma[i]
        return sigma_inv[sq.partner[j]] if sq.role[j] != FREE else None

    def step(cur, face):
        nxt = u_next(cur) if face == "U" else q_next(cur)
        if nxt is None:
            return None, None
        if face == "U":
            return nxt, _segment(su, "U", cur, nxt)
        return nxt, _segment(sq, "Q", sigma[cur], sigma[nxt])

    visited = [False] * n
    comps = []

    def trace_open(start, first_face):
        gens, segs = [start], []
        face, cur = first_face, start
        while True:
            nxt, seg = step(cur, face)
            if nxt is None:
                return gens, segs, face
            segs.append(seg)
            gens.append(nxt)
            cur = nxt
            face = "Q" if face == "U" else "U"

    # Open curves: begin at points left unmatched by the U-face, then the Q-face.
    for i in range(n):
        if not visited[i] and su.role[i] == FREE:
            gens, segs, last = trace_open(i, "Q")
            for g in gens:
                visited[g] = True
            comps.append(CurveComponent(tuple(gens), tuple(segs), "U", last))
    for i in range(n):
        if not visited[i] and sq.role[sigma[i]] == FREE:
            gens, segs, last = trace_open(i, "U")
            for g in gens:
                visited[g] = True
            comps.append(CurveComponent(tuple(gens), tuple(segs), "Q", last))

    # Closed curves run through exactly one band each, once per band point.
    for cols, X in bands:
        loops = []
        for c in cols:
            gens, segs = [c], []
            cur, face = c, "Q"
            while True:
                nxt, seg = step(cur, face)
                segs.append(seg)
                face = "Q" if face == "U" else "U"
                if nxt == c and face == "Q":
                    break
                if visited[nxt]:
                    raise AssertionError("closed strand meets another curve")
                gens.append(nxt)
                cur = nxt
            for g in gens:
                visited[g] = True
            loops.append((gens, segs))
        at = 0
        for block in _local_system_blocks(X):
            k = len(block)
            gens = [g for lp in loops[at:at + k] for g in lp[0]]
            segs = loops[at][1]
            at += k
            comps.append(CurveComponent(tuple(gens), tuple(segs), "closed", "closed",
                                        tuple(block)))
    if not all(visited):
        raise AssertionError("closed strand outside every band")

    def order_key(c):
        return (0 if "U" in (c.start, c.end) else 1, min(c.generators))

    comps.sort(key=order_key)
    return Multicurve(n, tuple(comps), s.precurve.names, s.precurve.grades, tuple(P),
                      tuple(sigma), s.u_matching, s.q_matching)


# -- local systems ----------------------------------------------------------------

def _pmod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _irreducibles(max_degree: int):
    found = []
    for d in range(1, max_degree + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if all(_pmod(f, p) for p in found if 2 * (p.bit_length() - 1) <= d):
                found.append(f)
                yield f


def _poly_at(f: int, M):
    k = len(M)
    out = [0] * k
    for e in range(f.bit_length() - 1, -1, -1):
        out = linalg.rows_mul(out, M)
        if f >> e & 1:
            out = [r ^ (1 << i) for i, r in enumerate(out)]
    return out


def _companion(f: int):
    d = f.bit_length() - 1
    return tuple(((1 << (i - 1)) if i else 0) | ((f >> i & 1) << (d - 1)) for i in range(d))


def _local_system_blocks(X):
    """Indecomposable summands of an invertible matrix up to conjugacy.

    Each summand is the companion matrix of a power of an irreducible
    polynomial, so the identity splits into ones.
    """
    k = len(X)
    X = list(X)
    blocks = []
    left = k
    for p in _irreducibles(k):
        if left == 0:
            break
        d = p.bit_length() - 1
        base = _poly_at(p, X)
        power = linalg.identity_rows(k)
        dims = [0]
        while True:
            power = linalg.rows_mul(power, base)
            dims.append(k - linalg.rows_rank(power))
            if dims[-1] == dims[-2]:
                break
        dims.pop()
        at_least = [(dims[j] - dims[j - 1]) // d for j in range(1, len(dims))]
        for j, count in enumerate(at_least, start=1):
            exact = count - (at_least[j] if j < len(at_least) else 0)
            f = 1
            for _ in range(j):
                f = clmul(f, p)
            blocks += [_companion(f)] * exact
        left -= dims[-1]
    return blocks


# -- the primitive curve ------------------------------------------------------------

@dataclass(frozen=True)
class PrimitiveCurve:
    generators: tuple[int, ...]
    segments: tuple[Segment, ...]
    names: tuple[str, ...] = ()
    bigrading: tuple[tuple[int, ...], ...] | None = None

    @property
    def params(self) -> StandardParams:
        return readout_standard(self)

    @property
    def initial(self) -> int:
        return self.generators[0]

    @property
    def final(self) -> int:
        return self.generators[-1]


def extract_primitive(mc: Multicurve) -> PrimitiveCurve:
    with_u = [c for c in mc.components if "U" in (c.start, c.end)]
    u_ends = sum((c.start == "U") + (c.end == "U") for c in mc.components)
    if len(with_u) != 1 or u_ends != 1:
        raise NotPrimitive(f"expected exactly one U-puncture end, found {u_ends}")
    comp = with_u[0]
    if comp.is_decorated() or comp.rank != 1:
        raise AssertionError("primitive curve carries a decoration")
    if comp.end != "Q":
        raise NotPrimitive("the curve through the U-puncture does not end at the Q-puncture")
    names = tuple(mc.names[g] for g in comp.generators) if mc.names else ()
    grading = tuple(mc.grades[g] for g in comp.generators) if mc.grades else None
    return PrimitiveCurve(comp.generators, comp.segments, names, grading)


def readout_standard(curve: PrimitiveCurve) -> StandardParams:
    segs = curve.segments
    if len(segs) % 2:
        raise NotPrimitive("primitive curve must end after a U-arc")
    pairs = []
    for k in range(0, len(segs), 2):
        qs, us = segs[k], segs[k + 1]
        if qs.face != "Q" or us.face != "U":
            raise NotPrimitive("arcs do not alternate Q, U from the U-puncture")
        if qs.power != 1:
            raise NotPrimitive(f"Q-arc of length {qs.power}")
        a = 1 if qs.direction == "backward" else -1
        b = us.power if us.direction == "backward" else -us.power
        pairs.append((a, b))
    return StandardParams(tuple(pairs))


# -- homology ranks and the shift -------------------------------------------------

def homology_rank(pc, face: str) -> int:
    """Rank of the localized homology of one face quotient.

    For a simply-faced precurve this is the number of unmatched points.
    """
    if face not in ("U", "Q"):
        raise ValueError("face must be 'U' or 'Q'")
    if isinstance(pc, SimplyFaced):
        return len(pc.unmatched(U_SIDE if face == "U" else Q_SIDE))
    m = pc.dU if face == "U" else pc.dQ
    return pc.n - 2 * linalg.frac_rank(m)


def gimage_homology_rank(m: RComplex, face: str) -> int:
    """The same rank computed from an R-complex: kill the other variable."""
    _, u, q = m.parts()
    return m.n - 2 * linalg.frac_rank(u if face == "U" else q)


def shift_precurve(pc, n: int):
    """Lengthen every U-arc of length at least ``n`` by one."""
    if n < 1:
        raise ValueError("shift index must be at least 1")
    if isinstance(pc, SimplyFaced):
        shifted = shift_precurve(pc.precurve, n)
        um = tuple(Match(e.src, e.dst, e.power + 1 if e.power >= n else e.power)
                   for e in pc.u_matching)
        return replace(pc, precurve=shifted, u_matching=um, sigma=None,
                       order1=None, order2=None)

    def bump(x):
        return sum(1 << (k + 1 if k >= n else k) for k in exponents(x))

    du = [[bump(x) for x in row] for row in pc.dU]
    if not linalg.mat_is_zero(linalg.mat_mul(du, du)):
        raise ValueError("shifted U-face differential no longer squares to zero")
    return replace(pc, dU=du, grades=None)
