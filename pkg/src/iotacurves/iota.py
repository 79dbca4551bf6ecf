"""Almost iota-complexes over F2[U]: construction, validation, reduction,
products, and the passage to complexes over R = F2[U,Q]/(UQ).

Matrices follow one convention throughout: entry ``[i][j]`` is the
coefficient of generator ``i`` in the image of generator ``j``.  Entries are
bit-encoded polynomials (see :mod:`iotacurves.coeff`).  Multiplication by U
lowers the U-grading by 2 and the differential lowers it by 1, so a
differential entry ``U^k`` from ``j`` to ``i`` forces
``grU(i) = grU(j) - 1 + 2k`` and an ``iota`` entry forces ``grU(i) = grU(j) + 2k``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .coeff import RElem, bits_degree, format_upoly, is_monomial_bits, parse_upoly


class InvalidComplex(ValueError):
    """An input violates the almost iota-complex axioms or a precondition."""


class ParamsSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


@dataclass(frozen=True)
class Generator:
    name: str
    grU: int
    grQ: int | None = None


# -- standard complexes ------------------------------------------------------

@dataclass(frozen=True)
class StandardParams:
    """The sequence ``(a1, b2, ..., a_{2n-1}, b_{2n})`` as ``(sign, b)`` pairs.

    Signs are stored as ``+1`` / ``-1``.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        for a, b in pairs:
            if a not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {a}")
            if b == 0:
                raise ValueError("b must be nonzero")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def parse(cls, text: str) -> StandardParams:
        return parse_params(text)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def bs(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        body = ",".join(f"{'+' if a > 0 else '-'},{b}" for a, b in self.pairs)
        return f"C({body})"


_PARAMS_TOKEN = re.compile(r"\s*(\d+|[+-]\d+|[+-]|,|\))")


def parse_params(text: str) -> StandardParams:
    """Parse ``C(+,-2,-,3)``; syntax errors report the character position."""
    pos = len(text) - len(text.lstrip())
    if not text.startswith("C(", pos):
        raise ParamsSyntaxError("expected 'C('", pos)
    pos += 2
    pairs: list[tuple[int, int]] = []
    expect = "sign-or-close"
    sign = 0
    while True:
        m = _PARAMS_TOKEN.match(text, pos)
        if m is None:
            raise ParamsSyntaxError("unexpected input", pos)
        tok, at = m.group(1), m.start(1)
        pos = m.end()
        if expect in ("sign-or-close", "comma-or-close") and tok == ")":
            break
        if expect in ("sign-or-close", "sign") and tok in "+-" and len(tok) == 1:
            sign = 1 if tok == "+" else -1
            expect = "comma-before-b"
        elif expect == "comma-before-b" and tok == ",":
            expect = "b"
        elif expect == "b" and tok not in ",)+-":
            b = int(tok)
            if b == 0:
                raise ValueError("b must be nonzero")
            pairs.append((sign, b))
            expect = "comma-or-close"
        elif expect == "comma-or-close" and tok == ",":
            expect = "sign"
        else:
            wanted = {"sign-or-close": "a sign or ')'", "sign": "a sign",
                      "comma-before-b": "','", "b": "an integer",
                      "comma-or-close": "',' or ')'"}[expect]
            raise ParamsSyntaxError(f"expected {wanted}, got {tok!r}", at)
    if text[pos:].strip():
        raise ParamsSyntaxError("trailing characters", pos)
    return StandardParams(tuple(pairs))


def naive_bigrading(p: StandardParams) -> list[tuple[int, int]]:
    """(grU, grQ) of T0, ..., T2n starting from (0, 0)."""
    out = [(0, 0)]
    for a, b in p.pairs:
        u, q = out[-1]
        q = q - 1 if a > 0 else q + 1
        out.append((u, q))
        u = u - 2 * b + 1 if b > 0 else u - 2 * b - 1
        out.append((u, q))
    return out


def _standard_matrices(p: StandardParams):
    n = 2 * len(p) + 1
    d = linalg.zeros(n)
    omega = linalg.zeros(n)
    for m, (a, b) in enumerate(p.pairs):
        i = 2 * m + 1
        if a > 0:
            omega[i - 1][i] = 1
        else:
            omega[i][i - 1] = 1
        i += 1
        if b > 0:
            d[i - 1][i] = 1 << b
        else:
            d[i][i - 1] = 1 << -b
    return d, omega


# -- complexes -----------------------------------------------------------------

@dataclass(frozen=True)
class AlmostIotaComplex:
    gens: tuple[Generator, ...]
    d: tuple[tuple[int, ...], ...]
    iota: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "d", linalg.mat_freeze(self.d))
        object.__setattr__(self, "iota", linalg.mat_freeze(self.iota))
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise InvalidComplex("generator names must be unique")

    @property
    def n(self) -> int:
        return len(self.gens)

    @property
    def omega(self) -> tuple[tuple[int, ...], ...]:
        return linalg.mat_freeze(linalg.mat_add(self.iota, linalg.identity(self.n)))

    @property
    def grades(self) -> list[int]:
        return [g.grU for g in self.gens]

    def index(self, name: str) -> int:
        for i, g in enumerate(self.gens):
            if g.name == name:
                return i
        raise KeyError(name)

    def is_reduced(self) -> bool:
        return not any(x & 1 for row in self.d for x in row)


def build_standard(p: StandardParams) -> AlmostIotaComplex:
    d, omega = _standard_matrices(p)
    grading = naive_bigrading(p)
    gens = [Generator(f"T{i}", u, q) for i, (u, q) in enumerate(grading)]
    iota = linalg.mat_add(omega, linalg.identity(len(gens)))
    return AlmostIotaComplex(tuple(gens), d, iota)


def direct_sum(c1: AlmostIotaComplex, c2: AlmostIotaComplex) -> AlmostIotaComplex:
    n1, n2 = c1.n, c2.n
    names = {g.name for g in c1.gens}
    gens2 = [g if g.name not in names else Generator(g.name + "'", g.grU, g.grQ)
             for g in c2.gens]

    def block(a, b):
        out = linalg.zeros(n1 + n2)
        for i in range(n1):
            out[i][:n1] = a[i]
        for i in range(n2):
            out[n1 + i][n1:] = b[i]
        return out

    return AlmostIotaComplex(c1.gens + tuple(gens2), block(c1.d, c2.d),
                             block(c1.iota, c2.iota))


def acyclic_pair(k: int, grade: int = 1, names=("x", "y")) -> AlmostIotaComplex:
    """The two-generator complex ``x -> U^k y`` with trivial involution."""
    if k < 0:
        raise ValueError("power must be non-negative")
    gens = (Generator(names[0], grade), Generator(names[1], grade - 1 + 2 * k))
    return AlmostIotaComplex(gens, [[0, 0], [1 << k, 0]], linalg.identity(2))


@dataclass(frozen=True)
class ModUMap:
    """An F2[U]-linear map between complexes, homogeneous of degree ``shift``."""

    source: AlmostIotaComplex
    target: AlmostIotaComplex
    matrix: tuple[tuple[int, ...], ...]
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "matrix", linalg.mat_freeze(self.matrix))
        if len(self.matrix) != self.target.n or any(len(r) != self.source.n for r in self.matrix):
            raise ValueError("matrix shape does not match source/target")

    def is_homogeneous(self) -> bool:
        for j, row in enumerate(self.matrix):
            for i, x in enumerate(row):
                if x and not _entry_ok(x, self.target.gens[j].grU,
                                       self.source.gens[i].grU + self.shift):
                    return False
        return True


def _entry_ok(x: int, gr_target: int, gr_expected_at_zero: int) -> bool:
    """Entry ``U^k`` is homogeneous iff gr_target = expected + 2k."""
    if not is_monomial_bits(x):
        return False
    k = bits_degree(x)
    return gr_target == gr_expected_at_zero + 2 * k


# -- validation ----------------------------------------------------------------

@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    messages: dict[str, str] = field(default_factory=dict)
    witness: ModUMap | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def raise_if_invalid(self) -> None:
        if not self.ok:
            detail = "; ".join(f"{k}: {self.messages.get(k, 'failed')}" for k in self.failures())
            raise InvalidComplex(detail)


CHECKS = ("shape", "homogeneous", "d_squared", "iota_chain_mod_U",
          "iota_squared_mod_U", "single_tower")


def homogeneity_problems(c: AlmostIotaComplex) -> list[str]:
    out = []
    gr = c.grades
    for i in range(c.n):
        for j in range(c.n):
            x = c.d[i][j]
            if x and not _entry_ok(x, gr[i], gr[j] - 1):
                out.append(f"d entry {c.gens[j].name}->{c.gens[i].name} "
                           f"({format_upoly(x)}) is not homogeneous")
            y = c.iota[i][j]
            if y and not _entry_ok(y, gr[i], gr[j]):
                out.append(f"iota entry {c.gens[j].name}->{c.gens[i].name} "
                           f"({format_upoly(y)}) is not homogeneous")
    return out


def localized_homology_by_parity(c: AlmostIotaComplex) -> tuple[int, int]:
    """Ranks of U^-1 H in even and odd U-grading.

    For a homogeneous complex, setting U = 1 gives a Z/2-graded complex over F2
    whose homology has the same ranks as the localized homology.
    """
    at_one = linalg.eval_at_one(c.d)
    even = [i for i, g in enumerate(c.gens) if g.grU % 2 == 0]
    odd = [i for i, g in enumerate(c.gens) if g.grU % 2]

    def sub_rank(rows_idx, cols_idx):
        rows = []
        for r in rows_idx:
            bits = at_one[r]
            rows.append(sum(((bits >> cj) & 1) << k for k, cj in enumerate(cols_idx)))
        return linalg.rows_rank(rows)

    even_to_odd = sub_rank(odd, even)
    odd_to_even = sub_rank(even, odd)
    return (len(even) - even_to_odd - odd_to_even,
            len(odd) - odd_to_even - even_to_odd)


def validate(c: AlmostIotaComplex, require_even_tower: bool = True) -> ValidationReport:
    report = ValidationReport()
    n = c.n
    shape_ok = (len(c.d) == n and len(c.iota) == n
                and all(len(r) == n for r in c.d) and all(len(r) == n for r in c.iota))
    report.checks["shape"] = shape_ok
    if not shape_ok:
        report.messages["shape"] = "matrices must be square of size len(gens)"
        for name in CHECKS[1:]:
            report.checks[name] = False
        return report

    problems = homogeneity_problems(c)
    report.checks["homogeneous"] = not problems
    if problems:
        report.messages["homogeneous"] = problems[0]

    d2 = linalg.mat_mul(c.d, c.d)
    report.checks["d_squared"] = linalg.mat_is_zero(d2)
    if not report.checks["d_squared"]:
        report.messages["d_squared"] = "d o d is nonzero"

    comm = linalg.mat_add(linalg.mat_mul(c.d, c.iota), linalg.mat_mul(c.iota, c.d))
    report.checks["iota_chain_mod_U"] = linalg.mat_is_zero(linalg.const_part(comm))
    if not report.checks["iota_chain_mod_U"]:
        report.messages["iota_chain_mod_U"] = "d iota + iota d has a constant term"

    square = ModUMap(c, c, linalg.mat_mul(c.iota, c.iota))
    ident = ModUMap(c, c, linalg.identity(n))
    witness = homotopic_mod_U(square, ident)
    report.checks["iota_squared_mod_U"] = witness is not None
    report.witness = witness
    if witness is None:
        report.messages["iota_squared_mod_U"] = "iota^2 is not homotopic to the identity mod U"

    if problems:
        report.checks["single_tower"] = False
        report.messages["single_tower"] = "skipped: grading is inhomogeneous"
    else:
        even, odd = localized_homology_by_parity(c)
        if require_even_tower:
            ok = (even, odd) == (1, 0)
        else:
            ok = even + odd == 1
        report.checks["single_tower"] = ok
        if not ok:
            report.messages["single_tower"] = (
                f"localized homology has rank {even} in even and {odd} in odd grading")
    return report


def homotopic_mod_U(f: ModUMap, g: ModUMap) -> ModUMap | None:
    """Find H of degree ``shift + 1`` with ``f + g + H d + d H`` zero mod U.

    Only the constant part of H can contribute a constant term, so this is a
    linear system over F2 in the constant entries of H.  Returns ``None`` when
    the system is inconsistent.
    """
    if f.source is not g.source and f.source != g.source:
        raise ValueError("maps have different sources")
    if f.target is not g.target and f.target != g.target:
        raise ValueError("maps have different targets")
    if f.shift != g.shift:
        raise ValueError("maps have different grading shifts")
    src, tgt = f.source, f.target
    ns, nt = src.n, tgt.n
    if len(f.matrix) != nt or len(g.matrix) != nt:
        raise ValueError("shape mismatch")
    diff = [[(x ^ y) & 1 for x, y in zip(rf, rg)] for rf, rg in zip(f.matrix, g.matrix)]
    ds = linalg.const_part(src.d)
    dt = linalg.const_part(tgt.d)
    hshift = f.shift + 1
    zero_h = ModUMap(src, tgt, linalg.zeros(nt, ns), hshift)
    if linalg.mat_is_zero(diff):
        return zero_h
    if linalg.mat_is_zero(ds) and linalg.mat_is_zero(dt):
        return None

    var_index: dict[tuple[int, int], int] = {}
    for j in range(nt):
        for i in range(ns):
            if tgt.gens[j].grU == src.gens[i].grU + hshift:
                var_index[(j, i)] = len(var_index)
    # Entry (j, i) of H ds + dt H, as a combination of unknowns.
    equations = []
    for j in range(nt):
        for i in range(ns):
            row = 0
            for k in range(ns):
                if ds[k][i]:
                    v = var_index.get((j, k))
                    if v is not None:
                        row ^= 1 << v
            for k in range(nt):
                if dt[j][k]:
                    v = var_index.get((k, i))
                    if v is not None:
                        row ^= 1 << v
            if row or diff[j][i]:
                equations.append((row, diff[j][i]))
    solved = linalg.solve_affine(equations, len(var_index))
    if solved is None:
        return None
    particular, _ = solved
    h = linalg.zeros(nt, ns)
    for (j, i), v in var_index.items():
        if particular >> v & 1:
            h[j][i] = 1
    return ModUMap(src, tgt, h, hshift)


# -- reduction -------------------------------------------------------------------

def reduce(c: AlmostIotaComplex, check: bool = True):
    """Cancel constant differential entries until none remain.

    Returns ``(reduced, to, back)`` where ``to`` projects onto the reduced
    complex and ``back`` includes it; both are F2[U] homotopy equivalences.
    """
    if check:
        validate(c).raise_if_invalid()
    d = linalg.mat_copy(c.d)
    iota = linalg.mat_copy(c.iota)
    gens = list(c.gens)
    to = linalg.identity(c.n)
    back = linalg.identity(c.n)
    while True:
        pivot = next(((y, x) for y, row in enumerate(d) for x, v in enumerate(row) if v & 1),
                      None)
        if pivot is None:
            break
        y, x = pivot
        n = len(gens)
        keep = [k for k in range(n) if k not in (x, y)]
        # include(c) = c + x * (y-coefficient of dc); project(z) = z + (dx) * z_y
        include = linalg.zeros(n, len(keep))
        project = linalg.zeros(len(keep), n)
        for col, k in enumerate(keep):
            include[k][col] = 1
            include[x][col] = d[y][k]
            project[col][k] = 1
            project[col][y] = d[k][x]
        d = linalg.mat_mul(project, linalg.mat_mul(d, include))
        iota = linalg.mat_mul(project, linalg.mat_mul(iota, include))
        to = linalg.mat_mul(project, to)
        back = linalg.mat_mul(back, include)
        gens = [gens[k] for k in keep]
        if check:
            validate(AlmostIotaComplex(tuple(gens), d, iota)).raise_if_invalid()
    reduced = AlmostIotaComplex(tuple(gens), d, iota)
    omega0 = linalg.const_part(reduced.omega)
    if not linalg.mat_is_zero(linalg.mat_mul(omega0, omega0)):
        raise AssertionError("reduced complex has omega^2 nonzero mod U")
    return reduced, ModUMap(c, reduced, to), ModUMap(reduced, c, back)


# -- products ----------------------------------------------------------------------

def _product_name(a: str, b: str) -> str:
    wrap = lambda s: f"({s})" if "*" in s else s  # noqa: E731
    return f"{wrap(a)}*{wrap(b)}"


def product(c1: AlmostIotaComplex, c2: AlmostIotaComplex) -> AlmostIotaComplex:
    """Tensor product with d = d1 x 1 + 1 x d2 and iota = iota1 x iota2."""
    gens = tuple(Generator(_product_name(g1.name, g2.name), g1.grU + g2.grU)
                 for g1 in c1.gens for g2 in c2.gens)
    d = linalg.mat_add(linalg.kron(c1.d, linalg.identity(c2.n)),
                       linalg.kron(linalg.identity(c1.n), c2.d))
    iota = linalg.kron(c1.iota, c2.iota)
    return AlmostIotaComplex(gens, d, iota)


# -- complexes over R -----------------------------------------------------------

@dataclass(frozen=True)
class RComplex:
    gens: tuple[Generator, ...]
    delta: tuple[tuple[RElem, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "delta", tuple(tuple(r) for r in self.delta))

    @property
    def n(self) -> int:
        return len(self.gens)

    def parts(self):
        """Constant, U-part and Q-part matrices as bit-encoded ints."""
        c = [[x.c for x in row] for row in self.delta]
        u = [[x.u for x in row] for row in self.delta]
        q = [[x.q for x in row] for row in self.delta]
        return c, u, q

    def squares_to_zero(self) -> bool:
        c, u, q = self.parts()
        mm = linalg.mat_mul
        cc = mm(c, c)
        uu = linalg.mat_add(linalg.mat_add(mm(u, u), mm(c, u)), mm(u, c))
        qq = linalg.mat_add(linalg.mat_add(mm(q, q), mm(c, q)), mm(q, c))
        return all(linalg.mat_is_zero(m) for m in (cc, uu, qq))

    @classmethod
    def from_parts(cls, gens, u, q, c=None) -> RComplex:
        n = len(gens)
        delta = tuple(tuple(RElem(c[i][j] if c else 0, u[i][j], q[i][j]) for j in range(n))
                      for i in range(n))
        return cls(tuple(gens), delta)


def lift_to_R(c: AlmostIotaComplex) -> RComplex:
    """The R-complex with differential d + Q * (constant part of omega)."""
    if not c.is_reduced():
        raise InvalidComplex("lift requires a reduced complex (no constant d entries)")
    omega0 = linalg.const_part(c.omega)
    q = [[2 if x else 0 for x in row] for row in omega0]
    m = RComplex.from_parts(c.gens, c.d, q)
    if not m.squares_to_zero():
        raise InvalidComplex("lifted differential does not square to zero")
    return m


def q2_reduce(m: RComplex) -> AlmostIotaComplex:
    """Set Q^2 = 0: d from the constant and U parts, omega from the Q-linear part."""
    n = m.n
    d = [[x.c | x.u for x in row] for row in m.delta]
    iota = [[((m.delta[i][j].q >> 1) & 1) ^ (i == j) for j in range(n)] for i in range(n)]
    return AlmostIotaComplex(m.gens, d, iota)


def twisted_product(p1: StandardParams, p2: StandardParams) -> RComplex:
    """R-complex with (d1 x 1 + 1 x d2) + (omega1 x 1 + 1 x omega2) Q and
    the product bigrading."""
    d1, w1 = _standard_matrices(p1)
    d2, w2 = _standard_matrices(p2)
    g1, g2 = naive_bigrading(p1), naive_bigrading(p2)
    n1, n2 = len(g1), len(g2)
    gens = tuple(Generator(f"T{i}*T{j}", g1[i][0] + g2[j][0], g1[i][1] + g2[j][1])
                 for i in range(n1) for j in range(n2))
    i1, i2 = linalg.identity(n1), linalg.identity(n2)
    u = linalg.mat_add(linalg.kron(d1, i2), linalg.kron(i1, d2))
    w = linalg.mat_add(linalg.kron(w1, i2), linalg.kron(i1, w2))
    q = [[2 if x else 0 for x in row] for row in w]
    m = RComplex.from_parts(gens, u, q)
    bad = bigrading_problems(m)
    if bad:
        raise AssertionError(bad[0])
    if not m.squares_to_zero():
        raise AssertionError("twisted product differential does not square to zero")
    return m


def bigrading_problems(m: RComplex) -> list[str]:
    """Entries of an R-complex that fail to drop the bigrading by exactly one."""
    out = []
    for t, row in enumerate(m.delta):
        for s, x in enumerate(row):
            if not x:
                continue
            gs, gt = m.gens[s], m.gens[t]
            if x.c or (x.u and x.q) or not (is_monomial_bits(x.u) or is_monomial_bits(x.q)):
                out.append(f"entry {gs.name}->{gt.name} is not a single monomial")
                continue
            if x.u:
                k = bits_degree(x.u)
                ok = gt.grU - 2 * k == gs.grU - 1 and gt.grQ == gs.grQ
            else:
                k = bits_degree(x.q)
                ok = gt.grQ - 2 * k == gs.grQ - 1 and gt.grU == gs.grU
            if not ok:
                out.append(f"entry {gs.name}->{gt.name} ({x}) is not of degree -1")
    return out


# -- JSON ------------------------------------------------------------------------

def complex_to_json(c: AlmostIotaComplex) -> dict:
    def entries(mat):
        out = []
        for i in range(c.n):
            for j in range(c.n):
                x = mat[i][j]
                if x:
                    out.append({"from": c.gens[j].name, "to": c.gens[i].name,
                                "coeff": format_upoly(x)})
        return out

    return {"generators": [{"name": g.name, "grU": g.grU} for g in c.gens],
            "d": entries(c.d), "iota": entries(c.iota)}


def complex_from_json(obj: dict | str) -> AlmostIotaComplex:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        gens = tuple(Generator(str(g["name"]), int(g["grU"])) for g in obj["generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidComplex(f"malformed generator list: {exc}") from None
    index = {g.name: i for i, g in enumerate(gens)}
    if len(index) != len(gens):
        raise InvalidComplex("generator names must be unique")
    n = len(gens)

    def matrix(key):
        out = linalg.zeros(n)
        for e in obj.get(key, []):
            try:
                src, dst = index[e["from"]], index[e["to"]]
            except KeyError as exc:
                raise InvalidComplex(f"unknown generator {exc.args[0]!r} in {key}") from None
            out[dst][src] ^= parse_upoly(str(e["coeff"]))
        return out

    return AlmostIotaComplex(gens, matrix("d"), matrix("iota"))


def complexes_isomorphic_by_names(c1: AlmostIotaComplex, c2: AlmostIotaComplex,
                                  mapping: Sequence[int]) -> bool:
    """True if ``mapping[i]`` (index in c2 of generator i of c1) is an isomorphism."""
    n = c1.n
    if c2.n != n:
        return False
    for i in range(n):
        if c1.gens[i].grU != c2.gens[mapping[i]].grU:
            return False
        for j in range(n):
            if c1.d[i][j] != c2.d[mapping[i]][mapping[j]]:
                return False
            if c1.iota[i][j] != c2.iota[mapping[i]][mapping[j]]:
                return False
    return True


__all__ = [
    "AlmostIotaComplex", "Generator", "InvalidComplex", "ModUMap", "ParamsSyntaxError",
    "RComplex", "StandardParams", "ValidationReport", "acyclic_pair", "build_standard",
    "complex_from_json", "complex_to_json", "direct_sum", "homotopic_mod_U", "lift_to_R",
    "naive_bigrading", "parse_params", "product", "q2_reduce", "reduce", "twisted_product",
    "validate",
]
