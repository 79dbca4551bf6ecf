"""Arithmetic in F2[U], F2[Q] and R = F2[U,Q]/(UQ).

Polynomials over F2 are stored as Python integers used as bit vectors: bit k
holds the coefficient of V^k.  The matrix code elsewhere in the package works
on these raw integers directly; :class:`F2Poly` and :class:`RElem` are the
typed wrappers used at API boundaries and for text I/O.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

MAX_EXPONENT = 2**31 - 1


class CoefficientError(ValueError):
    """Malformed coefficient text."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExponentOverflow(OverflowError):
    pass


def check_exponent(k: int) -> int:
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    if k > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent {k} exceeds {MAX_EXPONENT}")
    return k


def monomial_bits(k: int) -> int:
    return 1 << check_exponent(k)


def bits_degree(a: int) -> int | None:
    return a.bit_length() - 1 if a else None


def bits_valuation(a: int) -> int | None:
    return (a & -a).bit_length() - 1 if a else None


def is_monomial_bits(a: int) -> bool:
    return a != 0 and a & (a - 1) == 0


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-encoded F2 polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    if out.bit_length() - 1 > MAX_EXPONENT:
        raise ExponentOverflow("product degree exceeds the exponent cap")
    return out


def exponents(a: int) -> list[int]:
    out = []
    while a:
        low = a & -a
        out.append(low.bit_length() - 1)
        a ^= low
    return out


@dataclass(frozen=True, slots=True)
class F2Poly:
    """A polynomial over F2 in a single variable ``U`` or ``Q``."""

    variable: str
    bits: int = 0

    def __post_init__(self):
        if self.variable not in ("U", "Q"):
            raise ValueError(f"unknown variable {self.variable!r}")
        if self.bits < 0:
            raise ValueError("coefficient bits must be non-negative")
        if self.bits.bit_length() - 1 > MAX_EXPONENT:
            raise ExponentOverflow("degree exceeds the exponent cap")

    @classmethod
    def monomial(cls, variable: str, k: int) -> F2Poly:
        return cls(variable, monomial_bits(k))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return bits_degree(self.bits)

    @property
    def valuation(self) -> int | None:
        return bits_valuation(self.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def constant(self) -> int:
        return self.bits & 1

    def _same(self, other: F2Poly) -> None:
        if self.variable != other.variable:
            raise ValueError("polynomials in different variables")

    def __add__(self, other: F2Poly) -> F2Poly:
        self._same(other)
        return F2Poly(self.variable, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: F2Poly) -> F2Poly:
        self._same(other)
        return F2Poly(self.variable, clmul(self.bits, other.bits))

    def __str__(self) -> str:
        return format_terms(self.bits & 1, self.bits & ~1 if self.variable == "U" else 0,
                            self.bits & ~1 if self.variable == "Q" else 0)


@dataclass(frozen=True, slots=True)
class RElem:
    """An element ``c + uPart + qPart`` of F2[U,Q]/(UQ).

    ``u`` and ``q`` are bit-encoded with bit 0 always clear, which makes the
    splitting into constant, U-part and Q-part unique.
    """

    c: int = 0
    u: int = 0
    q: int = 0

    def __post_init__(self):
        if self.c not in (0, 1):
            raise ValueError("constant must be 0 or 1")
        if self.u & 1 or self.q & 1 or self.u < 0 or self.q < 0:
            raise ValueError("U- and Q-parts must have zero constant term")
        for part in (self.u, self.q):
            if part.bit_length() - 1 > MAX_EXPONENT:
                raise ExponentOverflow("degree exceeds the exponent cap")

    @classmethod
    def from_parts(cls, c: int, u_part: F2Poly, q_part: F2Poly) -> RElem:
        if u_part.variable != "U" or q_part.variable != "Q":
            raise ValueError("parts must be in U and Q respectively")
        return cls(c, u_part.bits, q_part.bits)

    @classmethod
    def parse(cls, text: str) -> RElem:
        return parse_coeff(text)

    @property
    def u_part(self) -> F2Poly:
        return F2Poly("U", self.u)

    @property
    def q_part(self) -> F2Poly:
        return F2Poly("Q", self.q)

    def is_zero(self) -> bool:
        return not (self.c or self.u or self.q)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: RElem) -> RElem:
        return relem_add(self, other)

    def __mul__(self, other: RElem) -> RElem:
        return relem_mul(self, other)

    def __str__(self) -> str:
        return format_terms(self.c, self.u, self.q)


ZERO = RElem()
ONE = RElem(1)
U = RElem(u=2)
Q = RElem(q=2)


def relem_add(x: RElem, y: RElem) -> RElem:
    return RElem(x.c ^ y.c, x.u ^ y.u, x.q ^ y.q)


def relem_mul(x: RElem, y: RElem) -> RElem:
    # Mixed monomials U^a Q^b vanish, so only the pure products survive.
    u = clmul(x.u, y.u)
    q = clmul(x.q, y.q)
    if x.c:
        u ^= y.u
        q ^= y.q
    if y.c:
        u ^= x.u
        q ^= x.q
    return RElem(x.c & y.c, u, q)


def relem_split(x: RElem) -> tuple[int, F2Poly, F2Poly]:
    return x.c, x.u_part, x.q_part


def relem_join(c: int, u_part: F2Poly, q_part: F2Poly) -> RElem:
    return RElem.from_parts(c, u_part, q_part)


def _term(var: str, k: int) -> str:
    return var if k == 1 else f"{var}^{k}"


def format_terms(c: int, u: int, q: int) -> str:
    """Canonical text: constant, then U terms, then Q terms, ascending."""
    terms = ["1"] if c else []
    terms += [_term("U", k) for k in exponents(u)]
    terms += [_term("Q", k) for k in exponents(q)]
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"\s*(?:([01])|([UQ])(?:\s*\^\s*(\d+))?)\s*")


def parse_coeff(text: str) -> RElem:
    """Parse ``term ("+" term)*`` into an :class:`RElem`.

    Repeated terms cancel, as they should over F2.
    """
    c = u = q = 0
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise CoefficientError(f"expected a term in {text!r}", pos)
        const, var, exp = m.groups()
        if const is not None:
            c ^= int(const)
        else:
            k = check_exponent(int(exp)) if exp is not None else 1
            if k == 0:
                c ^= 1
            elif var == "U":
                u ^= 1 << k
            else:
                q ^= 1 << k
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise CoefficientError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
    return RElem(c, u, q)


def parse_upoly(text: str) -> int:
    """Parse a coefficient that must live in F2[U]; returns its bits."""
    x = parse_coeff(text)
    if x.q:
        raise CoefficientError(f"Q term not allowed here: {text!r}")
    return x.u | x.c


def format_upoly(bits: int) -> str:
    return format_terms(bits & 1, bits & ~1, 0)
