"""Classification up to local equivalence and the integer homomorphisms.

``classify`` runs the full curve pipeline and reads the standard parameters
off the curve through the U-puncture.  The invariants themselves are cheap
functions of those parameters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import precurve as pc
from .iota import (AlmostIotaComplex, StandardParams, lift_to_R, naive_bigrading,
                   parse_params, reduce, validate)


def pipeline(c: AlmostIotaComplex):
    """Every stage of the classification, for inspection and tests."""
    validate(c).raise_if_invalid()
    reduced, _, _ = reduce(c)
    lifted = lift_to_R(reduced)
    raw = pc.to_precurve(lifted)
    faced = pc.simply_face(raw)
    ordered = pc.order_strands(faced)
    mc = pc.slide_arrows(ordered)
    curve = pc.extract_primitive(mc)
    return {"reduced": reduced, "lifted": lifted, "precurve": raw, "simply_faced": faced,
            "ordered": ordered, "multicurve": mc, "primitive": curve,
            "params": pc.readout_standard(curve)}


def classify(c: AlmostIotaComplex) -> StandardParams:
    return pipeline(c)["params"]


def multicurve_of(c: AlmostIotaComplex) -> pc.Multicurve:
    return pipeline(c)["multicurve"]


def p_invariant(p: StandardParams) -> int:
    """U-grading of the final generator of the standard complex."""
    return naive_bigrading(p)[-1][0]


def p_omega(p: StandardParams) -> int:
    return sum(p.signs)


def phi_n(p: StandardParams, n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(1 if b == n else -1 if b == -n else 0 for b in p.bs)


def phi_all(p: StandardParams) -> dict[int, int]:
    """Nonzero values of every phi_n."""
    out: dict[int, int] = {}
    for b in p.bs:
        out[abs(b)] = out.get(abs(b), 0) + (1 if b > 0 else -1)
    return {n: v for n, v in sorted(out.items()) if v}


def sh_standard(p: StandardParams, n: int) -> StandardParams:
    if n < 1:
        raise ValueError("n must be at least 1")
    return StandardParams(tuple((a, b + (1 if b > 0 else -1) if abs(b) >= n else b)
                                for a, b in p.pairs))


def shift_class(c: AlmostIotaComplex, n: int) -> StandardParams:
    """Class of the curve obtained by lengthening every U-arc of length >= n."""
    stages = pipeline(c)
    shifted = pc.shift_precurve(stages["simply_faced"], n)
    curve = pc.extract_primitive(pc.slide_arrows(pc.order_strands(shifted)))
    return pc.readout_standard(curve)


def locally_equivalent(c1: AlmostIotaComplex, c2: AlmostIotaComplex) -> bool:
    return classify(c1) == classify(c2)


@dataclass(frozen=True)
class InvariantRecord:
    params: StandardParams
    P: int
    Pomega: int
    phi: dict[int, int] = field(default_factory=dict)

    @classmethod
    def of(cls, p: StandardParams) -> InvariantRecord:
        return cls(p, p_invariant(p), p_omega(p), phi_all(p))

    def to_json(self) -> dict:
        return {"params": str(self.params), "P": self.P, "Pomega": self.Pomega,
                "phi": {str(k): v for k, v in sorted(self.phi.items())}}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    @classmethod
    def from_json(cls, obj: dict | str) -> InvariantRecord:
        if isinstance(obj, str):
            obj = json.loads(obj)
        phi = {int(k): int(v) for k, v in obj.get("phi", {}).items() if int(v)}
        return cls(parse_params(obj["params"]), int(obj["P"]), int(obj["Pomega"]), phi)

    def consistent(self) -> bool:
        return (self.P == sum((-2 * n + 1) * v for n, v in self.phi.items())
                and self == InvariantRecord.of(self.params))
