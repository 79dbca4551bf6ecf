"""Seeded property harness over random standard complexes."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import invariants as inv
from .iota import StandardParams, build_standard, product

PROPERTIES = ("roundtrip", "additive_P", "additive_Pomega", "additive_phi",
              "identity_P_phi", "shift", "unit")
PHI_RANGE = range(1, 6)


@dataclass
class VerifyReport:
    seed: int
    trials: int
    passed: dict[str, int] = field(default_factory=lambda: dict.fromkeys(PROPERTIES, 0))
    failed: dict[str, int] = field(default_factory=lambda: dict.fromkeys(PROPERTIES, 0))
    counterexamples: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def record(self, prop: str, good: bool, example: str):
        if good:
            self.passed[prop] += 1
            return
        self.failed[prop] += 1
        self._keep(prop, example)

    def _keep(self, prop, example):
        # Keep the lexicographically first, so merge order never matters.
        cur = self.counterexamples.get(prop)
        if cur is None or example < cur:
            self.counterexamples[prop] = example

    def merge(self, other: VerifyReport) -> VerifyReport:
        for p in PROPERTIES:
            self.passed[p] += other.passed[p]
            self.failed[p] += other.failed[p]
            if p in other.counterexamples:
                self._keep(p, other.counterexamples[p])
        return self

    def to_json(self) -> dict:
        return {"seed": self.seed, "trials": self.trials,
                "properties": {p: {"passed": self.passed[p], "failed": self.failed[p]}
                               for p in PROPERTIES},
                "counterexamples": dict(sorted(self.counterexamples.items()))}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def random_params(rng: random.Random, max_pairs: int = 3, max_b: int = 4) -> StandardParams:
    n = rng.randint(0, max_pairs)
    return StandardParams(tuple((rng.choice((1, -1)), rng.choice((1, -1)) * rng.randint(1, max_b))
                                for _ in range(n)))


def _default_invariants():
    return {"P": inv.p_invariant, "Pomega": inv.p_omega, "phi": inv.phi_n}


def _height(p: StandardParams) -> int:
    return max((abs(b) for b in p.bs), default=0)


def _trial(p1, p2, shift_n, report, funcs):
    P, Pw, phi = funcs["P"], funcs["Pomega"], funcs["phi"]
    pair = f"{p1} * {p2}"
    report.record("roundtrip", inv.classify(build_standard(p1)) == p1, str(p1))
    r = inv.classify(product(build_standard(p1), build_standard(p2)))
    report.record("additive_P", P(r) == P(p1) + P(p2), pair)
    report.record("additive_Pomega", Pw(r) == Pw(p1) + Pw(p2), pair)
    report.record("additive_phi",
                  all(phi(r, n) == phi(p1, n) + phi(p2, n) for n in PHI_RANGE), pair)
    report.record("identity_P_phi", all(P(x) == sum((-2 * n + 1) * phi(x, n)
                                                    for n in range(1, _height(x) + 1))
                                        for x in (p1, p2, r)), pair)
    sh1 = inv.shift_class(build_standard(p1), shift_n)
    sh2 = inv.shift_class(build_standard(p2), shift_n)
    shifted = inv.classify(product(build_standard(sh1), build_standard(sh2)))
    report.record("shift", shifted == inv.sh_standard(r, shift_n), f"{pair} n={shift_n}")
    unit = inv.classify(product(build_standard(p1), build_standard(StandardParams(()))))
    report.record("unit", unit == p1, str(p1))


def verify_suite(seed: int, trials: int, invariants: dict | None = None) -> VerifyReport:
    """Run every property on ``trials`` seeded random pairs.

    ``invariants`` may override any of ``P``, ``Pomega`` and ``phi``; the
    mutation tests use this to confirm a planted bug is caught.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    funcs = _default_invariants()
    funcs.update(invariants or {})
    rng = random.Random(seed)
    report = VerifyReport(seed, trials)
    for _ in range(trials):
        p1, p2 = random_params(rng), random_params(rng)
        _trial(p1, p2, rng.randint(1, 3), report, funcs)
    return report
