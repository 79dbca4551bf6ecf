import random
from dataclasses import replace

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from iotacurves import linalg
from iotacurves import precurve as pc
from iotacurves.iota import StandardParams

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def params_strategy(max_pairs=3, max_b=4):
    pair = st.tuples(st.sampled_from((1, -1)),
                     st.integers(1, max_b).flatmap(lambda b: st.sampled_from((b, -b))))
    return st.lists(pair, max_size=max_pairs).map(lambda ps: StandardParams(tuple(ps)))


def random_matching(rng, n, max_power, p_stop=0.15):
    pts = list(range(n))
    rng.shuffle(pts)
    out = []
    while len(pts) >= 2 and rng.random() > p_stop:
        a, b = pts.pop(), pts.pop()
        out.append(pc.Match(a, b, rng.randint(1, max_power)))
    return out


def random_invertible(rng, n):
    while True:
        m = [rng.getrandbits(n) for _ in range(n)]
        if linalg.rows_rank(m) == n:
            return m


def random_simply_faced(rng, n, max_power=2):
    """Ungraded simply-faced precurve with random matchings and a random P."""
    um, qm = random_matching(rng, n, max_power), random_matching(rng, n, max_power)
    du, dq = linalg.zeros(n), linalg.zeros(n)
    for m in um:
        du[m.dst][m.src] = 1 << m.power
    for m in qm:
        dq[m.dst][m.src] = 1 << m.power
    P = random_invertible(rng, n)
    pre = pc.Precurve(n, du, dq, tuple(P)).with_P(P)
    return pc.SimplyFaced(pre, tuple(um), tuple(qm))


def scramble(rng, s, steps=60):
    """Apply random allowed basis changes to P, keeping the faces fixed."""
    n = s.n
    P = list(s.precurve.P)
    sides = {1: s.side(pc.U_SIDE), 2: s.side(pc.Q_SIDE)}
    for _ in range(steps):
        which = rng.choice((1, 2))
        sd = sides[which]
        u, v = rng.sample(range(n), 2)
        if sd.key(u) > sd.key(v):
            u, v = v, u
        ops = [(u, v)]
        if sd.key(u) == sd.key(v) and sd.role[u] != pc.FREE:
            ops.append((sd.partner[u], sd.partner[v]))
        for a, b in ops:
            if which == 2:
                P[a] ^= P[b]
            else:
                for r in range(n):
                    if P[r] >> a & 1:
                        P[r] ^= 1 << b
    return replace(s, precurve=s.precurve.with_P(P))


def curve_shape(mc):
    """Components up to reversal and rotation, ignoring generator labels."""
    def flip(t):
        return tuple((f, p, "backward" if d == "forward" else "forward")
                     for f, p, d in reversed(t))

    out = []
    for c in mc.components:
        segs = tuple((g.face, g.power, g.direction) for g in c.segments)
        if c.closed:
            rots = [segs[i:] + segs[:i] for i in range(len(segs))]
            rots += [flip(r) for r in rots]
            out.append(("closed", min(rots), c.decoration))
        else:
            out.append(min((c.start, segs, c.end), (c.end, flip(segs), c.start)))
    return sorted(out, key=repr)


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
