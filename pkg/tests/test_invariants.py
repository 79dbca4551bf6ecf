import pytest
from hypothesis import given, strategies as st

from conftest import params_strategy
from iotacurves import invariants as inv
from iotacurves.iota import (StandardParams, acyclic_pair, build_standard, direct_sum,
                             naive_bigrading, parse_params, product, reduce)

P = parse_params


def std(text):
    return build_standard(P(text))


def cls_of_product(*ps):
    c = build_standard(ps[0])
    for p in ps[1:]:
        c = product(c, build_standard(p))
    return inv.classify(c)


# -- classification --------------------------------------------------------------------

@given(params_strategy(3, 4))
def test_round_trip(p):
    assert inv.classify(build_standard(p)) == p


def test_sum_with_acyclic():
    assert inv.classify(direct_sum(std("C(+,-2)"), acyclic_pair(1))) == P("C(+,-2)")


def test_plus_one_squared():
    r = inv.classify(product(std("C(+,1)"), std("C(+,1)")))
    # Frozen from the pipeline and confirmed by the brute-force oracle.
    assert r == P("C(+,1,+,-1,-,1,+,1)")
    assert (inv.p_invariant(r), inv.p_omega(r), inv.phi_n(r, 1)) == (-2, 2, 2)


@given(params_strategy(2, 3), st.lists(st.tuples(st.integers(1, 3), st.integers(-3, 3)),
                                       max_size=2))
def test_acyclic_summands_ignored(p, extra):
    c = build_standard(p)
    for j, (k, g) in enumerate(extra):
        c = direct_sum(c, acyclic_pair(k, grade=2 * g + 1, names=(f"a{j}", f"b{j}")))
    assert inv.classify(c) == p


# -- the homomorphisms ---------------------------------------------------------------------

def test_p_examples():
    assert inv.p_invariant(P("C(+,1,-,-2)")) == 2
    assert inv.p_invariant(P("C()")) == 0
    assert inv.p_invariant(P("C(-,-2)")) == 3


@pytest.mark.parametrize("k", [1, 2, 3, 4, -1, -2, -3, -4])
def test_p_omega_signs(k):
    assert inv.p_omega(StandardParams(((1, k),))) == 1
    assert inv.p_omega(StandardParams(((-1, k),))) == -1


def test_phi_examples():
    p = P("C(+,1,-,-2)")
    assert (inv.phi_n(p, 1), inv.phi_n(p, 2)) == (1, -1)
    assert all(inv.phi_n(P("C()"), n) == 0 for n in range(1, 6))
    assert inv.phi_n(P("C(+,3,+,3,-,-3)"), 3) == 1
    assert inv.phi_all(P("C(+,3,+,-3,-,1)")) == {1: 1}
    with pytest.raises(ValueError):
        inv.phi_n(p, 0)


def test_sh_examples():
    assert inv.sh_standard(P("C(+,-2)"), 1) == P("C(+,-3)")
    assert inv.sh_standard(P("C(+,-2)"), 5) == P("C(+,-2)")
    assert inv.shift_class(std("C(+,-2)"), 1) == P("C(+,-3)")
    with pytest.raises(ValueError):
        inv.sh_standard(P("C()"), 0)


@given(params_strategy(3, 4), st.integers(1, 5))
def test_sh_changes_p(p, n):
    tail = sum(inv.phi_n(p, i) for i in range(n, 6))
    assert inv.p_invariant(inv.sh_standard(p, n)) == inv.p_invariant(p) - 2 * tail


@given(params_strategy(4, 6))
def test_p_from_phi(p):
    assert inv.p_invariant(p) == sum((-2 * n + 1) * v for n, v in inv.phi_all(p).items())


@given(params_strategy(4, 6))
def test_grq_of_final_is_minus_p_omega(p):
    assert naive_bigrading(p)[-1][1] == -inv.p_omega(p)


@given(params_strategy(), params_strategy())
def test_additivity(p1, p2):
    r = cls_of_product(p1, p2)
    assert inv.p_invariant(r) == inv.p_invariant(p1) + inv.p_invariant(p2)
    assert inv.p_omega(r) == inv.p_omega(p1) + inv.p_omega(p2)
    for n in range(1, 6):
        assert inv.phi_n(r, n) == inv.phi_n(p1, n) + inv.phi_n(p2, n)


@given(params_strategy(), params_strategy(), st.integers(1, 3))
def test_shift_commutes_with_product(p1, p2, n):
    left = inv.classify(product(build_standard(inv.shift_class(build_standard(p1), n)),
                                build_standard(inv.shift_class(build_standard(p2), n))))
    assert left == inv.sh_standard(cls_of_product(p1, p2), n)
    prod = product(build_standard(p1), build_standard(p2))
    assert inv.shift_class(prod, n) == inv.sh_standard(inv.classify(prod), n)


@given(params_strategy(2, 3), params_strategy(2, 3), params_strategy(2, 3))
def test_associativity(a, b, c):
    A, B, C = map(build_standard, (a, b, c))
    assert inv.classify(product(product(A, B), C)) == inv.classify(product(A, product(B, C)))


@given(params_strategy())
def test_unit(p):
    assert cls_of_product(StandardParams(()), p) == p == cls_of_product(p, StandardParams(()))


def test_p_omega_independent_of_phi():
    # Fitting sum a_n phi_n to P_omega on C(+,k), k = 1..4, forces every a_n = 1 ...
    fitted = {n: inv.p_omega(StandardParams(((1, n),))) / inv.phi_n(StandardParams(((1, n),)), n)
              for n in range(1, 5)}
    assert fitted == {1: 1, 2: 1, 3: 1, 4: 1}
    # ... which then gets C(-,k) wrong.
    for n in range(1, 5):
        p = StandardParams(((-1, n),))
        assert sum(a * inv.phi_n(p, m) for m, a in fitted.items()) != inv.p_omega(p)


# -- local equivalence ------------------------------------------------------------------

def test_locally_equivalent_examples():
    assert inv.locally_equivalent(std("C(+,-2)"), direct_sum(std("C(+,-2)"), acyclic_pair(1)))
    assert not inv.locally_equivalent(std("C(+,1)"), std("C(-,1)"))
    c = product(std("C(+,1)"), std("C(-,-2)"))
    assert inv.locally_equivalent(c, reduce(c)[0])


# -- records -------------------------------------------------------------------------------

def test_record_json():
    rec = inv.InvariantRecord.of(P("C(+,1,-,-2)"))
    assert rec.to_json() == {"params": "C(+,1,-,-2)", "P": 2, "Pomega": 0,
                             "phi": {"1": 1, "2": -1}}
    assert inv.InvariantRecord.from_json(rec.dumps()) == rec
    assert rec.consistent()


@given(params_strategy(4, 6))
def test_record_consistent(p):
    rec = inv.InvariantRecord.of(p)
    assert rec.consistent() and inv.InvariantRecord.from_json(rec.to_json()) == rec


def test_record_inconsistent():
    rec = inv.InvariantRecord(P("C(+,1)"), 0, 1, {1: 1})
    assert not rec.consistent()
