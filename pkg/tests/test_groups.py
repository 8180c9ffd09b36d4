import pytest
from hypothesis import given, strategies as st

from kappalg.groups import (ProductGroup, cyclic, element_order, fw, fw_inverse, fw_power, group_from_json, is_reduced,
                            lcm, order_boost, reduce, separating_hom, symmetric_group, trivial_group)

signed = st.lists(st.tuples(st.sampled_from(["v1", "v2", "v3"]), st.sampled_from([1, -1])), max_size=12)


def naive_reduce(w):
    w = list(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1]:
                del w[i: i + 2]
                changed = True
                break
    return tuple(w)


def test_reduce_examples():
    assert reduce(fw("v1", "v2", ("v2", -1))) == fw("v1")
    assert reduce(fw("v1", ("v1", -1))) == ()
    assert reduce(fw("v1", ("v2", -1), "v2", ("v1", -1), "v3")) == fw("v3")


def test_element_orders():
    assert element_order(cyclic(2), 1) == 2
    S3 = symmetric_group(3)
    assert element_order(S3, S3.identity) == 1
    assert element_order(S3, (1, 0, 2)) == 2
    assert element_order(cyclic(6), 2) == 3


def test_separating_examples():
    a = separating_hom(fw("v1"))
    assert a(fw("v1"))[0] == 1 and a(fw("v1")) != a.group.identity
    b = separating_hom(fw("v1", ("v2", -1)))
    assert b.images["v1"][0] == 1 and b.images["v2"][2] == 1
    assert b(fw("v1", ("v2", -1)))[0] == 2


def test_separating_rejects_bad_input():
    with pytest.raises(ValueError):
        separating_hom(())
    with pytest.raises(ValueError):
        separating_hom(fw("v1", ("v1", -1)))


def test_order_boost():
    asg = order_boost(separating_hom(fw("v1")), 6)
    assert all(element_order(asg.group, g) >= 6 for g in asg.images.values())
    same = order_boost(separating_hom(fw("v1")), 1)
    assert element_order(same.group, same.images["v1"]) == 2


def test_group_json_round_trip():
    for G in (cyclic(4), symmetric_group(3), trivial_group()):
        H = group_from_json(G.describe())
        assert H.order() == G.order()
    with pytest.raises(ValueError):
        group_from_json({"type": "table", "elements": ["e", "x"], "table": [["e", "x"], ["x", "x"]]})


@given(signed)
def test_reduce_agrees_with_naive(w):
    r = reduce(tuple(w))
    assert r == naive_reduce(w) and is_reduced(r)


@given(signed.filter(lambda w: naive_reduce(w)))
def test_separating_hom_separates(w):
    u = naive_reduce(w)
    asg = separating_hom(u)
    assert asg(u) != asg.group.identity
    assert asg(fw_inverse(u)) == asg.group.inv(asg(u))
    assert asg(fw_power(u, 2)) == asg.group.mul(asg(u), asg(u))


@given(st.lists(st.integers(1, 12), min_size=1, max_size=4))
def test_group_axioms_and_lcm(ns):
    G = ProductGroup(cyclic(ns[0]), symmetric_group(3)) if len(ns) > 1 else cyclic(ns[0])
    E = G.elements()
    e = G.identity
    assert all(G.mul(x, G.inv(x)) == e and G.mul(e, x) == x for x in E)
    L = lcm(ns)
    assert all(L % n == 0 for n in ns)
