from collections import Counter

import pytest

from cusptheta.chars import central_character, char_table
from cusptheta.cyclo import ONE, cyc_root
from cusptheta.grp import (
    Cyclic, build_group, centralizer, conjugacy_classes,
    isomorphism, parse_group, perm_order, recognize,
)
from cusptheta.tmat import check_spectrum, simple_objects, t_spectrum, theta_eigenvalue

GROUPS = ["Z2", "Z3", "Z4", "Z6", "Z2xZ2", "D8", "S3", "S4", "S5", "S3xZ2"]


def test_object_counts():
    assert len(simple_objects("Z2")) == 4
    assert len(simple_objects("S3")) == 8
    assert len(simple_objects("S4")) == 21


def test_s4_centralizers():
    labels = [str(o.centralizer_label) for o in simple_objects("S4")]
    assert Counter(labels) == {"S4": 5, "Z2xZ2": 4, "D8": 5, "Z3": 3, "Z4": 4}


def test_s3_spectrum():
    sp = t_spectrum("S3")
    assert sp.multiset() == Counter({ONE: 5, -ONE: 1, cyc_root(3, 1): 1, cyc_root(3, 2): 1})
    assert sp.dimension_square_sum == 36
    assert sorted(o.dimension for o, _ in sp.entries) == [1, 1, 2, 2, 2, 2, 3, 3]


def test_theta_examples():
    objs = simple_objects("S3")
    by_key = {(perm_order(o.x), o.phi): o for o in objs}
    assert theta_eigenvalue(by_key[(3, "chi1")]) in (cyc_root(3, 1), cyc_root(3, 2))
    assert theta_eigenvalue(by_key[(2, "chi1")]) == -ONE
    assert all(theta_eigenvalue(o) == ONE for o in objs if perm_order(o.x) == 1)


def test_cyclic3_is_the_pairing():
    sp = t_spectrum(Cyclic(3))
    want = Counter(cyc_root(3, j * k) for j in range(3) for k in range(3))
    assert sp.multiset() == want


@pytest.mark.parametrize("name", GROUPS)
def test_spectrum_invariants(name):
    sp = t_spectrum(name)
    G = build_group(parse_group(name))
    assert check_spectrum(sp) == []
    assert sp.dimension_square_sum == G.order ** 2
    n_objects = sum(len(conjugacy_classes(centralizer(G, c.representative)))
                    for c in conjugacy_classes(G))
    assert len(sp.entries) == n_objects


@pytest.mark.parametrize("name", ["S3", "S4", "S5", "D8", "S3xZ2"])
def test_eigenvalues_do_not_depend_on_class_member(name):
    G = build_group(parse_group(name))
    for cls in conjugacy_classes(G):
        others = sorted(cls.members - {cls.representative})
        if not others:
            continue
        x2 = others[-1]
        C = centralizer(G, x2)
        label = recognize(C)
        iso = isomorphism(C, label)
        T = char_table(label)
        here = Counter(central_character(T, phi, iso[x2]) for phi in T.labels)
        there = Counter(e for o, e in t_spectrum(name).entries if o.x == cls.representative)
        assert here == there
