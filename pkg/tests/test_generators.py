import random

import pytest

from coverlab import generators as gen
from coverlab.errors import BadParameter, ParseError
from coverlab.graph import is_connected
from coverlab.iso import contains_induced


def test_complete_and_empty():
    k = gen.complete(5)
    assert k.order == 5 and k.edge_count() == 10
    e = gen.empty_complement(4)
    assert e.order == 4 and e.edge_count() == 0


def test_star_path_cycle_sizes():
    for n in range(2, 8):
        assert gen.star(n).order == n + 1
        assert gen.star(n).edge_count() == n
        assert gen.path(n).edge_count() == n - 1
        if n >= 3:
            assert gen.cycle(n).edge_count() == n


def test_spider_family_sizes():
    for n in range(2, 7):
        s = gen.s_star(n)
        assert s.order == 2 * n + 1 and s.edge_count() == 2 * n
        st = gen.s_tilde(n)
        assert st.order == 2 * n + 1 and st.edge_count() == 3 * n
        assert gen.f1(n).order == 2 * n + 2
        assert gen.f1(n).edge_count() == 3 + 2 * (n - 1)
        assert gen.f2(n).order == 2 * n + 1
        assert gen.f2(n).edge_count() == 3 + 2 * (n - 1)
        assert gen.f3(n).order == 3 * n
        assert gen.f3(n).edge_count() == 2 * n + 2 * (n - 1)
        assert gen.f4(n).order == 2 * n + 2
        assert gen.f4(n).edge_count() == 4 + 2 * (n - 1)
        assert gen.f5(n).order == 2 * n + 2
        assert gen.f5(n).edge_count() == 5 + 2 * (n - 1)
        ks = gen.k_star(n)
        assert ks.order == 2 * n
        assert ks.edge_count() == n * (n - 1) // 2 + n


def test_f_family_relations():
    for n in (2, 3, 4):
        # the two-apex variant arises from the all-apex variant by deletion
        assert contains_induced(gen.f3(n), gen.f4(n)) is not None
        # adding one apex edge turns the one into the other
        f4, f5 = gen.f4(n), gen.f5(n)
        assert f5.edge_count() == f4.edge_count() + 1
        assert f5.has_edge(0, 1) and not f4.has_edge(0, 1)


def test_chained_family_sizes():
    for m in (2, 3, 4):
        for n in (3, 4):
            assert gen.h1(m, n).order == m * n + 2 * (m - 1)
            assert gen.h2(m, n).order == m * n + (m - 1)
            assert gen.h3(m, n).order == m * n + (m - 1) * m
            assert gen.h4(m, n).order == m * n + 2 * (m - 1)
            assert gen.h5(m, n).order == m * n + 2 * (m - 1)
            assert gen.h5(m, n).edge_count() == gen.h4(m, n).edge_count() + m - 1
            for fn in (gen.h1, gen.h2, gen.h3, gen.h4, gen.h5):
                assert is_connected(fn(m, n))


def test_h2_junctions_are_triangles():
    g = gen.h2(2, 3)
    # path ends 2 and 3 plus the connector form a triangle
    assert g.has_edge(2, 3)
    v = 2 * 3  # connector index
    assert g.has_edge(v, 2) and g.has_edge(v, 3)


def test_parameter_validation():
    with pytest.raises(BadParameter):
        gen.s_star(1)
    with pytest.raises(BadParameter):
        gen.cycle(2)
    with pytest.raises(BadParameter):
        gen.h1(1, 3)
    with pytest.raises(BadParameter):
        gen.h1(2, 2)


def test_complement_involution():
    g = gen.cycle(5)
    assert gen.complement(gen.complement(g)).adj == g.adj
    assert gen.complement(gen.complete(4)).edge_count() == 0


def test_random_connected_is_connected_and_deterministic():
    a = gen.random_connected(9, 0.3, random.Random(7))
    b = gen.random_connected(9, 0.3, random.Random(7))
    assert a.adj == b.adj
    assert is_connected(a)


def test_generate_parsing():
    assert gen.generate("sstar:3").order == 7
    assert gen.generate("h3:2,3").order == 8
    assert gen.generate("K:4").edge_count() == 6  # case-insensitive
    assert gen.generate("p:5").order == 5
    with pytest.raises(ParseError):
        gen.generate("f9:4")
    with pytest.raises(ParseError):
        gen.generate("sstar")
    with pytest.raises(ParseError):
        gen.generate("sstar:2,3")
    with pytest.raises(ParseError):
        gen.generate("h1:4")
    with pytest.raises(ParseError):
        gen.generate("path:x")
