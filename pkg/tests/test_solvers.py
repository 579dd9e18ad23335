import math
import random
from itertools import combinations

import pytest

from coverlab import generators as gen, naive
from coverlab.errors import Disconnected
from coverlab.graph import (PieceKind, bits, build_graph, is_independent,
                            mask_of)
from coverlab.solvers import (INVARIANT_SPECS, PieceCertificate, SolveConfig,
                              chromatic_coloring, chromatic_number,
                              clique_number, independence_number,
                              invariant_value, min_cover, min_dominating_set,
                              min_partition, validate_certificate)


def test_closed_form_complete_graphs():
    for n in range(2, 9):
        assert invariant_value(gen.complete(n), "inspc").value == math.ceil(n / 2)


def test_closed_form_spiders():
    for n in range(2, 9):
        assert invariant_value(gen.s_star(n), "inspc").value == math.ceil(n / 2)
    for n in range(2, 7):
        assert invariant_value(gen.s_tilde(n), "inspp").value == n + 1


def test_closed_form_stars_and_paths():
    for n in range(2, 11):
        assert invariant_value(gen.star(n), "inpc").value == math.ceil(n / 2)
    for n in range(2, 13):
        assert invariant_value(gen.path(n), "insc").value == math.ceil(n / 3)


def test_unknown_invariant():
    with pytest.raises(ValueError):
        invariant_value(gen.path(3), "chi")


def test_certificates_validate():
    for spec in ("k:5", "c:6", "sstar:3", "h1:2,3"):
        g = gen.generate(spec)
        for name in INVARIANT_SPECS:
            cert = invariant_value(g, name)
            assert cert.optimal
            assert validate_certificate(g, cert)
            assert cert.value == len(cert.pieces)
            assert cert.lower_bound <= cert.value


def test_solver_matches_naive_oracle():
    rng = random.Random(2024)
    for trial in range(60):
        order = rng.randint(4, 7)
        g = gen.random_connected(order, rng.uniform(0.25, 0.75), rng)
        for kind in PieceKind:
            assert min_cover(g, kind).value == naive.naive_min_cover(g, kind)
            assert (min_partition(g, kind).value
                    == naive.naive_min_partition(g, kind))


def test_partition_at_least_cover():
    rng = random.Random(5)
    for trial in range(30):
        g = gen.random_connected(rng.randint(4, 9), rng.uniform(0.3, 0.7), rng)
        for kind in PieceKind:
            assert min_partition(g, kind).value >= min_cover(g, kind).value


def test_validate_certificate_negative():
    g = gen.path(4)
    bad_shape = PieceCertificate(PieceKind.STAR, "cover", ((0, 2),), False, 1)
    assert not validate_certificate(g, bad_shape)
    missing = PieceCertificate(PieceKind.PATH, "cover", ((0, 1),), False, 1)
    assert not validate_certificate(g, missing)
    overlap = PieceCertificate(PieceKind.PATH, "partition",
                               ((0, 1, 2), (2, 3)), False, 1)
    assert not validate_certificate(g, overlap)
    ok = PieceCertificate(PieceKind.PATH, "cover", ((0, 1, 2), (2, 3)), False, 1)
    assert validate_certificate(g, ok)


def test_timeout_returns_incumbent():
    g = gen.random_connected(12, 0.5, random.Random(3))
    cert = min_partition(g, PieceKind.SP_ANY, SolveConfig(timeout=0.0))
    assert not cert.optimal
    assert validate_certificate(g, cert)
    assert cert.lower_bound <= cert.value
    cert = min_cover(g, PieceKind.SP_ANY, SolveConfig(timeout=0.0))
    assert not cert.optimal
    assert validate_certificate(g, cert)


def brute_chromatic(g):
    for k in range(1, g.order + 1):
        def colorable(i, colors):
            if i == g.order:
                return True
            for c in range(k):
                if all(colors[w] != c for w in bits(g.adj[i] & ((1 << i) - 1))):
                    colors.append(c)
                    if colorable(i + 1, colors):
                        return True
                    colors.pop()
            return False
        if colorable(0, []):
            return k
    raise AssertionError


def brute_clique(g):
    best = 0
    for k in range(1, g.order + 1):
        for combo in combinations(range(g.order), k):
            m = mask_of(combo)
            if all(g.adj[v] & m == m & ~(1 << v) for v in combo):
                best = k
    return best


def test_classical_subroutines_match_brute_force():
    rng = random.Random(99)
    for trial in range(40):
        g = gen.random_connected(rng.randint(3, 7), rng.uniform(0.3, 0.8), rng)
        assert clique_number(g) == brute_clique(g)
        assert chromatic_number(g) == brute_chromatic(g)
        comp = gen.complement(g)
        assert independence_number(g) == brute_clique(comp) if comp.order else True


def test_chromatic_coloring_is_proper_and_optimal():
    rng = random.Random(11)
    for trial in range(20):
        g = gen.random_connected(rng.randint(3, 8), 0.5, rng)
        classes = chromatic_coloring(g)
        assert len(classes) == brute_chromatic(g)
        total = 0
        for m in classes:
            assert is_independent(g, m)
            assert not total & m
            total |= m
        assert total == g.full_mask


def test_min_dominating_set():
    assert min_dominating_set(gen.star(6)) == [0]
    for n in (5, 9, 12):
        d = min_dominating_set(gen.path(n))
        assert len(d) == math.ceil(n / 3)
        dm = mask_of(d)
        g = gen.path(n)
        assert all((g.adj[v] | 1 << v) & dm for v in range(n))
    with pytest.raises(Disconnected):
        min_dominating_set(build_graph(4, [(0, 1), (2, 3)]))


def test_known_small_values():
    c5 = gen.cycle(5)
    assert min_cover(c5, PieceKind.SP_ANY).value == 2
    assert min_partition(c5, PieceKind.SP_ANY).value == 2
    assert min_cover(gen.complete(4), PieceKind.PATH).value == 2
    assert min_partition(gen.path(6), PieceKind.PATH).value == 1
    assert min_partition(gen.star(4), PieceKind.PATH).value == 3
