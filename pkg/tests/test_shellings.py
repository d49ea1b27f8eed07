import itertools
import random

import pytest

from cliqueideals.bits import mask_of
from cliqueideals.errors import DegenerateError
from cliqueideals.graphs import complement, cycle, path, random_chordal
from cliqueideals.homology import hochster_betti
from cliqueideals.ideals import clique_ideal, independence_ideal
from cliqueideals.resolutions import betti_from_linear_quotients
from cliqueideals.shellings import (
    cycle_shelling,
    find_shelling,
    is_vertex_decomposable,
    path_shelling,
    shelling_from_json,
    shelling_to_json,
    shelling_to_linear_quotients,
    verify_shelling,
)
from cliqueideals.simplicial import SimplicialComplex, stanley_reisner_complex


def m(*vs):
    return mask_of(vs)


def cx(n, *facets):
    return SimplicialComplex.from_facets(n, facets)


def shelling_by_definition(order):
    """<F_1..F_{j-1}> ∩ <F_j> pure of dimension dim F_j - 1, via its facets."""
    for j in range(1, len(order)):
        F = order[j]
        inter = {F & G for G in order[:j]}
        maximal = [A for A in inter if not any(A != B and A & ~B == 0 for B in inter)]
        if any(bin(A).count("1") != bin(F).count("1") - 1 for A in maximal):
            return False
    return True


def brute_shellable(D):
    return any(shelling_by_definition(p) for p in itertools.permutations(D.facets))


def test_verify_shelling_examples():
    D = cx(4, (1, 2), (2, 3), (3, 4))
    assert verify_shelling(D, [(1, 2), (2, 3), (3, 4)])
    assert not verify_shelling(D, [(1, 2), (3, 4), (2, 3)])
    with pytest.raises(ValueError):
        verify_shelling(D, [(1, 2), (2, 3)])


@pytest.mark.parametrize("seed", range(60))
def test_verify_shelling_matches_definition(seed):
    rng = random.Random(seed)
    n = 5
    D = SimplicialComplex.from_facets(n, [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 5))])
    order = list(D.facets)
    rng.shuffle(order)
    assert verify_shelling(D, order) == shelling_by_definition(order)


def test_path_shelling_examples():
    assert path_shelling(3, 2) == [m(1, 2), m(2, 3)]
    assert path_shelling(5, 2) == [m(1, 2), m(2, 3), m(3, 4), m(4, 5)]
    order = path_shelling(5, 3)
    assert all(bin(F).count("1") == 4 for F in order)
    assert verify_shelling(stanley_reisner_complex(clique_ideal(complement(path(5)), 3)), order)
    with pytest.raises(ValueError):
        path_shelling(4, 3)


def test_cycle_shelling_examples():
    assert cycle_shelling(4, 2) == [m(2, 3), m(3, 4), m(1, 4), m(1, 2)]
    D = stanley_reisner_complex(clique_ideal(complement(cycle(6)), 3))
    assert verify_shelling(D, cycle_shelling(6, 3))
    D5 = stanley_reisner_complex(clique_ideal(complement(cycle(5)), 2))
    assert sorted(cycle_shelling(5, 2)) == sorted(D5.facets)
    with pytest.raises(ValueError):
        cycle_shelling(5, 3)


@pytest.mark.parametrize("n,t", [(n, t) for t in range(1, 5) for n in range(max(2 * t - 1, 1), 12)])
def test_path_shelling_valid(n, t):
    D = stanley_reisner_complex(clique_ideal(complement(path(n)), t))
    assert verify_shelling(D, path_shelling(n, t))


@pytest.mark.parametrize("n,t", [(n, t) for t in range(1, 5) for n in range(max(2 * t, 3), 12)])
def test_cycle_shelling_valid(n, t):
    D = stanley_reisner_complex(clique_ideal(complement(cycle(n)), t))
    assert verify_shelling(D, cycle_shelling(n, t))


def test_shelling_to_linear_quotients_examples():
    D = stanley_reisner_complex(clique_ideal(complement(path(3)), 2))
    L = shelling_to_linear_quotients(D, path_shelling(3, 2))
    assert L.order == (m(3), m(1))
    assert L.sets == (0, m(3))
    D = stanley_reisner_complex(clique_ideal(complement(cycle(4)), 2))
    L = shelling_to_linear_quotients(D, cycle_shelling(4, 2))
    assert L.set_sizes() == [0, 1, 1, 2]
    with pytest.raises(DegenerateError):
        shelling_to_linear_quotients(SimplicialComplex.simplex(3), [m(1, 2, 3)])


@pytest.mark.parametrize("family,n,t", [("path", 7, 3), ("cycle", 8, 3), ("path", 9, 4), ("cycle", 9, 2)])
def test_shelling_gives_dual_betti(family, n, t):
    G = path(n) if family == "path" else cycle(n)
    D = stanley_reisner_complex(clique_ideal(complement(G), t))
    order = path_shelling(n, t) if family == "path" else cycle_shelling(n, t)
    L = shelling_to_linear_quotients(D, order)
    assert L.ideal == independence_ideal(G, t)
    assert betti_from_linear_quotients(L) == hochster_betti(independence_ideal(G, t))


def test_vertex_decomposable_examples():
    D = stanley_reisner_complex(independence_ideal(path(5), 2))
    assert is_vertex_decomposable(D)
    assert not is_vertex_decomposable(cx(4, (1, 2), (3, 4)))
    assert is_vertex_decomposable(SimplicialComplex.simplex(4))


def test_find_shelling_examples():
    assert find_shelling(cx(4, (1, 2), (3, 4))) is None
    D = cx(4, (1, 2), (2, 3), (3, 4))
    assert verify_shelling(D, find_shelling(D))
    D = stanley_reisner_complex(independence_ideal(path(5), 2))
    order = find_shelling(D)
    assert order is not None and verify_shelling(D, order)
    # pd(R/J_2(C_5)) = 3 exceeds the codimension 2, so this complex is not shellable
    assert find_shelling(stanley_reisner_complex(independence_ideal(cycle(5), 2))) is None


def test_find_shelling_cap():
    D = stanley_reisner_complex(clique_ideal(complement(path(9)), 3))
    assert len(D.facets) > 12
    with pytest.raises(ValueError):
        find_shelling(D)


@pytest.mark.parametrize("seed", range(80))
def test_find_shelling_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 6)
    k = rng.randint(1, 3)
    pool = [F for F in range(1 << n) if bin(F).count("1") == k]
    D = SimplicialComplex.from_facets(n, rng.sample(pool, min(len(pool), rng.randint(1, 6))))
    order = find_shelling(D)
    assert (order is not None) == brute_shellable(D)
    if order is not None:
        assert verify_shelling(D, order)
    if is_vertex_decomposable(D):
        assert order is not None


@pytest.mark.parametrize("seed", range(25))
def test_chordal_independence_complex_vertex_decomposable(seed):
    G = random_chordal(4 + seed % 6, seed)
    for t in (2, 3):
        J = independence_ideal(G, t)
        if J.is_zero or J.is_unit:
            continue
        D = stanley_reisner_complex(J)
        assert is_vertex_decomposable(D)
        if len(D.facets) <= 12:
            assert find_shelling(D) is not None


def test_shelling_json_round_trip():
    order = cycle_shelling(6, 2)
    D, back = shelling_from_json(shelling_to_json(6, order))
    assert back == order
    assert verify_shelling(D, back)
