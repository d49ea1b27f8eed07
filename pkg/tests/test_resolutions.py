import itertools

import pytest

from cliqueideals.bits import mask_of
from cliqueideals.errors import DegenerateError, NotChordalError
from cliqueideals.graphs import (
    Graph,
    complement,
    cycle,
    delete_vertices,
    induced,
    is_chordal,
    lowest_simplicial_vertex,
    path,
    random_chordal,
)
from cliqueideals.homology import BettiTable, has_linear_resolution, hochster_betti, ideal_betti
from cliqueideals.ideals import MonomialIdeal, clique_ideal, independence_ideal
from cliqueideals.resolutions import (
    LinearQuotientOrder,
    SearchLimitError,
    betti_from_linear_quotients,
    chordal_splits,
    chordal_vertex_split,
    closed_form_invariants,
    colon_set,
    cycle_decomposition,
    find_linear_quotients,
    linear_quotients_from_split,
    path_betti_recursion,
    verify_betti_splitting,
)


def ideal(n, *supports):
    return MonomialIdeal.from_supports(n, supports)


def m(*vs):
    return mask_of(vs)


def brute_has_linear_quotients(I):
    for perm in itertools.permutations(I.gens):
        try:
            LinearQuotientOrder.from_order(I.n, perm)
            return True
        except ValueError:
            pass
    return False


def colon_by_definition(prefix, f, n):
    """Variables x_k with x_k * f divisible by some earlier generator."""
    return sum(
        1 << k
        for k in range(n)
        if any(g & ~(f | 1 << k) == 0 for g in prefix)
    )


def test_colon_set():
    assert colon_set([m(1, 4)], m(1, 3)) == m(4)
    assert colon_set([m(1, 4), m(1, 3)], m(2, 4)) == m(1)
    assert colon_set([m(1, 3)], m(2, 4)) is None


def test_find_linear_quotients_examples():
    I = ideal(4, (1, 3), (1, 4), (2, 4))
    L = find_linear_quotients(I)
    assert L.is_valid() and sorted(L.order) == sorted(I.gens)
    stated = LinearQuotientOrder.from_order(4, [m(1, 4), m(1, 3), m(2, 4)])
    assert stated.sets == (0, m(4), m(1))
    assert find_linear_quotients(ideal(4, (1, 3), (2, 4))) is None
    L = find_linear_quotients(ideal(3, (1, 2, 3)))
    assert L.order == (m(1, 2, 3),) and L.sets == (0,)


def test_find_linear_quotients_rejects_degenerate():
    with pytest.raises(DegenerateError):
        find_linear_quotients(MonomialIdeal(3, ()))


def test_search_cap():
    # many pairwise disjoint generators: no order exists and the cap forbids proving it
    I = MonomialIdeal.from_supports(12, [(2 * k + 1, 2 * k + 2) for k in range(6)])
    assert find_linear_quotients(I) is None
    with pytest.raises(SearchLimitError):
        find_linear_quotients(I, max_generators=4, budget=10)


@pytest.mark.parametrize("seed", range(40))
def test_search_agrees_with_permutations(seed):
    import random

    rng = random.Random(seed)
    n = 5
    gens = {rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 5))}
    I = MonomialIdeal.from_supports(n, gens)
    if I.is_unit:
        return
    L = find_linear_quotients(I)
    assert (L is not None) == brute_has_linear_quotients(I)
    if L is not None:
        for k, f in enumerate(L.order):
            assert L.sets[k] == colon_by_definition(L.order[:k], f, n)


def test_betti_from_linear_quotients_examples():
    L = LinearQuotientOrder.from_order(4, [m(1, 4), m(1, 3), m(2, 4)])
    assert betti_from_linear_quotients(L).entries == {(0, 2): 3, (1, 3): 2}
    L = LinearQuotientOrder.from_order(3, [m(1, 2, 3)])
    assert betti_from_linear_quotients(L).entries == {(0, 3): 1}


def test_linear_quotient_json_round_trip():
    L = find_linear_quotients(clique_ideal(complement(path(6)), 2))
    data = L.to_json()
    assert LinearQuotientOrder.from_json(data) == L
    assert LinearQuotientOrder.from_json(data).is_valid()
    tampered = dict(data, sets=[[]] * len(data["sets"]))
    assert not LinearQuotientOrder.from_json(tampered).is_valid()


def test_chordal_vertex_split_examples():
    tree = chordal_vertex_split(path(4), 2)
    assert tree.vertex == 1
    assert tree.right.ideal == ideal(4, (2, 4))
    assert tree.left.ideal == ideal(4, (3,), (4,))
    assert tree.ideal == ideal(4, (2, 4), (1, 3), (1, 4))

    tree = chordal_vertex_split(path(3), 2)
    assert tree.vertex == 1
    assert tree.left.ideal == ideal(3, (3,))
    assert tree.right.ideal.is_zero

    assert chordal_vertex_split(random_chordal(7, 3), 2).verify()


def test_chordal_vertex_split_errors():
    with pytest.raises(NotChordalError):
        chordal_vertex_split(cycle(4), 2)
    with pytest.raises(DegenerateError):
        chordal_vertex_split(path(3), 3)


@pytest.mark.parametrize("seed", range(40))
def test_split_trees_verify_and_give_linear_quotients(seed):
    G = random_chordal(3 + seed % 7, seed)
    for t in (1, 2, 3):
        if clique_ideal(complement(G), t).is_zero:
            continue
        tree = chordal_vertex_split(G, t)
        assert tree.verify()
        L = linear_quotients_from_split(tree)
        assert betti_from_linear_quotients(L) == hochster_betti(tree.ideal)


def test_verify_betti_splitting_examples():
    I = clique_ideal(complement(path(4)), 2)
    J = ideal(4, (2, 4))
    K = ideal(4, (3,), (4,))
    assert verify_betti_splitting(I, J, K, 1)
    assert not verify_betti_splitting(I, K, J, 1)

    G = path(7)
    I = clique_ideal(complement(G), 3)
    J = clique_ideal(complement(delete_vertices(G, m(1))), 3)
    K = clique_ideal(complement(delete_vertices(G, m(1, 2))), 2)
    assert verify_betti_splitting(I, J, K, 1)


def test_verify_betti_splitting_rejects_overlap():
    I = ideal(3, (1, 2))
    with pytest.raises(ValueError):
        verify_betti_splitting(I, ideal(3, (1, 2)), ideal(3, (2,)), 1)


def test_path_betti_recursion_examples():
    B = path_betti_recursion(4, 2)
    assert B[0, 2] == 3 and B[1, 3] == 2
    assert B == hochster_betti(independence_ideal(path(4), 2))
    assert path_betti_recursion(5, 2) == hochster_betti(independence_ideal(path(5), 2))
    assert path_betti_recursion(6, 1).entries == {(0, 6): 1}
    with pytest.raises(ValueError):
        path_betti_recursion(4, 3)


@pytest.mark.parametrize("n,t", [(n, t) for t in range(1, 5) for n in range(2 * t - 1, 11)])
def test_path_recursion_equals_oracle(n, t):
    assert path_betti_recursion(n, t) == hochster_betti(independence_ideal(path(n), t))


def test_closed_form_examples():
    cf = closed_form_invariants("path", 6, 2)
    assert (cf.reg_quotient_clique, cf.pd_clique_ideal, cf.pd_quotient_independence, cf.linear_degree, cf.dim_complex) == (1, 3, 2, 4, 1)
    cf = closed_form_invariants("cycle", 8, 3)
    assert (cf.pd_quotient_independence, cf.pd_clique_ideal, cf.dim_complex, cf.linear_degree) == (5, 3, 3, 4)
    assert not closed_form_invariants("path", 4, 3).nonzero
    with pytest.raises(ValueError):
        closed_form_invariants("star", 4, 2)


def test_cycle_decomposition_examples():
    dec = cycle_decomposition(4, 2)
    assert dec.I == ideal(4, (1, 3), (2, 4))
    assert dec.left == ideal(4, (2, 4))
    assert dec.right == ideal(4, (1, 3))
    assert cycle_decomposition(6, 2).I == clique_ideal(complement(cycle(6)), 2)
    assert cycle_decomposition(6, 3).pd_bound == 5
    with pytest.raises(ValueError):
        cycle_decomposition(5, 3)


@pytest.mark.parametrize("seed", range(30))
def test_chordal_corollaries(seed):
    G = random_chordal(4 + seed % 6, seed)
    for t in (2, 3):
        K = clique_ideal(complement(G), t)
        if K.is_zero:
            continue
        L = find_linear_quotients(K)
        assert L is not None
        B = hochster_betti(K)
        assert betti_from_linear_quotients(L) == B
        assert has_linear_resolution(B, t)
        assert B.quotient().reg == t - 1
        for sp in chordal_splits(G, t):
            if sp.J.is_zero:
                assert ideal_betti(sp.I).pd == ideal_betti(sp.K).pd
            else:
                assert ideal_betti(sp.I).pd == max(ideal_betti(sp.J).pd + 1, ideal_betti(sp.K).pd)


@pytest.mark.parametrize("seed", range(25))
def test_independence_regularity_recursion(seed):
    # reg(R/J_t(G)) = max(reg(R/J_t(G\u)) + 1, reg(R/J_{t-1}(G\N[u]))), checked when both are nonzero
    G = random_chordal(4 + seed % 6, seed)
    u = lowest_simplicial_vertex(G)
    ubit = 1 << (u - 1)
    rest = delete_vertices(G, ubit)
    H = delete_vertices(G, G.adj[u - 1] | ubit)
    for t in (2, 3):
        J = independence_ideal(G, t)
        J1 = independence_ideal(rest, t)
        J2 = independence_ideal(H, t - 1) if H.vertices else MonomialIdeal(G.n, ())
        if J.is_zero or J1.is_zero or J2.is_zero:
            continue
        reg = hochster_betti(J).quotient().reg
        assert reg == max(hochster_betti(J1).quotient().reg + 1, hochster_betti(J2).quotient().reg)


@pytest.mark.parametrize("G", [cycle(4), cycle(5), cycle(6)], ids=["C4", "C5", "C6"])
def test_froberg_non_chordal(G):
    assert not is_chordal(G)
    assert not has_linear_resolution(hochster_betti(clique_ideal(complement(G), 2)), 2)
