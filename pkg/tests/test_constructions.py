from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sgcrit.canon import switching_copy, switching_isomorphic
from sgcrit.constructions import (
    GAMMA, OMEGA1, W_HAT, GalleryId, build_critical, complete, cycle, g2k1, g_prime, gallery,
    hajos_H, identify, p2_extend, splice_F, t_subdivide, tilde,
)
from sgcrit.criticality import is_critical_C4, structural_check
from sgcrit.errors import (
    BadParameter, CreatesNegativeDigon, PreconditionFailed, SimplicityViolated, VertexOutOfRange,
)
from sgcrit.homsolver import hom_C4
from sgcrit.sgraph import (
    SignedGraph, average_degree, bipartition, is_balanced, max_average_degree, potential,
    switching_equivalent,
)

import gen

ALL_IDS = list(GalleryId.FIXED) + ["cminus:4", "cplus:4", "cminus:6", "g2k1:1", "g2k1:2", "gprime:2"]


def cycle_sign(G, cyc):
    s = 1
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        s *= G.sign(a, b)
    return s


class TestGallery:
    @pytest.mark.parametrize("gid", ALL_IDS)
    def test_bipartite(self, gid):
        assert bipartition(gallery(gid)) is not None

    def test_gamma_four_cycles_negative(self):
        a, b, c, d, p, q = range(6)
        assert (GAMMA.n, GAMMA.m) == (6, 8)
        # triangles of K4 through the subdivided edges ab (via p) and cd (via q)
        for cyc in ([a, p, b, c], [a, p, b, d], [c, q, d, a], [c, q, d, b]):
            assert cycle_sign(GAMMA, cyc) == -1

    def test_w_hat(self):
        assert (W_HAT.n, W_HAT.m) == (7, 9)
        assert max_average_degree(W_HAT) == Fraction(18, 7)

    def test_omega1_is_subdivided_w_hat(self):
        i = W_HAT.edge_index(0, 6)
        sub = SignedGraph(9, list(W_HAT.delete_edge(i).edges) + [(0, 7, 1), (7, 8, 1), (8, 6, 1)])
        assert switching_isomorphic(OMEGA1, sub) is not None

    def test_parse(self):
        assert GalleryId.parse("cminus:6") == GalleryId("cminus", 6)
        assert str(GalleryId.parse("WHAT")) == "what"
        for bad in ("nope", "cminus", "cminus:x", "gamma:2"):
            with pytest.raises(BadParameter):
                GalleryId.parse(bad)

    def test_bad_parameters(self):
        for bad in ("cminus:2", "g2k1:0", "gprime:0"):
            with pytest.raises(BadParameter):
                gallery(bad)


class TestSubdivision:
    def test_single_edge(self):
        G = t_subdivide(SignedGraph(2, [(0, 1, 1)]), 2)
        assert G.edges == ((0, 2, -1), (1, 2, 1))

    def test_sizes(self):
        T = t_subdivide(tilde(cycle(3)), 2)
        assert (T.n, T.m) == (9, 12)

    def test_multigraph_needs_length_two(self):
        with pytest.raises(SimplicityViolated):
            t_subdivide(tilde(cycle(3)), 1)
        with pytest.raises(BadParameter):
            t_subdivide(cycle(3), 0)

    def test_tilde(self):
        assert tilde(SignedGraph(2, [(0, 1, 1)])).edges == ((0, 1, -1), (0, 1, 1))
        assert tilde(cycle(3)).m == 6

    def test_g2k1_matches_definition(self):
        assert g2k1(2) == gallery("g2k1:2")
        assert switching_isomorphic(t_subdivide(tilde(cycle(5)), 2), g2k1(2)) is not None

    @settings(max_examples=60)
    @given(gen.signed_graphs(max_n=6, multi=True), st.integers(2, 4), st.data())
    def test_sign_placement_is_immaterial(self, G, l, data):
        T = t_subdivide(G, l)
        # move each path's sign to another edge of the same path
        edges = []
        nxt = G.n
        for u, v, s in G.edges:
            path = [u] + list(range(nxt, nxt + l - 1)) + [v]
            nxt += l - 1
            k = data.draw(st.integers(0, l - 1))
            for j, (a, b) in enumerate(zip(path, path[1:])):
                edges.append((a, b, -s if j == k else 1))
        assert switching_equivalent(T, SignedGraph(nxt, edges))

    @given(gen.signed_graphs(max_n=6))
    def test_path_sign_is_negated(self, G):
        T = t_subdivide(G, 3)
        for i, (u, v, s) in enumerate(G.edges):
            a, b = G.n + 2 * i, G.n + 2 * i + 1
            assert T.sign(u, a) * T.sign(a, b) * T.sign(b, v) == -s


class TestSmallOperations:
    def test_p2_extend(self):
        K2 = SignedGraph(2, [(0, 1, 1)])
        P = p2_extend(K2, 0, 1, 1, -1)
        assert P.n == 3 and potential(P) == potential(K2) - 2
        with pytest.raises(BadParameter):
            p2_extend(K2, 0, 0, 1, 1)
        with pytest.raises(VertexOutOfRange):
            p2_extend(K2, 0, 5, 1, 1)

    def test_identify_opposite_paths(self):
        G = SignedGraph(4, [(0, 1, 1), (1, 2, 1), (0, 3, 1), (3, 2, -1)])
        with pytest.raises(CreatesNegativeDigon):
            identify(G, 1, 3)

    def test_identify_balanced_stays_balanced(self):
        G = cycle(6, 1)
        H = identify(G, 0, 2)
        assert is_balanced(H) is not None and H.n == 5 and H.m == 5

    def test_identify_adjacent_rejected(self):
        with pytest.raises(BadParameter):
            identify(cycle(4), 0, 1)

    def test_g_prime(self):
        G = g_prime(2)
        assert (G.n, G.m) == (14, 19)
        assert average_degree(G) == Fraction(19, 7)
        assert max_average_degree(G) == Fraction(19, 7)
        assert is_critical_C4(G).is_critical
        assert switching_copy(W_HAT, G) is None


class TestCombinations:
    def test_splice(self):
        G = splice_F(W_HAT, 1, W_HAT, 1)
        assert (G.n, G.m) == (12, 16)
        assert not hom_C4(G).mapped
        plus = [i for i, e in enumerate(G.edges) if e[2] > 0 and e[0] < 6 <= e[1]]
        assert plus and hom_C4(G.delete_edge(plus[0])).mapped
        assert structural_check(G) == []

    def test_splice_preconditions(self):
        with pytest.raises(PreconditionFailed):
            splice_F(W_HAT, 0, W_HAT, 1)
        with pytest.raises(PreconditionFailed):
            splice_F(cycle(4, -1), 0, W_HAT, 1)

    def test_hajos_sizes(self):
        G = hajos_H(GAMMA, (0, 2), GAMMA, (1, 4))
        assert (G.n, G.m) == (10, 14) and is_critical_C4(G).is_critical
        H = hajos_H(GAMMA, (0, 2), W_HAT, (1, 4))
        assert (H.n, H.m) == (11, 15) and is_critical_C4(H).is_critical
        assert structural_check(G) == [] and structural_check(H) == []

    def test_hajos_sign_preconditions(self):
        with pytest.raises(PreconditionFailed):
            hajos_H(GAMMA, (1, 4), GAMMA, (1, 4))
        with pytest.raises(PreconditionFailed):
            hajos_H(GAMMA, (0, 2), GAMMA, (0, 2))
        with pytest.raises(PreconditionFailed):
            hajos_H(cycle(4, -1), (0, 1), GAMMA, (1, 4))

    def test_hajos_any_edge_pair(self):
        for e1 in [e[:2] for e in GAMMA.edges if e[2] > 0]:
            for e2 in [e[:2] for e in W_HAT.edges if e[2] < 0]:
                G = hajos_H(GAMMA, e1, W_HAT, e2, verify=False)
                assert is_critical_C4(G).is_critical, (e1, e2)


class TestFamilies:
    @pytest.mark.parametrize("k", [1, 2])
    def test_odd_cycle_family(self, k):
        G = g2k1(k)
        assert (G.n, G.m) == (6 * k + 3, 8 * k + 4)
        assert is_critical_C4(G).is_critical

    def test_build_small(self):
        assert build_critical(9).m == 12
        assert build_critical(13).m == 18
        with pytest.raises(BadParameter):
            build_critical(8)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(14, 31))
    def test_build_is_critical_beyond_acceptance(self, n):
        assert is_critical_C4(build_critical(n)).is_critical

    def test_doubled_odd_cycle_transfer(self):
        for k in (1, 2, 3):
            assert is_critical_C4(t_subdivide(tilde(cycle(2 * k + 1)), 2)).is_critical

    def test_complete_graph(self):
        assert complete(4).m == 6
