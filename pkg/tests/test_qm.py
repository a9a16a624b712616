import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raag import (
    Graph,
    Group,
    ball,
    canonical_hyperplane,
    complete_graph,
    crossing_graph,
    cycle_graph,
    edgeless_graph,
    geometric_transverse_oracle,
    graph_isomorphic,
    hyperplanes_of_ball,
    in_parabolic,
    parse_graph,
    parse_hyperplane,
    path_graph,
    transverse,
)
from raag.words import Word, WordSyntaxError
from oracles import ball_by_rewriting

C5_2 = Group(cycle_graph(5, "abcde"), 2)
C5 = Group(cycle_graph(5, "abcde"))
P3_3 = Group(path_graph(4, "abcd"), 3)


def hyp(group, text):
    return parse_hyperplane(text, group)


def test_canonical_hyperplane_examples():
    h = canonical_hyperplane(C5.identity(), "a")
    assert (h.generator, str(h)) == ("a", "1|a")
    assert str(canonical_hyperplane(C5("b"), "e")) == "b|e"
    assert canonical_hyperplane(C5("a^2"), "a") == h
    assert str(canonical_hyperplane(C5("c b a e"), "a")) == "c|a"
    with pytest.raises(KeyError):
        canonical_hyperplane(C5("a"), "z")


def test_parse_hyperplane():
    assert hyp(C5, "b|e") == canonical_hyperplane(C5("b"), "e")
    assert hyp(C5, " b a | a ") == canonical_hyperplane(C5("b"), "a")
    with pytest.raises(WordSyntaxError):
        hyp(C5, "b e")
    with pytest.raises(WordSyntaxError):
        hyp(C5, "b|z")


def test_transverse_examples():
    assert transverse(hyp(C5_2, "1|a"), hyp(C5_2, "1|b"))
    assert not transverse(hyp(C5_2, "1|a"), hyp(C5_2, "1|c"))
    assert transverse(hyp(C5_2, "1|a"), hyp(C5_2, "b|e"))
    assert not transverse(hyp(C5_2, "1|c"), hyp(C5_2, "b|e"))
    assert not transverse(hyp(C5_2, "1|a"), hyp(C5_2, "1|a"))
    with pytest.raises(ValueError):
        transverse(hyp(C5_2, "1|a"), hyp(C5, "1|b"))


def test_ball_examples():
    k2 = Group(complete_graph(2, "ab"), 2)
    b = ball(k2, 2)
    assert sorted(str(w) for w in b.words()) == ["1", "a", "a b", "b"]
    e2 = Group(edgeless_graph(2, "ab"), 2)
    assert sorted(str(w) for w in ball(e2, 2).words()) == ["1", "a", "a b", "b", "b a"]
    assert len(ball(C5_2, 0)) == 1
    assert C5_2("a c") in ball(C5_2, 2)
    with pytest.raises(ValueError):
        ball(C5, 1)
    with pytest.raises(ValueError):
        ball(C5_2, -1)


@pytest.mark.parametrize(
    "graph, ell, radius",
    [
        (cycle_graph(5, "abcde"), 2, 4),
        (cycle_graph(5, "abcde"), 3, 3),
        (path_graph(4, "abcd"), 3, 3),
        (complete_graph(3, "abc"), 2, 4),
        (edgeless_graph(3, "abc"), 3, 3),
        (Graph("abcde", [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")]), 2, 4),
    ],
)
def test_ball_matches_rewriting(graph, ell, radius):
    group = Group(graph, ell)
    assert set(ball(group, radius).elements) == ball_by_rewriting(group, radius)


def test_ball_prefix_closed():
    b = ball(P3_3, 3)
    members = set(b.elements)
    for w in b.elements:
        for i in range(len(w)):
            assert w[:i] in members


def test_hyperplanes_of_ball_examples():
    assert [str(h) for h in hyperplanes_of_ball(ball(C5_2, 0))] == ["1|a", "1|b", "1|c", "1|d", "1|e"]
    hs = {str(h) for h in hyperplanes_of_ball(ball(C5_2, 1))}
    assert {"b|e", "b|d"} <= hs
    k2 = Group(complete_graph(2, "ab"), 2)
    assert [str(h) for h in hyperplanes_of_ball(ball(k2, 1))] == ["1|a", "1|b"]


def test_hyperplanes_of_ball_brute_force():
    # every edge {g, g u^k} with g in the ball, hyperplane computed from scratch
    for group in (C5_2, P3_3, Group(edgeless_graph(3, "abc"), 2)):
        b = ball(group, 2)
        want = set()
        for w in b.words():
            for u in group.graph.vertices:
                want.add(canonical_hyperplane(w, u))
        assert set(hyperplanes_of_ball(b)) == want


def test_crossing_graph_examples():
    ident = [canonical_hyperplane(C5_2.identity(), u) for u in "abcde"]
    cg = crossing_graph(ident)
    assert graph_isomorphic(cg.to_graph(), C5_2.graph) is not None
    six = [hyp(C5_2, t) for t in ("1|c", "1|d", "1|e", "1|a", "b|e", "b|d")]
    assert graph_isomorphic(crossing_graph(six).to_graph(), cycle_graph(6)) is not None
    p = Group(path_graph(4, "abcd"), 5)
    five = [hyp(p, t) for t in ("1|a", "1|b", "1|c", "d|b", "d|a")]
    g = crossing_graph(five).to_graph()
    assert graph_isomorphic(g, path_graph(5)) is not None


def test_crossing_graph_export():
    cg = crossing_graph(hyperplanes_of_ball(ball(C5_2, 1)))
    text = cg.to_text()
    assert "# H5 = " in text
    back = parse_graph(text)
    assert back == cg.to_graph()
    assert cg.to_dot().count("--") == len(cg.edges())
    h1, h2 = cg.edges()[0]
    assert cg.adjacent(h1, h2) and cg.adjacent(h2, h1)


def mixed_graph():
    return Graph("abcdef", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("d", "e"), ("e", "f")])


@pytest.mark.parametrize(
    "graph, ell, radius",
    [
        (cycle_graph(4, "abcd"), 3, 2),
        (cycle_graph(5, "abcde"), 3, 2),
        (cycle_graph(6, "abcdef"), 2, 2),
        (path_graph(4, "abcd"), 4, 2),
        (Graph("abcdef", [(x, y) for x in "abc" for y in "def"]), 2, 2),
        (mixed_graph(), 2, 2),
        (edgeless_graph(3, "abc"), 3, 2),
    ],
)
def test_local_crossing_matches_pairwise(graph, ell, radius):
    hs = hyperplanes_of_ball(ball(Group(graph, ell), radius))
    assert crossing_graph(hs, "local").nbr == crossing_graph(hs, "pairwise").nbr


def test_local_method_needs_triangle_free():
    g = Group(complete_graph(3, "abc"), 2)
    hs = hyperplanes_of_ball(ball(g, 1))
    assert crossing_graph(hs).nbr == crossing_graph(hs, "pairwise").nbr
    with pytest.raises(ValueError):
        crossing_graph(hs, "bogus")


def test_geometric_oracle_examples():
    a, b, c = (hyp(C5_2, f"1|{u}") for u in "abc")
    assert geometric_transverse_oracle(a, b, 3)
    assert not geometric_transverse_oracle(a, c, 3)
    assert geometric_transverse_oracle(a, hyp(C5_2, "b|e"), 3)


def test_geometric_oracle_small_exhaustive():
    # radius-1 hyperplanes over graphs with a triangle, where the local method does not apply
    for graph in (complete_graph(3, "abc"), Graph("abcd", [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])):
        group = Group(graph, 2)
        hs = hyperplanes_of_ball(ball(group, 1))
        for h1 in hs:
            for h2 in hs:
                if h1 != h2:
                    assert transverse(h1, h2) == geometric_transverse_oracle(h1, h2, 4)


def words(group, max_len=5):
    n = len(group.graph)
    syl = st.tuples(st.integers(0, n - 1), st.integers(1, 4))
    return st.lists(syl, max_size=max_len).map(lambda s: Word(group, s))


HGROUPS = [Group(cycle_graph(5, "abcde"), 5), Group(path_graph(4, "abcd"), 3), Group(mixed_graph(), 4), C5]


@pytest.mark.parametrize("group", HGROUPS, ids=str)
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_hyperplane_coset_properties(group, data):
    g = data.draw(words(group))
    h = data.draw(words(group))
    u = data.draw(st.sampled_from(group.graph.vertices))
    H = canonical_hyperplane(g, u)
    # idempotent, and depends only on the coset g <star(u)>
    assert canonical_hyperplane(H.rep_word, u) == H
    star_u = [v for v in group.graph.vertices if v in group.graph.neighbours(u) or v == u]
    s = Word(group, [(group.graph.index[data.draw(st.sampled_from(star_u))], data.draw(st.integers(1, 3)))
                     for _ in range(data.draw(st.integers(0, 3)))])
    assert canonical_hyperplane(g * s, u) == H
    same = canonical_hyperplane(h, u) == H
    assert same == in_parabolic(~g * h, star_u)
    # transversality is symmetric and invariant under left translation
    v = data.draw(st.sampled_from(group.graph.vertices))
    K = canonical_hyperplane(h, v)
    assert transverse(H, K) == transverse(K, H)
    t = data.draw(words(group))
    assert transverse(H, K) == transverse(canonical_hyperplane(t * g, u), canonical_hyperplane(t * h, v))
