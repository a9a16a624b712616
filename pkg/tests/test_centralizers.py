import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raag import (
    Group,
    centralizer,
    commutes,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    equal,
    primitive_root,
)
from raag.words import Word
from conftest import centralizer_graph

CG = Group(centralizer_graph())
C5 = Group(cycle_graph(5, "abcde"))
WORKED_G = "a^-2 c a b d c^-1 b a d"


def test_worked_centralizer():
    g = CG.word(WORKED_G)
    c = centralizer(g)
    assert str(c.conjugator) == "a^-1"
    assert {str(f) for f in c.factors} == {str(CG("a^-1 c a c^-1")), str(CG("b d"))}
    assert c.link_part == {"e", "f"}
    assert str(c) == "a^-1 · ( <a^-1 c a c^-1> ⊕ <b d> ⊕ <link: e,f> ) · a"
    rng = random.Random(0)
    for _ in range(200):
        assert commutes(c.sample(rng), g)


def test_generator_centralizer():
    c = centralizer(C5("a"))
    assert str(c.conjugator) == "1"
    assert [str(f) for f in c.factors] == ["a"]
    assert c.link_part == {"b", "e"}
    assert str(c) == "1 · ( <a> ⊕ <link: b,e> ) · 1"
    assert str(centralizer(C5("a^-3"))) == str(c)


def test_identity_centralizer():
    c = centralizer(C5.identity())
    assert c.whole_group
    assert str(c) == "whole group"
    assert len(c.generators()) == 5


def test_modular_rejected():
    with pytest.raises(ValueError):
        centralizer(Group(cycle_graph(5, "abcde"), 3)("a"))
    with pytest.raises(ValueError):
        primitive_root(Group(cycle_graph(5, "abcde"), 3)("a"))


def test_primitive_roots():
    k2 = Group(complete_graph(2, "ab"))
    assert (str(primitive_root(k2("a^2"))[0]), primitive_root(k2("a^2"))[1]) == ("a", 2)
    e2 = Group(edgeless_graph(2, "ab"))
    root, p = primitive_root(e2.word("a b a b a b"))
    assert (str(root), p) == ("a b", 3)
    root, p = primitive_root(CG("a^-1 c a c^-1"))
    assert p == 1 and equal(root, CG("a^-1 c a c^-1"))
    # a^2 b^2 in Z^2 is the square of a b; a^2 b^4 too
    root, p = primitive_root(k2("a^2 b^4"))
    assert (str(root), p) == ("a b^2", 2)
    root, p = primitive_root(k2("a^2 b^3"))
    assert p == 1
    with pytest.raises(ValueError):
        primitive_root(k2.identity())


def test_commutes_examples():
    assert commutes(C5("a"), C5("b"))
    assert not commutes(C5("a"), C5("c"))
    assert commutes(C5("a c"), C5("a c a c"))


def words(group, max_len=6):
    n = len(group.graph)
    syl = st.tuples(st.integers(0, n - 1), st.sampled_from((-2, -1, 1, 2)))
    return st.lists(syl, min_size=1, max_size=max_len).map(lambda s: Word(group, s))


GROUPS = [C5, CG, Group(cycle_graph(4, "abcd")), Group(edgeless_graph(3, "abc"))]


@pytest.mark.parametrize("group", GROUPS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data(), seed=st.integers(0, 10**6))
def test_centralizer_properties(group, data, seed):
    w = data.draw(words(group))
    if w.is_identity():
        return
    root, p = primitive_root(w)
    assert equal(root ** p, w)
    # the root is not itself a proper power
    assert primitive_root(root)[1] == 1
    c = centralizer(w)
    rng = random.Random(seed)
    for g in c.generators():
        assert commutes(g, w)
    for _ in range(5):
        assert commutes(c.sample(rng), w)
    # w lies in its centralizer: it is a product of factor powers up to conjugation
    parts = Word(group, ())
    for part in c.core_parts:
        parts = parts * part
    assert equal(parts.conj(c.conjugator), w)


@pytest.mark.parametrize("group", GROUPS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_commuting_elements_lie_in_description(group, data):
    # anything that commutes with w lies in h (<f1> x ... x <link>) h^-1
    w = data.draw(words(group, 4))
    x = data.draw(words(group, 3))
    if w.is_identity() or not commutes(w, x):
        return
    c = centralizer(w)
    y = x.conj(~c.conjugator)
    rest = y
    for f in c.factors:
        supp = {s.generator for s in f}
        part = Word(group, [s for s in y.syl if group.graph.vertices[s[0]] in supp])
        bound = sum(abs(k) for _, k in y.syl)
        assert any(equal(part, f ** k) for k in range(-bound, bound + 1))
        rest = rest * ~part
    assert {s.generator for s in rest} <= set(c.link_part)
