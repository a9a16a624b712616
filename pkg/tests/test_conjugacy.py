import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raag import (
    Group,
    conjugate_test,
    cycle_graph,
    cyclic_reduce,
    cyclic_support,
    edgeless_graph,
    equal,
    path_graph,
    reduce,
)
from raag.words import Word, normal_form
from conftest import centralizer_graph
from oracles import all_words

CG = Group(centralizer_graph())
C5 = Group(cycle_graph(5, "abcde"))
E2 = Group(edgeless_graph(2, "ab"))
WORKED_G = "a^-2 c a b d c^-1 b a d"


def test_worked_cyclic_reduction():
    g = CG.word(WORKED_G)
    cnf = cyclic_reduce(g)
    assert str(cnf.conjugator) == "a^-1"
    assert equal(cnf.core, CG.word("a^-1 c a b d c^-1 b d"))
    assert str(cnf.core) == "a^-1 b c a c^-1 d b d"
    assert equal(cnf.element(), g)
    assert cyclic_support(g) == set("abcd")


def test_small_cyclic_reductions():
    cnf = cyclic_reduce(E2.word("a b a^-1"))
    assert (str(cnf.conjugator), str(cnf.core)) == ("a", "b")
    assert cyclic_support(E2.word("a b a^-1")) == {"b"}
    assert cyclic_support(C5.identity()) == frozenset()
    cnf = cyclic_reduce(C5.word("a c"))
    assert str(cnf.conjugator) == "1"
    assert str(cnf.core) == "a c"


def test_core_is_least_rotation():
    # b a is a rotation of a b in the free group; both get the same core
    assert cyclic_reduce(E2("b a")).core == cyclic_reduce(E2("a b")).core
    assert str(cyclic_reduce(E2("b a")).core) == "a b"


def test_conjugate_examples():
    assert conjugate_test(E2("a"), E2("b")) is None
    x = conjugate_test(E2("a b"), E2("b a"))
    assert x is not None
    assert equal(E2("a b"), x * E2("b a") * ~x)
    g = CG.word(WORKED_G)
    h = CG("c d^-1 e")
    x = conjugate_test(g, g.conj(h))
    assert equal(g, x * g.conj(h) * ~x)


def test_conjugate_brute_force_path():
    # every pair of words of <= 2 syllables over the path a-b-c-d
    group = Group(path_graph(4, "abcd"))
    conj = [normal_form(group, w) for w in all_words(group, 2, (1, -1))]
    elems = sorted({normal_form(group, w) for w in all_words(group, 2, (1, -1))})
    orbit = {}
    for w in elems:
        orbit[w] = {normal_form(group, x + w + tuple((g, -k) for g, k in reversed(x))) for x in conj}
    for w1 in elems:
        for w2 in elems:
            x = conjugate_test(Word(group, w1), Word(group, w2))
            assert (x is not None) == (w1 in orbit[w2])
            if x is not None:
                assert equal(Word(group, w1), x * Word(group, w2) * ~x)


def words(group, max_len=7):
    n = len(group.graph)
    syl = st.tuples(st.integers(0, n - 1), st.sampled_from((-2, -1, 1, 2)))
    return st.lists(syl, max_size=max_len).map(lambda s: Word(group, s))


GROUPS = [C5, CG, Group(cycle_graph(4, "abcd")), Group(cycle_graph(6, "abcdef"), 3)]


@pytest.mark.parametrize("group", GROUPS, ids=str)
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_conjugation_invariants(group, data):
    w = data.draw(words(group))
    h = data.draw(words(group))
    cnf = cyclic_reduce(w)
    assert equal(cnf.element(), w)
    # the core cannot be shortened by further cyclic conjugation
    assert len(cyclic_reduce(cnf.core).core) == len(cnf.core)
    conj = w.conj(h)
    assert cyclic_reduce(conj).core == cnf.core
    x = conjugate_test(w, conj)
    assert x is not None and equal(w, conj.conj(x))
    assert cyclic_support(conj) == cyclic_support(w)
    assert len(cnf.core) <= len(reduce(w))
