"""Cyclic reduction, conjugacy testing and conjugator recovery."""

from collections import deque
from dataclasses import dataclass

from .words import (
    Word,
    _check_same,
    _reduce,
    canonical,
    head_indices,
    inverse_syl,
    normal_form,
    support_mask,
    tail_indices,
    word_key,
)

__all__ = ["CyclicNormalForm", "cyclic_reduce", "conjugate_test", "cyclic_support"]


@dataclass(frozen=True)
class CyclicNormalForm:
    """``element = conjugator * core * conjugator^-1`` with ``core`` cyclically reduced."""

    core: Word
    conjugator: Word

    def element(self):
        return self.core.conj(self.conjugator)


def _strip_cycle(group, syl):
    """Conjugate away head/tail syllables on a common generator.

    Returns ``(core, conjugator)`` as raw syllable tuples, ``core`` reduced but
    not canonically ordered.
    """
    core = _reduce(group, syl)
    conj = []
    while True:
        heads = head_indices(group, core)
        tails = tail_indices(group, core)
        tail_of = {core[j][0]: j for j in tails}
        pair = None
        for i in heads:
            j = tail_of.get(core[i][0])
            if j is not None and j != i:
                pair = (i, j)
                break
        if pair is None:
            return core, conj
        i, j = pair
        u, k = core[i]
        m = core[j][1]
        rest = [s for n, s in enumerate(core) if n != i and n != j]
        # u^k X u^m = u^-m (u^(k+m) X) u^m
        core = _reduce(group, [(u, k + m)] + rest)
        conj = _reduce(group, conj + [(u, -m)])


def _rotation_class(group, core):
    """All canonical cyclic rotations of a cyclically reduced core.

    Yields ``(canonical core, conjugator)`` pairs in BFS order, where moving a
    head syllable ``s`` to the end conjugates by ``s``.
    """
    start = canonical(group, core)
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        word, h = queue.popleft()
        yield word, h
        for i in head_indices(group, word):
            s = word[i]
            nxt = canonical(group, word[:i] + word[i + 1:] + (s,))
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, h + (s,)))


def cyclic_reduce(w):
    """Canonical cyclically reduced conjugate of ``w`` together with a conjugator.

    The core is the least (shortlex) canonical word over all rotations of the
    cyclically reduced shuffle class; the first one reached wins ties.
    """
    group = w.group
    core, conj = _strip_cycle(group, w.syl)
    best = None
    for word, h in _rotation_class(group, core):
        if best is None or word_key(word) < word_key(best[0]):
            best = (word, h)
    word, h = best
    return CyclicNormalForm(Word(group, word), Word(group, normal_form(group, tuple(conj) + h)))


def conjugate_test(w1, w2):
    """A witness ``x`` with ``w1 = x w2 x^-1``, or None if not conjugate."""
    _check_same(w1, w2)
    c1, c2 = cyclic_reduce(w1), cyclic_reduce(w2)
    if c1.core.syl != c2.core.syl:
        return None
    group = w1.group
    return Word(group, normal_form(group, c1.conjugator.syl + inverse_syl(group, c2.conjugator.syl)))


def cyclic_support(w):
    core, _ = _strip_cycle(w.group, w.syl)
    return w.group.graph.names_of(support_mask(core))
