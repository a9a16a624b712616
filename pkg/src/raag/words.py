"""Syllable words in right-angled Artin groups and graph products of cyclic groups.

A word is a tuple of syllables ``(generator index, exponent)``.  Reduction
inserts syllables left to right, shuffling each new syllable backwards past
commuting syllables until it merges or is blocked.  The canonical form is then
obtained by repeatedly emitting the head syllable with the least generator in
vertex order, which picks one representative per shuffle class.
"""

import re
from collections import namedtuple

from .graphs import Graph, _bits

__all__ = [
    "Group",
    "Word",
    "Syllable",
    "WordSyntaxError",
    "parse_word",
    "reduce",
    "equal",
    "multiply",
    "invert",
    "head",
    "tail",
    "support",
    "parabolic_projection",
    "in_parabolic",
    "in_parabolic_product",
]

Syllable = namedtuple("Syllable", "generator exponent")

TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")


class WordSyntaxError(ValueError):
    pass


class Group:
    """A RAAG (``ell=None``) or the graph product of cyclic groups of order ``ell``."""

    __slots__ = ("graph", "ell", "nbr", "_identity")

    def __init__(self, graph, ell=None):
        if not isinstance(graph, Graph):
            raise TypeError("graph must be a Graph")
        if ell is not None:
            ell = int(ell)
            if ell < 2:
                raise ValueError(f"modular exponent domain needs ell >= 2, got {ell}")
        self.graph = graph
        self.ell = ell
        self.nbr = tuple(graph.nbr_mask(i) for i in range(len(graph)))
        self._identity = None

    @property
    def infinite(self):
        return self.ell is None

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return self.ell == other.ell and self.graph == other.graph

    def __hash__(self):
        return hash((self.graph, self.ell))

    def __repr__(self):
        dom = "Z" if self.ell is None else f"Z/{self.ell}"
        return f"Group({dom} over {list(self.graph.vertices)})"

    def with_ell(self, ell):
        return Group(self.graph, ell)

    def norm_exp(self, k):
        """Normalized exponent, or 0 if the syllable vanishes."""
        if self.ell is None:
            return k
        return k % self.ell

    def identity(self):
        if self._identity is None:
            self._identity = Word(self, ())
        return self._identity

    def gen(self, name, k=1):
        """The (reduced) syllable ``name^k``."""
        i = self.graph.check_vertex(name)
        return Word(self, _reduce(self, ((i, k),)))

    def gens(self):
        return [self.gen(v) for v in self.graph.vertices]

    def word(self, text):
        return parse_word(text, self)

    def __call__(self, text):
        return reduce(parse_word(text, self))

    def mask(self, names):
        return self.graph.mask_of(names)


class Word:
    """Immutable syllable sequence over a group.

    ``==`` compares the literal syllable sequences; use :func:`equal` for
    equality of group elements.  Arithmetic operators return reduced words.
    """

    __slots__ = ("group", "syl", "_hash")

    def __init__(self, group, syl):
        self.group = group
        self.syl = tuple(syl)
        self._hash = None

    def __len__(self):
        return len(self.syl)

    def __iter__(self):
        names = self.group.graph.vertices
        return (Syllable(names[g], k) for g, k in self.syl)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.syl == other.syl and self.group == other.group

    def __lt__(self, other):
        return word_key(self.syl) < word_key(other.syl)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.syl)
        return self._hash

    def __str__(self):
        return format_syllables(self.group, self.syl)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def inverse(self):
        return invert(self)

    def __pow__(self, n):
        if n < 0:
            return invert(self) ** -n
        return Word(self.group, canonical(self.group, _reduce(self.group, self.syl * n)))

    def conj(self, h):
        """``h * self * h^-1``."""
        return multiply(multiply(h, self), invert(h))

    def is_identity(self):
        return not reduce(self).syl

    def letters(self):
        return [Syllable(*s) for s in self]


def word_key(syl):
    """Total order on canonical words: shortlex on (generator index, exponent)."""
    return (len(syl), syl)


def orientation_key(syl):
    """Order for picking between an element and its inverse.

    Like :func:`word_key` but exponents compare by ``|k|`` with positive
    first, so ``a`` is preferred over ``a^-1``.
    """
    return (len(syl), tuple((g, abs(k), k < 0) for g, k in syl))


def format_syllables(group, syl):
    if not syl:
        return "1"
    names = group.graph.vertices
    return " ".join(names[g] if k == 1 else f"{names[g]}^{k}" for g, k in syl)


def parse_word(text, group):
    """Parse whitespace-separated ``name`` / ``name^k`` tokens (``1`` is the identity)."""
    toks = text.split()
    if toks == ["1"]:
        return group.identity()
    syl = []
    for tok in toks:
        m = TOKEN_RE.match(tok)
        if not m:
            raise WordSyntaxError(f"malformed token {tok!r}")
        name, exp = m.group(1), m.group(2)
        if name not in group.graph.index:
            raise WordSyntaxError(f"unknown generator {name!r}")
        k = int(exp) if exp is not None else 1
        if k == 0:
            raise WordSyntaxError(f"zero exponent in {tok!r}")
        k = group.norm_exp(k)
        if k == 0:
            raise WordSyntaxError(f"exponent of {tok!r} vanishes mod {group.ell}")
        syl.append((group.graph.index[name], k))
    return Word(group, syl)


# --- core algorithms on raw syllable tuples ---------------------------------


def _reduce(group, syl):
    """Graphically reduced (not yet canonically ordered) syllable list."""
    nbr = group.nbr
    ell = group.ell
    acc = []
    for g, k in syl:
        if ell is not None:
            k %= ell
        if not k:
            continue
        commute = nbr[g]
        for i in range(len(acc) - 1, -1, -1):
            h, e = acc[i]
            if h == g:
                e += k
                if ell is not None:
                    e %= ell
                if e:
                    acc[i] = (g, e)
                else:
                    del acc[i]
                break
            if not (commute >> h & 1):
                acc.append((g, k))
                break
        else:
            acc.append((g, k))
    return acc


def canonical(group, syl):
    """Canonical order of a graphically reduced syllable sequence."""
    nbr = group.nbr
    rest = list(syl)
    out = []
    while rest:
        before = 0
        best = -1
        for i, (g, _) in enumerate(rest):
            if not (before & ~nbr[g]) and (best < 0 or g < rest[best][0]):
                best = i
            before |= 1 << g
        out.append(rest.pop(best))
    return tuple(out)


def normal_form(group, syl):
    return canonical(group, _reduce(group, syl))


def inverse_syl(group, syl):
    ell = group.ell
    if ell is None:
        return tuple((g, -k) for g, k in reversed(syl))
    return tuple((g, (-k) % ell) for g, k in reversed(syl))


def head_indices(group, syl):
    """Positions of syllables that can be shuffled to the front."""
    nbr = group.nbr
    before = 0
    out = []
    for i, (g, _) in enumerate(syl):
        if not (before & ~nbr[g]):
            out.append(i)
        before |= 1 << g
    return out


def tail_indices(group, syl):
    """Positions of syllables that can be shuffled to the end."""
    nbr = group.nbr
    after = 0
    out = []
    for i in range(len(syl) - 1, -1, -1):
        g = syl[i][0]
        if not (after & ~nbr[g]):
            out.append(i)
        after |= 1 << g
    out.reverse()
    return out


def split_prefix(group, syl, mask):
    """Split a reduced word into (maximal prefix in <mask>, remainder)."""
    nbr = group.nbr
    blocked = 0
    pre, rem = [], []
    for g, k in syl:
        if mask >> g & 1 and not (blocked & ~nbr[g]):
            pre.append((g, k))
        else:
            rem.append((g, k))
            blocked |= 1 << g
    return pre, rem


def split_suffix(group, syl, mask):
    """Split a reduced word into (remainder, maximal suffix in <mask>)."""
    nbr = group.nbr
    blocked = 0
    suf, rem = [], []
    for g, k in reversed(syl):
        if mask >> g & 1 and not (blocked & ~nbr[g]):
            suf.append((g, k))
        else:
            rem.append((g, k))
            blocked |= 1 << g
    rem.reverse()
    suf.reverse()
    return rem, suf


def support_mask(syl):
    m = 0
    for g, _ in syl:
        m |= 1 << g
    return m


# --- public operations --------------------------------------------------------


def _check_same(w1, w2):
    if w1.group != w2.group:
        raise ValueError("words live in different groups")


def reduce(w):
    """Canonical normal form of ``w``."""
    return Word(w.group, normal_form(w.group, w.syl))


def equal(w1, w2):
    _check_same(w1, w2)
    return normal_form(w1.group, w1.syl + inverse_syl(w2.group, w2.syl)) == ()


def multiply(w1, w2):
    _check_same(w1, w2)
    return Word(w1.group, normal_form(w1.group, w1.syl + w2.syl))


def invert(w):
    return Word(w.group, normal_form(w.group, inverse_syl(w.group, w.syl)))


def head(w):
    """Syllables of ``reduce(w)`` that can be shuffled to the front."""
    syl = normal_form(w.group, w.syl)
    names = w.group.graph.vertices
    return frozenset(Syllable(names[syl[i][0]], syl[i][1]) for i in head_indices(w.group, syl))


def tail(w):
    """Syllables of ``reduce(w)`` that can be shuffled to the end."""
    syl = normal_form(w.group, w.syl)
    names = w.group.graph.vertices
    return frozenset(Syllable(names[syl[i][0]], syl[i][1]) for i in tail_indices(w.group, syl))


def support(w):
    return w.group.graph.names_of(support_mask(_reduce(w.group, w.syl)))


def parabolic_projection(w, vertex_set):
    """Split ``reduce(w)`` as prefix * remainder with prefix in <vertex_set> maximal."""
    group = w.group
    mask = group.mask(vertex_set)
    pre, rem = split_prefix(group, _reduce(group, w.syl), mask)
    return Word(group, canonical(group, pre)), Word(group, canonical(group, rem))


def in_parabolic(w, vertex_set):
    mask = w.group.mask(vertex_set)
    return not (support_mask(_reduce(w.group, w.syl)) & ~mask)


def in_parabolic_product(w, set1, set2):
    """Whether ``w`` lies in <set1> * <set2>.

    Strips the maximal <set1>-prefix and tests the remainder against <set2>.
    """
    group = w.group
    m1, m2 = group.mask(set1), group.mask(set2)
    return _in_product(group, _reduce(group, w.syl), m1, m2)


def _in_product(group, reduced_syl, m1, m2):
    _, rem = split_prefix(group, reduced_syl, m1)
    return not (support_mask(rem) & ~m2)
