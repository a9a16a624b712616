"""Hyperplanes of the quasi-median Cayley graph and their crossing graphs.

A hyperplane ``g J_u`` is identified with the generator ``u`` and the minimal
representative of the coset ``g <star(u)>``.  Transversality is decided
algebraically: ``g J_u`` and ``h J_v`` cross iff ``u, v`` are adjacent and
``g^-1 h`` lies in ``<star(u)> <star(v)>``.
"""

from dataclasses import dataclass
from functools import total_ordering

from .graphs import Graph, _bits, find_triangle
from .words import (
    Word,
    WordSyntaxError,
    _in_product,
    _reduce,
    canonical,
    format_syllables,
    inverse_syl,
    normal_form,
    parse_word,
    split_suffix,
    tail_indices,
    word_key,
)

__all__ = [
    "Hyperplane",
    "Ball",
    "CrossingGraph",
    "canonical_hyperplane",
    "parse_hyperplane",
    "transverse",
    "ball",
    "hyperplanes_of_ball",
    "crossing_graph",
    "geometric_transverse_oracle",
]


@total_ordering
@dataclass(frozen=True, eq=False)
class Hyperplane:
    """The hyperplane ``rep * J_generator``; ``rep`` is a canonical minimal coset representative."""

    gen: int
    rep: tuple
    group: object

    @property
    def generator(self):
        return self.group.graph.vertices[self.gen]

    @property
    def rep_word(self):
        return Word(self.group, self.rep)

    def key(self):
        return word_key(self.rep), self.gen

    def __eq__(self, other):
        if not isinstance(other, Hyperplane):
            return NotImplemented
        return self.gen == other.gen and self.rep == other.rep and self.group == other.group

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash((self.gen, self.rep))

    def __str__(self):
        return f"{format_syllables(self.group, self.rep)}|{self.generator}"

    def __repr__(self):
        return f"Hyperplane({str(self)!r})"


def _hyperplane(group, syl, u):
    rem, _ = split_suffix(group, _reduce(group, syl), group.graph.star_mask(u))
    return Hyperplane(u, canonical(group, rem), group)


def canonical_hyperplane(g, u):
    """The hyperplane ``g J_u`` in canonical form."""
    group = g.group
    return _hyperplane(group, g.syl, group.graph.check_vertex(u))


def parse_hyperplane(text, group):
    """Inverse of ``str(Hyperplane)``: ``<rep-word>|<generator>``."""
    rep, sep, gen = text.strip().rpartition("|")
    if not sep:
        raise WordSyntaxError(f"malformed hyperplane {text!r}")
    gen = gen.strip()
    if gen not in group.graph.index:
        raise WordSyntaxError(f"unknown generator {gen!r}")
    return canonical_hyperplane(parse_word(rep, group), gen)


def transverse(h1, h2):
    if h1.group != h2.group:
        raise ValueError("hyperplanes live in different groups")
    if h1 == h2:
        return False
    group = h1.group
    if not (group.nbr[h1.gen] >> h2.gen & 1):
        return False
    d = _reduce(group, inverse_syl(group, h1.rep) + h2.rep)
    star = group.graph.star_mask
    return _in_product(group, d, star(h1.gen), star(h2.gen))


@dataclass(frozen=True)
class Ball:
    """Elements of syllable length at most ``radius``, in BFS / canonical order."""

    group: object
    radius: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w.syl in self._members

    @property
    def _members(self):
        try:
            return self.__dict__["_set"]
        except KeyError:
            s = frozenset(self.elements)
            object.__setattr__(self, "_set", s)
            return s

    def words(self):
        return [Word(self.group, s) for s in self.elements]


def ball(group, radius):
    """Breadth-first enumeration of the syllable-metric ball around the identity."""
    if group.ell is None:
        raise ValueError("ball enumeration needs a finite exponent domain (ell)")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    n = len(group.graph)
    steps = [(i, k) for i in range(n) for k in range(1, group.ell)]
    seen = {()}
    out = [()]
    level = [()]
    for d in range(radius):
        nxt = []
        for x in level:
            for s in steps:
                y = normal_form(group, x + (s,))
                if len(y) == d + 1 and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        nxt.sort(key=word_key)
        out.extend(nxt)
        level = nxt
    return Ball(group, radius, tuple(out))


def hyperplanes_of_ball(b):
    """All hyperplanes with an edge ``{g, g u^k}`` at some element ``g`` of the ball, sorted."""
    group = b.group
    star = [group.graph.star_mask(i) for i in range(len(group.graph))]
    found = set()
    for g in b.elements:
        tail = 0
        for i in tail_indices(group, g):
            tail |= 1 << g[i][0]
        for u, sm in enumerate(star):
            if tail & sm:
                # the ball is prefix-closed, so the stripped rep is itself in the ball
                found.add(_hyperplane(group, g, u))
            else:
                found.add(Hyperplane(u, g, group))
    return sorted(found)


class CrossingGraph:
    """Hyperplanes with the transversality relation."""

    def __init__(self, hyperplanes, nbr):
        self.hyperplanes = tuple(hyperplanes)
        self.nbr = tuple(nbr)
        self.index = {h: i for i, h in enumerate(self.hyperplanes)}

    def __len__(self):
        return len(self.hyperplanes)

    def adjacent(self, h1, h2):
        return bool(self.nbr[self.index[h1]] >> self.index[h2] & 1)

    def edges(self):
        out = []
        for i, m in enumerate(self.nbr):
            for j in _bits(m >> (i + 1) << (i + 1)):
                out.append((self.hyperplanes[i], self.hyperplanes[j]))
        return out

    def to_graph(self):
        """Export as a :class:`Graph` with vertices ``H0, H1, ...`` in hyperplane order."""
        return Graph._from_masks([f"H{i}" for i in range(len(self))], self.nbr)

    def to_text(self):
        """Graph file text; comment lines record which hyperplane each vertex is."""
        comment = "\n".join(f"H{i} = {h}" for i, h in enumerate(self.hyperplanes))
        return self.to_graph().to_text(comment or None)

    def to_dot(self, name="crossing"):
        lines = [f"graph {name} {{"]
        lines.extend(f'  n{i} [label="{h}"];' for i, h in enumerate(self.hyperplanes))
        lines.extend(
            f"  n{i} -- n{j};"
            for i, m in enumerate(self.nbr)
            for j in _bits(m >> (i + 1) << (i + 1))
        )
        lines.append("}")
        return "\n".join(lines) + "\n"


def crossing_graph(hs, method="auto"):
    """Crossing graph on the given hyperplanes (kept in the given order).

    ``method`` is ``"pairwise"`` (test every pair with adjacent generators),
    ``"local"`` (triangle-free graphs only: enumerate the few hyperplanes that
    can cross each one), or ``"auto"``.
    """
    hs = list(hs)
    if not hs:
        return CrossingGraph([], [])
    group = hs[0].group
    for h in hs:
        if h.group != group:
            raise ValueError("hyperplanes live in different groups")
    if method == "auto":
        method = "local" if find_triangle(group.graph) is None else "pairwise"
    if method == "local":
        nbr = _crossing_local(group, hs)
    elif method == "pairwise":
        nbr = _crossing_pairwise(group, hs)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CrossingGraph(hs, nbr)


def _crossing_pairwise(group, hs):
    by_gen = {}
    for i, h in enumerate(hs):
        by_gen.setdefault(h.gen, []).append(i)
    nbr = [0] * len(hs)
    star = group.graph.star_mask
    for u, iu in by_gen.items():
        for v in _bits(group.nbr[u]):
            if v < u or v not in by_gen:
                continue
            su, sv = star(u), star(v)
            iv = by_gen[v]
            for i in iu:
                inv = inverse_syl(group, hs[i].rep)
                for j in iv:
                    d = _reduce(group, inv + hs[j].rep)
                    if _in_product(group, d, su, sv):
                        nbr[i] |= 1 << j
                        nbr[j] |= 1 << i
    return nbr


def _link_words(group, link, length, exps):
    """Reduced words of at most ``length`` syllables over an independent vertex set."""
    out = [()]
    level = [()]
    for _ in range(length):
        nxt = []
        for w in level:
            last = w[-1][0] if w else -1
            for v in link:
                if v == last:
                    continue
                for k in exps:
                    nxt.append(w + ((v, k),))
        out.extend(nxt)
        level = nxt
    return out


def _crossing_local(group, hs):
    # Triangle-free: <star(u)> = <u> x <link(u)>, link(u) independent, and
    # link(u) meets star(v) only in v.  So a hyperplane h J_v crossing g J_u
    # is h J_v = g J_v or h J_v = g m J_v, m a word over link(u) whose last
    # syllable is not a power of v.  All of m survives in h; only syllables
    # of g lying in star(v) can be stripped.
    index = {h: i for i, h in enumerate(hs)}
    longest = max(len(h.rep) for h in hs)
    if group.ell is None:
        exps = sorted({k for h in hs for _, k in h.rep} | {1, -1})
    else:
        exps = range(1, group.ell)
    star = group.graph.star_mask
    words_cache = {}
    nbr = [0] * len(hs)
    for i, h in enumerate(hs):
        u = h.gen
        link = tuple(_bits(group.nbr[u]))
        for v in link:
            strippable = sum(1 for y, _ in h.rep if star(v) >> y & 1)
            room = min(longest, longest - len(h.rep) + strippable)
            key = (u, room)
            if key not in words_cache:
                words_cache[key] = _link_words(group, link, room, exps)
            for m in words_cache[key]:
                if m and m[-1][0] == v:
                    continue
                cand = _hyperplane(group, h.rep + m, v)
                j = index.get(cand)
                if j is not None and not (nbr[i] >> j & 1) and transverse(h, cand):
                    nbr[i] |= 1 << j
                    nbr[j] |= 1 << i
    return nbr


_ORACLES = {}


def geometric_transverse_oracle(h1, h2, search_radius):
    """Transversality read off the Cayley graph itself, inside a finite ball.

    Left translation by ``rep(h1)^-1`` is a graph automorphism, so the pair is
    moved to ``(J_u, d J_v)`` and looked up in the ball of ``search_radius``
    around the identity.  Edges of that ball are grouped into hyperplanes by
    union-find over cliques and opposite sides of squares; two hyperplanes
    cross iff some square of the ball has one pair of opposite sides in each.
    A radius of ``|d| + 2`` is always enough: a crossing square sits at some
    element of ``<star(u)>`` no longer than ``d``.
    """
    group = h1.group
    if h2.group != group:
        raise ValueError("hyperplanes live in different groups")
    key = (group, search_radius)
    if key not in _ORACLES:
        _ORACLES.clear()
        _ORACLES[key] = GeometricOracle(group, search_radius)
    oracle = _ORACLES[key]
    d = _reduce(group, inverse_syl(group, h1.rep) + h2.rep)
    return oracle.transverse(Hyperplane(h1.gen, (), group), _hyperplane(group, d, h2.gen))


class GeometricOracle:
    """Union-find of the edges of a ball of the Cayley graph into hyperplanes."""

    def __init__(self, group, radius):
        if group.ell is None:
            raise ValueError("geometric oracle needs a finite exponent domain")
        self.group = group
        self.radius = radius
        elems = ball(group, radius).elements
        self.elements = elems
        members = set(elems)
        parent = {}

        def find(e):
            root = e
            while parent[root] != root:
                root = parent[root]
            while parent[e] != root:
                parent[e], e = root, parent[e]
            return root

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        ell = group.ell
        n = len(group.graph)

        def mul(x, i, k):
            return normal_form(group, x + ((i, k),))

        def edge(x, y):
            return (x, y) if (word_key(x), x) <= (word_key(y), y) else (y, x)

        # vertices of the clique x<u> inside the ball
        edge_gen = {}
        for x in elems:
            for i in range(n):
                for k in range(1, ell):
                    y = mul(x, i, k)
                    if y in members:
                        e = edge(x, y)
                        if e not in parent:
                            parent[e] = e
                            edge_gen[e] = i
        # triangles: all edges of one clique
        for x in elems:
            for i in range(n):
                clique = [x] + [y for y in (mul(x, i, k) for k in range(1, ell)) if y in members]
                base = None
                for a in range(len(clique)):
                    for b in range(a + 1, len(clique)):
                        e = edge(clique[a], clique[b])
                        if base is None:
                            base = e
                        else:
                            union(base, e)
        # squares x, xu^j, xu^j v^k, x v^k for adjacent u, v
        squares = []
        for x in elems:
            for i in range(n):
                for j in _bits(group.nbr[i]):
                    if j < i:
                        continue
                    for a in range(1, ell):
                        xu = mul(x, i, a)
                        if xu not in members:
                            continue
                        for b in range(1, ell):
                            xv = mul(x, j, b)
                            xuv = mul(xu, j, b)
                            if xv not in members or xuv not in members:
                                continue
                            e1, e3 = edge(x, xu), edge(xv, xuv)
                            e2, e4 = edge(x, xv), edge(xu, xuv)
                            union(e1, e3)
                            union(e2, e4)
                            squares.append((e1, e2))
        self._find = find
        self._mul = mul
        self._edge = edge
        self.crossings = set()
        for e1, e2 in squares:
            a, b = find(e1), find(e2)
            self.crossings.add((a, b))
            self.crossings.add((b, a))

    def edge_class(self, h):
        """Union-find class of the edge ``{rep, rep * u}`` of ``h``."""
        x = h.rep
        y = self._mul(x, h.gen, 1)
        e = self._edge(x, y)
        try:
            return self._find(e)
        except KeyError:
            raise ValueError(f"{h} has no edge inside the radius-{self.radius} ball") from None

    def transverse(self, h1, h2):
        return (self.edge_class(h1), self.edge_class(h2)) in self.crossings
