"""Finite simple graphs over named vertices.

Vertex order is fixed at construction and is the total order every canonical
form in the package derives from.  Adjacency is stored as integer bitmasks so
that the induced-subgraph search can intersect candidate sets cheaply.
"""

import re
from itertools import combinations

__all__ = [
    "Graph",
    "GraphFormatError",
    "parse_graph",
    "read_graph",
    "star",
    "link",
    "opposite_graph",
    "join_decomposition",
    "connected_components",
    "is_triangle_free",
    "find_triangle",
    "is_forest",
    "graph_isomorphic",
    "find_induced_subgraph",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "edgeless_graph",
]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class GraphFormatError(ValueError):
    """Malformed graph input.  ``lineno`` is 1-based, or None if not line-bound."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _bits(mask):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable finite simple graph.

    ``vertices`` is the ordered tuple of names; ``edges`` any iterable of
    2-element pairs of names.
    """

    __slots__ = ("vertices", "index", "_nbr", "_hash")

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        index = {}
        for i, v in enumerate(vertices):
            if v in index:
                raise GraphFormatError(f"duplicate vertex {v!r}")
            index[v] = i
        nbr = [0] * len(vertices)
        for e in edges:
            u, v = e
            if u not in index:
                raise GraphFormatError(f"unknown vertex {u!r}")
            if v not in index:
                raise GraphFormatError(f"unknown vertex {v!r}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u!r}")
            i, j = index[u], index[v]
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "_nbr", tuple(nbr))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _from_masks(cls, vertices, masks):
        g = cls.__new__(cls)
        object.__setattr__(g, "vertices", tuple(vertices))
        object.__setattr__(g, "index", {v: i for i, v in enumerate(vertices)})
        object.__setattr__(g, "_nbr", tuple(masks))
        object.__setattr__(g, "_hash", None)
        return g

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.index

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self._nbr == other._nbr

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.vertices, self._nbr)))
        return self._hash

    def __repr__(self):
        return f"Graph({list(self.vertices)!r}, {self.edges()!r})"

    # index-level access, used by the algebra modules
    def nbr_mask(self, i):
        return self._nbr[i]

    def star_mask(self, i):
        return self._nbr[i] | (1 << i)

    def mask_of(self, names):
        m = 0
        for v in names:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise KeyError(f"unknown vertex {v!r}") from None
        return m

    def names_of(self, mask):
        return frozenset(self.vertices[i] for i in _bits(mask))

    def check_vertex(self, v):
        if v not in self.index:
            raise KeyError(f"unknown vertex {v!r}")
        return self.index[v]

    def adjacent(self, u, v):
        return bool(self._nbr[self.check_vertex(u)] >> self.check_vertex(v) & 1)

    def neighbours(self, u):
        return self.names_of(self._nbr[self.check_vertex(u)])

    def degree(self, u):
        return bin(self._nbr[self.check_vertex(u)]).count("1")

    def edges(self):
        """Edges as name pairs, ordered by vertex order."""
        out = []
        for i, m in enumerate(self._nbr):
            for j in _bits(m >> (i + 1) << (i + 1)):
                out.append((self.vertices[i], self.vertices[j]))
        return out

    def num_edges(self):
        return sum(bin(m).count("1") for m in self._nbr) // 2

    def induced(self, names):
        """Induced subgraph on ``names``, keeping this graph's vertex order."""
        keep = self.mask_of(names)
        idx = list(_bits(keep))
        pos = {i: k for k, i in enumerate(idx)}
        masks = []
        for i in idx:
            m = 0
            for j in _bits(self._nbr[i] & keep):
                m |= 1 << pos[j]
            masks.append(m)
        return Graph._from_masks([self.vertices[i] for i in idx], masks)

    def relabel(self, mapping):
        """Rename vertices through ``mapping`` (vertex order is preserved)."""
        return Graph._from_masks([mapping[v] for v in self.vertices], self._nbr)

    def to_text(self, comment=None):
        lines = []
        if comment:
            lines.extend(f"# {c}" for c in comment.splitlines())
        lines.append("vertices: " + " ".join(self.vertices))
        lines.extend(f"edge: {u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def to_dot(self, name="G"):
        lines = [f"graph {name} {{"]
        lines.extend(f'  "{v}";' for v in self.vertices)
        lines.extend(f'  "{u}" -- "{v}";' for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"


def parse_graph(text):
    """Parse the text graph format.

    Blank lines and ``#`` comments are ignored.  Exactly one ``vertices:``
    line must precede the ``edge: u v`` lines.
    """
    vertices = None
    index = {}
    seen = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise GraphFormatError(f"malformed line {raw!r}", lineno)
        if key == "vertices":
            if vertices is not None:
                raise GraphFormatError("second 'vertices:' line", lineno)
            vertices = rest.split()
            for v in vertices:
                if not NAME_RE.match(v):
                    raise GraphFormatError(f"bad vertex name {v!r}", lineno)
                if v in index:
                    raise GraphFormatError(f"duplicate vertex {v!r}", lineno)
                index[v] = len(index)
        elif key == "edge":
            if vertices is None:
                raise GraphFormatError("'edge:' before 'vertices:'", lineno)
            parts = rest.split()
            if len(parts) != 2:
                raise GraphFormatError(f"malformed edge {raw!r}", lineno)
            u, v = parts
            for x in parts:
                if x not in index:
                    raise GraphFormatError(f"unknown vertex {x!r} in edge", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at {u!r}", lineno)
            key_uv = frozenset(parts)
            if key_uv in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
            seen.add(key_uv)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"malformed line {raw!r}", lineno)
    if vertices is None:
        raise GraphFormatError("missing 'vertices:' line")
    return Graph(vertices, edges)


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def star(g, u):
    """``u`` together with its neighbours."""
    return g.names_of(g.star_mask(g.check_vertex(u)))


def link(g, u_set):
    """Vertices outside ``u_set`` adjacent to every vertex of ``u_set``."""
    m = g.mask_of(u_set)
    common = (1 << len(g)) - 1
    for i in _bits(m):
        common &= g.nbr_mask(i)
    return g.names_of(common & ~m)


def opposite_graph(g):
    full = (1 << len(g)) - 1
    return Graph._from_masks(
        g.vertices, [full & ~m & ~(1 << i) for i, m in enumerate(g._nbr)]
    )


def _component_masks(masks, alive):
    comps = []
    todo = alive
    while todo:
        low = todo & -todo
        comp = frontier = low
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= masks[i]
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        todo &= ~comp
    return comps


def connected_components(g):
    """Vertex sets of the connected components, ordered by least vertex."""
    comps = _component_masks(g._nbr, (1 << len(g)) - 1)
    return [g.names_of(c) for c in comps]


def join_decomposition(g):
    """Join factors of ``g``: connected components of the opposite graph."""
    return connected_components(opposite_graph(g))


def find_triangle(g):
    """Some triangle as a name triple, or None."""
    for i, m in enumerate(g._nbr):
        for j in _bits(m >> (i + 1) << (i + 1)):
            common = m & g._nbr[j]
            common = common >> (j + 1) << (j + 1)
            if common:
                k = (common & -common).bit_length() - 1
                return g.vertices[i], g.vertices[j], g.vertices[k]
    return None


def is_triangle_free(g):
    return find_triangle(g) is None


def is_forest(g):
    return g.num_edges() == len(g) - len(connected_components(g))


def _search_order(pattern):
    """Order pattern vertices so each one has as many earlier neighbours as possible."""
    n = len(pattern)
    nbr = pattern._nbr
    deg = [bin(m).count("1") for m in nbr]
    order = []
    placed = 0
    for _ in range(n):
        best = None
        for i in range(n):
            if placed >> i & 1:
                continue
            key = (bin(nbr[i] & placed).count("1"), deg[i], -i)
            if best is None or key > best[0]:
                best = (key, i)
        order.append(best[1])
        placed |= 1 << best[1]
    return order


def _pattern_distances(pattern):
    n = len(pattern)
    dist = [[None] * n for _ in range(n)]
    for s in range(n):
        dist[s][s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for y in _bits(pattern._nbr[x]):
                    if dist[s][y] is None:
                        dist[s][y] = d
                        nxt.append(y)
            frontier = nxt
    return dist


class _HostBalls:
    """Lazily computed distance balls ``ball(h, k)`` as bitmasks, within ``alive``."""

    def __init__(self, nbr, alive):
        self.nbr = nbr
        self.alive = alive
        self.cache = {}

    def get(self, h, k):
        layers = self.cache.get(h)
        if layers is None:
            layers = self.cache[h] = [1 << h]
        while len(layers) <= k:
            cur = layers[-1]
            grown = cur
            for i in _bits(cur & ~(layers[-2] if len(layers) > 1 else 0)):
                grown |= self.nbr[i]
            layers.append(grown & (self.alive | cur))
        return layers[k]


def _induced_search(pattern, host, exact=False, first_orbit=None):
    return next(_induced_iter(pattern, host, exact, first_orbit), None)


def _induced_iter(pattern, host, exact=False, first_orbit=None):
    """Induced embeddings, one per image set up to automorphisms of the pattern."""
    n, m = len(pattern), len(host)
    if n > m:
        return
    if n == 0:
        yield {}
        return
    pn, hn = pattern._nbr, host._nbr
    pdeg = [bin(x).count("1") for x in pn]
    hdeg = [bin(x).count("1") for x in hn]

    # k-core pruning: an image vertex keeps at least min-pattern-degree neighbours
    alive = (1 << m) - 1
    need = min(pdeg)
    if need > 0:
        deg = list(hdeg)
        queue = [i for i in range(m) if deg[i] < need]
        for i in queue:
            alive &= ~(1 << i)
        while queue:
            i = queue.pop()
            for j in _bits(hn[i] & alive):
                deg[j] -= 1
                if deg[j] < need:
                    alive &= ~(1 << j)
                    queue.append(j)
        hdeg = [bin(hn[i] & alive).count("1") if alive >> i & 1 else 0 for i in range(m)]
    if bin(alive).count("1") < n:
        return

    by_degree = {}
    for d in set(pdeg):
        mask = 0
        for i in _bits(alive):
            if (hdeg[i] == d) if exact else (hdeg[i] >= d):
                mask |= 1 << i
        by_degree[d] = mask

    order = _search_order(pattern)
    pos = {p: k for k, p in enumerate(order)}
    pdist = _pattern_distances(pattern)
    # for each step: earlier pattern neighbours, earlier non-neighbours, and
    # earlier vertices at pattern distance >= 2 (host distance can only shrink)
    earlier_adj = []
    earlier_non = []
    earlier_far = []
    for k, p in enumerate(order):
        earlier_adj.append([pos[q] for q in _bits(pn[p]) if pos[q] < k])
        earlier_non.append([j for j in range(k) if not (pn[p] >> order[j] & 1)])
        earlier_far.append(
            [(j, pdist[p][order[j]]) for j in range(k) if pdist[p][order[j]] is not None and pdist[p][order[j]] >= 2]
        )
    # symmetry breaking: the first vertex's image is least over its automorphism orbit
    if first_orbit is None:
        first_orbit = _automorphism_orbit(pattern, order[0])
    above_first = [order[k] in first_orbit and k > 0 for k in range(n)]
    balls = _HostBalls(hn, alive)
    image = [0] * n

    def extend(k, used):
        if k == n:
            yield {pattern.vertices[order[i]]: host.vertices[image[i]] for i in range(n)}
            return
        cand = by_degree[pdeg[order[k]]] & ~used
        for j in earlier_adj[k]:
            cand &= hn[image[j]]
        for j in earlier_non[k]:
            cand &= ~hn[image[j]]
        if above_first[k]:
            cand &= ~((1 << (image[0] + 1)) - 1)
        for j, d in earlier_far[k]:
            if not cand:
                break
            cand &= balls.get(image[j], d)
        for h in _bits(cand):
            image[k] = h
            yield from extend(k + 1, used | (1 << h))

    yield from extend(0, 0)


def _automorphism_orbit(pattern, v):
    """Pattern vertices that some automorphism sends ``v`` to."""
    orbit = {v}
    for w in range(len(pattern)):
        if w in orbit or bin(pattern._nbr[w]).count("1") != bin(pattern._nbr[v]).count("1"):
            continue
        if _fixed_iso(pattern, v, w) is not None:
            orbit.add(w)
    return orbit


def _fixed_iso(pattern, v, w):
    """An automorphism of ``pattern`` sending index ``v`` to index ``w``, or None."""
    n = len(pattern)
    nbr = pattern._nbr
    deg = [bin(x).count("1") for x in nbr]
    image = [-1] * n
    image[v] = w
    order = [v] + [i for i in range(n) if i != v]

    def extend(k, used):
        if k == n:
            return True
        x = order[k]
        for h in range(n):
            if used >> h & 1 or deg[h] != deg[x]:
                continue
            ok = True
            for y in order[:k]:
                if bool(nbr[x] >> y & 1) != bool(nbr[h] >> image[y] & 1):
                    ok = False
                    break
            if ok:
                image[x] = h
                if extend(k + 1, used | (1 << h)):
                    return True
        image[x] = -1
        return False

    return image if extend(1, 1 << w) else None


def find_induced_subgraph(pattern, host):
    """Injective map preserving adjacency and non-adjacency, or None.

    Plain backtracking; host candidates are tried in host vertex order.
    """
    return _induced_search(pattern, host)


def graph_isomorphic(g1, g2):
    """Some isomorphism ``g1 -> g2`` as a dict, or None."""
    if len(g1) != len(g2) or g1.num_edges() != g2.num_edges():
        return None
    d1 = sorted(bin(m).count("1") for m in g1._nbr)
    d2 = sorted(bin(m).count("1") for m in g2._nbr)
    if d1 != d2:
        return None
    return _induced_search(g1, g2, exact=True)


def cycle_graph(n, names=None):
    names = list(names) if names is not None else [f"v{i}" for i in range(n)]
    return Graph(names, [(names[i], names[(i + 1) % n]) for i in range(n)])


def path_graph(n, names=None):
    """Path on ``n`` vertices (length ``n - 1``)."""
    names = list(names) if names is not None else [f"v{i}" for i in range(n)]
    return Graph(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def complete_graph(n, names=None):
    names = list(names) if names is not None else [f"v{i}" for i in range(n)]
    return Graph(names, combinations(names, 2))


def edgeless_graph(n, names=None):
    names = list(names) if names is not None else [f"v{i}" for i in range(n)]
    return Graph(names)
