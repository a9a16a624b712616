"""Embedding problem for triangle-free graphs: search, certificates, closed-form rules.

A certificate for ``A(phi) -> A(psi)`` assigns to every vertex ``x`` of phi a
hyperplane ``g_x J_{u_x}`` of the truncated quasi-median graph ``QM_ell(psi)``
and a basis word ``g_x u_x^{e_x} g_x^-1``.  The structural check (crossing
graph of the hyperplanes equals phi) is what carries the guarantee; the
sampling check only hunts for implementation bugs.
"""

import random
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    GraphFormatError,
    NAME_RE,
    _induced_iter,
    _induced_search,
    find_induced_subgraph,
    find_triangle,
    is_forest,
    is_triangle_free,
)
from .qm import (
    Hyperplane,
    _hyperplane,
    ball,
    canonical_hyperplane,
    crossing_graph,
    hyperplanes_of_ball,
    parse_hyperplane,
    transverse,
)
from .words import Group, Word, WordSyntaxError, inverse_syl, normal_form, parse_word

__all__ = [
    "UnsupportedInput",
    "CertificateError",
    "EmbeddingCertificate",
    "EmbeddingAnswer",
    "VerificationReport",
    "embed_search",
    "embedding_hits",
    "verify_certificate",
    "certificate_from_hyperplanes",
    "star_double",
    "cycle_embedding_rule",
    "forest_rule",
    "f2xf2_rule",
    "radius_bound",
    "exponent_sum",
]


class UnsupportedInput(ValueError):
    """Input outside the girth > 3 setting."""


class CertificateError(ValueError):
    """Malformed certificate."""


def radius_bound(phi, psi):
    """Search radius beyond which a negative answer is certified."""
    return 8 * len(psi) * len(phi)


@dataclass
class EmbeddingCertificate:
    """Hyperplanes of ``QM_ell(psi)`` indexed by phi's vertices, with basis words in ``A(psi)``."""

    phi: Graph
    psi: Graph
    ell: int
    hyperplanes: dict
    basis: dict

    @property
    def exponents(self):
        """Per-vertex exponent ``e_x`` read off the basis."""
        return {x: _basis_exponent(self, x) for x in self.phi.vertices}

    def to_text(self):
        lines = [
            "phi: " + _graph_inline(self.phi),
            "psi: " + _graph_inline(self.psi),
            f"ell: {self.ell}",
        ]
        for x in self.phi.vertices:
            lines.append(f"map: {x} -> {self.hyperplanes[x]} ; basis {self.basis[x]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        head = {}
        maps = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, rest = line.partition(":")
            if not sep:
                raise CertificateError(f"line {lineno}: malformed line {raw!r}")
            key = key.strip()
            if key in ("phi", "psi", "ell"):
                if key in head:
                    raise CertificateError(f"line {lineno}: repeated {key!r}")
                head[key] = (lineno, rest.strip())
            elif key == "map":
                maps.append((lineno, rest))
            else:
                raise CertificateError(f"line {lineno}: unknown key {key!r}")
        for key in ("phi", "psi", "ell"):
            if key not in head:
                raise CertificateError(f"missing {key!r} line")
        try:
            phi = _parse_inline(head["phi"][1])
            psi = _parse_inline(head["psi"][1])
        except GraphFormatError as exc:
            raise CertificateError(f"bad graph: {exc}") from None
        try:
            ell = int(head["ell"][1])
        except ValueError:
            raise CertificateError(f"line {head['ell'][0]}: bad ell") from None
        if ell < 2:
            raise CertificateError("ell must be at least 2")
        qm = Group(psi, ell)
        raag = Group(psi)
        hyperplanes, basis = {}, {}
        for lineno, rest in maps:
            try:
                left, _, basis_text = rest.partition(";")
                x, arrow, hyp = left.partition("->")
                x = x.strip()
                if not arrow or not basis_text.strip().startswith("basis"):
                    raise CertificateError(f"line {lineno}: expected 'x -> hyperplane ; basis word'")
                if x not in phi.index:
                    raise CertificateError(f"line {lineno}: {x!r} is not a vertex of phi")
                if x in hyperplanes:
                    raise CertificateError(f"line {lineno}: {x!r} mapped twice")
                rep_text, bar, gen = hyp.strip().rpartition("|")
                if not bar or gen.strip() not in psi.index:
                    raise CertificateError(f"line {lineno}: bad hyperplane {hyp.strip()!r}")
                rep = parse_word(rep_text, qm)
                hyperplanes[x] = Hyperplane(psi.index[gen.strip()], rep.syl, qm)
                basis[x] = parse_word(basis_text.strip()[len("basis"):], raag)
            except WordSyntaxError as exc:
                raise CertificateError(f"line {lineno}: {exc}") from None
        return cls(phi, psi, ell, hyperplanes, basis)


def _graph_inline(g):
    edges = " ".join(f"{u}-{v}" for u, v in g.edges())
    return " ".join(g.vertices) + " | " + edges


def _parse_inline(text):
    verts, sep, edges = text.partition("|")
    if not sep:
        raise GraphFormatError(f"expected 'vertices | edges', got {text!r}")
    names = verts.split()
    for v in names:
        if not NAME_RE.match(v):
            raise GraphFormatError(f"bad vertex name {v!r}")
    pairs = []
    for tok in edges.split():
        u, dash, v = tok.partition("-")
        if not dash:
            raise GraphFormatError(f"bad edge {tok!r}")
        pairs.append((u, v))
    return Graph(names, pairs)


def _lift(h, raag):
    """The same hyperplane read in ``QM(psi)``: exponents kept verbatim."""
    return Hyperplane(h.gen, h.rep, raag)


def _basis_word(raag, h, e):
    rep = h.rep
    return Word(raag, normal_form(raag, rep + ((h.gen, e),) + inverse_syl(raag, rep)))


def _basis_exponent(cert, x):
    """``e`` with ``basis[x] = g u^e g^-1``, or None if the basis word is not of that form."""
    raag = Group(cert.psi)
    h = cert.hyperplanes[x]
    inner = normal_form(raag, inverse_syl(raag, h.rep) + cert.basis[x].syl + h.rep)
    if len(inner) == 1 and inner[0][0] == h.gen:
        return inner[0][1]
    return None


def certificate_from_hyperplanes(phi, psi, ell, hyperplanes, exponent=None):
    """Build a certificate; ``exponent`` is an int, a per-vertex dict, or None for ``|V(phi)|``."""
    raag = Group(psi)
    if exponent is None:
        exponent = len(phi)
    if isinstance(exponent, int):
        exponent = {x: exponent for x in phi.vertices}
    basis = {x: _basis_word(raag, hyperplanes[x], exponent[x]) for x in phi.vertices}
    return EmbeddingCertificate(phi, psi, ell, dict(hyperplanes), basis)


@dataclass
class EmbeddingAnswer:
    """``verdict`` is ``"YES"``, ``"NO"`` or ``"UNDECIDED"``."""

    verdict: str
    certificate: EmbeddingCertificate = None
    radius: int = 0
    searched_radius: int = 0
    bound: int = 0
    log: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict == "YES"


def _check_girth(phi, psi):
    for name, g in (("phi", phi), ("psi", psi)):
        tri = find_triangle(g)
        if tri is not None:
            raise UnsupportedInput(f"{name} contains the triangle {' '.join(tri)}; only girth > 3 is supported")


def embed_search(phi, psi, max_radius=None):
    """Look for hyperplanes of ``QM_|phi|(psi)`` near the identity whose crossing graph is phi.

    Iterative deepening up to ``min(max_radius, 8 |psi| |phi|)``.  NO is only
    returned once the full bound is searched (or the truncated Cayley graph is
    exhausted, which happens for finite graph products).
    """
    _check_girth(phi, psi)
    bound = radius_bound(phi, psi)
    ans = EmbeddingAnswer("UNDECIDED", bound=bound)
    hit = find_induced_subgraph(phi, psi)
    if hit is not None:
        ell = max(len(phi), 2)
        group = Group(psi, ell)
        hyps = {x: canonical_hyperplane(group.identity(), hit[x]) for x in phi.vertices}
        ans.verdict = "YES"
        ans.certificate = certificate_from_hyperplanes(phi, psi, ell, hyps, exponent=1)
        ans.log.append("phi is an induced subgraph of psi")
        return ans
    if len(psi) == 0:
        ans.verdict = "NO"
        ans.log.append("psi is empty")
        return ans
    ell = max(len(phi), 2)
    group = Group(psi, ell)
    limit = bound if max_radius is None else min(max_radius, bound)
    prev_size = None
    for r in range(1, limit + 1):
        b = ball(group, r)
        if prev_size == len(b):
            ans.verdict = "NO"
            ans.searched_radius = r
            ans.log.append(f"QM_{ell}(psi) exhausted at radius {r - 1}")
            return ans
        prev_size = len(b)
        hs = hyperplanes_of_ball(b)
        cg = crossing_graph(hs)
        host = cg.to_graph()
        ans.searched_radius = r
        ans.log.append(f"radius {r}: {len(b)} elements, {len(hs)} hyperplanes")
        m = _induced_search(phi, host)
        if m is not None:
            hyps = {x: cg.hyperplanes[host.index[m[x]]] for x in phi.vertices}
            ans.verdict = "YES"
            ans.radius = r
            ans.certificate = certificate_from_hyperplanes(phi, psi, ell, hyps)
            return ans
    if limit == bound:
        ans.verdict = "NO"
    return ans


def embedding_hits(phi, psi, radius, limit=None):
    """Every hyperplane set at ``radius`` whose crossing graph is phi, as ``{x: hyperplane}`` maps.

    Each image set is reported once (with one of its vertex maps), in search
    order.  ``limit`` caps the number of sets returned.
    """
    _check_girth(phi, psi)
    group = Group(psi, max(len(phi), 2))
    cg = crossing_graph(hyperplanes_of_ball(ball(group, radius)))
    host = cg.to_graph()
    seen = set()
    out = []
    for m in _induced_iter(phi, host):
        image = frozenset(m.values())
        if image in seen:
            continue
        seen.add(image)
        out.append({x: cg.hyperplanes[host.index[m[x]]] for x in phi.vertices})
        if limit is not None and len(out) >= limit:
            break
    return out


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)  # (name, passed, detail)

    def add(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))

    def passed(self, name):
        for n, ok, _ in self.checks:
            if n == name:
                return ok
        raise KeyError(name)

    @property
    def structural_ok(self):
        return all(ok for n, ok, _ in self.checks if n != "sampling")

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def __str__(self):
        return "\n".join(f"[{'PASS' if ok else 'FAIL'}] {n}: {d}" for n, ok, d in self.checks) + "\n"


def verify_certificate(cert, sample_budget=1000, seed=0):
    """Run the well-formedness, structural, relation and sampling checks."""
    phi, psi = cert.phi, cert.psi
    report = VerificationReport()
    if set(cert.hyperplanes) != set(phi.vertices) or set(cert.basis) != set(phi.vertices):
        raise CertificateError("certificate must map every vertex of phi exactly once")
    raag = Group(psi)

    # (a) well-formed
    problems = []
    for x in phi.vertices:
        h = cert.hyperplanes[x]
        if h.group.graph != psi or h.group.ell != cert.ell:
            problems.append(f"{x}: hyperplane not in QM_{cert.ell}(psi)")
            continue
        if _hyperplane(h.group, h.rep, h.gen) != h:
            problems.append(f"{x}: representative of {h} is not canonical")
        if cert.basis[x].group != raag:
            problems.append(f"{x}: basis word not over A(psi)")
        elif _basis_exponent(cert, x) is None:
            problems.append(f"{x}: basis word is not rep * gen^k * rep^-1")
    if len(set(cert.hyperplanes.values())) != len(phi):
        problems.append("two vertices share a hyperplane")
    report.add("well-formed", not problems, "; ".join(problems) or "reps canonical, basis = rep u^k rep^-1")
    if problems:
        report.add("crossing graph", False, "skipped: malformed certificate")
        report.add("relations", False, "skipped: malformed certificate")
        report.add("sampling", False, "skipped: malformed certificate")
        return report

    # (b) crossing graph equals phi, in QM_ell(psi) and in QM(psi)
    bad = []
    verts = phi.vertices
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            want = phi.adjacent(x, y)
            hx, hy = cert.hyperplanes[x], cert.hyperplanes[y]
            got = transverse(hx, hy)
            got_inf = transverse(_lift(hx, raag), _lift(hy, raag))
            if got != want or got_inf != want:
                bad.append(f"{x},{y}: phi-adjacent={want} transverse={got}")
    report.add("crossing graph", not bad, "; ".join(bad) or "crossing graph of hyperplanes is phi")

    # (c) adjacent basis words commute, non-adjacent ones do not
    bad = []
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            bx, by = cert.basis[x].syl, cert.basis[y].syl
            comm = normal_form(raag, bx + by) == normal_form(raag, by + bx)
            if comm != phi.adjacent(x, y):
                bad.append(f"{x},{y}: commute={comm}")
    report.add("relations", not bad, "; ".join(bad) or "commutation graph of basis is phi")

    # (d) random nontrivial reduced words of A(phi) map to nontrivial elements
    rng = random.Random(seed)
    src = Group(phi)
    failures = []
    tried = 0
    while tried < sample_budget and len(phi):
        length = rng.randint(1, 8)
        w = normal_form(src, [(rng.randrange(len(phi)), rng.choice((-2, -1, 1, 2))) for _ in range(length)])
        if not w:
            continue
        tried += 1
        image = []
        for g, k in w:
            b = cert.basis[verts[g]].syl
            image.extend(b * k if k > 0 else inverse_syl(raag, b) * -k)
        if not normal_form(raag, image):
            failures.append(str(Word(src, w)))
            if len(failures) >= 5:
                break
    report.add("sampling", not failures, f"{tried} samples" + (f"; trivial images of {failures}" if failures else ""))
    return report


def _fresh_name(base, taken):
    name = base
    while name in taken:
        name += "_"
    return name


def star_double(gamma, u):
    """Two copies of ``gamma`` glued along ``star(u)``, and the basis realizing it in ``A(gamma)``.

    The second copy of ``v`` is the hyperplane ``u J_v`` with basis word
    ``u v u^-1``.  ``J_u`` gets ``u^2`` so that every basis word has even
    ``u``-exponent sum.  Returns ``(amalgam, certificate, copy_map)`` where
    ``copy_map`` sends each second-copy vertex to its original.
    """
    i = gamma.check_vertex(u)
    star_m = gamma.star_mask(i)
    outside = [v for k, v in enumerate(gamma.vertices) if not (star_m >> k & 1)]
    taken = set(gamma.vertices)
    copy = {}
    for v in outside:
        copy[v] = _fresh_name(f"{v}_{u}", taken)
        taken.add(copy[v])
    vertices = list(gamma.vertices) + [copy[v] for v in outside]
    edges = list(gamma.edges())
    for a, b in gamma.edges():
        if a in copy or b in copy:
            edges.append((copy.get(a, a), copy.get(b, b)))
    amalgam = Graph(vertices, edges)
    ell = max(len(amalgam), 2)
    group = Group(gamma, ell)
    ug = group.gen(u)
    hyps, exps = {}, {}
    for v in gamma.vertices:
        hyps[v] = canonical_hyperplane(group.identity(), v)
        exps[v] = 2 if v == u else 1
    for v in outside:
        hyps[copy[v]] = canonical_hyperplane(ug, v)
        exps[copy[v]] = 1
    cert = certificate_from_hyperplanes(amalgam, gamma, ell, hyps, exponent=exps)
    return amalgam, cert, {copy[v]: v for v in outside}


def exponent_sum(w, generator):
    i = w.group.graph.check_vertex(generator)
    return sum(k for g, k in w.syl if g == i)


def cycle_embedding_rule(p, q):
    """Whether ``A(C_p)`` embeds in ``A(C_q)`` (cycles of length at least 5)."""
    if p < 5 or q < 5:
        raise ValueError("cycle rule needs p, q >= 5")
    return (p - 4) % (q - 4) == 0


def forest_rule(gamma):
    """Whether ``A(gamma)`` embeds in ``A(P_4)``: exactly when gamma is a forest."""
    return is_forest(gamma)


def f2xf2_rule(gamma):
    """Whether ``F_2 x F_2`` embeds in ``A(gamma)`` for triangle-free gamma: gamma has an induced 4-cycle."""
    if not is_triangle_free(gamma):
        raise UnsupportedInput("f2xf2_rule needs a triangle-free graph")
    c4 = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    return find_induced_subgraph(c4, gamma) is not None
