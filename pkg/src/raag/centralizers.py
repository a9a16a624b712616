"""Centralizers of elements of right-angled Artin groups, primitive roots, commutation."""

from dataclasses import dataclass, field
from math import gcd

from .conjugacy import _strip_cycle
from .graphs import _bits, _component_masks
from .words import (
    Word,
    _check_same,
    _reduce,
    canonical,
    inverse_syl,
    normal_form,
    support_mask,
    orientation_key,
)

__all__ = ["CentralizerDescription", "primitive_root", "centralizer", "commutes"]


def _require_infinite(group):
    if not group.infinite:
        raise ValueError("centralizers and roots are only supported for RAAGs (ell=None)")


def _join_factor_masks(group, mask):
    """Join factors of the induced subgraph on ``mask``, ordered by least vertex."""
    nbr = group.nbr
    opp = [0] * len(nbr)
    for i in _bits(mask):
        opp[i] = mask & ~nbr[i] & ~(1 << i)
    return sorted(_component_masks(opp, mask), key=lambda m: m & -m)


def _ideals(group, syl, size):
    """Order ideals of the dependency poset of ``syl`` with ``size`` elements.

    Each ideal is a trace prefix; yielded as the bitmask of positions.
    """
    nbr = group.nbr
    n = len(syl)
    pred = []
    for j in range(n):
        m = 0
        gj = syl[j][0]
        for i in range(j):
            if not (nbr[gj] >> syl[i][0] & 1):
                m |= 1 << i
        pred.append(m)
    level = {0}
    for _ in range(size):
        nxt = set()
        for ideal in level:
            for j in range(n):
                if not (ideal >> j & 1) and pred[j] & ~ideal == 0:
                    nxt.add(ideal | (1 << j))
        level = nxt
    return sorted(level)


def _root_of_factor(group, syl):
    """Root and power of a cyclically reduced word with irreducible support."""
    n = len(syl)
    if len({g for g, _ in syl}) == 1:
        (g, k), = syl
        return ((g, 1 if k > 0 else -1),), abs(k)
    target = canonical(group, syl)
    for p in range(n, 1, -1):
        if n % p:
            continue
        for ideal in _ideals(group, syl, n // p):
            cand = tuple(syl[i] for i in _bits(ideal))
            if normal_form(group, cand * p) == target:
                return canonical(group, cand), p
    return target, 1


def _factors(group, core):
    mask = support_mask(core)
    out = []
    for fmask in _join_factor_masks(group, mask):
        part = [s for s in core if fmask >> s[0] & 1]
        out.append((fmask, _root_of_factor(group, part)))
    return out


def primitive_root(w):
    """``(root, power)`` with ``root ** power == w`` and ``root`` not a proper power."""
    group = w.group
    _require_infinite(group)
    core, conj = _strip_cycle(group, w.syl)
    if not core:
        raise ValueError("the identity has no primitive root")
    factors = _factors(group, core)
    power = 0
    for _, (_, p) in factors:
        power = gcd(power, p)
    root = []
    for _, (r, p) in factors:
        root.extend(r * (p // power))
    conj = tuple(conj)
    root = normal_form(group, conj + tuple(root) + inverse_syl(group, conj))
    return Word(group, root), power


@dataclass(frozen=True)
class CentralizerDescription:
    """``conjugator * (<f1> + ... + <fk> + <link_part>) * conjugator^-1``.

    ``whole_group`` is set for the identity, whose centralizer is everything.
    """

    conjugator: Word
    factors: tuple
    link_part: frozenset
    whole_group: bool = False
    core_parts: tuple = field(default=(), compare=False, repr=False)

    def __str__(self):
        if self.whole_group:
            return "whole group"
        parts = [f"<{f}>" for f in self.factors]
        group = self.conjugator.group
        order = group.graph.index
        if self.link_part:
            names = sorted(self.link_part, key=order.__getitem__)
            parts.append("<link: " + ",".join(names) + ">")
        body = " ⊕ ".join(parts) if parts else "1"
        return f"{self.conjugator} · ( {body} ) · {self.conjugator.inverse()}"

    def generators(self):
        """Generators of the centralizer as elements of the ambient group."""
        group = self.conjugator.group
        if self.whole_group:
            return group.gens()
        gens = list(self.factors) + [group.gen(v) for v in sorted(self.link_part, key=group.graph.index.__getitem__)]
        return [g.conj(self.conjugator) for g in gens]

    def sample(self, rng, length=6):
        """Random element of the described subgroup."""
        gens = self.generators()
        group = self.conjugator.group
        out = group.identity()
        for _ in range(rng.randint(0, length)):
            g = rng.choice(gens)
            k = rng.choice((-2, -1, 1, 2))
            out = out * (g ** k)
        return out


def centralizer(w):
    """Centralizer of ``w`` following the join decomposition of its cyclic support."""
    group = w.group
    _require_infinite(group)
    core, conj = _strip_cycle(group, w.syl)
    if not core:
        return CentralizerDescription(
            group.identity(), (), frozenset(group.graph.vertices), whole_group=True
        )
    factors = []
    parts = []
    for fmask, (root, _) in _factors(group, core):
        inv = canonical(group, inverse_syl(group, root))
        if orientation_key(inv) < orientation_key(root):
            root = inv
        factors.append(Word(group, root))
        parts.append(Word(group, canonical(group, [s for s in core if fmask >> s[0] & 1])))
    mask = support_mask(core)
    common = (1 << len(group.nbr)) - 1
    for i in _bits(mask):
        common &= group.nbr[i]
    return CentralizerDescription(
        Word(group, canonical(group, conj)),
        tuple(factors),
        group.graph.names_of(common & ~mask),
        core_parts=tuple(parts),
    )


def commutes(w1, w2):
    _check_same(w1, w2)
    group = w1.group
    return normal_form(group, w1.syl + w2.syl) == normal_form(group, w2.syl + w1.syl)
