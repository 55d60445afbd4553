"""Eventually-periodic omega-chains and their colimits.

A chain is a finite prefix X_0 -> ... -> X_r followed by a periodic tail
g : X_r -> X_r repeated forever.  Over a finite module category the
colimit of the tail is the eventual image of g: for N at least the bit
length of |X_r|, im(g^N) has stabilized and g restricts to an
automorphism of it.  Chain morphisms are levelwise maps whose naturality
squares (including the tail square) are verified exactly, and the
induced map on colimits is computed together with a uniqueness check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, PreconditionError
from .modcat import ModuleCategory, morphism_from_literal, morphism_to_literal
from . import modules as mods
from .core import find_retraction, find_section
from .purity import TestSuite, is_pure_mono, is_pure_epi


@dataclass(frozen=True)
class ChainSystem:
    """prefix X_0, ..., X_r; maps f_i : X_i -> X_{i+1}; tail g : X_r -> X_r."""
    prefix: tuple
    maps: tuple
    tail: object

    def __post_init__(self):
        if not self.prefix:
            raise PreconditionError("chain needs at least one object")
        if len(self.maps) != len(self.prefix) - 1:
            raise PreconditionError("need one transition per adjacent pair")
        for i, f in enumerate(self.maps):
            if f.dom != self.prefix[i] or f.cod != self.prefix[i + 1]:
                raise PreconditionError(f"transition {i} has wrong ends")
        last = self.prefix[-1]
        if self.tail.dom != last or self.tail.cod != last:
            raise PreconditionError("tail must be an endomorphism of the last "
                                    "prefix object")

    @property
    def top(self):
        return self.prefix[-1]

    def to_json(self) -> dict:
        return {"prefix": [list(x.factors) for x in self.prefix],
                "maps": [morphism_to_literal(f) for f in self.maps],
                "tail": morphism_to_literal(self.tail)}


@dataclass(frozen=True)
class ChainMorphism:
    """Levelwise maps between two chains of equal shape; every naturality
    square, including the tail square, commutes exactly."""
    src: ChainSystem
    dst: ChainSystem
    levels: tuple

    def __post_init__(self):
        if len(self.src.prefix) != len(self.dst.prefix):
            raise PreconditionError("chains must have equal shape")
        if len(self.levels) != len(self.src.prefix):
            raise PreconditionError("need one level map per prefix object")
        for i, m in enumerate(self.levels):
            if m.dom != self.src.prefix[i] or m.cod != self.dst.prefix[i]:
                raise PreconditionError(f"level map {i} has wrong ends")
        for i in range(len(self.levels) - 1):
            if (mods.compose(self.levels[i + 1], self.src.maps[i])
                    != mods.compose(self.dst.maps[i], self.levels[i])):
                raise PreconditionError(f"naturality fails at level {i}")
        top = self.levels[-1]
        if (mods.compose(top, self.src.tail)
                != mods.compose(self.dst.tail, top)):
            raise PreconditionError("naturality fails at the tail square")

    def to_json(self) -> dict:
        out = {"source": self.src.to_json(), "target": self.dst.to_json()}
        out["levels"] = [morphism_to_literal(m) for m in self.levels]
        return out


def chain_from_json(cat: ModuleCategory, data: dict) -> ChainSystem:
    maps = tuple(morphism_from_literal(cat, f) for f in data["maps"])
    tail = morphism_from_literal(cat, data["tail"])
    prefix = tuple(f.dom for f in maps) + (tail.dom,)
    return ChainSystem(prefix, maps, tail)


def chain_morphism_from_json(cat: ModuleCategory, data: dict) -> ChainMorphism:
    src = chain_from_json(cat, data["source"])
    dst = chain_from_json(cat, data["target"])
    levels = tuple(morphism_from_literal(cat, m) for m in data["levels"])
    return ChainMorphism(src, dst, levels)


@dataclass(frozen=True)
class ChainColimit:
    ob: object
    canonical: tuple  # canonical map from each prefix level
    stabilization: int

    @property
    def top_map(self):
        return self.canonical[-1]


def chain_colimit(cat, chain: ChainSystem, verify: bool = True,
                  bound: int | None = None) -> ChainColimit:
    """Colimit object with the canonical map from each prefix level.

    The tail stabilizes at N = bit length of |X_r|: I := im(g^N) is the
    eventual image and g restricts to an automorphism g_I of I.  The
    canonical map from level r is g_I^{-N} composed with the
    corestriction of g^N, which makes all tail copies compatible; maps
    from earlier levels follow by precomposing transitions.

    When verify is set, the universal property is checked against every
    object W of cat: cocones under the tail correspond exactly to the
    eventual image of precomposition-by-g on hom(X_r, W), so it is
    checked that precomposition by the canonical map is a bijection from
    hom(I, W) onto that eventual image.
    """
    if not isinstance(cat, ModuleCategory):
        raise PreconditionError("chain colimits need a module category")
    g = chain.tail
    top = chain.top
    n = max(1, top.size.bit_length())
    gn = mods.power(g, n)
    i_ob, incl, core = mods.image(gn)
    g_i = mods.solve_hom(i_ob, i_ob, left=[(incl, mods.compose(g, incl))])
    if g_i is None or not mods.is_iso(g_i):
        raise PreconditionError("internal: tail did not stabilize at the "
                                "computed exponent")
    z_top = mods.compose(mods.power(mods.inverse(g_i), n), core)
    canonical = [z_top]
    for f in reversed(chain.maps):
        canonical.append(mods.compose(canonical[-1], f))
    canonical.reverse()
    # cocone consistency along the prefix
    for i, f in enumerate(chain.maps):
        assert mods.compose(canonical[i + 1], f) == canonical[i]
    res = ChainColimit(i_ob, tuple(canonical), n)
    if verify:
        _verify_universal(cat, chain, res, bound)
    return res


def _verify_universal(cat, chain: ChainSystem, res: ChainColimit, bound):
    g, top = chain.tail, chain.top
    checked = 0
    cap = bound if bound is not None else 10 ** 6
    for w in cat.objects():
        hom_tw = cat.hom(top, w)
        checked += len(hom_tw)
        if checked > cap:
            raise CapExceededError("colimit verification exceeded the cap",
                                   needed=checked, bound=cap)
        eventual = set(hom_tw)
        while True:
            nxt = {mods.compose(v, g) for v in eventual}
            if nxt == eventual:
                break
            eventual = nxt
        via = [mods.compose(h, res.top_map) for h in cat.hom(res.ob, w)]
        if len(set(via)) != len(via) or set(via) != eventual:
            raise PreconditionError(
                f"universal property fails against {w!r}")


def colimit_of_chain_morphism(cat, cm: ChainMorphism, verify: bool = True,
                              bound: int | None = None):
    """The unique map between chain colimits commuting with all canonical
    maps; uniqueness holds because the canonical maps are epi, and is
    asserted."""
    col_s = chain_colimit(cat, cm.src, verify=verify, bound=bound)
    col_d = chain_colimit(cat, cm.dst, verify=verify, bound=bound)
    want = mods.compose(col_d.top_map, cm.levels[-1])
    phi = mods.solve_right_factor(col_s.top_map, want)
    if phi is None:
        raise PreconditionError("internal: no mediator between chain colimits")
    if not mods.is_epi_matrix(col_s.top_map):
        raise PreconditionError("internal: canonical map must be epi")
    for z_s, z_d, m in zip(col_s.canonical, col_d.canonical, cm.levels):
        assert mods.compose(phi, z_s) == mods.compose(z_d, m)
    return phi, col_s, col_d


def verify_colimit_purity(cat, cm: ChainMorphism, tests: TestSuite,
                          kind: str = "mono") -> bool:
    """Colimits of levelwise split monos (resp. epis) are pure.

    Precondition (checked): every level map admits a retraction (resp.
    section).  A False return would indicate an engine bug, which makes
    this a strong regression invariant.
    """
    if kind not in ("mono", "epi"):
        raise PreconditionError("kind must be 'mono' or 'epi'")
    for i, m in enumerate(cm.levels):
        split = (find_retraction(cat, m) if kind == "mono"
                 else find_section(cat, m))
        if split is None:
            raise PreconditionError(f"level map {i} is not split")
    phi, _, _ = colimit_of_chain_morphism(cat, cm)
    if kind == "mono":
        return is_pure_mono(phi, tests).pure
    return is_pure_epi(phi, tests).pure


def constant_chain(x, length: int = 1) -> ChainSystem:
    """The chain constant at x with identity transitions and tail."""
    ident = mods.identity(x)
    return ChainSystem((x,) * length, (ident,) * (length - 1), ident)
