"""Explicit finite categories given by composition tables.

Implements the JSON table format, axiom validation, and formal dualisation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import FormatError, PreconditionError


@dataclass(frozen=True)
class TableMorphism:
    mid: str
    dom: str
    cod: str

    def __repr__(self):
        return f"{self.mid}:{self.dom}->{self.cod}"


@dataclass(frozen=True)
class AxiomsReport:
    passed: bool
    violations: tuple = ()

    def describe(self) -> list[str]:
        return [f"{kind}: {witness}" for kind, witness in self.violations]


class FiniteCategory:
    """Category with explicitly listed objects, morphisms and composites."""

    def __init__(self, objects, morphisms, identities, compose_table,
                 name: str = "table", sizes=None):
        self.name = name
        self._objects = list(objects)
        self._morphisms = {m.mid: m for m in morphisms}
        if len(self._morphisms) != len(morphisms):
            raise PreconditionError("duplicate morphism ids")
        self.identities = dict(identities)
        self.compose_table = dict(compose_table)
        # optional object sizes guiding canonical search order
        self._sizes = dict(sizes) if sizes else {o: 1 for o in self._objects}
        self._hom = {}
        for m in morphisms:
            self._hom.setdefault((m.dom, m.cod), []).append(m)

    # -- EnumerableCategory contract ------------------------------------
    def objects(self):
        return list(self._objects)

    def obj_size(self, a) -> int:
        return self._sizes.get(a, 1)

    def hom(self, a, b, bound=None):
        return list(self._hom.get((a, b), []))

    def identity(self, a) -> TableMorphism:
        return self._morphisms[self.identities[a]]

    def compose(self, g: TableMorphism, f: TableMorphism) -> TableMorphism:
        if f.cod != g.dom:
            raise PreconditionError(f"cannot compose {g} after {f}")
        try:
            return self._morphisms[self.compose_table[(g.mid, f.mid)]]
        except KeyError as exc:
            raise PreconditionError(
                f"compose table missing entry ({g.mid}, {f.mid})") from exc

    def morphisms(self):
        return list(self._morphisms.values())

    def morphism(self, mid: str) -> TableMorphism:
        return self._morphisms[mid]

    # -- structure -------------------------------------------------------
    def opposite(self) -> "FiniteCategory":
        morphs = [TableMorphism(m.mid, m.cod, m.dom) for m in self.morphisms()]
        table = {(f, g): h for (g, f), h in self.compose_table.items()}
        return FiniteCategory(self._objects, morphs, self.identities, table,
                              name=self.name + "^op", sizes=self._sizes)


def validate_category(cat: FiniteCategory) -> AxiomsReport:
    """Check totality, identity neutrality and associativity of a table."""
    violations = []
    morphs = cat.morphisms()
    for o in cat.objects():
        mid = cat.identities.get(o)
        if mid is None or mid not in {m.mid for m in morphs}:
            violations.append(("totality", f"identity of {o} missing"))
            continue
        ident = cat.morphism(mid)
        if ident.dom != o or ident.cod != o:
            violations.append(("identity", f"identity of {o} has wrong ends"))
    for g in morphs:
        for f in morphs:
            if f.cod != g.dom:
                if (g.mid, f.mid) in cat.compose_table:
                    violations.append(
                        ("totality", f"({g.mid},{f.mid}) composed though not composable"))
                continue
            h = cat.compose_table.get((g.mid, f.mid))
            if h is None:
                violations.append(("totality", f"({g.mid},{f.mid}) undefined"))
                continue
            hm = cat._morphisms.get(h)
            if hm is None or hm.dom != f.dom or hm.cod != g.cod:
                violations.append(("totality", f"({g.mid},{f.mid}) -> bad id {h}"))
    if not violations:
        for o in cat.objects():
            i = cat.identity(o)
            for f in morphs:
                if f.dom == o and cat.compose(f, i) != f:
                    violations.append(("identity", f"{f.mid} o id_{o} != {f.mid}"))
                if f.cod == o and cat.compose(i, f) != f:
                    violations.append(("identity", f"id_{o} o {f.mid} != {f.mid}"))
        for h in morphs:
            for g in morphs:
                if g.cod != h.dom:
                    continue
                for f in morphs:
                    if f.cod != g.dom:
                        continue
                    if cat.compose(cat.compose(h, g), f) != cat.compose(h, cat.compose(g, f)):
                        violations.append(
                            ("associativity", f"({h.mid},{g.mid},{f.mid})"))
    return AxiomsReport(passed=not violations, violations=tuple(violations))


# --------------------------------------------------------------------------
# JSON format

def load_finite_category(data, name: str = "table") -> FiniteCategory:
    """Build a table category from the JSON dict format.

    {"objects":[...], "morphisms":[{"id","dom","cod"}],
     "identities":{obj:morph}, "compose":[[g,f,gf],...]}
    """
    if isinstance(data, str):
        data = json.loads(data)
    for key in ("objects", "morphisms", "identities", "compose"):
        if key not in data:
            raise FormatError(f"missing top-level key {key!r}")
    objects = data["objects"]
    obj_set = set(objects)
    morphs = []
    seen = set()
    for i, entry in enumerate(data["morphisms"]):
        for key in ("id", "dom", "cod"):
            if key not in entry:
                raise FormatError(f"morphisms[{i}]: missing key {key!r}")
        if entry["dom"] not in obj_set:
            raise FormatError(f"morphisms[{i}]: dangling dom {entry['dom']!r}")
        if entry["cod"] not in obj_set:
            raise FormatError(f"morphisms[{i}]: dangling cod {entry['cod']!r}")
        if entry["id"] in seen:
            raise FormatError(f"morphisms[{i}]: duplicate id {entry['id']!r}")
        seen.add(entry["id"])
        morphs.append(TableMorphism(entry["id"], entry["dom"], entry["cod"]))
    for o, mid in data["identities"].items():
        if o not in obj_set:
            raise FormatError(f"identities: unknown object {o!r}")
        if mid not in seen:
            raise FormatError(f"identities[{o!r}]: dangling morphism {mid!r}")
    table = {}
    for i, triple in enumerate(data["compose"]):
        if len(triple) != 3:
            raise FormatError(f"compose[{i}]: expected [g, f, gf]")
        g, f, gf = triple
        for mid in (g, f, gf):
            if mid not in seen:
                raise FormatError(f"compose[{i}]: dangling morphism {mid!r}")
        table[(g, f)] = gf
    return FiniteCategory(objects, morphs, data["identities"], table, name=name)


def dump_finite_category(cat: FiniteCategory) -> dict:
    return {
        "objects": cat.objects(),
        "morphisms": [{"id": m.mid, "dom": m.dom, "cod": m.cod}
                      for m in cat.morphisms()],
        "identities": dict(cat.identities),
        "compose": [[g, f, h] for (g, f), h in sorted(cat.compose_table.items())],
    }


def walking_arrow() -> FiniteCategory:
    """The category with two objects and one arrow between them."""
    morphs = [TableMorphism("ida", "a", "a"), TableMorphism("idb", "b", "b"),
              TableMorphism("f", "a", "b")]
    table = {("ida", "ida"): "ida", ("idb", "idb"): "idb",
             ("f", "ida"): "f", ("idb", "f"): "f"}
    return FiniteCategory(["a", "b"], morphs, {"a": "ida", "b": "idb"}, table,
                          name="walking-arrow", sizes={"a": 1, "b": 2})


def as_table(cat, bound=None, name=None) -> tuple[FiniteCategory, dict]:
    """Export any enumerable category as a composition table.

    Returns (table, morphism map from new ids to original morphisms).
    """
    objs = cat.objects()
    obj_ids = {o: f"o{i}" for i, o in enumerate(objs)}
    morphs = []
    ids = {}
    back = {}
    for a in objs:
        for b in objs:
            for f in cat.hom(a, b, bound):
                mid = f"m{len(morphs)}"
                ids[f] = mid
                back[mid] = f
                morphs.append(TableMorphism(mid, obj_ids[a], obj_ids[b]))
    identities = {obj_ids[o]: ids[cat.identity(o)] for o in objs}
    table = {}
    for f, fid in ids.items():
        for g, gid in ids.items():
            if f.cod == g.dom:
                table[(gid, fid)] = ids[cat.compose(g, f)]
    sizes = {obj_ids[o]: cat.obj_size(o) for o in objs}
    tab = FiniteCategory([obj_ids[o] for o in objs], morphs, identities, table,
                         name=name or f"{getattr(cat, 'name', 'cat')}-table",
                         sizes=sizes)
    return tab, back
