"""Canonical JSON document format for a whole tower of structures.

One file carries one base plus any number of named structures at every
level, so higher cells (which co-reference many lower ones) stay
self-contained.  Tables keyed by id tuples are stored as sorted rows
``[k1, ..., kn, value]``; keys are emitted sorted; the serializer is the
single formatting authority, so save(load(save(x))) is byte-identical.

Functors that occur inside a larger structure (composition functors, hom
functors of a level-2 functor, transformation components) are stored as
bare ``{obj_map, hom_map}`` tables; their source and target are determined
by position and rebuilt on load.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DanglingReference, ParseError
from .fincat import FinCategory
from .kfold import KFoldMonoidal
from .vcat import VCategory, VFunctor, VNatTransform, product_vcat, unit_vcategory
from .v2cat import (
    PastingInstance,
    V2Category,
    V2Functor,
    V2NatTransform,
    VModification,
)

FORMAT = "tower/1"

_PASTING_FUNCTORS = ("f", "h", "p", "g", "k", "q")
_PASTING_NATS = tuple(f"{kind}{col}" for col in (1, 2, 3, 4)
                      for kind in ("alpha", "beta", "gamma"))
_PASTING_MODS = tuple(f"{kind}{col}" for col in (1, 2, 3, 4)
                      for kind in ("mu", "nu"))


@dataclass
class Tower:
    base: KFoldMonoidal
    symmetry: dict = None            # optional (a, b) -> morphism table
    vcategories: dict = field(default_factory=dict)
    vfunctors: dict = field(default_factory=dict)
    vnats: dict = field(default_factory=dict)
    v2categories: dict = field(default_factory=dict)
    v2functors: dict = field(default_factory=dict)
    v2nats: dict = field(default_factory=dict)
    modifications: dict = field(default_factory=dict)
    pastings: dict = field(default_factory=dict)


# -- encoding helpers ----------------------------------------------------------

def _rows(table: dict, arity: int = 0) -> list:
    """Table as sorted rows [k1, ..., kn, value]; arity is documentation."""
    return sorted([*key, value] if isinstance(key, tuple) else [key, value]
                  for key, value in table.items())


def _table(rows, arity: int, what: str) -> dict:
    out = {}
    for row in rows:
        if not isinstance(row, list) or len(row) != arity + 1:
            raise ParseError(f"{what}: expected rows of {arity + 1} strings")
        key = tuple(row[:-1]) if arity > 1 else row[0]
        out[key] = row[-1]
    return out


def _vfunctor_tables(vf: VFunctor) -> dict:
    return {"obj_map": dict(sorted(vf.obj_map.items())),
            "hom_map": _rows(vf.hom_map, 2)}


def _vfunctor_from(tables, source: VCategory, target: VCategory,
                   what: str) -> VFunctor:
    if not isinstance(tables, dict) or "obj_map" not in tables \
            or "hom_map" not in tables:
        raise ParseError(f"{what}: expected obj_map and hom_map")
    return VFunctor(source, target, dict(tables["obj_map"]),
                    _table(tables["hom_map"], 2, what))


def _vcategory_tables(vc: VCategory) -> dict:
    return {"objects": sorted(vc.objects),
            "hom": _rows(vc.hom, 2),
            "comp": _rows(vc.comp, 3),
            "identity": dict(sorted(vc.identity.items()))}


def _vcategory_from(doc, base: KFoldMonoidal, what: str) -> VCategory:
    for k in ("objects", "hom", "comp", "identity"):
        if k not in doc:
            raise ParseError(f"{what}: missing {k!r}")
    return VCategory(base, set(doc["objects"]),
                     _table(doc["hom"], 2, what),
                     _table(doc["comp"], 3, what),
                     dict(doc["identity"]))


# -- document <-> tower ---------------------------------------------------------

def tower_to_document(t: Tower) -> dict:
    base = t.base
    cat = base.base
    doc_base = {
        "objects": sorted(cat.objects),
        "morphisms": sorted(cat.morphisms),
        "dom": dict(sorted(cat.dom.items())),
        "cod": dict(sorted(cat.cod.items())),
        "identity": dict(sorted(cat.identity.items())),
        "comp": _rows(cat.comp, 2),
        "tensors": base.n,
        "unit": base.unit,
        "tensor_obj": {str(i): _rows(base.tensor_obj_table[i], 2)
                       for i in range(1, base.n + 1)},
        "tensor_mor": {str(i): _rows(base.tensor_mor_table[i], 2)
                       for i in range(1, base.n + 1)},
        "assoc": {str(i): _rows(base.assoc_table[i], 3)
                  for i in range(1, base.n + 1)},
        "interchange": {f"{i},{j}": _rows(tab, 4)
                        for (i, j), tab in sorted(base.interchange_table.items())},
    }
    if t.symmetry is not None:
        doc_base["symmetry"] = _rows(t.symmetry, 2)
    doc = {"format": FORMAT, "base": doc_base}

    if t.vcategories:
        doc["vcategories"] = {name: _vcategory_tables(vc)
                              for name, vc in sorted(t.vcategories.items())}
    if t.vfunctors:
        doc["vfunctors"] = {
            name: {"source": _name_of(t.vcategories, vf.source, name, "source"),
                   "target": _name_of(t.vcategories, vf.target, name, "target"),
                   **_vfunctor_tables(vf)}
            for name, vf in sorted(t.vfunctors.items())}
    if t.vnats:
        doc["vnats"] = {
            name: {"source": _name_of(t.vfunctors, nat.source, name, "source"),
                   "target": _name_of(t.vfunctors, nat.target, name, "target"),
                   "components": dict(sorted(nat.components.items()))}
            for name, nat in sorted(t.vnats.items())}
    if t.v2categories:
        doc["v2categories"] = {}
        for name, u in sorted(t.v2categories.items()):
            doc["v2categories"][name] = {
                "objects": sorted(u.objects),
                "hom": sorted([a, b, _vcategory_tables(vc)]
                              for (a, b), vc in u.hom.items()),
                "comp": sorted([a, b, c, _vfunctor_tables(m2)]
                               for (a, b, c), m2 in u.comp.items()),
                "identity": sorted([a, _vfunctor_tables(j2)]
                                   for a, j2 in u.identity.items()),
            }
    if t.v2functors:
        doc["v2functors"] = {
            name: {"source": _name_of(t.v2categories, vf.source, name, "source"),
                   "target": _name_of(t.v2categories, vf.target, name, "target"),
                   "obj_map": dict(sorted(vf.obj_map.items())),
                   "hom_map": sorted([a, b, _vfunctor_tables(h)]
                                     for (a, b), h in vf.hom_map.items())}
            for name, vf in sorted(t.v2functors.items())}
    if t.v2nats:
        doc["v2nats"] = {
            name: {"source": _name_of(t.v2functors, nat.source, name, "source"),
                   "target": _name_of(t.v2functors, nat.target, name, "target"),
                   "components": sorted([u, _vfunctor_tables(c)]
                                        for u, c in nat.components.items())}
            for name, nat in sorted(t.v2nats.items())}
    if t.modifications:
        doc["modifications"] = {
            name: {"source": _name_of(t.v2nats, m.source, name, "source"),
                   "target": _name_of(t.v2nats, m.target, name, "target"),
                   "components": dict(sorted(m.components.items()))}
            for name, m in sorted(t.modifications.items())}
    if t.pastings:
        doc["pastings"] = {}
        for name, p in sorted(t.pastings.items()):
            entry = {"categories": [
                _name_of(t.v2categories, p.cat_u, name, "categories"),
                _name_of(t.v2categories, p.cat_v, name, "categories"),
                _name_of(t.v2categories, p.cat_w, name, "categories")]}
            entry["functors"] = {
                k: _name_of(t.v2functors, getattr(p, k), name, k)
                for k in _PASTING_FUNCTORS}
            entry["nats"] = {
                k: _name_of(t.v2nats, getattr(p, k), name, k)
                for k in _PASTING_NATS}
            entry["modifications"] = {
                k: _name_of(t.modifications, getattr(p, k), name, k)
                for k in _PASTING_MODS}
            doc["pastings"][name] = entry
    return doc


def _name_of(registry: dict, value, owner: str, slot: str) -> str:
    for name, candidate in registry.items():
        if candidate is value or candidate == value:
            return name
    raise DanglingReference(
        f"{owner}: {slot} is not a named structure in this document")


def document_to_tower(doc) -> Tower:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if doc.get("format") != FORMAT:
        raise ParseError(f"unknown or missing format marker, expected {FORMAT!r}")
    if "base" not in doc:
        raise ParseError("document has no base section")
    d = doc["base"]
    try:
        cat = FinCategory(set(d["objects"]), set(d["morphisms"]),
                          dict(d["dom"]), dict(d["cod"]),
                          _table(d["comp"], 2, "base.comp"),
                          dict(d["identity"]))
        n = int(d["tensors"])
        base = KFoldMonoidal(
            cat, n, d["unit"],
            {int(i): _table(rows, 2, "tensor_obj")
             for i, rows in d["tensor_obj"].items()},
            {int(i): _table(rows, 2, "tensor_mor")
             for i, rows in d["tensor_mor"].items()},
            {int(i): _table(rows, 3, "assoc")
             for i, rows in d["assoc"].items()},
            {tuple(int(x) for x in ij.split(",")): _table(rows, 4, "interchange")
             for ij, rows in d.get("interchange", {}).items()})
    except (KeyError, TypeError, ValueError) as err:
        raise ParseError(f"malformed base section: {err}")
    _check_base_ids(base)
    tower = Tower(base)
    if "symmetry" in d:
        tower.symmetry = _table(d["symmetry"], 2, "symmetry")

    for name, vdoc in doc.get("vcategories", {}).items():
        vc = _vcategory_from(vdoc, base, f"vcategories.{name}")
        _check_vcat_ids(base, vc, f"vcategories.{name}")
        tower.vcategories[name] = vc

    for name, fdoc in doc.get("vfunctors", {}).items():
        src = _resolve(tower.vcategories, fdoc, "source", f"vfunctors.{name}")
        tgt = _resolve(tower.vcategories, fdoc, "target", f"vfunctors.{name}")
        tower.vfunctors[name] = _vfunctor_from(fdoc, src, tgt,
                                               f"vfunctors.{name}")

    for name, ndoc in doc.get("vnats", {}).items():
        src = _resolve(tower.vfunctors, ndoc, "source", f"vnats.{name}")
        tgt = _resolve(tower.vfunctors, ndoc, "target", f"vnats.{name}")
        if "components" not in ndoc:
            raise ParseError(f"vnats.{name}: missing components")
        tower.vnats[name] = VNatTransform(src, tgt, dict(ndoc["components"]))

    for name, udoc in doc.get("v2categories", {}).items():
        tower.v2categories[name] = _v2category_from(udoc, base,
                                                    f"v2categories.{name}")

    for name, fdoc in doc.get("v2functors", {}).items():
        src = _resolve(tower.v2categories, fdoc, "source", f"v2functors.{name}")
        tgt = _resolve(tower.v2categories, fdoc, "target", f"v2functors.{name}")
        what = f"v2functors.{name}"
        if "obj_map" not in fdoc or "hom_map" not in fdoc:
            raise ParseError(f"{what}: missing obj_map/hom_map")
        obj_map = dict(fdoc["obj_map"])
        hom_map = {}
        for row in fdoc["hom_map"]:
            if not isinstance(row, list) or len(row) != 3:
                raise ParseError(f"{what}: hom_map rows must be [u, u', tables]")
            a, b, tables = row
            try:
                source = src.hom[(a, b)]
                target = tgt.hom[(obj_map[a], obj_map[b])]
            except KeyError as err:
                raise DanglingReference(f"{what}: unknown object {err}")
            hom_map[(a, b)] = _vfunctor_from(tables, source, target, what)
        tower.v2functors[name] = V2Functor(src, tgt, obj_map, hom_map)

    unitv_cache = {}

    def unitv():
        if "u" not in unitv_cache:
            unitv_cache["u"] = unit_vcategory(base)
        return unitv_cache["u"]

    for name, ndoc in doc.get("v2nats", {}).items():
        what = f"v2nats.{name}"
        src = _resolve(tower.v2functors, ndoc, "source", what)
        tgt = _resolve(tower.v2functors, ndoc, "target", what)
        if "components" not in ndoc:
            raise ParseError(f"{what}: missing components")
        components = {}
        for row in ndoc["components"]:
            if not isinstance(row, list) or len(row) != 2:
                raise ParseError(f"{what}: component rows must be [u, tables]")
            u, tables = row
            try:
                target = src.target.hom[(src.obj_map[u], tgt.obj_map[u])]
            except KeyError as err:
                raise DanglingReference(f"{what}: unknown object {err}")
            components[u] = _vfunctor_from(tables, unitv(), target, what)
        tower.v2nats[name] = V2NatTransform(src, tgt, components)

    for name, mdoc in doc.get("modifications", {}).items():
        what = f"modifications.{name}"
        src = _resolve(tower.v2nats, mdoc, "source", what)
        tgt = _resolve(tower.v2nats, mdoc, "target", what)
        if "components" not in mdoc:
            raise ParseError(f"{what}: missing components")
        tower.modifications[name] = VModification(src, tgt,
                                                  dict(mdoc["components"]))

    for name, pdoc in doc.get("pastings", {}).items():
        what = f"pastings.{name}"
        cats = pdoc.get("categories")
        if not isinstance(cats, list) or len(cats) != 3:
            raise ParseError(f"{what}: categories must list three names")
        args = [_lookup(tower.v2categories, c, what) for c in cats]
        for k in _PASTING_FUNCTORS:
            args.append(_lookup(tower.v2functors,
                                pdoc.get("functors", {}).get(k), what))
        by_col = {}
        for k in _PASTING_NATS:
            by_col[k] = _lookup(tower.v2nats, pdoc.get("nats", {}).get(k), what)
        for k in _PASTING_MODS:
            by_col[k] = _lookup(tower.modifications,
                                pdoc.get("modifications", {}).get(k), what)
        for col in (1, 2, 3, 4):
            args.extend([by_col[f"alpha{col}"], by_col[f"beta{col}"],
                         by_col[f"gamma{col}"], by_col[f"mu{col}"],
                         by_col[f"nu{col}"]])
        tower.pastings[name] = PastingInstance(*args)

    return tower


def _v2category_from(udoc, base, what) -> V2Category:
    for k in ("objects", "hom", "comp", "identity"):
        if k not in udoc:
            raise ParseError(f"{what}: missing {k!r}")
    objects = set(udoc["objects"])
    hom = {}
    for row in udoc["hom"]:
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError(f"{what}: hom rows must be [a, b, tables]")
        a, b, tables = row
        hom[(a, b)] = _vcategory_from(tables, base, f"{what}.hom({a},{b})")
    comp = {}
    for row in udoc["comp"]:
        if not isinstance(row, list) or len(row) != 4:
            raise ParseError(f"{what}: comp rows must be [a, b, c, tables]")
        a, b, c, tables = row
        try:
            source = product_vcat(1, hom[(b, c)], hom[(a, b)])
            target = hom[(a, c)]
        except KeyError as err:
            raise DanglingReference(f"{what}: unknown object {err}")
        comp[(a, b, c)] = _vfunctor_from(tables, source, target, what)
    identity = {}
    unitv = unit_vcategory(base)
    for row in udoc["identity"]:
        if not isinstance(row, list) or len(row) != 2:
            raise ParseError(f"{what}: identity rows must be [a, tables]")
        a, tables = row
        try:
            target = hom[(a, a)]
        except KeyError as err:
            raise DanglingReference(f"{what}: unknown object {err}")
        identity[a] = _vfunctor_from(tables, unitv, target, what)
    return V2Category(base, objects, hom, comp, identity)


def _resolve(registry, doc, slot, what):
    name = doc.get(slot)
    if not isinstance(name, str):
        raise ParseError(f"{what}: {slot} must be a name")
    return _lookup(registry, name, what)


def _lookup(registry, name, what):
    if name is None:
        raise ParseError(f"{what}: missing a required name")
    if name not in registry:
        raise DanglingReference(f"{what}: no structure named {name!r}")
    return registry[name]


def _check_base_ids(base: KFoldMonoidal) -> None:
    cat = base.base
    known_m = cat.morphisms
    known_o = cat.objects
    bad = [m for m in list(cat.dom) + list(cat.cod) if m not in known_m]
    if bad:
        raise DanglingReference(f"base: unknown morphisms {sorted(set(bad))}")
    for table in base.tensor_obj_table.values():
        for key, val in table.items():
            if any(o not in known_o for o in (*key, val)):
                raise DanglingReference(f"base: unknown object in tensor row {key}")
    for table in base.tensor_mor_table.values():
        for key, val in table.items():
            if any(m not in known_m for m in (*key, val)):
                raise DanglingReference(
                    f"base: unknown morphism in tensor row {key}")
    for table in base.assoc_table.values():
        for key, val in table.items():
            if any(o not in known_o for o in key) or val not in known_m:
                raise DanglingReference(
                    f"base: unknown id in associator row {key}")
    for table in base.interchange_table.values():
        for key, val in table.items():
            if any(o not in known_o for o in key) or val not in known_m:
                raise DanglingReference(
                    f"base: unknown id in interchange row {key}")


def _check_vcat_ids(base, vc, what) -> None:
    cat = base.base
    for key, val in vc.hom.items():
        if val not in cat.objects:
            raise DanglingReference(f"{what}: hom{key} names unknown object {val!r}")
    for key, val in vc.comp.items():
        if val not in cat.morphisms:
            raise DanglingReference(
                f"{what}: comp{key} names unknown morphism {val!r}")
    for key, val in vc.identity.items():
        if val not in cat.morphisms:
            raise DanglingReference(
                f"{what}: identity[{key}] names unknown morphism {val!r}")


# -- file API --------------------------------------------------------------------

def dumps(t: Tower) -> str:
    return json.dumps(tower_to_document(t), sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Tower:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", err.lineno, err.colno)
    return document_to_tower(doc)


def save(t: Tower, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(t))


def load(path) -> Tower:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
