"""Finite categories as explicit lookup tables.

Objects and morphisms are opaque string ids.  Composition is a partial table
keyed by (second, first); an entry exists exactly for the composable pairs,
so a missing entry for a non-composable pair is the representation of
"mathematically undefined", not an error sentinel.  Every diagram check in
the higher layers eventually folds both legs down to morphism ids here and
compares them for equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    CompositionUndefined,
    EmptyChain,
    MalformedTable,
    NotParallel,
    UnknownMorphism,
    UnknownObject,
)
from .report import CheckReport, ReportBuilder

ObjId = str
MorId = str


@dataclass
class FinCategory:
    objects: set
    morphisms: set
    dom: dict
    cod: dict
    comp: dict        # (g, f) -> g∘f, keyed exactly by composable pairs
    identity: dict    # object -> its identity morphism

    def id_of(self, a: ObjId) -> MorId:
        try:
            return self.identity[a]
        except KeyError:
            raise UnknownObject(f"no identity registered for object {a!r}")

    def hom(self, a: ObjId, b: ObjId) -> list:
        """All morphisms a -> b, sorted."""
        return sorted(m for m in self.morphisms
                      if self.dom.get(m) == a and self.cod.get(m) == b)

    def composable_pairs(self) -> list:
        return sorted((g, f)
                      for g in self.morphisms for f in self.morphisms
                      if self.cod[f] == self.dom[g])


@dataclass
class FinFunctor:
    source: FinCategory
    target: FinCategory
    obj_map: dict
    mor_map: dict


@dataclass
class FinNatTransform:
    source: FinFunctor
    target: FinFunctor
    components: dict   # object of source.source -> morphism of source.target


def compose(cat: FinCategory, g: MorId, f: MorId) -> MorId:
    """Composite g∘f, i.e. f first."""
    for m in (g, f):
        if m not in cat.morphisms:
            raise UnknownMorphism(f"unknown morphism {m!r}")
    if cat.cod[f] != cat.dom[g]:
        raise CompositionUndefined(
            f"cod({f}) = {cat.cod[f]} != {cat.dom[g]} = dom({g})")
    try:
        return cat.comp[(g, f)]
    except KeyError:
        raise CompositionUndefined(f"no table entry for ({g}, {f})")


def compose_chain(cat: FinCategory, morphisms) -> MorId:
    """Left fold of compose: [h, g, f] evaluates to h∘g∘f."""
    morphisms = list(morphisms)
    if not morphisms:
        raise EmptyChain("cannot compose an empty chain")
    acc = morphisms[0]
    if acc not in cat.morphisms:
        raise UnknownMorphism(f"unknown morphism {acc!r}")
    for f in morphisms[1:]:
        acc = compose(cat, acc, f)
    return acc


def identity_functor(cat: FinCategory) -> FinFunctor:
    return FinFunctor(cat, cat,
                      {a: a for a in cat.objects},
                      {m: m for m in cat.morphisms})


# -- checkers ---------------------------------------------------------------

def _c(cat, g, f):
    """None-propagating table composition used inside diagram scans."""
    if g is None or f is None:
        return None
    return cat.comp.get((g, f))


def _require_tables(cat: FinCategory) -> None:
    if not cat.objects:
        raise MalformedTable("category has no objects")
    for m in cat.morphisms:
        if m not in cat.dom or m not in cat.cod:
            raise MalformedTable(f"morphism {m!r} missing dom/cod entry")
        if cat.dom[m] not in cat.objects or cat.cod[m] not in cat.objects:
            raise MalformedTable(f"morphism {m!r} has unknown endpoint")
    for a in cat.objects:
        if a not in cat.identity:
            raise MalformedTable(f"object {a!r} missing identity entry")
        if cat.identity[a] not in cat.morphisms:
            raise MalformedTable(f"identity of {a!r} is unknown")
    extra = set(cat.dom) - cat.morphisms
    if extra:
        raise MalformedTable(f"dom table mentions unknown morphisms {sorted(extra)}")
    extra = set(cat.identity) - cat.objects
    if extra:
        raise MalformedTable(f"identity table mentions unknown objects {sorted(extra)}")
    for (g, f), h in cat.comp.items():
        for m in (g, f, h):
            if m not in cat.morphisms:
                raise MalformedTable(f"comp entry ({g}, {f}) -> {h} mentions unknown morphism {m!r}")


def check_category(cat: FinCategory, *, all_witnesses: bool = False,
                   workers: int = 1) -> CheckReport:
    """Exhaustively verify the category axioms over the tables."""
    _require_tables(cat)
    b = ReportBuilder(all_witnesses, workers)
    objs = sorted(cat.objects)
    mors = sorted(cat.morphisms)

    def identity_boundary(a):
        i = cat.identity[a]
        if cat.dom[i] != a:
            return cat.dom[i], a
        if cat.cod[i] != a:
            return cat.cod[i], a
        return None
    b.family("identity-boundary", objs, identity_boundary)

    def composition_defined(pair):
        g, f = pair
        composable = cat.cod[f] == cat.dom[g]
        present = (g, f) in cat.comp
        if composable and not present:
            return None, f"entry for ({g}, {f})"
        if present and not composable:
            return cat.comp[(g, f)], None
        return None
    b.family("composition-defined",
             [(g, f) for g in mors for f in mors], composition_defined)

    def composition_boundary(pair):
        g, f = pair
        h = cat.comp.get((g, f))
        if h is None:
            return None
        if cat.dom[h] != cat.dom[f]:
            return cat.dom[h], cat.dom[f]
        if cat.cod[h] != cat.cod[g]:
            return cat.cod[h], cat.cod[g]
        return None
    b.family("composition-boundary", sorted(cat.comp), composition_boundary)

    def unit_left(inst):
        e, f = inst
        got = _c(cat, e, f)
        return None if got == f else (got, f)
    b.family("unit-left", [(cat.identity[cat.cod[f]], f) for f in mors],
             unit_left)

    def unit_right(inst):
        f, e = inst
        got = _c(cat, f, e)
        return None if got == f else (got, f)
    b.family("unit-right", [(f, cat.identity[cat.dom[f]]) for f in mors],
             unit_right)

    triples = sorted((h, g, f)
                     for h in mors for g in mors for f in mors
                     if cat.cod[f] == cat.dom[g] and cat.cod[g] == cat.dom[h])

    def associativity(tri):
        h, g, f = tri
        lhs = _c(cat, h, _c(cat, g, f))
        rhs = _c(cat, _c(cat, h, g), f)
        return None if lhs == rhs and lhs is not None else (lhs, rhs)
    b.family("associativity", triples, associativity)

    return b.report()


def check_functor(fun: FinFunctor, *, all_witnesses: bool = False,
                  workers: int = 1) -> CheckReport:
    """Verify a functor preserves boundaries, identities, and composites.

    Precondition: source and target already pass check_category.
    """
    src, tgt = fun.source, fun.target
    for a in src.objects:
        if a not in fun.obj_map:
            raise MalformedTable(f"object map missing entry for {a!r}")
        if fun.obj_map[a] not in tgt.objects:
            raise MalformedTable(f"object map sends {a!r} to an unknown object")
    for m in src.morphisms:
        if m not in fun.mor_map:
            raise MalformedTable(f"morphism map missing entry for {m!r}")
        if fun.mor_map[m] not in tgt.morphisms:
            raise MalformedTable(f"morphism map sends {m!r} to an unknown morphism")

    b = ReportBuilder(all_witnesses, workers)

    def boundary(f):
        img = fun.mor_map[f]
        if tgt.dom[img] != fun.obj_map[src.dom[f]]:
            return tgt.dom[img], fun.obj_map[src.dom[f]]
        if tgt.cod[img] != fun.obj_map[src.cod[f]]:
            return tgt.cod[img], fun.obj_map[src.cod[f]]
        return None
    b.family("functor-boundary", sorted(src.morphisms), boundary)

    def identities(a):
        lhs = fun.mor_map[src.identity[a]]
        rhs = tgt.identity.get(fun.obj_map[a])
        return None if lhs == rhs else (lhs, rhs)
    b.family("functor-identity", sorted(src.objects), identities)

    def composites(pair):
        g, f = pair
        lhs = fun.mor_map.get(src.comp.get((g, f)))
        rhs = _c(tgt, fun.mor_map[g], fun.mor_map[f])
        return None if lhs == rhs and lhs is not None else (lhs, rhs)
    b.family("functor-composition", src.composable_pairs(), composites)

    return b.report()


def check_natural(nat: FinNatTransform, *, all_witnesses: bool = False,
                  workers: int = 1) -> CheckReport:
    """Verify naturality squares for a transformation between parallel functors."""
    F, G = nat.source, nat.target
    if F.source is not G.source and F.source != G.source:
        raise NotParallel("functors do not share a source")
    if F.target is not G.target and F.target != G.target:
        raise NotParallel("functors do not share a target")
    src, tgt = F.source, F.target
    for a in src.objects:
        if a not in nat.components:
            raise MalformedTable(f"missing component at {a!r}")
        if nat.components[a] not in tgt.morphisms:
            raise MalformedTable(f"component at {a!r} is an unknown morphism")

    b = ReportBuilder(all_witnesses, workers)

    def boundary(a):
        t = nat.components[a]
        if tgt.dom[t] != F.obj_map[a]:
            return tgt.dom[t], F.obj_map[a]
        if tgt.cod[t] != G.obj_map[a]:
            return tgt.cod[t], G.obj_map[a]
        return None
    b.family("component-boundary", sorted(src.objects), boundary)

    def square(f):
        a, z = src.dom[f], src.cod[f]
        lhs = _c(tgt, G.mor_map[f], nat.components[a])
        rhs = _c(tgt, nat.components[z], F.mor_map[f])
        return None if lhs == rhs and lhs is not None else (lhs, rhs)
    b.family("naturality", sorted(src.morphisms), square)

    return b.report()


def product_category(c1: FinCategory, c2: FinCategory,
                     encode=lambda x, y: f"({x},{y})") -> FinCategory:
    """Componentwise product category; ids are encoded pairs."""
    objects = {encode(a, b) for a, b in product(c1.objects, c2.objects)}
    morphisms = {encode(f, g) for f, g in product(c1.morphisms, c2.morphisms)}
    dom = {encode(f, g): encode(c1.dom[f], c2.dom[g])
           for f, g in product(c1.morphisms, c2.morphisms)}
    cod = {encode(f, g): encode(c1.cod[f], c2.cod[g])
           for f, g in product(c1.morphisms, c2.morphisms)}
    comp = {}
    for (g1, f1), h1 in c1.comp.items():
        for (g2, f2), h2 in c2.comp.items():
            comp[(encode(g1, g2), encode(f1, f2))] = encode(h1, h2)
    identity = {encode(a, b): encode(c1.identity[a], c2.identity[b])
                for a, b in product(c1.objects, c2.objects)}
    return FinCategory(objects, morphisms, dom, cod, comp, identity)
