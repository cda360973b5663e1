"""Level-2 enrichment and the three-dimensional composition engine.

Structures one level up from vcat: hom-data are now enriched categories and
the compositions are enriched functors.  Axioms are checked as equalities of
whole functors (object maps and hom tables compared entry by entry), which
subsumes the object-level equations like (fg)h = f(gh).

Three composition regimes exist, written here as in the source structure:

  * along a 2-functor   -- compose_nat_along_functor, vcomp_modifications,
                           the nat/mod whiskers, hcomp_modifications_along_nat
  * along a 2-category  -- compose_v2functors, functor/nat whiskers onto
                           nats and modifications, hcomp_nats_along_category,
                           hcomp_mods_along_category
  * exchange_suite      -- the four closing identities tying them together

Every operation with more than one defining route computes all routes and
raises AgreementFailure when their tables differ: on valid input that is an
engine bug, on invalid input a diagnostic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import (
    AgreementFailure,
    IndexOutOfRange,
    InvalidPasting,
    KernelError,
    LowerLevelInvalid,
    MalformedTable,
    NotComposable,
    NotParallel,
)
from .fincat import compose
from .kfold import KFoldMonoidal, check_kfold
from .report import CheckReport, ReportBuilder, cached_report
from .vcat import (
    VFunctor,
    assoc_vcat,
    check_vcategory,
    check_vfunctor,
    compose_vfunctor,
    identity_vfunctor,
    interchange_vcat,
    pair,
    product_vcat,
    product_vfunctor,
    relabel_vcategory,
    unit_intro_left,
    unit_intro_right,
    unit_pair_intro,
    unit_relabel_left,
    unit_relabel_right,
    unit_vcategory,
)


@dataclass
class V2Category:
    base: KFoldMonoidal
    objects: set
    hom: dict        # (a, b) -> VCategory
    comp: dict       # (a, b, c) -> VFunctor hom(b,c) x_1 hom(a,b) -> hom(a,c)
    identity: dict   # a -> VFunctor I -> hom(a, a)

    def one_cells(self, a, b):
        return sorted(self.hom[(a, b)].objects)

    def compose1(self, a, b, c, g, f):
        """Composite 1-cell of g: b -> c after f: a -> b."""
        return self.comp[(a, b, c)].obj_map[pair(g, f)]

    def unit1(self, a):
        return self.identity[a].obj_map["0"]


@dataclass
class V2Functor:
    source: V2Category
    target: V2Category
    obj_map: dict
    hom_map: dict    # (u, u') -> VFunctor


@dataclass
class V2NatTransform:
    source: V2Functor
    target: V2Functor
    components: dict  # u -> VFunctor I -> hom_W(Tu, Su)


@dataclass
class VModification:
    source: V2NatTransform
    target: V2NatTransform
    components: dict  # u -> base morphism I -> hom_W(Tu,Su)(q, q^)


def _q(nat: V2NatTransform, u) -> str:
    """Object part of a transformation's component at u."""
    return nat.components[u].obj_map["0"]


# -- diffs for witness production ----------------------------------------------

def _diff_vfunctor(x: VFunctor, y: VFunctor):
    for k in sorted(set(x.obj_map) | set(y.obj_map)):
        if x.obj_map.get(k) != y.obj_map.get(k):
            return f"obj[{k}]", x.obj_map.get(k), y.obj_map.get(k)
    for k in sorted(set(x.hom_map) | set(y.hom_map)):
        if x.hom_map.get(k) != y.hom_map.get(k):
            return f"hom[{k}]", x.hom_map.get(k), y.hom_map.get(k)
    return None


def _diff_nat(x: V2NatTransform, y: V2NatTransform):
    for u in sorted(set(x.components) | set(y.components)):
        d = _diff_vfunctor(x.components[u], y.components[u])
        if d is not None:
            return f"component[{u}].{d[0]}", d[1], d[2]
    return None


def _diff_mod(x: VModification, y: VModification):
    for u in sorted(set(x.components) | set(y.components)):
        if x.components.get(u) != y.components.get(u):
            return f"component[{u}]", x.components.get(u), y.components.get(u)
    return None


# -- gates ----------------------------------------------------------------------

def _require_v2category(u: V2Category) -> None:
    rep = cached_report(u, check_v2category)
    if not rep.ok:
        raise LowerLevelInvalid("level-2 category failed its checker", rep)


def _require_v2functor(t: V2Functor) -> None:
    rep = cached_report(t, check_v2functor)
    if not rep.ok:
        raise LowerLevelInvalid("level-2 functor failed its checker", rep)


def _require_v2nat(a: V2NatTransform) -> None:
    rep = cached_report(a, check_v2nat)
    if not rep.ok:
        raise LowerLevelInvalid("level-2 transformation failed its checker", rep)


# -- checkers --------------------------------------------------------------------

def check_v2category(u: V2Category, *, all_witnesses: bool = False,
                     workers: int = 1) -> CheckReport:
    base = u.base
    if base.n < 2:
        raise MalformedTable("level-2 structure needs at least two tensors")
    base_rep = cached_report(base, check_kfold)
    if not base_rep.ok:
        raise LowerLevelInvalid("tensor structure failed its checker", base_rep)
    if not u.objects:
        raise MalformedTable("level-2 category has no objects")
    objs = sorted(u.objects)
    for key in iproduct(objs, repeat=2):
        if key not in u.hom:
            raise MalformedTable(f"hom entry {key} missing")
    for key in iproduct(objs, repeat=3):
        if key not in u.comp:
            raise MalformedTable(f"composition functor {key} missing")
    for a in objs:
        if a not in u.identity:
            raise MalformedTable(f"identity functor for {a!r} missing")

    b = ReportBuilder(all_witnesses, workers)

    ok = True
    for key in iproduct(objs, repeat=2):
        rep = cached_report(u.hom[key], check_vcategory)
        if not rep.ok:
            b.merge(rep, prefix=f"hom{key}:")
            ok = False
    if not ok:
        return b.report()

    unitv = unit_vcategory(base)

    def comp_shape(tri):
        x, y, z = tri
        m2 = u.comp[tri]
        want_src = product_vcat(1, u.hom[(y, z)], u.hom[(x, y)])
        if m2.source != want_src:
            return "source", "expected product of homs"
        if m2.target != u.hom[(x, z)]:
            return "target", f"expected hom({x},{z})"
        return None
    b.family("composition-functor-shape", [t for t in iproduct(objs, repeat=3)],
             comp_shape)

    def ident_shape(a):
        j2 = u.identity[a]
        if j2.source != unitv:
            return "source", "expected the unit enriched category"
        if j2.target != u.hom[(a, a)]:
            return "target", f"expected hom({a},{a})"
        return None
    b.family("identity-functor-shape", objs, ident_shape)

    if not b.report().ok:
        return b.report()

    for key in iproduct(objs, repeat=3):
        rep = cached_report(u.comp[key], check_vfunctor)
        if not rep.ok:
            b.merge(rep, prefix=f"composition-functor{key}:")
            ok = False
    for a in objs:
        rep = cached_report(u.identity[a], check_vfunctor)
        if not rep.ok:
            b.merge(rep, prefix=f"identity-functor({a}):")
            ok = False
    if not ok:
        return b.report()

    def pentagon(quad):
        x, y, z, w = quad
        lhs = compose_vfunctor(
            u.comp[(x, y, w)],
            product_vfunctor(1, u.comp[(y, z, w)],
                             identity_vfunctor(u.hom[(x, y)])))
        rhs = compose_vfunctor(
            u.comp[(x, z, w)],
            compose_vfunctor(
                product_vfunctor(1, identity_vfunctor(u.hom[(z, w)]),
                                 u.comp[(x, y, z)]),
                assoc_vcat(1, u.hom[(z, w)], u.hom[(y, z)], u.hom[(x, y)])))
        d = _diff_vfunctor(lhs, rhs)
        return None if d is None else (f"{d[0]}={d[1]}", f"{d[0]}={d[2]}")

    b.family("pentagon", [t for t in iproduct(objs, repeat=4)], pentagon)

    def unit_left(xy):
        x, y = xy
        lhs = compose_vfunctor(
            u.comp[(x, y, y)],
            product_vfunctor(1, u.identity[y],
                             identity_vfunctor(u.hom[(x, y)])))
        rhs = unit_relabel_left(1, u.hom[(x, y)])
        d = _diff_vfunctor(lhs, rhs)
        return None if d is None else (f"{d[0]}={d[1]}", f"{d[0]}={d[2]}")
    b.family("unit-left", [t for t in iproduct(objs, repeat=2)], unit_left)

    def unit_right(xy):
        x, y = xy
        lhs = compose_vfunctor(
            u.comp[(x, x, y)],
            product_vfunctor(1, identity_vfunctor(u.hom[(x, y)]),
                             u.identity[x]))
        rhs = unit_relabel_right(1, u.hom[(x, y)])
        d = _diff_vfunctor(lhs, rhs)
        return None if d is None else (f"{d[0]}={d[1]}", f"{d[0]}={d[2]}")
    b.family("unit-right", [t for t in iproduct(objs, repeat=2)], unit_right)

    # Consequence diagrams: implied by functoriality, replayed directly as an
    # engine self-test.
    cat = base.base

    def interchange_square(inst):
        (x, y, z), (h, k, m), (f, g, l) = inst
        hc = u.hom[(y, z)]
        hb = u.hom[(x, y)]
        ha = u.hom[(x, z)]
        m2 = u.comp[(x, y, z)]
        hf = m2.obj_map[pair(h, f)]
        kg = m2.obj_map[pair(k, g)]
        ml = m2.obj_map[pair(m, l)]
        lhs = cat.comp.get((ha.comp[(hf, kg, ml)], base.tensor_mor_table[1].get(
            (m2.hom_map[(pair(k, g), pair(m, l))],
             m2.hom_map[(pair(h, f), pair(k, g))]))))
        eta = base.interchange_table[(1, 2)].get(
            (hc.hom[(k, m)], hb.hom[(g, l)], hc.hom[(h, k)], hb.hom[(f, g)]))
        mid = base.tensor_mor_table[2].get(
            (hc.comp[(h, k, m)], hb.comp[(f, g, l)]))
        rhs = cat.comp.get((m2.hom_map[(pair(h, f), pair(m, l))],
                            cat.comp.get((mid, eta))))
        return None if lhs == rhs and lhs is not None else (lhs, rhs)

    square_insts = []
    for tri in iproduct(objs, repeat=3):
        x, y, z = tri
        cells_bc = u.one_cells(y, z)
        cells_ab = u.one_cells(x, y)
        for hkm in iproduct(cells_bc, repeat=3):
            for fgl in iproduct(cells_ab, repeat=3):
                square_insts.append((tri, hkm, fgl))
    b.family("consequence-interchange", square_insts, interchange_square)

    def unit_product(inst):
        (x, y, z), g, f = inst
        m2 = u.comp[(x, y, z)]
        gf = m2.obj_map[pair(g, f)]
        lhs = u.hom[(x, z)].identity[gf]
        rhs = cat.comp.get((m2.hom_map[(pair(g, f), pair(g, f))],
                            base.tensor_mor_table[2].get(
                                (u.hom[(y, z)].identity[g],
                                 u.hom[(x, y)].identity[f]))))
        return None if lhs == rhs and lhs is not None else (lhs, rhs)
    unit_insts = [(tri, g, f)
                  for tri in iproduct(objs, repeat=3)
                  for g in u.one_cells(tri[1], tri[2])
                  for f in u.one_cells(tri[0], tri[1])]
    b.family("consequence-units", unit_insts, unit_product)

    def j_component(a):
        lhs = u.identity[a].hom_map[("0", "0")]
        rhs = u.hom[(a, a)].identity[u.unit1(a)]
        return None if lhs == rhs else (lhs, rhs)
    b.family("consequence-identity", objs, j_component)

    return b.report()


def check_v2functor(t: V2Functor, *, all_witnesses: bool = False,
                    workers: int = 1) -> CheckReport:
    _require_v2category(t.source)
    _require_v2category(t.target)
    src, tgt = t.source, t.target
    objs = sorted(src.objects)
    for a in objs:
        if a not in t.obj_map or t.obj_map[a] not in tgt.objects:
            raise MalformedTable(f"object map entry for {a!r} missing or unknown")
    for key in iproduct(objs, repeat=2):
        if key not in t.hom_map:
            raise MalformedTable(f"hom functor {key} missing")

    b = ReportBuilder(all_witnesses, workers)

    def shape(key):
        x, y = key
        vf = t.hom_map[key]
        if vf.source != src.hom[key]:
            return "source", f"expected hom({x},{y})"
        if vf.target != tgt.hom[(t.obj_map[x], t.obj_map[y])]:
            return "target", "expected image hom"
        return None
    b.family("hom-functor-shape", [k for k in iproduct(objs, repeat=2)], shape)
    if not b.report().ok:
        return b.report()

    ok = True
    for key in iproduct(objs, repeat=2):
        rep = cached_report(t.hom_map[key], check_vfunctor)
        if not rep.ok:
            b.merge(rep, prefix=f"hom-functor{key}:")
            ok = False
    if not ok:
        return b.report()

    def square(tri):
        x, y, z = tri
        lhs = compose_vfunctor(t.hom_map[(x, z)], src.comp[tri])
        rhs = compose_vfunctor(
            tgt.comp[(t.obj_map[x], t.obj_map[y], t.obj_map[z])],
            product_vfunctor(1, t.hom_map[(y, z)], t.hom_map[(x, y)]))
        d = _diff_vfunctor(lhs, rhs)
        return None if d is None else (f"{d[0]}={d[1]}", f"{d[0]}={d[2]}")
    b.family("composition-square", [t3 for t3 in iproduct(objs, repeat=3)],
             square)

    def unit(a):
        lhs = compose_vfunctor(t.hom_map[(a, a)], src.identity[a])
        rhs = tgt.identity[t.obj_map[a]]
        d = _diff_vfunctor(lhs, rhs)
        return None if d is None else (f"{d[0]}={d[1]}", f"{d[0]}={d[2]}")
    b.family("unit-triangle", objs, unit)

    return b.report()


def check_v2nat(a: V2NatTransform, *, all_witnesses: bool = False,
                workers: int = 1) -> CheckReport:
    t, s = a.source, a.target
    if t.source != s.source or t.target != s.target:
        raise NotParallel("level-2 functors are not parallel")
    _require_v2functor(t)
    _require_v2functor(s)
    u, w = t.source, t.target
    objs = sorted(u.objects)
    for x in objs:
        if x not in a.components:
            raise MalformedTable(f"component at {x!r} missing")
    unitv = unit_vcategory(u.base)

    b = ReportBuilder(all_witnesses, workers)

    def shape(x):
        comp = a.components[x]
        if comp.source != unitv:
            return "source", "expected the unit enriched category"
        if comp.target != w.hom[(t.obj_map[x], s.obj_map[x])]:
            return "target", "expected hom(Tx, Sx)"
        return None
    b.family("component-shape", objs, shape)
    if not b.report().ok:
        return b.report()

    ok = True
    for x in objs:
        rep = cached_report(a.components[x], check_vfunctor)
        if not rep.ok:
            b.merge(rep, prefix=f"component({x}):")
            ok = False
    if not ok:
        return b.report()

    def naturality(key):
        x, y = key
        tx, ty = t.obj_map[x], t.obj_map[y]
        sx, sy = s.obj_map[x], s.obj_map[y]
        lhs = compose_vfunctor(
            w.comp[(tx, ty, sy)],
            compose_vfunctor(
                product_vfunctor(1, a.components[y], t.hom_map[key]),
                unit_intro_left(1, u.hom[key])))
        rhs = compose_vfunctor(
            w.comp[(tx, sx, sy)],
            compose_vfunctor(
                product_vfunctor(1, s.hom_map[key], a.components[x]),
                unit_intro_right(1, u.hom[key])))
        d = _diff_vfunctor(lhs, rhs)
        return None if d is None else (f"{d[0]}={d[1]}", f"{d[0]}={d[2]}")
    b.family("naturality", [k for k in iproduct(objs, repeat=2)], naturality)

    return b.report()


def check_modification(m: VModification, *, all_witnesses: bool = False,
                       workers: int = 1) -> CheckReport:
    th, ph = m.source, m.target
    if th.source != ph.source or th.target != ph.target:
        raise NotParallel("level-2 transformations are not parallel")
    _require_v2nat(th)
    _require_v2nat(ph)
    t, s = th.source, th.target
    u, w = t.source, t.target
    base = u.base
    cat = base.base
    objs = sorted(u.objects)
    for x in objs:
        if x not in m.components or m.components[x] not in cat.morphisms:
            raise MalformedTable(f"component at {x!r} missing or unknown")

    b = ReportBuilder(all_witnesses, workers)

    def boundary(x):
        mor = m.components[x]
        if cat.dom[mor] != base.unit:
            return cat.dom[mor], base.unit
        want = w.hom[(t.obj_map[x], s.obj_map[x])].hom[(_q(th, x), _q(ph, x))]
        if cat.cod[mor] != want:
            return cat.cod[mor], want
        return None
    b.family("component-boundary", objs, boundary)
    if not b.report().ok:
        return b.report()

    def square(inst):
        (x, y), f, g = inst
        tx, ty = t.obj_map[x], t.obj_map[y]
        sx, sy = s.obj_map[x], s.obj_map[y]
        tf = t.hom_map[(x, y)].obj_map[f]
        tg = t.hom_map[(x, y)].obj_map[g]
        sf = s.hom_map[(x, y)].obj_map[f]
        sg = s.hom_map[(x, y)].obj_map[g]
        lhs = cat.comp.get((
            w.comp[(tx, ty, sy)].hom_map[
                (pair(_q(th, y), tf), pair(_q(ph, y), tg))],
            base.tensor_mor_table[2].get(
                (m.components[y], t.hom_map[(x, y)].hom_map[(f, g)]))))
        rhs = cat.comp.get((
            w.comp[(tx, sx, sy)].hom_map[
                (pair(sf, _q(th, x)), pair(sg, _q(ph, x)))],
            base.tensor_mor_table[2].get(
                (s.hom_map[(x, y)].hom_map[(f, g)], m.components[x]))))
        return None if lhs == rhs and lhs is not None else (lhs, rhs)
    insts = [((x, y), f, g)
             for x in objs for y in objs
             for f in u.one_cells(x, y) for g in u.one_cells(x, y)]
    b.family("modification-square", insts, square)

    return b.report()


# -- composition along a 2-functor ------------------------------------------------

def compose_nat_along_functor(b: V2NatTransform,
                              g: V2NatTransform) -> V2NatTransform:
    """g then b, sharing the middle 2-functor."""
    if g.target != b.source:
        raise NotComposable("transformations do not share the middle functor")
    t, r = g.source, b.target
    w = t.target
    intro = unit_pair_intro(1, w.base)
    components = {}
    for u in sorted(t.source.objects):
        tu, su, ru = t.obj_map[u], g.target.obj_map[u], r.obj_map[u]
        components[u] = compose_vfunctor(
            w.comp[(tu, su, ru)],
            compose_vfunctor(
                product_vfunctor(1, b.components[u], g.components[u]), intro))
    return V2NatTransform(t, r, components)


def id_nat(t: V2Functor) -> V2NatTransform:
    """Identity transformation: the component at u is the identity functor
    of the image object."""
    return V2NatTransform(
        t, t, {u: t.target.identity[t.obj_map[u]] for u in t.source.objects})


def vcomp_modifications(n: VModification, m: VModification) -> VModification:
    """m then n, through vertical composition in each hom category."""
    if m.target != n.source:
        raise NotComposable("modifications do not share the middle transformation")
    al, sg = m.source, n.target
    t, s = al.source, al.target
    w = t.target
    base = w.base
    cat = base.base
    components = {}
    for u in sorted(t.source.objects):
        homv = w.hom[(t.obj_map[u], s.obj_map[u])]
        components[u] = compose(
            cat, homv.comp[(_q(al, u), _q(m.target, u), _q(sg, u))],
            base.tensor_mor(1, n.components[u], m.components[u]))
    return VModification(al, sg, components)


def id_modification(a: V2NatTransform) -> VModification:
    """Identity modification: component at u is the identity element of the
    component's object part."""
    t, s = a.source, a.target
    w = t.target
    components = {}
    for u in sorted(t.source.objects):
        homv = w.hom[(t.obj_map[u], s.obj_map[u])]
        components[u] = homv.identity[_q(a, u)]
    return VModification(a, a, components)


def whisker_nat_mod_left(g: V2NatTransform, m: VModification) -> VModification:
    """Whisker a transformation g on the left of modification m (g * m)."""
    ps = m.source
    if ps.target != g.source:
        raise NotComposable("whisker frames do not match")
    f_fun, g_fun = ps.source, ps.target
    h_fun = g.target
    w = f_fun.target
    base = w.base
    cat = base.base
    components = {}
    for u in sorted(f_fun.source.objects):
        fu, gu, hu = f_fun.obj_map[u], g_fun.obj_map[u], h_fun.obj_map[u]
        qc = _q(g, u)
        key = (pair(qc, _q(ps, u)), pair(qc, _q(m.target, u)))
        j_qc = w.hom[(gu, hu)].identity[qc]
        components[u] = compose(
            cat, w.comp[(fu, gu, hu)].hom_map[key],
            base.tensor_mor(2, j_qc, m.components[u]))
    return VModification(compose_nat_along_functor(g, ps),
                         compose_nat_along_functor(g, m.target), components)


def whisker_nat_mod_right(m: VModification, r: V2NatTransform) -> VModification:
    """Whisker a transformation r on the right of modification m (m * r)."""
    ps = m.source
    if r.target != ps.source:
        raise NotComposable("whisker frames do not match")
    e_fun = r.source
    f_fun, g_fun = ps.source, ps.target
    w = f_fun.target
    base = w.base
    cat = base.base
    components = {}
    for u in sorted(e_fun.source.objects):
        eu, fu, gu = e_fun.obj_map[u], f_fun.obj_map[u], g_fun.obj_map[u]
        qb = _q(r, u)
        key = (pair(_q(ps, u), qb), pair(_q(m.target, u), qb))
        j_qb = w.hom[(eu, fu)].identity[qb]
        components[u] = compose(
            cat, w.comp[(eu, fu, gu)].hom_map[key],
            base.tensor_mor(2, m.components[u], j_qb))
    return VModification(compose_nat_along_functor(ps, r),
                         compose_nat_along_functor(m.target, r), components)


def hcomp_modifications_along_nat(n: VModification,
                                  m: VModification) -> VModification:
    """Horizontal composite n * m across a shared middle 2-functor.

    Computes the central formula plus both whisker factorizations
    (n.target * m) o (n * m.source) and (n * m.target) o (n.source * m), and
    insists all three agree.
    """
    if m.source.target != n.source.source:
        raise NotComposable("modifications are not horizontally adjacent")
    f_fun = m.source.source
    g_fun = m.source.target
    h_fun = n.source.target
    w = f_fun.target
    base = w.base
    cat = base.base
    central = {}
    for u in sorted(f_fun.source.objects):
        fu, gu, hu = f_fun.obj_map[u], g_fun.obj_map[u], h_fun.obj_map[u]
        key = (pair(_q(n.source, u), _q(m.source, u)),
               pair(_q(n.target, u), _q(m.target, u)))
        central[u] = compose(
            cat, w.comp[(fu, gu, hu)].hom_map[key],
            base.tensor_mor(2, n.components[u], m.components[u]))
    way1 = vcomp_modifications(whisker_nat_mod_left(n.target, m),
                               whisker_nat_mod_right(n, m.source))
    way2 = vcomp_modifications(whisker_nat_mod_right(n, m.target),
                               whisker_nat_mod_left(n.source, m))
    for label, other in (("whisker-right-then-left", way1),
                         ("whisker-left-then-right", way2)):
        for u in central:
            if central[u] != other.components[u]:
                raise AgreementFailure(
                    f"central and {label} routes differ at {u}: "
                    f"{central[u]} != {other.components[u]}")
    return VModification(
        compose_nat_along_functor(n.source, m.source),
        compose_nat_along_functor(n.target, m.target), central)


# -- composition along a 2-category -----------------------------------------------

def compose_v2functors(s: V2Functor, t: V2Functor) -> V2Functor:
    """s after t: composed object maps, composed hom functors."""
    if t.target != s.source:
        raise NotComposable("functor frames do not match")
    obj_map = {u: s.obj_map[t.obj_map[u]] for u in t.source.objects}
    hom_map = {}
    for key in t.hom_map:
        x, y = key
        hom_map[key] = compose_vfunctor(
            s.hom_map[(t.obj_map[x], t.obj_map[y])], t.hom_map[key])
    return V2Functor(t.source, s.target, obj_map, hom_map)


def identity_v2functor(u: V2Category) -> V2Functor:
    return V2Functor(u, u, {x: x for x in u.objects},
                     {key: identity_vfunctor(u.hom[key])
                      for key in u.hom})


def whisker_functor_nat(g: V2Functor, a: V2NatTransform) -> V2NatTransform:
    """Post-compose a transformation with a 2-functor (g a)."""
    if a.source.target != g.source:
        raise NotComposable("whisker frames do not match")
    f_fun, h_fun = a.source, a.target
    components = {}
    for u in sorted(f_fun.source.objects):
        components[u] = compose_vfunctor(
            g.hom_map[(f_fun.obj_map[u], h_fun.obj_map[u])], a.components[u])
    return V2NatTransform(compose_v2functors(g, f_fun),
                          compose_v2functors(g, h_fun), components)


def whisker_nat_functor(g: V2NatTransform, h: V2Functor) -> V2NatTransform:
    """Pre-compose a transformation with a 2-functor (g h): reindexing."""
    if h.target != g.source.source:
        raise NotComposable("whisker frames do not match")
    components = {u: g.components[h.obj_map[u]] for u in h.source.objects}
    return V2NatTransform(compose_v2functors(g.source, h),
                          compose_v2functors(g.target, h), components)


def hcomp_nats_along_category(g: V2NatTransform,
                              a: V2NatTransform) -> V2NatTransform:
    """Horizontal composite g a across the shared middle 2-category.

    Both whisker factorizations are computed and must agree table-exactly.
    """
    if a.source.target != g.source.source:
        raise NotComposable("transformations are not horizontally adjacent")
    way1 = compose_nat_along_functor(
        whisker_nat_functor(g, a.target), whisker_functor_nat(g.source, a))
    way2 = compose_nat_along_functor(
        whisker_functor_nat(g.target, a), whisker_nat_functor(g, a.source))
    d = _diff_nat(way1, way2)
    if d is not None:
        raise AgreementFailure(
            f"two routes for the horizontal composite differ at {d[0]}: "
            f"{d[1]} != {d[2]}")
    return way1


def whisker_functor_mod(k: V2Functor, m: VModification) -> VModification:
    """Post-compose a modification with a 2-functor (k m)."""
    al = m.source
    if al.source.target != k.source:
        raise NotComposable("whisker frames do not match")
    f_fun, h_fun = al.source, al.target
    cat = k.target.base.base
    components = {}
    for u in sorted(f_fun.source.objects):
        hom_vf = k.hom_map[(f_fun.obj_map[u], h_fun.obj_map[u])]
        components[u] = compose(
            cat, hom_vf.hom_map[(_q(al, u), _q(m.target, u))],
            m.components[u])
    return VModification(whisker_functor_nat(k, al),
                         whisker_functor_nat(k, m.target), components)


def whisker_mod_functor(n: VModification, f: V2Functor) -> VModification:
    """Pre-compose a modification with a 2-functor (n f): reindexing."""
    ga = n.source
    if f.target != ga.source.source:
        raise NotComposable("whisker frames do not match")
    components = {u: n.components[f.obj_map[u]] for u in f.source.objects}
    return VModification(whisker_nat_functor(ga, f),
                         whisker_nat_functor(n.target, f), components)


def whisker_nat_mod_along_category(r: V2NatTransform,
                                   m: VModification) -> VModification:
    """r m: a transformation whiskered onto a modification across the middle
    2-category; defined two ways, both computed."""
    al = m.source
    if al.source.target != r.source.source:
        raise NotComposable("whisker frames do not match")
    f_fun, h_fun = al.source, al.target
    g_fun, k_fun = r.source, r.target
    way1 = whisker_nat_mod_right(whisker_functor_mod(k_fun, m),
                                 whisker_nat_functor(r, f_fun))
    way2 = whisker_nat_mod_left(whisker_nat_functor(r, h_fun),
                                whisker_functor_mod(g_fun, m))
    d = _diff_mod(way1, way2)
    if d is not None:
        raise AgreementFailure(
            f"two routes for the nat-onto-mod whisker differ at {d[0]}: "
            f"{d[1]} != {d[2]}")
    return VModification(hcomp_nats_along_category(r, al),
                         hcomp_nats_along_category(r, m.target),
                         way1.components)


def whisker_mod_nat_along_category(n: VModification,
                                   a: V2NatTransform) -> VModification:
    """n a: a modification whiskered onto a transformation across the middle
    2-category; defined two ways, both computed."""
    ga = n.source
    if a.source.target != ga.source.source:
        raise NotComposable("whisker frames do not match")
    f_fun, h_fun = a.source, a.target
    g_fun, k_fun = ga.source, ga.target
    way1 = whisker_nat_mod_right(whisker_mod_functor(n, h_fun),
                                 whisker_functor_nat(g_fun, a))
    way2 = whisker_nat_mod_left(whisker_functor_nat(k_fun, a),
                                whisker_mod_functor(n, f_fun))
    d = _diff_mod(way1, way2)
    if d is not None:
        raise AgreementFailure(
            f"two routes for the mod-onto-nat whisker differ at {d[0]}: "
            f"{d[1]} != {d[2]}")
    return VModification(hcomp_nats_along_category(ga, a),
                         hcomp_nats_along_category(n.target, a),
                         way1.components)


def hcomp_mods_along_category(n: VModification,
                              m: VModification) -> VModification:
    """Horizontal composite n m across the shared middle 2-category.

    Four routes: the two factorizations through whiskers along the
    2-category, and the two factorizations through a common 2-functor.
    All must agree table-exactly.
    """
    al, bt = m.source, m.target
    ga, rh = n.source, n.target
    if al.source.target != ga.source.source:
        raise NotComposable("modifications are not horizontally adjacent")
    f_fun, h_fun = al.source, al.target
    g_fun, k_fun = ga.source, ga.target
    way1 = vcomp_modifications(whisker_nat_mod_along_category(rh, m),
                               whisker_mod_nat_along_category(n, al))
    way2 = vcomp_modifications(whisker_mod_nat_along_category(n, bt),
                               whisker_nat_mod_along_category(ga, m))
    way3 = hcomp_modifications_along_nat(whisker_mod_functor(n, h_fun),
                                         whisker_functor_mod(g_fun, m))
    way4 = hcomp_modifications_along_nat(whisker_functor_mod(k_fun, m),
                                         whisker_mod_functor(n, f_fun))
    for label, other in (("via-target-whiskers", way2),
                         ("via-common-functor-upper", way3),
                         ("via-common-functor-lower", way4)):
        d = _diff_mod(way1, other)
        if d is not None:
            raise AgreementFailure(
                f"routes for the horizontal composite differ ({label}) "
                f"at {d[0]}: {d[1]} != {d[2]}")
    return VModification(hcomp_nats_along_category(ga, al),
                         hcomp_nats_along_category(rh, bt),
                         way1.components)


# -- the exchange suite -------------------------------------------------------------

@dataclass
class PastingInstance:
    """The closing two-column pasting: three parallel 2-functors per column
    with two stacked modifications in each of the four cells."""
    cat_u: V2Category
    cat_v: V2Category
    cat_w: V2Category
    f: V2Functor
    h: V2Functor
    p: V2Functor
    g: V2Functor
    k: V2Functor
    q: V2Functor
    alpha1: V2NatTransform
    beta1: V2NatTransform
    gamma1: V2NatTransform
    mu1: VModification
    nu1: VModification
    alpha2: V2NatTransform
    beta2: V2NatTransform
    gamma2: V2NatTransform
    mu2: VModification
    nu2: VModification
    alpha3: V2NatTransform
    beta3: V2NatTransform
    gamma3: V2NatTransform
    mu3: VModification
    nu3: VModification
    alpha4: V2NatTransform
    beta4: V2NatTransform
    gamma4: V2NatTransform
    mu4: VModification
    nu4: VModification


def _check_frames(p: PastingInstance) -> None:
    for fun, (src, tgt) in ((p.f, (p.cat_u, p.cat_v)),
                            (p.h, (p.cat_u, p.cat_v)),
                            (p.p, (p.cat_u, p.cat_v)),
                            (p.g, (p.cat_v, p.cat_w)),
                            (p.k, (p.cat_v, p.cat_w)),
                            (p.q, (p.cat_v, p.cat_w))):
        if fun.source != src or fun.target != tgt:
            raise InvalidPasting("a 2-functor has the wrong frame")
    columns = ((p.alpha1, p.beta1, p.gamma1, p.mu1, p.nu1, p.f, p.h),
               (p.alpha2, p.beta2, p.gamma2, p.mu2, p.nu2, p.h, p.p),
               (p.alpha3, p.beta3, p.gamma3, p.mu3, p.nu3, p.g, p.k),
               (p.alpha4, p.beta4, p.gamma4, p.mu4, p.nu4, p.k, p.q))
    for al, bt, ga, mu, nu, src, tgt in columns:
        for nat in (al, bt, ga):
            if nat.source != src or nat.target != tgt:
                raise InvalidPasting("a transformation has the wrong frame")
        if mu.source != al or mu.target != bt:
            raise InvalidPasting("a modification has the wrong frame")
        if nu.source != bt or nu.target != ga:
            raise InvalidPasting("a modification has the wrong frame")


def exchange_suite(p: PastingInstance, *, all_witnesses: bool = False,
                   workers: int = 1) -> CheckReport:
    """Evaluate all four closing exchange identities on one pasting.

    Route disagreements inside the intermediate operations surface as
    witnesses rather than exceptions so a corrupted instance still yields a
    diagnosable report.
    """
    _check_frames(p)
    b = ReportBuilder(all_witnesses, workers)

    def guard(name, fn, diff):
        def run(_):
            try:
                lhs, rhs = fn()
            except KernelError as err:
                return f"<error: {err}>", None
            d = diff(lhs, rhs)
            return None if d is None else (f"{d[0]}={d[1]}", f"{d[0]}={d[2]}")
        b.family(name, [("pasting",)], run)

    guard("exchange-1",
          lambda: (compose_nat_along_functor(
                       hcomp_nats_along_category(p.alpha4, p.alpha2),
                       hcomp_nats_along_category(p.alpha3, p.alpha1)),
                   hcomp_nats_along_category(
                       compose_nat_along_functor(p.alpha4, p.alpha3),
                       compose_nat_along_functor(p.alpha2, p.alpha1))),
          _diff_nat)

    guard("exchange-2",
          lambda: (hcomp_modifications_along_nat(
                       vcomp_modifications(p.nu2, p.mu2),
                       vcomp_modifications(p.nu1, p.mu1)),
                   vcomp_modifications(
                       hcomp_modifications_along_nat(p.nu2, p.nu1),
                       hcomp_modifications_along_nat(p.mu2, p.mu1))),
          _diff_mod)

    guard("exchange-3",
          lambda: (vcomp_modifications(
                       hcomp_mods_along_category(p.nu3, p.nu1),
                       hcomp_mods_along_category(p.mu3, p.mu1)),
                   hcomp_mods_along_category(
                       vcomp_modifications(p.nu3, p.mu3),
                       vcomp_modifications(p.nu1, p.mu1))),
          _diff_mod)

    guard("exchange-4",
          lambda: (hcomp_modifications_along_nat(
                       hcomp_mods_along_category(p.mu4, p.mu2),
                       hcomp_mods_along_category(p.mu3, p.mu1)),
                   hcomp_mods_along_category(
                       hcomp_modifications_along_nat(p.mu4, p.mu3),
                       hcomp_modifications_along_nat(p.mu2, p.mu1))),
          _diff_mod)

    return b.report()


# -- products and units --------------------------------------------------------------

def product_v2cat(i: int, u: V2Category, w: V2Category) -> V2Category:
    """The i-th product of level-2 structures: cartesian objects, hom
    categories taken with the (i+1)-th level-1 product, composition routed
    through the level-1 interchange."""
    if u.base is not w.base and u.base != w.base:
        raise MalformedTable("structures live over different bases")
    base = u.base
    if not 1 <= i <= base.n - 2:
        raise IndexOutOfRange(
            f"level-2 product index {i} needs tensor {i + 2} <= n")
    uo, wo = sorted(u.objects), sorted(w.objects)
    objects = {pair(a, b) for a in uo for b in wo}
    hom = {}
    for (a, b) in iproduct(uo, wo):
        for (a2, b2) in iproduct(uo, wo):
            hom[(pair(a, b), pair(a2, b2))] = product_vcat(
                i + 1, u.hom[(a, a2)], w.hom[(b, b2)])
    comp = {}
    for (a, b), (a2, b2), (a3, b3) in iproduct(iproduct(uo, wo), repeat=3):
        eta = interchange_vcat(1, i + 1,
                               u.hom[(a2, a3)], w.hom[(b2, b3)],
                               u.hom[(a, a2)], w.hom[(b, b2)])
        both = product_vfunctor(i + 1, u.comp[(a, a2, a3)],
                                w.comp[(b, b2, b3)])
        comp[(pair(a, b), pair(a2, b2), pair(a3, b3))] = \
            compose_vfunctor(both, eta)
    identity = {}
    intro = unit_pair_intro(i + 1, base)
    for (a, b) in iproduct(uo, wo):
        identity[pair(a, b)] = compose_vfunctor(
            product_vfunctor(i + 1, u.identity[a], w.identity[b]), intro)
    return V2Category(base, objects, hom, comp, identity)


def unit_v2category(base: KFoldMonoidal) -> V2Category:
    """One object, hom the unit enriched category, everything collapsed."""
    unitv = unit_vcategory(base)
    e = base.base.identity[base.unit]
    m2 = VFunctor(product_vcat(1, unitv, unitv), unitv,
                  {pair("0", "0"): "0"},
                  {(pair("0", "0"), pair("0", "0")): e})
    return V2Category(base, {"0"}, {("0", "0"): unitv},
                      {("0", "0", "0"): m2},
                      {"0": identity_vfunctor(unitv)})


def relabel_v2category(u: V2Category, obj_map: dict, cell_maps: dict) -> V2Category:
    """Rename objects and 1-cells through bijections.

    cell_maps is keyed by the *old* object pair and renames that hom
    category's objects.  Composition and identity functors are rebuilt over
    the relabeled homs.
    """
    if sorted(obj_map) != sorted(u.objects):
        raise MalformedTable("relabeling does not cover the object set")
    objects = set(obj_map.values())
    hom = {}
    for (a, b), vcat_ab in u.hom.items():
        hom[(obj_map[a], obj_map[b])] = relabel_vcategory(
            vcat_ab, cell_maps[(a, b)])
    comp = {}
    for (a, b, c), m2 in u.comp.items():
        na, nb, nc = obj_map[a], obj_map[b], obj_map[c]
        source = product_vcat(1, hom[(nb, nc)], hom[(na, nb)])
        cg, cf, ch = cell_maps[(b, c)], cell_maps[(a, b)], cell_maps[(a, c)]
        nobj = {pair(cg[g], cf[f]): ch[m2.obj_map[pair(g, f)]]
                for g in u.hom[(b, c)].objects
                for f in u.hom[(a, b)].objects}
        nhom = {}
        for (g, f) in iproduct(sorted(u.hom[(b, c)].objects),
                               sorted(u.hom[(a, b)].objects)):
            for (g2, f2) in iproduct(sorted(u.hom[(b, c)].objects),
                                     sorted(u.hom[(a, b)].objects)):
                nhom[(pair(cg[g], cf[f]), pair(cg[g2], cf[f2]))] = \
                    m2.hom_map[(pair(g, f), pair(g2, f2))]
        comp[(na, nb, nc)] = VFunctor(source, hom[(na, nc)], nobj, nhom)
    identity = {}
    for a, j2 in u.identity.items():
        ca = cell_maps[(a, a)]
        identity[obj_map[a]] = VFunctor(
            j2.source, hom[(obj_map[a], obj_map[a])],
            {"0": ca[j2.obj_map["0"]]}, dict(j2.hom_map))
    return V2Category(u.base, objects, hom, comp, identity)
