import pytest
from hypothesis import given, strategies as st

from enrichkit.errors import (
    CompositionUndefined,
    EmptyChain,
    MalformedTable,
    UnknownMorphism,
)
from enrichkit.fincat import (
    FinCategory,
    FinFunctor,
    FinNatTransform,
    check_category,
    check_functor,
    check_natural,
    compose,
    compose_chain,
    identity_functor,
    product_category,
)
from enrichkit.instances import bool_symmetric, zmod2_symmetric

from helpers import idempotent_monoid_category, rewire, thin_morphism


@pytest.fixture
def two():
    """The walking arrow bot -> top as a fresh category."""
    return bool_symmetric().base


@pytest.fixture
def z2_discrete():
    return zmod2_symmetric().base


def test_compose_identity_laws(two):
    assert compose(two, "id_top", "u") == "u"
    assert compose(two, "u", "id_bot") == "u"


def test_compose_mismatch(two):
    with pytest.raises(CompositionUndefined):
        compose(two, "u", "u")
    with pytest.raises(UnknownMorphism):
        compose(two, "u", "zz")


def test_chain_singleton_and_unit_absorption(two):
    assert compose_chain(two, ["u"]) == "u"
    assert compose_chain(two, ["id_top", "u", "id_bot"]) == "u"
    with pytest.raises(EmptyChain):
        compose_chain(two, [])


def test_chain_in_thin_hom(two):
    # Two hom-poset morphisms of the join-monoid structure compose to the
    # unique morphism with the matching endpoints.
    expected = thin_morphism(two, "bot", "top")
    assert expected == "u"
    assert compose_chain(two, ["id_top", "u"]) == expected


@given(st.integers(0, 6), st.integers(1, 3))
def test_chain_regrouping(start, cut):
    # Regrouping a valid chain never changes the folded morphism.
    two = bool_symmetric().base
    chains = [
        ["id_bot"], ["u"], ["id_top"],
        ["u", "id_bot"], ["id_top", "u"],
        ["id_top", "u", "id_bot"],
        ["id_top", "id_top", "u", "id_bot", "id_bot"],
    ]
    chain = chains[start % len(chains)]
    whole = compose_chain(two, chain)
    cut = min(cut, len(chain) - 1)
    if cut == 0:
        assert whole == compose_chain(two, chain)
    else:
        left = compose_chain(two, chain[:cut])
        right = compose_chain(two, chain[cut:])
        assert compose_chain(two, [left, right]) == whole


def test_check_category_passes(two, z2_discrete):
    assert check_category(two).ok
    assert check_category(z2_discrete).ok


def test_check_category_families(two):
    rep = check_category(two)
    assert set(rep.families) == {
        "identity-boundary", "composition-defined", "composition-boundary",
        "unit-left", "unit-right", "associativity"}


def test_unit_law_mutation(two):
    # comp(u, id_bot) rewired to id_bot: the unit law at (u, id_bot) breaks,
    # and because the base is thin the rewired composite also has the wrong
    # codomain, which cascades into the associativity scan.
    mutated = FinCategory(two.objects, two.morphisms, two.dom, two.cod,
                          rewire(two.comp, ("u", "id_bot"), "id_bot"),
                          two.identity)
    rep = check_category(mutated, all_witnesses=True)
    assert not rep.ok
    unit = rep.first_for("unit-right")
    assert unit is not None and unit.instance == ("u", "id_bot")
    assert rep.failing_families() == {
        "unit-right", "composition-boundary", "associativity"}


def test_single_family_mutation_possible():
    cat = idempotent_monoid_category()
    assert check_category(cat).ok
    mutated = FinCategory(cat.objects, cat.morphisms, cat.dom, cat.cod,
                          rewire(cat.comp, ("a", "e"), "e"), cat.identity)
    rep = check_category(mutated, all_witnesses=True)
    assert rep.failing_families() == {"unit-right"}


@pytest.mark.parametrize("key", [("u", "id_bot"), ("id_top", "u"),
                                 ("id_bot", "id_bot"), ("id_top", "id_top")])
def test_every_comp_rewire_detected(two, key):
    # Exhaustive single-entry mutation sensitivity over the comp table.
    for wrong in sorted(two.morphisms):
        if wrong == two.comp[key]:
            continue
        mutated = FinCategory(two.objects, two.morphisms, two.dom, two.cod,
                              rewire(two.comp, key, wrong), two.identity)
        assert not check_category(mutated).ok


def test_identity_rewire_detected(two):
    mutated = FinCategory(two.objects, two.morphisms, two.dom, two.cod,
                          two.comp, rewire(two.identity, "bot", "u"))
    assert not check_category(mutated).ok


def test_every_shipped_category_mutation_detected(two, z2_discrete):
    # Shipped categories pass, and every single-entry rewire of comp or the
    # identity table flips the check to fail.  (Only the shipped thin bases:
    # in a fixture like the idempotent monoid some rewires land on another
    # valid category.)
    for cat in (two, z2_discrete):
        assert check_category(cat).ok
        for key in sorted(cat.comp):
            for wrong in sorted(cat.morphisms):
                if wrong == cat.comp[key]:
                    continue
                mutated = FinCategory(cat.objects, cat.morphisms, cat.dom,
                                      cat.cod, rewire(cat.comp, key, wrong),
                                      cat.identity)
                assert not check_category(mutated).ok, (key, wrong)
        for obj in sorted(cat.objects):
            for wrong in sorted(cat.morphisms):
                if wrong == cat.identity[obj]:
                    continue
                mutated = FinCategory(cat.objects, cat.morphisms, cat.dom,
                                      cat.cod, cat.comp,
                                      rewire(cat.identity, obj, wrong))
                assert not check_category(mutated).ok, (obj, wrong)


def test_malformed_table(two):
    broken = FinCategory(two.objects, two.morphisms,
                         dict(two.dom, ghost="bot"), two.cod, two.comp,
                         two.identity)
    with pytest.raises(MalformedTable):
        check_category(broken)


def test_identity_functor_passes(two):
    assert check_functor(identity_functor(two)).ok


def test_constant_functor_passes(two):
    # All composites collapse onto id_top.
    const = FinFunctor(two, two, {o: "top" for o in two.objects},
                       {m: "id_top" for m in two.morphisms})
    assert check_functor(const).ok


def test_object_swap_breaks_boundaries(two):
    swapped = FinFunctor(two, two, {"bot": "top", "top": "bot"},
                         {m: m for m in two.morphisms})
    rep = check_functor(swapped)
    assert rep.first_for("functor-boundary") is not None


def test_identity_transform_passes(two):
    ident = identity_functor(two)
    nat = FinNatTransform(ident, ident,
                          {o: two.identity[o] for o in two.objects})
    assert check_natural(nat).ok


def test_symmetry_components_natural(two):
    # The symmetry of the meet tensor, viewed as a transformation between
    # the tensor functor and its swap on the product category: every
    # component is an identity because meet is commutative on the nose.
    sym = bool_symmetric()
    prod = product_category(two, two)
    tensor = FinFunctor(
        prod, two,
        {f"({a},{b})": sym.tensor_obj[(a, b)]
         for a in two.objects for b in two.objects},
        {f"({f},{g})": sym.tensor_mor[(f, g)]
         for f in two.morphisms for g in two.morphisms})
    swapped = FinFunctor(
        prod, two,
        {f"({a},{b})": sym.tensor_obj[(b, a)]
         for a in two.objects for b in two.objects},
        {f"({f},{g})": sym.tensor_mor[(g, f)]
         for f in two.morphisms for g in two.morphisms})
    components = {f"({a},{b})": sym.symmetry[(a, b)]
                  for a in two.objects for b in two.objects}
    assert check_category(prod).ok
    assert check_functor(tensor).ok
    nat = FinNatTransform(tensor, swapped, components)
    assert check_natural(nat).ok


def test_component_rewire_breaks_boundary(two):
    ident = identity_functor(two)
    nat = FinNatTransform(ident, ident,
                          {"bot": "u", "top": "id_top"})
    rep = check_natural(nat)
    assert rep.first_for("component-boundary") is not None
