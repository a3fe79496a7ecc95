import itertools

import pytest

from ecat.core import check_functor, check_nat_transf, iso_search
from ecat.enriched import (
    EnrichedCategory,
    EnrichedFunctor,
    EnrichedNat,
    cartesian_product_enriched,
    check_enriched,
    check_enriched_functor,
    check_enriched_nat,
    compose_enriched_functors,
    finset_braiding,
    finset_monoidal,
    hcomp_enriched_nats,
    hom_bifunctor,
    hom_set_lax_functor,
    identity_enriched_functor,
    identity_enriched_nat,
    merge_functor,
    merge_nat,
    nat_pushforward_functor,
    opposite_enriched,
    pushforward,
    pushforward_functor,
    pushforward_nat,
    split_functor,
    split_nat,
    underlying_category,
    underlying_functor,
    underlying_nat,
    vcomp_enriched_nats,
)
from ecat.monoidal import check_braided, check_lax_monoidal_functor, check_monoidal

from helpers import (
    chain2,
    chain2_enriched,
    lattice4_self_enriched,
    lattice2_monoidal,
    sign_enriched,
    trivial_base_enriched,
    z2_enriched,
)

ENRICHED = [
    chain2_enriched,
    lattice4_self_enriched,
    z2_enriched,
    trivial_base_enriched,
    lambda: sign_enriched(1, 0),
    lambda: sign_enriched(2, 0),
]


@pytest.mark.parametrize("build", ENRICHED)
def test_fixtures_are_enriched(build):
    assert check_enriched(build()).ok


def test_sign_one_object_structures():
    # hand computation: the identity element and composition must agree
    good = [
        (i, c)
        for i in (0, 1)
        for c in (0, 1)
        if check_enriched(
            EnrichedCategory(
                sign_enriched(1, 0).base, 1, {(0, 0): 0}, {0: i}, {(0, 0, 0): c}
            )
        ).ok
    ]
    assert good == [(0, 0), (1, 1)]


def test_mutated_composition_reported():
    e = sign_enriched(2, 0)
    comp = dict(e.comp)
    comp[(0, 1, 0)] = 1
    bad = EnrichedCategory(e.base, 2, e.hom_obj, e.ident, comp)
    report = check_enriched(bad)
    assert not report.ok
    assert report.laws() <= {
        "enriched-associativity", "enriched-left-unit", "enriched-right-unit"
    }


def test_underlying_chain2():
    u = underlying_category(chain2_enriched())
    found = iso_search(u.cat, chain2(), cap=10**5)
    assert found is not None


def test_underlying_z2():
    u = underlying_category(z2_enriched())
    # each hom object has exactly one element from the unit
    assert u.cat.n_morphisms == 2
    assert u.cat.n_objects == 2


def test_underlying_respects_composition_order():
    e = lattice4_self_enriched()
    u = underlying_category(e)
    from ecat.core import check_category

    assert check_category(u.cat).ok


def test_hom_bifunctor_is_a_functor():
    for build in (chain2_enriched, lattice4_self_enriched, z2_enriched):
        assert check_functor(hom_bifunctor(build())).ok


@pytest.mark.parametrize("build", ENRICHED)
def test_opposite_enriched_valid(build):
    e = build()
    op = opposite_enriched(e)
    assert check_enriched(op).ok
    opop = opposite_enriched(op)
    assert opop.hom_obj == e.hom_obj
    assert opop.comp == e.comp
    assert opop.base.tensor.obj_map == e.base.tensor.obj_map
    assert opop.base.associator == e.base.associator


def test_identity_and_composition_of_enriched_functors():
    e = chain2_enriched()
    i = identity_enriched_functor(e)
    assert check_enriched_functor(i).ok
    assert check_enriched_functor(compose_enriched_functors(i, i)).ok


def const_top_functor(e):
    """The functor to the top object of the Boolean self-enrichment."""
    top = e.n_objects - 1
    comps = {}
    for x, y in itertools.product(e.objects(), repeat=2):
        (f,) = e.base.base.hom(e.hom(x, y), e.hom(top, top))
        comps[(x, y)] = f
    from ecat.monoidal import identity_lax

    return EnrichedFunctor(
        identity_lax(e.base), e, e, tuple(top for _ in e.objects()), comps
    )


def test_constant_enriched_functor():
    for build in (chain2_enriched, lattice4_self_enriched):
        assert check_enriched_functor(const_top_functor(build())).ok


def test_enriched_nats_identity_vcomp_hcomp():
    e = chain2_enriched()
    i = identity_enriched_functor(e)
    n = identity_enriched_nat(i)
    assert check_enriched_nat(n).ok
    assert check_enriched_nat(vcomp_enriched_nats(n, n)).ok
    assert check_enriched_nat(hcomp_enriched_nats(n, n)).ok


def test_enriched_nat_to_constant():
    e = chain2_enriched()
    f = identity_enriched_functor(e)
    g = const_top_functor(e)
    comps = {}
    for x in e.objects():
        (c,) = e.base.base.hom(e.base.unit, e.hom(x, 1))
        comps[x] = c
    from ecat.monoidal import identity_lax, identity_lax_nat

    n = EnrichedNat(identity_lax_nat(identity_lax(e.base)), f, g, comps)
    assert check_enriched_nat(n).ok


def test_underlying_functor_and_nat():
    e = chain2_enriched()
    f = identity_enriched_functor(e)
    g = const_top_functor(e)
    uf = underlying_functor(f)
    assert check_functor(uf).ok
    assert uf.obj_map == (0, 1)
    comps = {x: e.base.base.hom(e.base.unit, e.hom(x, 1))[0] for x in e.objects()}
    from ecat.monoidal import identity_lax, identity_lax_nat

    n = EnrichedNat(identity_lax_nat(identity_lax(e.base)), f, g, comps)
    un = underlying_nat(n)
    assert check_nat_transf(un).ok


def test_cartesian_product_enriched():
    e = chain2_enriched()
    p = cartesian_product_enriched(e, e)
    assert check_enriched(p).ok
    assert p.n_objects == 4
    assert check_monoidal(p.base).ok


def test_cartesian_product_with_point_is_identity_on_tables():
    e = chain2_enriched()
    p = cartesian_product_enriched(e, trivial_base_enriched())
    assert p.hom_obj == e.hom_obj
    assert p.ident == e.ident
    assert p.comp == e.comp


def test_finset_monoidal_valid():
    m = finset_monoidal((0, 1))
    assert check_monoidal(m).ok
    b = finset_braiding(m, (0, 1))
    assert check_braided(b).ok


def test_finset_sizes_must_be_closed():
    from ecat.report import StructureError

    # no finite set of sizes containing 2 is closed under products
    with pytest.raises(StructureError):
        finset_monoidal((1, 2, 4))


def test_hom_set_functor_lattice():
    m = lattice2_monoidal()
    r = hom_set_lax_functor(m, (0, 1))
    assert check_lax_monoidal_functor(r).ok


@pytest.mark.parametrize("build", [chain2_enriched, lattice4_self_enriched])
def test_pushforward_along_hom_set_matches_underlying(build):
    e = build()
    r = hom_set_lax_functor(e.base, (0, 1))
    pushed = pushforward(r, e)
    assert check_enriched(pushed).ok
    u_direct = underlying_category(e)
    u_pushed = underlying_category(pushed)
    assert iso_search(u_pushed.cat, u_direct.cat, cap=10**6) is not None


def test_pushforward_functor_and_nat():
    e = chain2_enriched()
    r = hom_set_lax_functor(e.base, (0, 1))
    f = const_top_functor(e)
    pf = pushforward_functor(r, f)
    assert check_enriched_functor(pf).ok
    comps = {x: e.base.base.hom(e.base.unit, e.hom(x, 1))[0] for x in e.objects()}
    from ecat.monoidal import identity_lax, identity_lax_nat

    n = EnrichedNat(
        identity_lax_nat(identity_lax(e.base)), identity_enriched_functor(e), f, comps
    )
    pn = pushforward_nat(r, n)
    assert check_enriched_nat(pn).ok


def test_nat_pushforward_functor_identity():
    from ecat.monoidal import identity_lax, identity_lax_nat

    e = chain2_enriched()
    phi = identity_lax_nat(identity_lax(e.base))
    f = nat_pushforward_functor(phi, e)
    assert check_enriched_functor(f).ok


def test_split_merge_functor_round_trip():
    e = chain2_enriched()
    f = const_top_functor(e)
    bg, checked = split_functor(f)
    assert check_enriched_functor(checked).ok
    back = merge_functor(bg, checked, e)
    assert back.obj_map == f.obj_map
    assert back.components == f.components
    assert back.background == f.background


def test_split_merge_nat_round_trip():
    e = chain2_enriched()
    f = identity_enriched_functor(e)
    g = const_top_functor(e)
    comps = {x: e.base.base.hom(e.base.unit, e.hom(x, 1))[0] for x in e.objects()}
    from ecat.monoidal import identity_lax, identity_lax_nat

    n = EnrichedNat(identity_lax_nat(identity_lax(e.base)), f, g, comps)
    bg, checked = split_nat(n)
    assert check_enriched_nat(checked).ok
    back = merge_nat(bg, checked, f, g)
    assert back.components == n.components
