import dataclasses
import itertools

import pytest

from ecat.centers import (
    braided_tables,
    bracket_pair,
    check_bracket_pair_terminal,
    check_bracket_terminal,
    compare_e0_routes,
    condition_star,
    e0_center,
    e0_center_via_module,
    enriched_iso_search,
    evaluation_action,
    gamma1,
    gamma1_evaluation_action,
    gamma1_of_canonical,
    gamma2,
    gamma2_evaluation_action,
    gamma2_of_canonical,
    tensor_action,
    trivial_action,
    trivial_monoidal_action,
    verify_e0_universal,
    verify_e1_universal,
    verify_e2_universal,
)
from ecat.actions import ModuleAction, MonoidalModuleCells, terminal_module
from ecat.actions import monoidal_self_module
from ecat.core import Functor, NatTransf, product_category, terminal_category
from ecat.enriched import EnrichedNat, check_enriched_nat, underlying_category
from ecat.enriched_monoidal import (
    EnrichedBraidedCategory,
    check_enriched_braided,
    check_enriched_monoidal,
    check_enriched_symmetric,
    underlying_half_braiding,
    underlying_monoidal,
)
from ecat.monoidal import (
    LaxMonoidalNat,
    MonoidalCategory,
    drinfeld_center_z1,
    is_transparent,
    muger_center_z2,
    strict_monoidal,
)
from ecat.report import Budget, StructureError

from helpers import (
    chain2_enriched,
    identity_braiding,
    lattice2_monoidal,
    preorder_enriched_monoidal,
    trivial_base_enriched,
    z2_discrete_monoidal,
    z2_enriched,
)

CAP = 500_000


def preorder_braiding_el(em):
    e = em.host
    return {
        (x, y): e.one(em.t(x, y))
        for x, y in itertools.product(range(e.n_objects), repeat=2)
    }


# --- E0: endofunctors of the lattice-2 chain ---


def test_e0_chain2_has_three_monotone_endofunctors():
    res = e0_center(chain2_enriched(), CAP)
    maps = sorted(f.obj_map for f in res.witnesses["functors"])
    assert maps == [(0, 0), (0, 1), (1, 1)]


def test_e0_chain2_brackets_match_meet_formula():
    e = chain2_enriched()
    res = e0_center(e, CAP)
    functors = res.witnesses["functors"]
    fwd = res.witnesses["z1"].forgetful

    def heyting(a, b):
        return 1 if a <= b else 0

    for i, j in itertools.product(range(len(functors)), repeat=2):
        oracle = min(
            heyting(functors[i].on_obj(x), functors[j].on_obj(x))
            for x in range(2)
        )
        carrier = fwd.on_obj(res.witnesses["brackets"][(i, j)].obj)
        assert carrier == oracle


def test_e0_chain2_named_bracket_values():
    e = chain2_enriched()
    res = e0_center(e, CAP)
    fwd = res.witnesses["z1"].forgetful
    idx = {f.obj_map: i for i, f in enumerate(res.witnesses["functors"])}
    ident, c0, c1 = idx[(0, 1)], idx[(0, 0)], idx[(1, 1)]

    def val(i, j):
        return fwd.on_obj(res.witnesses["brackets"][(i, j)].obj)

    assert val(ident, c1) == 1
    assert val(c1, c0) == 0
    assert val(ident, ident) == 1


def test_e0_category_passes_validators():
    for e in (chain2_enriched(), z2_enriched(), trivial_base_enriched()):
        res = e0_center(e, CAP)
        assert check_enriched_monoidal(res.category).ok


def test_e0_hom_elements_count_natural_transformations():
    """Center-base elements of [F, G] biject with the enriched naturals."""
    e = chain2_enriched()
    m = e.base
    c = m.base
    res = e0_center(e, CAP)
    host = res.category.host
    z1 = res.witnesses["z1"]
    zc = z1.monoidal.base
    functors = res.witnesses["functors"]
    for i, j in itertools.product(range(len(functors)), repeat=2):
        fF, fG = functors[i], functors[j]
        idnat = LaxMonoidalNat(
            fF.background, fG.background,
            NatTransf(
                fF.background.functor, fG.background.functor,
                tuple(c.identity[b] for b in c.objects()),
            ),
        )
        pools = [
            sorted(c.hom(m.unit, e.hom(fF.on_obj(x), fG.on_obj(x))))
            for x in range(e.n_objects)
        ]
        nats = sum(
            check_enriched_nat(
                EnrichedNat(idnat, fF, fG, dict(enumerate(combo)))
            ).ok
            for combo in itertools.product(*pools)
        )
        assert nats == len(zc.hom(z1.monoidal.unit, host.hom(i, j)))


def test_e0_trivial_base_is_a_point():
    res = e0_center(trivial_base_enriched(), CAP)
    assert res.category.host.n_objects == 1


def test_bracket_terminality_certificates_recheck():
    for e in (chain2_enriched(), z2_enriched()):
        res = e0_center(e, CAP)
        for br in res.witnesses["brackets"].values():
            assert check_bracket_terminal(br).ok


def test_mutated_bracket_certificate_rejected():
    res = e0_center(chain2_enriched(), CAP)
    br = res.witnesses["brackets"][(0, 0)]
    others = [
        o for o in br.pfg.objects
        if (o.z_obj, o.components) != (br.obj, br.components)
    ]
    assert others, "fixture should admit a non-terminal family"
    bad = dataclasses.replace(
        br, obj=others[0].z_obj, components=others[0].components
    )
    rep = check_bracket_terminal(bad)
    assert not rep.ok


def test_condition_star_reports_every_pair():
    star = condition_star(chain2_enriched(), CAP)
    n = len(star.functors)
    assert set(star.brackets) == set(itertools.product(range(n), repeat=2))
    assert all(br is not None for br in star.brackets.values())


# --- E0: the two presentations agree ---


def lattice2_self_cells():
    m = lattice2_monoidal()
    return monoidal_self_module(identity_braiding(m))


def z2_self_cells():
    m = z2_discrete_monoidal()
    return monoidal_self_module(identity_braiding(m))


def terminal_cells():
    t = terminal_category()
    m = strict_monoidal(t, Functor(product_category(t, t), t, (0,), (0,)), 0)
    return MonoidalModuleCells(
        terminal_module(m), identity_braiding(m), m, {(0, 0, 0, 0): 0}, 0
    )


def test_e0_routes_agree_on_module_fixtures():
    for cells in (lattice2_self_cells(), z2_self_cells(), terminal_cells()):
        mod = cells.module
        direct = e0_center(e0_host_of(mod), CAP)
        via = e0_center_via_module(mod, CAP)
        out = compare_e0_routes(direct, via, CAP)
        assert out["iso"] is not None
        assert out["tensor_ok"] and out["unit_ok"]


def e0_host_of(mod: ModuleAction):
    from ecat.canonical import canonical_construction

    return canonical_construction(mod, Budget(CAP, "host")).enriched


# --- universal-property verifiers ---


def test_verify_e0_on_designated_fixtures():
    e = chain2_enriched()
    res = e0_center(e, CAP)
    for act in (evaluation_action(res, e), trivial_action(e)):
        out = verify_e0_universal(e, act, CAP, res)
        assert out.report.ok and out.uniqueness_count == 1
    em = preorder_enriched_monoidal()
    out = verify_e0_universal(em.host, tensor_action(em), CAP)
    assert out.report.ok and out.uniqueness_count == 1


def test_verify_e0_on_discrete_group_fixture():
    e = z2_enriched()
    res = e0_center(e, CAP)
    for act in (evaluation_action(res, e), trivial_action(e)):
        out = verify_e0_universal(e, act, CAP, res)
        assert out.report.ok and out.uniqueness_count == 1


def test_verify_e0_rejects_wrong_unit():
    em = preorder_enriched_monoidal()
    act = tensor_action(em)
    bad = dataclasses.replace(act, unit_obj=1)
    try:
        out = verify_e0_universal(em.host, bad, CAP)
    except StructureError:
        return
    assert not out.report.ok


def test_verify_e1_on_designated_fixtures():
    em = preorder_enriched_monoidal()
    res = gamma1(em, CAP)
    acts = (
        gamma1_evaluation_action(res, em),
        trivial_monoidal_action(em),
        tensor_action(em, preorder_braiding_el(em)),
    )
    for act in acts:
        out = verify_e1_universal(em, act, CAP, res)
        assert out.report.ok and out.uniqueness_count == 1


def test_verify_e2_on_designated_fixtures():
    em = preorder_enriched_monoidal()
    eb = EnrichedBraidedCategory(em, preorder_braiding_el(em), True)
    res = gamma2(eb, CAP)
    acts = (
        gamma2_evaluation_action(res, eb),
        trivial_monoidal_action(em),
        tensor_action(em, preorder_braiding_el(em)),
    )
    for act in acts:
        out = verify_e2_universal(eb, act, CAP, res)
        assert out.report.ok and out.uniqueness_count == 1


# --- the E1 center ---


def test_gamma1_preorder_structure():
    em = preorder_enriched_monoidal()
    res = gamma1(em, CAP)
    assert check_enriched_braided(res.category).ok
    assert check_enriched_symmetric(res.category).ok
    carriers = sorted(x for x, _ in res.witnesses["objects"])
    assert carriers == [0, 1]


def test_gamma1_bracket_pair_certificates_recheck():
    em = preorder_enriched_monoidal()
    res = gamma1(em, CAP)
    for br in res.witnesses["brackets"].values():
        assert check_bracket_pair_terminal(br).ok


def test_gamma1_braiding_factors_the_half_braidings():
    em = preorder_enriched_monoidal()
    res = gamma1(em, CAP)
    c = em.host.base.base
    _, _, z2incl = res.witnesses["z2"]
    objs = res.witnesses["objects"]
    t1 = res.witnesses["tensor_obj"]
    brackets = res.witnesses["brackets"]
    for i, j in itertools.product(range(len(objs)), repeat=2):
        br = brackets[(t1[(i, j)], t1[(j, i)])]
        lifted = c.comp(
            br.zeta, z2incl.on_mor(res.category.braiding_el[(i, j)])
        )
        assert lifted == objs[j][1].components[objs[i][0]]


def test_gamma1_underlying_embeds_fully_in_z1_of_underlying():
    em = preorder_enriched_monoidal()
    res = gamma1(em, CAP)
    e = em.host
    u = underlying_category(e)
    um = underlying_monoidal(em, u)
    z1u = drinfeld_center_z1(um, Budget(CAP, "underlying center"))
    z1_index = {
        (x, tuple(sorted(hb.components.items()))): i
        for i, (x, hb) in enumerate(z1u.object_data)
    }
    img = []
    for x, ehb in res.witnesses["objects"]:
        hbu = underlying_half_braiding(em, ehb, u)
        img.append(z1_index[(x, tuple(sorted(hbu.components.items())))])
    ug = underlying_category(res.category.host.host)
    zc = z1u.monoidal.base
    for i, j in itertools.product(range(len(img)), repeat=2):
        ours = len(ug.cat.hom(i, j))
        theirs = len(zc.hom(img[i], img[j]))
        assert ours == theirs


def test_gamma1_of_canonical_on_module_fixtures():
    for cells in (lattice2_self_cells(), z2_self_cells(), terminal_cells()):
        out = gamma1_of_canonical(cells, CAP)
        assert out["iso"] is not None
        assert out["strict"]


# --- the E2 center ---


def test_gamma2_is_transparent_subcategory_of_underlying():
    em = preorder_enriched_monoidal()
    eb = EnrichedBraidedCategory(em, preorder_braiding_el(em), True)
    res = gamma2(eb, CAP)
    bs = res.witnesses["underlying_braiding"]
    allobj = list(bs.host.base.objects())
    expected = tuple(x for x in allobj if is_transparent(bs, x, allobj))
    assert res.witnesses["objects"] == expected


def test_gamma2_idempotent_on_symmetric_fixtures():
    em = preorder_enriched_monoidal()
    eb = EnrichedBraidedCategory(em, preorder_braiding_el(em), True)
    once = gamma2(eb, CAP)
    twice = gamma2(once.category, CAP)
    assert braided_tables(once.category) == braided_tables(twice.category)


def test_gamma2_of_symmetric_fixture_is_itself():
    em = preorder_enriched_monoidal()
    eb = EnrichedBraidedCategory(em, preorder_braiding_el(em), True)
    res = gamma2(eb, CAP)
    assert braided_tables(res.category) == braided_tables(eb)


def test_gamma2_of_canonical_on_module_fixtures():
    for cells in (lattice2_self_cells(), z2_self_cells(), terminal_cells()):
        br = cells.base_braiding
        out = gamma2_of_canonical(cells, br, CAP)
        assert out["tables_equal"]
