"""Shared hand-built test categories, independent of the fixture builders.

These tables are written out longhand so they can serve as oracles for the
library's own constructions.
"""

from ecat.core import FinCategory


def chain2() -> FinCategory:
    """The poset 0 <= 1 as a category: morphisms id_0, id_1, le: 0 -> 1."""
    return FinCategory(
        n_objects=2,
        dom=(0, 1, 0),
        cod=(0, 1, 1),
        identity=(0, 1),
        compose={
            (0, 0): 0,
            (1, 1): 1,
            (2, 0): 2,
            (1, 2): 2,
        },
        obj_names=("0", "1"),
        mor_names=("id_0", "id_1", "le"),
    )


def discrete(n: int) -> FinCategory:
    return FinCategory(
        n_objects=n,
        dom=tuple(range(n)),
        cod=tuple(range(n)),
        identity=tuple(range(n)),
        compose={(i, i): i for i in range(n)},
    )


def parallel_pair() -> FinCategory:
    """Two objects, two parallel arrows 0 -> 1 (plus identities)."""
    return FinCategory(
        n_objects=2,
        dom=(0, 1, 0, 0),
        cod=(0, 1, 1, 1),
        identity=(0, 1),
        compose={
            (0, 0): 0,
            (1, 1): 1,
            (2, 0): 2,
            (1, 2): 2,
            (3, 0): 3,
            (1, 3): 3,
        },
    )


def thin_category(n, leq):
    """Thin category on n objects with an arrow x -> y iff leq(x, y)."""
    mors = [(x, y) for x in range(n) for y in range(n) if leq(x, y)]
    index = {m: i for i, m in enumerate(mors)}
    compose = {}
    for f, (x, y) in enumerate(mors):
        for g, (yp, z) in enumerate(mors):
            if yp == y:
                compose[(g, f)] = index[(x, z)]
    return FinCategory(
        n_objects=n,
        dom=tuple(x for x, _ in mors),
        cod=tuple(y for _, y in mors),
        identity=tuple(index[(x, x)] for x in range(n)),
        compose=compose,
    )


def thin_monoidal(c, t, unit):
    """Strict monoidal structure on a thin category from an object tensor t."""
    from ecat.core import Functor, product_category
    from ecat.monoidal import strict_monoidal

    n, nm = c.n_objects, c.n_morphisms
    obj_map = [t(i, j) for i in range(n) for j in range(n)]
    mor_map = []
    for f in range(nm):
        for g in range(nm):
            (found,) = c.hom(t(c.dom[f], c.dom[g]), t(c.cod[f], c.cod[g]))
            mor_map.append(found)
    tensor = Functor(product_category(c, c), c, tuple(obj_map), tuple(mor_map))
    return strict_monoidal(c, tensor, unit)


def lattice2_monoidal():
    """chain2 with meet as tensor, unit 1."""
    return thin_monoidal(chain2(), min, 1)


def lattice4_monoidal():
    """Boolean lattice {0, a, b, 1} = {0b00, 0b01, 0b10, 0b11}, meet, unit 1."""
    c = thin_category(4, lambda x, y: x & y == x)
    return thin_monoidal(c, lambda x, y: x & y, 3)


def group_monoidal(table, unit):
    """Discrete category on the elements of a group multiplication table."""
    from ecat.core import Functor, product_category
    from ecat.monoidal import strict_monoidal

    n = len(table)
    c = discrete(n)
    obj_map = [table[i][j] for i in range(n) for j in range(n)]
    tensor = Functor(product_category(c, c), c, tuple(obj_map), tuple(obj_map))
    return strict_monoidal(c, tensor, unit)


def z2_discrete_monoidal():
    return group_monoidal([[0, 1], [1, 0]], 0)


def s3_discrete_monoidal():
    """Symmetric group on 3 letters, as a discrete monoidal category."""
    import itertools

    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [
        [idx[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms
    ]
    return group_monoidal(table, idx[(0, 1, 2)])


def sign_monoidal():
    """One object, endomorphisms Z/2, tensor = addition of endomorphisms."""
    from ecat.core import Functor, product_category
    from ecat.monoidal import strict_monoidal

    c = FinCategory(
        n_objects=1,
        dom=(0, 0),
        cod=(0, 0),
        identity=(0,),
        compose={(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0},
        mor_names=("e", "g"),
    )
    tensor = Functor(
        product_category(c, c), c, (0,), (0, 1, 1, 0)
    )
    return strict_monoidal(c, tensor, 0)


def identity_braiding(m, symmetric=True):
    """The identity-component braiding; valid when the tensor is commutative."""
    import itertools

    from ecat.monoidal import BraidedStructure

    braiding = {}
    for x, y in itertools.product(range(m.base.n_objects), repeat=2):
        assert m.t_obj(x, y) == m.t_obj(y, x)
        braiding[(x, y)] = m.base.identity[m.t_obj(x, y)]
    return BraidedStructure(m, braiding, symmetric)


def thin_enriched(m, objs, hom):
    """Enriched category over a thin monoidal base from a hom-object table."""
    import itertools

    from ecat.enriched import EnrichedCategory

    n = len(objs)
    hom_obj = {(x, y): hom(objs[x], objs[y]) for x in range(n) for y in range(n)}
    ident = {}
    for x in range(n):
        (f,) = m.base.hom(m.unit, hom_obj[(x, x)])
        ident[x] = f
    comp = {}
    for x, y, z in itertools.product(range(n), repeat=3):
        (f,) = m.base.hom(
            m.t_obj(hom_obj[(y, z)], hom_obj[(x, y)]), hom_obj[(x, z)]
        )
        comp[(x, y, z)] = f
    return EnrichedCategory(m, n, hom_obj, ident, comp)


def chain2_enriched():
    """chain2 enriched in lattice-2: hom objects are Heyting implications."""
    return thin_enriched(lattice2_monoidal(), [0, 1], lambda x, y: int(x <= y))


def lattice4_self_enriched():
    """The Boolean lattice enriched in itself by implication."""
    return thin_enriched(lattice4_monoidal(), [0, 1, 2, 3], lambda x, y: (~x | y) & 3)


def sign_enriched(n_objects, comp_value):
    """Enriched category over the sign base: every hom object is the point."""
    import itertools

    from ecat.enriched import EnrichedCategory

    m = sign_monoidal()
    hom_obj = {(x, y): 0 for x in range(n_objects) for y in range(n_objects)}
    ident = {x: 0 for x in range(n_objects)}
    comp = {
        t: comp_value for t in itertools.product(range(n_objects), repeat=3)
    }
    return EnrichedCategory(m, n_objects, hom_obj, ident, comp)


def z2_enriched():
    """Discrete Z/2 enriched in itself: hom(x, y) = y - x."""
    return thin_enriched(z2_discrete_monoidal(), [0, 1], lambda x, y: x ^ y)


def trivial_base_enriched():
    """The one-object enriched category over the one-morphism base."""
    from ecat.core import Functor, product_category, terminal_category
    from ecat.enriched import EnrichedCategory
    from ecat.monoidal import strict_monoidal

    t = terminal_category()
    triv = strict_monoidal(t, Functor(product_category(t, t), t, (0,), (0,)), 0)
    return EnrichedCategory(triv, 1, {(0, 0): 0}, {0: 0}, {(0, 0, 0): 0})


def semion_monoidal():
    """Pointed category on Z/2 with End = Z/4, associator 2 at (1,1,1).

    Morphism a*4+k is the endomorphism "k" of the object a; composition and
    tensor add phases mod 4. The nontrivial associator component is what
    later admits a non-symmetric braiding.
    """
    import itertools

    from ecat.core import Functor, product_category
    from ecat.monoidal import MonoidalCategory

    c = FinCategory(
        n_objects=2,
        dom=tuple(a for a in range(2) for _ in range(4)),
        cod=tuple(a for a in range(2) for _ in range(4)),
        identity=(0, 4),
        compose={
            (a * 4 + i, a * 4 + j): a * 4 + (i + j) % 4
            for a in range(2)
            for i in range(4)
            for j in range(4)
        },
    )
    obj_map = tuple((a + b) % 2 for a in range(2) for b in range(2))
    mor_map = []
    for f in range(8):
        for g in range(8):
            a, i = divmod(f, 4)
            b, j = divmod(g, 4)
            mor_map.append(((a + b) % 2) * 4 + (i + j) % 4)
    tensor = Functor(product_category(c, c), c, obj_map, tuple(mor_map))
    assoc = {
        (a, b, d): ((a + b + d) % 2) * 4 + (2 if a == b == d == 1 else 0)
        for a, b, d in itertools.product(range(2), repeat=3)
    }
    return MonoidalCategory(c, tensor, 0, assoc, (0, 4), (0, 4))


def semion_braiding():
    """The non-symmetric braiding c(1,1) = phase 1 on the semion base."""
    import itertools

    from ecat.monoidal import BraidedStructure

    m = semion_monoidal()
    braiding = {
        (a, b): ((a + b) % 2) * 4 + a * b
        for a, b in itertools.product(range(2), repeat=2)
    }
    return BraidedStructure(m, braiding, False)


def semion_enriched_monoidal():
    """The semion category enriched in itself: hom(x, y) = x + y.

    All structure phases were found by solving the coherence equations mod 4
    once and for all; the tests re-verify every law from scratch.
    """
    import itertools

    from ecat.enriched import EnrichedCategory, EnrichedFunctor, cartesian_product_enriched
    from ecat.enriched_monoidal import EnrichedMonoidalCategory
    from ecat.monoidal import braided_tensor_lax_structure

    b = semion_braiding()
    m = b.host

    def el(obj, phase):
        return obj * 4 + phase % 4

    hom_obj = {(x, y): (x + y) % 2 for x in range(2) for y in range(2)}
    ident = {0: 0, 1: 0}
    theta = {t: 0 for t in itertools.product(range(2), repeat=3)}
    theta[(0, 1, 0)] = 2
    comp = {
        (x, y, z): el((x + z) % 2, theta[(x, y, z)])
        for x, y, z in itertools.product(range(2), repeat=3)
    }
    host = EnrichedCategory(m, 2, hom_obj, ident, comp)

    tau = {
        (0, 0, 1, 1): 3,
        (0, 1, 1, 1): 1,
        (1, 0, 0, 1): 3,
        (1, 0, 1, 1): 2,
        (1, 1, 0, 0): 2,
        (1, 1, 0, 1): 1,
    }
    cells = {}
    for p, q in itertools.product(range(4), repeat=2):
        (x1, x2), (y1, y2) = divmod(p, 2), divmod(q, 2)
        obj = (x1 + y1 + x2 + y2) % 2
        cells[(p, q)] = el(obj, tau.get((x1, x2, y1, y2), 0))
    tensor = EnrichedFunctor(
        braided_tensor_lax_structure(b),
        cartesian_product_enriched(host, host),
        host,
        (0, 1, 1, 0),
        cells,
    )
    assoc = {
        (x, y, z): el(0, 2 if x == y == z == 1 else 0)
        for x, y, z in itertools.product(range(2), repeat=3)
    }
    return EnrichedMonoidalCategory(host, b, tensor, 0, assoc, (0, 0), (0, 0))


def preorder_enriched_monoidal():
    """The preordered monoid {1, s} (s.s = s, 1 <= s) enriched in lattice-2.

    Thin everywhere: every structure component is the unique morphism of
    its type, so this is the cheapest nontrivial enriched monoidal fixture.
    """
    import itertools

    from ecat.enriched import EnrichedFunctor, cartesian_product_enriched
    from ecat.enriched_monoidal import EnrichedMonoidalCategory
    from ecat.monoidal import braided_tensor_lax_structure

    m = lattice2_monoidal()
    b = identity_braiding(m)
    host = thin_enriched(m, [0, 1], lambda a, bb: 1 if a <= bb else 0)
    c = m.base

    def pick(a, bb):
        (f,) = c.hom(a, bb)
        return f

    cells = {}
    for p, q in itertools.product(range(4), repeat=2):
        (x1, x2), (y1, y2) = divmod(p, 2), divmod(q, 2)
        cells[(p, q)] = pick(
            m.t_obj(host.hom(x1, y1), host.hom(x2, y2)),
            host.hom(x1 | x2, y1 | y2),
        )
    tensor = EnrichedFunctor(
        braided_tensor_lax_structure(b),
        cartesian_product_enriched(host, host),
        host,
        (0, 1, 1, 1),
        cells,
    )
    one = pick(m.unit, 1)
    assoc = {t: one for t in itertools.product(range(2), repeat=3)}
    return EnrichedMonoidalCategory(host, b, tensor, 0, assoc, (one, one), (one, one))


def sign_algebra(mult, unit):
    from ecat.monoidal import AlgebraObject

    return AlgebraObject(sign_monoidal(), 0, mult, unit, True)
