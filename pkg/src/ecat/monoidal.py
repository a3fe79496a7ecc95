"""Monoidal, braided, symmetric structure on finite categories.

Structure is stored non-strictly: associator and unitor components are
explicit morphisms even when they are identities, and every diagram check
inserts them explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ecat.core import (
    FinCategory,
    Functor,
    NatTransf,
    check_functor,
    check_nat_transf,
    identity_functor,
    product_category,
)
from ecat.report import Budget, StructureError, ValidationReport


@dataclass(frozen=True, eq=True)
class MonoidalCategory:
    base: FinCategory
    tensor: Functor  # from product_category(base, base) to base
    unit: int
    associator: dict  # (a,b,c) -> morphism (a@b)@c -> a@(b@c)
    left_unitor: tuple[int, ...]  # unit@a -> a
    right_unitor: tuple[int, ...]  # a@unit -> a

    def t_obj(self, a: int, b: int) -> int:
        return self.tensor.obj_map[a * self.base.n_objects + b]

    def t_mor(self, f: int, g: int) -> int:
        return self.tensor.mor_map[f * self.base.n_morphisms + g]

    def t_obj_many(self, *objs: int) -> int:
        """Left-bracketed tensor word ((a@b)@c)@..."""
        out = objs[0]
        for a in objs[1:]:
            out = self.t_obj(out, a)
        return out

    def a(self, x: int, y: int, z: int) -> int:
        return self.associator[(x, y, z)]

    def l(self, x: int) -> int:
        return self.left_unitor[x]

    def r(self, x: int) -> int:
        return self.right_unitor[x]

    def id_(self, x: int) -> int:
        return self.base.identity[x]


def find_inverse(c: FinCategory, f: int) -> int | None:
    for g in c.hom(c.cod[f], c.dom[f]):
        if c.comp(g, f) == c.identity[c.dom[f]] and c.comp(f, g) == c.identity[c.cod[f]]:
            return g
    return None


def inv(m: MonoidalCategory, f: int) -> int:
    g = find_inverse(m.base, f)
    if g is None:
        raise StructureError(f"morphism {f} is not invertible")
    return g


def _expect(report, law, instance, c, f, dom, cod) -> bool:
    """Record a typing violation unless morphism f goes dom -> cod."""
    if c.dom[f] != dom or c.cod[f] != cod:
        report.add(law, instance, f"morphism {f}: {c.dom[f]}->{c.cod[f]}, expected {dom}->{cod}")
        return False
    return True


def check_monoidal(m: MonoidalCategory) -> ValidationReport:
    report = ValidationReport("monoidal category")
    c = m.base
    report.extend(check_functor(m.tensor))
    if not 0 <= m.unit < c.n_objects:
        raise StructureError("unit object out of range")
    if not report.ok:
        return report

    objs = list(c.objects())
    # typing of coherence components
    typed = True
    for x, y, z in itertools.product(objs, repeat=3):
        f = m.associator.get((x, y, z))
        if f is None:
            raise StructureError(f"associator missing at {(x, y, z)}")
        typed &= _expect(
            report, "associator-typing", (x, y, z), c, f,
            m.t_obj(m.t_obj(x, y), z), m.t_obj(x, m.t_obj(y, z)),
        )
    for x in objs:
        typed &= _expect(report, "unitor-typing", ("l", x), c, m.l(x), m.t_obj(m.unit, x), x)
        typed &= _expect(report, "unitor-typing", ("r", x), c, m.r(x), m.t_obj(x, m.unit), x)
    if not typed:
        return report

    # invertibility
    for x, y, z in itertools.product(objs, repeat=3):
        if find_inverse(c, m.a(x, y, z)) is None:
            report.add("associator-iso", (x, y, z))
    for x in objs:
        if find_inverse(c, m.l(x)) is None:
            report.add("unitor-iso", ("l", x))
        if find_inverse(c, m.r(x)) is None:
            report.add("unitor-iso", ("r", x))

    # naturality
    for f, g, h in itertools.product(c.morphisms(), repeat=3):
        x, y, z = c.dom[f], c.dom[g], c.dom[h]
        xp, yp, zp = c.cod[f], c.cod[g], c.cod[h]
        lhs = c.comp(m.a(xp, yp, zp), m.t_mor(m.t_mor(f, g), h))
        rhs = c.comp(m.t_mor(f, m.t_mor(g, h)), m.a(x, y, z))
        if lhs != rhs:
            report.add("associator-naturality", (f, g, h))
    for f in c.morphisms():
        x, y = c.dom[f], c.cod[f]
        if c.comp(m.l(y), m.t_mor(c.identity[m.unit], f)) != c.comp(f, m.l(x)):
            report.add("unitor-naturality", ("l", f))
        if c.comp(m.r(y), m.t_mor(f, c.identity[m.unit])) != c.comp(f, m.r(x)):
            report.add("unitor-naturality", ("r", f))

    # pentagon
    for w, x, y, z in itertools.product(objs, repeat=4):
        top = c.comp(m.a(w, x, m.t_obj(y, z)), m.a(m.t_obj(w, x), y, z))
        bottom = c.comp_many(
            m.t_mor(c.identity[w], m.a(x, y, z)),
            m.a(w, m.t_obj(x, y), z),
            m.t_mor(m.a(w, x, y), c.identity[z]),
        )
        if top != bottom:
            report.add("pentagon", (w, x, y, z))

    # triangle
    for x, y in itertools.product(objs, repeat=2):
        lhs = c.comp(m.t_mor(c.identity[x], m.l(y)), m.a(x, m.unit, y))
        rhs = m.t_mor(m.r(x), c.identity[y])
        if lhs != rhs:
            report.add("triangle", (x, y))
    return report


def strict_monoidal(
    base: FinCategory, tensor: Functor, unit: int
) -> MonoidalCategory:
    """Wrap a strictly associative/unital tensor table, identities everywhere."""
    assoc = {}
    for x, y, z in itertools.product(base.objects(), repeat=3):
        to = tensor.obj_map
        n = base.n_objects
        xy = to[x * n + y]
        assoc[(x, y, z)] = base.identity[to[xy * n + z]]
    lu = tuple(base.identity[tensor.obj_map[unit * base.n_objects + x]] for x in base.objects())
    ru = tuple(base.identity[tensor.obj_map[x * base.n_objects + unit]] for x in base.objects())
    return MonoidalCategory(base, tensor, unit, assoc, lu, ru)


def product_monoidal(m: MonoidalCategory, n: MonoidalCategory) -> MonoidalCategory:
    """Componentwise monoidal structure on the product category."""
    base = product_category(m.base, n.base)
    nm, mm = m.base.n_objects, m.base.n_morphisms
    nn, mn = n.base.n_objects, n.base.n_morphisms

    def ob(i: int, j: int) -> int:
        return i * nn + j

    def mo(f: int, g: int) -> int:
        return f * mn + g

    src = product_category(base, base)
    obj_map = [0] * src.n_objects
    for i1, j1, i2, j2 in itertools.product(range(nm), range(nn), range(nm), range(nn)):
        obj_map[ob(i1, j1) * base.n_objects + ob(i2, j2)] = ob(
            m.t_obj(i1, i2), n.t_obj(j1, j2)
        )
    mor_map = [0] * src.n_morphisms
    for f1, g1, f2, g2 in itertools.product(range(mm), range(mn), range(mm), range(mn)):
        mor_map[mo(f1, g1) * base.n_morphisms + mo(f2, g2)] = mo(
            m.t_mor(f1, f2), n.t_mor(g1, g2)
        )
    tensor = Functor(src, base, tuple(obj_map), tuple(mor_map))
    unit = ob(m.unit, n.unit)
    assoc = {}
    for (i1, j1), (i2, j2), (i3, j3) in itertools.product(
        itertools.product(range(nm), range(nn)), repeat=3
    ):
        assoc[(ob(i1, j1), ob(i2, j2), ob(i3, j3))] = mo(
            m.a(i1, i2, i3), n.a(j1, j2, j3)
        )
    lu = tuple(mo(m.l(i), n.l(j)) for i in range(nm) for j in range(nn))
    ru = tuple(mo(m.r(i), n.r(j)) for i in range(nm) for j in range(nn))
    return MonoidalCategory(base, tensor, unit, assoc, lu, ru)


def reversed_monoidal(m: MonoidalCategory) -> MonoidalCategory:
    """Same category with the reversed tensor a @rev b = b @ a."""
    c = m.base
    n, nm = c.n_objects, c.n_morphisms
    src = m.tensor.source
    obj_map = [0] * src.n_objects
    mor_map = [0] * src.n_morphisms
    for a, b in itertools.product(range(n), repeat=2):
        obj_map[a * n + b] = m.t_obj(b, a)
    for f, g in itertools.product(range(nm), repeat=2):
        mor_map[f * nm + g] = m.t_mor(g, f)
    tensor = Functor(src, c, tuple(obj_map), tuple(mor_map))
    assoc = {}
    for a, b, cc in itertools.product(range(n), repeat=3):
        assoc[(a, b, cc)] = inv(m, m.a(cc, b, a))
    lu = m.right_unitor
    ru = m.left_unitor
    return MonoidalCategory(c, tensor, m.unit, assoc, lu, ru)


@dataclass(frozen=True, eq=True)
class BraidedStructure:
    host: MonoidalCategory
    braiding: dict  # (a,b) -> morphism a@b -> b@a
    symmetric_flag: bool = False

    def c(self, a: int, b: int) -> int:
        return self.braiding[(a, b)]

    def c_inv(self, a: int, b: int) -> int:
        return inv(self.host, self.c(a, b))


def anti_braiding(b: BraidedStructure) -> BraidedStructure:
    """c-bar_{x,y} = inverse of c_{y,x}."""
    m = b.host
    braiding = {
        (x, y): inv(m, b.c(y, x))
        for x, y in itertools.product(m.base.objects(), repeat=2)
    }
    return BraidedStructure(m, braiding, b.symmetric_flag)


def check_braided(b: BraidedStructure) -> ValidationReport:
    report = ValidationReport("braided structure")
    m = b.host
    c = m.base
    objs = list(c.objects())
    typed = True
    for x, y in itertools.product(objs, repeat=2):
        f = b.braiding.get((x, y))
        if f is None:
            raise StructureError(f"braiding missing at {(x, y)}")
        typed &= _expect(report, "braiding-typing", (x, y), c, f, m.t_obj(x, y), m.t_obj(y, x))
    if not typed:
        return report
    for x, y in itertools.product(objs, repeat=2):
        if find_inverse(c, b.c(x, y)) is None:
            report.add("braiding-iso", (x, y))
    for f, g in itertools.product(c.morphisms(), repeat=2):
        x, y = c.dom[f], c.dom[g]
        xp, yp = c.cod[f], c.cod[g]
        if c.comp(b.c(xp, yp), m.t_mor(f, g)) != c.comp(m.t_mor(g, f), b.c(x, y)):
            report.add("braiding-naturality", (f, g))
    for x, y, z in itertools.product(objs, repeat=3):
        # hexagon 1: c_{x, y@z} routed two ways from (x@y)@z
        lhs = c.comp_many(m.a(y, z, x), b.c(x, m.t_obj(y, z)), m.a(x, y, z))
        rhs = c.comp_many(
            m.t_mor(c.identity[y], b.c(x, z)),
            m.a(y, x, z),
            m.t_mor(b.c(x, y), c.identity[z]),
        )
        if lhs != rhs:
            report.add("hexagon-1", (x, y, z))
        # hexagon 2: c_{x@y, z} from x@(y@z)
        ia = inv(m, m.a(x, y, z))
        lhs2 = c.comp_many(inv(m, m.a(z, x, y)), b.c(m.t_obj(x, y), z), ia)
        rhs2 = c.comp_many(
            m.t_mor(b.c(x, z), c.identity[y]),
            inv(m, m.a(x, z, y)),
            m.t_mor(c.identity[x], b.c(y, z)),
        )
        if lhs2 != rhs2:
            report.add("hexagon-2", (x, y, z))
    if b.symmetric_flag:
        for x, y in itertools.product(objs, repeat=2):
            if c.comp(b.c(y, x), b.c(x, y)) != c.identity[m.t_obj(x, y)]:
                report.add("symmetry", (x, y))
    return report


def product_braided(b1: BraidedStructure, b2: BraidedStructure) -> BraidedStructure:
    host = product_monoidal(b1.host, b2.host)
    n2, m2 = b2.host.base.n_objects, b2.host.base.n_morphisms
    braiding = {}
    for i1, j1, i2, j2 in itertools.product(
        b1.host.base.objects(), b2.host.base.objects(),
        b1.host.base.objects(), b2.host.base.objects(),
    ):
        braiding[(i1 * n2 + j1, i2 * n2 + j2)] = b1.c(i1, i2) * m2 + b2.c(j1, j2)
    return BraidedStructure(host, braiding, b1.symmetric_flag and b2.symmetric_flag)


@dataclass(frozen=True, eq=True)
class LaxMonoidalFunctor:
    """A functor between monoidal categories with comparison cells.

    direction "lax": unit_cell 1_B -> F(1_A), mult (x,y): F(x)@F(y) -> F(x@y).
    direction "oplax": cells reversed. direction "strong": lax cells, all invertible.
    """

    source: MonoidalCategory
    target: MonoidalCategory
    functor: Functor
    unit_cell: int
    mult: dict  # (x,y) -> morphism
    direction: str = "lax"

    def on_obj(self, x: int) -> int:
        return self.functor.obj_map[x]

    def on_mor(self, f: int) -> int:
        return self.functor.mor_map[f]

    def m2(self, x: int, y: int) -> int:
        return self.mult[(x, y)]

    def m2_lax(self, x: int, y: int) -> int:
        """The lax-direction cell F(x)@F(y) -> F(x@y), inverting if oplax."""
        if self.direction == "oplax":
            return inv(self.target, self.mult[(x, y)])
        return self.mult[(x, y)]

    def unit_lax(self) -> int:
        if self.direction == "oplax":
            return inv(self.target, self.unit_cell)
        return self.unit_cell


def check_lax_monoidal_functor(f: LaxMonoidalFunctor) -> ValidationReport:
    report = ValidationReport("lax monoidal functor")
    a, b = f.source, f.target
    c = b.base
    report.extend(check_functor(f.functor))
    if f.direction not in ("lax", "oplax", "strong"):
        raise StructureError(f"unknown direction {f.direction!r}")
    if not report.ok:
        return report
    oplax = f.direction == "oplax"

    typed = True
    du, cu = (f.on_obj(a.unit), b.unit) if oplax else (b.unit, f.on_obj(a.unit))
    typed &= _expect(report, "unit-cell-typing", (), c, f.unit_cell, du, cu)
    for x, y in itertools.product(a.base.objects(), repeat=2):
        cell = f.mult.get((x, y))
        if cell is None:
            raise StructureError(f"mult cell missing at {(x, y)}")
        fx_fy = b.t_obj(f.on_obj(x), f.on_obj(y))
        fxy = f.on_obj(a.t_obj(x, y))
        d0, c0 = (fxy, fx_fy) if oplax else (fx_fy, fxy)
        typed &= _expect(report, "mult-cell-typing", (x, y), c, cell, d0, c0)
    if not typed:
        return report

    # naturality of mult
    for p, q in itertools.product(a.base.morphisms(), repeat=2):
        x, y = a.base.dom[p], a.base.dom[q]
        xp, yp = a.base.cod[p], a.base.cod[q]
        if oplax:
            lhs = c.comp(f.m2(xp, yp), f.on_mor(a.t_mor(p, q)))
            rhs = c.comp(b.t_mor(f.on_mor(p), f.on_mor(q)), f.m2(x, y))
        else:
            lhs = c.comp(f.m2(xp, yp), b.t_mor(f.on_mor(p), f.on_mor(q)))
            rhs = c.comp(f.on_mor(a.t_mor(p, q)), f.m2(x, y))
        if lhs != rhs:
            report.add("mult-naturality", (p, q))

    # lax associativity / unitality (in the lax direction; oplax is mirrored)
    def m2d(x, y):
        return f.m2(x, y)

    for x, y, z in itertools.product(a.base.objects(), repeat=3):
        fx, fy, fz = f.on_obj(x), f.on_obj(y), f.on_obj(z)
        if not oplax:
            lhs = c.comp_many(
                f.on_mor(a.a(x, y, z)), m2d(a.t_obj(x, y), z),
                b.t_mor(m2d(x, y), c.identity[fz]),
            )
            rhs = c.comp_many(
                m2d(x, a.t_obj(y, z)), b.t_mor(c.identity[fx], m2d(y, z)),
                b.a(fx, fy, fz),
            )
        else:
            lhs = c.comp_many(
                b.t_mor(m2d(x, y), c.identity[fz]), m2d(a.t_obj(x, y), z),
            )
            rhs = c.comp_many(
                inv(b, b.a(fx, fy, fz)), b.t_mor(c.identity[fx], m2d(y, z)),
                m2d(x, a.t_obj(y, z)), f.on_mor(a.a(x, y, z)),
            )
        if lhs != rhs:
            report.add("lax-associativity", (x, y, z))

    for x in a.base.objects():
        fx = f.on_obj(x)
        if not oplax:
            lhs = c.comp_many(
                f.on_mor(a.l(x)), m2d(a.unit, x),
                b.t_mor(f.unit_cell, c.identity[fx]),
            )
            if lhs != b.l(fx):
                report.add("lax-left-unitality", (x,))
            rhs = c.comp_many(
                f.on_mor(a.r(x)), m2d(x, a.unit),
                b.t_mor(c.identity[fx], f.unit_cell),
            )
            if rhs != b.r(fx):
                report.add("lax-right-unitality", (x,))
        else:
            lhs = c.comp_many(
                b.l(fx), b.t_mor(f.unit_cell, c.identity[fx]), m2d(a.unit, x),
            )
            if lhs != f.on_mor(a.l(x)):
                report.add("lax-left-unitality", (x,))
            rhs = c.comp_many(
                b.r(fx), b.t_mor(c.identity[fx], f.unit_cell), m2d(x, a.unit),
            )
            if rhs != f.on_mor(a.r(x)):
                report.add("lax-right-unitality", (x,))

    if f.direction == "strong":
        if find_inverse(c, f.unit_cell) is None:
            report.add("cell-invertibility", ("unit",))
        for x, y in itertools.product(a.base.objects(), repeat=2):
            if find_inverse(c, f.m2(x, y)) is None:
                report.add("cell-invertibility", (x, y))
    return report


def identity_lax(m: MonoidalCategory) -> LaxMonoidalFunctor:
    mult = {
        (x, y): m.base.identity[m.t_obj(x, y)]
        for x, y in itertools.product(m.base.objects(), repeat=2)
    }
    return LaxMonoidalFunctor(
        m, m, identity_functor(m.base), m.base.identity[m.unit], mult, "strong"
    )


def compose_lax(g: LaxMonoidalFunctor, f: LaxMonoidalFunctor) -> LaxMonoidalFunctor:
    """g after f; both must be lax-direction (or strong)."""
    if "oplax" in (g.direction, f.direction):
        raise StructureError("composition implemented for lax-direction functors")
    c = g.target.base
    functor = Functor(
        f.functor.source,
        g.functor.target,
        tuple(g.on_obj(x) for x in f.functor.obj_map),
        tuple(g.on_mor(m) for m in f.functor.mor_map),
    )
    unit = c.comp(g.on_mor(f.unit_cell), g.unit_cell)
    mult = {}
    for x, y in itertools.product(f.source.base.objects(), repeat=2):
        mult[(x, y)] = c.comp(g.on_mor(f.m2(x, y)), g.m2(f.on_obj(x), f.on_obj(y)))
    direction = "strong" if g.direction == f.direction == "strong" else "lax"
    return LaxMonoidalFunctor(f.source, g.target, functor, unit, mult, direction)


def product_lax(f: LaxMonoidalFunctor, g: LaxMonoidalFunctor) -> LaxMonoidalFunctor:
    """F x G between product monoidal categories (lax direction)."""
    src = product_monoidal(f.source, g.source)
    tgt = product_monoidal(f.target, g.target)
    n2, m2 = g.source.base.n_objects, g.source.base.n_morphisms
    nt2, mt2 = g.target.base.n_objects, g.target.base.n_morphisms
    obj = tuple(
        f.on_obj(i) * nt2 + g.on_obj(j)
        for i in f.source.base.objects()
        for j in g.source.base.objects()
    )
    mor = tuple(
        f.on_mor(i) * mt2 + g.on_mor(j)
        for i in f.source.base.morphisms()
        for j in g.source.base.morphisms()
    )
    functor = Functor(src.base, tgt.base, obj, mor)
    unit = f.unit_cell * mt2 + g.unit_cell
    mult = {}
    for i1, j1, i2, j2 in itertools.product(
        f.source.base.objects(), g.source.base.objects(),
        f.source.base.objects(), g.source.base.objects(),
    ):
        mult[(i1 * n2 + j1, i2 * n2 + j2)] = f.m2(i1, i2) * mt2 + g.m2(j1, j2)
    direction = "strong" if f.direction == g.direction == "strong" else "lax"
    return LaxMonoidalFunctor(src, tgt, functor, unit, mult, direction)


def trivial_monoidal() -> MonoidalCategory:
    """The one-object one-morphism monoidal category."""
    from ecat.core import terminal_category

    return strict_monoidal(
        terminal_category(),
        Functor(product_category(terminal_category(), terminal_category()),
                terminal_category(), (0,), (0,)),
        0,
    )


def unit_pick_lax(m: MonoidalCategory) -> LaxMonoidalFunctor:
    """The strong monoidal functor * -> M picking the tensor unit."""
    triv = trivial_monoidal()
    functor = Functor(triv.base, m.base, (m.unit,), (m.base.identity[m.unit],))
    mult = {(0, 0): m.l(m.unit)}
    return LaxMonoidalFunctor(triv, m, functor, m.base.identity[m.unit], mult, "strong")


def swap_lax(m: MonoidalCategory, n: MonoidalCategory) -> LaxMonoidalFunctor:
    """The strict switching functor M x N -> N x M."""
    src = product_monoidal(m, n)
    tgt = product_monoidal(n, m)
    nn, mn = n.base.n_objects, n.base.n_morphisms
    nm, mm = m.base.n_objects, m.base.n_morphisms
    obj = [0] * src.base.n_objects
    mor = [0] * src.base.n_morphisms
    for i in m.base.objects():
        for j in n.base.objects():
            obj[i * nn + j] = j * nm + i
    for f in m.base.morphisms():
        for g in n.base.morphisms():
            mor[f * mn + g] = g * mm + f
    functor = Functor(src.base, tgt.base, tuple(obj), tuple(mor))
    mult = {
        (x, y): tgt.base.identity[functor.obj_map[src.t_obj(x, y)]]
        for x, y in itertools.product(src.base.objects(), repeat=2)
    }
    return LaxMonoidalFunctor(
        src, tgt, functor, tgt.base.identity[tgt.unit], mult, "strong"
    )


@dataclass(frozen=True, eq=True)
class LaxMonoidalNat:
    source: LaxMonoidalFunctor
    target: LaxMonoidalFunctor
    nat: NatTransf

    def at(self, x: int) -> int:
        return self.nat.components[x]


def check_lax_monoidal_nat(n: LaxMonoidalNat) -> ValidationReport:
    report = ValidationReport("monoidal natural transformation")
    f, g = n.source, n.target
    b = f.target
    c = b.base
    report.extend(check_nat_transf(n.nat))
    if not report.ok:
        return report
    if c.comp(n.at(f.source.unit), f.unit_cell) != g.unit_cell:
        report.add("monoidal-nat-unit", ())
    for x, y in itertools.product(f.source.base.objects(), repeat=2):
        lhs = c.comp(n.at(f.source.t_obj(x, y)), f.m2(x, y))
        rhs = c.comp(g.m2(x, y), b.t_mor(n.at(x), n.at(y)))
        if lhs != rhs:
            report.add("monoidal-nat-mult", (x, y))
    return report


def identity_lax_nat(f: LaxMonoidalFunctor) -> LaxMonoidalNat:
    from ecat.core import identity_nat

    return LaxMonoidalNat(f, f, identity_nat(f.functor))


def check_braided_lax_functor(
    f: LaxMonoidalFunctor, cs: BraidedStructure, ct: BraidedStructure
) -> ValidationReport:
    """F is braided: F(c) . mult = mult . c on images."""
    report = check_lax_monoidal_functor(f)
    c = f.target.base
    for x, y in itertools.product(f.source.base.objects(), repeat=2):
        lhs = c.comp(f.m2_lax(y, x), ct.c(f.on_obj(x), f.on_obj(y)))
        rhs = c.comp(f.on_mor(cs.c(x, y)), f.m2_lax(x, y))
        if lhs != rhs:
            report.add("braided-functor", (x, y))
    return report


def mid_swap(m: MonoidalCategory, a1: int, a2: int, b1: int, b2: int, swap) -> int:
    """(a1@a2)@(b1@b2) -> (a1@b1)@(a2@b2) exchanging the middle factors.

    swap(u, v) must hand back a morphism u@v -> v@u.
    """
    c = m.base
    s1 = m.a(a1, a2, m.t_obj(b1, b2))
    s2 = m.t_mor(c.identity[a1], inv(m, m.a(a2, b1, b2)))
    s3 = m.t_mor(c.identity[a1], m.t_mor(swap(a2, b1), c.identity[b2]))
    s4 = m.t_mor(c.identity[a1], m.a(b1, a2, b2))
    s5 = inv(m, m.a(a1, b1, m.t_obj(a2, b2)))
    return c.comp_many(s5, s4, s3, s2, s1)


def braided_tensor_lax_structure(b: BraidedStructure) -> LaxMonoidalFunctor:
    """The tensor functor A x A -> A with the braiding-induced lax cells."""
    m = b.host
    prod = product_monoidal(m, m)
    n = m.base.n_objects
    mult = {}
    for p, q in itertools.product(prod.base.objects(), repeat=2):
        a1, b1 = divmod(p, n)
        a2, b2 = divmod(q, n)
        # (a1@b1)@(a2@b2) -> (a1@a2)@(b1@b2), swapping with c_{b1,a2}
        mult[(p, q)] = mid_swap(m, a1, b1, a2, b2, lambda u, v: b.c(u, v))
    unit = inv(m, m.l(m.unit))
    tensor = Functor(prod.base, m.base, m.tensor.obj_map, m.tensor.mor_map)
    return LaxMonoidalFunctor(prod, m, tensor, unit, mult, "strong")


@dataclass(frozen=True, eq=True)
class AlgebraObject:
    host: MonoidalCategory
    carrier: int
    mult: int  # A@A -> A
    unit: int  # 1 -> A
    commutative_flag: bool = False


def check_algebra(
    alg: AlgebraObject, braiding: BraidedStructure | None = None
) -> ValidationReport:
    report = ValidationReport("algebra object")
    m = alg.host
    c = m.base
    a = alg.carrier
    aa = m.t_obj(a, a)
    typed = _expect(report, "algebra-typing", ("mult",), c, alg.mult, aa, a)
    typed &= _expect(report, "algebra-typing", ("unit",), c, alg.unit, m.unit, a)
    if not typed:
        return report
    lhs = c.comp(alg.mult, m.t_mor(alg.mult, c.identity[a]))
    rhs = c.comp_many(alg.mult, m.t_mor(c.identity[a], alg.mult), m.a(a, a, a))
    if lhs != rhs:
        report.add("algebra-associativity", (a,))
    if c.comp(alg.mult, m.t_mor(alg.unit, c.identity[a])) != m.l(a):
        report.add("algebra-left-unit", (a,))
    if c.comp(alg.mult, m.t_mor(c.identity[a], alg.unit)) != m.r(a):
        report.add("algebra-right-unit", (a,))
    if alg.commutative_flag:
        if braiding is None:
            raise StructureError("commutativity check needs a braiding")
        if c.comp(alg.mult, braiding.c(a, a)) != alg.mult:
            report.add("algebra-commutativity", (a,))
    return report


@dataclass(frozen=True, eq=True)
class HalfBraidingOrd:
    carrier: int
    components: dict  # z -> morphism z@x -> x@z


def check_half_braiding(m: MonoidalCategory, hb: HalfBraidingOrd) -> ValidationReport:
    report = ValidationReport("half-braiding")
    c = m.base
    x = hb.carrier
    typed = True
    for z in c.objects():
        g = hb.components.get(z)
        if g is None:
            raise StructureError(f"half-braiding missing component at {z}")
        typed &= _expect(
            report, "half-braiding-typing", (z,), c, g, m.t_obj(z, x), m.t_obj(x, z)
        )
    if not typed:
        return report
    for z in c.objects():
        if find_inverse(c, hb.components[z]) is None:
            report.add("half-braiding-iso", (z,))
    for f in c.morphisms():
        z, zp = c.dom[f], c.cod[f]
        lhs = c.comp(hb.components[zp], m.t_mor(f, c.identity[x]))
        rhs = c.comp(m.t_mor(c.identity[x], f), hb.components[z])
        if lhs != rhs:
            report.add("half-braiding-naturality", (f,))
    for y, z in itertools.product(c.objects(), repeat=2):
        # both sides (y@z)@x -> x@(y@z)
        rhs = c.comp_many(
            m.a(x, y, z),
            m.t_mor(hb.components[y], c.identity[z]),
            inv(m, m.a(y, x, z)),
            m.t_mor(c.identity[y], hb.components[z]),
            m.a(y, z, x),
        )
        if hb.components[m.t_obj(y, z)] != rhs:
            report.add("half-braiding-tensor", (y, z))
    u = m.unit
    if hb.components[u] != c.comp(inv(m, m.r(x)), m.l(x)):
        report.add("half-braiding-unit", (u,))
    return report


def enumerate_half_braidings(
    m: MonoidalCategory, x: int, budget: Budget | None = None
) -> list[HalfBraidingOrd]:
    """All half-braidings on x, deterministically ordered."""
    c = m.base
    budget = budget or Budget(10**7, "half-braiding enumeration")
    candidates = []
    for z in c.objects():
        opts = [
            f
            for f in c.hom(m.t_obj(z, x), m.t_obj(x, z))
            if find_inverse(c, f) is not None
        ]
        candidates.append(opts)
    out = []
    for combo in itertools.product(*candidates):
        budget.spend()
        hb = HalfBraidingOrd(x, dict(enumerate(combo)))
        if check_half_braiding(m, hb).ok:
            out.append(hb)
    return out


@dataclass(frozen=True, eq=True)
class CenterResult:
    """A center presented as a braided monoidal category plus forgetful data.

    object_data[i] describes center object i; forgetful is a strong monoidal
    functor into the host.
    """

    monoidal: MonoidalCategory
    braided: BraidedStructure
    forgetful: LaxMonoidalFunctor
    object_data: tuple


def drinfeld_center_z1(
    m: MonoidalCategory, budget: Budget | None = None
) -> CenterResult:
    """The category of (object, half-braiding) pairs, built by brute force."""
    c = m.base
    budget = budget or Budget(10**7, "drinfeld center")
    z_objects: list[tuple[int, HalfBraidingOrd]] = []
    for x in c.objects():
        for hb in enumerate_half_braidings(m, x, budget):
            z_objects.append((x, hb))
    nz = len(z_objects)

    def respects(f: int, src: tuple, tgt: tuple) -> bool:
        x, gamma = src
        y, delta = tgt
        for z in c.objects():
            lhs = c.comp(delta.components[z], m.t_mor(c.identity[z], f))
            rhs = c.comp(m.t_mor(f, c.identity[z]), gamma.components[z])
            if lhs != rhs:
                return False
        return True

    z_morphisms: list[tuple[int, int, int]] = []  # (src obj, tgt obj, host mor)
    for i, src in enumerate(z_objects):
        for j, tgt in enumerate(z_objects):
            for f in c.hom(src[0], tgt[0]):
                budget.spend()
                if respects(f, src, tgt):
                    z_morphisms.append((i, j, f))
    mor_index = {t: k for k, t in enumerate(z_morphisms)}
    dom = tuple(t[0] for t in z_morphisms)
    cod = tuple(t[1] for t in z_morphisms)
    identity = tuple(mor_index[(i, i, c.identity[x])] for i, (x, _) in enumerate(z_objects))
    compose = {}
    for kf, (i, j, f) in enumerate(z_morphisms):
        for kg, (jp, k, g) in enumerate(z_morphisms):
            if jp == j:
                compose[(kg, kf)] = mor_index[(i, k, c.comp(g, f))]
    zcat = FinCategory(nz, dom, cod, identity, compose)

    def tensor_obj(i: int, j: int) -> int:
        x, gamma = z_objects[i]
        y, delta = z_objects[j]
        xy = m.t_obj(x, y)
        comp = {}
        for z in c.objects():
            # z@(x@y) -> x@(y@z) two-step exchange past each factor
            comp[z] = c.comp_many(
                inv(m, m.a(x, y, z)),
                m.t_mor(c.identity[x], delta.components[z]),
                m.a(x, z, y),
                m.t_mor(gamma.components[z], c.identity[y]),
                inv(m, m.a(z, x, y)),
            )
        return z_objects.index((xy, HalfBraidingOrd(xy, comp)))

    t_obj_map = [0] * (nz * nz)
    for i, j in itertools.product(range(nz), repeat=2):
        t_obj_map[i * nz + j] = tensor_obj(i, j)
    nzm = len(z_morphisms)
    t_mor_map = [0] * (nzm * nzm)
    for kf, (i1, j1, f) in enumerate(z_morphisms):
        for kg, (i2, j2, g) in enumerate(z_morphisms):
            t_mor_map[kf * nzm + kg] = mor_index[
                (t_obj_map[i1 * nz + i2], t_obj_map[j1 * nz + j2], m.t_mor(f, g))
            ]
    ztensor = Functor(product_category(zcat, zcat), zcat, tuple(t_obj_map), tuple(t_mor_map))

    unit_hb = HalfBraidingOrd(
        m.unit, {z: c.comp(inv(m, m.l(z)), m.r(z)) for z in c.objects()}
    )
    z_unit = z_objects.index((m.unit, unit_hb))

    def lift(i: int, j: int, f: int) -> int:
        return mor_index[(i, j, f)]

    assoc = {}
    for i, j, k in itertools.product(range(nz), repeat=3):
        ij = t_obj_map[i * nz + j]
        jk = t_obj_map[j * nz + k]
        assoc[(i, j, k)] = lift(
            t_obj_map[ij * nz + k], t_obj_map[i * nz + jk],
            m.a(z_objects[i][0], z_objects[j][0], z_objects[k][0]),
        )
    lu = tuple(lift(t_obj_map[z_unit * nz + i], i, m.l(z_objects[i][0])) for i in range(nz))
    ru = tuple(lift(t_obj_map[i * nz + z_unit], i, m.r(z_objects[i][0])) for i in range(nz))
    zmon = MonoidalCategory(zcat, ztensor, z_unit, assoc, lu, ru)

    braiding = {}
    for i, j in itertools.product(range(nz), repeat=2):
        x, _ = z_objects[i]
        _, delta = z_objects[j]
        braiding[(i, j)] = lift(
            t_obj_map[i * nz + j], t_obj_map[j * nz + i],
            delta.components[x],
        )
    symmetric = all(
        zcat.comp(braiding[(j, i)], braiding[(i, j)])
        == zcat.identity[t_obj_map[i * nz + j]]
        for i, j in itertools.product(range(nz), repeat=2)
    )
    zbraided = BraidedStructure(zmon, braiding, symmetric)

    forget = Functor(
        zcat, c,
        tuple(x for x, _ in z_objects),
        tuple(f for _, _, f in z_morphisms),
    )
    fmult = {
        (i, j): c.identity[m.t_obj(z_objects[i][0], z_objects[j][0])]
        for i, j in itertools.product(range(nz), repeat=2)
    }
    forgetful = LaxMonoidalFunctor(
        zmon, m, forget, c.identity[m.unit], fmult, "strong"
    )
    return CenterResult(zmon, zbraided, forgetful, tuple(z_objects))


def full_monoidal_subcategory(
    m: MonoidalCategory, objs: list[int]
) -> tuple[MonoidalCategory, LaxMonoidalFunctor]:
    """The full subcategory on objs with the restricted monoidal structure.

    objs must contain the unit and be closed under tensor.
    """
    c = m.base
    objs = sorted(set(objs))
    if m.unit not in objs:
        raise StructureError("subcategory must contain the unit")
    obj_index = {x: i for i, x in enumerate(objs)}
    for x, y in itertools.product(objs, repeat=2):
        if m.t_obj(x, y) not in obj_index:
            raise StructureError(f"objects not tensor-closed at {(x, y)}")
    mors = [
        f for f in c.morphisms() if c.dom[f] in obj_index and c.cod[f] in obj_index
    ]
    mor_index = {f: i for i, f in enumerate(mors)}
    dom = tuple(obj_index[c.dom[f]] for f in mors)
    cod = tuple(obj_index[c.cod[f]] for f in mors)
    identity = tuple(mor_index[c.identity[x]] for x in objs)
    compose = {}
    for f in mors:
        for g in mors:
            if c.cod[f] == c.dom[g]:
                compose[(mor_index[g], mor_index[f])] = mor_index[c.comp(g, f)]
    sub = FinCategory(len(objs), dom, cod, identity, compose)
    n = len(objs)
    t_obj = [0] * (n * n)
    for x, y in itertools.product(objs, repeat=2):
        t_obj[obj_index[x] * n + obj_index[y]] = obj_index[m.t_obj(x, y)]
    nm = len(mors)
    t_mor = [0] * (nm * nm)
    for f, g in itertools.product(mors, repeat=2):
        t_mor[mor_index[f] * nm + mor_index[g]] = mor_index[m.t_mor(f, g)]
    tensor = Functor(product_category(sub, sub), sub, tuple(t_obj), tuple(t_mor))
    assoc = {
        (obj_index[x], obj_index[y], obj_index[z]): mor_index[m.a(x, y, z)]
        for x, y, z in itertools.product(objs, repeat=3)
    }
    lu = tuple(mor_index[m.l(x)] for x in objs)
    ru = tuple(mor_index[m.r(x)] for x in objs)
    submon = MonoidalCategory(sub, tensor, obj_index[m.unit], assoc, lu, ru)
    incl = Functor(sub, c, tuple(objs), tuple(mors))
    imult = {
        (i, j): c.identity[m.t_obj(objs[i], objs[j])]
        for i, j in itertools.product(range(n), repeat=2)
    }
    inclusion = LaxMonoidalFunctor(
        submon, m, incl, c.identity[m.unit], imult, "strong"
    )
    return submon, inclusion


def is_transparent(b: BraidedStructure, x: int, against: list[int]) -> bool:
    m = b.host
    c = m.base
    return all(
        c.comp(b.c(y, x), b.c(x, y)) == c.identity[m.t_obj(x, y)] for y in against
    )


def muger_centralizer(
    b: BraidedStructure, objs: list[int]
) -> tuple[MonoidalCategory, BraidedStructure, LaxMonoidalFunctor]:
    """Objects of the host doubly commuting with every object in objs."""
    m = b.host
    trans = [x for x in m.base.objects() if is_transparent(b, x, objs)]
    submon, inclusion = full_monoidal_subcategory(m, trans)
    obj_index = {x: i for i, x in enumerate(sorted(set(trans)))}
    mor_to_sub = {}
    for i, f in enumerate(inclusion.functor.mor_map):
        mor_to_sub[f] = i
    braiding = {
        (obj_index[x], obj_index[y]): mor_to_sub[b.c(x, y)]
        for x, y in itertools.product(sorted(set(trans)), repeat=2)
    }
    symmetric = all(
        submon.base.comp(braiding[(j, i)], braiding[(i, j)])
        == submon.base.identity[submon.t_obj(i, j)]
        for i, j in itertools.product(submon.base.objects(), repeat=2)
    )
    return submon, BraidedStructure(submon, braiding, symmetric), inclusion


def muger_center_z2(
    b: BraidedStructure,
) -> tuple[MonoidalCategory, BraidedStructure, LaxMonoidalFunctor]:
    """The full subcategory of transparent objects; always symmetric."""
    return muger_centralizer(b, list(b.host.base.objects()))


@dataclass(frozen=True, eq=True)
class DualityWitness:
    obj: int
    dual: int
    ev: int  # dual@obj -> 1 (left) or obj@dual -> 1 (right)
    coev: int  # 1 -> obj@dual (left) or 1 -> dual@obj (right)


def find_left_dual(m: MonoidalCategory, x: int) -> DualityWitness | None:
    """Search a left dual of x with zigzag identities."""
    c = m.base
    for d in c.objects():
        for ev in c.hom(m.t_obj(d, x), m.unit):
            for coev in c.hom(m.unit, m.t_obj(x, d)):
                # x -> 1@x -> (x@d)@x -> x@(d@x) -> x@1 -> x
                zig_x = c.comp_many(
                    m.r(x),
                    m.t_mor(c.identity[x], ev),
                    m.a(x, d, x),
                    m.t_mor(coev, c.identity[x]),
                    inv(m, m.l(x)),
                )
                # d -> d@1 -> d@(x@d) -> (d@x)@d -> 1@d -> d
                zig_d = c.comp_many(
                    m.l(d),
                    m.t_mor(ev, c.identity[d]),
                    inv(m, m.a(d, x, d)),
                    m.t_mor(c.identity[d], coev),
                    inv(m, m.r(d)),
                )
                if zig_x == c.identity[x] and zig_d == c.identity[d]:
                    return DualityWitness(x, d, ev, coev)
    return None


def find_right_dual(m: MonoidalCategory, x: int) -> DualityWitness | None:
    """Search a right dual: ev x@d -> 1, coev 1 -> d@x."""
    c = m.base
    for d in c.objects():
        for ev in c.hom(m.t_obj(x, d), m.unit):
            for coev in c.hom(m.unit, m.t_obj(d, x)):
                # x -> x@1 -> x@(d@x) -> (x@d)@x -> 1@x -> x
                zig_x = c.comp_many(
                    m.l(x),
                    m.t_mor(ev, c.identity[x]),
                    inv(m, m.a(x, d, x)),
                    m.t_mor(c.identity[x], coev),
                    inv(m, m.r(x)),
                )
                # d -> 1@d -> (d@x)@d -> d@(x@d) -> d@1 -> d
                zig_d = c.comp_many(
                    m.r(d),
                    m.t_mor(c.identity[d], ev),
                    m.a(d, x, d),
                    m.t_mor(coev, c.identity[d]),
                    inv(m, m.l(d)),
                )
                if zig_x == c.identity[x] and zig_d == c.identity[d]:
                    return DualityWitness(x, d, ev, coev)
    return None


def check_rigid(m: MonoidalCategory) -> tuple[ValidationReport, dict]:
    """Every object must admit a left and a right dual; witnesses returned."""
    report = ValidationReport("rigidity")
    witnesses = {}
    for x in m.base.objects():
        left = find_left_dual(m, x)
        right = find_right_dual(m, x)
        if left is None:
            report.add("left-dual", (x,))
        if right is None:
            report.add("right-dual", (x,))
        witnesses[x] = (left, right)
    return report, witnesses
