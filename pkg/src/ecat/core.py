"""Finite categories, functors, natural transformations, brute-force searches.

A category is a pile of index tables. Objects are ``0..n-1``; each morphism
index has a domain, codomain; ``compose[(g, f)]`` is defined exactly when
``cod(f) == dom(g)``. Morphisms are compared by index only.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field

from ecat.report import Budget, StructureError, ValidationReport


@dataclass(frozen=True, eq=True)
class FinCategory:
    n_objects: int
    dom: tuple[int, ...]
    cod: tuple[int, ...]
    identity: tuple[int, ...]
    compose: dict  # (g, f) -> g.f, keys are morphism index pairs
    obj_names: tuple[str, ...] | None = field(default=None, compare=False)
    mor_names: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def n_morphisms(self) -> int:
        return len(self.dom)

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return tuple(
            f for f in range(self.n_morphisms) if self.dom[f] == x and self.cod[f] == y
        )

    def comp(self, g: int, f: int) -> int:
        """g after f."""
        try:
            return self.compose[(g, f)]
        except KeyError:
            raise StructureError(
                f"compose undefined for ({g}, {f}): cod(f)={self.cod[f]}, dom(g)={self.dom[g]}"
            ) from None

    def comp_many(self, *mors: int) -> int:
        """Composite of a chain listed target-to-source: comp_many(h, g, f) = h.g.f."""
        out = mors[0]
        for f in mors[1:]:
            out = self.comp(out, f)
        return out

    def objects(self) -> range:
        return range(self.n_objects)

    def morphisms(self) -> range:
        return range(self.n_morphisms)

    def obj_name(self, x: int) -> str:
        return self.obj_names[x] if self.obj_names else str(x)

    def mor_name(self, f: int) -> str:
        return self.mor_names[f] if self.mor_names else str(f)


def _check_ranges(c: FinCategory) -> None:
    n, m = c.n_objects, c.n_morphisms
    if len(c.cod) != m or len(c.identity) != n:
        raise StructureError("table lengths inconsistent")
    for f in range(m):
        if not (0 <= c.dom[f] < n and 0 <= c.cod[f] < n):
            raise StructureError(f"morphism {f} has out-of-range dom/cod")
    for x in range(n):
        if not (0 <= c.identity[x] < m):
            raise StructureError(f"identity of object {x} out of range")
    for (g, f), h in c.compose.items():
        if not (0 <= g < m and 0 <= f < m and 0 <= h < m):
            raise StructureError(f"compose entry ({g},{f})->{h} out of range")


def check_category(c: FinCategory) -> ValidationReport:
    report = ValidationReport("category")
    _check_ranges(c)
    for x in c.objects():
        e = c.identity[x]
        if c.dom[e] != x or c.cod[e] != x:
            report.add("identity-typing", (x,), f"id has dom {c.dom[e]}, cod {c.cod[e]}")
    for g in c.morphisms():
        for f in c.morphisms():
            defined = (g, f) in c.compose
            composable = c.cod[f] == c.dom[g]
            if composable and not defined:
                report.add("compose-totality", (g, f), "composable pair undefined")
            elif defined and not composable:
                report.add("compose-partiality", (g, f), "non-composable pair defined")
            elif defined:
                h = c.compose[(g, f)]
                if c.dom[h] != c.dom[f] or c.cod[h] != c.cod[g]:
                    report.add("compose-typing", (g, f), f"composite {h} mistyped")
    if not report.ok:
        return report
    for f in c.morphisms():
        if c.comp(c.identity[c.cod[f]], f) != f:
            report.add("identity-law", (f,), "id . f != f")
        if c.comp(f, c.identity[c.dom[f]]) != f:
            report.add("identity-law", (f,), "f . id != f")
    for h in c.morphisms():
        for g in c.morphisms():
            if c.cod[g] != c.dom[h]:
                continue
            for f in c.morphisms():
                if c.cod[f] != c.dom[g]:
                    continue
                if c.comp(h, c.comp(g, f)) != c.comp(c.comp(h, g), f):
                    report.add("associativity", (h, g, f))
    return report


class ProductCompose(Mapping):
    """Compose table of a product category, computed entry by entry.

    Materializing the full table for a product of two already-large
    categories can need billions of entries. This keeps the plain mapping
    interface but stores only the factor tables. Nested products flatten,
    so equal iterated products compare equal regardless of bracketing.
    """

    __slots__ = ("factors",)

    def __init__(self, c: FinCategory, d: FinCategory):
        factors = []
        for cat in (c, d):
            if isinstance(cat.compose, ProductCompose):
                factors.extend(cat.compose.factors)
            else:
                factors.append((cat.compose, cat.n_morphisms))
        self.factors = tuple(factors)

    def _split(self, key):
        g, f = key
        parts = []
        for table, m in reversed(self.factors):
            g, gi = divmod(g, m)
            f, fi = divmod(f, m)
            parts.append((table, m, gi, fi))
        parts.reverse()
        return parts

    def __getitem__(self, key):
        out = 0
        for table, m, gi, fi in self._split(key):
            out = out * m + table[(gi, fi)]
        return out

    def __contains__(self, key):
        try:
            self[key]
        except (KeyError, TypeError):
            return False
        return True

    def __len__(self):
        out = 1
        for table, _ in self.factors:
            out *= len(table)
        return out

    def __iter__(self):
        for combo in itertools.product(*(t.items() for t, _ in self.factors)):
            g = f = 0
            for (key, _), (_, m) in zip(combo, self.factors):
                g = g * m + key[0]
                f = f * m + key[1]
            yield (g, f)

    def __eq__(self, other):
        if isinstance(other, ProductCompose):
            return self.factors == other.factors
        if isinstance(other, Mapping):
            return len(self) == len(other) and all(
                k in self and self[k] == v for k, v in other.items()
            )
        return NotImplemented

    __hash__ = None


_PRODUCT_COMPOSE_CAP = 1_000_000


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    """Pairs with componentwise composition; object (i,j) gets index i*|D|+j."""
    nd, md = d.n_objects, d.n_morphisms
    dom, cod = [], []
    for f in c.morphisms():
        for g in d.morphisms():
            dom.append(c.dom[f] * nd + d.dom[g])
            cod.append(c.cod[f] * nd + d.cod[g])
    identity = tuple(
        c.identity[i] * md + d.identity[j] for i in c.objects() for j in d.objects()
    )
    if len(c.compose) * len(d.compose) > _PRODUCT_COMPOSE_CAP:
        compose = ProductCompose(c, d)
    else:
        compose = {}
        for (g1, f1), h1 in c.compose.items():
            for (g2, f2), h2 in d.compose.items():
                compose[(g1 * md + g2, f1 * md + f2)] = h1 * md + h2
    names = None
    if c.obj_names and d.obj_names:
        names = tuple(f"({a},{b})" for a in c.obj_names for b in d.obj_names)
    return FinCategory(
        n_objects=c.n_objects * nd,
        dom=tuple(dom),
        cod=tuple(cod),
        identity=identity,
        compose=compose,
        obj_names=names,
    )


def opposite_category(c: FinCategory) -> FinCategory:
    compose = {(f, g): h for (g, f), h in c.compose.items()}
    return FinCategory(
        n_objects=c.n_objects,
        dom=c.cod,
        cod=c.dom,
        identity=c.identity,
        compose=compose,
        obj_names=c.obj_names,
        mor_names=c.mor_names,
    )


def terminal_category() -> FinCategory:
    return FinCategory(
        n_objects=1,
        dom=(0,),
        cod=(0,),
        identity=(0,),
        compose={(0, 0): 0},
        obj_names=("*",),
        mor_names=("1_*",),
    )


@dataclass(frozen=True, eq=True)
class Functor:
    source: FinCategory
    target: FinCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def on_obj(self, x: int) -> int:
        return self.obj_map[x]

    def on_mor(self, f: int) -> int:
        return self.mor_map[f]


def check_functor(fun: Functor) -> ValidationReport:
    report = ValidationReport("functor")
    c, d = fun.source, fun.target
    if len(fun.obj_map) != c.n_objects or len(fun.mor_map) != c.n_morphisms:
        raise StructureError("functor table lengths inconsistent")
    for x in fun.obj_map:
        if not 0 <= x < d.n_objects:
            raise StructureError("functor obj_map out of range")
    for f in fun.mor_map:
        if not 0 <= f < d.n_morphisms:
            raise StructureError("functor mor_map out of range")
    for f in c.morphisms():
        if d.dom[fun.mor_map[f]] != fun.obj_map[c.dom[f]]:
            report.add("functor-dom", (f,))
        if d.cod[fun.mor_map[f]] != fun.obj_map[c.cod[f]]:
            report.add("functor-cod", (f,))
    for x in c.objects():
        if fun.mor_map[c.identity[x]] != d.identity[fun.obj_map[x]]:
            report.add("functor-identity", (x,))
    if not report.ok:
        return report
    for (g, f), h in c.compose.items():
        if d.comp(fun.mor_map[g], fun.mor_map[f]) != fun.mor_map[h]:
            report.add("functor-composition", (g, f))
    return report


def identity_functor(c: FinCategory) -> Functor:
    return Functor(c, c, tuple(c.objects()), tuple(c.morphisms()))


def compose_functors(g: Functor, f: Functor) -> Functor:
    """g after f."""
    if f.target is not g.source and f.target != g.source:
        raise StructureError("functors not composable")
    return Functor(
        f.source,
        g.target,
        tuple(g.obj_map[x] for x in f.obj_map),
        tuple(g.mor_map[m] for m in f.mor_map),
    )


def pair_functor(f: Functor, g: Functor) -> Functor:
    """The functor F x G between product categories."""
    src = product_category(f.source, g.source)
    tgt = product_category(f.target, g.target)
    nd, md = g.source.n_objects, g.source.n_morphisms
    nt, mt = g.target.n_objects, g.target.n_morphisms
    obj = tuple(
        f.obj_map[i] * nt + g.obj_map[j]
        for i in f.source.objects()
        for j in g.source.objects()
    )
    mor = tuple(
        f.mor_map[i] * mt + g.mor_map[j]
        for i in f.source.morphisms()
        for j in g.source.morphisms()
    )
    return Functor(src, tgt, obj, mor)


def constant_functor(c: FinCategory, d: FinCategory, x: int) -> Functor:
    return Functor(
        c, d, tuple(x for _ in c.objects()), tuple(d.identity[x] for _ in c.morphisms())
    )


@dataclass(frozen=True, eq=True)
class NatTransf:
    source_functor: Functor
    target_functor: Functor
    components: tuple[int, ...]

    def at(self, x: int) -> int:
        return self.components[x]


def check_nat_transf(nat: NatTransf) -> ValidationReport:
    report = ValidationReport("natural transformation")
    f, g = nat.source_functor, nat.target_functor
    c, d = f.source, f.target
    if len(nat.components) != c.n_objects:
        raise StructureError("component count mismatch")
    for x in c.objects():
        comp = nat.components[x]
        if not 0 <= comp < d.n_morphisms:
            raise StructureError(f"component at {x} out of range")
        if d.dom[comp] != f.obj_map[x] or d.cod[comp] != g.obj_map[x]:
            report.add("component-typing", (x,))
    if not report.ok:
        return report
    for m in c.morphisms():
        x, y = c.dom[m], c.cod[m]
        if d.comp(nat.components[y], f.mor_map[m]) != d.comp(g.mor_map[m], nat.components[x]):
            report.add("naturality", (m,))
    return report


def identity_nat(fun: Functor) -> NatTransf:
    return NatTransf(
        fun, fun, tuple(fun.target.identity[fun.obj_map[x]] for x in fun.source.objects())
    )


def vcomp_nats(beta: NatTransf, alpha: NatTransf) -> NatTransf:
    """beta after alpha, componentwise."""
    d = alpha.source_functor.target
    comps = tuple(
        d.comp(beta.components[x], alpha.components[x])
        for x in alpha.source_functor.source.objects()
    )
    return NatTransf(alpha.source_functor, beta.target_functor, comps)


def hcomp_nats(beta: NatTransf, alpha: NatTransf) -> NatTransf:
    """Horizontal composite: beta (between functors D->E) alongside alpha (C->D)."""
    fp, gp = beta.source_functor, beta.target_functor
    f, g = alpha.source_functor, alpha.target_functor
    e = fp.target
    comps = tuple(
        e.comp(beta.components[g.obj_map[x]], fp.mor_map[alpha.components[x]])
        for x in f.source.objects()
    )
    return NatTransf(compose_functors(fp, f), compose_functors(gp, g), comps)


def whisker_right(nat: NatTransf, fun: Functor) -> NatTransf:
    """nat applied after precomposition with fun."""
    comps = tuple(nat.components[fun.obj_map[x]] for x in fun.source.objects())
    return NatTransf(
        compose_functors(nat.source_functor, fun),
        compose_functors(nat.target_functor, fun),
        comps,
    )


def whisker_left(fun: Functor, nat: NatTransf) -> NatTransf:
    comps = tuple(fun.mor_map[c] for c in nat.components)
    return NatTransf(
        compose_functors(fun, nat.source_functor),
        compose_functors(fun, nat.target_functor),
        comps,
    )


def enumerate_functors(
    c: FinCategory, d: FinCategory, cap: int | None = None
) -> list[Functor]:
    """All functors C -> D in lexicographic (obj_map, then mor_map) order."""
    budget = Budget(cap, "functor enumeration")
    out: list[Functor] = []
    non_identity = [f for f in c.morphisms() if f not in set(c.identity)]
    forced = {}
    for x in c.objects():
        forced[c.identity[x]] = x

    for obj_map in itertools.product(range(d.n_objects), repeat=c.n_objects):
        budget.spend()
        mor_map = [0] * c.n_morphisms
        for e, x in forced.items():
            mor_map[e] = d.identity[obj_map[x]]
        candidates = {
            f: d.hom(obj_map[c.dom[f]], obj_map[c.cod[f]]) for f in non_identity
        }
        if any(not v for v in candidates.values()):
            continue

        def consistent(upto: int) -> bool:
            assigned = set(forced) | set(non_identity[: upto + 1])
            for (g, f), h in c.compose.items():
                if g in assigned and f in assigned and h in assigned:
                    if d.comp(mor_map[g], mor_map[f]) != mor_map[h]:
                        return False
            return True

        def backtrack(i: int) -> None:
            budget.spend()
            if i == len(non_identity):
                out.append(Functor(c, d, tuple(obj_map), tuple(mor_map)))
                return
            f = non_identity[i]
            for m in candidates[f]:
                mor_map[f] = m
                if consistent(i):
                    backtrack(i + 1)
            mor_map[f] = 0

        backtrack(0)
    return out


def enumerate_nat_transfs(
    f: Functor, g: Functor, cap: int | None = None
) -> list[NatTransf]:
    budget = Budget(cap, "natural transformation enumeration")
    c, d = f.source, f.target
    per_object = [sorted(d.hom(f.obj_map[x], g.obj_map[x])) for x in c.objects()]
    out = []
    for comps in itertools.product(*per_object):
        budget.spend()
        nat = NatTransf(f, g, comps)
        if check_nat_transf(nat).ok:
            out.append(nat)
    return out


def find_terminal_objects(c: FinCategory) -> list[int]:
    out = []
    for t in c.objects():
        if all(len(c.hom(x, t)) == 1 for x in c.objects()):
            out.append(t)
    return out


def find_initial_objects(c: FinCategory) -> list[int]:
    return find_terminal_objects(opposite_category(c))


def _degree_signature(c: FinCategory, x: int) -> tuple:
    outs = sorted(sum(1 for f in c.morphisms() if c.dom[f] == x and c.cod[f] == y) for y in c.objects())
    ins = sorted(sum(1 for f in c.morphisms() if c.cod[f] == x and c.dom[f] == y) for y in c.objects())
    loops = len(c.hom(x, x))
    return (tuple(outs), tuple(ins), loops)


def iso_search(
    c: FinCategory, d: FinCategory, cap: int | None = None
) -> Functor | None:
    """First isomorphism C -> D in deterministic order, or None."""
    if c.n_objects != d.n_objects or c.n_morphisms != d.n_morphisms:
        return None
    budget = Budget(cap, "isomorphism search")
    sig_c = [_degree_signature(c, x) for x in c.objects()]
    sig_d = [_degree_signature(d, x) for x in d.objects()]
    if sorted(sig_c) != sorted(sig_d):
        return None

    obj_map = [-1] * c.n_objects
    used_obj = [False] * d.n_objects

    def try_morphisms() -> Functor | None:
        mor_map = [-1] * c.n_morphisms
        used = [False] * d.n_morphisms
        for x in c.objects():
            e = c.identity[x]
            mor_map[e] = d.identity[obj_map[x]]
            used[mor_map[e]] = True
        non_identity = [f for f in c.morphisms() if mor_map[f] == -1]

        def backtrack(i: int) -> Functor | None:
            budget.spend()
            if i == len(non_identity):
                fun = Functor(c, d, tuple(obj_map), tuple(mor_map))
                return fun if check_functor(fun).ok else None
            f = non_identity[i]
            for m in d.hom(obj_map[c.dom[f]], obj_map[c.cod[f]]):
                if used[m]:
                    continue
                mor_map[f] = m
                used[m] = True
                ok = True
                assigned = [a for a in c.morphisms() if mor_map[a] != -1]
                for g in assigned:
                    for h in assigned:
                        if (g, h) in c.compose:
                            img = mor_map[c.compose[(g, h)]]
                            if img != -1 and d.comp(mor_map[g], mor_map[h]) != img:
                                ok = False
                                break
                    if not ok:
                        break
                if ok:
                    res = backtrack(i + 1)
                    if res is not None:
                        return res
                used[m] = False
                mor_map[f] = -1
            return None

        return backtrack(0)

    def assign_obj(x: int) -> Functor | None:
        budget.spend()
        if x == c.n_objects:
            return try_morphisms()
        for y in d.objects():
            if used_obj[y] or sig_c[x] != sig_d[y]:
                continue
            obj_map[x] = y
            used_obj[y] = True
            res = assign_obj(x + 1)
            if res is not None:
                return res
            used_obj[y] = False
        obj_map[x] = -1
        return None

    return assign_obj(0)


def inverse_functor(fun: Functor) -> Functor:
    """Inverse of a bijective functor."""
    obj = [0] * fun.target.n_objects
    mor = [0] * fun.target.n_morphisms
    for x, y in enumerate(fun.obj_map):
        obj[y] = x
    for f, g in enumerate(fun.mor_map):
        mor[g] = f
    return Functor(fun.target, fun.source, tuple(obj), tuple(mor))
