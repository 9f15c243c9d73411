"""Hopf presentations and order-by-order verification of the Hopf axioms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ncalg import Element, RewriteSystem, apply_morphism, map_tensor, multiply_slots
from .report import CheckRecord, check


@dataclass
class HopfPresentation:
    """Generators with rewrite rules, plus coproduct/counit/antipode images.

    Coproduct images are rank-2 elements, counit images rank-0 elements and
    antipode images rank-1 elements, all keyed by generator name.  The
    coproduct and counit extend as algebra morphisms, the antipode as an
    antimorphism.
    """

    model_id: str
    alg: RewriteSystem
    coproduct: dict
    counit: dict
    antipode: dict
    anchors: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in self.alg.names:
            for table in (self.coproduct, self.counit, self.antipode):
                if name not in table:
                    raise ValueError(f"{self.model_id}: missing image for {name}")

    @property
    def names(self):
        return self.alg.names

    def gen(self, name):
        return self.alg.gen(name)

    def delta(self, x: Element) -> Element:
        """Coproduct of a rank-1 element."""
        return apply_morphism(x, self.coproduct)

    def eps(self, x: Element) -> Element:
        return apply_morphism(x, self.counit)

    def gamma(self, x: Element) -> Element:
        return apply_morphism(x, self.antipode, anti=True)

    def delta_slot(self, t: Element, slot: int) -> Element:
        return map_tensor(t, slot, self.coproduct)

    def map_tables(self, fn) -> "HopfPresentation":
        """Apply ``fn`` to every stored element (same algebra object)."""
        return HopfPresentation(
            self.model_id, self.alg,
            {g: fn(v) for g, v in self.coproduct.items()},
            {g: fn(v) for g, v in self.counit.items()},
            {g: fn(v) for g, v in self.antipode.items()},
            dict(self.anchors),
        )


def lift_scalar(x: Element, rank: int = 1) -> Element:
    """View a rank-0 element as a multiple of the unit in a higher rank."""
    u = (x.alg.unit,) * rank
    return Element(x.alg, rank, {(u, k, s, mu): c for ((), k, s, mu), c in x.terms.items()})


def coproduct_residual(H: HopfPresentation, a: str, b: str) -> Element:
    """``[Delta a, Delta b] - Delta([a, b])``."""
    da, db = H.coproduct[a], H.coproduct[b]
    return da * db - db * da - H.delta(H.alg.bracket_value(a, b))


def check_coproduct_compatibility(H: HopfPresentation) -> list[CheckRecord]:
    """Delta respects every relation, including the commuting pairs."""
    names = H.alg.names
    out = []
    for i in range(len(names)):
        for j in range(i):
            a, b = names[i], names[j]
            out.append(check(f"Delta[{a},{b}]", H.anchors.get("relations", ""),
                             lambda a=a, b=b: coproduct_residual(H, a, b)))
    return out


def coassociativity_residual(H: HopfPresentation, g: str) -> Element:
    d = H.coproduct[g]
    return H.delta_slot(d, 0) - H.delta_slot(d, 1)


def check_coassociativity(H: HopfPresentation) -> list[CheckRecord]:
    return [check(f"coassoc {g}", H.anchors.get("coproduct", ""),
                  lambda g=g: coassociativity_residual(H, g)) for g in H.alg.names]


def counit_residuals(H: HopfPresentation, g: str) -> tuple[Element, Element]:
    d = H.coproduct[g]
    x = H.gen(g)
    left = map_tensor(d, 0, H.counit) - x
    right = map_tensor(d, 1, H.counit) - x
    return left, right


def antipode_residuals(H: HopfPresentation, g: str) -> tuple[Element, Element]:
    d = H.coproduct[g]
    unit_eps = lift_scalar(H.counit[g], 1)
    left = multiply_slots(map_tensor(d, 0, H.antipode, anti=True)) - unit_eps
    right = multiply_slots(map_tensor(d, 1, H.antipode, anti=True)) - unit_eps
    return left, right


def check_counit_antipode(H: HopfPresentation) -> list[CheckRecord]:
    out = []
    a_eps = H.anchors.get("counit", "")
    a_gam = H.anchors.get("antipode", "")
    for g in H.alg.names:
        out.append(check(f"(eps x id)Delta {g}", a_eps, lambda g=g: counit_residuals(H, g)[0]))
        out.append(check(f"(id x eps)Delta {g}", a_eps, lambda g=g: counit_residuals(H, g)[1]))
        out.append(check(f"m(gamma x id)Delta {g}", a_gam, lambda g=g: antipode_residuals(H, g)[0]))
        out.append(check(f"m(id x gamma)Delta {g}", a_gam, lambda g=g: antipode_residuals(H, g)[1]))
    return out


def check_hopf_axioms(H: HopfPresentation) -> list[CheckRecord]:
    return (check_coproduct_compatibility(H) + check_coassociativity(H)
            + check_counit_antipode(H))


def compare_presentations(a: HopfPresentation, b: HopfPresentation, generators=None) -> list:
    """Differences between two presentations over the same generator names.

    Returns ``(table, generator(s), difference)`` triples; empty means equal.
    """
    gens = list(generators or a.alg.names)
    diffs = []
    for i, g in enumerate(gens):
        for h in gens[:i]:
            d = a.alg.bracket_value(g, h) - b.alg.bracket_value(g, h).rebase(a.alg)
            if d:
                diffs.append(("bracket", (g, h), d))
    for table in ("coproduct", "counit", "antipode"):
        ta, tb = getattr(a, table), getattr(b, table)
        for g in gens:
            d = ta[g] - tb[g].rebase(a.alg)
            if d:
                diffs.append((table, g, d))
    return diffs
