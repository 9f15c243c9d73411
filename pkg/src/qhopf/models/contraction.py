"""Quantum contraction of the doubled algebras and the printed g_mu / s_mu presentations.

The contracted Hopf tables of U_w g_mu are not written out anywhere; they are
defined here as the images of the doubled structure under the contraction
map, with ``z = s w`` and ``s**2 = mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ConfigError, PresentationMismatch
from ..hopf import HopfPresentation, compare_presentations
from ..ncalg import Element, RewriteSystem, commutator, convert, tensor
from . import functions as fn
from .doubled import DOUBLED_GENS, DOUBLED_QGENS, build_doubled, build_doubled_qgroup

GMU_GENS = ("J", "D", "P1", "P2", "C1", "C2")
WEYL_GENS = ("J", "D", "P1", "P2")
FUNW_GENS = ("d", "theta", "p1", "p2", "c1", "c2")

MU_MODES = ("sym", -1, 0, 1)


def parse_mu(mu):
    """``'sym'`` or one of -1, 0, +1 (strings accepted)."""
    if mu in ("sym", None):
        return "sym"
    try:
        v = int(str(mu))
    except ValueError:
        raise ConfigError(f"mu must be -1, 0, +1 or sym, got {mu!r}") from None
    if v not in (-1, 0, 1):
        raise ConfigError(f"mu must be -1, 0, +1 or sym, got {mu!r}")
    return v


def mu_tag(mu) -> str:
    mu = parse_mu(mu)
    return "sym" if mu == "sym" else f"{mu:+d}" if mu else "0"


# ---------------------------------------------------------------------------
# linear contraction maps


def _lin(*terms):
    return [(name, Fraction(c), e) for name, c, e in terms]


@dataclass
class ContractionMap:
    """A linear change of generators with coefficients ``c * s**e``.

    ``forward[target]`` expresses a contracted generator in the source
    generators, ``inverse[source]`` the other way round.  The deformation
    parameters are related by ``z = s**param_s * w``.
    """

    source: tuple
    target: tuple
    forward: dict
    inverse: dict
    param_s: int = 1

    def compose_residual(self) -> list:
        """Nonzero entries of ``inverse o forward - id`` and ``forward o inverse - id``."""
        bad = []
        for outer, inner, names in ((self.forward, self.inverse, self.target),
                                    (self.inverse, self.forward, self.source)):
            for g in names:
                acc: dict = {}
                for h, c, e in outer[g]:
                    for g2, c2, e2 in inner[h]:
                        key = (g2, e + e2)
                        acc[key] = acc.get(key, 0) + c * c2
                for (g2, e), c in acc.items():
                    want = 1 if (g2 == g and e == 0) else 0
                    if c != want:
                        bad.append((g, g2, e, c - want))
        return bad

    def is_invertible(self) -> bool:
        return not self.compose_residual()

    def preimage(self, alg: RewriteSystem, name: str) -> Element:
        out = alg.zero()
        for h, c, e in self.forward[name]:
            out = out + alg.gen(h).scale(c, s=e)
        return out

    def images(self, target: RewriteSystem) -> dict:
        out = {}
        for g, terms in self.inverse.items():
            el = target.zero()
            for h, c, e in terms:
                el = el + target.gen(h).scale(c, s=e)
            out[g] = el
        return out


# (J, P1, P2, C1, C2, D; w) = (s N3/2, J+, s N+, -J-, s N-, J3/2; z/s)
ALGEBRA_MAP = ContractionMap(
    source=DOUBLED_GENS,
    target=GMU_GENS,
    forward={
        "J": _lin(("K1", Fraction(1, 2), 1), ("K2", Fraction(-1, 2), 1)),
        "D": _lin(("K1", Fraction(1, 2), 0), ("K2", Fraction(1, 2), 0)),
        "P1": _lin(("P1+", 1, 0), ("P2+", 1, 0)),
        "P2": _lin(("P1+", 1, 1), ("P2+", -1, 1)),
        "C1": _lin(("P1-", -1, 0), ("P2-", -1, 0)),
        "C2": _lin(("P1-", 1, 1), ("P2-", -1, 1)),
    },
    inverse={
        "K1": _lin(("D", 1, 0), ("J", 1, -1)),
        "K2": _lin(("D", 1, 0), ("J", -1, -1)),
        "P1+": _lin(("P1", Fraction(1, 2), 0), ("P2", Fraction(1, 2), -1)),
        "P2+": _lin(("P1", Fraction(1, 2), 0), ("P2", Fraction(-1, 2), -1)),
        "P1-": _lin(("C1", Fraction(-1, 2), 0), ("C2", Fraction(1, 2), -1)),
        "P2-": _lin(("C1", Fraction(-1, 2), 0), ("C2", Fraction(-1, 2), -1)),
    },
)

# a = (chi1+chi2)/2, b = (chi1-chi2)/2, likewise a+-, b+-;
# (theta, p1, p2, c1, c2, d; w) = (2b/s, a+, b+/s, -a-, b-/s, 2a; z/s)
GROUP_MAP = ContractionMap(
    source=DOUBLED_QGENS,
    target=FUNW_GENS,
    forward={
        "theta": _lin(("chi1", 1, -1), ("chi2", -1, -1)),
        "d": _lin(("chi1", 1, 0), ("chi2", 1, 0)),
        "p1": _lin(("a1+", Fraction(1, 2), 0), ("a2+", Fraction(1, 2), 0)),
        "p2": _lin(("a1+", Fraction(1, 2), -1), ("a2+", Fraction(-1, 2), -1)),
        "c1": _lin(("a1-", Fraction(-1, 2), 0), ("a2-", Fraction(-1, 2), 0)),
        "c2": _lin(("a1-", Fraction(1, 2), -1), ("a2-", Fraction(-1, 2), -1)),
    },
    inverse={
        "chi1": _lin(("d", Fraction(1, 2), 0), ("theta", Fraction(1, 2), 1)),
        "chi2": _lin(("d", Fraction(1, 2), 0), ("theta", Fraction(-1, 2), 1)),
        "a1+": _lin(("p1", 1, 0), ("p2", 1, 1)),
        "a2+": _lin(("p1", 1, 0), ("p2", -1, 1)),
        "a1-": _lin(("c1", -1, 0), ("c2", 1, 1)),
        "a2-": _lin(("c1", -1, 0), ("c2", -1, 1)),
    },
)


def contract_element(x: Element, cmap: ContractionMap, target: RewriteSystem,
                     where: str = "", images: dict | None = None) -> Element:
    """Rewrite a doubled element in contracted generators, with ``z = s w`` and ``s**2 = mu``."""
    images = images if images is not None else cmap.images(target)
    y = convert(x.substitute_param(1, cmap.param_s), images, target)
    return y.eliminate_s(where)


def contract_algebra(doubled: HopfPresentation, cmap: ContractionMap, model_id: str,
                     anchors: dict | None = None) -> HopfPresentation:
    """Compute every table of the contracted presentation inside ``doubled``.

    Brackets, coproducts and antipodes of the contracted generators are
    evaluated in the doubled algebra, the parameter is substituted
    (``z = s w``), the result is rewritten in the contracted generators and
    finally ``s**2`` is replaced by ``mu``.  Because the doubled normal form
    groups the generators in blocks that map onto commuting blocks of the
    target, the rewriting needs no target relations.
    """
    src = doubled.alg
    target = RewriteSystem(cmap.target, order=src.order, degree_cap=src.degree_cap,
                           param="w", label=model_id)
    images = cmap.images(target)
    pre = {g: cmap.preimage(src, g) for g in cmap.target}

    def push(x: Element, where: str) -> Element:
        return contract_element(x, cmap, target, f"{model_id}: {where}", images)

    brackets = {}
    names = cmap.target
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            brackets[(a, b)] = push(commutator(pre[a], pre[b]), f"[{a},{b}]")
    cop = {g: push(doubled.delta(pre[g]), f"Delta {g}") for g in names}
    cou = {g: push(doubled.eps(pre[g]), f"eps {g}") for g in names}
    anti = {g: push(doubled.gamma(pre[g]), f"gamma {g}") for g in names}
    for (a, b), v in brackets.items():
        target.set_bracket(a, b, v)
    return HopfPresentation(model_id, target, cop, cou, anti, dict(anchors or {}))


def specialize_presentation(H: HopfPresentation, mu) -> HopfPresentation:
    """Set mu to -1, 0 or +1 everywhere (returns ``H`` for ``'sym'``)."""
    mu = parse_mu(mu)
    if mu == "sym":
        return H
    old = H.alg
    label = old.label.replace("sym", mu_tag(mu))
    alg = RewriteSystem(old.names, old.order, old.degree_cap, old.param, label)
    for i, a in enumerate(old.names):
        for b in old.names[i + 1:]:
            v = old.bracket_value(a, b).specialize_mu(mu)
            if v:
                alg.set_bracket(a, b, v.rebase(alg))
    spec = H.map_tables(lambda x: x.specialize_mu(mu).rebase(alg))
    spec.alg = alg
    spec.model_id = H.model_id.replace("sym", mu_tag(mu))
    return spec


def flip_parameter(H: HopfPresentation) -> HopfPresentation:
    """The same presentation with the deformation parameter replaced by its negative."""
    old = H.alg
    alg = RewriteSystem(old.names, old.order, old.degree_cap, old.param, old.label + "-flipped")
    for i, a in enumerate(old.names):
        for b in old.names[i + 1:]:
            v = old.bracket_value(a, b).substitute_param(-1)
            if v:
                alg.set_bracket(a, b, v.rebase(alg))
    out = H.map_tables(lambda x: x.substitute_param(-1).rebase(alg))
    out.alg = alg
    out.model_id = H.model_id + "-flipped"
    return out


# ---------------------------------------------------------------------------
# U_w g_mu and U_w s_mu

ANCHORS_UWG = {
    "relations": "contraction of the doubled relations; w=0 gives g_mu",
    "coproduct": "contraction of the doubled coproduct",
    "counit": "contraction of the doubled counit",
    "antipode": "contraction of the doubled antipode",
}

ANCHORS_WEYL = {
    "relations": "U_w s_mu relations",
    "coproduct": "U_w s_mu coproduct",
    "counit": "U_w s_mu counit",
    "antipode": "U_w s_mu antipode",
}

_CACHE: dict = {}


def build_contracted_gmu(order: int = 4, mu="sym") -> HopfPresentation:
    """U_w g_mu computed by contracting U_z iso(1,1) + U_{-z} iso(1,1)."""
    key = ("uw-g", order)
    if key not in _CACHE:
        _CACHE[key] = contract_algebra(build_doubled(order), ALGEBRA_MAP, "uw-gsym", ANCHORS_UWG)
    return specialize_presentation(_CACHE[key], mu)


def build_weyl(mu="sym", order: int = 4) -> HopfPresentation:
    """U_w s_mu as printed: generators J < D < P1 < P2 (mu_1 read as mu)."""
    mu = parse_mu(mu)
    alg = RewriteSystem(WEYL_GENS, order=order, param="w", label="uw-ssym")
    J, D, P1, P2 = alg.gens(*WEYL_GENS)
    hp1 = P1.scale(Fraction(1, 2), k=1)
    hp2 = P2.scale(Fraction(1, 2), k=1)
    C, S = fn.gcos(hp1), fn.gsin(hp1)
    ch, sh = fn.cosh(hp2), fn.sinh(hp2)
    # (2/w) sinh(wP2/2) = P2 sinhc(wP2/2), (2/w) S(wP1/2) = P1 S(wP1/2)/(wP1/2)
    two_sh_w = P2 * fn.sinhc(hp2)
    two_S_w = P1 * fn.gsinc(hp1)
    alg.set_bracket("J", "P1", two_sh_w * C)
    alg.set_bracket("J", "P2", (two_S_w * ch).scale(1, mu=1))
    alg.set_bracket("D", "P1", two_S_w * ch)
    alg.set_bracket("D", "P2", two_sh_w * C)
    alg.set_bracket("P1", "P2", alg.zero())
    alg.set_bracket("J", "D", alg.zero())
    one = alg.one()
    em = fn.exp(-hp2)
    ep = fn.exp(hp2)
    muD = D.scale(1, mu=1)
    cop = {
        "P1": tensor(one, P1) + tensor(P1, one),
        "P2": tensor(one, P2) + tensor(P2, one),
        "J": tensor(em * C, J) + tensor(J, C * ep) - tensor(em * S, muD) + tensor(muD, S * ep),
        "D": tensor(em * C, D) + tensor(D, C * ep) - tensor(em * S, J) + tensor(J, S * ep),
    }
    cou = {g: alg.zero(0) for g in WEYL_GENS}
    e_w = fn.exp(P2.scale(1, k=1))
    e_mw = fn.exp(P2.scale(-1, k=1))
    anti = {g: -(e_w * alg.gen(g) * e_mw) for g in WEYL_GENS}
    H = HopfPresentation("uw-ssym", alg, cop, cou, anti, dict(ANCHORS_WEYL))
    return specialize_presentation(H, mu)


def weyl_restriction_diff(order: int = 4, mu="sym") -> list:
    """Differences between the printed U_w s_mu and the contraction restricted to {J, D, P1, P2}."""
    printed = build_weyl(mu, order)
    contracted = build_contracted_gmu(order, mu)
    return compare_presentations(printed, contracted, WEYL_GENS)


# ---------------------------------------------------------------------------
# Fun_w(G_mu)

ANCHORS_FUNW = {
    "relations": "Fun_w(G_mu) relations",
    "coproduct": "Fun_w(G_mu) coproduct",
    "counit": "Fun_w(G_mu) counit",
    "antipode": "Fun_w(G_mu) antipode",
}


def build_qgroup_gmu(mu="sym", order: int = 2, degree: int = 3,
                     printed_antipode: bool = False) -> HopfPresentation:
    """Fun_w(G_mu) with coordinates d < theta < p1 < p2 < c1 < c2.

    The printed antipode of p_i and c_i carries the wrong sign on its sine
    term (m(gamma x id)Delta fails at order 0 with it); the default uses the
    sign forced by the group inverse.  ``printed_antipode=True`` keeps the
    printed form.
    """
    alg = RewriteSystem(FUNW_GENS, order=order, degree_cap=degree, param="w", label="funw-gsym")
    d, th, p1, p2, c1, c2 = alg.gens(*FUNW_GENS)
    one = alg.one()
    C, S = fn.gcos(th), fn.gsin(th)
    ed, emd = fn.exp(d), fn.exp(-d)
    mu1 = lambda x: x.scale(1, mu=1)  # noqa: E731
    w = lambda x: x.scale(1, k=1)  # noqa: E731
    alg.set_bracket("d", "p1", w(mu1(ed * S)))
    alg.set_bracket("d", "p2", w(ed * C - one))
    alg.set_bracket("theta", "p1", w(ed * C - one))
    alg.set_bracket("theta", "p2", w(ed * S))
    alg.set_bracket("p1", "c1", w(mu1(c2)))
    alg.set_bracket("p1", "c2", w(c1))
    alg.set_bracket("p2", "c1", w(-c1))
    alg.set_bracket("p2", "c2", w(-c2))
    cop = {
        "theta": tensor(th, one) + tensor(one, th),
        "d": tensor(d, one) + tensor(one, d),
        "p1": tensor(p1, one) + tensor(ed * C, p1) + mu1(tensor(ed * S, p2)),
        "p2": tensor(p2, one) + tensor(ed * C, p2) + tensor(ed * S, p1),
        "c1": tensor(c1, one) + tensor(emd * C, c1) + mu1(tensor(emd * S, c2)),
        "c2": tensor(c2, one) + tensor(emd * C, c2) + tensor(emd * S, c1),
    }
    cou = {g: alg.zero(0) for g in FUNW_GENS}
    sgn = -1 if printed_antipode else 1
    anti = {
        "theta": -th,
        "d": -d,
        "p1": -(emd * C * p1) + sgn * mu1(emd * S * p2),
        "p2": -(emd * C * p2) + sgn * (emd * S * p1),
        "c1": -(ed * C * c1) + sgn * mu1(ed * S * c2),
        "c2": -(ed * C * c2) + sgn * (ed * S * c1),
    }
    mid = "funw-gsym" + ("-printed-antipode" if printed_antipode else "")
    H = HopfPresentation(mid, alg, cop, cou, anti, dict(ANCHORS_FUNW))
    return specialize_presentation(H, mu)


def reconstruct_qgroup_gmu(order: int = 2, degree: int = 3, mu="sym") -> HopfPresentation:
    """Fun_w(G_mu) computed from two copies of Fun_{+-z}(ISO(1,1)) via the group contraction map."""
    key = ("funw-g", order, degree)
    if key not in _CACHE:
        _CACHE[key] = contract_algebra(build_doubled_qgroup(order, degree), GROUP_MAP,
                                       "funw-gsym", ANCHORS_FUNW)
    return specialize_presentation(_CACHE[key], mu)


def compare_qgroup_gmu(order: int = 2, degree: int = 3, mu="sym",
                       printed_antipode: bool = False, raise_on_diff: bool = False) -> list:
    """Printed Fun_w(G_mu) against the reconstruction; optionally raise PresentationMismatch."""
    printed = build_qgroup_gmu(mu, order, degree, printed_antipode)
    rebuilt = reconstruct_qgroup_gmu(order, degree, mu)
    diffs = compare_presentations(printed, rebuilt)
    if diffs and raise_on_diff:
        raise PresentationMismatch(diffs)
    return diffs
