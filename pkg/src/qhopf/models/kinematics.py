"""Newton-Hooke relabeling of the mu = -1 member of the family."""

from __future__ import annotations

from fractions import Fraction

from ..coeffring import MuPoly
from ..errors import WrongMuMode
from .contraction import parse_mu

H_ = Fraction(1, 2)
Q_ = Fraction(1, 4)

# new generator -> combination of old ones
ALGEBRA_FORWARD = {
    "J~": {"J": 1},
    "P1~": {"P1": H_, "C1": H_},
    "P2~": {"P2": H_, "C2": H_},
    "K1~": {"P1": H_, "C1": -H_},
    "K2~": {"P2": H_, "C2": -H_},
    "H~": {"D": -1},
}
ALGEBRA_INVERSE = {
    "J": {"J~": 1},
    "P1": {"P1~": 1, "K1~": 1},
    "P2": {"P2~": 1, "K2~": 1},
    "C1": {"P1~": 1, "K1~": -1},
    "C2": {"P2~": 1, "K2~": -1},
    "D": {"H~": -1},
}
COORD_FORWARD = {
    "psi": {"theta": 1},
    "x1": {"p1": 2, "c1": 2},
    "x2": {"p2": 2, "c2": 2},
    "v1": {"p1": 2, "c1": -2},
    "v2": {"p2": 2, "c2": -2},
    "t": {"d": -1},
}
COORD_INVERSE = {
    "theta": {"psi": 1},
    "p1": {"x1": Q_, "v1": Q_},
    "p2": {"x2": Q_, "v2": Q_},
    "c1": {"x1": Q_, "v1": -Q_},
    "c2": {"x2": Q_, "v2": -Q_},
    "d": {"t": -1},
}


def _apply(vec: dict, table: dict) -> dict:
    out: dict = {}
    for name, c in vec.items():
        for new, k in table[name].items():
            out[new] = out.get(new, 0) + Fraction(c) * k
    return {k: v for k, v in out.items() if v}


def _require(mu):
    if parse_mu(mu) != -1:
        raise WrongMuMode(f"the Newton-Hooke relabeling applies to mu = -1 only, got {mu!r}")


def kinematical_relabel(x, mu=-1) -> dict:
    """Express an old generator/coordinate (name or linear combination) in the new basis."""
    _require(mu)
    vec = {x: 1} if isinstance(x, str) else dict(x)
    table = ALGEBRA_INVERSE if set(vec) <= set(ALGEBRA_INVERSE) else COORD_INVERSE
    return _apply(vec, table)


def inverse_relabel(x, mu=-1) -> dict:
    """Express a Newton-Hooke generator/coordinate in the original basis."""
    _require(mu)
    vec = {x: 1} if isinstance(x, str) else dict(x)
    table = ALGEBRA_FORWARD if set(vec) <= set(ALGEBRA_FORWARD) else COORD_FORWARD
    return _apply(vec, table)


def new_coordinates(mu=-1) -> dict:
    """psi, x_i, v_i, t as combinations of theta, p_i, c_i, d."""
    _require(mu)
    return {k: dict(v) for k, v in COORD_FORWARD.items()}


def new_generators(mu=-1) -> dict:
    """J~, P_i~, K_i~, H~ as combinations of J, P_i, C_i, D."""
    _require(mu)
    return {k: dict(v) for k, v in ALGEBRA_FORWARD.items()}


def relabeled_brackets(table, mu=-1) -> dict:
    """Brackets of the new generators, computed from a g_mu LieTable at mu = -1."""
    _require(mu)
    spec = table.specialize(-1)
    gens = list(ALGEBRA_FORWARD)
    out = {}
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            v = spec.bracket_vec({k: MuPoly.const(c) for k, c in ALGEBRA_FORWARD[a].items()},
                                 {k: MuPoly.const(c) for k, c in ALGEBRA_FORWARD[b].items()})
            v = _apply({k: p.constant() for k, p in v.items()}, ALGEBRA_INVERSE)
            if v:
                out[(a, b)] = v
    return out

