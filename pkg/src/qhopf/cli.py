"""Suite runner: builds the catalog models, runs the named checks, prints a report."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import ClosedFormMismatch, ConfigError, NeitherSignMatches, UnknownSuite
from .report import CheckRecord, SuiteReport, check

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class Options:
    order: int = 4
    degree: int = 4
    mu: object = "sym"


def _prefix(tag: str, records: list[CheckRecord]) -> list[CheckRecord]:
    for r in records:
        r.name = f"[{tag}] {r.name}"
    return records


def _diff_records(diffs) -> list:
    """Plain ``(label..., value)`` tuples as residual entries."""
    return [[[str(x) for x in d[:-1]], str(d[-1])] for d in diffs]


def _presentation_records(diffs) -> list:
    """``compare_presentations`` output, one entry per differing term."""
    out = []
    for table, gen, d in diffs:
        for mono, c in d.term_records():
            out.append([[table, str(gen)] + mono, c])
    return out


# ---------------------------------------------------------------------------
# sections: each returns (records, extra) and is picklable by name


def hopf_poincare(o: Options):
    from .hopf import check_hopf_axioms
    from .models.poincare import build_poincare_qalgebra
    return _prefix("uz-iso11", check_hopf_axioms(build_poincare_qalgebra(o.order))), {}


def hopf_poincare_group(o: Options):
    from .hopf import check_hopf_axioms
    from .models.poincare import build_poincare_qgroup
    return _prefix("funz-iso11", check_hopf_axioms(build_poincare_qgroup(o.order, o.degree))), {}


def hopf_funw(o: Options):
    from .hopf import check_hopf_axioms
    from .models.contraction import build_qgroup_gmu
    H = build_qgroup_gmu(o.mu, o.order, o.degree)
    return _prefix(H.model_id, check_hopf_axioms(H)), {}


def hopf_weyl(o: Options):
    from .hopf import check_hopf_axioms
    from .models.contraction import build_weyl
    H = build_weyl(o.mu, o.order)
    return _prefix(H.model_id, check_hopf_axioms(H)), {}


def hopf_contracted(o: Options):
    from .hopf import check_hopf_axioms
    from .models.contraction import build_contracted_gmu
    H = build_contracted_gmu(o.order, o.mu)
    return _prefix(H.model_id, check_hopf_axioms(H)), {}


def r_poincare(o: Options):
    from .models.lie import poincare_table, schouten_check, wedge_bivector
    from .models.poincare import build_poincare_qalgebra
    from .ncalg import wedge
    from .rmatrix import build_R_poincare, classical_limit, exponent_inverse_residual, quasitriangular_checks

    H = build_poincare_qalgebra(o.order)
    R = build_R_poincare(H)
    recs = quasitriangular_checks(R, H)
    K, Pp = H.alg.gens("K", "P+")
    recs.append(check("first-order term = z K ^ P+", "classical r-matrix of the Poincare R",
                      lambda: classical_limit(R) - wedge(K, Pp).scale(1, k=1)))
    recs.append(check("Schouten bracket of K ^ P+ vanishes", "classical YBE",
                      lambda: _schouten_records(schouten_check(wedge_bivector(("K", "P+")), poincare_table()))))
    recs.append(check("R exp(-exponent) = 1 (x) 1", "R invertibility", lambda: exponent_inverse_residual(R)))
    return recs, {}


def _schouten_records(res: dict) -> list:
    out = []
    for key in sorted(res):
        for mu, c in sorted(res[key].coeffs.items()):
            out.append([list(key) + [f"mu^{mu}"], str(c)])
    return out


def r_contracted(o: Options):
    from .models.contraction import build_weyl
    from .models.lie import schouten_check, wedge_bivector, weyl_table
    from .ncalg import wedge
    from .rmatrix import (build_R_contracted, classical_limit, closed_form_R, doubled_product_R,
                          exponent_inverse_residual, quasitriangular_checks)

    Wsym = build_weyl("sym", o.order)

    def product_vs_closed():
        diff = closed_form_R(Wsym).element - doubled_product_R(o.order, Wsym).element
        if o.mu != "sym":
            diff = diff.specialize_mu(o.mu)
        return diff

    recs = [check("doubled product R1_z R2_-z equals the closed form", "contracted R-matrix",
                  product_vs_closed)]
    W = build_weyl(o.mu, o.order)
    R = build_R_contracted(o.mu, o.order, compare=False)
    recs += quasitriangular_checks(R, W)
    J, D, P1, P2 = W.alg.gens("J", "D", "P1", "P2")
    recs.append(check("first-order term = w (J ^ P1 + D ^ P2)", "classical r-matrix of the contracted R",
                      lambda: classical_limit(R) - (wedge(J, P1) + wedge(D, P2)).scale(1, k=1)))
    recs.append(check("Schouten bracket of J ^ P1 + D ^ P2 vanishes", "classical YBE",
                      lambda: _schouten_records(schouten_check(
                          wedge_bivector(("J", "P1"), ("D", "P2")), weyl_table()))))
    recs.append(check("R exp(-exponent) = 1 (x) 1", "R invertibility", lambda: exponent_inverse_residual(R)))
    recs.append(check("R involves only J, D, P1, P2", "contracted R-matrix",
                      lambda: [[[g], "1"] for g in sorted(R.element.generators_used() - {"J", "D", "P1", "P2"})]))
    return recs, {}


def weyl(o: Options):
    from .hopf import check_hopf_axioms
    from .models.contraction import build_weyl, weyl_restriction_diff
    from .models.lie import table_residual, weyl_table

    W = build_weyl(o.mu, o.order)
    recs = check_hopf_axioms(W)
    recs.append(check("restriction of U_w g_mu to J, D, P1, P2 equals U_w s_mu", "Weyl subalgebra",
                      lambda: _presentation_records(weyl_restriction_diff(o.order, o.mu))))
    table = weyl_table() if o.mu == "sym" else weyl_table().specialize(o.mu)
    recs.append(check("w = 0 brackets equal s_mu", "Weyl algebra",
                      lambda: _table_records(table_residual(W, table))))
    return recs, {}


def _table_records(bad: dict) -> list:
    out = []
    for key in sorted(bad, key=str):
        val = bad[key]
        if key == "nonlinear":
            out += [[[str(x) for x in v], "1"] for v in val]
            continue
        for g in sorted(val):
            for mu, c in sorted(val[g].coeffs.items()):
                out.append([[key[0], key[1], g, f"mu^{mu}"], str(c)])
    return out


def contraction(o: Options):
    from .models.contraction import (ALGEBRA_MAP, GROUP_MAP, build_contracted_gmu, compare_qgroup_gmu,
                                     mu_tag)
    from .models.lie import gmu_table, poincare_table, table_residual, weyl_table

    recs = []
    modes = ["sym", -1, 0, 1] if o.mu == "sym" else [o.mu]
    G = build_contracted_gmu(o.order)
    recs.append(check("contracted tables are s-free", "contraction", lambda: _s_residual(G)))
    for m in modes:
        H = build_contracted_gmu(o.order, m)
        table = gmu_table() if m == "sym" else gmu_table().specialize(m)
        recs.append(check(f"w = 0 brackets equal g_mu (mu={mu_tag(m)})", "g_mu brackets",
                          lambda H=H, table=table: _table_records(table_residual(H, table))))
    for name, cmap in (("algebra", ALGEBRA_MAP), ("group", GROUP_MAP)):
        recs.append(check(f"{name} contraction map composed with its inverse is the identity",
                          "contraction map", lambda cmap=cmap: _diff_records(cmap.compose_residual())))
    for t in (poincare_table(), gmu_table(), weyl_table()):
        recs.append(check(f"Jacobi identity for {t.name}", "Lie algebra",
                          lambda t=t: _jacobi_records(t.jacobi_residual())))
    recs.append(check("Fun_w(G_mu) from two copies of Fun_z(ISO(1,1)) equals the presentation",
                      "quantum group contraction",
                      lambda: _presentation_records(compare_qgroup_gmu(o.order, o.degree, o.mu))))
    printed = compare_qgroup_gmu(o.order, o.degree, o.mu, printed_antipode=True)
    extra = {"printed antipode differs from the reconstruction at": sorted({str(d[1]) for d in printed})}
    if o.mu == -1:
        from .models.kinematics import relabeled_brackets
        nh = relabeled_brackets(gmu_table())
        extra["newton-hooke brackets"] = {f"[{a},{b}]": {k: str(v) for k, v in sorted(val.items())}
                                          for (a, b), val in sorted(nh.items())}
    return recs, extra


def _s_residual(G) -> list:
    out = []
    for tbl in (G.coproduct, G.antipode):
        for g in sorted(tbl):
            out += [[[g, str(k)], str(c)] for k, c in tbl[g].terms.items() if k[2]]
    names = G.alg.names
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            out += [[[f"[{a},{b}]", str(k)], str(c)]
                    for k, c in G.alg.bracket_value(a, b).terms.items() if k[2]]
    return out


def _jacobi_records(bad: dict) -> list:
    out = []
    for key in sorted(bad):
        for g in sorted(bad[key]):
            for mu, c in sorted(bad[key][g].coeffs.items()):
                out.append([list(key) + [g, f"mu^{mu}"], str(c)])
    return out


def matrep(o: Options):
    from . import matrep as M

    rep = M.build_rep(o.mu)
    recs = M.check_rep_brackets(rep)

    def group():
        sym = M.build_rep("sym")
        diff = M.group_element(sym) - M.printed_group_element()
        if o.mu != "sym":
            diff = diff.map(lambda a: a.specialize_mu(o.mu))
        return M._mat_residual(diff)

    recs.append(check("ordered exponentials give the printed group element", "group element", group))

    def rep_r():
        try:
            M.rep_R(o.mu, o.order)
        except ClosedFormMismatch as exc:
            return [[[f"({i},{j})"], str(a)] for i, j, a in exc.diffs]
        return []

    recs.append(check("R in the 4x4 realization = I + w r + mu w^2 P1 (x) P1", "represented R-matrix", rep_r))
    return recs, {"reconstructed matrices": {k: _mat_text(rep[k]) for k in ("P2", "C2")}}


def _entry_text(a) -> str:
    if not a:
        return "0"
    recs = a.records()
    if len(recs) == 1 and recs[0][0] == "1":
        return recs[0][1]
    return repr(a)


def _mat_text(m) -> list:
    """Row-major entries as strings."""
    return [[_entry_text(a) for a in r] for r in m.rows]


def frt(o: Options):
    from . import matrep as M
    from .models.contraction import build_qgroup_gmu

    try:
        sign_recs, verdict = M.frt_rtt_check(o.mu, o.order, o.degree)
        counts = {r.name: len(r.residual) for r in sign_recs}
        exactly_one = []
    except NeitherSignMatches as exc:
        verdict, counts = "none", {}
        exactly_one = [[[t], str(len(v))] for t, v in sorted(exc.residuals.items())]
    recs = [check("RTT reproduces the printed relations under exactly one sign of w", "FRT relation",
                  lambda: exactly_one)]
    recs.append(check("sign verdict is the global flip w -> -w", "FRT relation",
                      lambda: [] if verdict == "w -> -w" else [[["verdict", verdict], "1"]]))
    recs += M.coproduct_from_T(build_qgroup_gmu(o.mu, o.order, o.degree), mu=o.mu)
    try:
        alt = M.frt_rtt_check(o.mu, o.order, o.degree, transposed=True)[1]
    except NeitherSignMatches:
        alt = "none"
    return recs, {"verdict": verdict, "residual terms by sign": counts,
                  "verdict with R21 in place of R (T1 = I (x) T)": alt}


def poisson(o: Options):
    from . import poisson as P

    recs = P.poisson_checks(o.mu, o.order, o.degree)
    L, R = P.invariant_fields("left"), P.invariant_fields("right")

    def commuting():
        out = []
        for a in sorted(L):
            for b in sorted(R):
                for x, c in sorted(L[a].commutator(R[b]).coeffs.items()):
                    out += [[[a, b, x, m], v] for m, v in c.records()]
        return out

    recs.append(check("[X^L_a, X^R_b] = 0", "invariant vector fields", commuting))

    def identity_kept():
        f = P.fvar("C") ** 2 - P.fvar("mu") * P.fvar("S") ** 2
        out = []
        for side, fields in (("L", L), ("R", R)):
            for a in sorted(fields):
                out += [[[side, a, m], v] for m, v in fields[a](f).records()]
        return out

    recs.append(check("vector fields annihilate C^2 - mu S^2", "generalized trig functions", identity_kept))
    return recs, {}


def recurrence(o: Options):
    from .models.poincare import build_poincare_qalgebra
    from .rmatrix import verify_ansatz_recurrence
    return verify_ansatz_recurrence(build_poincare_qalgebra(o.order), 3), {}


# name -> (model id template, uses degree, uses mu, sections)
SUITES = {
    "hopf-axioms": ("catalog", True, True,
                    [hopf_poincare, hopf_poincare_group, hopf_weyl, hopf_contracted, hopf_funw]),
    "r-poincare": ("R-poincare", False, False, [r_poincare]),
    "r-contracted": ("R-g{mu}", False, True, [r_contracted]),
    "weyl": ("uw-s{mu}", False, True, [weyl]),
    "contraction": ("uw-g{mu}", True, True, [contraction]),
    "matrep": ("rep4-g{mu}", False, True, [matrep]),
    "frt": ("funw-g{mu}", True, True, [frt]),
    "poisson": ("fun-g{mu}", True, True, [poisson]),
    "recurrence": ("uz-iso11", False, False, [recurrence]),
}
ORDERED = list(SUITES)


def _sections(name: str) -> list:
    if name == "all":
        return [(s, f) for s in ORDERED for f in SUITES[s][3]]
    return [(name, f) for f in SUITES[name][3]]


def _run_section(name: str, index: int, opts: Options):
    suite, fn = _sections(name)[index]
    recs, extra = fn(opts)
    if name == "all":
        recs = _prefix(suite, recs)
        extra = {f"{suite}: {k}": v for k, v in extra.items()}
    return recs, extra


def validate(order, degree, mu) -> Options:
    from .models.contraction import parse_mu

    for label, v in (("order", order), ("degree", degree)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ConfigError(f"{label} must be a positive integer, got {v!r}")
    return Options(order, degree, parse_mu(mu))


def run_suite(name: str, order: int = 4, degree: int = 4, mu="sym", parallel: bool = False):
    """Run a suite; returns ``(SuiteReport, exit code)``.

    Raises UnknownSuite or ConfigError for bad input; check failures are
    report content, never exceptions.
    """
    if name != "all" and name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(ORDERED + ['all'])}")
    opts = validate(order, degree, mu)
    from .models.contraction import mu_tag

    n = len(_sections(name))
    if parallel and n > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_section, [name] * n, range(n), [opts] * n))
    else:
        results = [_run_section(name, i, opts) for i in range(n)]
    if name == "all":
        model, uses_deg, uses_mu = "catalog", True, True
    else:
        model, uses_deg, uses_mu, _ = SUITES[name]
    tag = mu_tag(opts.mu)
    report = SuiteReport(name, model.format(mu=tag), opts.order, opts.degree if uses_deg else None,
                         tag if uses_mu else "n/a")
    for recs, extra in results:
        report.extend(recs)
        report.extra.update(extra)
    return report, (EXIT_PASS if report.passed else EXIT_FAIL)


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhopf", description="Exact order-by-order checks of the catalog "
                                "quantum algebras, R-matrices and contractions.")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(ORDERED)}, all")
    p.add_argument("--order", type=int, default=4, help="truncation order N in z or w")
    p.add_argument("--degree", type=int, default=4, help="degree cap D for coordinate algebras")
    p.add_argument("--mu", default="sym", help="-1, 0, +1 or sym")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--parallel", type=_bool, default=False, help="run suite sections in worker processes")
    p.add_argument("--no-timing", action="store_true", help="report 0 ms everywhere (byte-stable output)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = run_suite(args.suite, args.order, args.degree, args.mu, args.parallel)
    except (UnknownSuite, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(report.to_json(timing=not args.no_timing))
    else:
        print(report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
