"""Named verification suites.

Each suite returns a list of CheckResults and is pure given its
arguments; randomized suites take an explicit seed. The `all` suite at
default arguments is the full battery the CLI exposes for CI.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import congruence, oracle
from .lagrange import lagrange_form1, verify_form2
from .report import CheckResult, failed, passed
from .sequences import (
    F_IDS,
    F_PARAMS,
    IdentityId,
    SequenceId,
    alpha_series,
    beta_series,
    f_value,
    n_closed,
    n_direct,
    n_gf_series,
    n_lemma,
    verify_identity,
)
from .series import Series, compose, solve_fixed_point, sqrt_unit


def suite_agreement(n_max: int = 60, f_max: int = 40) -> list[CheckResult]:
    """Cross-method agreement: N four ways, each f three ways."""
    out: list[CheckResult] = []
    gf = n_gf_series(max(n_max - 1, 1))
    ok = True
    for n in range(1, n_max + 1):
        closed = n_closed(n)
        routes = {
            "lemma": n_lemma(n - 1) if n >= 2 else 1,
            "gf": gf.coeff(n - 1),
            "direct": n_direct(n) if n >= 2 else 1,
        }
        for name, value in routes.items():
            if value != closed:
                out.append(
                    failed("n-agreement", {"n_max": n_max}, value, closed, f"{name} n={n}")
                )
                ok = False
                break
        if not ok:
            break
    if ok:
        out.append(passed("n-agreement", {"n_max": n_max}))

    for seq in F_IDS:
        bad = None
        for n in range(f_max + 1):
            s = f_value(seq, n, "sum")
            g = f_value(seq, n, "gf")
            c = f_value(seq, n, "closed") if not (seq == SequenceId.F4 and n == 0) else s
            if not (s == g == c):
                bad = failed(
                    "f-agreement", {"sequence": seq.value, "n_max": f_max},
                    f"sum={s} gf={g}", f"closed={c}", f"n={n}",
                )
                break
        out.append(bad or passed("f-agreement", {"sequence": seq.value, "n_max": f_max}))
    return out


def suite_kummer(n_max: int = 30, a_max: int = 20) -> list[CheckResult]:
    return [verify_identity(IdentityId.KUMMER, (n_max, a_max))]


def suite_congruence(
    n_max: int = 2187, closed_max: int = 200, lucas_max: int = 200, order: int = 100
) -> list[CheckResult]:
    """Residues mod 3: series vs digit classification, plus cross-checks."""
    out: list[CheckResult] = []

    ns = congruence.n_mod3_series(n_max)
    bad = None
    for n in range(1, n_max + 1):
        if ns.coeff(n) != congruence.predicted_residue(n):
            bad = failed(
                "n-mod3-series", {"n_max": n_max},
                ns.coeff(n), congruence.predicted_residue(n), f"n={n}",
            )
            break
    out.append(bad or passed("n-mod3-series", {"n_max": n_max}))

    bad = None
    for n in range(1, closed_max + 1):
        if n_closed(n) % 3 != congruence.predicted_residue(n):
            bad = failed(
                "n-closed-mod3", {"n_max": closed_max},
                n_closed(n) % 3, congruence.predicted_residue(n), f"n={n}",
            )
            break
    out.append(bad or passed("n-closed-mod3", {"n_max": closed_max}))

    # The Lucas route exists only when 3 does not divide n - 1; the rest
    # of the range is covered by the closed form above.
    bad = None
    compared = 0
    for n in range(2, lucas_max + 1):
        got = congruence.n_mod3_via_lucas(n)
        if got is None:
            continue
        compared += 1
        if got != congruence.predicted_residue(n):
            bad = failed(
                "n-mod3-lucas", {"n_max": lucas_max},
                got, congruence.predicted_residue(n), f"n={n}",
            )
            break
    out.append(bad or passed("n-mod3-lucas", {"n_max": lucas_max, "compared": compared}))

    try:
        congruence.alpha_mod3_series(min(order, 60))
        out.append(passed("alpha-mod3", {"order": min(order, 60)}))
    except ArithmeticError as exc:
        out.append(failed("alpha-mod3", {"order": min(order, 60)}, location=str(exc)))

    for seq in F_IDS:
        try:
            congruence.f_mod3_series(seq, order)
            out.append(passed("f-mod3", {"sequence": seq.value, "order": order}))
        except ArithmeticError as exc:
            out.append(failed("f-mod3", {"sequence": seq.value, "order": order}, location=str(exc)))

    for seq in F_IDS:
        p = F_PARAMS[seq]
        try:
            congruence.h_mod3_series(p, min(order, 40))
            out.append(passed("h-mod3", {"params": list(p), "order": min(order, 40)}))
        except ArithmeticError as exc:
            out.append(
                failed("h-mod3", {"params": list(p), "order": min(order, 40)}, location=str(exc))
            )
    return out


def suite_identities(order: int = 30) -> list[CheckResult]:
    """The series identities at one truncation order."""
    out: list[CheckResult] = []
    out.append(verify_identity(IdentityId.E_N3, (), order))
    for seq in F_IDS:
        out.append(verify_identity(IdentityId.E_HJKL, tuple(F_PARAMS[seq]), order))
    out.append(verify_identity(IdentityId.E_F1TO5_RATIONAL, (), order))
    for r in range(-2, 4):
        for i in range(0, 4):
            out.append(verify_identity(IdentityId.E_A1, (r, i), order))
    for r in range(1, 5):
        out.append(verify_identity(IdentityId.E_2A, (r,), order))
    out.append(verify_identity(IdentityId.E_MH, (order,)))
    out.append(verify_identity(IdentityId.T_RELATIONS, (0, 12)))
    out.append(verify_identity(IdentityId.FACT_ODD, (15,)))
    out.append(verify_identity(IdentityId.FACT_EVEN, (15,)))
    try:
        beta_series(min(order, 40))
        out.append(passed("beta-vs-alpha", {"order": min(order, 40)}))
    except ArithmeticError as exc:
        out.append(failed("beta-vs-alpha", {"order": min(order, 40)}, location=str(exc)))
    return out


def _random_poly(rng: random.Random, degree: int, order: int, unit: bool) -> Series:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(degree + 1)]
    if unit:
        c0 = rng.choice([1, -1, 2, -2, Fraction(1, 2), Fraction(3, 2)])
        coeffs[0] = Fraction(c0)
    return Series.poly(coeffs, order)


def suite_lagrange(instances: int = 100, order: int = 15, seed: int = 0) -> list[CheckResult]:
    """Both inversion forms against direct composition, randomized."""
    rng = random.Random(seed)
    params = {"instances": instances, "order": order, "seed": seed}

    form1 = None
    for inst in range(instances):
        phi = _random_poly(rng, rng.randint(1, 5), order, unit=False)
        G = _random_poly(rng, rng.randint(0, 5), order + 1, unit=True)
        f = solve_fixed_point(G, order)
        direct = compose(phi.truncate(order), f)
        for n in range(1, order + 1):
            via_form = lagrange_form1(phi, G.truncate(order), n)
            if via_form != direct.coeff(n):
                form1 = failed(
                    "lagrange-form1-random", params,
                    via_form, direct.coeff(n), f"instance={inst} n={n}",
                )
                break
        if form1:
            break
    results = [form1 or passed("lagrange-form1-random", params)]

    form2 = None
    for inst in range(instances):
        psi = _random_poly(rng, rng.randint(0, 5), order, unit=False)
        G = _random_poly(rng, rng.randint(0, 5), order + 1, unit=True)
        r = verify_form2(psi, G, order)
        if not r.passed:
            form2 = failed(
                "lagrange-form2-random", params,
                r.lhs, r.rhs, f"instance={inst} {r.location}",
            )
            break
    results.append(form2 or passed("lagrange-form2-random", params))

    # The Catalan anchor: G = 1/(1-x) gives f = (1 - sqrt(1-4x))/2.
    geo = Series([1] * (order + 1))
    f = solve_fixed_point(geo, order)
    explicit = (Series.one(order) - sqrt_unit(Series.poly([1, -4], order))).scale(Fraction(1, 2))
    if f == explicit:
        results.append(passed("catalan-fixed-point", {"order": order}))
    else:
        results.append(failed("catalan-fixed-point", {"order": order}))
    return results


def suite_oracle(to: int = 8, edges: bool = True) -> list[CheckResult]:
    """Enumeration against the closed form and the edge interpretation."""
    out: list[CheckResult] = []
    for n in range(1, to + 1):
        stats = oracle.enumerate_graphs(n)
        formula = n_closed(n)
        if stats.connected_count != formula:
            out.append(
                failed("oracle-count", {"n": n}, stats.connected_count, formula, f"n={n}")
            )
        else:
            out.append(passed("oracle-count", {"n": n}))
        if edges and n >= 2:
            expect = f_value(SequenceId.F2, n - 1, "sum")
            if stats.total_edges != expect:
                out.append(
                    failed("oracle-edges", {"n": n}, stats.total_edges, expect, f"n={n}")
                )
            else:
                out.append(passed("oracle-edges", {"n": n}))
    return out


def suite_all(
    order: int = 60,
    oracle_to: int = 8,
    congruence_to: int = 2187,
    agree_to: int = 60,
    f_to: int = 40,
    kummer_n: int = 30,
    kummer_a: int = 20,
    instances: int = 100,
    seed: int = 0,
) -> list[CheckResult]:
    """Every suite at acceptance scale (the identities run at order 30)."""
    out: list[CheckResult] = []
    out.extend(suite_agreement(agree_to, f_to))
    out.extend(suite_oracle(oracle_to))
    out.extend(suite_congruence(congruence_to, order=min(order, 100)))
    out.extend(suite_kummer(kummer_n, kummer_a))
    out.extend(suite_identities(min(order, 30)))
    out.extend(suite_lagrange(instances, 15, seed))
    return out
