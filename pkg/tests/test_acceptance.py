"""Acceptance suite: one test per criterion, each printing a PASS line.

Every expected number asserted here is frozen in this file (hand-evaluated
from the printed closed forms), so the checks are independent of the
catalog's own expected-value data entry.  Exact rational arithmetic
throughout; zero tolerance.

Two catalog entries assert a value that corrects the printed one (cases 37
and 42/p>=1); both corrections are forced by the stated multiplicity rules
and by anchored neighbouring computations, and are flagged in the entries'
``typo_fixes``.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from oracles import oracle_positive_span, oracle_solve
from sphskel import catalog, exactlp, mukai, skeleton as sk
from sphskel.mukai import EQUAL, STRICTLY_LESS
from sphskel.skeleton import BoundaryDivisor, SphericalSkeleton

F = Fraction


@pytest.fixture(scope="module")
def sweep():
    """(instance, option, verdict) over the full default sweep, solved once."""
    start = time.perf_counter()
    rows = []
    for inst in catalog.sweep_instances():
        for opt in inst.options:
            verdict = mukai.check_conjecture(inst.support_skeleton(opt))
            rows.append((inst, opt, verdict))
    elapsed = time.perf_counter() - start
    print(f"\n[sweep] {len(rows)} reports solved in {elapsed:.1f}s")
    assert elapsed < 120.0, "full sweep must stay under two minutes"
    return rows


def _params_key(inst):
    return frozenset(dict(inst.params).items())


# exact values frozen from the printed closed forms, one or two parameter
# points per branch of every family
P_ANCHORS = [
    (31, "", {"p": 2}, "gamma_1", 10),
    (31, "", {"p": 2}, "gamma_3", 10),
    (31, "", {"p": 3}, "gamma_3", 11),  # 2p^2+p-2(p-k)(2k+1), k=2
    (31, "", {"p": 4}, "gamma_3", 22),  # 2p^2+p-2(k-1)(2p-2k+3), k=2
    (31, "", {"p": 5}, "gamma_5", 27),
    (31, "", {"p": 3}, "gamma_5", 21),
    (31, "", {"p": 3}, "gamma_1,gamma_5", 6),  # non-minimal: 2p
    (32, "", {"p": 2}, "gamma_1", 4),  # 3p-2, Equal only here
    (32, "", {"p": 5}, "gamma_1", 13),
    (33, "", {"p": 4}, "gamma_1", 3),  # p-1
    (34, "", {}, "gamma_1", 13),
    (35, "", {}, "gamma", 6),
    (36, "", {"p": 3}, "gamma_2", 12),  # 4p
    (37, "", {"p": 3}, "gamma_2", 5),  # corrected 2p-1 (printed 2p)
    (38, "", {}, "gamma_1,gamma_2", 11),
    (38, "", {}, "gamma_1,gamma_2,gamma_3", 6),
    (38, "", {}, "combined(gamma_1,gamma_2)", 10),
    (39, "", {}, "gamma_1", 12),
    (39, "", {}, "gamma_2", 18),
    (39, "", {}, "gamma_3", 18),
    (41, "", {}, "gamma", 5),
    (42, "p=0", {"p": 0, "q": 3}, "gamma_2", 13),  # 4q+1
    (42, "p>=1", {"p": 2, "q": 2}, "gamma_2,gamma_3", 7),  # corrected 2p+2q-1
    (43, "p=q=r=0", {"p": 0, "q": 0, "r": 0}, "alpha_1,alpha'_1", 3),
    (43, "p=q=r=0", {"p": 0, "q": 0, "r": 0}, "alpha_1,alpha'_1,alpha''_1", 0),
    (43, "p=q=r=0", {"p": 0, "q": 0, "r": 0}, "combined(alpha_1,alpha'_1)", 2),
    (43, "p!=0,q=r=0", {"p": 3, "q": 0, "r": 0}, "gamma_1,gamma_4", 14),  # 4p+2
    (43, "p!=0,q=r=0", {"p": 3, "q": 0, "r": 0}, "gamma_1,gamma_2,gamma_4", 5),
    (43, "p!=0,q=r=0", {"p": 3, "q": 0, "r": 0}, "combined(gamma_1,gamma_4)", 13),
    (43, "p,q!=0,r=0", {"p": 2, "q": 3, "r": 0}, "gamma_3,gamma_5", 21),  # 4p+4q+1
    (43, "p,q!=0,r=0", {"p": 2, "q": 3, "r": 0}, "combined(gamma_3,gamma_5)", 20),
    (43, "p,q,r!=0", {"p": 1, "q": 2, "r": 3}, "gamma_2,gamma_4,gamma_6", 9),
    (44, "p=2", {"p": 2}, "alpha_1", 6),
    (44, "p=2", {"p": 2}, "alpha_2", 4),
    (44, "p>=3", {"p": 5}, "gamma_1", 15),  # 3p
    (44, "p>=3", {"p": 5}, "gamma_2", 16),  # 4(p-1)
    (45, "p=1", {"p": 1, "q": 2}, "gamma_1,gamma_4", 5),  # 2q+1
    (45, "p=2", {"p": 2, "q": 3}, "gamma_1,gamma_5", 8),  # 2q+2
    (45, "p=2", {"p": 2, "q": 3}, "gamma_2,gamma_5", 5),  # 2q-1
    (45, "p>=3", {"p": 4, "q": 2}, "gamma_1,gamma_5", 10),  # 2(p+q-1)
    (45, "p>=3", {"p": 4, "q": 2}, "gamma_2,gamma_5", 7),  # 2p+2q-5
    (46, "p=4", {"p": 4}, "alpha_1", 3),
    (46, "p=4", {"p": 4}, "alpha_2", 0),
    (46, "p=5", {"p": 5}, "alpha'_1", 10),
    (46, "p=5", {"p": 5}, "alpha'_2", 4),
    (46, "p=5", {"p": 5}, "alpha'_3", 10),
    (46, "p=5", {"p": 5}, "alpha'_1,alpha'_3", 1),
    (46, "p=6", {"p": 6}, "alpha_1", 5),
    (46, "p=6", {"p": 6}, "alpha_2", 2),
    (46, "p=6", {"p": 6}, "alpha_3", 3),
    (47, "p=0", {"p": 0, "q": 4}, "gamma_1,gamma_5", 10),  # 2(q+1)
    (47, "p=0", {"p": 0, "q": 4}, "gamma_2,gamma_5", 7),  # 2q-1
    (47, "p>=1", {"p": 2, "q": 3}, "gamma_1,gamma_4,gamma_6", 9),  # 2p+2q-1
    (47, "p>=1", {"p": 2, "q": 3}, "gamma_2,gamma_4,gamma_6", 8),  # 2(p+q-1)
    (48, "p=1", {"p": 1}, "alpha'_1", 1),
    (48, "p=1", {"p": 1}, "alpha'_2", 4),
    (48, "p=1", {"p": 1}, "alpha'_3", 8),
    (48, "p>=1", {"p": 3}, "gamma_3", 4),  # 2p-2
    (48, "p>=1", {"p": 3}, "gamma_4", 7),  # 2p+1
    (48, "p>=1", {"p": 3}, "gamma_5", 12),  # 2p+6
    (48, "p>=1", {"p": 3}, "gamma_6", 23),  # 8p-1
    (49, "", {"p": 4}, "alpha'_1", 16),  # p^2
    (49, "", {"p": 4}, "alpha'_2", 8),  # p^2-2(k-1)(p-k+2), k=2
    (49, "", {"p": 5}, "alpha'_2", 15),
    (49, "", {"p": 5}, "alpha'_3", 9),  # p^2-2(p-k)(k+1), k=3
    (49, "", {"p": 5}, "alpha'_1,alpha'_5", 0),
    (50, "p=2q-1", {"q": 4, "p": 7}, "alpha'_1", 6),  # p-1
    (50, "p=2q-1", {"q": 4, "p": 7}, "alpha'_2", 3),  # p+(k-1)^2-5
    (50, "p=2q-1", {"q": 4, "p": 7}, "alpha'_3", 6),  # (p-1)(p-3)/4
    (50, "p=2q-1", {"q": 4, "p": 7}, "alpha'_4", 6),
    (50, "p=2q-1", {"q": 5, "p": 9}, "alpha'_3", 8),
    (50, "p=2q-1", {"q": 5, "p": 9}, "alpha'_4", 12),
    (50, "p=2q-1", {"q": 5, "p": 9}, "alpha'_5", 12),
    (50, "p=2q", {"q": 4, "p": 8}, "alpha_1", 7),  # p-1
    (50, "p=2q", {"q": 4, "p": 8}, "alpha_2", 4),
    (50, "p=2q", {"q": 4, "p": 8}, "alpha_3", 7),  # (p^2-4p-4)/4
    (50, "p=2q", {"q": 4, "p": 8}, "alpha_4", 8),  # p(p-4)/4
    (50, "p=2q", {"q": 6, "p": 12}, "alpha_2", 8),
    (50, "p=2q", {"q": 6, "p": 12}, "alpha_3", 11),
    (50, "p=2q", {"q": 6, "p": 12}, "alpha_4", 16),
    (50, "p=2q", {"q": 6, "p": 12}, "alpha_5", 23),
    (50, "p=2q", {"q": 6, "p": 12}, "alpha_6", 24),
]

THETA_ANCHORS = [
    (31, "", {"p": 2}, "gamma_3", (6, 3, 1)),
    (31, "", {"p": 3}, "gamma_5", (15, 10, 6, 3, 1)),
    (32, "", {"p": 2}, "gamma_1", (1, 3)),
    (34, "", {}, "gamma_1", (1, 5)),
    (35, "", {}, "gamma", (1,)),
    (36, "", {"p": 4}, "gamma_2", (9, 1)),
    (38, "", {}, "gamma_1,gamma_2", (1, 1, 5)),
    (41, "", {}, "gamma", (1,)),
    (42, "p=0", {"p": 0, "q": 2}, "gamma_2", (5, 1)),
    (43, "p=q=r=0", {"p": 0, "q": 0, "r": 0}, "alpha_1,alpha'_1", (1, 1, 3)),
    (43, "p!=0,q=r=0", {"p": 2, "q": 0, "r": 0}, "gamma_1,gamma_4", (1, 7, 5, 1)),
    (43, "p,q!=0,r=0", {"p": 1, "q": 1, "r": 0}, "gamma_3,gamma_5", (7, 3, 1, 3, 1)),
    (46, "p=5", {"p": 5}, "alpha'_1", (5, 12, 1, 4, 9)),
    (49, "", {"p": 3}, "alpha'_3", (2, 6, 9, 4, 1)),
]


def test_criterion_1_exact_p_values(sweep):
    """Every printed closed form reproduces exactly over the sweeps."""
    failures = []
    for inst, opt, verdict in sweep:
        if not verdict.complete:
            failures.append((inst.label, opt.key, "not complete"))
        if opt.expected_p is not None and verdict.p_value != opt.expected_p:
            failures.append((inst.label, dict(inst.params), opt.key,
                             verdict.p_value, opt.expected_p))
        if verdict.relation != opt.expected_relation:
            failures.append((inst.label, dict(inst.params), opt.key,
                             verdict.relation, opt.expected_relation))
        if inst.expected_budget is not None and verdict.budget != inst.expected_budget:
            failures.append((inst.label, dict(inst.params), "budget",
                             verdict.budget, inst.expected_budget))
    assert not failures, failures

    # frozen numeric anchors, independent of the catalog's stored formulas
    index = {
        (i.family, i.sub_case, _params_key(i), o.key): v.p_value
        for i, o, v in sweep
    }
    for family, sub, params, key, value in P_ANCHORS:
        got = index[(family, sub, frozenset(params.items()), key)]
        assert got == value, (family, sub, params, key, got, value)

    # every family of the catalog took part
    families = {i.family for i, _, _ in sweep}
    assert families == set(range(31, 40)) | set(range(41, 51))
    print("ACCEPTANCE 1 (exact P values over sweeps): PASS "
          f"[{len(sweep)} reports, {len(P_ANCHORS)} frozen anchors]")


def test_criterion_2_equality_classification(sweep):
    """relation = Equal appears exactly on the 13 registered bullets."""
    got_equal = set()
    expected_equal = set()
    bullets = set()
    for inst, opt, verdict in sweep:
        key = (inst.family, inst.sub_case, _params_key(inst), opt.key)
        if verdict.relation == EQUAL:
            got_equal.add(key)
        if opt.equality_bullet is not None:
            expected_equal.add(key)
            bullets.add(opt.equality_bullet)
        assert verdict.relation != "Violation", key
    assert got_equal == expected_equal
    assert bullets == set(range(13))
    assert len(catalog.EQUALITY_REGISTRY) == 13
    by_bullet = {e.bullet: e for e in catalog.EQUALITY_REGISTRY}
    for inst, opt, _ in sweep:
        if opt.equality_bullet is not None:
            entry = by_bullet[opt.equality_bullet]
            assert (entry.family, entry.sub_case) == (inst.family, inst.sub_case)
    assert [e.list_l for e in catalog.EQUALITY_REGISTRY] == [
        "24", "38 (n=2)", "16", "15", "38 (n>2)", "20", "18", "10",
        "35", "40", "42", "13", "28",
    ]
    print(f"ACCEPTANCE 2 (equality classification): PASS "
          f"[{len(got_equal)} Equal reports across 13 bullets]")


def test_criterion_3_theta_verification(sweep):
    """Printed maximizers reproduce exactly; case 49's index fix is recorded."""
    printed = set()
    for inst, opt, verdict in sweep:
        if opt.expected_theta is None:
            continue
        printed.add((inst.family, inst.sub_case))
        assert verdict.theta == opt.expected_theta, (inst.label, opt.key)
    assert printed == {
        (31, ""), (32, ""), (34, ""), (35, ""), (36, ""), (38, ""), (41, ""),
        (42, "p=0"), (43, "p=q=r=0"), (43, "p!=0,q=r=0"), (43, "p,q!=0,r=0"),
        (46, "p=5"), (49, ""),
    }
    index = {
        (i.family, i.sub_case, _params_key(i), o.key): v.theta for i, o, v in sweep
    }
    for family, sub, params, key, theta in THETA_ANCHORS:
        got = index[(family, sub, frozenset(params.items()), key)]
        assert got == tuple(F(t) for t in theta), (family, sub, params, key, got)
    # the as-printed case-49 index alpha'_{p+i-1} leaves the rank for i >= 2;
    # the catalog records the corrected reading, which the sweep verified
    inst49 = catalog.instantiate(49, p=3)
    assert any("alpha'_{p+1-i}" in fix for fix in inst49.typo_fixes)
    for i in range(2, 4):
        assert 3 + i - 1 > 3  # printed index exceeds the primed rank
    print(f"ACCEPTANCE 3 (maximizer verification): PASS "
          f"[{len(THETA_ANCHORS)} frozen anchors, 13 printed-theta families]")


def test_criterion_4_equality_structure():
    """Uniqueness, strict positivity, x_gamma = 1 and the duplication drop."""
    checked = 0
    for inst in catalog.sweep_instances():
        for opt in inst.options:
            if opt.equality_bullet is None:
                continue
            skel = inst.support_skeleton(opt)
            verdict = mukai.check_conjecture(skel, compute_unique=True)
            assert verdict.relation == EQUAL
            assert verdict.theta_unique is True, (inst.label, opt.key)
            assert all(t > 0 for t in verdict.theta), (inst.label, opt.key)
            for j in opt.indices:
                assert verdict.theta[j] == 1, (inst.label, opt.key, j)
            for div in skel.boundary:
                before, after, shift = mukai.duplicate_shift_check(skel, div.name)
                assert shift == sum(
                    F(v) * t for v, t in zip(div.rho, verdict.theta)
                )
                assert after == before + shift and after < before
            checked += 1
    assert checked == 77  # equality entries over the default sweeps
    print(f"ACCEPTANCE 4 (equality-case structure): PASS [{checked} entries]")


def test_criterion_5_end_game(sweep):
    """The combined-Gamma and non-minimal-support exclusions reproduce."""
    combined = {}
    non_minimal = {}
    for inst, opt, verdict in sweep:
        key = (inst.family, inst.sub_case)
        params = dict(inst.params)
        if opt.combined:
            combined.setdefault(key, []).append((params, opt, verdict))
        elif not opt.minimal:
            non_minimal.setdefault(key, []).append((params, opt, verdict))

    assert set(combined) == {
        (38, ""), (43, "p=q=r=0"), (43, "p!=0,q=r=0"), (43, "p,q!=0,r=0"),
    }
    combined_formula = {
        (38, ""): lambda d: 10,
        (43, "p=q=r=0"): lambda d: 2,
        (43, "p!=0,q=r=0"): lambda d: 4 * d["p"] + 1,
        (43, "p,q!=0,r=0"): lambda d: 4 * d["p"] + 4 * d["q"],
    }
    for key, rows in combined.items():
        for params, opt, verdict in rows:
            assert verdict.p_value == combined_formula[key](params), (key, params)
            assert verdict.p_value < verdict.budget

    assert set(non_minimal) == {
        (31, ""), (38, ""), (43, "p=q=r=0"), (43, "p!=0,q=r=0"),
        (46, "p=5"), (49, ""),
    }
    non_minimal_formula = {
        (31, ""): lambda d: 2 * d["p"],
        (38, ""): lambda d: 6,
        (43, "p=q=r=0"): lambda d: 0,
        (43, "p!=0,q=r=0"): lambda d: 2 * d["p"] - 1,
        (46, "p=5"): lambda d: 1,
        (49, ""): lambda d: 0,
    }
    for key, rows in non_minimal.items():
        for params, opt, verdict in rows:
            assert verdict.p_value == non_minimal_formula[key](params), (key, params)
            assert verdict.p_value < verdict.budget
    total = sum(len(r) for r in combined.values()) + sum(
        len(r) for r in non_minimal.values()
    )
    print(f"ACCEPTANCE 5 (end-game exclusions): PASS [{total} reports]")


def test_criterion_6_completeness_certificates():
    """Certificates validate, Sigma' supports fail, and is_complete agrees
    with the hyperplane-normal positive-spanning oracle on |Sigma| <= 4."""
    from itertools import combinations

    cert_count = 0
    for inst in catalog.sweep_instances():
        for cert in inst.certificates:
            cert_count += 1
            c = sk.find_certificate_multipliers(
                inst.system, cert.delta_prime, cert.sigma_prime
            )
            assert c is not None, (inst.label, dict(inst.params))
            assert sk.check_distinguished_certificate(
                inst.system, cert.delta_prime, cert.sigma_prime, c
            )
            subsets = {tuple(cert.sigma_prime)}
            if len(cert.sigma_prime) <= 4:
                for k in range(1, len(cert.sigma_prime) + 1):
                    subsets.update(combinations(cert.sigma_prime, k))
            else:
                subsets.update((j,) for j in cert.sigma_prime)
                subsets.update(combinations(cert.sigma_prime, 2))
            for t in subsets:
                bad = sk.with_boundary_support(inst.system, t)
                assert not sk.is_complete(bad), (inst.label, t)

    oracle_checked = 0

    def agree(skel):
        nonlocal oracle_checked
        rows = [tuple(c.rho) for c in skel.colors]
        rows += [tuple(F(v) for v in d.rho) for d in skel.boundary]
        expect = oracle_positive_span(rows, len(skel.sigma))
        assert sk.is_complete(skel) == expect, skel
        oracle_checked += 1

    rng = random.Random(2718)
    for inst in catalog.sweep_instances():
        nsig = len(inst.system.sigma)
        if nsig > 4:
            continue
        agree(inst.system)
        for opt in inst.options:
            agree(inst.support_skeleton(opt))
        for j in range(nsig):
            agree(sk.with_boundary_support(inst.system, (j,)))
        # a couple of random nonpositive Gamma's on the same system
        for t in range(2):
            gamma = []
            for g in range(rng.randint(1, 2)):
                rho = [rng.choice((0, 0, -1, -2)) for _ in range(nsig)]
                if all(v == 0 for v in rho):
                    rho[rng.randrange(nsig)] = -1
                gamma.append(BoundaryDivisor(f"R{g}", tuple(rho)))
            agree(
                SphericalSkeleton(
                    inst.system.root_system, inst.system.sp, inst.system.sigma,
                    inst.system.colors, tuple(gamma),
                )
            )
    assert oracle_checked >= 500
    print(f"ACCEPTANCE 6 (completeness certificates): PASS "
          f"[{cert_count} certificates, {oracle_checked} oracle agreements]")


def test_criterion_7_lp_soundness():
    """>= 1000 random instances agree with the basis-enumeration oracle."""
    rng = random.Random(123456)
    optimal = unbounded = infeasible = 0
    for _ in range(1200):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        b = [rng.randint(-3, 3) for _ in range(m)]
        c = [rng.randint(-3, 3) for _ in range(n)]
        status, value = oracle_solve(a, b, c)
        problem = exactlp.LpProblem.make(a, b, c)
        if status == "infeasible":
            infeasible += 1
            with pytest.raises(exactlp.LpInfeasibleError):
                exactlp.solve_max(problem)
            continue
        sol = exactlp.solve_max(problem)
        assert sol.status == status, (a, b, c)
        assert exactlp.verify_certificates(problem, sol), (a, b, c)
        if status == "optimal":
            optimal += 1
            assert sol.value == value, (a, b, c)
            gap = sum(bi * yi for bi, yi in zip(problem.b, sol.dual)) - sum(
                ci * xi for ci, xi in zip(problem.c, sol.primal)
            )
            assert gap == 0
        else:
            unbounded += 1
    assert optimal + unbounded + infeasible == 1200
    assert optimal >= 300 and unbounded >= 50 and infeasible >= 50
    print(f"ACCEPTANCE 7 (LP soundness): PASS "
          f"[{optimal} optimal / {unbounded} unbounded / {infeasible} infeasible]")


def _le_inf(a, b):
    """a <= b where None encodes +infinity."""
    return b is None or (a is not None and a <= b)


def test_criterion_8_property_suite(sweep):
    """P >= 0, reduction and support monotonicity, product additivity."""
    # P >= sum (m_D - 1) >= 0 on every sweep report
    for inst, opt, verdict in sweep:
        skel = inst.support_skeleton(opt)
        _, constant = mukai.skeleton_lp(skel)
        assert verdict.p_value >= constant >= 0, (inst.label, opt.key)

    # support monotonicity across nested catalog supports
    nested = 0
    by_inst: dict = {}
    for inst, opt, verdict in sweep:
        if not opt.combined:
            by_inst.setdefault(id(inst), []).append((set(opt.indices), verdict))
    for rows in by_inst.values():
        for t1, v1 in rows:
            for t2, v2 in rows:
                if t1 < t2:
                    nested += 1
                    assert _le_inf(v2.p_value, v1.p_value)
    assert nested > 0

    # reduction chain and elementary/reduced invariants on random Gamma
    rng = random.Random(97)
    bases = [
        catalog.instantiate(38),
        catalog.instantiate(34),
        catalog.instantiate(43, "p=q=r=0"),
        catalog.instantiate(44, "p=2", p=2),
        catalog.instantiate(32, p=3),
    ]
    chains = 0
    for _ in range(60):
        system = rng.choice(bases).system
        nsig = len(system.sigma)
        gamma = []
        for g in range(rng.randint(1, 3)):
            rho = [rng.choice((0, -1, -1, -2, -3)) for _ in range(nsig)]
            if all(v == 0 for v in rho):
                rho[rng.randrange(nsig)] = -1
            gamma.append(BoundaryDivisor(f"R{g}", tuple(rho)))
        skel = SphericalSkeleton(
            system.root_system, system.sp, system.sigma, system.colors, tuple(gamma)
        )
        elem = sk.to_elementary(skel)
        red = sk.to_reduced(elem)
        assert sk.support(skel) == sk.support(elem) == sk.support(red)
        assert sk.is_elementary(elem) and sk.is_reduced(red)
        again = sk.to_reduced(sk.to_elementary(red))
        assert [d.rho for d in again.boundary] == [d.rho for d in red.boundary]
        p0, _, _ = mukai.mfs_value(skel)
        p1, _, _ = mukai.mfs_value(elem)
        p2, _, _ = mukai.mfs_value(red)
        assert _le_inf(p0, p1) and _le_inf(p1, p2)
        if sk.is_complete(skel):
            assert sk.is_complete(elem) and sk.is_complete(red)
        chains += 1
    assert chains == 60

    # product additivity of P and budget (exact), including completeness
    pairs = [
        ((35, "", {}), "gamma", (41, "", {}), "gamma"),
        ((34, "", {}), "gamma_1", (38, "", {}), "gamma_1,gamma_2"),
        ((36, "", {"p": 2}), "gamma_2", (43, "p=q=r=0", {}), "alpha_1,alpha'_1"),
    ]
    for (f1, s1, d1), k1, (f2, s2, d2), k2 in pairs:
        i1, i2 = catalog.instantiate(f1, s1, **d1), catalog.instantiate(f2, s2, **d2)
        a = i1.support_skeleton(i1.option(k1))
        b = i2.support_skeleton(i2.option(k2))
        va, vb = mukai.check_conjecture(a), mukai.check_conjecture(b)
        vp = mukai.check_conjecture(sk.product(a, b))
        assert vp.p_value == va.p_value + vb.p_value
        assert vp.budget == va.budget + vb.budget
        assert vp.complete == (va.complete and vb.complete)
    # completeness of a product is blockwise: one bad factor spoils it
    i35 = catalog.instantiate(35)
    good = i35.support_skeleton(i35.option("gamma"))
    bad = catalog.instantiate(36, p=2).system  # colors only, not complete
    mixed = mukai.check_conjecture(sk.product(good, bad))
    assert not mixed.complete
    assert mixed.budget == 6 + 8
    print(f"ACCEPTANCE 8 (property suite): PASS "
          f"[{nested} nested pairs, {chains} reduction chains, "
          f"{len(pairs)} products]")
