"""Acceptance gate: one test per release criterion, each printing PASS or FAIL.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Each criterion also enforces its runtime budget.
"""
import math
import time

import numpy as np

from qillum import bounds, feasibility, gaussian, montecarlo, receivers, roc


def _report(n, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"CRITERION {n} [{label}]: {status}" + (f" — {detail}" if detail else ""))
    assert ok, f"criterion {n} ({label}): {detail}"


def test_criterion_1_exponent_ratios():
    t0 = time.perf_counter()
    sc = gaussian.IlluminationScenario(1e-3, 100.0, 1e-3, 1)
    xi_c = bounds.cs_exact_exponent(sc.n_s, sc.n_b, sc.kappa)
    ratio_qi = bounds.qi_upper_bound(sc).exponent / xi_c
    ratio_opa = receivers.opa_optimal_exponent(sc) / xi_c
    elapsed = time.perf_counter() - t0
    ok = (
        abs(ratio_qi - 4.0) <= 0.05 * 4.0
        and abs(ratio_opa - 2.0) <= 0.05 * 2.0
        and elapsed < 1.0
    )
    _report(
        1, "exponent ratios", ok,
        f"entangled/classical = {ratio_qi:.4f} (target 4.00±5%), "
        f"amplifier/classical = {ratio_opa:.4f} (target 2.00±5%), {elapsed:.3f}s",
    )


def test_criterion_2_db_advantages():
    t0 = time.perf_counter()
    targets = [
        (1e-2, 0.8, 6.0, 0.1),
        (1e-4, 0.8, 8.2, 0.1),
        (1e-6, 0.8, 8.9, 0.1),
        (1e-2, 0.99, 3.23, 0.05),
        (1e-4, 0.99, 4.42, 0.05),
        (1e-6, 0.99, 4.59, 0.05),
    ]
    details, ok = [], True
    for pf, pd, expected, tol in targets:
        got = roc.advantage_db(pf, pd)
        hit = abs(got - expected) <= tol
        ok = ok and hit
        details.append(f"pf={pf:g},pd={pd}: {got:.2f} dB (target {expected}±{tol}) "
                       f"{'ok' if hit else 'MISS'}")
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 5.0
    _report(2, "dB advantages", ok, "; ".join(details) + f"; {elapsed:.2f}s")


def test_criterion_3_bound_crossover():
    t0 = time.perf_counter()
    ms = np.unique(np.logspace(0, 9, 2000).astype(int))

    def crossover_exists(n_s):
        for m in ms:
            sc = gaussian.IlluminationScenario(n_s, 20.0, 0.01, int(m))
            if bounds.qi_upper_bound(sc).p_e < bounds.classical_lower_bound(sc).p_e:
                return True
        return False

    left = crossover_exists(0.01)
    right = not crossover_exists(1.0)
    elapsed = time.perf_counter() - t0
    ok = left and right and elapsed < 1.0
    _report(
        3, "bound crossover", ok,
        f"low-signal crossover exists: {left} (expected True); "
        f"no crossover at n_s=1: {right} (expected True); {elapsed:.2f}s",
    )


def test_criterion_4_receiver_ordering():
    t0 = time.perf_counter()
    sc = gaussian.IlluminationScenario(0.01, 20.0, 0.01, 1500000)
    ci = roc.roc_ci_homodyne(sc)
    opa = roc.roc_opa_at(receivers.opa_model(sc, receivers.optimal_gain(sc)), ci.pf)
    ff = roc.roc_ffsfg(sc)
    slack = 1e-9
    ff_ge_opa = bool(np.all(ff.pd >= opa - slack))
    opa_ge_ci = bool(np.all(opa >= ci.pd - slack))
    elapsed = time.perf_counter() - t0
    ok = ff_ge_opa and opa_ge_ci and ci.pf.shape == (512,) and elapsed < 5.0
    _report(
        4, "receiver ordering", ok,
        f"sfg>=opa: {ff_ge_opa}, opa>=homodyne: {opa_ge_ci} on {ci.pf.shape[0]} points; "
        f"{elapsed:.2f}s",
    )


def test_criterion_5_monte_carlo_agreement():
    t0 = time.perf_counter()
    checks, ok = [], True

    points = [
        gaussian.IlluminationScenario(0.01, 20.0, 0.01, 100000),
        gaussian.IlluminationScenario(0.1, 5.0, 0.05, 20000),
        gaussian.IlluminationScenario(0.001, 100.0, 0.001, 500000),
    ]
    for i, sc in enumerate(points):
        model = receivers.homodyne_model(sc)
        analytic = receivers.homodyne_error_probability(model).p_e
        batch = montecarlo.run_homodyne_trials(model, 100000, seed=100 + i)
        hit = abs(batch.p_e - analytic) < 3.0 * batch.p_e_stderr
        ok = ok and hit
        checks.append(f"homodyne#{i}: |Δ|/σ={abs(batch.p_e - analytic)/batch.p_e_stderr:.2f}")

    sc = gaussian.IlluminationScenario(0.01, 20.0, 0.01, 100000)
    model = receivers.opa_model(sc, receivers.optimal_gain(sc))
    batch = montecarlo.run_opa_trials(model, 100000, seed=200)
    bound = receivers.opa_error_bound(model).p_e
    hit = batch.p_e <= bound + 3.0 * batch.p_e_stderr
    ok = ok and hit
    checks.append(f"opa error {batch.p_e:.4f} <= bound {bound:.4f}+3σ: {hit}")

    rng = montecarlo._rng(300)
    counts = montecarlo._opa_counts(model, rng, np.zeros(100000, dtype=bool))
    mean_exact = model.m * model.n0
    var_exact = model.m * model.n0 * (model.n0 + 1.0)
    z = abs(counts.mean() - mean_exact) / math.sqrt(var_exact / counts.shape[0])
    hit = z < 3.0 and abs(counts.var() / var_exact - 1.0) < 0.05
    ok = ok and hit
    checks.append(f"count sampler moments: z(mean)={z:.2f}, var ratio={counts.var()/var_exact:.4f}")

    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60.0
    _report(5, "Monte Carlo agreement", ok, "; ".join(checks) + f"; {elapsed:.1f}s")


def test_criterion_6_gaussian_invariants():
    t0 = time.perf_counter()
    rng = np.random.default_rng(0)
    physical = 0
    for _ in range(1000):
        kind = rng.integers(3)
        if kind == 0:
            state = gaussian.thermal_state(float(rng.uniform(0, 30)))
        elif kind == 1:
            state = gaussian.tmsv_state(float(rng.uniform(0, 10)))
        else:
            state = gaussian.coherent_state(complex(rng.normal(), rng.normal()))
        physical += gaussian.uncertainty_check(state)[0]

    sat_err = max(
        abs(gaussian.tmsv_cross_correlation(n) - math.sqrt((2 * n + 1) ** 2 - 1))
        for n in np.linspace(1e-4, 10, 100)
    )

    n_b = 1e-3
    sc_ent = gaussian.IlluminationScenario(0.5, n_b, n_b * 1.01, 1)
    sc_sep = gaussian.IlluminationScenario(0.5, n_b, n_b * 0.99, 1)

    def entangled(sc):
        _, v1 = gaussian.return_idler_states(sc)
        c = math.sqrt(sc.kappa) * gaussian.tmsv_cross_correlation(sc.n_s)
        a = 2 * sc.kappa * sc.n_s + 2 * sc.n_b + 1
        return gaussian.entanglement_check(
            gaussian.TwoModeCovariance(a, 2 * sc.n_s + 1, c)
        )

    boundary = entangled(sc_ent) and not entangled(sc_sep)

    state = gaussian.coherent_state(0.5 + 0.2j)
    x = np.linspace(-14, 16, 1201)
    gx, gp = np.meshgrid(x, x, indexing="ij")
    w = gaussian.wigner_eval(state, np.stack([gx, gp], axis=-1))
    norm = float(np.trapezoid(np.trapezoid(w, x, axis=1), x))

    elapsed = time.perf_counter() - t0
    ok = (
        physical == 1000
        and sat_err < 1e-12
        and boundary
        and abs(norm - 1.0) < 1e-4
        and elapsed < 30.0
    )
    _report(
        6, "Gaussian-core invariants", ok,
        f"physical {physical}/1000, saturation err {sat_err:.1e}, "
        f"entanglement boundary two-sided: {boundary}, norm {norm:.6f}; {elapsed:.1f}s",
    )


def test_criterion_7_pure_state_roc_equivalence():
    t0 = time.perf_counter()
    worst = 0.0
    for h in (0.1, 0.5, 0.9):
        lams = np.concatenate([np.linspace(1e-6, 1.0, 500), np.logspace(0.0, 5.0, 500)])
        for lam in lams:
            _, _, p_f, p_d = roc.np_eigensystem(h, float(lam))
            if 0.0 <= p_f <= 1.0:
                worst = max(worst, abs(p_d - float(roc.pure_state_pd(h, p_f))))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 1.0
    _report(
        7, "pure-state ROC equivalence", ok,
        f"sup deviation {worst:.2e} (tol 1e-9); {elapsed:.2f}s",
    )


def test_criterion_8_feasibility_numbers():
    t0 = time.perf_counter()
    t_slow = 1e6 / 1e8
    t_fast = 1e6 / 1e12
    params = feasibility.FeasibilityParams(10e9, 1e8, t_slow, 0.01)
    power = feasibility.pulse_power(params)
    ratio = power / 1e-17
    elapsed = time.perf_counter() - t0
    ok = (
        abs(t_slow - 10e-3) < 1e-12
        and abs(t_fast - 1e-6) < 1e-15
        and 0.5 <= ratio <= 2.0
        and elapsed < 1.0
    )
    _report(
        8, "feasibility numbers", ok,
        f"T={t_slow*1e3:.0f} ms @ W=1e8, T={t_fast*1e6:.0f} us @ W=1e12, "
        f"power {power:.3g} W = {ratio:.2f}x 0.01 fW; {elapsed:.3f}s",
    )
