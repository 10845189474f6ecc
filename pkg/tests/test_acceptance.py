"""Acceptance criteria, one test per criterion.

Each test prints one `ACCEPT-nn PASS/FAIL` line (run with `-s` or read the
captured output).  Criteria 6, 9 and 10 contain clauses that are
unattainable as stated; those tests report the measured values and fail
honestly rather than loosening the assertion — see the failure messages.
"""

import time

import numpy as np
import pytest

from hypgraph import (GenSpec, Graph, SweepConfig, all_pairs,
                      exact_delta, fit_scaling, four_point_delta, generate,
                      gen_ringed_tree, grid_graph, read_edge_list, run_sweep,
                      sampled_delta, verify_quasi_isometry,
                      verify_structural_lemmas, write_edge_list)
from hypgraph.experiments import sweep_csv_text
from hypgraph.generators import spec_metadata
from hypgraph.hyperbolicity import triangle_slimness
from hypgraph.ringed import addr_of, canonical_geodesic

from conftest import brute_two_delta, cycle_graph, cycle_metric, random_tree_edges


def report(num, ok, detail):
    line = f"ACCEPT-{num:02d} {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    if not ok:
        pytest.fail(line, pytrace=False)


# -- criterion 1: trees are 0-hyperbolic ------------------------------------

def test_criterion_01_trees():
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    sizes = rng.integers(2, 201, size=50)
    for n in sizes:
        g = Graph(int(n), random_tree_edges(int(n), rng))
        rep = exact_delta(all_pairs(g))
        assert rep.two_delta == 0, f"tree n={n} gave delta {rep.two_delta / 2}"
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    report(1, True, f"50 random trees (n<=200) all have exact delta 0 "
                    f"[{elapsed:.1f}s]")


# -- criterion 2: cycles against the analytic-metric oracle -----------------

def test_criterion_02_cycles():
    t0 = time.perf_counter()
    for n in range(4, 33):
        pipeline = exact_delta(all_pairs(cycle_graph(n))).two_delta
        oracle = brute_two_delta(cycle_metric(n))
        assert pipeline == oracle, f"C_{n}: pipeline {pipeline} oracle {oracle}"
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    report(2, True, f"exact delta of C_4..C_32 matches the analytic-metric "
                    f"quadruple scan exactly [{elapsed:.1f}s]")


# -- criterion 3: square-corner quadruples on the 64x64 wrap grid -----------

def test_criterion_03_grid_corners():
    t0 = time.perf_counter()
    side = 64
    m = all_pairs(grid_graph(side, 2, wrap=True))

    def vid(x, y):
        return (x % side) * side + (y % side)

    rng = np.random.default_rng(103)
    for ell in range(1, 11):
        bases = [(0, 0), (60, 60)] + [tuple(rng.integers(0, side, 2)) for _ in range(4)]
        for x, y in bases:
            a, b = vid(x, y), vid(x + ell, y)
            c, d = vid(x, y + ell), vid(x + ell, y + ell)
            val = four_point_delta(m.dist[a, d], m.dist[b, c], m.dist[a, b],
                                   m.dist[d, c], m.dist[a, c], m.dist[d, b])
            assert val == 2 * ell, (ell, (x, y), val)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    report(3, True, f"corner quadruples of lxl subgrids (l<=10) all give "
                    f"delta = l exactly [{elapsed:.1f}s]")


# -- criterion 4: ringed-tree constants --------------------------------------

def test_criterion_04_ringed_tree_constants():
    t0 = time.perf_counter()
    deltas = {}
    for k in (4, 5, 6, 7):
        g, _ = gen_ringed_tree(k)
        rep = exact_delta(all_pairs(g))
        deltas[k] = rep.two_delta / 2
        assert rep.two_delta / 2 <= 40
    exact_elapsed = time.perf_counter() - t0
    assert exact_elapsed < 60

    k = 9
    g, _ = gen_ringed_tree(k)
    m = all_pairs(g)
    rng = np.random.default_rng(104)
    worst = 0
    for _ in range(10_000):
        u, v, w = ((rng.random(3) * g.n).astype(np.int64)).tolist()
        rep = triangle_slimness(g, m, (
            canonical_geodesic(k, addr_of(u), addr_of(v)),
            canonical_geodesic(k, addr_of(v), addr_of(w)),
            canonical_geodesic(k, addr_of(w), addr_of(u))))
        worst = max(worst, rep.slimness)
    assert worst <= 3

    mismatches = 0
    for u in range(g.n):
        au = addr_of(u)
        for v in range(u + 1, g.n):
            path = canonical_geodesic(k, au, addr_of(v))
            mismatches += (len(path) - 1 != m.dist[u, v])
    assert mismatches == 0
    report(4, True, f"exact delta(RT(k)) = {deltas} (<= 40); canonical "
                    f"triangles <= {worst}-slim over 1e4 triples at k=9; "
                    f"canonical length == BFS on all pairs at k=9 "
                    f"[{time.perf_counter() - t0:.1f}s]")


# -- criterion 5: quasi-isometry envelope ------------------------------------

def test_criterion_05_quasi_isometry():
    t0 = time.perf_counter()
    worst_lo = worst_hi = float("inf")
    for k in range(2, 11):
        rep = verify_quasi_isometry(k, tol=1e-9)
        assert rep.violations == 0, f"k={k}: {rep.violations} violations"
        worst_lo = min(worst_lo, rep.worst_lower_margin)
        worst_hi = min(worst_hi, rep.worst_upper_margin)
    elapsed = time.perf_counter() - t0
    assert elapsed < 300
    report(5, True, f"disk embedding respects the two-sided envelope on all "
                    f"pairs, k=2..10; slack >= {min(worst_lo, worst_hi):.3f} "
                    f"[{elapsed:.1f}s]")


# -- criterion 6: structural lemma suite -------------------------------------

def test_criterion_06_structural_lemmas():
    t0 = time.perf_counter()
    rep10 = verify_structural_lemmas(10, samples=100, seed=106)
    rep9 = verify_structural_lemmas(9, samples=10_000, seed=106)
    assert rep10["halving"].passed
    assert rep9["rectification"].passed
    bounds = rep10["ring_distance_bounds"]
    elapsed = time.perf_counter() - t0
    detail = (f"halving exhaustive k<=10 ok; rectification 1e4 pairs k=9 ok; "
              f"ring-distance bounds k=10: {bounds.violations} violations out "
              f"of {bounds.checked} pairs, worst {bounds.worst} "
              f"[{elapsed:.1f}s]")
    if not bounds.passed:
        detail += (" -- the stated lower bound 2*log2(d_R) <= d is "
                   "unsatisfiable: at d_R=3 the ring arc itself gives "
                   "d=3 < 3.17 (the floored form 2*floor(log2 d_R) <= d "
                   "does hold)")
    report(6, bounds.passed, detail)


# -- criteria 7+8: leaf-rewired tree sweeps ----------------------------------

@pytest.fixture(scope="module")
def rewired_tree_medians():
    out = {}
    t0 = time.perf_counter()
    for fam in ("RRT", "RBT"):
        cfg = SweepConfig(family=fam, k_values=(9, 10, 11, 12, 13),
                          g_kinds=("EXP_RING", "POW_RING", "LCA_HEIGHT"),
                          alphas=(1.0,), seeds=tuple(range(20)),
                          samples_per_graph=10**6)
        rows = run_sweep(cfg)
        for g_kind in cfg.g_kinds:
            for k in cfg.k_values:
                vals = [r.two_delta_hat for r in rows
                        if r.spec.g_kind == g_kind and r.spec.k == k]
                assert len(vals) == 20
                out[(fam, g_kind, k)] = float(np.median(vals))
    out["elapsed"] = time.perf_counter() - t0
    return out


def _curve(med, fam, g_kind):
    return [med[(fam, g_kind, k)] for k in (9, 10, 11, 12, 13)]


def test_criterion_07_rrt_contrast(rewired_tree_medians):
    med = rewired_tree_medians
    exp = _curve(med, "RRT", "EXP_RING")
    pow_ = _curve(med, "RRT", "POW_RING")
    lca = _curve(med, "RRT", "LCA_HEIGHT")
    assert exp[-1] <= pow_[-1], f"EXP at k=13 {exp[-1]} > POW {pow_[-1]}"
    for name, curve in (("POW_RING", pow_), ("LCA_HEIGHT", lca)):
        assert all(b >= a for a, b in zip(curve, curve[1:])), \
            f"{name} not non-decreasing: {curve}"
    increases = {"POW_RING": pow_[-1] - pow_[0], "LCA_HEIGHT": lca[-1] - lca[0]}
    total = sum(increases.values())
    assert total >= 2, f"combined increase {total} < 2 ({increases})"
    exp_inc = exp[-1] - exp[0]
    assert exp_inc <= increases["POW_RING"] / 2, \
        f"EXP increase {exp_inc} > half of POW {increases['POW_RING']}"
    assert med["elapsed"] < 1800
    report(7, True,
           f"RRT doubled-delta medians k=9..13: EXP {exp} POW {pow_} LCA {lca}; "
           f"per-curve increase POW {increases['POW_RING']} "
           f"LCA {increases['LCA_HEIGHT']} (combined {total} >= 2); "
           f"EXP increase {exp_inc} <= half of POW "
           f"[sweeps {med['elapsed']:.0f}s]")


def test_criterion_08_rbt_contrast(rewired_tree_medians):
    med = rewired_tree_medians
    curves = {g: _curve(med, "RBT", g)
              for g in ("EXP_RING", "POW_RING", "LCA_HEIGHT")}
    for name, curve in curves.items():
        assert all(b >= a for a, b in zip(curve, curve[1:])), \
            f"RBT {name} not non-decreasing: {curve}"
    increases = {name: c[-1] - c[0] for name, c in curves.items()}
    total = sum(increases.values())
    assert total >= 2, f"combined increase {total} < 2 ({increases})"
    rbt13 = med[("RBT", "EXP_RING", 13)]
    rrt13 = med[("RRT", "EXP_RING", 13)]
    assert rbt13 > rrt13, f"RBT EXP at k=13 {rbt13} <= RRT EXP {rrt13}"
    assert med["elapsed"] < 1800
    report(8, True,
           f"RBT doubled-delta medians: {curves}; increases {increases} "
           f"(combined {total} >= 2); RBT EXP k=13 {rbt13} > RRT EXP {rrt13}")


# -- criterion 9: small-world trends ------------------------------------------

def test_criterion_09_small_world_trends():
    t0 = time.perf_counter()
    sizes = (2**10, 2**11, 2**12, 2**13, 2**14)
    cfg = SweepConfig(family="KSW", n_values=sizes, d=1, gammas=(0.0, 4.0),
                      seeds=tuple(range(10)), samples_per_graph=10**6)
    rows = run_sweep(cfg)
    elapsed = time.perf_counter() - t0
    assert elapsed < 2700

    med0 = [float(np.median([r.two_delta_hat for r in rows
                             if r.spec.gamma == 0.0 and r.n == n]))
            for n in sizes]
    grows = med0[-1] > med0[0]

    g4 = [r for r in rows if r.spec.gamma == 4.0]
    fit = fit_scaling(g4, "LOG_LOG_SPACE")
    exponent_ok = 0.4 <= fit.slope <= 0.9

    within = sum(1 for r in g4 if r.max_long_range_span <= r.n ** (1 / 3 + 0.1))
    span_ok = within >= 0.9 * len(g4)

    detail = (f"(a) gamma=0 doubled medians {med0} endpoint-strict "
              f"{'ok' if grows else 'VIOLATED'}; "
              f"(b) gamma=4 log-log exponent {fit.slope:.4f} "
              f"(required [0.4, 0.9]; the 2/3 growth floor the band "
              f"anticipates is {'met' if fit.slope >= 2 / 3 else 'missed'}); "
              f"(c) span bound met in {within}/{len(g4)} runs "
              f"[{elapsed:.0f}s]")
    if not exponent_ok:
        detail += (" -- at these sizes gamma=4 graphs are ring-dominated "
                   "(mean shortcut span ~1.1, max ~n^(1/3) << diameter), so "
                   "delta tracks n rather than the asymptotic n^(2/3) rate")
    report(9, grows and exponent_ok and span_ok, detail)


# -- criterion 10: estimator soundness ----------------------------------------

def _estimator_ensemble():
    """Neutral rule: families uniform, sizes uniform over each family's
    feasible envelope under n <= 120, parameters over representative grids."""
    rng = np.random.default_rng(2024)
    fams = ("KSW", "RT", "RT_F", "RRT", "RBT")
    for i in range(200):
        fam = fams[int(rng.integers(5))]
        seed = 1000 + i
        if fam == "KSW":
            d = int(rng.integers(1, 3))
            n = int(rng.integers(8, 121)) if d == 1 else \
                int(rng.choice([16, 25, 36, 49, 64, 81, 100]))
            yield GenSpec(family="KSW", n=n, d=d,
                          gamma=float(rng.choice([0.0, 1.0, 2.0, 3.0, 4.0])),
                          seed=seed)
        elif fam == "RT":
            yield GenSpec(family="RT", k=int(rng.integers(2, 7)))
        elif fam == "RT_F":
            f_kind = ("CONST", "LOG2")[int(rng.integers(2))]
            yield GenSpec(family="RT_F", k=int(rng.integers(2, 7)),
                          f_kind=f_kind,
                          f_param=2.0 if f_kind == "CONST" else 0.0, seed=seed)
        else:
            yield GenSpec(family=fam, k=int(rng.integers(2, 7)),
                          g_kind=str(rng.choice(["EXP_RING", "POW_RING",
                                                 "LCA_HEIGHT"])),
                          alpha=float(rng.choice([0.5, 1.0, 2.0])), seed=seed)


def test_criterion_10_estimator_soundness():
    t0 = time.perf_counter()
    total = equal = 0
    for spec in _estimator_ensemble():
        g = generate(spec)
        assert g.n <= 120
        m = all_pairs(g)
        exact = exact_delta(m).two_delta
        estimates = [sampled_delta(m, s, seed=spec.seed).two_delta
                     for s in (100, 1000, 10_000)]
        assert all(e <= exact for e in estimates), \
            f"estimate exceeded exact on {spec}"
        total += 1
        equal += estimates[-1] == exact
    elapsed = time.perf_counter() - t0
    assert elapsed < 600
    rate = equal / total
    detail = (f"sampled <= exact on all {total} instances and budgets; "
              f"1e4-sample estimate equals exact on {equal}/{total} = "
              f"{rate:.0%} (required >= 90%) [{elapsed:.0f}s]")
    if rate < 0.9:
        detail += (" -- 1e4 uniform quadruples cover <0.3% of C(100,4), "
                   "so half-unit shortfalls dominate on mid-size instances "
                   "where the witness set is sparse")
    report(10, rate >= 0.9, detail)


# -- criterion 11: determinism --------------------------------------------------

def test_criterion_11_determinism(tmp_path):
    specs = [
        GenSpec(family="RRT", k=8, g_kind="LCA_HEIGHT", alpha=1.0, seed=17),
        GenSpec(family="KSW", n=512, d=1, gamma=1.0, seed=17),
    ]
    from hypgraph import num_threads

    for i, spec in enumerate(specs):
        files = []
        for threads, tag in ((1, "t1"), (4, "t4"), (1, "t1b")):
            path = tmp_path / f"g{i}_{tag}.edges"
            with num_threads(threads):
                write_edge_list(path, generate(spec), spec_metadata(spec))
            files.append(path.read_bytes())
        assert files[0] == files[1] == files[2]
        g, meta = read_edge_list(tmp_path / f"g{i}_t1.edges")
        assert meta["seed"] == "17"

    texts = []
    for threads in (1, 4, 1):
        cfg = SweepConfig(family="RBT", k_values=(5, 6),
                          g_kinds=("EXP_RING", "POW_RING"), alphas=(1.0,),
                          seeds=(0, 1, 2), samples_per_graph=5000,
                          threads=threads)
        texts.append(sweep_csv_text(run_sweep(cfg)))
    assert texts[0] == texts[1] == texts[2]
    report(11, True, "edge lists and sweep CSVs are byte-identical across "
                     "reruns and --threads {1,4}")
