"""Parameter sweeps, delta estimation at scale, and scaling fits.

A sweep walks a parameter grid in deterministic order, estimates delta by
quadruple sampling on each generated graph, and emits one CSV row per
(grid point, seed).  Medians across seeds feed ordinary least squares in
log, log-log, or log/log space to quantify growth trends.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, fields

import numpy as np

from .graph import DEFAULT_MEMORY_CAP, MemoryCapExceeded, Timer, all_pairs
from .generators import GenSpec, generate, grid_pair_distances, grid_side
from .hyperbolicity import sampled_delta, sampled_delta_bfs

__all__ = [
    "SweepConfig",
    "SweepRow",
    "FitResult",
    "run_sweep",
    "max_long_range_span",
    "fit_scaling",
    "write_sweep_csv",
    "sweep_csv_text",
    "sweep_config_from_text",
    "sweep_config_to_text",
    "CSV_COLUMNS",
    "SWEEP_FORMAT_VERSION",
    "X_TRANSFORMS",
]

SWEEP_FORMAT_VERSION = 1

CSV_COLUMNS = (
    "family", "n", "k", "d", "gamma", "g_kind", "alpha", "wrap",
    "edges_per_node", "independent", "seed", "samples", "two_delta_hat",
    "diameter", "max_long_range_span", "runtime_ms",
)

X_TRANSFORMS = ("LOG_N", "LOGLOG_N", "LOG_LOG_SPACE")


@dataclass(frozen=True)
class SweepConfig:
    """Grid of GenSpecs plus estimation budget and output policy.

    ``timing=False`` (the default) writes runtime_ms as 0 so that identical
    configs produce byte-identical CSV files; enable it for profiling runs
    where reproducible bytes do not matter.
    """

    family: str
    n_values: tuple = ()
    k_values: tuple = ()
    d: int = 1
    gammas: tuple = ()
    g_kinds: tuple = ()
    alphas: tuple = ()
    f_kind: str = ""
    f_param: float = 0.0
    wrap: bool = True
    edges_per_node: int = 1
    independent: bool = False
    seeds: tuple = ()
    samples_per_graph: int = 100_000
    memory_cap: int = DEFAULT_MEMORY_CAP
    bfs_fallback_samples: int = 2000
    timing: bool = False
    threads: int | None = None

    def specs(self):
        """GenSpecs in deterministic grid order (validates the grid)."""
        if not self.seeds:
            raise ValueError("seed list must be nonempty")
        if self.samples_per_graph < 1:
            raise ValueError("samples_per_graph must be >= 1")
        out = []
        if self.family == "KSW":
            if not self.n_values or not self.gammas:
                raise ValueError("KSW sweep needs n_values and gammas")
            for n in self.n_values:
                for gamma in self.gammas:
                    for seed in self.seeds:
                        out.append(GenSpec(
                            family="KSW", n=int(n), d=self.d, gamma=float(gamma),
                            wrap=self.wrap, edges_per_node=self.edges_per_node,
                            independent=self.independent, seed=int(seed)))
        elif self.family in ("RRT", "RBT"):
            if not self.k_values or not self.g_kinds or not self.alphas:
                raise ValueError(f"{self.family} sweep needs k_values, g_kinds, alphas")
            for k in self.k_values:
                for g_kind in self.g_kinds:
                    for alpha in self.alphas:
                        for seed in self.seeds:
                            out.append(GenSpec(
                                family=self.family, k=int(k), g_kind=g_kind,
                                alpha=float(alpha), edges_per_node=self.edges_per_node,
                                independent=self.independent, seed=int(seed)))
        elif self.family in ("RT", "RT_F"):
            if not self.k_values:
                raise ValueError(f"{self.family} sweep needs k_values")
            for k in self.k_values:
                for seed in self.seeds:
                    out.append(GenSpec(
                        family=self.family, k=int(k), f_kind=self.f_kind,
                        f_param=self.f_param, edges_per_node=self.edges_per_node,
                        seed=int(seed)))
        else:
            raise ValueError(f"unknown family {self.family!r}")
        for s in out:
            s.validate()
        return out


@dataclass(frozen=True)
class SweepRow:
    spec: GenSpec
    n: int
    samples: int
    two_delta_hat: int = 0
    diameter: int = 0
    max_long_range_span: int = 0
    runtime_ms: int = 0
    skip_reason: str = ""

    @property
    def skipped(self):
        return bool(self.skip_reason)


def max_long_range_span(g, spec: GenSpec):
    """Largest base-grid distance over non-grid edges of a KSW graph.

    Grid edges are exactly the distance-1 pairs, so no edge provenance is
    needed; returns 0 when every edge is a grid edge.
    """
    if spec.family != "KSW":
        raise ValueError("long-range span is defined for the KSW family")
    side = grid_side(spec.n, spec.d)
    if g.edge_count == 0:
        return 0
    db = grid_pair_distances(g.edges[:, 0], g.edges[:, 1], side, spec.d, spec.wrap)
    longrange = db[db > 1]
    return int(longrange.max()) if longrange.size else 0


def _measure(spec: GenSpec, cfg: SweepConfig) -> SweepRow:
    with Timer() as t:
        g = generate(spec)
        span = max_long_range_span(g, spec) if spec.family == "KSW" else 0
        try:
            m = all_pairs(g, memory_cap=cfg.memory_cap, threads=cfg.threads)
            report = sampled_delta(m, cfg.samples_per_graph, seed=spec.seed)
        except MemoryCapExceeded as exc:
            if cfg.samples_per_graph > cfg.bfs_fallback_samples:
                return SweepRow(
                    spec=spec, n=g.n, samples=cfg.samples_per_graph,
                    skip_reason=(f"needs {exc.required_bytes} bytes for the matrix and "
                                 f"{cfg.samples_per_graph} samples exceed the per-quadruple "
                                 f"BFS budget ({cfg.bfs_fallback_samples})"))
            report = sampled_delta_bfs(g, cfg.samples_per_graph, seed=spec.seed)
    return SweepRow(
        spec=spec, n=g.n, samples=cfg.samples_per_graph,
        two_delta_hat=report.two_delta, diameter=report.diameter,
        max_long_range_span=span, runtime_ms=t.ms if cfg.timing else 0)


def run_sweep(cfg: SweepConfig):
    """One SweepRow per (grid point, seed), in deterministic grid order."""
    return [_measure(spec, cfg) for spec in cfg.specs()]


def _csv_value(row: SweepRow, col):
    spec = row.spec
    tree_family = spec.family != "KSW"
    if col == "family":
        return spec.family
    if col == "n":
        return str(row.n)
    if col == "k":
        return str(spec.k) if tree_family else ""
    if col == "d":
        return str(spec.d) if not tree_family else ""
    if col == "gamma":
        return repr(spec.gamma) if not tree_family else ""
    if col == "g_kind":
        return spec.g_kind
    if col == "alpha":
        return repr(spec.alpha) if spec.family in ("RRT", "RBT") else ""
    if col == "wrap":
        return "true" if spec.wrap else "false"
    if col == "edges_per_node":
        return str(spec.edges_per_node)
    if col == "independent":
        return "true" if spec.independent else "false"
    if col == "seed":
        return str(spec.seed)
    if col == "samples":
        return str(row.samples)
    if row.skipped:
        return ""  # measurement columns stay blank on skipped rows
    if col == "two_delta_hat":
        return str(row.two_delta_hat)
    if col == "diameter":
        return str(row.diameter)
    if col == "max_long_range_span":
        return str(row.max_long_range_span) if not tree_family else ""
    if col == "runtime_ms":
        return str(row.runtime_ms)
    raise KeyError(col)


def sweep_csv_text(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_csv_value(row, c) for c in CSV_COLUMNS])
    return buf.getvalue()


def write_sweep_csv(rows, path):
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(sweep_csv_text(rows))


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float
    x: tuple
    y: tuple


def fit_scaling(rows, x_transform):
    """OLS fit of median delta (per size) against a transformed size axis.

    LOG_N fits delta against log2(n); LOGLOG_N against log2(log2(n));
    LOG_LOG_SPACE fits log(delta) against log(n), so the slope estimates a
    polynomial exponent.  Medians are taken across seeds at each size.
    """
    if x_transform not in X_TRANSFORMS:
        raise ValueError(f"x_transform must be one of {X_TRANSFORMS}")
    by_n = {}
    for row in rows:
        if row.skipped:
            continue
        by_n.setdefault(row.n, []).append(row.two_delta_hat / 2.0)
    if len(by_n) < 3:
        raise ValueError("need at least 3 distinct sizes to fit")
    ns = sorted(by_n)
    med = [float(np.median(by_n[n])) for n in ns]
    if x_transform == "LOG_N":
        x = [math.log2(n) for n in ns]
        y = med
    elif x_transform == "LOGLOG_N":
        x = [math.log2(math.log2(n)) for n in ns]
        y = med
    else:
        if any(v <= 0 for v in med):
            raise ValueError("LOG_LOG_SPACE needs positive medians")
        x = [math.log(n) for n in ns]
        y = [math.log(v) for v in med]
    x = np.asarray(x)
    y = np.asarray(y)
    if np.ptp(x) == 0:
        raise ValueError("degenerate x axis")
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 if ss_tot == 0 else 1.0 - float((resid**2).sum()) / ss_tot
    return FitResult(slope=float(slope), intercept=float(intercept), r_squared=r2,
                     x=tuple(float(v) for v in x), y=tuple(float(v) for v in y))


# ---------------------------------------------------------------------------
# Sweep config text document (flat key=value, comma-separated lists)
# ---------------------------------------------------------------------------

_LIST_KEYS = {"n_values", "k_values", "gammas", "alphas", "g_kinds", "seeds"}
_INT_KEYS = {"d", "edges_per_node", "samples_per_graph", "memory_cap",
             "bfs_fallback_samples", "threads"}
_FLOAT_KEYS = {"f_param"}
_BOOL_KEYS = {"wrap", "independent", "timing"}


def sweep_config_to_text(cfg: SweepConfig) -> str:
    lines = [f"hypgraph-sweep format={SWEEP_FORMAT_VERSION}"]
    for f in fields(SweepConfig):
        v = getattr(cfg, f.name)
        if v is None:
            continue
        if f.name in _LIST_KEYS:
            if not v:
                continue
            lines.append(f"{f.name}={','.join(str(x) for x in v)}")
        elif isinstance(v, bool):
            lines.append(f"{f.name}={'true' if v else 'false'}")
        elif isinstance(v, float):
            lines.append(f"{f.name}={v!r}")
        else:
            if v != "" or f.name == "family":
                lines.append(f"{f.name}={v}")
    return "\n".join(lines) + "\n"


def sweep_config_from_text(text: str) -> SweepConfig:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("hypgraph-sweep"):
        raise ValueError("not a sweep config document")
    head = dict(tok.partition("=")[::2] for tok in lines[0].split()[1:])
    if int(head.get("format", "0")) != SWEEP_FORMAT_VERSION:
        raise ValueError(f"unsupported sweep config format {head.get('format')}")
    kwargs = {}
    valid = {f.name for f in fields(SweepConfig)}
    for ln in lines[1:]:
        key, _, val = ln.partition("=")
        key, val = key.strip(), val.strip()
        if key not in valid:
            raise ValueError(f"unknown sweep config key {key!r}")
        if key in _LIST_KEYS:
            items = [x for x in val.split(",") if x]
            if key in ("gammas", "alphas"):
                kwargs[key] = tuple(float(x) for x in items)
            elif key == "g_kinds":
                kwargs[key] = tuple(items)
            else:
                kwargs[key] = tuple(int(x) for x in items)
        elif key in _BOOL_KEYS:
            kwargs[key] = val == "true"
        elif key in _FLOAT_KEYS:
            kwargs[key] = float(val)
        elif key in _INT_KEYS:
            kwargs[key] = int(val)
        else:
            kwargs[key] = val
    return SweepConfig(**kwargs)
