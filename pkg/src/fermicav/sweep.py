import concurrent.futures
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from .bogoliubov import (ONE_WAY, SINGLE, graft, leakage_weights,
                         scenario_phases)
from .config import config
from .geometry import u_parameter, v_parameter
from .measures import (DegradationInputs, EntanglementReport,
                       chsh_max_two_mode, fk_closed, fk_partial_sums,
                       fk_series, negativity_charge, negativity_two_mode,
                       oneway_fk, oneway_fk_series, truncation_tail_bound,
                       validity_flag)
from .oracle import CHARGE, density_matrix_oracle
from .polylog import UnitPhase
from .scenario import ScenarioConfig
from .utils import (metadata_path, package_version, write_csv,
                    write_metadata)

logger = logging.getLogger(__name__)

COLUMNS = ("u", "v", "h", "s", "k", "k_prime", "f_coefficient", "negativity",
           "chsh_max", "interference_term", "discrepancy", "tail_estimate",
           "validity_flag")


class SweepResult:
    """
    Rows of a parameter sweep in COLUMNS order

    Args:
        name: sweep name
        rows: one tuple per grid point, in grid order
        limit: admitted discrepancy, per row or scalar
        metadata: configuration echo written to the sidecar
    """

    def __init__(
            self,
            name: str,
            rows: List[tuple],
            limit: Any,
            metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.name = name
        self.rows = rows
        self.limit = limit
        self.metadata = metadata or {}

    def __len__(self):
        return len(self.rows)

    def column(self, name: str) -> np.ndarray:
        i = COLUMNS.index(name)
        return np.array([np.nan if r[i] is None else r[i] for r in self.rows],
                        dtype=float)

    def breaches(self) -> List[int]:
        """Row indices whose discrepancy exceeds the limit"""
        disc = self.column("discrepancy")
        limit = np.broadcast_to(np.asarray(self.limit, dtype=float),
                                disc.shape)
        return [int(i) for i in np.nonzero(disc > limit)[0]]

    def write(self, path: str) -> None:
        write_csv(path, COLUMNS, self.rows)
        meta = dict(self.metadata)
        meta.update({"sweep": self.name, "version": package_version(),
                     "columns": list(COLUMNS), "rows": len(self.rows)})
        write_metadata(metadata_path(path), meta)


def _run_task(func, args, cfg):
    config.update(cfg)
    return func(*args)


def map_tasks(
        func: Callable,
        tasks: Sequence[tuple],
        desc: str = None,
) -> List[Any]:
    """func(*task) for every task, in a process pool when
    config["pool_workers"] is above one; results keep the task order"""
    workers = config["pool_workers"]
    show = config["progress"]
    if workers is None or workers <= 1 or len(tasks) <= 1:
        return [func(*t) for t in tqdm(tasks, desc=desc, disable=not show)]
    logger.debug("Running %d tasks on %d workers" % (len(tasks), workers))
    results = [None] * len(tasks)
    with concurrent.futures.ProcessPoolExecutor(workers) as pool:
        futures = [pool.submit(_run_task, func, t, dict(config))
                   for t in tasks]
        for future in tqdm(concurrent.futures.as_completed(futures),
                           total=len(futures), desc=desc, disable=not show):
            j = futures.index(future)
            results[j] = future.result()
    return results


def _figure2_curve(geom, k, us, h, window):
    rows = []
    tail = truncation_tail_bound(k, geom.s, window)
    flag = validity_flag(k, h)
    for u in us:
        E1 = UnitPhase.from_turns(u)
        f = fk_closed(geom, k, E1)
        series = fk_series(geom, k, E1, window)
        rows.append((u, None, h, geom.s, k, None, f,
                     negativity_two_mode(f, h), chsh_max_two_mode(f, h), 0.0,
                     abs(f - series), tail, flag))
    return rows


def run_figure2(cfg: ScenarioConfig) -> SweepResult:
    """f_k/h^2 against u over one degradation period for every (s, k)"""
    geom = cfg.geometry()
    window = cfg.setting("sum_window")
    h = cfg.h_numeric
    us = [float(u) for u in np.linspace(0.0, 1.0, cfg["u_points"])]
    tasks = [(geom.with_boundary(s=float(s)), k, us, h, window)
             for s in cfg["s_values"] for k in cfg["k_values"]]
    logger.debug("figure2: %d curves of %d points" % (len(tasks), len(us)))
    rows = [r for curve in map_tasks(_figure2_curve, tasks, "figure2")
            for r in curve]
    limit = cfg.setting("series_tolerance")
    return SweepResult("figure2", rows, limit, {
        "config": cfg.to_dict(), "sum_window": window,
        "series_tolerance": limit})


def _figure3_row(geom, k, u, vs, h, window):
    rows = []
    E1 = UnitPhase.from_turns(u)
    tail = truncation_tail_bound(k, geom.s, window, weight=16.0)
    flag = validity_flag(k, h)
    for v in vs:
        E2 = UnitPhase.from_turns(v)
        f = oneway_fk(geom, k, E1, E2)
        series = oneway_fk_series(geom, k, E1, E2, window)
        rows.append((u, v, h, geom.s, k, None, f,
                     negativity_two_mode(f, h), chsh_max_two_mode(f, h), 0.0,
                     abs(f - series), tail, flag))
    return rows


def run_figure3(cfg: ScenarioConfig) -> SweepResult:
    """One-way degradation coefficient over the (u, v) unit square"""
    geom = cfg.geometry()
    window = cfg.setting("sum_window")
    h = cfg.h_numeric
    nu, nv = cfg["grid"]
    us = [float(u) for u in np.linspace(0.0, 1.0, nu)]
    vs = [float(v) for v in np.linspace(0.0, 1.0, nv)]
    tasks = [(geom, cfg["k"], u, vs, h, window) for u in us]
    rows = [r for line in map_tasks(_figure3_row, tasks, "figure3")
            for r in line]
    limit = cfg.setting("series_tolerance")
    return SweepResult("figure3", rows, limit, {
        "config": cfg.to_dict(), "sum_window": window,
        "series_tolerance": limit})


def evaluate_report(
        inputs: DegradationInputs,
        state_family: str,
        window: Optional[int] = None,
        sum_window: Optional[int] = None,
) -> EntanglementReport:
    """
    Degradation of one state along one trajectory by the closed forms
    (or the grafted matrix for trajectories without one) and by the
    density-matrix oracle

    Args:
        inputs: geometry, modes, trajectory and acceleration parameter
        state_family: two-mode-plus, two-mode-minus or charge
        window: composition window of the graft
        sum_window: window of the truncated series
    """
    scenario = inputs.scenario
    geom = inputs.geom
    k, k_prime, h = inputs.k, inputs.k_prime, inputs.h_numeric
    if sum_window is None:
        sum_window = config["sum_window"]
    matrix = graft(scenario, window)
    pattern = scenario.pattern
    E1, E2 = scenario_phases(scenario)

    def degradation(mode):
        if pattern == SINGLE:
            return fk_closed(geom, mode, E1), fk_partial_sums(
                geom, mode, E1, sum_window)
        if pattern == ONE_WAY:
            return oneway_fk(geom, mode, E1, E2), fk_partial_sums(
                geom, mode, E1, sum_window, E2)
        parts = leakage_weights(matrix, mode)
        return sum(parts), parts

    f, (f_plus, f_minus) = degradation(k)
    weight = 16.0 if pattern == ONE_WAY else 4.0
    tail = truncation_tail_bound(k, geom.s, sum_window, weight)
    if state_family == CHARGE:
        if pattern in (SINGLE, ONE_WAY):
            negativity, term = negativity_charge(geom, k, k_prime, E1, E2, h)
        else:
            f_prime, _ = degradation(k_prime)
            pk, pkp = matrix.position(k), matrix.position(k_prime)
            term = 0.5 * abs(matrix.order1[pk, pkp]) ** 2
            negativity = 0.5 - (0.25 * (f + f_prime) - term) * h * h
        chsh = None
    else:
        negativity = negativity_two_mode(f, h)
        chsh = chsh_max_two_mode(f, h)
        term = 0.0
    oracle = density_matrix_oracle(geom, state_family, k, k_prime,
                                   h_numeric=h, matrix=matrix)
    discrepancy = abs(negativity - oracle.negativity)
    if chsh is not None:
        discrepancy = max(discrepancy, abs(chsh - oracle.chsh))
    limit = config["oracle_tolerance"] * h ** 4 + config["absolute_tolerance"]
    u = u_parameter(geom, scenario.segments[0].duration) \
        if pattern in (SINGLE, ONE_WAY) else None
    v = v_parameter(geom, scenario.segments[1].duration) \
        if pattern == ONE_WAY else None
    return EntanglementReport(
        f, negativity, chsh, term, f_plus, f_minus,
        oracle_negativity=oracle.negativity, oracle_chsh=oracle.chsh,
        discrepancy=discrepancy, limit=limit, tail_estimate=tail,
        validity_flag=inputs.flag, h_numeric=h, u=u, v=v, pattern=pattern,
        state_family=state_family, k=k, k_prime=k_prime, s=geom.s)


def run_report(cfg: ScenarioConfig) -> SweepResult:
    """Single-scenario evaluation as a one-row sweep carrying the report"""
    scenario = cfg.scenario()
    inputs = DegradationInputs(scenario.geometry, cfg["k"], scenario,
                               cfg["k_prime"], cfg.h_numeric)
    report = evaluate_report(inputs, cfg["state_family"],
                             cfg.setting("window"), cfg.setting("sum_window"))
    d = report.to_dict()
    row = (d["u"], d["v"], d["h_numeric"], d["s"], d["k"], d["k_prime"],
           report.f_k, report.negativity, report.chsh_max,
           report.interference_term, d["discrepancy"], d["tail_estimate"],
           d["validity_flag"])
    result = SweepResult("report", [row], d["limit"], {
        "config": cfg.to_dict(), "report": d,
        "window": cfg.setting("window"),
        "oracle_tolerance": config["oracle_tolerance"],
        "absolute_tolerance": config["absolute_tolerance"]})
    result.report = report
    return result

