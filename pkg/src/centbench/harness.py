"""Experiment orchestration: generate graphs, score them, correlate, report.

A *cell* is one (family, n, param, seed) combination. Each cell generates
its graph, reduces to the largest connected component, computes the four
exact node centralities plus the thief-simulation node score, correlates
the simulation score against each exact measure with all three
coefficients (12 records), then correlates the simulation edge score
against the k-path estimate (3 records): 15 records per cell.

Reproducibility: the cell seed never feeds an algorithm directly. Three
sub-seeds are derived from it with ``derive_seed(cell_seed, tag)`` for the
tags "gen", "got" and "kpath", so the stages have independent streams and
any stage can be replayed in isolation.

Reports: a CSV with one row per record (fixed, versioned schema), a JSON
document carrying the same records plus per-cell stage timings and any
cell errors, and one plot-data CSV per coefficient laid out for
value-vs-parameter curves (one series per measure pair). Failed cells are
recorded as error entries and the run continues.
"""
from __future__ import annotations

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from .exact import (betweenness_centrality, closeness_centrality,
                    clustering_coefficient, degree_centrality)
from .generators import GeneratorSpec
from .got import GotConfig, run_got
from .graph import largest_connected_component
from .kpath import KpathConfig, werw_kpath
from .rng import derive_seed
from .stats import correlate

SCHEMA_VERSION = 1
CSV_COLUMNS = ["schema_version", "family", "n", "param", "seed", "lcc_n",
               "lcc_m", "pair", "coefficient", "value", "wall_ms"]
PLOT_COLUMNS = ["family", "n", "param", "seed", "pair", "coefficient", "value"]
NODE_MEASURES = ("dc", "bc", "cl", "cc")
COEFFICIENTS = ("pearson", "spearman", "kendall")


class CellError(RuntimeError):
    """A cell failed; the message carries the cell context."""


@dataclass(frozen=True)
class ExperimentRecord:
    family: str
    n: int
    param: float
    seed: int
    lcc_n: int
    lcc_m: int
    pair: str
    coefficient: str
    value: float | None
    wall_ms: float                      # whole-cell wall time
    stage_wall_ms: dict[str, float] = field(default_factory=dict)

    def csv_row(self) -> list:
        return [SCHEMA_VERSION, self.family, self.n, self.param, self.seed,
                self.lcc_n, self.lcc_m, self.pair, self.coefficient,
                "" if self.value is None else repr(self.value),
                f"{self.wall_ms:.3f}"]


@dataclass(frozen=True)
class ExperimentConfig:
    """Full experiment matrix; serializes 1:1 to the JSON config file."""
    n: int
    sf_m: list[int] = field(default_factory=list)
    sw_k: list[int] = field(default_factory=list)
    er_p: list[float] = field(default_factory=list)
    sf_triangle_p: float = 0.3
    sw_shortcut_p: float = 0.6
    seeds_per_cell: int = 1
    base_seed: int = 0
    got: GotConfig = field(default_factory=GotConfig)
    kpath: KpathConfig = field(default_factory=KpathConfig)
    all_pairs: bool = False

    def cells(self) -> list[tuple[str, float, int]]:
        """(family, param, cell_seed) triples in deterministic order."""
        out = []
        for family, params in (("SF", self.sf_m), ("SW", self.sw_k),
                               ("ER", self.er_p)):
            for param in params:
                for i in range(self.seeds_per_cell):
                    cell_seed = derive_seed(self.base_seed,
                                            f"{family}:{param!r}:{i}")
                    out.append((family, param, cell_seed))
        return out

    def to_dict(self) -> dict:
        d = asdict(self)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        d = dict(d)
        if "got" in d and isinstance(d["got"], dict):
            d["got"] = GotConfig(**d["got"])
        if "kpath" in d and isinstance(d["kpath"], dict):
            d["kpath"] = KpathConfig(**d["kpath"])
        return cls(**d)

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")


def _generator_spec(family: str, n: int, param: float, seed: int,
                    sf_triangle_p: float, sw_shortcut_p: float) -> GeneratorSpec:
    if family == "SF":
        return GeneratorSpec("SF", n, int(param), sf_triangle_p, seed)
    if family == "SW":
        return GeneratorSpec("SW", n, int(param), sw_shortcut_p, seed)
    if family == "ER":
        return GeneratorSpec("ER", n, float(param), 0.0, seed)
    raise ValueError(f"unknown family {family!r}")


def run_cell(family: str, n: int, param: float, seed: int,
             got_cfg: GotConfig | None = None,
             kpath_cfg: KpathConfig | None = None,
             sf_triangle_p: float = 0.3,
             sw_shortcut_p: float = 0.6,
             all_pairs: bool = False) -> list[ExperimentRecord]:
    """Run one experiment cell; returns its 15 records (more with all_pairs).

    Raises CellError (with full cell context) on any stage failure; a failed
    cell produces no partial records.
    """
    got_cfg = got_cfg or GotConfig()
    kpath_cfg = kpath_cfg or KpathConfig()
    stage_ms: dict[str, float] = {}
    cell_t0 = time.perf_counter()

    def _timed(tag, fn):
        t0 = time.perf_counter()
        result = fn()
        stage_ms[tag] = (time.perf_counter() - t0) * 1000.0
        return result

    try:
        spec = _generator_spec(family, n, param, derive_seed(seed, "gen"),
                               sf_triangle_p, sw_shortcut_p)
        g = _timed("gen", spec.generate)
        lcc, _ = _timed("lcc", lambda: largest_connected_component(g))
        if lcc.n < 2 or lcc.m == 0:
            raise ValueError(
                f"largest connected component is degenerate "
                f"(n={lcc.n}, m={lcc.m}); nothing to measure")
        node_scores = {
            "dc": _timed("dc", lambda: degree_centrality(lcc)),
            "bc": _timed("bc", lambda: betweenness_centrality(lcc)),
            "cl": _timed("cl", lambda: closeness_centrality(lcc)),
            "cc": _timed("cc", lambda: clustering_coefficient(lcc)),
        }
        got_res = _timed("got", lambda: run_got(
            lcc, replace(got_cfg, seed=derive_seed(seed, "got"))))
        kpath_scores = _timed("kpath", lambda: werw_kpath(
            lcc, replace(kpath_cfg, seed=derive_seed(seed, "kpath"))))
    except Exception as exc:
        raise CellError(f"family={family} n={n} param={param} seed={seed}: "
                        f"{exc}") from exc

    pairs: list[tuple[str, object, object]] = [
        (f"got_node_vs_{name}", got_res.phi, node_scores[name])
        for name in NODE_MEASURES
    ]
    pairs.append(("got_edge_vs_kpath", got_res.psi, kpath_scores))
    if all_pairs:
        for i, a in enumerate(NODE_MEASURES):
            for b in NODE_MEASURES[i + 1:]:
                pairs.append((f"{a}_vs_{b}", node_scores[a], node_scores[b]))

    records = []
    total_ms = (time.perf_counter() - cell_t0) * 1000.0
    for pair_name, a, b in pairs:
        t0 = time.perf_counter()
        res = correlate(a, b)
        total_ms += (time.perf_counter() - t0) * 1000.0
        for coeff, value in (("pearson", res.r), ("spearman", res.rho),
                             ("kendall", res.tau)):
            records.append(ExperimentRecord(
                family=family, n=n, param=param, seed=seed,
                lcc_n=lcc.n, lcc_m=lcc.m, pair=pair_name, coefficient=coeff,
                value=value, wall_ms=total_ms, stage_wall_ms=dict(stage_ms)))
    # every record of the cell reports the same whole-cell wall time
    records = [replace(r, wall_ms=total_ms) for r in records]
    return records


def _run_cell_task(args) -> list[ExperimentRecord]:
    return run_cell(*args)


def run_experiment(cfg: ExperimentConfig, out_dir,
                   workers: int = 1) -> tuple[list[ExperimentRecord], list[dict]]:
    """Run every cell of the matrix and write all report files.

    Returns (records, errors). Cell failures become error entries; the run
    continues past them.
    """
    cells = cfg.cells()
    if not cells:
        raise ValueError("nothing to run: all family parameter lists are empty")
    tasks = [(family, cfg.n, param, seed, cfg.got, cfg.kpath,
              cfg.sf_triangle_p, cfg.sw_shortcut_p, cfg.all_pairs)
             for family, param, seed in cells]
    records: list[ExperimentRecord] = []
    errors: list[dict] = []

    def _note_failure(cell, exc):
        family, param, seed = cell
        errors.append({"family": family, "n": cfg.n, "param": param,
                       "seed": seed, "error": str(exc)})

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = list(map(lambda t: pool.submit(_run_cell_task, t), tasks))
            for cell, fut in zip(cells, futures):
                try:
                    records.extend(fut.result())
                except CellError as exc:
                    _note_failure(cell, exc)
    else:
        for cell, task in zip(cells, tasks):
            try:
                records.extend(_run_cell_task(task))
            except CellError as exc:
                _note_failure(cell, exc)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_csv_report(records, out / "report.csv")
    write_json_report(cfg, records, errors, out / "report.json")
    for coeff in COEFFICIENTS:
        write_plot_data(records, coeff, out / f"plot_{coeff}.csv")
    if errors:
        write_error_csv(errors, out / "errors.csv")
    return records, errors


def write_csv_report(records: list[ExperimentRecord], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(rec.csv_row())


def write_json_report(cfg: ExperimentConfig, records, errors, path) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "config": cfg.to_dict(),
        "records": [asdict(r) for r in records],
        "errors": errors,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def write_plot_data(records: list[ExperimentRecord], coefficient: str, path) -> None:
    """One coefficient's records, shaped for value-vs-parameter plotting."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(PLOT_COLUMNS)
        for rec in records:
            if rec.coefficient != coefficient:
                continue
            writer.writerow([rec.family, rec.n, rec.param, rec.seed, rec.pair,
                             rec.coefficient,
                             "" if rec.value is None else repr(rec.value)])


def write_error_csv(errors: list[dict], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["family", "n", "param", "seed", "error"])
        for err in errors:
            writer.writerow([err["family"], err["n"], err["param"],
                             err["seed"], err["error"]])
