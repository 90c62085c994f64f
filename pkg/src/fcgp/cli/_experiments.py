# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import time
import logging
from dataclasses import (dataclass, field, replace)
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import (Callable, Dict, List, Optional, Sequence, Tuple)

import numpy as np

from ._records import RunRecord
from ..core import (Graph, Instance, Solution, cov_alpha, write_edge_list)
from ..errors import (GateExhaustedError, InputError)
from ..generators import (GapInstanceSpec, gap_report, gen_gap_instance, gen_grid, gen_random_gnm)
from ..output import progress
from ..solvers import (
    candidate_set,
    fptas_general,
    fptas_topdegree,
    greedy_extremal_degree,
    solve_branch_and_bound,
    solve_brute_force
)
from ..subexp import (check_exchange_lemma, solve_subexponential)
from ..types import SuiteName
from .._parallel import (parallel_map, resolve_workers)


_LOGGER = logging.getLogger(__name__)

SUITES = ("approx", "gap", "subexp", "exchange")

APPROX_ALPHAS = (Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4), Fraction(1))
MAX_LEMMA_ALPHAS = (Fraction(1, 3), Fraction(1, 2), Fraction(1))
MIN_LEMMA_ALPHAS = (Fraction(0), Fraction(1, 6), Fraction(1, 3))
TOPDEG_EPSILON = Fraction(1, 2)


@dataclass(frozen=True)
class ExperimentConfig():
    r"""
    Parameters of one experiment sweep.

    Attributes
    ----------
        suite : SuiteName
            `"approx"`, `"gap"`, `"subexp"` or `"exchange"`.

        trials : int
            Random instances per sweep (ignored by `"gap"`).

        seed : int
            Base seed; trial `t` draws from `default_rng([seed, t])`.

        max_n : int
            Largest number of vertices of a random instance.

        max_k : int
            Largest cardinality of a random instance.

        epsilons : Tuple[Fraction, ...]
            Accuracy parameters of the `"approx"` sweep.

        gap_k : int
            Clique size of the `"gap"` suite.

        gap_N : Optional[int]
            Hub count of the `"gap"` suite, default `gap_k`.

        mus : Tuple[Fraction, ...]
            The `mu` values of the `"gap"` suite.

        workers : Optional[int]
            Worker processes, `None` for :attr:`Settings.workers`.

        repro_dir : Path
            Where the edge lists of violating instances are written.
    """
    suite: SuiteName
    trials: int = 50
    seed: int = 0
    max_n: int = 12
    max_k: int = 4
    epsilons: Tuple[Fraction, ...] = (Fraction(1, 4), Fraction(1, 2))
    gap_k: int = 30
    gap_N: Optional[int] = None
    mus: Tuple[Fraction, ...] = (Fraction(1, 10), Fraction(1, 6))
    workers: Optional[int] = None
    repro_dir: Path = field(default_factory=Path)

    def __post_init__(self):
        if self.suite not in SUITES:
            raise InputError(f"Unknown Suite: {self.suite!r}. Valid Suites: {SUITES}")
        for name in ("trials", "max_n", "max_k", "gap_k"):
            if getattr(self, name) < 1:
                raise InputError(f"Argument '{name}' Must Be Positive, Got {getattr(self, name)}.")


@dataclass
class TrialOutcome():
    records: List[RunRecord] = field(default_factory=list)
    violations: int = 0
    skipped: int = 0
    repro: Optional[Tuple[str, Graph]] = None

    def flag(self, name: str, graph: Graph):
        self.violations += 1
        if self.repro is None:
            self.repro = (name, graph)


@dataclass(frozen=True)
class ExperimentReport():
    r"""
    All records of a sweep (summary row last) with the violation count and the repro files written.
    """
    records: Tuple[RunRecord, ...]
    violations: int
    skipped: int
    repro_paths: Tuple[Path, ...]


def _timed(func: Callable[[], Solution]) -> Tuple[Solution, float]:
    start = time.perf_counter()
    result = func()
    return result, (time.perf_counter() - start) * 1000


def _random_gnm(rng: np.random.Generator, min_n: int, max_n: int, sparse: bool = False) -> Tuple[Graph, str]:
    n = int(rng.integers(min_n, max_n + 1))
    slots = comb(n, 2)
    m = int(rng.integers(0, (min(slots, 3 * n // 2) if sparse else slots) + 1))
    graph_seed = int(rng.integers(2 ** 31))
    return gen_random_gnm(n, m, graph_seed), f"gnm(n={n},m={m})#{graph_seed}"


def _lemma_instance(rng: np.random.Generator, graph: Graph, k: int) -> Instance:
    if rng.integers(2) == 0:
        alpha = MAX_LEMMA_ALPHAS[int(rng.integers(len(MAX_LEMMA_ALPHAS)))]
        return Instance(graph, k, alpha, "max")
    alpha = MIN_LEMMA_ALPHAS[int(rng.integers(len(MIN_LEMMA_ALPHAS)))]
    return Instance(graph, k, alpha, "min")


def _approx_trial(config: ExperimentConfig, trial: int) -> TrialOutcome:
    rng = np.random.default_rng([config.seed, trial])
    k = int(rng.integers(1, min(config.max_k, config.max_n) + 1))
    graph, desc = _random_gnm(rng, k, config.max_n)
    alpha = APPROX_ALPHAS[int(rng.integers(len(APPROX_ALPHAS)))]
    direction = "max" if rng.integers(2) == 0 else "min"
    instance = Instance(graph, k, alpha, direction)
    name = f"approx-{trial:04d}"

    exhaustive, ms = _timed(lambda: solve_brute_force(instance).solution)
    oracle = exhaustive.value
    outcome = TrialOutcome()
    outcome.records.append(RunRecord.from_solution(desc, "brute", instance, exhaustive, None, ms, oracle))

    bnb, ms = _timed(lambda: solve_branch_and_bound(instance).solution)
    if bnb.value != oracle or bnb.vertices != exhaustive.vertices:
        outcome.flag(name, graph)
    outcome.records.append(RunRecord.from_solution(desc, "bnb", instance, bnb, None, ms, oracle))

    greedy, ms = _timed(lambda: greedy_extremal_degree(instance))
    slack = 2 * k * k
    if (greedy.value < oracle - slack) if instance.maximize else (greedy.value > oracle + slack):
        outcome.flag(name, graph)
    outcome.records.append(RunRecord.from_solution(desc, "greedy", instance, greedy, None, ms, oracle))

    for eps in config.epsilons if alpha > 0 else ():
        result, ms = _timed(lambda: fptas_general(instance, eps).solution)
        bound = (1 - eps) * oracle if instance.maximize else (1 + eps) * oracle
        if (result.value < bound) if instance.maximize else (result.value > bound):
            outcome.flag(name, graph)
        outcome.records.append(RunRecord.from_solution(desc, "fptas", instance, result, eps, ms, oracle))

    if instance.maximize and alpha >= Fraction(1, 3):
        result, ms = _timed(lambda: fptas_topdegree(instance, TOPDEG_EPSILON).solution)
        if result.value < (1 - TOPDEG_EPSILON) * oracle:
            outcome.flag(name, graph)
        outcome.records.append(
            RunRecord.from_solution(desc, "topdeg", instance, result, TOPDEG_EPSILON, ms, oracle)
        )
    return outcome


def _gap_trial(config: ExperimentConfig, trial: int) -> TrialOutcome:
    mu = config.mus[trial]
    outcome = TrialOutcome()

    spec = GapInstanceSpec(config.gap_k, config.gap_k if config.gap_N is None else config.gap_N, mu)
    instance = gen_gap_instance(spec)
    report = gap_report(spec)
    graph, k = instance.graph, spec.k
    desc = f"gap(k={spec.k},N={spec.N},mu={mu.numerator}/{mu.denominator})"
    name = f"gap-{trial:04d}"

    closed_forms_hold = (
        cov_alpha(graph, spec.clique, spec.alpha) == report.clique_value
        and (report.hub_value is None or cov_alpha(graph, spec.hubs[:k], spec.alpha) == report.hub_value)
    )
    if not closed_forms_hold:
        outcome.flag(name, graph)

    if spec.N >= k:
        top = candidate_set(graph, k, TOPDEG_EPSILON, size=spec.N)
        best, ms = _timed(lambda: solve_branch_and_bound(instance, candidates=top.vertices).solution)
        if best.value != report.hub_value or (report.tight and not report.below_one_minus_3mu):
            outcome.flag(name, graph)
        record = RunRecord.from_solution(desc, "topdeg-f", instance, best, None, ms, report.clique_value)
        outcome.records.append(record)
    else:
        outcome.skipped += 1

    # small instance against the exhaustive optimum
    small_spec = GapInstanceSpec(4, 4, mu)
    small = gen_gap_instance(small_spec)
    small_report = gap_report(small_spec)
    small_top = candidate_set(small.graph, 4, TOPDEG_EPSILON, size=small_spec.N)
    optimum, ms = _timed(lambda: solve_brute_force(small).solution)
    top_value = solve_brute_force(small, candidates=small_top.vertices).value
    if optimum.value < small_report.clique_value or top_value != small_report.hub_value:
        outcome.flag(f"{name}-small", small.graph)
    outcome.records.append(RunRecord.from_solution(
        f"gap(k=4,N=4,mu={mu.numerator}/{mu.denominator})", "brute", small, optimum, None, ms, optimum.value
    ))
    return outcome


def _subexp_trial(config: ExperimentConfig, trial: int) -> TrialOutcome:
    rng = np.random.default_rng([config.seed, trial])
    if trial % 2 == 0:
        rows = int(rng.integers(1, min(4, config.max_n) + 1))
        cols = int(rng.integers(1, max(1, min(4, config.max_n // rows)) + 1))
        graph, desc = gen_grid(rows, cols), f"grid(rows={rows},cols={cols})"
    else:
        graph, desc = _random_gnm(rng, 1, config.max_n, sparse=True)
    k = int(rng.integers(1, min(config.max_k, graph.n) + 1))
    instance = _lemma_instance(rng, graph, k)
    name = f"subexp-{trial:04d}"

    outcome = TrialOutcome()
    oracle = solve_brute_force(instance).value
    try:
        result, ms = _timed(lambda: solve_subexponential(instance, workers=1).solution)
    except GateExhaustedError:
        outcome.skipped += 1
        outcome.records.append(RunRecord(
            desc, "subexp", k, instance.alpha.value, None, instance.direction, provenance="gate-exhausted",
            oracle=oracle
        ))
        return outcome
    if result.value != oracle:
        outcome.flag(name, graph)
    outcome.records.append(RunRecord.from_solution(desc, "subexp", instance, result, None, ms, oracle))
    return outcome


def _exchange_trial(config: ExperimentConfig, trial: int) -> TrialOutcome:
    rng = np.random.default_rng([config.seed, trial])
    k = int(rng.integers(1, min(config.max_k, config.max_n) + 1))
    graph, desc = _random_gnm(rng, k, config.max_n)
    instance = _lemma_instance(rng, graph, k)

    outcome = TrialOutcome()
    witness, ms = _timed(lambda: check_exchange_lemma(instance))
    if not witness.dominated:
        outcome.flag(f"exchange-{trial:04d}", graph)
    record = RunRecord.from_solution(desc, "exchange", instance, witness.solution, None, ms)
    verdict = "true" if witness.dominated else "false"
    outcome.records.append(
        replace(record, provenance=f"j={witness.j} dominated={verdict}")
    )
    return outcome


_TRIALS: Dict[str, Callable[[ExperimentConfig, int], TrialOutcome]] = {
    "approx": _approx_trial,
    "gap": _gap_trial,
    "subexp": _subexp_trial,
    "exchange": _exchange_trial,
}


def _trial_task(packed: Tuple[ExperimentConfig, int]) -> TrialOutcome:
    config, trial = packed
    return _TRIALS[config.suite](config, trial)


def _worst_ratio(records: Sequence[RunRecord]) -> Optional[Fraction]:
    ratios = [record.ratio for record in records if record.ratio is not None]
    return min(ratios) if ratios else None


def run_experiment(config: ExperimentConfig, show_progress: bool = True) -> ExperimentReport:
    r"""
    Run a sweep and collect its records in trial order, followed by a summary row.

    Parameters
    ----------
        config : ExperimentConfig
            The sweep parameters.

        show_progress : bool, default to `True`
            Show a :pkg:`tqdm` bar on stderr when running in-process on a terminal.

    Returns
    -------
        ExperimentReport
            The records, with a summary row whose `ratio` is the worst ratio and whose provenance
            reads `violations=N`. Violating instances are written to :attr:`ExperimentConfig.repro_dir`.
    """
    count = len(config.mus) if config.suite == "gap" else config.trials
    tasks = [(config, trial) for trial in range(count)]
    used = resolve_workers(config.workers)
    if used <= 1:
        outcomes = [_trial_task(task) for task in progress(tasks, len(tasks), config.suite, show_progress)]
    else:
        outcomes = parallel_map(_trial_task, tasks, workers=used)

    records: List[RunRecord] = []
    violations = skipped = 0
    repro_paths: List[Path] = []
    for outcome in outcomes:
        records.extend(outcome.records)
        violations += outcome.violations
        skipped += outcome.skipped
        if outcome.repro is not None:
            name, graph = outcome.repro
            Path(config.repro_dir).mkdir(parents=True, exist_ok=True)
            path = write_edge_list(graph, Path(config.repro_dir) / f"{name}.el")
            repro_paths.append(path)
            _LOGGER.warning("guarantee violated on %s, instance written to %s", name, path)

    note = f"violations={violations}" + (f" skipped={skipped}" if skipped else "")
    records.append(RunRecord("summary", config.suite, provenance=note, ratio=_worst_ratio(records)))
    _LOGGER.info("%s: %d records, %s", config.suite, len(records) - 1, note)
    return ExperimentReport(tuple(records), violations, skipped, tuple(repro_paths))
