"""Seeded experiment campaigns with deterministic, line-oriented reports.

A config is a flat ``key = value`` text file (``#`` starts a comment)::

    campaign = degenerate-sweep
    grid = 3:7 3:8 4:7
    trials = 200
    seed = 1

Trial ``i`` of grid point ``(k, n)`` draws its instance from
``derive_seed(seed, k, n, i)``. Trials may run in worker processes
(``HYPERTOUR_THREADS``), but results are merged in trial order, so the
report does not depend on the degree of parallelism.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import covers, degenerate, lemmas, pancyclic
from .connectivity import is_strong, is_valid_cycle, random_strong_tournament, two_kings
from .errors import BudgetExceeded, ConfigError, HypertourError
from .hamiltonian import hamiltonian_cycle
from .hypercore import derive_seed, random_hyperdigraph

CAMPAIGNS = (
    "degenerate-sweep",
    "lemma-sweep",
    "pancyclic-sweep",
    "cover-sweep",
    "kings-sweep",
    "witness-search",
)

KNOWN_KEYS = {
    "campaign", "grid", "trials", "seed", "budget", "densities", "mode",
    "ineq_kmax", "ineq_nspan", "timing",
}


@dataclass
class ExperimentConfig:
    campaign: str
    grid: list[tuple[int, int]]
    trials: int = 10
    seed: int = 0
    budget: int = 20000
    densities: list[float] = field(default_factory=lambda: [0.0, 0.25, 0.5, 0.75, 1.0])
    mode: str = "closure"
    ineq_kmax: int = 15
    ineq_nspan: int = 40
    timing: bool = False


def parse_config(text: str) -> ExperimentConfig:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value
    return config_from_dict(raw)


def config_from_dict(raw: dict) -> ExperimentConfig:
    campaign = raw.get("campaign")
    if campaign not in CAMPAIGNS:
        raise ConfigError(f"campaign must be one of {', '.join(CAMPAIGNS)}; got {campaign!r}")
    try:
        grid = []
        for tok in str(raw.get("grid", "")).replace(",", " ").split():
            k, n = tok.split(":")
            grid.append((int(k), int(n)))
        cfg = ExperimentConfig(campaign, grid)
        if "trials" in raw:
            cfg.trials = int(raw["trials"])
        if "seed" in raw:
            cfg.seed = int(raw["seed"])
        if "budget" in raw:
            cfg.budget = int(raw["budget"])
        if "densities" in raw:
            cfg.densities = [float(x) for x in str(raw["densities"]).replace(",", " ").split()]
        if "mode" in raw:
            cfg.mode = str(raw["mode"])
        if "ineq_kmax" in raw:
            cfg.ineq_kmax = int(raw["ineq_kmax"])
        if "ineq_nspan" in raw:
            cfg.ineq_nspan = int(raw["ineq_nspan"])
        if "timing" in raw:
            cfg.timing = str(raw["timing"]).lower() in ("1", "true", "yes")
    except ValueError as exc:
        raise ConfigError(f"bad value: {exc}") from None
    if cfg.trials < 0:
        raise ConfigError("trials must be >= 0")
    if cfg.mode not in ("closure", "leading"):
        raise ConfigError(f"mode must be closure or leading, got {cfg.mode!r}")
    if not grid and campaign != "lemma-sweep":
        raise ConfigError("grid is empty")
    for k, n in grid:
        if not 2 <= k <= n:
            raise ConfigError(f"grid point {k}:{n} needs 2 <= k <= n")
    if any(not 0.0 <= d <= 1.0 for d in cfg.densities) or not cfg.densities:
        raise ConfigError("densities must be a non-empty list in [0, 1]")
    return cfg


@dataclass
class ExperimentReport:
    lines: list[str]
    passed: bool

    def text(self) -> str:
        return "\n".join(self.lines + [f"verdict={'pass' if self.passed else 'fail'}"]) + "\n"


# -- per-trial work (module level so worker processes can pickle it) --------

def _degenerate_trial(k, n, seed, cfg):
    H, attempt = random_strong_tournament(k, n, seed)
    T, cert = degenerate.degenerate_tournament(H)
    C = hamiltonian_cycle(H)
    bounds = degenerate.build_bipartite(H, C).degree_bounds()
    checks = {
        "membership": bool(degenerate.verify_membership(T, H, cert)),
        "T_strong": is_strong(T),
        "degree_bounds": bounds.ok,
        "orientation": all(a.precedes(u, v) for (u, v), a in cert.assignment.items()),
    }
    return checks, f"attempt={attempt} min_pair_deg={bounds.min_pair_degree} max_arc_deg={bounds.max_arc_degree}"


def _lemma_trial(k, n, seed, cfg):
    H, attempt = random_strong_tournament(k, n, seed)
    C = hamiltonian_cycle(H)
    verdict = lemmas.check_cycle_bounds(C)
    checks = {"cycle_valid": is_valid_cycle(H, C), "cycle_bounds": verdict.ok}
    return checks, f"attempt={attempt} max_count={verdict.max_count} at_four={verdict.pairs_at_four}"


def _pancyclic_trial(k, n, seed, cfg):
    H, attempt = random_strong_tournament(k, n, seed)
    C = hamiltonian_cycle(H)
    arcs = pancyclic.pancyclic_hyperarcs_on_cycle(H, C)
    checks = {"vertex_pancyclic": pancyclic.is_vertex_pancyclic(H), "three_pancyclic_arcs": len(arcs) >= 3}
    return checks, f"attempt={attempt} pancyclic_arcs={len(arcs)}"


def _cover_trial(k, n, seed, cfg, index):
    density = cfg.densities[index % len(cfg.densities)]
    H = random_hyperdigraph(k, n, density, seed)
    report = covers.gallai_milgram_chain(H, mode=cfg.mode)
    checks = {"chain": report.chain_holds}
    chain = ",".join(map(str, report.chain))
    return checks, f"density={density} arcs={len(H.arcs)} chain={chain}"


def _kings_trial(k, n, seed, cfg):
    H, attempt = random_strong_tournament(k, n, seed)
    kings = two_kings(H)
    return {"three_kings": len(kings) >= 3}, f"attempt={attempt} kings={len(kings)}"


def _witness_trial(k, n, seed, cfg):
    try:
        H = degenerate.search_no_strong_witness(k, n, cfg.budget, seed)
    except BudgetExceeded:
        return {}, "found=0"
    in_range = degenerate.in_guaranteed_range(k, n)
    verified = is_strong(H) and degenerate.strong_member(H) is None
    arcs = ";".join(",".join(map(str, a.seq)) for a in H.arcs)
    return {"outside_guaranteed_range": not in_range, "verified": verified}, f"found=1 arcs={arcs}"


TRIALS = {
    "degenerate-sweep": _degenerate_trial,
    "lemma-sweep": _lemma_trial,
    "pancyclic-sweep": _pancyclic_trial,
    "cover-sweep": _cover_trial,
    "kings-sweep": _kings_trial,
    "witness-search": _witness_trial,
}


def _run_one(job):
    campaign, k, n, index, seed, cfg = job
    fn = TRIALS[campaign]
    start = time.perf_counter()
    try:
        if campaign == "cover-sweep":
            checks, detail = fn(k, n, seed, cfg, index)
        else:
            checks, detail = fn(k, n, seed, cfg)
        failed = sorted(name for name, ok in checks.items() if not ok)
    except HypertourError as exc:
        failed, detail = [type(exc).__name__], str(exc).replace("\n", " ")
    return failed, detail, time.perf_counter() - start


def thread_count() -> int:
    raw = os.environ.get("HYPERTOUR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"HYPERTOUR_THREADS must be an integer, got {raw!r}") from None


def _inequality_lines(cfg: ExperimentConfig) -> tuple[list[str], bool]:
    lines, ok = [], True
    for k in range(3, cfg.ineq_kmax + 1):
        for n in range(k, k + cfg.ineq_nspan + 1):
            holds, lhs, rhs = lemmas.check_matching_inequality(k, n)
            expected = lemmas.inequality_expected(k, n)
            bad = expected and not holds
            ok &= not bad
            lines.append(
                f"inequality k={k} n={n} lhs={lhs} rhs={rhs} holds={int(holds)} "
                f"claimed={int(expected)} status={'fail' if bad else 'ok'}"
            )
    return lines, ok


def run_experiment(cfg: ExperimentConfig, threads: int | None = None) -> ExperimentReport:
    threads = thread_count() if threads is None else threads
    lines = [
        "report=1",
        f"campaign={cfg.campaign}",
        f"seed={cfg.seed}",
        f"trials={cfg.trials}",
        "grid=" + ",".join(f"{k}:{n}" for k, n in cfg.grid),
    ]
    if cfg.campaign == "cover-sweep":
        lines.append(f"mode={cfg.mode} densities=" + ",".join(map(str, cfg.densities)))
    passed = True
    if cfg.campaign == "lemma-sweep":
        table, ok = _inequality_lines(cfg)
        lines += table
        passed &= ok

    jobs = [
        (cfg.campaign, k, n, i, derive_seed(cfg.seed, k, n, i), cfg)
        for k, n in cfg.grid for i in range(cfg.trials)
    ]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        results = [_run_one(job) for job in jobs]

    by_point: dict[tuple[int, int], list] = {}
    for job, result in zip(jobs, results):
        by_point.setdefault((job[1], job[2]), []).append((job, result))
    for (k, n), rows in by_point.items():
        fails = [(job, res) for job, res in rows if res[0]]
        total_time = sum(res[2] for _, res in rows)
        line = f"case k={k} n={n} trials={len(rows)} passed={len(rows) - len(fails)} failed={len(fails)}"
        if cfg.timing:
            line += f" seconds={total_time:.3f}"
        lines.append(line)
        for job, (failed, detail, _) in rows:
            tag = "fail" if failed else "trial"
            if failed or cfg.campaign == "witness-search" or cfg.campaign == "cover-sweep":
                lines.append(
                    f"{tag} k={k} n={n} trial={job[3]} seed={job[4]} checks={','.join(failed) or 'ok'} {detail}"
                )
        passed &= not fails
    return ExperimentReport(lines, passed)
