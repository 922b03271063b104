"""Benchmark harness: per-instance measurements and (n, Pr) sweeps to CSV."""

from __future__ import annotations

import csv
import json
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .generator import GeneratorConfig, SampleBudgetError, sample_instance
from .inference import (
    CollectionCapError,
    DEFAULT_SET_CAP,
    DefenderPolicy,
    branch_structure,
    compute_all,
    compute_approx,
)
from .model import ArgumentationFramework, Semantics
from .semantics import Extension
from .verify import VerifyMethod, verify_collection

CSV_COLUMNS = [
    "aaf_size",
    "ext_size",
    "attacks",
    "preference_sets",
    "preferences",
    "ctime_ms",
    "vtime1_ms",
    "vtime2_ms",
    "pr",
]

EXHAUSTIVE = "exhaustive"
APPROXIMATE = "approximate"


@dataclass(frozen=True)
class BenchRecord:
    aaf_size: int
    ext_size: int
    attacks: int
    preference_sets: int
    preferences: int
    ctime_ms: float
    vtime1_ms: float
    vtime2_ms: float
    vcheck_ok: bool


def run_point(
    framework: ArgumentationFramework,
    e: Extension,
    semantics: Semantics,
    mode: str = EXHAUSTIVE,
    policy: DefenderPolicy = DefenderPolicy.UNATTACKED,
    set_cap: int = DEFAULT_SET_CAP,
    seed: int = 0,
    measure_time: bool = True,
) -> BenchRecord:
    """Inference plus both verifications on one instance, timed around the calls.

    With measure_time off all timing columns are reported as 0.0, which keeps
    sweep output byte-reproducible.
    """
    clock = time.perf_counter if measure_time else (lambda: 0.0)
    bs = branch_structure(framework, e, policy)
    t0 = clock()
    if mode == EXHAUSTIVE:
        collection = compute_all(framework, e, policy, set_cap=set_cap)
    elif mode == APPROXIMATE:
        collection = frozenset({compute_approx(framework, e, policy, seed=seed)})
    else:
        raise ValueError(f"unknown mode: {mode!r}")
    ctime = (clock() - t0) * 1000.0

    t0 = clock()
    r1 = verify_collection(
        framework, e, semantics, collection, VerifyMethod.REMOVAL,
        warn_non_extension=False,
    )
    vtime1 = (clock() - t0) * 1000.0
    t0 = clock()
    r2 = verify_collection(
        framework, e, semantics, collection, VerifyMethod.REVERSAL,
        warn_non_extension=False,
    )
    vtime2 = (clock() - t0) * 1000.0
    return BenchRecord(
        aaf_size=len(framework.arguments),
        ext_size=len(e),
        attacks=len(framework.attacks),
        preference_sets=len(collection),
        preferences=bs.c1 + bs.c2 + bs.c3,
        ctime_ms=ctime,
        vtime1_ms=vtime1,
        vtime2_ms=vtime2,
        vcheck_ok=r1.vcheck and r2.vcheck,
    )


@dataclass(frozen=True)
class SweepConfig:
    semantics: Semantics
    mode: str = EXHAUSTIVE
    policy: DefenderPolicy = DefenderPolicy.UNATTACKED
    sizes: tuple[int, ...] = (4, 5, 6, 7, 8)
    probs: tuple[float, ...] = (0.25, 0.5, 0.75)
    instances_per_point: int = 10
    seed: int = 0
    set_cap: int = DEFAULT_SET_CAP
    max_attempts: int = 1000
    measure_time: bool = True

    @classmethod
    def from_json(cls, data: dict) -> "SweepConfig":
        return cls(
            semantics=Semantics(data["semantics"]),
            mode=data.get("mode", EXHAUSTIVE),
            policy=DefenderPolicy(data.get("policy", "unattacked")),
            sizes=tuple(data.get("sizes", [4, 5, 6, 7, 8])),
            probs=tuple(data.get("probs", [0.25, 0.5, 0.75])),
            instances_per_point=int(data.get("instances_per_point", 10)),
            seed=int(data.get("seed", 0)),
            set_cap=int(data.get("set_cap", DEFAULT_SET_CAP)),
            max_attempts=int(data.get("max_attempts", 1000)),
            measure_time=bool(data.get("measure_time", True)),
        )

    def to_json(self) -> dict:
        data = asdict(self)
        data["semantics"] = self.semantics.value
        data["policy"] = self.policy.value
        data["sizes"] = list(self.sizes)
        data["probs"] = list(self.probs)
        return data


@dataclass
class SweepResult:
    rows: list[dict] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)


def run_sweep(config: SweepConfig) -> SweepResult:
    """Average `instances_per_point` records per (n, Pr); point errors are
    recorded, never fatal."""
    result = SweepResult()
    for pr in config.probs:
        for n in config.sizes:
            records: list[BenchRecord] = []
            for k in range(config.instances_per_point):
                instance_seed = hash((config.seed, n, pr, k)) & (2**31 - 1)
                try:
                    framework, ext = sample_instance(
                        GeneratorConfig(size=n, attack_prob=pr, seed=instance_seed),
                        config.semantics,
                        max_attempts=config.max_attempts,
                    )
                    rec = run_point(
                        framework,
                        ext,
                        config.semantics,
                        mode=config.mode,
                        policy=config.policy,
                        set_cap=config.set_cap,
                        seed=instance_seed,
                        measure_time=config.measure_time,
                    )
                except (CollectionCapError, SampleBudgetError) as exc:
                    result.errors.append(
                        {"aaf_size": n, "pr": pr, "instance": k, "error": str(exc)}
                    )
                    continue
                if not rec.vcheck_ok:
                    result.errors.append(
                        {
                            "aaf_size": n,
                            "pr": pr,
                            "instance": k,
                            "error": "vcheck failed",
                        }
                    )
                records.append(rec)
            if records:
                m = len(records)
                result.rows.append(
                    {
                        "aaf_size": n,
                        "ext_size": sum(r.ext_size for r in records) / m,
                        "attacks": sum(r.attacks for r in records) / m,
                        "preference_sets": sum(r.preference_sets for r in records) / m,
                        "preferences": sum(r.preferences for r in records) / m,
                        "ctime_ms": sum(r.ctime_ms for r in records) / m,
                        "vtime1_ms": sum(r.vtime1_ms for r in records) / m,
                        "vtime2_ms": sum(r.vtime2_ms for r in records) / m,
                        "pr": pr,
                    }
                )
    return result


def _fmt(column: str, value) -> str:
    if column == "pr":
        return f"{value:g}"
    if isinstance(value, float):
        return f"{value:.1f}"
    return str(value)


def write_csv(rows: Iterable[dict], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_fmt(c, row[c]) for c in CSV_COLUMNS])


def write_sidecar(config: SweepConfig, result: SweepResult, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(
            {"config": config.to_json(), "errors": result.errors}, fh, indent=2
        )
        fh.write("\n")
