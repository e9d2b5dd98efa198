"""Exhaustive / randomized sweep over field shapes, with verification.

Every cell of the grid is a shape (p, f, e, d, t).  Within a cell the
sweep runs over theta_bar exponents (all of them, or a seeded random
sample), draws determinant exponents forced through the compatibility
check, builds a lift certificate, and verifies the emitted JSON with the
independent verifier.  Cell seeds are derived from (seed, cell key), so
reports are byte-identical for a fixed seed regardless of parallelism.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .certio import certificate_to_json
from .errors import InfeasibleError
from .fields import MultChar, digits, is_prime
from .lifting import DetSpec, LocalFieldShape, irr_crys_lift
from .units import UnitExpr
from .verify import verify_certificate


@dataclass(frozen=True)
class SweepConfig:
    p_values: tuple[int, ...] = (2, 3, 5)
    f_max: int = 2
    e_max: int = 2
    d_max: int = 3
    t_with_p: bool = False  # sweep t = p*(q-1) in addition to t = q-1
    a_bound: int = 10
    thetas_per_cell: int | None = 16  # None = exhaustive over theta_bar
    seed: int = 0
    jobs: int = 1
    max_field_bits: int = 10  # cap p^(f*d) <= 2^max_field_bits
    record: str = "all"  # "all" | "failures"

    def __post_init__(self) -> None:
        if not self.p_values:
            raise ValueError("empty p range")
        for name in ("f_max", "e_max", "d_max", "jobs", "max_field_bits"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not all(is_prime(p) for p in self.p_values):
            raise ValueError("p_values must all be prime")
        if self.record not in ("all", "failures"):
            raise ValueError(f"unknown record mode {self.record!r}")


@dataclass(frozen=True)
class Cell:
    p: int
    f: int
    e: int
    d: int
    t: int

    @property
    def key(self) -> str:
        return f"p={self.p},f={self.f},e={self.e},d={self.d},t={self.t}"


def iter_cells(config: SweepConfig) -> list[Cell]:
    cells = []
    cap = 2 ** config.max_field_bits
    for p in sorted(config.p_values):
        for f in range(1, config.f_max + 1):
            for d in range(1, config.d_max + 1):
                if p ** (f * d) > cap:
                    continue
                q = p ** f
                ts = [q - 1] + ([p * (q - 1)] if config.t_with_p else [])
                for e in range(1, config.e_max + 1):
                    for t in ts:
                        cells.append(Cell(p, f, e, d, t))
    return cells


def _force_compat(
    rng: random.Random, shape: LocalFieldShape, theta_bar: MultChar, bound: int
) -> tuple[int, ...]:
    """Sample determinant exponents |a| <= bound and adjust one entry per
    unramified block so the compatibility congruence holds."""
    p, e, f, d = shape.p, shape.e, shape.f, shape.d
    b = digits(theta_bar).digits
    a: list[int] = []
    for i0 in range(f):
        block = [rng.randint(-bound, bound) for _ in range(e)]
        target = sum(b[j] for j in range(i0, f * d, f))
        delta = (target - sum(block)) % (p - 1)
        block[0] += delta
        while block[0] > bound and block[0] - (p - 1) >= -bound:
            block[0] -= p - 1
        a.extend(block)
    return tuple(a)


def run_cell(cell: Cell, config: SweepConfig) -> list[dict]:
    """All instance rows for one cell; deterministic from (config.seed, cell)."""
    rng = random.Random(f"{config.seed}:{cell.key}")
    shape = LocalFieldShape(cell.p, cell.f, cell.e, cell.d, cell.t)
    big_q = cell.p ** (cell.f * cell.d)
    if config.thetas_per_cell is None or config.thetas_per_cell >= big_q - 1:
        bs = range(big_q - 1)
    else:
        bs = sorted(rng.sample(range(big_q - 1), config.thetas_per_cell))
    rows = []
    for b in bs:
        theta_bar = MultChar(shape.residue_field_E, b)
        a = _force_compat(rng, shape, theta_bar, config.a_bound)
        psi = DetSpec(a, UnitExpr.symbol("psi(varpi_F)"))
        row_id = f"{cell.key},b={b}"
        try:
            cert = irr_crys_lift(theta_bar, psi, shape)
        except InfeasibleError as exc:
            rows.append(
                {"id": row_id, "pass": False, "violations": [f"infeasible: {exc}"]}
            )
            continue
        ok, violations = verify_certificate(certificate_to_json(cert))
        rows.append({"id": row_id, "pass": ok, "violations": violations})
    return rows


def run_sweep(config: SweepConfig) -> dict:
    """Run the whole grid and assemble a deterministic report."""
    cells = iter_cells(config)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            per_cell = list(pool.map(run_cell, cells, [config] * len(cells)))
    else:
        per_cell = [run_cell(c, config) for c in cells]
    rows = [row for cell_rows in per_cell for row in cell_rows]
    totals = {
        "instances": len(rows),
        "passed": sum(1 for r in rows if r["pass"]),
        "failed": sum(1 for r in rows if not r["pass"]),
    }
    if config.record == "failures":
        rows = [r for r in rows if not r["pass"]]
    return {
        "schema": "sweep-report/v1",
        "config": asdict(config),
        "instances": rows,
        "totals": totals,
    }
