"""Exhaustive and sampled sweeps of the join identities over a whole group.

For every ordered pair (u, v) the sweeps compare three quantities built
from the union A = Phi_u | Phi_v of inversion sets:

* lhs      -- the inversion set of the weak-order join of u and v;
* rhs "H"  -- roots of the reflections reachable from the identity by
              length-increasing left products x -> s_alpha * x, alpha in A;
* rhs "D"  -- the same with right products x -> x * s_alpha.

"H" checks lhs == rhs_left, "D" checks lhs == rhs_right, and "EQ" checks
that the two routes agree pair by pair (same verdict and the same rhs).

The engine batches work by *distinct unions*: many ordered pairs share one
union A, and every quantity above depends on the pair only through A.
Reachability runs as a length-level dynamic program over all unions in a
chunk at once, and joins come from two boolean matrix products (upper
bounds, then minimality of the shortest one).
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from random import Random
from typing import Iterable, Sequence

import numpy as np

from .coxeter import CoxeterGraph, CoxeterSystem, build_system

DEFAULT_CHUNK = 4096
MAX_RECORDED_FAILURES = 100
_CONJECTURES = ("H", "D", "EQ")


def workers_from_env(default: int = 1) -> int:
    """Worker count from WEAKORDER_WORKERS, falling back to the default."""
    raw = os.environ.get("WEAKORDER_WORKERS", "").strip()
    if not raw:
        return default
    count = int(raw)
    if count < 1:
        raise ValueError("WEAKORDER_WORKERS must be a positive integer")
    return count


@dataclass
class SweepReport:
    """Outcome of one sweep, serializable as a stable JSON document."""

    type: str
    conjecture: str
    backend: str
    pairs_checked: int
    failure_count: int
    failures: list[dict] = field(default_factory=list)
    wall_time_ms: int = 0
    seed: int | None = None
    workers: int = 1
    schema: int = 1

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def as_dict(self) -> dict:
        return {
            "schema": self.schema,
            "type": self.type,
            "conjecture": self.conjecture,
            "backend": self.backend,
            "pairs_checked": self.pairs_checked,
            "failures": self.failures,
            "failure_count": self.failure_count,
            "wall_time_ms": self.wall_time_ms,
            "seed": self.seed,
            "workers": self.workers,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False)


def _as_system(target: str | CoxeterGraph | CoxeterSystem, backend: str) -> CoxeterSystem:
    if isinstance(target, CoxeterSystem):
        return target
    return build_system(target, backend=backend)


def _describe(system: CoxeterSystem) -> str:
    graph = system.graph
    return graph.name if graph.name else f"matrix{graph.m}"


# -- batched per-union computations ---------------------------------------------------

# Read-only state shared with forked workers (set before the pool starts).
_POOL_STATE: dict = {}


def _union_masks(unions: np.ndarray, n_roots: int) -> np.ndarray:
    return (unions[:, None] >> np.arange(n_roots, dtype=np.int64)[None, :]) & 1 != 0


def _joins_for_chunk(system: CoxeterSystem, masks: np.ndarray) -> np.ndarray:
    """Join element id for each union in the chunk (masks: kc x n_roots)."""
    npt = system.numpy_tables()
    absent = (~npt.invm).astype(np.float32)
    want = masks.T.astype(np.float32)
    missing = absent @ want  # missing[x, k] = #roots of union k outside Phi_x
    upper = missing == 0.0
    if not upper.any(axis=0).all():
        raise RuntimeError("some union admits no upper bound in a finite group")
    lengths = np.where(upper, npt.lengths[:, None].astype(np.int32), 1 << 30)
    join_ids = np.argmin(lengths, axis=0).astype(np.int32)
    # the shortest upper bound must lie below every other upper bound
    join_masks = npt.invm[join_ids]
    missing2 = absent @ join_masks.T.astype(np.float32)
    if (upper & (missing2 > 0.0)).any():
        raise RuntimeError("minimal upper bound is not unique")
    return join_ids


def _reachable_reflection_bits(
    system: CoxeterSystem, masks: np.ndarray, side: str
) -> np.ndarray:
    """Packed root bits of reflections reachable under each union in the chunk.

    Level dynamic program over element lengths: an element is reachable
    exactly when some label of the union steps down to an already-reachable
    shorter element (mirrors CoxeterSystem.reachable_ids, identity marked).
    """
    npt = system.numpy_tables()
    mul = npt.left if side == "left" else npt.right
    asc = npt.asc_left if side == "left" else npt.asc_right
    kc = masks.shape[0]
    masks_t = masks.T  # (n_roots, kc)
    reach = np.zeros((system.size, kc), dtype=bool)
    reach[0] = True
    for level in npt.levels[1:]:
        preds = mul[:, level]          # (n_roots, n_level) element ids
        down = ~asc[:, level]          # predecessor steps decrease length
        gather = reach[preds]          # (n_roots, n_level, kc)
        gather &= down[:, :, None]
        gather &= masks_t[:, None, :]
        reach[level] = gather.any(axis=0)
    hit = reach[npt.refl_ids]          # (n_roots, kc)
    return (hit * npt.pow2[:, None]).sum(axis=0, dtype=np.int64)


def _process_chunk(span: tuple[int, int]) -> tuple[np.ndarray, ...]:
    """Worker body: per-union lhs/rhs bits for unions[span[0]:span[1]]."""
    system: CoxeterSystem = _POOL_STATE["system"]
    unions: np.ndarray = _POOL_STATE["unions"]
    want_left: bool = _POOL_STATE["want_left"]
    want_right: bool = _POOL_STATE["want_right"]
    npt = system.numpy_tables()
    masks = _union_masks(unions[span[0]:span[1]], system.table.n_roots)
    join_ids = _joins_for_chunk(system, masks)
    lhs = npt.bits64[join_ids]
    empty = np.zeros(0, dtype=np.int64)
    rhs_left = (
        _reachable_reflection_bits(system, masks, "left") if want_left else empty
    )
    rhs_right = (
        _reachable_reflection_bits(system, masks, "right") if want_right else empty
    )
    return lhs, rhs_left, rhs_right


def _sweep_unions(
    system: CoxeterSystem,
    unions: np.ndarray,
    want_left: bool,
    want_right: bool,
    workers: int,
    chunk: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    spans = [
        (lo, min(lo + chunk, unions.size)) for lo in range(0, unions.size, chunk)
    ]
    _POOL_STATE.update(
        system=system, unions=unions, want_left=want_left, want_right=want_right
    )
    try:
        if workers > 1 and len(spans) > 1:
            with get_context("fork").Pool(workers) as pool:
                parts = pool.map(_process_chunk, spans)
        else:
            parts = [_process_chunk(s) for s in spans]
    finally:
        _POOL_STATE.clear()
    lhs = np.concatenate([p[0] for p in parts])
    rhs_left = np.concatenate([p[1] for p in parts]) if want_left else lhs
    rhs_right = np.concatenate([p[2] for p in parts]) if want_right else lhs
    return lhs, rhs_left, rhs_right


# -- pair enumeration and failure records ---------------------------------------------


def _pair_arrays(
    system: CoxeterSystem, sample: int | None, seed: int | None
) -> tuple[np.ndarray, np.ndarray]:
    n = system.size
    if sample is None:
        grid = np.arange(n, dtype=np.int32)
        return (
            np.repeat(grid, n),
            np.tile(grid, n),
        )
    rng = Random(seed)
    us = np.array([rng.randrange(n) for _ in range(sample)], dtype=np.int32)
    vs = np.array([rng.randrange(n) for _ in range(sample)], dtype=np.int32)
    return us, vs


def _word_text(system: CoxeterSystem, element_id: int) -> str:
    word = system.words[element_id]
    return " ".join(str(i) for i in word) if word else "e"


def _root_names(system: CoxeterSystem, bits: int) -> list[str]:
    return [
        system.table.roots[r].render()
        for r in range(system.table.n_roots)
        if bits >> r & 1
    ]


def _failure_records(
    system: CoxeterSystem,
    us: np.ndarray,
    vs: np.ndarray,
    bad: np.ndarray,
    lhs: np.ndarray,
    rhs_left: np.ndarray,
    rhs_right: np.ndarray,
    inverse: np.ndarray,
    conjecture: str,
) -> list[dict]:
    ids = np.nonzero(bad)[0]
    lengths = np.array(system.lengths, dtype=np.int32)
    order = np.lexsort((vs[ids], us[ids], lengths[vs[ids]], lengths[us[ids]]))
    records = []
    for p in ids[order][:MAX_RECORDED_FAILURES]:
        k = int(inverse[p])
        rec = {
            "u": _word_text(system, int(us[p])),
            "v": _word_text(system, int(vs[p])),
            "join_inversions": _root_names(system, int(lhs[k])),
        }
        if conjecture in ("H", "EQ"):
            rec["reachable_left"] = _root_names(system, int(rhs_left[k]))
        if conjecture in ("D", "EQ"):
            rec["reachable_right"] = _root_names(system, int(rhs_right[k]))
        records.append(rec)
    return records


def _run_sweep(
    target: str | CoxeterGraph | CoxeterSystem,
    conjecture: str,
    sample: int | None,
    seed: int | None,
    workers: int | None,
    backend: str,
    chunk: int,
) -> SweepReport:
    if conjecture not in _CONJECTURES:
        raise ValueError(f"conjecture must be one of {_CONJECTURES}")
    start = time.perf_counter()
    system = _as_system(target, backend)
    if system.table.n_roots > 62:
        raise ValueError("sweeps support at most 62 positive roots")
    workers = workers_from_env(1) if workers is None else workers
    npt = system.numpy_tables()
    us, vs = _pair_arrays(system, sample, seed)
    unions, inverse = np.unique(
        npt.bits64[us] | npt.bits64[vs], return_inverse=True
    )
    want_left = conjecture in ("H", "EQ")
    want_right = conjecture in ("D", "EQ")
    lhs, rhs_left, rhs_right = _sweep_unions(
        system, unions, want_left, want_right, workers, chunk
    )
    if conjecture == "H":
        union_ok = lhs == rhs_left
    elif conjecture == "D":
        union_ok = lhs == rhs_right
    else:
        # equal rhs sets force equal verdicts, so one comparison suffices
        union_ok = rhs_left == rhs_right
    bad = ~union_ok[inverse]
    failures = _failure_records(
        system, us, vs, bad, lhs, rhs_left, rhs_right, inverse, conjecture
    )
    return SweepReport(
        type=_describe(system),
        conjecture=conjecture,
        backend=backend,
        pairs_checked=int(us.size),
        failure_count=int(bad.sum()),
        failures=failures,
        wall_time_ms=int((time.perf_counter() - start) * 1000),
        seed=seed if sample is not None else None,
        workers=workers,
    )


def sweep_H(
    target: str | CoxeterGraph | CoxeterSystem,
    sample: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
    backend: str = "exact",
    chunk: int = DEFAULT_CHUNK,
) -> SweepReport:
    """Compare join inversion sets with left-product reachable reflections."""
    return _run_sweep(target, "H", sample, seed, workers, backend, chunk)


def sweep_D(
    target: str | CoxeterGraph | CoxeterSystem,
    sample: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
    backend: str = "exact",
    chunk: int = DEFAULT_CHUNK,
) -> SweepReport:
    """Compare join inversion sets with right-product reachable reflections."""
    return _run_sweep(target, "D", sample, seed, workers, backend, chunk)


def sweep_equivalence(
    target: str | CoxeterGraph | CoxeterSystem,
    sample: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
    backend: str = "exact",
    chunk: int = DEFAULT_CHUNK,
) -> SweepReport:
    """Check the left and right routes give identical verdicts and sets."""
    return _run_sweep(target, "EQ", sample, seed, workers, backend, chunk)


def sweep(
    target: str | CoxeterGraph | CoxeterSystem,
    conjecture: str,
    sample: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
    backend: str = "exact",
    chunk: int = DEFAULT_CHUNK,
) -> SweepReport:
    """Dispatch on the conjecture code ("H", "D" or "EQ")."""
    return _run_sweep(target, conjecture, sample, seed, workers, backend, chunk)
