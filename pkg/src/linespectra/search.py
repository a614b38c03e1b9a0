"""Desk-scale search for configurations with few incidences or lines.

Two strategies over integer grid coordinates: exhaustive enumeration of small
subsets of a g x g grid, and hill climbing with random restarts.  Both reject
any candidate whose maximum collinearity exceeds the cap, so every reported
configuration is feasible by construction.  The objective is the incidence
count by default (the conjectured-extremal quantity), or the spanned-line
count via the objective switch.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import rational_field
from .projective import Configuration, ProjectivePoint

OBJECTIVES = ("incidences", "lines")

_EXHAUSTIVE_MAX_N = 8
_EXHAUSTIVE_MAX_G = 5


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchRecord:
    best_config: Configuration
    objective: Fraction
    best_value: int
    objective_kind: str
    constraint: int
    method: str
    iterations: int
    seed: int
    history: Tuple[Tuple[int, Fraction], ...]


def _int_stats(pts: Sequence[Tuple[int, int]]) -> Tuple[int, int, int]:
    """(total_lines, incidences, max_collinear) for distinct integer points.

    Pairs are grouped by the primitive integer triple of the affine line
    through them, the same keying the spectrum computation uses."""
    lines: Dict[Tuple[int, int, int], set] = {}
    for i in range(len(pts)):
        x1, y1 = pts[i]
        for j in range(i + 1, len(pts)):
            x2, y2 = pts[j]
            a = y1 - y2
            b = x2 - x1
            c = x1 * y2 - x2 * y1
            g = gcd(gcd(abs(a), abs(b)), abs(c))
            a, b, c = a // g, b // g, c // g
            if a < 0 or (a == 0 and b < 0):
                a, b, c = -a, -b, -c
            lines.setdefault((a, b, c), set()).update((i, j))
    sizes = [len(members) for members in lines.values()]
    return len(lines), sum(sizes), max(sizes, default=0)


def _objective_value(stats: Tuple[int, int, int], kind: str) -> int:
    return stats[1] if kind == "incidences" else stats[0]


def _as_configuration(pts: Sequence[Tuple[int, int]], label: str) -> Configuration:
    field = rational_field()
    return Configuration(
        field, tuple(ProjectivePoint((x, y, 1), field) for x, y in pts), label
    )


def _check_objective(kind: str):
    if kind not in OBJECTIVES:
        raise SearchError(f"objective must be one of {OBJECTIVES}, got {kind!r}")


# ---------------------------------------------------------------------------
# Exhaustive enumeration.

def _dihedral_maps(g: int):
    maps = []
    for swap in (False, True):
        for flip_x in (False, True):
            for flip_y in (False, True):
                def move(p, swap=swap, fx=flip_x, fy=flip_y):
                    x, y = (p[1], p[0]) if swap else p
                    if fx:
                        x = g - 1 - x
                    if fy:
                        y = g - 1 - y
                    return (x, y)
                maps.append(move)
    return maps


def _is_canonical(subset: Tuple[Tuple[int, int], ...], maps) -> bool:
    """True iff subset is the lexicographic minimum of its symmetry orbit.

    Skipping non-canonical subsets cannot change the reported optimum: the
    objective and the cap are symmetry-invariant, and the lexicographically
    first optimal subset is necessarily its own orbit minimum."""
    for move in maps:
        if tuple(sorted(move(p) for p in subset)) < subset:
            return False
    return True


def exhaustive_search(n: int, g: int, cap: int,
                      objective: str = "incidences",
                      prune: bool = True) -> SearchRecord:
    """Minimum-objective n-subset of the g x g grid with max collinearity
    <= cap.  Deterministic: ties resolve to the lexicographically first
    subset, with or without symmetry pruning."""
    _check_objective(objective)
    if not 2 <= n <= _EXHAUSTIVE_MAX_N:
        raise SearchError(f"exhaustive search supports 2 <= n <= {_EXHAUSTIVE_MAX_N}, got {n}")
    if not 2 <= g <= _EXHAUSTIVE_MAX_G:
        raise SearchError(f"exhaustive search supports 2 <= g <= {_EXHAUSTIVE_MAX_G}, got {g}")
    if n > g * g:
        raise SearchError(f"cannot place {n} distinct points on a {g}x{g} grid")
    if cap < 2:
        raise SearchError(f"cap must be at least 2, got {cap}")

    grid_points = [(x, y) for x in range(g) for y in range(g)]
    maps = _dihedral_maps(g) if prune else None
    best_pts: Optional[Tuple[Tuple[int, int], ...]] = None
    best = None
    examined = 0
    history: List[Tuple[int, Fraction]] = []
    for subset in itertools.combinations(grid_points, n):
        if maps is not None and not _is_canonical(subset, maps):
            continue
        examined += 1
        stats = _int_stats(subset)
        if stats[2] > cap:
            continue
        value = _objective_value(stats, objective)
        if best is None or value < best or (value == best and subset < best_pts):
            if best is None or value < best:
                history.append((examined, Fraction(value, n * n)))
            best = value
            best_pts = subset
    if best_pts is None:
        raise SearchError(f"no {n}-subset of the {g}x{g} grid has max collinearity <= {cap}")
    label = f"exhaustive(n={n},g={g},cap={cap})"
    return SearchRecord(
        best_config=_as_configuration(best_pts, label),
        objective=Fraction(best, n * n),
        best_value=best,
        objective_kind=objective,
        constraint=cap,
        method="exhaustive",
        iterations=examined,
        seed=0,
        history=tuple(history),
    )


# ---------------------------------------------------------------------------
# Hill climbing with restarts.

_CHECKPOINT_KIND = "local-search-checkpoint"


def _fingerprint(n, bound, cap, iterations, restarts, seed, objective) -> Dict:
    return {
        "n": n, "bound": bound, "cap": cap, "iterations": iterations,
        "restarts": restarts, "seed": seed, "objective": objective,
    }


def _load_checkpoint(path: Path, fingerprint: Dict) -> Optional[Dict]:
    if not path.exists():
        return None
    data = json.loads(path.read_text())
    if data.get("kind") != _CHECKPOINT_KIND:
        raise SearchError(f"{path} is not a search checkpoint")
    if data["fingerprint"] != fingerprint:
        raise SearchError(f"checkpoint {path} was produced by a different search")
    return data


def _save_checkpoint(path: Path, fingerprint: Dict, completed: int,
                     evaluations: int, best_pts, best_value,
                     history) -> None:
    data = {
        "kind": _CHECKPOINT_KIND,
        "fingerprint": fingerprint,
        "completed_restarts": completed,
        "evaluations": evaluations,
        "best": None if best_pts is None else {
            "points": [list(p) for p in best_pts],
            "value": best_value,
        },
        "history": [[it, str(obj)] for it, obj in history],
    }
    path.write_text(json.dumps(data, indent=2) + "\n")


def _random_feasible(rng: random.Random, n: int, bound: int, cap: int):
    for _ in range(1000):
        seen = set()
        pts = []
        while len(pts) < n:
            p = (rng.randrange(bound), rng.randrange(bound))
            if p not in seen:
                seen.add(p)
                pts.append(p)
        stats = _int_stats(pts)
        if stats[2] <= cap:
            return pts, stats
    raise SearchError(
        f"could not sample a start with max collinearity <= {cap} in [0,{bound})^2")


def local_search(n: int, bound: Optional[int] = None, cap: Optional[int] = None,
                 iterations: int = 2000, seed: int = 0, restarts: int = 4,
                 objective: str = "incidences",
                 checkpoint: Optional[str] = None) -> SearchRecord:
    """Strict-improvement hill climbing: each move relocates one point to a
    uniform position, rejected on duplicate coordinates or a cap violation.

    Restarts draw their generator seeds from the master seed up front, so a
    run interrupted between restarts and resumed from its checkpoint file
    produces the record an uninterrupted run would have.  Ties between
    restarts resolve to the lexicographically first point set, independent
    of restart order."""
    _check_objective(objective)
    if n < 4:
        raise SearchError(f"local search wants n >= 4, got {n}")
    if bound is None:
        bound = 4 * n
    if bound < n:
        raise SearchError(f"bound {bound} leaves too little room for {n} distinct points")
    if cap is None:
        cap = n
    if cap < 2:
        raise SearchError(f"cap must be at least 2, got {cap}")
    if iterations < 0 or restarts < 1:
        raise SearchError("iterations must be >= 0 and restarts >= 1")

    fingerprint = _fingerprint(n, bound, cap, iterations, restarts, seed, objective)
    master = random.Random(seed)
    restart_seeds = [master.getrandbits(64) for _ in range(restarts)]

    start_restart = 0
    evaluations = 0
    best_pts = None
    best_value = None
    history: List[Tuple[int, Fraction]] = []
    ckpt_path = Path(checkpoint) if checkpoint else None
    if ckpt_path is not None:
        state = _load_checkpoint(ckpt_path, fingerprint)
        if state is not None:
            start_restart = state["completed_restarts"]
            evaluations = state["evaluations"]
            if state["best"] is not None:
                best_pts = tuple(tuple(p) for p in state["best"]["points"])
                best_value = state["best"]["value"]
            history = [(it, Fraction(obj)) for it, obj in state["history"]]

    for r in range(start_restart, restarts):
        rng = random.Random(restart_seeds[r])
        current, stats = _random_feasible(rng, n, bound, cap)
        value = _objective_value(stats, objective)
        occupied = set(current)
        for proposed_value, proposed_pts in _climb(rng, current, occupied, value,
                                                   bound, cap, objective,
                                                   iterations):
            evaluations += 1
            if proposed_pts is None:
                continue
            key = tuple(sorted(proposed_pts))
            if best_value is None or proposed_value < best_value:
                best_value = proposed_value
                best_pts = key
                history.append((evaluations, Fraction(best_value, n * n)))
            elif proposed_value == best_value and key < best_pts:
                best_pts = key
        if ckpt_path is not None:
            _save_checkpoint(ckpt_path, fingerprint, r + 1, evaluations,
                             best_pts, best_value, history)

    label = f"local(n={n},cap={cap},seed={seed})"
    return SearchRecord(
        best_config=_as_configuration(best_pts, label),
        objective=Fraction(best_value, n * n),
        best_value=best_value,
        objective_kind=objective,
        constraint=cap,
        method="local",
        iterations=evaluations,
        seed=seed,
        history=tuple(history),
    )


def _climb(rng: random.Random, current, occupied, value, bound, cap,
           objective, iterations):
    """Yields one (value, points-or-None) item per evaluation: first the
    start, then each proposal (None = rejected)."""
    n = len(current)
    yield value, list(current)
    for _ in range(iterations):
        idx = rng.randrange(n)
        candidate = (rng.randrange(bound), rng.randrange(bound))
        if candidate in occupied:
            yield value, None
            continue
        old = current[idx]
        current[idx] = candidate
        stats = _int_stats(current)
        cand_value = _objective_value(stats, objective)
        if stats[2] <= cap and cand_value < value:
            occupied.discard(old)
            occupied.add(candidate)
            value = cand_value
            yield value, list(current)
        else:
            current[idx] = old
            yield value, None
