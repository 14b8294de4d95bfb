"""Brute-force and pruned enumeration of candidate rows.

This is the ground-truth oracle for everything else in the package: it
visits sign rows directly and keeps only those whose circulant matrix is
exactly Hadamard.  Three strategies are provided and must always agree
on what they find:

* ``exhaustive``        -- all 2^n rows (bit-mask walk, exact popcount math);
* ``weight-constrained``-- only rows carrying one of the two admissible
                           -1 counts for a perfect-square order;
* ``pruned-dfs``        -- left-to-right sign assignment, backtracking as
                           soon as any partial autocorrelation provably
                           cannot reach zero (magnitude or parity).

Work is split into independent subtrees by fixing the first few entries
(2^P prefixes with 2^P >= 4*jobs), so results merge deterministically
regardless of scheduling.  Every row a strategy emits is re-verified
with the exact integer autocorrelation before it is reported.

Rows are represented internally as bit masks (bit i set means entry i is
-1); r[t] = n - 2*popcount(b XOR rotate(b, t)), still exact integer
arithmetic, just cheaper than the sum form.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import os
import time
from dataclasses import dataclass

from .sequences import (
    Sequence,
    expected_minus_counts,
    is_circulant_hadamard,
)

SCHEMA_VERSION = 1
DEFAULT_LIST_CAP = 1024
DEFAULT_EXHAUSTIVE_CAP = 24
EXHAUSTIVE_CAP_ENV = "CHM_MAX_EXHAUSTIVE_N"
MAX_DFS_ORDER = 36

STRATEGY_EXHAUSTIVE = "exhaustive"
STRATEGY_WEIGHT = "weight-constrained"
STRATEGY_DFS = "pruned-dfs"
STRATEGIES = (STRATEGY_EXHAUSTIVE, STRATEGY_WEIGHT, STRATEGY_DFS)


class CapExceeded(RuntimeError):
    """A run was refused because it would exceed a resource cap."""


@dataclass(frozen=True)
class SearchReport:
    """Deterministic summary of one enumeration run.

    ``solutions`` lists at most ``cap`` rows (sorted text form); the
    counts are always exact even when the listing is truncated.
    ``nodes_explored`` is comparable only within one strategy and prefix
    split; solution counts never depend on either.
    """

    schema_version: int
    n: int
    strategy: str
    raw_count: int
    canonical_count: int
    solutions: tuple[str, ...]
    nodes_explored: int
    elapsed_ms: int
    cap: int


def canonicalize(seq: Sequence) -> Sequence:
    """Distinguished representative of the rotation/negation class.

    Candidates are the n rotations of the row and of its negation; the
    representative minimizes (number of -1 entries, entries numerically)
    so the -1-minority form wins and -1 sorts before +1 within it.
    "-+++" is canonical for all eight order-4 solutions.
    """
    best = None
    for base in (seq.entries, tuple(-e for e in seq.entries)):
        weight = base.count(-1)
        for r in range(len(base)):
            cand = (weight, base[r:] + base[:r])
            if best is None or cand < best:
                best = cand
    return Sequence(best[1])


# ---------------------------------------------------------------------------
# Bit-level row checking.

def _bits_to_string(bits: int, n: int) -> str:
    return "".join("-" if (bits >> i) & 1 else "+" for i in range(n))


def _is_perfect_row(bits: int, n: int, mask: int) -> bool:
    """Exact zero-autocorrelation test via popcounts of rotated XORs."""
    for t in range(1, n // 2 + 1):
        rot = ((bits >> t) | (bits << (n - t))) & mask
        if 2 * (bits ^ rot).bit_count() != n:
            return False
    return True


# ---------------------------------------------------------------------------
# Shard workers.  Each enumerates the rows whose first ``plen`` entries
# match ``prefix`` and returns (prefix, raw, nodes, solution strings,
# elapsed_ms).

def _exhaustive_shard(n: int, prefix: int, plen: int) -> tuple[int, int, list[int]]:
    mask = (1 << n) - 1
    raw = 0
    sols = []
    span = 1 << (n - plen)
    half = n // 2
    for suffix in range(span):
        bits = prefix | (suffix << plen)
        for t in range(1, half + 1):
            rot = ((bits >> t) | (bits << (n - t))) & mask
            if 2 * (bits ^ rot).bit_count() != n:
                break
        else:
            raw += 1
            sols.append(bits)
    return raw, span, sols


def _weight_shard(n: int, prefix: int, plen: int, weights: tuple[int, ...]) -> tuple[int, int, list[int]]:
    mask = (1 << n) - 1
    raw = 0
    nodes = 0
    sols = []
    base_minus = prefix.bit_count()
    free = tuple(range(plen, n))
    for w in sorted(set(weights)):
        need = w - base_minus
        if need < 0 or need > len(free):
            continue
        for combo in itertools.combinations(free, need):
            bits = prefix
            for i in combo:
                bits |= 1 << i
            nodes += 1
            if _is_perfect_row(bits, n, mask):
                raw += 1
                sols.append(bits)
    return raw, nodes, sols


def _dfs_shard(n: int, prefix: int, plen: int, weights: tuple[int, ...] | None) -> tuple[int, int, list[int]]:
    h = [0] * n
    partial = [0] * n       # running r[t] over completed terms
    remaining = [n] * n     # terms of r[t] not yet determined
    low_taus = [range(1, d + 1) for d in range(n)]
    high_taus = [range(max(1, n - d), n) for d in range(n)]
    nodes = 0
    raw = 0
    sols: list[int] = []
    wlo = min(weights) if weights else 0
    whi = max(weights) if weights else n
    wset = set(weights) if weights else None

    def assign(d: int, sign: int) -> bool:
        # Returns False when some r[t] provably cannot reach zero: the
        # finished part already outweighs the undetermined terms, or has
        # the wrong parity to be cancelled by them.  Only shifts touched
        # at this depth can change status, so only those are checked;
        # updates always run to completion so retract stays symmetric.
        nonlocal nodes
        nodes += 1
        h[d] = sign
        ok = True
        for t in low_taus[d]:
            s = partial[t] + h[d - t] * sign
            partial[t] = s
            u = remaining[t] - 1
            remaining[t] = u
            if (s if s >= 0 else -s) > u or (s + u) & 1:
                ok = False
        for t in high_taus[d]:
            s = partial[t] + sign * h[d + t - n]
            partial[t] = s
            u = remaining[t] - 1
            remaining[t] = u
            if (s if s >= 0 else -s) > u or (s + u) & 1:
                ok = False
        return ok

    def retract(d: int, sign: int) -> None:
        for t in low_taus[d]:
            partial[t] -= h[d - t] * sign
            remaining[t] += 1
        for t in high_taus[d]:
            partial[t] -= sign * h[d + t - n]
            remaining[t] += 1
        h[d] = 0

    def record() -> None:
        nonlocal raw
        bits = 0
        for i in range(n):
            if h[i] == -1:
                bits |= 1 << i
        raw += 1
        sols.append(bits)

    def walk(d: int, minus: int) -> None:
        if d == n:
            if wset is None or minus in wset:
                record()
            return
        left = n - d - 1
        for sign in (1, -1):
            m = minus + (sign == -1)
            if wset is not None and (m > whi or m + left < wlo):
                continue
            if assign(d, sign):
                walk(d + 1, m)
            retract(d, sign)

    # Fix the prefix through the same bound machinery, so an infeasible
    # prefix costs exactly the assignments made before the cut.
    minus = 0
    feasible = True
    for d in range(plen):
        sign = -1 if (prefix >> d) & 1 else 1
        m = minus + (sign == -1)
        left = n - d - 1
        if wset is not None and (m > whi or m + left < wlo):
            feasible = False
            break
        if not assign(d, sign):
            feasible = False
            break
        minus = m
    if feasible:
        walk(plen, minus)
    return raw, nodes, sols


def _run_shard(task: tuple) -> tuple[int, int, int, tuple[str, ...], int]:
    strategy, n, prefix, plen, weights = task
    start = time.monotonic()
    if strategy == STRATEGY_EXHAUSTIVE:
        raw, nodes, sols = _exhaustive_shard(n, prefix, plen)
    elif strategy == STRATEGY_WEIGHT:
        raw, nodes, sols = _weight_shard(n, prefix, plen, weights)
    else:
        raw, nodes, sols = _dfs_shard(n, prefix, plen, weights)
    elapsed = int((time.monotonic() - start) * 1000)
    return prefix, raw, nodes, tuple(_bits_to_string(b, n) for b in sols), elapsed


# ---------------------------------------------------------------------------
# Checkpoint files: a small header plus one line per completed shard.
# The mandated shard token is ``prefix=<bitstring>``; the remaining
# fields on the line carry the shard tallies so a resumed run can merge
# finished work without redoing it.

def _prefix_len(n: int, jobs: int, checkpointing: bool) -> int:
    plen = (4 * jobs - 1).bit_length()
    if checkpointing:
        plen = max(plen, 8)
    return min(plen, n)


def _prefix_bitstring(prefix: int, plen: int) -> str:
    return "".join("1" if (prefix >> i) & 1 else "0" for i in range(plen))


def _write_checkpoint_header(path: str, n: int, label: str, plen: int) -> None:
    with open(path, "w", encoding="ascii") as f:
        f.write("# circhad search checkpoint v1\n")
        f.write(f"n={n}\n")
        f.write(f"strategy={label}\n")
        f.write(f"prefix_bits={plen}\n")


def _append_checkpoint_line(path: str, plen: int, result: tuple) -> None:
    prefix, raw, nodes, sols, elapsed = result
    line = (
        f"prefix={_prefix_bitstring(prefix, plen)}"
        f" raw_count={raw} nodes_explored={nodes} elapsed_ms={elapsed}"
        f" solutions={','.join(sols)}\n"
    )
    with open(path, "a", encoding="ascii") as f:
        f.write(line)


def _load_checkpoint(path: str, n: int, label: str, plen: int) -> dict[int, tuple]:
    """Parse completed shard lines; create the file with a header if new."""
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        _write_checkpoint_header(path, n, label, plen)
        return {}
    header: dict[str, str] = {}
    done: dict[int, tuple] = {}
    with open(path, encoding="ascii") as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("prefix="):
                fields = dict(part.split("=", 1) for part in line.split())
                bitstring = fields["prefix"]
                if len(bitstring) != plen:
                    raise ValueError(
                        f"checkpoint prefix width {len(bitstring)} does not match this run ({plen})"
                    )
                prefix = int(bitstring[::-1], 2) if bitstring else 0
                sols = tuple(s for s in fields.get("solutions", "").split(",") if s)
                done[prefix] = (
                    prefix,
                    int(fields["raw_count"]),
                    int(fields["nodes_explored"]),
                    sols,
                    int(fields.get("elapsed_ms", 0)),
                )
            else:
                key, _, value = line.partition("=")
                header[key] = value
    if int(header.get("n", -1)) != n or header.get("strategy") != label:
        raise ValueError(
            f"checkpoint was written for n={header.get('n')} strategy={header.get('strategy')}, "
            f"not n={n} strategy={label}"
        )
    if int(header.get("prefix_bits", -1)) != plen:
        raise ValueError("checkpoint prefix_bits does not match this run; cannot resume")
    return done


# ---------------------------------------------------------------------------
# Orchestration.

def _exhaustive_cap(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(EXHAUSTIVE_CAP_ENV, DEFAULT_EXHAUSTIVE_CAP))


def run_search(
    n: int,
    strategy: str,
    jobs: int = 1,
    *,
    weight_filter: bool = False,
    list_cap: int = DEFAULT_LIST_CAP,
    checkpoint: str | None = None,
    exhaustive_cap: int | None = None,
) -> SearchReport:
    """Enumerate all circulant Hadamard first rows of order n.

    ``weight_filter`` adds the admissible -1-count constraint to the
    pruned DFS (the long-run configuration for large square orders).
    Raises ``CapExceeded`` rather than starting a run past the caps:
    2^n enumerations are refused above the CHM_MAX_EXHAUSTIVE_N limit
    (default 24) and the DFS above order 36.
    """
    start = time.monotonic()
    if n < 1:
        raise ValueError("order must be positive")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if weight_filter and strategy != STRATEGY_DFS:
        raise ValueError("weight_filter applies to the pruned-dfs strategy only")
    if list_cap < 0:
        raise ValueError("list cap must be non-negative")

    weights: tuple[int, ...] | None = None
    if strategy == STRATEGY_WEIGHT or weight_filter:
        weights = expected_minus_counts(n)
        if weights is None:
            raise ValueError(
                f"weight-constrained enumeration needs a perfect-square order, got {n}"
            )

    if strategy in (STRATEGY_EXHAUSTIVE, STRATEGY_WEIGHT):
        cap = _exhaustive_cap(exhaustive_cap)
        if n > cap:
            raise CapExceeded(
                f"order {n} exceeds the full-enumeration cap {cap}"
                f" (set {EXHAUSTIVE_CAP_ENV} to raise it)"
            )
    elif n > MAX_DFS_ORDER:
        raise CapExceeded(f"order {n} exceeds the DFS cap {MAX_DFS_ORDER}")

    label = strategy + "+weight" if weight_filter else strategy
    plen = _prefix_len(n, jobs, checkpoint is not None)
    dfs_weights = weights if (strategy != STRATEGY_EXHAUSTIVE) else None
    tasks = [
        (strategy, n, prefix, plen, dfs_weights) for prefix in range(1 << plen)
    ]

    done: dict[int, tuple] = {}
    if checkpoint is not None:
        done = _load_checkpoint(checkpoint, n, label, plen)
    pending = [t for t in tasks if t[2] not in done]

    results = dict(done)
    if jobs == 1:
        for task in pending:
            res = _run_shard(task)
            results[res[0]] = res
            if checkpoint is not None:
                _append_checkpoint_line(checkpoint, plen, res)
    elif pending:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for res in pool.map(_run_shard, pending):
                results[res[0]] = res
                if checkpoint is not None:
                    _append_checkpoint_line(checkpoint, plen, res)

    raw = sum(r[1] for r in results.values())
    nodes = sum(r[2] for r in results.values())
    all_solutions = sorted(s for r in results.values() for s in r[3])
    for text in all_solutions:
        if not is_circulant_hadamard(Sequence.from_string(text)):
            raise RuntimeError(f"internal error: emitted row {text} failed exact re-verification")
    canonical = {canonicalize(Sequence.from_string(s)).to_string() for s in all_solutions}
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return SearchReport(
        schema_version=SCHEMA_VERSION,
        n=n,
        strategy=label,
        raw_count=raw,
        canonical_count=len(canonical),
        solutions=tuple(all_solutions[:list_cap]),
        nodes_explored=nodes,
        elapsed_ms=elapsed_ms,
        cap=list_cap,
    )


# ---------------------------------------------------------------------------
# Report wire format.

_REPORT_KEYS = (
    "schema_version",
    "n",
    "strategy",
    "raw_count",
    "canonical_count",
    "solutions",
    "nodes_explored",
    "elapsed_ms",
    "cap",
)


def report_to_dict(report: SearchReport) -> dict:
    return {
        "schema_version": report.schema_version,
        "n": report.n,
        "strategy": report.strategy,
        "raw_count": report.raw_count,
        "canonical_count": report.canonical_count,
        "solutions": list(report.solutions),
        "nodes_explored": report.nodes_explored,
        "elapsed_ms": report.elapsed_ms,
        "cap": report.cap,
    }


def report_from_dict(data: dict) -> SearchReport:
    missing = [key for key in _REPORT_KEYS if key not in data]
    if missing:
        raise ValueError(f"report is missing required fields: {', '.join(missing)}")
    if not isinstance(data["solutions"], (list, tuple)):
        raise ValueError("report field 'solutions' must be a list")
    return SearchReport(
        schema_version=int(data["schema_version"]),
        n=int(data["n"]),
        strategy=str(data["strategy"]),
        raw_count=int(data["raw_count"]),
        canonical_count=int(data["canonical_count"]),
        solutions=tuple(str(s) for s in data["solutions"]),
        nodes_explored=int(data["nodes_explored"]),
        elapsed_ms=int(data["elapsed_ms"]),
        cap=int(data["cap"]),
    )


def revalidate_report(report: SearchReport) -> list[str]:
    """Re-verify a stored report; returns a list of problems (empty = good).

    Every listed row is re-checked with the exact autocorrelation test
    and the independent matrix product, and count consistency is checked
    against the listing cap.
    """
    from .sequences import has_orthogonal_rows  # local import to keep startup light

    problems = []
    if report.schema_version != SCHEMA_VERSION:
        problems.append(f"unsupported schema_version {report.schema_version}")
    if report.raw_count < len(report.solutions):
        problems.append("raw_count is smaller than the number of listed solutions")
    if report.raw_count <= report.cap and report.raw_count != len(report.solutions):
        problems.append("raw_count disagrees with the untruncated solution list")
    seen_canonical = set()
    for text in report.solutions:
        try:
            seq = Sequence.from_string(text)
        except ValueError as exc:
            problems.append(f"solution {text!r}: {exc}")
            continue
        if seq.n != report.n:
            problems.append(f"solution {text!r} has length {seq.n}, expected {report.n}")
            continue
        if not is_circulant_hadamard(seq):
            problems.append(f"solution {text!r} fails the exact autocorrelation test")
        if not has_orthogonal_rows(seq):
            problems.append(f"solution {text!r} fails the exact matrix product test")
        seen_canonical.add(canonicalize(seq).to_string())
    if report.raw_count <= report.cap and report.canonical_count != len(seen_canonical):
        problems.append(
            f"canonical_count {report.canonical_count} disagrees with the listed rows"
            f" ({len(seen_canonical)} classes)"
        )
    return problems


# ---------------------------------------------------------------------------
# Strategy cross-validation.

@dataclass(frozen=True)
class CrossValidation:
    """Agreement report for all applicable strategies at one order."""

    n: int
    passed: bool
    raw_count: int
    canonical_count: int
    strategies: tuple[str, ...]
    problems: tuple[str, ...]


def cross_validate(n: int, jobs: int = 1, exhaustive_cap: int | None = None) -> CrossValidation:
    """Run every applicable strategy and check they agree solution-for-solution.

    Each found row is additionally pushed through the exact matrix
    product, the order checks, and (for orders divisible by 4, on its
    -1-minority canonical form) the full spectral verdict.  Refuses runs
    past the exhaustive cap rather than silently downgrading.
    """
    from .sequences import (
        even_order_check,
        has_orthogonal_rows,
        minus_indices,
        square_weight_check,
    )
    from .spectra import spectral_verdict

    reports = [run_search(n, STRATEGY_EXHAUSTIVE, jobs, exhaustive_cap=exhaustive_cap)]
    reports.append(run_search(n, STRATEGY_DFS, jobs))
    if expected_minus_counts(n) is not None:
        reports.append(run_search(n, STRATEGY_WEIGHT, jobs, exhaustive_cap=exhaustive_cap))

    problems = []
    baseline = reports[0]
    for rep in reports[1:]:
        if rep.solutions != baseline.solutions or rep.raw_count != baseline.raw_count:
            problems.append(
                f"strategy {rep.strategy} found {rep.raw_count} rows,"
                f" {baseline.strategy} found {baseline.raw_count}"
            )
    for text in baseline.solutions:
        seq = Sequence.from_string(text)
        if not has_orthogonal_rows(seq):
            problems.append(f"{text}: matrix product is not n*I")
        if n > 1 and not even_order_check(n).passed:
            problems.append(f"{text}: order parity check failed")
        if not square_weight_check(seq).passed:
            problems.append(f"{text}: weight check failed")
        if n % 4 == 0:
            canonical = canonicalize(seq)
            if not spectral_verdict(minus_indices(canonical)).overall:
                problems.append(f"{text}: spectral verdict failed on canonical form")
    return CrossValidation(
        n=n,
        passed=not problems,
        raw_count=baseline.raw_count,
        canonical_count=baseline.canonical_count,
        strategies=tuple(r.strategy for r in reports),
        problems=tuple(problems),
    )
