"""Difference-count tables and exact spectral verdicts for index sets.

The index set J of a candidate row is the set of positions carrying -1
(a uniform shift of the set of surviving root powers, which changes
nothing below: every quantity here depends only on differences s - t).
For each Fourier mode k the table counts ordered pairs (s, t) in J x J
by the residue class of k*(s - t); the squared eigenvalue modulus of the
associated row is, up to the weight convention at k = 0, four times the
pair sum over those classes.

Mode k = 0 is deliberately evaluated with the same pair-sum form as
every other mode, so it passes only when 4*|J|^2 = n.  The k = 0
eigenvalue of an actual candidate row is governed by the balanced
weight count instead (condition 2 in the sequences module); the two
views agree on every order where candidates exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloElement, RealBasisVector, from_integer
from .sequences import IndexSet


@dataclass(frozen=True)
class DifferenceCounts:
    """Ordered-pair counts by residue class: counts[l] = #{(s, t) : k(s-t) = l mod n}.

    Invariants: the counts sum to |J|^2, counts[l] = counts[n-l], and
    counts[0] >= |J| (the diagonal pairs).
    """

    n: int
    k: int
    counts: tuple[int, ...]


def difference_counts(index_set: IndexSet, k: int) -> DifferenceCounts:
    n = index_set.n
    if not 0 <= k < n:
        raise ValueError(f"mode index k must lie in [0, {n - 1}], got {k}")
    counts = [0] * n
    members = index_set.members
    for s in members:
        for t in members:
            counts[(k * (s - t)) % n] += 1
    return DifferenceCounts(n=n, k=k, counts=tuple(counts))


def basis_coefficients(table: DifferenceCounts) -> RealBasisVector:
    """Cosine-basis coordinates of the pair sum: coordinate l is counts[l] - counts[n/2 - l].

    Exactly agrees with reducing the pair-sum element through the
    cyclotomic module (the conjugate pair at l carries one cosine unit,
    and classes past the quarter fold back with a sign).
    """
    n = table.n
    if n % 4:
        raise ValueError("cosine-basis coordinates need an order divisible by 4")
    half = n // 2
    return RealBasisVector(
        n, tuple(table.counts[l] - table.counts[half - l] for l in range(n // 4))
    )


@dataclass(frozen=True)
class IndexMapVerdict:
    """Result of checking the mode-k table against the remapped mode-1 table."""

    n: int
    k: int
    passed: bool
    mismatches: tuple[tuple[int, int, int], ...]  # (class, direct, remapped)


def index_map_check(index_set: IndexSet, k: int) -> IndexMapVerdict:
    """Verify that multiplying the mode merges difference classes d into k*d mod n.

    The mode-k count of class l must equal the sum of mode-1 counts over
    all classes d with k*d = l (mod n); both sides are counted directly.
    """
    n = index_set.n
    if not 1 <= k < n:
        raise ValueError(f"mode index k must lie in [1, {n - 1}], got {k}")
    base = difference_counts(index_set, 1).counts
    direct = difference_counts(index_set, k).counts
    remapped = [0] * n
    for d in range(n):
        if base[d]:
            remapped[(k * d) % n] += base[d]
    mismatches = tuple(
        (l, direct[l], remapped[l]) for l in range(n) if direct[l] != remapped[l]
    )
    return IndexMapVerdict(n=n, k=k, passed=not mismatches, mismatches=mismatches)


@dataclass(frozen=True)
class ConstantTermVerdict:
    """The constant-coordinate law 4*(counts[0] - counts[n/2]) = n for one mode.

    ``required_half_count`` is the value counts[n/2] would need, namely
    (4*counts[0] - n)/4, kept as an exact fraction since it need not be
    integral.
    """

    n: int
    k: int
    passed: bool
    lhs: int
    required_half_count: Fraction


def constant_term_check(index_set: IndexSet, k: int) -> ConstantTermVerdict:
    n = index_set.n
    if n % 4:
        raise ValueError("the constant-coordinate law needs an order divisible by 4")
    table = difference_counts(index_set, k)
    lhs = 4 * (table.counts[0] - table.counts[n // 2])
    required = Fraction(4 * table.counts[0] - n, 4)
    return ConstantTermVerdict(
        n=n, k=k, passed=lhs == n, lhs=lhs, required_half_count=required
    )


@dataclass(frozen=True)
class ModeVerdict:
    """Per-mode spectral status for one k."""

    k: int
    constant_term_ok: bool
    coefficients: RealBasisVector
    mag_sq_equals_order: bool


@dataclass(frozen=True)
class SpectralVerdict:
    """Whether 4 * sum over J x J of the k(s-t) root powers equals n for every mode."""

    n: int
    index_set: IndexSet
    per_mode: tuple[ModeVerdict, ...]
    overall: bool


def spectral_verdict(index_set: IndexSet) -> SpectralVerdict:
    """Evaluate every mode of an index set in exact cyclotomic arithmetic.

    For each k the pair-sum element is scaled by 4, n is subtracted, and
    the result is zero-tested after canonical reduction.  The cosine
    coordinates and the constant-coordinate law are reported alongside.
    Mode 0 uses the same pair-sum form (see the module docstring for the
    weight convention this implies).
    """
    n = index_set.n
    if n % 4:
        raise ValueError("spectral verdicts need an order divisible by 4")
    target = from_integer(n, n)
    modes = []
    for k in range(n):
        table = difference_counts(index_set, k)
        coeffs = basis_coefficients(table)
        flat = (CycloElement(n, table.counts) * 4 - target).is_zero()
        c0_ok = 4 * (table.counts[0] - table.counts[n // 2]) == n
        modes.append(
            ModeVerdict(
                k=k,
                constant_term_ok=c0_ok,
                coefficients=coeffs,
                mag_sq_equals_order=flat,
            )
        )
    return SpectralVerdict(
        n=n,
        index_set=index_set,
        per_mode=tuple(modes),
        overall=all(m.mag_sq_equals_order for m in modes),
    )
