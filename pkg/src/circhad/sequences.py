"""Binary sign sequences and exact circulant-Hadamard verification.

A length-n row of +1/-1 signs determines a circulant matrix whose i-th
row is the first row cyclically shifted i places.  The matrix satisfies
H Ht = n I exactly when every off-phase periodic autocorrelation of the
row vanishes.  Everything here is exact: autocorrelations are machine
integers bounded by n, and all eigenvalue work is routed through the
cyclotomic module instead of floating point.

Text form used by the CLI and report files: '+' for +1 and '-' for -1,
so "-+++" is the row (-1, 1, 1, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import CycloElement

_SIGN_OF_CHAR = {"+": 1, "-": -1}


@dataclass(frozen=True)
class Sequence:
    """An immutable row of signs, each exactly +1 or -1."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a sequence needs at least one entry")
        for e in self.entries:
            if e != 1 and e != -1:
                raise ValueError(f"sequence entries must be +1 or -1, got {e!r}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_string(cls, text: str) -> Sequence:
        """Parse the '+'/'-' text form."""
        entries = []
        for ch in text:
            sign = _SIGN_OF_CHAR.get(ch)
            if sign is None:
                raise ValueError(f"invalid sign character {ch!r} (expected '+' or '-')")
            entries.append(sign)
        return cls(tuple(entries))

    def to_string(self) -> str:
        return "".join("+" if e == 1 else "-" for e in self.entries)

    def negated(self) -> Sequence:
        return Sequence(tuple(-e for e in self.entries))

    def rotated(self, shift: int) -> Sequence:
        """Left-rotate by ``shift`` positions."""
        shift %= self.n
        return Sequence(self.entries[shift:] + self.entries[:shift])


@dataclass(frozen=True)
class IndexSet:
    """A sorted, duplicate-free subset of the residues [0, n)."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("order must be positive")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and distinct")
        if self.members and not (0 <= self.members[0] and self.members[-1] < self.n):
            raise ValueError("members must lie in [0, n)")

    @classmethod
    def from_iterable(cls, n: int, members) -> IndexSet:
        return cls(n, tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)


def autocorrelation(seq: Sequence) -> tuple[int, ...]:
    """Periodic autocorrelation r with r[t] = sum_i h_i * h_{(i+t) mod n}.

    Always r[0] = n, r[t] = r[n-t], and every r[t] has the parity of n.
    """
    h = seq.entries
    n = len(h)
    return tuple(sum(h[i] * h[(i + t) % n] for i in range(n)) for t in range(n))


def is_circulant_hadamard(seq: Sequence) -> bool:
    """True iff every off-phase autocorrelation is zero.

    Equivalent to the circulant matrix built from the row satisfying
    H Ht = n I exactly (see ``has_orthogonal_rows`` for the matrix-level
    check).  Shifts past n/2 are covered by the r[t] = r[n-t] symmetry.
    """
    h = seq.entries
    n = len(h)
    for t in range(1, n // 2 + 1):
        if sum(h[i] * h[(i + t) % n] for i in range(n)) != 0:
            return False
    return True


def build_circulant(seq: Sequence) -> tuple[tuple[int, ...], ...]:
    """The circulant matrix: row i is the row cyclically shifted i places right."""
    h = seq.entries
    n = len(h)
    return tuple(tuple(h[(j - i) % n] for j in range(n)) for i in range(n))


def has_orthogonal_rows(seq: Sequence) -> bool:
    """Exact matrix-level check that H Ht = n I for the circulant matrix.

    Deliberately computed as a full row-by-row inner product over the
    materialized matrix, independent of the autocorrelation shortcut.
    """
    rows = build_circulant(seq)
    n = seq.n
    for i in range(n):
        ri = rows[i]
        for j in range(i, n):
            dot = sum(a * b for a, b in zip(ri, rows[j]))
            if dot != (n if i == j else 0):
                return False
    return True


def _check_mode(n: int, k: int) -> None:
    if not 0 <= k < n:
        raise ValueError(f"mode index k must lie in [0, {n - 1}], got {k}")


def eigenvalue(seq: Sequence, k: int) -> CycloElement:
    """The exact k-th eigenvalue of the circulant matrix.

    Circulant eigenvalues are the Fourier sums of the first row: entry
    alpha contributes its sign at root power k*alpha.  The Fourier
    vector with phases k is the matching eigenvector, exactly.
    """
    n = seq.n
    _check_mode(n, k)
    coeffs = [0] * n
    for alpha, sign in enumerate(seq.entries):
        coeffs[(k * alpha) % n] += sign
    return CycloElement(n, tuple(coeffs))


def eigenvalue_mag_sq(seq: Sequence, k: int) -> CycloElement:
    """Exact squared modulus of the k-th eigenvalue.

    Assembled from the autocorrelation: |eigenvalue_k|^2 equals
    sum_t r[t] * (root power k*t), which is canonically equal to the
    eigenvalue times its conjugate.
    """
    n = seq.n
    _check_mode(n, k)
    r = autocorrelation(seq)
    coeffs = [0] * n
    for t, val in enumerate(r):
        if val:
            coeffs[(k * t) % n] += val
    return CycloElement(n, tuple(coeffs))


def has_flat_spectrum(seq: Sequence) -> bool:
    """True iff |eigenvalue_k|^2 - n reduces to zero for every k.

    The per-mode elements are assembled exactly as in
    ``eigenvalue_mag_sq`` with the autocorrelation computed once; the
    zero test is the canonical cyclotomic reduction.
    """
    n = seq.n
    r = autocorrelation(seq)
    for k in range(n):
        coeffs = [0] * n
        for t in range(n):
            v = r[t]
            if v:
                coeffs[(k * t) % n] += v
        coeffs[0] -= n
        if not CycloElement(n, tuple(coeffs)).is_zero():
            return False
    return True


def minus_indices(seq: Sequence) -> IndexSet:
    """The sorted set of positions holding -1."""
    return IndexSet(seq.n, tuple(i for i, e in enumerate(seq.entries) if e == -1))


def expected_minus_counts(n: int) -> tuple[int, int] | None:
    """The two -1 multiplicities an order-n candidate row may carry.

    An order-n circulant Hadamard row must have (n - sqrt(n))/2 or
    (n + sqrt(n))/2 entries equal to -1; returns None when n is not a
    perfect square (no candidate weight exists at all).
    """
    s = math.isqrt(n)
    if s * s != n:
        return None
    return ((n - s) // 2, (n + s) // 2)


@dataclass(frozen=True)
class EvenOrderVerdict:
    """Necessary condition 1: the order of a circulant Hadamard matrix is even.

    Order 1 fails the evenness check but is the trivial 1x1 exception,
    flagged separately so callers can report it rather than error.
    """

    n: int
    passed: bool
    trivial_exception: bool


def even_order_check(n: int) -> EvenOrderVerdict:
    if n < 1:
        raise ValueError("order must be positive")
    return EvenOrderVerdict(n=n, passed=n % 2 == 0, trivial_exception=n == 1)


@dataclass(frozen=True)
class SquareWeightVerdict:
    """Necessary condition 2: square order and the balanced -1 count.

    ``case`` records which of the two admissible counts matched:
    "minus" for (n - sqrt(n))/2, "plus" for (n + sqrt(n))/2.
    """

    n: int
    passed: bool
    is_square: bool
    minus_count: int
    expected: tuple[int, int] | None
    case: str | None


def square_weight_check(seq: Sequence) -> SquareWeightVerdict:
    n = seq.n
    count = sum(1 for e in seq.entries if e == -1)
    expected = expected_minus_counts(n)
    if expected is None:
        return SquareWeightVerdict(n, False, False, count, None, None)
    case = None
    if count == expected[0]:
        case = "minus"
    elif count == expected[1]:
        case = "plus"
    return SquareWeightVerdict(n, case is not None, True, count, expected, case)
