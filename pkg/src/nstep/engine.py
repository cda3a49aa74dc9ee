"""Exact term engine for n-step Fibonacci, n-step Lucas and generalized
n-step sequences.

Every sequence here satisfies the order-n recurrence

    W(r) = W(r-1) + W(r-2) + ... + W(r-n)

for all integers r, which collapses to the three-term form

    W(r) = 2*W(r-1) - W(r-n-1).

Solving the three-term form for its trailing term extends any sequence to
negative indices without division, so all arithmetic stays in the integers.

The three families:

    U   n-step Fibonacci.  U(-n+1) = 1 and U(k) = 0 for -n+2 <= k <= 0.
        For n = 2 this is the Fibonacci sequence, n = 3 Tribonacci,
        n = 4 Tetranacci, n = 5 Pentanacci.
    V   n-step Lucas.  V(k) = -1 for -n+1 <= k <= -1 and V(0) = n.
        For n = 2 this is the Lucas sequence.
    W   generalized: caller supplies the n seed values W(0) .. W(n-1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Family(str, enum.Enum):
    """Which seed convention a sequence uses."""

    U = "U"
    V = "V"
    W = "W"


class OrderError(ValueError):
    """Raised when the recurrence order n is below 2."""


class SeedError(ValueError):
    """Raised when explicit seeds are missing, extra or mis-sized."""


@dataclass(frozen=True)
class SequenceSpec:
    """Immutable description of one sequence: family, order, seeds.

    ``seeds`` is None for the U and V families (their seeds are implied)
    and a length-n tuple of integers for family W.
    """

    family: Family
    n: int
    seeds: tuple[int, ...] | None = None

    def seed_block(self) -> tuple[int, tuple[int, ...]]:
        """Return (base index, values) of the defining seed block.

        U and V seeds sit at indices -n+1 .. 0, explicit W seeds at 0 .. n-1.
        """
        n = self.n
        if self.family is Family.U:
            return -n + 1, (1,) + (0,) * (n - 1)
        if self.family is Family.V:
            return -n + 1, (-1,) * (n - 1) + (n,)
        assert self.seeds is not None
        return 0, self.seeds

    def label(self) -> str:
        if self.family is Family.W:
            return "W(n=%d; %s)" % (self.n, ",".join(map(str, self.seeds or ())))
        return "%s(n=%d)" % (self.family.value, self.n)


def make_spec(family: Family | str, n: int, seeds=None) -> SequenceSpec:
    """Validate and build a SequenceSpec.

    Raises OrderError for n < 2, SeedError when seeds are given for U/V,
    missing for W, or of the wrong length.
    """
    fam = Family(family)
    if n < 2:
        raise OrderError("recurrence order must be at least 2, got %r" % (n,))
    if fam is Family.W:
        if seeds is None:
            raise SeedError("family W needs %d explicit seed values" % n)
        seeds = tuple(int(x) for x in seeds)
        if len(seeds) != n:
            raise SeedError(
                "family W with n=%d needs exactly %d seeds, got %d"
                % (n, n, len(seeds))
            )
        return SequenceSpec(fam, n, seeds)
    if seeds is not None:
        raise SeedError("family %s has implied seeds; do not pass any" % fam.value)
    return SequenceSpec(fam, n)


@dataclass(frozen=True)
class Window:
    """The n consecutive terms W(r-1), W(r-2), ..., W(r-n) ending below r.

    This is exactly the state needed to advance the recurrence to W(r),
    and the state a shift vector acts on.
    """

    spec: SequenceSpec
    r: int
    terms: tuple[int, ...]


class TermCache:
    """Memoizing bidirectional term store for one sequence.

    Forward terms come from the order-n sum, backward terms from the
    solved three-term form W(r) = 2*W(r+n) - W(r+n+1).  Both lists only
    ever grow; a cache is cheap to build and is not thread safe, so give
    each worker its own copy.
    """

    __slots__ = ("spec", "_base", "_fwd", "_bwd")

    def __init__(self, spec: SequenceSpec):
        self.spec = spec
        base, block = spec.seed_block()
        self._base = base
        self._fwd: list[int] = list(block)
        self._bwd: list[int] = []

    def term(self, r: int) -> int:
        n = self.spec.n
        base = self._base
        if r >= base:
            fwd = self._fwd
            while len(fwd) <= r - base:
                fwd.append(sum(fwd[-n:]))
            return fwd[r - base]
        bwd = self._bwd
        while len(bwd) <= base - 1 - r:
            i = base - 1 - len(bwd)
            bwd.append(2 * self.term(i + n) - self.term(i + n + 1))
        return bwd[base - 1 - r]

    def window(self, r: int) -> Window:
        n = self.spec.n
        return Window(self.spec, r, tuple(self.term(r - i) for i in range(1, n + 1)))

    def terms(self, lo: int, hi: int) -> list[int]:
        """Inclusive range of terms W(lo) .. W(hi)."""
        if lo > hi:
            raise ValueError("empty range %d..%d" % (lo, hi))
        return [self.term(r) for r in range(lo, hi + 1)]


# Conventional names for small n, used by the CLI table output.
SEQUENCE_NAMES = {
    2: ("Fibonacci", "Lucas"),
    3: ("Tribonacci", "Tribonacci-Lucas"),
    4: ("Tetranacci", "Tetranacci-Lucas"),
    5: ("Pentanacci", "Pentanacci-Lucas"),
}
