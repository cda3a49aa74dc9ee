"""Fast evaluation of n-step sequence terms at huge indices.

The index-addition law for any order-n sequence W reads

    W(r+s) = sum_{i=1..n} c_i(s) * W(r-i),
    c_i(s) = sum_{j=0..n-i} U(s-j+1),

with U the n-step Fibonacci numbers of the same order.  The coefficient
tuple c(s) is the *shift vector* for s: applying it to the window ending
below r yields the term shifted by s.  Shift vectors compose, and the
composite for a+b is computable from the two coefficient tuples alone,
so c(s) for any s falls to square-and-multiply in O(log|s|) compositions
of n^2 ring multiplications each.  Everything works verbatim modulo m
because only ring operations are used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Family, SequenceSpec, TermCache, Window, make_spec


class FamilyError(ValueError):
    """Raised when a shift vector is requested from a non-U cache."""


class RingError(ValueError):
    """Raised for an invalid modulus."""


class Ring:
    """Plain integers (modulus None) or canonical residues modulo m >= 2.

    Multiplications route through mul() and are counted in mult_count;
    additions are free.  The counter is diagnostic state, the ring value
    itself (the modulus) never changes.
    """

    __slots__ = ("modulus", "mult_count")

    def __init__(self, modulus: int | None = None):
        if modulus is not None and modulus < 2:
            raise RingError("modulus must be at least 2, got %r" % (modulus,))
        self.modulus = modulus
        self.mult_count = 0

    @property
    def kind(self) -> str:
        return "exact" if self.modulus is None else "modular"

    def reduce(self, x: int) -> int:
        m = self.modulus
        return x if m is None else x % m

    def mul(self, a: int, b: int) -> int:
        self.mult_count += 1
        m = self.modulus
        p = a * b
        return p if m is None else p % m

    def __repr__(self):
        return "Ring(%r)" % (self.modulus,)


@dataclass(frozen=True)
class ShiftVector:
    """Coefficients (c_1, ..., c_n) carrying a window from r to r+s."""

    n: int
    s: int
    coeffs: tuple[int, ...]


def shift_vector(u_cache: TermCache, s: int, ring: Ring) -> ShiftVector:
    """Build c(s) from a U cache of the same order by direct summation."""
    if u_cache.spec.family is not Family.U:
        raise FamilyError("shift vectors are defined by U terms, got family %s"
                          % u_cache.spec.family.value)
    n = u_cache.spec.n
    coeffs = [0] * (n + 1)
    coeffs[n] = ring.reduce(u_cache.term(s + 1))
    for i in range(n - 1, 0, -1):
        # c_i - c_{i+1} = U(s-n+i+1)
        coeffs[i] = ring.reduce(coeffs[i + 1] + u_cache.term(s - n + i + 1))
    return ShiftVector(n, s, tuple(coeffs[1:]))


def identity_vector(n: int, ring: Ring) -> ShiftVector:
    return ShiftVector(n, 0, (ring.reduce(1),) * n)


def apply_shift(sv: ShiftVector, window: Window, ring: Ring) -> int:
    """W(window.r + sv.s) from the n terms below window.r."""
    if sv.n != window.spec.n:
        raise ValueError("order mismatch: vector n=%d, window n=%d"
                         % (sv.n, window.spec.n))
    acc = 0
    for c, w in zip(sv.coeffs, window.terms):
        acc += ring.mul(c, ring.reduce(w))
    return ring.reduce(acc)


def _u_values_from_vector(sv: ShiftVector, ring: Ring) -> list[int]:
    """Recover U(b+1), U(b), ..., U(b-2n+2) from c(b) by differencing,
    then slide downward with the inverted order-n sum.  No multiplies."""
    n, c = sv.n, sv.coeffs
    # u[t] holds U(b+1-t); differencing the coefficients gives t = 0 .. n-1
    u = [c[n - 1]]
    for i in range(n - 1, 0, -1):
        u.append(ring.reduce(c[i - 1] - c[i]))
    # extend to t = 2n-1 via U(t-n) = U(t) - U(t-1) - ... - U(t-n+1)
    for _ in range(n):
        u.append(ring.reduce(u[-n] - sum(u[-n + 1:])))
    return u


def compose(a: ShiftVector, b: ShiftVector, ring: Ring) -> ShiftVector:
    """Shift vector for a.s + b.s, from coefficients alone.

    Applies a to the n windows of U surrounding shift b (recovered from
    b's coefficients), giving the U values that define c(a.s + b.s).
    Costs exactly n^2 ring multiplications.
    """
    if a.n != b.n:
        raise ValueError("order mismatch: %d vs %d" % (a.n, b.n))
    n = a.n
    u = _u_values_from_vector(b, ring)  # U(b+1-t) for t = 0 .. 2n-2
    ca = a.coeffs
    # shifted[j] = U(a.s + b.s + 1 - j) = sum_i ca[i-1] * U(b.s + 1 - j - i)
    shifted = []
    for j in range(n):
        acc = 0
        for i in range(1, n + 1):
            acc += ring.mul(ca[i - 1], u[j + i])
        shifted.append(ring.reduce(acc))
    coeffs = [0] * n
    coeffs[n - 1] = shifted[0]
    for i in range(n - 2, -1, -1):
        coeffs[i] = ring.reduce(coeffs[i + 1] + shifted[n - 1 - i])
    return ShiftVector(n, a.s + b.s, tuple(coeffs))


class DoublingEvaluator:
    """Square-and-multiply shift vectors for one (n, ring) pair.

    Power vectors c(2^t) and c(-2^t) are memoized, so sweeping many
    indices r with one evaluator re-uses all squarings.
    """

    def __init__(self, n: int, ring: Ring):
        self.n = n
        self.ring = ring
        self._u = TermCache(make_spec(Family.U, n))
        self._pows: dict[int, list[ShiftVector]] = {}

    def vector(self, s: int) -> ShiftVector:
        """c(s) by binary decomposition of s."""
        ring = self.ring
        if s == 0:
            return identity_vector(self.n, ring)
        sign = 1 if s > 0 else -1
        chain = self._pows.setdefault(sign, [shift_vector(self._u, sign, ring)])
        e = abs(s)
        result = None
        bit = 0
        while e:
            while bit >= len(chain):
                last = chain[-1]
                chain.append(compose(last, last, ring))
            if e & 1:
                base = chain[bit]
                result = base if result is None else compose(result, base, ring)
            e >>= 1
            bit += 1
        return result

    def term(self, spec: SequenceSpec, r: int) -> int:
        if spec.n != self.n:
            raise ValueError("order mismatch: evaluator n=%d, spec n=%d"
                             % (self.n, spec.n))
        ring = self.ring
        base, block = spec.seed_block()
        r0 = base + spec.n  # first index past the seed block
        sv = self.vector(r - r0)
        window = Window(spec, r0, tuple(reversed(block)))
        return apply_shift(sv, window, ring)


def term_at(spec: SequenceSpec, r: int, ring: Ring) -> int:
    """One term at any integer index, in O(n^2 log|r|) ring multiplies.

    For sweeps over many r with the same order and ring, build one
    DoublingEvaluator and call .term() on it instead; the squaring chain
    is then shared across calls.
    """
    return DoublingEvaluator(spec.n, ring).term(spec, r)


def _mat_mul(a, b, ring: Ring):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(n):
            acc = 0
            for k in range(n):
                acc += ring.mul(ai[k], b[k][j])
            row.append(ring.reduce(acc))
        out.append(row)
    return out


def _mat_vec(a, v, ring: Ring):
    n = len(a)
    return [ring.reduce(sum(ring.mul(a[i][k], v[k]) for k in range(n)))
            for i in range(n)]


def matrix_power_oracle(spec: SequenceSpec, r: int, ring: Ring) -> int:
    """Independent check on term_at via companion-matrix powering.

    The step matrix has all-ones top row and a shifted identity below;
    its inverse is integral (the recurrence solved for its last term),
    so negative indices need no division in any ring.
    """
    n = spec.n
    step = [[ring.reduce(1)] * n] + [
        [ring.reduce(1) if j == i else 0 for j in range(n)] for i in range(n - 1)
    ]
    # maps (W(r), ..., W(r-n+1)) to (W(r-1), ..., W(r-n))
    back = [[ring.reduce(1) if j == i + 1 else 0 for j in range(n)]
            for i in range(n - 1)]
    back.append([ring.reduce(1)] + [ring.reduce(-1)] * (n - 1))
    base, block = spec.seed_block()
    r0 = base + n
    vec = [ring.reduce(x) for x in reversed(block)]  # window at r0
    e = r + 1 - r0
    mat = step if e >= 0 else back
    e = abs(e)
    acc = None
    while e:
        if e & 1:
            acc = mat if acc is None else _mat_mul(acc, mat, ring)
        e >>= 1
        if e:
            mat = _mat_mul(mat, mat, ring)
    if acc is not None:
        vec = _mat_vec(acc, vec, ring)
    return vec[0]
