"""Exact counting kernel: partitions, coloured partitions, prime-power
compositions and the core counts that drive the block bookkeeping.

Everything is plain Python int arithmetic, so nothing overflows. The few
divisions performed along the way are provably exact for valid parameters
and are checked at runtime; an inexact division signals a transcription bug
upstream, not a rounding concern.
"""

from __future__ import annotations

import math
import threading

__all__ = [
    "CountCache",
    "shared_cache",
    "exact_div",
    "is_prime",
    "partition_count",
    "multipartition_count",
    "ell_compositions",
    "p_ell",
    "composition_sum",
    "k_ell_a_w",
    "val_factorial",
    "d_core_count",
    "gmpn_irr_count",
]


def exact_div(num: int, den: int) -> int:
    """Integer division that insists on a zero remainder."""
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"division is not exact: {num} / {den}")
    return quot


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _require_prime(ell: int) -> None:
    if not is_prime(ell):
        raise ValueError(f"expected a prime, got {ell}")


def _require_odd_prime(ell: int) -> None:
    _require_prime(ell)
    if ell == 2:
        raise ValueError("parameter must be an odd prime, got 2")


class CountCache:
    """Memo tables shared by the counting functions.

    Tables only grow, and a fresh cache recomputes identical values, so a
    single instance may be shared between worker threads (a lock serialises
    extensions) or replicated per worker without changing any result.
    """

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._partitions: list[int] = [1]
        self._sigma: list[int] = [0]  # divisor sums, index 0 unused
        self._tuples: dict[int, list[int]] = {}
        self._ppower: dict[int, list[int]] = {}

    def partition_count(self, t: int) -> int:
        """Number of partitions of t, by the pentagonal-number recurrence."""
        if t < 0:
            raise ValueError("partition size must be >= 0")
        with self._lock:
            parts = self._partitions
            for n in range(len(parts), t + 1):
                acc = 0
                k = 1
                while True:
                    g = k * (3 * k - 1) // 2
                    if g > n:
                        break
                    sign = 1 if k % 2 else -1
                    acc += sign * parts[n - g]
                    g += k
                    if g <= n:
                        acc += sign * parts[n - g]
                    k += 1
                parts.append(acc)
            return parts[t]

    def divisor_sum(self, n: int) -> int:
        with self._lock:
            sig = self._sigma
            for m in range(len(sig), n + 1):
                total = 0
                i = 1
                while i * i <= m:
                    if m % i == 0:
                        total += i
                        j = m // i
                        if j != i:
                            total += j
                    i += 1
                sig.append(total)
            return sig[n]

    def multipartition_count(self, s: int, t: int) -> int:
        """Number of s-tuples of partitions whose sizes sum to t.

        The row for colour count s is the coefficient sequence of the s-th
        power of the partition generating function, extended through
        n * k(s, n) = s * sum_{j<=n} sigma(j) * k(s, n - j); the division by
        n is exact. The empty-tuple conventions k(0, 0) = 1 and k(0, t) = 0
        for t > 0 keep the convolution identities valid at the boundary.
        """
        if s < 0 or t < 0:
            raise ValueError("colour count and size must be >= 0")
        if s == 0:
            return 1 if t == 0 else 0
        with self._lock:
            row = self._tuples.setdefault(s, [1])
            for n in range(len(row), t + 1):
                acc = 0
                for j in range(1, n + 1):
                    acc += self.divisor_sum(j) * row[n - j]
                row.append(exact_div(s * acc, n))
            return row[t]

    def p_ell(self, ell: int, w: int) -> int:
        """Number of ways to write w as an ordered sum of ell-power levels.

        Counts the tuples (w0, w1, ...) with sum w_i * ell**i = w, equal to
        the number of partitions of w into ell-power parts. Table recurrence:
        drop to w - 1 unless ell divides w, in which case one extra family
        arrives from w // ell.
        """
        _require_prime(ell)
        if w < 0:
            raise ValueError("weight must be >= 0")
        with self._lock:
            tab = self._ppower.setdefault(ell, [1])
            for n in range(len(tab), w + 1):
                val = tab[n - 1]
                if n % ell == 0:
                    val += tab[n // ell]
                tab.append(val)
            return tab[w]

    def warm(self, colour_counts, max_t: int) -> None:
        """Pre-size the tuple tables for a known sweep envelope."""
        self.partition_count(max_t)
        for s in colour_counts:
            self.multipartition_count(s, max_t)


shared_cache = CountCache()


def partition_count(t: int, cache: CountCache | None = None) -> int:
    return (cache or shared_cache).partition_count(t)


def multipartition_count(s: int, t: int, cache: CountCache | None = None) -> int:
    return (cache or shared_cache).multipartition_count(s, t)


def p_ell(ell: int, w: int, cache: CountCache | None = None) -> int:
    return (cache or shared_cache).p_ell(ell, w)


def _compositions(value: int, ell: int):
    # value > 0; emits tuples with a nonzero last entry, lexicographically.
    for head in range(value % ell, value + 1, ell):
        rest = (value - head) // ell
        if rest == 0:
            yield (head,)
        else:
            for tail in _compositions(rest, ell):
                yield (head,) + tail


def ell_compositions(ell: int, w: int) -> list[tuple[int, ...]]:
    """All tuples (w0, w1, ...) with sum w_i * ell**i = w.

    Entries are >= 0, the trailing entry (if any) is nonzero, and the list is
    sorted lexicographically. The weight 0 has exactly the empty composition.
    """
    _require_prime(ell)
    if w < 0:
        raise ValueError("weight must be >= 0")
    if w == 0:
        return [()]
    return list(_compositions(w, ell))


def composition_sum(
    ell: int,
    head_colours: int,
    tail_colours: int,
    w: int,
    cache: CountCache | None = None,
) -> int:
    """Sum over the ell-compositions (w0, w1, ...) of w of
    k(head_colours, w0) * prod_{i>=1} k(tail_colours, wi).

    This is the common shape of every closed-form block count in this
    package; only the two colour counts vary by family.
    """
    cache = cache or shared_cache
    total = 0
    for comp in ell_compositions(ell, w):
        head = comp[0] if comp else 0
        term = cache.multipartition_count(head_colours, head)
        for wi in comp[1:]:
            term *= cache.multipartition_count(tail_colours, wi)
        total += term
    return total


def k_ell_a_w(ell: int, a: int, w: int, cache: CountCache | None = None) -> int:
    """Weighted composition sum with colour counts ell**a and
    ell**a - ell**(a-1); the baseline count for weight-w blocks when the
    relevant cyclotomic parameter is 1."""
    _require_odd_prime(ell)
    if a < 1:
        raise ValueError("a must be >= 1")
    base = ell**a
    return composition_sum(ell, base, base - base // ell, w, cache)


def val_factorial(ell: int, w: int) -> int:
    """ell-adic valuation of w!, by the floor-sum formula."""
    _require_prime(ell)
    if w < 0:
        raise ValueError("w must be >= 0")
    total = 0
    power = ell
    while power <= w:
        total += w // power
        power *= ell
    return total


def _poly_mul_trunc(a: list[int], b: list[int], deg: int) -> list[int]:
    out = [0] * (deg + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > deg:
            continue
        for j, bj in enumerate(b):
            if i + j > deg:
                break
            if bj:
                out[i + j] += ai * bj
    return out


def d_core_count(m: int, d: int, cache: CountCache | None = None) -> int:
    """Number of partitions of m with no hook of length d.

    Coefficient of x**m in prod_n (1 - x**(d n))**d / (1 - x**n): the product
    part is expanded as a truncated polynomial and convolved with the
    partition numbers.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    cache = cache or shared_cache
    poly = [0] * (m + 1)
    poly[0] = 1
    for n in range(1, m // d + 1):
        factor = [0] * (m + 1)
        for k in range(0, min(d, m // (d * n)) + 1):
            factor[d * n * k] = (-1) ** k * math.comb(d, k)
        poly = _poly_mul_trunc(poly, factor, m)
    return sum(poly[j] * cache.partition_count(m - j) for j in range(m + 1) if poly[j])


def gmpn_irr_count(m: int, p: int, n: int, cache: CountCache | None = None) -> int:
    """Number of irreducible characters of the monomial reflection group
    G(m, p, n), for p in {1, 2}.

    For p = 1 this is the coloured-partition count k(m, n). For p = 2 (m
    even) the index-two restriction splits exactly the self-paired labels:
    with s = k(m // 2, n // 2) for even n (0 for odd n), the count is
    (k(m, n) - s) / 2 + 2 s. The zero-rank group is trivial.
    """
    cache = cache or shared_cache
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if p == 1:
        return cache.multipartition_count(m, n)
    if p != 2:
        raise ValueError("only p in {1, 2} is supported")
    if m % 2:
        raise ValueError("p = 2 requires m even")
    if n == 0:
        return 1
    full = cache.multipartition_count(m, n)
    selfpaired = cache.multipartition_count(m // 2, n // 2) if n % 2 == 0 else 0
    return exact_div(full - selfpaired, 2) + 2 * selfpaired
