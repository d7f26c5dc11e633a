"""Primes: a growable segmented sieve, prime counting and indexed primes.

The indexed sequence used by the chain construction is p_0 = 1, p_1 = 2,
p_2 = 3, p_3 = 5, ...
"""

from __future__ import annotations

import bisect
import math
import threading

from .errors import InvalidParameter


def _simple_sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if flags[i]]


class PrimeTable:
    """Sorted primes up to ``limit``, extended on demand by doubling."""

    def __init__(self, limit: int = 1024):
        if limit < 0:
            raise InvalidParameter("sieve limit must be non-negative")
        self.limit = limit
        self.primes = _simple_sieve(limit)
        self._lock = threading.Lock()

    def _extend_to(self, new_limit: int) -> None:
        with self._lock:
            if new_limit <= self.limit:
                return
            lo, hi = self.limit + 1, new_limit
            root = math.isqrt(hi)
            if self.limit >= root:
                base = self.primes[: bisect.bisect_right(self.primes, root)]
            else:
                base = _simple_sieve(root)
            seg = bytearray([1]) * (hi - lo + 1)
            for p in base:
                start = max(p * p, (lo + p - 1) // p * p)
                if start > hi:
                    continue
                seg[start - lo :: p] = bytearray(len(range(start, hi + 1, p)))
            self.primes.extend(lo + i for i, f in enumerate(seg) if f and lo + i >= 2)
            self.limit = hi

    def ensure_limit(self, x: int) -> None:
        if x > self.limit:
            new = max(self.limit, 16)
            while new < x:
                new *= 2
            self._extend_to(new)

    def ensure_count(self, k: int) -> None:
        while len(self.primes) < k:
            self._extend_to(max(2 * self.limit, 16))

    def pi(self, x: int) -> int:
        """Number of primes <= x."""
        if x < 2:
            return 0
        self.ensure_limit(x)
        return bisect.bisect_right(self.primes, x)

    def nth(self, a: int) -> int:
        """p_a with p_0 = 1."""
        if a < 0:
            raise InvalidParameter("prime index must be non-negative")
        if a == 0:
            return 1
        self.ensure_count(a)
        return self.primes[a - 1]

    def greatest_le(self, x: int) -> int:
        if x < 2:
            raise InvalidParameter(f"no prime <= {x}")
        self.ensure_limit(x)
        return self.primes[bisect.bisect_right(self.primes, x) - 1]

    def next_primes_after(self, x: int, count: int) -> list[int]:
        """The ``count`` smallest primes strictly greater than x."""
        i = self.pi(x)
        self.ensure_count(i + count)
        return self.primes[i : i + count]

    def is_prime(self, x: int) -> bool:
        if x < 2:
            return False
        self.ensure_limit(x)
        i = bisect.bisect_left(self.primes, x)
        return i < len(self.primes) and self.primes[i] == x


_TABLE = PrimeTable()


def primes_up_to(limit: int) -> PrimeTable:
    """A fresh table holding exactly the primes <= limit."""
    return PrimeTable(limit)


def prime_pi(x: int) -> int:
    return _TABLE.pi(x)


def nth_indexed_label(a: int) -> int:
    return _TABLE.nth(a)


def greatest_prime_le(x: int) -> int:
    return _TABLE.greatest_le(x)


def is_prime(x: int) -> bool:
    return _TABLE.is_prime(x)


def primes_after(x: int, count: int) -> list[int]:
    return _TABLE.next_primes_after(x, count)


def first_primes(count: int) -> list[int]:
    _TABLE.ensure_count(count)
    return _TABLE.primes[:count]


# -- integer roots ------------------------------------------------------------

def iroot_floor(x: int, k: int) -> int:
    """Largest r with r**k <= x."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0, k >= 1")
    if x < 2 or k == 1:
        return x
    # integer Newton from a power of two above the root
    r = 1 << -(-x.bit_length() // k)
    while True:
        y = ((k - 1) * r + x // r ** (k - 1)) // k
        if y >= r:
            return r
        r = y


def iroot_ceil(x: int, k: int) -> int:
    r = iroot_floor(x, k)
    return r if r**k == x else r + 1
