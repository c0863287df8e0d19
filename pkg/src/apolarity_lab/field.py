"""Arithmetic in a fixed prime field F_p and deterministic seeded randomness.

Field elements are canonical integer residues in [0, p). The default prime is
the Mersenne prime 2**31 - 1: large enough that falling-factorial coefficients
of differentiation never vanish and that generic ranks over F_p agree with
characteristic-zero ranks with overwhelming probability, small enough that a
product of two residues fits comfortably in a 64-bit signed integer (which the
dense linear algebra relies on).
"""

from __future__ import annotations

import math
import hashlib
import random

from .errors import InvalidParameter, ZeroInverse

DEFAULT_PRIME = 2147483647

# Residue products must fit in int64: (p-1)^2 < 2**63 requires p <= 2**31.
MAX_PRIME = 1 << 31

_MASK64 = (1 << 64) - 1


def is_prime(n: int) -> bool:
    """Trial-division primality test; instant for the allowed p < 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class PrimeField:
    """The field F_p for a fixed prime p, operating on canonical residues."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not isinstance(p, int) or not is_prime(p):
            raise InvalidParameter(f"modulus {p!r} is not prime")
        if p >= MAX_PRIME:
            raise InvalidParameter(
                f"prime {p} too large: residue products must fit in int64"
            )
        self.p = p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a: int, b: int) -> int:
        d = a - b
        return d + self.p if d < 0 else d

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return 0 if a == 0 else self.p - a

    def inv(self, a: int) -> int:
        """Multiplicative inverse via a**(p-2), the single code path."""
        if a % self.p == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def random_element(self, rng: "SeededRng") -> int:
        return rng.randrange(self.p)

    def random_nonzero(self, rng: "SeededRng") -> int:
        """Uniform draw from [1, p)."""
        return rng.randrange(1, self.p)

    def check_socle_degree(self, e: int) -> None:
        """p must exceed every socle degree so derivative scalars stay nonzero."""
        if e >= self.p:
            raise InvalidParameter(
                f"socle degree {e} >= prime {self.p}; differentiation "
                "coefficients could vanish"
            )


def _mix64(h: int, part: int) -> int:
    # Boost-style hash combine; keeps derived streams decorrelated.
    return (h ^ (part + 0x9E3779B97F4A7C15 + ((h << 6) & _MASK64) + (h >> 2))) & _MASK64


def derive_seed(seed: int, *parts) -> int:
    """Deterministically derive a child seed from a master seed and a mix of
    integer indices and string labels (labels are folded via a fixed 64-bit
    digest, so results are stable across processes)."""
    h = seed & _MASK64
    for part in parts:
        if isinstance(part, str):
            digest = hashlib.blake2b(part.encode("utf-8"), digest_size=8)
            part = int.from_bytes(digest.digest(), "big")
        h = _mix64(h, part & _MASK64)
    return h


class SeededRng:
    """Single-owner deterministic random stream.

    Thin wrapper over random.Random so every randomized operation threads its
    state explicitly; never share one instance across tasks.
    """

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def randrange(self, a: int, b: int | None = None) -> int:
        return self._rng.randrange(a) if b is None else self._rng.randrange(a, b)

    def spawn(self, *parts) -> "SeededRng":
        """Independent child stream keyed by (this seed, parts)."""
        return SeededRng(derive_seed(self.seed, *parts))

    def __repr__(self) -> str:
        return f"SeededRng(seed={self.seed})"
