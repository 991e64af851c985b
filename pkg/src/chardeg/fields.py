"""Small finite fields F_{p^k} with exact integer-encoded scalars.

A scalar is an integer index in [0, p^k): the base-p digits of the index
are the coefficients of the residue polynomial, constant term first.  For
prime fields the index is just the residue.  Fields of order up to 1024
carry full add/mul lookup tables so that vectorized numpy code can work
directly on index arrays.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from chardeg.numtheory import factorize, is_prime

MAX_ORDER = 1 << 20
TABLE_LIMIT = 1 << 10


class FieldError(ValueError):
    """Invalid field parameters or mismatched field usage."""


def _poly_from_index(idx: int, p: int, k: int) -> list[int]:
    coeffs = []
    for _ in range(k):
        coeffs.append(idx % p)
        idx //= p
    return coeffs


def _index_from_poly(coeffs: list[int], p: int) -> int:
    idx = 0
    for c in reversed(coeffs):
        idx = idx * p + c
    return idx


def _poly_mul_mod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by the monic modulus
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    out = prod[:k]
    out += [0] * (k - len(out))
    return out


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= k//2."""
    k = len(modulus) - 1
    if modulus[-1] != 1:
        return False
    if k == 1:
        return True
    if modulus[0] == 0:
        return False
    for d in range(1, k // 2 + 1):
        for idx in range(p**d):
            div = _poly_from_index(idx, p, d) + [1]
            # long division remainder of modulus by div
            rem = list(modulus)
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i]
                if c:
                    rem[i] = 0
                    for j in range(d):
                        rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
            if not any(rem[:d]):
                return False
    return True


@dataclass(frozen=True)
class Field:
    """F_{p^k} with the modulus fixed by :func:`field_make`."""

    p: int
    k: int
    modulus: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    # -- scalar arithmetic on integer indices --------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        pa = _poly_from_index(a, self.p, self.k)
        pb = _poly_from_index(b, self.p, self.k)
        return _index_from_poly([(x + y) % self.p for x, y in zip(pa, pb)], self.p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        pa = _poly_from_index(a, self.p, self.k)
        return _index_from_poly([(-x) % self.p for x in pa], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        pa = _poly_from_index(a, self.p, self.k)
        pb = _poly_from_index(b, self.p, self.k)
        return _index_from_poly(_poly_mul_mod(pa, pb, self.modulus, self.p), self.p)

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(a), -n)
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.power(a, self.order - 2)

    @functools.cached_property
    def generator(self) -> int:
        """Smallest index generating the multiplicative group."""
        n = self.order - 1
        fac = factorize(n) if n > 1 else {}
        for g in range(1, self.order):
            if all(self.power(g, n // q) != 1 for q in fac):
                return g
        raise FieldError("no multiplicative generator found")

    # -- lookup tables for vectorized index arithmetic -----------------------

    def _build_tables(self) -> None:
        q = self.order
        if q > TABLE_LIMIT:
            raise FieldError(f"field of order {q} exceeds the table limit {TABLE_LIMIT}")
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = self.add(a, b)
                mul[a, b] = self.mul(a, b)
        neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
        inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int64)
        for arr in (add, mul, neg, inv):
            arr.flags.writeable = False
        self._cache["tables"] = (add, mul, neg, inv)

    @property
    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        if "tables" not in self._cache:
            self._build_tables()
        return self._cache["tables"]

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )


def field_make(p: int, k: int = 1) -> Field:
    """Build F_{p^k} with the canonical modulus.

    The modulus is the monic irreducible of degree k whose non-leading
    coefficient vector, read as a base-p integer (constant term least
    significant), is minimal.  Prime fields get the degenerate modulus x.
    Results are cached, so equal parameters give the identical object.
    """
    return _field_make(int(p), int(k))


@functools.lru_cache(maxsize=None)
def _field_make(p: int, k: int) -> Field:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if p**k > MAX_ORDER:
        raise FieldError(f"field order {p}^{k} exceeds the cap {MAX_ORDER}")
    if k == 1:
        return Field(p, 1, (0, 1))
    for idx in range(p**k):
        modulus = tuple(_poly_from_index(idx, p, k)) + (1,)
        if _is_irreducible(modulus, p):
            return Field(p, k, modulus)
    raise FieldError("no irreducible modulus found")  # unreachable


def field_from_json(data: dict) -> Field:
    f = field_make(int(data["p"]), int(data["k"]))
    if list(f.modulus) != [int(c) for c in data["modulus"]]:
        raise FieldError(f"non-canonical modulus {data['modulus']} for F_{f.p}^{f.k}")
    return f
