"""Commutative local rings with invertible 2, and exact matrix arithmetic.

Three families of rings are supported, selected by a descriptor string:

    ``zmod:<n>``      Z/nZ where n = p^k is a power of an odd prime
    ``field:<p>``     the prime field F_p, p an odd prime
    ``dual:<p>:<k>``  truncated polynomials F_p[eps]/(eps^k)

Every supported ring is local: the non-units form the unique maximal ideal
(the radical), and an element is invertible exactly when its image in the
residue field F_p is nonzero.  2 is required to be a unit, so descriptors
with p = 2 are rejected at parse time.

Elements are carried as plain integers (``zmod``/``field``) or as
coefficient tuples, lowest degree first (``dual``).  Matrices are numpy
integer arrays: shape ``(n, m)`` for ``zmod``/``field`` and ``(k, n, m)``
for ``dual`` with the coefficient axis leading.  All arithmetic is exact;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class NonUnit(Exception):
    """Raised when inverting a ring element that is not a unit."""


class NotInvertible(Exception):
    """Raised when inverting a matrix that is singular over the ring."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_power_split(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and p prime, or None."""
    if n < 2:
        return None
    p = None
    m = n
    for q in range(2, min(m, 10**6) + 1):
        if q * q > m:
            break
        if m % q == 0:
            p = q
            break
    if p is None:
        return (n, 1) if _is_prime(n) else None
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def parse_ring_descriptor(text: str) -> "LocalRing":
    """Parse a ring descriptor string into a :class:`LocalRing`.

    Accepted forms are ``zmod:<n>`` (n an odd prime power), ``field:<p>``
    (p an odd prime) and ``dual:<p>:<k>`` (p an odd prime, k >= 1).

    Raises:
        ValueError: on any malformed descriptor, and in particular whenever
            the residue characteristic is 2 (this library requires 1/2).
    """
    parts = text.strip().split(":")
    kind = parts[0] if parts else ""
    try:
        if kind == "zmod" and len(parts) == 2:
            n = int(parts[1])
            split = _prime_power_split(n)
            if split is None:
                raise ValueError(f"zmod modulus must be a prime power, got {n}")
            p, k = split
            if p == 2:
                raise ValueError(f"residue characteristic 2 is not supported: {text!r}")
            return LocalRing("zmod", p, k)
        if kind == "field" and len(parts) == 2:
            p = int(parts[1])
            if not _is_prime(p):
                raise ValueError(f"field order must be prime, got {p}")
            if p == 2:
                raise ValueError(f"residue characteristic 2 is not supported: {text!r}")
            return LocalRing("field", p, 1)
        if kind == "dual" and len(parts) == 3:
            p, k = int(parts[1]), int(parts[2])
            if not _is_prime(p):
                raise ValueError(f"dual-number base must be prime, got {p}")
            if p == 2:
                raise ValueError(f"residue characteristic 2 is not supported: {text!r}")
            if k < 1:
                raise ValueError(f"dual-number length must be >= 1, got {k}")
            return LocalRing("dual", p, k)
    except ValueError as exc:
        if "invalid literal" not in str(exc):
            raise
        raise ValueError(f"malformed ring descriptor: {text!r}") from None
    raise ValueError(f"malformed ring descriptor: {text!r}")


@dataclass(frozen=True)
class RingElem:
    """An element of a :class:`LocalRing` (immutable, hashable)."""

    ring: "LocalRing"
    value: int | tuple[int, ...]

    def __add__(self, other: "RingElem") -> "RingElem":
        return self.ring.add(self, other)

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self.ring.sub(self, other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        return self.ring.mul(self, other)

    def __neg__(self) -> "RingElem":
        return self.ring.neg(self)

    def inverse(self) -> "RingElem":
        return self.ring.inv(self)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self)

    def in_radical(self) -> bool:
        return self.ring.in_radical(self)

    def __str__(self) -> str:
        return self.ring.to_text(self)


class LocalRing:
    """One of the supported local rings, with scalar and matrix arithmetic.

    Instances are cheap value objects; two rings compare equal when their
    descriptors agree.  Scalars are :class:`RingElem`; matrices are numpy
    arrays in the layout described in the module docstring and are always
    kept fully reduced.
    """

    def __init__(self, kind: str, p: int, k: int):
        if kind not in ("zmod", "field", "dual"):
            raise ValueError(f"unknown ring kind {kind!r}")
        self.kind = kind
        self.p = p
        self.k = k
        self.n = p**k if kind == "zmod" else p  # integer modulus of one layer
        if kind == "field":
            self.descriptor = f"field:{p}"
        elif kind == "zmod":
            self.descriptor = f"zmod:{self.n}"
        else:
            self.descriptor = f"dual:{p}:{k}"
        # smallest e with radical^e = 0
        self.nilpotency_degree = 1 if kind == "field" else k
        # int64 is safe while a full row of products cannot overflow
        self._int64_ok = 52 * (self.n - 1) ** 2 < 2**62

    # -- identity / comparison -------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LocalRing) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"LocalRing({self.descriptor!r})"

    # -- scalar construction ---------------------------------------------

    def elem(self, x: int | Iterable[int]) -> RingElem:
        """Coerce an integer (or coefficient iterable, for ``dual``) into R."""
        if self.kind == "dual":
            if isinstance(x, int):
                coeffs = [x]
            else:
                coeffs = list(x)
            if len(coeffs) > self.k:
                raise ValueError(f"too many coefficients for {self.descriptor}: {coeffs}")
            coeffs = coeffs + [0] * (self.k - len(coeffs))
            return RingElem(self, tuple(c % self.p for c in coeffs))
        if not isinstance(x, int):
            raise ValueError(f"{self.descriptor} element must be an integer, got {x!r}")
        return RingElem(self, x % self.n)

    @property
    def zero(self) -> RingElem:
        return self.elem(0)

    @property
    def one(self) -> RingElem:
        return self.elem(1)

    def from_text(self, text: str) -> RingElem:
        """Parse the element encoding used by the CLI (inverse of to_text)."""
        text = text.strip()
        try:
            if self.kind == "dual":
                return self.elem([int(c) for c in text.split(",")])
            return self.elem(int(text))
        except ValueError:
            raise ValueError(f"bad element {text!r} for ring {self.descriptor}") from None

    def to_text(self, a: RingElem) -> str:
        if self.kind == "dual":
            return ",".join(str(c) for c in a.value)
        return str(a.value)

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: RingElem, b: RingElem) -> RingElem:
        if self.kind == "dual":
            return RingElem(self, tuple((x + y) % self.p for x, y in zip(a.value, b.value)))
        return RingElem(self, (a.value + b.value) % self.n)

    def sub(self, a: RingElem, b: RingElem) -> RingElem:
        return self.add(a, self.neg(b))

    def neg(self, a: RingElem) -> RingElem:
        if self.kind == "dual":
            return RingElem(self, tuple(-x % self.p for x in a.value))
        return RingElem(self, -a.value % self.n)

    def mul(self, a: RingElem, b: RingElem) -> RingElem:
        if self.kind == "dual":
            out = [0] * self.k
            for i, x in enumerate(a.value):
                if x:
                    for j in range(self.k - i):
                        out[i + j] = (out[i + j] + x * b.value[j]) % self.p
            return RingElem(self, tuple(out))
        return RingElem(self, a.value * b.value % self.n)

    def is_unit(self, a: RingElem) -> bool:
        if self.kind == "dual":
            return a.value[0] % self.p != 0
        return a.value % self.p != 0

    def in_radical(self, a: RingElem) -> bool:
        """Membership in the maximal ideal (= the set of non-units)."""
        return not self.is_unit(a)

    def inv(self, a: RingElem) -> RingElem:
        """Multiplicative inverse.

        Raises:
            NonUnit: if the element reduces to 0 in the residue field.
        """
        if not self.is_unit(a):
            raise NonUnit(f"{self.to_text(a)} is not a unit in {self.descriptor}")
        if self.kind == "dual":
            # power-series inversion: b0 = a0^-1, then peel off one layer at a time
            a0inv = pow(a.value[0], -1, self.p)
            out = [a0inv] + [0] * (self.k - 1)
            for m in range(1, self.k):
                acc = 0
                for i in range(1, m + 1):
                    acc += a.value[i] * out[m - i]
                out[m] = -a0inv * acc % self.p
            return RingElem(self, tuple(out))
        return RingElem(self, pow(a.value, -1, self.n))

    def reduce_mod_radical(self, a: RingElem) -> RingElem:
        """Image of ``a`` in the residue field F_p."""
        field = self.residue_field()
        if self.kind == "dual":
            return field.elem(a.value[0])
        return field.elem(a.value % self.p)

    def residue_field(self) -> "LocalRing":
        if self.kind == "field":
            return self
        return LocalRing("field", self.p, 1)

    # -- random sampling ---------------------------------------------------

    def random_element(self, rng: random.Random) -> RingElem:
        if self.kind == "dual":
            return self.elem([rng.randrange(self.p) for _ in range(self.k)])
        return self.elem(rng.randrange(self.n))

    def random_unit(self, rng: random.Random) -> RingElem:
        while True:
            a = self.random_element(rng)
            if self.is_unit(a):
                return a

    def random_radical(self, rng: random.Random) -> RingElem:
        """A uniformly random element of the maximal ideal."""
        if self.kind == "dual":
            return self.elem([0] + [rng.randrange(self.p) for _ in range(self.k - 1)])
        return self.elem(self.p * rng.randrange(self.n // self.p))

    # -- matrices ----------------------------------------------------------
    #
    # zmod / field : int64 array of shape (n, m), entries in [0, modulus)
    # dual         : int64 array of shape (k, n, m), coefficient axis first

    def mat_shape(self, size: int) -> tuple[int, ...]:
        if self.kind == "dual":
            return (self.k, size, size)
        return (size, size)

    def mat_zero(self, rows: int, cols: int) -> np.ndarray:
        if self.kind == "dual":
            return np.zeros((self.k, rows, cols), dtype=np.int64)
        return np.zeros((rows, cols), dtype=np.int64)

    def mat_eye(self, size: int) -> np.ndarray:
        m = self.mat_zero(size, size)
        if self.kind == "dual":
            m[0] = np.eye(size, dtype=np.int64)
        else:
            m[...] = np.eye(size, dtype=np.int64)
        return m

    def mat_from_int(self, m: np.ndarray | Sequence[Sequence[int]]) -> np.ndarray:
        """Reduce an integer matrix into the ring's matrix layout."""
        arr = np.asarray(m, dtype=np.int64)
        if self.kind == "dual":
            out = self.mat_zero(*arr.shape)
            out[0] = arr % self.p
            return out
        return arr % self.n

    def mat_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % (self.p if self.kind == "dual" else self.n)

    def mat_sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a - b) % (self.p if self.kind == "dual" else self.n)

    def mat_neg(self, a: np.ndarray) -> np.ndarray:
        return (-a) % (self.p if self.kind == "dual" else self.n)

    def mat_scale(self, c: RingElem, a: np.ndarray) -> np.ndarray:
        """Scalar multiple c*a of a matrix."""
        if self.kind == "dual":
            out = np.zeros_like(a)
            for i, x in enumerate(c.value):
                if x:
                    out[i:] = (out[i:] + x * a[: self.k - i]) % self.p
            return out
        return (c.value * a) % self.n

    def mat_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact matrix product over the ring."""
        if self.kind == "dual":
            k = self.k
            out = np.zeros((k, a.shape[1], b.shape[2]), dtype=np.int64)
            for i in range(k):
                for j in range(k - i):
                    out[i + j] = (out[i + j] + a[i] @ b[j]) % self.p
            return out
        if self._int64_ok:
            return (a @ b) % self.n
        prod = np.dot(a.astype(object), b.astype(object))
        return (prod % self.n).astype(object)

    def mat_eq(self, a: np.ndarray, b: np.ndarray) -> bool:
        return a.shape == b.shape and bool(np.array_equal(a, b))

    def mat_entry(self, a: np.ndarray, i: int, j: int) -> RingElem:
        if self.kind == "dual":
            return self.elem([int(a[d, i, j]) for d in range(self.k)])
        return self.elem(int(a[i, j]))

    def mat_set_entry(self, a: np.ndarray, i: int, j: int, val: RingElem) -> None:
        if self.kind == "dual":
            a[:, i, j] = val.value
        else:
            a[i, j] = val.value

    def mat_reduce_mod_radical(self, a: np.ndarray) -> np.ndarray:
        """Entrywise image over the residue field (in field matrix layout)."""
        if self.kind == "dual":
            return a[0] % self.p
        return a % self.p

    def mat_inv(self, a: np.ndarray) -> np.ndarray:
        """Inverse by Gauss-Jordan elimination on unit pivots.

        Over a local ring a matrix is invertible iff its reduction mod the
        radical is invertible, so pivot search only needs entries whose
        residue is nonzero.

        Raises:
            NotInvertible: if no unit pivot exists in some column.
        """
        if self.kind == "dual":
            return self._mat_inv_dual(a)
        size = a.shape[0]
        n = self.n
        aug = np.concatenate([a % n, np.eye(size, dtype=a.dtype)], axis=1)
        for col in range(size):
            piv = None
            for r in range(col, size):
                if aug[r, col] % self.p != 0:
                    piv = r
                    break
            if piv is None:
                raise NotInvertible(f"matrix is singular over {self.descriptor}")
            if piv != col:
                aug[[col, piv]] = aug[[piv, col]]
            inv_p = pow(int(aug[col, col]), -1, n)
            aug[col] = (aug[col] * inv_p) % n
            for r in range(size):
                if r != col and aug[r, col]:
                    aug[r] = (aug[r] - aug[r, col] * aug[col]) % n
        return aug[:, size:].copy()

    def _mat_inv_dual(self, a: np.ndarray) -> np.ndarray:
        k, size = self.k, a.shape[1]
        p = self.p
        aug = np.zeros((k, size, 2 * size), dtype=np.int64)
        aug[:, :, :size] = a % p
        aug[0, :, size:] = np.eye(size, dtype=np.int64)

        def row_scale(row: np.ndarray, c: tuple[int, ...]) -> np.ndarray:
            out = np.zeros_like(row)
            for i, x in enumerate(c):
                if x:
                    out[i:] = (out[i:] + x * row[: k - i]) % p
            return out

        for col in range(size):
            piv = None
            for r in range(col, size):
                if aug[0, r, col] % p != 0:
                    piv = r
                    break
            if piv is None:
                raise NotInvertible(f"matrix is singular over {self.descriptor}")
            if piv != col:
                aug[:, [col, piv]] = aug[:, [piv, col]]
            pivot = self.elem([int(aug[i, col, col]) for i in range(k)])
            aug[:, col] = row_scale(aug[:, col], self.inv(pivot).value)
            for r in range(size):
                if r != col and aug[:, r, col].any():
                    factor = tuple(int(aug[i, r, col]) for i in range(k))
                    aug[:, r] = (aug[:, r] - row_scale(aug[:, col], factor)) % p
        return aug[:, :, size:].copy()

    def mat_random(self, rng: random.Random, rows: int, cols: int) -> np.ndarray:
        if self.kind == "dual":
            return np.array(
                [[[rng.randrange(self.p) for _ in range(cols)] for _ in range(rows)] for _ in range(self.k)],
                dtype=np.int64,
            )
        return np.array([[rng.randrange(self.n) for _ in range(cols)] for _ in range(rows)], dtype=np.int64)


if __name__ == "__main__":  # tiny smoke test
    for desc in ("zmod:27", "field:5", "dual:3:2"):
        R = parse_ring_descriptor(desc)
        rng = random.Random(0)
        u = R.random_unit(rng)
        assert u * R.inv(u) == R.one, desc
        m = R.mat_from_int(np.array([[1, 2], [0, 1]]))
        assert R.mat_eq(R.mat_mul(m, R.mat_inv(m)), R.mat_eye(2)), desc
        print(f"{desc}: ok (unit {u}, 2x2 inverse round-trip)")
