"""Finite fields GF(p^m) and small dense linear algebra over them.

Elements are ints 0..q-1.  For m > 1 an element encodes the polynomial
sum(c_i x^i) as sum(c_i p^i), reduced modulo a caller-supplied monic
irreducible polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional, Sequence

from .errors import FieldError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> Optional[tuple[int, int]]:
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
    return None


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    deg = len(f) - 1
    if deg < 1 or f[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FiniteField:
    p: int
    m: int = 1
    modulus: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise FieldError("extension degree must be >= 1")
        if self.m > 1:
            if self.modulus is None:
                raise FieldError(f"GF({self.p}^{self.m}) needs an explicit irreducible polynomial")
            f = tuple(c % self.p for c in self.modulus)
            if len(f) != self.m + 1 or f[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {self.m}")
            if not is_irreducible(f, self.p):
                raise FieldError(f"polynomial {f} is reducible over GF({self.p})")
            object.__setattr__(self, "modulus", f)
        if self.q > 1 << 16:
            raise FieldError("fields larger than 2^16 are not supported")

    @classmethod
    def of(cls, q: int, modulus: Optional[Sequence[int]] = None) -> "FiniteField":
        pm = prime_power(q)
        if pm is None:
            raise FieldError(f"{q} is not a prime power")
        p, m = pm
        return cls(p, m, tuple(modulus) if modulus is not None else None)

    @property
    def q(self) -> int:
        return self.p**self.m

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, ds: Sequence[int]) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self._from_digits([-x % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    @cached_property
    def _mul_table(self) -> Optional[list[list[int]]]:
        if self.m == 1 or self.q > 256:
            return None
        return [[self._poly_mul(a, b) for b in range(self.q)] for a in range(self.q)]

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _poly_mod(prod, self.modulus, self.p)
        return self._from_digits(r + [0] * (self.m - len(r)))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        t = self._mul_table
        return t[a][b] if t is not None else self._poly_mul(a, b)

    def pow(self, a: int, e: int) -> int:
        if self.m == 1:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def primitive_element(self) -> int:
        for a in range(2 if self.q > 2 else 1, self.q):
            if self.order(a) == self.q - 1:
                return a
        raise AssertionError("finite field without a generator")

    def check_axioms(self) -> None:
        """Exhaustive field-axiom check; cubic in q, keep q small."""
        els = range(self.q)
        for a in els:
            if self.add(a, 0) != a or self.mul(a, 1) != a or self.add(a, self.neg(a)) != 0:
                raise FieldError(f"identity/inverse fails at {a}")
            if a and self.mul(a, self.inv(a)) != 1:
                raise FieldError(f"no multiplicative inverse for {a}")
            for b in els:
                if self.add(a, b) != self.add(b, a) or self.mul(a, b) != self.mul(b, a):
                    raise FieldError(f"commutativity fails at {a}, {b}")
                for c in els:
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                        raise FieldError(f"distributivity fails at {a}, {b}, {c}")
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise FieldError(f"associativity fails at {a}, {b}, {c}")
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                        raise FieldError(f"associativity fails at {a}, {b}, {c}")

    # -- dense linear algebra ------------------------------------------------

    def rref(self, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
        """Reduced row echelon form (zero rows dropped) and pivot columns."""
        A = [list(r) for r in rows]
        ncols = len(A[0]) if A else 0
        pivots = []
        r = 0
        for c in range(ncols):
            pr = next((i for i in range(r, len(A)) if A[i][c]), None)
            if pr is None:
                continue
            A[r], A[pr] = A[pr], A[r]
            inv = self.inv(A[r][c])
            A[r] = [self.mul(inv, x) for x in A[r]]
            for i in range(len(A)):
                if i != r and A[i][c]:
                    f = A[i][c]
                    A[i] = [self.sub(x, self.mul(f, y)) for x, y in zip(A[i], A[r])]
            pivots.append(c)
            r += 1
            if r == len(A):
                break
        return A[:r], pivots

    def rank(self, rows: Sequence[Sequence[int]]) -> int:
        return len(self.rref(rows)[1]) if rows and len(rows[0]) else 0

    def column_rank(self, rows: Sequence[Sequence[int]], cols: Sequence[int]) -> int:
        if not cols or not rows:
            return 0
        return self.rank([[row[c] for c in cols] for row in rows])

    def nullspace(self, rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
        """Basis of {x : A x^T = 0}; the rows of a parity-check matrix for row space A."""
        R, pivots = self.rref(rows) if rows else ([], [])
        free_cols = [c for c in range(ncols) if c not in pivots]
        basis = []
        for f in free_cols:
            v = [0] * ncols
            v[f] = 1
            for row, pc in zip(R, pivots):
                v[pc] = self.neg(row[f])
            basis.append(v)
        return basis

    def span(self, rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
        """Every linear combination of ``rows``, one per coefficient vector."""
        ncols = len(rows[0])
        out = []
        for coeffs in product(range(self.q), repeat=len(rows)):
            v = [0] * ncols
            for c, row in zip(coeffs, rows):
                if c:
                    v = [self.add(x, self.mul(c, y)) for x, y in zip(v, row)]
            out.append(tuple(v))
        return out
