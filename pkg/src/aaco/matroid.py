"""Exact matroid arithmetic over small ground sets.

Subsets of the ground set {1..n} are plain ints: position i is bit i-1.
A matroid stores its full rank table, indexed by mask value, so every
query is a lookup and the axioms can be checked exhaustively.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import AxiomViolation, CapExceeded, ElementInBasis, NotABasis

DEFAULT_CAP = 24


def subset_cap() -> int:
    """Largest ground set allowed; ``AACO_SUBSET_CAP`` overrides the default."""
    value = os.environ.get("AACO_SUBSET_CAP")
    return int(value) if value else DEFAULT_CAP


def check_cap(n: int) -> None:
    cap = subset_cap()
    if n > cap:
        raise CapExceeded(n, cap)


def mask_of(positions) -> int:
    m = 0
    for p in positions:
        m |= 1 << (p - 1)
    return m


def positions(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def submasks(mask: int):
    """All submasks of ``mask`` in increasing numeric order."""
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    return reversed(subs)


def format_mask(mask: int) -> str:
    return "{" + ",".join(str(p) for p in positions(mask)) + "}"


@dataclass(frozen=True)
class Matroid:
    n: int
    ranks: tuple[int, ...]

    def __post_init__(self):
        check_cap(self.n)
        if len(self.ranks) != 1 << self.n:
            raise ValueError(f"rank table needs {1 << self.n} entries, got {len(self.ranks)}")

    @classmethod
    def from_rank_function(cls, n: int, rank) -> "Matroid":
        check_cap(n)
        return cls(n, tuple(rank(m) for m in range(1 << n)))

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def rank_of_matroid(self) -> int:
        return self.ranks[self.ground]

    def rank(self, X: int) -> int:
        return self.ranks[X]

    def nullity(self, X: int) -> int:
        return X.bit_count() - self.ranks[X]

    def is_independent(self, X: int) -> bool:
        return self.ranks[X] == X.bit_count()

    def validate(self) -> None:
        """Raise AxiomViolation on the first failing instance, in mask order."""
        r = self.ranks
        if r[0] != 0:
            raise AxiomViolation("R1", (0,))
        n = self.n
        for X in range(1 << n):
            rx = r[X]
            for i in range(n):
                bx = 1 << i
                if X & bx:
                    continue
                rxx = r[X | bx]
                if not rx <= rxx <= rx + 1:
                    raise AxiomViolation("R2", (X, i + 1))
        for X in range(1 << n):
            rx = r[X]
            free = [i for i in range(n) if not X >> i & 1]
            for a, b in combinations(free, 2):
                ba, bb = 1 << a, 1 << b
                if r[X | ba] == rx and r[X | bb] == rx and r[X | ba | bb] != rx:
                    raise AxiomViolation("R3", (X, a + 1, b + 1))

    def is_valid(self) -> bool:
        try:
            self.validate()
        except AxiomViolation:
            return False
        return True

    def dual(self) -> "Matroid":
        E = self.ground
        rE = self.ranks[E]
        return Matroid(
            self.n,
            tuple(X.bit_count() + self.ranks[E & ~X] - rE for X in range(1 << self.n)),
        )

    @cached_property
    def _circuits(self) -> tuple[int, ...]:
        out = []
        for X in range(1, 1 << self.n):
            if self.is_independent(X):
                continue
            # dependent; minimal iff every one-element deletion is independent
            Y = X
            minimal = True
            while Y:
                low = Y & -Y
                Y ^= low
                if not self.is_independent(X ^ low):
                    minimal = False
                    break
            if minimal:
                out.append(X)
        return tuple(out)

    def circuits(self) -> list[int]:
        return list(self._circuits)

    def bases(self) -> list[int]:
        k = self.rank_of_matroid
        return [X for X in range(1 << self.n) if X.bit_count() == k and self.ranks[X] == k]

    def is_basis(self, B: int) -> bool:
        k = self.rank_of_matroid
        return B.bit_count() == k and self.ranks[B] == k

    def _check_basis_pair(self, B: int, e: int) -> None:
        if not self.is_basis(B):
            raise NotABasis(f"{format_mask(B)} is not a basis")
        if B >> (e - 1) & 1:
            raise ElementInBasis(f"element {e} lies in {format_mask(B)}")

    def fundamental_circuit(self, B: int, e: int) -> int:
        """The unique circuit inside B + e."""
        self._check_basis_pair(B, e)
        return self._unique_circuit(B | 1 << (e - 1))

    def _unique_circuit(self, Y: int) -> int:
        # Y = independent set plus one element, so it holds exactly one circuit
        for C in self._circuits:
            if C & Y == C:
                return C
        raise AssertionError(f"no circuit inside {format_mask(Y)}")

    def basis_exchange_set(self, B: int, x: int) -> int:
        """Positions y of B such that B - y + x is again a basis."""
        self._check_basis_pair(B, x)
        bx = 1 << (x - 1)
        out = 0
        for y in positions(B):
            by = 1 << (y - 1)
            if self.is_basis((B & ~by) | bx):
                out |= by
        return out

    def hamming_weights(self) -> list[int]:
        """d_i = smallest |X| of nullity i, for i = 1..n - rank."""
        top = self.n - self.rank_of_matroid
        best = [None] * (top + 1)
        for X in range(1 << self.n):
            i = self.nullity(X)
            if i and (best[i] is None or X.bit_count() < best[i]):
                best[i] = X.bit_count()
        return best[1:]

    def wei_duality_check(self) -> bool:
        primal = self.hamming_weights()
        dual = self.dual().hamming_weights()
        left = set(primal)
        right = {self.n + 1 - d for d in dual}
        return not (left & right) and left | right == set(range(1, self.n + 1))

    def max_nonredundant_circuits(self, X: int) -> tuple[int, list[int]]:
        """Nullity of X together with that many non-redundant circuits in X.

        The witness is the set of fundamental circuits of a maximal independent
        subset of X; each one owns the element it was built from.
        """
        basis = 0
        for p in positions(X):
            cand = basis | 1 << (p - 1)
            if self.is_independent(cand):
                basis = cand
        witness = [self._unique_circuit(basis | 1 << (p - 1)) for p in positions(X & ~basis)]
        return self.nullity(X), sorted(witness)

    def is_connected(self) -> bool:
        covered = set()
        for C in self._circuits:
            for a, b in combinations(positions(C), 2):
                covered.add((a, b))
        return all((a, b) in covered for a, b in combinations(range(1, self.n + 1), 2))

    def restrict_ranks(self, X: int) -> dict[int, int]:
        return {Y: self.ranks[Y] for Y in submasks(X)}

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "rank": list(self.ranks)})

    @classmethod
    def from_json(cls, text: str) -> "Matroid":
        data = json.loads(text)
        return cls(int(data["n"]), tuple(int(v) for v in data["rank"]))


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    check_cap(n)
    return Matroid(n, tuple(min(X.bit_count(), r) for X in range(1 << n)))


def free(n: int) -> Matroid:
    return uniform(n, n)


def direct_sum(a: Matroid, b: Matroid) -> Matroid:
    """Ground set of ``b`` is shifted after that of ``a``."""
    low = (1 << a.n) - 1
    return Matroid.from_rank_function(
        a.n + b.n, lambda X: a.ranks[X & low] + b.ranks[X >> a.n]
    )
