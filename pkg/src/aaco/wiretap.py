"""Coset coding for the wiretap channel of type II over almost affine codes."""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import log
from typing import Callable, Optional, Sequence, Union

from .code import BlockCode, Word
from .errors import ConsistencyError, InvalidSideMap, LengthMismatch, MessageLengthMismatch
from .matroid import positions

PARTITION_CHECK_LIMIT = 10**6


@dataclass(frozen=True)
class SideMap:
    """phi: F^L x F^L -> F^L, given componentwise by a q x q table or as a full table."""

    q: int
    length: int
    phi0: Optional[tuple[tuple[int, ...], ...]] = None
    table: Optional[dict] = field(default=None, hash=False, compare=False)

    @classmethod
    def addition(cls, q: int, length: int) -> "SideMap":
        return cls(q, length, tuple(tuple((x + y) % q for y in range(q)) for x in range(q)))

    @classmethod
    def componentwise(cls, phi0: Sequence[Sequence[int]], length: int) -> "SideMap":
        return cls(len(phi0), length, tuple(tuple(row) for row in phi0))

    @classmethod
    def from_function(cls, q: int, length: int, fn: Callable[[Word, Word], Sequence[int]]) -> "SideMap":
        space = list(product(range(q), repeat=length))
        return cls(q, length, None, {(g, m): tuple(fn(g, m)) for g in space for m in space})

    def __call__(self, g: Sequence[int], m: Sequence[int]) -> Word:
        if self.phi0 is not None:
            return tuple(self.phi0[a][b] for a, b in zip(g, m))
        return self.table[(tuple(g), tuple(m))]

    def validate(self) -> None:
        """Check bijectivity in the message and the restriction condition.

        The restriction condition over all coordinate sets X reduces to single
        coordinates: each output coordinate j must depend on g_j alone and be
        injective in it.
        """
        q, L = self.q, self.length
        if self.phi0 is not None:
            for x in range(q):
                if sorted(self.phi0[x]) != list(range(q)):
                    raise InvalidSideMap("bijection in message", (x,))
            for y in range(q):
                col = [self.phi0[x][y] for x in range(q)]
                if len(set(col)) != q:
                    raise InvalidSideMap("restriction compatibility", (y,))
            return
        space = list(product(range(q), repeat=L))
        for g in space:
            if len({self(g, m) for m in space}) != len(space):
                raise InvalidSideMap("bijection in message", (g,))
        for m in space:
            for j in range(L):
                seen: dict[int, int] = {}
                for g in space:
                    out = self(g, m)[j]
                    if seen.setdefault(g[j], out) != out:
                        raise InvalidSideMap("restriction compatibility", (m, j, g))
                if len(set(seen.values())) != len(seen):
                    raise InvalidSideMap("restriction compatibility", (m, j))

    def inverse(self, g: Sequence[int]) -> dict[Word, Word]:
        space = product(range(self.q), repeat=self.length)
        return {self(g, m): m for m in space}


def lex_first_basis(C: BlockCode) -> int:
    M = C.matroid
    B = 0
    for p in range(1, C.n + 1):
        cand = B | 1 << (p - 1)
        if M.is_independent(cand):
            B = cand
    return B


@dataclass
class WiretapScheme:
    """A code, a side map and the position permutation that puts a basis first.

    ``perm[i]`` is the (0-based) original position sitting at internal
    position i; internally positions 0..k-1 form a basis.
    """

    code: BlockCode
    side_map: SideMap
    perm: tuple[int, ...]
    _inverses: dict = field(default_factory=dict, init=False, repr=False)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.dimension

    @property
    def message_length(self) -> int:
        return self.n - self.k

    def messages(self) -> list[Word]:
        return list(product(range(self.code.q), repeat=self.message_length))

    def to_internal(self, w: Sequence[int]) -> Word:
        return tuple(w[p] for p in self.perm)

    def to_external(self, v: Sequence[int]) -> Word:
        out = [0] * self.n
        for i, p in enumerate(self.perm):
            out[p] = v[i]
        return tuple(out)

    @cached_property
    def _internal_words(self) -> list[Word]:
        return [self.to_internal(w) for w in self.code.words]

    @cached_property
    def _by_basis(self) -> dict[Word, Word]:
        k = self.k
        return {v[:k]: v for v in self._internal_words}

    def extend(self, w_internal: Sequence[int], m: Sequence[int]) -> Word:
        k = self.k
        return tuple(w_internal[:k]) + self.side_map(w_internal[k:], m)

    def _check_message(self, m: Sequence[int]) -> Word:
        m = tuple(m)
        if len(m) != self.message_length:
            raise MessageLengthMismatch(f"message has length {len(m)}, expected {self.message_length}")
        if any(not 0 <= s < self.code.q for s in m):
            raise MessageLengthMismatch(f"message {m} has symbols outside the alphabet")
        return m

    def coset(self, m: Sequence[int]) -> BlockCode:
        m = self._check_message(m)
        words = [self.to_external(self.extend(v, m)) for v in self._internal_words]
        return BlockCode(self.code.q, self.n, tuple(words))

    def _inverse_for(self, g: Word) -> dict[Word, Word]:
        inv = self._inverses.get(g)
        if inv is None:
            inv = self._inverses[g] = self.side_map.inverse(g)
        return inv

    def coset_index(self) -> dict[Word, Word]:
        """Every word of F^n mapped to its message; raises unless the cosets partition F^n."""
        index: dict[Word, Word] = {}
        for m in self.messages():
            for v in self._internal_words:
                t = self.to_external(self.extend(v, m))
                if t in index:
                    raise ConsistencyError(f"{t} lies in cosets {index[t]} and {m}")
                index[t] = m
        if len(index) != self.code.q**self.n:
            raise ConsistencyError("cosets do not cover F^n")
        return index


def make_scheme(C: BlockCode, side_map: Optional[SideMap] = None) -> WiretapScheme:
    M = C.matroid
    L = C.n - M.rank_of_matroid
    phi = side_map or SideMap.addition(C.q, L)
    if phi.q != C.q or phi.length != L:
        raise InvalidSideMap("shape", (phi.q, phi.length, C.q, L))
    phi.validate()
    B = lex_first_basis(C)
    inside = [p - 1 for p in positions(B)]
    outside = [i for i in range(C.n) if not B >> i & 1]
    scheme = WiretapScheme(C, phi, tuple(inside + outside))
    if C.q**C.n <= PARTITION_CHECK_LIMIT:
        scheme.coset_index()
    return scheme


def encode(scheme: WiretapScheme, m: Sequence[int], rng: Union[random.Random, int]) -> Word:
    """Uniformly random member of the coset of m under ``rng``."""
    m = scheme._check_message(m)
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    v = scheme._internal_words[rng.randrange(len(scheme._internal_words))]
    return scheme.to_external(scheme.extend(v, m))


def decode(scheme: WiretapScheme, t: Sequence[int]) -> Word:
    t = tuple(t)
    if len(t) != scheme.n:
        raise LengthMismatch(f"word has length {len(t)}, expected {scheme.n}")
    ti = scheme.to_internal(t)
    k = scheme.k
    w = scheme._by_basis[ti[:k]]
    return scheme._inverse_for(w[k:])[ti[k:]]


def lambda_set(scheme: WiretapScheme, t: Sequence[int], X: int, m: Sequence[int]) -> list[Word]:
    """Members of the coset of m that agree with t on X."""
    idx = [p - 1 for p in positions(X)]
    target = [t[i] for i in idx]
    return [w for w in scheme.coset(m).words if [w[i] for i in idx] == target]


@dataclass(frozen=True)
class EquivocationRow:
    mu: int
    equivocation: int
    delta: int
    lower: int
    upper: int

    @property
    def holds(self) -> bool:
        return self.lower <= self.mu < self.upper


def equivocation_profile(scheme: WiretapScheme) -> list[EquivocationRow]:
    """E_mu and Delta_mu for mu = 0..n with the bracketing dual weights."""
    M = scheme.code.matroid
    n, L = scheme.n, scheme.message_length
    dstar = [0] + M.hamming_weights() + [n + 1]
    most = [0] * (n + 1)
    for X in range(1 << n):
        s = X.bit_count()
        most[s] = max(most[s], M.nullity(X))
    return [
        EquivocationRow(mu, L - most[mu], most[mu], dstar[most[mu]], dstar[most[mu] + 1])
        for mu in range(n + 1)
    ]


def conditional_entropy(scheme: WiretapScheme, X: int) -> float:
    """H(message | observation on X) in base-q units, from exact joint counts.

    Messages are uniform and the transmitted word is uniform within its coset.
    """
    q = scheme.code.q
    idx = [p - 1 for p in positions(X)]
    joint: Counter = Counter()
    for m in scheme.messages():
        for v in scheme._internal_words:
            t = scheme.to_external(scheme.extend(v, m))
            joint[(tuple(t[i] for i in idx), m)] += 1
    total = sum(joint.values())
    by_obs = defaultdict(int)
    for (obs, _), c in joint.items():
        by_obs[obs] += c
    h = 0.0
    for (obs, _), c in joint.items():
        p_obs = Fraction(by_obs[obs], total)
        p_cond = Fraction(c, by_obs[obs])
        h -= float(p_obs * p_cond) * log(p_cond, q)
    return h

