"""Concrete code families: the running example, linear, interleaved and folded codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .code import BlockCode, exact_log
from .errors import ConsistencyError, DivisibilityViolated, NotAGenerator, NotMultilinear, RankDeficient
from .field import FiniteField
from .matroid import Matroid

CPRIME_WORDS = """
000 011 022 033
101 112 123 130
202 213 220 231
303 310 321 332
"""


def running_example_cprime() -> BlockCode:
    """The 16-word almost affine code of length 3 over {0,1,2,3} with matroid U(2,3)."""
    words = [tuple(int(ch) for ch in tok) for tok in CPRIME_WORDS.split()]
    return BlockCode(4, 3, tuple(words))


@dataclass(frozen=True)
class GeneratorMatrix:
    field: FiniteField
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or len({len(r) for r in rows}) != 1:
            raise ValueError("generator needs at least one row and equal row lengths")
        if any(not 0 <= x < self.field.q for r in rows for x in r):
            raise ValueError("entries must be field elements")
        object.__setattr__(self, "rows", rows)
        if self.field.rank(rows) != len(rows):
            raise RankDeficient(f"generator has rank {self.field.rank(rows)} < {len(rows)} rows")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def parity_check(self) -> list[list[int]]:
        return self.field.nullspace(self.rows, self.n)


def linear_code(G: GeneratorMatrix) -> BlockCode:
    return BlockCode(G.field.q, G.n, tuple(G.field.span(G.rows)))


def matroid_from_columns(field: FiniteField, rows: Sequence[Sequence[int]], n: int) -> Matroid:
    """Column matroid: rank(X) = rank of the columns indexed by X."""
    return Matroid.from_rank_function(
        n, lambda X: field.column_rank(rows, [i for i in range(n) if X >> i & 1])
    )


def linear_code_matroids(G: GeneratorMatrix) -> tuple[Matroid, Matroid]:
    """(M_C from codeword punctures, column matroid of a parity-check matrix)."""
    M_C = linear_code(G).matroid
    M_parity = matroid_from_columns(G.field, G.parity_check(), G.n)
    if M_C != M_parity.dual():
        raise ConsistencyError("code matroid is not the dual of the parity-check matroid")
    return M_C, M_parity


def fold(words: Sequence[Sequence[int]], q: int, r: int) -> BlockCode:
    """Group r consecutive symbols into one symbol of {0..q^r - 1}, little-endian."""
    n = len(words[0])
    if n % r:
        raise DivisibilityViolated(f"length {n} not divisible by {r}")
    out = []
    for w in words:
        out.append(tuple(sum(w[x * r + j] * q**j for j in range(r)) for x in range(n // r)))
    return BlockCode(q**r, n // r, tuple(out))


def unfold(C: BlockCode, q: int, r: int) -> list[tuple[int, ...]]:
    if C.q != q**r:
        raise NotMultilinear(f"alphabet size {C.q} is not {q}^{r}")
    out = []
    for w in C.words:
        flat = []
        for s in w:
            for _ in range(r):
                flat.append(s % q)
                s //= q
        out.append(tuple(flat))
    return out


def block_generator(G: GeneratorMatrix, r: int) -> GeneratorMatrix:
    """kr x nr matrix whose (i, j) block is g_ij times the r x r identity."""
    rows = []
    for grow in G.rows:
        for a in range(r):
            row = [0] * (G.n * r)
            for j, g in enumerate(grow):
                row[j * r + a] = g
            rows.append(tuple(row))
    return GeneratorMatrix(G.field, tuple(rows))


def interleave(G: GeneratorMatrix, r: int) -> BlockCode:
    if r < 1:
        raise ValueError("interleaving depth must be >= 1")
    return fold(G.field.span(block_generator(G, r).rows), G.field.q, r)


def multilinear_basis(C: BlockCode, field: FiniteField, r: int) -> list[list[int]]:
    """An F_q basis of C viewed in F_q^{nr}; raises NotMultilinear when C is not one."""
    flat = unfold(C, field.q, r)
    basis, _ = field.rref(flat)
    if field.q ** len(basis) != len(C):
        raise NotMultilinear("code is not an F_q-linear subspace")
    for X in range(1 << C.n):
        if exact_log(len(C.puncture(X)), field.q) % r:
            raise NotMultilinear(f"puncture dimension on mask {X:#b} not divisible by {r}")
    return basis


def multilinear_dual(C: BlockCode, field: FiniteField, r: int) -> BlockCode:
    """Orthogonal complement in F_q^{nr}, regrouped into blocks of r symbols."""
    basis = multilinear_basis(C, field, r)
    H = field.nullspace(basis, C.n * r)
    if not H:
        return fold([(0,) * (C.n * r)], field.q, r)
    return fold(field.span(H), field.q, r)


def reed_solomon(field: FiniteField | int, gamma: int, k: int) -> GeneratorMatrix:
    """k x (q-1) Vandermonde generator with entry (i, j) = gamma^(i*j), j = 1..q-1."""
    F = field if isinstance(field, FiniteField) else FiniteField.of(field)
    q = F.q
    if not 1 <= k <= q - 1:
        raise ValueError(f"need 1 <= k <= q-1, got k={k}")
    if gamma == 0 or F.order(gamma) != q - 1:
        raise NotAGenerator(f"{gamma} does not generate the multiplicative group of GF({q})")
    rows = tuple(tuple(F.pow(gamma, i * j) for j in range(1, q)) for i in range(k))
    return GeneratorMatrix(F, rows)


def folded_rs(field: FiniteField | int, gamma: int, r: int, k: int) -> BlockCode:
    F = field if isinstance(field, FiniteField) else FiniteField.of(field)
    q = F.q
    if r < 1 or (q - 1) % r or k % r or k > q - 1:
        raise DivisibilityViolated(f"need r | q-1, r | k, k <= q-1 (q={q}, r={r}, k={k})")
    G = reed_solomon(F, gamma, k)
    return fold(F.span(G.rows), q, r)


def punctured_reed_solomon(field: FiniteField, gamma: int, k: int, keep: int) -> BlockCode:
    """RS code keeping only the first ``keep`` columns of the generator."""
    G = reed_solomon(field, gamma, k)
    rows = [row[:keep] for row in G.rows]
    return linear_code(GeneratorMatrix(field, tuple(tuple(r) for r in rows)))


def repetition(q: int, n: int) -> BlockCode:
    return BlockCode(q, n, tuple((s,) * n for s in range(q)))


def simplex_generator(m: int = 3) -> GeneratorMatrix:
    """Binary simplex code: columns are all nonzero vectors of length m."""
    cols = [[(v >> b) & 1 for b in range(m)] for v in range(1, 1 << m)]
    rows = tuple(tuple(c[b] for c in cols) for b in range(m))
    return GeneratorMatrix(FiniteField(2), rows)

