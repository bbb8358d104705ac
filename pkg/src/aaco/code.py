"""Block codes over the integer alphabet {0..q-1} and their almost affine analysis."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from operator import itemgetter
from typing import Iterable, Optional, Sequence

from .errors import (
    AlphabetMismatch,
    ConsistencyError,
    Degenerate,
    DuplicateWord,
    EmptyCode,
    EnumerationBudgetExceeded,
    IndexOutOfRange,
    LengthMismatch,
    NotAlmostAffine,
    ParseError,
    WordNotInCode,
)
from .matroid import Matroid, check_cap, positions

Word = tuple[int, ...]

DEFAULT_BUDGET = 10**7


def exact_log(size: int, q: int) -> Optional[int]:
    """log_q(size) if size is an exact power of q, else None."""
    k = 0
    while size % q == 0:
        size //= q
        k += 1
    return k if size == 1 else None


def _getters(n: int) -> list:
    # getters[X] projects a word onto the positions of mask X
    out = []
    for X in range(1 << n):
        idx = [p - 1 for p in positions(X)]
        if not idx:
            out.append(lambda w: ())
        elif len(idx) == 1:
            out.append(itemgetter(idx[0]))
        else:
            out.append(itemgetter(*idx))
    return out


def first_failing_mask(words: Sequence[Word], q: int, n: int, getters=None) -> Optional[tuple[int, int]]:
    """First X (mask order) whose puncture size is not a power of q, with that size."""
    getters = getters or _getters(n)
    for X in range(1 << n):
        g = getters[X]
        size = len({g(w) for w in words})
        if exact_log(size, q) is None:
            return X, size
    return None


def format_word(w: Sequence[int], q: int) -> str:
    if q <= 10:
        return "".join(str(s) for s in w)
    return " ".join(str(s) for s in w)


def parse_word(text: str, q: int, n: Optional[int] = None) -> Word:
    text = text.strip()
    if any(sep in text for sep in " ,"):
        w = tuple(int(t) for t in text.replace(",", " ").split())
    elif q <= 10:
        w = tuple(int(ch) for ch in text)
    else:
        w = (int(text),)
    if n is not None and len(w) != n:
        raise LengthMismatch(f"word {text!r} has length {len(w)}, expected {n}")
    if any(not 0 <= s < q for s in w):
        raise AlphabetMismatch(f"word {text!r} has symbols outside 0..{q - 1}")
    return w


@dataclass(frozen=True)
class BlockCode:
    """Ordered set of equal-length words over {0..q-1}; words are kept sorted."""

    q: int
    n: int
    words: tuple[Word, ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet needs q >= 2")
        if not self.words:
            raise EmptyCode("a code needs at least one word")
        ws = []
        for w in self.words:
            w = tuple(int(s) for s in w)
            if len(w) != self.n:
                raise LengthMismatch(f"word {w} has length {len(w)}, expected {self.n}")
            if any(not 0 <= s < self.q for s in w):
                raise AlphabetMismatch(f"word {w} has symbols outside 0..{self.q - 1}")
            ws.append(w)
        ordered = tuple(sorted(ws))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise DuplicateWord(f"duplicate word {a}")
        object.__setattr__(self, "words", ordered)

    @classmethod
    def of(cls, q: int, words: Iterable[Sequence[int]]) -> "BlockCode":
        ws = [tuple(w) for w in words]
        return cls(q, len(ws[0]) if ws else 0, tuple(ws))

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return tuple(w) in self._word_set

    def __iter__(self):
        return iter(self.words)

    @cached_property
    def _word_set(self) -> frozenset:
        return frozenset(self.words)

    @cached_property
    def _getters(self):
        check_cap(self.n)
        return _getters(self.n)

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def puncture(self, X: int) -> set:
        """Distinct restrictions of the codewords to the positions in X."""
        g = self._getters[X]
        return {g(w) for w in self.words}

    def almost_affine_witness(self) -> Optional[tuple[int, int]]:
        return first_failing_mask(self.words, self.q, self.n, self._getters)

    def is_almost_affine(self) -> bool:
        return self.almost_affine_witness() is None

    @cached_property
    def matroid(self) -> Matroid:
        ranks = []
        for X in range(1 << self.n):
            size = len(self.puncture(X))
            r = exact_log(size, self.q)
            if r is None:
                raise NotAlmostAffine(X, size)
            ranks.append(r)
        return Matroid(self.n, tuple(ranks))

    @property
    def dimension(self) -> int:
        return self.matroid.rank_of_matroid

    def require_member(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        if len(w) != self.n:
            raise LengthMismatch(f"word {w} has length {len(w)}, expected {self.n}")
        if w not in self._word_set:
            raise WordNotInCode(f"{format_word(w, self.q)} is not a codeword")
        return w

    def degenerate_position(self) -> Optional[int]:
        for p in range(1, self.n + 1):
            if self.matroid.rank(1 << (p - 1)) == 0:
                return p
        return None

    def require_nondegenerate(self) -> None:
        p = self.degenerate_position()
        if p is not None:
            raise Degenerate(p)

    def format(self, w: Sequence[int]) -> str:
        return format_word(w, self.q)

    def to_text(self) -> str:
        lines = [f"q {self.q} n {self.n}"]
        lines += [" ".join(str(s) for s in w) for w in self.words]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"q": self.q, "n": self.n, "words": [list(w) for w in self.words]})


def parse_code_text(text: str) -> BlockCode:
    header = None
    words = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "q" or parts[2] != "n":
                raise ParseError("expected header 'q <int> n <int>'", lineno)
            try:
                header = (int(parts[1]), int(parts[3]))
            except ValueError:
                raise ParseError("header values must be integers", lineno) from None
            continue
        q, n = header
        try:
            w = tuple(int(t) for t in line.split())
        except ValueError:
            raise ParseError(f"non-integer symbol in {line!r}", lineno) from None
        if len(w) != n:
            raise ParseError(f"word has {len(w)} symbols, expected {n}", lineno)
        if any(not 0 <= s < q for s in w):
            raise ParseError(f"symbol outside 0..{q - 1}", lineno)
        if w in seen:
            raise ParseError(f"duplicate word {line!r}", lineno)
        seen.add(w)
        words.append(w)
    if header is None:
        raise ParseError("missing header line")
    if not words:
        raise ParseError("code has no words")
    return BlockCode(header[0], header[1], tuple(words))


def parse_code_json(text: str) -> BlockCode:
    try:
        data = json.loads(text)
        q, n = int(data["q"]), int(data["n"])
        words = [tuple(int(s) for s in w) for w in data["words"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad code JSON: {exc}") from None
    if len(set(words)) != len(words):
        raise ParseError("duplicate word in code JSON")
    if not words:
        raise ParseError("code has no words")
    for w in words:
        if len(w) != n or any(not 0 <= s < q for s in w):
            raise ParseError(f"word {list(w)} does not fit q={q}, n={n}")
    return BlockCode(q, n, tuple(words))


def load_code(text: str) -> BlockCode:
    if text.lstrip().startswith("{"):
        return parse_code_json(text)
    return parse_code_text(text)


# ---------------------------------------------------------------------------
# supports and subcodes


def support(c: Sequence[int], ref: Sequence[int]) -> int:
    if len(c) != len(ref):
        raise LengthMismatch(f"lengths {len(c)} and {len(ref)} differ")
    m = 0
    for i, (a, b) in enumerate(zip(c, ref)):
        if a != b:
            m |= 1 << i
    return m


def code_support(words: Iterable[Sequence[int]]) -> int:
    words = list(words)
    if not words:
        raise EmptyCode("support of an empty code")
    ref = words[0]
    m = 0
    for w in words:
        m |= support(w, ref)
    return m


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    return support(a, b).bit_count()


@dataclass(frozen=True)
class SubcodeHandle:
    """Selection of parent words; bit j of ``members`` picks ``parent.words[j]``."""

    parent: BlockCode
    members: int

    @property
    def words(self) -> list[Word]:
        return [w for j, w in enumerate(self.parent.words) if self.members >> j & 1]

    def __len__(self):
        return self.members.bit_count()

    @property
    def support(self) -> int:
        return code_support(self.words)

    def code(self) -> BlockCode:
        return BlockCode(self.parent.q, self.parent.n, tuple(self.words))


def _handle(C: BlockCode, words: Iterable[Word]) -> SubcodeHandle:
    index = {w: j for j, w in enumerate(C.words)}
    m = 0
    for w in words:
        m |= 1 << index[w]
    return SubcodeHandle(C, m)


def fixed_subcode(C: BlockCode, X: int, ref: Sequence[int], strict: bool = True) -> SubcodeHandle:
    """Codewords agreeing with ``ref`` on X.

    With ``strict`` the reference must be a codeword; otherwise any word of
    F^n is accepted and the result may be empty.
    """
    C.matroid
    ref = C.require_member(ref) if strict else tuple(ref)
    if len(ref) != C.n:
        raise LengthMismatch(f"reference has length {len(ref)}, expected {C.n}")
    g = C._getters[X]
    target = g(ref)
    return _handle(C, (w for w in C.words if g(w) == target))


def enumerate_subcodes(C: BlockCode, dim: int, budget: int = DEFAULT_BUDGET) -> list[SubcodeHandle]:
    """All almost affine subcodes with q**dim words, in combination order."""
    k = C.dimension
    if not 0 <= dim <= k:
        raise IndexOutOfRange(f"dimension {dim} not in 0..{k}")
    size = C.q**dim
    needed = comb(len(C), size)
    if needed > budget:
        raise EnumerationBudgetExceeded(needed, budget)
    getters = C._getters
    out = []
    for idx in combinations(range(len(C)), size):
        ws = [C.words[j] for j in idx]
        if first_failing_mask(ws, C.q, C.n, getters) is None:
            m = 0
            for j in idx:
                m |= 1 << j
            out.append(SubcodeHandle(C, m))
    return out


# ---------------------------------------------------------------------------
# generalized Hamming weights


def ghw_forms(C: BlockCode, ref: Optional[Sequence[int]] = None) -> tuple[list[int], list[int], list[int]]:
    """The three rank-side expressions for d_1..d_k, computed separately."""
    M = C.matroid
    n, k, E = C.n, M.rank_of_matroid, C.ground
    ref = C.words[0] if ref is None else C.require_member(ref)
    first, second, third = [], [], []
    sizes = [len(fixed_subcode(C, X, ref)) for X in range(1 << n)]
    for i in range(1, k + 1):
        first.append(min(X.bit_count() for X in range(1 << n) if M.rank(E & ~X) == k - i))
        second.append(n - max(X.bit_count() for X in range(1 << n) if M.rank(X) == k - i))
        third.append(n - max(X.bit_count() for X in range(1 << n) if sizes[X] == C.q**i))
    return first, second, third


def ghw_via_matroid(C: BlockCode, check_forms: bool = True) -> list[int]:
    weights = C.matroid.dual().hamming_weights()
    if check_forms:
        for form in ghw_forms(C):
            if form != weights:
                raise ConsistencyError(f"weight forms disagree: {form} vs {weights}")
    return weights


def ghw_via_subcodes(C: BlockCode, budget: int = DEFAULT_BUDGET) -> list[int]:
    k = C.dimension
    needed = sum(comb(len(C), C.q**i) for i in range(1, k + 1))
    if needed > budget:
        raise EnumerationBudgetExceeded(needed, budget)
    return [
        min(h.support.bit_count() for h in enumerate_subcodes(C, i, budget))
        for i in range(1, k + 1)
    ]


def minimal_codewords(C: BlockCode, ref: Sequence[int]) -> list[Word]:
    """Codewords whose ref-support is inclusion-minimal among nonempty supports."""
    ref = C.require_member(ref)
    sups = {w: support(w, ref) for w in C.words if w != ref}
    distinct = set(sups.values())
    minimal = {s for s in distinct if not any(t != s and t & s == t for t in distinct)}
    return [w for w, s in sups.items() if s in minimal]


def is_nonredundant(sets: Sequence[int]) -> bool:
    """Distinct sets whose union shrinks whenever any single member is dropped."""
    if len(set(sets)) != len(sets):
        return False
    full = 0
    for s in sets:
        full |= s
    for j in range(len(sets)):
        rest = 0
        for i, s in enumerate(sets):
            if i != j:
                rest |= s
        if rest == full:
            return False
    return True


def ghw_via_codewords(
    C: BlockCode,
    ref: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
    all_references: bool = False,
) -> list[int]:
    """Weights from unions of supports of ref-minimal non-redundant codewords.

    Non-redundancy needs distinct supports, so tuples range over the distinct
    supports of the minimal codewords.  ``all_references`` recomputes for every
    codeword as reference and insists on a single answer.
    """
    refs = C.words if all_references else [C.words[0] if ref is None else ref]
    results = set()
    for r in refs:
        results.add(tuple(_ghw_codewords_one(C, r, budget)))
    if len(results) != 1:
        raise ConsistencyError(f"weights depend on the reference word: {sorted(results)}")
    return list(results.pop())


def _ghw_codewords_one(C: BlockCode, ref, budget: int) -> list[int]:
    k = C.dimension
    sups = sorted({support(w, ref) for w in minimal_codewords(C, ref)})
    needed = sum(comb(len(sups), i) for i in range(1, k + 1))
    if needed > budget:
        raise EnumerationBudgetExceeded(needed, budget)
    out = []
    for i in range(1, k + 1):
        best = None
        for combo in combinations(sups, i):
            if not is_nonredundant(combo):
                continue
            u = 0
            for s in combo:
                u |= s
            size = u.bit_count()
            if best is None or size < best:
                best = size
        out.append(best)
    return out


def count_words_with_support(C: BlockCode, ref: Sequence[int], X: int) -> int:
    """Number of codewords whose ref-support is exactly X, by inclusion-exclusion."""
    C.require_member(ref)
    M = C.matroid
    k, E, q = M.rank_of_matroid, C.ground, C.q
    total = 0
    Y = X
    while True:
        sign = -1 if (X & ~Y).bit_count() % 2 else 1
        total += sign * q ** (k - M.rank(E & ~Y))
        if Y == 0:
            break
        Y = (Y - 1) & X
    return total


# ---------------------------------------------------------------------------
# critical exponents and Kung's bound


def critical_exponent_witness(C: BlockCode, i: int, ref: Optional[Sequence[int]] = None) -> list[Word]:
    """Fewest codewords whose ref-supports jointly cover at least i positions."""
    C.require_nondegenerate()
    if not 1 <= i <= C.n:
        raise IndexOutOfRange(f"index {i} not in 1..{C.n}")
    ref = C.words[0] if ref is None else C.require_member(ref)
    by_support: dict[int, Word] = {}
    for w in C.words:
        s = support(w, ref)
        if s and s not in by_support:
            by_support[s] = w
    # breadth-first over reachable unions; parents give back a witness
    parent: dict[int, tuple[int, int]] = {0: (None, None)}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for s in by_support:
                v = u | s
                if v in parent:
                    continue
                parent[v] = (u, s)
                if v.bit_count() >= i:
                    out = []
                    while v:
                        v, s2 = parent[v]
                        out.append(by_support[s2])
                    return sorted(out)
                nxt.append(v)
        frontier = nxt
    raise AssertionError("non-degenerate code must cover every position")


def critical_exponent(C: BlockCode, i: int, ref: Optional[Sequence[int]] = None) -> int:
    return len(critical_exponent_witness(C, i, ref))


@dataclass(frozen=True)
class KungRow:
    i: int
    gamma: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.gamma <= self.bound


def singleton_defects(C: BlockCode) -> list[int]:
    """s*_j = k + j - d*_j for j = 1..n-k, with d*_j the weights of M_C itself."""
    k = C.dimension
    return [k + j - d for j, d in enumerate(C.matroid.hamming_weights(), 1)]


def kung_bound_report(C: BlockCode) -> list[KungRow]:
    C.require_nondegenerate()
    n, k = C.n, C.dimension
    defects = singleton_defects(C)
    return [
        KungRow(i, critical_exponent(C, i), defects[n + 1 - i - 1] + 2)
        for i in range(k + 1, n + 1)
    ]


# ---------------------------------------------------------------------------
# profiles and access structures


def dlp(C: BlockCode) -> list[int]:
    """Dimension/length profile k_1..k_n."""
    M, n = C.matroid, C.n
    k = M.rank_of_matroid
    low = [None] * (n + 1)
    for X in range(1 << n):
        s = X.bit_count()
        if low[s] is None or M.rank(X) < low[s]:
            low[s] = M.rank(X)
    return [k - low[n - i] for i in range(1, n + 1)]


def access_structure(C: BlockCode) -> tuple[list[int], bool]:
    """Minimal authorized sets over participants 2..n and matroid connectivity."""
    C.require_nondegenerate()
    M = C.matroid
    gamma0 = [X & ~1 for X in M.circuits() if X & 1]
    return sorted(gamma0), M.is_connected()


# ---------------------------------------------------------------------------
# equivalence


@dataclass(frozen=True)
class Equivalence:
    """Word w of the first code maps to w' with w'[sigma[i]] = taus[i][w[i]] (0-based)."""

    sigma: tuple[int, ...]
    taus: tuple[tuple[int, ...], ...]


@dataclass
class EquivalenceResult:
    witness: Optional[Equivalence]
    exhaustive: bool
    nodes: int = field(default=0)


def apply_equivalence(C: BlockCode, eq: Equivalence, q: Optional[int] = None) -> BlockCode:
    out = []
    for w in C.words:
        v = [0] * C.n
        for i, s in enumerate(w):
            v[eq.sigma[i]] = eq.taus[i][s]
        out.append(tuple(v))
    return BlockCode(q or C.q, C.n, tuple(out))


def _column_profile(C: BlockCode, j: int) -> tuple[int, ...]:
    return tuple(sorted(Counter(w[j] for w in C.words).values()))


def are_equivalent(C1: BlockCode, C2: BlockCode, budget: int = 10**6) -> EquivalenceResult:
    """Backtracking search for a column permutation plus per-column symbol bijections.

    Column permutations are pruned on per-column symbol frequencies and on
    matroid ranks of assigned columns.  For each surviving permutation the
    words of C1 are matched to words of C2 one at a time (most constrained
    word first), which fixes the symbol bijections as it goes.  ``exhaustive``
    is True when the search space was fully explored (or trivially refuted).
    """
    if C1.n != C2.n or C1.q != C2.q or len(C1) != len(C2):
        return EquivalenceResult(None, True)
    n, q = C1.n, C1.q
    try:
        r1, r2 = C1.matroid, C2.matroid
    except NotAlmostAffine:
        r1 = r2 = None
    prof1 = [_column_profile(C1, j) for j in range(n)]
    prof2 = [_column_profile(C2, j) for j in range(n)]
    if sorted(prof1) != sorted(prof2):
        return EquivalenceResult(None, True)
    words1, words2 = C1.words, C2.words
    nodes = 0
    out_of_budget = False
    sigma: list = [None] * n

    def tick() -> bool:
        nonlocal nodes, out_of_budget
        nodes += 1
        if nodes > budget:
            out_of_budget = True
        return out_of_budget

    def ranks_match(depth: int) -> bool:
        if r1 is None:
            return True
        j = depth - 1
        for sub in range(1 << j):
            X = sub | 1 << j
            Y = 0
            for i in range(depth):
                if X >> i & 1:
                    Y |= 1 << sigma[i]
            if r1.rank(X) != r2.rank(Y):
                return False
        return True

    def match_words():
        # tau[i] maps symbols of C1 column i to symbols of C2 column sigma[i]
        tau = [dict() for _ in range(n)]
        image = [set() for _ in range(n)]
        used = [False] * len(words2)
        pending = set(range(len(words1)))

        def fits(w, v):
            for i in range(n):
                a, b = w[i], v[sigma[i]]
                got = tau[i].get(a)
                if got is None:
                    if b in image[i]:
                        return False
                elif got != b:
                    return False
            return True

        def rec() -> bool:
            if not pending:
                return True
            j = max(pending, key=lambda x: (sum(words1[x][i] in tau[i] for i in range(n)), -x))
            w = words1[j]
            pending.discard(j)
            for jv, v in enumerate(words2):
                if used[jv] or not fits(w, v):
                    continue
                if tick():
                    break
                added = []
                for i in range(n):
                    if w[i] not in tau[i]:
                        tau[i][w[i]] = v[sigma[i]]
                        image[i].add(v[sigma[i]])
                        added.append(i)
                used[jv] = True
                if rec():
                    return True
                used[jv] = False
                for i in added:
                    image[i].discard(tau[i].pop(w[i]))
            pending.add(j)
            return False

        if not rec():
            return None
        full = []
        for i in range(n):
            t = dict(tau[i])
            spare = iter(sorted(set(range(q)) - set(t.values())))
            for a in range(q):
                if a not in t:
                    t[a] = next(spare)
            full.append(tuple(t[a] for a in range(q)))
        return tuple(full)

    def search(depth: int):
        if depth == n:
            return match_words()
        for t in range(n):
            if t in sigma[:depth] or prof1[depth] != prof2[t]:
                continue
            sigma[depth] = t
            if ranks_match(depth + 1):
                found = search(depth + 1)
                if found is not None:
                    return found
            sigma[depth] = None
            if out_of_budget:
                return None
        return None

    taus = search(0)
    if taus is not None:
        return EquivalenceResult(Equivalence(tuple(sigma), taus), False, nodes)
    return EquivalenceResult(None, not out_of_budget, nodes)
