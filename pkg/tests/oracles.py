"""Brute-force reference computations, independent of the library algorithms."""


def brute_circuits(M):
    dep = [X for X in range(1 << M.n) if M.rank(X) < X.bit_count()]
    return sorted(X for X in dep if not any(Y != X and Y & X == Y for Y in dep))


def brute_bases(M):
    k = M.rank(M.ground)
    return sorted(X for X in range(1 << M.n) if X.bit_count() == k == M.rank(X))


def brute_weights(M):
    top = M.n - M.rank(M.ground)
    return [min(X.bit_count() for X in range(1 << M.n) if M.nullity(X) == i) for i in range(1, top + 1)]


def max_nonredundant_family(circs):
    """Largest family in which every member keeps a private element (DFS, pruned)."""
    best = 0

    def privates_ok(fam):
        for i, S in enumerate(fam):
            others = 0
            for j, T in enumerate(fam):
                if j != i:
                    others |= T
            if not S & ~others:
                return False
        return True

    def dfs(start, fam):
        nonlocal best
        best = max(best, len(fam))
        if len(fam) + len(circs) - start <= best:
            return
        for i in range(start, len(circs)):
            cand = fam + [circs[i]]
            if privates_ok(cand):
                dfs(i + 1, cand)

    dfs(0, [])
    return best


def nonredundant_circuits_hold(M):
    """Nullity of every X equals the largest non-redundant family of circuits inside X."""
    circs = brute_circuits(M)
    for X in range(1 << M.n):
        inside = [C for C in circs if C & X == C]
        count, witness = M.max_nonredundant_circuits(X)
        if not count == M.nullity(X) == max_nonredundant_family(inside) == len(witness):
            return False
        if not all(C in inside for C in witness):
            return False
    return True


def wei_holds(M):
    """The weights of M and of its dual, reflected, split {1..n} into two disjoint sets."""
    n = M.n
    d = brute_weights(M.dual())
    dd = {n + 1 - x for x in brute_weights(M)}
    return not set(d) & dd and set(d) | dd == set(range(1, n + 1))


def brute_nearest(C, r):
    dist = {x: sum(a != b for a, b in zip(x, r)) for x in C.words}
    best = min(dist.values())
    return sorted(x for x, d in dist.items() if d == best), best


def brute_count(C, ref, X):
    """Codewords whose positions of disagreement with ref are exactly X."""
    total = 0
    for x in C.words:
        m = 0
        for i, (a, b) in enumerate(zip(x, ref)):
            if a != b:
                m |= 1 << i
        total += m == X
    return total
