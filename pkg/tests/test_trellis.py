import json
import random
from itertools import product

import pytest

from aaco.code import BlockCode, dlp
from aaco.constructions import running_example_cprime
from aaco.errors import AlphabetMismatch, LengthMismatch
from aaco.trellis import build_min_trellis, nearest_codewords, vertex_bound_report, viterbi_decode

from corpus import corpus
from oracles import brute_nearest

CP = running_example_cprime()


def w(s):
    return tuple(int(c) for c in s)


def test_cprime_layers():
    T = build_min_trellis(CP)
    assert T.layer_sizes == [1, 4, 4, 1]
    cls = [c for c in T.classes[2] if w("00") in c]
    assert len(cls) == 1
    assert set(cls[0]) == {w("00"), w("31"), w("22"), w("13")}


def test_single_word_is_path():
    T = build_min_trellis(BlockCode.of(3, [w("120")]))
    assert T.layer_sizes == [1, 1, 1, 1]
    assert T.paths() == [w("120")]


def test_full_space_parallel_edges():
    C = BlockCode.of(3, product(range(3), repeat=2))
    T = build_min_trellis(C)
    assert T.layer_sizes == [1, 1, 1]
    assert all(len(layer) == 3 for layer in T.edges)


def test_structure_on_corpus():
    for C in corpus():
        if len(C) > 400:
            continue
        T = build_min_trellis(C)
        assert T.is_proper()
        paths = T.paths()
        assert len(paths) == len(set(paths)) == len(C)
        assert sorted(paths) == list(C.words)
        sizes = T.layer_sizes
        assert sizes[0] == sizes[-1] == 1
        for i in range(1, C.n):
            outs = {f for f, _, _ in T.edges[i]}
            ins = {t for _, t, _ in T.edges[i - 1]}
            assert outs == ins == set(range(sizes[i]))


def test_layer_sizes_independent_recount():
    for C in corpus():
        if len(C) > 400:
            continue
        T = build_min_trellis(C)
        for i in range(C.n + 1):
            futures = {}
            for x in C.words:
                futures.setdefault(x[:i], set()).add(x[i:])
            assert T.layer_sizes[i] == len({frozenset(s) for s in futures.values()})


def test_viterbi_cprime_example():
    T = build_min_trellis(CP)
    got = viterbi_decode(T, w("322"))
    assert got == [w("022"), w("321"), w("332")]
    assert nearest_codewords(CP, w("322")) == (got, 1)


def test_viterbi_codeword_received():
    T = build_min_trellis(CP)
    assert viterbi_decode(T, w("123")) == [w("123")]


def test_viterbi_exhaustive_cprime():
    T = build_min_trellis(CP)
    for r in product(range(4), repeat=3):
        words, _ = brute_nearest(CP, r)
        assert viterbi_decode(T, r) == words


def test_viterbi_random_words_on_corpus_codes():
    rng = random.Random(17)
    pool = [C for C in corpus() if 8 <= len(C) <= 400 and C.n >= 4]
    codes = rng.sample(pool, 5)
    for C in codes:
        T = build_min_trellis(C)
        for _ in range(200):
            r = tuple(rng.randrange(C.q) for _ in range(C.n))
            assert viterbi_decode(T, r) == brute_nearest(C, r)[0]


def test_viterbi_errors():
    T = build_min_trellis(CP)
    with pytest.raises(LengthMismatch):
        viterbi_decode(T, w("12"))
    with pytest.raises(AlphabetMismatch):
        viterbi_decode(T, w("124"))


def test_vertex_bound_cprime():
    rows = vertex_bound_report(CP, build_min_trellis(CP))
    row = rows[1]
    assert (row.vertices, row.bound, row.log_vertices) == (4, 1, 1.0)
    assert rows[0].bound == 2 - 0 - dlp(CP)[-1] == 0
    assert all(r.holds for r in rows)


def test_vertex_bound_on_corpus():
    for C in corpus():
        if len(C) > 400:
            continue
        rows = vertex_bound_report(C, build_min_trellis(C))
        assert len(rows) == C.n + 1
        assert all(r.holds for r in rows)


def test_trellis_json():
    data = json.loads(build_min_trellis(CP).to_json())
    assert [len(layer) for layer in data["layers"]] == [1, 4, 4, 1]
    assert len(data["edges"]) == 4 + 16 + 4
