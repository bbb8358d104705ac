"""Command-line entry point: ``aaco <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import code as cd
from . import constructions as cons
from .errors import AacoError, EnumerationBudgetExceeded, ParseError
from .field import FiniteField
from .matroid import Matroid, format_mask, positions, uniform
from .trellis import build_min_trellis, vertex_bound_report, viterbi_decode
from .wiretap import decode, encode, equivocation_profile, make_scheme


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_code(path: str) -> cd.BlockCode:
    return cd.load_code(_read(path))


def _load_code_or_matroid(path: str):
    text = _read(path)
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except ValueError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        if "rank" in data:
            return Matroid.from_json(text)
    return cd.load_code(text)


def _rows(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(x) for x in row.split()) for row in text.split(";") if row.strip())
    except ValueError:
        raise ParseError(f"bad matrix {text!r}; use rows like '1 0 1;0 1 1'") from None


def _field(q: int, modulus: Optional[str]) -> FiniteField:
    mod = tuple(int(x) for x in modulus.split()) if modulus else None
    return FiniteField.of(q, mod)


def _masks(ms) -> list[str]:
    return [format_mask(m) for m in ms]


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _emit_code(args, C: cd.BlockCode) -> None:
    if args.json:
        print(C.to_json())
    else:
        sys.stdout.write(C.to_text())


# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    C = _load_code(args.code)
    bad = C.almost_affine_witness()
    if bad is None:
        k = C.dimension
        _emit(args, f"almost affine: q={C.q} n={C.n} k={k} words={len(C)}",
              {"almost_affine": True, "q": C.q, "n": C.n, "k": k, "words": len(C)})
        return 0
    X, size = bad
    _emit(args, f"not almost affine: |C_X| = {size} on X = {format_mask(X)}",
          {"almost_affine": False, "witness": positions(X),
           "puncture_size": size})
    return 1


def cmd_matroid(args) -> int:
    M = _load_code(args.code).matroid
    circuits, bases = M.circuits(), M.bases()
    text = "\n".join([
        f"n = {M.n}, rank = {M.rank_of_matroid}",
        "circuits: " + (" ".join(_masks(circuits)) or "none"),
        "bases: " + " ".join(_masks(bases)),
        f"connected: {'yes' if M.is_connected() else 'no'}",
    ])
    _emit(args, text, {"n": M.n, "rank": list(M.ranks),
                       "circuits": [positions(c) for c in circuits],
                       "bases": [positions(b) for b in bases]})
    return 0


def _fmt_weights(name: str, ws: Sequence[int]) -> str:
    if not ws:
        return f"{name}: none"
    return ", ".join(f"{name}_{i} = {d}" for i, d in enumerate(ws, 1))


def cmd_weights(args) -> int:
    C = _load_code(args.code)
    routes = {"matroid": cd.ghw_via_matroid(C)}
    for name, fn in (("subcodes", cd.ghw_via_subcodes), ("codewords", cd.ghw_via_codewords)):
        try:
            routes[name] = fn(C, budget=args.budget)
        except EnumerationBudgetExceeded:
            routes[name] = None
    computed = [w for w in routes.values() if w is not None]
    agree = all(w == computed[0] for w in computed)
    dual = C.matroid.hamming_weights()
    lines = [_fmt_weights("d", routes["matroid"])]
    for name, w in routes.items():
        lines.append(f"  {name:9s} {'skipped (budget)' if w is None else ' '.join(map(str, w))}")
    lines.append(f"routes agree: {'yes' if agree else 'NO'}")
    lines.append(_fmt_weights("d*", dual))
    _emit(args, "\n".join(lines),
          {"weights": routes["matroid"], "routes": routes, "agree": agree, "dual_weights": dual})
    return 0 if agree else 1


def cmd_dlp(args) -> int:
    C = _load_code(args.code)
    prof = cd.dlp(C)
    _emit(args, ", ".join(f"k_{i} = {v}" for i, v in enumerate(prof, 1)), {"dlp": prof})
    return 0


def cmd_subcodes(args) -> int:
    C = _load_code(args.code)
    subs = cd.enumerate_subcodes(C, args.dim, budget=args.budget)
    lines = [f"{len(subs)} almost affine subcodes of dimension {args.dim}"]
    for h in subs:
        lines.append(" ".join(C.format(w) for w in h.words) + f"  support {format_mask(h.support)}")
    _emit(args, "\n".join(lines), {
        "dim": args.dim, "count": len(subs),
        "subcodes": [{"words": [list(w) for w in h.words], "support": positions(h.support)} for h in subs],
    })
    return 0


def cmd_kung(args) -> int:
    C = _load_code(args.code)
    rows = cd.kung_bound_report(C)
    lines = ["   i  gamma_i  s*_{n+1-i}+2  holds"]
    for r in rows:
        lines.append(f"{r.i:4d} {r.gamma:8d} {r.bound:13d}  {'yes' if r.holds else 'NO'}")
    if not rows:
        lines.append("(no rows: k = n)")
    _emit(args, "\n".join(lines),
          {"rows": [{"i": r.i, "gamma": r.gamma, "bound": r.bound, "holds": r.holds} for r in rows]})
    return 0 if all(r.holds for r in rows) else 1


def cmd_access(args) -> int:
    C = _load_code(args.code)
    gamma0, connected = cd.access_structure(C)
    text = "Gamma_0: " + (" ".join(_masks(gamma0)) or "none") + f"\nconnected: {'yes' if connected else 'no'}"
    _emit(args, text, {"gamma0": [positions(a) for a in gamma0], "connected": connected})
    return 0


def cmd_equiv(args) -> int:
    C1, C2 = _load_code(args.code1), _load_code(args.code2)
    res = cd.are_equivalent(C1, C2, budget=args.budget)
    if res.witness is not None:
        sig = " ".join(str(s + 1) for s in res.witness.sigma)
        taus = "; ".join(" ".join(map(str, t)) for t in res.witness.taus)
        text = f"equivalent\nsigma: {sig}\ntau: {taus}"
        payload = {"equivalent": True, "sigma": [s + 1 for s in res.witness.sigma],
                   "taus": [list(t) for t in res.witness.taus]}
    else:
        text = "not equivalent (exhaustive search)" if res.exhaustive else "no witness found within budget"
        payload = {"equivalent": False if res.exhaustive else None, "exhaustive": res.exhaustive}
    _emit(args, text, payload)
    return 0


def cmd_trellis(args) -> int:
    C = _load_code(args.code)
    T = build_min_trellis(C)
    if args.action == "build":
        rows = vertex_bound_report(C, T)
        lines = ["   i  |V_i|  log_q|V_i|  k-k_i-k_{n-i}  holds"]
        for r in rows:
            lines.append(f"{r.i:4d} {r.vertices:6d} {r.log_vertices:11.4f} {r.bound:14d}  {'yes' if r.holds else 'NO'}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(T.to_json() + "\n")
        elif not args.json:
            lines.append(T.to_json())
        _emit(args, "\n".join(lines), {
            "layer_sizes": T.layer_sizes,
            "bound": [{"i": r.i, "vertices": r.vertices, "bound": r.bound, "holds": r.holds} for r in rows],
            "trellis": json.loads(T.to_json()),
        })
        return 0
    if args.word is None:
        raise ParseError("trellis decode needs a received word")
    received = cd.parse_word(args.word, C.q, C.n)
    words = viterbi_decode(T, received)
    dist = cd.hamming_distance(words[0], received)
    _emit(args, " ".join(C.format(w) for w in words) + f" (distance {dist})",
          {"words": [list(w) for w in words], "distance": dist})
    return 0


def cmd_wiretap(args) -> int:
    C = _load_code(args.code)
    scheme = make_scheme(C)
    if args.action == "encode":
        if args.seed is None:
            raise ParseError("wiretap encode requires --seed")
        m = cd.parse_word(args.value or "", C.q, scheme.message_length) if scheme.message_length else ()
        t = encode(scheme, m, args.seed)
        _emit(args, C.format(t), {"message": list(m), "word": list(t), "seed": args.seed})
        return 0
    if args.action == "decode":
        t = cd.parse_word(args.value or "", C.q, C.n)
        m = decode(scheme, t)
        _emit(args, C.format(m) if m else "(empty message)", {"word": list(t), "message": list(m)})
        return 0
    rows = equivocation_profile(scheme)
    lines = [f"# n={C.n} k={scheme.k}; conventions d*_0 = 0, d*_{scheme.message_length + 1} = {C.n + 1}",
             "  mu  E_mu  Delta_mu  bracket"]
    for r in rows:
        lines.append(f"{r.mu:4d} {r.equivocation:5d} {r.delta:9d}  "
                     f"d*_{r.delta}={r.lower} <= {r.mu} < d*_{r.delta + 1}={r.upper}"
                     f"{'' if r.holds else '  VIOLATED'}")
    _emit(args, "\n".join(lines), {
        "n": C.n, "k": scheme.k,
        "rows": [{"mu": r.mu, "E": r.equivocation, "delta": r.delta, "lower": r.lower,
                  "upper": r.upper, "holds": r.holds} for r in rows],
    })
    return 0 if all(r.holds for r in rows) else 1


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "cprime":
        _emit_code(args, cons.running_example_cprime())
    elif kind == "uniform":
        print(uniform(args.r, args.n).to_json())
    elif kind == "linear":
        G = cons.GeneratorMatrix(_field(args.q, args.modulus), _rows(args.rows))
        _emit_code(args, cons.linear_code(G))
    elif kind == "interleave":
        G = cons.GeneratorMatrix(_field(args.q, args.modulus), _rows(args.rows))
        _emit_code(args, cons.interleave(G, args.r))
    elif kind == "rs":
        G = cons.reed_solomon(_field(args.q, args.modulus), args.gamma, args.k)
        _emit_code(args, cons.linear_code(G))
    elif kind == "frs":
        _emit_code(args, cons.folded_rs(_field(args.q, args.modulus), args.gamma, args.r, args.k))
    return 0


def cmd_dual(args) -> int:
    if args.multilinear:
        if args.q is None or args.r is None:
            raise ParseError("dual --multilinear needs --q and --r")
        C = _load_code(args.source)
        _emit_code(args, cons.multilinear_dual(C, _field(args.q, args.modulus), args.r))
        return 0
    obj = _load_code_or_matroid(args.source)
    M = obj if isinstance(obj, Matroid) else obj.matroid
    print(M.dual().to_json())
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="aaco", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "check the almost affine property").add_argument("code")
    add("matroid", cmd_matroid, "rank table, circuits and bases").add_argument("code")
    sp = add("weights", cmd_weights, "generalized Hamming weights by three routes")
    sp.add_argument("code")
    sp.add_argument("--budget", type=int, default=cd.DEFAULT_BUDGET)
    add("dlp", cmd_dlp, "dimension/length profile").add_argument("code")
    sp = add("subcodes", cmd_subcodes, "enumerate almost affine subcodes")
    sp.add_argument("code")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--budget", type=int, default=cd.DEFAULT_BUDGET)
    add("kung", cmd_kung, "critical exponents against the Kung-type bound").add_argument("code")
    add("access", cmd_access, "access structure read off the matroid").add_argument("code")
    sp = add("equiv", cmd_equiv, "search for a code equivalence")
    sp.add_argument("code1")
    sp.add_argument("code2")
    sp.add_argument("--budget", type=int, default=10**6)

    sp = add("trellis", cmd_trellis, "minimal trellis and Viterbi decoding")
    sp.add_argument("action", choices=["build", "decode"])
    sp.add_argument("code")
    sp.add_argument("word", nargs="?")
    sp.add_argument("--out")

    sp = add("wiretap", cmd_wiretap, "coset scheme for the wiretap channel II")
    sp.add_argument("action", choices=["encode", "decode", "profile"])
    sp.add_argument("code")
    sp.add_argument("value", nargs="?", help="message (encode) or received word (decode)")
    sp.add_argument("--seed", type=int)

    sp = add("construct", cmd_construct, "emit a constructed code")
    sp.add_argument("kind", choices=["cprime", "linear", "rs", "frs", "interleave", "uniform"])
    sp.add_argument("--q", type=int)
    sp.add_argument("--modulus", help="irreducible polynomial coefficients, low degree first")
    sp.add_argument("--rows", help="generator rows, e.g. '1 0 1;0 1 1'")
    sp.add_argument("--gamma", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--n", type=int)

    sp = add("dual", cmd_dual, "dual matroid, or multilinear dual code")
    sp.add_argument("source")
    sp.add_argument("--multilinear", action="store_true")
    sp.add_argument("--q", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--modulus")
    return p


_REQUIRED = {
    "linear": ("q", "rows"),
    "interleave": ("q", "rows", "r"),
    "rs": ("q", "gamma", "k"),
    "frs": ("q", "gamma", "r", "k"),
    "uniform": ("r", "n"),
    "cprime": (),
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        missing = [f"--{a}" for a in _REQUIRED[args.kind] if getattr(args, a) is None]
        if missing:
            parser.error(f"construct {args.kind} needs {' '.join(missing)}")
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except (AacoError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
