"""Command-line interface: `codata <group> <verb> ...`.

Exit codes: 0 on success, 1 when a law check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coalgebra as K
from . import comonad as C
from . import stream as S
from . import tri as T
from .harness import GenConfig, default_seed, run_all_laws
from .lazy import PairValue

STREAM_FIXTURES = {
    "nats": S.nats,
    "constant": lambda: S.constant(7),
    "parity": lambda: S.from_function(lambda i: i % 2),
    "pairs": lambda: S.from_function(lambda i: PairValue(i, 10 * i)),
}

TRI_FIXTURES = {
    "constant": lambda: T.constant_tri(0, 1),
    "position": T.position_matrix,
}

STREAM_FNS = {
    "head": S.shead,
    "sum2": lambda s: S.shead(s) + S.shead(S.stail(s)),
}

TRI_FNS = {
    "head": T.counit,
    "core_plus1": lambda t: T.thead(t).core + 1,
    "next_core": lambda t: T.thead(T.cut(T.ttail(t))).core,
}

STREAM_COALGEBRAS = {
    "stream": (K.terminal_stream_coalgebra, "stream"),
    "stream-double": (lambda: K.stream_coalgebra(C.stream_comonad(), lambda s: S.stail(S.stail(s)),
                                                 "stream,stail;stail"), "stream"),
    "tri-diag": (K.tri_diagonal_coalgebra, "tri"),
}

TRI_COALGEBRAS = {
    "tri": (K.terminal_tri_coalgebra, 0),
    "product": (K.product_tri_coalgebra, 1),
}


class UsageError(Exception):
    pass


def _stream_fixture(name):
    try:
        return STREAM_FIXTURES[name]()
    except KeyError:
        raise UsageError(f"unknown stream fixture {name!r}; choose from {sorted(STREAM_FIXTURES)}")


def _tri_fixture(name):
    try:
        return TRI_FIXTURES[name]()
    except KeyError:
        raise UsageError(f"unknown tri fixture {name!r}; choose from {sorted(TRI_FIXTURES)}")


def _emit(payload, as_json, text=None):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text if text is not None else payload)


def _emit_triangle(tri_value, n, as_json):
    fin = T.truncate(n, tri_value)
    if as_json:
        _emit(fin.to_json(), True)
        return
    for j, layer in enumerate(fin.layers):
        print(f"{j:>3}  prefix={list(layer.prefix)!r:<40} core={layer.core!r}")


def cmd_stream_take(args):
    out = S.stake(args.n, _stream_fixture(args.fixture))
    _emit(out, args.json, repr(out))


def cmd_stream_redec(args):
    out = S.stake(args.n, S.sredec(STREAM_FNS[args.fn], _stream_fixture(args.fixture)))
    _emit(out, args.json, repr(out))


def cmd_tri_truncate(args):
    _emit_triangle(_tri_fixture(args.fixture), args.n, args.json)


def cmd_tri_redec(args):
    _emit_triangle(T.redec(TRI_FNS[args.fn], _tri_fixture(args.fixture)), args.n, args.json)


def cmd_tri_diag(args):
    out = S.stake(args.n, T.diag(_tri_fixture(args.fixture)))
    _emit(out, args.json, repr(out))


def cmd_terminal_stream(args):
    make, carrier = STREAM_COALGEBRAS[args.coalg]
    x = _stream_fixture(args.fixture) if carrier == "stream" else _tri_fixture(args.fixture)
    out = S.stake(args.n, K.terminal_to_stream(make(), x))
    _emit(out, args.json, repr(out))


def cmd_terminal_tri(args):
    make, wraps = TRI_COALGEBRAS[args.coalg]
    x = _tri_fixture(args.fixture)
    for _ in range(wraps):
        x = T.ttail(x)
    _emit_triangle(K.terminal_to_tri(make(), x), args.n, args.json)


def cmd_laws(args):
    cfg = GenConfig(depth=args.depth, samples=args.samples, seed=args.seed, mutations=args.mutations)
    report = run_all_laws(cfg)
    if args.json:
        print(report.to_json())
    else:
        print(report)
    return 0 if report.ok else 1


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="codata", description="Streams, triangular matrices and their laws.")
    groups = parser.add_subparsers(dest="group", required=True)

    def common(p, fixtures, default_fixture, n=5):
        p.add_argument("--fixture", choices=sorted(fixtures), default=default_fixture)
        p.add_argument("-n", type=_nonneg, default=n, help="observation depth")
        p.add_argument("--json", action="store_true")

    stream = groups.add_parser("stream").add_subparsers(dest="verb", required=True)
    p = stream.add_parser("take", help="first n elements of a fixture stream")
    common(p, STREAM_FIXTURES, "nats")
    p.set_defaults(func=cmd_stream_take)
    p = stream.add_parser("redec", help="stream cosubstitution with a named observation")
    common(p, STREAM_FIXTURES, "nats")
    p.add_argument("--fn", choices=sorted(STREAM_FNS), default="sum2")
    p.set_defaults(func=cmd_stream_redec)

    tri = groups.add_parser("tri").add_subparsers(dest="verb", required=True)
    p = tri.add_parser("truncate", help="first n layers of a fixture matrix")
    common(p, TRI_FIXTURES, "position", 4)
    p.set_defaults(func=cmd_tri_truncate)
    p = tri.add_parser("redec", help="redecoration with a named observation")
    common(p, TRI_FIXTURES, "position", 4)
    p.add_argument("--fn", choices=sorted(TRI_FNS), default="core_plus1")
    p.set_defaults(func=cmd_tri_redec)
    p = tri.add_parser("diag", help="diagonal stream")
    common(p, TRI_FIXTURES, "position")
    p.set_defaults(func=cmd_tri_diag)

    terminal = groups.add_parser("terminal").add_subparsers(dest="verb", required=True)
    p = terminal.add_parser("stream", help="terminal map into streams")
    common(p, {**STREAM_FIXTURES, **TRI_FIXTURES}, "nats")
    p.add_argument("--coalg", choices=sorted(STREAM_COALGEBRAS), default="stream")
    p.set_defaults(func=cmd_terminal_stream)
    p = terminal.add_parser("tri", help="terminal map into triangular matrices")
    common(p, TRI_FIXTURES, "position", 4)
    p.add_argument("--coalg", choices=sorted(TRI_COALGEBRAS), default="tri")
    p.set_defaults(func=cmd_terminal_tri)

    p = groups.add_parser("laws", help="run the law suite")
    p.add_argument("--depth", type=_nonneg, default=10)
    p.add_argument("--samples", type=_nonneg, default=100)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=default_seed())
    p.add_argument("--mutations", action="store_true", help="also run the documented sabotaged instances")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_laws)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"codata: error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
