"""Command-line front end.

Quasi-posets are given as ``"n: i<j k~l ..."`` (vertices from 1), packed
words as ``(122)`` or ``122``.  Exit status: 0 on success, 1 when a
verification suite fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from . import characters as ch
from . import hopf
from . import wqsym as wq
from .cache import ValueCache
from .ehrhart import CountMode, bernoulli, ehr_polynomial, faulhaber
from .errors import QPError
from .linear import LinComb, render_text, to_json
from .poly import Polynomial
from .qposet import enumerate_qp, parse_qp, to_text
from .verify import SUITES, run_suite
from .words import parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHARACTERS = {"lambda": ch.LAMBDA, "alpha": ch.ALPHA, "alpha-str": ch.ALPHA_STR,
              "beta": ch.BETA, "iota": ch.IOTA, "eps-prime": ch.EPS_PRIME}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _typed(parse, what: str):
    def conv(text: str):
        try:
            return parse(text)
        except (QPError, ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"bad {what} {text!r}: {exc}") from None
    conv.__name__ = what
    return conv


_qp_arg = _typed(parse_qp, "quasi-poset")
_word_arg = _typed(parse_word, "packed word")
_frac_arg = _typed(Fraction, "rational")


def _global_options(p: argparse.ArgumentParser, top: bool) -> None:
    kw = {} if top else {"default": argparse.SUPPRESS}
    p.add_argument("--format", choices=("text", "json"), **({"default": "text"} if top else kw),
                   help="output format")
    p.add_argument("--cache", metavar="PATH", **({"default": os.environ.get("QPEHR_CACHE")}
                                                 if top else kw),
                   help="persistent value cache (default: $QPEHR_CACHE)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qpehr", description="Quasi-posets, Ehrhart polynomials and packed words.")
    parser.add_argument("--version", action="version", version=f"qpehr {__version__}")
    _global_options(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        _global_options(p, top=False)
        return p

    for name in ("ehr", "ehr-str"):
        p = add(name, help=f"{'strict ' if name == 'ehr-str' else ''}Ehrhart polynomial")
        p.add_argument("qp", type=_qp_arg)
        p.add_argument("--classical", action="store_true", help="shift to p(X+1)")
        p.add_argument("--eval", type=_frac_arg, metavar="K", help="evaluate at K")

    p = add("coproduct", help="topology (Delta) or extraction-contraction (delta) coproduct")
    p.add_argument("kind", choices=("Delta", "delta"))
    p.add_argument("qp", type=_qp_arg)

    p = add("char", help="value of a named character")
    p.add_argument("name", choices=tuple(CHARACTERS))
    p.add_argument("qp", type=_qp_arg)
    p.add_argument("--inverse", action="store_true", help="use the convolution inverse")

    p = add("theta", help="sum of all compatible contractions")
    p.add_argument("qp", type=_qp_arg)
    p.add_argument("--inverse", action="store_true")

    p = add("antipode", help="antipode for the topology coproduct")
    p.add_argument("qp", type=_qp_arg)

    p = add("wqsym", help="packed-word operations")
    wsub = p.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("ehr", "ehr-str"):
        q = wsub.add_parser(name)
        q.add_argument("qp", type=_qp_arg)
    q = wsub.add_parser("phi")
    q.add_argument("lam", type=_frac_arg, metavar="LAMBDA")
    q.add_argument("word", type=_word_arg)
    q = wsub.add_parser("product")
    q.add_argument("u", type=_word_arg)
    q.add_argument("v", type=_word_arg)
    for name in ("coproduct", "internal"):
        q = wsub.add_parser(name)
        q.add_argument("word", type=_word_arg)

    p = add("enumerate", help="list quasi-posets (qp) or posets (p) on N points")
    p.add_argument("kind", choices=("qp", "p"))
    p.add_argument("n", type=int)
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")

    p = add("bernoulli", help="Bernoulli number b_K (b_1 = -1/2)")
    p.add_argument("k", type=int)
    p = add("faulhaber", help="polynomial S_K with S_K(n) = 1^K + ... + (n-1)^K")
    p.add_argument("k", type=int)

    p = add("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-n", type=int, default=None)
    return parser


# -- rendering ---------------------------------------------------------------------------

def _emit_value(v, fmt: str) -> str:
    return json.dumps({"value": str(v)}) if fmt == "json" else str(v)


def _emit_poly(p: Polynomial, fmt: str) -> str:
    return json.dumps(p.to_json()) if fmt == "json" else str(p)


def _emit_lin(x: LinComb, fmt: str) -> str:
    return json.dumps(to_json(x), ensure_ascii=False) if fmt == "json" else render_text(x)


def run(args) -> tuple[str, int]:
    fmt = args.format
    cmd = args.command
    if cmd in ("ehr", "ehr-str"):
        p = ehr_polynomial(args.qp, CountMode.STRICT if cmd == "ehr-str" else CountMode.WEAK)
        if args.classical:
            p = p.shift(1)
        if args.eval is not None:
            return _emit_value(p(args.eval), fmt), EXIT_OK
        return _emit_poly(p, fmt), EXIT_OK
    if cmd == "coproduct":
        f = hopf.delta_coproduct if args.kind == "Delta" else hopf.internal_coproduct
        return _emit_lin(f(args.qp), fmt), EXIT_OK
    if cmd == "char":
        chi = CHARACTERS[args.name]
        if args.inverse:
            chi = ch.inverse(chi)
        return _emit_value(chi(args.qp), fmt), EXIT_OK
    if cmd == "theta":
        f = hopf.theta_inverse if args.inverse else hopf.theta
        return _emit_lin(f(args.qp), fmt), EXIT_OK
    if cmd == "antipode":
        return _emit_lin(hopf.antipode(args.qp), fmt), EXIT_OK
    if cmd == "wqsym":
        return _run_wqsym(args, fmt), EXIT_OK
    if cmd == "enumerate":
        items = enumerate_qp(args.n, labeled=not args.iso, posets_only=args.kind == "p")
        texts = [to_text(x.rep if args.iso else x) for x in items]
        if fmt == "json":
            return json.dumps({"count": len(texts), "items": texts}), EXIT_OK
        return "\n".join([f"# {len(texts)}"] + texts), EXIT_OK
    if cmd == "bernoulli":
        return _emit_value(bernoulli(args.k), fmt), EXIT_OK
    if cmd == "faulhaber":
        return _emit_poly(faulhaber(args.k), fmt), EXIT_OK
    if cmd == "verify":
        reports = run_suite(args.suite, args.max_n)
        ok = all(r.ok for r in reports)
        if fmt == "json":
            out = json.dumps({"ok": ok, "suites": [
                {"suite": r.suite, "results": [
                    {"name": c.name, "cases": c.cases, "ok": c.ok, "failure": c.failure}
                    for c in r.results]} for r in reports]})
        else:
            lines = [line for r in reports for line in r.lines()]
            lines.append("all checks passed" if ok else "FAILURES")
            out = "\n".join(lines)
        return out, EXIT_OK if ok else EXIT_FAIL
    raise UsageError(f"unknown command {cmd}")


def _run_wqsym(args, fmt: str) -> str:
    op = args.op
    if op in ("ehr", "ehr-str"):
        mode = CountMode.STRICT if op == "ehr-str" else CountMode.WEAK
        return _emit_lin(wq.ehr_morphism(args.qp, mode), fmt)
    if op == "phi":
        return _emit_lin(wq.phi_automorphism(args.word, args.lam), fmt)
    if op == "product":
        return _emit_lin(wq.product(args.u, args.v), fmt)
    if op == "coproduct":
        return _emit_lin(wq.coproduct(args.word), fmt)
    return _emit_lin(wq.internal_coproduct(args.word), fmt)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except QPError as exc:
        print(f"qpehr: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cache = ValueCache(args.cache) if args.cache else None
    ch.attach_cache(cache)
    try:
        out, code = run(args)
    except (QPError, UsageError) as exc:
        print(f"qpehr: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if cache is not None:
            cache.save()
        ch.attach_cache(None)
    print(out)
    return code
