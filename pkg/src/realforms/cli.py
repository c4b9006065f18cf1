"""Command-line interface.

Every command prints a report: ``{"report": {...}, "timing": {...}}`` in
JSON mode.  Everything under ``report`` is deterministic for fixed input;
wall-clock time lives under ``timing`` only.

Exit codes: 0 success, 1 usage or parse error, 2 validation error,
3 failure of an ``--assert-*`` flag.
"""
import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__, gcohom, piclattice, spectral, weyl, zcohom
from .fixtures import resolve

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_ASSERT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _classes(cl):
    return [list(c.coords) for c in cl]


# -- commands --------------------------------------------------------------

def cmd_lattice(args):
    if args.r < 0:
        raise UsageError("--r must be non-negative")
    L = piclattice.make_lattice(args.r)
    K = L.canonical
    result = {
        "r": L.r,
        "gram": [list(row) for row in L.gram],
        "canonical": list(K.coords),
        "canonical_square": piclattice.pair(L, K, K),
        "simple_roots": [list(a.coords) for a in L.simple_roots],
    }
    truncated = False
    if args.kperp:
        if L.r < 3:
            raise UsageError("--kperp needs r >= 3")
        inv = piclattice.kperp_invariants(L)
        result["kperp"] = {"rank": inv.rank, "det": inv.gram_det, "even": inv.is_even,
                           "signature": list(inv.signature)}
    if args.roots:
        if L.r < 3:
            raise UsageError("--roots needs r >= 3")
        roots = piclattice.enumerate_roots(L, args.cap)
        result["roots"] = {"count": len(roots), "truncated": roots.truncated,
                           "classes": _classes(roots)}
        truncated |= roots.truncated
    if args.exceptional:
        if L.r < 1:
            raise UsageError("--exceptional needs r >= 1")
        exc = piclattice.enumerate_exceptional(L, args.cap)
        result["exceptional"] = {"count": len(exc), "truncated": exc.truncated,
                                 "classes": _classes(exc)}
        truncated |= exc.truncated
    if args.order:
        if not 3 <= L.r <= 8:
            raise UsageError("--order needs 3 <= r <= 8 (W_X is infinite for r >= 9)")
        chain = weyl.weyl_chain(L)
        result["weyl"] = {"order": chain.order(), "basic_orbits": chain.basic_orbit_sizes()}
    return result, truncated, EXIT_OK


def _parse_word(L, text):
    if text.strip().lower() == "coxeter":
        return weyl.coxeter_word(L)
    try:
        word = [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}") from exc
    k = len(L.simple_roots)
    for i in word:
        if not 0 <= i < k:
            raise UsageError(f"simple root index {i} out of range 0..{k - 1}")
    return word


def cmd_entropy(args):
    if args.r < 3:
        raise UsageError("--r must be >= 3")
    try:
        eps = Fraction(args.eps)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad eps {args.eps!r}") from exc
    if eps <= 0:
        raise UsageError("eps must be positive")
    L = piclattice.make_lattice(args.r)
    word = _parse_word(L, args.word)
    M = weyl.word_to_isometry(L, word)
    rep = spectral.entropy(L, M, eps)
    lo, hi = rep.spectral_radius_interval
    result = {
        "r": L.r,
        "word": word,
        "eps": _frac(eps),
        "char_poly": list(rep.char_poly.coeffs),
        "radius_interval": [_frac(lo), _frac(hi)],
        "positive_entropy": rep.positive_entropy,
        "display": {"radius": [float(lo), float(hi)],
                    "entropy": [rep.entropy_lower, rep.entropy_upper]},
    }
    code = EXIT_OK
    if args.assert_positive and not rep.positive_entropy:
        code = EXIT_ASSERT
    return result, False, code


def _load_json(path):
    try:
        with open(resolve(path)) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise UsageError(f"no such file or fixture: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from exc


def _parse_indices(text):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"bad index list {text!r}") from exc


def _pointed(ps):
    return {"size": len(ps), "elements": [_jsonable(x) for x in ps.elements], "base": ps.base}


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def cmd_h1(args):
    rec = _load_json(args.specfile)
    try:
        B = gcohom.load_ggroup(rec)
    except gcohom.GroupValidationError as exc:
        raise ValidationError(f"computation rejected: {exc}"
                              + (f" (witness {list(exc.witness)})" if exc.witness else "")) from exc
    H = gcohom.h1(B)
    result = {
        "input": B.to_record(),
        "cocycles": [c.a_sigma for c in gcohom.cocycles(B)],
        "h1": {"size": len(H), "representatives": list(H.elements), "base": H.base,
               "class_sizes": [len(c) for c in H.classes],
               "classes": [list(c) for c in H.classes]},
    }
    normal = None
    if args.normal is not None:
        normal = _parse_indices(args.normal)
    elif args.use_normal and "normal" in rec:
        normal = rec["normal"]
    if normal is not None:
        try:
            seq = gcohom.exact_sequence(B, normal)
            fib = gcohom.fiber_decomposition(B, normal)
        except gcohom.GroupValidationError as exc:
            raise ValidationError(f"computation rejected: {exc}") from exc
        result["input"]["normal"] = sorted(set(normal))
        result["exact_sequence"] = {
            "terms": {k: _pointed(v) for k, v in seq.terms.items()},
            "maps": {k: list(v) for k, v in seq.maps.items()},
            "exact": seq.exact,
            "verdict": "exact at all nodes" if seq.all_exact else "NOT exact",
        }
        result["fibers"] = {
            "entries": [{"representative": e.representative, "fiber": list(e.fiber),
                         "twisted_h1_size": e.twisted_h1_size} for e in fib.entries],
            "partition": fib.partition_ok, "bounded": fib.bounded, "covered": fib.covered,
        }
    code = EXIT_OK
    if normal is not None and args.assert_exact and not seq.all_exact:
        code = EXIT_ASSERT
    return result, False, code


def cmd_h1z(args):
    rec = _load_json(args.matrixfile)
    M = rec.get("matrix") if isinstance(rec, dict) else rec
    if not isinstance(M, list):
        raise UsageError("expected {\"matrix\": [[...]]} or a list of rows")
    try:
        M = [[int(x) for x in row] for row in M]
    except (TypeError, ValueError) as exc:
        raise UsageError("matrix must be a list of integer rows") from exc
    if not M or any(len(row) != len(M) for row in M):
        raise UsageError("matrix must be square and nonempty")
    try:
        mod = zcohom.InvolutionModule.from_matrix(M)
    except zcohom.NotAnInvolutionError as exc:
        raise ValidationError(f"computation rejected: {exc}") from exc
    H = zcohom.h1_abelian(mod)
    result = {
        "input": {"matrix": M},
        "invariant_factors": list(H.invariant_factors),
        "order": H.order,
        "h0_rank": zcohom.h0_abelian(mod),
    }
    code = EXIT_OK
    if args.oracle:
        if mod.k > 6:
            raise UsageError("--oracle supports k <= 6")
        B = zcohom.h1_abelian_bruteforce(mod, args.box)
        result["oracle"] = {"box": args.box, "order": B.order, "agrees": B.order == H.order}
        if B.order != H.order:
            code = EXIT_ASSERT
    return result, False, code


def cmd_freeproduct(args):
    try:
        signs = [int(t) for t in args.signs.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"bad sign list {args.signs!r}") from exc
    if any(s not in (1, -1) for s in signs):
        raise UsageError("signs must be +1 or -1")
    if len(signs) < 2:
        raise UsageError("need at least two signs (k >= 2)")
    P = gcohom.h1_free_product_pushout(signs)
    factors = [gcohom.h1_integers(s) for s in signs]
    result = {
        "signs": signs,
        "factor_sizes": [len(f) for f in factors],
        "cardinality": len(P),
        "pushout": _pointed(P),
    }
    return result, False, EXIT_OK


# -- driver ----------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")

    p = _Parser(prog="realforms", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"realforms {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("lattice", parents=[common], help="Picard lattice report")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--kperp", action="store_true")
    s.add_argument("--roots", action="store_true")
    s.add_argument("--exceptional", action="store_true")
    s.add_argument("--order", action="store_true", help="Weyl group order (3 <= r <= 8)")
    s.add_argument("--cap", type=int, default=1000)
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("entropy", parents=[common], help="certified entropy of a Weyl word")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--word", default="coxeter", help='"coxeter" or simple-root indices')
    s.add_argument("--eps", default="1/1000000")
    s.add_argument("--assert-positive", action="store_true")
    s.set_defaults(func=cmd_entropy)

    s = sub.add_parser("h1", parents=[common], help="H^1(Z/2, A) of a finite group spec")
    s.add_argument("specfile", help="group-spec JSON file or corpus fixture name")
    s.add_argument("--normal", help="indices of a normal, action-stable subgroup")
    s.add_argument("--use-normal", action="store_true", help="use the file's own 'normal' field")
    s.add_argument("--assert-exact", action="store_true")
    s.set_defaults(func=cmd_h1)

    s = sub.add_parser("h1z", parents=[common], help="H^1(Z/2, Z^k) of an integer involution")
    s.add_argument("matrixfile")
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--box", type=int, default=6)
    s.set_defaults(func=cmd_h1z)

    s = sub.add_parser("freeproduct", parents=[common], help="H^1(Z/2, Z^{*k}) as a pushout")
    s.add_argument("--signs", required=True)
    s.set_defaults(func=cmd_freeproduct)
    return p


def _command_echo(args):
    skip = {"func", "format", "specfile", "matrixfile"}
    opts = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    return opts


def _text(report):
    lines = []

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(obj, list) and len(obj) > 12:
            lines.append(f"{prefix}: [{len(obj)} items]")
            for v in obj:
                lines.append(f"  {json.dumps(v)}")
        else:
            lines.append(f"{prefix}: {json.dumps(obj)}")

    walk("", report["result"])
    return "\n".join(lines)


def _glue_negative_values(argv):
    # "--signs -1,-1" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--signs", "--word") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    t0 = time.perf_counter()
    try:
        result, truncated, code = args.func(args)
    except UsageError as exc:
        print(f"realforms: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"realforms: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    report = {
        "tool": "realforms",
        "version": __version__,
        "command": _command_echo(args),
        "result": result,
        "truncated": truncated,
    }
    out = {"report": report, "timing": {"seconds": round(time.perf_counter() - t0, 6)}}
    if args.format == "json":
        print(json.dumps(out, sort_keys=True))
    else:
        print(_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
