"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 on a check failure,
2 on a usage or parse error, 3 on an I/O error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("leechcert")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    from .bounds.polyparse import PolynomialSyntaxError, parse_rational

    try:
        return parse_rational(text)
    except PolynomialSyntaxError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


# -- output ----------------------------------------------------------------


def _render_text(data: Dict[str, Any]) -> str:
    from .report import render

    lines = []
    for k, v in data.items():
        v = render(v)
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def emit(data: Dict[str, Any], fmt: str) -> None:
    from .report import render

    if fmt == "json":
        sys.stdout.write(json.dumps(render(data), indent=2) + "\n")
    else:
        sys.stdout.write(_render_text(data))


# -- cache -----------------------------------------------------------------


def _cache_key(**params) -> str:
    blob = json.dumps({"version": __version__, **params}, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def leech_vectors(cache_dir: Optional[str]) -> np.ndarray:
    """Leech minimal vectors, read from or written to ``cache_dir`` when given."""
    from .leech import _GOLAY_POLY, leech_minimal_vectors
    from .vecio import format_section, parse_sections

    vecs = leech_minimal_vectors()
    if not cache_dir:
        return vecs
    d = Path(cache_dir)
    path = d / f"leech-{_cache_key(object='leech-minimal', poly=list(_GOLAY_POLY))}.vec"
    if path.exists():
        sec = parse_sections(path.read_text())[0]
        cached = sec.rows.astype(np.int8)
        if not np.array_equal(cached, vecs):
            raise OSError(f"cache file {path} does not match a fresh construction")
        log.info("leech vectors read from %s", path)
        return cached
    d.mkdir(parents=True, exist_ok=True)
    path.write_text(format_section(vecs))
    log.info("leech vectors cached at %s", path)
    return vecs


# -- subcommands -----------------------------------------------------------


def cmd_golay(args) -> int:
    from .leech import build_golay

    code = build_golay()
    dist = code.weight_distribution()
    expected = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    ok = dist == expected
    # linear code: minimum distance is the minimum nonzero weight
    dmin = min(w for w in dist if w > 0)
    emit({"length": code.length, "size": len(code), "weight_distribution": dist,
          "min_distance": dmin, "pass": ok}, args.format)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_leech(args) -> int:
    from .leech import MIN_NORM_RAW, leech_histogram, norms_raw, shape_classes

    vecs = leech_vectors(args.cache_dir)
    method = "pairwise" if args.extended else "orbits"
    hist = leech_histogram(method=method, threads=args.threads)
    shapes = shape_classes(vecs)
    norms_ok = bool(np.all(norms_raw(vecs) == MIN_NORM_RAW))
    allowed = {Fraction(v) for v in (-4, -2, -1, 0, 1, 2, 4)}
    ok = (len(vecs) == 196560 and sorted(shapes.values()) == [1104, 97152, 98304]
          and norms_ok and set(hist) <= allowed)
    if args.out:
        from .vecio import format_section

        Path(args.out).write_text(format_section(vecs))
    emit({"count": len(vecs), "shape_classes": shapes, "all_norms_4": norms_ok,
          "histogram_method": method, "inner_product_histogram": hist, "pass": ok}, args.format)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_chain(args) -> int:
    from .codes import kissing_chain
    from .vecio import write_code

    if args.depth < 0:
        raise UsageError("--depth must be >= 0")
    chain = kissing_chain(args.depth, base_choice=args.base, threads=args.threads)
    sizes = [len(c) for c in chain]
    max_ips = [c.max_inner() for c in chain]
    if args.out:
        write_code(args.out, chain[-1])
    emit({"sizes": sizes, "max_inner_products": max_ips, "dims": [c.dim for c in chain],
          "out": args.out, "pass": True}, args.format)
    return EXIT_OK


def _load_code(args):
    from .codes import leech_code
    from .vecio import VectorFileError, read_code

    if args.input == "leech":
        return leech_code(method="pairwise" if args.extended else "orbits", threads=args.threads)
    try:
        return read_code(args.input)
    except VectorFileError:
        raise
    except ValueError as e:  # members failing the anchor conditions
        raise VectorFileError(f"{args.input}: {e}") from None


def cmd_design_check(args) -> int:
    from .codes import gegenbauer_sums

    code = _load_code(args)
    sums = gegenbauer_sums(code, args.max_k, args.threads)
    strength = 0
    for s in sums:
        if s != 0:
            break
        strength += 1
    nonneg = all(s >= 0 for s in sums)
    ok = nonneg and (args.expect is None or strength == args.expect)
    emit({"size": len(code), "dim": code.dim, "strength": strength,
          "gegenbauer_sums": {k + 1: s for k, s in enumerate(sums)},
          "sums_nonnegative": nonneg, "expected_strength": args.expect, "pass": ok}, args.format)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scheme(args) -> int:
    from .codes import NotAScheme, intersection_numbers

    code = _load_code(args)
    try:
        table = intersection_numbers(code)
    except NotAScheme as e:
        emit({"size": len(code), "scheme": False, "error": str(e), "witness": e.witness, "pass": False}, args.format)
        return EXIT_FAIL
    bad = table.invariant_failures()
    vals = {f"P_{g}({a},{b})": v for (g, a, b), v in sorted(table.values.items())}
    emit({"size": len(code), "alphabet": list(table.alphabet), "scheme": True,
          "intersection_numbers": vals, "invariant_failures": bad, "pass": not bad}, args.format)
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_lp_spherical(args) -> int:
    from .bounds.polyparse import parse_polynomial
    from .bounds.spherical import NoCertificateFound, check_spherical_certificate, find_spherical_certificate

    if args.find:
        if args.degree is None or args.nodes is None:
            raise UsageError("--find needs --degree and --nodes")
        from .bounds.polyparse import parse_rational

        nodes = [parse_rational(x) for x in args.nodes.split(",")]
        try:
            cert = find_spherical_certificate(args.dim, args.t, args.degree, nodes)
        except NoCertificateFound as e:
            emit({"valid": False, "error": str(e), "pass": False}, args.format)
            return EXIT_FAIL
    else:
        if args.poly is None:
            raise UsageError("give --poly or --find")
        p = parse_polynomial(args.poly)
        if p.degree < 1:
            raise UsageError("certificate polynomial must have degree >= 1")
        cert = check_spherical_certificate(p, args.dim, args.t, strict=False)
    emit({"polynomial": str(cert.polynomial), "dim": args.dim, "t": args.t,
          "gegenbauer_coefficients": cert.expansion, "valid": cert.valid, "bound": cert.bound,
          "equality_inner_products": cert.equality_inner_products,
          "failures": cert.failures, "pass": cert.valid}, args.format)
    return EXIT_OK if cert.valid else EXIT_FAIL


def cmd_lp_binary(args) -> int:
    from .bounds.binary import InvalidParameters, binary_code_lp

    dmax = args.n if args.dmax is None else args.dmax
    if dmax < args.dmin:
        raise UsageError("--dmax must be >= --dmin")
    try:
        res = binary_code_lp(args.n, range(args.dmin, dmax + 1))
    except InvalidParameters as e:
        raise UsageError(str(e)) from None
    emit({"n": args.n, "distances": [args.dmin, dmax], "lp_value": res.value, "bound": res.bound,
          "distance_distribution": res.distance_distribution, "pass": True}, args.format)
    return EXIT_OK


def cmd_lp_cw(args) -> int:
    from .bounds.binary import InvalidParameters, constant_weight_bound, constant_weight_packing_ratio

    try:
        ratio = constant_weight_packing_ratio(args.n, args.d, args.w)
        bound = constant_weight_bound(args.n, args.d, args.w)
    except InvalidParameters as e:
        raise UsageError(str(e)) from None
    emit({"n": args.n, "d": args.d, "w": args.w, "ratio": ratio, "bound": bound, "pass": True}, args.format)
    return EXIT_OK


def cmd_unique(args) -> int:
    from .uniqueness import run_uniqueness

    rep = run_uniqueness(args.pipeline, seed=args.seed, threads=args.threads, extended=args.extended)
    if args.format == "json":
        sys.stdout.write(rep.to_json() + "\n")
    else:
        sys.stdout.write(rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=positive_int, default=1, help="worker threads for pairwise scans")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--cache-dir", default=None, help="directory for cached constructions")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="leechcert", description="Exact checks on Leech-derived spherical codes.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("golay", parents=[common], help="build the Golay code and its weight distribution")
    s.set_defaults(func=cmd_golay)

    s = sub.add_parser("leech", parents=[common], help="build the Leech minimal vectors and their inner products")
    s.add_argument("--out", help="write the vector set to this file")
    s.add_argument("--extended", action="store_true", help="use a direct pairwise scan for the histogram")
    s.set_defaults(func=cmd_leech)

    s = sub.add_parser("chain", parents=[common], help="export a code of the kissing chain")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--base", type=int, default=0, help="index of the base member at each level")
    s.add_argument("--out", help="vector-set file for the last code")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("design-check", parents=[common], help="design strength of a vector-set file")
    s.add_argument("--input", required=True, help="vector-set file, or 'leech' for the full minimal-vector code")
    s.add_argument("--max-k", type=positive_int, required=True)
    s.add_argument("--expect", type=int, default=None, help="fail unless the strength equals this")
    s.add_argument("--extended", action="store_true", help="with --input leech, use the direct pairwise scan")
    s.set_defaults(func=cmd_design_check)

    s = sub.add_parser("scheme", parents=[common], help="intersection numbers of a vector-set file")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_scheme, extended=False)

    s = sub.add_parser("lp", help="linear programming bounds")
    lp = s.add_subparsers(dest="lp_kind", required=True)
    t = lp.add_parser("spherical", parents=[common], help="check or search a spherical LP certificate")
    t.add_argument("--poly", help="coefficient list a0,a1,... or an expression in x")
    t.add_argument("--dim", type=positive_int, required=True)
    t.add_argument("--t", type=rational, required=True)
    t.add_argument("--find", action="store_true", help="search for a certificate instead")
    t.add_argument("--degree", type=positive_int)
    t.add_argument("--nodes", help="comma-separated candidate inner products")
    t.set_defaults(func=cmd_lp_spherical)
    t = lp.add_parser("binary", parents=[common], help="Krawtchouk LP bound for binary codes")
    t.add_argument("--n", type=positive_int, required=True)
    t.add_argument("--dmin", type=positive_int, required=True)
    t.add_argument("--dmax", type=positive_int)
    t.set_defaults(func=cmd_lp_binary)
    t = lp.add_parser("cw", parents=[common], help="packing bound for constant-weight codes")
    t.add_argument("--n", type=positive_int, required=True)
    t.add_argument("--d", type=positive_int, required=True)
    t.add_argument("--w", type=positive_int, required=True)
    t.set_defaults(func=cmd_lp_cw)

    s = sub.add_parser("unique", parents=[common], help="run a uniqueness pipeline")
    s.add_argument("pipeline", type=int, choices=(891, 4600))
    s.add_argument("--seed", type=int, default=0, help="order in which frame generators are tried")
    s.add_argument("--extended", action="store_true", help="add the direct pairwise Leech scan")
    s.set_defaults(func=cmd_unique)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    from .bounds.polyparse import PolynomialSyntaxError
    from .vecio import VectorFileError

    try:
        return args.func(args)
    except (UsageError, PolynomialSyntaxError) as e:
        sys.stderr.write(f"leechcert: error: {e}\n")
        return EXIT_USAGE
    except (OSError, VectorFileError) as e:
        sys.stderr.write(f"leechcert: I/O error: {e}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
