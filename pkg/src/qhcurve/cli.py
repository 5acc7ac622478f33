"""Command line: ``qhcurve analyze | check-point | sweep``.

Exit codes: 0 success, 2 input rejected, 1 internal failure.
"""

from __future__ import annotations

import argparse
import ast
import itertools
import json
import logging
import operator
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Dict, List, Sequence

from gmpy2 import mpq

from .config import AnalysisConfig, load_config
from .curves import CurveRejected, InternalCheckError, NotSingularError, validate_curve
from .families import FAMILIES, FamilyError, family_curve, family_label
from .groebner import GroebnerLimitError, PositiveDimensionalError
from .parser import ParseError, parse_polynomial, read_polynomial_file
from .points import ProjectivePoint
from .report import analyze, check_point, render_text, to_json

EXIT_OK, EXIT_INTERNAL, EXIT_REJECTED = 0, 1, 2

log = logging.getLogger("qhcurve")


class UsageError(ValueError):
    code = "usage"


def _error_code(exc) -> str:
    if isinstance(exc, ParseError):
        return "parse"
    if isinstance(exc, GroebnerLimitError):
        return "resource-limit"
    return getattr(exc, "code", "invalid-input" if isinstance(exc, ValueError) else "internal")


def _exit_code(exc) -> int:
    if isinstance(exc, (InternalCheckError, GroebnerLimitError)):
        return EXIT_INTERNAL
    if isinstance(exc, (ParseError, CurveRejected, FamilyError, NotSingularError, UsageError,
                        PositiveDimensionalError, ValueError)):
        return EXIT_REJECTED
    return EXIT_INTERNAL


# -- parameter parsing --------------------------------------------------------


def _scalar(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return mpq(text)
    except ValueError:
        raise UsageError("bad parameter value %r" % text) from None


def parse_value(text: str):
    """``3`` -> 3, ``1/2`` -> mpq, ``1,2`` -> (1, 2), ``0:1,1:1`` -> ((0,1),(1,1))."""
    if "," in text or ":" in text:
        items = [t for t in text.split(",") if t.strip()]
        out = []
        for item in items:
            if ":" in item:
                out.append(tuple(_scalar(x) for x in item.split(":")))
            else:
                out.append(_scalar(item))
        return tuple(out)
    return _scalar(text)


def parse_params(items: Sequence[str]) -> Dict[str, object]:
    params = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError("parameter %r must look like name=value" % item)
        k, v = item.split("=", 1)
        params[k.strip()] = parse_value(v)
    return params


_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.FloorDiv: operator.floordiv}


def _eval_bound(text: str, env: Dict[str, int]) -> int:
    """Integer arithmetic (+ - * //) over literals and earlier parameters."""
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise UsageError("unsupported range bound %r" % text)
    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except SyntaxError:
        raise UsageError("bad range bound %r" % text) from None


def option_params(extra: Sequence[str]) -> List[str]:
    """Family parameters given as options: ``--m 2`` or ``--m=2`` -> ``m=2``."""
    out, i = [], 0
    while i < len(extra):
        tok = extra[i]
        if not tok.startswith("--") or len(tok) < 3:
            raise UsageError("unrecognized argument %r" % tok)
        if "=" in tok:
            out.append(tok[2:])
            i += 1
        elif i + 1 < len(extra):
            out.append("%s=%s" % (tok[2:], extra[i + 1]))
            i += 2
        else:
            raise UsageError("option %s needs a value" % tok)
    return out


def parse_ranges(items: Sequence[str]):
    out = []
    for item in items or ():
        if "=" not in item or ".." not in item:
            raise UsageError("range %r must look like name=lo..hi" % item)
        k, span = item.split("=", 1)
        lo, hi = span.split("..", 1)
        out.append((k.strip(), lo, hi))
    return out


def expand_ranges(ranges, fixed: Dict[str, object]) -> List[Dict[str, object]]:
    """Cartesian product in the given order; bounds may use earlier names."""
    combos = [dict(fixed)]
    for name, lo, hi in ranges:
        nxt = []
        for env in combos:
            ints = {k: v for k, v in env.items() if isinstance(v, int)}
            for v in range(_eval_bound(lo, ints), _eval_bound(hi, ints) + 1):
                e = dict(env)
                e[name] = v
                nxt.append(e)
        combos = nxt
    return combos


# -- commands ------------------------------------------------------------------


def _read_curve_text(arg: str):
    if os.path.isfile(arg):
        return read_polynomial_file(arg)
    return parse_polynomial(arg)


def _curve_from_args(args, config):
    if getattr(args, "family", None):
        return family_curve(args.family, config, **parse_params(args.params))
    if not args.curve:
        raise UsageError("give a polynomial, a file, or --family")
    return validate_curve(_read_curve_text(args.curve), config=config)


def _config(args) -> AnalysisConfig:
    cfg = load_config(args.config)
    updates = {}
    if getattr(args, "json", False):
        updates["output_format"] = "json"
    if getattr(args, "experiment", False):
        updates["experiment"] = True
    if getattr(args, "step_cap", None):
        updates["step_cap"] = args.step_cap
    return replace(cfg, **updates)


def cmd_analyze(args, out) -> int:
    config = _config(args)
    c = _curve_from_args(args, config)
    rep = analyze(c, oracle=not args.no_oracle)
    if config.output_format == "json":
        out.write(to_json(rep, timing=not args.no_timing) + "\n")
    else:
        out.write(render_text(rep) + "\n")
    return EXIT_OK


def cmd_check_point(args, out) -> int:
    config = _config(args)
    c = validate_curve(_read_curve_text(args.curve), config=config)
    p = ProjectivePoint.parse(args.point)
    rec = check_point(c, p, oracle=not args.no_oracle)
    if config.output_format == "json":
        out.write(json.dumps(rec, indent=2) + "\n")
    else:
        crit = "QH" if rec["qh_criterion"] else "non-QH"
        line = "point %s  rank %d  criterion %s" % (args.point, rec["rank"], crit)
        if rec["mu"] is not None:
            orc = "QH" if rec["qh_oracle"] else "non-QH"
            line += "  mu %d  tau %d  oracle %s  agree %s" % (rec["mu"], rec["tau"], orc, rec["agree"])
        out.write(line + "\n")
    return EXIT_OK


def _sweep_instance(job):
    family, params, config = job
    label = family_label(family, params)
    try:
        c = family_curve(family, config, **params)
        rep = analyze(c)
    except Exception as exc:  # recorded per instance, the sweep goes on
        return {"label": label, "params": _plain(params),
                "error": {"code": _error_code(exc), "message": str(exc)}}
    r = rep["mdr"]["r"]
    rank0 = [p["point"] for p in rep["points"] if p["rank"] == 0]
    agrees = [p["agree"] for p in rep["points"] if p["agree"] is not None]
    return {"label": label, "params": _plain(params),
            "classification": rep["classification"]["label"], "r": r, "tau": rep["tjurina"],
            "verdict": rep["qh"].get("verdict"), "q": len(rank0), "r2": r * r,
            "rank_zero_points": rank0,
            "agreement": all(agrees) if agrees else None}


def _plain(params):
    return json.loads(json.dumps(params, default=str))


def sweep_rows(family: str, combos, config: AnalysisConfig, jobs: int = 1):
    work = [(family, p, config) for p in combos]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_instance, work))
    return [_sweep_instance(w) for w in work]


def sweep_summary(rows) -> Dict[str, object]:
    ok = [r for r in rows if "error" not in r]
    judged = [r for r in ok if r["agreement"] is not None]
    agree = sum(1 for r in judged if r["agreement"])
    return {"instances": len(rows), "errors": len(rows) - len(ok),
            "agreement_rate": format_rate(agree, len(judged)),
            "max_q": max((r["q"] for r in ok), default=None),
            "q_within_r2": all(r["q"] <= r["r2"] for r in ok)}


def format_rate(num: int, den: int) -> str:
    return "%d/%d" % (num, den)


def cmd_sweep(args, out) -> int:
    config = _config(args)
    if args.family not in FAMILIES:
        raise FamilyError("unknown family %r" % args.family)
    combos = expand_ranges(parse_ranges(args.range), parse_params(args.params))
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    rows = sweep_rows(args.family, combos, config, min(jobs, len(combos)))
    summary = sweep_summary(rows)
    if config.output_format == "json":
        out.write(json.dumps({"family": args.family, "rows": rows, "summary": summary}, indent=2) + "\n")
    else:
        for r in rows:
            if "error" in r:
                out.write("%-40s ERROR %s: %s\n" % (r["label"], r["error"]["code"], r["error"]["message"]))
            else:
                out.write("%-40s %-22s r=%-2d tau=%-4d %-12s q=%d r^2=%d agree=%s\n" % (
                    r["label"], r["classification"], r["r"], r["tau"], r["verdict"] or "-",
                    r["q"], r["r2"], r["agreement"]))
        out.write("summary: %d instances, %d errors, agreement %s, max q %s, q <= r^2: %s\n" % (
            summary["instances"], summary["errors"], summary["agreement_rate"],
            summary["max_q"], summary["q_within_r2"]))
    return EXIT_OK


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhcurve", description=(
        "Decide quasi-homogeneity of plane curve singularities from the "
        "first syzygy matrix of the Jacobian ideal."))
    ap.add_argument("--config", help="key=value config file (default: $QHCURVE_CONFIG)")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--no-oracle", action="store_true", help="skip local Milnor/Tjurina numbers")
        p.add_argument("--experiment", action="store_true", help="apply the criterion to 3-syzygy curves")
        p.add_argument("--step-cap", type=int, help="S-pair budget per Groebner basis")

    a = sub.add_parser("analyze", help="full analysis of one curve")
    a.add_argument("curve", nargs="?", help="polynomial expression or file")
    a.add_argument("--family", help="named family (%s)" % ", ".join(sorted(FAMILIES)))
    a.add_argument("--params", nargs="*", default=[], metavar="NAME=VALUE",
                   help="family parameters; --NAME VALUE also works")
    a.add_argument("--no-timing", action="store_true", help="omit the timing block from JSON")
    common(a)

    c = sub.add_parser("check-point", help="rank and local invariants at one point")
    c.add_argument("curve", help="polynomial expression or file")
    c.add_argument("point", help="rational point a:b:c")
    common(c)

    s = sub.add_parser("sweep", help="analyze a family over parameter ranges")
    s.add_argument("--family", required=True)
    s.add_argument("--range", nargs="*", default=[], metavar="NAME=LO..HI",
                   help="inclusive ranges; bounds may use earlier names, e.g. r=2..(d-1)//2")
    s.add_argument("--params", nargs="*", default=[], metavar="NAME=VALUE")
    s.add_argument("--jobs", type=int, default=0, help="worker processes (0: one per CPU)")
    common(s)
    return ap


def split_family_options(ap: argparse.ArgumentParser, argv: List[str]):
    """Pull ``--NAME VALUE`` pairs the parser does not know out of ``argv``."""
    known = set()
    for action in ap._actions:
        known.update(action.option_strings)
        for sub in getattr(action, "choices", None) or {}:
            if isinstance(action.choices, dict):
                for a in action.choices[sub]._actions:
                    known.update(a.option_strings)
    keep, extra, i = [], [], 0
    while i < len(argv):
        tok = argv[i]
        name = tok.split("=", 1)[0]
        if tok.startswith("--") and len(name) > 2 and name not in known:
            if "=" in tok or i + 1 >= len(argv):
                extra.append(tok)
                i += 1
            else:
                extra.extend(argv[i:i + 2])
                i += 2
            continue
        keep.append(tok)
        i += 1
    return keep, extra


COMMANDS = {"analyze": cmd_analyze, "check-point": cmd_check_point, "sweep": cmd_sweep}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        argv, extra = split_family_options(ap, list(sys.argv[1:] if argv is None else argv))
        args = ap.parse_args(argv)
        if extra:
            if args.command == "check-point":
                ap.error("unrecognized arguments: %s" % " ".join(extra))
            args.params = list(args.params) + option_params(extra)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_REJECTED
    except UsageError as exc:
        sys.stderr.write("qhcurve: %s\n" % exc)
        return EXIT_REJECTED
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    as_json = getattr(args, "json", False)
    try:
        return COMMANDS[args.command](args, out)
    except Exception as exc:
        code = _exit_code(exc)
        if code == EXIT_INTERNAL:
            log.debug("internal failure", exc_info=True)
        if as_json:
            out.write(json.dumps({"error": {"code": _error_code(exc), "message": str(exc)}}, indent=2) + "\n")
        else:
            sys.stderr.write("qhcurve: %s\n" % exc)
        return code


if __name__ == "__main__":
    sys.exit(main())
