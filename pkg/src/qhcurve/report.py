"""Full-pipeline curve reports and their JSON / text rendering."""

from __future__ import annotations

import json
import time
from typing import Dict, List, Optional

from .config import AnalysisConfig
from .curves import (ALL_QH, FREE, NEARLY_FREE, THREE_SYZYGY, CurveInput, HypothesisError,
                     classify, identity_checks, point_record,
                     points_of_interest, qh_criterion_global)
from .points import ProjectivePoint
from .poly import format_rational

TOP_KEYS = ("input", "degree", "mdr", "classification", "betti", "tjurina", "dpwall",
            "qh", "points", "identities", "warnings")


def _jsonable(value):
    """Rationals become "p/q" strings; containers are converted recursively."""
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return format_rational(value)
    return str(value)


def analyze(c: CurveInput, oracle: bool = True) -> Dict:
    """Run validate -> classify -> criterion -> point table -> identities and
    collect everything in a plain dict (keys in :data:`TOP_KEYS` + timing)."""
    t0 = time.perf_counter()
    timing = {}
    warnings: List[str] = []
    data = c.data
    cls = classify(c)
    timing["classify"] = time.perf_counter() - t0
    r, cert = data.mdr
    lo, hi, sec = cls.dpwall
    rep = {
        "input": {"f": str(c.f), "label": c.label},
        "degree": c.degree,
        "mdr": {"r": r, "certificate": [str(p) for p in cert]},
        "classification": cls.to_json(),
        "betti": cls.betti.to_json(),
        "tjurina": cls.tau,
        "dpwall": {"lower": lo, "upper": hi, "secondary_upper": sec},
    }
    rep["classification"]["matrix"] = data.syzygy_matrix.to_json()

    t1 = time.perf_counter()
    qh = None
    try:
        qh = qh_criterion_global(c)
        rep["qh"] = qh.to_json()
        if not qh.within_hypotheses:
            warnings.append("criterion applied outside theorem hypotheses (conjectural)")
    except HypothesisError as exc:
        rep["qh"] = {"verdict": None, "skipped": str(exc)}
        warnings.append(str(exc))
    timing["criterion"] = time.perf_counter() - t1

    t2 = time.perf_counter()
    pts = points_of_interest(c)
    records = [point_record(c, p, oracle=oracle) for p in pts]
    rep["points"] = [rec.to_json() for rec in records]
    for rec in records:
        if rec.local_method and rec.local_method != c.config.local_method:
            warnings.append("local invariants at %s computed by %s" % (rec.point, rec.local_method))
    if oracle:
        mu_total = sum(rec.mu for rec in records)
        tau_sum = sum(rec.tau for rec in records)
        partial = tau_sum < cls.tau
        rep["qh"]["mu_total"] = mu_total
        rep["qh"]["mu_total_partial"] = partial
        if partial:
            warnings.append("singular locus not fully rational: mu total is partial")
        elif qh is not None:
            rep["qh"]["oracle_agrees"] = (qh.verdict == ALL_QH) == (mu_total == cls.tau)
        if cls.kind == THREE_SYZYGY:
            rep["qh"]["conjecture_agreement"] = all(rec.agree for rec in records)
    timing["points"] = time.perf_counter() - t2

    t3 = time.perf_counter()
    if cls.kind in (FREE, NEARLY_FREE):
        rep["identities"] = identity_checks(c)
    else:
        rep["identities"] = {"kind": cls.kind, "skipped": "identities apply to free and nearly free curves"}
    timing["identities"] = time.perf_counter() - t3
    rep["warnings"] = warnings
    timing["total"] = time.perf_counter() - t0
    rep["timing"] = {k: round(v, 4) for k, v in timing.items()}
    return _jsonable(rep)


def check_point(c: CurveInput, p: ProjectivePoint, oracle: bool = True) -> Dict:
    rec = point_record(c, p, oracle=oracle)
    cls = classify(c)
    out = rec.to_json()
    out["classification"] = cls.label
    return _jsonable(out)


def to_json(report: Dict, timing: bool = True) -> str:
    if not timing:
        report = {k: v for k, v in report.items() if k != "timing"}
    return json.dumps(report, indent=2)


def render_text(rep: Dict) -> str:
    lines = []
    inp = rep["input"]
    title = inp.get("label") or inp["f"]
    lines.append("curve     %s" % title)
    if inp.get("label"):
        lines.append("f         %s" % inp["f"])
    lines.append("degree    %d" % rep["degree"])
    lines.append("mdr       %d  certificate (%s)" % (rep["mdr"]["r"], ", ".join(rep["mdr"]["certificate"])))
    cls = rep["classification"]
    lines.append("class     %s" % cls["label"])
    lines.append("betti     %s" % "  ".join("b%d,%d=%d" % tuple(t) for t in rep["betti"]))
    wall = rep["dpwall"]
    sec = "" if wall["secondary_upper"] is None else ", secondary %d" % wall["secondary_upper"]
    lines.append("tau       %d  (window %d..%d%s)" % (rep["tjurina"], wall["lower"], wall["upper"], sec))
    qh = rep["qh"]
    if qh.get("verdict"):
        extra = ""
        if qh["verdict"] != ALL_QH:
            extra = "  Y_f degree %s, rational points %s" % (
                qh["y_degree"], " ".join(_pt(p) for p in qh["non_qh_points"]) or "none")
        lines.append("verdict   %s%s" % (qh["verdict"], extra))
    else:
        lines.append("verdict   skipped: %s" % qh.get("skipped"))
    if "mu_total" in qh:
        lines.append("mu total  %d%s" % (qh["mu_total"], " (partial)" if qh["mu_total_partial"] else ""))
    if rep["points"]:
        lines.append("points")
        lines.append("  %-16s %4s %5s %5s %9s %7s %6s" % ("point", "rank", "mu", "tau", "criterion", "oracle", "agree"))
        for p in rep["points"]:
            lines.append("  %-16s %4s %5s %5s %9s %7s %6s" % (
                _pt(p["point"]), p["rank"], _opt(p["mu"]), _opt(p["tau"]),
                _qh(p["qh_criterion"]), _qh(p["qh_oracle"]), _opt(p["agree"])))
    ids = rep["identities"]
    if "skipped" in ids:
        lines.append("identities skipped")
    else:
        lines.append("identities ok")
    for w in rep["warnings"]:
        lines.append("warning   %s" % w)
    return "\n".join(lines)


def _opt(v):
    return "-" if v is None else str(v)


def _qh(v):
    return "-" if v is None else ("QH" if v else "non-QH")


def _pt(coords) -> str:
    return "(%s)" % ":".join(c[:-2] if c.endswith("/1") else c for c in coords)
