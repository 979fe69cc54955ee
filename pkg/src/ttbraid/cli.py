"""Command-line front end: ``ttbraid <subcommand> ...``.

Exit status: 0 when every check is verified/true, 1 when anything is
falsified/false/inconclusive, 2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .braid import BraidWord
from .families import (
    INCONCLUSIVE,
    SuiteConfig,
    VerificationReport,
    run_tasks,
    verify_all,
    verify_equation_chain,
    verify_lemma,
    verify_lemma_sweep,
    verify_p1,
    verify_p1_slopes,
    verify_p1_theorem,
    verify_seifert_example,
    verify_slope_example,
    verify_t1,
)
from .garside import DEFAULT_BUDGET, are_conjugate, equals, is_conjugate_by, to_normal_form
from .invariants import DEFAULT_DEGREE_CAP, ResourceLimitError, alexander, closure_components
from .twisted import (
    TwistedTorusKnot,
    Verdict,
    classify,
    surface_slope,
    surgery_description,
    ttk_braid,
)

ENV_PREFIX = "TTBRAID_"
DEFAULT_STRANDS_CAP = 64


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------

def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected a..b") from exc
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def parse_braid(text: str) -> BraidWord:
    """Inline JSON, a path to a JSON file, or the compact form ``strands:i,j,-k``."""
    text = text.strip()
    if text.startswith("{"):
        return _braid_from_json_text(text, "inline JSON")
    path = Path(text)
    if path.is_file():
        return _braid_from_json_text(path.read_text(), str(path))
    if ":" in text:
        head, _, tail = text.partition(":")
        tail = tail.strip().strip("[]")
        try:
            strands = int(head)
            letters = tuple(int(x) for x in tail.replace(" ", "").split(",") if x)
            return BraidWord(strands, letters)
        except ValueError as exc:
            raise UsageError(f"bad compact braid {text!r}: {exc}") from exc
    raise UsageError(f"cannot read braid from {text!r} (not JSON, a file, or n:letters)")


def _braid_from_json_text(text: str, origin: str) -> BraidWord:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {origin}: {exc}") from exc
    # accept a bare braid or any emitted object carrying one under "braid"
    if isinstance(data, dict) and "braid" in data and "word" not in data:
        data = data["braid"]
    try:
        return BraidWord.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"not a braid in {origin}: {exc}") from exc


def _env_default(name: str, fallback, kind=str):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return fallback
    if kind is bool:
        return raw.strip().lower() in ("1", "true", "yes", "on")
    try:
        return kind(raw)
    except ValueError:
        raise UsageError(f"bad value {raw!r} for {ENV_PREFIX}{name.upper()}") from None


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

class Output:
    def __init__(self, as_json: bool, timings: bool) -> None:
        self.as_json = as_json
        self.timings = timings

    def emit(self, payload, text: str) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2, sort_keys=False))
        else:
            print(text)

    def report_json(self, rep: VerificationReport) -> dict:
        data = rep.to_json()
        if not self.timings:
            data["elapsed_ms"] = None
        return data

    def report_line(self, rep: VerificationReport) -> str:
        params = " ".join(f"{k}={v}" for k, v in rep.params.items())
        timing = f" ({rep.elapsed * 1000:.1f} ms)" if self.timings else ""
        line = f"[{rep.status}] {rep.claim_id} {params}{timing}"
        if rep.notes:
            line += f"\n    {rep.notes}"
        return line


def _summary(reports: list[VerificationReport]) -> dict:
    counts = {"verified": 0, "falsified": 0, "inconclusive": 0}
    for rep in reports:
        counts[rep.status] += 1
    return {"total": len(reports), **counts}


def _exit_for(reports: list[VerificationReport]) -> int:
    return 0 if all(rep.ok for rep in reports) else 1


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _knot(args) -> TwistedTorusKnot:
    try:
        return TwistedTorusKnot(args.p, args.q, args.r, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_strands(w: BraidWord, cap: int) -> BraidWord:
    if w.strands > cap:
        raise ResourceLimitError(f"{w.strands} strands exceeds strands cap {cap}")
    return w


def cmd_braid(args, out: Output) -> int:
    knot = _knot(args)
    if knot.q > args.strands_cap:
        raise ResourceLimitError(f"{knot.q} strands exceeds strands cap {args.strands_cap}")
    try:
        w = ttk_braid(knot)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.emit(w.to_json(), json.dumps(w.to_json()))
    return 0


def cmd_slope(args, out: Output) -> int:
    knot = _knot(args)
    s = surface_slope(knot)
    out.emit({"knot": knot.to_json(), "slope": s}, str(s))
    return 0


def cmd_classify(args, out: Output) -> int:
    knot = _knot(args)
    cls = classify(knot)
    sd = cls.seifert_H.multiplicities if cls.seifert_H else None
    text = "\n".join([
        f"{knot}",
        f"  primitive on H:  {cls.primitive_H}",
        f"  primitive on H': {cls.primitive_Hprime}",
        f"  Seifert on H:    {sd if sd else '-'}" + (f" (k={cls.seifert_k})" if sd else ""),
        f"  verdict:         {cls.verdict.value}",
    ])
    out.emit({"knot": knot.to_json(), **cls.to_json()}, text)
    return 0


def cmd_surgery(args, out: Output) -> int:
    knot = _knot(args)
    res = surgery_description(knot)
    out.emit({"knot": knot.to_json(), **res.to_json()}, f"{knot} {res}")
    return 0


def cmd_nf(args, out: Output) -> int:
    w = _check_strands(parse_braid(args.word), args.strands_cap)
    nf = to_normal_form(w)
    factors = " . ".join("[" + ",".join(map(str, f)) + "]" for f in nf.factors)
    text = f"B_{nf.strands}: Delta^{nf.inf}" + (f" . {factors}" if factors else "")
    out.emit(nf.to_json(), text)
    return 0


def cmd_eq(args, out: Output) -> int:
    a = _check_strands(parse_braid(args.a), args.strands_cap)
    b = _check_strands(parse_braid(args.b), args.strands_cap)
    if a.strands != b.strands:
        raise UsageError(f"strand counts differ: {a.strands} vs {b.strands}")
    result = equals(a, b)
    out.emit({"equal": result}, str(result).lower())
    return 0 if result else 1


def cmd_conj(args, out: Output) -> int:
    a = _check_strands(parse_braid(args.a), args.strands_cap)
    b = _check_strands(parse_braid(args.b), args.strands_cap)
    if a.strands != b.strands:
        raise UsageError(f"strand counts differ: {a.strands} vs {b.strands}")
    if args.c is not None:
        c = parse_braid(args.c)
        if c.strands != a.strands:
            raise UsageError("conjugator has a different strand count")
        result = is_conjugate_by(a, b, c)
        out.emit({"conjugate_by": result}, str(result).lower())
        return 0 if result else 1
    res = are_conjugate(a, b, budget=args.budget)
    payload = {
        "status": res.status,
        "witness": res.witness.to_json() if res.witness is not None else None,
        "nodes": res.nodes,
        "notes": res.notes,
    }
    text = f"{res.status} ({res.nodes} nodes)"
    if res.witness is not None:
        text += f"\nwitness: {json.dumps(res.witness.to_json())}"
    if res.notes:
        text += f"\n{res.notes}"
    out.emit(payload, text)
    return 0 if res.is_conjugate else 1


def cmd_alex(args, out: Output) -> int:
    w = _check_strands(parse_braid(args.word), args.strands_cap)
    try:
        poly = alexander(w, degree_cap=args.degree_cap)
    except ResourceLimitError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.emit(poly.to_json(), str(poly))
    return 0


def cmd_components(args, out: Output) -> int:
    w = _check_strands(parse_braid(args.word), args.strands_cap)
    n = closure_components(w)
    out.emit({"components": n}, str(n))
    return 0


def _verify_tasks(args) -> list:
    what = args.what
    cap = args.strands_cap
    if what in ("p1", "lemmas", "chain"):
        rs = parse_range(args.range or ("2..8" if what != "chain" else "2..6"))
        if rs.start < 2:
            raise UsageError("r must be >= 2")
        if 2 * rs[-1] + 1 > cap:
            raise ResourceLimitError(f"r = {rs[-1]} needs {2 * rs[-1] + 1} strands > cap {cap}")
        if what == "p1":
            return [(verify_p1, (r,)) for r in rs]
        if what == "chain":
            return [(verify_equation_chain, (r,)) for r in rs]
        if args.max_strands > cap:
            raise ResourceLimitError(f"--max-strands {args.max_strands} exceeds cap {cap}")
        return [
            (verify_lemma_sweep, ("L1", args.max_strands)),
            (verify_lemma_sweep, ("L3", args.max_strands)),
            *[(_lemma, (lem, r)) for lem in ("L5", "L6", "L7", "L8") for r in rs],
        ]
    ks = parse_range(args.k or "2..3")
    if ks.start < 2:
        raise UsageError("k must be >= 2")
    if what == "t1":
        qs = [q for q in parse_range(args.range or "5..9") if q % 2]
        if not qs or qs[0] < 5:
            raise UsageError("T1 needs odd q >= 5")
        _cap_q(qs, cap)
        return [(verify_t1, (q, k)) for q in qs for k in ks]
    if what == "p1th":
        qs = list(parse_range(args.range or "3..9"))
        if qs[0] < 3:
            raise UsageError("q must be >= 3")
        _cap_q(qs, cap)
        return [
            *[(verify_p1_slopes, (q, k)) for q in qs for k in ks],
            *[(verify_p1_theorem, (q, k, args.budget)) for q in qs for k in ks],
        ]
    if what == "slopes":
        return [(verify_slope_example, ()), (verify_seifert_example, ())]
    raise UsageError(f"unknown verify target {what!r}")


def _cap_q(qs: Sequence[int], cap: int) -> None:
    if max(qs) > cap:
        raise ResourceLimitError(f"q = {max(qs)} exceeds strands cap {cap}")


def _lemma(lemma: str, r: int) -> VerificationReport:
    return verify_lemma(lemma, {"r": r})


def cmd_verify(args, out: Output) -> int:
    if args.what == "all":
        cfg = SuiteConfig(budget=args.budget, jobs=args.jobs)
        sections = verify_all(cfg)
        reports = [rep for sec in sections for rep in sec.reports]
        payload = {
            "sections": [
                {
                    "name": sec.name,
                    "title": sec.title,
                    "reports": [out.report_json(r) for r in sec.reports],
                    "summary": _summary(sec.reports),
                }
                for sec in sections
            ],
            "summary": _summary(reports),
        }
        chunks = []
        for sec in sections:
            chunks.append(f"== {sec.title} ==")
            chunks.extend(out.report_line(r) for r in sec.reports)
            chunks.append("")
        chunks.append(_summary_line(reports))
        out.emit(payload, "\n".join(chunks))
        return _exit_for(reports)
    reports = run_tasks(_verify_tasks(args), args.jobs)
    payload = {"reports": [out.report_json(r) for r in reports], "summary": _summary(reports)}
    text = "\n".join([*(out.report_line(r) for r in reports), _summary_line(reports)])
    out.emit(payload, text)
    return _exit_for(reports)


def _summary_line(reports: list[VerificationReport]) -> str:
    s = _summary(reports)
    return (
        f"{s['verified']}/{s['total']} verified, {s['falsified']} falsified, "
        f"{s['inconclusive']} {INCONCLUSIVE}"
    )


def cmd_sweep(args, out: Output) -> int:
    """Classification table over a parameter box."""
    ps, qs, rs = parse_range(args.p), parse_range(args.q), args.r
    ns = [int(x) for x in args.n.split(",")]
    rows = []
    violations = 0
    for p in ps:
        if p < 1:
            continue
        for q in qs:
            if q < 2:
                continue
            r_range = parse_range(rs) if rs else range(0, q + 1)
            for r in r_range:
                if r > q:
                    continue
                for n in ns:
                    knot = TwistedTorusKnot(p, q, r, n)
                    cls = classify(knot)
                    if cls.verdict is Verdict.PRIMITIVE_SEIFERT and not (
                        cls.primitive_Hprime and not cls.primitive_H and cls.seifert_H
                    ):
                        violations += 1
                    if args.only and cls.verdict.value != args.only:
                        continue
                    rows.append((knot, cls))
    payload = {
        "rows": [
            {"knot": k.to_json(), "slope": surface_slope(k), **c.to_json()} for k, c in rows
        ],
        "count": len(rows),
        "violations": violations,
    }
    lines = [f"{'knot':<18} {'slope':>7}  {'H':<5} {'H_prime':<7} {'seifert_H':<10} verdict"]
    for k, c in rows:
        sd = str(c.seifert_H.multiplicities) if c.seifert_H else "-"
        lines.append(
            f"{str(k):<18} {surface_slope(k):>7}  {str(c.primitive_H):<5} "
            f"{str(c.primitive_Hprime):<7} {sd:<10} {c.verdict.value}"
        )
    lines.append(f"{len(rows)} rows, {violations} invariant violations")
    out.emit(payload, "\n".join(lines))
    return 0 if violations == 0 else 1


# ---------------------------------------------------------------------------
# argument parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=_env_default("json", False, bool),
                        help="emit JSON instead of text")
    common.add_argument("--budget", type=int, default=_env_default("budget", DEFAULT_BUDGET, int),
                        help="node budget for conjugacy search")
    common.add_argument("--strands-cap", type=int,
                        default=_env_default("strands_cap", DEFAULT_STRANDS_CAP, int),
                        help="refuse braids on more strands than this")
    common.add_argument("--degree-cap", type=int,
                        default=_env_default("degree_cap", DEFAULT_DEGREE_CAP, int),
                        help="refuse Alexander computations on longer words")
    common.add_argument("--no-timing", action="store_true",
                        default=_env_default("no_timing", False, bool),
                        help="omit wall-clock timings so output is byte-stable")

    parser = argparse.ArgumentParser(prog="ttbraid", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ttbraid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_cmd(name: str, fn, help_: str) -> None:
        sp = sub.add_parser(name, parents=[common], help=help_)
        for field in ("p", "q", "r", "n"):
            sp.add_argument(field, type=int)
        sp.set_defaults(func=fn)

    knot_cmd("braid", cmd_braid, "braid word of K(p,q,r,n) as JSON")
    knot_cmd("slope", cmd_slope, "surface slope pq + n r^2")
    knot_cmd("classify", cmd_classify, "primitive/Seifert classification")
    knot_cmd("surgery", cmd_surgery, "predicted surface-slope surgery")

    braid_help = "braid as inline JSON, a JSON file, or strands:i,j,-k"
    for name, fn, help_ in (
        ("nf", cmd_nf, "left normal form"),
        ("alex", cmd_alex, "Alexander polynomial of the closure"),
        ("components", cmd_components, "number of closure components"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("word", help=braid_help)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("eq", parents=[common], help="decide A = B")
    sp.add_argument("a", help=braid_help)
    sp.add_argument("b", help=braid_help)
    sp.set_defaults(func=cmd_eq)

    sp = sub.add_parser("conj", parents=[common],
                        help="decide C^-1 A C = B, or search for a conjugator when C is omitted")
    sp.add_argument("a", help=braid_help)
    sp.add_argument("b", help=braid_help)
    sp.add_argument("c", nargs="?", help=braid_help)
    sp.set_defaults(func=cmd_conj)

    sp = sub.add_parser("verify", parents=[common], help="run verification reports")
    sp.add_argument("what", choices=["p1", "t1", "p1th", "lemmas", "chain", "slopes", "all"])
    sp.add_argument("--range", "--r", "--q", dest="range",
                    default=_env_default("range", None),
                    help="a..b: r for p1/lemmas/chain, q for t1/p1th")
    sp.add_argument("--k", default=None, help="a..b range of k for t1/p1th (default 2..3)")
    sp.add_argument("--max-strands", type=int, default=10,
                    help="strand bound for the exhaustive L1/L3 sweeps")
    sp.add_argument("--jobs", type=int, default=_env_default("jobs", 1, int),
                    help="worker processes (output order is unaffected)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", parents=[common], help="classification table over a box")
    sp.add_argument("--p", default="1..60", help="a..b range of p")
    sp.add_argument("--q", default="2..12", help="a..b range of q")
    sp.add_argument("--r", default=None, help="a..b range of r (default 0..q)")
    sp.add_argument("--n", default="-1,1", help="comma-separated twist counts")
    sp.add_argument("--only", choices=[v.value for v in Verdict], default=None,
                    help="list only rows with this verdict")
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"ttbraid: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, None) else 2
    out = Output(args.json, not args.no_timing)
    try:
        return args.func(args, out)
    except (UsageError, ResourceLimitError) as exc:
        print(f"ttbraid: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"ttbraid: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
