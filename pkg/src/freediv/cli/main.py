"""Command-line front end.

    freediv analyze EXPR --ring x,y,z [--tasks divisor,blowup,...]
    freediv family family1:n=5 [--check]
    freediv regress [--include-slow] [--only NAME]
    freediv hessian-experiment (EXPR --ring ... | --family SPEC)

Exit codes: 0 ok, 1 assertion or regression failure, 2 usage or parse
error, 3 deadline reached somewhere in the run.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .. import __version__, budget
from .. import blowup as bl
from .. import divisor as dv
from .. import maxspread as ms
from ..families import FamilyError, build, default_corpus, parse_spec
from ..parser import ParseError
from ..ring import Ring
from .evaluate import Session, evaluate, normalize

SCHEMA = 1
TASKS = ("divisor", "blowup", "maxspread", "hessian", "depth-table", "homaloidal")
DEFAULT_TASKS = ("divisor", "blowup", "maxspread")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class AnalysisRequest:
    ring: list
    polynomial: object
    source: str
    tasks: list = field(default_factory=lambda: list(DEFAULT_TASKS))
    m_max: int = None
    deadline: float = 300.0
    order: str = "grevlex"

    def __post_init__(self):
        if not self.tasks:
            raise UsageError("no tasks requested")
        bad = [t for t in self.tasks if t not in TASKS]
        if bad:
            raise UsageError("unknown task(s): %s" % ", ".join(bad))
        if self.deadline is not None and self.deadline <= 0:
            raise UsageError("deadline must be positive")

    def echo(self):
        return {
            "ring": list(self.ring),
            "order": self.order,
            "source": self.source,
            "polynomial": str(self.polynomial),
            "tasks": list(self.tasks),
            "max_power": self.m_max or len(self.ring),
            "deadline": self.deadline,
        }


# -- pipelines ----------------------------------------------------------------

def _task_divisor(f, req):
    return dv.divisor_report(f).as_dict()


def _task_blowup(f, req):
    ctx = bl.BlowupContext.jacobian(f)
    return bl.blowup_report(ctx).as_dict()


def _task_maxspread(f, req):
    rep = ms.max_spread_check(f)
    rep.ext_consistency = ms.ext_consistency_check(f)
    d = rep.as_dict()
    return {k: d[k] for k in ("hessian_det_nonzero", "dim_Cf", "analytic_spread",
                              "max_spread", "ext_consistency")}


def _task_depth(f, req):
    tab = ms.depth_power_table(f, req.m_max or f.ring.n)
    out = tab.as_dict()
    out["depth_zero_witness"] = tab.zero_witness()
    return out


def _task_homaloidal(f, req):
    verdict, ev = ms.homaloidal_sufficient(f, req.m_max)
    return {"verdict": verdict, "evidence": ev}


def _task_hessian(f, req):
    return ms.hessian_experiment(f)


PIPELINES = {
    "divisor": _task_divisor,
    "blowup": _task_blowup,
    "maxspread": _task_maxspread,
    "depth-table": _task_depth,
    "homaloidal": _task_homaloidal,
    "hessian": _task_hessian,
}


def run(req, timing=False):
    """Run the requested tasks under one shared deadline; returns (envelope, exit code)."""
    results = {}
    truncated = []
    times = {}
    code = EXIT_OK
    with budget.deadline(req.deadline):
        for task in TASKS:
            if task not in req.tasks:
                continue
            t0 = time.perf_counter()
            try:
                results[task] = normalize(PIPELINES[task](req.polynomial, req))
            except budget.ResourceExhausted:
                results[task] = {"truncated": True}
                truncated.append(task)
            except dv.DivisorError as e:
                results[task] = {"error": str(e)}
            except AssertionError as e:
                results[task] = {"error": "internal inconsistency: %s" % e}
                code = EXIT_FAIL
            times[task] = round(time.perf_counter() - t0, 3)
            if isinstance(results[task], dict) and results[task].get("truncated"):
                if task not in truncated:
                    truncated.append(task)
    env = {"schema": SCHEMA, "engine": "freediv %s" % __version__,
           "request": req.echo(), "results": results, "truncated": truncated}
    if timing:
        env["timing"] = times
    if code == EXIT_OK and truncated:
        code = EXIT_EXHAUSTED
    return env, code


# -- regression ---------------------------------------------------------------

def _corrupt(value):
    if isinstance(value, bool):
        return not value
    if isinstance(value, int):
        return value + 1
    return "<corrupted>"


def regress_fixture(fx, deadline=None, corrupt=()):
    entry = {"fixture": fx.name, "polynomial": str(fx.polynomial), "checks": []}
    if fx.rejected:
        entry["rejected"] = fx.reason
        return entry
    s = Session(fx)
    with budget.deadline(deadline):
        for key in sorted(fx.expected):
            exp = fx.expected[key]
            want = exp.value
            if (fx.name, key) in corrupt or (fx.name, "*") in corrupt:
                want = _corrupt(want)
            rec = {"key": key, "expected": normalize(want), "claim": exp.claim}
            try:
                got, ok = evaluate(s, key, want)
                rec["computed"] = got
                if ok:
                    rec["status"] = "pass"
                elif exp.discrepancy and want == exp.value:
                    rec["status"] = "discrepancy"
                    rec["note"] = exp.discrepancy
                else:
                    rec["status"] = "fail"
            except budget.ResourceExhausted:
                rec["status"] = "truncated"
            except Exception as e:   # reported, never hidden
                rec["status"] = "error"
                rec["error"] = "%s: %s" % (type(e).__name__, e)
            entry["checks"].append(rec)
    return entry


def regress(include_slow=False, only=(), deadline=None, corrupt=()):
    fixtures = default_corpus(include_slow=include_slow or bool(only))
    if only:
        fixtures = [fx for fx in fixtures if fx.name in only]
        missing = set(only) - {fx.name for fx in fixtures}
        if missing:
            raise UsageError("unknown fixture(s): %s" % ", ".join(sorted(missing)))
    entries = [regress_fixture(fx, deadline, corrupt) for fx in fixtures]
    counts = {}
    for e in entries:
        for c in e["checks"]:
            counts[c["status"]] = counts.get(c["status"], 0) + 1
    env = {"schema": SCHEMA, "engine": "freediv %s" % __version__,
           "include_slow": include_slow, "fixtures": entries,
           "summary": {k: counts[k] for k in sorted(counts)}}
    if counts.get("fail") or counts.get("error"):
        code = EXIT_FAIL
    elif counts.get("truncated"):
        code = EXIT_EXHAUSTED
    else:
        code = EXIT_OK
    return env, code


def regress_text(env):
    lines = []
    for e in env["fixtures"]:
        if "rejected" in e:
            lines.append("REJECTED %s: %s" % (e["fixture"], e["rejected"]))
            continue
        for c in e["checks"]:
            st = c["status"]
            head = "%-11s %s %s" % (st.upper(), e["fixture"], c["key"])
            if st == "pass":
                lines.append(head)
            elif st in ("fail", "discrepancy"):
                lines.append("%s: expected %s, computed %s" % (head, _show(c["expected"]), _show(c["computed"])))
                lines.append("            claim: %s" % c["claim"])
                if st == "discrepancy":
                    lines.append("            note: %s" % c["note"])
            elif st == "error":
                lines.append("%s: %s" % (head, c["error"]))
            else:
                lines.append(head)
    s = env["summary"]
    lines.append("summary: " + ", ".join("%s=%d" % (k, s[k]) for k in sorted(s)))
    return "\n".join(lines)


# -- output -------------------------------------------------------------------

def _show(v):
    return json.dumps(v, sort_keys=False)


def to_json(env):
    return json.dumps(env, indent=2, sort_keys=False)


def to_text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append("%s%s:" % (pad, k))
                lines.append(to_text(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, _show(v)))
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append("%s-" % pad)
                lines.append(to_text(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, _show(v)))
    else:
        lines.append(pad + _show(obj))
    return "\n".join(lines)


def _flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


# -- argument handling --------------------------------------------------------

def _parse_ring(text, order):
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise UsageError("--ring needs at least one variable")
    try:
        return Ring(names, order=order)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _polynomial_from_args(args):
    """(ring, polynomial, source description)."""
    if getattr(args, "family", None):
        fx = build(parse_spec(args.family))
        if fx.rejected:
            raise UsageError("fixture %s rejected: %s" % (fx.name, fx.reason))
        return fx.ring, fx.polynomial, "family %s" % fx.name, fx
    text = args.expression
    if getattr(args, "file", None):
        with open(args.file) as fh:
            text = fh.read().strip()
    if text is None:
        raise UsageError("give an expression, --file or --family")
    if not args.ring:
        raise UsageError("--ring is required for an explicit polynomial")
    ring = _parse_ring(args.ring, args.order)
    return ring, ring(text), "expression", None


def _tasks(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _emit(env, fmt, out):
    out.write((to_json(env) if fmt == "json" else to_text(env)) + "\n")


def _add_common(p, tasks=True):
    p.add_argument("--ring", help="comma-separated variable list, e.g. x,y,z")
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    if tasks:
        p.add_argument("--tasks", default=",".join(DEFAULT_TASKS),
                       help="comma-separated subset of: %s" % ", ".join(TASKS))
    p.add_argument("--max-power", type=int, default=None, help="largest power for depth tables (default n)")
    p.add_argument("--deadline", type=float, default=300.0, help="wall-clock seconds (default 300)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="include per-task timings in the report")


def build_parser():
    ap = argparse.ArgumentParser(prog="freediv", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version="freediv %s" % __version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one homogeneous polynomial")
    p.add_argument("expression", nargs="?")
    p.add_argument("--file", help="read the polynomial from a file")
    p.add_argument("--family", help="use a family constructor, e.g. family1:n=5")
    _add_common(p)

    p = sub.add_parser("family", help="build a family member and analyze it")
    p.add_argument("spec", help="e.g. family1:n=5, family4:L=y;x;x, example:sextic")
    p.add_argument("--check", action="store_true", help="also evaluate the fixture's expectations")
    p.add_argument("--allow-large", action="store_true", help="lift the parameter caps")
    _add_common(p)

    p = sub.add_parser("regress", help="run the fixture regression suite")
    p.add_argument("--include-slow", action="store_true")
    p.add_argument("--only", action="append", default=[], help="restrict to a fixture name (repeatable)")
    p.add_argument("--deadline", type=float, default=300.0, help="seconds per fixture (default 300)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--corrupt", action="append", default=[], metavar="FIXTURE:KEY",
                   help="flip one expectation (harness self-test)")

    p = sub.add_parser("hessian-experiment", help="Hessian determinant experiment")
    p.add_argument("expression", nargs="?")
    p.add_argument("--file")
    p.add_argument("--family")
    p.add_argument("--include-slow", action="store_true", help="allow long-running inputs")
    _add_common(p, tasks=False)
    return ap


def _corrupt_pairs(items):
    out = set()
    for it in items:
        if ":" not in it:
            raise UsageError("--corrupt expects FIXTURE:KEY")
        name, key = it.rsplit(":", 1)
        out.add((name, key))
    return out


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "regress":
            env, code = regress(args.include_slow, tuple(args.only), args.deadline,
                                _corrupt_pairs(args.corrupt))
            out.write((to_json(env) if args.format == "json" else regress_text(env)) + "\n")
            return code
        if args.command == "family":
            spec = parse_spec(args.spec)
            spec.allow_large = args.allow_large
            fx = build(spec)
            if fx.rejected:
                env = {"schema": SCHEMA, "engine": "freediv %s" % __version__,
                       "fixture": fx.name, "polynomial": str(fx.polynomial), "rejected": fx.reason}
                _emit(env, args.format, out)
                return EXIT_OK
            req = AnalysisRequest(list(fx.ring.names), fx.polynomial, "family %s" % fx.name,
                                  _tasks(args.tasks), args.max_power, args.deadline, args.order)
            env, code = run(req, args.timing)
            if args.check:
                entry = regress_fixture(fx, args.deadline)
                env["checks"] = entry["checks"]
                st = {c["status"] for c in entry["checks"]}
                if st & {"fail", "error"}:
                    code = EXIT_FAIL
                elif "truncated" in st and code == EXIT_OK:
                    code = EXIT_EXHAUSTED
            _emit(env, args.format, out)
            return code
        if args.command == "hessian-experiment":
            ring, f, src, fx = _polynomial_from_args(args)
            if fx is not None and fx.slow and not args.include_slow:
                raise UsageError("%s is long-running; pass --include-slow" % fx.name)
            req = AnalysisRequest(list(ring.names), f, src, ["hessian"], args.max_power,
                                  args.deadline, args.order)
            env, code = run(req, args.timing)
            _emit(env, args.format, out)
            return code
        # analyze
        ring, f, src, _ = _polynomial_from_args(args)
        req = AnalysisRequest(list(ring.names), f, src, _tasks(args.tasks), args.max_power,
                              args.deadline, args.order)
        env, code = run(req, args.timing)
        _emit(env, args.format, out)
        return code
    except ParseError as e:
        sys.stderr.write("parse error: %s\n" % e)
        return EXIT_USAGE
    except (UsageError, FamilyError, OSError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_USAGE


def entry():
    sys.exit(main())
