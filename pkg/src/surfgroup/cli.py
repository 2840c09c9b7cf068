"""Command line entry point: ``surfgroup <command> [options]``.

Exit codes: 0 success, 2 bad input or violated precondition, 3 budget
exhausted, 4 internal invariant broken.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields

from . import oracle
from .conjugacy import conjugator, is_conjugate, lower_bound_witness, upper_bound
from .cyclic import cyclic_normal_form
from .errors import (
    ContractError,
    IncompatibleWordsError,
    InvalidGenusError,
    InvalidLetterError,
    InvalidParameterError,
    InvariantError,
    NonTerminationError,
    ParseError,
    ResourceError,
)
from .llfr import find_llfrs, prepare_conjugation_form
from .presentation import Word, format_word, parse_word, tables
from .rewrite import normal_form
from .sampling import random_letters

EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4


@dataclass
class SurveyRecord:
    genus: int
    u: str
    v: str
    conjugate: bool
    conjugator_len: object
    bound: int
    exact_cl: object
    r_sum: object
    elapsed_ms: object

    @staticmethod
    def columns():
        return [f.name for f in fields(SurveyRecord)]

    def key(self):
        return (self.u, self.v)


# -- helpers ----------------------------------------------------------------------


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _parse(args, text) -> Word:
    return parse_word(text, args.genus, args.format)


def _fmt(args, w: Word) -> str:
    return format_word(w, args.format)


# -- commands -----------------------------------------------------------------------


def cmd_nf(args):
    w = _parse(args, args.word)
    final, trace = normal_form(w)
    _emit(args, {"input": _fmt(args, w), "nf": _fmt(args, final), "length": len(final)}, _fmt(args, final))
    if args.trace:
        print(trace.serialize(args.format))
    return 0


def cmd_cnf(args):
    w = _parse(args, args.word)
    res = cyclic_normal_form(w, max_states=args.max_states)
    payload = {
        "input": _fmt(args, w),
        "class_nf": _fmt(args, res.class_nf),
        "conjugator": _fmt(args, res.conjugator),
        "rotation_offset": res.rotation_offset,
    }
    _emit(
        args,
        payload,
        f"class_nf: {payload['class_nf']}\nconjugator: {payload['conjugator']}",
    )
    if args.trace:
        print(res.trace.serialize(args.format))
    return 0


def cmd_is_conj(args):
    u, v = _parse(args, args.u), _parse(args, args.v)
    ans = is_conjugate(u, v)
    _emit(args, {"u": _fmt(args, u), "v": _fmt(args, v), "conjugate": ans}, "true" if ans else "false")
    return 0


def cmd_conjugator(args):
    u, v = _parse(args, args.u), _parse(args, args.v)
    cert = conjugator(u, v, exact=args.exact, max_depth=args.max_depth, max_states=args.max_states)
    print(json.dumps(cert.to_dict(args.format)))
    return 0


def cmd_cl_exact(args):
    u, v = _parse(args, args.u), _parse(args, args.v)
    got = oracle.exact_cl(u, v, args.max_depth, args.max_states)
    if args.json:
        print(json.dumps({"u": _fmt(args, u), "v": _fmt(args, v), "exact_cl": got}))
    else:
        print(got)
    return EXIT_RESOURCE if got == oracle.EXHAUSTED else 0


def cmd_witness(args):
    u, v, expected = lower_bound_witness(args.genus, args.n)
    payload = {"u": _fmt(args, u), "v": _fmt(args, v), "expected_cl": expected}
    if args.exact:
        payload["exact_cl"] = oracle.exact_cl(u, v, args.max_depth, args.max_states)
    lines = [f"{k}: {val}" for k, val in payload.items()]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_prepare(args):
    u = _parse(args, args.word)
    form = prepare_conjugation_form(u)
    whole = form.X.inverse() + form.Aprime + form.X
    report = [
        {"start": r.start, "length": r.length, "relator": tables(args.genus).family.describe(r.relator_id)}
        for r in find_llfrs(whole)
    ]
    payload = {
        "X": _fmt(args, form.X),
        "Aprime": _fmt(args, form.Aprime),
        "rotation_offset": form.rotation_offset,
        "llfrs": report,
    }
    longest = max((r["length"] for r in report), default=0)
    text = "\n".join(
        [
            f"X: {payload['X']}",
            f"Aprime: {payload['Aprime']}",
            f"rotation_offset: {form.rotation_offset}",
            f"llfrs: {len(report)} (longest {longest})",
        ]
        + [f"  {r['start']} {r['length']} {r['relator']}" for r in report]
    )
    _emit(args, payload, text)
    return 0


def cmd_selfcheck(args):
    from .selfcheck import run_all

    results = run_all(quick=not args.full)
    for r in results:
        print(r.line(), flush=True)
    return 0 if all(r.passed for r in results) else EXIT_INVARIANT


# -- survey ---------------------------------------------------------------------------


def _survey_pairs(args):
    g = args.genus
    if args.radius is not None:
        ball = sorted(oracle.cayley_ball(g, args.radius, args.max_states), key=lambda w: (len(w), w.letters))
        for i, u in enumerate(ball):
            for v in ball[i + 1 :]:
                yield u, v
        return
    rng = random.Random(args.seed)
    for _ in range(args.samples):
        u = Word._trusted(random_letters(rng, g, args.max_len), g)
        if rng.random() < 0.5:
            s = random_letters(rng, g, args.max_len // 2)
            v = Word._trusted(tuple(-x for x in reversed(s)) + u.letters + s, g)
        else:
            v = Word._trusted(random_letters(rng, g, args.max_len), g)
        yield u, v


def _survey_record(args, u, v):
    t = time.perf_counter()
    if args.conjugate_only and not is_conjugate(u, v):
        return None
    cert = conjugator(u, v, exact=False)
    ecl = None
    if cert.conjugate and args.exact:
        ecl = oracle.exact_cl(u, v, args.max_depth, args.max_states)
    elapsed = round((time.perf_counter() - t) * 1000, 3) if args.timing else None
    return SurveyRecord(
        genus=args.genus,
        u=_fmt(args, u),
        v=_fmt(args, v),
        conjugate=cert.conjugate,
        conjugator_len=cert.conjugator_len,
        bound=upper_bound(u, v),
        exact_cl=ecl,
        r_sum=cert.r_sum,
        elapsed_ms=elapsed,
    )


def _done_keys(path, sink):
    keys = set()
    if not path or not os.path.exists(path):
        return keys
    with open(path, newline="") as fh:
        if sink == "csv":
            for row in csv.DictReader(fh):
                keys.add((row["u"], row["v"]))
        else:
            for line in fh:
                line = line.strip()
                if line:
                    rec = json.loads(line)
                    keys.add((rec["u"], rec["v"]))
    return keys


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def cmd_survey(args):
    if args.radius is None and args.samples is None:
        raise InvalidParameterError("survey needs --radius or --samples")
    sink = args.sink
    done = _done_keys(args.out, sink) if args.resume else set()
    pairs = [
        (u, v) for u, v in _survey_pairs(args) if (_fmt(args, u), _fmt(args, v)) not in done
    ]
    appending = args.resume and args.out and os.path.exists(args.out)
    fh = open(args.out, "a" if appending else "w", newline="") if args.out else sys.stdout
    try:
        writer = None
        if sink == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            if not appending:
                writer.writerow(SurveyRecord.columns())
        # map() yields in submission order, so output order never depends on scheduling
        with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
            for rec in pool.map(lambda p: _survey_record(args, *p), pairs, chunksize=64):
                if rec is None:
                    continue
                if writer is not None:
                    writer.writerow([_csv_cell(getattr(rec, c)) for c in SurveyRecord.columns()])
                else:
                    fh.write(json.dumps({c: getattr(rec, c) for c in SurveyRecord.columns()}) + "\n")
                fh.flush()
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 0


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", "-g", type=int, default=2)
    common.add_argument("--format", choices=("int", "alpha"), default="int")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trace", action="store_true", help="print the rewrite trace")
    common.add_argument("--max-states", type=int, default=oracle.DEFAULT_MAX_STATES)
    common.add_argument("--max-depth", type=int, default=oracle.DEFAULT_MAX_DEPTH)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="surfgroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    add("nf", cmd_nf, "normal form of a word").add_argument("word")
    add("cnf", cmd_cnf, "normal form of a conjugacy class").add_argument("word")
    add("prepare", cmd_prepare, "conjugation form X^-1 A' X with the LLFR scan").add_argument("word")
    for name, fn, text in (
        ("is-conj", cmd_is_conj, "decide conjugacy"),
        ("conjugator", cmd_conjugator, "certificate with an explicit conjugator"),
        ("cl-exact", cmd_cl_exact, "exact conjugator length by breadth-first search"),
    ):
        p = add(name, fn, text)
        p.add_argument("u")
        p.add_argument("v")
        if name == "conjugator":
            p.add_argument("--exact", action="store_true", help="also compute the exact length")
    p = add("witness", cmd_witness, "lower-bound pair c_1, c_2^(1-n) c_1 c_2^(n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p = add("survey", cmd_survey, "sweep pairs and write one record per pair")
    p.add_argument("--radius", type=int, help="all unordered pairs of distinct ball elements")
    p.add_argument("--samples", type=int, help="random pairs instead of a ball")
    p.add_argument("--max-len", type=int, default=10, help="word length for --samples")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--sink", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--resume", action="store_true", help="skip pairs already in --out")
    p.add_argument("--conjugate-only", action="store_true")
    p.add_argument("--exact", action="store_true", help="fill exact_cl for conjugate pairs")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte-identical reruns)")
    p = add("selfcheck", cmd_selfcheck, "run the acceptance checks")
    p.add_argument("--full", action="store_true", help="full sizes instead of the quick pass")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ContractError, InvalidGenusError, InvalidLetterError,
            IncompatibleWordsError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvariantError, NonTerminationError) as exc:
        print(f"internal invariant broken: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except BrokenPipeError:  # pragma: no cover - reader went away (e.g. `| head`)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
