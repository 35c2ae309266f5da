"""Command-line interface.

Exit codes: 0 success / positive answer, 2 negative answer (invalid input
document, not a pushout, not isomorphic, no such match), 1 I/O or parse
error. Errors are also written to stderr as one JSON object per line.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import fileformat as ff
from .errors import DPOError, ParseError, ValidationError
from .generate import random_graph
from .matching import find_matches
from .morphism import find_isomorphism
from .pushout import OracleBound, check_universal_property_oracle, is_pushout
from .rewrite import direct_derive

EXIT_OK, EXIT_ERROR, EXIT_NO = 0, 1, 2


def _diag(stream, **fields) -> None:
    stream.write(json.dumps(fields, sort_keys=True) + "\n")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _alphabet(arg):
    return None if arg is None else [s for s in arg.split(",") if s]


def _compact(morphism) -> str:
    return json.dumps(json.loads(ff.serialize_morphism(morphism)), separators=(",", ":"))


def cmd_validate(args, out, err) -> int:
    kind, _ = ff.parse_document(_read(args.file), alphabet=_alphabet(args.alphabet))
    out.write(f"ok ({kind})\n")
    return EXIT_OK


def cmd_match(args, out, err) -> int:
    rule = ff.parse_rule(_read(args.rule))
    host = ff.parse_graph(_read(args.host))
    matches = find_matches(rule, host)
    for i, m in enumerate(matches):
        out.write(f"[{i}] {_compact(m.morphism)}\n")
    out.write(f"matches: {len(matches)}\n")
    return EXIT_OK


def _with_index(path: Path, i: int) -> Path:
    return path.with_name(f"{path.stem}.{i}{path.suffix}")


def cmd_apply(args, out, err) -> int:
    rule = ff.parse_rule(_read(args.rule))
    host = ff.parse_graph(_read(args.host))
    matches = find_matches(rule, host)
    if args.all:
        chosen = list(enumerate(matches))
    elif args.match < len(matches):
        chosen = [(args.match, matches[args.match])]
    else:
        _diag(err, level="error", error="NoSuchMatch", index=args.match, matches=len(matches))
        return EXIT_NO
    target = Path(args.out)
    for i, m in chosen:
        trace = direct_derive(rule, host, m.morphism)
        path = _with_index(target, i) if args.all else target
        path.write_text(ff.serialize_graph(trace.result), encoding="utf-8")
        if args.dump_intermediate:
            dump = Path(args.dump_intermediate)
            dump = _with_index(dump, i) if args.all else dump
            doc = {
                "match": json.loads(ff.serialize_morphism(trace.match)),
                "deleted": json.loads(ff.serialize_graph(trace.deletion.graph)),
                "glued": json.loads(ff.serialize_graph(trace.gluing.graph)),
                "norm": json.loads(ff.serialize_morphism(trace.norm)),
            }
            dump.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        out.write(f"[{i}] wrote {path}\n")
    out.write(f"applied: {len(chosen)}\n")
    return EXIT_OK


def cmd_check_pushout(args, out, err) -> int:
    sq = ff.parse_square(_read(args.square))
    verdict = is_pushout(sq)
    out.write("pushout\n" if verdict else "not a pushout\n")
    if args.oracle:
        res = check_universal_property_oracle(sq, OracleBound(args.oracle_nodes, args.oracle_edges))
        out.write(f"oracle: {'holds' if res else 'fails'} after {res.cocones_checked} cocones\n")
        if bool(res) != verdict:
            _diag(err, level="error", error="OracleDisagreement")
            return EXIT_ERROR
    return EXIT_OK if verdict else EXIT_NO


def cmd_iso(args, out, err) -> int:
    a = ff.parse_graph(_read(args.a))
    b = ff.parse_graph(_read(args.b))
    u = find_isomorphism(a, b)
    if u is None:
        out.write("not isomorphic\n")
        return EXIT_NO
    out.write(ff.serialize_morphism(u))
    return EXIT_OK


def cmd_export_dot(args, out, err) -> int:
    g = ff.parse_graph(_read(args.file))
    text = ff.export_dot(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def cmd_random_graph(args, out, err) -> int:
    rng = random.Random(0 if args.seed is None else args.seed)
    g = random_graph(rng, args.nodes, args.edges, tuple(_alphabet(args.labels)))
    out.write(ff.serialize_graph(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dporewrite", description="Double-pushout graph rewriting.")
    p.add_argument("--seed", type=int, default=None, help="seed for generator-based commands")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a graph, rule or square document")
    s.add_argument("file")
    s.add_argument("--alphabet", help="comma-separated admissible labels")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("match", help="list the matches of a rule in a host graph")
    s.add_argument("--rule", required=True)
    s.add_argument("--host", required=True)
    s.set_defaults(func=cmd_match)

    s = sub.add_parser("apply", help="apply a rule and write the result graph")
    s.add_argument("--rule", required=True)
    s.add_argument("--host", required=True)
    which = s.add_mutually_exclusive_group()
    which.add_argument("--match", type=int, default=0)
    which.add_argument("--all", action="store_true")
    s.add_argument("--out", required=True)
    s.add_argument("--dump-intermediate", help="also write D, the tagged gluing and the renaming")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("check-pushout", help="decide whether a square is a pushout")
    s.add_argument("--square", required=True)
    s.add_argument("--oracle", action="store_true", help="cross-check with the cocone oracle")
    s.add_argument("--oracle-nodes", type=int, default=3)
    s.add_argument("--oracle-edges", type=int, default=3)
    s.set_defaults(func=cmd_check_pushout)

    s = sub.add_parser("iso", help="search for an isomorphism between two graphs")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("export-dot", help="render a graph in Graphviz DOT")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("random-graph", help="print a random graph (uses --seed)")
    s.add_argument("--nodes", type=int, default=4)
    s.add_argument("--edges", type=int, default=4)
    s.add_argument("--labels", default="a,b")
    s.set_defaults(func=cmd_random_graph)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        _diag(err, level="info", seed=args.seed)
    try:
        return args.func(args, out, err)
    except ValidationError as exc:
        out.write(f"invalid: {exc.report}\n")
        _diag(
            err,
            level="error",
            error="ValidationError",
            violations=[[v.clause, str(v.item), v.detail] for v in exc.report.violations],
        )
        return EXIT_NO
    except ParseError as exc:
        _diag(err, level="error", error="ParseError", message=exc.message,
              line=exc.line, column=exc.column, path=exc.path)
        return EXIT_ERROR
    except OSError as exc:
        _diag(err, level="error", error=type(exc).__name__, message=str(exc))
        return EXIT_ERROR
    except DPOError as exc:
        _diag(err, level="error", error=type(exc).__name__, message=str(exc))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
