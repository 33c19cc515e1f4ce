"""
XNLP companion - command line front end
solve / reduce / verify / gen / info over JSON instance documents

Documents go to stdout, diagnostics and status lines to stderr. A NO decision is
payload, not failure: exit status is 0 unless the command itself fails.

USAGE:
    python3 core/app.py solve bandwidth instance.json
    python3 core/app.py gen chained-cnf --seed 3 | python3 core/app.py reduce cnf-positivize,chained-sat-to-list-coloring
    python3 core/app.py verify all
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

# Add the parent directory to Python path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import DEFAULT_BUDGET, EXIT_CODES, LOG_LEVEL, SOLVE_MODES
from core.errors import (CertificateShapeError, ParseError, ReductionError, ResourceError, UnknownIdError,
                         ValidationError)
from brain.generators import ENUMERATORS, RANDOMIZERS, enumerate_instances, random_instance
from brain.manifest import load_manifest, reduction_stream
from brain.reports import reports_document, reports_table
from brain.verifier import verify_reduction
from core.system_health_check import run_health_check
from tentacles.instances.codec import dumps, from_document, to_document
from tentacles.reductions.registry import REDUCTIONS, compose, reduction_for, reduction_graph
from tentacles.solvers.base import SolveMode
from tentacles.solvers.registry import PROBLEMS, SOLVERS, solve

logger = logging.getLogger(__name__)


def configure_logging(level: str = LOG_LEVEL):
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )


def _read(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def load_instance(path: str) -> Any:
    """An instance document, or the target of a reduce output piped in"""
    try:
        doc = json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if isinstance(doc, dict) and 'kind' not in doc and 'target' in doc:
        doc = doc['target']
    return from_document(doc)


def _value(raw: str) -> Any:
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def _pairs(items: Optional[Sequence[str]]) -> Dict[str, Any]:
    out = {}
    for item in items or ():
        if '=' not in item:
            raise ParseError(f"expected key=value, got '{item}'")
        key, raw = item.split('=', 1)
        out[key] = _value(raw)
    return out


def cmd_solve(args) -> Dict[str, Any]:
    instance = load_instance(args.file)
    answer = solve(instance, mode=SolveMode(args.mode), budget=args.budget,
                   problem=None if args.problem in (None, instance.KIND) else args.problem)
    return answer.to_document()


def cmd_reduce(args) -> Dict[str, Any]:
    ids = [i.strip() for i in args.reduction.split(',') if i.strip()]
    pipeline = compose(ids)
    outputs = pipeline(load_instance(args.file))
    if len(outputs) == 1:
        return outputs[0].to_document()
    return {
        'chain': ids,
        'target': to_document(outputs[-1].target),
        'parameter': outputs[-1].new_parameter,
        'steps': [{'reduction': rid, 'parameter': out.new_parameter, 'constants': out.to_document()['constants']}
                  for rid, out in zip(ids, outputs)],
    }


def cmd_verify(args) -> Dict[str, Any]:
    timing = not args.no_timing
    if args.reduction == 'all':
        status = run_health_check(budget=args.budget, workers=args.workers, mutants=not args.no_mutants,
                                  manifest_path=args.manifest)
        reports = status['modes'] + status['reductions']
        doc = reports_document(reports, timing)
        doc['mutants'] = status['mutants']
        doc['ok'] = status['healthy']
    else:
        manifest = load_manifest(args.manifest)
        reports = [verify_reduction(rid, reduction_stream(rid, manifest), budget=args.budget, workers=args.workers)
                   for rid in args.reduction.split(',')]
        print(reports_table(reports, timing), file=sys.stderr)
        doc = reports_document(reports, timing)
    if not doc['ok']:
        args.failed = True
    return doc


def cmd_gen(args) -> Any:
    params = _pairs(args.param)
    if args.enumerate:
        return [to_document(x) for x in enumerate_instances(args.kind, params, args.limit)]
    return to_document(random_instance(args.kind, args.seed, params))


def cmd_info(args) -> Dict[str, Any]:
    if args.reduction is None:
        g = reduction_graph()
        return {
            'reductions': sorted(REDUCTIONS),
            'kinds': sorted(g.nodes),
            'solvers': sorted(SOLVERS),
            'problems': sorted(PROBLEMS),
            'generators': sorted(ENUMERATORS),
            'random': sorted(RANDOMIZERS),
        }
    r = reduction_for(args.reduction)
    return {
        'id': r.id,
        'source': r.source,
        'target': r.target,
        'bound': r.bound_formula,
        'description': r.description,
        'transfer': r.transfer is not None,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='xnlp', description="XNLP companion: solvers, reductions and their verification")
    parser.add_argument('--budget', type=int, default=None, help=f"solver step budget (default {DEFAULT_BUDGET})")
    parser.add_argument('--no-timing', action='store_true', help="omit wall-time fields")
    parser.add_argument('--log-level', default=LOG_LEVEL)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('solve', help="decide an instance")
    p.add_argument('problem', help="instance kind or problem name")
    p.add_argument('file', nargs='?', default='-')
    p.add_argument('--mode', choices=SOLVE_MODES, default='structured')
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser('reduce', help="apply a reduction or a comma-separated chain")
    p.add_argument('reduction')
    p.add_argument('file', nargs='?', default='-')
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser('verify', help="verify reductions against the manifest streams")
    p.add_argument('reduction', help="reduction id, comma-separated ids, or 'all'")
    p.add_argument('--manifest', default=None)
    p.add_argument('--workers', type=int, default=None)
    p.add_argument('--no-mutants', action='store_true')
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser('gen', help="generate a random instance or enumerate a bounded family")
    p.add_argument('kind')
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--enumerate', action='store_true')
    p.add_argument('--limit', type=int, default=None)
    p.add_argument('--param', action='append', metavar='KEY=VALUE',
                   help="generator parameter or enumeration bound, JSON values")
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser('info', help="describe a reduction, or list everything registered")
    p.add_argument('reduction', nargs='?', default=None)
    p.set_defaults(run=cmd_info)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CODES['ok'] if e.code == 0 else EXIT_CODES['usage']
    configure_logging(args.log_level)
    args.failed = False

    try:
        doc = args.run(args)
    except ResourceError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CODES['resource']
    except (ParseError, UnknownIdError, ValidationError, ReductionError, CertificateShapeError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CODES['usage']
    except OSError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CODES['usage']

    print(dumps(doc))
    return EXIT_CODES['verification'] if args.failed else EXIT_CODES['ok']


if __name__ == "__main__":
    sys.exit(main())
