"""
JSON instance dialect

One self-describing document per instance: {"kind": ..., "parameter": ..., kind-specific fields}.
Vertex sets are sorted integer arrays, clauses are arrays of signed 1-based integers.
"""

import json
from dataclasses import is_dataclass
from typing import Any, Callable, Dict

from core.errors import ParseError, UnknownIdError, ValidationError
from tentacles.instances.automata import CellularAutomaton, Dfa, DfaCollection
from tentacles.instances.cnf import ChainedCnf, canonical_clauses
from tentacles.instances.counters import Nnccm
from tentacles.instances.emulation import WeightedPathEmulationInstance
from tentacles.instances.graphs import (BandwidthInstance, Graph, ListColoringInstance,
                                        PathDecomposition, VertexProblemInstance)
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.reconfiguration import ReconfigurationInstance
from tentacles.instances.scheduling import SchedulingInstance
from tentacles.instances.strings import LcsInstance
from tentacles.instances.validation import require_valid


def jsonable(obj: Any) -> Any:
    """Plain JSON structure for certificates, constants and nested values"""
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if is_dataclass(obj) and hasattr(obj, 'KIND'):
        return to_document(obj)
    if hasattr(obj, 'item'):
        return obj.item()
    return obj


def _graph_fields(g: Graph) -> Dict[str, Any]:
    return {'n': g.n, 'edges': [list(e) for e in sorted(g.edge_set)]}


def _bags(pd: PathDecomposition):
    return [sorted(b) for b in pd.bags]


ENCODERS: Dict[type, Callable[[Any], Dict[str, Any]]] = {
    Graph: lambda g: _graph_fields(g),
    BandwidthInstance: lambda x: _graph_fields(x.graph),
    ListColoringInstance: lambda x: {
        **_graph_fields(x.graph),
        'bags': _bags(x.pd),
        'lists': [sorted(lst) for lst in x.lists],
        'precolored': list(x.precolored) if x.precolored is not None else None
    },
    VertexProblemInstance: lambda x: {
        **_graph_fields(x.graph), 'bags': _bags(x.pd), 'problem': x.problem, 'K': x.K
    },
    LayeredColoredGraph: lambda x: {
        **_graph_fields(x.graph), 'layer': list(x.layer), 'color': list(x.color),
        'r': x.r, 'k': x.k, 'variant': x.variant
    },
    ChainedCnf: lambda x: {
        'r': x.r, 'q': x.q, 'k': x.k,
        'junctions': [[list(c) for c in cl] for cl in x.junctions],
        'first': [list(c) for c in x.first] if x.first is not None else None,
        'last': [list(c) for c in x.last] if x.last is not None else None,
        'partition': [list(g) for g in x.partition] if x.partition is not None else None,
        'positive': x.positive, 'regular': x.regular
    },
    CellularAutomaton: lambda x: {
        'states': x.states, 'left': x.left, 'right': x.right,
        'transitions': [list(tr) for tr in x.transitions],
        'accepting': sorted(x.accepting), 'initial': list(x.initial),
        't': x.t, 'acceptance': x.acceptance
    },
    Nnccm: lambda x: {'k': x.k, 'n': x.n, 'checks': [list(c) for c in x.checks]},
    SchedulingInstance: lambda x: {
        'tasks': x.tasks, 'prec': [list(p) for p in x.prec],
        'machines': x.machines, 'deadline': x.deadline
    },
    WeightedPathEmulationInstance: lambda x: {
        'n': x.n, 'm': x.m, 'c': x.c, 'weights': list(x.weights)
    },
    ReconfigurationInstance: lambda x: {
        **_graph_fields(x.graph), 'problem': x.kind, 'rule': x.rule,
        'start': sorted(x.start), 'target': sorted(x.target),
        'k': x.k, 'T': x.T, 'exact': x.exact
    },
    DfaCollection: lambda x: {
        'alphabet': list(x.alphabet),
        'automata': [{'states': d.states, 'delta': [list(row) for row in d.delta],
                      'start': d.start, 'accepting': sorted(d.accepting)} for d in x.automata],
        'acyclic': x.acyclic
    },
    LcsInstance: lambda x: {'strings': list(x.strings), 'm': x.m},
}

KINDS: Dict[str, type] = {
    'graph': Graph,
    **{cls.KIND: cls for cls in ENCODERS if hasattr(cls, 'KIND')}
}


def to_document(instance: Any) -> Dict[str, Any]:
    encoder = ENCODERS.get(type(instance))
    if encoder is None:
        raise UnknownIdError('instance type', type(instance).__name__)
    kind = 'graph' if isinstance(instance, Graph) else instance.KIND
    parameter = instance.n if isinstance(instance, Graph) else instance.parameter
    return {'kind': kind, 'parameter': parameter, **encoder(instance)}


def _graph(doc: Dict[str, Any]) -> Graph:
    raw = Graph(int(doc['n']), tuple(tuple(int(x) for x in e) for e in doc.get('edges', [])))
    issues = raw.diagnostics()
    if issues:
        raise ValidationError(issues)
    return Graph.from_edges(raw.n, raw.edges)


def _pd(doc: Dict[str, Any]) -> PathDecomposition:
    return PathDecomposition.from_bags(doc['bags'])


def _clauses(raw):
    return canonical_clauses(raw) if raw is not None else None


DECODERS: Dict[str, Callable[[Dict[str, Any]], Any]] = {
    'graph': _graph,
    'bandwidth': lambda d: BandwidthInstance(_graph(d), int(d.get('k', d.get('parameter', 0)))),
    'list-coloring': lambda d: ListColoringInstance(
        _graph(d), _pd(d), tuple(frozenset(lst) for lst in d['lists']),
        tuple(d['precolored']) if d.get('precolored') is not None else None
    ),
    'pathwidth-vertex-problem': lambda d: VertexProblemInstance(_graph(d), _pd(d), d['problem'], int(d['K'])),
    'layered-graph': lambda d: LayeredColoredGraph(
        _graph(d), tuple(d['layer']), tuple(d['color']), int(d['r']), int(d['k']), d.get('variant', 'clique')
    ),
    'chained-cnf': lambda d: ChainedCnf(
        r=int(d['r']), q=int(d['q']), k=int(d['k']),
        junctions=tuple(canonical_clauses(cl) for cl in d.get('junctions', [])),
        first=_clauses(d.get('first')), last=_clauses(d.get('last')),
        partition=tuple(tuple(g) for g in d['partition']) if d.get('partition') is not None else None,
        positive=bool(d.get('positive', False)), regular=bool(d.get('regular', False))
    ),
    'cellular-automaton': lambda d: CellularAutomaton(
        states=int(d['states']), left=int(d['left']), right=int(d['right']),
        transitions=tuple(tuple(tr) for tr in d['transitions']),
        accepting=frozenset(d['accepting']), initial=tuple(d['initial']),
        t=int(d['t']), acceptance=d.get('acceptance', 'at-least-one')
    ),
    'nnccm': lambda d: Nnccm(int(d['k']), int(d['n']), tuple(tuple(c) for c in d.get('checks', []))),
    'scheduling': lambda d: SchedulingInstance(
        int(d['tasks']), tuple(tuple(p) for p in d.get('prec', [])), int(d['machines']), int(d['deadline'])
    ),
    'uniform-emulation': lambda d: WeightedPathEmulationInstance(
        int(d['n']), int(d['m']), int(d['c']), tuple(d['weights'])
    ),
    'reconfiguration': lambda d: ReconfigurationInstance(
        _graph(d), d['problem'], d['rule'], frozenset(d['start']), frozenset(d['target']),
        int(d['k']), int(d['T']), bool(d.get('exact', False))
    ),
    'dfa-collection': lambda d: DfaCollection(
        tuple(d['alphabet']),
        tuple(Dfa(int(a['states']), tuple(tuple(row) for row in a['delta']), int(a['start']),
                  frozenset(a['accepting'])) for a in d['automata']),
        bool(d.get('acyclic', False))
    ),
    'lcs': lambda d: LcsInstance(tuple(d['strings']), int(d['m'])),
}


def from_document(doc: Dict[str, Any]) -> Any:
    if not isinstance(doc, dict) or 'kind' not in doc:
        raise ParseError("instance document must be an object with a 'kind' field")
    kind = doc['kind']
    if kind not in DECODERS:
        raise UnknownIdError('kind', str(kind), list(DECODERS))
    try:
        instance = DECODERS[kind](doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed {kind} document: {exc!r}") from exc
    return require_valid(instance)


def parse_instance(data) -> Any:
    if isinstance(data, bytes):
        data = data.decode('utf-8')
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return from_document(doc)


def dumps(doc: Any) -> str:
    return json.dumps(jsonable(doc), sort_keys=True)


def serialize(instance: Any) -> str:
    return dumps(to_document(instance))
