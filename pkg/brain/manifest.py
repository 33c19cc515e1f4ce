"""
VERIFICATION MANIFEST
Default source streams per reduction and per problem, sized for desk-scale runs

A JSON file named by XNLP_MANIFEST overrides entries key by key:

    {"reductions": {"cnf-positivize": {"bounds": {"clauses": 1}}},
     "modes": {"bandwidth": {"bounds": {"n": 3}}}}

An entry may list further entries under "extra"; their streams are appended.
"""

import json
import logging
from copy import deepcopy
from typing import Any, Dict, List, Optional

from core.config import DEFAULT_BUDGET, MANIFEST_PATH
from core.errors import ParseError, ReductionError, UnknownIdError, ValidationError
from brain.generators import enumerate_instances, random_instance
from tentacles.reductions.registry import REDUCTIONS, reduction_for

logger = logging.getLogger(__name__)

_CNF = {'r': 2, 'q': 2, 'k': 1, 'clauses': 2, 'literals': 2}
_LAYERED = {'r': 3, 'k': 1, 'm': 2, 'variant': 'clique'}
_RECONFIG_CNF = {'r': 2, 'q': 2, 'k': 1, 'clauses': 2, 'literals': 1}

DEFAULT_MANIFEST: Dict[str, Dict[str, Dict[str, Any]]] = {
    'reductions': {
        'ca-annotate-time': {'kind': 'cellular-automaton',
                             'bounds': {'states': 3, 'q': 3, 't': 1, 'acceptance': 'all'}},
        'ca-to-chained-sat': {'kind': 'cellular-automaton',
                              'bounds': {'states': 3, 'q': 3, 't': 1, 'acceptance': 'at-least-one'}},
        'cnf-positivize': {'kind': 'chained-cnf', 'bounds': _CNF},
        'cnf-regularize-ii': {'kind': 'chained-cnf',
                              'bounds': {'r': 2, 'q': 2, 'k': 1, 'clauses': 1, 'literals': 2, 'boundary': True}},
        'chained-sat-to-list-coloring': {'kind': 'chained-cnf', 'bounds': {**_CNF, 'positive': True}},
        'list-coloring-to-precoloring': {'kind': 'list-coloring', 'bounds': {'n': 3, 'palette': 2}},
        'list-coloring-to-cmc': {'kind': 'list-coloring', 'bounds': {'n': 3, 'palette': 2}},
        'partial-complement': {'kind': 'layered-graph', 'bounds': _LAYERED},
        'cmc-to-nnccm': {'kind': 'layered-graph', 'bounds': _LAYERED},
        'nnccm-to-scheduling': {'kind': 'nnccm', 'bounds': {'k': 1, 'n': 1, 'r': 3},
                                'extra': [{'seeds': 120, 'params': {'k': 2, 'n': 1, 'r': 2}}]},
        'nnccm-to-uniform-emulation': {'kind': 'nnccm', 'bounds': {'k': 2, 'n': 1, 'r': 2},
                                       'extra': [{'bounds': {'k': 1, 'n': 1, 'r': 2}}]},
        'chained-sat-to-log-pw-domset': {'kind': 'chained-cnf', 'bounds': _CNF},
        'chained-sat-to-log-pw-indset': {'kind': 'chained-cnf', 'bounds': _CNF},
        'log-pw-clique-to-weighted-cnf': {'kind': 'pathwidth-vertex-problem', 'bounds': {'n': 4, 'problem': 'clique'}},
        'chained-sat-to-ts-ds-reconfig': {'kind': 'chained-cnf', 'bounds': _RECONFIG_CNF},
        'chained-sat-to-tj-ds-reconfig': {'kind': 'chained-cnf', 'bounds': _RECONFIG_CNF},
        'cmc-to-tj-clique-reconfig': {'kind': 'layered-graph', 'bounds': _LAYERED},
        'cmc-to-ts-clique-reconfig': {'kind': 'layered-graph', 'bounds': _LAYERED},
        'reconfig-complement': {'kind': 'layered-graph', 'bounds': _LAYERED, 'via': 'cmc-to-tj-clique-reconfig'},
        'reconfig-complement-ts': {'kind': 'layered-graph', 'bounds': _LAYERED, 'via': 'cmc-to-tj-clique-reconfig'},
        'lcs-to-acyclic-fsa': {'kind': 'lcs', 'bounds': {'strings': 2, 'alphabet': 2, 'length': 3}},
        'fsa-binarize': {'kind': 'dfa-collection', 'bounds': {'automata': 1, 'states': 2, 'alphabet': 3}},
    },
    'modes': {
        'cellular-automaton': {'bounds': {'states': 3, 'q': 3, 't': 2}},
        'chained-cnf': {'bounds': _CNF},
        'layered-graph': {'bounds': _LAYERED},
        'nnccm': {'bounds': {'k': 1, 'n': 2, 'r': 2}},
        'list-coloring': {'bounds': {'n': 3, 'palette': 2}},
        'pathwidth-vertex-problem': {'bounds': {'n': 4, 'problem': 'dominating-set'}},
        'scheduling': {'bounds': {'tasks': 4, 'machines': 2, 'deadline': 3}},
        'uniform-emulation': {'bounds': {'n': 5, 'c': 2}},
        'bandwidth': {'bounds': {'n': 4}},
        'reconfiguration': {'bounds': {'n': 4, 'kind': 'independent-set', 'rule': 'TS', 'k': 2, 'max_T': 3}},
        'dfa-collection': {'bounds': {'automata': 2, 'states': 2, 'alphabet': 2}, 'take': 400},
        'lcs': {'bounds': {'strings': 2, 'alphabet': 2, 'length': 2}},
    },
}


def load_manifest(path: Optional[str] = None) -> Dict[str, Dict[str, Dict[str, Any]]]:
    """Built-in manifest with the entries of the JSON file at `path` (or XNLP_MANIFEST) laid over it"""
    manifest = deepcopy(DEFAULT_MANIFEST)
    path = path or MANIFEST_PATH
    if not path:
        return manifest
    try:
        with open(path, 'r') as f:
            overrides = json.load(f)
    except json.JSONDecodeError as exc:
        raise ParseError(f"manifest {path}: {exc}") from exc
    for section in ('reductions', 'modes'):
        for key, entry in overrides.get(section, {}).items():
            merged = manifest[section].setdefault(key, {})
            bounds = {**merged.get('bounds', {}), **entry.get('bounds', {})}
            merged.update(entry)
            merged['bounds'] = bounds
    logger.info(f"manifest overrides loaded from {path}")
    return manifest


def build_stream(entry: Dict[str, Any], kind: Optional[str] = None) -> List[Any]:
    """
    Instances described by one manifest entry: enumerated, or seeded random when 'seeds'
    is set, followed by the streams of any 'extra' entries of the same kind
    """
    kind = entry.get('kind', kind)
    if 'seeds' in entry:
        stream = [random_instance(kind, seed, entry.get('params')) for seed in range(entry['seeds'])]
    else:
        stream = enumerate_instances(kind, entry.get('bounds'), entry.get('limit', DEFAULT_BUDGET))
    if 'take' in entry:
        stream = stream[:entry['take']]
    for more in entry.get('extra', []):
        stream = stream + build_stream(more, kind)
    via = entry.get('via')
    if via:
        through = reduction_for(via)
        moved = []
        for instance in stream:
            try:
                moved.append(through(instance).target)
            except (ReductionError, ValidationError):
                continue
        stream = moved
    return stream


def reduction_stream(reduction_id: str, manifest: Optional[Dict] = None) -> List[Any]:
    manifest = manifest or load_manifest()
    if reduction_id not in manifest['reductions']:
        raise UnknownIdError('manifest entry', reduction_id, sorted(manifest['reductions']))
    return build_stream(manifest['reductions'][reduction_id])


def mode_stream(kind: str, manifest: Optional[Dict] = None) -> List[Any]:
    manifest = manifest or load_manifest()
    if kind not in manifest['modes']:
        raise UnknownIdError('manifest entry', kind, sorted(manifest['modes']))
    return build_stream(manifest['modes'][kind], kind)


def unlisted_reductions(manifest: Optional[Dict] = None) -> List[str]:
    manifest = manifest or load_manifest()
    return sorted(set(REDUCTIONS) - set(manifest['reductions']))
