"""
Certificate checkers: pure predicates deciding whether a witness proves a YES answer
"""

from typing import Any, Callable, Dict, Sequence

from core.errors import CertificateShapeError, UnknownIdError
from tentacles.instances.automata import CellularAutomaton, DfaCollection
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.counters import Nnccm
from tentacles.instances.emulation import WeightedPathEmulationInstance
from tentacles.instances.graphs import (BandwidthInstance, Graph, ListColoringInstance,
                                        VertexProblemInstance)
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.reconfiguration import ReconfigurationInstance
from tentacles.instances.scheduling import SchedulingInstance
from tentacles.instances.strings import LcsInstance


def _int_sequence(cert: Any, length: int = None, what: str = "certificate") -> Sequence[int]:
    if isinstance(cert, (str, bytes)) or not hasattr(cert, '__iter__'):
        raise CertificateShapeError(f"{what} must be a sequence of integers")
    values = list(cert)
    if any(isinstance(x, bool) or not isinstance(x, int) for x in values):
        raise CertificateShapeError(f"{what} must hold integers only")
    if length is not None and len(values) != length:
        raise CertificateShapeError(f"{what} has length {len(values)}, expected {length}")
    return values


def _expect(instance: Any, cls: type, kind: str):
    if not isinstance(instance, cls):
        raise CertificateShapeError(f"{kind} certificates apply to {cls.__name__}, got {type(instance).__name__}")


def _check_vertex_set(predicate: str):
    def check(instance, cert) -> bool:
        chosen = set(_int_sequence(cert, what="vertex set"))
        if isinstance(instance, VertexProblemInstance):
            if instance.problem != predicate:
                raise CertificateShapeError(f"instance poses {instance.problem}, not {predicate}")
            return all(0 <= v < instance.graph.n for v in chosen) and instance.satisfied_by(chosen)
        _expect(instance, Graph, predicate)
        if any(not 0 <= v < instance.n for v in chosen):
            return False
        return {
            'dominating-set': instance.is_dominating,
            'independent-set': instance.is_independent,
            'clique': instance.is_clique
        }[predicate](chosen)
    return check


def _check_cellular_automaton(inst: CellularAutomaton, cert) -> bool:
    _expect(inst, CellularAutomaton, 'cellular-automaton')
    run = [_int_sequence(c, what="configuration") for c in cert]
    return inst.is_run(run)


def _check_chained_cnf(inst: ChainedCnf, cert) -> bool:
    _expect(inst, ChainedCnf, 'chained-cnf')
    blocks = [frozenset(_int_sequence(b, what="block assignment")) for b in cert]
    return inst.satisfied_by(blocks)


def _check_chained_clique(inst: LayeredColoredGraph, cert) -> bool:
    _expect(inst, LayeredColoredGraph, 'chained-clique')
    return inst.is_solution(_int_sequence(cert, what="vertex set"))


def _check_nnccm(inst: Nnccm, cert) -> bool:
    _expect(inst, Nnccm, 'nnccm')
    return inst.accepts_trace([_int_sequence(v, inst.k, "counter vector") for v in cert])


def _check_list_coloring(inst: ListColoringInstance, cert) -> bool:
    _expect(inst, ListColoringInstance, 'list-coloring')
    colors = _int_sequence(cert, inst.graph.n, "coloring")
    lists = inst.effective_lists()
    if any(colors[v] not in lists[v] for v in range(inst.graph.n)):
        return False
    return all(colors[u] != colors[v] for u, v in inst.graph.edge_set)


def _check_scheduling(inst: SchedulingInstance, cert) -> bool:
    _expect(inst, SchedulingInstance, 'scheduling')
    return inst.is_schedule(_int_sequence(cert, inst.tasks, "schedule"))


def _check_uniform_emulation(inst: WeightedPathEmulationInstance, cert) -> bool:
    _expect(inst, WeightedPathEmulationInstance, 'uniform-emulation')
    return inst.is_emulation(_int_sequence(cert, inst.n, "emulation map"))


def _check_bandwidth(inst: BandwidthInstance, cert) -> bool:
    _expect(inst, BandwidthInstance, 'bandwidth')
    layout = _int_sequence(cert, inst.graph.n, "layout")
    if sorted(layout) != list(range(1, inst.graph.n + 1)):
        return False
    return all(abs(layout[u] - layout[v]) <= inst.k for u, v in inst.graph.edge_set)


def _check_reconfiguration(inst: ReconfigurationInstance, cert) -> bool:
    _expect(inst, ReconfigurationInstance, 'reconfiguration')
    return inst.is_sequence([_int_sequence(s, what="token set") for s in cert])


def _check_dfa_collection(inst: DfaCollection, cert) -> bool:
    _expect(inst, DfaCollection, 'dfa-collection')
    if isinstance(cert, str) or any(not isinstance(a, str) for a in cert):
        raise CertificateShapeError("FSA certificate must be a list of symbols")
    if any(a not in inst.alphabet for a in cert):
        return False
    return inst.accepts_all(inst.encode(cert))


def _check_lcs(inst: LcsInstance, cert) -> bool:
    _expect(inst, LcsInstance, 'lcs')
    if not isinstance(cert, str):
        raise CertificateShapeError("LCS certificate must be a string")
    return inst.is_common_subsequence(cert)


CHECKERS: Dict[str, Callable[[Any, Any], bool]] = {
    'cellular-automaton': _check_cellular_automaton,
    'chained-cnf': _check_chained_cnf,
    'chained-clique': _check_chained_clique,
    'layered-graph': _check_chained_clique,
    'nnccm': _check_nnccm,
    'list-coloring': _check_list_coloring,
    'dominating-set': _check_vertex_set('dominating-set'),
    'independent-set': _check_vertex_set('independent-set'),
    'clique': _check_vertex_set('clique'),
    'scheduling': _check_scheduling,
    'uniform-emulation': _check_uniform_emulation,
    'bandwidth': _check_bandwidth,
    'reconfiguration': _check_reconfiguration,
    'dfa-collection': _check_dfa_collection,
    'lcs': _check_lcs,
}


def check_certificate(kind: str, instance: Any, certificate: Any) -> bool:
    if kind == 'pathwidth-vertex-problem':
        _expect(instance, VertexProblemInstance, kind)
        kind = instance.problem
    if kind not in CHECKERS:
        raise UnknownIdError('certificate kind', kind, list(CHECKERS))
    if certificate is None:
        raise CertificateShapeError("missing certificate")
    try:
        return CHECKERS[kind](instance, certificate)
    except TypeError as exc:
        raise CertificateShapeError(str(exc)) from exc
