"""
REDUCTION VERIFIER
Runs source and target oracles side by side and checks every emitted instance

Per source instance: apply the reduction, solve both sides, compare decisions, then check
the declared parameter bound, the construction constants and the emitted width bounds.
Instances whose oracle runs out of budget are counted as skipped; a YES source whose
target is out of reach is settled by transferring the witness and checking it ("witness").
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from core.config import VERIFY_WORKERS
from core.errors import CertificateShapeError, ReductionError, ResourceError, ValidationError
from tentacles.instances.certificates import check_certificate
from tentacles.instances.codec import jsonable, to_document
from tentacles.instances.validation import validate
from tentacles.reductions.base import ReductionOutput, ceil_log2
from tentacles.reductions.reconfiguration import potential
from tentacles.reductions.registry import REDUCTIONS, Reduction, reduction_for
from tentacles.solvers.base import Answer, SolveMode
from tentacles.solvers.registry import solve

logger = logging.getLogger(__name__)


@dataclass
class ReductionReport:
    """
    Outcome of one verification stream. `tried` counts instances both oracles (or the
    witness check) settled; over-budget instances land in `skipped` instead.
    """
    reduction: str
    tried: int = 0
    agreements: int = 0
    disagreements: int = 0
    skipped: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    seconds: float = 0.0
    modes: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def agree(self, mode: str):
        self.tried += 1
        self.agreements += 1
        self.modes[mode] = self.modes.get(mode, 0) + 1

    def disagree(self, source: Any, reason: str, source_answer: Optional[Answer] = None,
                 target_answer: Optional[Answer] = None, target: Any = None):
        self.tried += 1
        self.disagreements += 1
        if self.counterexample is None:
            self.counterexample = {
                'reason': reason,
                'source': to_document(source),
                'source_answer': source_answer.to_document() if source_answer else None,
                'target': to_document(target) if target is not None else None,
                'target_answer': target_answer.to_document() if target_answer else None,
            }
            logger.warning(f"{self.reduction}: {reason}")

    def merge(self, other: 'ReductionReport') -> 'ReductionReport':
        modes = dict(self.modes)
        for key, count in other.modes.items():
            modes[key] = modes.get(key, 0) + count
        return ReductionReport(
            self.reduction,
            self.tried + other.tried,
            self.agreements + other.agreements,
            self.disagreements + other.disagreements,
            self.skipped + other.skipped,
            self.counterexample or other.counterexample,
            self.seconds + other.seconds,
            modes,
        )

    def to_document(self, timing: bool = True) -> Dict[str, Any]:
        doc = {
            'reduction': self.reduction,
            'tried': self.tried,
            'agreements': self.agreements,
            'disagreements': self.disagreements,
            'skipped': self.skipped,
            'modes': dict(sorted(self.modes.items())),
            'counterexample': jsonable(self.counterexample),
        }
        if timing:
            doc['seconds'] = round(self.seconds, 3)
        return doc


# ============================================================================
# CONSTANT AND WIDTH FIDELITY
# ============================================================================

Fidelity = Callable[[Any, ReductionOutput], List[str]]


def _expect(issues: List[str], name: str, got: Any, want: Any):
    if got != want:
        issues.append(f"{name}={got}, expected {want}")


def _at_most(issues: List[str], name: str, got: int, bound: int):
    if got > bound:
        issues.append(f"{name}={got} exceeds {bound}")


def _group_bits(c) -> int:
    return ceil_log2(max(len(g) for g in c.partition)) if c.partition else 0


def _log_pw_domset(c, out: ReductionOutput) -> List[str]:
    issues = []
    k, r, t = c.k, c.r, _group_bits(c)
    K = r * k * t + 2 * k * out.constants['clauses'] * (r - 1)
    _expect(issues, 't', out.constants['t'], t)
    _expect(issues, 'K', out.target.K, K)
    _at_most(issues, 'width', out.target.pd.width, 6 * k * t + 4 * k + 2)
    return issues


def _log_pw_indset(c, out: ReductionOutput) -> List[str]:
    issues = []
    k, r, t = c.k, c.r, _group_bits(c)
    K = r * k * t + (r - 1) * sum(size + 2 for size in out.constants['clause_sizes'])
    _expect(issues, 't', out.constants['t'], t)
    _expect(issues, 'K', out.target.K, K)
    if any(size % 2 for size in out.constants['clause_sizes']):
        issues.append("odd clause left unpadded")
    _at_most(issues, 'width', out.target.pd.width, 4 * k * t + 6)
    return issues


def _list_coloring(c, out: ReductionOutput) -> List[str]:
    issues = []
    _at_most(issues, 'width', out.target.pd.width, 2 * c.k + 1)
    return issues


def _scheduling(m, out: ReductionOutput) -> List[str]:
    issues = []
    _expect(issues, 'machines', out.target.machines, 2 * m.k + 1)
    _expect(issues, 'c', out.constants['c'], (m.k * m.n + 1) * (m.n + 1))
    _expect(issues, 'D', out.target.deadline, (m.k * m.n + 1) * (m.n + 1) * len(m.checks) + m.n + 1)
    _at_most(issues, 'poset width', out.target.width, 3 * (m.k + 1))
    return issues


def _emulation_formulas(k: int, n: int, r: int) -> Dict[str, int]:
    d1 = 3 * k + 2
    d2 = k * d1 + 1
    d3 = k * d2 + 1
    n0 = 3 * n + 1
    return {'d1': d1, 'd2': d2, 'd3': d3, 'c': 2 * k * d3 + 1, 'n0': n0, 'M': 1 + (r + 1) * n0}


def _emulation(m, out: ReductionOutput) -> List[str]:
    issues = []
    r = len(m.checks)
    declared = _emulation_formulas(m.k, m.n, r)
    for name, want in declared.items():
        _expect(issues, name, out.constants[name], want)
    n_eff = max(m.n, 1)
    r_eff = r if m.n else r + m.k
    built = _emulation_formulas(max(m.k, 3), n_eff, r_eff)
    _expect(issues, 'c', out.target.c, built['c'])
    _expect(issues, 'm', out.target.m, built['M'])
    _expect(issues, 'total weight', out.target.total_weight, built['c'] * built['M'])
    return issues


def _dominating_reconfig(c, out: ReductionOutput) -> List[str]:
    issues = []
    r = c.r + c.r % 2
    L = 2 * r - 2
    moves = L + c.k * (r + 2)
    jumping = out.target.rule == 'TJ'
    if jumping:
        moves += L
    _expect(issues, 'tokens', out.target.k, 2 * c.k + (3 if jumping else 2))
    _expect(issues, 'moves', out.constants['moves'], moves)
    _expect(issues, 'T', out.target.T, moves + 1)
    _expect(issues, 'T_formula', out.constants['T_formula'], 5 * r // 2 - 2)
    return issues


def _clique_reconfig(g, out: ReductionOutput) -> List[str]:
    issues = []
    _expect(issues, 'tokens', out.target.k, 2 * g.k)
    _expect(issues, 'moves', out.constants['moves'], g.k * (g.r + 2))
    _expect(issues, 'T', out.target.T, g.k * (g.r + 2) + 1)
    levels = out.legend['levels']
    _expect(issues, 'start potential', potential([out.target.start], levels)[0], -g.k)
    _expect(issues, 'target potential', potential([out.target.target], levels)[0], g.k * (2 * g.r + 3))
    return issues


def _lcs_automata(inst, out: ReductionOutput) -> List[str]:
    issues = []
    automata = out.target.automata
    _expect(issues, 'automata', len(automata), len(inst.strings) + 1)
    _expect(issues, 'length automaton states', automata[0].states, inst.m + 1)
    return issues


def _binarized(d, out: ReductionOutput) -> List[str]:
    issues = []
    _expect(issues, 'alphabet', out.target.alphabet, ('0', '1'))
    _expect(issues, 'code width', out.constants['code_width'], max(1, ceil_log2(len(d.alphabet))))
    return issues


def _cnf_list_coloring_layers(inst, out: ReductionOutput) -> List[str]:
    issues = []
    _expect(issues, 'k', out.target.k, max(inst.pd.width + 1, 1))
    return issues


FIDELITY: Dict[str, Fidelity] = {
    'chained-sat-to-log-pw-domset': _log_pw_domset,
    'chained-sat-to-log-pw-indset': _log_pw_indset,
    'chained-sat-to-list-coloring': _list_coloring,
    'list-coloring-to-cmc': _cnf_list_coloring_layers,
    'nnccm-to-scheduling': _scheduling,
    'nnccm-to-uniform-emulation': _emulation,
    'chained-sat-to-ts-ds-reconfig': _dominating_reconfig,
    'chained-sat-to-tj-ds-reconfig': _dominating_reconfig,
    'cmc-to-tj-clique-reconfig': _clique_reconfig,
    'cmc-to-ts-clique-reconfig': _clique_reconfig,
    'lcs-to-acyclic-fsa': _lcs_automata,
    'fsa-binarize': _binarized,
}


def constant_issues(reduction_id: str, source: Any, out: ReductionOutput) -> List[str]:
    check = FIDELITY.get(reduction_id)
    return check(source, out) if check else []


def potential_issues(out: ReductionOutput, sequence: Sequence[Sequence[int]]) -> List[str]:
    """A jumping clique certificate with exactly k(r+2) moves climbs by two per move"""
    if len(sequence) != out.constants['moves'] + 1:
        return []
    values = potential(sequence, out.legend['levels'])
    steps = [b - a for a, b in zip(values, values[1:])]
    if any(step != 2 for step in steps):
        return [f"potential steps {steps} are not all 2"]
    return []


# ============================================================================
# PARAMETER BOUNDS
# ============================================================================

BoundTable = Dict[str, Callable[[Any], int]]


def default_bounds() -> BoundTable:
    return {rid: r.bound for rid, r in REDUCTIONS.items()}


def check_parameter_bound(reduction_id: str, source: Any, g_table: Optional[BoundTable] = None,
                          out: Optional[ReductionOutput] = None) -> bool:
    """True iff the emitted parameter stays within the table's bound for this source"""
    reduction = reduction_for(reduction_id)
    table = default_bounds() if g_table is None else g_table
    if reduction_id not in table:
        raise ReductionError(f"no declared bound for {reduction_id}")
    out = reduction(source) if out is None else out
    return out.new_parameter <= table[reduction_id](source)


# ============================================================================
# VERIFICATION
# ============================================================================

def _solve(instance: Any, mode: str, budget: Optional[int]) -> Answer:
    return solve(instance, mode=SolveMode(mode), budget=budget)


def _target_decision(reduction: Reduction, source: Any, out: ReductionOutput, source_answer: Answer,
                     mode: str, budget: Optional[int], witness: bool):
    """(decision, answer, how) for the target; how is None when nothing settled it"""
    try:
        answer = _solve(out.target, mode, budget)
        return answer.decision, answer, 'solved'
    except ResourceError:
        if not (witness and source_answer.decision and reduction.transfer):
            return None, None, None
    certificate = reduction.transfer(source, out, source_answer.certificate)
    try:
        held = check_certificate(out.target.KIND, out.target, certificate)
    except CertificateShapeError:
        held = False
    return held, Answer(held, certificate, 'witness'), 'witness'


def _family(reduction: Reduction) -> str:
    """Registered id a reduction checks against; mutants are named <base>~<corruption>"""
    return reduction.id.split('~', 1)[0]


def verify_instance(reduction: Reduction, source: Any, report: ReductionReport, mode: str = 'structured',
                    budget: Optional[int] = None, witness: bool = True,
                    g_table: Optional[BoundTable] = None):
    try:
        out = reduction(source)
    except (ReductionError, ValidationError) as exc:
        logger.debug(f"{reduction.id}: source rejected ({exc})")
        report.skipped += 1
        return

    issues = validate(out.target)
    if issues:
        report.disagree(source, f"emitted instance invalid: {issues[0]}", target=out.target)
        return
    if g_table is not None and reduction.id in g_table:
        bound = g_table[reduction.id](source)
    else:
        bound = reduction.bound(source)
    if out.new_parameter > bound:
        report.disagree(source, f"parameter {out.new_parameter} exceeds bound {reduction.bound_formula}={bound}",
                        target=out.target)
        return
    issues = constant_issues(_family(reduction), source, out)
    if issues:
        report.disagree(source, f"construction constants: {'; '.join(issues)}", target=out.target)
        return

    try:
        source_answer = _solve(source, mode, budget)
    except ResourceError:
        report.skipped += 1
        return
    decision, target_answer, how = _target_decision(reduction, source, out, source_answer, mode, budget, witness)
    if how is None:
        report.skipped += 1
        return
    if decision != source_answer.decision:
        report.disagree(source, "decisions differ", source_answer, target_answer, out.target)
        return
    if (_family(reduction) == 'cmc-to-tj-clique-reconfig' and target_answer.decision
            and target_answer.certificate is not None):
        issues = potential_issues(out, target_answer.certificate)
        if issues:
            report.disagree(source, issues[0], source_answer, target_answer, out.target)
            return
    report.agree(how)


def _verify_chunk(reduction_id: str, instances: List[Any], mode: str, budget: Optional[int],
                  witness: bool) -> ReductionReport:
    return verify_reduction(reduction_id, instances, budget=budget, mode=mode, witness=witness, workers=1)


def verify_reduction(reduction: Union[str, Reduction], instances: Sequence[Any], budget: Optional[int] = None,
                     mode: str = 'structured', witness: bool = True, workers: Optional[int] = None,
                     g_table: Optional[BoundTable] = None) -> ReductionReport:
    """
    Verify a registered reduction (by id) or an ad-hoc Reduction such as a mutant over a stream.
    With more than one worker the stream is split into chunks whose reports are merged.
    """
    reduction = reduction_for(reduction) if isinstance(reduction, str) else reduction
    instances = list(instances)
    workers = VERIFY_WORKERS if workers is None else workers
    started = time.time()

    if workers > 1 and reduction.id in REDUCTIONS and g_table is None and len(instances) > workers:
        chunks = [instances[i::workers] for i in range(workers)]
        report = ReductionReport(reduction.id)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_verify_chunk, reduction.id, chunk, mode, budget, witness)
                       for chunk in chunks]
            for future in futures:
                report = report.merge(future.result())
        report.seconds = time.time() - started
        return report

    report = ReductionReport(reduction.id)
    for source in instances:
        verify_instance(reduction, source, report, mode, budget, witness, g_table)
    report.seconds = time.time() - started
    logger.info(f"{reduction.id}: {report.agreements}/{report.tried} agree, {report.skipped} skipped")
    return report


def mode_agreement(kind: str, instances: Sequence[Any], budget: Optional[int] = None) -> ReductionReport:
    """Exhaustive against structured decisions; every YES certificate is checked as well"""
    report = ReductionReport(f"modes:{kind}")
    started = time.time()
    for instance in instances:
        try:
            slow = _solve(instance, 'exhaustive', budget)
            fast = _solve(instance, 'structured', budget)
        except ResourceError:
            report.skipped += 1
            continue
        if slow.decision != fast.decision:
            report.disagree(instance, "exhaustive and structured decisions differ", slow, fast)
            continue
        bad = [a for a in (slow, fast)
               if a.decision and not check_certificate(instance.KIND, instance, a.certificate)]
        if bad:
            report.disagree(instance, f"{bad[0].mode} certificate rejected", slow, fast)
            continue
        report.agree('solved')
    report.seconds = time.time() - started
    return report
