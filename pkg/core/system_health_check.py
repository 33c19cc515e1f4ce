"""
🔍 COMPREHENSIVE VERIFICATION RUN
Checks every registered solver and reduction against the default manifest

CHECKS PERFORMED:
1. Solver-mode agreement (exhaustive vs structured) for every problem
2. Reduction soundness, parameter bounds and construction constants
3. Mutant detection (every corrupted reduction must be caught)

Status lines go to stderr; `app.py verify all` prints the JSON document.

USAGE:
    python3 core/system_health_check.py
"""

import os
import sys
from typing import Dict, List, Optional, Sequence

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from brain.manifest import load_manifest, mode_stream, reduction_stream, unlisted_reductions
from brain.mutants import MUTANTS
from brain.reports import reports_table
from brain.verifier import ReductionReport, mode_agreement, verify_reduction
from core.errors import XnlpError


def _say(line: str = ""):
    print(line, file=sys.stderr)


def check_mode_agreement(manifest: Dict, kinds: Optional[Sequence[str]] = None,
                         budget: Optional[int] = None) -> List[ReductionReport]:
    """Exhaustive and structured solvers must agree on every default stream"""
    _say("\n⚖️ CHECKING SOLVER MODES...")
    reports = []
    for kind in kinds or sorted(manifest['modes']):
        try:
            report = mode_agreement(kind, mode_stream(kind, manifest), budget)
        except XnlpError as e:
            _say(f"   ❌ {kind}: {e}")
            report = ReductionReport(f"modes:{kind}", tried=1, disagreements=1,
                                     counterexample={'reason': str(e)})
        mark = '✅' if report.ok else '❌'
        _say(f"   {mark} {kind}: {report.agreements}/{report.tried} agree ({report.skipped} skipped)")
        reports.append(report)
    return reports


def check_reductions(manifest: Dict, ids: Optional[Sequence[str]] = None,
                     budget: Optional[int] = None, workers: Optional[int] = None) -> List[ReductionReport]:
    """Source and target decisions must agree on every default stream"""
    _say("\n🔗 CHECKING REDUCTIONS...")
    for missing in unlisted_reductions(manifest):
        _say(f"   ⚠️ {missing}: no manifest stream")
    reports = []
    for rid in ids or sorted(manifest['reductions']):
        try:
            report = verify_reduction(rid, reduction_stream(rid, manifest), budget=budget, workers=workers)
        except XnlpError as e:
            _say(f"   ❌ {rid}: {e}")
            report = ReductionReport(rid, tried=1, disagreements=1, counterexample={'reason': str(e)})
        mark = '✅' if report.ok else '❌'
        _say(f"   {mark} {rid}: {report.agreements}/{report.tried} agree, "
             f"{report.modes.get('witness', 0)} by witness, {report.skipped} skipped")
        if report.tried == 0:
            _say(f"   ⚠️ {rid}: nothing was checked")
        reports.append(report)
    return reports


def check_mutants(manifest: Dict, ids: Optional[Sequence[str]] = None,
                  budget: Optional[int] = None) -> Dict[str, bool]:
    """A mutant that survives its stream means the stream proves nothing"""
    _say("\n🧬 CHECKING MUTANTS...")
    caught = {}
    for mutant in MUTANTS.values():
        if ids and mutant.base not in ids:
            continue
        report = verify_reduction(mutant.reduction(), reduction_stream(mutant.base, manifest),
                                  budget=budget, workers=1)
        caught[mutant.id] = not report.ok
        if caught[mutant.id]:
            _say(f"   ✅ {mutant.id}: caught ({report.counterexample['reason']})")
        else:
            _say(f"   ❌ {mutant.id}: survived {report.tried} instances")
    return caught


def run_health_check(ids: Optional[Sequence[str]] = None, budget: Optional[int] = None,
                     workers: Optional[int] = None, mutants: bool = True,
                     manifest_path: Optional[str] = None) -> Dict:
    """Run every check; returns the reports and an overall verdict"""
    _say("=" * 70)
    _say("🔍 XNLP COMPANION VERIFICATION RUN")
    _say("=" * 70)
    manifest = load_manifest(manifest_path)

    modes = check_mode_agreement(manifest, budget=budget) if not ids else []
    reductions = check_reductions(manifest, ids, budget, workers)
    caught = check_mutants(manifest, ids, budget) if mutants else {}

    _say("\n📊 SUMMARY")
    _say(reports_table(modes + reductions))
    healthy = all(r.ok for r in modes + reductions) and all(caught.values())
    _say("\n" + ("✅ ALL CHECKS PASSED" if healthy else "❌ VERIFICATION FAILED"))
    return {
        'healthy': healthy,
        'modes': modes,
        'reductions': reductions,
        'mutants': caught,
    }


if __name__ == "__main__":
    status = run_health_check()
    sys.exit(0 if status['healthy'] else 4)
