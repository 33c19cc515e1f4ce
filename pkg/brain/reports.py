"""
Report rendering: one JSON document for machines, one pandas table for people
"""

from typing import Any, Dict, List, Sequence

import pandas as pd

from brain.verifier import ReductionReport

COLUMNS = ['reduction', 'tried', 'agreements', 'disagreements', 'skipped', 'witnessed', 'seconds', 'status']


def reports_document(reports: Sequence[ReductionReport], timing: bool = True) -> Dict[str, Any]:
    return {
        'ok': all(r.ok for r in reports),
        'reports': [r.to_document(timing) for r in reports],
    }


def reports_frame(reports: Sequence[ReductionReport]) -> pd.DataFrame:
    rows: List[Dict[str, Any]] = []
    for r in reports:
        rows.append({
            'reduction': r.reduction,
            'tried': r.tried,
            'agreements': r.agreements,
            'disagreements': r.disagreements,
            'skipped': r.skipped,
            'witnessed': r.modes.get('witness', 0),
            'seconds': round(r.seconds, 2),
            'status': '✅' if r.ok else '❌',
        })
    return pd.DataFrame(rows, columns=COLUMNS)


def reports_table(reports: Sequence[ReductionReport], timing: bool = True) -> str:
    frame = reports_frame(reports)
    if not timing:
        frame = frame.drop(columns=['seconds'])
    if frame.empty:
        return "(no reports)"
    totals = frame[['tried', 'agreements', 'disagreements', 'skipped', 'witnessed']].sum()
    text = frame.to_string(index=False)
    return text + (f"\n\nTOTAL: {totals['agreements']}/{totals['tried']} agree, "
                   f"{totals['disagreements']} disagree, {totals['skipped']} skipped")
