"""Module with Write operations for evaluation and sweep reports."""
import json
import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Dict

import pandas as pd

from rank_bias.analysis.constants import PER_QUERY_COLUMNS
from rank_bias.analysis.schemas import MetricReport, StatsReport
from rank_bias.crud import write_text

LOG = logging.getLogger(__name__)


def per_query_frame(
    reports: Sequence[MetricReport], group_ids: Sequence[str]
) -> pd.DataFrame:
    """Per query measures of every run, one row per run and query.

    Group representations are spread over `rep_<group>` columns. Undefined
    values are empty cells.
    """
    rows = []
    for report in reports:
        for q in report.per_query:
            row = {"run": report.run_tag, "qid": q.query_id}
            row.update({c: getattr(q, c) for c in PER_QUERY_COLUMNS})
            rep = q.group_representation or {}
            row.update({f"rep_{g}": rep.get(g) for g in group_ids})
            row["undefined_representation"] = q.undefined_representation
            row["excluded"] = q.excluded
            rows.append(row)
    columns = [
        "run",
        "qid",
        *PER_QUERY_COLUMNS,
        *(f"rep_{g}" for g in group_ids),
        "undefined_representation",
        "excluded",
    ]
    return pd.DataFrame(rows, columns=columns)


def write_frame(df: pd.DataFrame, path: Path) -> Path:
    """Write a table as CSV with LF line endings."""
    path = write_text(df.to_csv(index=False, lineterminator="\n"), Path(path))
    LOG.info("Wrote %d rows to %s", len(df), path)
    return path


def write_per_query(
    reports: Sequence[MetricReport], group_ids: Sequence[str], path: Path
) -> Path:
    """Write per_query.csv."""
    return write_frame(per_query_frame(reports, group_ids), path)


def write_stats(report: StatsReport, path: Path) -> Path:
    """Write stats.json: aggregates, correlations and t-tests."""
    text = json.dumps(report.dict(), indent=2, sort_keys=True, default=str)
    return write_text(f"{text}\n", Path(path))


def write_sweep_config(config: Dict[str, Any], ks: Sequence[int], path: Path) -> Path:
    """Write the effective settings and the cut-offs of a sweep."""
    data = {"config": config, "ks": list(ks)}
    text = json.dumps(data, indent=2, sort_keys=True, default=str)
    return write_text(f"{text}\n", Path(path))
