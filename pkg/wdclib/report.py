# %%
from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import Any, Sequence

import numpy as np
import pandas as pd

from .criteria import equivalence_audit
from .scenario import ScenarioResult
from .version import __version__

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.12g'


# %%
def to_plain(value: Any) -> Any:
    # numpy scalars unwrapped, NaN and infinities as null
    if isinstance(value, dict):
        return {str(key): to_plain(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, complex):
        return [to_plain(value.real), to_plain(value.imag)]
    return value


def dumps(document: Any) -> str:
    return json.dumps(to_plain(document), indent=2, sort_keys=True, allow_nan=False) + '\n'


def report_json(results: Sequence[ScenarioResult]) -> str:
    return dumps(dict(version=__version__, scenarios=[r.to_dict() for r in results]))


def report_frame(results: Sequence[ScenarioResult]) -> pd.DataFrame:
    frames = []
    for result in results:
        frame = result.report.to_dataframe()
        frame.insert(0, 'scenario', result.scenario.name)
        frame['status'] = 'PASS' if result.passed else 'FAIL'
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def audit_frame(results: Sequence[ScenarioResult]) -> pd.DataFrame:
    records = [
        dict(scenario=result.scenario.name, **record.to_dict())
        for result in results
        for record in equivalence_audit(result.report)
    ]
    frame = pd.DataFrame.from_records(records)
    if not frame.empty:
        frame['evidence'] = frame['evidence'].map(lambda e: json.dumps(to_plain(e), sort_keys=True))
    return frame


def frame_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def frame_json(frame: pd.DataFrame) -> str:
    return dumps(frame.to_dict(orient='records'))


def write_text(path: str | Path, text: str):
    path = Path(path)
    path.write_text(text, encoding='utf-8')
    logger.info('wrote %s', path)


def write_report(results: Sequence[ScenarioResult], path: str | Path):
    # format by suffix
    suffix = Path(path).suffix.lower()
    if suffix == '.json':
        write_text(path, report_json(results))
    elif suffix == '.csv':
        write_text(path, frame_csv(report_frame(results)))
    else:
        raise ValueError(f'report must end in .json or .csv, got {path}')


def write_frame(frame: pd.DataFrame, path: str | Path):
    suffix = Path(path).suffix.lower()
    if suffix == '.json':
        write_text(path, frame_json(frame))
    elif suffix == '.csv':
        write_text(path, frame_csv(frame))
    else:
        raise ValueError(f'table must end in .json or .csv, got {path}')
