"""
Profile table export/import and vertex-set specifications
"""

import json
import logging
import re
from io import StringIO
from typing import Any, Dict, Iterable, List, Union

import pandas as pd

from utils.errors import InvalidParamsError, RangeError, SetSpecError
from utils.graph import GraphParams, format_vertex, parse_vertex
from utils.lex_order import lex_rank, lex_unrank
from utils.vertex_set import VertexSet

logger = logging.getLogger(__name__)

PROFILE_COLUMNS = ["ell", "theta"]

_RANK_RANGE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def profile_dataframe(values: Iterable[int]) -> pd.DataFrame:
    """
    Convert profile values to a two-column DataFrame

    Args:
        values: |Θ|(ℓ) for ℓ = 0..m^n

    Returns:
        DataFrame with columns ell, theta
    """
    values = [int(v) for v in values]
    return pd.DataFrame({"ell": range(len(values)), "theta": values}, columns=PROFILE_COLUMNS)


def profile_to_csv(values: Iterable[int]) -> str:
    """CSV text with header "ell,theta" and one row per ℓ"""
    return profile_dataframe(values).to_csv(index=False)


def profile_to_json(p: GraphParams, values: Iterable[int]) -> Dict[str, Any]:
    return {"n": p.n, "m": p.m, "values": [int(v) for v in values]}


def profile_from_csv(source: Union[str, StringIO]) -> List[int]:
    """
    Read profile values back from CSV text or a path

    Raises:
        InvalidParamsError: the columns or the ℓ sequence are wrong
    """
    try:
        if isinstance(source, str) and "\n" in source:
            source = StringIO(source)
        frame = pd.read_csv(source)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, OSError) as e:
        logger.error(f"Cannot read profile CSV: {str(e)}")
        raise InvalidParamsError(f"cannot read profile CSV: {e}") from e
    if list(frame.columns) != PROFILE_COLUMNS:
        raise InvalidParamsError(f"profile CSV needs columns {PROFILE_COLUMNS}, got {list(frame.columns)}")
    if frame["ell"].tolist() != list(range(len(frame))):
        raise InvalidParamsError("profile CSV rows must list ℓ = 0, 1, 2, ... in order")
    return [int(v) for v in frame["theta"]]


def parse_set_spec(spec: str, p: GraphParams) -> VertexSet:
    """
    Parse a comma-separated vertex-set specification

    Each item is either a vertex in text form ("01", or "3.11" for m > 10) or
    an inclusive lex-rank range "a-b" with 1 <= a <= b <= m^n. An empty
    specification is the empty set.

    Raises:
        SetSpecError: an item does not parse or lies outside the graph
    """
    indices = []
    for raw in spec.split(","):
        item = raw.strip()
        if not item:
            continue
        try:
            match = _RANK_RANGE.match(item)
            if match:
                low, high = int(match.group(1)), int(match.group(2))
                if low > high:
                    raise RangeError(f"empty rank range {item!r}")
                lex_unrank(low, p)
                lex_unrank(high, p)
                indices.extend(range(low - 1, high))
                continue
            indices.append(lex_rank(parse_vertex(item, p), p) - 1)
        except (InvalidParamsError, RangeError) as e:
            logger.error(f"Bad item {item!r} in set specification: {str(e)}")
            raise SetSpecError(f"bad item {item!r} in set specification: {e}") from e
    return VertexSet.from_indices(p, indices)


def format_set(S: VertexSet) -> str:
    """Braced, comma-separated vertex list in lex order"""
    return "{" + ",".join(format_vertex(v, S.params) for v in S.vertices()) + "}"


def dump_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=False)
