"""
Text, JSON and CSV rendering of command results
"""

import sys
from typing import Any, Dict, List

import pandas as pd

from config.settings import DEFAULT_MESSAGES
from utils.graph import GraphParams, edge_list_text, edges, format_vertex
from utils.table_io import dump_json, profile_dataframe, profile_to_csv, profile_to_json


def render_edges(p: GraphParams, fmt: str) -> str:
    """Edge list of S(n,m), one "U V" line per edge in text form"""
    if fmt == "text":
        return edge_list_text(p)
    pairs = [[format_vertex(e.u, p), format_vertex(e.v, p)] for e in edges(p)]
    if fmt == "json":
        return dump_json({"n": p.n, "m": p.m, "edges": pairs})
    return pd.DataFrame(pairs, columns=["u", "v"]).to_csv(index=False).rstrip("\n")


def render_profile(p: GraphParams, values: List[int], fmt: str) -> str:
    if fmt == "json":
        return dump_json(profile_to_json(p, values))
    if fmt == "csv":
        return profile_to_csv(values).rstrip("\n")
    return profile_dataframe(values).to_string(index=False)


def render_report(payload: Dict[str, Any], fmt: str) -> str:
    """
    Render a report dictionary

    CSV flattens one row per instance (sweeps) or a single row; text prints
    one "key: value" line per top-level field.
    """
    if fmt == "json":
        return dump_json(payload)
    if fmt == "csv":
        rows = payload["instances"] if "instances" in payload else [payload]
        return pd.json_normalize(rows).to_csv(index=False).rstrip("\n")
    return "\n".join(f"{key}: {_plain(value)}" for key, value in payload.items())


def _plain(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return dump_json(value)
    return str(value)


def render_message(message_type: str, **fields: Any) -> str:
    """Render a user-facing message from DEFAULT_MESSAGES"""
    template = DEFAULT_MESSAGES.get(message_type, "{detail}")
    return template.format(**{"detail": "", "kind": "", "count": 0, **fields})


def write_output(text: str, out: str = None) -> None:
    """Write data to --out FILE, or to stdout"""
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        return
    sys.stdout.write(text + "\n")
