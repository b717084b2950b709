"""
Command implementations behind the subcommands of main.py

Each cmd_* function takes the parsed arguments, writes its data to stdout (or
--out) and returns an exit code. Library errors propagate to main.py, which
maps them to exit codes.
"""

import logging
from argparse import Namespace
from typing import Any, Dict, List, Optional

import numpy as np

from config.settings import EXIT_CODES, get_default_seed
from services.boundary import (
    profile_bruteforce_table,
    profile_direct_table,
    profile_recurrence,
    theta_decorated,
)
from services.metrics import metrics_report
from services.steiner import (
    check_steiner_step,
    check_subadd_step,
    compress_h,
    compress_inf,
    ell_vector,
    reduce_to_lex,
    subadd,
)
from services.verifier import SubadditivityVerifier
from ui.formatters import render_edges, render_message, render_profile, render_report, write_output
from utils.errors import InvalidParamsError
from utils.graph import Decoration, GraphParams
from utils.table_io import format_set, parse_set_spec
from utils.vertex_set import VertexSet

logger = logging.getLogger(__name__)


def _params(args: Namespace) -> GraphParams:
    if args.n is None or args.m is None:
        raise InvalidParamsError("--n and --m are required")
    return GraphParams(args.n, args.m)


def _decoration(args: Namespace, m: int) -> Optional[Decoration]:
    """--s/--t as a Decoration; None when neither is given"""
    s, t = getattr(args, "s", None), getattr(args, "t", None)
    if s is None and t is None:
        return None
    s = 0 if s is None else s
    t = m - s if t is None else t
    decoration = Decoration(s, t)
    decoration.validate_for(m)
    return decoration


def cmd_graph(args: Namespace) -> int:
    """Write the edge list of S(n,m)"""
    p = _params(args)
    p.require_enumerable()
    write_output(render_edges(p, args.format), args.out)
    return EXIT_CODES["ok"]


def cmd_profile(args: Namespace) -> int:
    """Write the profile table computed by the chosen method"""
    p = _params(args)
    if args.method == "direct":
        table = profile_direct_table(p)
    elif args.method == "brute":
        table = profile_bruteforce_table(p)
    else:
        table = profile_recurrence(p)
    write_output(render_profile(p, table.tolist(), args.format), args.out)
    return EXIT_CODES["ok"]


def cmd_verify(args: Namespace) -> int:
    """
    Run one verification kind on S(n,m), or on every instance with n + m <= --max-nm

    Returns:
        0 when nothing was violated, 1 otherwise
    """
    verifier = SubadditivityVerifier(jobs=args.jobs, progress=not args.quiet)
    if args.max_nm is not None:
        if args.kind == "subadd":
            report = verifier.verify_subadditivity_sweep(args.max_nm)
        elif args.kind == "optimal":
            report = verifier.verify_lex_optimality_sweep(args.max_nm, args.s, args.t)
        else:
            report = verifier.verify_lemma_suite_sweep(args.max_nm)
        count = len(report.reports)
    else:
        p = _params(args)
        if args.kind == "subadd":
            report = verifier.verify_subadditivity(p.n, p.m)
        elif args.kind == "optimal":
            report = verifier.verify_lex_optimality(p.n, p.m, _decoration(args, p.m))
        else:
            report = verifier.verify_lemma_suite(p.n, p.m)
        count = 1

    write_output(render_report(report.to_dict(), args.format), args.out)
    if report.ok:
        logger.info(render_message("verified", kind=args.kind, count=count))
        return EXIT_CODES["ok"]
    logger.error(render_message("violation", detail=f"{args.kind} check failed"))
    return EXIT_CODES["violation"]


def cmd_metrics(args: Namespace) -> int:
    p = _params(args)
    write_output(render_report(metrics_report(p.n, p.m), args.format), args.out)
    return EXIT_CODES["ok"]


def _input_set(args: Namespace, p: GraphParams) -> VertexSet:
    if args.random is not None:
        if not 0 <= args.random <= p.order:
            raise InvalidParamsError(f"--random {args.random} outside [0, {p.order}]")
        seed = get_default_seed() if args.seed is None else args.seed
        rng = np.random.default_rng(seed)
        return VertexSet.from_indices(p, rng.choice(p.order, size=args.random, replace=False))
    if args.set is None:
        raise InvalidParamsError("steiner needs --set or --random")
    return parse_set_spec(args.set, p)


def _describe(S: VertexSet, p: GraphParams, d: Decoration) -> Dict[str, Any]:
    return {
        "set": format_set(S),
        "size": S.size,
        "theta": theta_decorated(S, p, d),
        "ell_vector": list(ell_vector(S, p)),
    }


def cmd_steiner(args: Namespace) -> int:
    """
    Apply a Steiner operation and report the set with Θ_{s,t} before and after

    compress applies compress_h for --h, or one pass over h = 0..m-1 without it.
    A compression that changes |S| or increases Θ_{s,t} raises SteinerPropertyError.
    subadd and reduce report a boundary increase through "monotone" instead,
    since subadd only guarantees it on optimal inputs.
    """
    p = _params(args)
    d = _decoration(args, p.m) or Decoration.plain(p.m)
    before = _input_set(args, p)
    steps: List[Dict[str, Any]] = []
    monotone = True

    if args.op == "compress":
        labels = range(p.m) if args.h is None else [args.h]
        after = before
        for h in labels:
            following = compress_h(after, p, d, h)
            check_steiner_step(after, following, p, d, f"compress_{h}")
            after = following
    elif args.op == "compress-inf":
        after = compress_inf(before, p, d)
        check_steiner_step(before, after, p, d, "compress_inf")
    elif args.op == "subadd":
        after = subadd(before, p, d)
        old, new = check_subadd_step(before, after, p, d)
        monotone = new <= old
    else:
        trace = reduce_to_lex(before, p, d)
        after = trace.final
        monotone = trace.monotone
        steps = [
            {"op": step.operation, "set": format_set(step.vertex_set), "theta": step.boundary, "theta_delta": step.delta}
            for step in trace.steps
        ]
    if not monotone:
        logger.warning(f"steiner {args.op} increased Θ_{{s,t}} on a set that is not optimal")

    old, new = _describe(before, p, d), _describe(after, p, d)
    payload = {
        "op": args.op,
        "n": p.n,
        "m": p.m,
        "s": d.s,
        "t": d.t,
        "before": old,
        "after": new,
        "theta_delta": new["theta"] - old["theta"],
        "monotone": monotone,
        "is_lex_segment": after.is_lex_segment(),
    }
    if steps:
        payload["steps"] = steps
    write_output(render_report(payload, args.format), args.out)
    return EXIT_CODES["ok"]
