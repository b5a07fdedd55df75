"""Command-line surface: decide, reduce, verify, oracle, gen, graph-check.

Every invocation prints one JSON result document to stdout and diagnostics
to stderr. Exit codes: 0 = YES (or valid/graphical/success), 1 = NO,
2 = usage or validation error, 3 = UNKNOWN (node budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from time import perf_counter
from typing import Sequence, Union

from .core import (
    CertificateError,
    DegreeSequence,
    GroundSetMismatchError,
    InstanceTooLargeError,
    Int64OverflowError,
    verify_certificate,
)
from .graph import eg_check, graph_bruteforce, hh_realize, verify_graph_certificate
from .reduction import (
    DegSeqInstance,
    PromiseViolationError,
    ThreePartitionInstance,
    ZeroWeightInstance,
    reduce_partition_to_degseq,
    reduce_partition_to_zero,
    reduce_zero_to_degseq,
)
from .solver import (
    DEFAULT_BUDGET,
    bruteforce_degseq,
    bruteforce_partition,
    bruteforce_zero,
    decide_degseq,
    decide_partition,
    decide_zero,
    verify_partition_certificate,
    verify_zero_certificate,
)
from .workbench import (
    CertificateDoc,
    ParseError,
    certificate_document,
    dump_document,
    gen_partition,
    gen_planted_degseq,
    instance_document,
    parse_certificate,
    parse_instance,
    result_document,
    serialize_certificate,
    serialize_instance,
)

_EXIT_BY_ANSWER = {"YES": 0, "NO": 1, "UNKNOWN": 3}


class _CliError(Exception):
    """Validation failure; message goes to stderr, exit code is 2."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from None


def _load_instance(path: str):
    try:
        return parse_instance(_read(path))
    except ParseError as exc:
        field = f" (field: {exc.field})" if exc.field else ""
        raise _CliError(f"{path}: {exc}{field}") from None


def _load_certificate(path: str) -> CertificateDoc:
    try:
        return parse_certificate(_read(path))
    except ParseError as exc:
        field = f" (field: {exc.field})" if exc.field else ""
        raise _CliError(f"{path}: {exc}{field}") from None


def _emit(doc: dict) -> None:
    sys.stdout.write(dump_document(doc))


def _cmd_decide(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)
    if args.k is not None and (not isinstance(inst, DegSeqInstance) or inst.k != args.k):
        raise _CliError(f"--k {args.k} does not match the instance in {args.input}")
    if isinstance(inst, DegSeqInstance) and inst.k == 2:
        started = perf_counter()
        realization = hh_realize(inst.d)
        graphical = eg_check(inst.d)
        millis = int((perf_counter() - started) * 1000)
        cert_doc = certificate_document(realization) if realization is not None else None
        _emit(
            {
                "answer": "YES" if graphical else "NO",
                "certificate": cert_doc,
                "stats": {"nodes": 0, "millis": millis},
            }
        )
        if args.certificate_out and realization is not None:
            Path(args.certificate_out).write_text(
                serialize_certificate(realization), encoding="utf-8"
            )
        return 0 if graphical else 1
    if isinstance(inst, DegSeqInstance):
        outcome = decide_degseq(inst.d, budget=args.budget)
    elif isinstance(inst, ZeroWeightInstance):
        outcome = decide_zero(inst, budget=args.budget)
    else:
        outcome = decide_partition(inst, budget=args.budget)
    _emit(result_document(outcome))
    if args.certificate_out and outcome.certificate is not None:
        Path(args.certificate_out).write_text(
            serialize_certificate(outcome.certificate), encoding="utf-8"
        )
    return _EXIT_BY_ANSWER[outcome.answer]


def _cmd_reduce(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)
    expected = {
        "three_partition": ThreePartitionInstance,
        "zero_weight": ZeroWeightInstance,
    }[args.source]
    if not isinstance(inst, expected):
        raise _CliError(f"{args.input} is not a {args.source} instance")
    if args.source == "three_partition" and args.target == "zero_weight":
        reduced = reduce_partition_to_zero(inst)
        _emit(instance_document(reduced))
        return 0
    if args.source == "three_partition" and args.target == "degseq":
        result = reduce_partition_to_degseq(inst)
        zero = result.zero_weight
        sp = result.sign_partition
    elif args.source == "zero_weight" and args.target == "degseq":
        zero = inst
        reduced_pair = reduce_zero_to_degseq(inst)
        result = reduced_pair
        sp = reduced_pair.sign_partition
    else:
        raise _CliError(f"unsupported reduction {args.source} -> {args.target}")
    doc = instance_document(result.degseq)
    doc["intermediate"] = {
        "w": list(zero.w.values),
        "c": list(zero.c.values),
        "sign_sizes": {
            "minus": len(sp.s_minus.edges),
            "zero": len(sp.s_zero.edges),
            "plus": len(sp.s_plus.edges),
        },
    }
    _emit(doc)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    cert = _load_certificate(args.certificate)
    if isinstance(inst, DegSeqInstance) and inst.k == 2:
        if cert.kind != "graph":
            raise _CliError("a k = 2 instance needs a 'graph' certificate")
        check = verify_graph_certificate(cert.edges, inst.d)
    else:
        if cert.kind != "hypergraph":
            raise _CliError(f"instance in {args.instance} needs a 'hypergraph' certificate")
        if isinstance(inst, DegSeqInstance):
            check = verify_certificate(cert.edges, inst.d)
        elif isinstance(inst, ZeroWeightInstance):
            check = verify_zero_certificate(cert.edges, inst)
        else:
            check = verify_partition_certificate(cert.edges, inst)
    _emit({"valid": check.ok, "reason": check.reason})
    return 0 if check.ok else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)
    started = perf_counter()
    try:
        if isinstance(inst, DegSeqInstance):
            answer = graph_bruteforce(inst.d) if inst.k == 2 else bruteforce_degseq(inst.d)
        elif isinstance(inst, ZeroWeightInstance):
            answer = bruteforce_zero(inst)
        else:
            answer = bruteforce_partition(inst)
    except InstanceTooLargeError as exc:
        raise _CliError(str(exc)) from None
    millis = int((perf_counter() - started) * 1000)
    _emit(
        {
            "answer": "YES" if answer else "NO",
            "certificate": None,
            "stats": {"nodes": 0, "millis": millis},
        }
    )
    return 0 if answer else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.problem == "degseq":
        if args.m is None:
            raise _CliError("gen --problem degseq needs --m")
        try:
            inst, witness = gen_planted_degseq(args.n, args.m, args.seed)
        except ValueError as exc:
            raise _CliError(str(exc)) from None
        sys.stdout.write(serialize_instance(inst))
        if args.witness_out:
            Path(args.witness_out).write_text(
                serialize_certificate(witness), encoding="utf-8"
            )
        return 0
    if args.max_value is None:
        raise _CliError("gen --problem three_partition needs --max-value")
    try:
        inst = gen_partition(args.n, args.max_value, args.seed, planted=args.planted)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    sys.stdout.write(serialize_instance(inst))
    return 0


def _cmd_graph_check(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)
    if not isinstance(inst, DegSeqInstance) or inst.k != 2:
        raise _CliError("graph-check needs a degseq instance with k = 2")
    graphical = eg_check(inst.d)
    realization = None
    if args.realize and graphical:
        g = hh_realize(inst.d)
        if g is not None:
            realization = [list(e) for e in g.edges]
    _emit({"graphical": graphical, "realization": realization})
    return 0 if graphical else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperdeg",
        description="Degree-sequence realizability workbench for 3-hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide an instance exactly, with certificate")
    p.add_argument("--input", required=True, help="instance JSON file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget (default 10^7)")
    p.add_argument("--k", type=int, choices=(2, 3), default=None, help="expected uniformity")
    p.add_argument("--certificate-out", default=None, help="write YES certificate here")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("reduce", help="apply a forward reduction")
    p.add_argument("--from", dest="source", required=True,
                   choices=("three_partition", "zero_weight"))
    p.add_argument("--to", dest="target", required=True,
                   choices=("zero_weight", "degseq"))
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--certificate", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force ground truth (size-guarded)")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate instances (seeded, reproducible)")
    p.add_argument("--problem", required=True, choices=("degseq", "three_partition"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="edge count (degseq)")
    p.add_argument("--max-value", type=int, default=None, help="value bound (three_partition)")
    p.add_argument("--planted", action="store_true", help="hide a YES witness (three_partition)")
    p.add_argument("--witness-out", default=None, help="write the planted witness here (degseq)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("graph-check", help="Erdos-Gallai test for k = 2 instances")
    p.add_argument("--input", required=True)
    p.add_argument("--realize", action="store_true", help="include a Havel-Hakimi realization")
    p.set_defaults(func=_cmd_graph_check)

    return parser


def cli_main(argv: Union[Sequence[str], None] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        ParseError,
        PromiseViolationError,
        CertificateError,
        GroundSetMismatchError,
        Int64OverflowError,
        InstanceTooLargeError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
