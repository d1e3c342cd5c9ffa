"""Command-line front end.

Exit codes: 0 success or certificate issued, 1 no certificate (the
hypothesis fails for the input), 2 input error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from random import Random

from . import acceptance
from .blocks import alpha, beta
from .counting import eta0_exhaustive_defect
from .engine import GapCertificate, NoCertificate, f2_scl_bound
from .errors import SclGapError
from .graphs import Graph
from .lettermaps import f2_letter_qm, tilde_of, verify_letter_qm, verify_well_behaved
from .raags import parse_raag_word, raag_certificate
from .triples import classify
from .words import format_word, parse_word

OK, NO_CERT, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


def _print_certificate(cert: GapCertificate, as_json: bool) -> None:
    if as_json:
        print(cert.to_json())
        return
    rec = cert.to_record()
    print(f"branch:          {rec['branch']}")
    print(f"depth:           {rec['depth']}")
    print(f"terminal class:  [{rec['terminal_class'] or 'e'}]")
    print(f"functional:      {rec['functional']} (sign {rec['sign']:+d})")
    print(f"power evidence:  {rec['power_evidence']}")
    print(f"psi_bar:         {Fraction(*rec['psi_bar'])}")
    print(f"phi_bar:         {Fraction(*rec['phi_bar'])}")
    print(f"scl lower bound: {Fraction(*rec['scl_lower_bound'])}")


def _cmd_bound(args) -> int:
    if args.graph:
        try:
            with open(args.graph) as fh:
                graph = Graph.from_json(fh.read())
            g = parse_raag_word(graph, args.word)
        except (OSError, ValueError, KeyError, SclGapError) as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return INPUT_ERROR
        result = raag_certificate(graph, g)
    else:
        if args.group != "f2":
            print(f"input error: unknown group {args.group!r}", file=sys.stderr)
            return INPUT_ERROR
        try:
            word = parse_word(args.word)
        except ValueError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return INPUT_ERROR
        result = f2_scl_bound(word)
    if isinstance(result, NoCertificate):
        print(f"no certificate: {result.reason}")
        return NO_CERT
    _print_certificate(result, args.json)
    return OK


def _cmd_map(args, func) -> int:
    try:
        word = parse_word(args.word)
        print(func(word))
    except (ValueError, SclGapError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    return OK


def _cmd_classify(args) -> int:
    try:
        t = tuple(parse_word(w) for w in (args.w1, args.w2, args.w3))
        result = classify(t)
    except (ValueError, SclGapError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    print(f"tag: {result.tag}")
    if result.is_thin():
        print(f"moves: {' '.join(result.moves) if result.moves else '(none)'}")
        print(f"boundary words: {', '.join(format_word(c) for c in result.cs)}")
    return OK


def _cmd_verify(args) -> int:
    if args.map != "f2sign":
        print(f"input error: unknown map {args.map!r}", file=sys.stderr)
        return INPUT_ERROR
    phi = f2_letter_qm()
    psi = tilde_of(phi)
    rng = Random(args.seed)
    words = [""]
    frontier = [""]
    for _ in range(args.pairs_maxlen):
        frontier = [
            w + ch
            for w in frontier
            for ch in "aAbB"
            if not w or w[-1] != {"a": "A", "A": "a", "b": "B", "B": "b"}[ch]
        ]
        words.extend(frontier)
    bad = 0
    checked = 0
    for _ in range(args.samples):
        g, h = rng.choice(words), rng.choice(words)
        checked += 1
        if verify_letter_qm(phi, g, h).kind == "violation":
            bad += 1
            print(f"letter-map violation at ({g!r}, {h!r})")
        if verify_well_behaved(psi, g, h).kind == "violation":
            bad += 1
            print(f"well-behaved violation at ({g!r}, {h!r})")
    print(f"checked {checked} pairs, {bad} violations")
    return OK if bad == 0 else INTERNAL_ERROR


def _cmd_defect(args) -> int:
    if args.functional != "eta0":
        print(f"input error: unknown functional {args.functional!r}", file=sys.stderr)
        return INPUT_ERROR
    value = eta0_exhaustive_defect(args.maxlen)
    print(f"defect of eta0 over words of length <= {args.maxlen}: {value}")
    return OK


def _rederive(record: dict):
    source = record.get("source", {})
    if source.get("group") == "f2":
        return f2_scl_bound(parse_word(source["word"]))
    if source.get("group") == "raag":
        graph = Graph.from_record(source["graph"])
        return raag_certificate(graph, parse_raag_word(graph, source["word"]))
    raise ValueError(f"cannot re-derive certificates for source {source!r}")


def _cmd_cert(args) -> int:
    try:
        with open(args.file) as fh:
            record = json.load(fh)
        fresh = _rederive(record)
    except (OSError, ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    if isinstance(fresh, NoCertificate):
        print(f"re-derivation produced no certificate: {fresh.reason}")
        return INTERNAL_ERROR
    fresh_record = fresh.to_record()
    mismatches = [
        key
        for key in sorted(set(record) | set(fresh_record))
        if record.get(key) != fresh_record.get(key)
    ]
    if mismatches:
        for key in mismatches:
            print(f"mismatch in {key}: stored {record.get(key)!r}, fresh {fresh_record.get(key)!r}")
        return INTERNAL_ERROR
    print("certificate verified: all fields reproduce")
    return OK


def _cmd_selftest(args) -> int:
    results = acceptance.run_all(only=args.criteria)
    failed = sum(1 for r in results if not r.passed)
    return OK if failed == 0 else INTERNAL_ERROR


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="sclgap",
        description="Certified lower bounds for stable commutator length",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="certify scl >= 1/2 for a word")
    p_bound.add_argument("--group", default="f2")
    p_bound.add_argument("--graph", help="JSON graph file for a right-angled Artin group")
    p_bound.add_argument("--word", required=True)
    p_bound.add_argument("--json", action="store_true")
    p_bound.set_defaults(func=_cmd_bound)

    for name, func in (("alpha", alpha), ("beta", beta)):
        p = sub.add_parser(name, help=f"apply the {name} collapse map")
        p.add_argument("--word", required=True, default="")
        p.set_defaults(func=lambda args, f=func: _cmd_map(args, f))

    p_cls = sub.add_parser("classify-triple", help="classify a triple of alternating words")
    p_cls.add_argument("w1")
    p_cls.add_argument("w2")
    p_cls.add_argument("w3")
    p_cls.set_defaults(func=_cmd_classify)

    p_verify = sub.add_parser("verify", help="sample letter-map laws")
    p_verify.add_argument("--map", default="f2sign")
    p_verify.add_argument("--pairs-maxlen", type=int, default=5)
    p_verify.add_argument("--samples", type=int, default=2000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_defect = sub.add_parser("defect", help="exhaustive defect of a functional")
    p_defect.add_argument("--functional", default="eta0")
    p_defect.add_argument("--maxlen", type=int, default=8)
    p_defect.set_defaults(func=_cmd_defect)

    p_cert = sub.add_parser("cert", help="certificate file operations")
    cert_sub = p_cert.add_subparsers(dest="cert_command", required=True)
    p_cert_verify = cert_sub.add_parser("verify", help="re-derive and diff a stored certificate")
    p_cert_verify.add_argument("file")
    p_cert_verify.set_defaults(func=_cmd_cert)

    p_self = sub.add_parser("selftest", help="run the acceptance battery")
    p_self.add_argument("--criteria", type=int, nargs="*", default=None)
    p_self.set_defaults(func=_cmd_selftest)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SclGapError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
