"""Command-line front end.

Subcommands: bound, design, gen, verify, distance, encode, repair, decode,
simulate.  All output is JSON on stdout; positions and symbol indices are
1-based on the wire and symbols are hex strings.  Exit status: 0 success,
1 verification or decoding failure, 2 usage/parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codec
from .artifact import load_artifact, save_artifact
from .design import bound_report, build_design
from .errors import (
    ArtifactError,
    GdcError,
    InsufficientSymbolsError,
    ParameterError,
    RankDeficientError,
    SingularSystemError,
    SizeGuardError,
)
from .galois import BinaryField
from .simulator import build_layout, inject_and_repair

USAGE_ERROR = 2
VERIFICATION_ERROR = 1


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _parse_symbols(text: str) -> list[int]:
    try:
        return [int(tok, 16) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as e:
        raise ParameterError(f"bad hex symbol list {text!r}: {e}") from e


def _parse_assignments(text: str) -> dict[int, int]:
    """'1=3a,4=0f' with 1-based positions -> {0: 0x3a, 3: 0x0f}."""
    out: dict[int, int] = {}
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            pos_s, val_s = tok.split("=")
            pos = int(pos_s)
            val = int(val_s, 16)
        except ValueError as e:
            raise ParameterError(f"bad position=hex assignment {tok!r}") from e
        if pos < 1:
            raise ParameterError(f"positions are 1-based, got {pos}")
        out[pos - 1] = val
    return out


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gdcode",
        description="Construct, verify and exercise group-decodable erasure codes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="distance bounds for a parameter set")
    _add_params(p)

    p = sub.add_parser("design", help="construct the incidence matrix and bucket sets")
    _add_params(p)
    p.add_argument("-o", "--output", help="also write the design JSON to this file")

    p = sub.add_parser("gen", help="build and verify a code, write an artifact file")
    _add_params(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field-degree", type=int, default=None, help="override GF(2^m) degree")
    p.add_argument("--retry-budget", type=int, default=64)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("verify", help="re-verify an artifact file")
    p.add_argument("artifact")

    p = sub.add_parser("distance", help="recompute minimum distance by an oracle")
    p.add_argument("artifact")
    p.add_argument(
        "--method",
        choices=["rank_subsets", "enumerate_codewords"],
        default="rank_subsets",
    )

    p = sub.add_parser("encode", help="encode k hex symbols into a codeword")
    p.add_argument("artifact")
    p.add_argument("--message", required=True, help="comma-separated hex symbols")

    p = sub.add_parser("repair", help="repair one erased symbol from bucket helpers")
    p.add_argument("artifact")
    p.add_argument("--position", type=int, required=True, help="1-based erased position")
    p.add_argument("--have", required=True, help="helpers as pos=hex,pos=hex")

    p = sub.add_parser("decode", help="recover the message from available symbols")
    p.add_argument("artifact")
    p.add_argument("--have", required=True, help="available symbols as pos=hex,...")

    p = sub.add_parser("simulate", help="run erasure scenarios against an artifact")
    p.add_argument("scenario", help="JSON file: {artifact, patterns: [[1-based pos]]}")
    p.add_argument("--artifact", help="override the artifact path in the scenario")

    return ap


def _load(path: str) -> codec.GdcCode:
    return load_artifact(path).code


def _cmd_bound(args) -> int:
    rep = bound_report(build_design(args.alpha, args.beta, args.k, args.t))
    _emit({"gdc": rep.gdc_bound, "lrc": rep.lrc_bound, "singleton": rep.singleton})
    return 0


def _cmd_design(args) -> int:
    design = build_design(args.alpha, args.beta, args.k, args.t)
    obj = design.to_json()
    if args.output:
        Path(args.output).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    _emit(obj)
    return 0


def _cmd_gen(args) -> int:
    field = BinaryField(args.field_degree) if args.field_degree else None
    code = codec.build_code(
        args.alpha,
        args.beta,
        args.k,
        args.t,
        seed=args.seed,
        field=field,
        retry_budget=args.retry_budget,
    )
    save_artifact(code, args.output, args.seed)
    _emit(
        {
            "written": args.output,
            "n": code.design.n,
            "k": code.design.k,
            "d": code.d,
            "field": code.field.to_json(),
        }
    )
    return 0


def _cmd_verify(args) -> int:
    try:
        art = load_artifact(args.artifact, verify=True)
    except ArtifactError as e:
        _emit({"ok": False, "error": str(e)})
        return VERIFICATION_ERROR
    _emit({"ok": True, "d": art.code.d, "n": art.code.design.n, "k": art.code.design.k})
    return 0


def _cmd_distance(args) -> int:
    code = _load(args.artifact)
    d = codec.min_distance(code, method=args.method)
    _emit({"distance": d, "method": args.method, "claimed": code.d})
    return 0 if d == code.d else VERIFICATION_ERROR


def _cmd_encode(args) -> int:
    code = _load(args.artifact)
    word = codec.encode(code, _parse_symbols(args.message))
    _emit(
        {
            "symbols": [format(a, "x") for a in word.symbols],
            "buckets": [[format(a, "x") for a in b] for b in word.buckets()],
        }
    )
    return 0


def _cmd_repair(args) -> int:
    code = _load(args.artifact)
    if args.position < 1:
        raise ParameterError("positions are 1-based")
    symbol = codec.repair_symbol(code, args.position - 1, _parse_assignments(args.have))
    _emit({"position": args.position, "symbol": format(symbol, "x")})
    return 0


def _cmd_decode(args) -> int:
    code = _load(args.artifact)
    try:
        x = codec.decode_global(code, _parse_assignments(args.have))
    except RankDeficientError as e:
        _emit({"error": str(e), "rank": e.rank, "needed": e.needed})
        return VERIFICATION_ERROR
    _emit({"message": [format(a, "x") for a in x]})
    return 0


def _cmd_simulate(args) -> int:
    scen_path = Path(args.scenario)
    try:
        scenario = json.loads(scen_path.read_text())
        patterns = scenario["patterns"]
    except (OSError, json.JSONDecodeError, KeyError) as e:
        raise ParameterError(f"bad scenario file {args.scenario}: {e}") from e
    art_path = args.artifact or scenario.get("artifact")
    if not art_path:
        raise ParameterError("scenario names no artifact and none was given")
    if not Path(art_path).is_absolute():
        art_path = str(scen_path.parent / art_path)
    layout = build_layout(_load(art_path))
    results = []
    for pattern in patterns:
        erased = [int(p) - 1 for p in pattern]
        results.append(inject_and_repair(layout, erased).to_json())
    _emit({"results": results})
    return 0


_COMMANDS = {
    "bound": _cmd_bound,
    "design": _cmd_design,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "distance": _cmd_distance,
    "encode": _cmd_encode,
    "repair": _cmd_repair,
    "decode": _cmd_decode,
    "simulate": _cmd_simulate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParameterError, SizeGuardError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except (
        ArtifactError,
        RankDeficientError,
        InsufficientSymbolsError,
        SingularSystemError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return VERIFICATION_ERROR
    except GdcError as e:
        print(f"error: {e}", file=sys.stderr)
        return VERIFICATION_ERROR


if __name__ == "__main__":
    sys.exit(main())
