"""Command-line front end.

Exit codes: 0 success, 1 verification above tolerance, 2 parse error,
3 domain/range error, 4 unsupported coupling (q = 0 or 1).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import serialize as ser
from .channels import (
    KChannel,
    apply_general,
    apply_general_complementary,
    apply_k,
    apply_k_complementary,
    swap_coupling,
)
from .decompose import apply_decomposed, decompose, verify_decomposition
from .degradability import classify, verify_anti_degradability, verify_weak_degradability
from .exceptions import (
    InvalidCoupling,
    InvalidState,
    ParseError,
    RegimeError,
    Unsupported,
)
from .gaussian import compute_q, state_distance

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 100
DEFAULT_TOL = 1e-9

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


def _read_input(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
    return ser.loads(text)


def _kchannel_of(doc) -> KChannel | None:
    """Shorthand ``bs``/``amp`` specs map to the characteristic-function route."""
    c = ser.coupling_json_of(doc)
    if isinstance(c, dict) and len(c) == 1 and ("bs" in c or "amp" in c):
        (key, k), = c.items()
        ser.coupling_from_json(c)  # range checks
        return KChannel(ser.parse_real(k, key), ser.env_from_json(doc))
    return None


def run_classify(doc, args) -> tuple[dict, int]:
    spec = ser.spec_from_json(doc)
    cls = classify(spec.coupling, spec.env)
    report = cls.to_dict()
    report["env_purity"] = 1.0 / (2.0 * np.sqrt(spec.env.uncertainty))
    return report, EXIT_OK


def run_simulate(doc, args) -> tuple[dict, int]:
    if "state" not in doc:
        raise ParseError("simulate input needs a 'state' object")
    rho = ser.state_from_json(doc["state"])
    spec = ser.spec_from_json(doc)
    kch = _kchannel_of(doc)
    comp = args.complementary
    if kch is not None:
        out = (apply_k_complementary if comp else apply_k)(kch, rho)
        routes = ["characteristic_function", "two_mode"]
    else:
        out = (apply_general_complementary if comp else apply_general)(spec, rho)
        routes = ["two_mode", "decomposition"]
    if not args.oracle:
        return ser.state_to_json(out), EXIT_OK

    if kch is not None:
        other = (apply_general_complementary if comp else apply_general)(spec, rho)
    else:
        A = swap_coupling(spec.coupling) if comp else spec.coupling
        other = apply_decomposed(decompose(A), spec.env, rho)
    return {
        "output": ser.state_to_json(out),
        "oracle": ser.state_to_json(other),
        "residual": state_distance(out, other),
        "routes": routes,
    }, EXIT_OK


def run_decompose(doc, args) -> tuple[dict, int]:
    spec = ser.spec_from_json(doc)
    dec = decompose(spec.coupling)
    rep = verify_decomposition(spec.coupling, spec.env, args.samples, args.seed)
    return {
        "q": compute_q(spec.coupling),
        "decomposition": dec.to_dict(),
        "verification": {
            "max_residual": rep.max_residual,
            "samples": rep.samples,
            "seed": args.seed,
            "tolerance": args.tolerance,
            "passed": rep.max_residual < args.tolerance,
        },
    }, EXIT_OK


def run_verify(doc, args) -> tuple[dict, int]:
    identity = args.identity or doc.get("identity")
    if identity not in ("weak", "anti"):
        raise ParseError("verify needs identity 'weak' or 'anti'")
    k = args.k if args.k is not None else doc.get("k")
    if k is None:
        raise ParseError("verify needs a value for k")
    k = ser.parse_real(k, "k")
    env = ser.env_from_json(doc)
    fn = verify_weak_degradability if identity == "weak" else verify_anti_degradability
    rep = fn(k, env, args.samples, args.seed)
    report = rep.to_dict()
    report["seed"] = args.seed
    report["tolerance"] = args.tolerance
    report["passed"] = rep.max_residual < args.tolerance
    return report, EXIT_OK if report["passed"] else EXIT_FAIL


COMMANDS = {
    "classify": run_classify,
    "simulate": run_simulate,
    "decompose": run_decompose,
    "verify": run_verify,
}


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussdeg",
        description="Classify, simulate and decompose one-mode bosonic Gaussian channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", default="-", help="JSON file, inline JSON, or '-' for stdin")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--samples", type=_positive_int, default=DEFAULT_SAMPLES)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--tolerance", type=_positive_float, default=DEFAULT_TOL)
        if name == "simulate":
            p.add_argument("--complementary", action="store_true")
            p.add_argument("--oracle", action="store_true")
        if name == "verify":
            p.add_argument("--identity", choices=["weak", "anti"])
            p.add_argument("--k", type=float)
    return parser


def _fail(kind: str, exc: Exception, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}, sort_keys=True) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        doc = _read_input(args.input)
        if not isinstance(doc, dict):
            raise ParseError("top-level JSON must be an object")
        report, code = COMMANDS[args.command](doc, args)
    except ParseError as exc:
        return _fail("parse", exc, EXIT_PARSE)
    except (InvalidState, InvalidCoupling, RegimeError) as exc:
        return _fail("domain", exc, EXIT_DOMAIN)
    except Unsupported as exc:
        return _fail("unsupported", exc, EXIT_UNSUPPORTED)
    text = ser.dumps(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
