"""Command-line front end: ``mct <subcommand> <ideal-ref|path> [flags]``.

Exit codes: 0 success, 1 a verification came back negative, 2 bad input,
3 a built-in fixture failed its self-validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import betti as betti_mod
from . import etale, fixtures, generators, rooting
from .config import Config
from .errors import MctError
from .lattice import LcmLattice
from .monomials import MonomialIdeal, parse_ideal

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_FIXTURE = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_ideal(ref: str, variables: list[str] | None = None) -> MonomialIdeal:
    I = fixtures.get_fixture(ref)
    if I is not None:
        if ref == "reisner":
            failures = fixtures.validate_reisner(I)
            if failures:
                raise fixtures.FixtureValidationError("reisner: " + "; ".join(failures))
        return I
    path = Path(ref)
    if not path.exists():
        raise InputError(f"{ref!r} is neither a fixture ({', '.join(fixtures.fixture_names())}) nor a file")
    return parse_ideal(path.read_text(), variables)


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None


def _render_table(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def cmd_betti(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    fn = betti_mod.betti_gpw if args.method == "gpw" else betti_mod.betti_taylor_oracle
    T = fn(I, args.char, args.subject)
    data = {"ideal": str(I), **T.to_json()}
    return data, T.diagram(), EXIT_OK


def cmd_etale(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    prof = etale.yan_cohomology(I, args.char_l)
    top = etale.top_degree_affine(I, args.char_l)
    data = {"ideal": str(I), **prof.to_json(), "top_affine_from_betti": top}
    data["routes_agree"] = top == prof.top_affine
    if args.projective:
        data["reported"] = {"projective": top - 1}
    return data, None, EXIT_OK if data["routes_agree"] else EXIT_FAILED


def cmd_probe(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    witness = load_ideal(args.witness, list(I.variables)) if args.witness else None
    ells = tuple(args.char_l) if args.char_l else cfg.primes
    rep = etale.conjecture_probe(I, args.char_k, ells, witness)
    return {"ideal": str(I), **rep.to_json()}, None, EXIT_OK


def cmd_hypotheses(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    return {"ideal": str(I), "ell": args.char_l, **etale.check_hypotheses_subschLSTCI(I, args.char_l)}, None, EXIT_OK


def cmd_rooting(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    L = LcmLattice(I, cap=cfg.lattice_cap)
    if args.mode == "both":
        data = rooting.explore(L, cfg.enumeration_cap, cfg.order_samples, cfg.seed, cfg.stream_limit)
    else:
        res = rooting.min_rooting_dim(
            L, args.mode, cfg.enumeration_cap, cfg.order_samples, cfg.seed, cfg.stream_limit
        )
        key = "all" if args.mode == "all" else "orders"
        data = {
            f"min_{key}": res.min_dim,
            f"exhaustive_{key}": res.exhaustive,
            "witness_maps": {key: res.argmin},
            "dims": res.to_json()["dims"],
        }
    return {"ideal": str(I), **data}, None, EXIT_OK


def cmd_generators(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    if args.method == "rooting":
        G = generators.generators_from_rooting(I, d=args.d)
    else:
        G = generators.generators_from_heights(I, args.d_vec)
    return G.to_json(), None, EXIT_OK


def cmd_verify(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    text = sys.stdin.read() if args.generators == "-" else Path(args.generators).read_text()
    try:
        G = generators.GeneratorSet.from_json(json.loads(text), I.variables)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read generator file: {exc}") from None
    if G.variables != I.variables:
        raise InputError(f"generator variables {G.variables} differ from {I.variables}")
    primes = args.primes or cfg.primes
    rep = generators.verify_radical_equality(I, G, primes, cfg.point_cap)
    return {"ideal": str(I), **rep.to_json()}, None, EXIT_OK if rep.ok else EXIT_FAILED


def cmd_lattice(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    L = LcmLattice(I, cap=cfg.lattice_cap)
    return L.to_json(), L.to_dot() if args.dot else None, EXIT_OK


def cmd_bounds(args, cfg: Config):
    I = load_ideal(args.ideal, args.vars)
    rep = generators.ara_bounds_report(I, cfg.primes, cfg.primes, cfg.order_samples, cfg.seed)
    return {"ideal": str(I), **rep}, None, EXIT_OK if rep["consistent"] else EXIT_FAILED


def cmd_fixtures(args, cfg: Config):
    data = {name: str(fixtures.get_fixture(name)) for name in sorted(fixtures.FIXTURES)}
    data["koszul(n)"] = "(x0, ..., xn)"
    failures = fixtures.validate_reisner()
    data["reisner_validation"] = failures or "ok"
    return data, None, EXIT_FIXTURE if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=None)
    common.add_argument("--out", help="write output to FILE instead of stdout")
    common.add_argument("--seed", type=int, default=None, help="overrides MCT_SEED")
    common.add_argument("--vars", type=lambda s: [v.strip() for v in s.split(",") if v.strip()],
                        help="comma-separated ambient variable order for file inputs")

    parser = argparse.ArgumentParser(prog="mct", description="Monomial ideal combinatorics toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    p.add_argument("ideal")
    p.add_argument("--char", type=int, default=2)
    p.add_argument("--subject", choices=("ideal", "quotient"), default="ideal")
    p.add_argument("--method", choices=("gpw", "taylor"), default="gpw")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("etale", parents=[common], help="constant-sheaf cohomology of the complement")
    p.add_argument("ideal")
    p.add_argument("--char-l", type=int, default=2)
    p.add_argument("--projective", action="store_true")
    p.set_defaults(func=cmd_etale)

    p = sub.add_parser("probe", parents=[common], help="Lyubeznik conjecture probe")
    p.add_argument("ideal")
    p.add_argument("--char-k", type=int, required=True)
    p.add_argument("--char-l", type=int, action="append")
    p.add_argument("--witness")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("hypotheses", parents=[common], help="computable vanishing-criterion hypotheses")
    p.add_argument("ideal")
    p.add_argument("--char-l", type=int, default=2)
    p.set_defaults(func=cmd_hypotheses)

    p = sub.add_parser("rooting", parents=[common], help="rooting-complex dimension explorer")
    p.add_argument("ideal")
    p.add_argument("--mode", choices=("all", "orders", "both"), default="both")
    p.add_argument("--budget", type=int, help="candidate-space size up to which --mode all is exhaustive")
    p.add_argument("--stream-limit", type=int, help="maps examined in --mode all when not exhaustive")
    p.add_argument("--samples", type=int, help="random atom orders tried beyond 8 atoms")
    p.set_defaults(func=cmd_rooting)

    p = sub.add_parser("generators", parents=[common], help="generators up to radical")
    p.add_argument("ideal")
    p.add_argument("--method", choices=("rooting", "height"), default="height")
    p.add_argument("--d", type=int)
    p.add_argument("--d-vec", type=lambda s: [int(t) for t in s.split(",")])
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("verify", parents=[common], help="check a generator file against an ideal")
    p.add_argument("ideal")
    p.add_argument("generators", help="GeneratorSet JSON file, or - for stdin")
    p.add_argument("--primes", type=_parse_primes)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", parents=[common], help="export the lcm-lattice")
    p.add_argument("ideal")
    p.add_argument("--dot", action="store_true", help="emit a Hasse diagram in DOT")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("bounds", parents=[common], help="arithmetic rank bounds")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("fixtures", parents=[common], help="list and validate built-in ideals")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = Config.from_env(
        seed=args.seed,
        output_format=args.format,
        enumeration_cap=getattr(args, "budget", None),
        order_samples=getattr(args, "samples", None),
        stream_limit=getattr(args, "stream_limit", None),
    )
    try:
        data, text, code = args.func(args, cfg)
    except fixtures.FixtureValidationError as exc:
        print(f"fixture self-validation failed: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except (InputError, MctError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.output_format == "table":
        out = text if text is not None and not getattr(args, "dot", False) else _render_table(data)
    elif getattr(args, "dot", False):
        out = text
    else:
        out = json.dumps(data, indent=2)
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
