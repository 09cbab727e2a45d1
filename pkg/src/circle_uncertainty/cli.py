"""Command-line interface.

Subcommands::

    circle-uncertainty analyze --builtin "von-mises:k=1,l=0,a=0"
    circle-uncertainty analyze --state my_state.json
    circle-uncertainty sweep --family cat --kmin 0 --kmax 3 --n 61 --out cat.csv
    circle-uncertainty verify --corpus 1000 --seed 42

Builtin state grammar: ``von-mises:k=<real>,l=<int>,a=<real>``,
``cat:k=<real>``, ``l-eigenstate:<int>``, ``x-extremal:k=<real>,l=<int>,a=<real>``
(l and a default to 0 where omitted).

Exit codes: 0 success, 1 invariant failure (including an ordering-chain
violation in a report), 2 input or I/O error, 3 numeric-domain error.
Reports print 12 significant digits; all output is deterministic for
identical inputs.
"""

import argparse
import sys
from dataclasses import dataclass

from . import catalog, verify
from .bounds import BoundsReport, full_report
from .errors import DomainError, NumericalError
from .states import load_state, save_state

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3

FAILURE_DUMP = "verify_failure.json"


class SpecError(ValueError):
    """Malformed builtin state spec string."""


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def parse_builtin(spec: str):
    """Build a catalog state from a builtin spec string."""
    family, _, rest = spec.partition(":")
    family = family.strip()
    if family == "l-eigenstate":
        try:
            return catalog.l_eigenstate(int(rest))
        except ValueError as exc:
            raise SpecError(f"bad l-eigenstate index {rest!r}") from exc
    kv = {}
    if rest:
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise SpecError(f"expected key=value, got {item!r}")
            kv[key.strip()] = val.strip()
    try:
        kappa = float(kv.pop("k"))
    except KeyError as exc:
        raise SpecError(f"{family} spec needs k=<real>") from exc
    except ValueError as exc:
        raise SpecError(f"bad kappa value {kv.get('k')!r}") from exc
    if family == "cat":
        if kv:
            raise SpecError(f"unknown keys for cat: {sorted(kv)}")
        return catalog.cat_state(kappa)
    try:
        lam = int(kv.pop("l", "0"))
        alpha = float(kv.pop("a", "0"))
    except ValueError as exc:
        raise SpecError(f"bad l/a value in {spec!r}") from exc
    if kv:
        raise SpecError(f"unknown keys for {family}: {sorted(kv)}")
    params = catalog.VonMisesParams(kappa, lam, alpha)
    if family == "von-mises":
        return catalog.von_mises(params)
    if family == "x-extremal":
        return catalog.x_extremal_state(params)
    raise SpecError(f"unknown builtin family {family!r}")


def _report_json(rep: BoundsReport) -> str:
    items = [
        ("var_l", _fmt(rep.var_l)),
        ("var_e", _fmt(rep.var_e)),
        ("standard", _fmt(rep.standard)),
        ("v2", _fmt(rep.v2)),
        ("u2", _fmt(rep.u2)),
        ("alpha_star", _fmt(rep.alpha_star)),
        ("sat_u2", "true" if rep.sat_u2 else "false"),
        ("sat_symmetry", "true" if rep.sat_symmetry else "false"),
        ("sat_ordering_chain", "true" if rep.sat_ordering_chain else "false"),
    ]
    body = ",\n".join(f'  "{k}": {v}' for k, v in items)
    return "{\n" + body + "\n}"


def cmd_analyze(args) -> int:
    if bool(args.builtin) == bool(args.state):
        print("analyze: give exactly one of --builtin or --state", file=sys.stderr)
        return EXIT_INPUT
    if args.builtin:
        state = parse_builtin(args.builtin)
    else:
        state = load_state(args.state)
    rep = full_report(state, sat_tol=args.tol)
    print(_report_json(rep))
    return EXIT_OK if rep.sat_ordering_chain else EXIT_INVARIANT


SWEEP_HEADER = "family,kappa,var_e,var_l,standard,v2,u2,gap_uv,chain_ok"

_FAMILIES = {
    "von-mises": lambda k: catalog.von_mises(catalog.VonMisesParams(k)),
    "cat": catalog.cat_state,
    "x-extremal": lambda k: catalog.x_extremal_state(catalog.VonMisesParams(k)),
}


@dataclass(frozen=True)
class SweepRow:
    """One CSV record of a parameter-sweep point."""

    family: str
    kappa: float
    var_e: float
    var_l: float
    standard: float
    v2: float
    u2: float
    gap_uv: float
    chain_ok: bool

    def as_csv(self) -> str:
        return ",".join(
            [
                self.family,
                _fmt(self.kappa),
                _fmt(self.var_e),
                _fmt(self.var_l),
                _fmt(self.standard),
                _fmt(self.v2),
                _fmt(self.u2),
                _fmt(self.gap_uv),
                "true" if self.chain_ok else "false",
            ]
        )


def sweep_rows(family: str, k_min: float, k_max: float, n: int) -> list[SweepRow]:
    build = _FAMILIES[family]
    rows = []
    for i in range(n):
        kappa = k_min + (k_max - k_min) * i / (n - 1)
        rep = full_report(build(kappa))
        rows.append(
            SweepRow(
                family=family,
                kappa=kappa,
                var_e=rep.var_e,
                var_l=rep.var_l,
                standard=rep.standard,
                v2=rep.v2,
                u2=rep.u2,
                gap_uv=rep.u2 - rep.v2,
                chain_ok=rep.sat_ordering_chain,
            )
        )
    return rows


def cmd_sweep(args) -> int:
    if args.family not in _FAMILIES:
        print(f"sweep: unknown family {args.family!r}", file=sys.stderr)
        return EXIT_INPUT
    if not (0.0 <= args.kmin < args.kmax <= catalog.MAX_KAPPA) or args.n < 2:
        print("sweep: need 0 <= kmin < kmax <= 50 and n >= 2", file=sys.stderr)
        return EXIT_INPUT
    rows = sweep_rows(args.family, args.kmin, args.kmax, args.n)
    text = "\n".join([SWEEP_HEADER] + [r.as_csv() for r in rows]) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.corpus < 1:
        print("verify: corpus size must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    injected = None
    if args.inject_denormalized:
        # Negative self-test: one deliberately denormalized state must trip
        # the normalization invariant and exit 1.
        import numpy as np

        from .states import CircleState

        bad = CircleState(
            l_min=-1, l_max=1, coeffs=np.array([0.5, 0.5, 0.5], dtype=complex)
        )
        injected = [bad]
    report = verify.run_suite(args.corpus, args.seed, injected=injected)
    sys.stdout.write(report.summary())
    if report.ok:
        return EXIT_OK
    bad_state = report.first_failure_state()
    if bad_state is not None:
        save_state(bad_state, FAILURE_DUMP)
        print(f"reproducer state written to {FAILURE_DUMP}")
    return EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circle-uncertainty",
        description="Angle/angular-momentum uncertainty bounds on the circle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="report the bounds for one state")
    p_an.add_argument("--builtin", help="builtin state spec, e.g. von-mises:k=1,l=0,a=0")
    p_an.add_argument("--state", help="path to a JSON state file")
    p_an.add_argument(
        "--tol", type=float, default=1e-8,
        help="saturation-flag tolerance (default 1e-8)",
    )
    p_an.set_defaults(func=cmd_analyze)

    p_sw = sub.add_parser("sweep", help="sweep a state family over kappa, emit CSV")
    p_sw.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    p_sw.add_argument("--kmin", type=float, default=0.0)
    p_sw.add_argument("--kmax", type=float, required=True)
    p_sw.add_argument("--n", type=int, required=True)
    p_sw.add_argument("--out", required=True, help="output CSV path ('-' for stdout)")
    p_sw.set_defaults(func=cmd_sweep)

    p_ve = sub.add_parser("verify", help="run the invariant suite on a seeded corpus")
    p_ve.add_argument("--corpus", type=int, default=100)
    p_ve.add_argument("--seed", type=int, default=42)
    p_ve.add_argument(
        "--inject-denormalized", action="store_true", help=argparse.SUPPRESS
    )
    p_ve.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, OSError, ValueError) as exc:
        if isinstance(exc, DomainError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NUMERIC
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
