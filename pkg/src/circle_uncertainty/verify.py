"""Seeded invariant suite over a random-state corpus.

This is the engine behind ``circle-uncertainty verify``: it draws a
deterministic corpus of random normalized states, mixes in the catalog
families, and runs every cross-module invariant (oracle agreement, the
identity chain, rotation invariance, Bessel recurrences, residuals).
The summary contains only counts, so fixed inputs give byte-identical
output.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import bounds, catalog, ladder, moments, special
from .states import CircleState, make_state, rotate

CORPUS_WINDOW = 16

#: Tolerances of the individual checks (absolute unless noted).
TOL_NORM = 1e-12
TOL_ORACLE = 1e-10
TOL_IDENTITY = 1e-10
TOL_CHAIN = 1e-10
TOL_U2_MATCH = 1e-8
TOL_ROTATION = 1e-9
TOL_BESSEL = 1e-10
TOL_RESIDUAL = 1e-8


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: CircleState | None = None

    def record(self, ok: bool, state: CircleState | None = None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = state


@dataclass
class VerificationReport:
    corpus_size: int
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)

    def summary(self) -> str:
        lines = [f"corpus: {self.corpus_size} states, seed: {self.seed}"]
        for c in self.checks:
            status = "PASS" if c.failed == 0 else "FAIL"
            total = c.passed + c.failed
            lines.append(f"[{status}] {c.name:<28s} {c.passed}/{total}")
        lines.append("result: " + ("all invariants hold" if self.ok else "INVARIANT FAILURE"))
        return "\n".join(lines) + "\n"

    def first_failure_state(self) -> CircleState | None:
        for c in self.checks:
            if c.first_failure is not None:
                return c.first_failure
        return None


def random_corpus(n: int, seed: int, window: int = CORPUS_WINDOW) -> list[CircleState]:
    """Dense complex-Gaussian states on the window [-window, window]."""
    rng = np.random.default_rng(seed)
    out = []
    size = 2 * window + 1
    for _ in range(n):
        c = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        out.append(make_state(-window, c, normalize=True))
    return out


def catalog_states(kappas=(0.1, 0.5, 1.0, 2.0, 5.0, 10.0)) -> list[CircleState]:
    out = []
    for k in kappas:
        out.append(catalog.von_mises(catalog.VonMisesParams(k)))
        out.append(catalog.cat_state(k))
        out.append(catalog.x_extremal_state(catalog.VonMisesParams(k)))
    out.append(catalog.l_eigenstate(0))
    out.append(catalog.l_eigenstate(3))
    return out


def run_suite(
    corpus_size: int,
    seed: int,
    injected: list[CircleState] | None = None,
) -> VerificationReport:
    """Run every invariant over the corpus; deterministic for fixed inputs.

    ``injected`` replaces the generated corpus (used by the negative
    self-test path of the CLI).
    """
    states = injected if injected is not None else random_corpus(corpus_size, seed)
    rng = np.random.default_rng(seed + 1)
    report = VerificationReport(corpus_size=len(states), seed=seed)

    norm_check = CheckResult("normalization")
    oracle_check = CheckResult("moment-oracle-agreement")
    resultant_check = CheckResult("resultant-identity")
    spread_check = CheckResult("spread-identity")
    psd_check = CheckResult("covariance-psd")
    chain_check = CheckResult("ordering-chain")
    u2_check = CheckResult("u2-closed-vs-sweep")
    rot_check = CheckResult("rotation-invariance")

    for st in states:
        ok_norm = st.norm_error() <= TOL_NORM
        norm_check.record(ok_norm, st)
        if not ok_norm:
            continue
        m = moments.moments_from_coeffs(st)
        width = st.l_max - st.l_min + 1
        n_grid = 1 << (4 * width - 1).bit_length()
        q = moments.quadrature_oracle(st, n_grid)
        agree = (
            abs(m.e1 - q.e1) <= TOL_ORACLE
            and abs(m.e2 - q.e2) <= TOL_ORACLE
            and abs(m.l1 - q.l1) <= TOL_ORACLE
            and abs(m.l2 - q.l2) <= TOL_ORACLE
        )
        oracle_check.record(agree, st)

        resultant_check.record(
            abs(moments.resultant_identity_gap(m)) <= TOL_IDENTITY, st
        )
        pseudo, matrix, _ = moments.second_moment_identity(m)
        spread_check.record(abs(pseudo - matrix) <= TOL_IDENTITY, st)

        g = moments.covariance(m)
        psd_check.record(
            g.var_s >= 0.0 and g.var_c >= 0.0 and g.det >= -1e-12, st
        )

        var_l = moments.dispersion_l(m)
        var_e = moments.dispersion_e(m)
        u2 = bounds.u2_closed_form(g, moments.resultant_vector(m))
        v2 = bounds.v2_bound(g)
        std = bounds.standard_bound(var_e)
        chain_check.record(bounds.chain_holds(var_l, u2, v2, std, TOL_CHAIN), st)

        u2_swept, _ = bounds.u2_alpha_sweep(st)
        u2_check.record(abs(u2 - u2_swept) <= TOL_U2_MATCH, st)

        phi = float(rng.uniform(0.0, 2.0 * math.pi))
        rotated = rotate(st, phi)
        mr = moments.moments_from_coeffs(rotated)
        gr = moments.covariance(mr)
        rot_ok = (
            abs(moments.dispersion_e(mr) - var_e) <= TOL_ROTATION
            and abs(moments.dispersion_l(mr) - var_l) <= TOL_ROTATION
            and abs(bounds.u2_closed_form(gr, moments.resultant_vector(mr)) - u2)
            <= TOL_ROTATION
            and abs(bounds.v2_bound(gr) - v2) <= TOL_ROTATION
        )
        rot_check.record(rot_ok, st)

    report.checks.extend(
        [
            norm_check,
            oracle_check,
            resultant_check,
            spread_check,
            psd_check,
            chain_check,
            u2_check,
            rot_check,
        ]
    )

    if injected is None:
        report.checks.append(_bessel_recurrence_check())
        report.checks.append(_von_mises_residual_check())
        report.checks.append(_ladder_commutator_check(states[: min(8, len(states))]))
    return report


def _bessel_recurrence_check() -> CheckResult:
    check = CheckResult("bessel-recurrence")
    for x in (0.5, 1.0, 5.0, 20.0):
        for n in range(1, 51):
            lhs = special.bessel_i(n - 1, x) - special.bessel_i(n + 1, x)
            rhs = (2.0 * n / x) * special.bessel_i(n, x)
            check.record(abs(lhs - rhs) <= 1e-10 * special.bessel_i(n - 1, x))
    return check


def _von_mises_residual_check() -> CheckResult:
    check = CheckResult("intelligent-state-residual")
    for kappa in (0.5, 1.0, 3.0):
        for lam in (0, 2):
            for alpha in (0.0, 1.1):
                st = catalog.von_mises(catalog.VonMisesParams(kappa, lam, alpha))
                resid = catalog.intelligent_residual(st, kappa, lam, alpha)
                check.record(resid <= TOL_RESIDUAL, st)
    return check


def _ladder_commutator_check(states: list[CircleState]) -> CheckResult:
    check = CheckResult("ladder-commutator")
    probes = [catalog.l_eigenstate(l) for l in (-2, 0, 1, 5)] + list(states)
    for st in probes:
        check.record(ladder.commutator_residual(st) <= 1e-10, st)
    return check
