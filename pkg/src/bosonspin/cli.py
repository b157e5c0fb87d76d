"""Command-line front end.

Verbs:
    sweep <scenario-file>       time sweep over the selected routes -> CSV
    figure <fig1..fig8|all>     regenerate a named figure dataset -> CSV
    lengths <scenario-file>     print the decoherence/distinguishability lengths
    validate [scenario-file]    cross-route consistency checks, exit 0 on pass

CSV layout (one row per route/curve/time): route,label,tau,gammaSq,b,
gammaFast,gammaSlow,bFast,bSlow,gammaStderr,bStderr,gammaBound,bBound.
Floats are printed with 17 significant digits so files round-trip losslessly
and are byte-stable for a fixed scenario and seed.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from . import averaging, markers, oracle
from ._backend import backend_name
from .core import BlochVector, DimensionlessSet, RelativeUnitary
from .floquet import matrix_from_components, relative_components, single_unitary
from .presets import FIGURE_PRESETS
from .scenario import Scenario, ScenarioError, load_scenario

__all__ = ["main", "run_sweep", "run_validate", "CSV_COLUMNS"]

CSV_COLUMNS = (
    "route", "label", "tau", "gammaSq", "b",
    "gammaFast", "gammaSlow", "bFast", "bSlow",
    "gammaStderr", "bStderr", "gammaBound", "bBound",
)


def _fmt(x) -> str:
    if x is None:
        return ""
    return format(float(x), ".17g")


def _power(values: np.ndarray, n: int) -> np.ndarray:
    """values**n through logs; safe against underflow for large n."""
    out = np.zeros_like(values)
    pos = values > 0.0
    with np.errstate(divide="ignore"):
        out[pos] = np.exp(n * np.log(values[pos]))
    return out


def run_sweep(scn: Scenario) -> list[dict]:
    """All rows for one scenario, sorted by (route, label, tau)."""
    taus = np.linspace(scn.tau_start, scn.tau_stop, scn.points)
    e_beta = scn.e_beta
    rows: list[dict] = []

    for label, xi, phi in scn.curves():
        d0 = scn.dimensionless(xi, phi)
        for route in scn.routes:
            if route == "hfe":
                gamma_sq, b = markers.thermal_singles_grid(d0, taus, e_beta)
                aux = {}
            elif route == "exact":
                gamma_sq, b = oracle.exact_markers_grid(d0, taus, e_beta)
                aux = {}
            elif route == "closed-form":
                gf, gs, bf, bs = averaging.avg_singles_phi_grid(d0, taus, e_beta)
                gamma_sq = _power(gf + gs, scn.n_u)
                b = _power(bf + bs, scn.n_mac)
                aux = {"gammaFast": gf, "gammaSlow": gs, "bFast": bf, "bSlow": bs}
                if phi != 0.0:
                    g_bound, b_bound = averaging.small_phi_bounds(d0, scn.ensemble(), e_beta)
                    aux["gammaBound"] = np.full_like(taus, g_bound)
                    aux["bBound"] = np.full_like(taus, b_bound)
            elif route == "monte-carlo":
                gm, gstderr, bm, bstderr = averaging.monte_carlo_average_grid(
                    d0, taus, e_beta, scn.mc_samples, scn.seed
                )
                gamma_sq = _power(gm, scn.n_u)
                b = _power(bm, scn.n_mac)
                aux = {"gammaStderr": gstderr, "bStderr": bstderr}
            elif route == "gaussian":
                profile = markers.gaussian_exponent_factor(d0, taus)
                dxi_sq = (d0.xi_bar - d0.xi_bar_prime) ** 2 / 3.0
                gamma_sq = np.exp(-scn.n_u * dxi_sq * profile)
                b = np.exp(-scn.n_mac * e_beta ** 2 * dxi_sq * profile)
                aux = {}
            else:  # pragma: no cover - Scenario validates routes
                raise ScenarioError(f"unknown route {route!r}")
            for i, tau in enumerate(taus):
                row = {
                    "route": route, "label": label, "tau": float(tau),
                    "gammaSq": float(gamma_sq[i]), "b": float(b[i]),
                    "gammaFast": None, "gammaSlow": None, "bFast": None, "bSlow": None,
                    "gammaStderr": None, "bStderr": None,
                    "gammaBound": None, "bBound": None,
                }
                for key, arr in aux.items():
                    row[key] = float(arr[i])
                rows.append(row)

    rows.sort(key=lambda r: (r["route"], r["label"], r["tau"]))
    return rows


def write_csv(rows: list[dict], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                [row["route"], row["label"]]
                + [_fmt(row[c]) for c in CSV_COLUMNS[2:]]
            )


# --- validation ---------------------------------------------------------------

def _check_unitarity_consistency(rng) -> tuple[bool, str]:
    n = 1000
    xi = rng.uniform(-1, 1, n)
    xip = rng.uniform(-1, 1, n)
    dt = rng.uniform(0, 1, n)
    tau = rng.uniform(0, 40, n)
    phi = rng.uniform(-math.pi, math.pi, n)
    worst_norm = 0.0
    worst_cons = 0.0
    for i in range(n):
        u = relative_components(xi[i], xip[i], dt[i], tau[i], phi[i])
        worst_norm = max(worst_norm, abs(sum(c * c for c in u) - 1.0))
        d = DimensionlessSet(xi=float(xi[i]), xi_prime=float(xip[i]),
                             delta_tilde=float(dt[i]), tau=float(tau[i]), phi=float(phi[i]))
        prod = single_unitary(d, d.xi_prime).conj().T @ single_unitary(d)
        ref = matrix_from_components(*(float(c) for c in u))
        worst_cons = max(worst_cons, float(np.abs(prod - ref).max()))
    ok = worst_norm <= 1e-12 and worst_cons <= 1e-12
    return ok, f"max |u.u-1| = {worst_norm:.3e}, max |closed-form - product| = {worst_cons:.3e} (tol 1e-12)"


def _check_complementarity(rng) -> tuple[bool, str]:
    n = 2000
    worst = 0.0
    for _ in range(n):
        v = rng.normal(size=3)
        v *= rng.random() ** (1 / 3) / np.linalg.norm(v)
        a = BlochVector(*v)
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        u = RelativeUnitary(*q)
        worst = max(worst, abs(markers.complementarity_defect(a, u)))
    return worst <= 1e-12, f"max |B - |Gamma|^2 - (1-|a|^2)(1-u0^2)| = {worst:.3e} (tol 1e-12)"


def _check_oracle_vs_hfe(scn: Scenario) -> tuple[str, str]:
    label, xi, phi = scn.curves()[0]
    d = scn.dimensionless(xi, phi)
    if not d.hfe_valid:
        return "SKIP", (
            f"hfe_valid flag is false (xi={d.xi:.3g}, xi'={d.xi_prime:.3g}, "
            f"deltaTilde={d.delta_tilde:.3g} outside |xi|, deltaTilde < 1)"
        )
    taus = np.linspace(1e-9, 10 * math.pi, 200)

    def max_err(scale: float) -> float:
        ds = DimensionlessSet(
            xi=xi * scale, xi_prime=scn.xi_prime * scale,
            delta_tilde=scn.delta_tilde * scale, tau=0.0, phi=phi,
        )
        exact = oracle.exact_relative_grid(ds, taus)
        hfe = np.stack(relative_components(ds.xi, ds.xi_prime, ds.delta_tilde, taus, ds.phi), axis=1)
        return float(np.abs(exact - hfe).max())

    err_full = max_err(1.0)
    err_half = max_err(0.5)
    contraction = err_full / err_half if err_half > 0 else math.inf
    ok = err_half < err_full and contraction >= 2.0 and err_full < 1.0
    return ("PASS" if ok else "FAIL"), (
        f"max |exact - hfe| = {err_full:.3e}, halved parameters {err_half:.3e}, "
        f"contraction x{contraction:.2f} (need >= 2)"
    )


def _check_mc_vs_closed_form(scn: Scenario) -> tuple[bool, str]:
    label, xi, phi = scn.curves()[0]
    d0 = scn.dimensionless(xi, phi)
    taus = np.array([2.1, 7.0, 16.3])
    e_beta = scn.e_beta
    gf, gs, bf, bs = averaging.avg_singles_phi_grid(d0, taus, e_beta)
    gm, gstderr, bm, bstderr = averaging.monte_carlo_average_grid(
        d0, taus, e_beta, scn.mc_samples, scn.seed
    )
    g_err = np.abs(gm - (gf + gs))
    b_err = np.abs(bm - (bf + bs))
    g_tol = np.maximum(4.0 * gstderr, 2e-3)
    b_tol = np.maximum(4.0 * bstderr, 2e-3)
    ok = bool(np.all(g_err <= g_tol) and np.all(b_err <= b_tol))
    return ok, (
        f"max |closed-form - MC| gamma {g_err.max():.2e} (tol {g_tol.max():.2e}), "
        f"B {b_err.max():.2e} (tol {b_tol.max():.2e}), {scn.mc_samples} samples, seed {scn.seed}"
    )


def _check_extrema(scn: Scenario) -> tuple[bool, str]:
    label, xi, phi = scn.curves()[-1]
    d0 = scn.dimensionless(xi, phi)
    taus = np.linspace(0.0, math.pi, 40001)
    gf, _, bf, _ = averaging.avg_singles_phi_grid(d0, taus, scn.e_beta)
    g_max, b_max = averaging.fast_extrema(d0, scn.e_beta)
    err = max(abs(gf.max() - g_max), abs(bf.max() - b_max))
    return err <= 1e-6, f"numeric max vs closed form differ by {err:.2e} (tol 1e-6)"


def run_validate(scn: Scenario, stream=None) -> int:
    """Run all cross-route checks; returns the process exit code."""
    if stream is None:
        stream = sys.stdout
    rng = np.random.default_rng(scn.seed)
    results: list[tuple[str, str, str]] = []

    ok, detail = _check_unitarity_consistency(rng)
    results.append(("unitarity-and-consistency", "PASS" if ok else "FAIL", detail))
    ok, detail = _check_complementarity(rng)
    results.append(("complementarity-identity", "PASS" if ok else "FAIL", detail))
    status, detail = _check_oracle_vs_hfe(scn)
    results.append(("oracle-vs-hfe-convergence", status, detail))
    ok, detail = _check_mc_vs_closed_form(scn)
    results.append(("monte-carlo-vs-closed-form", "PASS" if ok else "FAIL", detail))
    ok, detail = _check_extrema(scn)
    results.append(("fast-part-extrema", "PASS" if ok else "FAIL", detail))

    print(f"validation (backend: {backend_name()}, seed: {scn.seed})", file=stream)
    for name, status, detail in results:
        print(f"  {status:4s} {name}: {detail}", file=stream)
    failed = [name for name, status, _ in results if status == "FAIL"]
    print(("all checks passed" if not failed else f"FAILED: {', '.join(failed)}"), file=stream)
    return 0 if not failed else 1


# --- entry point ---------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bosonspin",
        description="Objectivity markers of an oscillator recorded by a spin bath.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run a scenario sweep and write CSV")
    sweep.add_argument("scenario", help="scenario file (INI)")

    figure = sub.add_parser("figure", help="regenerate a named figure dataset")
    figure.add_argument("name", choices=sorted(FIGURE_PRESETS) + ["all"])

    lengths = sub.add_parser("lengths", help="print the characteristic length scales")
    lengths.add_argument("scenario", help="scenario file (INI)")

    validate = sub.add_parser("validate", help="run cross-route consistency checks")
    validate.add_argument("scenario", nargs="?", help="optional scenario file (INI)")

    for p in (sweep, figure, lengths, validate):
        p.add_argument("--out", help="output CSV path (or directory for 'figure all')")
        p.add_argument("--seed", type=int, help="override the scenario seed")
        p.add_argument("--routes", help="comma-separated route list override")
        p.add_argument("--points", type=int, help="override the grid point count")
    return parser


def _apply_overrides(scn: Scenario, args) -> Scenario:
    routes = None
    if args.routes:
        routes = tuple(r.strip() for r in args.routes.split(",") if r.strip())
    return scn.with_overrides(routes=routes, seed=args.seed, points=args.points, out=args.out)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            scn = _apply_overrides(load_scenario(args.scenario), args)
            out = scn.out or "sweep.csv"
            write_csv(run_sweep(scn), out)
            print(f"wrote {out}")
            return 0

        if args.command == "figure":
            names = sorted(FIGURE_PRESETS) if args.name == "all" else [args.name]
            for name in names:
                scn = _apply_overrides(FIGURE_PRESETS[name], args)
                if args.name == "all":
                    import os
                    directory = args.out or "."
                    os.makedirs(directory, exist_ok=True)
                    out = os.path.join(directory, f"{name}.csv")
                else:
                    out = args.out or f"{name}.csv"
                write_csv(run_sweep(scn), out)
                print(f"wrote {out}")
            return 0

        if args.command == "lengths":
            scn = _apply_overrides(load_scenario(args.scenario), args)
            scales = markers.length_scales(scn.ensemble(), scn.omega)
            print(f"lambda_dec  = {scales.lambda_dec:.12g}")
            print(f"lambda_dist = {scales.lambda_dist:.12g}")
            ratio = scales.lambda_dist / scales.lambda_dec
            print(f"ratio       = {ratio:.12g}")
            return 0

        if args.command == "validate":
            base = load_scenario(args.scenario) if args.scenario else Scenario(
                xis=(0.05,), xi_prime=0.01, delta_tilde=0.02, beta_delta=1.0,
                routes=("hfe",), mc_samples=200_000,
            )
            scn = _apply_overrides(base, args)
            return run_validate(scn)

        raise AssertionError(f"unhandled command {args.command!r}")
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
