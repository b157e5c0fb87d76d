"""Scenario files: flat INI key/value input for the command-line front end.

Keys are named after the working dimensionless symbols so a scenario can be
read against the plots it reproduces:

    [trajectory]
    xi = 0.9, 0.6        ; amplitude(s); cutoff amplitude for averaged routes
    xiPrime = 0.1
    phi = 0              ; radians; accepts pi expressions like pi/4 or 3pi/10
    [ensemble]
    deltaTilde = 1/6
    betaDelta = 1.0
    nU = 20
    nMac = 100
    gMax = 1.0           ; lab-frame coupling cutoff (lengths command)
    omega = 3.0          ; lab-frame oscillator frequency (lengths command)
    [grid]
    tauStart = 0.0
    tauStop = 25.0
    points = 1001
    [run]
    routes = hfe, closed-form
    seed = 20240601
    mcSamples = 200000

Lists are comma-separated; at most one of xi/phi may be a list (each list
entry becomes one labelled curve).
"""

from __future__ import annotations

import configparser
import math
import re
from dataclasses import dataclass, replace

from .core import DimensionlessSet, EnsembleSpec

__all__ = ["Scenario", "ScenarioError", "load_scenario", "parse_number", "ROUTES"]

ROUTES = ("exact", "hfe", "closed-form", "monte-carlo", "gaussian")

_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?$")


class ScenarioError(ValueError):
    """Invalid scenario input; the message names the offending field."""


def parse_number(text: str) -> float:
    """Parse a scenario number: plain float, fraction a/b, or a pi expression."""
    s = text.strip().lower()
    m = _PI_RE.match(s)
    if m:
        coef = m.group(1)
        num = float(coef) if coef not in ("", "+", "-") else (-1.0 if coef == "-" else 1.0)
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * math.pi / den
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        return float(num_s) / float(den_s)
    return float(s)


def _parse_list(text: str) -> tuple[float, ...]:
    return tuple(parse_number(part) for part in text.split(",") if part.strip())


@dataclass(frozen=True)
class Scenario:
    """One sweep: trajectory amplitudes/phases, the spin ensemble, grid and routes."""

    xis: tuple[float, ...] = (0.9,)
    xi_prime: float = 0.1
    phis: tuple[float, ...] = (0.0,)
    delta_tilde: float = 1.0 / 6.0
    beta_delta: float = 1.0
    n_u: int = 20
    n_mac: int = 100
    g_max: float = 1.0
    omega: float = 1.0
    tau_start: float = 0.0
    tau_stop: float = 25.0
    points: int = 1001
    routes: tuple[str, ...] = ("hfe",)
    seed: int = 20240601
    mc_samples: int = 200_000
    out: str | None = None

    def __post_init__(self):
        if not self.routes:
            raise ScenarioError("run.routes must select at least one route")
        for route in self.routes:
            if route not in ROUTES:
                raise ScenarioError(f"run.routes contains unknown route {route!r}; choose from {ROUTES}")
        if not self.xis:
            raise ScenarioError("trajectory.xi must list at least one amplitude")
        if len(self.xis) > 1 and len(self.phis) > 1:
            raise ScenarioError("only one of trajectory.xi and trajectory.phi may be a list")
        if self.points < 2:
            raise ScenarioError("grid.points must be at least 2")
        if not self.tau_stop > self.tau_start:
            raise ScenarioError("grid.tauStop must exceed grid.tauStart")
        if self.tau_start < 0.0:
            raise ScenarioError("grid.tauStart must be non-negative")
        if self.n_u < 1 or self.n_mac < 1:
            raise ScenarioError("ensemble.nU and ensemble.nMac must be positive")
        if self.g_max <= 0.0:
            raise ScenarioError("ensemble.gMax must be positive")
        if self.omega <= 0.0:
            raise ScenarioError("ensemble.omega must be positive")
        if self.mc_samples < 1:
            raise ScenarioError("run.mcSamples must be positive")
        if self.beta_delta < 0.0:
            raise ScenarioError("ensemble.betaDelta must be non-negative")
        if self.delta_tilde < 0.0:
            raise ScenarioError("ensemble.deltaTilde must be non-negative")

    @property
    def e_beta(self) -> float:
        return math.tanh(0.5 * self.beta_delta)

    def curves(self) -> list[tuple[str, float, float]]:
        """(label, xi, phi) triples, one per output curve."""
        if len(self.phis) > 1:
            return [(f"phi={_fmt(phi)}", self.xis[0], phi) for phi in self.phis]
        if len(self.xis) > 1:
            return [(f"xi={_fmt(xi)}", xi, self.phis[0]) for xi in self.xis]
        return [("", self.xis[0], self.phis[0])]

    def dimensionless(self, xi: float, phi: float, tau: float = 0.0) -> DimensionlessSet:
        return DimensionlessSet(
            xi=xi, xi_prime=self.xi_prime, delta_tilde=self.delta_tilde,
            tau=tau, phi=phi, xi_bar=xi, xi_bar_prime=self.xi_prime,
        )

    def ensemble(self) -> EnsembleSpec:
        # only the product beta*Delta matters for the markers; split it trivially
        return EnsembleSpec(
            n_u=self.n_u, n_mac=self.n_mac, g_max=self.g_max,
            delta=self.beta_delta, beta=1.0,
        )

    def with_overrides(self, routes=None, seed=None, points=None, out=None) -> "Scenario":
        updates = {}
        if routes is not None:
            updates["routes"] = tuple(routes)
        if seed is not None:
            updates["seed"] = seed
        if points is not None:
            updates["points"] = points
        if out is not None:
            updates["out"] = out
        return replace(self, **updates) if updates else self


def _fmt(value: float) -> str:
    return f"{value:.6g}"


_FIELDS = {
    ("trajectory", "xi"): ("xis", _parse_list),
    ("trajectory", "xiprime"): ("xi_prime", parse_number),
    ("trajectory", "phi"): ("phis", _parse_list),
    ("ensemble", "deltatilde"): ("delta_tilde", parse_number),
    ("ensemble", "betadelta"): ("beta_delta", parse_number),
    ("ensemble", "nu"): ("n_u", int),
    ("ensemble", "nmac"): ("n_mac", int),
    ("ensemble", "gmax"): ("g_max", parse_number),
    ("ensemble", "omega"): ("omega", parse_number),
    ("grid", "taustart"): ("tau_start", parse_number),
    ("grid", "taustop"): ("tau_stop", parse_number),
    ("grid", "points"): ("points", int),
    ("run", "routes"): ("routes", lambda s: tuple(r.strip() for r in s.split(",") if r.strip())),
    ("run", "seed"): ("seed", int),
    ("run", "mcsamples"): ("mc_samples", int),
    ("run", "out"): ("out", str),
}


def load_scenario(path: str) -> Scenario:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    read = parser.read(path)
    if not read:
        raise ScenarioError(f"cannot read scenario file {path!r}")
    values = {}
    for section in parser.sections():
        for key, raw in parser.items(section):
            field_spec = _FIELDS.get((section.lower(), key.lower()))
            if field_spec is None:
                raise ScenarioError(f"unknown scenario key [{section}] {key}")
            name, convert = field_spec
            try:
                values[name] = convert(raw)
            except ScenarioError:
                raise
            except ValueError as exc:
                raise ScenarioError(f"bad value for [{section}] {key}: {raw!r} ({exc})") from exc
    try:
        return Scenario(**values)
    except ScenarioError:
        raise
    except (TypeError, ValueError) as exc:
        raise ScenarioError(str(exc)) from exc
