"""End-to-end analysis of one object: catalog entry, equation or representation."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from . import catalog
from .errors import (
    AmbiguousMatch,
    InvalidInput,
    MahlerLabError,
    NotNonnegative,
)
from .exact import QuadraticNumber
from .independence import AnalyzedFunction, MultiplicativeSet, decide_independence
from .mahler import (
    AsymptoticFit,
    CharPolyReport,
    MahlerEquation,
    characteristic_polynomial,
    radial_fit,
    select_eigenvalue,
)
from .regular import GrowthReport, LinearRepresentation, growth_constants

PRECISION_ENV = "MAHLER_LAB_PRECISION"


@dataclass(frozen=True)
class RunConfig:
    precision: int = 60
    depth: int = 40
    z0: Fraction = Fraction(1, 2)
    r_max: int = 16
    H: int = 50
    out: Optional[str] = None
    seed: int = 20240229

    @classmethod
    def default_precision(cls) -> int:
        raw = os.environ.get(PRECISION_ENV)
        if raw is None:
            return cls.precision
        try:
            value = int(raw)
        except ValueError as exc:
            raise InvalidInput(f"{PRECISION_ENV}={raw!r} is not an integer") from exc
        if value < 15:
            raise InvalidInput(f"{PRECISION_ENV} must be at least 15")
        return value

    def to_json(self) -> dict:
        d = asdict(self)
        d["z0"] = str(self.z0)
        return d

    def header_lines(self) -> list[str]:
        # the output location is left out so artifacts do not depend on it
        return [f"{k}={v}" for k, v in self.to_json().items() if k != "out"]


@dataclass
class Analysis:
    name: str
    k: int
    equation: Optional[MahlerEquation] = None
    representation: Optional[LinearRepresentation] = None
    charpoly: Optional[CharPolyReport] = None
    fit: Optional[AsymptoticFit] = None
    growth: Optional[GrowthReport] = None
    radial_stride: int = 1
    errors: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    consistency: Optional[dict] = None
    flags: list[str] = field(default_factory=list)

    @property
    def eigenvalue(self):
        if self.charpoly is not None and self.charpoly.eigenvalue_status == "exists":
            return self.charpoly.eigenvalue
        return None

    def to_function(self) -> AnalyzedFunction:
        alpha = self.growth.alpha if self.growth is not None else None
        return AnalyzedFunction(self.name, self.k, self.eigenvalue, alpha)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "k": self.k,
            "mahler_equation": None if self.equation is None else self.equation.to_json(),
            "mahler_equation_pretty": None if self.equation is None else self.equation.pretty(),
            "representation": None if self.representation is None else self.representation.to_json(),
            "characteristic_polynomial": None if self.charpoly is None else self.charpoly.to_json(),
            "radial_fit": None if self.fit is None else self.fit.to_json(),
            "growth": None if self.growth is None else self.growth.to_json(),
            "consistency": self.consistency,
            "flags": list(self.flags),
            "notes": list(self.notes),
            "errors": list(self.errors),
        }


def load_target(target: str, k: Optional[int] = None):
    """A catalog entry, or an equation / representation read from a JSON file."""
    if os.path.isfile(target):
        try:
            with open(target, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot read {target}: {exc}") from exc
        if not isinstance(data, dict):
            raise InvalidInput(f"{target}: expected a JSON object")
        if "matrices" in data:
            return LinearRepresentation.from_json(data, name=target)
        if "coeffs" in data:
            return MahlerEquation.from_json(data, name=target)
        raise InvalidInput(f"{target}: neither a Mahler equation nor a linear representation")
    return catalog.get(target, k)


def _record(analysis: Analysis, stage: str, exc: Exception) -> None:
    analysis.errors.append({"stage": stage, "error": type(exc).__name__, "message": str(exc)})


def analyze(target, config: RunConfig = RunConfig(), k: Optional[int] = None) -> Analysis:
    """Characteristic polynomial, radial fit, eigenvalue selection, growth
    constants and their cross-check. Stage failures are recorded, not raised."""
    obj = load_target(target, k) if isinstance(target, str) else target
    if isinstance(obj, catalog.CatalogEntry):
        a = Analysis(obj.name, obj.k, obj.mahler_equation, obj.representation,
                     radial_stride=obj.radial_stride)
        a.notes.extend(obj.notes)
    elif isinstance(obj, MahlerEquation):
        a = Analysis(obj.name or "equation", obj.k, equation=obj)
    elif isinstance(obj, LinearRepresentation):
        a = Analysis(obj.name or "representation", obj.k, representation=obj)
    else:
        raise InvalidInput(f"cannot analyze {type(obj).__name__}")

    if a.equation is not None:
        _analyze_equation(a, config)
    if a.representation is not None:
        try:
            a.growth = growth_constants(a.representation, config.r_max)
        except NotNonnegative as exc:
            a.notes.append(f"growth constants not applicable: {exc}")
        except MahlerLabError as exc:
            _record(a, "growth_constants", exc)
    _cross_check(a)
    return a


def _analyze_equation(a: Analysis, config: RunConfig) -> None:
    eq = a.equation
    try:
        a.charpoly = characteristic_polynomial(eq)
    except MahlerLabError as exc:
        _record(a, "characteristic_polynomial", exc)
        return
    if a.charpoly.eigenvalue_status == "degenerate-zero":
        a.notes.append("0 is the only root of the characteristic polynomial; radial fit skipped")
        return
    try:
        a.fit = radial_fit(eq, 0, 0, config.z0, config.depth, config.precision, stride=a.radial_stride)
    except MahlerLabError as exc:
        _record(a, "radial_fit", exc)
        return
    if a.charpoly.eigenvalue_status == "pending":
        try:
            a.charpoly = select_eigenvalue(a.charpoly, a.fit)
        except AmbiguousMatch as exc:
            a.charpoly = CharPolyReport(
                a.charpoly.k, a.charpoly.d, a.charpoly.p, a.charpoly.distinct_roots, a.charpoly.roots,
                None, "ambiguous", a.charpoly.degenerate_zero, a.charpoly.notes + (str(exc),),
            )
        except MahlerLabError as exc:
            _record(a, "select_eigenvalue", exc)


def _cross_check(a: Analysis) -> None:
    lam, alpha = a.eigenvalue, (a.growth.alpha if a.growth else None)
    if lam is not None and float(lam) > 0:
        if isinstance(lam, QuadraticNumber) and lam.is_rational:
            try:
                ind = decide_independence(MultiplicativeSet.of(a.k, [lam]))
                if ind.status == "dependent":
                    a.flags.append("eigenvalue multiplicatively dependent with k")
            except MahlerLabError as exc:
                _record(a, "independence", exc)
    if lam is None or alpha is None:
        return
    if isinstance(lam, QuadraticNumber) and isinstance(alpha, QuadraticNumber):
        same = lam == alpha
        a.consistency = {"eigenvalue": str(lam), "alpha": str(alpha), "match": "exact" if same else "mismatch"}
    else:
        diff = abs(float(lam) - float(alpha))
        a.consistency = {"eigenvalue": float(lam), "alpha": float(alpha),
                         "match": "numeric" if diff <= 1e-9 else "mismatch", "difference": diff}
    if a.consistency["match"] == "mismatch":
        a.flags.append("eigenvalue and growth constant disagree")


def render_text(a: Analysis, config: RunConfig) -> str:
    lines = [f"== {a.name} (k={a.k}) =="]
    lines.append("config: " + ", ".join(config.header_lines()))
    if a.equation is not None:
        lines.append(f"equation: {a.equation.pretty()}")
    if a.charpoly is not None:
        cp = a.charpoly
        lines.append(f"characteristic polynomial: {cp.p.pretty('x')}")
        roots = ", ".join(f"{float(r):.12g}" + (f" (x{r.multiplicity})" if r.multiplicity > 1 else "")
                          for r in cp.roots) if cp.roots is not None else "-"
        lines.append(f"real roots: {roots}" + (f"; {cp.roots.complex_count} non-real" if cp.roots and cp.roots.complex_count else ""))
        lines.append(f"eigenvalue status: {cp.eigenvalue_status}")
        if cp.eigenvalue is not None:
            lines.append(f"eigenvalue: {cp.eigenvalue} ~ {float(cp.eigenvalue):.15g}")
        if cp.degenerate_zero:
            lines.append("note: 0 is a root of the characteristic polynomial")
    if a.fit is not None:
        f = a.fit
        lines.append(f"radial fit: gamma = {f.gamma:.12g}, k^gamma = {f.lambda_estimate:.12g}, "
                     f"residual = {f.residual:.3g}, C_last = {f.samples[-1].C:.12g}")
    if a.growth is not None:
        g = a.growth
        lines.append(f"growth: alpha = {g.alpha} ~ {float(g.alpha):.15g}, m = {g.m}, exponent = {g.exponent:.12g}")
        lines.append(f"sigma recurrence: {g.sigma_recurrence.charpoly.pretty('x')}")
    if a.consistency is not None:
        lines.append(f"eigenvalue vs alpha: {a.consistency['match']}")
    for flag in a.flags:
        lines.append(f"FLAG: {flag}")
    for note in a.notes:
        lines.append(f"note: {note}")
    for err in a.errors:
        lines.append(f"ERROR in {err['stage']}: {err['error']}: {err['message']}")
    return "\n".join(lines)
