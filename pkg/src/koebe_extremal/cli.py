"""``koebe-extremal``: coefficient tables, verification runs, conjecture scans and figures."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import extremal as ex
from .analysis.boundary import boundary_curve
from .analysis.conjectures import CONJECTURE_IDS, quarter_turn, scan
from .analysis.suite import run_suite
from .analysis.zeros import max_re_on_zero_set, min_re_on_zero_set, re_on_zero_set, trig_poly_min
from .spectral import ResourceLimitError, generalized_eigs

log = logging.getLogger("koebe_extremal")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_IO = 0, 1, 2, 3, 4

COMMANDS = ("coeffs", "value", "eigen", "verify", "scan-conjecture", "boundary")
FAMILIES = (
    "koebe",
    "alternating",
    "fejer-cosine",
    "fejer-classical",
    "suffridge",
    "suffridge-q",
    "koebe-q",
    "odd",
    "koebe-eigen",
)
FORMATS = ("json", "csv", "svg")
MIN_SAMPLES = 64
_DEFAULT_FORMAT = {"coeffs": "csv", "boundary": "csv"}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_min: int = 1
    n_max: int = 1
    q: int | None = None
    family: str = "koebe"
    family2: str | None = None
    samples: int = 8192
    tol: float | None = None
    format: str = "json"
    out: str | None = None
    jobs: int = 1
    timing: bool = False
    conjecture: int | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.n_min < 1:
            raise UsageError(f"N must be >= 1, got {self.n_min}")
        if self.n_max < self.n_min:
            raise UsageError(f"n-min {self.n_min} exceeds n-max {self.n_max}")
        if self.samples < MIN_SAMPLES:
            raise UsageError(f"samples must be >= {MIN_SAMPLES}, got {self.samples}")
        if self.tol is not None and not self.tol > 0:
            raise UsageError(f"tol must be positive, got {self.tol}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise UsageError(f"jobs must be >= 1, got {self.jobs}")
        for fam in (self.family, self.family2):
            if fam is not None and fam not in FAMILIES:
                raise UsageError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
        return self


def _fmt(x: float) -> str:
    return "%.17g" % x


def make_family(family: str, n: int, q: int | None = None) -> ex.UnitPolynomial:
    """Construct a family member, mapping precondition failures to UsageError."""
    if n < 1:
        raise UsageError(f"N must be >= 1, got {n}")
    if family in ("suffridge-q", "koebe-q"):
        if q is None:
            raise UsageError(f"--q is required for {family}")
        if not 1 <= q <= n:
            raise UsageError(f"q must lie in 1..{n}, got {q}")
        make = ex.suffridge_q_coeffs if family == "suffridge-q" else ex.koebe_q_coeffs
        return make(n, q)
    if q is not None and q != 1:
        raise UsageError(f"--q applies only to suffridge-q and koebe-q, not {family}")
    makers = {
        "koebe": ex.koebe_coeffs,
        "alternating": ex.alternating_coeffs,
        "fejer-cosine": ex.fejer_cosine_coeffs,
        "fejer-classical": ex.fejer_classical_coeffs,
        "suffridge": ex.suffridge_coeffs,
        "odd": ex.odd_coeffs,
        "koebe-eigen": ex.eigen_pipeline_coeffs,
    }
    if family not in makers:
        raise UsageError(f"unknown family {family!r}")
    return makers[family](n)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


# --- commands -------------------------------------------------------------


def cmd_coeffs(cfg: RunConfig) -> tuple[str, int]:
    p = make_family(cfg.family, cfg.n_min, cfg.q)
    if cfg.format == "csv":
        rows = [(j, _fmt(a), p.family, p.normalization) for j, a in enumerate(p.coeffs, 1)]
        return _csv(("j", "a_j", "family", "normalization"), rows), EXIT_OK
    if cfg.format == "json":
        doc = {
            "family": p.family,
            "normalization": p.normalization,
            "n": cfg.n_min,
            "q": cfg.q,
            "coeffs": p.coeffs.tolist(),
        }
        return _json(doc), EXIT_OK
    raise UsageError("coeffs supports json and csv")


def _value_row(family: str, n: int, q: int | None, samples: int) -> dict:
    p = make_family(family, n, q)
    grid = max(samples // 2, MIN_SAMPLES)
    row = {"family": p.family, "n": n, "q": q}
    if family in ("koebe", "koebe-eigen", "koebe-q", "suffridge-q"):
        row["objective"] = "min-re-on-zero-set"
        row["computed"] = min_re_on_zero_set(p, grid)
        row["reference"] = ex.koebe_value(n) if family in ("koebe", "koebe-eigen") else None
    elif family == "alternating":
        row["objective"] = "max-re-on-zero-set"
        row["computed"] = max_re_on_zero_set(p, grid)
        row["reference"] = ex.alternating_value(n)
    elif family == "suffridge":
        row["objective"] = "min-re-on-zero-set"
        row["computed"] = min_re_on_zero_set(p, grid)
        row["reference"] = ex.suffridge_value(n)
    elif family == "fejer-cosine":
        row["objective"] = "trig-poly-min"
        row["computed"] = trig_poly_min(p, grid)
        row["reference"] = ex.fejer_cosine_value(n)
    elif family == "fejer-classical":
        row["objective"] = "trig-poly-min"
        row["computed"] = trig_poly_min(p, grid)
        row["reference"] = ex.fejer_classical_value(n)
    else:
        # the odd optimum is read off the imaginary axis: |S| where C = 0
        _, s_vals = re_on_zero_set(quarter_turn(p.coeffs), grid, include_tangential=True)
        row["objective"] = "min-abs-im-where-re-zero"
        row["computed"] = float(np.min(np.abs(s_vals)))
        row["reference"] = ex.odd_reference_value(n)
    ref = row["reference"]
    row["residual"] = None if ref is None else row["computed"] - ref
    return row


def cmd_value(cfg: RunConfig) -> tuple[str, int]:
    rows = [_value_row(cfg.family, n, cfg.q, cfg.samples) for n in range(cfg.n_min, cfg.n_max + 1)]
    if cfg.format == "csv":
        keys = ("family", "n", "q", "objective", "computed", "reference", "residual")
        body = [
            tuple(_fmt(r[k]) if isinstance(r[k], float) else ("" if r[k] is None else r[k]) for k in keys)
            for r in rows
        ]
        return _csv(keys, body), EXIT_OK
    return _json({"rows": rows}), EXIT_OK


def cmd_eigen(cfg: RunConfig) -> tuple[str, int]:
    docs = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        system = generalized_eigs(n)
        docs.append(
            {
                "n": n,
                "eigenvalues": system.eigenvalues.tolist(),
                "reference": system.reference_eigenvalues().tolist(),
                "mu_roots": system.mu_roots.tolist(),
                "nu_roots": system.nu_roots.tolist(),
                "lambda_min": system.lambda_min,
                "interlacing": system.interlacing_ok(),
            }
        )
    if cfg.format == "csv":
        rows = [
            (d["n"], k + 1, _fmt(v), _fmt(r))
            for d in docs
            for k, (v, r) in enumerate(zip(d["eigenvalues"], d["reference"]))
        ]
        return _csv(("n", "k", "eigenvalue", "reference"), rows), EXIT_OK
    return _json({"systems": docs}), EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    report = run_suite(cfg.n_min, cfg.n_max, tol=cfg.tol, jobs=cfg.jobs)
    for e in report.failures:
        log.error("FAIL %s N=%d computed=%r reference=%r residual=%r", e.check, e.n, e.computed, e.reference, e.residual)
    if report.failures:
        sys.stderr.write(
            "".join(f"FAIL {e.check} N={e.n} residual={e.residual!r}\n" for e in report.failures)
        )
    return report.to_json(timing=cfg.timing), EXIT_OK if report.passed else EXIT_FAIL


def cmd_scan_conjecture(cfg: RunConfig) -> tuple[str, int]:
    if cfg.conjecture not in CONJECTURE_IDS:
        raise UsageError(f"unknown conjecture id {cfg.conjecture}; expected one of {CONJECTURE_IDS}")
    if cfg.samples < 512:
        raise UsageError(f"scans need samples >= 512, got {cfg.samples}")
    result = scan(cfg.conjecture, cfg.n_min, cfg.n_max, cfg.samples, cfg.jobs)
    code = EXIT_COUNTEREXAMPLE if result.counterexample else EXIT_OK
    if cfg.format == "csv":
        keys = [k for k in result.rows[0] if k != "witness"]
        body = [
            tuple(_fmt(r[k]) if isinstance(r[k], float) else r[k] for k in keys) for r in result.rows
        ]
        text = _csv(keys, body)
        if result.counterexample:
            sys.stderr.write("counterexample witness: " + json.dumps(result.witness) + "\n")
        return text, code
    doc = {"conjecture": result.conjecture, "counterexample": result.witness, "rows": list(result.rows)}
    return _json(doc), code


def _svg_path(z: np.ndarray, to_px) -> str:
    pts = [to_px(v) for v in z]
    head = "M %.6f %.6f" % pts[0]
    return head + " " + " ".join("L %.6f %.6f" % p for p in pts[1:]) + " Z"


def render_svg(curves: list[tuple[str, np.ndarray, str]], size: float = 600.0) -> str:
    """Self-contained SVG of closed curves, axis-equal, with the unit circle for reference."""
    circle = np.exp(1j * np.linspace(0, 2 * np.pi, 257)[:-1])
    allpts = np.concatenate([c for _, c, _ in curves] + [circle])
    x0, x1 = float(allpts.real.min()), float(allpts.real.max())
    y0, y1 = float(allpts.imag.min()), float(allpts.imag.max())
    span = max(x1 - x0, y1 - y0)
    mx, my = 0.05 * (x1 - x0) + 1e-12, 0.05 * (y1 - y0) + 1e-12
    scale = size / (span * 1.1)
    vw, vh = (x1 - x0 + 2 * mx) * scale, (y1 - y0 + 2 * my) * scale

    def to_px(v):
        return ((v.real - x0 + mx) * scale, (y1 + my - v.imag) * scale)

    ox, oy = to_px(0j)
    stroke = 1.5
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {vw:.6f} {vh:.6f}" '
        f'width="{vw:.2f}" height="{vh:.2f}">',
        f'<rect x="0" y="0" width="{vw:.6f}" height="{vh:.6f}" fill="#ffffff"/>',
        f'<line x1="0" y1="{oy:.6f}" x2="{vw:.6f}" y2="{oy:.6f}" stroke="#bbbbbb" stroke-width="0.75"/>',
        f'<line x1="{ox:.6f}" y1="0" x2="{ox:.6f}" y2="{vh:.6f}" stroke="#bbbbbb" stroke-width="0.75"/>',
        f'<path d="{_svg_path(circle, to_px)}" fill="none" stroke="#888888" stroke-width="1" '
        'stroke-dasharray="4 3"><title>unit circle |z| = 1</title></path>',
    ]
    for label, z, color in curves:
        parts.append(
            f'<path d="{_svg_path(z, to_px)}" fill="none" stroke="{color}" stroke-width="{stroke}">'
            f"<title>{label}</title></path>"
        )
    legend_y = 16.0
    for label, _, color in curves:
        parts.append(
            f'<text x="8" y="{legend_y:.1f}" font-family="sans-serif" font-size="12" fill="{color}">{label}</text>'
        )
        legend_y += 15.0
    parts.append(
        f'<text x="8" y="{legend_y:.1f}" font-family="sans-serif" font-size="12" fill="#888888">'
        "dashed: unit circle</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_boundary(cfg: RunConfig) -> tuple[str, int]:
    p = make_family(cfg.family, cfg.n_min, cfg.q)
    curve = boundary_curve(p, cfg.samples)
    second = None
    if cfg.family2 is not None:
        q2 = cfg.q if cfg.family2 in ("suffridge-q", "koebe-q") else None
        second = boundary_curve(make_family(cfg.family2, cfg.n_min, q2), cfg.samples)
    if cfg.format == "svg":
        curves = [(f"{p.family} N={cfg.n_min}", curve.points, "#1f4fd1")]
        if second is not None:
            curves.append((f"{cfg.family2} N={cfg.n_min}", second.points, "#d11f1f"))
        return render_svg(curves), EXIT_OK
    if cfg.format == "csv":
        header = ["t", "re", "im"]
        cols = [curve.t, curve.c, curve.s]
        if second is not None:
            header += ["re2", "im2"]
            cols += [second.c, second.s]
        rows = [tuple(_fmt(v) for v in r) for r in zip(*cols)]
        return _csv(header, rows), EXIT_OK
    doc = {"family": p.family, "n": cfg.n_min, "t": curve.t.tolist(), "re": curve.c.tolist(), "im": curve.s.tolist()}
    if second is not None:
        doc["re2"], doc["im2"] = second.c.tolist(), second.s.tolist()
    return _json(doc), EXIT_OK


HANDLERS = {
    "coeffs": cmd_coeffs,
    "value": cmd_value,
    "eigen": cmd_eigen,
    "verify": cmd_verify,
    "scan-conjecture": cmd_scan_conjecture,
    "boundary": cmd_boundary,
}


# --- argument parsing -----------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="koebe-extremal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, n_range=False, family=True):
        if family:
            sp.add_argument("--family", default="koebe", help="family tag")
            sp.add_argument("--q", type=int, default=None, help="q for suffridge-q and koebe-q")
        if n_range:
            sp.add_argument("--n-min", type=int, default=None)
            sp.add_argument("--n-max", type=int, default=None)
        sp.add_argument("--n", type=int, default=None, help="single order N")
        sp.add_argument("--samples", type=int, default=8192)
        sp.add_argument("--format", choices=FORMATS, default=None)
        sp.add_argument("--out", default=None, help="output path (default: standard output)")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--tol", type=float, default=None)

    common(sub.add_parser("coeffs", help="coefficient table of a family member"))
    common(sub.add_parser("value", help="computed objective against its reference value"), n_range=True)
    common(sub.add_parser("eigen", help="generalized spectrum of the pencil"), n_range=True, family=False)
    verify = sub.add_parser("verify", help="run the verification suite")
    common(verify, n_range=True, family=False)
    verify.add_argument("--timing", action="store_true", help="include per-entry wall time")
    sc = sub.add_parser("scan-conjecture", help="evidence scan for a conjecture")
    common(sc, n_range=True, family=False)
    sc.add_argument("--id", type=int, required=True, dest="conjecture")
    bd = sub.add_parser("boundary", help="boundary curve as CSV, JSON or SVG")
    common(bd)
    bd.add_argument("--family2", default=None, help="second family to overlay")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    n = getattr(ns, "n", None)
    n_min = getattr(ns, "n_min", None)
    n_max = getattr(ns, "n_max", None)
    if n is not None:
        if n_min is not None or n_max is not None:
            raise UsageError("--n cannot be combined with --n-min/--n-max")
        n_min = n_max = n
    if ns.command in ("coeffs", "boundary") and n_min is None:
        raise UsageError("--n is required")
    if n_min is None:
        n_min = 1
    if n_max is None:
        n_max = n_min
    fmt = ns.format or _DEFAULT_FORMAT.get(ns.command, "json")
    if fmt == "svg" and ns.command != "boundary":
        raise UsageError("svg output is available for boundary only")
    return RunConfig(
        command=ns.command,
        n_min=n_min,
        n_max=n_max,
        q=getattr(ns, "q", None),
        family=getattr(ns, "family", "koebe"),
        family2=getattr(ns, "family2", None),
        samples=ns.samples,
        tol=ns.tol,
        format=fmt,
        out=ns.out,
        jobs=ns.jobs,
        timing=getattr(ns, "timing", False),
        conjecture=getattr(ns, "conjecture", None),
    ).validate()


def _setup_logging():
    level = os.environ.get("KOEBE_LOG", "error").lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=levels.get(level, logging.ERROR), format="%(levelname)s %(name)s: %(message)s")
    if level not in levels:
        log.warning("KOEBE_LOG=%r not recognised; using error", level)


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None) -> int:
    _setup_logging()
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = config_from_args(ns)
        log.info("running %s for N=%d..%d", cfg.command, cfg.n_min, cfg.n_max)
        text, code = HANDLERS[cfg.command](cfg)
    except (UsageError, ResourceLimitError) as exc:
        sys.stderr.write(f"koebe-extremal: error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"koebe-extremal: error: {exc}\n")
        return EXIT_USAGE
    try:
        _write(text, cfg.out)
    except OSError as exc:
        sys.stderr.write(f"koebe-extremal: cannot write output: {exc}\n")
        return EXIT_IO
    return code


if __name__ == "__main__":
    raise SystemExit(main())
