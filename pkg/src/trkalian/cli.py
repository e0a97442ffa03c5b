"""Command-line entry point: field evaluation, transforms, verification and
plot-script emission.

Outputs are deterministic: fixed summation order, 17-significant-digit CSV
floats, and atomic writes (temp file + rename).
"""

from __future__ import annotations

import json
import os
import tempfile
import warnings
from pathlib import Path

import click
import numpy as np

from . import fields, radon, verify
from .core import PlaneQuadrature, sphere_quadrature

FLOAT_FMT = "%.17g"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp_", text=True)
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_params(text: str) -> dict:
    try:
        params = json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"malformed JSON parameters: {exc}") from exc
    if not isinstance(params, dict):
        raise click.UsageError("parameters must be a JSON object")
    return params


def _parse_grid(spec: str):
    axes = []
    for part in spec.split(","):
        pieces = part.split(":")
        if len(pieces) != 3:
            raise click.UsageError("grid spec must be 'x0:x1:n,y0:y1:n,z0:z1:n'")
        lo, hi, n = float(pieces[0]), float(pieces[1]), int(pieces[2])
        if n < 1:
            raise click.UsageError("grid resolutions must be positive")
        axes.append(np.linspace(lo, hi, n))
    if len(axes) != 3:
        raise click.UsageError("grid spec needs three axes")
    return axes


def _parse_quad(spec: str):
    pieces = spec.split(",")
    if len(pieces) != 2:
        raise click.UsageError("quad spec must be 'npolar,nazimuth'")
    return int(pieces[0]), int(pieces[1])


def build_field(name: str, params: dict):
    """Field catalog addressable by name plus JSON parameters."""
    if name == "lundquist":
        return fields.lundquist(float(params.get("f0", 1.0)), float(params.get("nu", 1.0)))
    if name == "gaussian":
        return fields.gaussian_test_field(
            params.get("center", (0.0, 0.0, 0.0)),
            float(params.get("width", 1.0)),
            params.get("polarization", (1.0, 0.0, 0.0)),
        )
    if name == "abc":
        return fields.abc_field(
            float(params.get("a", 1.0)), float(params.get("b", 1.0)),
            float(params.get("c", 1.0)), float(params.get("nu", 1.0)))
    if name == "ck_circular":
        return fields.ck_circular(fields.CKCircularParams(
            m=int(params.get("m", 0)), k=float(params.get("k", 0.0)),
            nu=float(params.get("nu", 1.0)),
            amplitude=float(params.get("amplitude", 1.0))))
    if name == "modes":
        g = float(params.get("g", 1.0))
        modes = []
        for rec in params["modes"]:
            amp = complex(rec.get("amplitude_re", 1.0), rec.get("amplitude_im", 0.0))
            modes.append(fields.HelicityMode(
                lam=int(rec["lam"]), nu=float(rec["nu"]), kappa0=np.asarray(rec["kappa0"]),
                amplitude=amp, mu=int(rec.get("mu", 1)), g=g))
        return fields.mode_sampled_field(fields.ModeField(modes=tuple(modes)))
    raise click.ClickException(f"unknown field name {name!r}")


def _mode_field_from_params(params: dict) -> fields.ModeField:
    g = float(params.get("g", 1.0))
    modes = []
    for rec in params["modes"]:
        amp = complex(rec.get("amplitude_re", 1.0), rec.get("amplitude_im", 0.0))
        modes.append(fields.HelicityMode(
            lam=int(rec["lam"]), nu=float(rec["nu"]), kappa0=np.asarray(rec["kappa0"]),
            amplitude=amp, mu=int(rec.get("mu", 1)), g=g))
    return fields.ModeField(modes=tuple(modes))


@click.group()
def main() -> None:
    """Constant-curl field toolkit: catalog fields, transforms, verification."""


@main.command("field-eval")
@click.option("--field", "field_name", required=True, help="catalog field name")
@click.option("--params", default="{}", help="JSON parameter object")
@click.option("--grid", "grid_spec", default="-1:1:11,-1:1:11,-1:1:11",
              help="grid spec x0:x1:n,y0:y1:n,z0:z1:n")
@click.option("--out", "out_dir", required=True, type=click.Path(path_type=Path))
def cmd_field_eval(field_name, params, grid_spec, out_dir) -> None:
    """Evaluate a catalog field on a grid; writes CSV plus a metadata sidecar."""
    parsed = _parse_params(params)
    f = build_field(field_name, parsed)
    xs, ys, zs = _parse_grid(grid_spec)
    xx, yy, zz = np.meshgrid(xs, ys, zs, indexing="ij")
    pts = np.stack([xx, yy, zz], axis=-1).reshape(-1, 3)
    vals = f(pts)

    lines = ["x,y,z,re_fx,im_fx,re_fy,im_fy,re_fz,im_fz"]
    for p, v in zip(pts, vals):
        cells = [p[0], p[1], p[2],
                 v[0].real, v[0].imag, v[1].real, v[1].imag, v[2].real, v[2].imag]
        lines.append(",".join(FLOAT_FMT % c for c in cells))
    _atomic_write(out_dir / "field.csv", "\n".join(lines) + "\n")

    meta = {
        "field": f.name,
        "params": parsed,
        "rows": int(pts.shape[0]),
        "eigenvalue": f.eigenvalue,
        "mu": f.mu,
        "helicity": f.helicity,
    }
    _atomic_write(out_dir / "field_meta.json", json.dumps(meta, indent=2, sort_keys=True) + "\n")
    click.echo(f"wrote {pts.shape[0]} rows to {out_dir / 'field.csv'}")


@main.command("radon")
@click.option("--field", "field_name", required=True,
              help="gaussian (numeric grid) or lundquist / modes (analytic atoms)")
@click.option("--params", default="{}", help="JSON parameter object")
@click.option("--quad", "quad_spec", default="8,16", help="sphere rule npolar,nazimuth")
@click.option("--pgrid", "pgrid_spec", default="-8:8:64", help="p-grid spec p0:p1:n")
@click.option("--out", "out_dir", required=True, type=click.Path(path_type=Path))
def cmd_radon(field_name, params, quad_spec, pgrid_spec, out_dir) -> None:
    """Transform a catalog field; numeric grids go to CSV, atoms to JSON."""
    parsed = _parse_params(params)
    sidecar: dict = {"field": field_name, "params": parsed}

    if field_name == "lundquist":
        profile = radon.lundquist_radon_profile(
            float(parsed.get("f0", 1.0)), float(parsed.get("nu", 1.0)),
            n_ring=int(parsed.get("n_ring", 64)))
        _atomic_write(out_dir / "profile_atoms.json", radon.profile_to_json(profile) + "\n")
        sidecar.update(mode="analytic", atoms=len(profile.atoms), support="equatorial-ring")
    elif field_name == "modes":
        profile = radon.radon_mode_analytic(_mode_field_from_params(parsed))
        _atomic_write(out_dir / "profile_atoms.json", radon.profile_to_json(profile) + "\n")
        sidecar.update(mode="analytic", atoms=len(profile.atoms), support="point-atoms")
    elif field_name == "gaussian":
        f = build_field("gaussian", parsed)
        width = float(parsed.get("width", 1.0))
        n_polar, n_azimuth = _parse_quad(quad_spec)
        sphere = sphere_quadrature(n_polar, n_azimuth, antipodal=True)
        pieces = pgrid_spec.split(":")
        if len(pieces) != 3:
            raise click.UsageError("pgrid spec must be 'p0:p1:n'")
        p0, p1, n_p = float(pieces[0]), float(pieces[1]), int(pieces[2])
        p = p0 + (p1 - p0) * np.arange(n_p) / n_p
        plane = PlaneQuadrature(half_width=8.0 * width, n_per_axis=40)
        threads = max(1, int(os.environ.get("TRK_THREADS", "1")))
        truncation_warned = False
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", radon.TruncationWarning)
            grid = radon.radon_forward_grid(f, p, sphere, plane, threads=threads)
            truncation_warned = any(issubclass(w.category, radon.TruncationWarning)
                                    for w in caught)
        if truncation_warned:
            click.echo("warning: plane truncation boundary not negligible", err=True)
        _atomic_write(out_dir / "profile_grid.csv", radon.grid_to_csv(grid))

        # parity scan F^R(-p, -kappa) = F^R(p, kappa) on the sampled grid
        parity = 0.0
        if sphere.antipode_index is not None:
            rev = np.roll(grid.samples[::-1], 1, axis=0)  # samples at -p
            parity = float(np.max(np.abs(grid.samples - rev[:, sphere.antipode_index])))
        sidecar.update(mode="grid", parity_defect=parity,
                       parity_check="pass" if parity < 1e-8 else "fail",
                       truncation_warning=truncation_warned,
                       n_p=n_p, n_directions=sphere.n)
    else:
        raise click.ClickException(f"unknown field name {field_name!r}")

    _atomic_write(out_dir / "radon_meta.json", json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    click.echo(f"wrote transform outputs to {out_dir}")


@main.command("verify")
@click.option("--out", "out_path", type=click.Path(path_type=Path), default=None)
@click.option("--only", "only_filter", default=None, help="run records whose name contains this")
@click.option("--tol", "tol_overrides", multiple=True, help="NAME=VALUE tolerance override")
def cmd_verify(out_path, only_filter, tol_overrides) -> None:
    """Run the identity suite; exit 0 iff every record passes."""
    overrides = {}
    for item in tol_overrides:
        if "=" not in item:
            raise click.UsageError("tolerance override must be NAME=VALUE")
        name, value = item.split("=", 1)
        overrides[name] = float(value)
    report = verify.run_verify(only=only_filter, tolerances=overrides)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path is not None:
        _atomic_write(out_path, text)
    for rec in report["records"]:
        status = "pass" if rec["passed"] else "FAIL"
        click.echo(f"{status}  {rec['name']}  residual={rec['residual']:.3e}"
                   f"  tol={rec['tolerance']:.1e}")
    click.echo(f"{report['n_passed']}/{report['n_total']} passed")
    if not report["all_passed"]:
        raise SystemExit(1)


_PLOT_KINDS = ("lundquist_radial", "radon_heatmap", "verify_residuals")


@main.command("plot")
@click.option("--kind", required=True, type=click.Choice(_PLOT_KINDS))
@click.option("--data", "data_path", required=True, type=click.Path(path_type=Path))
@click.option("--out", "out_dir", required=True, type=click.Path(path_type=Path))
def cmd_plot(kind, data_path, out_dir) -> None:
    """Emit a plain-text gnuplot script referencing previously written data."""
    if not data_path.exists():
        click.echo(f"missing input {data_path}", err=True)
        raise SystemExit(2)

    if kind == "lundquist_radial":
        xs = np.linspace(0.0, 8.0, 161)
        from .core import bessel_j
        lines = ["r,j0,j1"]
        for r in xs:
            lines.append(",".join(FLOAT_FMT % c for c in (r, bessel_j(0, r), bessel_j(1, r))))
        _atomic_write(out_dir / "lundquist_radial.csv", "\n".join(lines) + "\n")
        script = (
            "set datafile separator ','\n"
            "set xlabel 'nu r'\n"
            "set ylabel 'component'\n"
            f"plot '{out_dir / 'lundquist_radial.csv'}' using 1:2 with lines title 'axial (J0)', \\\n"
            f"     '{out_dir / 'lundquist_radial.csv'}' using 1:3 with lines title 'azimuthal (J1)'\n"
        )
        _atomic_write(out_dir / "lundquist_radial.gp", script)
    elif kind == "radon_heatmap":
        script = (
            "set datafile separator ','\n"
            "set xlabel 'p'\n"
            "set ylabel 'direction azimuth'\n"
            "set view map\n"
            f"splot '{data_path}' using 1:(atan2($3,$2)):5 with points pt 5 palette title '|Re F_x|'\n"
        )
        _atomic_write(out_dir / "radon_heatmap.gp", script)
    else:
        report = json.loads(Path(data_path).read_text())
        lines = ["name,residual,tolerance"]
        for rec in report["records"]:
            lines.append(f"{rec['name']}," + ",".join(
                FLOAT_FMT % v for v in (rec["residual"], rec["tolerance"])))
        _atomic_write(out_dir / "verify_residuals.csv", "\n".join(lines) + "\n")
        script = (
            "set datafile separator ','\n"
            "set logscale y\n"
            "set style data histogram\n"
            "set xtics rotate by -45\n"
            f"plot '{out_dir / 'verify_residuals.csv'}' using 2:xtic(1) title 'residual', \\\n"
            f"     '{out_dir / 'verify_residuals.csv'}' using 3 title 'tolerance'\n"
        )
        _atomic_write(out_dir / "verify_residuals.gp", script)
    click.echo(f"wrote plot script to {out_dir}")
