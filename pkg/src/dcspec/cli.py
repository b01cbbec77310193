"""Command-line front end: symbol ingestion, grids, probes, SVG export.

Exit codes: 0 success, 2 schema/precondition problems, 3 numerical
failures, 4 degenerate Hamilton spectra.  Errors are emitted on stderr as
single-line JSON objects so harnesses can assert on reasons rather than
message text.  All outputs are byte-deterministic for a fixed command
line and seed; CSV floats carry 17 significant digits.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import bundled_symbol_path
from .errors import (
    DcspecError,
    DegenerateSpectrumError,
    NumericalFailureError,
    SymbolSchemaError,
    PreconditionError,
)
from .symplectic import build_quadratic_form, hamilton_map
from .singular import averaged_real_part, singular_space
from .lattice import (
    RegionSpec,
    admissible,
    excluded_area_fraction,
    exclusion_discs,
    lattice_points,
    stable_eigenvalues,
)
from .weights import (
    averaging_identity_defect,
    canonical_normalizer,
    deformed_symbol,
    delta_max,
    ellipticity_margin,
    weight_gq,
)
from .fbi import (
    BlockCanonicalMap,
    FbiPhase,
    canonicity_conditions,
    kappa_of_phase,
    phase_of_kappa,
    phi_weight,
)
from .weyl import (
    HermiteTruncation,
    pseudospectrum_grid,
    quantize_quadratic,
    resolvent_norm,
    suggested_degree,
)

QUADRATIC_PROBE_NOTE = (
    "probe uses purely quadratic symbols at desk scale; "
    "resolvent bounds for general bounded symbols are out of scope"
)


def _fmt(x):
    """17-significant-digit float formatting; round-trips exactly."""
    return format(float(x), ".17g")


def _emit_json(obj, stream=None):
    (stream or sys.stdout).write(json.dumps(obj, sort_keys=True) + "\n")


def _error_line(exc):
    _emit_json({"error": type(exc).__name__, "message": str(exc)}, stream=sys.stderr)


def _write_csv(path, header, rows):
    def render(v):
        if isinstance(v, bool):
            return "1" if v else "0"
        if isinstance(v, float):
            return _fmt(v)
        if isinstance(v, int):
            return str(v)
        return str(v)

    lines = [",".join(header)]
    lines.extend(",".join(render(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


# ---------------------------------------------------------------- symbols


def _resolve_symbol_path(path):
    try:
        return bundled_symbol_path(path)
    except FileNotFoundError:
        return path


def parse_symbol_spec(path):
    """Load a quadratic symbol from JSON.

    Schema: {"dim": d, "terms": [{"alpha": [...], "beta": [...],
    "re": r, "im": i}, ...]} with length-d multi-indices of total degree 2.
    Bundled names like ``kfp.json`` resolve to the packaged files.
    """
    path = _resolve_symbol_path(path)
    try:
        with open(path) as f:
            raw = f.read()
    except OSError as exc:
        raise SymbolSchemaError(f"cannot read symbol file {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SymbolSchemaError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict) or "dim" not in doc or "terms" not in doc:
        raise SymbolSchemaError(f"{path}: need an object with 'dim' and 'terms'")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SymbolSchemaError(f"{path}: 'dim' must be a positive integer")
    if not isinstance(doc["terms"], list):
        raise SymbolSchemaError(f"{path}: 'terms' must be a list")
    coeffs = {}
    for i, term in enumerate(doc["terms"]):
        if not isinstance(term, dict):
            raise SymbolSchemaError(f"{path}: term {i} is not an object")
        try:
            alpha = tuple(int(a) for a in term["alpha"])
            beta = tuple(int(b) for b in term["beta"])
            value = complex(float(term.get("re", 0.0)), float(term.get("im", 0.0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise SymbolSchemaError(f"{path}: term {i} malformed: {exc}") from exc
        key = (alpha, beta)
        coeffs[key] = coeffs.get(key, 0.0) + value
    try:
        return build_quadratic_form(dim, coeffs)
    except SymbolSchemaError as exc:
        raise SymbolSchemaError(f"{path}: {exc}") from exc


def _matrix_to_json(M):
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(M, dtype=complex)]


def _matrix_from_json(doc, key, dim, path):
    try:
        M = np.array(
            [[complex(e[0], e[1]) for e in row] for row in doc[key]], dtype=complex
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise SymbolSchemaError(f"{path}: block {key!r} malformed: {exc}") from exc
    if M.shape != (dim, dim):
        raise SymbolSchemaError(f"{path}: block {key!r} must be {dim}x{dim}")
    return M


def _load_block_doc(path, keys):
    try:
        with open(path) as f:
            doc = json.load(f)
    except OSError as exc:
        raise SymbolSchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SymbolSchemaError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise SymbolSchemaError(f"{path}: 'dim' must be a positive integer")
    return dim, {k: _matrix_from_json(doc, k, dim, path) for k in keys}


# ---------------------------------------------------------------- SVG


def _svg_header(width, height):
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    )


def export_svg(rows, style, geometry=None, size=640):
    """Render a grid to a deterministic SVG document.

    ``style`` is "region" (admissibility geometry: grey annulus, dashed
    boundary, white exclusion discs, lattice markers; requires ``geometry``
    with outer/inner/exclusion radii and lattice points) or "heat"
    (pseudospectrum shading from rows of (re, im, log10norm)).  Element
    order is fixed so identical inputs give identical bytes.
    """
    if style not in ("region", "heat"):
        raise ValueError(f"unknown SVG style {style!r}")
    parts = [_svg_header(size, size)]
    if style == "region" and geometry is not None:
        outer = geometry["outer_radius"]
        inner = geometry.get("inner_radius") or 0.0
        rexc = geometry["exclusion_radius"]
        lat = geometry.get("lattice", [])
        scale = (size * 0.45) / outer
        cx = cy = size / 2.0

        def px(z):
            return cx + z.real * scale, cy - z.imag * scale

        # annulus with hole via even-odd fill
        parts.append(
            f'<path fill="#cccccc" fill-rule="evenodd" stroke="none" d="'
            f"M {cx + outer * scale:.6g} {cy:.6g} "
            f"A {outer * scale:.6g} {outer * scale:.6g} 0 1 0 {cx - outer * scale:.6g} {cy:.6g} "
            f"A {outer * scale:.6g} {outer * scale:.6g} 0 1 0 {cx + outer * scale:.6g} {cy:.6g} Z "
            f"M {cx + inner * scale:.6g} {cy:.6g} "
            f"A {inner * scale:.6g} {inner * scale:.6g} 0 1 0 {cx - inner * scale:.6g} {cy:.6g} "
            f"A {inner * scale:.6g} {inner * scale:.6g} 0 1 0 {cx + inner * scale:.6g} {cy:.6g} Z"
            f'"/>'
        )
        parts.append(
            f'<circle cx="{cx:.6g}" cy="{cy:.6g}" r="{outer * scale:.6g}" '
            f'fill="none" stroke="#444444" stroke-dasharray="6,4"/>'
        )
        if inner > 0:
            parts.append(
                f'<circle cx="{cx:.6g}" cy="{cy:.6g}" r="{inner * scale:.6g}" '
                f'fill="none" stroke="#444444" stroke-dasharray="6,4"/>'
            )
        for z in lat:
            x, y = px(z)
            parts.append(
                f'<circle class="exclusion" cx="{x:.6g}" cy="{y:.6g}" '
                f'r="{rexc * scale:.6g}" fill="#ffffff" stroke="#888888"/>'
            )
        for z in lat:
            x, y = px(z)
            parts.append(
                f'<circle class="lattice" cx="{x:.6g}" cy="{y:.6g}" r="2.5" fill="#000000"/>'
            )
    elif style == "heat" and rows:
        res = sorted({float(r[0]) for r in rows})
        ims = sorted({float(r[1]) for r in rows})
        finite = [float(r[2]) for r in rows if math.isfinite(float(r[2]))]
        lo = min(finite) if finite else 0.0
        hi = max(finite) if finite else 1.0
        span = hi - lo if hi > lo else 1.0
        w = size / max(len(res), 1)
        hh = size / max(len(ims), 1)
        col = {v: i for i, v in enumerate(res)}
        rowi = {v: i for i, v in enumerate(ims)}
        for re, im, val in rows:
            v = float(val)
            t = 1.0 if not math.isfinite(v) else (v - lo) / span
            shade = int(round(255 * (1.0 - t)))
            x = col[float(re)] * w
            y = (len(ims) - 1 - rowi[float(im)]) * hh
            parts.append(
                f'<rect x="{x:.6g}" y="{y:.6g}" width="{w:.6g}" height="{hh:.6g}" '
                f'fill="#{shade:02x}{shade:02x}{shade:02x}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------- commands


def _cmd_singular_space(args):
    q = parse_symbol_spec(args.symbol)
    space = singular_space(hamilton_map(q), tolerance=args.tol)
    avg = averaged_real_part(q, T=args.T)
    _emit_json(
        {
            "s_dim": space.dim,
            "basis": [[float(v) for v in space.basis[:, j]] for j in range(space.dim)],
            "min_avg_eigenvalue": avg.min_eigenvalue,
            "tolerance": space.tolerance,
            "T": args.T,
        }
    )
    return 0


def _cmd_spectrum(args):
    q = parse_symbol_spec(args.symbol)
    spec = stable_eigenvalues(hamilton_map(q))
    pts = lattice_points(spec, args.h, args.radius)
    rows = [(z.real, z.imag, mult) for z, mult in pts]
    _write_csv(args.out, ["re", "im", "multiplicity"], rows)
    return 0


def _cmd_region(args):
    q = parse_symbol_spec(args.symbol)
    spec = stable_eigenvalues(hamilton_map(q))
    region = RegionSpec(
        h=args.h, C0=args.C0, C1=args.C1, dim=q.dim, inner_radius=args.inner
    )
    lim = region.outer_radius * 1.1
    axis = np.linspace(-lim, lim, args.res)
    rows = []
    for im in axis:
        for re in axis:
            verdict = admissible(region, spec, complex(re, im))
            rows.append(
                (float(re), float(im), verdict.admissible, verdict.dist, verdict.reason)
            )
    _write_csv(args.out, ["re", "im", "admissible", "dist", "reason"], rows)
    discs = exclusion_discs(region, spec)
    if args.svg:
        geometry = {
            "outer_radius": region.outer_radius,
            "inner_radius": region.inner_radius,
            "exclusion_radius": region.exclusion_radius,
            "lattice": discs,
        }
        with open(args.svg, "w") as f:
            f.write(export_svg(rows, "region", geometry=geometry))
    _emit_json(
        {
            "F_of_h": region.f_value,
            "exclusion_radius": region.exclusion_radius,
            "outer_radius": region.outer_radius,
            "inner_radius": region.inner_radius,
            "excluded_area_fraction": excluded_area_fraction(
                region, spec, seed=args.seed
            ),
            "disc_count": len(discs),
        }
    )
    return 0


def _cmd_deform(args):
    q = parse_symbol_spec(args.symbol)
    w = weight_gq(q, T=args.T)
    kappa = canonical_normalizer(w, args.delta)
    margin = ellipticity_margin(deformed_symbol(q, w, args.delta))
    _emit_json(
        {
            "ellipticity_margin": margin,
            "symplectic_defect": kappa.symplectic_defect,
            "averaging_defect": averaging_identity_defect(q, T=args.T),
            "delta_max": delta_max(w),
            "delta": args.delta,
            "T": args.T,
        }
    )
    return 0


def _cmd_phase(args):
    if (args.kappa is None) == (args.phi is None):
        raise SymbolSchemaError("provide exactly one of --kappa or --phi")
    if args.kappa:
        dim, blocks = _load_block_doc(args.kappa, ("A", "B", "C", "D"))
        bmap = BlockCanonicalMap(blocks["A"], blocks["B"], blocks["C"], blocks["D"])
        phase = phase_of_kappa(bmap)
        defects = canonicity_conditions(bmap)
        weight = phi_weight(phase)
        _emit_json(
            {
                "dim": dim,
                "phase": {
                    "xx": _matrix_to_json(phase.xx),
                    "xy": _matrix_to_json(phase.xy),
                    "yy": _matrix_to_json(phase.yy),
                },
                "canonicity_defects": [defects.c1, defects.c2, defects.c3],
                "symplectic_defect": bmap.symplectic_defect,
                "levi_eigenvalues": [float(v) for v in np.linalg.eigvalsh(weight.levi)],
            }
        )
    else:
        dim, blocks = _load_block_doc(args.phi, ("xx", "xy", "yy"))
        phase = FbiPhase(dim, blocks["xx"], blocks["xy"], blocks["yy"])
        bmap = kappa_of_phase(phase)
        defects = canonicity_conditions(bmap)
        weight = phi_weight(phase)
        _emit_json(
            {
                "dim": dim,
                "kappa": {
                    "A": _matrix_to_json(bmap.A),
                    "B": _matrix_to_json(bmap.B),
                    "C": _matrix_to_json(bmap.C),
                    "D": _matrix_to_json(bmap.D),
                },
                "canonicity_defects": [defects.c1, defects.c2, defects.c3],
                "symplectic_defect": bmap.symplectic_defect,
                "levi_eigenvalues": [float(v) for v in np.linalg.eigvalsh(weight.levi)],
            }
        )
    return 0


def _parse_floats(text, count, flag):
    parts = text.split(",")
    if len(parts) != count:
        raise SymbolSchemaError(f"{flag} needs {count} comma-separated numbers")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise SymbolSchemaError(f"{flag}: {exc}") from exc


def _cmd_pseudospectrum(args):
    q = parse_symbol_spec(args.symbol)
    window = _parse_floats(args.window, 4, "--window")
    n_re, n_im = (int(v) for v in _parse_floats(args.res, 2, "--res"))
    op = quantize_quadratic(q, HermiteTruncation(q.dim, args.N, args.h))
    re_axis, im_axis, grid = pseudospectrum_grid(op, window, (n_re, n_im))
    rows = [
        (float(re_axis[i]), float(im_axis[j]), float(grid[j, i]))
        for j in range(n_im)
        for i in range(n_re)
    ]
    _write_csv(args.out, ["re", "im", "log10norm"], rows)
    if args.svg:
        with open(args.svg, "w") as f:
            f.write(export_svg(rows, "heat"))
    coarse_n = max(4, args.N - 10)
    op2 = quantize_quadratic(q, HermiteTruncation(q.dim, coarse_n, args.h))
    _, _, grid2 = pseudospectrum_grid(op2, window, (n_re, n_im))
    both = np.isfinite(grid) & np.isfinite(grid2)
    max_change = float(np.max(np.abs(grid[both] - grid2[both]))) if both.any() else math.inf
    _emit_json(
        {
            "N": args.N,
            "N_coarse": coarse_n,
            "max_log10_change": max_change,
            "note": QUADRATIC_PROBE_NOTE,
        }
    )
    return 0


def _cmd_resolvent(args):
    q = parse_symbol_spec(args.symbol)
    zre, zim = _parse_floats(args.z, 2, "--z")
    z = complex(zre, zim)
    op = quantize_quadratic(q, HermiteTruncation(q.dim, args.N, args.h))
    norm = resolvent_norm(op, z)
    coarse_n = max(4, args.N - 10)
    op2 = quantize_quadratic(q, HermiteTruncation(q.dim, coarse_n, args.h))
    norm2 = resolvent_norm(op2, z)
    finite = math.isfinite(norm)
    rel = (
        abs(norm - norm2) / norm
        if finite and math.isfinite(norm2) and norm > 0
        else math.inf
    )
    _emit_json(
        {
            "z": [zre, zim],
            "norm": norm if finite else "inf",
            "log10norm": math.log10(norm) if finite else "inf",
            "finite": finite,
            "N": args.N,
            "N_coarse": coarse_n,
            "rel_change": rel if math.isfinite(rel) else "inf",
            "note": QUADRATIC_PROBE_NOTE,
        }
    )
    return 0


def sample_admissible(region, spec, count, rng, max_tries=100000):
    """Seeded rejection sampler for admissible points in the annulus."""
    inner = region.inner_radius or 0.0
    outer = region.outer_radius
    out = []
    for _ in range(max_tries):
        if len(out) >= count:
            return out
        u = rng.random()
        theta = rng.random() * 2.0 * math.pi
        r = math.sqrt(inner**2 + u * (outer**2 - inner**2))
        z = r * complex(math.cos(theta), math.sin(theta))
        if admissible(region, spec, z).admissible:
            out.append(z)
    raise NumericalFailureError(
        f"could not sample {count} admissible points in {max_tries} tries"
    )


def probe_theorem(q, h_values, C0, C1, inner_mult=3.0, samples=20, seed=0,
                  safety=2.0, converge_rtol=0.05, max_rounds=3):
    """Resolvent norms at admissible points across an h-ladder, with fit.

    For each h the truncation degree starts at the energy-cutoff suggestion
    and grows by 10 until the sampled norms agree with the next level to
    ``converge_rtol``; the returned rows use the finer level.  The fit is
    the least-squares slope of log norm against log(1/h).
    """
    spec = stable_eigenvalues(hamilton_map(q))
    rng = np.random.default_rng(seed)
    rows = []
    max_rel = 0.0
    degrees = {}
    for h in h_values:
        region = RegionSpec(h=h, C0=C0, C1=C1, dim=q.dim, inner_radius=inner_mult * h)
        zs = sample_admissible(region, spec, samples, rng)
        degree = suggested_degree(region.outer_radius, h, q.dim, safety=safety)
        op = quantize_quadratic(q, HermiteTruncation(q.dim, degree, h))
        norms = np.array([resolvent_norm(op, z) for z in zs])
        for _ in range(max_rounds):
            finer = degree + 10
            op_f = quantize_quadratic(q, HermiteTruncation(q.dim, finer, h))
            norms_f = np.array([resolvent_norm(op_f, z) for z in zs])
            ok = np.isfinite(norms) & np.isfinite(norms_f)
            rel = (
                float(np.max(np.abs(norms_f[ok] - norms[ok]) / norms_f[ok]))
                if ok.any()
                else math.inf
            )
            degree, norms = finer, norms_f
            if rel <= converge_rtol:
                break
        else:
            raise NumericalFailureError(
                f"resolvent norms did not stabilize in N at h={h}"
            )
        max_rel = max(max_rel, rel)
        degrees[h] = degree
        rows.extend((h, z, float(nv)) for z, nv in zip(zs, norms))
    finite = [r for r in rows if math.isfinite(r[2])]
    if len(finite) >= 2 and len({r[0] for r in finite}) >= 2:
        xs = np.log([1.0 / r[0] for r in finite])
        ys = np.log([r[2] for r in finite])
        exponent = float(np.polyfit(xs, ys, 1)[0])
    else:
        # a growth exponent needs at least two distinct h values
        exponent = math.nan
    return rows, exponent, max_rel, degrees


def _cmd_probe_theorem(args):
    q = parse_symbol_spec(args.symbol)
    h_values = [float(p) for p in args.h_list.split(",") if p]
    if not h_values:
        raise SymbolSchemaError("--h-list must contain at least one value")
    rows, exponent, max_rel, degrees = probe_theorem(
        q,
        h_values,
        C0=args.C0,
        C1=args.C1,
        inner_mult=args.inner_mult,
        samples=args.samples,
        seed=args.seed,
        safety=args.safety,
    )
    csv_rows = [
        (h, z.real, z.imag, nv, True, exponent) for h, z, nv in rows
    ]
    _write_csv(
        args.out,
        ["h", "z_re", "z_im", "norm", "admissible", "fit_exponent"],
        csv_rows,
    )
    _emit_json(
        {
            "fit_exponent": exponent,
            "max_rel_norm_change": max_rel,
            "degrees": {_fmt(h): n for h, n in sorted(degrees.items())},
            "all_finite": all(math.isfinite(r[2]) for r in rows),
            "note": QUADRATIC_PROBE_NOTE,
        }
    )
    return 0


# ---------------------------------------------------------------- driver


def build_parser():
    p = argparse.ArgumentParser(
        prog="dcspec",
        description="Spectra and pseudospectra of quadratic Weyl operators.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("singular-space", help="singular space and averaged positivity")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--T", type=float, default=1.0)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(func=_cmd_singular_space)

    sp = sub.add_parser("spectrum", help="spectral lattice points in a disc")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--h", type=float, required=True)
    sp.add_argument("--radius", type=float, required=True)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_spectrum)

    sp = sub.add_parser("region", help="admissible-region grid and geometry summary")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--h", type=float, required=True)
    sp.add_argument("--C0", type=float, required=True)
    sp.add_argument("--C1", type=float, required=True)
    sp.add_argument("--inner", type=float, default=None)
    sp.add_argument("--res", type=int, default=101)
    sp.add_argument("--out", default=None)
    sp.add_argument("--svg", default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_region)

    sp = sub.add_parser("deform", help="averaging weight, deformed symbol, normalizer")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--T", type=float, default=1.0)
    sp.add_argument("--delta", type=float, required=True)
    sp.set_defaults(func=_cmd_deform)

    sp = sub.add_parser("phase", help="convert between phases and block maps")
    sp.add_argument("--kappa", default=None)
    sp.add_argument("--phi", default=None)
    sp.set_defaults(func=_cmd_phase)

    sp = sub.add_parser("pseudospectrum", help="log10 resolvent norm grid")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--h", type=float, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--window", required=True, help="re0,re1,im0,im1")
    sp.add_argument("--res", required=True, help="n_re,n_im")
    sp.add_argument("--out", default=None)
    sp.add_argument("--svg", default=None)
    sp.set_defaults(func=_cmd_pseudospectrum)

    sp = sub.add_parser("resolvent", help="resolvent norm at one point")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--h", type=float, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--z", required=True, help="re,im")
    sp.set_defaults(func=_cmd_resolvent)

    sp = sub.add_parser("probe-theorem", help="resolvent growth fit over an h ladder")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--C0", type=float, required=True)
    sp.add_argument("--C1", type=float, required=True)
    sp.add_argument("--h-list", required=True, dest="h_list")
    sp.add_argument("--inner-mult", type=float, default=3.0, dest="inner_mult")
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--safety", type=float, default=2.0)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_probe_theorem)

    return p


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SymbolSchemaError, PreconditionError, ValueError) as exc:
        _error_line(exc)
        return 2
    except NumericalFailureError as exc:
        _error_line(exc)
        return 3
    except DegenerateSpectrumError as exc:
        _error_line(exc)
        return 4
    except DcspecError as exc:
        _error_line(exc)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
