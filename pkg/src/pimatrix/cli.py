"""Command-line front end.

Matrix files are JSON: {"rows": n, "cols": n, "data": [[re, im], ...]} in
row-major order. Jordan files: {"blocks": [{"eig": [re, im], "sizes": [...]}]}.
Complex scalars on the command line accept a, bi, a+bi, a-bi.

Exit codes: 0 success / predicate true; 1 predicate false or not equivalent;
2 invalid input or precondition failure; 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import factor, livsic, modelspace, numrange, predicates, products, similar, synth, usim
from .core import ToleranceCfg, as_matrix, char_poly
from .errors import NumericalFailure, PimError
from .modelspace import ModelParams
from .similar import JordanData

__all__ = [
    "main",
    "run",
    "read_matrix",
    "write_matrix",
    "read_jordan",
    "parse_complex",
    "parse_complex_list",
]


# ---------------------------------------------------------------- file I/O


def parse_complex(text: str) -> complex:
    """Parse a scalar written as a, bi, a+bi or a-bi (i or j accepted)."""
    s = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    if not s:
        raise ValueError("empty complex literal")
    try:
        z = complex(s)
    except ValueError as exc:
        raise ValueError(f"cannot parse complex number from {text!r}") from exc
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValueError(f"non-finite complex literal {text!r}")
    return z


def parse_complex_list(text: str) -> list[complex]:
    items = [t for t in text.split(",") if t.strip()]
    return [parse_complex(t) for t in items]


def read_matrix(path: str) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    try:
        rows = int(doc["rows"])
        cols = int(doc["cols"])
        data = doc["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"{path}: not a matrix file: {exc}") from exc
    if rows < 1 or cols < 1 or len(data) != rows * cols:
        raise ValueError(f"{path}: data length {len(data)} != rows*cols = {rows * cols}")
    flat = []
    for entry in data:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(v, (int, float)) for v in entry)
        ):
            raise ValueError(f"{path}: each entry must be a [re, im] pair, got {entry!r}")
        re, im = float(entry[0]), float(entry[1])
        if not (np.isfinite(re) and np.isfinite(im)):
            raise ValueError(f"{path}: non-finite entry {entry!r}")
        flat.append(complex(re, im))
    return np.asarray(flat, dtype=complex).reshape(rows, cols)


def write_matrix(path: str, a: np.ndarray) -> None:
    a = np.asarray(a, dtype=complex)
    doc = {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in a.reshape(-1)],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def read_jordan(path: str) -> JordanData:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    try:
        blocks = [
            (complex(float(b["eig"][0]), float(b["eig"][1])), [int(s) for s in b["sizes"]])
            for b in doc["blocks"]
        ]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ValueError(f"{path}: not a Jordan file: {exc}") from exc
    return JordanData(blocks)


# ------------------------------------------------------------- formatting


def _fmt_c(z: complex) -> str:
    re, im = z.real, z.imag
    if abs(im) < 5e-13:
        return f"{re:.10g}"
    if abs(re) < 5e-13:
        return f"{im:.10g}i"
    return f"{re:.10g}{im:+.10g}i"


def _fmt_matrix(a: np.ndarray) -> str:
    cells = [[_fmt_c(z) for z in row] for row in np.asarray(a)]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  [ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _print_matrix(label: str, a: np.ndarray) -> None:
    print(f"{label}:")
    print(_fmt_matrix(a))


# ------------------------------------------------------------ subcommands


def _cmd_check(args, cfg) -> int:
    a = read_matrix(args.matrix)
    info = predicates.classify(as_matrix(a), cfg)
    kind = []
    if info.is_pi:
        kind.append("partial isometry")
        kind.append(f"rank {info.rank}")
        kind.append(f"defect {info.defect}")
        if info.is_unitary:
            kind.append("unitary")
        elif info.is_cnu:
            kind.append("cnu")
    else:
        kind.append("not a partial isometry")
    print(", ".join(kind))
    print(f"char poly: {info.char}")
    if info.disk_spectrum:
        print("disk spectrum:", ", ".join(_fmt_c(z) for z in info.disk_spectrum))
    if info.circle_spectrum:
        print("circle spectrum:", ", ".join(_fmt_c(z) for z in info.circle_spectrum))
    return 0 if info.is_pi else 1


def _cmd_factor(args, cfg) -> int:
    a = read_matrix(args.matrix)
    out = None
    if args.kind == "svd":
        can = factor.svd_canonical(a, cfg)
        _print_matrix("U", can.u)
        print(f"rank: {can.rank}")
        _print_matrix("V", can.v)
        out = can.reconstruct()
    elif args.kind == "polar":
        w, p, q = factor.polar_factor(a, cfg)
        _print_matrix("W (unitary)", w)
        _print_matrix("P (initial projection)", p)
        _print_matrix("Q (final projection)", q)
        out = w @ p
    elif args.kind == "pipolar":
        e, r = factor.pi_polar(a, cfg)
        _print_matrix("E (partial isometry)", e)
        _print_matrix("R = |A|", r)
        out = e @ r
    else:  # pseudo
        out = factor.pseudoinverse(a, cfg)
        _print_matrix("pseudoinverse", out)
        print(f"adjoint equals pseudoinverse: {factor.is_pi_via_pseudoinverse(a, cfg)}")
    if args.out:
        write_matrix(args.out, out)
        print(f"wrote {args.out}")
    return 0


def _cmd_synth(args, cfg) -> int:
    if args.mode == "roots":
        a = synth.synth_from_roots(parse_complex_list(args.roots), cfg)
    else:
        a = synth.synth_superdiagonal(parse_complex_list(args.xi), cfg)
    _print_matrix("result", a)
    print(f"char poly: {char_poly(a)}")
    if args.out:
        write_matrix(args.out, a)
        print(f"wrote {args.out}")
    return 0


def _cmd_similar(args, cfg) -> int:
    if args.jordan:
        j = read_jordan(args.jordan)
    else:
        j = similar.jordan_of(read_matrix(args.matrix), cfg)
        print("jordan data:", _fmt_jordan(j))
    verdict = similar.similar_to_pi(j, cfg)
    print("similar to a partial isometry:", "yes" if verdict else "no")
    return 0 if verdict else 1


def _fmt_jordan(j: JordanData) -> str:
    return "; ".join(
        f"{_fmt_c(lam)}: blocks {list(sizes)}" for lam, sizes in j.blocks
    )


def _cmd_realize(args, cfg) -> int:
    j = read_jordan(args.jordan)
    a = similar.realize_similar_pi(j, cfg)
    _print_matrix("partial isometry", a)
    if args.out:
        write_matrix(args.out, a)
        print(f"wrote {args.out}")
    return 0


def _cmd_usim(args, cfg) -> int:
    a = read_matrix(args.a)
    b = read_matrix(args.b)
    method = args.method
    if method == "auto":
        both_pi = predicates.is_partial_isometry(a, cfg) and predicates.is_partial_isometry(b, cfg)
        if both_pi and predicates.defect(a, cfg) == 1 and predicates.defect(b, cfg) == 1:
            method = "defect1"
        elif both_pi and a.shape[0] in (2, 3, 4) and a.shape == b.shape:
            method = "pi-small"
        else:
            method = "words"
    if method == "defect1":
        same = usim.defect_one_usim(a, b, cfg)
        print("unitarily similar (defect-one characteristic polynomial):", "yes" if same else "no")
        return 0 if same else 1
    if method == "pi-small":
        same = usim.pi_usim_small(a, b, cfg)
        print(f"unitarily similar (complete PI invariants, n={a.shape[0]}):", "yes" if same else "no")
        return 0 if same else 1
    verdict = usim.unitarily_similar(a, b, cfg, degree_cap=args.degree_cap)
    if verdict.kind == "yes":
        print("unitarily similar: yes (complete trace-word family)")
        return 0
    if verdict.kind == "no":
        w = verdict.witness
        if w is not None:
            ta, tb = w.trace(as_matrix(a)), w.trace(as_matrix(b))
            print(f"unitarily similar: no — word {w} has traces {_fmt_c(ta)} vs {_fmt_c(tb)}")
        else:
            print("unitarily similar: no")
        return 1
    print(f"unitarily similar: undecided — all traces agree up to degree {verdict.degree}")
    return 0


def _cmd_dilate(args, cfg) -> int:
    a = read_matrix(args.matrix)
    m = usim.dilate(a, cfg)
    _print_matrix("dilation", m)
    if args.out:
        write_matrix(args.out, m)
        print(f"wrote {args.out}")
    return 0


def _cmd_livsic(args, cfg) -> int:
    a = read_matrix(args.matrix)
    lf = livsic.livsic_build(a, cfg)
    print(f"size {lf.n}, defect {lf.r}")
    if args.compare:
        b = read_matrix(args.compare)
        verdict = livsic.livsic_equivalent(a, b, cfg)
        print(f"verdict: {verdict.kind} ({verdict.reason})")
        return 1 if verdict.kind == "not_equivalent" else 0
    if lf.r == 1:
        bl = livsic.livsic_defect1(a, cfg)
        zeros = ", ".join(_fmt_c(z) for z in bl.zeros) or "(none)"
        print(f"Blaschke form: zero of order {bl.zero_order} at 0; other zeros: {zeros}")
    for z in livsic.sample_grid(max(4, args.samples))[: args.samples]:
        w = livsic.livsic_eval(lf, z, cfg)
        print(f"w({_fmt_c(z)}) =")
        print(_fmt_matrix(w))
    return 0


def _cmd_model(args, cfg) -> int:
    p = ModelParams(tuple(parse_complex_list(args.lambdas)))
    m = modelspace.model_matrix(p)
    _print_matrix("model matrix", m)
    print(f"char poly: {char_poly(m)}")
    if args.out:
        write_matrix(args.out, m)
        print(f"wrote {args.out}")
    return 0


def _write_csv(path: str, region: numrange.NRRegion) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for theta, support, pt in region.samples:
            fh.write(f"{theta!r},{support!r},{pt.real!r},{pt.imag!r}\n")


def _svg_path(points, close: bool) -> str:
    cmds = []
    for k, z in enumerate(points):
        cmds.append(f"{'M' if k == 0 else 'L'} {z.real:.6f} {-z.imag:.6f}")
    if close:
        cmds.append("Z")
    return " ".join(cmds)


def _write_svg(path: str, boundary, polygons) -> None:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="-1.3 -1.3 2.6 2.6" '
        'width="520" height="520">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="#999" stroke-width="0.008"/>',
    ]
    colors = ["#c33", "#383", "#36c"]
    for k, poly in enumerate(polygons):
        parts.append(
            f'<path d="{_svg_path(poly, close=True)}" fill="none" '
            f'stroke="{colors[k % len(colors)]}" stroke-width="0.006"/>'
        )
    if boundary:
        parts.append(
            f'<path d="{_svg_path(boundary, close=True)}" fill="none" '
            'stroke="#000" stroke-width="0.01"/>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def _cmd_numrange(args, cfg) -> int:
    p = None
    if args.lambdas is not None:
        p = ModelParams(tuple(parse_complex_list(args.lambdas)))
        a = modelspace.model_matrix(p)
    else:
        a = read_matrix(args.matrix)
    method = args.method
    if method in ("blaschke", "both") and p is None:
        raise ValueError("--method blaschke needs --lambdas (the polygon route is for models)")
    m = args.samples
    sweep_region = numrange.nr_sweep(a, m) if method in ("sweep", "both") else None
    inter_region = numrange.nr_intersection(p, m, cfg) if method in ("blaschke", "both") else None
    main_region = sweep_region or inter_region
    if sweep_region:
        sup = max(s[1] for s in sweep_region.samples)
        print(f"sweep: {m} angles, max support {sup:.6f}")
    if inter_region:
        print(f"intersection: {len(inter_region.vertices or ())} vertices")
    if sweep_region and inter_region:
        d = numrange.hausdorff(sweep_region, inter_region, m)
        print(f"hausdorff distance between routes: {d:.6f}")
    if args.csv:
        _write_csv(args.csv, main_region)
        print(f"wrote {args.csv}")
    if args.svg:
        boundary = [s[2] for s in sweep_region.samples] if sweep_region else list(inter_region.vertices)
        polys = []
        if p is not None:
            for xi in (1.0, np.exp(2j * np.pi / 3), np.exp(4j * np.pi / 3)):
                polys.append(numrange.nr_polygon_Q(p, xi, cfg))
        _write_svg(args.svg, boundary, polys)
        print(f"wrote {args.svg}")
    return 0


# ------------------------------------------------------------------ driver


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pim",
        description="Detect, factor, synthesize and compare partially isometric matrices.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="classify a matrix")
    c.add_argument("matrix")

    c = sub.add_parser("factor", help="factor a matrix")
    c.add_argument("--kind", choices=["svd", "polar", "pipolar", "pseudo"], default="svd")
    c.add_argument("matrix")
    c.add_argument("--out")

    c = sub.add_parser("synth", help="synthesize a partial isometry")
    ssub = c.add_subparsers(dest="mode", required=True)
    s1 = ssub.add_parser("roots", help="from characteristic roots")
    s1.add_argument("--roots", required=True)
    s1.add_argument("--out")
    s2 = ssub.add_parser("superdiag", help="upper triangular with prescribed diagonal")
    s2.add_argument("--xi", required=True)
    s2.add_argument("--out")

    c = sub.add_parser("similar", help="decide similarity to a partial isometry")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--jordan")
    g.add_argument("--matrix")

    c = sub.add_parser("realize", help="build a partial isometry with given Jordan data")
    c.add_argument("--jordan", required=True)
    c.add_argument("--out")

    c = sub.add_parser("usim", help="compare two matrices for unitary similarity")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--method", choices=["auto", "words", "defect1", "pi-small"], default="auto")
    c.add_argument("--degree-cap", type=int, default=8)

    c = sub.add_parser("dilate", help="partial-isometry dilation of a contraction")
    c.add_argument("matrix")
    c.add_argument("--out")

    c = sub.add_parser("livsic", help="characteristic function report / comparison")
    c.add_argument("matrix")
    c.add_argument("--compare")
    c.add_argument("--samples", type=int, default=4)

    c = sub.add_parser("model", help="defect-one model matrix from eigenvalues")
    c.add_argument("--lambdas", required=True)
    c.add_argument("--out")

    c = sub.add_parser("numrange", help="numerical range boundary data")
    c.add_argument("matrix", nargs="?")
    c.add_argument("--lambdas")
    c.add_argument("--samples", type=int, default=360)
    c.add_argument("--method", choices=["sweep", "blaschke", "both"], default="sweep")
    c.add_argument("--csv")
    c.add_argument("--svg")
    return ap


_HANDLERS = {
    "check": _cmd_check,
    "factor": _cmd_factor,
    "synth": _cmd_synth,
    "similar": _cmd_similar,
    "realize": _cmd_realize,
    "usim": _cmd_usim,
    "dilate": _cmd_dilate,
    "livsic": _cmd_livsic,
    "model": _cmd_model,
    "numrange": _cmd_numrange,
}


def run(argv: list[str]) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.command == "numrange" and args.matrix is None and args.lambdas is None:
        ap.error("numrange needs a matrix file or --lambdas")
    cfg = ToleranceCfg.from_env()
    try:
        return _HANDLERS[args.command](args, cfg)
    except NumericalFailure as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except PimError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
