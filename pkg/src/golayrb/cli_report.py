"""Command-line surface: sequence generation, verification runs, per-mask
PMEPR analysis, published-table reproduction, and envelope trace export.

Every table cell is recomputed from scratch on each run; the bundled
reference file is only ever used to diff against, never echoed as output.
Output is deterministic: identical configuration (including the seed)
produces byte-identical text.

PMEPR sampling convention: analyze and reproduce-table default to
--oversampling 1, the symbol-spaced grid the reference tables were printed
from.  Passing 4 or more switches to the refined continuous-peak estimate,
which can legitimately sit above the printed values.  trace defaults to a
dense 128x grid since it exists for plotting.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .correlation import default_tolerance
from .dsa import (
    CONTIGUOUS_MASKS,
    NONCONTIGUOUS_MASKS,
    apply_mask,
    classify_mask,
    dsa_report,
)
from .envelope import imepr_trace
from .families import (
    FamilyInstance,
    build_family,
    companion_functions,
    enumerate_families,
    extend_minus_one,
    m_sequence,
    verify_instance,
    zadoff_chu,
)
from .seqcore import (
    ComplexSequence,
    Family,
    FamilyDescriptor,
    boolean_to_phases,
    gdj_quadratic,
    psi,
)

TOOL_VERSION = "0.1.0"
ENV_OUT_DIR = "GOLAYRB_OUT_DIR"

_FAMILY_BY_FLAG = {"x": Family.X, "y": Family.Y, "gdj": Family.PLAIN_GDJ}

# the length-512 quadratic-path showcase sequence used by tables I and II
_SHOWCASE_PI = (7, 9, 6, 3, 1, 5, 4, 8, 2)

TABLE_IDS = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one command plus everything it may need."""

    command: str
    fmt: str
    out: Optional[str]
    oversampling: int
    tolerance: Optional[float]
    seed: int
    family: Optional[str] = None
    m: Optional[int] = None
    q: int = 2
    pi: Optional[Tuple[int, ...]] = None
    c_k: Optional[Tuple[int, ...]] = None
    c: int = 0
    descriptor_file: Optional[str] = None
    instance_file: Optional[str] = None
    sequence_file: Optional[str] = None
    mask: int = 15
    points: Optional[int] = None
    limit: int = 500
    batch: bool = False
    table: Optional[str] = None
    zc_root: int = 25
    zc_length: Optional[int] = None
    mseq_poly: Optional[Tuple[int, ...]] = None
    mseq_init: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.oversampling < 1:
            raise ValueError("oversampling must be >= 1")
        if self.tolerance is not None and self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


@dataclass(frozen=True)
class TableArtifact:
    """A regenerated table: labeled rows of per-column PMEPR values."""

    table_id: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[str, Tuple[float, ...]], ...]
    metadata: Dict[str, object]

    def to_json(self) -> dict:
        return {
            "table_id": self.table_id,
            "columns": list(self.columns),
            "rows": [{"label": label, "values": list(vals)} for label, vals in self.rows],
            "metadata": self.metadata,
        }


def _mask_columns(masks: Sequence[int]) -> Tuple[str, ...]:
    return tuple(f"A_{s}" for s in masks)


def _parse_int_list(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise ValueError("expected a comma-separated list of integers")
    return tuple(int(p) for p in parts)


def _default_pi(kind: Family, m: int) -> Tuple[int, ...]:
    pi = list(range(1, m + 1))
    if kind is Family.Y and m >= 2:
        pi[-2], pi[-1] = pi[-1], pi[-2]
    return tuple(pi)


def _descriptor_from_config(cfg: RunConfig) -> FamilyDescriptor:
    if cfg.descriptor_file:
        with open(cfg.descriptor_file, "r", encoding="utf-8") as fh:
            return FamilyDescriptor.from_json(json.load(fh))
    if cfg.family is None or cfg.m is None:
        raise ValueError("need --family and --m (or --descriptor-file)")
    kind = _FAMILY_BY_FLAG[cfg.family]
    pi = cfg.pi if cfg.pi is not None else _default_pi(kind, cfg.m)
    c_k = cfg.c_k if cfg.c_k is not None else tuple([0] * cfg.m)
    return FamilyDescriptor(theorem=kind, m=cfg.m, q=cfg.q, pi=pi, c_k=c_k, c=cfg.c)


def _read_sequence_csv(path: str) -> ComplexSequence:
    entries: Dict[int, complex] = {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.reader(fh):
            if not row:
                continue
            try:
                idx = int(row[0])
                value = complex(float(row[1]), float(row[2]))
            except (ValueError, IndexError):
                if not entries:
                    continue  # header line
                raise ValueError(f"malformed sequence row: {row!r}")
            if idx in entries:
                raise ValueError(f"duplicate index {idx} in {path}")
            entries[idx] = value
    if not entries:
        raise ValueError(f"no sequence entries found in {path}")
    length = max(entries) + 1
    if sorted(entries) != list(range(length)):
        raise ValueError("sequence indexes must cover 0..L-1")
    return ComplexSequence(tuple(entries[i] for i in range(length)))


def _sequence_from_config(cfg: RunConfig) -> ComplexSequence:
    if cfg.sequence_file:
        return _read_sequence_csv(cfg.sequence_file)
    desc = _descriptor_from_config(cfg)
    return psi(boolean_to_phases(gdj_quadratic(desc)))


def _emit(cfg: RunConfig, text: str, default_name: str) -> None:
    out = cfg.out
    if out is None:
        base = os.environ.get(ENV_OUT_DIR)
        if base:
            out = os.path.join(base, default_name)
    if out is None:
        sys.stdout.write(text)
        return
    parent = os.path.dirname(out)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _ext(fmt: str) -> str:
    return {"csv": "csv", "json": "json", "pretty": "txt"}[fmt]


# ---------------------------------------------------------------- generate


def cmd_generate(cfg: RunConfig) -> int:
    desc = _descriptor_from_config(cfg)
    inst = build_family(desc)
    funcs = companion_functions(desc)
    names = ("a", "b", "d", "e")
    phases = {n: boolean_to_phases(f) for n, f in zip(names, funcs)}
    seqs = {"a": inst.a, "b": inst.b, "d": inst.d, "e": inst.e}

    if cfg.fmt == "json":
        bundle = {
            "descriptor": desc.to_json(),
            "length": desc.length,
            "h": inst.h,
            "sequences": {
                n: {
                    "phases": list(phases[n].values),
                    "q": desc.q,
                    "values": [[v.real, v.imag] for v in seqs[n].values],
                }
                for n in names
            },
        }
        text = json.dumps(bundle, indent=2) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["sequence", "index", "phase_q", "q", "re", "im"])
        for n in names:
            for i, (p, v) in enumerate(zip(phases[n].values, seqs[n].values)):
                writer.writerow([n, i, p, desc.q, repr(v.real), repr(v.imag)])
        text = buf.getvalue()
    else:
        lines = [
            f"descriptor: {desc.theorem.value} m={desc.m} q={desc.q} "
            f"pi={desc.pi} c_k={desc.c_k} c={desc.c}",
            f"length {desc.length}, companion split h = {inst.h}",
        ]
        for n in names:
            lines.append(f"{n} phases: " + " ".join(str(p) for p in phases[n].values))
            lines.append(
                f"{n} values: "
                + " ".join(f"{v.real:+.4f}{v.imag:+.4f}j" for v in seqs[n].values)
            )
        text = "\n".join(lines) + "\n"
    _emit(cfg, text, f"generate.{_ext(cfg.fmt)}")
    return 0


# ------------------------------------------------------------------ verify


def _instance_from_file(path: str) -> FamilyInstance:
    with open(path, "r", encoding="utf-8") as fh:
        bundle = json.load(fh)
    desc = FamilyDescriptor.from_json(bundle["descriptor"])
    seqs = {}
    for name in ("a", "b", "d", "e"):
        values = bundle["sequences"][name]["values"]
        seqs[name] = ComplexSequence(tuple(complex(re, im) for re, im in values))
        if len(seqs[name]) != desc.length:
            raise ValueError(f"sequence {name} has wrong length")
    return FamilyInstance(
        descriptor=desc,
        a=seqs["a"],
        b=seqs["b"],
        d=seqs["d"],
        e=seqs["e"],
        h=2 ** (desc.m - 2),
    )


def _verdict_lines(verdicts, fmt: str) -> List[str]:
    if fmt == "json":
        return [json.dumps(v.to_json()) for v in verdicts]
    if fmt == "csv":
        rows = []
        for v in verdicts:
            j = v.to_json()
            rows.append(
                ",".join(
                    "" if j[k] is None else (repr(j[k]) if isinstance(j[k], float) else str(j[k]))
                    for k in (
                        "theorem",
                        "clause",
                        "mask",
                        "relation",
                        "holds",
                        "mu",
                        "defect_re",
                        "defect_im",
                        "residual",
                    )
                )
            )
        return rows
    out = []
    for v in verdicts:
        state = "holds" if v.holds else "FAILS"
        extra = "" if v.mu is None else f" mu={v.mu}"
        out.append(
            f"theorem {v.theorem} clause {v.clause} mask {v.mask:2d} "
            f"{v.relation.value:4s} {state}{extra} residual={v.residual:.3e}"
        )
    return out


def cmd_verify(cfg: RunConfig) -> int:
    instances: List[FamilyInstance]
    if cfg.instance_file:
        instances = [_instance_from_file(cfg.instance_file)]
    elif cfg.batch:
        if cfg.family not in ("x", "y") or cfg.m is None:
            raise ValueError("batch verification needs --family {x,y} and --m")
        descs = enumerate_families(
            _FAMILY_BY_FLAG[cfg.family], cfg.m, cfg.q, limit=cfg.limit, seed=cfg.seed
        )
        instances = [build_family(d) for d in descs]
    else:
        instances = [build_family(_descriptor_from_config(cfg))]

    all_hold = True
    lines: List[str] = []
    for inst in instances:
        tol = cfg.tolerance if cfg.tolerance is not None else default_tolerance(inst.length)
        verdicts = verify_instance(inst, tol)
        all_hold = all_hold and all(v.holds for v in verdicts)
        lines.extend(_verdict_lines(verdicts, cfg.fmt))
    header = [] if cfg.fmt != "csv" else [
        "theorem,clause,mask,relation,holds,mu,defect_re,defect_im,residual"
    ]
    _emit(cfg, "\n".join(header + lines) + "\n", f"verify.{_ext(cfg.fmt)}")
    return 0 if all_hold else 1


# ----------------------------------------------------------------- analyze


def cmd_analyze(cfg: RunConfig) -> int:
    seq = _sequence_from_config(cfg)
    report = dsa_report(seq, oversampling=cfg.oversampling)
    if cfg.fmt == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["mask", "class", "pmepr", "peak_time_fraction", "average_power"])
        for s in range(1, 16):
            r = report.per_mask[s]
            writer.writerow(
                [
                    s,
                    classify_mask(s).value,
                    repr(r.pmepr),
                    repr(r.peak_time_fraction),
                    repr(r.average_power),
                ]
            )
        for name, value in (
            ("PMEPR_C", report.pmepr_c),
            ("PMEPR_NC", report.pmepr_nc),
            ("PMEPR_A", report.pmepr_a),
        ):
            writer.writerow(["summary", name, repr(value), "", ""])
        text = buf.getvalue()
    else:
        grid = "symbol-spaced grid" if report.oversampling_factor < 4 else (
            "refined peak estimate" if report.refined else "grid peak"
        )
        lines = [
            f"length {report.length}  oversampling {report.oversampling_factor}  ({grid})",
            "mask  class  pmepr",
        ]
        for s in range(1, 16):
            lines.append(
                f"{s:4d}  {classify_mask(s).value:>5s}  {report.per_mask[s].pmepr:8.4f}"
            )
        lines.append(f"PMEPR_C  = {report.pmepr_c:.4f}")
        lines.append(f"PMEPR_NC = {report.pmepr_nc:.4f}")
        lines.append(f"PMEPR_A  = {report.pmepr_a:.4f}")
        text = "\n".join(lines) + "\n"
    _emit(cfg, text, f"analyze.{_ext(cfg.fmt)}")
    return 0


# --------------------------------------------------------- table rebuilding


def _table_sequence_rows(table_id: str, cfg: RunConfig):
    """(masks, [(label, sequence)]) for one table, building all sequences."""
    if table_id in ("I", "II"):
        desc = FamilyDescriptor(
            theorem=Family.PLAIN_GDJ, m=9, q=2, pi=_SHOWCASE_PI, c_k=(0,) * 9, c=0
        )
        seq = psi(boolean_to_phases(gdj_quadratic(desc)))
        masks = CONTIGUOUS_MASKS if table_id == "I" else NONCONTIGUOUS_MASKS
        return masks, [("a", seq)]
    if table_id in ("III", "IV", "V", "VI"):
        kind = Family.X if table_id in ("III", "V") else Family.Y
        masks = CONTIGUOUS_MASKS if table_id in ("III", "IV") else NONCONTIGUOUS_MASKS
        rows = []
        for m in (3, 4, 5, 6):
            desc = FamilyDescriptor(
                theorem=kind, m=m, q=2, pi=_default_pi(kind, m), c_k=(0,) * m, c=0
            )
            rows.append((str(2 ** m), psi(boolean_to_phases(gdj_quadratic(desc)))))
        return masks, rows
    if table_id in ("VII", "VIII"):
        length = 32 if table_id == "VII" else 64
        zc_base = cfg.zc_length if cfg.zc_length is not None else length - 1
        zc = extend_minus_one(zadoff_chu(zc_base, cfg.zc_root))
        if len(zc) != length:
            raise ValueError(f"--zc-length {zc_base} does not fill {length} tones")
        poly = cfg.mseq_poly if cfg.mseq_poly is not None else ((5, 2) if length == 32 else (6, 1))
        degree = max(poly)
        init = cfg.mseq_init if cfg.mseq_init is not None else (1,) * degree
        ms = extend_minus_one(m_sequence(poly, init, 2 ** degree - 1))
        if len(ms) != length:
            raise ValueError(f"--mseq-poly {poly} does not fill {length} tones")
        m = 5 if length == 32 else 6
        rows = [("zadoff_chu", zc), ("m_sequence", ms)]
        for kind, label in ((Family.X, "family_x"), (Family.Y, "family_y")):
            desc = FamilyDescriptor(
                theorem=kind, m=m, q=2, pi=_default_pi(kind, m), c_k=(0,) * m, c=0
            )
            rows.append((label, psi(boolean_to_phases(gdj_quadratic(desc)))))
        return None, rows
    raise ValueError(f"unknown table id {table_id!r} (expected one of {TABLE_IDS})")


def build_table(table_id: str, cfg: RunConfig) -> TableArtifact:
    """Recompute one published table from freshly constructed sequences."""
    masks, seq_rows = _table_sequence_rows(table_id, cfg)
    metadata: Dict[str, object] = {
        "tool_version": TOOL_VERSION,
        "oversampling": cfg.oversampling,
    }
    rows = []
    if masks is not None:
        columns = _mask_columns(masks)
        for label, seq in seq_rows:
            report = dsa_report(seq, oversampling=cfg.oversampling)
            rows.append((label, tuple(report.per_mask[s].pmepr for s in masks)))
    else:
        columns = ("A_2", "A_9", "A_14", "A_15", "PMEPR_C", "PMEPR_NC", "PMEPR_A")
        metadata["zc_root"] = cfg.zc_root
        metadata["mseq_poly"] = list(cfg.mseq_poly or ((5, 2) if table_id == "VII" else (6, 1)))
        for label, seq in seq_rows:
            report = dsa_report(seq, oversampling=cfg.oversampling)
            rows.append(
                (
                    label,
                    (
                        report.per_mask[2].pmepr,
                        report.per_mask[9].pmepr,
                        report.per_mask[14].pmepr,
                        report.per_mask[15].pmepr,
                        report.pmepr_c,
                        report.pmepr_nc,
                        report.pmepr_a,
                    ),
                )
            )
    return TableArtifact(
        table_id=table_id, columns=columns, rows=tuple(rows), metadata=metadata
    )


def load_reference_tables() -> dict:
    path = os.path.join(os.path.dirname(__file__), "reference_tables.json")
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def diff_against_reference(artifact: TableArtifact) -> dict:
    """Per-cell deltas between a rebuilt table and the bundled reference."""
    ref = load_reference_tables()["tables"][artifact.table_id]
    cells = []
    max_delta = 0.0
    for label, values in artifact.rows:
        ref_values = ref["rows"][label]
        for col, computed, reference in zip(artifact.columns, values, ref_values):
            delta = computed - reference
            max_delta = max(max_delta, abs(delta))
            cells.append(
                {
                    "row": label,
                    "column": col,
                    "computed": computed,
                    "reference": reference,
                    "delta": delta,
                }
            )
    return {"max_abs_delta": max_delta, "cells": cells}


def _pretty_table(artifact: TableArtifact, diff: dict) -> str:
    label_w = max(len("row"), *(len(label) for label, _ in artifact.rows))
    col_w = max(8, *(len(c) for c in artifact.columns)) + 1
    lines = [f"table {artifact.table_id}"]
    lines.append("row".ljust(label_w) + "".join(c.rjust(col_w) for c in artifact.columns))
    for label, values in artifact.rows:
        lines.append(
            label.ljust(label_w) + "".join(f"{v:.4f}".rjust(col_w) for v in values)
        )
    lines.append(f"reference max |delta| = {diff['max_abs_delta']:.6f}")
    outliers = [c for c in diff["cells"] if abs(c["delta"]) > 2e-3]
    for c in outliers:
        lines.append(
            f"  differs: row {c['row']} {c['column']}: computed {c['computed']:.4f} "
            f"reference {c['reference']:.4f} delta {c['delta']:+.4f}"
        )
    return "\n".join(lines) + "\n"


def cmd_reproduce_table(cfg: RunConfig) -> int:
    if cfg.table is None:
        raise ValueError("--table is required (one of I..VIII)")
    artifact = build_table(cfg.table, cfg)
    diff = diff_against_reference(artifact)
    if cfg.fmt == "json":
        payload = artifact.to_json()
        payload["reference_diff"] = diff
        text = json.dumps(payload, indent=2) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row"] + list(artifact.columns))
        for label, values in artifact.rows:
            writer.writerow([label] + [repr(v) for v in values])
        buf.write(f"# reference_max_abs_delta,{diff['max_abs_delta']!r}\n")
        for c in diff["cells"]:
            if abs(c["delta"]) > 2e-3:
                buf.write(
                    f"# differs,{c['row']},{c['column']},{c['computed']!r},"
                    f"{c['reference']!r},{c['delta']!r}\n"
                )
        text = buf.getvalue()
    else:
        text = _pretty_table(artifact, diff)
    _emit(cfg, text, f"table-{cfg.table}.{_ext(cfg.fmt)}")
    return 0


# ------------------------------------------------------------------- trace


def cmd_trace(cfg: RunConfig) -> int:
    if cfg.fmt != "csv":
        raise ValueError("trace emits CSV only")
    seq = _sequence_from_config(cfg)
    masked = apply_mask(seq, cfg.mask)
    points = cfg.points if cfg.points is not None else cfg.oversampling * len(masked)
    trace = imepr_trace(masked, points)
    lines = ["t_frac,imepr"]
    for n, value in enumerate(trace):
        lines.append(f"{n / points!r},{float(value)!r}")
    _emit(cfg, "\n".join(lines) + "\n", "trace.csv")
    return 0


# --------------------------------------------------------------- enumerate


def cmd_enumerate(cfg: RunConfig) -> int:
    if cfg.family not in ("x", "y") or cfg.m is None:
        raise ValueError("enumeration needs --family {x,y} and --m")
    descs = enumerate_families(
        _FAMILY_BY_FLAG[cfg.family], cfg.m, cfg.q, limit=cfg.limit, seed=cfg.seed
    )
    if cfg.fmt == "json":
        lines = [json.dumps(d.to_json()) for d in descs]
    elif cfg.fmt == "csv":
        lines = ["theorem,m,q,pi,c_k,c"]
        for d in descs:
            lines.append(
                f"{d.theorem.value},{d.m},{d.q},"
                f"{';'.join(map(str, d.pi))},{';'.join(map(str, d.c_k))},{d.c}"
            )
    else:
        lines = [
            f"{d.theorem.value} m={d.m} q={d.q} pi={d.pi} c_k={d.c_k} c={d.c}"
            for d in descs
        ]
    _emit(cfg, "\n".join(lines) + "\n", f"enumerate.{_ext(cfg.fmt)}")
    return 0


# -------------------------------------------------------------------- main


def _add_output_flags(p: argparse.ArgumentParser, fmt_default: str, os_default: int) -> None:
    p.add_argument("--oversampling", type=int, default=os_default)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--format", dest="fmt", choices=["csv", "json", "pretty"], default=fmt_default)
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=0)


def _add_descriptor_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["x", "y", "gdj"], default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--pi", default=None, help="comma-separated permutation of 1..m")
    p.add_argument("--ck", default=None, help="comma-separated linear coefficients c_1..c_m")
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--descriptor-file", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golayrb",
        description="Low-PMEPR preamble sequence construction and verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct a sequence quadruple")
    _add_descriptor_flags(p)
    _add_output_flags(p, "pretty", 128)

    p = sub.add_parser("verify", help="check the per-mask correlation guarantees")
    _add_descriptor_flags(p)
    _add_output_flags(p, "json", 128)
    p.add_argument("--instance-file", default=None)
    p.add_argument("--batch", action="store_true")
    p.add_argument("--limit", type=int, default=500)

    p = sub.add_parser("analyze", help="per-mask PMEPR report for any sequence")
    _add_descriptor_flags(p)
    _add_output_flags(p, "pretty", 1)
    p.add_argument("--sequence-file", default=None)

    p = sub.add_parser("reproduce-table", help="rebuild a published table and diff it")
    _add_descriptor_flags(p)
    _add_output_flags(p, "pretty", 1)
    p.add_argument("--table", choices=list(TABLE_IDS), default=None)
    p.add_argument("--zc-root", type=int, default=25)
    p.add_argument("--zc-length", type=int, default=None)
    p.add_argument("--mseq-poly", default=None, help="comma-separated tap exponents, e.g. 5,2")
    p.add_argument("--mseq-init", default=None, help="comma-separated register seed bits")

    p = sub.add_parser("trace", help="export an instantaneous-power trace as CSV")
    _add_descriptor_flags(p)
    _add_output_flags(p, "csv", 128)
    p.add_argument("--sequence-file", default=None)
    p.add_argument("--mask", type=int, default=15)
    p.add_argument("--points", type=int, default=None)

    p = sub.add_parser("enumerate", help="list family descriptors, sampled when large")
    _add_descriptor_flags(p)
    _add_output_flags(p, "json", 128)
    p.add_argument("--limit", type=int, default=500)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        fmt=args.fmt,
        out=args.out,
        oversampling=args.oversampling,
        tolerance=args.tolerance,
        seed=args.seed,
        family=getattr(args, "family", None),
        m=getattr(args, "m", None),
        q=getattr(args, "q", 2),
        pi=_parse_int_list(getattr(args, "pi", None)),
        c_k=_parse_int_list(getattr(args, "ck", None)),
        c=getattr(args, "c", 0),
        descriptor_file=getattr(args, "descriptor_file", None),
        instance_file=getattr(args, "instance_file", None),
        sequence_file=getattr(args, "sequence_file", None),
        mask=getattr(args, "mask", 15),
        points=getattr(args, "points", None),
        limit=getattr(args, "limit", 500),
        batch=getattr(args, "batch", False),
        table=getattr(args, "table", None),
        zc_root=getattr(args, "zc_root", 25),
        zc_length=getattr(args, "zc_length", None),
        mseq_poly=_parse_int_list(getattr(args, "mseq_poly", None)),
        mseq_init=_parse_int_list(getattr(args, "mseq_init", None)),
    )


_COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "analyze": cmd_analyze,
    "reproduce-table": cmd_reproduce_table,
    "trace": cmd_trace,
    "enumerate": cmd_enumerate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[args.command](cfg)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
