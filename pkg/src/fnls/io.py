"""Artifact persistence: FNLS profile files, CSV series, and run manifests.

Profile format (little-endian throughout): magic b"FNLS", u32 version = 1,
u64 N, then a, b, lam, zeta, beta, sigma, omega, c as eight f64, then N
(re, im) f64 pairs.  Round trips are bit-exact.  Snapshot files append the
sample time t as one trailing f64.
"""
from __future__ import annotations

import hashlib
import struct
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BadMagic, TruncatedFile, UnsupportedVersion
from .model import InvariantSnapshot, ModelParams, WaveParams, fmt15
from .spectral import ComplexField, Grid

MAGIC = b"FNLS"
VERSION = 1
_HEADER = struct.Struct("<4sIQ8d")


def _pack(field: ComplexField, p: ModelParams, w: WaveParams) -> bytes:
    g = field.grid
    head = _HEADER.pack(MAGIC, VERSION, g.N, g.a, g.b,
                        p.lam, p.zeta, p.beta, p.sigma, w.omega, w.c)
    payload = np.empty(2 * g.N, dtype="<f8")
    payload[0::2] = field.values.real
    payload[1::2] = field.values.imag
    return head + payload.tobytes()


def write_profile(path, field: ComplexField, p: ModelParams, w: WaveParams) -> None:
    Path(path).write_bytes(_pack(field, p, w))


def write_snapshot(path, field: ComplexField, p: ModelParams, w: WaveParams,
                   t: float) -> None:
    Path(path).write_bytes(_pack(field, p, w) + struct.pack("<d", t))


def _read(path, trailing_time: bool):
    raw = Path(path).read_bytes()
    if len(raw) < 4 or raw[:4] != MAGIC:
        raise BadMagic(f"{path}: not an FNLS profile file")
    if len(raw) < _HEADER.size:
        raise TruncatedFile(f"{path}: header incomplete")
    magic, version, N, a, b, lam, zeta, beta, sigma, omega, c = \
        _HEADER.unpack_from(raw)
    if version != VERSION:
        raise UnsupportedVersion(f"{path}: format version {version}")
    need = _HEADER.size + 16 * N + (8 if trailing_time else 0)
    if len(raw) < need:
        raise TruncatedFile(f"{path}: expected {need} bytes, found {len(raw)}")
    flat = np.frombuffer(raw, dtype="<f8", count=2 * N, offset=_HEADER.size)
    values = flat[0::2] + 1j * flat[1::2]
    field = ComplexField(Grid(a, b, N), values)
    p = ModelParams(lam=lam, zeta=zeta, beta=beta, sigma=sigma)
    w = WaveParams(omega=omega, c=c)
    if trailing_time:
        (t,) = struct.unpack_from("<d", raw, _HEADER.size + 16 * N)
        return field, p, w, t
    return field, p, w


def read_profile(path) -> Tuple[ComplexField, ModelParams, WaveParams]:
    return _read(path, trailing_time=False)


def read_snapshot(path) -> Tuple[ComplexField, ModelParams, WaveParams, float]:
    return _read(path, trailing_time=True)


# --- CSV artifacts (15 significant digits, '.' decimal, '\n' line ends) -----

def write_diagnostics_csv(path, rows: Iterable[InvariantSnapshot]) -> None:
    lines = [InvariantSnapshot.CSV_HEADER]
    lines.extend(row.csv_row() for row in rows)
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def write_xy(path, x: Sequence[float], y: Sequence[float],
             header: Optional[str] = None) -> None:
    lines = [] if header is None else [header]
    lines.extend(f"{fmt15(a)},{fmt15(b)}" for a, b in zip(x, y))
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def write_xyz(path, x, t, z, header: Optional[str] = None) -> None:
    """Three-column surface rows (x, t, value)."""
    lines = [] if header is None else [header]
    lines.extend(f"{fmt15(a)},{fmt15(b)},{fmt15(c)}"
                 for a, b, c in zip(x, t, z))
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def write_scan_csv(path, scan) -> None:
    """omega,d,d2,flag rows; d2 is blank on the two endpoint rows."""
    lines = ["omega,d,d2,flag"]
    n = len(scan.omegas)
    for i in range(n):
        d2 = ""
        if 1 <= i <= n - 2 and np.isfinite(scan.d2[i - 1]):
            d2 = fmt15(scan.d2[i - 1])
        flag = "failed" if i in scan.failed else "ok"
        dval = fmt15(scan.d[i]) if np.isfinite(scan.d[i]) else ""
        lines.append(f"{fmt15(scan.omegas[i])},{dval},{d2},{flag}")
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def write_trace_csv(path, trace) -> None:
    lines = ["n,error,stab,res"]
    for n in range(trace.iterations):
        lines.append(f"{n + 1},{fmt15(trace.error[n])},"
                     f"{fmt15(trace.stab[n])},{fmt15(trace.res[n])}")
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


# --- manifest ----------------------------------------------------------------

def sha256_file(path) -> str:
    h = hashlib.sha256()
    h.update(Path(path).read_bytes())
    return h.hexdigest()


def write_manifest(path, entries: List[Tuple[str, str]],
                   artifacts: Sequence[Path] = ()) -> None:
    """Line-oriented `key: value` text; every artifact listed with its hash."""
    lines = [f"{k}: {v}" for k, v in entries]
    for art in artifacts:
        art = Path(art)
        lines.append(f"artifact: {art.name} sha256={sha256_file(art)}")
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")
