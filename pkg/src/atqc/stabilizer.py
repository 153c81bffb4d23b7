"""CSS stabilizer codes assembled from surface complexes.

Convention: X-type checks sit on faces (row f of hx = face boundary) and
Z-type checks on vertices (row v of hz = vertex star), so d_x is the
primal-graph distance and d_z the dual-graph distance.  Logical X
operators are primal cycles, logical Z operators dual cycles, both over
the shared edge index, normalized so the symplectic pairing matrix is the
identity.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO

from .binmat import BinaryMatrix, parity, support
from .complexes import SurfaceComplex
from .errors import IntegrityError, InputError
from .homology import boundary_matrices, cycle_cocycle_bases

ALIST = "alist"
DENSE_TEXT = "dense-text"
JSON_FORMAT = "json"
EXPORT_FORMATS = (ALIST, DENSE_TEXT, JSON_FORMAT)


@dataclass(frozen=True)
class CssCode:
    """Hx/Hz parity-check pair with logical operator bases.

    ``logical_x``/``logical_z`` are bitmasks over the dense edge index
    (``edge_ids`` gives the id for each bit position).
    """

    n: int
    k: int
    genus: int
    hx: BinaryMatrix
    hz: BinaryMatrix
    logical_x: tuple[int, ...]
    logical_z: tuple[int, ...]
    edge_ids: tuple[int, ...]
    vertex_ids: tuple[int, ...]
    face_ids: tuple[int, ...]
    source_label: str = ""
    warnings: tuple[str, ...] = field(default=())

    def logical_x_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.edge_ids[i] for i in support(m)) for m in self.logical_x)

    def logical_z_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.edge_ids[i] for i in support(m)) for m in self.logical_z)


def build_css(c: SurfaceComplex) -> CssCode:
    """Face checks from d2^T, vertex checks from d1, logicals from tree/co-tree."""
    cc = boundary_matrices(c)
    hx = cc.d2.transpose()
    hz = cc.d1
    n = len(cc.edge_ids)
    k = n - hx.rank() - hz.rank()
    if k != 2 * c.genus:
        raise IntegrityError(
            f"k = n - rank(hx) - rank(hz) = {k}, but genus {c.genus} demands {2 * c.genus}"
        )
    cycles, cocycles = cycle_cocycle_bases(c)
    for i, cyc in enumerate(cycles):
        for j, coc in enumerate(cocycles):
            if parity(cyc & coc) != (1 if i == j else 0):
                raise IntegrityError("logical symplectic pairing is not the identity")
    warnings = []
    zero_rows = [f for f, row in zip(cc.face_ids, hx.data) if row == 0]
    if zero_rows:
        warnings.append(
            f"degenerate complex: face(s) {zero_rows} have zero X-check rows"
        )
    return CssCode(
        n=n,
        k=k,
        genus=c.genus,
        hx=hx,
        hz=hz,
        logical_x=tuple(cycles),
        logical_z=tuple(cocycles),
        edge_ids=cc.edge_ids,
        vertex_ids=cc.vertex_ids,
        face_ids=cc.face_ids,
        source_label=c.label,
        warnings=tuple(warnings),
    )


def logical_basis(code: CssCode) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return code.logical_x, code.logical_z


@dataclass(frozen=True)
class StabilizerReport:
    n: int
    k: int
    independent_generators: int
    expected_generators: int
    commutes: bool
    x_product_trivial: bool
    z_product_trivial: bool


def verify_stabilizers(code: CssCode) -> StabilizerReport:
    """Check the stabilizer algebra; any failure is a hard error with a witness."""
    for i, xrow in enumerate(code.hx.data):
        for j, zrow in enumerate(code.hz.data):
            if parity(xrow & zrow):
                raise IntegrityError(
                    f"X check on face {code.face_ids[i]} anticommutes with Z check "
                    f"on vertex {code.vertex_ids[j]}"
                )
    x_product = 0
    for row in code.hx.data:
        x_product ^= row
    z_product = 0
    for row in code.hz.data:
        z_product ^= row
    if x_product:
        raise IntegrityError("product of all face operators is not the identity")
    if z_product:
        raise IntegrityError("product of all vertex operators is not the identity")
    independent = code.hx.rank() + code.hz.rank()
    expected = len(code.vertex_ids) + len(code.face_ids) - 2
    if independent != expected:
        raise IntegrityError(
            f"{independent} independent generators, expected |V|+|F|-2 = {expected}"
        )
    return StabilizerReport(
        n=code.n,
        k=code.k,
        independent_generators=independent,
        expected_generators=expected,
        commutes=True,
        x_product_trivial=True,
        z_product_trivial=True,
    )


# -- parity-check serialization ---------------------------------------------


def _select_matrix(code: CssCode, matrix: str) -> BinaryMatrix:
    if matrix == "hx":
        return code.hx
    if matrix == "hz":
        return code.hz
    raise InputError(f"matrix must be 'hx' or 'hz', got {matrix!r}")


def write_alist(m: BinaryMatrix, sink: IO[str]) -> None:
    """MacKay alist: columns first, 1-indexed, zero-padded to the max weight."""
    cols = [[] for _ in range(m.cols)]
    rows = []
    for i, word in enumerate(m.data):
        row = support(word)
        rows.append(row)
        for j in row:
            cols[j].append(i)
    max_col = max((len(c) for c in cols), default=0)
    max_row = max((len(r) for r in rows), default=0)
    lines = [
        f"{m.cols} {m.rows}",
        f"{max_col} {max_row}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
    ]
    for c in cols:
        padded = [i + 1 for i in c] + [0] * (max_col - len(c))
        lines.append(" ".join(map(str, padded)))
    for r in rows:
        padded = [j + 1 for j in r] + [0] * (max_row - len(r))
        lines.append(" ".join(map(str, padded)))
    sink.write("\n".join(lines) + "\n")


def read_alist(source: IO[str]) -> BinaryMatrix:
    tokens = source.read().split()
    it = iter(tokens)

    def take() -> int:
        return int(next(it))

    n, m_rows = take(), take()
    take(), take()  # max weights, implied by the index lists
    col_wts = [take() for _ in range(n)]
    row_wts = [take() for _ in range(m_rows)]
    data = [0] * m_rows
    max_col = max(col_wts, default=0)
    max_row = max(row_wts, default=0)
    for j in range(n):
        entries = [take() for _ in range(max_col)] if max_col else []
        for i in entries[: col_wts[j]]:
            data[i - 1] |= 1 << j
    # the row section repeats the column section; read it for validation
    for i in range(m_rows):
        entries = [take() for _ in range(max_row)] if max_row else []
        for j in entries[: row_wts[i]]:
            data[i] |= 1 << (j - 1)
    return BinaryMatrix(m_rows, n, data)


def write_dense_text(m: BinaryMatrix, sink: IO[str]) -> None:
    for word in m.data:
        sink.write("".join("1" if (word >> j) & 1 else "0" for j in range(m.cols)))
        sink.write("\n")


def read_dense_text(source: IO[str]) -> BinaryMatrix:
    lines = [line.strip() for line in source if line.strip()]
    if not lines:
        raise InputError("empty dense-text matrix")
    width = len(lines[0])
    rows = []
    for line in lines:
        if len(line) != width or set(line) - {"0", "1"}:
            raise InputError("dense-text rows must be equal-length strings of 0/1")
        rows.append([int(ch) for ch in line])
    return BinaryMatrix.from_rows(rows, width)


def code_to_dict(code: CssCode) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "genus": code.genus,
        "hx": code.hx.to_lists(),
        "hz": code.hz.to_lists(),
        "label": code.source_label,
    }


def export_checks(code: CssCode, format: str, sink: IO[str], matrix: str = "hz") -> None:
    """Serialize parity checks; alist/dense-text take one matrix, json both."""
    if format == ALIST:
        write_alist(_select_matrix(code, matrix), sink)
    elif format == DENSE_TEXT:
        write_dense_text(_select_matrix(code, matrix), sink)
    elif format == JSON_FORMAT:
        json.dump(code_to_dict(code), sink, indent=1, sort_keys=True)
        sink.write("\n")
    else:
        raise InputError(f"unknown export format {format!r}; choose from {EXPORT_FORMATS}")
