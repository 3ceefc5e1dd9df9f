"""Graph and graph-signal data model, canonical builders, and file IO.

The adjacency convention follows the shift semantics: entry ``(i, j)`` holds
the weight of the edge j -> i, so ``(A @ x)[i]`` aggregates the in-neighbors
of node i. On the directed cycle this shifts sample ``x[n]`` to node ``n+1``.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BadSizeError, DomainMismatchError, ParseError
from .numkit import as_cmatrix, as_cvector

__all__ = [
    "Domain",
    "GraphKind",
    "Graph",
    "GraphSignal",
    "build",
    "read_graph",
    "write_graph",
    "read_signal",
    "write_signal",
]


class Domain(enum.Enum):
    VERTEX = "vertex"
    SPECTRAL = "spectral"


class GraphKind(enum.Enum):
    RING = "ring"
    STAR = "star"
    PATH = "path"
    EXAMPLE4 = "example4"


@dataclass(frozen=True)
class Graph:
    """Directed weighted graph stored as a dense complex adjacency matrix."""

    adjacency: np.ndarray

    def __post_init__(self):
        a = as_cmatrix(self.adjacency, "adjacency")
        if a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got {a.shape}")
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]


@dataclass(frozen=True)
class GraphSignal:
    """Length-N complex vector tagged with the domain it lives in."""

    values: np.ndarray
    domain: Domain

    def __post_init__(self):
        object.__setattr__(self, "values", as_cvector(self.values, "signal"))
        if not isinstance(self.domain, Domain):
            raise TypeError("domain must be a Domain enum member")

    def require(self, domain: Domain) -> np.ndarray:
        if self.domain is not domain:
            raise DomainMismatchError(
                f"expected a {domain.value}-domain signal, got {self.domain.value}"
            )
        return self.values


# 4-node sampling showcase graph: two cycles sharing edges, diagonalizable,
# with one real Perron frequency, one at -1, and a complex pair.
_EXAMPLE4 = np.array(
    [
        [0, 1, 0, 1],
        [1, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 0, 0],
    ],
    dtype=np.complex128,
)


def build(kind: GraphKind, n: int) -> Graph:
    """Build one of the canonical graph families.

    RING: directed cycle, ones on the subdiagonal plus the (0, n-1) corner.
    STAR: undirected hub at node 0.
    PATH: undirected chain.
    EXAMPLE4: the fixed 4-node directed sampling showcase (requires n == 4).
    """
    if kind is GraphKind.EXAMPLE4:
        if n != 4:
            raise BadSizeError("the example4 graph is defined only for n = 4")
        return Graph(_EXAMPLE4.copy())
    if n < 2:
        raise BadSizeError(f"{kind.value} graph needs n >= 2, got {n}")
    a = np.zeros((n, n), dtype=np.complex128)
    if kind is GraphKind.RING:
        idx = np.arange(n)
        a[idx, (idx - 1) % n] = 1.0
    elif kind is GraphKind.STAR:
        a[0, 1:] = 1.0
        a[1:, 0] = 1.0
    elif kind is GraphKind.PATH:
        idx = np.arange(n - 1)
        a[idx, idx + 1] = 1.0
        a[idx + 1, idx] = 1.0
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(f"unknown graph kind {kind!r}")
    return Graph(a)


def _fmt_complex(z: complex) -> str:
    re, im = float(np.real(z)), float(np.imag(z))
    if im == 0.0:
        return repr(re)
    return f"{re!r}{'+' if im >= 0 else '-'}{abs(im)!r}j"


def _parse_complex(token: str, path, line_no: int, field: int) -> complex:
    try:
        return complex(token.strip())
    except ValueError:
        raise ParseError(
            f"{path}: line {line_no}, field {field}: cannot parse complex value {token!r}"
        ) from None


def write_graph(graph: Graph, path) -> None:
    """Write a graph as canonical edge-list JSON or dense CSV (by extension)."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        rows = [
            ",".join(_fmt_complex(z) for z in row) for row in graph.adjacency
        ]
        _atomic_write(path, "\n".join(rows) + "\n")
        return
    edges = [
        [int(src), int(dst), float(np.real(w)), float(np.imag(w))]
        for (dst, src), w in np.ndenumerate(graph.adjacency)
        if w != 0
    ]
    edges.sort(key=lambda e: (e[0], e[1]))
    _atomic_write(path, json.dumps({"n": graph.n, "edges": edges}, indent=1) + "\n")


def read_graph(path) -> Graph:
    """Read a graph from edge-list JSON or dense CSV (dispatch on extension)."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return _read_graph_csv(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError(f"{path}: graph JSON needs 'n' and 'edges' keys")
    n = doc["n"]
    if not isinstance(n, int) or n <= 0:
        raise ParseError(f"{path}: 'n' must be a positive integer, got {n!r}")
    a = np.zeros((n, n), dtype=np.complex128)
    for i, edge in enumerate(doc["edges"]):
        if not isinstance(edge, list) or len(edge) != 4:
            raise ParseError(f"{path}: edge {i} must be [src, dst, w_re, w_im]")
        src, dst, w_re, w_im = edge
        if not (isinstance(src, int) and isinstance(dst, int)):
            raise ParseError(f"{path}: edge {i}: endpoints must be integers")
        if not (0 <= src < n and 0 <= dst < n):
            raise ParseError(f"{path}: edge {i}: endpoint out of range 0..{n - 1}")
        a[dst, src] = complex(w_re, w_im)
    return Graph(a)


def _read_graph_csv(path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"{path}: empty file")
    n = len(lines)
    a = np.zeros((n, n), dtype=np.complex128)
    for i, line in enumerate(lines):
        tokens = line.split(",")
        if len(tokens) != n:
            raise ParseError(
                f"{path}: line {i + 1}: expected {n} fields, found {len(tokens)}"
            )
        for j, tok in enumerate(tokens):
            a[i, j] = _parse_complex(tok, path, i + 1, j + 1)
    return Graph(a)


def write_signal(signal: GraphSignal, path) -> None:
    doc = {
        "domain": signal.domain.value,
        "values": [[float(z.real), float(z.imag)] for z in signal.values],
    }
    _atomic_write(Path(path), json.dumps(doc, indent=1) + "\n")


def read_signal(path) -> GraphSignal:
    path = Path(path)
    text = path.read_text()
    if not text.strip():
        raise ParseError(f"{path}: empty file")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "domain" not in doc or "values" not in doc:
        raise ParseError(f"{path}: signal JSON needs 'domain' and 'values' keys")
    try:
        domain = Domain(doc["domain"])
    except ValueError:
        raise ParseError(
            f"{path}: domain must be 'vertex' or 'spectral', got {doc['domain']!r}"
        ) from None
    values = []
    for i, pair in enumerate(doc["values"]):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"{path}: value {i} must be a [re, im] pair")
        values.append(complex(pair[0], pair[1]))
    return GraphSignal(np.array(values, dtype=np.complex128), domain)


def _atomic_write(path: Path, text: str) -> None:
    """Write-temp-then-rename so partially written files are never observed."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w") as fh:
        fh.write(text)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)
