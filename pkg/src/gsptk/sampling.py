"""Sampling-set selection and perfect recovery of bandlimited graph signals.

Two exact routes are provided for a signal whose spectrum is supported on a
band of K indices.

Vertex route: the out-of-band rows of the GFT annihilate the signal; Gauss-
Jordan elimination of that (N-K) x N block designates K free variables (the
sampling set) and expresses each pivot variable as a row of ``S`` times the
free ones, so the signal is rebuilt from its K kept samples by one matrix
multiply.

Spectral route: sampling in the vertex domain is spectral filtering by
P(M) = gft diag(delta) igft. Choosing K linearly independent rows of the
band columns of the inverse GFT guarantees the band block P(M)_K has K
linearly independent rows; inverting that K x K block recovers the in-band
spectrum from the transform of the zero-filled sampled signal.

Both selections use deterministic Gauss pivoting (largest magnitude, lowest
index) so plans are reproducible; a caller-forced sampling indicator is
accepted for reproducing published selections.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import numkit
from .errors import (
    DimensionMismatchError,
    InfeasibleError,
    NotBandlimitedError,
    ParseError,
    SizeMismatchError,
)
from .graphs import Domain, Graph, GraphSignal
from .spectral import SpectralBasis, basis_explicit, gft_apply, igft_apply

__all__ = [
    "BandSpec",
    "SamplingPlan",
    "band_project",
    "vertex_plan",
    "vertex_recover",
    "spectral_plan",
    "spectral_recover",
    "sampling_operator",
    "sample",
    "upsample",
    "plan_equivalent",
    "write_plan",
    "read_plan",
]


@dataclass(frozen=True)
class BandSpec:
    """Ascending set of spectral indices carrying the signal's support."""

    support: tuple[int, ...]

    def __post_init__(self):
        sup = tuple(int(i) for i in self.support)
        if len(sup) == 0:
            raise ValueError("band support must be nonempty")
        if sorted(set(sup)) != list(sup):
            raise ValueError("band support must be strictly ascending and unique")
        if sup[0] < 0:
            raise ValueError("band indices must be nonnegative")
        object.__setattr__(self, "support", sup)

    @property
    def k(self) -> int:
        return len(self.support)

    def complement(self, n: int) -> tuple[int, ...]:
        inside = set(self.support)
        return tuple(i for i in range(n) if i not in inside)


@dataclass(frozen=True)
class SamplingPlan:
    """A sampling indicator plus the precomputed recovery data.

    Vertex plans carry ``S`` with ``free_idx``/``pivot_idx``; spectral plans
    carry the invertible block ``pmkk`` with the ``selected_rows`` it was cut
    from, plus the basis needed to transform the zero-filled samples. ``cond``
    is the condition number of the recovery matrix (diagnostic only).
    """

    domain: Domain
    delta: np.ndarray
    band: BandSpec
    free_idx: tuple[int, ...] = ()
    pivot_idx: tuple[int, ...] = ()
    S: np.ndarray | None = None
    selected_rows: tuple[int, ...] = ()
    pmkk: np.ndarray | None = None
    basis: SpectralBasis | None = None
    cond: float = 1.0

    @property
    def n(self) -> int:
        return self.delta.shape[0]

    @property
    def k(self) -> int:
        return self.band.k


def band_project(signal: GraphSignal, band: BandSpec, tol: float = 1e-8) -> np.ndarray:
    """Extract the K in-band entries, verifying the rest are (near) zero."""
    xhat = signal.require(Domain.SPECTRAL)
    _check_band(band, xhat.shape[0])
    outside = band.complement(xhat.shape[0])
    worst = float(np.max(np.abs(xhat[list(outside)]))) if outside else 0.0
    if worst > tol:
        raise NotBandlimitedError(worst, tol)
    return xhat[list(band.support)]


def _check_band(band: BandSpec, n: int) -> None:
    if band.support[-1] >= n:
        raise DimensionMismatchError(
            f"band index {band.support[-1]} out of range for size {n}"
        )


def _delta_from(idx, n: int) -> np.ndarray:
    delta = np.zeros(n, dtype=np.int64)
    delta[list(idx)] = 1
    return delta


def _validate_forced_delta(forced_delta, n: int, k: int) -> tuple[int, ...]:
    d = np.asarray(forced_delta)
    if d.shape != (n,) or not np.all(np.isin(d, (0, 1))):
        raise SizeMismatchError(f"forced delta must be a 0/1 vector of length {n}")
    chosen = tuple(int(i) for i in np.flatnonzero(d))
    if len(chosen) != k:
        raise SizeMismatchError(
            f"forced delta selects {len(chosen)} nodes but the band has size {k}"
        )
    return chosen


def vertex_plan(
    basis: SpectralBasis, band: BandSpec, forced_delta=None, tol: float = 1e-10
) -> SamplingPlan:
    """Choose a vertex-domain sampling set and its pivot-from-free map.

    Row reduces the out-of-band GFT rows; the free columns become the
    sampling set and ``S`` reads off each pivot variable as a combination of
    free variables. With a full band (K = N) every node is kept and ``S`` is
    empty. A forced indicator is honored when its complement indexes an
    invertible square block of the out-of-band rows.
    """
    n = basis.n
    _check_band(band, n)
    k = band.k
    out = band.complement(n)
    g_out = basis.gft[list(out), :]
    if forced_delta is None:
        red = numkit.row_reduce(g_out, tol)
        if red.rank < n - k:
            raise InfeasibleError(
                f"out-of-band GFT rows are rank deficient ({red.rank} < {n - k})"
            )
        pivot_idx, free_idx = red.pivot_cols, red.free_cols
        s = -red.rref[:, list(free_idx)]
    else:
        free_idx = _validate_forced_delta(forced_delta, n, k)
        pivot_idx = tuple(i for i in range(n) if i not in set(free_idx))
        try:
            s = -numkit.solve(g_out[:, list(pivot_idx)], g_out[:, list(free_idx)], tol)
        except numkit.SingularMatrixError as exc:
            raise InfeasibleError(
                f"forced sampling set is not valid for this band: {exc}"
            ) from exc
    cond = float(np.linalg.cond(g_out[:, list(pivot_idx)])) if n - k else 1.0
    return SamplingPlan(
        domain=Domain.VERTEX,
        delta=_delta_from(free_idx, n),
        band=band,
        free_idx=free_idx,
        pivot_idx=pivot_idx,
        S=s,
        basis=basis,
        cond=cond,
    )


def vertex_recover(plan: SamplingPlan, x_s) -> GraphSignal:
    """Rebuild the full vertex signal from its K kept samples.

    ``x_s`` lists the samples at the plan's free indices in ascending index
    order; pivot entries are S @ x_s, scattered back into place.
    """
    if plan.domain is not Domain.VERTEX:
        raise ValueError("plan is not a vertex-domain plan")
    x_s = numkit.as_cvector(x_s, "samples")
    if x_s.shape[0] != plan.k:
        raise SizeMismatchError(f"expected {plan.k} samples, got {x_s.shape[0]}")
    x = np.zeros(plan.n, dtype=np.complex128)
    x[list(plan.free_idx)] = x_s
    if plan.pivot_idx:
        x[list(plan.pivot_idx)] = plan.S @ x_s
    return GraphSignal(x, Domain.VERTEX)


def sampling_operator(basis: SpectralBasis, delta) -> np.ndarray:
    """The spectral filter P(M) = gft @ diag(delta) @ igft of a 0/1 indicator."""
    d = np.asarray(delta, dtype=np.complex128)
    if d.shape != (basis.n,):
        raise DimensionMismatchError(f"delta must have length {basis.n}")
    return basis.gft @ (d[:, None] * basis.igft)


def spectral_plan(
    basis: SpectralBasis, band: BandSpec, forced_delta=None, tol: float = 1e-10
) -> SamplingPlan:
    """Choose a sampling set by picking K independent rows of the band
    columns of the inverse GFT, and precompute the invertible recovery block.

    Such rows always exist (the band columns have full column rank). The
    recovery block rows are taken at the sampled nodes themselves whenever
    that square block is invertible, falling back to deterministic Gauss
    pivoting on the band block of P(M) otherwise.
    """
    n = basis.n
    _check_band(band, n)
    k = band.k
    band_cols = list(band.support)
    igft_k = basis.igft[:, band_cols]
    if forced_delta is None:
        red = numkit.row_reduce(igft_k.T, tol)
        chosen = red.pivot_cols
        if len(chosen) < k:
            raise InfeasibleError(
                f"band columns of the inverse GFT are rank deficient ({red.rank} < {k})"
            )
    else:
        chosen = _validate_forced_delta(forced_delta, n, k)
        if numkit.row_reduce(igft_k[list(chosen), :], tol).rank < k:
            raise InfeasibleError(
                "forced sampling set does not give independent rows of the band columns"
            )
    delta = _delta_from(chosen, n)
    pm_k = sampling_operator(basis, delta)[:, band_cols]
    rows = chosen
    if numkit.row_reduce(pm_k[list(rows), :], tol).rank < k:
        red = numkit.row_reduce(pm_k.T, tol)
        rows = red.pivot_cols
    pmkk = pm_k[list(rows), :]
    return SamplingPlan(
        domain=Domain.SPECTRAL,
        delta=delta,
        band=band,
        selected_rows=tuple(rows),
        pmkk=pmkk,
        basis=basis,
        cond=float(np.linalg.cond(pmkk)),
    )


def spectral_recover(plan: SamplingPlan, x_s) -> GraphSignal:
    """Recover the vertex signal through the spectral route.

    Zero-fill the samples, transform, keep the plan's selected rows, solve
    the K x K block for the in-band spectrum, scatter it into the band, and
    inverse transform.
    """
    if plan.domain is not Domain.SPECTRAL:
        raise ValueError("plan is not a spectral-domain plan")
    x_s = numkit.as_cvector(x_s, "samples")
    if x_s.shape[0] != plan.k:
        raise SizeMismatchError(f"expected {plan.k} samples, got {x_s.shape[0]}")
    x_spl = upsample(x_s, plan.delta)
    xhat_spl = gft_apply(plan.basis, x_spl).values
    xhat_k = numkit.solve(plan.pmkk, xhat_spl[list(plan.selected_rows)])
    xhat = np.zeros(plan.n, dtype=np.complex128)
    xhat[list(plan.band.support)] = xhat_k
    return igft_apply(plan.basis, GraphSignal(xhat, Domain.SPECTRAL))


def sample(signal: GraphSignal, delta) -> np.ndarray:
    """Decimate: keep the entries where the indicator is one, in index order."""
    d = np.asarray(delta)
    x = signal.values
    if d.shape != x.shape:
        raise SizeMismatchError("indicator and signal lengths differ")
    return x[d != 0]


def upsample(x_s, delta) -> GraphSignal:
    """Scatter samples back to the indicator's support, zero-filling the rest."""
    d = np.asarray(delta)
    x_s = numkit.as_cvector(x_s, "samples")
    idx = np.flatnonzero(d)
    if idx.shape[0] != x_s.shape[0]:
        raise SizeMismatchError(
            f"indicator keeps {idx.shape[0]} entries but {x_s.shape[0]} samples given"
        )
    x = np.zeros(d.shape[0], dtype=np.complex128)
    x[idx] = x_s
    return GraphSignal(x, Domain.VERTEX)


def plan_equivalent(basis: SpectralBasis, delta, band: BandSpec, tol: float = 1e-10) -> dict:
    """Test one indicator against both selection rules.

    vertex_ok: the unsampled nodes index an invertible square block of the
    out-of-band GFT rows (valid free-variable choice). spectral_ok: the
    sampled nodes index independent rows of the band columns of the inverse
    GFT. The two verdicts agree for every indicator (complementary minors of
    a matrix and its inverse vanish together).
    """
    n = basis.n
    _check_band(band, n)
    d = np.asarray(delta)
    if d.shape != (n,):
        raise DimensionMismatchError(f"delta must have length {n}")
    keep = tuple(int(i) for i in np.flatnonzero(d))
    drop = tuple(i for i in range(n) if i not in set(keep))
    out = band.complement(n)
    k = band.k
    if len(keep) != k:
        raise DimensionMismatchError(
            f"indicator keeps {len(keep)} nodes but the band has size {k}"
        )
    if n - k == 0:
        vertex_ok = True
    else:
        block = basis.gft[list(out), :][:, list(drop)]
        vertex_ok = numkit.row_reduce(block, tol).rank == n - k
    spectral_ok = (
        numkit.row_reduce(basis.igft[list(keep), :][:, list(band.support)], tol).rank == k
    )
    return {"vertex_ok": vertex_ok, "spectral_ok": spectral_ok}


# ---------------------------------------------------------------------------
# plan file IO


def _matrix_doc(m: np.ndarray):
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def _matrix_from_doc(doc, rows: int, cols: int) -> np.ndarray:
    flat = [complex(re, im) for row in doc for re, im in row]
    return np.array(flat, dtype=np.complex128).reshape(rows, cols)


def write_plan(plan: SamplingPlan, path) -> None:
    doc = {
        "domain": plan.domain.value,
        "delta": [int(v) for v in plan.delta],
        "band": list(plan.band.support),
    }
    if plan.domain is Domain.VERTEX:
        doc["S"] = _matrix_doc(plan.S)
    else:
        doc["pmkk"] = _matrix_doc(plan.pmkk)
        doc["selected_rows"] = list(plan.selected_rows)
        doc["gft"] = _matrix_doc(plan.basis.gft)
        doc["lambda"] = [[float(z.real), float(z.imag)] for z in plan.basis.lam]
    Path(path).write_text(json.dumps(doc) + "\n")


def read_plan(path, graph: Graph | None = None) -> SamplingPlan:
    """Load a plan file. Spectral plans rebuild their basis from the stored
    transform; ``graph`` (when given) validates the basis against its shift."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    try:
        domain = Domain(doc["domain"])
        delta = np.array(doc["delta"], dtype=np.int64)
        band = BandSpec(tuple(doc["band"]))
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"{path}: malformed plan: {exc}") from exc
    n = delta.shape[0]
    free_idx = tuple(int(i) for i in np.flatnonzero(delta))
    if domain is Domain.VERTEX:
        pivot_idx = tuple(i for i in range(n) if i not in set(free_idx))
        return SamplingPlan(
            domain=domain,
            delta=delta,
            band=band,
            free_idx=free_idx,
            pivot_idx=pivot_idx,
            S=_matrix_from_doc(doc["S"], n - band.k, band.k),
        )
    gft = _matrix_from_doc(doc["gft"], n, n)
    lam = np.array([complex(re, im) for re, im in doc["lambda"]])
    if graph is not None:
        basis = basis_explicit(gft, lam, graph)
    else:
        igft = numkit.solve(gft, np.eye(n, dtype=np.complex128))
        from .spectral import BasisSource, SpectralBasis as _SB

        basis = _SB(gft, igft, lam, BasisSource.EXPLICIT)
    return SamplingPlan(
        domain=domain,
        delta=delta,
        band=band,
        selected_rows=tuple(doc["selected_rows"]),
        pmkk=_matrix_from_doc(doc["pmkk"], band.k, band.k),
        basis=basis,
        cond=1.0,
    )
