"""Shared helpers for the test suite: seeded random graphs with guards."""

import numpy as np

from gsptk import Graph, GsptkError, basis_from_graph


def er_digraph(rng, n, p=0.55):
    """Uniform-weight Erdos-Renyi digraph without self loops."""
    a = (rng.random((n, n)) < p).astype(np.complex128)
    np.fill_diagonal(a, 0.0)
    return Graph(a)


def random_basis_graph(rng, n, p=0.55, max_cond=1e6, need_y0=False, max_tries=500):
    """An ER digraph whose shift is safely diagonalizable, plus its basis.

    Regenerates until the eigenvalues are distinct, the eigenvector matrix is
    well conditioned, and (optionally) the first GFT column has no tiny
    entries.
    """
    for _ in range(max_tries):
        g = er_digraph(rng, n, p)
        try:
            b = basis_from_graph(g, tol=1e-6)
        except GsptkError:
            # repeated eigenvalues or an eigenbasis too ill conditioned to invert
            continue
        if np.linalg.cond(b.igft) > max_cond:
            continue
        if need_y0 and np.min(np.abs(b.gft[:, 0])) < 1e-4:
            continue
        return g, b
    raise RuntimeError(f"no suitable random graph found for n={n}")
