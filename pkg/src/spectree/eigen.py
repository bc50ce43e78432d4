"""Deterministic symmetric eigensolver and eigenvalue multisets.

The solver is a cyclic Jacobi iteration: fixed (p, q) sweep order, sweeps
until the off-diagonal Frobenius norm drops below 1e-12 * (1 + ||M||_F),
hard cap of 100 sweeps. No randomness, no external LAPACK dependence, so
repeated runs give bitwise identical output.

A Spectrum is an eigenvalue multiset stored as (value, multiplicity) pairs
in strictly increasing value order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EIG_TOL",
    "GROUP_TOL",
    "INT_TOL",
    "Spectrum",
    "eigenvalues",
    "eigensystem",
    "min_eigenvalue",
    "second_smallest",
    "group_spectrum",
    "spectrum_from_pairs",
    "spectra_equal",
    "scale",
    "union_with_multiplicity",
    "spectrum_is_integral",
    "spectrum_to_dict",
    "spectrum_from_dict",
    "spectrum_to_json",
    "spectrum_from_json",
]

EIG_TOL = 1e-9    # default tolerance for eigenvalue assertions
GROUP_TOL = 1e-7  # default tolerance for merging near-equal eigenvalues
INT_TOL = 1e-6    # threshold for calling a float an integer

_SWEEP_TOL = 1e-12
_MAX_SWEEPS = 100


def _offdiag_norm(a: np.ndarray) -> float:
    # summing the off-diagonal entries directly avoids the cancellation a
    # full-norm-minus-diagonal formula would hit once the matrix is nearly
    # diagonal
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return math.sqrt(float((b * b).sum()))


def _jacobi(mat, want_vectors: bool):
    a = np.array(mat, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("need a square matrix")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    v = np.eye(n) if want_vectors else None
    thresh = _SWEEP_TOL * (1.0 + math.sqrt(float((a * a).sum())))
    for _sweep in range(_MAX_SWEEPS):
        if _offdiag_norm(a) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    else:
        if _offdiag_norm(a) > thresh:
            raise RuntimeError(f"Jacobi did not converge in {_MAX_SWEEPS} sweeps")
    diag = np.diag(a).copy()
    order = np.argsort(diag, kind="stable")
    if v is None:
        return diag[order], None
    return diag[order], v[:, order]


def eigenvalues(m, tol: float = EIG_TOL) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, with multiplicity.

    The iteration drives the off-diagonal mass to 1e-12 * (1 + ||M||_F),
    which is far inside any tol >= 1e-11 a caller may rely on.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    vals, _ = _jacobi(m, want_vectors=False)
    return vals


def eigensystem(m, tol: float = EIG_TOL):
    """(values, vectors): ascending eigenvalues and orthonormal columns."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    return _jacobi(m, want_vectors=True)


def min_eigenvalue(m) -> float:
    return float(eigenvalues(m)[0])


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as (value, multiplicity) pairs, values strictly
    increasing."""

    pairs: tuple[tuple[float, int], ...]
    group_tol: float = GROUP_TOL

    def __post_init__(self):
        last = None
        for v, mult in self.pairs:
            if mult < 1 or int(mult) != mult:
                raise ValueError("multiplicities must be positive integers")
            if last is not None and not v > last:
                raise ValueError("values must be strictly increasing")
            last = v

    def values(self) -> np.ndarray:
        """Flattened ascending eigenvalue list, respecting multiplicity."""
        if not self.pairs:
            return np.zeros(0)
        vs, ms = zip(*self.pairs)
        return np.repeat(np.array(vs, dtype=np.float64), np.array(ms, dtype=np.int64))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.pairs)

    def __repr__(self):
        inner = ", ".join(f"{v:.6g}^{m}" for v, m in self.pairs)
        return f"Spectrum({inner})"


def spectrum_from_pairs(pairs, group_tol: float = GROUP_TOL) -> Spectrum:
    """Merge (value, multiplicity) pairs whose values chain within group_tol;
    a merged group takes its multiplicity-weighted mean value."""
    items = sorted((float(v), int(m)) for v, m in pairs if int(m) > 0)
    merged: list[list[float]] = []
    for v, m in items:
        if merged and v - merged[-1][2] <= group_tol:
            tot, wsum, _ = merged[-1]
            merged[-1] = [tot + m, wsum + v * m, v]
        else:
            merged.append([m, v * m, v])
    out = tuple((wsum / tot, int(tot)) for tot, wsum, _ in merged)
    return Spectrum(pairs=out, group_tol=group_tol)


def group_spectrum(values, group_tol: float = GROUP_TOL) -> Spectrum:
    """Group an ascending eigenvalue array into a Spectrum."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("need a 1-d value list")
    if np.any(np.diff(arr) < 0):
        raise ValueError("values must be ascending")
    return spectrum_from_pairs([(float(v), 1) for v in arr], group_tol)


def second_smallest(s: Spectrum) -> float:
    """Second entry of the flattened list, counting multiplicity."""
    if s.dimension < 2:
        raise ValueError("need at least two eigenvalues")
    v0, m0 = s.pairs[0]
    if m0 >= 2:
        return float(v0)
    return float(s.pairs[1][0])


def spectra_equal(a: Spectrum, b: Spectrum, tol: float) -> bool:
    """Multiset equality: same dimension and sorted values pairwise within
    tol."""
    va, vb = a.values(), b.values()
    if va.shape != vb.shape:
        return False
    if va.size == 0:
        return True
    return float(np.max(np.abs(va - vb))) <= tol


def scale(s: Spectrum, c: float) -> Spectrum:
    """Spectrum of c*M given the spectrum of M, c >= 0."""
    if c < 0:
        raise ValueError("scale factor must be >= 0")
    return spectrum_from_pairs([(v * c, m) for v, m in s.pairs], s.group_tol)


def union_with_multiplicity(parts) -> Spectrum:
    """Multiset union of (Spectrum, weight) parts; each part's
    multiplicities are multiplied by its integer weight >= 1."""
    pairs = []
    gt = 0.0
    for spec, w in parts:
        if int(w) != w or w < 1:
            raise ValueError("weights must be positive integers")
        gt = max(gt, spec.group_tol)
        pairs.extend((v, m * int(w)) for v, m in spec.pairs)
    if not pairs:
        raise ValueError("union of nothing")
    return spectrum_from_pairs(pairs, gt)


def spectrum_is_integral(s: Spectrum, tol: float = INT_TOL) -> bool:
    return all(abs(v - round(v)) <= tol for v, _ in s.pairs)


# ---- serialization ----

def spectrum_to_dict(s: Spectrum) -> dict:
    return {"pairs": [[float(v), int(m)] for v, m in s.pairs], "tol": s.group_tol}


def spectrum_from_dict(d: dict) -> Spectrum:
    return Spectrum(
        pairs=tuple((float(v), int(m)) for v, m in d["pairs"]),
        group_tol=float(d["tol"]),
    )


def spectrum_to_json(s: Spectrum) -> str:
    # floats serialize via repr: shortest form that round-trips exactly
    return json.dumps(spectrum_to_dict(s))


def spectrum_from_json(text: str) -> Spectrum:
    return spectrum_from_dict(json.loads(text))
