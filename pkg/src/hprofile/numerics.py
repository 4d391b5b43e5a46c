"""Quadrature for the singular profile weight, small eigensolvers, bisection.

The H-perimeter weight rho^{2n} (1-rho^2)^{-1/2} drho becomes, under
s = rho^2, the Jacobi weight (1/2) s^{n-1/2} (1-s)^{-1/2} ds on [0, 1]; a
Gauss-Jacobi rule then integrates it with spectral accuracy despite the
endpoint singularity and the high-order zero at the origin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .geometry import ProfileParams

__all__ = [
    "QuadratureRule",
    "gauss_jacobi_rule",
    "profile_rule",
    "integrate_profile_radial",
    "sym_tridiag_eigen",
    "hessenberg_qr_eigenvalues",
    "bisect_root",
]

_MAX_DENSE_DIM = 1000


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Jacobi rule for int_0^1 (1-x)^alpha x^beta f(x) dx."""

    nodes: np.ndarray     # strictly inside (0, 1), increasing
    weights: np.ndarray   # strictly positive
    alpha: float          # exponent at x = 1
    beta: float           # exponent at x = 0
    order: int

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, f(self.nodes)))

    @property
    def total_mass(self) -> float:
        """Beta(beta+1, alpha+1), the integral of the bare weight."""
        return math.exp(ln_beta(self.beta + 1.0, self.alpha + 1.0))


def ln_beta(p: float, q: float) -> float:
    return math.lgamma(p) + math.lgamma(q) - math.lgamma(p + q)


def _jacobi_recurrence(N: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray, float]:
    """Three-term recurrence (diag, offdiag) for weight (1-x)^a (1+x)^b on [-1, 1]."""
    k = np.arange(N, dtype=float)
    apb = a + b
    d = np.empty(N)
    d[0] = (b - a) / (apb + 2.0)
    if N > 1:
        kk = k[1:]
        d[1:] = (b * b - a * a) / ((2 * kk + apb) * (2 * kk + apb + 2.0))
    e = np.empty(max(N - 1, 0))
    if N > 1:
        e[0] = math.sqrt(4.0 * (a + 1) * (b + 1) / ((apb + 2.0) ** 2 * (apb + 3.0)))
        kk = k[2:]
        e[1:] = np.sqrt(4.0 * kk * (kk + a) * (kk + b) * (kk + apb)
                        / (((2 * kk + apb) ** 2 - 1.0) * (2 * kk + apb) ** 2))
    mu0 = 2.0 ** (apb + 1.0) * math.exp(ln_beta(a + 1.0, b + 1.0))
    return d, e, mu0


def gauss_jacobi_rule(N: int, alpha: float, beta: float) -> QuadratureRule:
    """N-point rule for int_0^1 (1-x)^alpha x^beta f(x) dx (Golub-Welsch)."""
    if N < 1:
        raise ValueError("need at least one node")
    if alpha <= -1.0 or beta <= -1.0:
        raise ValueError("Jacobi exponents must exceed -1")
    # on [-1,1] the roles swap: (1-t)^alpha at t=1 maps to x=1, (1+t)^beta to x=0
    d, e, mu0 = _jacobi_recurrence(N, alpha, beta)
    if N == 1:
        t = d
        w = np.array([mu0])
    else:
        t, V = eigh_tridiagonal(d, e)
        w = mu0 * V[0, :] ** 2
    x = 0.5 * (t + 1.0)
    w01 = w * 0.5 ** (alpha + beta + 1.0)
    order = np.argsort(x)
    return QuadratureRule(nodes=x[order], weights=w01[order],
                          alpha=alpha, beta=beta, order=N)


def profile_rule(params: ProfileParams, N: int = 64) -> QuadratureRule:
    """Rule matched to the radial profile weight under s = rho^2."""
    return gauss_jacobi_rule(N, -0.5, params.n - 0.5)


def integrate_profile_radial(f: Callable[[np.ndarray], np.ndarray],
                             rule: QuadratureRule,
                             params: ProfileParams,
                             per_hemisphere: bool = False) -> float:
    """int_0^1 f(rho) rho^{2n} (1-rho^2)^{-1/2} drho.

    With per_hemisphere=True the result is multiplied by sphere_area/2, the
    measure of one hemisphere's angular factor.
    """
    rho = np.sqrt(rule.nodes)
    val = 0.5 * float(np.dot(rule.weights, f(rho)))
    if per_hemisphere:
        val *= params.sphere_area / 2.0
    return val


def sym_tridiag_eigen(diagonal: Sequence[float], offdiag: Sequence[float],
                      count: int) -> tuple[np.ndarray, np.ndarray]:
    """Lowest `count` eigenpairs of a symmetric tridiagonal matrix.

    Returns (values ascending, vectors as columns).
    """
    d = np.asarray(diagonal, dtype=float)
    e = np.asarray(offdiag, dtype=float)
    if e.shape[0] != d.shape[0] - 1:
        raise ValueError("offdiag must have length len(diagonal) - 1")
    if not 1 <= count <= d.shape[0]:
        raise ValueError("count out of range")
    vals, vecs = eigh_tridiagonal(d, e, select="i", select_range=(0, count - 1))
    return vals, vecs


def hessenberg_qr_eigenvalues(A: np.ndarray) -> np.ndarray:
    """Eigenvalues of a dense real or complex matrix (Hessenberg + shifted QR)."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if A.shape[0] > _MAX_DENSE_DIM:
        raise ValueError(f"dense eigensolver capped at dim {_MAX_DENSE_DIM}")
    vals = np.linalg.eigvals(A)
    return vals[np.lexsort((vals.imag, vals.real))]


def bisect_root(f: Callable[[float], float], lo: float, hi: float,
                tol: float = 1e-10) -> float:
    """Root of f in [lo, hi] by bisection; requires a sign change."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)
