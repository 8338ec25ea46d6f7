"""Floating-point check that d of the tautological 1-form is a commutator.

On GL_n the matrix-valued 1-form Theta(g)(dg) = g^-1 dg satisfies

    d Theta (v, w) = [Theta(w), Theta(v)]

for constant tangent directions v, w.  The left side is computed by second
order central differences of the ordinary exterior derivative, the right
side exactly from two matrix products, and the two are compared entrywise.
At the identity this reduces to d Theta (Z0, Z1) = [Z1, Z0], which is the
sign bridge behind the exact coboundary: d t (Z0, Z1) = -t([Z0, Z1]) for
every left-invariant 1-form t.  one_form_sign_check verifies that exact
statement degree by degree against the structure constants.
"""

import numpy as np

from .ce_complex import ce_differential, index_tuples
from .errors import DimensionMismatch, SingularMatrix

DET_THRESHOLD = 1e-8
DEFAULT_TOL = 1e-6
DEFAULT_STEP = 1e-4
PERTURBATION = 0.1


class MatrixGroupPoint:
    """A safely invertible real n x n matrix."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        entries = np.asarray(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatch("group point must be a square matrix")
        if abs(np.linalg.det(entries)) <= DET_THRESHOLD:
            raise SingularMatrix("matrix determinant too close to zero")
        self.n = entries.shape[0]
        self.entries = entries

    def __repr__(self):
        return "MatrixGroupPoint(n=%d)" % self.n


class NumericCheckResult:
    """Outcome of a sampled numeric identity check."""

    __slots__ = ("max_abs_error", "step", "samples", "passed", "tol", "resampled")

    def __init__(self, max_abs_error, step, samples, tol, resampled=0):
        self.max_abs_error = float(max_abs_error)
        self.step = float(step)
        self.samples = int(samples)
        self.tol = float(tol)
        self.passed = self.max_abs_error <= self.tol
        self.resampled = int(resampled)

    def __repr__(self):
        return "NumericCheckResult(max_abs_error=%.3e, step=%g, samples=%d, passed=%r)" % (
            self.max_abs_error,
            self.step,
            self.samples,
            self.passed,
        )


def _as_array(g):
    if isinstance(g, MatrixGroupPoint):
        return g.entries
    g = np.asarray(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise DimensionMismatch("group point must be a square matrix")
    if abs(np.linalg.det(g)) <= DET_THRESHOLD:
        raise SingularMatrix("matrix determinant too close to zero")
    return g


def theta(g, dg):
    """The tautological form at g applied to a tangent matrix: g^-1 dg."""
    g = _as_array(g)
    dg = np.asarray(dg, dtype=float)
    if dg.shape != g.shape:
        raise DimensionMismatch("tangent matrix shape %r, expected %r" % (dg.shape, g.shape))
    return np.linalg.solve(g, dg)


def numeric_dtheta(g, v, w, step=DEFAULT_STEP):
    """Central-difference d Theta (v, w) at g, for constant directions v, w.

    Second order: the truncation error scales as step squared.
    """
    g = _as_array(g)
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    d_v = (theta(g + step * v, w) - theta(g - step * v, w)) / (2.0 * step)
    d_w = (theta(g + step * w, v) - theta(g - step * w, v)) / (2.0 * step)
    return d_v - d_w


def commutator_dtheta(g, v, w):
    """The exact right side [Theta(w), Theta(v)] at g."""
    tv = theta(g, v)
    tw = theta(g, w)
    return tw @ tv - tv @ tw


def maurer_cartan_check(n, samples=100, tol=DEFAULT_TOL, step=DEFAULT_STEP, seed=0):
    """Compare numeric d Theta with the exact commutator on random samples.

    Sample points are I + 0.1 * R with R uniform in [-1, 1]; draws too close
    to the singular locus are rejected and redrawn (counted in the result).
    The draw sequence depends only on the seed, not on the step, so the
    same samples can be re-run at several steps.
    """
    rng = np.random.default_rng(seed)
    max_err = 0.0
    resampled = 0
    for _ in range(samples):
        while True:
            g = np.eye(n) + PERTURBATION * rng.uniform(-1.0, 1.0, size=(n, n))
            if abs(np.linalg.det(g)) > DET_THRESHOLD:
                break
            resampled += 1
        v = rng.uniform(-1.0, 1.0, size=(n, n))
        w = rng.uniform(-1.0, 1.0, size=(n, n))
        err = np.max(np.abs(numeric_dtheta(g, v, w, step) - commutator_dtheta(g, v, w)))
        if err > max_err:
            max_err = float(err)
    return NumericCheckResult(max_err, step, samples, tol, resampled)


def one_form_sign_check(L):
    """Exact check that d t[m] (e_i, e_j) = -c^m_ij for all m and i < j.

    Returns None when every entry matches, else the first counterexample
    (m, i, j, got, expected).
    """
    cb = ce_differential(L, 1)
    rows = index_tuples(L.dim, 2)
    for r, (i, j) in enumerate(rows):
        for m in range(1, L.dim + 1):
            got = cb.matrix.entry(r, m - 1)
            expected = -L.structure_constant(i, j, m)
            if got != expected:
                return (m, i, j, got, expected)
    return None
