"""Signless Laplacian spectra: dense symmetric eigensolvers, quotient
matrices of vertex partitions, equitability and interlacing checks.

Two independent eigenvalue paths are kept on purpose: power iteration for
the radius and cyclic Jacobi for full spectra. They cross-check each other
in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import (
    InvalidInput,
    InvalidMatrix,
    InvalidPartition,
    NoConvergence,
    TooLarge,
)
from .graph_core import Graph

DENSE_CAP = 512
POWER_TOL = 1e-12
POWER_ITERATION_CAP = 10**6
JACOBI_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class SpectrumResult:
    """Eigenvalues in non-increasing order plus the radius."""

    eigenvalues: tuple[float, ...]
    radius: float
    perron_vector: Optional[tuple[float, ...]]
    tol: float


def signless_laplacian(g: Graph) -> np.ndarray:
    """Degree matrix plus adjacency matrix, as a dense float array."""
    n = g.n
    q = np.zeros((n, n))
    for v in range(n):
        q[v, v] = g.degree(v)
        for u in g.neighbors(v):
            q[v, u] = 1.0
    return q


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        for u in g.neighbors(v):
            a[v, u] = 1.0
    return a


def _as_symmetric(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidMatrix(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidMatrix("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise InvalidMatrix("matrix is not exactly symmetric")
    return a


def _support_components(a: np.ndarray) -> list[np.ndarray]:
    """Connected components of the nonzero off-diagonal pattern."""
    n = a.shape[0]
    support = a != 0.0
    np.fill_diagonal(support, False)
    unseen = np.ones(n, dtype=bool)
    comps = []
    while unseen.any():
        start = int(np.argmax(unseen))
        frontier = np.zeros(n, dtype=bool)
        frontier[start] = True
        seen = frontier.copy()
        while frontier.any():
            frontier = (support[frontier].any(axis=0)) & ~seen
            seen |= frontier
        comps.append(np.flatnonzero(seen))
        unseen &= ~seen
    return comps


def spectral_radius(
    m,
    tol: float = POWER_TOL,
    max_iterations: int = POWER_ITERATION_CAP,
) -> tuple[float, np.ndarray]:
    """Largest eigenvalue and a non-negative unit eigenvector via power
    iteration, restarted per connected component of the support pattern.

    Deterministic: the start vector is all ones perturbed by 1e-6 times the
    (global) coordinate index. Convergence is declared when the residual
    ||Mx - lambda x|| drops below tol * max(1, inf-norm of M).
    """
    a = _as_symmetric(m)
    n = a.shape[0]
    norm_inf = float(np.abs(a).sum(axis=1).max()) if n else 0.0
    target = tol * max(1.0, norm_inf)
    best = -math.inf
    best_vec: Optional[np.ndarray] = None
    best_comp: Optional[np.ndarray] = None
    for comp in _support_components(a):
        if len(comp) == 1:
            lam = float(a[comp[0], comp[0]])
            vec = np.ones(1)
        else:
            sub = a[np.ix_(comp, comp)]
            # nonnegative with positive diagonal => primitive, no shift needed
            if sub.min() >= 0.0 and sub.diagonal().min() > 0.0:
                shift = 0.0
            else:
                shift = float(np.abs(sub).sum(axis=1).max())
                sub = sub + shift * np.eye(len(comp))
            x = 1.0 + 1e-6 * comp.astype(float)
            x /= np.linalg.norm(x)
            lam = 0.0
            for _ in range(max_iterations):
                y = sub @ x
                lam = float(x @ y)
                if np.linalg.norm(y - lam * x) <= target:
                    break
                x = y / np.linalg.norm(y)
            else:
                raise NoConvergence(
                    f"power iteration did not converge in {max_iterations} steps"
                )
            lam -= shift
            vec = x
        if lam > best:
            best, best_vec, best_comp = lam, vec, comp
    full = np.zeros(n)
    full[best_comp] = np.abs(best_vec)
    nrm = np.linalg.norm(full)
    if nrm > 0:
        full /= nrm
    return best, full


def eigenvalues_all(
    m,
    tol: float = JACOBI_TOL,
    dense_cap: int = DENSE_CAP,
) -> SpectrumResult:
    """Full spectrum by cyclic Jacobi rotations, sorted non-increasing.

    The off-diagonal norm is driven below tol * max(1, Frobenius norm);
    the absolute 1e-12 of the nominal tolerance is not representable for
    matrices with large norm in float64, so the threshold scales.
    """
    a = _as_symmetric(m).copy()
    n = a.shape[0]
    if n > dense_cap:
        raise TooLarge(f"order {n} exceeds dense cap {dense_cap}")
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    if n > 1:
        offdiag = np.ones((n, n), dtype=bool)
        np.fill_diagonal(offdiag, False)
        for _ in range(_JACOBI_MAX_SWEEPS):
            # measured directly from the off-diagonal entries: the
            # total-minus-diagonal form cancels catastrophically near zero
            off = float(np.linalg.norm(a[offdiag]))
            if off <= threshold:
                break
            pivot_floor = off / (n * n)
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= pivot_floor:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    rp = a[p, :].copy()
                    rq = a[q, :].copy()
                    a[p, :] = c * rp - s * rq
                    a[q, :] = s * rp + c * rq
                    cp = a[:, p].copy()
                    cq = a[:, q].copy()
                    a[:, p] = c * cp - s * cq
                    a[:, q] = s * cp + c * cq
                    a[p, q] = a[q, p] = 0.0
        else:
            raise NoConvergence(f"Jacobi exceeded {_JACOBI_MAX_SWEEPS} sweeps")
    eigs = tuple(sorted((float(x) for x in a.diagonal()), reverse=True))
    return SpectrumResult(eigs, eigs[0], None, tol)


def graph_eigenvalues(g: Graph, tol: float = JACOBI_TOL) -> SpectrumResult:
    return eigenvalues_all(signless_laplacian(g), tol=tol)


def graph_radius(g: Graph, tol: float = POWER_TOL) -> float:
    return spectral_radius(signless_laplacian(g), tol=tol)[0]


# ---------------------------------------------------------------------------
# partitions and quotient matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Ordered partition of 0..n-1 into non-empty blocks."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        canon = tuple(tuple(sorted(set(int(v) for v in b))) for b in blocks)
        if any(not b for b in canon):
            raise InvalidPartition("empty block")
        return cls(canon)

    def validate_cover(self, n: int) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise InvalidPartition("empty block")
            for v in block:
                if v in seen:
                    raise InvalidPartition(f"vertex {v} in two blocks")
                seen.add(v)
        if seen != set(range(n)):
            raise InvalidPartition(f"blocks do not cover 0..{n - 1} exactly")

    def __len__(self) -> int:
        return len(self.blocks)


Entry = Union[Fraction, float]


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-averaged matrix of a partitioned symmetric matrix.

    Entries are exact rationals when the source matrix is integral; its
    eigenvalues are real because it is similar to a symmetric matrix by a
    block-size diagonal scaling.
    """

    entries: tuple[tuple[Entry, ...], ...]
    block_sizes: tuple[int, ...]
    exact: bool

    @property
    def order(self) -> int:
        return len(self.block_sizes)

    def to_array(self) -> np.ndarray:
        return np.array([[float(e) for e in row] for row in self.entries])

    def eigenvalues(self, tol: float = JACOBI_TOL) -> tuple[float, ...]:
        """Real spectrum, non-increasing, via the symmetrized similarity
        D^(1/2) R D^(-1/2) with D = diag(block sizes)."""
        sizes = np.array(self.block_sizes, dtype=float)
        scale = np.sqrt(sizes)
        r = self.to_array()
        sym = (r * scale[:, None]) / scale[None, :]
        sym = (sym + sym.T) / 2.0  # kill roundoff asymmetry
        return eigenvalues_all(sym, tol=tol).eigenvalues

    def radius_exact(self) -> Optional[Fraction]:
        """Largest eigenvalue as an exact rational when closed-form:
        1x1 always; 2x2 when the discriminant is a rational perfect square
        (always for the rank-1 quotients of bi-regular partitions)."""
        if not self.exact:
            return None
        e = self.entries
        if self.order == 1:
            return Fraction(e[0][0])
        if self.order == 2:
            a, b = Fraction(e[0][0]), Fraction(e[0][1])
            c, d = Fraction(e[1][0]), Fraction(e[1][1])
            disc = (a - d) ** 2 + 4 * b * c
            root = _fraction_sqrt(disc)
            if root is None:
                return None
            return (a + d + root) / 2
        return None


def _fraction_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def quotient_matrix(m, partition: Partition) -> QuotientMatrix:
    """Average-row-sum matrix of the blocks of ``m`` under ``partition``."""
    a = _as_symmetric(m)
    n = a.shape[0]
    partition.validate_cover(n)
    integral = bool(np.all(a == np.round(a)))
    rows: list[tuple[Entry, ...]] = []
    for bi in partition.blocks:
        row: list[Entry] = []
        for bj in partition.blocks:
            total = float(a[np.ix_(bi, bj)].sum())
            if integral:
                row.append(Fraction(int(round(total)), len(bi)))
            else:
                row.append(total / len(bi))
        rows.append(tuple(row))
    return QuotientMatrix(tuple(rows), tuple(len(b) for b in partition.blocks), integral)


def is_equitable(g: Graph, partition: Partition) -> bool:
    """True iff every vertex of block i has the same number of neighbors in
    block j, for every ordered pair (i, j)."""
    partition.validate_cover(g.n)
    masks = [0] * len(partition)
    for j, block in enumerate(partition.blocks):
        for v in block:
            masks[j] |= 1 << v
    adj = g.adjacency_masks
    for block in partition.blocks:
        for mask in masks:
            counts = {(adj[v] & mask).bit_count() for v in block}
            if len(counts) > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# interlacing
# ---------------------------------------------------------------------------


def _eigs_of(x) -> list[float]:
    if isinstance(x, SpectrumResult):
        return list(x.eigenvalues)
    return sorted((float(v) for v in x), reverse=True)


def check_interlacing(
    big: Union[SpectrumResult, Sequence[float]],
    small: Union[SpectrumResult, Sequence[float]],
    tol: float = 1e-8,
) -> tuple[bool, bool]:
    """(interlaces, tight) for a length-m sequence against a length-n > m one.

    Interlacing: theta_i >= eta_i >= theta_(n-m+i) for i = 1..m, within tol.
    Tight: some split point k has the first k eta's matching the top theta's
    and the rest matching the bottom ones, within the same tol.
    """
    theta = _eigs_of(big)
    eta = _eigs_of(small)
    n, m_ = len(theta), len(eta)
    if m_ >= n:
        raise InvalidInput(f"small spectrum (len {m_}) must be shorter than big (len {n})")
    interlaces = all(
        theta[i] >= eta[i] - tol and eta[i] >= theta[n - m_ + i] - tol
        for i in range(m_)
    )
    top = [abs(theta[i] - eta[i]) <= tol for i in range(m_)]
    bottom = [abs(theta[n - m_ + i] - eta[i]) <= tol for i in range(m_)]
    tight = False
    for k in range(m_ + 1):
        if all(top[:k]) and all(bottom[k:]):
            tight = True
            break
    return interlaces, tight
