"""Pearson, Spearman, and Kendall correlation coefficients.

Conventions, fixed for testability:

* Pearson uses the population (divide-by-s) covariance and standard
  deviations; the convention cancels in the ratio.
* Spearman is Pearson applied to fractional ranks, ties getting the average
  of the rank positions they span.
* Kendall is tau-a: ``(s_c - s_d) / (s(s-1)/2)`` with tied pairs counting as
  neither concordant nor discordant. No tie renormalization is applied, so
  on heavily tied data (e.g. degree vectors) tau-a is smaller in magnitude
  than tau-b would be.
* A constant input makes every coefficient undefined. That is reported as an
  error (or a ``degenerate`` result), never as 0.

Kendall runs in O(s log s) via merge-sort inversion counting, which matters
for edge-score vectors with tens of thousands of entries.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class ConstantInputError(ValueError):
    """A correlation was requested against a constant vector."""


def _as_sample(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def _check_pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    av = _as_sample(a, "a")
    bv = _as_sample(b, "b")
    if av.size != bv.size:
        raise ValueError(f"length mismatch: {av.size} vs {bv.size}")
    if av.size < 2:
        raise ValueError(f"need at least 2 samples, got {av.size}")
    if np.all(av == av[0]):
        raise ConstantInputError("first input is constant; coefficient undefined")
    if np.all(bv == bv[0]):
        raise ConstantInputError("second input is constant; coefficient undefined")
    return av, bv


def pearson(a, b) -> float:
    """Pearson's r: covariance over the product of standard deviations."""
    av, bv = _check_pair(a, b)
    da = av - av.mean()
    db = bv - bv.mean()
    # r is invariant under positive scaling; normalizing the deviations
    # keeps the variances away from under/overflow for extreme inputs
    da = da / np.abs(da).max()
    db = db / np.abs(db).max()
    var_a = float((da * da).mean())
    var_b = float((db * db).mean())
    cov = float((da * db).mean())
    return cov / math.sqrt(var_a * var_b)


def rank_with_ties(a) -> np.ndarray:
    """Ascending fractional ranks (1-based); ties get the average rank.

    Example: (5, 5, 7) ranks as (1.5, 1.5, 3).
    """
    arr = _as_sample(a, "a")
    s = arr.size
    if s == 0:
        return np.empty(0, dtype=np.float64)
    order = np.argsort(arr, kind="stable")
    sorted_vals = arr[order]
    boundary = np.empty(s, dtype=bool)
    boundary[0] = True
    boundary[1:] = sorted_vals[1:] != sorted_vals[:-1]
    starts = np.flatnonzero(boundary)
    runs = np.diff(np.append(starts, s))
    # a run occupying sorted positions [lo, lo+t) has one-based ranks
    # lo+1..lo+t, whose mean is lo + (t+1)/2
    avg = starts + (runs + 1) / 2.0
    ranks = np.empty(s, dtype=np.float64)
    ranks[order] = np.repeat(avg, runs)
    return ranks


def spearman(a, b) -> float:
    """Spearman's rho: Pearson's r between the rank vectors."""
    av, bv = _check_pair(a, b)
    return pearson(rank_with_ties(av), rank_with_ties(bv))


def _tied_pair_count(sorted_vals: np.ndarray) -> int:
    """Number of tied pairs in a sorted vector: sum of t*(t-1)/2 per run."""
    s = sorted_vals.size
    boundary = np.empty(s, dtype=bool)
    boundary[0] = True
    boundary[1:] = sorted_vals[1:] != sorted_vals[:-1]
    starts = np.flatnonzero(boundary)
    runs = np.diff(np.append(starts, s))
    return int((runs * (runs - 1) // 2).sum())


def _count_inversions(seq: list[float]) -> int:
    """Strict inversions (i < j with seq[i] > seq[j]) by mergesort."""

    def rec(part: list[float]) -> tuple[list[float], int]:
        k = len(part)
        if k <= 1:
            return part, 0
        mid = k // 2
        left, a = rec(part[:mid])
        right, b = rec(part[mid:])
        merged = []
        count = a + b
        i = j = 0
        nl = len(left)
        while i < nl and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                j += 1
                count += nl - i
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return rec(seq)[1]


def concordant_discordant(a, b) -> tuple[int, int]:
    """Exact concordant/discordant pair counts in O(s log s).

    Sort by (a, b); after that every strict descent in b across an a-strict
    pair is a discordant pair, and b is non-decreasing inside each tied-a
    run, so a mergesort inversion count of the permuted b gives s_d exactly.
    """
    av, bv = _check_pair(a, b)
    s = av.size
    order = np.lexsort((bv, av))
    a_sorted = av[order]
    b_sorted = bv[order]
    n0 = s * (s - 1) // 2
    ties_a = _tied_pair_count(a_sorted)
    ties_b = _tied_pair_count(np.sort(bv, kind="stable"))
    # joint runs are contiguous after the (a, b) lexsort
    joint_boundary = np.empty(s, dtype=bool)
    joint_boundary[0] = True
    joint_boundary[1:] = (a_sorted[1:] != a_sorted[:-1]) | (b_sorted[1:] != b_sorted[:-1])
    starts = np.flatnonzero(joint_boundary)
    runs = np.diff(np.append(starts, s))
    ties_joint = int((runs * (runs - 1) // 2).sum())

    s_d = _count_inversions(b_sorted.tolist())
    s_c = n0 - ties_a - (ties_b - ties_joint) - s_d
    return int(s_c), int(s_d)


def kendall(a, b) -> float:
    """Kendall's tau-a: (s_c - s_d) / (s(s-1)/2)."""
    av, bv = _check_pair(a, b)
    s_c, s_d = concordant_discordant(av, bv)
    s = av.size
    return (s_c - s_d) / (s * (s - 1) / 2)


@dataclass(frozen=True)
class CorrelationResult:
    """All three coefficients for one sample pair.

    ``degenerate`` is set (and every value is None) when either input is
    constant; an undefined coefficient is deliberately distinct from 0.
    """
    r: float | None
    rho: float | None
    tau: float | None
    s_c: int | None
    s_d: int | None
    degenerate: bool


def correlate(a, b) -> CorrelationResult:
    """Compute Pearson, Spearman, and Kendall together for a sample pair."""
    try:
        av, bv = _check_pair(a, b)
    except ConstantInputError:
        return CorrelationResult(r=None, rho=None, tau=None,
                                 s_c=None, s_d=None, degenerate=True)
    r = pearson(av, bv)
    rho = spearman(av, bv)
    s_c, s_d = concordant_discordant(av, bv)
    s = av.size
    tau = (s_c - s_d) / (s * (s - 1) / 2)
    return CorrelationResult(r=r, rho=rho, tau=tau, s_c=s_c, s_d=s_d,
                             degenerate=False)
