"""Invariants of generalized flag varieties G/P from a parabolic marking.

A marking is the set of simple roots *outside* the Levi subgroup.  The
dimension of G/P is the number of nilradical roots (positive roots supported
on the marking), and the anticanonical class is their sum written in the
fundamental-weight basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import (
    DynkinType,
    Root,
    RootSystem,
    Weight,
    closure_from_cartan,
    root_to_weight,
)


@dataclass(frozen=True)
class ParabolicMarking:
    """Nonempty set of marked Dynkin nodes (0-based global indices)."""

    marked: frozenset[int]

    def __post_init__(self):
        if not self.marked:
            raise ValueError("marking must be nonempty (G/G is a point)")

    @classmethod
    def of(cls, *nodes: int) -> "ParabolicMarking":
        return cls(frozenset(nodes))

    def union(self, other: "ParabolicMarking") -> "ParabolicMarking":
        return ParabolicMarking(self.marked | other.marked)


@dataclass(frozen=True)
class FlagInvariants:
    dimension: int
    picard_rank: int
    anticanonical: Weight
    index: int | None  # present iff the parabolic is maximal


def _check(rs: RootSystem, m: ParabolicMarking) -> None:
    bad = [i for i in m.marked if not 0 <= i < rs.rank]
    if bad:
        raise ValueError(f"marked nodes {sorted(bad)} out of range 0..{rs.rank - 1}")


def nilradical_roots(rs: RootSystem, m: ParabolicMarking) -> list[Root]:
    _check(rs, m)
    return [a for a in rs.positive_roots if any(a.coeffs[i] for i in m.marked)]


def flag_dimension(rs: RootSystem, m: ParabolicMarking) -> int:
    """dim G/P = number of positive roots supported on the marked set."""
    return len(nilradical_roots(rs, m))


def anticanonical_weight(rs: RootSystem, m: ParabolicMarking) -> Weight:
    """-K_{G/P}: the sum of nilradical roots, in the fundamental-weight basis."""
    _check(rs, m)
    total = [0] * rs.rank
    for a in nilradical_roots(rs, m):
        for j, c in enumerate(a.coeffs):
            total[j] += c
    return root_to_weight(rs, Root(tuple(total)))


def fano_index(rs: RootSystem, m: ParabolicMarking) -> int:
    """Fano index of G/P for a maximal parabolic (singleton marking)."""
    if len(m.marked) != 1:
        raise ValueError(f"Fano index needs a maximal parabolic, got marking {sorted(m.marked)}")
    (node,) = m.marked
    return int(anticanonical_weight(rs, m).coeffs[node])


# --- Levi-decomposition fast path -------------------------------------------
#
# For large rank, materializing the positive roots is wasteful: the nilradical
# count is |Phi+(G)| - |Phi+(Levi)|, and the anticanonical weight is
# 2*rho - sum(Phi+(Levi)) which vanishes off the marked set.  Every supported
# factor diagram is a chain, so the Levi splits into runs of consecutive
# unmarked nodes and only run boundaries touch the marked coefficients.

_SMALL_COMPONENT = 8


def _factor_root_count(series: str, rank: int) -> int:
    if series == "A":
        return rank * (rank + 1) // 2
    if series in ("B", "C"):
        return rank * rank
    return {"F": 24, "G": 6}[series]


def _chain_entry(series: str, rank: int, i: int, j: int) -> int:
    """Cartan entry a[i][j] within one factor, without building the matrix."""
    if i == j:
        return 2
    if abs(i - j) != 1:
        return 0
    if series == "B" and (i, j) == (rank - 1, rank - 2):
        return -2
    if series == "C" and (i, j) == (rank - 2, rank - 1):
        return -2
    if series == "F" and (i, j) == (2, 1):
        return -2
    if series == "G" and (i, j) == (1, 0):
        return -3
    return -1


@lru_cache(maxsize=None)
def _component_data(series: str, factor_rank: int, lo: int, hi: int) -> tuple[int, int, int]:
    """(root count, first and last coefficient of the run's 2*rho) for one Levi run."""
    s = hi - lo + 1
    if s <= _SMALL_COMPONENT:
        sub = [
            [_chain_entry(series, factor_rank, lo + i, lo + j) for j in range(s)]
            for i in range(s)
        ]
        roots = closure_from_cartan(sub)
        total = [sum(r[j] for r in roots) for j in range(s)]
        return len(roots), total[0], total[-1]
    # large runs only arise inside A, B or C chains
    if series in ("B", "C") and hi == factor_rank - 1:
        count = s * s
        first = 2 * s - 1 if series == "B" else 2 * s
        last = s * s if series == "B" else s * (s + 1) // 2
        return count, first, last
    return s * (s + 1) // 2, s, s


def _levi_runs(rank: int, marked: set[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive unmarked nodes in a chain diagram."""
    runs, start = [], None
    for i in range(rank + 1):
        if i < rank and i not in marked:
            start = i if start is None else start
        elif start is not None:
            runs.append((start, i - 1))
            start = None
    return runs


def flag_dimension_of_type(dynkin: DynkinType, m: ParabolicMarking) -> int:
    """flag_dimension computed from the diagram alone, without root enumeration."""
    if not all(0 <= i < dynkin.rank for i in m.marked):
        raise ValueError(f"marked nodes out of range 0..{dynkin.rank - 1}")
    total = 0
    for offset, f in zip(dynkin.factor_offsets(), dynkin.factors):
        local = {i - offset for i in m.marked if offset <= i < offset + f.rank}
        total += _factor_root_count(f.series, f.rank)
        for lo, hi in _levi_runs(f.rank, local):
            total -= _component_data(f.series, f.rank, lo, hi)[0]
    return total


def anticanonical_weight_of_type(dynkin: DynkinType, m: ParabolicMarking) -> Weight:
    """anticanonical_weight computed from the diagram alone."""
    if not all(0 <= i < dynkin.rank for i in m.marked):
        raise ValueError(f"marked nodes out of range 0..{dynkin.rank - 1}")
    coeffs = [0] * dynkin.rank
    for offset, f in zip(dynkin.factor_offsets(), dynkin.factors):
        local = {i - offset for i in m.marked if offset <= i < offset + f.rank}
        runs = {}
        for lo, hi in _levi_runs(f.rank, local):
            runs[lo] = runs[hi] = (lo, hi)
        for i in sorted(local):
            c = 2
            if i - 1 in runs:
                lo, hi = runs[i - 1]
                c -= _component_data(f.series, f.rank, lo, hi)[2] * _chain_entry(f.series, f.rank, i, i - 1)
            if i + 1 in runs:
                lo, hi = runs[i + 1]
                c -= _component_data(f.series, f.rank, lo, hi)[1] * _chain_entry(f.series, f.rank, i, i + 1)
            coeffs[offset + i] = c
    return Weight(tuple(coeffs))


def fano_index_of_type(dynkin: DynkinType, m: ParabolicMarking) -> int:
    if len(m.marked) != 1:
        raise ValueError(f"Fano index needs a maximal parabolic, got marking {sorted(m.marked)}")
    (node,) = m.marked
    return int(anticanonical_weight_of_type(dynkin, m).coeffs[node])


def flag_invariants(rs: RootSystem, m: ParabolicMarking) -> FlagInvariants:
    anti = anticanonical_weight(rs, m)
    index = None
    if len(m.marked) == 1:
        (node,) = m.marked
        index = int(anti.coeffs[node])
    return FlagInvariants(
        dimension=flag_dimension(rs, m),
        picard_rank=len(m.marked),
        anticanonical=anti,
        index=index,
    )
