"""The Pasquier catalog of two-orbit Fano varieties and their stability.

Each catalog entry is a triple: a Dynkin type plus two dominant weights,
realized here as parabolic markings.  From the root system alone we derive
the variety's dimension and Fano index, the rank and first Chern class of
its canonical foliation, and the exact slope comparison that decides
(in)stability of the tangent bundle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .flagvar import (
    ParabolicMarking,
    anticanonical_weight,
    anticanonical_weight_of_type,
    flag_dimension,
    flag_dimension_of_type,
)
from .rootsys import DynkinType, RootSystem, SimpleFactor, Weight, build_root_system, weyl_dim

_B = lambda n: DynkinType((SimpleFactor("B", n),))
_C = lambda n: DynkinType((SimpleFactor("C", n),))
_F4 = DynkinType((SimpleFactor("F", 4),))
_G2 = DynkinType((SimpleFactor("G", 2),))
_A1G2 = DynkinType((SimpleFactor("A", 1), SimpleFactor("G", 2)))


class Family(enum.Enum):
    BN_SPINOR = "Bn"
    B3_SPECIAL = "B3special"
    CN = "Cn"
    F4_HORO = "F4horo"
    G2_HORO = "G2horo"
    PAS_F4 = "PasF4"
    PAS_A1G2 = "PasA1G2"


HOROSPHERICAL = {
    Family.BN_SPINOR,
    Family.B3_SPECIAL,
    Family.CN,
    Family.F4_HORO,
    Family.G2_HORO,
}


@dataclass(frozen=True)
class TripleSpec:
    family: Family
    n: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.family is Family.BN_SPINOR:
            if self.n is None or self.n < 3:
                raise ValueError("spinor family needs n >= 3")
        elif self.family is Family.CN:
            if self.n is None or self.k is None or self.n < 2 or not 2 <= self.k <= self.n:
                raise ValueError("C_n family needs n >= 2 and 2 <= k <= n")
        elif self.n is not None or self.k is not None:
            raise ValueError(f"family {self.family.value} takes no parameters")

    @property
    def dynkin(self) -> DynkinType:
        return {
            Family.BN_SPINOR: lambda: _B(self.n),
            Family.B3_SPECIAL: lambda: _B(3),
            Family.CN: lambda: _C(self.n),
            Family.F4_HORO: lambda: _F4,
            Family.G2_HORO: lambda: _G2,
            Family.PAS_F4: lambda: _F4,
            Family.PAS_A1G2: lambda: _A1G2,
        }[self.family]()

    @property
    def marking_y(self) -> ParabolicMarking:
        return {
            Family.BN_SPINOR: lambda: ParabolicMarking.of(self.n - 2),
            Family.B3_SPECIAL: lambda: ParabolicMarking.of(0),
            Family.CN: lambda: ParabolicMarking.of(self.k - 1),
            Family.F4_HORO: lambda: ParabolicMarking.of(1),
            Family.G2_HORO: lambda: ParabolicMarking.of(0),
            Family.PAS_F4: lambda: ParabolicMarking.of(0),
            # the G2 contact manifold K(G2); the A1 factor acts trivially
            Family.PAS_A1G2: lambda: ParabolicMarking.of(1),
        }[self.family]()

    @property
    def marking_z(self) -> ParabolicMarking:
        return {
            Family.BN_SPINOR: lambda: ParabolicMarking.of(self.n - 1),
            Family.B3_SPECIAL: lambda: ParabolicMarking.of(2),
            Family.CN: lambda: ParabolicMarking.of(self.k - 2),
            Family.F4_HORO: lambda: ParabolicMarking.of(2),
            Family.G2_HORO: lambda: ParabolicMarking.of(1),
            Family.PAS_F4: lambda: ParabolicMarking.of(2),
            # P^1 x Q^5: the A1 node together with the short G2 node
            Family.PAS_A1G2: lambda: ParabolicMarking.of(0, 2),
        }[self.family]()

    @property
    def triple_id(self) -> str:
        if self.family is Family.BN_SPINOR:
            return f"Bn:n={self.n}"
        if self.family is Family.CN:
            return f"Cn:n={self.n}:k={self.k}"
        return self.family.value

    def is_horospherical(self) -> bool:
        return self.family in HOROSPHERICAL


def parse_triple_id(text: str) -> TripleSpec:
    """Parse a triple id like "Bn:n=5", "Cn:n=4:k=3" or "PasF4"."""
    parts = text.split(":")
    head, params = parts[0], parts[1:]
    kwargs: dict[str, int] = {}
    for p in params:
        key, _, val = p.partition("=")
        if key not in ("n", "k") or not val.lstrip("-").isdigit():
            raise ValueError(f"bad triple parameter {p!r} in {text!r}")
        kwargs[key] = int(val)
    for fam in Family:
        if fam.value.lower() == head.lower():
            return TripleSpec(fam, **kwargs)
    valid = ", ".join(f.value for f in Family)
    raise ValueError(f"unknown triple family {head!r}; expected one of: {valid}")


def enumerate_triples(max_n: int) -> list[TripleSpec]:
    """All catalog members with parameter n at most `max_n`, in catalog order."""
    if max_n < 3:
        raise ValueError(f"max_n must be at least 3, got {max_n}")
    triples = [TripleSpec(Family.BN_SPINOR, n=n) for n in range(3, max_n + 1)]
    triples.append(TripleSpec(Family.B3_SPECIAL))
    for n in range(2, max_n + 1):
        triples.extend(TripleSpec(Family.CN, n=n, k=k) for k in range(2, n + 1))
    triples += [
        TripleSpec(Family.F4_HORO),
        TripleSpec(Family.G2_HORO),
        TripleSpec(Family.PAS_F4),
        TripleSpec(Family.PAS_A1G2),
    ]
    return triples


@lru_cache(maxsize=None)
def _root_system(dynkin: DynkinType) -> RootSystem:
    return build_root_system(dynkin)


@dataclass(frozen=True)
class VarietyInvariants:
    dim_y: int
    dim_z: int
    dim_x: int
    c1_y: int
    c1_z: Weight  # full anticanonical of Z; Picard rank 2 for Pas_{A1xG2}
    r_x: int

    @property
    def codim_z(self) -> int:
        return self.dim_x - self.dim_z

    def c1_z_scalar(self) -> int | None:
        """Collapse c1_Z to its single nonzero coefficient when possible."""
        nonzero = [int(c) for c in self.c1_z.coeffs if c]
        return nonzero[0] if len(nonzero) == 1 else None


@dataclass(frozen=True)
class FoliationInvariants:
    rank_f: int
    c1_f: int  # coefficient on H_X
    rank_ey: int | None  # None for the two exceptional varieties (no E_Y bundle)
    c1_ey: int | None


class Verdict(enum.Enum):
    UNSTABLE = "Unstable"
    STRICTLY_SEMISTABLE_BOUNDARY = "StrictlySemistableBoundary"
    STABLE = "Stable"


@dataclass(frozen=True)
class StabilityReport:
    triple: TripleSpec
    variety: VarietyInvariants
    foliation: FoliationInvariants
    mu_f: Fraction
    mu_theta: Fraction
    verdict: Verdict


# ranks small enough to enumerate positive roots outright; above this the
# Levi-decomposition routines in flagvar are used (same results, no O(n^2) roots)
_ENUMERATION_CUTOFF = 16


@lru_cache(maxsize=None)
def variety_invariants(t: TripleSpec) -> VarietyInvariants:
    dynkin = t.dynkin
    if dynkin.rank <= _ENUMERATION_CUTOFF:
        rs = _root_system(dynkin)
        dim_of = lambda m: flag_dimension(rs, m)
        anti_of = lambda m: anticanonical_weight(rs, m)
    else:
        dim_of = lambda m: flag_dimension_of_type(dynkin, m)
        anti_of = lambda m: anticanonical_weight_of_type(dynkin, m)
    m_y, m_z = t.marking_y, t.marking_z
    dim_y = dim_of(m_y)
    dim_z = dim_of(m_z)
    dim_x = dim_of(m_y.union(m_z)) + 1
    (node_y,) = m_y.marked
    c1_y = int(anti_of(m_y).coeffs[node_y])
    c1_z = anti_of(m_z)
    if t.family is Family.PAS_F4:
        r_x = 8
    elif t.family is Family.PAS_A1G2:
        r_x = 6
    else:
        # blow-up canonical formula applied to the drum contraction
        r_x = 2 * dim_x - dim_y - dim_z
    return VarietyInvariants(dim_y=dim_y, dim_z=dim_z, dim_x=dim_x, c1_y=c1_y, c1_z=c1_z, r_x=r_x)


def foliation_invariants(t: TripleSpec) -> FoliationInvariants:
    if t.family is Family.PAS_F4:
        return FoliationInvariants(rank_f=8, c1_f=0, rank_ey=None, c1_ey=None)
    if t.family is Family.PAS_A1G2:
        return FoliationInvariants(rank_f=3, c1_f=0, rank_ey=None, c1_ey=None)
    v = variety_invariants(t)
    rank_ey = v.dim_x - v.dim_y
    c1_ey = v.c1_y - (v.dim_x - v.dim_z)
    return FoliationInvariants(rank_f=rank_ey, c1_f=rank_ey - c1_ey, rank_ey=rank_ey, c1_ey=c1_ey)


def stability_verdict(t: TripleSpec) -> StabilityReport:
    """Exact slope comparison of the canonical foliation with the tangent bundle."""
    v = variety_invariants(t)
    f = foliation_invariants(t)
    mu_f = Fraction(f.c1_f, f.rank_f)
    mu_theta = Fraction(v.r_x, v.dim_x)
    if mu_f > mu_theta:
        verdict = Verdict.UNSTABLE
    elif mu_f == mu_theta:
        verdict = Verdict.STRICTLY_SEMISTABLE_BOUNDARY
    else:
        verdict = Verdict.STABLE
    return StabilityReport(triple=t, variety=v, foliation=f, mu_f=mu_f, mu_theta=mu_theta, verdict=verdict)


def ambient_dimension(t: TripleSpec) -> int:
    """dim(V_Y + V_Z), the linear span of the drum embedding."""
    if t.family is Family.PAS_F4:
        raise ValueError("no drum embedding is available for PasF4")
    if t.family is Family.PAS_A1G2:
        # two copies of the 7-dimensional space of imaginary octonions
        return 14
    rs = _root_system(t.dynkin)
    dims = []
    for marking in (t.marking_y, t.marking_z):
        coeffs = tuple(1 if i in marking.marked else 0 for i in range(rs.rank))
        dims.append(weyl_dim(rs, Weight(coeffs)))
    return sum(dims)


# --- report serialization ---------------------------------------------------

def weight_label(t: TripleSpec, weight: Weight) -> str:
    """Render a weight like "3w1+5w3", with "f.i" node labels for products."""
    dynkin = t.dynkin
    labels = []
    if len(dynkin.factors) == 1:
        labels = [f"w{i + 1}" for i in range(dynkin.rank)]
    else:
        for pos, f in enumerate(dynkin.factors, start=1):
            labels.extend(f"w{pos}.{i + 1}" for i in range(f.rank))
    terms = [f"{int(c)}{lab}" for c, lab in zip(weight.coeffs, labels) if c]
    return "+".join(terms) if terms else "0"


def report_record(r: StabilityReport) -> dict:
    """Flatten a StabilityReport into one record with a stable field order."""
    c1_z = r.variety.c1_z_scalar()
    return {
        "triple": r.triple.triple_id,
        "family": r.triple.family.value,
        "n": r.triple.n,
        "k": r.triple.k,
        "dim_Y": r.variety.dim_y,
        "c1_Y": r.variety.c1_y,
        "dim_Z": r.variety.dim_z,
        "c1_Z": c1_z if c1_z is not None else weight_label(r.triple, r.variety.c1_z),
        "dim_X": r.variety.dim_x,
        "r_X": r.variety.r_x,
        "codim_Z": r.variety.codim_z,
        "rank_EY": r.foliation.rank_ey,
        "c1_EY": r.foliation.c1_ey,
        "rank_F": r.foliation.rank_f,
        "c1_F": r.foliation.c1_f,
        "mu_F": f"{r.mu_f.numerator}/{r.mu_f.denominator}",
        "mu_Theta": f"{r.mu_theta.numerator}/{r.mu_theta.denominator}",
        "verdict": r.verdict.value,
    }
