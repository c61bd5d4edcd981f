import itertools

import pytest

from twoorbit.flagvar import (
    FlagInvariants,
    ParabolicMarking,
    anticanonical_weight,
    anticanonical_weight_of_type,
    fano_index,
    fano_index_of_type,
    flag_dimension,
    flag_dimension_of_type,
    flag_invariants,
    nilradical_roots,
)
from twoorbit.rootsys import DynkinType, Weight, build_root_system


def rs_of(spec):
    return build_root_system(DynkinType.parse(spec))


class TestKnownVarieties:
    def test_b3_spinor_variety_is_six_dim_quadric(self):
        rs = rs_of("B3")
        m = ParabolicMarking.of(2)
        assert flag_dimension(rs, m) == 6
        assert fano_index(rs, m) == 6

    def test_c2_lagrangian_grassmannian(self):
        rs = rs_of("C2")
        assert flag_dimension(rs, ParabolicMarking.of(1)) == 3

    def test_f4_node_two_grassmannian(self):
        rs = rs_of("F4")
        m = ParabolicMarking.of(1)
        assert flag_dimension(rs, m) == 20
        assert fano_index(rs, m) == 5

    def test_f4_node_three_grassmannian(self):
        rs = rs_of("F4")
        m = ParabolicMarking.of(2)
        assert flag_dimension(rs, m) == 20
        assert fano_index(rs, m) == 7

    def test_f4_adjoint_variety(self):
        rs = rs_of("F4")
        assert fano_index(rs, ParabolicMarking.of(0)) == 8
        assert flag_dimension(rs, ParabolicMarking.of(0)) == 15

    def test_g2_five_dim_quadric(self):
        rs = rs_of("G2")
        m = ParabolicMarking.of(1)
        assert flag_dimension(rs, m) == 5
        assert fano_index(rs, m) == 5

    def test_g2_adjoint_variety(self):
        rs = rs_of("G2")
        m = ParabolicMarking.of(0)
        assert flag_dimension(rs, m) == 5
        assert fano_index(rs, m) == 3

    def test_f4_two_step_flag(self):
        rs = rs_of("F4")
        m = ParabolicMarking.of(0, 2)
        assert flag_dimension(rs, m) == 22
        assert anticanonical_weight(rs, m) == Weight((3, 0, 5, 0))

    @pytest.mark.parametrize("spec", ["A3", "B3", "C3", "F4", "G2"])
    def test_complete_flag_anticanonical_is_two_rho(self, spec):
        rs = rs_of(spec)
        m = ParabolicMarking(frozenset(range(rs.rank)))
        assert flag_dimension(rs, m) == len(rs.positive_roots)
        assert anticanonical_weight(rs, m) == Weight((2,) * rs.rank)

    def test_g2_complete_flag_dimension(self):
        rs = rs_of("G2")
        assert flag_dimension(rs, ParabolicMarking.of(0, 1)) == 6


@pytest.mark.parametrize("n", range(3, 13))
def test_b_series_closed_forms(n):
    rs = rs_of(f"B{n}")
    # quadric of dimension 2n-1 at the first node
    first = ParabolicMarking.of(0)
    assert flag_dimension(rs, first) == 2 * n - 1
    assert fano_index(rs, first) == 2 * n - 1
    # spinor variety at the last node
    spinor = ParabolicMarking.of(n - 1)
    assert flag_dimension(rs, spinor) == n * (n + 1) // 2
    assert fano_index(rs, spinor) == 2 * n
    # the second orthogonal Grassmannian of the two-orbit construction
    og = ParabolicMarking.of(n - 2)
    assert flag_dimension(rs, og) == (n + 4) * (n - 1) // 2
    assert fano_index(rs, og) == n + 1


@pytest.mark.parametrize("n", range(2, 13))
@pytest.mark.parametrize("k", range(1, 5))
def test_c_series_closed_forms(n, k):
    if k > n:
        pytest.skip("marking out of range")
    rs = rs_of(f"C{n}")
    m = ParabolicMarking.of(k - 1)
    assert flag_dimension(rs, m) == k * (2 * n - k) - k * (k - 1) // 2
    assert fano_index(rs, m) == 2 * n - k + 1


@pytest.mark.parametrize("spec", ["A3", "B3", "C3", "G2"])
def test_dimension_monotone_in_marking(spec):
    rs = rs_of(spec)
    nodes = range(rs.rank)
    for size in range(1, rs.rank):
        for sub in itertools.combinations(nodes, size):
            small = flag_dimension(rs, ParabolicMarking(frozenset(sub)))
            for extra in nodes:
                if extra in sub:
                    continue
                big = flag_dimension(rs, ParabolicMarking(frozenset(sub) | {extra}))
                assert big > small


@pytest.mark.parametrize("spec", ["A2", "B4", "C4", "F4", "G2"])
def test_anticanonical_supported_on_marking(spec):
    rs = rs_of(spec)
    for size in range(1, rs.rank + 1):
        for sub in itertools.combinations(range(rs.rank), size):
            anti = anticanonical_weight(rs, ParabolicMarking(frozenset(sub)))
            for i, c in enumerate(anti.coeffs):
                if i in sub:
                    assert c >= 2
                else:
                    assert c == 0


def test_product_marking_is_additive():
    prod = rs_of("A1xG2")
    a1, g2 = rs_of("A1"), rs_of("G2")
    m = ParabolicMarking.of(0, 2)
    assert flag_dimension(prod, m) == flag_dimension(a1, ParabolicMarking.of(0)) + flag_dimension(
        g2, ParabolicMarking.of(1)
    )
    anti = anticanonical_weight(prod, m)
    assert anti.coeffs[0] == anticanonical_weight(a1, ParabolicMarking.of(0)).coeffs[0]
    assert anti.coeffs[1:] == anticanonical_weight(g2, ParabolicMarking.of(1)).coeffs


def test_flag_invariants_bundle():
    rs = rs_of("F4")
    inv = flag_invariants(rs, ParabolicMarking.of(1))
    assert inv == FlagInvariants(
        dimension=20, picard_rank=1, anticanonical=Weight((0, 5, 0, 0)), index=5
    )
    two = flag_invariants(rs, ParabolicMarking.of(0, 2))
    assert two.picard_rank == 2
    assert two.index is None


def test_nilradical_roots_union_levi_is_everything():
    rs = rs_of("C3")
    m = ParabolicMarking.of(1)
    nil = nilradical_roots(rs, m)
    levi = [a for a in rs.positive_roots if a.coeffs[1] == 0]
    assert len(nil) + len(levi) == len(rs.positive_roots)


class TestErrors:
    def test_empty_marking_rejected(self):
        with pytest.raises(ValueError):
            ParabolicMarking(frozenset())

    def test_out_of_range_node(self):
        rs = rs_of("B3")
        with pytest.raises(ValueError):
            flag_dimension(rs, ParabolicMarking.of(3))
        with pytest.raises(ValueError):
            flag_dimension_of_type(rs.dynkin, ParabolicMarking.of(5))

    def test_index_requires_maximal_parabolic(self):
        rs = rs_of("B3")
        with pytest.raises(ValueError):
            fano_index(rs, ParabolicMarking.of(0, 1))
        with pytest.raises(ValueError):
            fano_index_of_type(rs.dynkin, ParabolicMarking.of(0, 1))


FAST_PATH_TYPES = ["A1", "A4", "B2", "B4", "C4", "F4", "G2", "A1xG2", "A2xB3", "B12", "C12"]


@pytest.mark.parametrize("spec", FAST_PATH_TYPES)
def test_fast_path_agrees_with_enumeration(spec):
    dynkin = DynkinType.parse(spec)
    rs = build_root_system(dynkin)
    nodes = list(range(dynkin.rank))
    if dynkin.rank <= 8:
        subsets = [
            frozenset(sub)
            for size in range(1, dynkin.rank + 1)
            for sub in itertools.combinations(nodes, size)
        ]
    else:
        # all singletons, pairs, plus markings that leave long unmarked runs,
        # which is what exercises the closed-form branch
        subsets = [frozenset([i]) for i in nodes]
        subsets += [frozenset(p) for p in itertools.combinations(nodes, 2)]
        subsets += [frozenset([0, dynkin.rank - 1]), frozenset(nodes)]
    for sub in subsets:
        m = ParabolicMarking(sub)
        assert flag_dimension_of_type(dynkin, m) == flag_dimension(rs, m)
        assert anticanonical_weight_of_type(dynkin, m) == anticanonical_weight(rs, m)
