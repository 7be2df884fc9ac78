"""Lie algebra layer: axioms, series, nilradical."""

import random
from fractions import Fraction as F

import pytest

from solvhull.errors import PreconditionError, StructureError
from solvhull.lie import (
    LieAlgebra,
    Subspace,
    ad_matrix,
    center,
    complement_directions,
    derived_series,
    derived_subalgebra,
    is_ideal,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    nilradical,
    validate,
)
from solvhull.linalg import Mat, is_nilpotent_matrix, unit_vec, vadd

from conftest import almost_abelian_algebra, random_split_solvable, sl2


class TestValidate:
    def test_abelian_ok(self, abelian3):
        assert validate(abelian3) is None

    def test_heisenberg_ok(self, heisenberg):
        assert validate(heisenberg) is None

    def test_antisymmetry_violation_located(self):
        c = [[[F(0)] * 3 for _ in range(3)] for _ in range(3)]
        c[0][1][2] = F(1)  # counterpart missing
        bad = LieAlgebra(3, ("e1", "e2", "e3"),
                         tuple(tuple(tuple(v) for v in row) for row in c))
        v = validate(bad)
        assert v is not None
        assert v.kind == "antisymmetry"
        assert v.indices == (0, 1)
        assert v.residual == (F(0), F(0), F(1))

    def test_jacobi_violation_located(self):
        # [e1,e2]=e3, [e1,e3]=e1 breaks Jacobi on (1,2,3)
        g = LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0]})
        v = validate(g)
        assert v is not None
        assert v.kind == "jacobi"
        assert v.indices == (0, 1, 2)

    def test_self_bracket_rejected(self):
        with pytest.raises(StructureError):
            LieAlgebra.from_brackets(2, {(0, 0): [1, 0]})

    def test_duplicate_pair_rejected(self):
        with pytest.raises(StructureError):
            LieAlgebra.from_brackets(2, {(0, 1): [0, 1], (1, 0): [0, 1]})

    def test_hard_dim_cap(self):
        with pytest.raises(PreconditionError):
            LieAlgebra.from_brackets(25, {})

    def test_soft_dim_cap_warns(self):
        with pytest.warns(UserWarning):
            LieAlgebra.from_brackets(17, {})


class TestAd:
    def test_abelian_ad_zero(self, abelian3):
        assert ad_matrix(abelian3, (F(1), F(2), F(3))).is_zero()

    def test_sol_ad_t(self, sol):
        assert ad_matrix(sol, unit_vec(3, 0)) == Mat.diag([0, 1, -1])

    def test_heisenberg_ad(self, heisenberg):
        ad1 = ad_matrix(heisenberg, unit_vec(3, 0))
        assert ad1.apply(unit_vec(3, 1)) == unit_vec(3, 2)
        assert ad1.apply(unit_vec(3, 0)) == (F(0),) * 3
        assert ad1.apply(unit_vec(3, 2)) == (F(0),) * 3

    def test_ad_is_bracket(self, sol):
        rng = random.Random(3)
        for _ in range(10):
            x = tuple(F(rng.randint(-2, 2)) for _ in range(3))
            y = tuple(F(rng.randint(-2, 2)) for _ in range(3))
            assert ad_matrix(sol, x).apply(y) == sol.bracket(x, y)


class TestSeries:
    def test_abelian_derived_series(self, abelian3):
        ds = derived_series(abelian3)
        assert len(ds) == 2
        assert ds[0].dim == 3 and ds[1].dim == 0

    def test_heisenberg_series(self, heisenberg):
        assert derived_subalgebra(heisenberg).basis == (unit_vec(3, 2),)
        lcs = lower_central_series(heisenberg)
        assert [s.dim for s in lcs] == [3, 1, 0]

    def test_sol_derived(self, sol):
        assert derived_subalgebra(sol).basis == (unit_vec(3, 1), unit_vec(3, 2))

    def test_flags(self, heisenberg, sol):
        assert is_solvable(heisenberg) and is_nilpotent(heisenberg)
        assert is_solvable(sol) and not is_nilpotent(sol)
        assert not is_solvable(sl2())

    def test_series_monotone_and_short(self):
        rng = random.Random(4)
        for _ in range(10):
            g = random_split_solvable(rng)
            for series in (derived_series(g), lower_central_series(g)):
                assert len(series) <= g.dim + 1
                for big, small in zip(series, series[1:]):
                    assert big.contains_subspace(small)
                    assert small.dim < big.dim or small == big


class TestNilradical:
    def test_nilpotent_algebra_is_its_own(self, heisenberg):
        assert nilradical(heisenberg).dim == 3

    def test_sol(self, sol):
        nr = nilradical(sol)
        assert nr.basis == (unit_vec(3, 1), unit_vec(3, 2))

    def test_almost_abelian_nontrivial_weights(self):
        for params in [dict(m=1, n=1), dict(m=2, n=0, a=["1", "2"]),
                       dict(m=0, n=1, b=["1/2"]), dict(m=1, n=1, a=["2/3"], b=["5"])]:
            g = almost_abelian_algebra(**params)
            nr = nilradical(g)
            assert nr.dim == g.dim - 1
            assert nr.basis == tuple(unit_vec(g.dim, i) for i in range(1, g.dim))

    def test_rejects_non_solvable(self):
        with pytest.raises(PreconditionError):
            nilradical(sl2())

    def test_contains_derived_and_is_ideal(self):
        rng = random.Random(5)
        for _ in range(8):
            g = random_split_solvable(rng)
            nr = nilradical(g)
            assert is_ideal(g, nr)
            assert nr.contains_subspace(derived_subalgebra(g))
            for v in nr.basis:
                assert is_nilpotent_matrix(ad_matrix(g, v))

    def test_maximality_oracle(self, sol, heisenberg, filiform4, kodaira_thurston, rotation):
        algebras = [sol, heisenberg, filiform4, kodaira_thurston, rotation,
                    almost_abelian_algebra(1, 1), almost_abelian_algebra(2, 1, a=["1", "3"])]
        for g in algebras:
            nr = nilradical(g)
            for c in complement_directions(g, nr):
                w = unit_vec(g.dim, c)
                assert not is_nilpotent_matrix(ad_matrix(g, w))
                for v in nr.basis:
                    assert not is_nilpotent_matrix(ad_matrix(g, vadd(w, v)))


class TestIdealCenter:
    def test_derived_is_ideal(self, sol, heisenberg):
        for g in (sol, heisenberg):
            assert is_ideal(g, derived_subalgebra(g))

    def test_center_heisenberg(self, heisenberg):
        assert center(heisenberg).basis == (unit_vec(3, 2),)

    def test_weight_line_is_ideal_in_sol(self, sol):
        line = Subspace.span(sol, [unit_vec(3, 1)])
        assert is_ideal(sol, line)

    def test_non_ideal_line(self, sol):
        line = Subspace.span(sol, [unit_vec(3, 0)])
        assert not is_ideal(sol, line)

    def test_center_inside_nilradical(self):
        rng = random.Random(6)
        for _ in range(8):
            g = random_split_solvable(rng)
            assert nilradical(g).contains_subspace(center(g))
