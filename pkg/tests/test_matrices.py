from fractions import Fraction
from random import Random

import pytest

from kcomm2 import (
    GAUSSIAN_QI,
    RATIONAL_Q,
    GaussianRational,
    Mat2,
    is_idempotent,
    is_nilpotent,
    outer,
    rank_one_factor,
    spectral_split,
)
from kcomm2.errors import FieldMismatch, NotScalarPlusNilpotent, RankNotOne
from kcomm2.randgen import random_mat, random_nonzero_vec

from conftest import units


class TestRingOps:
    def test_unit_multiplication(self, any_field):
        e11, e12, e21, e22 = units(any_field)
        assert (e12 @ e21).eq(e11)
        assert (e21 @ e12).eq(e22)
        assert (e12 @ e12).is_zero()

    def test_conj_transpose_real_symmetric(self, any_field):
        e11 = Mat2.unit(any_field, 1, 1)
        assert e11.conj_t().eq(e11)

    def test_conj_transpose_gaussian(self):
        i = GaussianRational(0, 1)
        M = Mat2.from_rows(GAUSSIAN_QI, [[0, i], [0, 0]])
        expected = Mat2.from_rows(GAUSSIAN_QI, [[0, 0], [-i, 0]])
        assert M.conj_t().eq(expected)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            Mat2.identity(RATIONAL_Q) @ Mat2.identity(GAUSSIAN_QI)

    def test_trace_det_against_expansion(self, exact_field):
        rng = Random(7)
        for _ in range(25):
            A = random_mat(exact_field, rng, denominators=True)
            a11, a12, a21, a22 = A.entries
            assert A.trace() == a11 + a22
            assert A.det() == a11 * a22 - a12 * a21

    def test_power(self, exact_field):
        A = Mat2.from_rows(exact_field, [[1, 1], [0, 1]])
        assert A.power(0).eq(Mat2.identity(exact_field))
        assert A.power(3).eq(Mat2.from_rows(exact_field, [[1, 3], [0, 1]]))

    def test_cayley_hamilton_self_check(self, exact_field):
        rng = Random(11)
        eye = Mat2.identity(exact_field)
        for _ in range(50):
            S = random_mat(exact_field, rng, denominators=True)
            residual = S @ S - S.scale(S.trace()) + eye.scale(S.det())
            assert residual.is_zero()


class TestPredicates:
    def test_nilpotent_units(self, any_field):
        _, e12, _, _ = units(any_field)
        assert is_nilpotent(e12)
        assert is_nilpotent(Mat2.zero(any_field))

    def test_nilpotent_derived_example(self, exact_field):
        A = Mat2.from_rows(exact_field, [[1, 1], [-1, -1]])
        assert (A @ A).is_zero()
        assert is_nilpotent(A)

    def test_idempotent_not_nilpotent(self, any_field):
        e11 = Mat2.unit(any_field, 1, 1)
        assert not is_nilpotent(e11)
        assert is_idempotent(e11)

    @pytest.mark.parametrize(
        "rows", [[[1, 1], [0, 0]], [[Fraction(1, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 2)]]]
    )
    def test_idempotent_examples(self, rows):
        A = Mat2.from_rows(RATIONAL_Q, rows)
        assert (A @ A).eq(A)
        assert is_idempotent(A)

    def test_idempotent_iff_unit_pairing(self, exact_field):
        rng = Random(3)
        for _ in range(60):
            x = random_nonzero_vec(exact_field, rng, denominators=True)
            f = random_nonzero_vec(exact_field, rng, denominators=True)
            A = outer(exact_field, x, f)
            c = exact_field.conj
            pairing = c(f[0]) * x[0] + c(f[1]) * x[1]
            assert is_idempotent(A) == exact_field.eq(pairing, exact_field.one())


class TestRankOneFactor:
    def test_unit_factorization(self, exact_field):
        fac = rank_one_factor(Mat2.unit(exact_field, 1, 2))
        assert fac.x == (exact_field.one(), exact_field.zero())
        assert fac.f == (exact_field.zero(), exact_field.one())

    def test_roundtrip_example(self):
        A = Mat2.from_rows(RATIONAL_Q, [[2, 4], [1, 2]])
        fac = rank_one_factor(A)
        assert outer(RATIONAL_Q, fac.x, fac.f).eq(A)

    def test_identity_rejected(self, any_field):
        with pytest.raises(RankNotOne):
            rank_one_factor(Mat2.identity(any_field))

    def test_zero_rejected(self, any_field):
        with pytest.raises(RankNotOne):
            rank_one_factor(Mat2.zero(any_field))

    def test_roundtrip_random(self, exact_field):
        rng = Random(5)
        for _ in range(100):
            x = random_nonzero_vec(exact_field, rng, denominators=True)
            f = random_nonzero_vec(exact_field, rng, denominators=True)
            A = outer(exact_field, x, f)
            if A.is_zero():
                continue
            fac = rank_one_factor(A)
            assert outer(exact_field, fac.x, fac.f).eq(A)
            # canonical: leading nonzero coordinate of x is one
            lead = next(v for v in fac.x if not exact_field.is_zero(v))
            assert exact_field.eq(lead, exact_field.one())


class TestSpectralSplit:
    def test_jordan_block(self, any_field):
        S = Mat2.from_rows(any_field, [[1, 1], [0, 1]])
        split = spectral_split(S)
        assert any_field.eq(split.lam, any_field.one())
        assert split.nilpotent.eq(Mat2.unit(any_field, 1, 2))

    def test_derived_example(self):
        S = Mat2.from_rows(RATIONAL_Q, [[2, 1], [-1, 0]])
        split = spectral_split(S)
        assert split.lam == Fraction(1)
        N = split.nilpotent
        assert N.eq(Mat2.from_rows(RATIONAL_Q, [[1, 1], [-1, -1]]))
        assert (N @ N).is_zero()

    def test_rotation_rejected_with_discriminant(self):
        S = Mat2.from_rows(RATIONAL_Q, [[0, 1], [-1, 0]])
        with pytest.raises(NotScalarPlusNilpotent) as exc:
            spectral_split(S)
        assert exc.value.discriminant == Fraction(-4)

    def test_reassembly_random(self, exact_field):
        rng = Random(9)
        from kcomm2.randgen import random_scalar_plus_nilpotent

        for _ in range(50):
            S = random_scalar_plus_nilpotent(exact_field, rng)
            split = spectral_split(S)
            eye = Mat2.identity(exact_field)
            assert (eye.scale(split.lam) + split.nilpotent).eq(S)
            assert (split.nilpotent @ split.nilpotent).is_zero()
