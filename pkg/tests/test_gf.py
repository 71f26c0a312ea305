import pytest

from hullforge.errors import FieldError
from hullforge.gf import ArithOp, FieldSpec, enumerate_elements, make_field, smallest_irreducible


class TestMakeField:
    """Field construction and the deterministic modulus choice."""

    @pytest.mark.parametrize("p, m, modulus", [
        (2, 1, (0, 1)),
        (5, 1, (0, 1)),
        (2, 2, (1, 1, 1)),
        (3, 2, (1, 0, 1)),
        (5, 2, (1, 1, 1)),
        (7, 2, (1, 0, 1)),
        (2, 3, (1, 0, 1, 1)),
    ])
    def test_modulus(self, p, m, modulus):
        """The modulus is the smallest monic irreducible, low degree first."""
        spec = make_field(p, m)
        assert spec.modulus == modulus
        assert spec.q == p ** m

    def test_subfield_order(self):
        assert make_field(3, 2).subfield_order == 3
        assert make_field(2, 4).subfield_order == 4
        assert make_field(5, 1).subfield_order is None
        assert make_field(2, 3).has_conjugation is False

    @pytest.mark.parametrize("p, m", [(4, 1), (1, 1), (2, 0), (2, 17)])
    def test_invalid_parameters(self, p, m):
        with pytest.raises(FieldError):
            make_field(p, m)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(FieldError, match="reducible"):
            FieldSpec(p=2, m=2, q=4, modulus=(1, 0, 1), subfield_order=2)

    def test_smallest_irreducible_skips_multiples_of_x(self):
        assert smallest_irreducible(2, 2)[0] != 0

    def test_same_parameters_same_field(self):
        assert make_field(3, 2) is make_field(3, 2)
        assert make_field(3, 2) == FieldSpec(p=3, m=2, q=9, modulus=(1, 0, 1), subfield_order=3)


class TestScalarArithmetic:
    """Table and galois backed scalar operations."""

    def test_gf4_products(self):
        spec = make_field(2, 2)
        # code 2 is x, code 3 is x + 1 = x^2
        assert spec.mul(2, 2) == 3
        assert spec.mul(2, 3) == 1
        assert spec.add(2, 3) == 1
        assert spec.inv(2) == 3
        assert spec.neg(3) == 3

    def test_gf9_codes(self):
        spec = make_field(3, 2)
        # 3 is x with x^2 = -1
        assert spec.mul(3, 3) == 2
        assert spec.add(4, 5) == 6
        assert spec.sub(1, 2) == 2

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            make_field(5, 1).inv(0)

    def test_pow(self):
        spec = make_field(7, 1)
        assert spec.pow(3, 6) == 1
        assert spec.pow(3, 0) == 1
        assert spec.pow(3, -1) == 5

    def test_out_of_range_element(self):
        with pytest.raises(FieldError):
            make_field(5, 1).add(5, 1)

    @pytest.mark.parametrize("op, operands, expected", [
        (ArithOp.ADD, (3, 4), 2),
        (ArithOp.SUB, (3, 4), 4),
        (ArithOp.MUL, (3, 4), 2),
        (ArithOp.NEG, (3,), 2),
        (ArithOp.INV, (3,), 2),
        (ArithOp.POW, (2, 3), 3),
    ])
    def test_arith_dispatch(self, op, operands, expected):
        assert make_field(5, 1).arith(op, *operands) == expected

    def test_large_field_without_tables(self):
        spec = make_field(2, 10)
        x = 0b1011
        assert spec.mul(x, spec.inv(x)) == 1


class TestFrobenius:
    """Conjugation and norm on GF(s^2)."""

    def test_conjugate_gf9(self):
        spec = make_field(3, 2)
        # x^3 = -x
        assert spec.conjugate(3) == 6
        for a in range(3):
            assert spec.conjugate(a) == a

    def test_conjugate_is_involution(self):
        spec = make_field(5, 2)
        for x in spec.elements():
            assert spec.conjugate(spec.conjugate(x)) == x

    def test_norm_lands_in_subfield(self):
        spec = make_field(3, 2)
        assert spec.norm(3) == 1
        assert spec.norm(4) == 2
        assert all(spec.norm(x) < 3 for x in spec.elements())

    def test_conjugate_needs_even_degree(self):
        with pytest.raises(FieldError):
            make_field(5, 1).conjugate(2)

    def test_frobenius_range(self):
        spec = make_field(2, 2)
        assert spec.frobenius(2, 0) == 2
        assert spec.frobenius(2, 2) == 2
        with pytest.raises(FieldError):
            spec.frobenius(2, 3)


class TestSquares:

    def test_odd_field(self):
        spec = make_field(5, 1)
        assert spec.is_square(4)
        assert not spec.is_square(2)
        assert spec.sqrt(4) == 2
        assert spec.sqrt(2) is None

    def test_even_field_every_element_is_square(self):
        spec = make_field(2, 2)
        assert spec.sqrt(3) == 2
        for x in spec.elements():
            assert spec.mul(spec.sqrt(x), spec.sqrt(x)) == x


class TestDescription:

    def test_str(self):
        assert str(make_field(3, 2)) == "GF(9) = GF(3)[x]/(x^2 + 1)"
        assert str(make_field(2, 2)) == "GF(4) = GF(2)[x]/(x^2 + x + 1)"

    def test_describe(self):
        assert make_field(3, 2).describe() == {
            "p": 3, "m": 2, "q": 9, "modulus": [1, 0, 1], "subfield_order": 3,
        }

    def test_enumerate_elements(self):
        assert enumerate_elements(make_field(2, 2)) == [0, 1, 2, 3]


SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


class TestFieldInvariants:
    """Exhaustive checks on every field of order at most 9."""

    @pytest.mark.parametrize("p, m", SMALL_FIELDS)
    def test_field_axioms(self, p, m):
        spec = make_field(p, m)
        els = spec.elements()
        for x in els:
            assert spec.add(x, 0) == x
            assert spec.mul(x, 1) == x
            assert spec.mul(x, 0) == 0
            assert spec.add(x, spec.neg(x)) == 0
            if x:
                assert spec.mul(x, spec.inv(x)) == 1
            for y in els:
                assert spec.add(x, y) == spec.add(y, x)
                assert spec.mul(x, y) == spec.mul(y, x)
                for z in els:
                    assert spec.add(spec.add(x, y), z) == spec.add(x, spec.add(y, z))
                    assert spec.mul(spec.mul(x, y), z) == spec.mul(x, spec.mul(y, z))
                    assert spec.mul(x, spec.add(y, z)) == spec.add(spec.mul(x, y), spec.mul(x, z))

    @pytest.mark.parametrize("p, m", SMALL_FIELDS + [(5, 2), (2, 4), (3, 3)])
    def test_frobenius_full_power_is_identity(self, p, m):
        spec = make_field(p, m)
        for x in spec.elements():
            assert spec.frobenius(x, m) == x

    @pytest.mark.parametrize("p, m", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)])
    def test_half_the_nonzero_elements_are_squares(self, p, m):
        spec = make_field(p, m)
        squares = [x for x in spec.elements() if spec.is_square(x)]
        assert len(squares) == (spec.q + 1) // 2
        for x in squares:
            root = spec.sqrt(x)
            assert spec.mul(root, root) == x
            assert root <= spec.neg(root)
        assert all(spec.sqrt(x) is None for x in spec.elements() if x not in squares)
