import random

import pytest

from bentkit.errors import (
    DimensionTooSmall,
    DivisionByZero,
    NoSolution,
    NotADivisor,
    NotInSubfield,
    ReducibleModulus,
    UnsupportedDegree,
    ZeroElement,
)
from bentkit.gf2n import (
    DEFAULT_MODULI,
    is_irreducible,
    make_field,
    parse_field_desc,
    rank,
)


def naive_trace(field, x):
    """Independent power-sum oracle for the absolute trace."""
    t, acc = x, 0
    for _ in range(field.n):
        acc ^= t
        t = field.mul(t, t)
    return acc


def test_default_moduli_are_smallest_irreducible():
    for n in range(2, 29):
        cand = 1 << n
        while not is_irreducible(cand):
            cand += 1
        assert DEFAULT_MODULI[n] == cand


def test_make_field_degree_two_unique_choice():
    assert make_field(2).modulus == 0b111


def test_make_field_accepts_explicit_irreducible():
    field = make_field(4, 0x13)
    assert field.describe() == "n=4,mod=0x13"


def test_make_field_rejects_reducible():
    # (x+1) divides x^3 + x^2 + x + 1: evaluation at 1 gives 0
    with pytest.raises(ReducibleModulus):
        make_field(3, 0xF)
    with pytest.raises(ReducibleModulus):
        make_field(4, 0x11)  # x^4 + 1 = (x+1)^4
    with pytest.raises(ReducibleModulus):
        make_field(4, 0x7)  # degree mismatch is rejected too


def test_make_field_degree_bounds():
    with pytest.raises(UnsupportedDegree):
        make_field(0)
    with pytest.raises(UnsupportedDegree):
        make_field(29)


def test_mul_identities():
    field = make_field(5)
    rng = random.Random(0)
    for _ in range(50):
        a = rng.randrange(field.size)
        assert field.mul(a, 1) == a
        assert field.mul(a, 0) == 0


def test_mul_alpha_squared_reduces():
    # alpha^2 = alpha + 1 under x^2 + x + 1
    assert make_field(2).mul(2, 2) == 3


def test_frobenius_is_multiplicative():
    field = make_field(8)
    rng = random.Random(1)
    for _ in range(10_000):
        a = rng.randrange(field.size)
        b = rng.randrange(field.size)
        assert field.sqr(field.mul(a, b)) == field.mul(field.sqr(a),
                                                       field.sqr(b))


@pytest.mark.parametrize("n", [2, 3, 6, 12])
def test_fermat_and_sqrt_exhaustive(n):
    field = make_field(n)
    for a in range(field.size):
        assert field.sqrt(field.mul(a, a)) == a
        if a:
            assert field.pow(a, field.size - 1) == 1


def test_pow_conventions():
    field = make_field(4)
    assert field.pow(0, 0) == 1
    assert field.pow(0, 7) == 0
    a = 9
    assert field.pow(a, field.size - 1 + 3) == field.pow(a, 3)
    assert field.mul(field.pow(a, -1), a) == 1


def test_inv_of_zero():
    with pytest.raises(DivisionByZero):
        make_field(4).inv(0)


@pytest.mark.parametrize("n", [2, 4, 6, 12])
def test_trace_frobenius_invariance_exhaustive(n):
    field = make_field(n)
    for x in range(field.size):
        assert field.trace_abs(x) == field.trace_abs(field.sqr(x))


def test_trace_additivity():
    field = make_field(6)
    for x in range(field.size):
        assert field.trace_abs(x) == naive_trace(field, x)
        for y in (1, 7, 33):
            assert (field.trace_abs(x ^ y)
                    == field.trace_abs(x) ^ field.trace_abs(y))


def test_trace_examples():
    assert make_field(4).trace_abs(0) == 0
    assert make_field(4).trace_abs(1) == 0  # Tr(1) = n mod 2
    assert make_field(3).trace_abs(1) == 1
    assert make_field(2).trace_abs(2) == 1  # alpha + alpha^2 = 1


def test_trace_rel_identity_and_two_term():
    field = make_field(6)
    for x in range(field.size):
        assert field.trace_rel(x, 6) == x
        assert field.trace_rel(x, 3) == x ^ field.frob(x, 3)


def test_trace_rel_transitivity_exhaustive():
    field = make_field(4)
    for x in range(16):
        inner = field.trace_rel(x, 2)
        assert field.trace_sub(inner) == field.trace_abs(x)


def test_trace_rel_rejects_non_divisor():
    with pytest.raises(NotADivisor):
        make_field(6).trace_rel(5, 4)


def test_trace_sub_matches_subfield_bruteforce():
    field = make_field(4)
    for x in range(16):
        y = field.mul(x, field.frob(x, 2))  # norm lands in the subfield
        assert field.trace_sub(y) == y ^ field.sqr(y)


def test_trace_sub_examples_and_errors():
    field = make_field(6)
    assert field.trace_sub(0) == 0
    assert field.trace_sub(1) == 1  # m = 3 odd
    outside = next(x for x in range(field.size)
                   if field.frob(x, 3) != x)
    with pytest.raises(NotInSubfield):
        field.trace_sub(outside)
    with pytest.raises(NotInSubfield):
        make_field(5).trace_sub(1)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_subfield_membership_and_closure(n):
    field = make_field(n)
    sub = field.subfield()
    assert len(sub) == 1 << field.m
    members = set(sub.members)
    for a in sub.members:
        assert a in sub
        for b in sub.members:
            assert (a ^ b) in members
            assert field.mul(a, b) in members


def test_is_normal_examples():
    assert make_field(2).is_normal(2)
    assert not make_field(4).is_normal(1)
    with pytest.raises(ZeroElement):
        make_field(4).is_normal(0)


def test_is_normal_matches_rank_oracle():
    field = make_field(4)
    for u in range(1, 16):
        orbit = [u, field.sqr(u), field.frob(u, 2), field.frob(u, 3)]
        assert field.is_normal(u) == (rank(orbit) == 4)


def test_find_normal_deterministic():
    field = make_field(2)
    assert field.find_normal(0) == 2  # first candidate past 0 and 1
    big = make_field(8)
    u1 = big.find_normal(17, in_subfield=True)
    u2 = big.find_normal(17, in_subfield=True)
    assert u1 == u2
    assert big.is_normal(u1, in_subfield=True)


def test_lin_indep():
    field = make_field(6)
    assert field.lin_indep([])
    assert not field.lin_indep([5, 5])
    # a subfield basis stays independent inside the big field
    basis = []
    for y in field.subfield().members:
        if y and rank(basis + [y]) == len(basis) + 1:
            basis.append(y)
    assert len(basis) == 3 and field.lin_indep(basis)


def test_trace_zero_basis_spans_hyperplane():
    field = make_field(6)
    basis = field.trace_zero_basis()
    assert len(basis) == 2
    assert field.lin_indep(basis)
    assert all(field.trace_sub(v) == 0 for v in basis)
    t0 = {y for y in field.subfield().members if field.trace_sub(y) == 0}
    assert len(t0) == 4
    span = {0, basis[0], basis[1], basis[0] ^ basis[1]}
    assert span == t0


def test_trace_zero_basis_needs_m_at_least_two():
    with pytest.raises(DimensionTooSmall):
        make_field(2).trace_zero_basis()


def test_solve_semilinear():
    field = make_field(4)
    assert field.solve_semilinear(3, 0) == 0
    lam = field.solve_semilinear(3, 1)
    assert lam ^ field.frob(lam, 3) == 1
    for n in (4, 6, 8):
        big = make_field(n)
        alpha = big.solve_semilinear(big.m, 1)
        assert alpha ^ big.frob(alpha, big.m) == 1


def test_solve_semilinear_returns_smallest_solution():
    field = make_field(6)
    lam = field.solve_semilinear(3, 1)
    others = [z for z in range(field.size)
              if z ^ field.frob(z, 3) == 1]
    assert lam == min(others)


def test_solve_semilinear_no_solution():
    field = make_field(4)
    # image of z + z^4 is the trace-zero set of Tr_2^4
    bad = next(t for t in range(field.size)
               if all(z ^ field.frob(z, 2) != t for z in range(field.size)))
    with pytest.raises(NoSolution):
        field.solve_semilinear(2, bad)


def test_field_description_roundtrip():
    field = make_field(7)
    again = parse_field_desc(field.describe())
    assert again == field
    assert hash(again) == hash(field)
