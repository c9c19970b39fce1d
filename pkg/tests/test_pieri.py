import pytest

from immaculate.compositions import compositions_of
from immaculate.errors import PreconditionError
from immaculate.linear import LinComb
from immaculate.nsym import product_in_S_oracle
from immaculate.pieri import (
    DeltaVector,
    left_pieri,
    left_pieri_unit_coefficient,
    right_pieri,
    sgn,
    translation_reduce,
    z_membership,
    zero_insertion_sign_sum,
)


def test_right_pieri_example():
    assert right_pieri((1, 2), 2) == LinComb(
        "S",
        {(1, 2, 2): 1, (1, 3, 1): 1, (1, 4): 1, (2, 2, 1): 1, (2, 3): 1, (3, 2): 1},
    )


def test_right_pieri_matches_oracle():
    for n in range(5):
        for alpha in compositions_of(n):
            for s in range(1, 4):
                assert right_pieri(alpha, s) == product_in_S_oracle(alpha, (s,))


@pytest.mark.parametrize("d,expected", [
    ((), 1),
    ((0, 2, 5), 1),
    ((-1,), -1),
    ((0, -1, 2), -1),
    ((-1, -2), 1),
])
def test_sgn(d, expected):
    assert sgn(d) == expected


def test_delta_vector_validation():
    DeltaVector(1, (0, 0))
    with pytest.raises(PreconditionError):
        DeltaVector(0, ())
    with pytest.raises(PreconditionError):
        DeltaVector(2, (-1,))


@pytest.mark.parametrize("first,tail,beta,expected", [
    (4, (3, 0), (2, 4), True),
    (4, (0, 3), (2, 4), False),
    (3, (3, 1), (2, 4), True),
])
def test_z_membership(first, tail, beta, expected):
    assert z_membership(DeltaVector(first, tail), beta) is expected


def test_z_membership_length_mismatch():
    with pytest.raises(PreconditionError):
        z_membership(DeltaVector(2, (1,)), (1, 1))


def test_unit_coefficient_longer_shape():
    # candidate passes and the sign counts one negative entry
    assert left_pieri_unit_coefficient((3, 1, 4), (2, 3, 2, 2)) == -1
    assert left_pieri_unit_coefficient((2, 4), (1, 2, 4)) == 1
    # size mismatch
    assert left_pieri_unit_coefficient((2, 4), (2, 4)) == 0


def test_unit_coefficient_equal_length():
    assert left_pieri_unit_coefficient((2, 4), (4, 3)) == -1
    assert left_pieri_unit_coefficient((2, 4), (3, 4)) == 0
    assert left_pieri_unit_coefficient((1,), (2,)) == 1


def test_closed_form_matches_sign_summation():
    # candidate-by-candidate signed count agrees with the closed form
    for n in range(7):
        for beta in compositions_of(n):
            if len(beta) > 4:
                continue
            for length in {len(beta), len(beta) + 1}:
                if length < 1:
                    continue
                for gamma in compositions_of(n + 1, length=length):
                    assert left_pieri_unit_coefficient(beta, gamma) == \
                        zero_insertion_sign_sum(beta, gamma)


def test_left_pieri_example():
    assert left_pieri(2, (2, 4)) == LinComb(
        "S",
        {(3, 1, 4): 1, (2, 2, 4): 1, (3, 2, 3): 1, (5, 3): -1, (4, 3, 1): -1},
    )


def test_left_pieri_matches_oracle():
    for n in range(6):
        for beta in compositions_of(n):
            if len(beta) > 4:
                continue
            for s in range(1, 4):
                assert left_pieri(s, beta) == product_in_S_oracle((s,), beta)


def test_left_pieri_unit_case_multiplicity_free():
    for n in range(7):
        for beta in compositions_of(n):
            if len(beta) > 4:
                continue
            for _, c in left_pieri(1, beta).items():
                assert c in (1, -1)


def test_translation_reduce():
    assert translation_reduce((2, 2), (6, 4, 4), (6, 6, 2, 2, 2), (1, 1)) == (
        (1, 1), (6, 4, 4), (5, 5, 2, 2, 2)
    )
    assert translation_reduce((3,), (1,), (4,), ()) == ((3,), (1,), (4,))


def test_translation_reduce_rejects_bad_shift():
    with pytest.raises(PreconditionError):
        translation_reduce((1,), (2,), (3,), (1,))  # would empty a part
    with pytest.raises(PreconditionError):
        translation_reduce((2,), (2,), (4,), (1, 1))  # prefix too long


def test_translation_invariance_of_constants():
    # adding the same prefix to alpha and gamma leaves the constant unchanged
    for a in range(1, 4):
        for alpha in compositions_of(a):
            for b in range(3):
                for beta in compositions_of(b):
                    prod = product_in_S_oracle(alpha, beta)
                    shifted_alpha = (alpha[0] + 2,) + alpha[1:]
                    shifted = product_in_S_oracle(shifted_alpha, beta)
                    for gamma, c in prod.items():
                        shifted_gamma = (gamma[0] + 2,) + gamma[1:]
                        assert shifted.coefficient(shifted_gamma) == c
