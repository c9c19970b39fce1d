import pytest

from immaculate.compositions import Permutation, compositions_of
from immaculate.errors import (
    InvalidVectorError,
    PreconditionError,
    ResourceLimitError,
)
from immaculate.linear import LinComb
from immaculate.nsym import product_in_S_oracle
from immaculate.tableaux import (
    SkewTableau,
    content,
    count_immaculate_LR,
    enumerate_T_alpha_beta,
    enumerate_skew_immaculate,
    is_immaculate,
    is_semistandard,
    is_yamanouchi,
    reading_word,
    signed_product,
    signed_product_via_tableaux,
    sigma_of,
)

# A recurring example: inner shape (1), rows filled so that the outer shape
# is (2,3,2,2) and the first column reads 1,2,3.
T_EXAMPLE = SkewTableau((1,), ((1,), (1, 1, 3), (2, 2), (3, 3)))


def test_padding_and_shape():
    t = SkewTableau((2, 1), ((3,),))
    assert t.rows == ((3,), ())
    assert t.outer_shape == (3, 1)
    assert t.shape_composition() == (3, 1)


def test_shape_rejects_interior_empty_row():
    t = SkewTableau((1,), ((2,), (), (1,)))
    with pytest.raises(PreconditionError):
        t.shape_composition()


def test_first_column_skips_inner_rows():
    assert T_EXAMPLE.first_column() == (1, 2, 3)
    assert SkewTableau((2,), ((1, 1),)).first_column() == ()


def test_reading_word_and_content():
    assert reading_word(T_EXAMPLE) == (1, 3, 1, 1, 2, 2, 3, 3)
    assert content(T_EXAMPLE, 3) == (3, 2, 3)
    with pytest.raises(InvalidVectorError):
        content(T_EXAMPLE, 2)


def test_is_immaculate():
    assert is_immaculate(T_EXAMPLE)
    # row decreases
    assert not is_immaculate(SkewTableau((), ((2, 1),)))
    # first column repeats
    assert not is_immaculate(SkewTableau((), ((1, 1), (1,))))
    # inner cells shield the first column
    assert is_immaculate(SkewTableau((1,), ((3,), (1, 1))))


def test_is_semistandard_checks_all_columns():
    assert is_semistandard(SkewTableau((), ((1, 1), (2, 2))))
    assert not is_semistandard(SkewTableau((), ((1, 2), (2, 2))))
    # immaculate but not semistandard: second column fails
    t = SkewTableau((), ((1, 3), (2, 3)))
    assert is_immaculate(t) and not is_semistandard(t)


def test_is_yamanouchi():
    assert is_yamanouchi(SkewTableau((), ((1, 1), (2, 2))))
    assert not is_yamanouchi(SkewTableau((), ((2,), (1,))))
    assert is_yamanouchi(SkewTableau((), ()))


def test_enumerate_exact_content_with_shape():
    ts = enumerate_skew_immaculate((1,), (3, 2, 3), shape=(2, 3, 2, 2))
    assert len(ts) == 4
    assert T_EXAMPLE in ts
    assert all(
        is_immaculate(t) and content(t, 3) == (3, 2, 3) for t in ts
    )
    assert all(t.shape_composition() == (2, 3, 2, 2) for t in ts)


def test_enumerate_exact_content_free_shape():
    ts = enumerate_skew_immaculate((2,), (1, 1))
    shapes = sorted(t.shape_composition() for t in ts)
    # shape (3,1) arises twice: the entries 1 and 2 may sit in either row
    assert shapes == [(2, 1, 1), (2, 2), (3, 1), (3, 1), (4,)]


def test_enumerate_empty_content():
    ts = enumerate_skew_immaculate((3, 1), ())
    assert len(ts) == 1
    assert ts[0].n_cells == 0


def test_enumerate_budget():
    with pytest.raises(ResourceLimitError):
        enumerate_skew_immaculate((), (4, 4, 4, 4), search_limit=50)


def test_sigma_of():
    sigma = sigma_of(T_EXAMPLE, (3, 1, 4))
    assert sigma == Permutation((1, 3, 2))
    assert sigma.sign == -1
    assert sigma_of(T_EXAMPLE, (3, 3, 2)) is None


def test_T_family_members_are_valid():
    for t, sigma in enumerate_T_alpha_beta((2,), (2, 4)):
        assert is_immaculate(t)
        assert sigma_of(t, (2, 4)) == sigma


def test_signed_product_example():
    expected = LinComb(
        "S",
        {(3, 1, 4): 1, (2, 2, 4): 1, (3, 2, 3): 1, (5, 3): -1, (4, 3, 1): -1},
    )
    assert signed_product((2,), (2, 4)) == expected
    assert signed_product_via_tableaux((2,), (2, 4)) == expected


def test_signed_product_unit():
    assert signed_product((3, 1), ()) == LinComb.monomial("S", (3, 1))
    assert signed_product_via_tableaux((3, 1), ()) == LinComb.monomial("S", (3, 1))


def test_both_routes_match_oracle():
    for a in range(4):
        for b in range(4):
            for alpha in compositions_of(a):
                for beta in compositions_of(b):
                    want = product_in_S_oracle(alpha, beta)
                    assert signed_product(alpha, beta) == want
                    assert signed_product_via_tableaux(alpha, beta) == want


def test_count_immaculate_LR():
    # beta a partition: the constant is a plain tableau count
    assert count_immaculate_LR((1,), (2, 1), (2, 2)) == 1
    assert count_immaculate_LR((1,), (2, 1), (1, 1, 2)) == 0
    assert count_immaculate_LR((), (3,), (3,)) == 1
    assert count_immaculate_LR((1,), (1,), (3,)) == 0  # size mismatch
