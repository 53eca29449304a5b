"""Cartan matrices: validation, classification, companions, glide data."""

import pytest

from refdata import RANK_LE_8_TYPES
from friezes.cartan import (NotCartan, NotFiniteType, NotSymmetrizable,
                            UnrecognizedLabelling, cartan_type, classify,
                            coxeter_companion, coxeter_identity_holds,
                            coxeter_number, exchange_matrix, glide_data,
                            is_finite_type, is_indecomposable,
                            parse_cartan, symmetrizer, validate_cartan)


def test_validate_accepts_standard_examples():
    A = validate_cartan([[2, -1], [-1, 2]])
    assert A.label == "A2"
    G = validate_cartan([[2, -1], [-3, 2]])
    assert G.label == "G2"          # recognized up to relabelling
    assert classify(G).exact is False
    assert classify(cartan_type("G2")).exact is True


def test_validate_rejects_bad_matrices():
    with pytest.raises(NotCartan):
        validate_cartan([[2, 1], [-1, 2]])          # positive off-diagonal
    with pytest.raises(NotCartan):
        validate_cartan([[1, -1], [-1, 2]])         # diagonal != 2
    with pytest.raises(NotCartan):
        validate_cartan([[2, 0], [-1, 2]])          # zero-pattern asymmetry
    with pytest.raises(NotCartan):
        validate_cartan([[2, -1, 0], [-1, 2, -1]])  # not square


def test_not_symmetrizable_cycle():
    entries = [[2, -1, -2], [-2, 2, -1], [-1, -2, 2]]
    with pytest.raises(NotSymmetrizable):
        validate_cartan(entries)


def test_symmetrizer_is_positive_and_works():
    for name in ("A3", "B3", "C3", "G2", "F4"):
        A = cartan_type(name)
        d = symmetrizer(A)
        assert all(x >= 1 for x in d)
        for i in range(A.rank):
            for j in range(A.rank):
                assert d[i] * A.entries[i][j] == d[j] * A.entries[j][i]


def test_is_finite_type():
    assert is_finite_type(cartan_type("A2"))
    assert not is_finite_type(cartan_type("A1~"))
    assert is_finite_type(cartan_type("G2"))        # minors 2, 2, 1
    for name in RANK_LE_8_TYPES:
        assert is_finite_type(cartan_type(name)), name
    for b in range(1, 5):
        for c in range(1, 5):
            A = validate_cartan([[2, -b], [-c, 2]])
            assert is_finite_type(A) == (b * c <= 3)


def test_indecomposable():
    assert is_indecomposable(cartan_type("A3"))
    block = validate_cartan([[2, 0], [0, 2]])
    assert not is_indecomposable(block)
    assert is_finite_type(block)                    # A1 x A1 is finite type


def test_exchange_matrix_examples():
    assert exchange_matrix(cartan_type("A2")) == ((0, -1), (1, 0))
    assert exchange_matrix(cartan_type("A3")) == ((0, -1, 0), (1, 0, -1), (0, 1, 0))
    assert exchange_matrix(cartan_type("A1")) == ((0,),)


def test_exchange_matrix_skew_symmetrizable_by_same_d():
    for name in ("A3", "B3", "C4", "G2", "F4", "D4"):
        A = cartan_type(name)
        d = symmetrizer(A)
        B = exchange_matrix(A)
        for i in range(A.rank):
            for j in range(A.rank):
                assert d[i] * B[i][j] == -d[j] * B[j][i]


def test_coxeter_companion_a2():
    comp = coxeter_companion(cartan_type("A2"))
    assert comp.lower == ((1, 0), (-1, 1))
    assert comp.upper == ((1, -1), (0, 1))
    assert comp.companion == ((-1, 1), (-1, 0))
    assert comp.companion == tuple(
        tuple(-sum(comp.lower[j][t] * _uinv(comp.upper)[t][i] for t in range(2))
              for j in range(2)) for i in range(2))


def _uinv(U):
    from friezes.cartan import mat_inverse_frac
    return mat_inverse_frac(U)


def test_coxeter_companion_a1():
    assert coxeter_companion(cartan_type("A1")).companion == ((-1,),)


@pytest.mark.parametrize("name", RANK_LE_8_TYPES)
def test_coxeter_identity_all_types(name):
    A = cartan_type(name)
    assert coxeter_identity_holds(A)


def test_coxeter_number_matches_order():
    # order cross-check is part of coxeter_identity_holds; spot-check values
    expected = {"A1": 2, "A2": 3, "B2": 4, "C2": 4, "G2": 6, "A3": 4,
                "D4": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30}
    for name, h in expected.items():
        assert coxeter_number(name) == h


def test_glide_data_examples():
    g = glide_data(cartan_type("A3"))
    assert g.involution == (3, 2, 1)
    assert g.shifts == (3, 2, 1)
    assert g.period == 6
    g = glide_data(cartan_type("G2"))
    assert g.involution == (1, 2) and g.shifts == (3, 3) and g.period == 8
    g = glide_data(cartan_type("A1"))
    assert g.involution == (1,) and g.shifts == (1,) and g.period == 4
    g = glide_data(cartan_type("A2"))
    assert g.involution == (2, 1) and g.shifts == (2, 1) and g.period == 5


def test_glide_data_case_families():
    for name in ("B2", "C3", "D4", "F4", "E7"):
        g = glide_data(cartan_type(name))
        assert g.involution == tuple(range(1, len(g.involution) + 1))
        assert all(m == g.coxeter_number // 2 for m in g.shifts)
    g5 = glide_data(cartan_type("D5"))
    assert g5.involution == (1, 2, 3, 5, 4)
    assert all(m == 4 for m in g5.shifts)
    g6 = glide_data(cartan_type("E6"))
    assert sorted(g6.involution) == [1, 2, 3, 4, 5, 6]
    assert g6.involution != (1, 2, 3, 4, 5, 6)


def test_glide_data_shift_invariant():
    for name in RANK_LE_8_TYPES:
        if name.startswith("A") and name.endswith("~"):
            continue
        g = glide_data(cartan_type(name))
        for i in range(len(g.shifts)):
            istar = g.involution[i] - 1
            assert g.shifts[i] + g.shifts[istar] + 2 == g.period


def test_glide_data_relabelled_matrix():
    # a relabelled A3 gets glide data computed on its own labelling; the
    # shifts are not a permutation of the standard ones (arrow counts along
    # the diagram paths change), and the values below were validated by
    # direct invariance checks on knitted rational patterns
    A = validate_cartan([[2, -1, -1], [-1, 2, 0], [-1, 0, 2]])  # path 2-1-3
    g = glide_data(A)
    assert g.coxeter_number == 4
    assert g.involution == (1, 3, 2)
    assert g.shifts == (2, 2, 2)


def test_glide_errors():
    with pytest.raises(NotFiniteType):
        glide_data(cartan_type("A1~"))
    with pytest.raises((NotFiniteType, UnrecognizedLabelling)):
        glide_data(validate_cartan([[2, 0], [0, 2]]))


def test_parse_cartan():
    assert parse_cartan("A3").label == "A3"
    A = parse_cartan("2,-1;-1,2")
    assert A.entries == ((2, -1), (-1, 2))
    assert parse_cartan("A1~").entries == ((2, -2), (-2, 2))


def test_classification_table_pins_orientations():
    # multi-edge orientations are pinned by data: C has the -2 in the last
    # column, B in the last row, G2 has the -3 in the first row
    assert cartan_type("B3").entries == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    assert cartan_type("C3").entries == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert cartan_type("G2").entries == ((2, -3), (-1, 2))
    assert cartan_type("F4").entries == ((2, -1, 0, 0), (-1, 2, -1, 0),
                                         (0, -2, 2, -1), (0, 0, -1, 2))
