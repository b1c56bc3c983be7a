import pytest

from minuscule.errors import InvalidTableau, TypeMismatch
from minuscule.paths import WeightSequence, enumerate_paths, rotate
from minuscule.rootsys import build_root_system
from minuscule.tableaux import (
    RowStrictTableau,
    path_to_tableau,
    promote,
    tableau_to_path,
)

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
A3 = build_root_system("A", 3)
W = (1,)

TYPE_A_SEQUENCES = [
    WeightSequence(A1, (W, W)),
    WeightSequence(A1, (W,) * 4),
    WeightSequence(A1, (W,) * 6),
    WeightSequence(A2, ((1, 0),) * 3),
    WeightSequence(A2, ((1, 0), (0, 1), (1, 0), (0, 1))),
    WeightSequence(A2, ((1, 0), (1, 0), (0, 1), (1, 0), (1, 0))),
    WeightSequence(A3, ((0, 1, 0),) * 4),
    WeightSequence(A3, ((1, 0, 0), (0, 0, 1), (1, 0, 0), (0, 0, 1))),
]


class TestValidation:
    def test_rejects_ragged(self):
        with pytest.raises(InvalidTableau):
            RowStrictTableau(((1, 2), (3,)))

    def test_rejects_weak_rows(self):
        with pytest.raises(InvalidTableau):
            RowStrictTableau(((1, 1), (2, 3)))

    def test_rejects_decreasing_columns(self):
        with pytest.raises(InvalidTableau):
            RowStrictTableau(((2, 3), (1, 4)))

    def test_rejects_nonpositive_entries(self):
        with pytest.raises(InvalidTableau):
            RowStrictTableau(((0, 1),))

    def test_accepts_repeats_within_a_column(self):
        t = RowStrictTableau(((1, 3), (2, 3), (4, 5)))
        assert t.content == (1, 1, 2, 1, 1)
        assert t.n_rows == 3 and t.n_cols == 2


class TestPathBijection:
    def test_forward_values(self):
        p1, p2 = enumerate_paths(WeightSequence(A1, (W,) * 4))
        assert path_to_tableau(p1).rows == ((1, 3), (2, 4))
        assert path_to_tableau(p2).rows == ((1, 2), (3, 4))
        (column,) = enumerate_paths(WeightSequence(A2, ((1, 0),) * 3))
        assert path_to_tableau(column).rows == ((1,), (2,), (3,))

    def test_inverse_values(self):
        p = tableau_to_path(RowStrictTableau(((1, 3), (2, 4))))
        assert p.points == ((1,), (0,), (1,), (0,))
        p = tableau_to_path(RowStrictTableau(((1, 2), (3, 4))))
        assert p.points == ((1,), (2,), (1,), (0,))

    def test_type_mismatch(self):
        d4 = build_root_system("D", 4)
        seq = WeightSequence(d4, (d4.fundamental_weight(1),) * 4)
        with pytest.raises(TypeMismatch):
            path_to_tableau(enumerate_paths(seq)[0])

    def test_full_column_entry_rejected(self):
        with pytest.raises(InvalidTableau):
            tableau_to_path(RowStrictTableau(((1, 2), (1, 3))))

    def test_single_row_rejected(self):
        with pytest.raises(InvalidTableau):
            tableau_to_path(RowStrictTableau(((1, 2, 3),)))

    @pytest.mark.parametrize("seq", TYPE_A_SEQUENCES)
    def test_round_trip(self, seq):
        for p in enumerate_paths(seq):
            assert tableau_to_path(path_to_tableau(p)).points == p.points


class TestPromotion:
    def test_spec_values(self):
        assert promote(RowStrictTableau(((1, 3), (2, 4)))).rows == ((1, 2), (3, 4))
        assert promote(RowStrictTableau(((1, 2), (3, 4)))).rows == ((1, 3), (2, 4))
        assert promote(RowStrictTableau(((1,), (2,), (3,)))).rows == ((1,), (2,), (3,))

    def test_column_repeat_case(self):
        # the 3s share a column; the slides must not collide
        t = RowStrictTableau(((1, 3), (2, 3), (4, 5)))
        assert promote(t).rows == ((1, 2), (2, 4), (3, 5))

    @pytest.mark.parametrize("seq", TYPE_A_SEQUENCES)
    def test_equivariance(self, seq):
        for p in enumerate_paths(seq):
            assert promote(path_to_tableau(p)).rows == path_to_tableau(rotate(p)).rows

    @pytest.mark.parametrize("seq", TYPE_A_SEQUENCES)
    def test_order_divides_m(self, seq):
        m = len(seq)
        for p in enumerate_paths(seq):
            t = path_to_tableau(p)
            image = t
            for _ in range(m):
                image = promote(image)
            assert image.rows == t.rows

    @pytest.mark.parametrize("seq", TYPE_A_SEQUENCES)
    def test_content_shifts_cyclically(self, seq):
        for p in enumerate_paths(seq):
            t = path_to_tableau(p)
            before = t.content
            after = promote(t).content
            assert after == before[1:] + before[:1]

    @pytest.mark.parametrize("seq", TYPE_A_SEQUENCES)
    def test_outputs_stay_valid(self, seq):
        for p in enumerate_paths(seq):
            t = promote(path_to_tableau(p))
            # the constructor re-validates shape and monotonicity
            assert RowStrictTableau(t.rows).rows == t.rows
