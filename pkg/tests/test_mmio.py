"""Matrix file round-trips and malformed-input reporting."""

import numpy as np
import pytest

from matsketch import ArgumentError, DataFormatError, load_matrix, save_matrix

from conftest import rand


def test_array_body_runs_down_columns(tmp_path):
    p = tmp_path / "a.mtx"
    p.write_text("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n")
    np.testing.assert_array_equal(load_matrix(p), [[1.0, 3.0], [2.0, 4.0]])


def test_array_tolerates_comments_and_multiple_tokens(tmp_path):
    p = tmp_path / "a.mtx"
    p.write_text(
        "%%MatrixMarket matrix array real general\n"
        "% a comment\n"
        "2 3\n"
        "1 2\n"
        "\n"
        "3 4 5 6\n")
    np.testing.assert_array_equal(
        load_matrix(p), [[1.0, 3.0, 5.0], [2.0, 4.0, 6.0]])


def test_coordinate_sums_duplicates(tmp_path):
    p = tmp_path / "c.mtx"
    p.write_text(
        "%%MatrixMarket matrix coordinate real general\n"
        "3 3 3\n"
        "1 1 2.5\n"
        "1 1 0.5\n"
        "3 2 -1\n")
    A = load_matrix(p)
    want = np.zeros((3, 3))
    want[0, 0] = 3.0
    want[2, 1] = -1.0
    np.testing.assert_array_equal(A, want)


def test_csv_rows_in_order(tmp_path):
    p = tmp_path / "m.csv"
    p.write_text("1,2\n3,4\n")
    np.testing.assert_array_equal(load_matrix(p), [[1.0, 2.0], [3.0, 4.0]])


def test_format_autodetect(tmp_path):
    mm = tmp_path / "x.dat"
    mm.write_text("%%MatrixMarket matrix array real general\n1 1\n7\n")
    np.testing.assert_array_equal(load_matrix(mm), [[7.0]])
    csv = tmp_path / "y.dat"
    csv.write_text("7\n")
    np.testing.assert_array_equal(load_matrix(csv), [[7.0]])


@pytest.mark.parametrize("fmt", ["matrixmarket", "csv"])
def test_round_trip_is_bit_identical(tmp_path, fmt):
    A = rand(7).normal(size=(5, 3)) * np.pi
    A[0, 0] = 0.1  # not representable exactly; repr must preserve the bits
    p = tmp_path / "rt.dat"
    save_matrix(p, A, format=fmt)
    B = load_matrix(p, format=fmt)
    assert B.shape == A.shape
    assert np.all(A == B)


def test_save_vector_becomes_row(tmp_path):
    p = tmp_path / "v.csv"
    save_matrix(p, np.array([1.0, 2.0, 3.0]), format="csv")
    assert load_matrix(p).shape == (1, 3)


@pytest.mark.parametrize("text, lineno", [
    ("%%MatrixMarket matrix array real general\n2 2\n1\nx\n3\n4\n", ":4:"),
    ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 5 1.0\n", ":3:"),
    ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1\n", ":3:"),
    ("1,2\n3\n", ":2:"),
    ("1,nan\n", ":1:"),
])
def test_errors_carry_line_numbers(tmp_path, text, lineno):
    p = tmp_path / "bad.dat"
    p.write_text(text)
    with pytest.raises(DataFormatError, match=lineno):
        load_matrix(p)


@pytest.mark.parametrize("text", [
    "not a matrix file at all, but with, commas\nno",
    "%%MatrixMarket matrix array complex general\n1 1\n1 0\n",
    "%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n",
    "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n",
    "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n",
    "",
])
def test_malformed_files_are_refused(tmp_path, text):
    p = tmp_path / "bad.mtx"
    p.write_text(text)
    with pytest.raises(DataFormatError):
        load_matrix(p)


def test_unknown_format_arguments(tmp_path):
    p = tmp_path / "m.csv"
    p.write_text("1\n")
    with pytest.raises(ArgumentError):
        load_matrix(p, format="tsv")
    with pytest.raises(ArgumentError):
        save_matrix(p, np.eye(2), format="tsv")


def test_missing_file_is_a_data_error(tmp_path):
    with pytest.raises(DataFormatError, match="cannot read"):
        load_matrix(tmp_path / "nope.csv")
