import pytest

from hullforge.codefile import (
    format_code_file, load_code_file, parse_code_file, read_code_file,
)
from hullforge.errors import CodeFileError, FieldError
from tests.conftest import FIXTURES


class TestReadCodeFile:
    """Layout checks for the `p m n k` format."""

    def test_fixture(self, hamming):
        assert hamming.spec.q == 2
        assert (hamming.n, hamming.k) == (7, 4)

    def test_comments_blank_lines_and_crlf(self):
        text = "\ufeff# comment\r\n\r\n5 1 3 1  # header\r\n1 2 3\r\n"
        C = parse_code_file(text)
        assert C.gen.tolist() == [[1, 2, 3]]

    def test_raw_rows_are_kept(self):
        cf = read_code_file("5 1 3 2\n0 2 4\n1 0 0\n")
        assert cf.rows == ((0, 2, 4), (1, 0, 0))
        assert cf.spec.q == 5

    @pytest.mark.parametrize("text, message", [
        ("", "empty"),
        ("2 1 3\n1 1 1\n", "header"),
        ("2 one 3 1\n1 1 1\n", "four integers"),
        ("2 1 3 0\n", "1 <= k <= n"),
        ("2 1 3 4\n", "1 <= k <= n"),
        ("2 1 3 2\n1 1 1\n", "promises 2 rows"),
    ])
    def test_bad_layout(self, text, message):
        with pytest.raises(CodeFileError, match=message):
            read_code_file(text)

    @pytest.mark.parametrize("text, index", [
        ("3 1 3 2\n1 0 0\n1 2\n", 1),
        ("3 1 3 1\n1 a 0\n", 0),
        ("3 1 3 2\n1 0 0\n0 3 0\n", 1),
    ])
    def test_bad_rows_are_located(self, text, index):
        with pytest.raises(CodeFileError) as excinfo:
            read_code_file(text)
        assert excinfo.value.row_indices == [index]

    def test_invalid_field(self):
        with pytest.raises(FieldError):
            read_code_file("6 1 2 1\n1 1\n")

    def test_dependent_rows(self):
        with pytest.raises(CodeFileError) as excinfo:
            parse_code_file("2 1 3 2\n1 1 0\n1 1 0\n")
        assert excinfo.value.row_indices == [1]


class TestLoadAndFormat:

    def test_load(self):
        C, text = load_code_file(str(FIXTURES / "gf5_6_3.code"))
        assert C.k == 3
        assert text == (FIXTURES / "gf5_6_3.code").read_text(encoding="utf-8")

    def test_missing_file(self, temp_dir):
        with pytest.raises(FileNotFoundError, match="Code file not found"):
            load_code_file(str(temp_dir / "nope.code"))

    def test_format_writes_canonical_generator(self, gf9_code, temp_dir):
        text = format_code_file(gf9_code, comment="random [5,3] code\nseed 1")
        assert text.startswith("# random [5,3] code\n# seed 1\n3 2 5 3\n")
        path = temp_dir / "out.code"
        path.write_text(text, encoding="utf-8")
        assert load_code_file(str(path))[0] == gf9_code
