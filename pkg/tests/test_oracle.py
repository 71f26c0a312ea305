import pytest

from hullforge.codes import dual, hull, min_distance, random_code
from hullforge.config import EnumerationBudget
from hullforge.errors import BudgetExceeded, CodeFileError
from hullforge.gf import make_field
from hullforge.matfq import Form
from hullforge.oracle import (
    enumerate_codewords, format_golden, hull_by_enumeration, maximal_so_by_enumeration,
    min_distance_by_enumeration, parse_golden,
)
from tests.conftest import GOLDEN


class TestEnumeration:

    def test_codeword_count_and_order(self, hamming):
        words = list(enumerate_codewords(hamming))
        assert len(words) == 16
        assert words[0] == (0,) * 7
        assert words[1] == (0, 0, 0, 1, 1, 1, 1)
        assert len(set(words)) == 16

    def test_budget(self, hamming):
        with pytest.raises(BudgetExceeded):
            list(enumerate_codewords(hamming, EnumerationBudget(15)))


class TestReferenceResults:
    """Brute-force answers agree with the matrix layer."""

    def test_hamming_hull(self, hamming):
        words, ell = hull_by_enumeration(hamming)
        assert ell == 3
        assert all(sum(1 for x in w if x) in (0, 4) for w in words)
        assert words == frozenset(enumerate_codewords(dual(hamming)))

    def test_hermitian_hull(self, gf4_code):
        _, ell = hull_by_enumeration(gf4_code, Form.HERMITIAN)
        assert ell == 1

    def test_min_distance(self, hamming, gf9_code):
        assert min_distance_by_enumeration(hamming) == 3
        assert min_distance_by_enumeration(gf9_code) == 2

    def test_maximality(self, hamming, hyperbolic_gf2):
        assert maximal_so_by_enumeration(hamming)
        assert not maximal_so_by_enumeration(hyperbolic_gf2)

    @pytest.mark.parametrize("p, m", [(3, 1), (2, 2), (5, 1), (3, 2)])
    def test_random_codes(self, p, m):
        spec = make_field(p, m)
        forms = [Form.EUCLIDEAN] + ([Form.HERMITIAN] if spec.has_conjugation else [])
        for seed in range(10):
            C = random_code(spec, 5, 2, seed=seed)
            assert min_distance_by_enumeration(C) == min_distance(C)
            for form in forms:
                assert hull_by_enumeration(C, form)[1] == hull(C, form).ell


class TestGoldenFiles:
    """Committed golden files reproduce byte for byte."""

    @pytest.mark.parametrize("name, what", [
        ("hamming74.hull.golden", "hull"),
        ("hamming74.codewords.golden", "codewords"),
    ])
    def test_reformat_is_identity(self, name, what):
        text = (GOLDEN / name).read_text(encoding="utf-8")
        spec, n, k, words = parse_golden(text)
        command = f"hullforge oracle-dump fixtures/hamming74.code --what {what}"
        assert format_golden(spec, n, words, command) == text

    def test_hull_golden_matches_oracle(self, hamming):
        _, n, k, words = parse_golden((GOLDEN / "hamming74.hull.golden").read_text(encoding="utf-8"))
        assert (n, k) == (7, 3)
        assert frozenset(words) == hull_by_enumeration(hamming)[0]

    def test_codewords_golden_matches_enumeration(self, hamming):
        _, _, k, words = parse_golden(
            (GOLDEN / "hamming74.codewords.golden").read_text(encoding="utf-8"))
        assert k == 4
        assert words == list(enumerate_codewords(hamming))

    @pytest.mark.parametrize("text", [
        "",
        "2 1 3\n",
        "2 1 2 1\n0 0\n",
        "2 1 2 1\n0 0\n1 x\n",
        "2 1 2 1\n0 0\n1 2\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(CodeFileError):
            parse_golden(text)
