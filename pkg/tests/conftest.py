import itertools
import pytest
import tempfile
from pathlib import Path
from typing import Iterator, Sequence

from hullforge.codefile import parse_code_file
from hullforge.codes import LinearCode, make_code
from hullforge.gf import FieldSpec, make_field
from hullforge.matfq import MatrixFq

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
GOLDEN = FIXTURES / "golden"


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


def load_fixture(name: str) -> LinearCode:
    return parse_code_file((FIXTURES / name).read_text(encoding="utf-8"))


def build_code(p: int, m: int, rows: Sequence[Sequence[int]]) -> LinearCode:
    spec = make_field(p, m)
    return make_code(spec, MatrixFq.from_rows(spec, rows))


def all_codes(spec: FieldSpec, n: int) -> Iterator[LinearCode]:
    """Every nonzero code of length n, once each, via its rref generator."""
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [(i, j) for i, piv in enumerate(pivots)
                    for j in range(piv + 1, n) if j not in pivots]
            for values in itertools.product(range(spec.q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, piv in enumerate(pivots):
                    rows[i][piv] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield make_code(spec, MatrixFq.from_rows(spec, rows))


@pytest.fixture
def hamming() -> LinearCode:
    """[7,4,3] binary Hamming code."""
    return load_fixture("hamming74.code")


@pytest.fixture
def repetition() -> LinearCode:
    return load_fixture("repetition3.code")


@pytest.fixture
def selfdual() -> LinearCode:
    return load_fixture("selfdual2.code")


@pytest.fixture
def gf5_code() -> LinearCode:
    """[6,3,2]_5 with gramian diag(0, 2, 2), hull dimension 1."""
    return load_fixture("gf5_6_3.code")


@pytest.fixture
def gf7_lcd() -> LinearCode:
    return load_fixture("gf7_5_2_lcd.code")


@pytest.fixture
def gf9_code() -> LinearCode:
    """[5,3]_9 with hermitian hull dimension 1."""
    return load_fixture("gf9_5_3.code")


@pytest.fixture
def gf4_code() -> LinearCode:
    """[4,2]_4 whose hermitian hull is maximal self-orthogonal in it."""
    return load_fixture("gf4_4_2.code")


@pytest.fixture
def hyperbolic_gf2() -> LinearCode:
    """Binary [4,2] code with gramian [[0, 1], [1, 0]]."""
    return build_code(2, 1, [[1, 1, 0, 0], [1, 0, 1, 0]])
