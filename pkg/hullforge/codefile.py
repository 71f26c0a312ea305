"""
Code files: a `p m n k` header followed by k rows of n element codes.

`#` starts a comment, blank lines are ignored, LF and CRLF are both fine.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from hullforge.codes import LinearCode, make_code
from hullforge.errors import CodeFileError
from hullforge.gf import FieldSpec, make_field
from hullforge.matfq import MatrixFq, rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeFile:
    p: int
    m: int
    n: int
    k: int
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def spec(self) -> FieldSpec:
        return make_field(self.p, self.m)

    def to_code(self) -> LinearCode:
        spec = self.spec
        G = MatrixFq.from_rows(spec, self.rows)
        if rank(G) < self.k:
            dependent = _dependent_rows(G)
            raise CodeFileError(
                f"generator rows are linearly dependent (rank {rank(G)} < k={self.k}); "
                f"dependent rows: {dependent}",
                dependent,
            )
        return make_code(spec, G)


def _dependent_rows(G: MatrixFq) -> List[int]:
    """Indices of rows lying in the span of the rows before them."""
    dependent, current = [], 0
    for i in range(G.rows):
        r = rank(G.select_rows(range(i + 1)))
        if r == current:
            dependent.append(i)
        current = r
    return dependent


def _content_lines(text: str) -> List[List[str]]:
    lines = []
    for raw in text.lstrip("\ufeff").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    return lines


def read_code_file(text: str) -> CodeFile:
    """Parse and check the layout; rank is checked by CodeFile.to_code."""
    lines = _content_lines(text)
    if not lines:
        raise CodeFileError("empty code file: expected a `p m n k` header")
    header = lines[0]
    if len(header) != 4:
        raise CodeFileError(f"header must be `p m n k`, got {' '.join(header)!r}")
    try:
        p, m, n, k = (int(t) for t in header)
    except ValueError:
        raise CodeFileError(f"header must hold four integers, got {' '.join(header)!r}")
    if n < 1 or not 1 <= k <= n:
        raise CodeFileError(f"header needs n >= 1 and 1 <= k <= n, got n={n}, k={k}")
    q = make_field(p, m).q

    body = lines[1:]
    if len(body) != k:
        raise CodeFileError(f"header promises {k} rows, file has {len(body)}")
    rows = []
    for i, tokens in enumerate(body):
        if len(tokens) != n:
            raise CodeFileError(f"row {i} has {len(tokens)} entries, expected {n}", [i])
        try:
            row = tuple(int(t) for t in tokens)
        except ValueError:
            raise CodeFileError(f"row {i} has a non-integer entry", [i])
        if any(not 0 <= x < q for x in row):
            raise CodeFileError(f"row {i} has an element code outside [0, {q})", [i])
        rows.append(row)
    return CodeFile(p=p, m=m, n=n, k=k, rows=tuple(rows))


def parse_code_file(text: str) -> LinearCode:
    return read_code_file(text).to_code()


def load_code_file(path: str) -> Tuple[LinearCode, str]:
    """Read a code file from disk; returns the code and the raw text."""
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Code file not found: {path}")
    text = file_path.read_text(encoding="utf-8")
    code = parse_code_file(text)
    logger.info(f"Loaded {code} from {path}")
    return code, text


def format_code_file(C: LinearCode, comment: Optional[str] = None) -> str:
    lines = [f"# {line}" for line in (comment or "").splitlines()]
    lines.append(f"{C.spec.p} {C.spec.m} {C.n} {C.k}")
    lines += [" ".join(str(x) for x in C.gen.row(i)) for i in range(C.k)]
    return "\n".join(lines) + "\n"
