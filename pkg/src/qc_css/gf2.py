"""Dense GF(2) matrix algebra on bit-packed rows.

Every matrix row is stored as a single Python int with bit j holding the
entry of column j, so a row operation is one XOR and a weight is one
popcount.  All functions are pure and never mutate their inputs; matrices
are safe to share across threads.

Row and column indices are 0-based throughout the library.  Only report
and CLI output converts to 1-based.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence


class FormatError(ValueError):
    """Malformed matrix text: bad header, ragged row, or illegal symbol."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


class BinaryMatrix:
    """Immutable dense matrix over GF(2)."""

    __slots__ = ("rows", "cols", "_words")

    def __init__(self, words: Iterable[int], cols: int):
        words = tuple(words)
        if cols < 1:
            raise ValueError(f"matrix needs at least one column, got {cols}")
        if not words:
            raise ValueError("matrix needs at least one row")
        limit = 1 << cols
        for i, w in enumerate(words):
            if not 0 <= w < limit:
                raise ValueError(f"row {i} does not fit into {cols} columns")
        self.rows = len(words)
        self.cols = cols
        self._words = words

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        """Build from a sequence of 0/1 row sequences."""
        if not rows:
            raise ValueError("matrix needs at least one row")
        cols = len(rows[0])
        words = []
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"ragged row {i}: expected {cols} entries, got {len(row)}")
            w = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is {v!r}, must be 0 or 1")
                w |= v << j
            words.append(w)
        return cls(words, cols)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BinaryMatrix":
        """Build from packed '0'/'1' strings, one per row."""
        return cls.from_rows([[int(ch) for ch in line] for line in lines])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls([0] * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls([1 << i for i in range(n)], n)

    def row_word(self, i: int) -> int:
        return self._words[i]

    def words(self) -> tuple[int, ...]:
        return self._words

    def row(self, i: int) -> tuple[int, ...]:
        w = self._words[i]
        return tuple((w >> j) & 1 for j in range(self.cols))

    def row_string(self, i: int) -> str:
        w = self._words[i]
        return "".join("1" if (w >> j) & 1 else "0" for j in range(self.cols))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self._words)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range for {self.cols} columns")
        return (self._words[i] >> j) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.cols == other.cols and self._words == other._words

    def __hash__(self) -> int:
        return hash((self.cols, self._words))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join(self.row_string(i) for i in range(self.rows))


def mul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Matrix product over GF(2).

    Row i of the result is the XOR of the rows of ``b`` selected by the
    set bits of row i of ``a``.
    """
    if a.cols != b.rows:
        raise ValueError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: "
            f"inner dimensions differ"
        )
    b_words = b.words()
    out = []
    for i in range(a.rows):
        w = a.row_word(i)
        acc = 0
        while w:
            low = w & -w
            acc ^= b_words[low.bit_length() - 1]
            w ^= low
        out.append(acc)
    return BinaryMatrix(out, b.cols)


def transpose(a: BinaryMatrix) -> BinaryMatrix:
    out = []
    for j in range(a.cols):
        w = 0
        for i in range(a.rows):
            w |= ((a.row_word(i) >> j) & 1) << i
        out.append(w)
    return BinaryMatrix(out, a.rows)


def rref(a: BinaryMatrix) -> tuple[BinaryMatrix, list[int], int]:
    """Reduced row-echelon form over GF(2).

    Pivots are chosen in the leftmost nonzero column, topmost available
    row, which makes the output canonical.  Returns (R, pivot columns,
    rank); R keeps the input shape with zero rows at the bottom.
    """
    words = list(a.words())
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        bit = 1 << c
        piv = None
        for i in range(r, a.rows):
            if words[i] & bit:
                piv = i
                break
        if piv is None:
            continue
        words[r], words[piv] = words[piv], words[r]
        for i in range(a.rows):
            if i != r and words[i] & bit:
                words[i] ^= words[r]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return BinaryMatrix(words, a.cols), pivots, len(pivots)


def _nullspace_words(a: BinaryMatrix) -> list[int]:
    reduced, pivots, _ = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, p in enumerate(pivots):
            if (reduced.row_word(i) >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def nullspace_basis(a: BinaryMatrix) -> list[tuple[int, ...]]:
    """Basis of the right kernel {x : A x^T = 0}, one vector per free column.

    The basis has ``cols - rank`` vectors, listed by ascending free column.
    """
    n = a.cols
    return [tuple((v >> j) & 1 for j in range(n)) for v in _nullspace_words(a)]


def in_row_space(a: BinaryMatrix, vector_word: int) -> bool:
    """Whether a bit-packed vector lies in the row space of ``a``."""
    reduced, pivots, _ = rref(a)
    w = vector_word
    for i, p in enumerate(pivots):
        if (w >> p) & 1:
            w ^= reduced.row_word(i)
    return w == 0


def forced_zero_columns(a: BinaryMatrix) -> set[int]:
    """Columns that vanish on the whole kernel of ``a``.

    Column i is forced to zero exactly when the unit vector e_i lies in
    the row space of ``a``; the check reduces e_i against the RREF rows.
    """
    reduced, pivots, _ = rref(a)
    pivot_rows = list(zip(pivots, reduced.words()))
    forced = set()
    for i in range(a.cols):
        w = 1 << i
        for p, row in pivot_rows:
            if (w >> p) & 1:
                w ^= row
        if w == 0:
            forced.add(i)
    return forced


def row_weight_distribution(a: BinaryMatrix) -> Counter:
    """Histogram mapping row Hamming weight to the number of such rows."""
    return Counter(_popcount(a.row_word(i)) for i in range(a.rows))


def column_weight_distribution(a: BinaryMatrix) -> Counter:
    """Histogram mapping column Hamming weight to the number of such columns."""
    counts = Counter()
    for j in range(a.cols):
        counts[sum((a.row_word(i) >> j) & 1 for i in range(a.rows))] += 1
    return counts


def parse_bmat(text: str) -> BinaryMatrix:
    """Parse the "bmat" text format.

    '#' lines and blank lines are ignored; the first data line is
    "<rows> <cols>"; each following data line is one row, written either
    packed ("0110") or space-separated ("0 1 1 0").
    """
    shape: tuple[int, int] | None = None
    words: list[int] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if shape is None:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise FormatError(f"line {ln}: expected '<rows> <cols>' header, got {line!r}")
            rows, cols = int(parts[0]), int(parts[1])
            if rows < 1 or cols < 1:
                raise FormatError(f"line {ln}: matrix dimensions must be positive, got {rows}x{cols}")
            shape = (rows, cols)
            continue
        bits = "".join(line.split())
        bad = next((ch for ch in bits if ch not in "01"), None)
        if bad is not None:
            raise FormatError(f"line {ln}: illegal character {bad!r} in matrix row")
        if len(bits) != shape[1]:
            raise FormatError(f"line {ln}: expected {shape[1]} entries, got {len(bits)}")
        if len(words) == shape[0]:
            raise FormatError(f"line {ln}: more than {shape[0]} matrix rows")
        words.append(int(bits[::-1], 2) if bits else 0)
    if shape is None:
        raise FormatError("missing '<rows> <cols>' header")
    if len(words) != shape[0]:
        raise FormatError(f"expected {shape[0]} matrix rows, got {len(words)}")
    return BinaryMatrix(words, shape[1])


def write_bmat(a: BinaryMatrix) -> str:
    """Serialize to the "bmat" format with packed rows."""
    lines = [f"{a.rows} {a.cols}"]
    lines.extend(a.row_string(i) for i in range(a.rows))
    return "\n".join(lines) + "\n"
