from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from app.exceptions import DimensionMismatch, LengthError

Rational = Fraction | int | str


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise DimensionMismatch(
                f"entries do not form a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]], cols: int | None = None) -> "RationalMatrix":
        rows = [list(row) for row in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), width, tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], cols=cols)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def submatrix(self, row_indices: Iterable[int]) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [self.entries[i] for i in row_indices], cols=self.cols
        )

    def with_column(self, vector: Sequence[Rational]) -> "RationalMatrix":
        if len(vector) != self.rows:
            raise DimensionMismatch(
                f"vector has length {len(vector)}, matrix has {self.rows} rows"
            )
        return RationalMatrix.from_rows(
            [list(row) + [Fraction(x)] for row, x in zip(self.entries, vector)],
            cols=self.cols + 1,
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return RationalMatrix.from_rows(
            [
                [sum((a * b for a, b in zip(row, other.column(j))), Fraction(0))
                 for j in range(other.cols)]
                for row in self.entries
            ],
            cols=other.cols,
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


@dataclass(frozen=True)
class RealTrajectory:
    """Измеренная траектория: блоки переменных и вектор отсчётов на каждый момент."""

    blocks: tuple[int, ...]
    samples: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(self.blocks)
        if not blocks or any(size < 1 for size in blocks):
            raise LengthError(f"block sizes must be positive, got {blocks}")
        samples = tuple(tuple(Fraction(x) for x in sample) for sample in self.samples)
        if not samples:
            raise LengthError("trajectory must have at least one sample")
        width = sum(blocks)
        for k, sample in enumerate(samples, start=1):
            if len(sample) != width:
                raise DimensionMismatch(
                    f"sample {k} has {len(sample)} entries, blocks need {width}"
                )
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "samples", samples)

    @classmethod
    def scalar(cls, values: Iterable[Rational]) -> "RealTrajectory":
        return cls((1,), tuple((v,) for v in values))

    @property
    def length(self) -> int:
        return len(self.samples)

    @property
    def width(self) -> int:
        return sum(self.blocks)

    def block_offsets(self) -> list[range]:
        offsets, start = [], 0
        for size in self.blocks:
            offsets.append(range(start, start + size))
            start += size
        return offsets
