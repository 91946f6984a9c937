"""Точные ганкелевы матрицы по измеренной траектории: ранг, принадлежность
линейной оболочке столбцов и проверка свободы переменных по полноте ранга."""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from app.exceptions import (DimensionMismatch, LengthError, ParseError,
                            UnknownBlock)
from app.models.matrix import Rational, RationalMatrix, RealTrajectory

logger = logging.getLogger(__name__)


def hankel(w: RealTrajectory, L: int) -> RationalMatrix:
    if L < 1 or L > w.length:
        raise LengthError(f"L must be in 1..{w.length}, got {L}")
    cols = w.length - L + 1
    rows = [
        [w.samples[i + j][k] for j in range(cols)]
        for i in range(L)
        for k in range(w.width)
    ]
    return RationalMatrix.from_rows(rows, cols=cols)


def _integer_rows(matrix: RationalMatrix) -> tuple[list[list[int]], Fraction]:
    """Домножает строки на НОК знаменателей; возвращает строки и общий множитель."""
    rows, scale = [], Fraction(1)
    for row in matrix.entries:
        factor = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * factor) for x in row])
        scale *= factor
    return rows, scale


def _primitive(row: list[int]) -> list[int]:
    g = gcd(*row)
    return [x // g for x in row] if g > 1 else row


def _echelon(rows: list[list[int]], cols: int) -> list[list[int]]:
    rows = [list(row) for row in rows]
    pivot_row = 0
    for col in range(cols):
        pivot = next((i for i in range(pivot_row, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        head = rows[pivot_row]
        for i in range(pivot_row + 1, len(rows)):
            factor = rows[i][col]
            if factor:
                rows[i] = _primitive([head[col] * a - factor * b for a, b in zip(rows[i], head)])
        pivot_row += 1
    return rows[:pivot_row]


def rank(matrix: RationalMatrix) -> int:
    rows, _ = _integer_rows(matrix)
    return len(_echelon(rows, matrix.cols))


def determinant(matrix: RationalMatrix) -> Fraction:
    """Алгоритм Барейса на целочисленных строках, деления точные."""
    if matrix.rows != matrix.cols:
        raise DimensionMismatch(f"determinant of a {matrix.rows}x{matrix.cols} matrix")
    n = matrix.rows
    if n == 0:
        return Fraction(1)
    m, scale = _integer_rows(matrix)
    sign, previous = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return Fraction(sign * m[n - 1][n - 1]) / scale


def free_rows_check(w: RealTrajectory, free_blocks: Iterable[int], L: int) -> bool:
    """Полон ли по строкам блок ганкелевой матрицы, отвечающий свободным переменным."""
    free_blocks = sorted(set(free_blocks))
    offsets = w.block_offsets()
    for block in free_blocks:
        if not 0 <= block < len(offsets):
            raise UnknownBlock(f"block {block} not in 0..{len(offsets) - 1}")
    H = hankel(w, L)
    picked = [
        i * w.width + k
        for i in range(L)
        for block in free_blocks
        for k in offsets[block]
    ]
    sub = H.submatrix(picked)
    result = rank(sub) == sub.rows
    logger.info("free rows check: blocks=%s L=%d -> %s", free_blocks, L, result)
    return result


def in_span(H: RationalMatrix, vector: Sequence[Rational]) -> bool:
    if len(vector) != H.rows:
        raise DimensionMismatch(f"vector has length {len(vector)}, H has {H.rows} rows")
    return rank(H.with_column(vector)) == rank(H)


def _parse_number(token: str, line_no: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {line_no}: {token!r} is not a rational number")


def parse_vector(text: str) -> tuple[Fraction, ...]:
    tokens = text.replace(",", " ").split()
    return tuple(_parse_number(token, 1) for token in tokens)


def parse_trajectory(text: str) -> RealTrajectory:
    """Формат: необязательная строка `# blocks 1 2`, затем по строке на момент времени.

    Без заголовка вся строка считается одним блоком."""
    blocks: tuple[int, ...] | None = None
    samples = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if words and words[0] == "blocks":
                if blocks is not None or samples:
                    raise ParseError(f"line {line_no}: blocks header must come first")
                try:
                    blocks = tuple(int(x) for x in words[1:])
                except ValueError:
                    raise ParseError(f"line {line_no}: block sizes must be integers")
            continue
        samples.append(tuple(_parse_number(token, line_no) for token in line.split()))
    if not samples:
        raise ParseError("trajectory has no samples")
    if blocks is None:
        blocks = (len(samples[0]),)
    return RealTrajectory(blocks, tuple(samples))
