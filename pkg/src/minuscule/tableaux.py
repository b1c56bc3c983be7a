"""Rectangular row-strict tableaux, their path bijection, and promotion.

Internally everything runs in shape coordinates (length-n weakly
decreasing integer vectors): shapes grow monotonically as entries are
added, which keeps the slides local.  Conversion to rank n-1 weights
(consecutive differences of the shape vector) happens only at the path
boundary.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgorithmInvariantViolated, InvalidTableau, TypeMismatch
from .paths import LittelmannPath, WeightSequence, _sub
from .rootsys import build_root_system


@dataclass(frozen=True)
class RowStrictTableau:
    """n x b array, rows strictly increasing, columns weakly increasing."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise InvalidTableau("tableau must have at least one box")
        b = len(rows[0])
        if any(len(row) != b for row in rows):
            raise InvalidTableau("tableau must be rectangular")
        for row in rows:
            if any(x < 1 for x in row):
                raise InvalidTableau("entries must be positive integers")
            if any(a >= c for a, c in zip(row, row[1:])):
                raise InvalidTableau(f"row {row} is not strictly increasing")
        for c in range(b):
            col = [row[c] for row in rows]
            if any(a > d for a, d in zip(col, col[1:])):
                raise InvalidTableau(f"column {c + 1} is not weakly increasing")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def content(self) -> tuple[int, ...]:
        top = max(max(row) for row in self.rows)
        counts = [0] * top
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def to_json_list(self):
        return [list(row) for row in self.rows]


def _standard_lift(step, box_count, n):
    """0/1 vector of length n with consecutive differences ``step`` summing
    to ``box_count``: the rows the new entry occupies."""
    suffix = [0] * n
    for k in range(n - 2, -1, -1):
        suffix[k] = suffix[k + 1] + step[k]
    base, rem = divmod(box_count - sum(suffix), n)
    if rem:
        raise AlgorithmInvariantViolated("step does not lift to the standard basis")
    lift = [base + s for s in suffix]
    if set(lift) - {0, 1}:
        raise AlgorithmInvariantViolated(f"lift {lift} is not a 0/1 vector")
    return lift


def path_to_tableau(p: LittelmannPath) -> RowStrictTableau:
    """Record, for each step, the rows in which its entry lands."""
    rs = p.seq.rs
    if rs.family != "A":
        raise TypeMismatch(f"tableaux need type A, got {rs}")
    n = rs.rank + 1
    rows: list[list[int]] = [[] for _ in range(n)]
    prev = rs.zero()
    for j, point in enumerate(p.points, start=1):
        step = _sub(point, prev)
        box_count = p.seq.weights[j - 1].index(1) + 1
        for r, occupied in enumerate(_standard_lift(step, box_count, n)):
            if occupied:
                rows[r].append(j)
        prev = point
    lengths = {len(r) for r in rows}
    if len(lengths) != 1:
        raise AlgorithmInvariantViolated("path did not fill a rectangle")
    return RowStrictTableau(tuple(tuple(r) for r in rows))


def tableau_to_path(t: RowStrictTableau) -> LittelmannPath:
    """Inverse of ``path_to_tableau``: subtableau shapes, projected to weights."""
    n = t.n_rows
    if n < 2:
        raise InvalidTableau("need at least two rows to define a rank >= 1 path")
    rs = build_root_system("A", n - 1)
    content = t.content
    m = len(content)
    if any(c == 0 for c in content):
        raise InvalidTableau("every entry value up to the maximum must appear")
    if any(not 1 <= c <= n - 1 for c in content):
        raise InvalidTableau("an entry filling a full column has no minuscule step")
    weights = tuple(rs.fundamental_weight(c) for c in content)
    shape = [0] * n
    points = []
    for value in range(1, m + 1):
        for r, row in enumerate(t.rows):
            if value in row:
                shape[r] += 1
        points.append(tuple(shape[i] - shape[i + 1] for i in range(n - 1)))
    return LittelmannPath(WeightSequence(rs, weights), tuple(points))


def promote(t: RowStrictTableau) -> RowStrictTableau:
    """Jeu-de-taquin promotion: delete the 1s, slide each next value left
    then up into the gaps while relabelling down, refill the last column."""
    n, b = t.n_rows, t.n_cols
    top = max(max(row) for row in t.rows)
    grid: list[list[int | None]] = [list(row) for row in t.rows]
    first_count = 0
    for r in range(n):
        for c in range(b):
            if grid[r][c] == 1:
                grid[r][c] = None
                first_count += 1
    for value in range(2, top + 1):
        cells = [(r, c) for r in range(n) for c in range(b) if grid[r][c] == value]
        # left slides: rows are independent, at most one box per row
        slid = []
        for r, c in cells:
            while c > 0 and grid[r][c - 1] is None:
                grid[r][c - 1], grid[r][c] = grid[r][c], None
                c -= 1
            slid.append((r, c))
        # up slides: top to bottom, so a vacated cell frees the one below it
        for r, c in sorted(slid):
            while r > 0 and grid[r - 1][c] is None:
                grid[r - 1][c], grid[r][c] = grid[r][c], None
                r -= 1
            grid[r][c] = value - 1
    gaps = [(r, c) for r in range(n) for c in range(b) if grid[r][c] is None]
    if len(gaps) != first_count or any(c != b - 1 for _, c in gaps):
        raise AlgorithmInvariantViolated("gaps did not migrate to the last column")
    for r, c in gaps:
        grid[r][c] = top
    return RowStrictTableau(tuple(tuple(row) for row in grid))
