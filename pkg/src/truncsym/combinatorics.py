"""Lattice-path and board-tiling models for the truncated families.

A path is a string over 'E'/'N' from (0,0) to (k, n-1): k East steps, n-1
North steps.  East steps at height m (m North steps taken so far) carry
the variable x_(m+1), so a path contributes the product of its East-step
variables.  Admissibility looks at maximal East runs:

* E model: every run has length <= s; the weights sum to E(k, s, n).
* H model: every run length is 0 or 1 mod (s+1); weights signed by
  (-1)^(k + sum of run lengths mod (s+1)) sum to H(k, s, n).

A tiling is a string over 'r'/'g' (red/green cells) of a 1 x (k+n-1)
board with k red and n-1 green cells; a red cell preceded by m green
cells carries x_(m+1).  Reading East as red and North as green is the
weight- and sign-preserving bijection between the two models.

Enumeration is lexicographic on the step strings ('E' < 'N', 'g' < 'r'),
so every listing and rendering is deterministic.
"""

from __future__ import annotations

from typing import Iterator

from .multipoly import MPoly

Path = str
Tiling = str


def _arrangements(first: str, a: int, second: str, b: int) -> Iterator[str]:
    """All strings with a copies of first and b of second, lexicographic."""
    if a == 0:
        yield second * b
        return
    if b == 0:
        yield first * a
        return
    for rest in _arrangements(first, a - 1, second, b):
        yield first + rest
    for rest in _arrangements(first, a, second, b - 1):
        yield second + rest


def _runs(text: str, ch: str) -> list[int]:
    """Lengths of maximal blocks of ch."""
    runs = []
    count = 0
    for c in text:
        if c == ch:
            count += 1
        elif count:
            runs.append(count)
            count = 0
    if count:
        runs.append(count)
    return runs


def _validate_model(s: int, model: str) -> None:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if model not in ("E", "H"):
        raise ValueError(f"model must be 'E' or 'H', got {model!r}")


def _admissible(runs: list[int], s: int, model: str) -> bool:
    if model == "E":
        return all(r <= s for r in runs)
    return all(r % (s + 1) in (0, 1) for r in runs)


def _validate_path(path: Path) -> None:
    if set(path) - {"E", "N"}:
        raise ValueError(f"path may only contain 'E' and 'N': {path!r}")


def _validate_tiling(tiling: Tiling) -> None:
    if set(tiling) - {"r", "g"}:
        raise ValueError(f"tiling may only contain 'r' and 'g': {tiling!r}")


def enum_paths(n: int, k: int, s: int, model: str) -> list[Path]:
    """Admissible paths to (k, n-1), lexicographic ('E' < 'N')."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _validate_model(s, model)
    return [
        p for p in _arrangements("E", k, "N", n - 1) if _admissible(_runs(p, "E"), s, model)
    ]


def enum_tilings(n: int, k: int, s: int, model: str) -> list[Tiling]:
    """Admissible tilings of the 1 x (k+n-1) board, lexicographic ('g' < 'r')."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _validate_model(s, model)
    return [
        t for t in _arrangements("g", n - 1, "r", k) if _admissible(_runs(t, "r"), s, model)
    ]


def path_weight(path: Path, n: int) -> tuple[int, ...]:
    """Exponent vector of the path's variable product."""
    _validate_path(path)
    height = path.count("N")
    if height != n - 1:
        raise ValueError(f"path has {height} North steps, expected {n - 1}")
    exps = [0] * n
    level = 0
    for step in path:
        if step == "N":
            level += 1
        else:
            exps[level] += 1
    return tuple(exps)

def path_sign(path: Path, s: int) -> int:
    """(-1)^(k + sum of East-run lengths reduced mod (s+1)); +1 when s is odd."""
    _validate_path(path)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    k = path.count("E")
    reduced = sum(r % (s + 1) for r in _runs(path, "E"))
    return -1 if (k + reduced) % 2 else 1


def path_to_tiling(path: Path) -> Tiling:
    """East -> red, North -> green, position by position."""
    _validate_path(path)
    return path.replace("E", "r").replace("N", "g")


def tiling_to_path(tiling: Tiling) -> Path:
    """Red -> East, green -> North; inverse of path_to_tiling."""
    _validate_tiling(tiling)
    return tiling.replace("r", "E").replace("g", "N")


def tiling_weight(tiling: Tiling, n: int) -> tuple[int, ...]:
    """Exponent vector: a red cell after m green cells contributes x_(m+1)."""
    _validate_tiling(tiling)
    greens = tiling.count("g")
    if greens != n - 1:
        raise ValueError(f"tiling has {greens} green cells, expected {n - 1}")
    exps = [0] * n
    seen = 0
    for cell in tiling:
        if cell == "g":
            seen += 1
        else:
            exps[seen] += 1
    return tuple(exps)


def tiling_sign(tiling: Tiling, s: int) -> int:
    """Same sign rule as paths, on maximal red runs."""
    _validate_tiling(tiling)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    k = tiling.count("r")
    reduced = sum(r % (s + 1) for r in _runs(tiling, "r"))
    return -1 if (k + reduced) % 2 else 1


def weight_sum(n: int, k: int, s: int, model: str, objects: str = "paths") -> MPoly:
    """Signed weight generating polynomial of the admissible objects.

    The E model sums weights; the H model attaches the run sign.  The
    result matches E(k, s, n) or H(k, s, n) monomial by monomial.
    """
    if objects == "paths":
        items = enum_paths(n, k, s, model)
        weight, sign = path_weight, path_sign
    elif objects == "tilings":
        items = enum_tilings(n, k, s, model)
        weight, sign = tiling_weight, tiling_sign
    else:
        raise ValueError(f"objects must be 'paths' or 'tilings', got {objects!r}")
    acc: dict = {}
    for item in items:
        exps = weight(item, n)
        c = sign(item, s) if model == "H" else 1
        acc[exps] = acc.get(exps, 0) + c
    return MPoly(n, acc)


def _weight_text(exps: tuple[int, ...]) -> str:
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


def describe(obj: str, n: int, s: int, model: str) -> str:
    """One text line: the object, its weight monomial and (H model) its sign."""
    if set(obj) <= {"E", "N"}:
        exps, sgn = path_weight(obj, n), path_sign(obj, s)
    else:
        exps, sgn = tiling_weight(obj, n), tiling_sign(obj, s)
    if model == "H":
        return f"{obj} weight={_weight_text(exps)} sign={'+1' if sgn > 0 else '-1'}"
    return f"{obj} weight={_weight_text(exps)}"


# -- SVG rendering -------------------------------------------------------------

_CELL = 24
_PAD = 14
_PER_ROW = 4


def paths_svg(n: int, k: int, s: int, model: str) -> str:
    """All admissible paths drawn on small grids, row-major layout."""
    paths = enum_paths(n, k, s, model)
    cols = max(k, 1)
    rows = max(n - 1, 1)
    panel_w = cols * _CELL + 2 * _PAD
    panel_h = rows * _CELL + 2 * _PAD + 16
    count = max(len(paths), 1)
    per_row = min(_PER_ROW, count)
    total_w = per_row * panel_w
    total_h = ((count + per_row - 1) // per_row) * panel_h
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}">'
    ]
    for idx, path in enumerate(paths):
        ox = (idx % per_row) * panel_w + _PAD
        oy = (idx // per_row) * panel_h + _PAD
        for gx in range(cols + 1):
            x = ox + gx * _CELL
            parts.append(
                f'<line x1="{x}" y1="{oy}" x2="{x}" y2="{oy + rows * _CELL}" '
                f'stroke="#cccccc" stroke-width="1"/>'
            )
        for gy in range(rows + 1):
            y = oy + gy * _CELL
            parts.append(
                f'<line x1="{ox}" y1="{y}" x2="{ox + cols * _CELL}" y2="{y}" '
                f'stroke="#cccccc" stroke-width="1"/>'
            )
        px, py = ox, oy + rows * _CELL
        points = [f"{px},{py}"]
        for step in path:
            if step == "E":
                px += _CELL
            else:
                py -= _CELL
            points.append(f"{px},{py}")
        parts.append(
            f'<polyline points="{" ".join(points)}" fill="none" '
            f'stroke="#c0392b" stroke-width="3"/>'
        )
        label_y = oy + rows * _CELL + 14
        parts.append(
            f'<text x="{ox}" y="{label_y}" font-family="monospace" font-size="12">'
            f"{path}</text>"
        )
    parts.append("</svg>")
    return "".join(parts)


def tilings_svg(n: int, k: int, s: int, model: str) -> str:
    """All admissible tilings as colored cell rows."""
    tilings = enum_tilings(n, k, s, model)
    board = max(k + n - 1, 1)
    panel_w = board * _CELL + 2 * _PAD + 110
    panel_h = _CELL + 2 * _PAD
    count = max(len(tilings), 1)
    total_w = panel_w
    total_h = count * panel_h
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}">'
    ]
    for idx, tiling in enumerate(tilings):
        ox = _PAD
        oy = idx * panel_h + _PAD
        for pos, cell in enumerate(tiling):
            fill = "#c0392b" if cell == "r" else "#27ae60"
            parts.append(
                f'<rect x="{ox + pos * _CELL}" y="{oy}" width="{_CELL}" height="{_CELL}" '
                f'fill="{fill}" stroke="#333333" stroke-width="1"/>'
            )
        parts.append(
            f'<text x="{ox + board * _CELL + 4}" y="{oy + _CELL - 7}" '
            f'font-family="monospace" font-size="12">{tiling}</text>'
        )
    parts.append("</svg>")
    return "".join(parts)
