"""Tableau enumeration and counting over skew shapes.

Three filling families over a bounded alphabet {1..max_entry}:

* ``ssyt``: singleton entries, rows weakly increase, columns strictly
  increase.
* ``rpp``: singleton entries (reverse plane partitions), rows and
  columns weakly increase.
* ``svt``: nonempty finite sets, rows weakly and columns strictly
  increase, where for sets A <= B means max A <= min B and A < B means
  max A < min B.

Contents differ by family: an ssyt counts cells holding each value, an
rpp counts columns containing each value, an svt counts cells whose set
contains each value.

``enumerate_fillings`` streams every filling in a documented
deterministic order.  ``count_fillings``/``content_counts`` count
fillings with an exact content vector; for ssyt and rpp this uses a
chain decomposition (the region holding values <= i grows through a
nested sequence of partitions), which must agree with filtering the
naive stream and is tested to.  All counters memoize per process;
caches are only ever extended with idempotent values, so concurrent
readers are safe.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

from .shapes import (
    EMPTY,
    Partition,
    SkewShape,
    contains,
    graded_lex_key,
    partition,
    partitions_of,
)

SSYT = "ssyt"
RPP = "rpp"
SVT = "svt"
KINDS = (SSYT, RPP, SVT)

Word = tuple[int, ...]
Cell = tuple[int, int]


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown filling kind {kind!r}; expected one of {KINDS}")


@dataclass(frozen=True)
class SetFilling:
    """Assignment of a nonempty ascending set to every cell of a shape."""

    shape: SkewShape
    entries: dict  # Cell -> tuple[int, ...], sorted ascending

    def __post_init__(self):
        cells = set(self.shape.cells())
        if set(self.entries) != cells:
            raise ValueError("entries must cover exactly the cells of the shape")
        for cell, vals in self.entries.items():
            t = tuple(vals)
            if not t or any(v < 1 for v in t) or any(
                    t[i] >= t[i + 1] for i in range(len(t) - 1)):
                raise ValueError(
                    f"cell {cell} needs a nonempty strictly ascending set, got {vals}")

    def total_size(self) -> int:
        """Sum of the cardinalities of all cell sets."""
        return sum(len(v) for v in self.entries.values())

    def max_entry(self) -> int:
        return max((v[-1] for v in self.entries.values()), default=0)


def _neighbor(t: SetFilling, r: int, c: int) -> Word | None:
    return t.entries.get((r, c))


def is_ssyt(t: SetFilling) -> bool:
    """Singleton sets, rows weakly increasing, columns strictly increasing."""
    for (r, c), vals in t.entries.items():
        if len(vals) != 1:
            return False
        left = _neighbor(t, r, c - 1)
        if left is not None and left[0] > vals[0]:
            return False
        up = _neighbor(t, r - 1, c)
        if up is not None and up[0] >= vals[0]:
            return False
    return True


def is_rpp(t: SetFilling) -> bool:
    """Singleton sets, rows and columns weakly increasing."""
    for (r, c), vals in t.entries.items():
        if len(vals) != 1:
            return False
        left = _neighbor(t, r, c - 1)
        if left is not None and left[0] > vals[0]:
            return False
        up = _neighbor(t, r - 1, c)
        if up is not None and up[0] > vals[0]:
            return False
    return True


def is_svt(t: SetFilling) -> bool:
    """Rows weakly increase and columns strictly increase as sets."""
    for (r, c), vals in t.entries.items():
        left = _neighbor(t, r, c - 1)
        if left is not None and left[-1] > vals[0]:
            return False
        up = _neighbor(t, r - 1, c)
        if up is not None and up[-1] >= vals[0]:
            return False
    return True


_VALIDATORS = {SSYT: is_ssyt, RPP: is_rpp, SVT: is_svt}


def content_of(t: SetFilling, kind: str) -> Word:
    """Content vector of a filling under the given family's convention.

    Trailing zeros are trimmed.  Raises ValueError when the filling is
    not valid for the requested kind.
    """
    _check_kind(kind)
    if not _VALIDATORS[kind](t):
        raise ValueError(f"filling is not a valid {kind}")
    top = t.max_entry()
    counts = [0] * top
    if kind == RPP:
        bycol: dict[int, set[int]] = {}
        for (r, c), vals in t.entries.items():
            bycol.setdefault(c, set()).add(vals[0])
        for col_vals in bycol.values():
            for v in col_vals:
                counts[v - 1] += 1
    else:
        for vals in t.entries.values():
            for v in vals:
                counts[v - 1] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def reverse_reading_word(t: SetFilling) -> Word:
    """Read columns right to left, top to bottom, each set descending."""
    cells = t.shape.cells()
    if not cells:
        return ()
    maxc = max(c for _, c in cells)
    maxr = max(r for r, _ in cells)
    word: list[int] = []
    for c in range(maxc, 0, -1):
        for r in range(1, maxr + 1):
            vals = t.entries.get((r, c))
            if vals is not None:
                word.extend(reversed(vals))
    return tuple(word)


def is_lattice(w: Word) -> bool:
    """Every prefix holds at least as many a's as (a+1)'s, for all a >= 1."""
    counts: dict[int, int] = {}
    for v in w:
        if v > 1 and counts.get(v, 0) >= counts.get(v - 1, 0):
            return False
        counts[v] = counts.get(v, 0) + 1
    return True


# ---------------------------------------------------------------------------
# streaming enumeration


def enumerate_fillings(shape: SkewShape, kind: str, max_entry: int,
                       max_total_size: int | None = None) -> Iterator[SetFilling]:
    """Stream every valid filling with entries <= max_entry exactly once.

    Order is deterministic: cells are scanned row-major, and at each cell
    the candidate values (for ssyt/rpp) or candidate sets (for svt, by
    ascending lexicographic order of their sorted tuples) are tried in
    ascending order.  ``max_total_size`` caps the total size |T|; for
    ssyt/rpp the total size always equals the cell count.
    """
    _check_kind(kind)
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    cells = shape.cells()
    ncells = len(cells)
    if max_total_size is not None and max_total_size < ncells:
        return
    if ncells == 0:
        yield SetFilling(shape, {})
        return
    pos = {cell: i for i, cell in enumerate(cells)}
    left = [pos.get((r, c - 1), -1) for r, c in cells]
    above = [pos.get((r - 1, c), -1) for r, c in cells]

    if kind in (SSYT, RPP):
        vals = [0] * ncells

        def gen_single(idx: int) -> Iterator[SetFilling]:
            if idx == ncells:
                yield SetFilling(shape, {cells[i]: (vals[i],) for i in range(ncells)})
                return
            lo = 1
            if left[idx] >= 0:
                lo = max(lo, vals[left[idx]])
            if above[idx] >= 0:
                lo = max(lo, vals[above[idx]] + (1 if kind == SSYT else 0))
            for v in range(lo, max_entry + 1):
                vals[idx] = v
                yield from gen_single(idx + 1)

        yield from gen_single(0)
        return

    sets: list[Word] = [()] * ncells

    def gen_svt(idx: int, used: int) -> Iterator[SetFilling]:
        if idx == ncells:
            yield SetFilling(shape, {cells[i]: sets[i] for i in range(ncells)})
            return
        lo = 1
        if left[idx] >= 0:
            lo = max(lo, sets[left[idx]][-1])
        if above[idx] >= 0:
            lo = max(lo, sets[above[idx]][-1] + 1)
        if max_total_size is None:
            room = max_entry
        else:
            room = max_total_size - used - (ncells - idx - 1)
        cur: list[int] = []

        def grow(start: int) -> Iterator[SetFilling]:
            for v in range(start, max_entry + 1):
                cur.append(v)
                sets[idx] = tuple(cur)
                yield from gen_svt(idx + 1, used + len(cur))
                if len(cur) < room:
                    yield from grow(v + 1)
                cur.pop()

        if room >= 1:
            yield from grow(lo)

    yield from gen_svt(0, 0)


# ---------------------------------------------------------------------------
# exact-content counting via chain decomposition
#
# A filling corresponds to a chain of partitions nu_0 <= nu_1 <= ... where
# nu_i/inner is the region of cells finished after value i.  For an rpp the
# region of value i is the skew nu_i/nu_{i-1} and contributes one to the
# content per occupied column; for an ssyt the region must be a horizontal
# strip and contributes its cell count.
#
# For an svt, the cells whose set contains value i form a horizontal strip
# over the finished region (a cell holding i needs everything above it
# finished).  Within each row of that strip every cell except possibly the
# rightmost is exactly {i}; the rightmost may stay open and collect larger
# values, which requires the cell below it to lie outside the strip's outer
# shape.  Each open cell contributes a factor of -1, and the total number of
# open events over a filling is |T| - |shape|, so the signed transition
# tables below produce the signed content coefficients directly.


def _between(inner: Partition, outer: Partition) -> tuple[Partition, ...]:
    rows = len(outer)
    acc: list[Partition] = []

    def rec(i: int, prev: int, cur: tuple[int, ...]) -> None:
        if i == rows:
            p = cur
            while p and p[-1] == 0:
                p = p[:-1]
            acc.append(p)
            return
        lo = inner[i] if i < len(inner) else 0
        for v in range(lo, min(outer[i], prev) + 1):
            rec(i + 1, v, cur + (v,))

    rec(0, outer[0] if outer else 0, ())
    acc.sort(key=graded_lex_key)
    return tuple(acc)


def _skew_columns(inner: Partition, outer: Partition) -> int:
    cols: set[int] = set()
    for r, o in enumerate(outer):
        lo = inner[r] if r < len(inner) else 0
        cols.update(range(lo + 1, o + 1))
    return len(cols)


def _is_hstrip(inner: Partition, outer: Partition) -> bool:
    for r in range(len(outer) - 1):
        lo = inner[r] if r < len(inner) else 0
        if outer[r + 1] > lo:
            return False
    return True


_SIGNED_SVT = "signed_svt"


class _ChainTables:
    """Per-shape chain transition tables with memoized suffix counts.

    Transitions are stored per start state as weight -> ((end state,
    multiplier), ...); ssyt and rpp multipliers are 1, the svt tables
    carry the sign of the open-cell events.
    """

    def __init__(self, outer: Partition, inner: Partition):
        states = _between(inner, outer)
        index = {p: i for i, p in enumerate(states)}
        n = len(states)
        Row = dict[int, dict[int, int]]
        strip_t: list[Row] = [dict() for _ in range(n)]
        cols_t: list[Row] = [dict() for _ in range(n)]
        svt_t: list[Row] = [dict() for _ in range(n)]

        def bump(table: Row, w: int, j: int, c: int) -> None:
            table.setdefault(w, {})
            table[w][j] = table[w].get(j, 0) + c

        for i, a in enumerate(states):
            for sigma in states:
                if sigma == a or not contains(sigma, a):
                    continue
                j = index[sigma]
                w = _skew_columns(a, sigma)
                bump(cols_t[i], w, j, 1)
                if not _is_hstrip(a, sigma):
                    continue
                size = sum(sigma) - sum(a)
                bump(strip_t[i], size, j, 1)
                # svt: any subset of the strip's row-end cells may stay
                # open, provided the cell below the row end is absent
                open_rows = [
                    r for r in range(len(sigma))
                    if sigma[r] > (a[r] if r < len(a) else 0)
                    and sigma[r] > (sigma[r + 1] if r + 1 < len(sigma) else 0)
                ]
                for mask in range(1 << len(open_rows)):
                    tau = list(sigma)
                    bits = 0
                    m = mask
                    for k, r in enumerate(open_rows):
                        if m >> k & 1:
                            tau[r] -= 1
                            bits += 1
                    while tau and tau[-1] == 0:
                        tau.pop()
                    bump(svt_t[i], size, index[tuple(tau)],
                         -1 if bits % 2 else 1)
        self.n = n
        self.bottom = index[inner]
        self.top = index[outer]
        self.succ = {
            SSYT: [{w: tuple(d.items()) for w, d in row.items()} for row in strip_t],
            RPP: [{w: tuple(d.items()) for w, d in row.items()} for row in cols_t],
            _SIGNED_SVT: [{w: tuple((j, c) for j, c in d.items() if c)
                           for w, d in row.items()} for row in svt_t],
        }
        self._memo: dict[str, dict[Word, list[int]]] = {
            SSYT: {}, RPP: {}, _SIGNED_SVT: {}}

    def _table(self, kind: str, suffix: Word) -> list[int]:
        memo = self._memo[kind]
        hit = memo.get(suffix)
        if hit is not None:
            return hit
        if not suffix:
            res = [0] * self.n
            res[self.top] = 1
        else:
            rest = self._table(kind, suffix[1:])
            succ = self.succ[kind]
            w = suffix[0]
            res = [sum(c * rest[j] for j, c in succ[i].get(w, ()))
                   for i in range(self.n)]
        memo[suffix] = res
        return res

    def count(self, kind: str, content: Partition) -> int:
        return self._table(kind, content)[self.bottom]


_chain_cache: dict[tuple[Partition, Partition], _ChainTables] = {}


def _chain(shape: SkewShape) -> _ChainTables:
    key = (shape.outer, shape.inner)
    tables = _chain_cache.get(key)
    if tables is None:
        tables = _chain_cache[key] = _ChainTables(*key)
    return tables


# ---------------------------------------------------------------------------
# exact-content counting for svt


@functools.cache
def _svt_count(outer: Partition, inner: Partition, content: Partition) -> int:
    shape = SkewShape(outer, inner)
    cells = shape.cells()
    ncells = len(cells)
    total = sum(content)
    if ncells == 0:
        return 1 if not content else 0
    if total < ncells:
        return 0
    pos = {cell: i for i, cell in enumerate(cells)}
    left = [pos.get((r, c - 1), -1) for r, c in cells]
    above = [pos.get((r - 1, c), -1) for r, c in cells]
    L = len(content)
    budgets = list(content)
    maxes = [0] * ncells

    def rec(idx: int, remaining: int) -> int:
        if idx == ncells:
            return 1 if remaining == 0 else 0
        slack = remaining - (ncells - idx)
        if slack < 0:
            return 0
        lo = 1
        if left[idx] >= 0:
            lo = max(lo, maxes[left[idx]])
        if above[idx] >= 0:
            lo = max(lo, maxes[above[idx]] + 1)
        found = 0

        def choose(vmin: int, rem: int, extras: int) -> None:
            nonlocal found
            for v in range(vmin, L + 1):
                if budgets[v - 1] == 0:
                    continue
                budgets[v - 1] -= 1
                maxes[idx] = v
                found += rec(idx + 1, rem - 1)
                if extras > 0:
                    choose(v + 1, rem - 1, extras - 1)
                budgets[v - 1] += 1

        choose(lo, remaining, slack)
        return found

    return rec(0, total)


def count_fillings(shape: SkewShape, kind: str, content: Partition,
                   max_total_size: int | None = None) -> int:
    """Number of valid fillings whose content vector equals ``content``.

    The content is a partition; contents with internal zeros cannot be
    monomial-basis keys and are not supported here.
    """
    _check_kind(kind)
    content = partition(content)
    n = shape.size()
    if max_total_size is not None and sum(content) > max_total_size:
        return 0
    if kind == SSYT:
        if sum(content) != n:
            return 0
        return _chain(shape).count(SSYT, content)
    if kind == RPP:
        if sum(content) > n:
            return 0
        return _chain(shape).count(RPP, content)
    if sum(content) < n:
        return 0
    return _svt_count(shape.outer, shape.inner, content)


def content_counts(shape: SkewShape, kind: str, *, num_vars: int,
                   max_total_size: int | None = None) -> dict[Partition, int]:
    """All nonzero exact-content counts, keyed by content partition.

    Contents are restricted to at most ``num_vars`` parts (values drawn
    from {1..num_vars}); for svt, ``max_total_size`` bounds |T| and
    defaults to the natural alphabet bound.
    """
    _check_kind(kind)
    n = shape.size()
    if n == 0:
        return {EMPTY: 1}
    ncols = shape.ncols()
    if kind == SSYT:
        sizes = range(n, n + 1)
    elif kind == RPP:
        sizes = range(1, n + 1)
    else:
        top = len(shape.cells()) * num_vars
        if max_total_size is not None:
            top = min(top, max_total_size)
        sizes = range(n, top + 1)
    out: dict[Partition, int] = {}
    for s in sizes:
        for t in partitions_of(s, max_part=ncols, max_length=num_vars):
            c = count_fillings(shape, kind, t)
            if c:
                out[t] = c
    return out


def signed_svt_counts(shape: SkewShape, *, num_vars: int,
                      max_total_size: int) -> dict[Partition, int]:
    """Signed svt content coefficients: sum of (-1)^(|T| - |shape|) over
    fillings with the given exact content, keyed by content partition.

    Computed by the signed chain tables; must agree with (and is tested
    against) signing the plain counts from the naive stream.
    """
    n = shape.size()
    if n == 0:
        return {EMPTY: 1}
    tables = _chain(shape)
    ncols = shape.ncols()
    out: dict[Partition, int] = {}
    for s in range(n, max_total_size + 1):
        for t in partitions_of(s, max_part=ncols, max_length=num_vars):
            c = tables.count(_SIGNED_SVT, t)
            if c:
                out[t] = c
    return out


# ---------------------------------------------------------------------------
# lattice fillings


def _reading_order(shape: SkewShape):
    cells = shape.cells()
    order = sorted(cells, key=lambda rc: (-rc[1], rc[0]))
    pos = {cell: i for i, cell in enumerate(order)}
    right = [pos.get((r, c + 1), -1) for r, c in order]
    above = [pos.get((r - 1, c), -1) for r, c in order]
    return order, right, above


def _lattice_backtrack(shape: SkewShape, content: Partition,
                       collect: list | None) -> int:
    order, right, above = _reading_order(shape)
    ncells = len(order)
    total = sum(content)
    if ncells == 0:
        return 1 if not content else 0
    if total < ncells:
        return 0
    L = len(content)
    counts = [0] * (L + 1)
    sets: list[Word] = [()] * ncells
    found = 0

    def rec(idx: int, remaining: int) -> None:
        nonlocal found
        if idx == ncells:
            if remaining == 0:
                found += 1
                if collect is not None:
                    collect.append(SetFilling(
                        shape, {order[i]: sets[i] for i in range(ncells)}))
            return
        if remaining - (ncells - idx) < 0:
            return
        above_max = sets[above[idx]][-1] if above[idx] >= 0 else 0
        cap = sets[right[idx]][0] if right[idx] >= 0 else L
        chosen: list[int] = []

        def add_letter(v: int) -> bool:
            # letters enter the reading word in this order, so the
            # lattice prefix condition and the content budget are
            # checked letter by letter
            if counts[v] >= content[v - 1]:
                return False
            if v > 1 and counts[v] >= counts[v - 1]:
                return False
            counts[v] += 1
            chosen.append(v)
            return True

        def pop_letter() -> None:
            counts[chosen.pop()] -= 1

        def build(next_hi: int, rem: int) -> None:
            sets[idx] = tuple(reversed(chosen))
            rec(idx + 1, rem)
            if rem >= ncells - idx:
                for v in range(next_hi, above_max, -1):
                    if add_letter(v):
                        build(v - 1, rem - 1)
                        pop_letter()

        for m in range(above_max + 1, cap + 1):
            if add_letter(m):
                build(m - 1, remaining - 1)
                pop_letter()

    rec(0, total)
    return found


@functools.cache
def _lattice_count(outer: Partition, inner: Partition, content: Partition) -> int:
    return _lattice_backtrack(SkewShape(outer, inner), content, None)


def count_lattice_fillings(shape: SkewShape, content: Partition) -> int:
    """Number of svt of the shape whose reverse reading word is a lattice
    word with exactly the given content.

    Entries never exceed the number of parts of the content, so the count
    is finite with no further cap.
    """
    return _lattice_count(shape.outer, shape.inner, partition(content))


def iter_lattice_fillings(shape: SkewShape, content: Partition) -> Iterator[SetFilling]:
    """Materialize the fillings behind ``count_lattice_fillings``."""
    acc: list[SetFilling] = []
    _lattice_backtrack(shape, partition(content), acc)
    return iter(acc)
