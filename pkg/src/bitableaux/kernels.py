"""Hot counting kernels: content-constrained bitableau enumeration with a
Yamanouchi filter, tallied by a-content.

The same array-based implementation runs either numba-compiled or as plain
NumPy Python.  Set BITABLEAUX_JIT=0 to force the fallback path (used by the
benchmark for comparison); without numba installed the fallback is selected
automatically.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from .partitions import check_partition


def _tally_impl(cell_left, cell_up, scan_order, n, m, brem, conv_wprime, radix, out):
    """Enumerate semistandard fillings by pair codes a*m+b and tally a-contents.

    cell_left / cell_up give neighbor cell indices (-1 when absent) in the
    row-major cell order.  brem is consumed as the b-content budget.  Each
    completed filling is kept only when its sort-by-top reading word (w for
    conv_wprime == 0, w' otherwise) is Yamanouchi; the tally lands at the
    radix-(k+1) encoding of its a-content.
    """
    k = cell_left.shape[0]
    nm = n * m
    vals = np.full(k, -1, dtype=np.int64)
    word = np.empty(k, dtype=np.int64)
    counts = np.empty(m, dtype=np.int64)
    acnt = np.empty(n, dtype=np.int64)
    pos = 0
    while pos >= 0:
        prev = vals[pos]
        if prev >= 0:
            brem[prev % m] += 1
            lo = prev + 1
        else:
            lo = 0
            if cell_left[pos] >= 0 and vals[cell_left[pos]] > lo:
                lo = vals[cell_left[pos]]
            if cell_up[pos] >= 0 and vals[cell_up[pos]] + 1 > lo:
                lo = vals[cell_up[pos]] + 1
        nxt = -1
        c = lo
        while c < nm:
            if brem[c % m] > 0:
                nxt = c
                break
            c += 1
        if nxt < 0:
            vals[pos] = -1
            pos -= 1
            continue
        vals[pos] = nxt
        brem[nxt % m] -= 1
        if pos < k - 1:
            pos += 1
            continue
        # leaf: build the grouped reading word and test the suffix condition
        wlen = 0
        if conv_wprime == 0:
            for a in range(n):
                for s in range(k):
                    v = vals[scan_order[s]]
                    if v // m == a:
                        word[wlen] = v % m
                        wlen += 1
        else:
            for a in range(n - 1, -1, -1):
                for s in range(k):
                    v = vals[scan_order[s]]
                    if v // m == a:
                        word[wlen] = v % m
                        wlen += 1
        ok = True
        for j in range(m):
            counts[j] = 0
        for p in range(k - 1, -1, -1):
            x = word[p]
            counts[x] += 1
            if x > 0 and counts[x] > counts[x - 1]:
                ok = False
                break
        if ok:
            for i in range(n):
                acnt[i] = 0
            for s in range(k):
                acnt[vals[s] // m] += 1
            code = 0
            mult = 1
            for i in range(n):
                code += acnt[i] * mult
                mult *= radix
            out[code] += 1
    return out


_JIT_REQUESTED = os.environ.get("BITABLEAUX_JIT", "1") != "0"
_tally_jit = None
if _JIT_REQUESTED:
    try:
        from numba import njit

        _tally_jit = njit(cache=True)(_tally_impl)
    except ImportError:  # pragma: no cover - numba is an optional speedup
        _tally_jit = None


def jit_enabled() -> bool:
    return _tally_jit is not None


def _cell_arrays(shape: Sequence[int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    index = {cell: i for i, cell in enumerate(cells)}
    left = np.array(
        [index[(r, c - 1)] if c else -1 for r, c in cells], dtype=np.int64
    )
    up = np.array(
        [index.get((r - 1, c), -1) if r else -1 for r, c in cells], dtype=np.int64
    )
    scan = np.array(
        [index[(r, c)] for r in range(len(shape) - 1, -1, -1) for c in range(shape[r])],
        dtype=np.int64,
    )
    return left, up, scan


def tally_yamanouchi_acontent(
    shape: Sequence[int], n: int, bcontent: Sequence[int], conv: str = "w"
) -> dict[tuple[int, ...], int]:
    """Counts of Yamanouchi-reading-word bitableaux by exact a-content.

    Keys are a-content vectors of length n; only nonzero counts appear.
    b-content is fixed to bcontent (length m).
    """
    shape = check_partition(shape)
    if conv not in ("w", "w_prime"):
        raise ValueError(f"unknown convention {conv!r}")
    m = len(bcontent)
    k = sum(shape)
    if k != sum(bcontent):
        return {}
    if k == 0:
        return {(0,) * n: 1}
    if m == 0 or n == 0:
        return {}
    radix = k + 1
    size = radix**n
    left, up, scan = _cell_arrays(shape)
    brem = np.array(bcontent, dtype=np.int64)
    out = np.zeros(size, dtype=np.int64)
    fn = _tally_jit if _tally_jit is not None else _tally_impl
    if size > 1 << 23:
        # the flat tally would be too large; fall back to a dict-based count
        return _tally_python_dict(shape, n, bcontent, conv)
    fn(left, up, scan, n, m, brem, 0 if conv == "w" else 1, radix, out)
    result: dict[tuple[int, ...], int] = {}
    for code in np.nonzero(out)[0]:
        digits = []
        rem = int(code)
        for _ in range(n):
            digits.append(rem % radix)
            rem //= radix
        result[tuple(digits)] = int(out[code])
    return result


def _tally_python_dict(
    shape: Sequence[int], n: int, bcontent: Sequence[int], conv: str
) -> dict[tuple[int, ...], int]:
    """Reference tally without the flat-array encoding (also the wide-n path)."""
    from .bitableau import iter_bitableau_rows_content
    from .words import is_yamanouchi

    result: dict[tuple[int, ...], int] = {}
    groups = range(1, n + 1) if conv == "w" else range(n, 0, -1)
    for rows in iter_bitableau_rows_content(shape, n, bcontent):
        word = [
            b
            for a in groups
            for r in range(len(rows) - 1, -1, -1)
            for (x, b) in rows[r]
            if x == a
        ]
        if is_yamanouchi(word):
            acnt = [0] * n
            for row in rows:
                for a, _ in row:
                    acnt[a - 1] += 1
            key = tuple(acnt)
            result[key] = result.get(key, 0) + 1
    return result


def count_yamanouchi(
    shape: Sequence[int],
    acontent: Sequence[int],
    bcontent: Sequence[int],
    conv: str = "w",
) -> int:
    """Bitableaux of the shape with exact weights and Yamanouchi reading word."""
    tally = tally_yamanouchi_acontent(shape, len(acontent), bcontent, conv)
    return tally.get(tuple(acontent), 0)
