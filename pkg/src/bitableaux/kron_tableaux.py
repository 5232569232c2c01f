"""Kronecker tableaux on two-letter tops and the weight-lowering map phi.

Membership in B'_lam(2,m) (n = 2 and Yamanouchi w' reading word) is enforced
at every entry point, since both the defining conditions and phi presuppose
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .bitableau import Bitableau, iter_bitableau_rows_content
from .partitions import Partition, check_partition, trim
from .symfunc import kronecker_coefficient
from .words import bitableau_reading_word, is_yamanouchi


@dataclass(frozen=True)
class KroneckerVerdict:
    is_kronecker: bool
    alpha: Partition
    failed_conditions: frozenset[str]


def _require_b_prime(t: Bitableau) -> None:
    if t.n != 2:
        raise ValueError("Kronecker tableaux require top entries in [2]")
    if not is_yamanouchi(bitableau_reading_word(t, "w_prime")):
        raise ValueError("tableau is not highest weight: w'(T) is not Yamanouchi")


def top_one_shape(t: Bitableau) -> Partition:
    """Shape alpha formed by the boxes with first entry one.

    Lexicographic semistandardness makes those boxes a top-left-justified
    region, so alpha is a partition.
    """
    return trim(tuple(sum(1 for (a, _) in row if a == 1) for row in t.rows))


def is_kronecker_tableau(t: Bitableau) -> KroneckerVerdict:
    """Conditions (I) / (II)(i) / (II)(ii) on a member of B'_lam(2,m)."""
    _require_b_prime(t)
    alpha = top_one_shape(t)
    a1 = alpha[0] if alpha else 0
    a2 = alpha[1] if len(alpha) > 1 else 0
    gap = a1 - a2
    cond_i = a1 == a2
    second_row = t.rows[1] if len(t.rows) > 1 else ()
    cond_ii_i = sum(1 for pair in second_row if pair == (2, 1)) == gap
    cond_ii_ii = sum(1 for pair in t.rows[0] if pair == (2, 2)) == gap if t.rows else gap == 0
    failed = frozenset(
        name
        for name, ok in (("I", cond_i), ("IIi", cond_ii_i), ("IIii", cond_ii_ii))
        if not ok
    )
    verdict = cond_i or (a1 > a2 and (cond_ii_i or cond_ii_ii))
    return KroneckerVerdict(verdict, alpha, failed)


def phi(t: Bitableau) -> Bitableau | None:
    """Change the rightmost (1,b) in the first row to (2,b), or return None.

    None stands for the zero of the conjectured lowering operator: either no
    eligible box exists, or the changed filling leaves B'_lam(2,m).
    """
    _require_b_prime(t)
    if not t.rows:
        return None
    first = t.rows[0]
    col = -1
    for c, (a, _) in enumerate(first):
        if a == 1:
            col = c
    if col < 0:
        return None
    try:
        image = t.with_entry(0, col, (2, first[col][1]))
    except ValueError:
        return None
    if not is_yamanouchi(bitableau_reading_word(image, "w_prime")):
        return None
    return image


def iter_b_prime_content(
    lam: Sequence[int], p: int, nu: Sequence[int]
) -> Iterator[Bitableau]:
    """Members of B'_lam(2,m) with a(T) = (p, k-p) and b(T) = nu."""
    lam = check_partition(lam)
    k = sum(lam)
    nu = tuple(nu)
    for rows in iter_bitableau_rows_content(lam, 2, nu, (p, k - p)):
        t = Bitableau(lam, rows, 2, len(nu))
        if is_yamanouchi(bitableau_reading_word(t, "w_prime")):
            yield t


def kronecker_tableaux(lam: Sequence[int], p: int, nu: Sequence[int]) -> list[Bitableau]:
    """All Kronecker tableaux of the shape with a(T)=(p,k-p), b(T)=nu."""
    lam = check_partition(lam)
    nu = check_partition(nu)
    if sum(lam) != sum(nu):
        raise ValueError("shape and b-weight must have the same size")
    if not 0 <= p <= sum(lam):
        raise ValueError(f"p = {p} outside [0, {sum(lam)}]")
    return [t for t in iter_b_prime_content(lam, p, nu) if is_kronecker_tableau(t).is_kronecker]


def count_kronecker_tableaux(lam: Sequence[int], p: int, nu: Sequence[int]) -> int:
    return len(kronecker_tableaux(lam, p, nu))


def in_two_row_regime(lam: Sequence[int], p: int) -> bool:
    """The regime lam_1 >= 2p-1 where the count equals the coefficient."""
    lam = check_partition(lam)
    return (lam[0] if lam else 0) >= 2 * p - 1


def kronecker_count_row(lam: Sequence[int], p: int, nu: Sequence[int]) -> tuple:
    """CSV-facing row: (lam, p, nu, count, g, regime_flag)."""
    lam = check_partition(lam)
    nu = check_partition(nu)
    k = sum(lam)
    if 2 * p > k:
        raise ValueError(f"(k-p, p) is not a partition for p = {p}, k = {k}")
    count = count_kronecker_tableaux(lam, p, nu)
    g = kronecker_coefficient(lam, trim((k - p, p)), nu)
    return (lam, p, nu, count, g, in_two_row_regime(lam, p))
