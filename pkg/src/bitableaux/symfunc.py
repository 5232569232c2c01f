"""Independent symmetric-function ground truth.

Characters come from the Murnaghan-Nakayama recursion over exact integers;
Kronecker coefficients from the character triple sum; Kostka numbers from
horizontal-strip counting.  None of this shares code with the crystal side,
so it can serve as the oracle the crystal counts are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .bitableau import iter_bitableau_rows
from .partitions import Partition, check_partition, enumerate_partitions, trim
from .tableaux import iter_ssyt_rows

Exponents = tuple[int, ...]


# --- characters ------------------------------------------------------------


def _beta_numbers(lam: Partition) -> tuple[int, ...]:
    length = len(lam)
    return tuple(lam[i] + (length - 1 - i) for i in range(length))


def _strip_removals(lam: Partition, size: int) -> Iterator[tuple[Partition, int]]:
    """Partitions obtained by removing a border strip, with the strip height."""
    beta = _beta_numbers(lam)
    beta_set = set(beta)
    for j, b in enumerate(beta):
        target = b - size
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((beta_set - {b}) | {target}, reverse=True)
        length = len(new_beta)
        parts = tuple(new_beta[i] - (length - 1 - i) for i in range(length))
        yield trim(parts), height


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    total = 0
    for rest, height in _strip_removals(lam, rho[0]):
        total += (-1) ** height * _mn(rest, rho[1:])
    return total


def mn_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """Symmetric group character chi^lam(rho), exact."""
    lam = check_partition(lam)
    rho = check_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError(f"|lam| = {sum(lam)} but |rho| = {sum(rho)}")
    return _mn(lam, rho)


def centralizer_order(rho: Sequence[int]) -> int:
    """z_rho = prod_i i^{m_i} m_i! for the cycle type rho."""
    rho = check_partition(rho)
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i**m * math.factorial(m)
    return z


@dataclass(frozen=True)
class CharacterTable:
    """Character values and centralizer orders for one symmetric group."""

    k: int
    classes: tuple[Partition, ...]
    values: Mapping[tuple[Partition, Partition], int]
    z: Mapping[Partition, int]

    def chi(self, lam: Partition, rho: Partition) -> int:
        return self.values[(lam, rho)]

    def class_size(self, rho: Partition) -> int:
        return math.factorial(self.k) // self.z[rho]

    def check_orthogonality(self) -> bool:
        """Row orthogonality, exactly: sum_rho |C_rho| chi chi = delta * k!."""
        kfact = math.factorial(self.k)
        for lam in self.classes:
            for mu in self.classes:
                total = sum(
                    self.class_size(rho) * self.chi(lam, rho) * self.chi(mu, rho)
                    for rho in self.classes
                )
                if total != (kfact if lam == mu else 0):
                    return False
        return True


@lru_cache(maxsize=None)
def character_table(k: int) -> CharacterTable:
    classes = tuple(enumerate_partitions(k))
    values = {
        (lam, rho): _mn(lam, rho) for lam in classes for rho in classes
    }
    z = {rho: centralizer_order(rho) for rho in classes}
    return CharacterTable(k, classes, values, z)


def kronecker_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """g(lam,mu,nu) = sum_rho chi chi chi / z_rho; a nonnegative integer."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    k = sum(lam)
    if sum(mu) != k or sum(nu) != k:
        raise ValueError("all three partitions must have the same size")
    table = character_table(k)
    total = sum(
        table.class_size(rho) * table.chi(lam, rho) * table.chi(mu, rho) * table.chi(nu, rho)
        for rho in table.classes
    )
    kfact = math.factorial(k)
    if total % kfact:
        raise ArithmeticError(f"non-integer Kronecker coefficient for {lam},{mu},{nu}")
    g = total // kfact
    if g < 0:
        raise ArithmeticError(f"negative Kronecker coefficient for {lam},{mu},{nu}")
    return g


# --- Kostka numbers ---------------------------------------------------------


def _horizontal_strip_removals(lam: Partition, size: int) -> Iterator[Partition]:
    """Partitions mu inside lam with lam/mu a horizontal strip of the size."""
    if size < 0:
        return

    def rec(i: int, left: int, prefix: list[int]) -> Iterator[Partition]:
        if i == len(lam):
            if left == 0:
                yield trim(tuple(prefix))
            return
        below = lam[i + 1] if i + 1 < len(lam) else 0
        hi = lam[i]
        cap = prefix[i - 1] if i else hi
        for mu_i in range(min(hi, cap), below - 1, -1):
            removed = hi - mu_i
            if removed > left:
                continue
            prefix.append(mu_i)
            yield from rec(i + 1, left - removed, prefix)
            prefix.pop()

    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def _kostka(lam: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not lam else 0
    last = content[-1]
    if last == 0:
        return _kostka(lam, content[:-1])
    return sum(
        _kostka(mu, content[:-1]) for mu in _horizontal_strip_removals(lam, last)
    )


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape lam and content mu (mu may be a composition)."""
    lam = check_partition(lam)
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise ValueError("content entries must be nonnegative")
    if sum(lam) != sum(mu):
        raise ValueError("content must sum to the shape size")
    return _kostka(lam, mu)


# --- exact polynomials ------------------------------------------------------


@dataclass(frozen=True, eq=True)
class SymPoly:
    """Multivariate polynomial with integer coefficients, exact.

    terms maps exponent tuples (length = number of variables) to nonzero
    coefficients.
    """

    variables: tuple[str, ...]
    terms: dict

    def __post_init__(self) -> None:
        for exps, coeff in self.terms.items():
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector length must match variable count")
            if coeff == 0:
                raise ValueError("zero terms must not be stored")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Exponents) -> int:
        return self.terms.get(tuple(exps), 0)

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [[list(e), c] for e, c in sorted(self.terms.items())],
        }

    def __hash__(self):  # pragma: no cover - dict field, identity is enough
        return id(self)


def make_sympoly(variables: Sequence[str], terms: Mapping[Exponents, int]) -> SymPoly:
    clean = {tuple(e): int(c) for e, c in terms.items() if c != 0}
    return SymPoly(tuple(variables), clean)


def default_variables(n: int, m: int | None = None) -> tuple[str, ...]:
    xs = tuple(f"x{i}" for i in range(1, n + 1))
    if m is None:
        return xs
    return xs + tuple(f"y{j}" for j in range(1, m + 1))


def schur_poly(lam: Sequence[int], variables: Sequence[str]) -> SymPoly:
    """s_lam over the named variables: sum of x^content(T) over SSYT."""
    lam = check_partition(lam)
    n = len(variables)
    terms: dict[Exponents, int] = {}
    for rows in iter_ssyt_rows(lam, n):
        counts = [0] * n
        for row in rows:
            for x in row:
                counts[x - 1] += 1
        key = tuple(counts)
        terms[key] = terms.get(key, 0) + 1
    return make_sympoly(variables, terms)


def substitute_kron(p: SymPoly, n: int, m: int) -> SymPoly:
    """Apply z_(i,j) = x_i y_j to a polynomial in nm lexicographic z variables."""
    if len(p.variables) != n * m:
        raise ValueError("polynomial must have n*m variables")
    terms: dict[Exponents, int] = {}
    for exps, coeff in p.terms.items():
        xexp = [0] * n
        yexp = [0] * m
        for v, e in enumerate(exps):
            xexp[v // m] += e
            yexp[v % m] += e
        key = tuple(xexp) + tuple(yexp)
        terms[key] = terms.get(key, 0) + coeff
    return make_sympoly(default_variables(n, m), terms)


def kron_coproduct_poly(lam: Sequence[int], n: int, m: int, route: str = "checked") -> SymPoly:
    """s_lam[xy] in x_1..x_n, y_1..y_m.

    route "bitableau" sums x^a(T) y^b(T) over all bitableaux; "substitution"
    substitutes z_(i,j) = x_i y_j into the Schur polynomial in nm variables;
    "checked" (default) computes both and insists they agree term by term.
    """
    lam = check_partition(lam)
    if route == "substitution":
        zvars = tuple(f"z{v}" for v in range(1, n * m + 1))
        return substitute_kron(schur_poly(lam, zvars), n, m)
    if route == "bitableau":
        terms: dict[Exponents, int] = {}
        for rows in iter_bitableau_rows(lam, n, m):
            xexp = [0] * n
            yexp = [0] * m
            for row in rows:
                for a, b in row:
                    xexp[a - 1] += 1
                    yexp[b - 1] += 1
            key = tuple(xexp) + tuple(yexp)
            terms[key] = terms.get(key, 0) + 1
        return make_sympoly(default_variables(n, m), terms)
    if route == "checked":
        direct = kron_coproduct_poly(lam, n, m, "bitableau")
        subst = kron_coproduct_poly(lam, n, m, "substitution")
        if direct.terms != subst.terms:
            raise ArithmeticError(
                f"bitableau and substitution routes disagree for lam={lam}, n={n}, m={m}"
            )
        return direct
    raise ValueError(f"unknown route {route!r}")


def _product_terms(
    px: Mapping[Exponents, int], py: Mapping[Exponents, int]
) -> dict[Exponents, int]:
    out: dict[Exponents, int] = {}
    for ex, cx in px.items():
        for ey, cy in py.items():
            key = ex + ey
            val = out.get(key, 0) + cx * cy
            if val:
                out[key] = val
            else:
                del out[key]
    return out


def expand_in_schur_schur(p: SymPoly, k: int) -> dict[tuple[Partition, Partition], int]:
    """Coefficients of p in the s_mu(x) s_nu(y) basis by leading-term elimination.

    Variable names starting with "x" form the first alphabet.  The pivot is
    the largest exponent vector in reverse-lexicographic order, which refines
    dominance, so subtracting its Schur product only introduces smaller
    terms.  A nonzero residual that has no partition-shaped leading term
    means the input was not in the span and is reported as an error.
    """
    n = sum(1 for v in p.variables if v.startswith("x"))
    m = len(p.variables) - n
    xvars = p.variables[:n]
    yvars = p.variables[n:]
    schur_cache_x: dict[Partition, dict] = {}
    schur_cache_y: dict[Partition, dict] = {}
    residual = dict(p.terms)
    result: dict[tuple[Partition, Partition], int] = {}
    while residual:
        key = max(residual)
        xexp, yexp = key[:n], key[n:]
        mu, nu = trim(xexp), trim(yexp)
        if (
            any(xexp[i] < xexp[i + 1] for i in range(n - 1))
            or any(yexp[j] < yexp[j + 1] for j in range(m - 1))
            or sum(mu) != k
            or sum(nu) != k
        ):
            raise ArithmeticError(
                f"input is not in the degree-{k} Schur x Schur span (pivot {key})"
            )
        coeff = residual[key]
        result[(mu, nu)] = result.get((mu, nu), 0) + coeff
        if mu not in schur_cache_x:
            schur_cache_x[mu] = schur_poly(mu, xvars).terms
        if nu not in schur_cache_y:
            schur_cache_y[nu] = schur_poly(nu, yvars).terms
        for exps, c in _product_terms(schur_cache_x[mu], schur_cache_y[nu]).items():
            val = residual.get(exps, 0) - coeff * c
            if val:
                residual[exps] = val
            else:
                residual.pop(exps, None)
    return {pair: c for pair, c in result.items() if c}


def monomial_coefficient_d(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """d(lam,mu,nu) = sum_tau g(lam,tau,nu) K_{tau,mu}, from characters only."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    k = sum(lam)
    if sum(mu) != k or sum(nu) != k:
        raise ValueError("all three partitions must have the same size")
    total = 0
    for tau in enumerate_partitions(k):
        g = kronecker_coefficient(lam, tau, nu)
        if g:
            total += g * kostka(tau, mu)
    return total
