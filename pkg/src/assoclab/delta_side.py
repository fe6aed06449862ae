"""Associator series whose coefficients are polylogarithms at one half.

One factor is the series 1 + sum over index words (l1,...,lr) of
I[l1,...,lr] * ad_B^{l1}(A) ... ad_B^{lr}(A), where I[...] is an iterated
kernel integral that collapses, via nested geometric summation, to an exact
integer combination of delta values (the composition-indexed polylogarithms
at argument 1/2).  The full series is the product

    exp(c B) * Xi_B * inverse(Xi_A) * exp(-c A),

with c = log 2 and Xi_A the letter swap of Xi_B.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .symring import SymExpr, SymMonomial, LOG2, delta
from .freealg import (
    A,
    B,
    NCSeries,
    ad_power,
    nc_add,
    nc_exp_letter,
    nc_inverse,
    nc_mul,
    nc_resize,
    nc_scale,
    nc_unit,
    other_letter,
)


def index_weight(ix) -> int:
    """Total degree r + l1 + ... + lr contributed by I[l1,...,lr]."""
    ix = tuple(ix)
    return len(ix) + sum(ix)


def index_words(max_weight: int) -> list[tuple[int, ...]]:
    """All nonempty index words of weight <= max_weight.

    Ordered by weight, then length, then lexicographically; 2^(d-1) words
    per weight d.
    """
    out: list[tuple[int, ...]] = []
    for d in range(1, max_weight + 1):
        for r in range(1, d + 1):
            out.extend(_weak_compositions(d - r, r))
    return out


def _weak_compositions(total: int, parts: int):
    # lex ascending; entries >= 0
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _weak_compositions(total - head, parts - 1):
            yield (head,) + rest


def _carry_vectors(levels: tuple[int, ...]):
    """All (m0=0, m1, ..., m_{r-1}, m_r=0) with 0 <= m_j <= l_j + m_{j-1}."""
    r = len(levels)

    def rec(j: int, prefix: tuple[int, ...]):
        if j == r:
            yield prefix + (0,)
            return
        hi = levels[j - 1] + prefix[j - 1]
        for m in range(hi + 1):
            yield from rec(j + 1, prefix + (m,))

    yield from rec(1, (0,))


def iint_terms(levels: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
    """(binomial coefficient, composition) pairs of the kernel-integral expansion.

    The composition is read off back to front: part j of the output comes from
    index r+1-j, so the last index of the word fixes the leading part.
    """
    levels = tuple(levels)
    r = len(levels)
    out = []
    for m in _carry_vectors(levels):
        coeff = 1
        for j in range(2, r + 1):
            coeff *= comb(levels[j - 1] + m[j - 1], levels[j - 1])
        parts = tuple(levels[j - 1] + m[j - 1] - m[j] + 1 for j in range(r, 0, -1))
        out.append((coeff, parts))
    return out


@lru_cache(maxsize=None)
def iint_to_sym(levels: tuple[int, ...]) -> SymExpr:
    """Exact value of I[levels] over the delta and log-2 generators.

    Empty word gives 1; the all-zero word of length r gives c^r/r! because
    the corresponding all-ones polylogarithm is a pure log power.  Every
    other word yields a sum of genuine delta generators: an all-ones
    composition forces every index to zero.
    """
    levels = tuple(int(l) for l in levels)
    if any(l < 0 for l in levels):
        raise ValueError("indices must be >= 0")
    r = len(levels)
    if r == 0:
        return SymExpr.one()
    if all(l == 0 for l in levels):
        return SymExpr({SymMonomial(((LOG2, r),)): Fraction(1, factorial(r))})
    acc = SymExpr.zero()
    for coeff, parts in iint_terms(levels):
        acc = acc + SymExpr.gen(delta(parts), coeff=Fraction(coeff))
    return acc


def xi_series(actor: str, order: int) -> NCSeries:
    """Sum of I[levels] times the matching adjoint-power word products.

    ``actor`` is the letter carried by the adjoint action; the argument
    letter is the other one.  Index words are cut off at total degree
    ``order``.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    argument = other_letter(actor)
    acc = nc_unit(order)

    @lru_cache(maxsize=None)
    def ad_factor(level: int) -> NCSeries:
        return nc_resize(ad_power(actor, argument, level), order)

    for levels in index_words(order):
        word = nc_unit(order)
        for l in levels:
            word = nc_mul(word, ad_factor(l))
        acc = nc_add(acc, nc_scale(word, iint_to_sym(levels)))
    return acc


def phi_delta(order: int) -> NCSeries:
    """exp(cB) * Xi_B * inverse(Xi_A) * exp(-cA) at the given order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    left = nc_mul(nc_exp_letter(B, 1, order), xi_series(B, order))
    right = nc_mul(nc_inverse(xi_series(A, order)), nc_exp_letter(A, -1, order))
    return nc_mul(left, right)
