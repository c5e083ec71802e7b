"""The binary icosahedral group, modeled as SL2(F5).

Elements are row-major tuples (a, b, c, d) of residues mod 5 with
determinant 1.  The group has order 120, a unique element of order 2
(minus the identity, which generates the center), and its quotient by the
center is the alternating group A5 of order 60.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, WitnessSearchError

P = 5

IDENTITY = (1, 0, 0, 1)
MINUS_IDENTITY = (4, 0, 0, 4)

Element = tuple[int, int, int, int]


def mul(x: Element, y: Element) -> Element:
    a, b, c, d = x
    e, f, g, h = y
    return (
        (a * e + b * g) % P,
        (a * f + b * h) % P,
        (c * e + d * g) % P,
        (c * f + d * h) % P,
    )


def inv(x: Element) -> Element:
    a, b, c, d = x
    return (d % P, -b % P, -c % P, a % P)


def neg(x: Element) -> Element:
    return tuple(-v % P for v in x)


def power(x: Element, k: int) -> Element:
    if k < 0:
        return power(inv(x), -k)
    out = IDENTITY
    base = x
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return out


@lru_cache(maxsize=None)
def enumerate_group() -> tuple[Element, ...]:
    """All 120 elements, found by filtering the 625 candidate tuples."""
    members = []
    for a in range(P):
        for b in range(P):
            for c in range(P):
                for d in range(P):
                    if (a * d - b * c) % P == 1:
                        members.append((a, b, c, d))
    return tuple(sorted(members))


def element_order(x: Element) -> int:
    y = x
    for k in range(1, 121):
        if y == IDENTITY:
            return k
        y = mul(y, x)
    raise DomainError("element order exceeds the group order")


def element_order_census() -> dict[int, int]:
    census: dict[int, int] = {}
    for g in enumerate_group():
        k = element_order(g)
        census[k] = census.get(k, 0) + 1
    return dict(sorted(census.items()))


def center_elements() -> tuple[Element, ...]:
    group = enumerate_group()
    return tuple(g for g in group if all(mul(g, h) == mul(h, g) for h in group))


def verify_perfect(elements: tuple[Element, ...] | None = None) -> bool:
    """Is the commutator subgroup of the given subgroup the whole subgroup.

    Defaults to the full group.  Negative controls such as the center or a
    cyclic subgroup run through the same closure computation and come back
    False.
    """
    subgroup = tuple(elements) if elements is not None else enumerate_group()
    members = set(subgroup)
    commutators = {
        mul(mul(x, y), mul(inv(x), inv(y))) for x in subgroup for y in subgroup
    }
    if not commutators <= members:
        raise DomainError("input is not closed under commutators; not a subgroup?")
    closure = set(commutators) | {IDENTITY}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for y in commutators:
            z = mul(x, y)
            if z not in closure:
                closure.add(z)
                frontier.append(z)
    return closure == members


def cyclic_subgroup(x: Element) -> tuple[Element, ...]:
    out = [IDENTITY]
    y = x
    while y != IDENTITY:
        out.append(y)
        y = mul(y, x)
    return tuple(out)


@dataclass(frozen=True)
class PresentationTriple:
    """Witness for the presentation with x1^2 = x2^3 = x3^5 = h central
    and x1 x2 x3 = 1."""

    h: Element
    x1: Element
    x2: Element
    x3: Element


def find_presentation_triple() -> PresentationTriple:
    """Search the group for elements of orders 4, 6, 10 whose product is the
    identity and whose relevant powers all equal the central involution.

    Every relation is asserted literally on the found triple rather than
    inferred from order bookkeeping.
    """
    group = enumerate_group()
    h = MINUS_IDENTITY
    order4 = [g for g in group if element_order(g) == 4]
    order6 = [g for g in group if element_order(g) == 6]
    for x1 in order4:
        for x2 in order6:
            x3 = inv(mul(x1, x2))
            if element_order(x3) != 10:
                continue
            if power(x1, 2) != h or power(x2, 3) != h or power(x3, 5) != h:
                continue
            if mul(mul(x1, x2), x3) != IDENTITY:
                continue
            if any(mul(x, h) != mul(h, x) for x in (x1, x2, x3)):
                continue
            return PresentationTriple(h, x1, x2, x3)
    raise WitnessSearchError("no presentation triple found")


def coset(g: Element) -> frozenset[Element]:
    return frozenset((g, neg(g)))


@lru_cache(maxsize=None)
def quotient_cosets() -> tuple[frozenset[Element], ...]:
    seen: set[frozenset[Element]] = set()
    out = []
    for g in enumerate_group():
        c = coset(g)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return tuple(out)


def fixed_coset_count(x: Element) -> int:
    """Number of cosets {g, -g} fixed by left translation by x."""
    count = 0
    for c in quotient_cosets():
        g = next(iter(c))
        if mul(x, g) in c:
            count += 1
    return count


def doubled_pullback_regular_character(x: Element) -> int:
    """Character of twice the pullback of the order-60 regular representation,
    evaluated by counting fixed cosets: 120 on the center, 0 elsewhere."""
    return 2 * fixed_coset_count(x)


@dataclass(frozen=True)
class RestrictionProfile:
    """Restriction of the doubled pullback regular representation to a cyclic
    subgroup of order m of the order-60 quotient: 120/m copies of that cyclic
    group's regular representation."""

    order: int
    copies: int
    exponent_multiplicities: dict[int, int]


def regular_restriction_profile(m: int) -> RestrictionProfile:
    if m not in (2, 3, 5):
        raise DomainError("cyclic restriction order must be 2, 3, or 5")
    x = next(g for g in enumerate_group() if element_order(g) == 2 * m)
    for k in range(2 * m):
        value = doubled_pullback_regular_character(power(x, k))
        expected = 120 if power(x, k) in (IDENTITY, MINUS_IDENTITY) else 0
        if value != expected:
            raise DomainError(
                f"restriction character mismatch at power {k}: {value} != {expected}"
            )
    copies = 120 // m
    return RestrictionProfile(m, copies, {j: copies for j in range(m)})
