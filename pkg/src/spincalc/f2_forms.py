"""Quadratic forms over F2 refining a symplectic pairing.

Vectors of the 2g-dimensional F2 space are Python ints used as bitmasks.
The standard basis is ordered (a_1, ..., a_g, b_1, ..., b_g): bit i is the
a_{i+1} coordinate and bit g + i the b_{i+1} coordinate, and the standard
pairing couples a_i with b_i.  A quadratic form q refines the pairing:

    q(x + y) = q(x) + q(y) + x.y

so q is determined by its values on a basis.  The Arf invariant
sum_i q(a_i) q(b_i) classifies forms of a given genus together with the
dimension; its multiplicative avatar is the sign of the Gauss sum
sum_x (-1)^{q(x)}, which always equals +-2^g (the sign times 2^{-g} times
the sum is 1; sources differ on the printed normalization, the exhaustive
enumeration here is authoritative).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .errors import (
    DegeneratePairingError,
    DimensionMismatchError,
    DomainError,
    EnumerationCapError,
    InvalidFormError,
    WitnessSearchError,
)

DEFAULT_GENUS_CAP = 8


def standard_gram(g: int) -> tuple[int, ...]:
    """Gram rows of the standard symplectic pairing in dimension 2g."""
    rows = [1 << (g + i) for i in range(g)]
    rows += [1 << i for i in range(g)]
    return tuple(rows)


def _gram_pair(gram: tuple[int, ...], x: int, y: int) -> int:
    acc = 0
    i = 0
    xx = x
    while xx:
        if xx & 1:
            acc ^= (gram[i] & y).bit_count() & 1
        xx >>= 1
        i += 1
    return acc


def _gram_rank(gram: tuple[int, ...]) -> int:
    rows = list(gram)
    rank = 0
    for bit in range(len(gram)):
        pivot = next((r for r in rows if (r >> bit) & 1), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if (r >> bit) & 1 else r for r in rows]
        rank += 1
    return rank


@dataclass(frozen=True)
class ArfValue:
    """The Arf invariant in both of its guises."""

    additive: int
    multiplicative: int

    def __post_init__(self) -> None:
        if self.additive not in (0, 1):
            raise DomainError("additive Arf invariant must be 0 or 1")
        if self.multiplicative != (-1) ** self.additive:
            raise DomainError("multiplicative Arf invariant must be (-1)^additive")

    @classmethod
    def from_additive(cls, a: int) -> "ArfValue":
        a &= 1
        return cls(a, (-1) ** a)

    @classmethod
    def from_multiplicative(cls, m: int) -> "ArfValue":
        if m not in (1, -1):
            raise DomainError("multiplicative Arf invariant must be +1 or -1")
        return cls(0 if m == 1 else 1, m)


@dataclass(frozen=True)
class QuadraticForm:
    """A quadratic refinement, stored by its values on a basis.

    basis_values packs q(e_0), ..., q(e_{2g-1}) into a bitmask.  gram is
    None for the standard pairing, otherwise a tuple of 2g Gram-matrix rows
    (alternating and nondegenerate, or construction fails).
    """

    g: int
    basis_values: int
    gram: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.g < 1:
            raise InvalidFormError("genus must be at least 1")
        if not 0 <= self.basis_values < (1 << (2 * self.g)):
            raise InvalidFormError("basis values must fit in 2g bits")
        if self.gram is not None:
            n = 2 * self.g
            if len(self.gram) != n:
                raise InvalidFormError("Gram matrix must have 2g rows")
            if any(not 0 <= row < (1 << n) for row in self.gram):
                raise InvalidFormError("Gram rows must fit in 2g bits")
            if any((self.gram[i] >> i) & 1 for i in range(n)):
                raise InvalidFormError("pairing must be alternating")
            if any(
                ((self.gram[i] >> j) & 1) != ((self.gram[j] >> i) & 1)
                for i in range(n)
                for j in range(i + 1, n)
            ):
                raise InvalidFormError("pairing must be symmetric")
            if _gram_rank(self.gram) != n:
                raise DegeneratePairingError("pairing is degenerate")
            if self.gram == standard_gram(self.g):
                object.__setattr__(self, "gram", None)

    @property
    def dim(self) -> int:
        return 2 * self.g

    @property
    def is_standard(self) -> bool:
        return self.gram is None

    def pair(self, x: int, y: int) -> int:
        """The underlying symplectic pairing x.y."""
        if self.is_standard:
            lo = (1 << self.g) - 1
            crossings = ((x & lo) & (y >> self.g)).bit_count()
            crossings += ((y & lo) & (x >> self.g)).bit_count()
            return crossings & 1
        return _gram_pair(self.gram, x, y)


def eval_form(q: QuadraticForm, x: int) -> int:
    """q(x) via the quadratic expansion over the basis values."""
    if not 0 <= x < (1 << q.dim):
        raise DomainError("vector must fit in 2g bits")
    linear = (x & q.basis_values).bit_count() & 1
    if q.is_standard:
        lo = (1 << q.g) - 1
        return linear ^ (((x & lo) & (x >> q.g)).bit_count() & 1)
    cross = 0
    xx = x
    i = 0
    while xx:
        if xx & 1:
            higher = x >> (i + 1) << (i + 1)
            cross ^= (q.gram[i] & higher).bit_count() & 1
        xx >>= 1
        i += 1
    return linear ^ cross


def symplectic_basis(gram: tuple[int, ...]) -> list[int]:
    """A basis (a_1..a_g, b_1..b_g) with a_i.b_j = delta_ij, a_i.a_j = b_i.b_j = 0.

    Runs symplectic Gram-Schmidt over F2 on the given alternating Gram rows
    and raises DegeneratePairingError when the pairing has a radical.
    """
    n = len(gram)
    if n % 2 == 1:
        raise DegeneratePairingError("odd-dimensional pairings are degenerate")
    candidates = [1 << i for i in range(n)]
    a_side: list[int] = []
    b_side: list[int] = []
    while candidates:
        v = candidates.pop(0)
        if v == 0:
            continue
        partner_at = next(
            (k for k, u in enumerate(candidates) if _gram_pair(gram, v, u) == 1), None
        )
        if partner_at is None:
            raise DegeneratePairingError("vector with no symplectic partner")
        w = candidates.pop(partner_at)
        a_side.append(v)
        b_side.append(w)
        candidates = [
            u
            ^ (v if _gram_pair(gram, u, w) else 0)
            ^ (w if _gram_pair(gram, u, v) else 0)
            for u in candidates
        ]
        candidates = [u for u in candidates if u != 0]
    if 2 * len(a_side) != n:
        raise DegeneratePairingError("pairing is degenerate")
    return a_side + b_side


def normalize(q: QuadraticForm) -> QuadraticForm:
    """The same form written in a symplectic basis (standard pairing)."""
    if q.is_standard:
        return q
    basis = symplectic_basis(q.gram)
    bv = 0
    for i, v in enumerate(basis):
        bv |= eval_form(q, v) << i
    return QuadraticForm(q.g, bv)


def arf_basis(q: QuadraticForm) -> ArfValue:
    """Arf invariant as sum_i q(a_i) q(b_i) over a symplectic basis."""
    qq = normalize(q)
    lo = qq.basis_values & ((1 << qq.g) - 1)
    hi = qq.basis_values >> qq.g
    return ArfValue.from_additive((lo & hi).bit_count() & 1)


def arf_gauss(q: QuadraticForm, cap: int = DEFAULT_GENUS_CAP) -> ArfValue:
    """Arf invariant as the sign of the Gauss sum sum_x (-1)^{q(x)}.

    The sum is computed by exhaustive enumeration and must come out as
    +-2^g; anything else means the input was not a quadratic refinement.
    """
    _check_cap(q.g, cap)
    qq = normalize(q)
    values = _kernels.form_values(qq.g, qq.basis_values)
    total = int(values.size - 2 * int(values.sum()))
    if total == 1 << q.g:
        return ArfValue.from_multiplicative(1)
    if total == -(1 << q.g):
        return ArfValue.from_multiplicative(-1)
    raise InvalidFormError(f"Gauss sum {total} is not +-2^{q.g}")


def count_zeros(q: QuadraticForm, cap: int = DEFAULT_GENUS_CAP) -> int:
    """Number of vectors with q(x) = 0, counted by exhaustive enumeration.

    Always 2^{g-1} (2^g + arf(q)) with arf multiplicative: the three even
    forms at g = 1 have 3 zeros each and the odd form has 1.
    """
    _check_cap(q.g, cap)
    qq = normalize(q)
    values = _kernels.form_values(qq.g, qq.basis_values)
    return int((values == 0).sum())


def _check_cap(g: int, cap: int) -> None:
    if g > cap:
        raise EnumerationCapError(
            f"genus {g} exceeds the enumeration cap {cap}; raise cap explicitly"
        )


def enumerate_forms(g: int, cap: int = DEFAULT_GENUS_CAP) -> list[QuadraticForm]:
    """All 4^g standard-pairing forms of genus g, ordered by basis values."""
    if g < 1:
        raise DomainError("genus must be at least 1")
    _check_cap(g, cap)
    return [QuadraticForm(g, bv) for bv in range(1 << (2 * g))]


def count_by_arf(g: int, cap: int = DEFAULT_GENUS_CAP) -> tuple[int, int]:
    """(forms with arf +1, forms with arf -1) among all forms of genus g.

    Closed form: 2^{g-1} (2^g + 1) and 2^{g-1} (2^g - 1).  Computed here by
    enumerating every form and taking its basis Arf invariant.
    """
    if g < 1:
        raise DomainError("genus must be at least 1")
    _check_cap(g, cap)
    additive = _kernels.arf_additive_all(g)
    n_minus = int(additive.sum())
    n_plus = int(additive.size - n_minus)
    return n_plus, n_minus


def direct_sum(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    """Orthogonal direct sum, with the two bases concatenated blockwise."""
    p, r = normalize(q1), normalize(q2)
    g = p.g + r.g
    bv = 0
    for i in range(p.g):
        bv |= ((p.basis_values >> i) & 1) << i
        bv |= ((p.basis_values >> (p.g + i)) & 1) << (g + i)
    for i in range(r.g):
        bv |= ((r.basis_values >> i) & 1) << (p.g + i)
        bv |= ((r.basis_values >> (r.g + i)) & 1) << (g + p.g + i)
    return QuadraticForm(g, bv)


def apply_map(cols: tuple[int, ...], x: int) -> int:
    """Image of x under the linear map whose i-th column is cols[i]."""
    out = 0
    i = 0
    while x:
        if x & 1:
            out ^= cols[i]
        x >>= 1
        i += 1
    return out


def is_symplectic(g: int, cols: tuple[int, ...]) -> bool:
    """Does the map preserve the standard pairing on all basis pairs."""
    probe = QuadraticForm(g, 0)
    n = 2 * g
    for i in range(n):
        for j in range(i + 1, n):
            if probe.pair(cols[i], cols[j]) != probe.pair(1 << i, 1 << j):
                return False
    return True


@lru_cache(maxsize=None)
def symplectic_group(g: int) -> tuple[tuple[int, ...], ...]:
    """All of Sp(2g, F2) as column tuples; only tractable for g <= 2."""
    if g > 2:
        raise WitnessSearchError("symplectic group enumeration is limited to g <= 2")
    n = 2 * g
    members = []
    def build(cols: list[int]) -> None:
        if len(cols) == n:
            members.append(tuple(cols))
            return
        i = len(cols)
        for v in range(1, 1 << n):
            ok = True
            probe = _STANDARD_PROBE[g]
            for j in range(i):
                if probe.pair(cols[j], v) != probe.pair(1 << j, 1 << i):
                    ok = False
                    break
            if ok:
                build(cols + [v])
    build([])
    return tuple(members)


_STANDARD_PROBE = {1: QuadraticForm(1, 0), 2: QuadraticForm(2, 0)}


def forms_isomorphic(
    q1: QuadraticForm, q2: QuadraticForm, witness: bool = False
):
    """Equivalence of forms; with witness=True also a symplectic map T.

    Two refinements of pairings of equal dimension are equivalent exactly
    when their Arf invariants agree.  The witness T satisfies
    q2(T x) = q1(x) for every x and is searched over the full symplectic
    group, which is enumerated only for g <= 2.
    """
    if q1.g != q2.g:
        raise DimensionMismatchError("forms live in different dimensions")
    answer = arf_basis(q1) == arf_basis(q2)
    if not witness:
        return answer
    if q1.g > 2:
        raise WitnessSearchError("witness search is limited to g <= 2")
    if not answer:
        return False, None
    p, r = normalize(q1), normalize(q2)
    n = 2 * p.g
    for cols in symplectic_group(p.g):
        if all(
            eval_form(r, apply_map(cols, x)) == eval_form(p, x)
            for x in range(1 << n)
        ):
            return True, cols
    raise InvalidFormError("equal Arf invariants but no witness found")


def random_symplectic(g: int, rng: random.Random, twists: int | None = None):
    """A pseudo-random element of Sp(2g, F2), as a product of transvections.

    Each transvection T_v(x) = x + (x.v) v preserves the pairing, so any
    product does.
    """
    n = 2 * g
    probe = QuadraticForm(g, 0)
    cols = [1 << i for i in range(n)]
    for _ in range(twists if twists is not None else 3 * n):
        v = rng.randrange(1, 1 << n)
        cols = [c ^ (v if probe.pair(c, v) else 0) for c in cols]
    return tuple(cols)


def form_to_doc(q: QuadraticForm) -> dict:
    """Serialize as {"g": g, "basis_values": bitstring}, bit i first."""
    qq = normalize(q)
    bits = "".join(str((qq.basis_values >> i) & 1) for i in range(2 * qq.g))
    return {"g": qq.g, "basis_values": bits}


def form_from_doc(doc: dict) -> QuadraticForm:
    try:
        g = int(doc["g"])
        bits = str(doc["basis_values"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidFormError(f"malformed form document: {exc}") from exc
    return form_from_bitstring(g, bits)


def form_from_bitstring(g: int, bits: str) -> QuadraticForm:
    if len(bits) != 2 * g or any(c not in "01" for c in bits):
        raise InvalidFormError(
            f"basis values must be a bitstring of length {2 * g}, got {bits!r}"
        )
    bv = sum(1 << i for i, c in enumerate(bits) if c == "1")
    return QuadraticForm(g, bv)
