"""Sparse integer polynomials with named generators.

Terms are stored as a dict from exponent tuples to nonzero integer
coefficients, the exponent tuple being aligned with the generator tuple.
The quotient ring Z[c2, c3] / (2 c3) used for the odd Newton classes gets
its own thin wrapper that renormalizes after every operation.
"""

from __future__ import annotations

from .errors import DimensionMismatchError, DomainError


class IntPolynomial:
    """A polynomial over Z in a fixed tuple of named generators."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: tuple[str, ...], terms: dict | None = None):
        self.gens = tuple(gens)
        clean: dict[tuple, int] = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(expo)
            if len(expo) != len(self.gens):
                raise DimensionMismatchError(
                    f"exponent tuple {expo} does not match generators {self.gens}"
                )
            if any(e < 0 for e in expo):
                raise DomainError("negative exponents are not allowed")
            if not isinstance(coeff, int):
                raise DomainError(f"coefficient {coeff!r} is not an integer")
            if coeff != 0:
                clean[expo] = clean.get(expo, 0) + coeff
                if clean[expo] == 0:
                    del clean[expo]
        self.terms = clean

    @classmethod
    def zero(cls, gens: tuple[str, ...]) -> "IntPolynomial":
        return cls(gens, {})

    @classmethod
    def constant(cls, gens: tuple[str, ...], c: int) -> "IntPolynomial":
        return cls(gens, {tuple(0 for _ in gens): c})

    @classmethod
    def generator(cls, gens: tuple[str, ...], name: str) -> "IntPolynomial":
        if name not in gens:
            raise DomainError(f"{name!r} is not among the generators {gens}")
        expo = tuple(1 if g == name else 0 for g in gens)
        return cls(gens, {expo: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _require_same_ring(self, other: "IntPolynomial") -> None:
        if self.gens != other.gens:
            raise DimensionMismatchError(
                f"cannot combine polynomials over {self.gens} and {other.gens}"
            )

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(self.gens, other)
        self._require_same_ring(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, 0) + coeff
        return IntPolynomial(self.gens, terms)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(
                self.gens, {e: other * c for e, c in self.terms.items()}
            )
        self._require_same_ring(other)
        terms: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                terms[expo] = terms.get(expo, 0) + c1 * c2
        return IntPolynomial(self.gens, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise DomainError("negative powers are not allowed")
        result = IntPolynomial.constant(self.gens, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(self.gens, other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    __hash__ = None

    def substitute(
        self, target_gens: tuple[str, ...], mapping: dict[str, "IntPolynomial | int"]
    ) -> "IntPolynomial":
        """Evaluate by sending each generator to a polynomial over target_gens.

        Every generator that actually occurs must be mapped; values may be
        plain integers.
        """
        target_gens = tuple(target_gens)
        images: dict[str, IntPolynomial] = {}
        for name, value in mapping.items():
            if isinstance(value, int):
                value = IntPolynomial.constant(target_gens, value)
            if value.gens != target_gens:
                raise DimensionMismatchError(
                    f"image of {name!r} lives over {value.gens}, not {target_gens}"
                )
            images[name] = value
        result = IntPolynomial.zero(target_gens)
        for expo, coeff in self.terms.items():
            term = IntPolynomial.constant(target_gens, coeff)
            for g, e in zip(self.gens, expo):
                if e == 0:
                    continue
                if g not in images:
                    raise DomainError(f"no image supplied for generator {g!r}")
                term = term * images[g] ** e
            result = result + term
        return result

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms in display order: total degree descending, then lexicographic."""
        return sorted(
            self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0]))
        )

    def render(self) -> str:
        """Human form such as '2*p1^2 - 8*c2 + 3'."""
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for expo, coeff in self.sorted_terms():
            factors = []
            for g, e in zip(self.gens, expo):
                if e == 1:
                    factors.append(g)
                elif e > 1:
                    factors.append(f"{g}^{e}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def json_terms(self) -> list[dict]:
        """Deterministic JSON form: a list of coefficient/exponent records."""
        records = []
        for expo, coeff in self.sorted_terms():
            exps = {g: e for g, e in zip(self.gens, expo) if e != 0}
            records.append({"coeff": str(coeff), "exponents": exps})
        return records

    def __repr__(self) -> str:
        return f"IntPolynomial({self.render()!r})"


QUOTIENT_GENS = ("c2", "c3")


def _reduce_mod_2c3(poly: IntPolynomial) -> IntPolynomial:
    # any monomial containing c3 has its coefficient read mod 2
    terms = {}
    for (e2, e3), coeff in poly.terms.items():
        if e3 > 0:
            coeff %= 2
        if coeff != 0:
            terms[(e2, e3)] = coeff
    return IntPolynomial(QUOTIENT_GENS, terms)


class QuotientedPolynomial:
    """An element of Z[c2, c3] / (2 c3), kept in canonical reduced form."""

    __slots__ = ("poly",)

    def __init__(self, poly: IntPolynomial):
        if poly.gens != QUOTIENT_GENS:
            raise DimensionMismatchError(
                f"quotient ring generators are {QUOTIENT_GENS}, got {poly.gens}"
            )
        self.poly = _reduce_mod_2c3(poly)

    @classmethod
    def zero(cls) -> "QuotientedPolynomial":
        return cls(IntPolynomial.zero(QUOTIENT_GENS))

    @classmethod
    def constant(cls, c: int) -> "QuotientedPolynomial":
        return cls(IntPolynomial.constant(QUOTIENT_GENS, c))

    @classmethod
    def generator(cls, name: str) -> "QuotientedPolynomial":
        return cls(IntPolynomial.generator(QUOTIENT_GENS, name))

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __add__(self, other: "QuotientedPolynomial") -> "QuotientedPolynomial":
        return QuotientedPolynomial(self.poly + other.poly)

    def __sub__(self, other: "QuotientedPolynomial") -> "QuotientedPolynomial":
        return QuotientedPolynomial(self.poly - other.poly)

    def __neg__(self) -> "QuotientedPolynomial":
        return QuotientedPolynomial(-self.poly)

    def __mul__(self, other) -> "QuotientedPolynomial":
        if isinstance(other, int):
            return QuotientedPolynomial(self.poly * other)
        return QuotientedPolynomial(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuotientedPolynomial":
        return QuotientedPolynomial(self.poly**n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientedPolynomial):
            return NotImplemented
        return self.poly == other.poly

    __hash__ = None

    def render(self) -> str:
        return self.poly.render()

    def json_terms(self) -> list[dict]:
        return self.poly.json_terms()

    def __repr__(self) -> str:
        return f"QuotientedPolynomial({self.render()!r})"
