"""Seifert fibered homology spheres and e-invariants of flat bundles.

A Seifert fibration over the 2-sphere is encoded by its list of pairs
(a_j, b_j) of coprime integers with a_j >= 1.  Writing a for the product of
the a_j, the total space is an integral homology sphere exactly when
a * sum_j b_j / a_j = +-1; the Poincare sphere is ((2,-1), (3,1), (5,1)).

A flat bundle on such a sphere is described here by an eigenvalue profile:
for each exceptional fiber j, the N eigenvalues of the holonomy x_j are
zeta_{N a_j}^{N s - b_j r_h} for rational parameters s, where the central
element h acts by the scalar zeta_N^{r_h} (r_h = 0 for a trivial center).
The e-invariant of the bundle lives in Q/Z.  When h acts trivially,

    e = - sum_j sum_k a s_k(j)^2 / (2 a_j^2)  (mod Z),

and for a general scalar central action the computable quantity is

    2 Re(N e) = - sum_j sum_k sum_l a (s_k(j) - s_l(j))^2 / (2 a_j^2)  (mod Z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import cyclotomic, icosa_group
from .errors import (
    CentralBehaviorError,
    DomainError,
    EnumerationCapError,
    InvalidSeifertDataError,
    MultiplicityError,
    TorsionBoundError,
)
from .exact_arith import ModZ


@dataclass(frozen=True)
class SeifertData:
    """Pairs (a_j, b_j), each coprime with a_j >= 1."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for a, b in self.pairs:
            if a < 1:
                raise InvalidSeifertDataError(f"fiber order {a} must be positive")
            if math.gcd(a, b) != 1:
                raise InvalidSeifertDataError(f"pair ({a}, {b}) is not coprime")

    @property
    def a(self) -> int:
        out = 1
        for aj, _ in self.pairs:
            out *= aj
        return out


POINCARE = SeifertData(((2, -1), (3, 1), (5, 1)))


def homology_sphere_obstruction(d: SeifertData) -> Fraction:
    """a * sum_j b_j / a_j; the space is a homology sphere iff this is +-1."""
    total = sum((Fraction(b, a) for a, b in d.pairs), Fraction(0))
    return d.a * total


def is_integral_homology_sphere(d: SeifertData) -> bool:
    return abs(homology_sphere_obstruction(d)) == 1


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[str, ...]


def presentation(d: SeifertData) -> Presentation:
    """Fundamental-group presentation with central generator h.

    Relations in canonical order: centrality of h, the product relation,
    then one power relation x_j^{a_j} = h^{-b_j} per fiber.  An empty pair
    list presents the infinite cyclic group on h alone.
    """
    n = len(d.pairs)
    gens = ("h",) + tuple(f"x{j}" for j in range(1, n + 1))
    if n == 0:
        return Presentation(gens, ())
    relations = [f"[h,x{j}] = 1" for j in range(1, n + 1)]
    relations.append("*".join(f"x{j}" for j in range(1, n + 1)) + " = 1")
    for j, (a, b) in enumerate(d.pairs, start=1):
        left = f"x{j}" if a == 1 else f"x{j}^{a}"
        e = -b
        if e == 0:
            right = "1"
        elif e == 1:
            right = "h"
        else:
            right = f"h^{e}"
        relations.append(f"{left} = {right}")
    return Presentation(gens, tuple(relations))


@dataclass(frozen=True)
class FixedPointData:
    """Fixed point counts of the exceptional holonomies on a genus-g surface.

    The Lefschetz trace on first homology is 2 - F for F fixed points, the
    holonomy being orientation preserving of finite order.
    """

    genus: int
    counts: tuple[int, ...]

    def traces(self) -> tuple[int, ...]:
        return tuple(lefschetz_trace(f) for f in self.counts)


def lefschetz_trace(fixed_points: int) -> int:
    if fixed_points < 0:
        raise DomainError("fixed point count must be nonnegative")
    return 2 - fixed_points


@dataclass(frozen=True)
class EigenvalueProfile:
    """The multiset of s-parameters of one exceptional holonomy."""

    fiber: int
    s_values: tuple[Fraction, ...]


@dataclass(frozen=True)
class RepSpec:
    """Eigenvalue data of a flat bundle: one profile per exceptional fiber.

    scalar_exponent is r_h for a scalar central action, None when the center
    acts trivially.
    """

    dimension: int
    scalar_exponent: int | None
    profiles: tuple[EigenvalueProfile, ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise DomainError("dimension must be positive")
        for p in self.profiles:
            if len(p.s_values) != self.dimension:
                raise DomainError(
                    f"profile for fiber {p.fiber} has {len(p.s_values)} "
                    f"eigenvalues, expected {self.dimension}"
                )

    @property
    def trivial_center(self) -> bool:
        return self.scalar_exponent is None or self.scalar_exponent == 0


def _matched_profiles(d: SeifertData, spec: RepSpec) -> list:
    if len(spec.profiles) != len(d.pairs):
        raise DomainError(
            f"{len(spec.profiles)} profiles for {len(d.pairs)} exceptional fibers"
        )
    expected = list(range(1, len(d.pairs) + 1))
    if [p.fiber for p in spec.profiles] != expected:
        raise DomainError("profiles must be given for fibers 1..n in order")
    return list(zip(d.pairs, spec.profiles))


def e_simple(d: SeifertData, spec: RepSpec) -> ModZ:
    """e = - sum_j sum_k a s_k(j)^2 / (2 a_j^2) in Q/Z, for trivial center."""
    if not spec.trivial_center:
        raise CentralBehaviorError("formula requires the center to act trivially")
    a = d.a
    total = Fraction(0)
    for (aj, _), profile in _matched_profiles(d, spec):
        for s in profile.s_values:
            total -= Fraction(a) * s * s / (2 * aj * aj)
    return ModZ.of(total)


def e_general(d: SeifertData, spec: RepSpec) -> ModZ:
    """2 Re(N e) = - sum_j sum_k sum_l a (s_k - s_l)^2 / (2 a_j^2) in Q/Z.

    Valid whenever the center acts by a scalar, which includes the trivial
    action with r_h = 0.
    """
    a = d.a
    total = Fraction(0)
    for (aj, _), profile in _matched_profiles(d, spec):
        for sk in profile.s_values:
            for sl in profile.s_values:
                diff = sk - sl
                total -= Fraction(a) * diff * diff / (2 * aj * aj)
    return ModZ.of(total)


def s_from_exponents(
    pair: tuple[int, int], big_n: int, scalar_exponent: int, exponents
) -> list[Fraction]:
    """s-parameters from eigenvalue exponents: s = (t + b r_h) / N.

    Each exponent is a residue mod N a_j; t is its representative in
    [0, N a_j).  The result is exact and may be non-integral, in which case
    it records an eigenvalue outside the integral-lift convention.
    """
    a, b = pair
    if big_n < 1:
        raise DomainError("N must be positive")
    modulus = big_n * a
    out = []
    for e in exponents:
        t = int(e) % modulus
        out.append(Fraction(t + b * scalar_exponent, big_n))
    return out


_SOLVE_CAP = 2_000_000


def multiplicity_solve(
    m: int,
    dimension: int,
    trace: int,
    allowed: tuple[int, ...],
    real: bool = True,
) -> tuple[int, ...]:
    """Unique nonnegative multiplicities of the eigenvalues zeta_m^e.

    Finds all vectors (mu_e) over the allowed exponents with
    sum mu_e = dimension and sum mu_e zeta_m^e = trace, the latter checked
    exactly in Z[zeta_m].  With real=True the multiplicities are forced to
    pair up under conjugation, mu_e = mu_{m-e}.  Returns the multiplicities
    aligned with the sorted allowed exponents; raises MultiplicityError
    carrying the full solution list when there is no solution or more than
    one.
    """
    if m < 1:
        raise DomainError("root-of-unity order must be positive")
    if dimension < 0:
        raise DomainError("dimension must be nonnegative")
    exps = tuple(sorted(set(int(e) % m for e in allowed)))
    if not exps:
        raise DomainError("allowed exponent set is empty")

    # Variables are conjugation orbits when the reality flag is set; an
    # allowed exponent whose conjugate is excluded is forced to zero.
    variables: list[tuple[tuple[int, ...], bool]] = []
    if real:
        seen = set()
        for e in exps:
            if e in seen:
                continue
            conj = (-e) % m
            if conj == e:
                variables.append(((e,), False))
                seen.add(e)
            elif conj in exps:
                variables.append(((e, conj), False))
                seen.update((e, conj))
            else:
                variables.append(((e,), True))
                seen.add(e)
    else:
        variables = [((e,), False) for e in exps]

    bound = 1
    for members, forced_zero in variables:
        if not forced_zero:
            bound *= dimension // len(members) + 1
        if bound > _SOLVE_CAP:
            raise EnumerationCapError("multiplicity search space too large")

    target = cyclotomic.integer_element(m, trace)
    solutions: list[tuple[int, ...]] = []

    def search(idx: int, remaining: int, counts: dict[int, int]) -> None:
        if idx == len(variables):
            if remaining == 0 and cyclotomic.element(m, counts) == target:
                solutions.append(tuple(counts.get(e, 0) for e in exps))
            return
        members, forced_zero = variables[idx]
        top = 0 if forced_zero else remaining // len(members)
        for mu in range(top + 1):
            for e in members:
                counts[e] = mu
            search(idx + 1, remaining - mu * len(members), counts)
        for e in members:
            counts.pop(e, None)

    search(0, dimension, {})
    if len(solutions) != 1:
        kind = "no" if not solutions else f"{len(solutions)}"
        raise MultiplicityError(
            f"{kind} multiplicity solutions for m={m}, dimension={dimension}, "
            f"trace={trace}, allowed={exps}",
            solutions=tuple(solutions),
        )
    return solutions[0]


@dataclass(frozen=True)
class IcosahedralResult:
    """One worked flat bundle on the Poincare sphere, fully evaluated."""

    example: int
    data: SeifertData
    fixed_points: FixedPointData
    rep: RepSpec
    kind: str
    value: ModZ
    order: int | None
    order_constraint: tuple[int, ...] | None


@dataclass(frozen=True)
class _CannedExample:
    genus: int
    scalar_exponent: int | None
    fixed_points: tuple[int, int, int]
    order_constraint: tuple[int, ...] | None


_EXAMPLES = {
    1: _CannedExample(14, 14, (2, 0, 0), (6, 12, 24)),
    2: _CannedExample(9, None, (4, 2, 4), None),
    3: _CannedExample(5, None, (2, 4, 2), None),
}


def _fiber_eigenvalue_structure(
    pair: tuple[int, int], big_n: int, r_h: int
) -> tuple[int, tuple[int, ...], list[int]]:
    """Eigenvalue exponents of one holonomy, reduced to the minimal root order.

    The holonomy x_j satisfies x_j^{a_j} = h^{-b_j}, so its eigenvalues are
    zeta_{N a_j}^{t_s} with t_s = N s - b_j r_h for s = 0..a_j-1.  Returns
    (m, sorted allowed exponents, exponent of each s) with every t reduced
    by the common content so the eigenvalues are m-th roots of unity.
    """
    a, b = pair
    modulus = big_n * a
    t_list = [(big_n * s - b * r_h) % modulus for s in range(a)]
    content = math.gcd(modulus, *t_list)
    m = modulus // content
    exp_of_s = [t // content for t in t_list]
    return m, tuple(sorted(exp_of_s)), exp_of_s


def icosahedral_example(k: int) -> IcosahedralResult:
    """The worked flat bundles on the Poincare sphere, from canned holonomy
    data: genus and fixed-point counts of the three exceptional holonomies,
    plus the central behavior.

    The traces 2 - F determine the eigenvalue multiplicities uniquely; the
    multiplicities convert to s-parameters (normalized into [0, a_j)), and
    the applicable e-formula is evaluated exactly.
    """
    if k not in _EXAMPLES:
        raise DomainError("worked examples are numbered 1, 2, 3")
    ex = _EXAMPLES[k]
    d = POINCARE
    big_n = 2 * ex.genus
    r_h = ex.scalar_exponent or 0
    fp = FixedPointData(ex.genus, ex.fixed_points)
    profiles = []
    for j, ((a, b), f_count) in enumerate(zip(d.pairs, ex.fixed_points), start=1):
        m, allowed, exp_of_s = _fiber_eigenvalue_structure((a, b), big_n, r_h)
        mus = multiplicity_solve(m, big_n, lefschetz_trace(f_count), allowed)
        mu_by_exp = dict(zip(allowed, mus))
        s_values = []
        for s in range(a):
            s_values.extend([Fraction(s)] * mu_by_exp[exp_of_s[s]])
        profiles.append(EigenvalueProfile(j, tuple(s_values)))
    rep = RepSpec(big_n, ex.scalar_exponent, tuple(profiles))
    if ex.scalar_exponent is None:
        value = e_simple(d, rep)
        return IcosahedralResult(
            k, d, fp, rep, "e", value, order_in_pi3(value), None
        )
    value = e_general(d, rep)
    return IcosahedralResult(
        k, d, fp, rep, "two_re_times_n_e", value, None, ex.order_constraint
    )


def regular_increment() -> ModZ:
    """e of the 120-dimensional doubled pullback regular bundle: -1/3.

    The eigenvalue profiles come from restricting that representation to
    the three cyclic subgroups, 120/m copies of each regular character.
    """
    profiles = []
    for j, (a, _) in enumerate(POINCARE.pairs, start=1):
        rp = icosa_group.regular_restriction_profile(a)
        s_values = []
        for exp in sorted(rp.exponent_multiplicities):
            s_values.extend([Fraction(exp)] * rp.exponent_multiplicities[exp])
        profiles.append(EigenvalueProfile(j, tuple(s_values)))
    rep = RepSpec(120, None, tuple(profiles))
    return e_simple(POINCARE, rep)


def stabilized_e(n: int) -> ModZ:
    """e-invariant after n stabilizations by the 120-dimensional regular
    bundle: e(example 3) + n * (-1/3)."""
    if n < 0:
        raise DomainError("stabilization count must be nonnegative")
    return icosahedral_example(3).value + n * regular_increment()


def order_in_pi3(value: ModZ) -> int:
    """Order of the class in the 24-torsion third stable homotopy group."""
    return value.order(cap=24)


def _parse_rational(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational {text!r}: {exc}") from exc


def seifert_data_from_document(doc: dict) -> SeifertData:
    try:
        pairs = tuple((int(a), int(b)) for a, b in doc["pairs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSeifertDataError(f"malformed pairs: {exc}") from exc
    return SeifertData(pairs)


def seifert_check_document(doc: dict) -> dict:
    d = seifert_data_from_document(doc)
    obstruction = homology_sphere_obstruction(d)
    return {
        "pairs": [[a, b] for a, b in d.pairs],
        "obstruction": str(obstruction),
        "is_integral_homology_sphere": is_integral_homology_sphere(d),
    }


def repspec_from_document(doc: dict) -> tuple[SeifertData, RepSpec]:
    """Parse a flat-bundle document.

    Expected fields: pairs, N, center ("trivial" or {"scalar_exponent": r}),
    and one profile per fiber, each {"fiber": j, "s_values": [rationals]} or
    {"fiber": j, "exponents": [integers]}.
    """
    d = seifert_data_from_document(doc)
    try:
        big_n = int(doc["N"])
        center = doc["center"]
        raw_profiles = list(doc["profiles"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed document: {exc}") from exc
    if center == "trivial":
        scalar_exponent = None
    elif isinstance(center, dict) and "scalar_exponent" in center:
        scalar_exponent = int(center["scalar_exponent"])
    else:
        raise CentralBehaviorError(f"unsupported center description {center!r}")
    r_h = scalar_exponent or 0
    by_fiber = {}
    for raw in raw_profiles:
        j = int(raw["fiber"])
        if j < 1 or j > len(d.pairs):
            raise DomainError(f"fiber index {j} out of range")
        if j in by_fiber:
            raise DomainError(f"fiber {j} given twice")
        if "s_values" in raw:
            s_values = [_parse_rational(v) for v in raw["s_values"]]
        elif "exponents" in raw:
            s_values = s_from_exponents(
                d.pairs[j - 1], big_n, r_h, raw["exponents"]
            )
        else:
            raise DomainError(f"profile for fiber {j} has no eigenvalue data")
        by_fiber[j] = EigenvalueProfile(j, tuple(s_values))
    if sorted(by_fiber) != list(range(1, len(d.pairs) + 1)):
        raise DomainError("exactly one profile per fiber is required")
    profiles = tuple(by_fiber[j] for j in sorted(by_fiber))
    return d, RepSpec(big_n, scalar_exponent, profiles)


def einvariant_document(doc: dict) -> dict:
    """Evaluate the applicable e-formula on a flat-bundle document.

    The output mirrors the parsed input (profiles re-rendered as s-values)
    plus the computed value and, when it is 24-torsion, its order.
    """
    d, rep = repspec_from_document(doc)
    if rep.scalar_exponent is None:
        kind = "e"
        value = e_simple(d, rep)
    else:
        kind = "two_re_times_n_e"
        value = e_general(d, rep)
    try:
        order = order_in_pi3(value)
    except TorsionBoundError:
        order = None
    return {
        "pairs": [[a, b] for a, b in d.pairs],
        "N": rep.dimension,
        "center": "trivial"
        if rep.scalar_exponent is None
        else {"scalar_exponent": rep.scalar_exponent},
        "profiles": [
            {"fiber": p.fiber, "s_values": [str(s) for s in p.s_values]}
            for p in rep.profiles
        ],
        "kind": kind,
        "e_invariant": value.to_doc(),
        "order": order,
    }
