"""Command line interface.

Every subcommand prints a human-readable line or two by default and a JSON
document with --json.  Exit codes: 0 on success, 1 on a domain error (the
message goes to stderr), 2 on usage errors (argparse's own convention).
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import char_classes, exact_arith, f2_forms, icosa_group, seifert
from .errors import SpincalcError
from .exact_arith import ModZ, fraction_doc


def _emit(args, human: str, doc: dict) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(human)


def _format_modz(value: ModZ, order: int | None = None) -> str:
    text = str(value.legible())
    if order is not None:
        text += f" (order {order})"
    return text


def _parse_form(args) -> f2_forms.QuadraticForm:
    return f2_forms.form_from_bitstring(args.g, args.basis_values)


def _cmd_arf(args) -> None:
    q = _parse_form(args)
    arf = f2_forms.arf_basis(q)
    method = "basis"
    if q.g <= f2_forms.DEFAULT_GENUS_CAP:
        gauss = f2_forms.arf_gauss(q)
        if gauss != arf:
            raise SpincalcError("basis and Gauss-sum routes disagree")
        method = "basis+gauss"
    _emit(
        args,
        f"arf = {arf.additive} (multiplicative {arf.multiplicative:+d})",
        {
            "g": q.g,
            "basis_values": args.basis_values,
            "additive": arf.additive,
            "multiplicative": arf.multiplicative,
            "method": method,
        },
    )


def _cmd_forms(args) -> None:
    n_plus, n_minus = f2_forms.count_by_arf(args.g)
    doc = {
        "g": args.g,
        "total": n_plus + n_minus,
        "arf_plus": n_plus,
        "arf_minus": n_minus,
    }
    human = (
        f"genus {args.g}: {n_plus + n_minus} forms, "
        f"{n_plus} with arf +1, {n_minus} with arf -1"
    )
    if args.list:
        entries = []
        for q in f2_forms.enumerate_forms(args.g):
            bits = f2_forms.form_to_doc(q)["basis_values"]
            entries.append(
                {"basis_values": bits, "arf": f2_forms.arf_basis(q).additive}
            )
        doc["forms"] = entries
        human += "\n" + "\n".join(
            f"{e['basis_values']} arf {e['arf']}" for e in entries
        )
    _emit(args, human, doc)


def _cmd_zeros(args) -> None:
    q = _parse_form(args)
    z = f2_forms.count_zeros(q)
    _emit(
        args,
        f"{z} zeros among {1 << (2 * q.g)} vectors",
        {"g": q.g, "basis_values": args.basis_values, "zeros": z},
    )


def _cmd_bernoulli(args) -> None:
    b = exact_arith.bernoulli_paper(args.k)
    _emit(
        args,
        f"B_{args.k} = {b}",
        {"k": args.k, "value": fraction_doc(b)},
    )


def _cmd_vonstaudt(args) -> None:
    k = args.k
    factorization = exact_arith.von_staudt_factorization(k)
    den = exact_arith.von_staudt_den(k)
    exact = exact_arith.bernoulli_quotient(k).denominator
    if den != exact:
        raise SpincalcError(f"formula {den} disagrees with exact denominator {exact}")
    rendered = " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in factorization.items()
    )
    _emit(
        args,
        f"den(B_{k}/{2 * k}) = {den} = {rendered}",
        {
            "k": k,
            "denominator": str(den),
            "factorization": {str(p): e for p, e in factorization.items()},
            "exact_denominator": str(exact),
            "agrees": True,
        },
    )


def _cmd_divisibility(args) -> None:
    n = args.index
    oriented = exact_arith.divisor_oriented(n)
    if not args.spin:
        _emit(
            args,
            f"oriented divisor of kappa_{n}: {oriented}",
            {"index": n, "oriented_divisor": str(oriented)},
        )
        return
    bound = exact_arith.divisor_spin(n)
    if n % 2 == 0:
        m = n // 2
        formula = f"2^{2 * m + 1}"
        bern_index = None
    else:
        m = (n + 1) // 2
        formula = f"2^{2 * m} * den(B_{m}/{2 * m})"
        bern_index = m
    marker = (
        "maximal" if bound.spin_maximality == "proven_maximal" else "lower bound only"
    )
    doc = {
        "index": n,
        "oriented_divisor": str(oriented),
        "spin_divisor": str(bound.spin_divisor),
        "formula": formula,
        "bernoulli_index": bern_index,
        "maximality": bound.spin_maximality,
    }
    _emit(
        args,
        f"spin divisor of kappa_{n}: {formula} = {bound.spin_divisor} ({marker})",
        doc,
    )


_KAPPA_FAMILIES = {
    "sphere": char_classes.sphere_kappa,
    "proj": char_classes.proj_bundle_kappa,
    "hp": char_classes.hp_infinity_kappa,
    "torus": char_classes.torus_kappa,
}

_LAMBDA_FAMILIES = {
    "sphere": char_classes.sphere_lambda,
    "torus": char_classes.torus_lambda,
}


def _emit_polynomial(args, label: str, poly, ring: str) -> None:
    _emit(
        args,
        f"{label} = {poly.render()}",
        {
            "family": args.family,
            "n": args.n,
            "ring": ring,
            "rendered": poly.render(),
            "terms": poly.json_terms(),
        },
    )


def _cmd_kappa(args) -> None:
    poly = _KAPPA_FAMILIES[args.family](args.n)
    rings = {
        "sphere": "Z[p1]",
        "proj": "Z[c1,c2]",
        "hp": "Z[u]",
        "torus": "Z[u]",
    }
    _emit_polynomial(args, f"kappa_{args.n}", poly, rings[args.family])


def _cmd_lambda(args) -> None:
    poly = _LAMBDA_FAMILIES[args.family](args.n)
    ring = "Z[c2,c3]/(2*c3)" if args.family == "sphere" else "Z[u]"
    _emit_polynomial(args, f"lambda_{args.n}", poly, ring)


def _cmd_rr(args) -> None:
    record = char_classes.riemann_roch_dim(args.genus, args.power)
    coker = char_classes.cokernel_dim(args.genus, args.power)
    index = record.dimension - coker
    _emit(
        args,
        f"dim ker = {record.dimension}, dim coker = {coker}, index = {index}",
        {
            "genus": args.genus,
            "power": args.power,
            "kernel_dim": record.dimension,
            "cokernel_dim": coker,
            "index": index,
            "index_identity_holds": char_classes.serre_duality_check(
                args.genus, args.power
            ),
        },
    )


def _load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpincalcError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpincalcError(f"{path} is not valid JSON: {exc}") from exc


def _cmd_seifert_check(args) -> None:
    doc = seifert.seifert_check_document(_load_document(args.input))
    verdict = "yes" if doc["is_integral_homology_sphere"] else "no"
    _emit(
        args,
        f"obstruction a*sum(b/a) = {doc['obstruction']}; "
        f"integral homology sphere: {verdict}",
        doc,
    )


def _result_doc(result: seifert.IcosahedralResult) -> dict:
    return {
        "example": result.example,
        "pairs": [[a, b] for a, b in result.data.pairs],
        "genus": result.fixed_points.genus,
        "N": result.rep.dimension,
        "center": "trivial"
        if result.rep.scalar_exponent is None
        else {"scalar_exponent": result.rep.scalar_exponent},
        "fixed_points": list(result.fixed_points.counts),
        "traces": list(result.fixed_points.traces()),
        "profiles": [
            {"fiber": p.fiber, "s_values": [str(s) for s in p.s_values]}
            for p in result.rep.profiles
        ],
        "kind": result.kind,
        "value": result.value.to_doc(),
        "order": result.order,
        "order_constraint": None
        if result.order_constraint is None
        else list(result.order_constraint),
    }


def _cmd_einvariant(args) -> None:
    if args.example is not None:
        result = seifert.icosahedral_example(args.example)
        if result.kind == "e":
            human = _format_modz(result.value, result.order)
        else:
            constraint = ", ".join(str(c) for c in result.order_constraint)
            human = (
                f"2*Re({result.rep.dimension}*e) = {result.value.legible()} "
                f"(mod Z); order in {{{constraint}}}"
            )
        _emit(args, human, _result_doc(result))
        return
    doc = seifert.einvariant_document(_load_document(args.input))
    value = ModZ(Fraction(f"{doc['e_invariant']['residue']['num']}/"
                          f"{doc['e_invariant']['residue']['den']}"))
    if doc["kind"] == "e":
        human = f"e = {_format_modz(value, doc['order'])}"
    else:
        human = f"2*Re({doc['N']}*e) = {_format_modz(value, doc['order'])}"
    _emit(args, human, doc)


def _cmd_stabilize(args) -> None:
    value = seifert.stabilized_e(args.n)
    base = seifert.icosahedral_example(3).value
    increment = seifert.regular_increment()
    order = seifert.order_in_pi3(value)
    _emit(
        args,
        f"stabilized e after {args.n} step(s): {_format_modz(value, order)}",
        {
            "n": args.n,
            "base": base.to_doc(),
            "increment": increment.to_doc(),
            "value": value.to_doc(),
            "order": order,
        },
    )


def _cmd_icosa(args) -> None:
    if args.census:
        census = icosa_group.element_order_census()
        human = "order census: " + ", ".join(
            f"{order}:{count}" for order, count in census.items()
        )
        _emit(
            args,
            human,
            {"order": 120, "order_census": [[o, c] for o, c in census.items()]},
        )
        return
    group = icosa_group.enumerate_group()
    census = icosa_group.element_order_census()
    perfect = icosa_group.verify_perfect()
    center = icosa_group.center_elements()
    triple = icosa_group.find_presentation_triple()
    profiles = {
        m: icosa_group.regular_restriction_profile(m) for m in (2, 3, 5)
    }
    human = "\n".join(
        [
            f"group order: {len(group)}",
            f"perfect: {'yes' if perfect else 'no'}",
            f"center size: {len(center)}",
            "order census: "
            + ", ".join(f"{o}:{c}" for o, c in census.items()),
            f"presentation triple: x1={triple.x1}, x2={triple.x2}, x3={triple.x3}",
            "regular restrictions: "
            + ", ".join(f"order {m}: {p.copies} copies" for m, p in profiles.items()),
        ]
    )
    _emit(
        args,
        human,
        {
            "order": len(group),
            "perfect": perfect,
            "center_size": len(center),
            "order_census": [[o, c] for o, c in census.items()],
            "presentation": {
                "h": list(triple.h),
                "x1": list(triple.x1),
                "x2": list(triple.x2),
                "x3": list(triple.x3),
            },
            "regular_restrictions": {
                str(m): {
                    "copies": p.copies,
                    "multiplicities": {str(j): c for j, c in
                                       sorted(p.exponent_multiplicities.items())},
                }
                for m, p in profiles.items()
            },
        },
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincalc",
        description="Exact invariants of surface bundles and Seifert spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("arf", _cmd_arf, "Arf invariant of a quadratic form over F2")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--basis-values", required=True)

    p = add("forms", _cmd_forms, "census of quadratic forms of a given genus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--list", action="store_true")

    p = add("zeros", _cmd_zeros, "zero count of a quadratic form")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--basis-values", required=True)

    p = add("bernoulli", _cmd_bernoulli, "positive Bernoulli number B_k")
    p.add_argument("--k", type=int, required=True)

    p = add("vonstaudt", _cmd_vonstaudt, "denominator of B_k/2k with factorization")
    p.add_argument("--k", type=int, required=True)

    p = add("divisibility", _cmd_divisibility, "divisibility bound for kappa_n")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--spin", action="store_true")

    p = add("kappa", _cmd_kappa, "kappa class of a universal family")
    p.add_argument("--family", choices=sorted(_KAPPA_FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("lambda", _cmd_lambda, "index-theoretic lambda class")
    p.add_argument("--family", choices=sorted(_LAMBDA_FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("rr", _cmd_rr, "Riemann-Roch kernel dimension")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--power", type=int, required=True)

    p = add("seifert-check", _cmd_seifert_check, "integral homology sphere test")
    p.add_argument("--input", required=True, help="JSON document with pairs")

    p = add("einvariant", _cmd_einvariant, "e-invariant of a flat bundle")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="JSON flat-bundle document")
    group.add_argument("--example", type=int, choices=(1, 2, 3))

    p = add("stabilize", _cmd_stabilize, "stabilized e-invariant")
    p.add_argument("--n", type=int, required=True)

    p = add("icosa", _cmd_icosa, "binary icosahedral group facts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--census", action="store_true")
    group.add_argument("--verify", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except SpincalcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
