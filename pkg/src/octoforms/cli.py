"""Command-line front end.

Exit codes: 0 success, 1 invariant/verification failure, 2 usage error.
Rationals are printed as "p/q" strings; Monte-Carlo floats carry 17
significant digits.  Output is deterministic for fixed flags and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .canonical import (
    cgm_form,
    kotrbaty_psi8,
    pontrjagin_report,
    quaternionic_forms,
    render_pontrjagin_text,
    spin9_form,
    spin9_taus,
)
from .cayley_dickson import CDElement
from .clifford import extend, standard_system, verify
from .hopf import SpherePoint16, lambda_coeffs, spin9_sections
from .models import MODEL_NAMES, build_model, lambda2_generators, structure_census
from .serialize import (
    float_str,
    matrix_to_json,
    multivector_to_csv,
    multivector_to_json,
    rational_str,
)
from .spheres import build_fields, sigma, verify_system
from . import verifysuite

_FORMS = {
    "spin9": spin9_form,
    "cgm": cgm_form,
    "psi8": lambda: kotrbaty_psi8()[1],
    "tau8": lambda: spin9_taus()[7],
}


def _default_workers() -> int:
    env = os.environ.get("OCTOFORMS_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _cmd_form(args) -> int:
    mv = _FORMS[args.which]()
    if args.format == "csv":
        sys.stdout.write(multivector_to_csv(mv))
    else:
        json.dump(multivector_to_json(mv), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def _cmd_charpoly(args) -> int:
    if args.which == "spin9":
        taus = spin9_taus()
    else:
        from .exterior import charpoly_coeffs

        taus = charpoly_coeffs(quaternionic_forms()[0])
    rows = [
        {"tau": j + 1, "grade": 2 * (j + 1), "monomials": len(t), "zero": t.is_zero()}
        for j, t in enumerate(taus)
    ]
    if args.json:
        json.dump({"which": args.which, "coefficients": rows}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for r in rows:
            print(f"tau_{r['tau']}: grade {r['grade']}, {r['monomials']} monomials"
                  + (" (zero)" if r["zero"] else ""))
    return 0


def _cmd_fields(args) -> int:
    system = build_fields(args.m)
    code = 0
    report = None
    if args.verify:
        report = verify_system(system, samples=1, seed=args.seed)
        code = 0 if report.ok else 1
    if args.json:
        from .serialize import int_matrix_to_triplets

        payload = {
            "m": args.m,
            "sigma": sigma(args.m),
            "count": len(system.fields),
            "notes": list(system.notes),
            "fields": [int_matrix_to_triplets(a) for a in system.fields],
        }
        if report is not None:
            payload["verified"] = report.ok
            payload["failures"] = list(report.failures)
        json.dump(payload, sys.stdout, indent=None, separators=(",", ":"))
        sys.stdout.write("\n")
    else:
        print(f"m = {args.m}: sigma = {sigma(args.m)}, built {len(system.fields)} fields")
        for note in system.notes:
            print(f"note: {note}")
        if report is not None:
            print("verification:", "pass" if report.ok else "FAIL")
            for f in report.failures:
                print(f"  {f}")
    return code


def _parse_point(tokens) -> SpherePoint16:
    if len(tokens) == 16:
        vals = [Fraction(t) for t in tokens]
    elif len(tokens) == 32:
        vals = [Fraction(int(tokens[2 * i]), int(tokens[2 * i + 1])) for i in range(16)]
    else:
        raise ValueError("--point needs 16 rationals (or 32 numerator/denominator integers)")
    return SpherePoint16(x=CDElement(3, vals[:8]), y=CDElement(3, vals[8:]))


def _cmd_hopf(args) -> int:
    try:
        point = _parse_point(args.point)
    except ValueError as exc:
        usage = "unit sphere" not in str(exc)
        print(f"error: {exc}", file=sys.stderr)
        return 2 if usage else 1
    lam = lambda_coeffs(point)
    coords = point.coords()
    inner = [
        sum(a * b for a, b in zip(coords, section)) for section in spin9_sections(point)
    ]
    if args.json:
        json.dump(
            {
                "lambda": [rational_str(v) for v in lam],
                "inner_products": [rational_str(v) for v in inner],
            },
            sys.stdout,
            indent=2,
        )
        sys.stdout.write("\n")
    else:
        print("lambda:        ", " ".join(rational_str(v) for v in lam))
        print("<N, I_a N>:    ", " ".join(rational_str(v) for v in inner))
    return 0


def _cmd_clifford(args) -> int:
    system = standard_system(args.kind)
    for _ in range(args.extend):
        system = extend(system)
    report = verify(system)
    if args.json:
        json.dump(
            {
                "kind": args.kind,
                "extended": args.extend,
                "n": system.n,
                "m": system.m,
                "verified": report.ok,
                "matrices": [matrix_to_json(p) for p in system.mats],
            },
            sys.stdout,
            indent=None,
            separators=(",", ":"),
        )
        sys.stdout.write("\n")
    else:
        print(f"{args.kind} extended {args.extend}x: C_{system.m} on R^{system.n}, "
              f"verify {'pass' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_clifford_structure(args) -> int:
    payload = {}
    if args.census:
        payload["census"] = structure_census(deep=args.deep)
    model = build_model(args.model)
    payload["model"] = {
        "name": model.name,
        "ambient_dim": model.ambient_dim,
        "rank": model.rank,
        "lambda2_count": len(lambda2_generators(model)),
    }
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        m = payload["model"]
        print(f"{m['name']}: rank {m['rank']} on R^{m['ambient_dim']}, "
              f"{m['lambda2_count']} two-form generators")
        if "census" in payload:
            for k, v in payload["census"].items():
                print(f"  {k}: {v}")
    return 0


def _cmd_berger(args) -> int:
    from .berger import berger_mc

    form, report = berger_mc(args.samples, seed=args.seed, workers=args.workers)
    payload = {
        "samples": report.samples,
        "seed": report.seed,
        "workers": report.workers,
        "cosine_similarity": float_str(report.cosine_similarity),
        "fitted_scale": float_str(report.fitted_scale),
        "candidate_scale": float_str(report.candidate_scale),
        "zero_slots": report.zero_slots,
        "zero_slots_within_3sigma": report.zero_slots_within_3sigma,
        "max_zero_sigma_ratio": float_str(report.max_zero_sigma_ratio),
    }
    if args.json:
        if args.full:
            payload["coefficients"] = [float_str(x) for x in form.coeffs]
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0


def _cmd_pontrjagin(args) -> int:
    report = pontrjagin_report()
    if args.json:
        out = {
            "manifold_classes": [
                {**row, "coefficient": rational_str(row["coefficient"])}
                for row in report["manifold_classes"]
            ],
            "bundle_classes": [
                {**row, "coefficient": rational_str(row["coefficient"])}
                for row in report["bundle_classes"]
            ],
            "relations": report["relations"],
            "normalizations": report["normalizations"],
        }
        json.dump(out, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    else:
        print(render_pontrjagin_text(report))
    return 0


def _cmd_verify(args) -> int:
    ok = verifysuite.run_all(write=print)
    print("verify:", "all checks passed" if ok else "FAILURES above")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octoforms",
        description="Exact computational kernel for octonionic geometry",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("form", help="emit a canonical form")
    p.add_argument("--which", choices=sorted(_FORMS), required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_form)

    p = sub.add_parser("charpoly", help="characteristic coefficients of a form matrix")
    p.add_argument("--which", choices=("spin9", "quaternionic"), default="spin9")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("fields", help="vector fields on S^{m-1}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_fields)

    p = sub.add_parser("hopf", help="lambda coordinates of the Hopf map")
    p.add_argument("--point", nargs="+", required=True,
                   help="16 rationals (x then y), or 32 numerator/denominator integers")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hopf)

    p = sub.add_parser("clifford", help="standard Clifford systems and extensions")
    p.add_argument("--kind", choices=("pauli_U2", "quaternionic_Sp2Sp1", "spin9"),
                   default="spin9")
    p.add_argument("--extend", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_clifford)

    p = sub.add_parser("clifford-structure", help="even Clifford structure models")
    p.add_argument("--model", choices=MODEL_NAMES, default="eiii")
    p.add_argument("--census", action="store_true")
    p.add_argument("--deep", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_clifford_structure)

    p = sub.add_parser("berger", help="Monte-Carlo line-integral reconstruction")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--json", action="store_true")
    p.add_argument("--full", action="store_true", help="include all 12870 coefficients")
    p.set_defaults(func=_cmd_berger)

    p = sub.add_parser("pontrjagin", help="Pontrjagin class coefficient table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pontrjagin)

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
