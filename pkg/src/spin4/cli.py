"""Command-line interface.  Every command prints JSON with exact "num/den"
strings and exits 0 iff all of its checks pass."""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .builders import (barycentric_subdivide, build_boundary_simplex, build_rp_n, prism, product_triangulation,
                       simplify_manifold, suspension)
from .complex import OrderedComplex
from .g4 import (Triple, extension_invariants, filtration_quotients, in_kernel_D, is_null_triple,
                 triple_product)
from .repro import ReproReport, build_s2xs2, key_result_1, key_result_2, key_result_3

SHAPES = ("boundary-simplex", "product", "barycentric", "suspension", "prism", "rp-n",
          "s2xs2-T", "s2xs2-Tprime", "s2xs2-prism")


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _inputs(paths: Optional[List[str]], n: int, count: int) -> List[OrderedComplex]:
    """Input complexes from files, defaulting to boundaries of the n-simplex."""
    if paths:
        if len(paths) != count:
            raise SystemExit(f"expected {count} --input file(s)")
        return [OrderedComplex.load(p) for p in paths]
    return [build_boundary_simplex(n) for _ in range(count)]


def build_shape(shape: str, n: int = 2, inputs: Optional[List[str]] = None, simplify: bool = False) -> OrderedComplex:
    if shape == "boundary-simplex":
        return build_boundary_simplex(n)
    if shape == "product":
        return product_triangulation(*_inputs(inputs, n, 2))[0]
    if shape == "barycentric":
        return barycentric_subdivide(_inputs(inputs, n, 1)[0])[0]
    if shape == "suspension":
        return suspension(_inputs(inputs, n, 1)[0])
    if shape == "prism":
        src = _inputs(inputs, n, 2) if inputs and len(inputs) == 2 else _inputs(inputs, n, 1) * 2
        return prism(src[0], src[1]).complex
    if shape == "rp-n":
        cx = build_rp_n(n)
        return simplify_manifold(cx) if simplify else cx
    data = build_s2xs2()
    return {"s2xs2-T": data.T, "s2xs2-Tprime": data.Tp, "s2xs2-prism": data.prism.complex}[shape]


def _cmd_build(args) -> int:
    cx = build_shape(args.shape, args.n, args.input, args.simplify)
    if args.out:
        cx.save(args.out)
        print(json.dumps({"shape": args.shape, "f_vector": cx.f_vector(), "out": args.out}))
    else:
        print(cx.dumps())
    return 0


def _cmd_verify(args) -> int:
    from .suites import verify_suite
    cx = OrderedComplex.load(args.complex) if args.complex else None
    opts = {}
    if args.suite == "filtration" and args.max_n is not None:
        opts["max_n"] = args.max_n
    rep = verify_suite(args.suite, args.trials, args.seed, cx, **opts)
    _report([rep], args.json, args.quiet)
    return 0 if rep.passed else 1


def _report(reps: List[ReproReport], out: Optional[str], quiet: bool) -> None:
    if not quiet:
        for rep in reps:
            print("\n".join(rep.lines()), file=sys.stderr)
    payload = [r.to_json() for r in reps]
    _emit(payload[0] if len(payload) == 1 else {"reports": payload}, out)


def _cmd_repro(args) -> int:
    data = build_s2xs2(args.cache)
    runners = {"key1": [key_result_1], "key2": [key_result_2], "key3": [key_result_3],
               "all": [key_result_1, key_result_2, key_result_3]}[args.which]
    reps = [f(data) for f in runners]
    _report(reps, args.json, args.quiet)
    return 0 if all(r.passed for r in reps) else 1


def _load_triples(cx: OrderedComplex, paths: List[str]) -> List[Triple]:
    out = []
    for p in paths:
        with open(p) as fh:
            data = json.load(fh)
        items = data if isinstance(data, list) else [data]
        out.extend(Triple.from_json(d, cx) for d in items)
    return out


def _cmd_g4(args) -> int:
    cx = OrderedComplex.load(args.complex)
    t0 = time.time()
    ok = True
    if args.op in ("filtration", "extensions"):
        rep = filtration_quotients(cx)
        payload = {"op": args.op, "filtration": rep.to_json()}
        if args.op == "extensions":
            payload["extensions"] = extension_invariants(cx, rep).to_json()
        ok = not rep.undecided
    else:
        triples = _load_triples(cx, args.triples or [])
        if not triples:
            raise SystemExit("--triples is required for nullity and product")
        if args.op == "nullity":
            results = []
            for t in triples:
                if not in_kernel_D(t):
                    results.append({"in_kernel": False, "null": None})
                    ok = False
                    continue
                null, wit = is_null_triple(t)
                entry = {"in_kernel": True, "null": null}
                if null:
                    entry["witness"] = {"c": wit.c.to_json(), "r": wit.r.to_json(), "f": wit.f.to_json()}
                results.append(entry)
            payload = {"op": "nullity", "results": results}
        else:
            prod = triples[0]
            for t in triples[1:]:
                prod = triple_product(prod, t, alternate=args.alternate)
            inputs_ok = all(in_kernel_D(t) for t in triples)
            payload = {"op": "product", "inputs_in_kernel": inputs_ok, "in_kernel": in_kernel_D(prod),
                       "triple": prod.to_json()}
            # D-additivity: a product of kernel triples stays in the kernel
            ok = payload["in_kernel"] or not inputs_ok
    payload["wall_time"] = round(time.time() - t0, 3)
    payload["passed"] = bool(ok)
    _emit(payload, args.out)
    return 0 if ok else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spin4", description="Exact cochain computations for the group G^4.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a triangulation and write it as canonical JSON")
    b.add_argument("--shape", required=True, choices=SHAPES)
    b.add_argument("--n", type=int, default=2, help="dimension for boundary-simplex, rp-n and default inputs")
    b.add_argument("--input", nargs="+", help="input complex file(s) for product, barycentric, suspension, prism")
    b.add_argument("--simplify", action="store_true", help="shrink rp-n by link-condition edge contractions")
    b.add_argument("--out")
    b.set_defaults(func=_cmd_build)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", required=True,
                   choices=("cupi", "lifts", "natural-ops", "group-laws", "relations", "suspension", "filtration"))
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--complex", help="host complex file for the random checks")
    v.add_argument("--max-n", type=int, help="filtration: largest n for the suspended RP^n check")
    v.add_argument("--json", help="write the report here instead of stdout")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("repro", help="reproduce the S^2 x S^2 key results")
    r.add_argument("which", choices=("key1", "key2", "key3", "all"))
    r.add_argument("--json", help="write the report here instead of stdout")
    r.add_argument("--cache", help="directory for cached complexes (default: $SPIN4_CACHE)")
    r.add_argument("--quiet", action="store_true")
    r.set_defaults(func=_cmd_repro)

    g = sub.add_parser("g4", help="operations on triples over a given complex")
    g.add_argument("op", choices=("nullity", "product", "filtration", "extensions"))
    g.add_argument("--complex", required=True)
    g.add_argument("--triples", nargs="*")
    g.add_argument("--alternate", action="store_true", help="product: use the alternate product")
    g.add_argument("--out")
    g.set_defaults(func=_cmd_g4)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
