"""Command-line front end: JSON-in, JSON-out, deterministic output.

Exit codes: 0 success, 2 validation error (bad input), 3 computation error
(a well-formed request the library cannot answer).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .rootdata import build_root_datum
from .weights import Weight, delta_r, is_integral
from .atypicality import atypicality_degree
from .unitarity import region_classify
from .characters import (
    SupermoduleDescriptor,
    character_of,
    fragmentation,
    g0_decomposition_typical,
)
from .dstwist import SuperchargeDescriptor
from .indices import (
    FugacityPoint,
    LimitOfDiscreteSeries,
    NotDiscreteSeries,
    superdimension,
    witten_index,
)
from .oscillator import (
    bps_report,
    build_generators,
    family_supercharge,
    index_family,
    norm_series,
    oscillator_indices,
    state_from_string,
    GaussianRational,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_COMPUTATION = 3


class ValidationError(Exception):
    pass


def _parse_algebra(text):
    try:
        p, q, n = (int(x) for x in text.split(","))
    except Exception as e:
        raise ValidationError(f"bad algebra spec {text!r}: {e}") from None
    try:
        return build_root_datum(p, q, n)
    except ValueError as e:
        raise ValidationError(str(e)) from None


def _parse_weight(text, datum):
    try:
        w = Weight.parse(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"bad weight {text!r}: {e}") from None
    if w.m != datum.m or w.n != datum.n:
        raise ValidationError(
            f"weight {text!r} has blocks ({w.m}|{w.n}), "
            f"algebra needs ({datum.m}|{datum.n})"
        )
    return w


def _provenance(args, **extra):
    prov = {"version": __version__}
    for key in ("algebra", "weight", "depth"):
        if hasattr(args, key) and getattr(args, key) is not None:
            prov[key] = getattr(args, key)
    prov.update(extra)
    return prov


def _emit(doc):
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _gaussian(text):
    try:
        if "+" in text[1:] and "i" in text:
            raise ValidationError("complex literals not supported; use re,im")
        return GaussianRational(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"bad rational {text!r}: {e}") from None


# --------------------------------------------------------------------------
# Subcommand handlers


def _cmd_rootdata(args):
    datum = _parse_algebra(args.algebra)
    doc = datum.to_json()
    doc["counts"] = {
        "even_positive": len(datum.evenPositive),
        "odd_positive": len(datum.oddPositive),
        "compact_positive": len(datum.compactPositive),
        "noncompact_positive": len(datum.noncompactPositive),
        "defect": datum.defect,
    }
    doc["provenance"] = _provenance(args)
    _emit(doc)


def _classify_one(w, datum):
    verdict = region_classify(w, datum)
    report = atypicality_degree(w, datum)
    doc = verdict.to_json()
    doc["atypicality_degree"] = report.degree
    doc["weight"] = w.compact()
    doc["integral"] = is_integral(w, datum)
    if datum.p > 0 and datum.q > 0:
        d, r = delta_r(w, datum)
        doc["delta"] = str(d)
        doc["r"] = str(r)
    return doc


def _map_in_order(fn, entries):
    """Apply fn to each entry, optionally in parallel (SUPERHW_JOBS),
    always returning results in input order."""
    jobs = 1
    raw = os.environ.get("SUPERHW_JOBS", "")
    if raw.strip():
        try:
            jobs = max(1, int(raw))
        except ValueError:
            jobs = 1
    if jobs == 1 or len(entries) < 2:
        return [fn(e) for e in entries]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, entries))


def _emit_tsv(results):
    cols = ("weight", "region", "atypicality_degree", "integral", "delta", "r")
    sys.stdout.write("\t".join(cols) + "\n")
    for doc in results:
        if "error" in doc:
            sys.stdout.write(
                "\t".join([str(doc.get("input", "")), "ERROR", doc["error"], "", "", ""])
                + "\n"
            )
            continue
        row = [str(doc.get(c, "")) for c in cols]
        sys.stdout.write("\t".join(row) + "\n")


def _cmd_classify(args):
    datum = _parse_algebra(args.algebra)
    if args.input:
        with open(args.input) as fh:
            data = json.load(fh)
        weights = data["weights"] if isinstance(data, dict) else data

        def one(entry):
            try:
                if isinstance(entry, str):
                    w = _parse_weight(entry, datum)
                else:
                    w = Weight.from_json(entry)
                    if w.m != datum.m or w.n != datum.n:
                        raise ValidationError("dimension mismatch")
                return _classify_one(w, datum)
            except (ValidationError, ValueError) as e:
                return {"error": str(e), "input": entry}

        results = _map_in_order(one, list(weights))
        if args.tsv:
            _emit_tsv(results)
            return
        _emit({"results": results, "provenance": _provenance(args)})
        return
    if not args.weight:
        raise ValidationError("either --weight or --input is required")
    w = _parse_weight(args.weight, datum)
    doc = _classify_one(w, datum)
    doc["provenance"] = _provenance(args)
    _emit(doc)


def _cmd_atypicality(args):
    datum = _parse_algebra(args.algebra)
    w = _parse_weight(args.weight, datum)
    doc = atypicality_degree(w, datum).to_json()
    doc["provenance"] = _provenance(args)
    _emit(doc)


def _cmd_decompose(args):
    datum = _parse_algebra(args.algebra)
    w = _parse_weight(args.weight, datum)
    constituents, lower_bound = g0_decomposition_typical(w, datum)
    doc = {
        "constituents": [
            {"weight": cw.compact(), "parity_offset": par}
            for cw, par in constituents
        ],
        "lower_bound_only": lower_bound,
        "provenance": _provenance(args),
    }
    _emit(doc)


def _cmd_fragment(args):
    datum = _parse_algebra(args.algebra)
    w = _parse_weight(args.weight, datum)
    factors = fragmentation(w, datum)
    doc = {
        "factors": [
            {"weight": fw.compact(), "parity_offset": par}
            for fw, par in factors
        ],
        "provenance": _provenance(args),
    }
    _emit(doc)


_KIND_BY_FLAG = {
    "verma": "Verma",
    "kac": "Kac",
    "gv": "GeneralizedVerma",
    "simple": "SimpleBoundary",
    "simple-typical": "SimpleTyp",
}


def _cmd_character(args):
    datum = _parse_algebra(args.algebra)
    w = _parse_weight(args.weight, datum)
    if args.module not in _KIND_BY_FLAG:
        raise ValidationError(f"unknown module kind {args.module!r}")
    desc = SupermoduleDescriptor(_KIND_BY_FLAG[args.module], w)
    char = character_of(desc, datum, args.depth)
    doc = char.to_json()
    doc["provenance"] = _provenance(args, module=args.module)
    _emit(doc)


def _cmd_index(args):
    datum = _parse_algebra(args.algebra)
    w = _parse_weight(args.weight, datum)
    if args.module not in _KIND_BY_FLAG:
        raise ValidationError(f"unknown module kind {args.module!r}")
    try:
        sc_obj = json.loads(args.supercharge)
        fug_obj = json.loads(args.fugacity)
    except json.JSONDecodeError as e:
        raise ValidationError(f"bad JSON option: {e}") from None
    try:
        x = SuperchargeDescriptor.from_json(sc_obj, datum)
        X = FugacityPoint.from_json(fug_obj)
    except (ValueError, KeyError, ZeroDivisionError) as e:
        raise ValidationError(str(e)) from None
    desc = SupermoduleDescriptor(_KIND_BY_FLAG[args.module], w)
    result = witten_index(desc, x, X, args.depth, datum)
    doc = result.to_json()
    doc["provenance"] = _provenance(
        args, module=args.module, supercharge=sc_obj, fugacity=fug_obj
    )
    _emit(doc)


def _cmd_superdim(args):
    datum = _parse_algebra(args.algebra)
    w = _parse_weight(args.weight, datum)
    value = superdimension(w, datum)
    _emit(
        {
            "superdimension": str(value),
            "provenance": _provenance(args),
        }
    )


def _cmd_oscillator(args):
    if args.osc_command == "indices":
        values = oscillator_indices(args.N)
        _emit(
            {
                "indices": {
                    "even_Q": values[0],
                    "odd_Q": values[1],
                    "even_S": values[2],
                    "odd_S": values[3],
                },
                "provenance": {"version": __version__, "N": args.N},
            }
        )
    elif args.osc_command == "family":
        r = _gaussian(args.r)
        t = _gaussian(args.t)
        plus, minus = index_family(r, t)
        doc = {
            "index_even": plus,
            "index_odd": minus,
            "provenance": {
                "version": __version__,
                "r": args.r,
                "t": args.t,
                "N": args.N,
            },
        }
        if t.abs2() != 0:
            sums, rho, converges = norm_series(r, t, 20)
            doc["norm_ratio"] = str(rho)
            doc["norm_series_converges"] = converges
            doc["norm_partial_sum_20"] = str(sums[-1])
        _emit(doc)
    elif args.osc_command == "bps":
        gens = build_generators(args.N)
        try:
            vec = state_from_string(args.state, gens["fock"])
        except ValueError as e:
            raise ValidationError(str(e)) from None
        ann, is_bps, deg = bps_report(vec, args.N, gens)
        _emit(
            {
                "annihilator_dim": ann,
                "is_bps": is_bps,
                "deg_bps": str(deg),
                "provenance": {
                    "version": __version__,
                    "state": args.state,
                    "N": args.N,
                },
            }
        )
    else:
        raise ValidationError("unknown oscillator subcommand")


# --------------------------------------------------------------------------


def _build_parser():
    top = argparse.ArgumentParser(
        prog="superhw",
        description=(
            "Exact computations with unitarizable highest-weight "
            "supermodules over sl(m|n)."
        ),
    )
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    def with_algebra_weight(p, weight_required=True):
        p.add_argument("--algebra", required=True, help="p,q,n")
        p.add_argument(
            "--weight", required=weight_required, help='compact form "a,b|c"'
        )

    p = sub.add_parser("rootdata", help="root system data")
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=_cmd_rootdata)

    p = sub.add_parser("classify", help="unitarity classification")
    p.add_argument("--algebra", required=True)
    p.add_argument("--weight")
    p.add_argument("--input", help="JSON file with a weight list")
    p.add_argument(
        "--tsv", action="store_true", help="tab-separated grid output (batch)"
    )
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("atypicality", help="vanishing roots and degree")
    with_algebra_weight(p)
    p.set_defaults(func=_cmd_atypicality)

    p = sub.add_parser("decompose", help="even-part constituents")
    with_algebra_weight(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("fragment", help="boundary fragmentation factors")
    with_algebra_weight(p)
    p.set_defaults(func=_cmd_fragment)

    p = sub.add_parser("character", help="truncated formal character")
    with_algebra_weight(p)
    p.add_argument("--module", default="kac")
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(func=_cmd_character)

    p = sub.add_parser("index", help="Witten index")
    with_algebra_weight(p)
    p.add_argument("--module", default="kac")
    p.add_argument("--supercharge", required=True, help="JSON descriptor")
    p.add_argument("--fugacity", required=True, help="JSON q-values")
    p.add_argument("--depth", type=int, default=12)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("superdim", help="formal superdimension")
    with_algebra_weight(p)
    p.set_defaults(func=_cmd_superdim)

    p = sub.add_parser("oscillator", help="oscillator matrix model")
    osc = p.add_subparsers(dest="osc_command", required=True)
    pi = osc.add_parser("indices")
    pi.add_argument("--N", type=int, default=12)
    pf = osc.add_parser("family")
    pf.add_argument("--r", required=True)
    pf.add_argument("--t", required=True)
    pf.add_argument("--N", type=int, default=12)
    pb = osc.add_parser("bps")
    pb.add_argument("--state", required=True)
    pb.add_argument("--N", type=int, default=12)
    p.set_defaults(func=_cmd_oscillator)

    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ValidationError as e:
        _emit({"error": str(e), "kind": "validation"})
        return EXIT_VALIDATION
    except (
        ValueError,
        NotDiscreteSeries,
        LimitOfDiscreteSeries,
        AssertionError,
        ZeroDivisionError,
    ) as e:
        _emit({"error": str(e), "kind": "computation"})
        return EXIT_COMPUTATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
