"""Command line front end.

Output is JSON on stdout (CSV for the classification table on request).
Exit codes: 0 on success, 1 when a domain rule rejects the input or an
oracle suite finds a disagreement, 2 when the invocation itself is
malformed.  Numeric option defaults can be set in a key=value file named
by the ORBITCALC_CONFIG environment variable; explicit flags win.
"""

import argparse
import json
import os
import sys

from . import oracle
from .isotropy import admissible_data, component_group, genuine_parity
from .orbits import (
    ComplexOrbit,
    bv_dual,
    enumerate_nil_p,
    enumerate_orbits,
    infinitesimal_character,
    orbit_dimension,
    theta_lift_complex,
)
from .partitions import DomainError
from .realforms import (
    KOrbit,
    RealForm,
    descended_form,
    enumerate_k_orbits,
    gen_descent_signed,
    induce_real,
    parse_diagram,
    parse_form,
    signed_descent,
)
from .unipotent import classification_csv, classify, count_unipotent


def eps_value(text: str) -> int:
    """Series sign for argparse: 1 or -1."""
    if text in ("1", "+1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError(f"{text!r} is not 1 or -1")


def parse_columns(text: str) -> tuple:
    """Comma separated column sizes; "-" or "" is the empty diagram."""
    cleaned = text.strip()
    if cleaned in ("", "-"):
        return ()
    try:
        return tuple(int(p) for p in cleaned.split(","))
    except ValueError:
        raise DomainError(
            f"columns {text!r} are not comma separated integers") from None


def parse_signature_text(text: str):
    parts = parse_columns(text)
    if len(parts) != 2:
        raise DomainError(f"signature {text!r} is not of the form p,m")
    return parts


def load_config(path=None) -> dict:
    path = path or os.environ.get("ORBITCALC_CONFIG")
    if not path:
        return {}
    if not os.path.exists(path):
        raise DomainError(f"config file {path!r} does not exist")
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"config line {line!r} is not key=value")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _setting(args, config, name, fallback):
    given = getattr(args, name, None)
    if given is not None:
        return given
    if name in config:
        try:
            return int(config[name])
        except ValueError:
            raise DomainError(
                f"config value {name}={config[name]!r} is not an "
                f"integer") from None
    return fallback


def _emit(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _source_orbit(args) -> ComplexOrbit:
    cols = parse_columns(args.columns)
    return ComplexOrbit(args.eps, sum(cols), cols)


def _cmd_orbits(args, config):
    if args.nilp is None:
        found = list(enumerate_orbits(args.eps, args.dim))
    else:
        found = enumerate_nil_p(args.eps, args.dim, args.nilp)
    _emit({
        "eps": args.eps,
        "dim": args.dim,
        "orbits": [{"columns": list(o.columns), "rows": list(o.rows()),
                    "dimension": orbit_dimension(o)} for o in found],
    })
    return 0


def _cmd_infchar(args, config):
    orbit = _source_orbit(args)
    _emit({"orbit": orbit.to_json(),
           "infinitesimal_character": infinitesimal_character(orbit).to_json()})
    return 0


def _cmd_bvdual(args, config):
    orbit = _source_orbit(args)
    result = bv_dual(orbit)
    payload = {"orbit": orbit.to_json()}
    payload.update(result.to_json())
    _emit(payload)
    return 0


def _cmd_lift(args, config):
    orbit = _source_orbit(args)
    lifted = theta_lift_complex(orbit, args.dim)
    payload = {"source": orbit.to_json(), "target_dim": args.dim,
               "lift": lifted.to_json()}
    if args.oracle:
        sampled = oracle.lift_closure_sample(
            orbit, args.dim,
            trials=_setting(args, config, "trials", 32),
            seed=_setting(args, config, "seed", 20240801),
            bound=_setting(args, config, "bound", 5))
        payload["sampled"] = sampled.to_json()
        payload["agrees"] = sampled.columns == lifted.columns
    _emit(payload)
    return 0


def _cmd_descend(args, config):
    form = parse_form(args.form)
    diagram = parse_diagram(args.diagram)
    KOrbit(form, diagram)  # validates the diagram against the form
    descended = signed_descent(diagram)
    _emit({"form": form.to_json(), "diagram": str(diagram),
           "descended_form": descended_form(form, diagram).to_json(),
           "descent": str(descended)})
    return 0


def _cmd_gendescend(args, config):
    form = parse_form(args.form)
    diagram = parse_diagram(args.diagram)
    KOrbit(form, diagram)  # validates the diagram against the form
    if args.target_sig is None:
        sig = diagram.tail_total(1)
        target_sig = (sig.plus, sig.minus)
    else:
        target_sig = parse_signature_text(args.target_sig)
    descended = gen_descent_signed(diagram, target_sig)
    target_form = RealForm(form.kind.opposite(), target_sig)
    _emit({"form": form.to_json(), "diagram": str(diagram),
           "target_form": target_form.to_json(),
           "descent": str(descended)})
    return 0


def _cmd_induce(args, config):
    form = parse_form(args.form)
    diagram = parse_diagram(args.diagram)
    results = induce_real(diagram, args.l, form.kind)
    for d, _ in results:
        if d.total() != form.signature:
            raise DomainError(
                f"ambient signature {form.signature.to_json()} does not "
                f"match the induced total {d.total().to_json()}")
    _emit({
        "ambient": form.to_json(),
        "source_diagram": str(diagram),
        "middle_size": args.l,
        "results": [{"diagram": str(d), "index": index}
                    for d, index in results],
    })
    return 0


def _cmd_korbits(args, config):
    form = parse_form(args.form)
    orbit = ComplexOrbit(form.kind.eps, form.dim, parse_columns(args.columns))
    entries = []
    for ko in enumerate_k_orbits(form, orbit):
        entry = {"diagram": str(ko.diagram),
                 "component_group": component_group(ko).to_json(),
                 "genuine_parity": genuine_parity(ko)}
        if args.admissible:
            entry["admissible"] = [d.to_json() for d in admissible_data(ko)]
        entries.append(entry)
    _emit({"form": form.to_json(), "orbit": orbit.to_json(),
           "k_orbits": entries})
    return 0


def _cmd_count(args, config):
    form = parse_form(args.form)
    columns = parse_columns(args.columns)
    parity = _setting(args, config, "parity", None)
    if parity is None:
        parity = columns[0] % 2 if columns else 0
    orbit = ComplexOrbit(form.kind.eps, form.dim, columns)
    row = count_unipotent(form, orbit, parity)
    _emit(row.to_json())
    return 0


def _cmd_classify(args, config):
    form = parse_form(args.form)
    parity = _setting(args, config, "parity", None)
    if parity not in (0, 1):
        raise DomainError("a family parity of 0 or 1 is required, by flag "
                          "or config")
    fmt = args.format or config.get("output_format", "json")
    if fmt not in ("json", "csv"):
        raise DomainError(f"output format {fmt!r} is not available; "
                          f"use json or csv")
    rows = classify(form, parity)
    if fmt == "csv":
        sys.stdout.write(classification_csv(rows))
    else:
        _emit({"form": form.to_json(), "parity": parity,
               "rows": [r.to_json() for r in rows]})
    return 0


def _suite_kwargs(name, args, config):
    max_dim = _setting(args, config, "max_dim", None)
    if name == "collapse":
        return {"max_size": max_dim if max_dim is not None else 10}
    if name == "models":
        return {"max_dim": max_dim if max_dim is not None else 8}
    if name == "dimension":
        return {"max_dim": max_dim if max_dim is not None else 7}
    if name == "descent":
        return {"max_dim": max_dim if max_dim is not None else 8}
    if name == "korbits":
        return {"max_rank": (max_dim // 2) if max_dim is not None else 2}
    return {"max_dim": max_dim if max_dim is not None else 5,
            "trials": _setting(args, config, "trials", 12),
            "seed": _setting(args, config, "seed", 20240801),
            "bound": _setting(args, config, "bound", 5)}


def _cmd_oracle_check(args, config):
    names = list(oracle.ORACLE_SUITES) if args.suite == "all" else [args.suite]
    results = {}
    for name in names:
        results[name] = oracle.ORACLE_SUITES[name](
            **_suite_kwargs(name, args, config))
    passed = all(not r["failures"] for r in results.values())
    _emit({"suites": {name: {"cases": r["cases"],
                             "failures": r["failures"],
                             "passed": not r["failures"]}
                      for name, r in results.items()},
           "passed": passed})
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitcalc",
        description="Nilpotent orbit calculus for the classical series")
    sub = parser.add_subparsers(dest="command", required=True)

    def eps_columns(p):
        p.add_argument("eps", type=eps_value,
                       help="1 for symmetric forms, -1 for skew ones")
        p.add_argument("columns",
                       help="column sizes like 4,2,2 (use - for empty)")

    def form_diagram(p):
        p.add_argument("form", help="real form like O(2,3), Sp(4,R), "
                                    "O*(4), Sp(1,1)")
        p.add_argument("diagram", help="signed diagram like 1,0|0,1")

    p = sub.add_parser("orbits", help="list the nilpotent orbits")
    p.add_argument("eps", type=eps_value)
    p.add_argument("dim", type=int)
    p.add_argument("--nilp", type=int, choices=(0, 1), default=None,
                   help="restrict to the preferred family of this parity")
    p.set_defaults(handler=_cmd_orbits)

    p = sub.add_parser("infchar", help="infinitesimal character of an orbit")
    eps_columns(p)
    p.set_defaults(handler=_cmd_infchar)

    p = sub.add_parser("bvdual", help="dual orbit and its weighted element")
    eps_columns(p)
    p.set_defaults(handler=_cmd_bvdual)

    p = sub.add_parser("lift", help="moment-map transfer of an orbit closure")
    eps_columns(p)
    p.add_argument("--dim", type=int, required=True,
                   help="dimension of the target space")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against sampled transfer elements")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(handler=_cmd_lift)

    p = sub.add_parser("descend", help="descent of a signed diagram")
    form_diagram(p)
    p.set_defaults(handler=_cmd_descend)

    p = sub.add_parser("gendescend",
                       help="generalized descent of a signed diagram")
    form_diagram(p)
    p.add_argument("--target-sig", dest="target_sig", default=None,
                   help="signature p,m of the smaller space (default: the "
                        "tail total, plain descent)")
    p.set_defaults(handler=_cmd_gendescend)

    p = sub.add_parser("induce",
                       help="signed diagrams induced through a middle block")
    form_diagram(p)
    p.add_argument("--l", dest="l", type=int, required=True,
                   help="dimension of the middle block")
    p.set_defaults(handler=_cmd_induce)

    p = sub.add_parser("korbits",
                       help="orbit parameters of a real form over an orbit")
    p.add_argument("form", help="real form like O(2,3), Sp(4,R), O*(4), "
                                "Sp(1,1)")
    p.add_argument("columns")
    p.add_argument("--admissible", action="store_true",
                   help="list the admissible data of each parameter")
    p.set_defaults(handler=_cmd_korbits)

    p = sub.add_parser("count",
                       help="attached representation count for one orbit")
    p.add_argument("form")
    p.add_argument("columns")
    p.add_argument("--parity", type=int, choices=(0, 1), default=None,
                   help="family parity (default: parity of the first column)")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("classify",
                       help="counts for every orbit of the preferred family")
    p.add_argument("form")
    p.add_argument("--parity", type=int, choices=(0, 1), default=None)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("oracle-check",
                       help="run a matrix-oracle consistency suite")
    p.add_argument("suite", choices=sorted(oracle.ORACLE_SUITES) + ["all"])
    p.add_argument("--max-dim", dest="max_dim", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(handler=_cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config()
        return args.handler(args, config)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
