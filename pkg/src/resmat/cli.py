"""Command-line entry point.

Exit codes: 0 success (and "invertible" for check commands), 1 not invertible,
2 input or usage errors.  All randomness flows from --seed (fixed default),
so identical invocations produce byte-identical output.
"""

import argparse
import json
import random
import sys

from . import fileio
from .catalog import builtin, lattice_names
from .factorization import aut_count, factorize
from .lattice import LatticeError, automorphisms, find_isomorphism
from .matrix import (ResMatrix, SemiringMatrix, check_invertible,
                     count_invertible, invert, random_invertible_matrix,
                     semiring_matrix_invert, semiring_to_res)
from .oracle import (SpaceTooLarge, oracle_inverse, oracle_is_invertible)
from .resmap import NotInvertible, NotResiduated
from .semiring import (AxiomViolation, ClosureTooLarge, embed,
                       generate_simple_semiring, natural_order_lattice)

_INPUT_ERRORS = (LatticeError, AxiomViolation, NotResiduated,
                 fileio.FileFormatError, ClosureTooLarge, SpaceTooLarge,
                 OSError, json.JSONDecodeError, KeyError)


def _load_lattice_arg(ref):
    if ref.startswith("builtin:"):
        kind, value = builtin(ref[len("builtin:"):])
        if kind != "lattice":
            raise fileio.FileFormatError("%s is not a lattice" % ref)
        return value
    return fileio.load_lattice(ref)


def _load_semiring_arg(ref):
    if ref.startswith("builtin:"):
        kind, value = builtin(ref[len("builtin:"):])
        if kind != "semiring":
            raise fileio.FileFormatError("%s is not a semiring" % ref)
        return value
    return fileio.load_semiring(ref)


def _factor_display_name(factor):
    for name in lattice_names():
        _, candidate = builtin(name)
        if find_isomorphism(factor, candidate) is not None:
            return name
    return "L%d" % factor.n


def _covers_str(lattice):
    return ", ".join("%s<%s" % (lattice.labels[a], lattice.labels[b])
                     for a, b in lattice.covers)


def cmd_lattice_validate(args):
    lattice = _load_lattice_arg(args.source)
    print("ok: lattice with %d elements, bottom=%s, top=%s" % (
        lattice.n, lattice.labels[lattice.bottom], lattice.labels[lattice.top]))
    return 0


def cmd_lattice_factor(args):
    lattice = _load_lattice_arg(args.source)
    fact = factorize(lattice)
    names = [_factor_display_name(f) for f in fact.factors]
    count = aut_count(fact.grouped) if fact.grouped else 1
    if args.json:
        data = {
            "factors": [{"name": _factor_display_name(rep), "size": rep.n,
                         "covers": fileio.lattice_to_dict(rep)["covers"],
                         "multiplicity": e}
                        for rep, e in fact.grouped],
            "aut_count": count,
        }
        sys.stdout.write(fileio.dumps(data))
        return 0
    print("%d factors: %s; |Aut| = %d" % (len(fact.factors), " x ".join(names) or "-", count))
    for rep, e in fact.grouped:
        print("factor %s: size %d, multiplicity %d, covers [%s]" % (
            _factor_display_name(rep), rep.n, e, _covers_str(rep)))
    return 0


def cmd_lattice_aut(args):
    lattice = _load_lattice_arg(args.source)
    auts = automorphisms(lattice)
    if args.json:
        data = {"count": len(auts),
                "automorphisms": [[str(lattice.labels[m[x]]) for x in range(lattice.n)]
                                  for m in auts]}
        sys.stdout.write(fileio.dumps(data))
        return 0
    print("|Aut| = %d" % len(auts))
    return 0


def cmd_semiring_validate(args):
    semiring = _load_semiring_arg(args.source)
    print("ok: semiring with %d elements, zero=%s, one=%s" % (
        semiring.n, semiring.labels[semiring.zero], semiring.labels[semiring.one]))
    return 0


def cmd_semiring_order_lattice(args):
    semiring = _load_semiring_arg(args.source)
    lattice = natural_order_lattice(semiring)
    sys.stdout.write(fileio.dumps(fileio.lattice_to_dict(lattice)))
    return 0


def cmd_semiring_embed(args):
    semiring = _load_semiring_arg(args.source)
    lattice = natural_order_lattice(semiring)
    maps = embed(semiring, lattice)
    if args.json:
        data = {str(semiring.labels[r]): [str(lattice.labels[v]) for v in maps[r].values]
                for r in range(semiring.n)}
        sys.stdout.write(fileio.dumps(data))
        return 0
    for r in range(semiring.n):
        print("T[%s]: [%s]" % (semiring.labels[r],
                               ", ".join(str(lattice.labels[v]) for v in maps[r].values)))
    return 0


def cmd_semiring_generate(args):
    lattice = _load_lattice_arg(args.lattice)
    gen = generate_simple_semiring(lattice, cap=args.cap)
    if args.json:
        if gen.has_one:
            sys.stdout.write(fileio.dumps(fileio.semiring_to_dict(gen.to_semiring())))
        else:
            lbl = [str(l) for l in lattice.labels]
            sys.stdout.write(fileio.dumps({
                "size": len(gen), "has_one": False,
                "maps": [[lbl[v] for v in f.values] for f in gen.maps]}))
        return 0
    print("closure size: %d" % len(gen))
    print("has one: %s" % ("yes" if gen.has_one else "no"))
    return 0


def _certificate_lines(cert):
    cycles = cert.cycles()
    if cycles:
        sigma = "".join("(" + " ".join("(%d,%d)" % p for p in cyc) + ")" for cyc in cycles)
    else:
        sigma = "identity"
    lines = ["sigma: %s" % sigma]
    fact = cert.factorization
    for p in cert.pairs():
        t, i = p
        src = fact.factors[t]
        dst = fact.factors[cert.sigma_inverse[p][0]]
        table = ", ".join("%s->%s" % (src.labels[x], dst.labels[v])
                          for x, v in enumerate(cert.iso_maps[p]))
        lines.append("phi[t=%d,i=%d]: %s" % (t, i, table))
    return lines


def _certificate_json(cert):
    fact = cert.factorization
    return {
        "sigma": [[list(p), list(cert.sigma[p])] for p in cert.pairs()],
        "isos": [{"pair": list(p),
                  "table": [str(fact.factors[cert.sigma_inverse[p][0]].labels[v])
                            for v in cert.iso_maps[p]]}
                 for p in cert.pairs()],
    }


def _check_matrix(matrix):
    """(res matrix, factorization, certificate or None) for either matrix kind."""
    res = matrix if isinstance(matrix, ResMatrix) else semiring_to_res(matrix)
    fact = factorize(res.lattice)
    return res, fact, check_invertible(res, fact)


def cmd_matrix_check(args):
    matrix = fileio.load_matrix(args.file)
    _, _, cert = _check_matrix(matrix)
    if cert is None:
        if args.json:
            sys.stdout.write(fileio.dumps({"invertible": False}))
        else:
            print("not invertible")
        return 1
    if args.json:
        data = {"invertible": True}
        data.update(_certificate_json(cert))
        sys.stdout.write(fileio.dumps(data))
    else:
        print("invertible")
        for line in _certificate_lines(cert):
            print(line)
    return 0


def cmd_matrix_invert(args):
    matrix = fileio.load_matrix(args.file)
    with open(args.file) as fh:
        base_ref = json.load(fh)["base"]
    if isinstance(matrix, SemiringMatrix):
        inverse = semiring_matrix_invert(matrix)
    else:
        _, _, cert = _check_matrix(matrix)
        inverse = invert(matrix, cert) if cert is not None else None
    if inverse is None:
        print("not invertible", file=sys.stderr)
        return 1
    text = fileio.dumps(fileio.matrix_to_dict(inverse, base_ref))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_matrix_count(args):
    lattice = _load_lattice_arg(args.base)
    fact = factorize(lattice)
    print(count_invertible(fact, args.n))
    return 0


def cmd_oracle_check(args):
    matrix = fileio.load_matrix(args.file)
    res = matrix if isinstance(matrix, ResMatrix) else semiring_to_res(matrix)
    verdict = oracle_is_invertible(res, cap=args.cap)
    print("oracle: %s" % ("invertible" if verdict else "not invertible"))
    if args.compare:
        _, _, cert = _check_matrix(matrix)
        structural = cert is not None
        print("structural: %s" % ("invertible" if structural else "not invertible"))
        print("agree: %s" % ("yes" if structural == verdict else "NO"))
        if structural != verdict:
            return 2
    return 0 if verdict else 1


def cmd_oracle_invert(args):
    matrix = fileio.load_matrix(args.file)
    with open(args.file) as fh:
        base_ref = json.load(fh)["base"]
    res = matrix if isinstance(matrix, ResMatrix) else semiring_to_res(matrix)
    try:
        inverse = oracle_inverse(res, cap=args.cap)
    except NotInvertible:
        print("not invertible", file=sys.stderr)
        return 1
    if args.compare:
        _, _, cert = _check_matrix(matrix)
        structural = invert(res, cert) if cert is not None else None
        print("agree: %s" % ("yes" if structural == inverse else "NO"), file=sys.stderr)
        if structural != inverse:
            return 2
    text = fileio.dumps(fileio.matrix_to_dict(inverse, base_ref))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_gen_random_invertible(args):
    lattice = _load_lattice_arg(args.lattice)
    fact = factorize(lattice)
    rng = random.Random(args.seed)
    matrix = random_invertible_matrix(fact, args.n, rng)
    sys.stdout.write(fileio.dumps(fileio.matrix_to_dict(matrix, args.lattice)))
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="resmat",
        description="Invertibility of matrices over finite additively "
                    "idempotent semirings, via residuated maps on lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="lattice operations")
    ls = p.add_subparsers(dest="subcommand", required=True)
    q = ls.add_parser("validate", help="validate a lattice file or builtin")
    q.add_argument("source")
    q.set_defaults(func=cmd_lattice_validate)
    q = ls.add_parser("factor", help="factor into irreducible direct factors")
    q.add_argument("source")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_lattice_factor)
    q = ls.add_parser("aut", help="count (or list) automorphisms")
    q.add_argument("source")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_lattice_aut)

    p = sub.add_parser("semiring", help="semiring operations")
    ss = p.add_subparsers(dest="subcommand", required=True)
    q = ss.add_parser("validate", help="validate a semiring file or builtin")
    q.add_argument("source")
    q.set_defaults(func=cmd_semiring_validate)
    q = ss.add_parser("order-lattice", help="emit the natural-order lattice as a lattice file")
    q.add_argument("source")
    q.set_defaults(func=cmd_semiring_order_lattice)
    q = ss.add_parser("embed", help="emit the residuated-map image of every element")
    q.add_argument("source")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_semiring_embed)
    q = ss.add_parser("generate", help="closure of the step-map generators over a lattice")
    q.add_argument("--lattice", required=True)
    q.add_argument("--cap", type=int, default=4096)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_semiring_generate)

    p = sub.add_parser("matrix", help="matrix operations")
    ms = p.add_subparsers(dest="subcommand", required=True)
    q = ms.add_parser("check", help="decide invertibility; print the certificate")
    q.add_argument("file")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_matrix_check)
    q = ms.add_parser("invert", help="write the inverse matrix in the same format")
    q.add_argument("file")
    q.add_argument("--out")
    q.set_defaults(func=cmd_matrix_invert)
    q = ms.add_parser("count", help="number of invertible n x n matrices over Res(L)")
    q.add_argument("base")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_matrix_count)

    p = sub.add_parser("oracle", help="brute-force cross-validation")
    os_ = p.add_subparsers(dest="subcommand", required=True)
    q = os_.add_parser("check", help="tuple-space bijectivity check")
    q.add_argument("file")
    q.add_argument("--compare", action="store_true",
                   help="also run the structural path and report agreement")
    q.add_argument("--cap", type=int, default=10 ** 6)
    q.set_defaults(func=cmd_oracle_check)
    q = os_.add_parser("invert", help="inverse via tuple-space order finding")
    q.add_argument("file")
    q.add_argument("--compare", action="store_true")
    q.add_argument("--cap", type=int, default=10 ** 6)
    q.add_argument("--out")
    q.set_defaults(func=cmd_oracle_invert)

    p = sub.add_parser("gen", help="generators for test inputs")
    gs = p.add_subparsers(dest="subcommand", required=True)
    q = gs.add_parser("random-invertible",
                      help="emit a structurally random invertible matrix")
    q.add_argument("--lattice", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_gen_random_invertible)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
