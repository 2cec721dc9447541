import argparse
import json
import sys

import pandas as pd

from algebra import FreeComplex, koszul, parse_laurent
from dimer import (NotEmbeddedError, SurjectivityError, dimension_vector, extract_graph, kasteleyn,
                   kernel_of_d, reflect_local_system, reflected_violations)
from exponents import discrete_equivalent, info
from mirror import build_mirror, d2_report, stalk_map, stalk_table
from recovery import ColoredComplex, check_characterization, recover_E, recover_from_T
from torus import (Placement, build_S, build_X, half_cube_placement, is_embedded, is_immersed,
                   parse_point, perturb_generic, point_strings, reduce_point)
from utils.config import DEFAULTS
from utils.document_manager import ComplexDocument, ComplexDocumentManager, default_variables
from utils.export import export_geometry

SUCCESS, FAILED_CHECK, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


class CheckFailed(Exception):
    """A check ran and did not pass; the message is the witness."""


def _load(path):
    manager = ComplexDocumentManager(path)
    return manager.get_complex(), manager.get_placement()


def _write(text, output):
    if output:
        mode = 'wb' if isinstance(text, bytes) else 'w'
        with open(output, mode) as file:
            file.write(text)
        print(f"Wrote {output}")
    else:
        print(text.decode("utf-8") if isinstance(text, bytes) else text)


def table_of_exponents(discrete) -> pd.DataFrame:
    rows = []
    for (i, j), exponents in sorted(discrete.table.entries.items(), key=repr):
        rows.append({"i": i, "j": j, "gap": discrete.table.gap(i, j),
                     "E_ij": " ".join(str(m) for m in sorted(exponents))})
    return pd.DataFrame(rows, columns=["i", "j", "gap", "E_ij"])


def build_report(F: FreeComplex, P: Placement, verbose: bool = False):
    """
    Per-dimension chain and simplex counts of X(F), and the sizes of the support sets.

    Returns:
    - (X, supports, simplex table, support table)
    """
    X = build_X(F, P, verbose=verbose)
    counts = pd.DataFrame([{"dimension": k, "chains": X.chain_count(k), "simplices": X.count(k),
                            "degenerate": len(X.degenerate(k))}
                           for k in sorted(X.simplices)])
    supports = build_S(F, P)
    sizes = pd.DataFrame([{"label": label, "degree": F.degrees[label], "simplices": len(S.simplices),
                           "maximal": len(S.maximal()), "dimension": S.dimension}
                          for label, S in supports.items()])
    return X, supports, counts, sizes


def cmd_koszul(args):
    if args.variables:
        variables = args.variables.split(",")
        n = len(variables)
    else:
        n = args.n
        variables = default_variables(n)
    polys = [parse_laurent(text, variables) for text in args.polynomials]
    F = koszul(polys)
    P = None
    if args.half_cube:
        P = half_cube_placement(list(F.labels))
    elif args.point:
        points = {}
        for item in args.point:
            label, _, coordinates = item.partition("=")
            points[label] = parse_point(coordinates)
        P = Placement(points, n=n)
        P.check_covers(F.labels, n)
    document = ComplexDocument.from_complex(F, P, variables)
    print(f"Koszul complex on {len(polys)} polynomials: labels {list(F.labels)}")
    if args.output:
        manager = ComplexDocumentManager(args.output)
        manager.document = document.to_dict()
        manager.save_document()
        print(f"Wrote {args.output}")
    else:
        print(json.dumps(document.to_dict(), indent=4))


def cmd_build(args):
    F, P = _load(args.document)
    X, supports, counts, sizes = build_report(F, P, verbose=args.verbose)
    print(f"X(F): {X}")
    print(counts.to_string(index=False))
    print(sizes.to_string(index=False))
    if not X.is_face_closed():
        print(f"WARNING: X is not closed under faces at {X.face_closure_violation()}")
    if args.json:
        _write(export_geometry(X, "json"), args.json)


def cmd_check(args):
    F, P = _load(args.document)
    X = build_X(F, P)
    check = is_embedded(X) if args.embedded else is_immersed(X)
    name = "embedded" if args.embedded else "immersed"
    for s in check.degenerate:
        print(f"WARNING: degenerate simplex {s} skipped by the immersion test")
    if not check:
        raise CheckFailed(f"not {name}: {check.describe()}")
    print(f"X(F) is {name}")


def _compare(found, expected, what):
    print(table_of_exponents(found).to_string(index=False))
    if not discrete_equivalent(found, expected):
        raise CheckFailed(f"{what} is not equivalent to the discrete information of F")
    print(f"{what} is equivalent to the discrete information of F")


def cmd_recover(args):
    F, P = _load(args.document)
    found = recover_E(ColoredComplex.from_complex(F, P))
    _compare(found, info(F), "recovered E")


def cmd_recover_from_t(args):
    F, P = _load(args.document)
    X = build_X(F, P)
    vertices = [reduce_point(P[label]) for label in F.labels]
    degrees = {reduce_point(P[label]): F.degrees[label] for label in F.labels}
    names = {reduce_point(P[label]): label for label in F.labels}
    found = recover_from_T(X.maximal(), vertices, degrees, names)
    _compare(found, info(F), "E recovered from T")


def cmd_characterize(args):
    F, P = _load(args.document)
    result = check_characterization(ColoredComplex.from_complex(F, P))
    if not result:
        raise CheckFailed("\n".join(result.violations))
    print("realizable: witness complex reproduces X")
    print(f"witness d^2 = 0: {result.witness_d2}")
    if args.verbose:
        print(ComplexDocument.from_complex(result.witness).to_dict())


def cmd_mirror(args):
    F, P = _load(args.document)
    D = build_mirror(F, P)
    print(f"mirror differential: {D}")
    failed = None
    if args.d2:
        report = d2_report(F, P)
        table = pd.DataFrame([{"k": k, "polynomial d^2 = 0": report.polynomial_zero[k],
                               "formal d^2 = 0": report.formal_zero[k],
                               "nonzero terms": len(report.supports[k])} for k in report.degrees])
        print(table.to_string(index=False) if not table.empty else "no composites")
        if not (report.agree and report.coefficients_agree):
            failed = "polynomial and formal composites disagree"
    if args.stalk:
        points = [parse_point(text) for text in args.stalk]
        print(stalk_table(D, points).to_string())
        for theta in points:
            local = stalk_map(D, theta, args.degree)
            print(f"d^{args.degree} at {','.join(point_strings(local.theta))}: shape {local.shape}, rank {local.rank()}")
            if args.verbose:
                print(local.matrix)
    if failed:
        raise CheckFailed(failed)


def cmd_dimer(args):
    F, P = _load(args.document)
    G = extract_graph(F, P)
    print(f"graph: {G}")
    if args.kasteleyn:
        K = kasteleyn(G)
        variables = default_variables(F.n)
        print(pd.DataFrame([[p.to_string(variables) for p in row] for row in K],
                           index=list(G.white), columns=list(G.black)).to_string())
        if K != F.matrix(-1):
            raise CheckFailed("Kasteleyn matrix differs from d^-1")
    if args.reflect:
        R = reflect_local_system(G)
        print(f"reflected dimension vector: {dimension_vector(R)}")
        problems = reflected_violations(R, G)
        if problems:
            raise CheckFailed("\n".join(problems))
    if args.kernel:
        try:
            R = kernel_of_d(F, P, verbose=args.verbose)
        except (NotEmbeddedError, SurjectivityError) as error:
            raise CheckFailed(str(error))
        print(f"kernel dimension vector: {dimension_vector(R)}")


def cmd_export(args):
    F, P = _load(args.document)
    if args.what == "graph":
        item = extract_graph(F, P)
    elif args.what == "S":
        item = build_S(F, P)
    else:
        item = build_X(F, P)
    degrees = {reduce_point(P[label]): F.degrees[label] for label in F.labels}
    names = {reduce_point(P[label]): label for label in F.labels}
    _write(export_geometry(item, args.format, degrees, names), args.output)


def cmd_perturb(args):
    manager = ComplexDocumentManager(args.document)
    document = manager.parsed()
    F = document.to_complex()
    P = perturb_generic(document.to_placement(), args.denominator, args.seed)
    print(f"perturbed placement (denominator {args.denominator}, seed {args.seed}):")
    for label in F.labels:
        print(f"  {label}: {','.join(point_strings(P[label]))}")
    perturbed = ComplexDocument.from_complex(F, P, document.variables)
    if args.output:
        out = ComplexDocumentManager(args.output)
        out.document = perturbed.to_dict()
        out.save_document()
        print(f"Wrote {args.output}")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Build and check tropical Lagrangian coamoebae of free complexes.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('koszul', help='Write the Koszul complex of a list of Laurent polynomials')
    p.add_argument('polynomials', nargs='+', type=str, help='Laurent expressions, e.g. "1+x+y"')
    p.add_argument('--n', type=int, default=3, help='Number of variables')
    p.add_argument('--variables', type=str, default=None, help='Comma separated variable names (default x,y,z)')
    p.add_argument('--point', type=str, action='append', default=[], help='Placement entry LABEL=p/q,p/q,...')
    p.add_argument('--half-cube', action='store_true', help='Put 1/2 in the coordinates of each label bit')
    p.add_argument('--output', type=str, default=None, help='Document path (default: print)')
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser('build', help='Report chains, simplices and support sets')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.add_argument('--json', type=str, default=None, help='Also write the simplicial set export here')
    p.add_argument('--verbose', action='store_true', help='Print progress per dimension')
    p.set_defaults(func=cmd_build)

    p = sub.add_parser('check', help='Check that X(F) is immersed or embedded')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--immersed', action='store_true', help='Check immersion (default)')
    group.add_argument('--embedded', action='store_true', help='Check embedding')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser('recover', help='Recover the exponent sets from X(F)')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser('recover-from-t', help='Recover the exponent sets from the point set T(F)')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.set_defaults(func=cmd_recover_from_t)

    p = sub.add_parser('characterize', help='Check the realizability conditions on X(F)')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.add_argument('--verbose', action='store_true', help='Print the witness complex')
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser('mirror', help='Mirror complex: d^2 comparison and stalks')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.add_argument('--d2', action='store_true', help='Compare d^2 of F with the formal composite')
    p.add_argument('--stalk', type=str, action='append', default=[], help='Rational point p/q,p/q,... (repeatable)')
    p.add_argument('--degree', type=int, default=-1, help='Source degree of the stalk map')
    p.add_argument('--verbose', action='store_true', help='Print stalk matrices')
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser('dimer', help='Two-term complexes: Kasteleyn matrix and reflected local systems')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.add_argument('--kasteleyn', action='store_true', help='Print the weighted adjacency matrix')
    p.add_argument('--reflect', action='store_true', help='Reflect the rank one local system at white vertices')
    p.add_argument('--kernel', action='store_true', help='Compute the kernel of d on stalks')
    p.add_argument('--verbose', action='store_true', help='Print per-vertex kernel dimensions')
    p.set_defaults(func=cmd_dimer)

    p = sub.add_parser('export', help='Write X, S or the graph as json, obj or dot')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.add_argument('--format', type=str, choices=['json', 'obj', 'dot'], default='json', help='Output format')
    p.add_argument('--what', type=str, choices=['X', 'S', 'graph'], default='X', help='Object to export')
    p.add_argument('--output', type=str, default=None, help='Output path (default: print)')
    p.set_defaults(func=cmd_export)

    p = sub.add_parser('perturb', help='Perturb the placement of a document')
    p.add_argument('document', type=str, help='ComplexDocument JSON file')
    p.add_argument('--denominator', type=int, default=DEFAULTS["denominator"], help='Denominator D of the offsets k/D')
    p.add_argument('--seed', type=int, default=DEFAULTS["seed"], help='Random seed')
    p.add_argument('--output', type=str, default=None, help='Where to write the perturbed document')
    p.set_defaults(func=cmd_perturb)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CheckFailed as failure:
        print(f"FAILED: {failure}")
        return FAILED_CHECK
    except (ValueError, TypeError, OSError) as error:
        print(f"ERROR: {error}", file=sys.stderr)
        return INPUT_ERROR
    except RuntimeError as error:
        # e.g. build_S disagreement or ContainmentError
        print(f"ERROR: {error}", file=sys.stderr)
        return INTERNAL_ERROR
    return SUCCESS


if __name__ == '__main__':
    sys.exit(main())

    # python3 src/workbench.py build data/complexes/origami.json
    # python3 src/workbench.py check data/complexes/crossing.json --embedded
    # python3 src/workbench.py dimer data/complexes/dimer.json --kasteleyn --reflect --kernel
    # python3 src/workbench.py export data/complexes/origami.json --format obj --output origami.obj
