"""``magnus`` command line.

Exit codes: 0 success, 1 bad input (syntax error, violated invariant,
unsupported request, usage error), 2 a self-check of the library failed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import alexander as ax
from . import serialize as ser
from . import verify
from .cobordism import amalgamate, compile_heegaard, tensor_cob
from .dsl import load
from .errors import CertificationError, DomainError
from .exterior import subsets
from .freegroup import PhiValuation, surface_name
from .functor import mag_heegaard, mag_kernel, magnus_rep
from .lagrangian import compose, tensor
from .ring import parse_laurent
from .surface import form_matrix


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.add_argument("--validate-only", action="store_true",
                   help="parse and check the input files, then exit")
    return p


def build_parser():
    common = _common()
    top = _Parser(prog="magnus", description="Magnus and Alexander functors on "
                  "Lagrangian cobordisms")
    sub = top.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    fm = sub.add_parser("form-matrix", parents=[common],
                        help="matrix of the twisted intersection form")
    fm.add_argument("genus", type=int)
    fm.add_argument("values", nargs="*",
                    help="phi on a1..ag, b1..bg as monomials (default all 1)")
    fm.add_argument("--G-rank", type=int, default=None, dest="G_rank")

    mag = sub.add_parser("mag", help="Magnus functor").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    e = mag.add_parser("eval", parents=[common], help="Lagrangian relation Mag(M)")
    e.add_argument("file")
    e.add_argument("--method", choices=["kernel", "heegaard", "both"], default="kernel")
    r = mag.add_parser("rep", parents=[common], help="Magnus representation")
    r.add_argument("file")
    for name, text in (("compose", "Mag of the composite (file2 on top of file1)"),
                       ("tensor", "Mag of the boundary connected sum")):
        c = mag.add_parser(name, parents=[common], help=text)
        c.add_argument("file1")
        c.add_argument("file2")

    alex = sub.add_parser("alex", help="Alexander functor").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    a = alex.add_parser("eval", parents=[common], help="graded map Alex(M)")
    a.add_argument("file")
    f = alex.add_parser("factorize", parents=[common],
                        help="check Alex = ord(H/frak_m(W)) Mag_W")
    f.add_argument("file")
    f.add_argument("--transversal", default=None,
                   help="JSON matrix (rows = coordinates of H- + H+) or a path to one")
    p = alex.add_parser("pluecker", parents=[common], help="Pluecker operator (G trivial)")
    p.add_argument("file")

    v = sub.add_parser("verify", help="run a randomized property suite")
    v.add_argument("suite", help="rings, forms, functoriality, monoidality, unitarity, "
                                 "factorization or all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=None)
    v.add_argument("--json", action="store_true")
    return top


# -- output helpers ----------------------------------------------------------

def _emit(args, kind, payload, text):
    if args.json:
        print(ser.dumps(kind, payload))
    else:
        print(text)


def _matrix_text(M):
    return str(M)


def _relation_text(rel):
    head = (f"Lagrangian relation F_{rel.source.genus} -> F_{rel.target.genus}, "
            f"dimension {rel.space.dim}")
    return head + "\nbasis (columns, source coordinates first):\n" + _matrix_text(rel.space.basis)


def _graded_text(G, unit=None):
    lines = [f"graded map of degree {G.shift}"]
    if unit is not None:
        lines[0] += f" (normalized by the unit {unit})"
    gs, gt = G.source_rank // 2, G.target_rank // 2
    for j in G.degrees():
        cols = ["^".join(surface_name(i + 1, gs) for i in s) or "1"
                for s in subsets(G.source_rank, j)]
        rows = ["^".join(surface_name(i + 1, gt) for i in s) or "1"
                for s in subsets(G.target_rank, j + G.shift)]
        lines.append(f"degree {j} -> {j + G.shift}: columns {' '.join(cols)}; "
                     f"rows {' '.join(rows)}")
        lines.append(_matrix_text(G.blocks[j]))
    return "\n".join(lines)


# -- verbs -------------------------------------------------------------------

def _form_matrix(args):
    text = " ".join(args.values)
    n = args.G_rank
    if n is None:
        n = max([int(k) for k in re.findall(r"t(\d+)", text)] + [0])
    g = args.genus
    if g < 0:
        raise DomainError("genus must be non-negative")
    vals = [parse_laurent(v, n) for v in args.values] or [1] * (2 * g)
    if len(vals) != 2 * g:
        raise DomainError(f"need {2 * g} values of phi, got {len(vals)}")
    phi = PhiValuation.from_monomials(vals, n)
    if args.validate_only:
        print("valid")
        return 0
    S = form_matrix(g, phi)
    _emit(args, "form-matrix", {"genus": g, "phi": ser.phi_to_json(phi),
                                "matrix": ser.matrix_to_json(S)}, _matrix_text(S))
    return 0


def _validated(args, *paths):
    hs = [load(p) for p in paths]
    if args.validate_only:
        print("valid")
    return hs


def _mag(args):
    if args.action in ("compose", "tensor"):
        hs = _validated(args, args.file1, args.file2)
        if args.validate_only:
            return 0
        c1, c2 = (compile_heegaard(h) for h in hs)
        if args.action == "compose":
            rel = mag_kernel(amalgamate(c1, c2))
            check = compose(mag_kernel(c2), mag_kernel(c1))
        else:
            rel = mag_kernel(tensor_cob(c1, c2))
            check = tensor(mag_kernel(c1), mag_kernel(c2))
        if rel != check:
            raise CertificationError("functoriality", f"mag {args.action} disagrees with "
                                     "the composite of the factors")
        _emit(args, "relation", ser.relation_to_json(rel), _relation_text(rel))
        return 0
    (h,) = _validated(args, args.file)
    if args.validate_only:
        return 0
    if args.action == "eval":
        if args.method == "heegaard":
            rel = mag_heegaard(h)
        else:
            rel = mag_kernel(compile_heegaard(h))
            if args.method == "both" and mag_heegaard(h) != rel:
                raise CertificationError("two-path", "kernel and Heegaard routes disagree")
        _emit(args, "relation", ser.relation_to_json(rel), _relation_text(rel))
        return 0
    r = magnus_rep(compile_heegaard(h))
    _emit(args, "magnus-representation", {"matrix": ser.matrix_to_json(r)}, _matrix_text(r))
    return 0


def _read_transversal(arg, N, nvars):
    if arg is None:
        return None
    text = arg
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"transversal is not valid JSON: {exc}") from None
    try:
        return ser.matrix_from_json(data, nvars)
    except ValueError as exc:
        raise DomainError(f"bad transversal: {exc}") from None


def _alex(args):
    (h,) = _validated(args, args.file)
    if args.validate_only:
        return 0
    c = compile_heegaard(h)
    if args.action == "eval":
        G, unit = ax.alex_morphism(c)
        payload = ser.graded_to_json(G)
        payload["unit"] = str(unit)
        _emit(args, "alexander", payload, _graded_text(G, unit))
        return 0
    rel = mag_kernel(c)
    if args.action == "pluecker":
        G = ax.pluecker(rel)
        pv = ax.pluecker_vector(rel)
        labels = [f"{surface_name(i + 1, rel.source.genus)}-"
                  for i in range(rel.n_source)]
        labels += [f"{surface_name(i + 1, rel.target.genus)}+"
                   for i in range(rel.n_target)]
        payload = ser.graded_to_json(G)
        payload["multivector"] = ser.multivector_to_json(pv, labels)
        _emit(args, "pluecker", payload, _graded_text(G))
        return 0
    N = rel.n_source + rel.n_target
    W = _read_transversal(args.transversal, N, c.nvars)
    if W is not None and not ax.is_transversal(rel, W):
        raise DomainError("not-a-transversal: projections do not span the quotient")
    rep = ax.factorization_check(c, W, rel)
    if not rep.ok:
        raise CertificationError("factorization", rep.detail or "")
    payload = {"ok": rep.ok, "unit": None if rep.unit is None else str(rep.unit),
               "ord": str(rep.ord), "degenerate": rep.degenerate,
               "transversal": ser.matrix_to_json(rep.transversal),
               "alex": ser.graded_to_json(rep.alex), "mag_w": ser.graded_to_json(rep.mag_w)}
    text = (f"{rep.summary()}\nord(H/frak_m(W)) = {rep.ord}\ntransversal:\n"
            f"{_matrix_text(rep.transversal)}")
    _emit(args, "factorization", payload, text)
    return 0


def _verify(args):
    try:
        res = verify.run(args.suite, args.seed, args.cases)
    except KeyError:
        raise DomainError(f"unknown suite {args.suite!r}; choose from "
                          f"{', '.join(verify.SUITES)} or all") from None
    ok = all(r[1] for r in res)
    if args.json:
        print(ser.dumps("verify", {"suite": args.suite, "seed": args.seed,
                                   "results": [{"property": n, "passed": p, "detail": d}
                                               for n, p, d in res]}))
    else:
        for n, p, d in res:
            print(f"{'PASS' if p else 'FAIL'}  {n}  ({d})")
    return 0 if ok else 2


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "form-matrix":
            return _form_matrix(args)
        if args.verb == "mag":
            return _mag(args)
        if args.verb == "alex":
            return _alex(args)
        return _verify(args)
    except CertificationError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
