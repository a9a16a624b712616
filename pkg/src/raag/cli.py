"""Command-line front end.

Exit codes: 0 success / true, 1 false / negative, 2 input error, 3 undecided.
"""

import argparse
import sys

from .centralizers import centralizer, commutes
from .conjugacy import conjugate_test
from .embed import (
    CertificateError,
    EmbeddingCertificate,
    UnsupportedInput,
    embed_search,
    verify_certificate,
)
from .graphs import GraphFormatError, graph_isomorphic, read_graph
from .qm import ball, crossing_graph, hyperplanes_of_ball
from .words import Group, WordSyntaxError, equal, reduce

OK, FALSE, INPUT_ERROR, UNDECIDED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _group(args, finite=False):
    graph = read_graph(args.graph)
    ell = args.ell
    if ell == 0:
        ell = None
    if finite and ell is None:
        raise InputError("this command needs a finite exponent domain: pass --ell N with N >= 2")
    return Group(graph, ell)


def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_reduce(args):
    group = _group(args)
    print(reduce(group.word(args.word)))
    return OK


def _verdict(flag, yes, no):
    print(yes if flag else no)
    return OK if flag else FALSE


def cmd_equal(args):
    group = _group(args)
    return _verdict(equal(group.word(args.word1), group.word(args.word2)), "equal", "not equal")


def cmd_conjugate(args):
    group = _group(args)
    x = conjugate_test(group.word(args.word1), group.word(args.word2))
    if x is None:
        print("not conjugate")
        return FALSE
    print(f"conjugate: word1 = x word2 x^-1 with x = {x}")
    return OK


def cmd_commute(args):
    group = _group(args)
    return _verdict(commutes(group.word(args.word1), group.word(args.word2)), "commute", "do not commute")


def cmd_centralizer(args):
    group = _group(args)
    if not group.infinite:
        raise InputError("centralizers are only available for the infinite domain (--ell 0)")
    print(centralizer(group.word(args.word)))
    return OK


def cmd_crossing_graph(args):
    group = _group(args, finite=True)
    if args.radius < 0:
        raise InputError("--radius must be nonnegative")
    cg = crossing_graph(hyperplanes_of_ball(ball(group, args.radius)))
    _emit(cg.to_text(), args.output)
    if args.dot:
        sys.stdout.write(cg.to_dot())
    return OK


def cmd_embed(args):
    phi, psi = read_graph(args.phi), read_graph(args.psi)
    ans = embed_search(phi, psi, max_radius=args.max_radius)
    for line in ans.log:
        print(f"# {line}")
    if ans.verdict == "YES":
        report = verify_certificate(ans.certificate, sample_budget=args.sample_budget)
        print(f"YES (radius {ans.radius})")
        sys.stdout.write("".join(f"# {line}\n" for line in str(report).splitlines()))
        _emit(ans.certificate.to_text(), args.output)
        return OK
    if ans.verdict == "NO":
        print(f"NO (searched radius {ans.searched_radius} = bound {ans.bound})")
        return FALSE
    print(f"UNDECIDED (searched radius {ans.searched_radius} < bound {ans.bound})")
    return UNDECIDED


def cmd_verify(args):
    with open(args.certificate) as fh:
        cert = EmbeddingCertificate.from_text(fh.read())
    report = verify_certificate(cert, sample_budget=args.sample_budget)
    sys.stdout.write(str(report))
    return OK if report.structural_ok else FALSE


def cmd_iso(args):
    g1, g2 = read_graph(args.graph1), read_graph(args.graph2)
    m = graph_isomorphic(g1, g2)
    if m is None:
        print("not isomorphic")
        return FALSE
    for v in g1.vertices:
        print(f"{v} -> {m[v]}")
    return OK


def build_parser():
    p = argparse.ArgumentParser(prog="raag", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker cap (the search itself runs sequentially)")
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, nwords, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("-g", "--graph", required=True, help="graph file")
        s.add_argument("--ell", type=int, default=0, help="exponent domain Z/ell; 0 (default) means Z")
        if nwords == 1:
            s.add_argument("word")
        else:
            s.add_argument("word1")
            s.add_argument("word2")
        s.set_defaults(func=func)

    word_cmd("reduce", cmd_reduce, 1, "print the canonical normal form")
    word_cmd("equal", cmd_equal, 2, "word problem")
    word_cmd("conjugate", cmd_conjugate, 2, "conjugacy problem, with a witness")
    word_cmd("commute", cmd_commute, 2, "commutation problem")
    word_cmd("centralizer", cmd_centralizer, 1, "describe the centralizer")

    s = sub.add_parser("crossing-graph", help="crossing graph of the hyperplanes meeting a ball")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("--ell", type=int, default=0)
    s.add_argument("--radius", type=int, default=1)
    s.add_argument("--dot", action="store_true", help="also print DOT")
    s.add_argument("-o", "--output", help="write the graph file here instead of stdout")
    s.set_defaults(func=cmd_crossing_graph)

    s = sub.add_parser("embed", help="search for an embedding A(phi) -> A(psi)")
    s.add_argument("phi")
    s.add_argument("psi")
    s.add_argument("--max-radius", type=int, default=2)
    s.add_argument("--sample-budget", type=int, default=1000)
    s.add_argument("-o", "--output", help="write the certificate here instead of stdout")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("verify", help="check an embedding certificate")
    s.add_argument("certificate")
    s.add_argument("--sample-budget", type=int, default=1000)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("iso", help="graph isomorphism")
    s.add_argument("graph1")
    s.add_argument("graph2")
    s.set_defaults(func=cmd_iso)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphFormatError, WordSyntaxError, CertificateError, UnsupportedInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc.filename}: {exc.strerror}", file=sys.stderr)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
