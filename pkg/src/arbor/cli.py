"""Command-line surface.

Decision subcommands print YES/NO on stdout and exit 0 either way; nonzero
exit is reserved for errors (bad input, unknown subcommand), which go to
stderr.  The ARBOR_SEED environment variable overrides the default selftest
seed; an explicit --seed beats both.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from arbor import canon, selftest, tits
from arbor.autom import TreeAutomorphism, parse_aut, serialize_aut
from arbor.orbit_tree import conj_decide, lift_witness, orbit_tree
from arbor.reductions import (
    GroupWordWindow,
    NotACoding,
    height_invariant,
    invert_to_rooted,
    parse_f2set,
    parse_zset,
    phi_rooted,
    phi_unrooted,
    serialize_f2set,
    serialize_zset,
    tz_build,
    tz_decode,
    tz_phi,
    widget_decode,
    widget_encode,
)
from arbor.trees import (
    OMEGA,
    FormatError,
    RootedTree,
    UnrootedTree,
    parse_tree,
    serialize_tree,
)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_aut(tree, path: str) -> TreeAutomorphism:
    return TreeAutomorphism(tree, parse_aut(_read(path)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arbor",
        description="Conjugacy invariants and coding constructions for tree automorphisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="print the canonical code of a tree")
    p.add_argument("tree")

    p = sub.add_parser("iso", help="decide isomorphism of two trees")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("conj", help="decide conjugacy of two automorphisms")
    p.add_argument("tree")
    p.add_argument("phi")
    p.add_argument("psi")
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("orbit-tree", help="print the labeled orbit tree")
    p.add_argument("tree")
    p.add_argument("phi")

    p = sub.add_parser("classify", help="classify a ball-presented automorphism")
    p.add_argument("ballaut")

    reduce_p = sub.add_parser("reduce", help="reduction constructions")
    rsub = reduce_p.add_subparsers(dest="reduction", required=True)

    p = rsub.add_parser("rooted-embed", help="embed a rooted tree with moving furniture")
    p.add_argument("tree")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--width", type=int, default=None)

    p = rsub.add_parser("type-a", help="transfer an edge-inverting automorphism to a rooted one")
    p.add_argument("tree")
    p.add_argument("phi")

    widget_p = rsub.add_parser("widget", help="Cayley-ball widget coding")
    wsub = widget_p.add_subparsers(dest="widget_op", required=True)
    p = wsub.add_parser("encode")
    p.add_argument("f2set")
    p.add_argument("--leaf-mark", type=int, default=3)
    p.add_argument("--provenance", action="store_true")
    p = wsub.add_parser("decode")
    p.add_argument("tree")

    p = rsub.add_parser("unrooted-embed", help="embed an unrooted tree in a regular ambient")
    p.add_argument("tree")
    p.add_argument("--degree", default="3", help="integer >= 3, or 'omega'")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--width", type=int, default=None)

    tz_p = rsub.add_parser("tz", help="decorated integer-line windows")
    tsub = tz_p.add_subparsers(dest="tz_op", required=True)
    p = tsub.add_parser("build")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p = tsub.add_parser("phi")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("zset")
    p = tsub.add_parser("decode")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("phi")

    p = rsub.add_parser("height-inv", help="nested multiset invariant for uniform trees")
    p.add_argument("tree")
    p.add_argument("phi")

    p = sub.add_parser("selftest", help="run the seeded acceptance suites")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--size-bound", type=int, default=selftest.DEFAULT_SIZE_BOUND)
    p.add_argument("--samples", type=int, default=selftest.DEFAULT_SAMPLES)
    p.add_argument("--suite", action="append", default=None, help="run only this suite (repeatable)")
    p.add_argument("--list-suites", action="store_true")

    return parser


def _cmd_canon(args) -> int:
    tree = parse_tree(_read(args.tree))
    if isinstance(tree, RootedTree):
        print(canon.code_rooted(tree).decode("ascii"))
    else:
        print(canon.code_unrooted(tree).decode("ascii"))
    return 0


def _cmd_iso(args) -> int:
    t1 = parse_tree(_read(args.tree1))
    t2 = parse_tree(_read(args.tree2))
    if type(t1) is not type(t2):
        print("NO")
        return 0
    witness = canon.iso_witness(t1, t2)
    if witness is None:
        print("NO")
        return 0
    print("YES")
    if args.witness:
        sys.stdout.write(serialize_aut(witness))
    return 0


def _cmd_conj(args) -> int:
    tree = parse_tree(_read(args.tree))
    phi = _load_aut(tree, args.phi)
    psi = _load_aut(tree, args.psi)
    if not conj_decide(phi, psi):
        print("NO")
        return 0
    print("YES")
    if args.witness:
        alpha = lift_witness(phi, psi)
        perm = alpha.perm if isinstance(alpha, TreeAutomorphism) else alpha
        sys.stdout.write(serialize_aut(perm))
    return 0


def _cmd_orbit_tree(args) -> int:
    tree = parse_tree(_read(args.tree))
    phi = _load_aut(tree, args.phi)
    if not isinstance(tree, RootedTree):
        from arbor.orbit_tree import _to_rooted_form

        phi, _ = _to_rooted_form(phi)
    ot = orbit_tree(phi)
    sys.stdout.write(serialize_tree(ot.tree))
    print("labels " + " ".join(str(x) for x in ot.labels))
    return 0


def _cmd_classify(args) -> int:
    p = tits.parse_ballaut(_read(args.ballaut))
    verdict = tits.classify(p)
    if isinstance(verdict, tits.Inversion):
        print(f"Inversion {verdict.edge[0]} {verdict.edge[1]}")
    elif isinstance(verdict, tits.Translation):
        print(f"Translation {verdict.amplitude}")
    elif isinstance(verdict, tits.Elliptic):
        print(f"Elliptic {len(verdict.fixed)}")
    else:
        print(f"Undetermined {verdict.reason}")
    return 0


def _print_embedded(pair) -> None:
    sys.stdout.write(serialize_tree(pair.ambient))
    sys.stdout.write(serialize_aut(pair.phi.perm))
    print(f"embed {len(pair.embedding)}")
    for src, dst in enumerate(pair.embedding):
        print(f"{src} {dst}")


def _cmd_reduce(args) -> int:
    if args.reduction == "rooted-embed":
        tree = parse_tree(_read(args.tree))
        if not isinstance(tree, RootedTree):
            raise FormatError("rooted-embed needs a rooted tree")
        _print_embedded(phi_rooted(tree, args.depth, args.width))
        return 0
    if args.reduction == "type-a":
        tree = parse_tree(_read(args.tree))
        if not isinstance(tree, UnrootedTree):
            raise FormatError("type-a needs an unrooted tree")
        rooted = invert_to_rooted(_load_aut(tree, args.phi))
        sys.stdout.write(serialize_tree(rooted.tree))
        sys.stdout.write(serialize_aut(rooted.perm))
        return 0
    if args.reduction == "widget":
        if args.widget_op == "encode":
            window = parse_f2set(_read(args.f2set))
            coding = widget_encode(window, leaf_mark=args.leaf_mark)
            sys.stdout.write(serialize_tree(coding.tree))
            if args.provenance:
                for v, tag in enumerate(coding.provenance):
                    print(f"# {v} {tag}")
            return 0
        tree = parse_tree(_read(args.tree))
        if not isinstance(tree, UnrootedTree):
            raise FormatError("widget decode needs an unrooted tree")
        decoded = widget_decode(tree)
        radius = max((len(w) for w in decoded.words), default=0)
        sys.stdout.write(serialize_f2set(GroupWordWindow(radius, decoded.members)))
        return 0
    if args.reduction == "unrooted-embed":
        tree = parse_tree(_read(args.tree))
        if not isinstance(tree, UnrootedTree):
            raise FormatError("unrooted-embed needs an unrooted tree")
        degree = OMEGA if args.degree == "omega" else int(args.degree)
        _print_embedded(phi_unrooted(tree, degree, radius=args.radius, width=args.width))
        return 0
    if args.reduction == "tz":
        zw = tz_build(args.lo, args.hi)
        if args.tz_op == "build":
            sys.stdout.write(serialize_tree(zw.tree))
            return 0
        if args.tz_op == "phi":
            window = parse_zset(_read(args.zset))
            sys.stdout.write(serialize_aut(tz_phi(zw, window).perm))
            return 0
        phi = _load_aut(zw.tree, args.phi)
        sys.stdout.write(serialize_zset(tz_decode(zw, phi)))
        return 0
    if args.reduction == "height-inv":
        tree = parse_tree(_read(args.tree))
        if not isinstance(tree, RootedTree):
            raise FormatError("height-inv needs a rooted tree")
        inv = height_invariant(_load_aut(tree, args.phi))
        print(inv)
        return 0
    raise AssertionError(f"unhandled reduction {args.reduction}")


def _cmd_selftest(args) -> int:
    if args.list_suites:
        for name in selftest.SUITES:
            print(name)
        return 0
    seed = args.seed
    if seed is None:
        env = os.environ.get("ARBOR_SEED")
        seed = int(env) if env else selftest.DEFAULT_SEED
    cfg = selftest.RunConfig(seed=seed, size_bound=args.size_bound, sample_count=args.samples)
    report = selftest.run_selftest(cfg, suites=args.suite)
    sys.stdout.write(report.text())
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "canon": _cmd_canon,
        "iso": _cmd_iso,
        "conj": _cmd_conj,
        "orbit-tree": _cmd_orbit_tree,
        "classify": _cmd_classify,
        "reduce": _cmd_reduce,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except (FormatError, NotACoding, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
