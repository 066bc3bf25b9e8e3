"""Command-line frontend: one subcommand per computation, three output modes.

Every subcommand honors ``--format json|tsv|text`` with the same semantic
content.  Exit codes: 0 success, 1 domain error (bad math input), 2 usage
error (argparse).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import DomainError
from .expr import parse_expr, print_expr
from .freelie import (
    lyndon_words,
    multilinear_normal_form,
    normalized_words,
    omega_d,
)
from .gropes import forest_ut, load_forest
from .groups import GroupModel, TRIVIAL_GROUP, cyclic_group, free_group, load_model
from .oneloop import canonical_diagrams, resolvable_vertices, stu_resolve
from .relations import (
    as_relations,
    decorated_context,
    ihx_relations,
    jacobi_context,
    lie_context,
    stu2_relations,
)
from .towers import conf_factors, e1_page, first_layer_group, layer_connectivity, layer_factors
from .trees import tree_key


def _load_group(spec: str | None) -> GroupModel:
    if spec is None or spec == "trivial":
        return TRIVIAL_GROUP
    if spec.startswith("cyclic:"):
        return cyclic_group(int(spec.split(":", 1)[1]))
    if spec.startswith("free:"):
        return free_group(int(spec.split(":", 1)[1]))
    return load_model(spec)


def _presentation_record(p, **extra):
    rec = dict(extra)
    rec["rank"] = p.free_rank
    rec["torsion"] = list(p.torsion)
    return rec


def _presentation_text(p, prefix=""):
    return prefix + p.text()


def _vector_text(coords):
    return "(" + ",".join(str(c) for c in coords) + ")"


def _factor_record(fd):
    return {
        "word": fd.word.text(),
        "bracketing": tree_key(fd.word.bracketing),
        "suspensionDegree": fd.suspension_degree,
        "baseSpace": fd.base_space,
        "loopCount": fd.loop_count,
    }


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (records, text)

def _cmd_lie_rank(args):
    p = lie_context(args.n).presentation()
    return [_presentation_record(p, n=args.n)], _presentation_text(p)


def _cmd_at_rank(args):
    p = jacobi_context(args.n).presentation()
    return [_presentation_record(p, n=args.n)], _presentation_text(p)


def _cmd_decorated_rank(args):
    model = _load_group(args.group)
    p = decorated_context(args.n, model, max_word_len=args.max_word_len).presentation()
    return [_presentation_record(p, n=args.n)], _presentation_text(p)


def _context_for(args, model):
    if args.context == "lie":
        return lie_context(args.n)
    if args.context == "at":
        return jacobi_context(args.n)
    return decorated_context(args.n, model, max_word_len=args.max_word_len)


def _cmd_reduce(args):
    model = _load_group(args.group) if args.context == "decorated" else None
    ctx = _context_for(args, model)
    s = parse_expr(args.expr, model)
    coords = ctx.coordinates(s)
    reduced = ctx.reduce(s)
    rec = {
        "context": args.context,
        "n": args.n,
        "coordinates": list(coords),
        "representative": print_expr(reduced),
    }
    return [rec], _vector_text(coords)


def _cmd_equal(args):
    model = _load_group(args.group) if args.context == "decorated" else None
    ctx = _context_for(args, model)
    a = parse_expr(args.expr1, model)
    b = parse_expr(args.expr2, model)
    eq = ctx.equal(a, b)
    return [{"equal": eq}], ("true" if eq else "false")


def _cmd_omega(args):
    s = parse_expr(args.expr)
    (tree, coeff), = s.terms.items()
    if coeff != 1:
        raise DomainError("omega takes a single tree, not a combination")
    sw = omega_d(tree, args.d)
    rec = {"d": args.d, "sign": sw.sign, "word": tree_key(sw.word)}
    return [rec], f"{'+' if sw.sign > 0 else '-'}{tree_key(sw.word)}"


def _word_rows(words):
    return [
        {"word": w.text(), "length": w.length, "bracketing": tree_key(w.bracketing)}
        for w in words
    ]


def _cmd_hall(args):
    words = lyndon_words(args.k, args.max_word_len or args.k)
    rows = _word_rows(words)
    return rows, "\n".join(f"{r['word']}\t{r['bracketing']}" for r in rows)


def _cmd_normalized(args):
    words = normalized_words(range(1, args.n + 1), args.max_word_len or args.n)
    rows = _word_rows(words)
    return rows, "\n".join(f"{r['word']}\t{r['bracketing']}" for r in rows)


def _cmd_layers(args):
    factors = layer_factors(args.n, args.d, args.max_word_len or args.n)
    rows = [_factor_record(f) for f in factors]
    text = "\n".join(f"{r['word']}\tdegree={r['suspensionDegree']}\t{r['baseSpace']}" for r in rows)
    return rows, text


def _cmd_connectivity(args):
    c = layer_connectivity(args.n, args.d)
    return [{"n": args.n, "d": args.d, "connectivity": c}], str(c)


def _cmd_first_group(args):
    model = _load_group(args.group)
    fg = first_layer_group(args.n, args.d, model, max_word_len=args.max_word_len)
    rec = _presentation_record(fg.presentation, n=args.n, d=args.d, degree=fg.degree)
    return [rec], f"degree={fg.degree} {fg.presentation.text()}"


def _e1_record(e):
    rec = {
        "n": e.n,
        "t": e.t,
        "status": e.status,
        "summands": [_factor_record(f) for f in e.summands],
    }
    if e.exact_group is not None:
        rec["exactGroup"] = {
            "rank": e.exact_group.free_rank,
            "torsion": list(e.exact_group.torsion),
        }
    return rec


def _cmd_e1(args):
    model = _load_group(args.group)
    entries = e1_page(args.n_max, args.t_max, args.d, model, max_word_len=args.max_word_len)
    rows = [_e1_record(e) for e in entries]
    lines = []
    for r in rows:
        summary = ",".join(s["word"] for s in r["summands"])
        extra = ""
        if "exactGroup" in r:
            extra = f"\trank={r['exactGroup']['rank']} torsion={r['exactGroup']['torsion']}"
        lines.append(f"n={r['n']}\tt={r['t']}\t{r['status']}\t[{summary}]{extra}")
    return rows, "\n".join(lines)


def _cmd_conf(args):
    dec = conf_factors(args.n, args.d, args.max_word_len or args.n)
    rows = [
        {"alphabet": i, **_factor_record(f)} for i, f in dec.factors
    ]
    header = f"(pi_*M)^{dec.base_copies} truncated at word length {dec.max_word_len}"
    text = header + "".join(
        f"\nalphabet={r['alphabet']}\t{r['word']}\tdegree={r['suspensionDegree']}" for r in rows
    )
    records = [{"baseCopies": dec.base_copies, "maxWordLen": dec.max_word_len, "factors": rows}]
    return records, text


def _cmd_ut(args):
    forest = load_forest(args.file)
    s = forest_ut(forest)
    return [{"sum": print_expr(s)}], print_expr(s)


def _cmd_stu2_dump(args):
    rels = stu2_relations(args.n, args.enumeration)
    rows = [{"family": rels.family, "relation": print_expr(r)} for r in rels]
    text = f"# {rels.family}\n" + "\n".join(r["relation"] for r in rows)
    return rows, text


def _cmd_relations_dump(args):
    labels = range(1, args.n + 1)
    parts = []
    if args.family in ("as", "all"):
        parts.append(as_relations(labels))
    if args.family in ("ihx", "all"):
        parts.append(ihx_relations(labels))
    if args.family in ("stu2", "all"):
        parts.append(stu2_relations(args.n))
    rows = []
    chunks = []
    for rs in parts:
        chunks.append(f"# {rs.family}")
        for r in rs:
            rows.append({"family": rs.family, "relation": print_expr(r)})
            chunks.append(print_expr(r))
    return rows, "\n".join(chunks)


def _cmd_selftest(args):
    rng = random.Random(args.seed)
    checks = []
    # sign identity on random splits
    from .freelie import split_inversions

    for _ in range(200):
        size = rng.randint(2, 8)
        labels = rng.sample(range(1, 50), size)
        cut = rng.randint(1, size - 1)
        s1, s2 = labels[:cut], labels[cut:]
        d = rng.randint(2, 5)
        lhs = (d - 2) * split_inversions(s1, s2) + (d - 2) * split_inversions(s2, s1)
        assert lhs % 2 == (len(s1) * len(s2) * (d - 2)) % 2
    checks.append("sign-identity")
    # quotient vs expansion oracle on random multilinear sums
    from .trees import TreeSum, enumerate_trees

    for n in (2, 3):
        ctx = lie_context(n)
        trees = enumerate_trees(range(1, n + 1))
        for _ in range(50):
            a = {t: rng.randint(-2, 2) for t in rng.sample(trees, min(3, len(trees)))}
            b = {t: rng.randint(-2, 2) for t in rng.sample(trees, min(3, len(trees)))}
            sa, sb = TreeSum(a), TreeSum(b)
            lhs = ctx.equal(sa, sb)
            rhs = multilinear_normal_form(sa) == multilinear_normal_form(sb)
            assert lhs == rhs
    checks.append("quotient-oracle")
    # resolutions stay inside their own quotient
    for n in (2, 3):
        ctx = jacobi_context(n)
        for dgm in canonical_diagrams(n):
            rv = resolvable_vertices(dgm)
            for i in rv[1:]:
                assert ctx.is_zero(stu_resolve(dgm, i) - stu_resolve(dgm, rv[0]))
    checks.append("stu2-consistency")
    return [{"passed": checks}], "ok: " + ", ".join(checks)


# ---------------------------------------------------------------------------
# parser

def _add_common(p, *, n=False, d=False, context=False):
    if n:
        p.add_argument("--n", type=int, required=True)
    if d:
        p.add_argument("--d", type=int, required=True)
    if context:
        p.add_argument("--context", choices=["lie", "at", "decorated"], default="lie")


def build_parser():
    top = argparse.ArgumentParser(
        prog="lietrees",
        description="Exact computations with tree groups, loop-resolution "
        "quotients, Hall bases and embedding-tower tables.",
    )
    top.add_argument("--format", choices=["json", "tsv", "text"], default="text")
    top.add_argument("--group", help="group model: trivial, cyclic:M, free:G, or a JSON file")
    top.add_argument("--max-word-len", type=int, dest="max_word_len")
    top.add_argument("--seed", type=int, default=0)
    # the same global flags are accepted after the subcommand as well
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--group", default=argparse.SUPPRESS)
    common.add_argument(
        "--max-word-len", type=int, dest="max_word_len", default=argparse.SUPPRESS
    )
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("lie-rank", help="rank/torsion of the tree group modulo AS+IHX")
    _add_common(p, n=True)
    p.set_defaults(handler=_cmd_lie_rank)

    p = sub.add_parser("at-rank", help="rank/torsion after also imposing loop resolutions")
    _add_common(p, n=True)
    p.set_defaults(handler=_cmd_at_rank)

    p = sub.add_parser("decorated-rank", help="decorated quotient rank over a group model")
    _add_common(p, n=True)
    p.set_defaults(handler=_cmd_decorated_rank)

    p = sub.add_parser("reduce", help="coordinates of a sum in a quotient")
    _add_common(p, n=True, context=True)
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("equal", help="equality of two sums in a quotient")
    _add_common(p, n=True, context=True)
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.set_defaults(handler=_cmd_equal)

    p = sub.add_parser("omega", help="sign-twisted word of a tree in dimension d")
    _add_common(p, d=True)
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_omega)

    p = sub.add_parser("hall", help="Lyndon/Hall words over k letters")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_hall)

    p = sub.add_parser("normalized", help="Hall words using every letter of {1..n}")
    _add_common(p, n=True)
    p.set_defaults(handler=_cmd_normalized)

    p = sub.add_parser("layers", help="tower layer factors")
    _add_common(p, n=True, d=True)
    p.set_defaults(handler=_cmd_layers)

    p = sub.add_parser("connectivity", help="layer connectivity n(d-3)-1")
    _add_common(p, n=True, d=True)
    p.set_defaults(handler=_cmd_connectivity)

    p = sub.add_parser("first-group", help="first nontrivial layer homotopy group")
    _add_common(p, n=True, d=True)
    p.set_defaults(handler=_cmd_first_group)

    p = sub.add_parser("e1", help="first-page table with vanishing line and first slope")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=_cmd_e1)

    p = sub.add_parser("conf", help="configuration-space summand decomposition")
    _add_common(p, n=True, d=True)
    p.set_defaults(handler=_cmd_conf)

    p = sub.add_parser("ut", help="underlying decorated-tree sum of a forest file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_ut)

    p = sub.add_parser("stu2-dump", help="loop-resolution relation vectors")
    _add_common(p, n=True)
    p.add_argument("--enumeration", choices=["canonical", "all"], default="canonical")
    p.set_defaults(handler=_cmd_stu2_dump)

    p = sub.add_parser("relations-dump", help="relation families as expressions")
    _add_common(p, n=True)
    p.add_argument("--family", choices=["as", "ihx", "stu2", "all"], default="all")
    p.set_defaults(handler=_cmd_relations_dump)

    p = sub.add_parser("selftest", help="seeded randomized consistency checks")
    p.set_defaults(handler=_cmd_selftest)

    return top


def _emit_tsv(records, out):
    if not records:
        return
    flat = []
    for r in records:
        flat.append({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    headers = []
    for r in flat:
        for k in r:
            if k not in headers:
                headers.append(k)
    out.write("\t".join(headers) + "\n")
    for r in flat:
        out.write("\t".join(str(r.get(k, "")) for k in headers) + "\n")


def dispatch(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records, text = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.format == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
    elif args.format == "tsv":
        _emit_tsv(records, out)
    else:
        out.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
