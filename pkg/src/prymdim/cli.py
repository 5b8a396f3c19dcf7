"""Command-line front end.

Subcommands: dims, preset, verify, chartable, group-info. Reports come
in three formats (text, json, tsv); json and tsv are byte-stable across
runs for identical input and seed. Exit codes: 0 clean, 1 input error,
2 mathematical diagnostics, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import chartable, exactla, monodromy, rhprym, weyl
from .errors import NotRationalGroup, ParseError, PrymdimError, SamplingExhausted
from .permgroup import DEFAULT_CAP, PermGroup, Permutation, group_from_generators, parse_generators

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DIAGNOSTIC = 2
EXIT_INTERNAL = 3


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument(
        "--reflection-split",
        choices=("long", "short", "even"),
        default="long",
        help="where non-simply-laced presets place reflection branch points",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="prymdim",
        description="Exact dimensions of generalized Prym varieties of tame Galois covers",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="run the dimension pipeline on a cover-spec file")
    p.add_argument("specfile", help="JSON cover spec (see README for the schema)")
    _common_flags(p)

    p = sub.add_parser("preset", help="run a named integrable-system preset")
    p.add_argument("kind", choices=("toda", "hitchin", "markman"))
    p.add_argument("type", help="Weyl type letter A/B/C/D/G/F")
    p.add_argument("rank", type=int)
    p.add_argument("--genus", type=int, default=None, help="base genus (hitchin/markman)")
    p.add_argument("--degD", dest="deg_d", type=int, default=None, help="twist degree (markman)")
    _common_flags(p)

    p = sub.add_parser("verify", help="run the full invariant suite on a group")
    _group_source_flags(p)
    p.add_argument("--specs", type=int, default=25, help="sampled cover specs for the two-route check")
    p.add_argument("--tuples", type=int, default=50, help="sampled branch tuples for the oracle check")
    _common_flags(p)

    p = sub.add_parser("chartable", help="print the character table of a group")
    _group_source_flags(p)
    _common_flags(p)

    p = sub.add_parser("group-info", help="print order, classes and cyclic classes")
    _group_source_flags(p)
    _common_flags(p)

    return ap


def _group_source_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--weyl", metavar="LABEL", help="Weyl group label like A3 or G2")
    g.add_argument("--generators", nargs="+", metavar="PERM", help="cycle strings or image arrays")


def _resolve_group(args) -> tuple[PermGroup, dict]:
    if getattr(args, "weyl", None):
        letter, rank = weyl.parse_weyl_label(args.weyl)
        W = weyl.weyl_group(letter, rank)
        return W.group, {"weyl": {"type": letter, "rank": rank}}
    gens = parse_generators(args.generators)
    G = group_from_generators(gens, cap=args.cap)
    return G, {"generators": [g.cycle_str() for g in gens]}


def _spec_from_document(doc: dict, cap: int) -> tuple[rhprym.CoverSpec, dict]:
    """Build a CoverSpec from the JSON schema; raises ParseError on bad input."""
    if not isinstance(doc, dict):
        raise ParseError("cover spec must be a JSON object")
    gdoc = doc.get("group")
    if not isinstance(gdoc, dict):
        raise ParseError('cover spec needs a "group" object')
    if "weyl" in gdoc:
        wdoc = gdoc["weyl"]
        letter, rank = str(wdoc.get("type", "")), wdoc.get("rank")
        if not isinstance(rank, int):
            raise ParseError('weyl group needs an integer "rank"')
        W = weyl.weyl_group(*weyl.parse_weyl_label(f"{letter}{rank}"))
        G = W.group
        echo_group: dict = {"weyl": {"type": W.letter, "rank": W.rank}}
    elif "generators" in gdoc:
        texts = gdoc["generators"]
        if not isinstance(texts, list):
            raise ParseError('"generators" must be a list')
        gens = []
        degree = gdoc.get("degree")
        for t in texts:
            if isinstance(t, str):
                gens.append(t)
            elif isinstance(t, list):
                gens.append(" ".join(str(x) for x in t))
            else:
                raise ParseError(f"bad generator entry {t!r}")
        perms = parse_generators(gens, degree=degree)
        G = group_from_generators(perms, cap=cap)
        echo_group = {"generators": [p.cycle_str() for p in perms]}
    else:
        raise ParseError('group object needs "weyl" or "generators"')

    base_genus = doc.get("base_genus")
    if not isinstance(base_genus, int) or base_genus < 0:
        raise ParseError('"base_genus" must be a nonnegative integer')

    counts: dict[int, int] = {}
    ram = doc.get("ramification", [])
    if not isinstance(ram, list):
        raise ParseError('"ramification" must be a list')
    echo_ram = []
    for entry in ram:
        if not isinstance(entry, dict) or "inertia_generator" not in entry:
            raise ParseError(f"bad ramification entry {entry!r}")
        text = entry["inertia_generator"]
        count = entry.get("count")
        if not isinstance(count, int) or count < 0:
            raise ParseError(f'"count" must be a nonnegative integer in {entry!r}')
        try:
            perm = Permutation.from_cycles(str(text), degree=G.degree)
            x = G.index_of(perm)
        except (ParseError, KeyError) as exc:
            raise ParseError(f"inertia generator {text!r} is not in the group: {exc}") from exc
        if x == G.identity_index:
            raise ParseError("inertia generators must be nontrivial")
        k = G.cyclic_class_of_element(x)
        counts[k] = counts.get(k, 0) + count
        echo_ram.append({"inertia_generator": perm.cycle_str(), "count": count})

    spec = rhprym.CoverSpec(G, base_genus, rhprym.RamificationSpec(counts))
    echo = {"group": echo_group, "base_genus": base_genus, "ramification": echo_ram}
    return spec, echo


# -- report assembly -------------------------------------------------------------


def _group_block(G: PermGroup) -> dict:
    return {
        "degree": G.degree,
        "order": G.order,
        "class_count": len(G.conjugacy_classes()),
    }


def _table_block(G: PermGroup) -> dict:
    table = chartable.character_table(G)
    classes = G.conjugacy_classes()
    return {
        "classes": [
            {
                "representative": G.elements[c.representative].cycle_str(),
                "size": c.size,
                "element_order": c.element_order,
            }
            for c in classes
        ],
        "rows": [
            {"label": f"chi{j + 1}", "degree": table.degrees[j], "values": list(row)}
            for j, row in enumerate(table.table)
        ],
    }


def _cyclic_block(G: PermGroup) -> list[dict]:
    return [
        {
            "label": f"H{i + 1}",
            "subgroup_order": K.subgroup_order,
            "generator": G.elements[K.generator].cycle_str(),
        }
        for i, K in enumerate(G.cyclic_subgroup_classes())
    ]


def _dims_report(spec: rhprym.CoverSpec, echo: dict) -> dict:
    G = spec.group
    table = chartable.character_table(G)
    fdm = chartable.fixed_dim_matrix(G)
    report = rhprym.validate(spec)
    cyclic = _cyclic_block(G)
    genera = [
        {**cyclic[i], "genus": g} for i, g in enumerate(report.quotient_genera)
    ]
    dims = report.dims if report.dims is not None else report.dims_closed_form
    return {
        "input": echo,
        "group": _group_block(G),
        "character_table": _table_block(G),
        "fixed_dim_matrix": [list(r) for r in fdm.entries],
        "genera": {"total": report.g_total, "quotients": genera},
        "dimensions": None
        if dims is None
        else [
            {"label": f"chi{j + 1}", "degree": table.degrees[j], "dim": d}
            for j, d in enumerate(dims)
        ],
        "method_agreement": report.method_agreement,
        "diagnostics": list(report.diagnostics),
    }


def _render_dims_text(doc: dict, elapsed: float) -> str:
    out = []
    out.append(f"group: order {doc['group']['order']}, degree {doc['group']['degree']}, "
               f"{doc['group']['class_count']} conjugacy classes")
    out.append(f"base genus: {doc['input']['base_genus']}")
    if doc["input"]["ramification"]:
        for e in doc["input"]["ramification"]:
            where = e.get("inertia_generator") or e.get("cyclic_class")
            out.append(f"branch points: {e['count']} with inertia <{where}>")
    else:
        out.append("branch points: none")
    out.append(f"genus of total space: {doc['genera']['total']}")
    out.append("quotient genera:")
    for q in doc["genera"]["quotients"]:
        out.append(
            f"  {q['label']} (order {q['subgroup_order']}, gen {q['generator']}): {q['genus']}"
        )
    if doc["dimensions"] is not None:
        out.append("isotypic dimensions:")
        for d in doc["dimensions"]:
            out.append(f"  {d['label']} (degree {d['degree']}): {d['dim']}")
    out.append(f"closed form and linear solve agree: {doc['method_agreement']}")
    if doc["diagnostics"]:
        out.append("diagnostics:")
        for d in doc["diagnostics"]:
            out.append(f"  {d}")
    else:
        out.append("diagnostics: none")
    out.append(f"elapsed: {elapsed:.3f}s")
    return "\n".join(out) + "\n"


def _render_dims_tsv(doc: dict) -> str:
    lines = ["section\tlabel\tdegree\tvalue"]
    lines.append(f"genus\ttotal\t\t{doc['genera']['total']}")
    for q in doc["genera"]["quotients"]:
        lines.append(f"genus\t{q['label']}\t\t{q['genus']}")
    for d in doc["dimensions"] or []:
        lines.append(f"dim\t{d['label']}\t{d['degree']}\t{d['dim']}")
    for d in doc["diagnostics"]:
        lines.append(f"diagnostic\t\t\t{d}")
    return "\n".join(lines) + "\n"


def _emit(doc: dict, fmt: str, text_renderer, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text_renderer())


# -- subcommands -----------------------------------------------------------------


def _cmd_dims(args, out) -> int:
    t0 = time.monotonic()
    try:
        with open(args.specfile, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.specfile}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(
            f"error: malformed JSON in {args.specfile} at line {exc.lineno} "
            f"column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    spec, echo = _spec_from_document(doc, args.cap)
    report = _dims_report(spec, echo)
    elapsed = time.monotonic() - t0
    if args.format == "tsv":
        out.write(_render_dims_tsv(report))
    else:
        _emit(report, args.format, lambda: _render_dims_text(report, elapsed), out)
    return EXIT_DIAGNOSTIC if report["diagnostics"] else EXIT_OK


def _cmd_preset(args, out) -> int:
    t0 = time.monotonic()
    letter, rank = weyl.parse_weyl_label(f"{args.type}{args.rank}")
    W = weyl.weyl_group(letter, rank)
    split = args.reflection_split
    if args.kind == "toda":
        spec = weyl.toda_preset(W, split)
        expected = W.rank
        params = {}
    elif args.kind == "hitchin":
        genus = 2 if args.genus is None else args.genus
        spec = weyl.hitchin_preset(W, genus, split)
        expected = W.lie_dim * (genus - 1)
        params = {"genus": genus}
    else:
        genus = 2 if args.genus is None else args.genus
        deg_d = 1 if args.deg_d is None else args.deg_d
        spec = weyl.markman_preset(W, genus, deg_d, split)
        expected = W.lie_dim * (genus - 1) + (W.lie_dim - W.rank) // 2 * deg_d
        params = {"genus": genus, "deg_d": deg_d}

    echo = {
        "preset": args.kind,
        "group": {"weyl": {"type": W.letter, "rank": W.rank}},
        "base_genus": spec.base_genus,
        "reflection_split": split,
        **params,
        "ramification": [
            {"cyclic_class": f"H{k + 1}", "count": c}
            for k, c in sorted(spec.ramification.counts.items())
        ],
    }
    report = _dims_report(spec, echo)
    dims = report["dimensions"]
    computed = None if dims is None else dims[W.reflection_rep]["dim"]
    report["preset"] = {
        "kind": args.kind,
        "reflection_rep": f"chi{W.reflection_rep + 1}",
        "computed_dim": computed,
        "expected_dim": expected,
        "match": computed == expected,
    }
    elapsed = time.monotonic() - t0

    def text():
        body = _render_dims_text(report, elapsed)
        verdict = "MATCH" if report["preset"]["match"] else "MISMATCH"
        body += (
            f"preset {args.kind} {W.label}: Cartan-representation dim "
            f"{computed}, expected {expected} -> {verdict}\n"
        )
        return body

    if args.format == "tsv":
        tsv = _render_dims_tsv(report)
        tsv += f"preset\t{args.kind}\t\t{'MATCH' if report['preset']['match'] else 'MISMATCH'}\n"
        out.write(tsv)
    else:
        _emit(report, args.format, text, out)
    if report["diagnostics"]:
        return EXIT_DIAGNOSTIC
    return EXIT_OK if report["preset"]["match"] else EXIT_DIAGNOSTIC


def _cmd_chartable(args, out) -> int:
    G, echo = _resolve_group(args)
    if not G.is_rational_group():
        print("error: NotRationalGroup: character table needs rational characters",
              file=sys.stderr)
        return EXIT_DIAGNOSTIC
    if args.format == "tsv":
        out.write(chartable.table_tsv(G))
        return EXIT_OK
    doc = {"input": echo, "group": _group_block(G), "character_table": _table_block(G)}

    def text():
        lines = [f"group: order {G.order}, degree {G.degree}"]
        lines.append(chartable.table_tsv(G).replace("\t", "  "))
        return "\n".join(lines)

    _emit(doc, args.format, text, out)
    return EXIT_OK


def _cmd_group_info(args, out) -> int:
    G, echo = _resolve_group(args)
    classes = G.conjugacy_classes()
    doc = {
        "input": echo,
        "group": _group_block(G),
        "rational_characters": G.is_rational_group(),
        "classes": [
            {
                "label": f"C{i + 1}",
                "representative": G.elements[c.representative].cycle_str(),
                "size": c.size,
                "element_order": c.element_order,
            }
            for i, c in enumerate(classes)
        ],
    }
    if doc["rational_characters"]:
        doc["cyclic_classes"] = _cyclic_block(G)

    def text():
        lines = [
            f"order: {G.order}",
            f"degree: {G.degree}",
            f"rational characters: {doc['rational_characters']}",
            f"conjugacy classes ({len(classes)}):",
        ]
        for c in doc["classes"]:
            lines.append(
                f"  {c['label']}: size {c['size']}, element order {c['element_order']}, "
                f"rep {c['representative']}"
            )
        if "cyclic_classes" in doc:
            lines.append("cyclic subgroup classes:")
            for k in doc["cyclic_classes"]:
                lines.append(
                    f"  {k['label']}: order {k['subgroup_order']}, generator {k['generator']}"
                )
        return "\n".join(lines) + "\n"

    if args.format == "tsv":
        lines = ["label\tsize\telement_order\trepresentative"]
        for c in doc["classes"]:
            lines.append(
                f"{c['label']}\t{c['size']}\t{c['element_order']}\t{c['representative']}"
            )
        out.write("\n".join(lines) + "\n")
        return EXIT_OK
    _emit(doc, args.format, text, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    G, echo = _resolve_group(args)
    checks: list[tuple[str, bool, str]] = []

    if not G.is_rational_group():
        msg = "NotRationalGroup: power-map test failed"
        doc = {"input": echo, "group": _group_block(G), "checks": [
            {"name": "rationality", "ok": False, "detail": msg}], "ok": False}
        _emit(doc, args.format, lambda: f"rationality: FAIL ({msg})\nresult: FAIL\n", out)
        return EXIT_DIAGNOSTIC

    checks.append(("rationality", True, "power-map test passed"))

    classes = G.conjugacy_classes()
    cyclic = G.cyclic_subgroup_classes()
    checks.append(
        (
            "class_equation",
            sum(c.size for c in classes) == G.order
            and all(G.order % c.size == 0 for c in classes),
            f"{len(classes)} classes partition the group",
        )
    )
    checks.append(
        (
            "cyclic_class_bijection",
            len(cyclic) == len(classes),
            f"{len(cyclic)} cyclic classes == {len(classes)} element classes",
        )
    )

    table = chartable.character_table(G)
    checks.append(("orthogonality", True, "verified during table construction"))
    fdm = chartable.fixed_dim_matrix(G)
    det = exactla.determinant(exactla.RationalMatrix.from_rows(fdm.entries))
    tri_ok = _triangular_change_of_basis_ok(G, table, fdm)
    checks.append(("fixed_dim_invertible", det != 0, f"determinant {det}"))
    checks.append(("fixed_dim_triangular", tri_ok, "lower-triangular in the character basis"))

    dc_ok = True
    for i, Ki in enumerate(cyclic):
        for k, Kk in enumerate(cyclic):
            char_sum = sum(fdm.entries[i][j] * fdm.entries[k][j] for j in range(table.n))
            if char_sum != G.double_coset_count(Kk, Ki):
                dc_ok = False
    checks.append(("double_coset_identity", dc_ok, f"all {len(cyclic)}^2 pairs"))

    rng = random.Random(args.seed)
    specs = rhprym.sample_cover_specs(G, args.specs, rng)
    agree = all(rhprym.validate(s).method_agreement for s in specs)
    checks.append(("two_route_dimensions", agree, f"{len(specs)} sampled cover specs"))

    mism = 0
    produced = 0
    for _ in range(args.tuples):
        g = rng.choice((0, 1))
        b = rng.randint(1 if g else 2, 6)
        try:
            t = monodromy.sample_tuple(G, g, b, rng)
        except SamplingExhausted:
            continue
        produced += 1
        if not monodromy.verify_tuple(t).ok:
            mism += 1
    checks.append(
        ("monodromy_oracle", mism == 0, f"{produced} tuples, {mism} mismatches")
    )

    ok = all(c[1] for c in checks)
    doc = {
        "input": echo,
        "group": _group_block(G),
        "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in checks],
        "ok": ok,
    }

    def text():
        lines = [f"{n}: {'PASS' if o else 'FAIL'} ({d})" for n, o, d in checks]
        lines.append(f"result: {'PASS' if ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    _emit(doc, args.format, text, out)
    return EXIT_OK if ok else EXIT_DIAGNOSTIC


def _triangular_change_of_basis_ok(G, table, fdm) -> bool:
    """The fixed-dim rows, written in the basis of character-table rows
    (one per class), must form a lower-triangular matrix with nonzero
    diagonal once classes are matched to their cyclic classes."""
    n = table.n
    # coefficients l with sum_c l[c] * chi_j(class c) = fixed_dim_row_i[j]
    A = exactla.RationalMatrix.from_rows(table.table)
    cyclic = G.cyclic_subgroup_classes()
    pos_of_class = {G.class_of(K.generator): k for k, K in enumerate(cyclic)}
    for i in range(n):
        coeffs = exactla.solve(A, list(fdm.entries[i]))
        for c, coef in enumerate(coeffs):
            k = pos_of_class[c]
            if k > i and coef != 0:
                return False
            if k == i and coef == 0:
                return False
    return True


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "dims":
            return _cmd_dims(args, out)
        if args.command == "preset":
            return _cmd_preset(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "chartable":
            return _cmd_chartable(args, out)
        return _cmd_group_info(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotRationalGroup as exc:
        print(f"error: NotRationalGroup: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC
    except PrymdimError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
