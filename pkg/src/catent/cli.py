"""Command-line front end.

Exit codes: 0 when the requested computation or validation succeeds,
1 when a validator finds a violation (a witness is printed), 2 for
usage errors, unknown columns, or unreadable input.

Values display with 4 decimals by default; ``--full`` switches to 17
significant digits.  Datasets are read from a CSV path or from stdin
when the path is ``-``.
"""

import argparse
import itertools
import sys
from functools import reduce
from pathlib import Path

from .algebra import check_contractivity, check_monoid_laws, joint
from .entropy import (
    UndefinedRatioError,
    check_conditional_entropy_laws,
    conditional_entropy,
    entropic_ratio,
    entropy,
    joint_entropy,
    mutual_information,
    symmetric_uncertainty,
)
from .ingest import CsvSpec, IngestError, load_csv, save_csv, save_matrix
from .metric import (
    EXHAUSTIVE_LIMIT,
    check_distance_axioms,
    check_similarity_axioms,
    distance_matrix,
    merge_reports,
    nondiscreteness_demo,
)
from .model import (
    StructuralError,
    canonical_classes,
    induced_partition,
)
from .randgen import MODES, ConfigError, GenConfig, gen_dataset


def _fmt(value: float, full: bool) -> str:
    return format(value, ".17g") if full else format(value, ".4f")


def _csv_spec(args) -> CsvSpec:
    return CsvSpec(
        delimiter=getattr(args, "delimiter", ","),
        na_policy="drop-row" if getattr(args, "drop_na", False) else "keep-as-category",
    )


def _load(args):
    return load_csv(args.data, _csv_spec(args))


def _require_columns(dataset, names):
    for name in names:
        if name not in dataset:
            raise KeyError(name)


# ---------------------------------------------------------------------------
# plain computations


def _cmd_su(args) -> int:
    dataset = _load(args)
    _require_columns(dataset, [args.a, args.b])
    x = induced_partition(dataset[args.a], dataset)
    y = induced_partition(dataset[args.b], dataset)
    try:
        ratio = _fmt(entropic_ratio(x, y), args.full)
    except UndefinedRatioError:
        ratio = "undefined"
    rows = [
        ("SU", _fmt(symmetric_uncertainty(x, y), args.full)),
        ("distance", _fmt(1.0 - symmetric_uncertainty(x, y), args.full)),
        ("entropic_ratio", ratio),
        ("MI", _fmt(mutual_information(x, y), args.full)),
        (f"H({args.a})", _fmt(entropy(x), args.full)),
        (f"H({args.b})", _fmt(entropy(y), args.full)),
        (f"H({args.a},{args.b})", _fmt(joint_entropy(x, y), args.full)),
        (f"H({args.a}|{args.b})", _fmt(conditional_entropy(x, y), args.full)),
        (f"H({args.b}|{args.a})", _fmt(conditional_entropy(y, x), args.full)),
    ]
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        print(f"{label:<{width}}  {value}")
    return 0


def _cmd_rank(args) -> int:
    dataset = _load(args)
    _require_columns(dataset, [args.cls])
    others = [name for name in dataset.names if name != args.cls]
    if not others:
        print("error: dataset has no feature columns besides the class", file=sys.stderr)
        return 2
    target = induced_partition(dataset[args.cls], dataset)
    scored = [
        (symmetric_uncertainty(induced_partition(dataset[name], dataset), target), name)
        for name in others
    ]
    scored.sort(key=lambda t: (-t[0], t[1]))
    for su, name in scored:
        print(f"{name}\t{_fmt(su, args.full)}")
    return 0


def _cmd_dist(args) -> int:
    dataset = _load(args)
    subset = args.columns or None
    if subset:
        _require_columns(dataset, subset)
    matrix = distance_matrix(dataset, subset)
    number_format = ".17g" if args.full else ".4f"
    text = save_matrix(matrix, fmt=args.format, number_format=number_format)
    if args.out:
        # files always keep full precision so they round-trip
        save_matrix(matrix, args.out, fmt=args.format)
    else:
        print(text, end="")
    return 0


def _cmd_joint(args) -> int:
    dataset = _load(args)
    _require_columns(dataset, args.cols)
    if len(args.cols) < 2:
        print("error: joint needs at least two columns", file=sys.stderr)
        return 2
    combined = reduce(
        lambda acc, name: joint(acc, dataset[name], dataset),
        args.cols[1:],
        dataset[args.cols[0]],
    )
    augmented = dataset.with_column(combined)
    text = save_csv(augmented, spec=_csv_spec(args))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def _cmd_classes(args) -> int:
    dataset = _load(args)
    classes = canonical_classes(dataset)
    groups: dict = {}
    for name in dataset.names:
        groups.setdefault(classes[name], []).append(name)
    for idx, (cls, members) in enumerate(groups.items()):
        profile = ",".join(str(p) for p in cls.signature)
        print(f"{idx}: {' '.join(members)}  [profile {profile}]")
    return 0


# ---------------------------------------------------------------------------
# validators


def _add_random_options(sub):
    sub.add_argument("--random", type=int, metavar="N",
                     help="generate N seeded datasets instead of reading DATA")
    sub.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    sub.add_argument("--columns", dest="gen_columns", type=int, default=3,
                     help="columns per generated dataset (default 3)")
    sub.add_argument("--rows", nargs=2, type=int, default=[2, 12],
                     metavar=("LO", "HI"), help="row-count range (default 2 12)")
    sub.add_argument("--alphabet", nargs=2, type=int, default=[1, 4],
                     metavar=("LO", "HI"), help="alphabet-size range (default 1 4)")
    sub.add_argument("--mode", choices=MODES, default="arbitrary",
                     help="correlation mode for generated datasets")


def _datasets_under_test(args):
    """Yield (tag, dataset) pairs from DATA or from the generator."""
    if args.data is not None and args.random is not None:
        raise _Usage("give either DATA or --random, not both")
    if args.data is not None:
        yield args.data, _load(args)
        return
    if args.random is None:
        raise _Usage("either DATA or --random N is required")
    if args.random < 1:
        raise _Usage("--random must be at least 1")
    for i in range(args.random):
        config = GenConfig(
            seed=args.seed + i,
            rows=tuple(args.rows),
            alphabet_size=tuple(args.alphabet),
            correlation_mode=args.mode,
        )
        yield f"seed={args.seed + i}", gen_dataset(config, args.gen_columns)


class _Usage(Exception):
    pass


def _finish_checks(reports, failures) -> int:
    merged = merge_reports(reports)
    print(merged.summary())
    if merged.passed:
        print("overall: PASS")
        return 0
    for tag, check in failures:
        witness = ",".join(check.witness) if check.witness else "?"
        print(f"violation in dataset[{tag}] {check.name}: witness={witness} "
              f"lhs={check.lhs!r} rhs={check.rhs!r}")
    print("overall: FAIL")
    return 1


def _cmd_check_metric(args) -> int:
    reports, failures = [], []
    for tag, dataset in _datasets_under_test(args):
        sim = check_similarity_axioms(dataset, triples=args.triples, seed=args.seed)
        dist = check_distance_axioms(
            distance_matrix(dataset), canonical_classes(dataset),
            triples=args.triples, seed=args.seed,
        )
        reports.extend((sim, dist))
        failures.extend((tag, c) for c in sim.failures() + dist.failures())
    return _finish_checks(reports, failures)


def _cmd_check_monoid(args) -> int:
    reports, failures = [], []
    for tag, dataset in _datasets_under_test(args):
        laws = check_monoid_laws(dataset, triples=args.triples, seed=args.seed)
        contract = check_contractivity(
            dataset, quadruples=args.quadruples, seed=args.seed
        )
        reports.extend((laws, contract))
        failures.extend((tag, c) for c in laws.failures() + contract.failures())
    return _finish_checks(reports, failures)


def _cmd_check_lemma2(args) -> int:
    totals: dict[str, list[int]] = {}  # name -> [checked, nonvacuous, failures]
    first_failure = None
    for tag, dataset in _datasets_under_test(args):
        names = dataset.names
        parts = {nm: induced_partition(dataset[nm], dataset) for nm in names}
        if args.triples is None and len(names) <= EXHAUSTIVE_LIMIT:
            triple_list = list(itertools.product(names, repeat=3))
        else:
            from .metric import _sample_triples

            triple_list = _sample_triples(names, args.triples or 1000, args.seed)
        for nx, ny, nz in triple_list:
            report = check_conditional_entropy_laws(parts[nx], parts[ny], parts[nz])
            for clause in report.clauses:
                tally = totals.setdefault(clause.name, [0, 0, 0])
                tally[0] += 1
                tally[1] += 0 if clause.vacuous else 1
                if not clause.passed:
                    tally[2] += 1
                    if first_failure is None:
                        first_failure = (tag, (nx, ny, nz), clause)
    width = max(len(name) for name in totals)
    for name, (checked, nonvac, fails) in totals.items():
        print(f"{name:<{width}}  checked={checked} nonvacuous={nonvac} failures={fails}")
    if first_failure is None:
        print("overall: PASS")
        return 0
    tag, triple, clause = first_failure
    print(f"violation in dataset[{tag}] {clause.name}: witness={','.join(triple)} "
          f"gap={clause.gap!r}")
    print("overall: FAIL")
    return 1


def _cmd_demo_nondiscrete(args) -> int:
    pairs = nondiscreteness_demo(args.steps)
    print("n\tepsilon\tdistance")
    for eps, dist in pairs:
        n = round(1.0 / eps)
        print(f"{n}\t{_fmt(eps, args.full)}\t{_fmt(dist, args.full)}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catent",
        description="distance geometry and monoid structure on the columns "
        "of categorical datasets, via the symmetric-uncertainty distance",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_data=True):
        if with_data:
            p.add_argument("data", help="CSV path, or - for stdin")
        p.add_argument("--delimiter", default=",", help="field delimiter (default ,)")
        p.add_argument("--drop-na", action="store_true",
                       help="drop rows with empty cells instead of keeping <NA>")
        p.add_argument("--full", action="store_true",
                       help="print 17 significant digits instead of 4 decimals")

    p = sub.add_parser("su", help="symmetric uncertainty and entropies of a column pair")
    add_io(p)
    p.add_argument("a", help="first column")
    p.add_argument("b", help="second column")
    p.set_defaults(func=_cmd_su)

    p = sub.add_parser("rank", help="rank features by SU against a class column")
    add_io(p)
    p.add_argument("cls", metavar="class", help="class column")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("dist", help="pairwise distance matrix of the columns")
    add_io(p)
    p.add_argument("columns", nargs="*", help="column subset (default: all)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out", help="write to this path (always full precision)")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("joint", help="append the joint of two or more columns")
    add_io(p)
    p.add_argument("cols", nargs="+", help="columns to combine")
    p.add_argument("--out", help="write the augmented CSV to this path")
    p.set_defaults(func=_cmd_joint)

    p = sub.add_parser("classes", help="group columns by indiscernibility")
    add_io(p)
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("check-metric",
                       help="validate similarity conditions and metric axioms")
    add_io(p, with_data=False)
    p.add_argument("data", nargs="?", default=None, help="CSV path, or - for stdin")
    _add_random_options(p)
    p.add_argument("--triples", type=int, default=None,
                   help="sample size for triple-based checks (default: exhaustive)")
    p.set_defaults(func=_cmd_check_metric)

    p = sub.add_parser("check-monoid",
                       help="validate monoid laws and contractivity of the joint")
    add_io(p, with_data=False)
    p.add_argument("data", nargs="?", default=None, help="CSV path, or - for stdin")
    _add_random_options(p)
    p.add_argument("--triples", type=int, default=None,
                   help="sample size for law triples (default: exhaustive)")
    p.add_argument("--quadruples", type=int, default=None,
                   help="sample size for contractivity (default: exhaustive)")
    p.set_defaults(func=_cmd_check_monoid)

    p = sub.add_parser("check-lemma2",
                       help="validate the conditional-entropy laws on column triples")
    add_io(p, with_data=False)
    p.add_argument("data", nargs="?", default=None, help="CSV path, or - for stdin")
    _add_random_options(p)
    p.add_argument("--triples", type=int, default=None,
                   help="sample size for triples (default: exhaustive)")
    p.set_defaults(func=_cmd_check_lemma2)

    p = sub.add_parser("demo-nondiscrete",
                       help="show distinct columns at vanishing distance")
    p.add_argument("--steps", type=int, default=11,
                   help="number of doublings starting at 4 rows (default 11)")
    p.add_argument("--full", action="store_true",
                   help="print 17 significant digits instead of 4 decimals")
    p.set_defaults(func=_cmd_demo_nondiscrete)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed usage or help
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: unknown column {exc.args[0]!r}", file=sys.stderr)
        return 2
    except (IngestError, StructuralError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
