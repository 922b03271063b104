"""Command line interface: solve / infer / verify / filter / generate / bench."""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from .filters import common_preferences, unique_preferences
from .generator import GeneratorConfig, SampleBudgetError, random_aaf, sample_instance
from .inference import (
    CollectionCapError,
    DEFAULT_SET_CAP,
    DefenderPolicy,
    NotConflictFreeError,
    branch_structure,
    compute_all,
    compute_approx,
)
from .model import (
    ArgumentationFramework,
    ParseError,
    Semantics,
    UnknownArgumentError,
    format_extension,
    parse_apx,
    parse_extension,
    parse_tgf,
    serialize,
)
from .preferences import collection_strings, parse_collection, pref_set_strings
from .semantics import enumerate_extensions
from .verify import (
    SemanticsScopeError,
    VerifyMethod,
    verify_collection,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_SEMANTIC = 4

_POLICIES = {
    "unattacked": DefenderPolicy.UNATTACKED,
    "any-defender": DefenderPolicy.ANY_DEFENDER,
}


def _load_framework(path: str) -> ArgumentationFramework:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".tgf"):
        return parse_tgf(text)
    return parse_apx(text)


def _load_collection(path: str):
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("preference_sets", data)
    if data and isinstance(data[0], str):
        data = [data]
    return parse_collection(data)


def _cmd_solve(args) -> int:
    framework = _load_framework(args.input)
    extensions = enumerate_extensions(framework, Semantics(args.semantics))
    if args.format == "json":
        print(json.dumps({"extensions": [sorted(e) for e in extensions]}))
    else:
        for e in extensions:
            print(format_extension(e))
    return EXIT_OK


def _cmd_infer(args) -> int:
    framework = _load_framework(args.input)
    ext = parse_extension(args.extension)
    policy = _POLICIES[args.policy]
    if args.count_only:
        bs = branch_structure(framework, ext, policy)
        print(
            json.dumps(
                {"c1": bs.c1, "c2": bs.c2, "c3": bs.c3, "total_sets": bs.total_sets}
            )
        )
        return EXIT_OK
    if args.mode == "approx":
        prefs = compute_approx(framework, ext, policy, seed=args.seed)
        sets = [pref_set_strings(prefs)]
    else:
        collection = compute_all(framework, ext, policy, set_cap=args.set_cap)
        sets = collection_strings(collection)
    if args.format == "json":
        print(json.dumps({"extension": sorted(ext), "preference_sets": sets}))
    else:
        for s in sets:
            print(",".join(s))
    return EXIT_OK


def _cmd_verify(args) -> int:
    framework = _load_framework(args.input)
    ext = parse_extension(args.extension)
    collection = _load_collection(args.prefs)
    report = verify_collection(
        framework,
        ext,
        Semantics(args.semantics),
        collection,
        VerifyMethod(args.method),
    )
    print(json.dumps(report.to_json()))
    return EXIT_OK


def _cmd_filter(args) -> int:
    c1 = _load_collection(args.prefs1)
    c2 = _load_collection(args.prefs2)
    fn = unique_preferences if args.mode == "unique" else common_preferences
    print(",".join(pref_set_strings(fn(c1, c2))))
    return EXIT_OK


def _cmd_generate(args) -> int:
    config = GeneratorConfig(
        size=args.size,
        attack_prob=args.attack_prob,
        seed=args.seed,
        allow_self_attacks=args.allow_self_attacks,
    )
    if args.require:
        framework, _ = sample_instance(config, Semantics(args.require))
    else:
        framework = random_aaf(config)
    sys.stdout.write(serialize(framework, "apx"))
    return EXIT_OK


def _cmd_bench(args) -> int:
    with open(args.config) as fh:
        config = bench_mod.SweepConfig.from_json(json.load(fh))
    result = bench_mod.run_sweep(config)
    bench_mod.write_csv(result.rows, args.out)
    bench_mod.write_sidecar(config, result, args.out + ".json")
    print(f"wrote {len(result.rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afprefs",
        description="Argumentation framework solving, preference inference "
        "and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="enumerate extensions of a framework")
    p.add_argument("--input", required=True, help="APX (or .tgf) file")
    p.add_argument(
        "--semantics", required=True, choices=[s.value for s in Semantics]
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("infer", help="infer justifying preference sets")
    p.add_argument("--input", required=True)
    p.add_argument("--extension", required=True, help='comma-separated, "" for empty')
    p.add_argument("--mode", choices=["exhaustive", "approx"], default="exhaustive")
    p.add_argument("--policy", choices=sorted(_POLICIES), default="unattacked")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--set-cap", type=int, default=DEFAULT_SET_CAP)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_infer)

    p = sub.add_parser("verify", help="verify preference sets against an extension")
    p.add_argument("--input", required=True)
    p.add_argument("--extension", required=True)
    p.add_argument(
        "--semantics", required=True, choices=["grounded", "preferred", "stable"]
    )
    p.add_argument("--prefs", required=True, help="JSON file of preference sets")
    p.add_argument("--method", choices=["removal", "reversal"], required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("filter", help="unique/common preferences of two collections")
    p.add_argument("--mode", choices=["unique", "common"], required=True)
    p.add_argument("--prefs1", required=True)
    p.add_argument("--prefs2", required=True)
    p.set_defaults(func=_cmd_filter)

    p = sub.add_parser("generate", help="random framework in APX format")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--attack-prob", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-self-attacks", action="store_true")
    p.add_argument(
        "--require",
        choices=["grounded", "preferred", "stable"],
        help="rejection-sample until this semantics has a usable extension",
    )
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="run a sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (
        NotConflictFreeError,
        UnknownArgumentError,
        SemanticsScopeError,
        SampleBudgetError,
        CollectionCapError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
