"""Command-line interface.

Subcommands: search (match listing as TSV), density (candidate-density
experiment as CSV), bench (timing experiment as CSV), gen (random text
files).  Exit codes: 0 success, 1 I/O error, 2 usage error.  The MDMATCH_SEED
environment variable supplies a default seed; explicit flags win.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from collections import Counter

from .core import SearchParams, normalize_params
from .counting import scan_candidates
from .ingest import extract_patterns, gen_random_text, read_fasta
from .oracle import permutation_probability
from .search import Matcher, parallel_filtered_search
from .verify import verify_with_witness

USAGE_ERROR = 2
IO_ERROR = 1


def _env_seed() -> int:
    value = os.environ.get("MDMATCH_SEED", "")
    try:
        return int(value) if value else 0
    except ValueError:
        return 0


def _params_for(m: int, alpha: int | None, beta: int | None) -> SearchParams:
    # Definitional maxima unless overridden.
    params = SearchParams(alpha if alpha is not None else m // 2,
                          beta if beta is not None else m)
    return normalize_params(params, m)


def _load_records(path: str, raw: bool):
    with open(path, "rb") as fh:
        return read_fasta(fh, raw=raw)


def _load_patterns(args) -> list[str]:
    if args.pattern is not None:
        return [args.pattern]
    with open(args.pattern_file, "rb") as fh:
        data = fh.read()
    if data.startswith(b">"):
        return [rec.data for rec in read_fasta(data)]
    return [line.strip().decode("latin-1")
            for line in data.splitlines() if line.strip()]


def _experiment_text(args, parser) -> tuple[str, int]:
    """Text plus its alphabet size, from a file or a generated random text."""
    if args.random is not None:
        n, sigma, seed = args.random
        try:
            return gen_random_text(n, sigma, seed), sigma
        except ValueError as exc:
            parser.error(str(exc))
    records = _load_records(args.text_file, raw=False)
    if len(records) > 1:
        print(f"note: using first of {len(records)} records", file=sys.stderr)
    text = records[0].data
    return text, len(set(text))


def cmd_search(args, parser) -> int:
    patterns = _load_patterns(args)
    if not patterns:
        parser.error("no patterns given")
    if not args.raw:
        # read_fasta upper-cases sequence data; fold patterns the same way
        patterns = [p.upper() for p in patterns]
    records = _load_records(args.text_file, raw=args.raw)
    lines = []
    for rec in records:
        matcher = Matcher(rec.data)
        for pid, pattern in enumerate(patterns):
            if not pattern:
                parser.error("empty pattern")
            if len(pattern) > len(rec.data):
                continue
            params = _params_for(len(pattern), args.alpha, args.beta)
            if args.threads > 1:
                occs = parallel_filtered_search(pattern, rec.data, params,
                                                threads=args.threads)
            else:
                occs = matcher.find(pattern, params)
            for occ in occs:
                fields = [str(pid), rec.id, str(occ.position)]
                if args.witness:
                    blocks = verify_with_witness(pattern, rec.data, occ.position, params)
                    fields.append(" ".join(b.token() for b in blocks))
                lines.append((pid, rec.id, occ.position, "\t".join(fields)))
    lines.sort(key=lambda item: item[:3])
    for line in lines:
        print(line[3])
    return 0


def cmd_density(args, parser) -> int:
    text, sigma = _experiment_text(args, parser)
    if args.length > len(text):
        parser.error("pattern length exceeds text length")
    params = _params_for(args.length, args.alpha, args.beta)
    patterns = extract_patterns(text, args.length, args.count, args.seed)
    matcher = Matcher(text)
    density_sum = 0.0
    match_sum = 0
    prob_sum = 0.0
    for pattern in patterns:
        stats = matcher.stats(pattern, params)
        density_sum += stats.candidate_density
        match_sum += stats.matches
        prob_sum += permutation_probability(Counter(pattern), args.length, sigma)
    count = len(patterns)
    print("m,sigma,count,mean_candidate_density,mean_match_count,theoretical_probability")
    print(f"{args.length},{sigma},{count},{density_sum / count:.8g},"
          f"{match_sum / count:.8g},{prob_sum / count:.8g}")
    return 0


def cmd_bench(args, parser) -> int:
    text, _sigma = _experiment_text(args, parser)
    lengths = args.lengths
    matcher = Matcher(text)
    print("m,algorithm,mean_ms,candidates_per_position")
    for m in lengths:
        if m > len(text):
            parser.error("pattern length exceeds text length")
        params = _params_for(m, args.alpha, args.beta)
        patterns = extract_patterns(text, m, args.count, args.seed)
        positions = len(text) - m + 1
        density = 0.0
        for pattern in patterns:
            p_arr = matcher._encode_pattern(pattern)
            density += len(scan_candidates(p_arr, matcher._t_arr, matcher.alphabet.size))
        density /= len(patterns) * positions
        algos = [("filtered", matcher.find)]
        if args.baseline:
            algos.append(("scan_all", matcher.scan_all))
        for name, fn in algos:
            elapsed = 0.0
            for _ in range(args.runs):
                for pattern in patterns:
                    t0 = time.perf_counter()
                    fn(pattern, params)
                    elapsed += time.perf_counter() - t0
            mean_ms = 1000.0 * elapsed / (args.runs * len(patterns))
            print(f"{m},{name},{mean_ms:.3f},{density:.8g}")
    return 0


def cmd_gen(args, parser) -> int:
    if args.sigma < 2 or args.sigma > 64:
        parser.error("sigma must be between 2 and 64 for generated files")
    if args.n < 1:
        parser.error("n must be >= 1")
    text = gen_random_text(args.n, args.sigma, args.seed)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(text)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad length list: {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"bad length list: {text!r}")
    return values


def _add_experiment_source(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--text-file", metavar="FILE", help="FASTA or raw text file")
    group.add_argument("--random", nargs=3, type=int, metavar=("N", "SIGMA", "SEED"),
                       help="generate a uniform random text instead of reading a file")


def _add_params(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", type=int, default=None,
                     help="max half-length of a translocated factor pair "
                          "(default: floor(m/2))")
    sub.add_argument("--beta", type=int, default=None,
                     help="max length of an inverted factor (default: m)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdmatch",
        description="Find pattern occurrences up to factor translocations and inversions.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_search = subs.add_parser("search", help="list matches as TSV")
    pg = p_search.add_mutually_exclusive_group(required=True)
    pg.add_argument("-p", "--pattern", help="pattern given inline")
    pg.add_argument("--pattern-file", metavar="FILE",
                    help="patterns from a file (FASTA or one per line)")
    _add_params(p_search)
    p_search.add_argument("--witness", action="store_true",
                          help="append the block decomposition of each match")
    p_search.add_argument("--raw", action="store_true",
                          help="treat the text file as verbatim bytes, not FASTA")
    p_search.add_argument("--threads", type=int, default=1,
                          help="chunked parallel scan with this many workers")
    p_search.add_argument("text_file", metavar="TEXT", help="text file to search")
    p_search.set_defaults(func=cmd_search)

    p_density = subs.add_parser("density", help="candidate-density experiment (CSV)")
    _add_experiment_source(p_density)
    p_density.add_argument("-m", "--length", type=int, required=True, help="pattern length")
    p_density.add_argument("--count", type=int, default=200,
                           help="number of extracted patterns (default 200)")
    _add_params(p_density)
    p_density.add_argument("--seed", type=int, default=_env_seed(),
                           help="pattern-extraction seed (default MDMATCH_SEED or 0)")
    p_density.set_defaults(func=cmd_density)

    p_bench = subs.add_parser("bench", help="timing experiment (CSV)")
    _add_experiment_source(p_bench)
    p_bench.add_argument("-m", "--lengths", type=_int_list, required=True,
                         help="comma-separated pattern lengths, e.g. 8,16,32")
    p_bench.add_argument("--count", type=int, default=200,
                         help="number of extracted patterns per length (default 200)")
    p_bench.add_argument("--runs", type=int, default=1,
                         help="repeat the timed pattern set this many times")
    _add_params(p_bench)
    p_bench.add_argument("--baseline", action="store_true",
                         help="also time the verify-everywhere baseline")
    p_bench.add_argument("--seed", type=int, default=_env_seed(),
                         help="pattern-extraction seed (default MDMATCH_SEED or 0)")
    p_bench.set_defaults(func=cmd_bench)

    p_gen = subs.add_parser("gen", help="write a seeded uniform random text file")
    p_gen.add_argument("-n", type=int, required=True, help="text length in symbols")
    p_gen.add_argument("--sigma", type=int, required=True, help="alphabet size (2..64)")
    p_gen.add_argument("--seed", type=int, default=_env_seed(),
                       help="generator seed (default MDMATCH_SEED or 0)")
    p_gen.add_argument("-o", "--out", required=True, help="output path")
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
