"""Command-line interface.

Every subcommand goes through the service client: either to a remote server
(``--server``) or to an in-process instance of the same app. Data output
lands on stdout; progress and timing notes land on stderr, so repeated runs
over an unchanged corpus produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import EXIT_USAGE, PaperRecError
from .service.client import ServiceClient
from .service.state import ServiceConfig

_LOCAL_ONLY_FLAGS = ("config", "corpus", "stoplist", "no_cache")


class _Parser(argparse.ArgumentParser):
    # usage mistakes exit with 1, not argparse's default 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # The same flags hang off the root parser and every subparser, so they
    # work on either side of the subcommand. Subparser copies default to
    # SUPPRESS so they only override the root values when actually given.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--config", metavar="PATH", default=default(None),
                        help="JSON config file")
    parser.add_argument("--corpus", metavar="PATH", default=default(None),
                        help="corpus file (line-delimited JSON)")
    parser.add_argument("--seed", type=int, metavar="N", default=default(None),
                        help="seed for sampling and generation")
    parser.add_argument("--server", metavar="URL", default=default(None),
                        help="talk to a running server instead of in-process")
    parser.add_argument("--format", choices=("text", "tsv", "json"), default=default("text"),
                        help="output format (default: text)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paperrec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"paperrec {__version__}")
    _add_global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p_ingest = sub.add_parser("ingest", help="parse saved pages into the corpus", parents=[common])
    p_ingest.add_argument("--site", required=True, choices=("ieee_xplore", "acm_dl"))
    p_ingest.add_argument("--venue", required=True)
    p_ingest.add_argument("--year", required=True, type=int)
    p_ingest.add_argument(
        "--listing", action="append", default=[], metavar="PATH",
        help="saved listing page (repeatable)",
    )
    p_ingest.add_argument("--pages", metavar="DIR", help="directory of saved paper pages")
    p_ingest.add_argument("--fixtures", metavar="DIR", help="root directory for link resolution")
    p_ingest.add_argument("--venue-areas", metavar="PATH", help="venue<TAB>area table")
    p_ingest.add_argument("--append", action="store_true", help="append to the corpus file")
    p_ingest.add_argument("--fail-threshold", type=float, default=0.5, metavar="F")

    p_index = sub.add_parser("index", help="build or refresh the vector index", parents=[common])
    p_index.add_argument("--stoplist", metavar="PATH", help="stop-word list (one word per line)")
    p_index.add_argument("--no-cache", action="store_true", help="ignore and skip the on-disk cache")
    p_index.add_argument("--force", action="store_true", help="rebuild even if cached")
    p_index.add_argument("--dump-terms", action="store_true", help="print id<TAB>term lines")

    p_rec = sub.add_parser("recommend", help="recommend papers for an author", parents=[common])
    p_rec.add_argument("author", metavar="AUTHOR", help="author name, e.g. 'Jane Doe' or 'J. Doe'")
    p_rec.add_argument("--top-n", type=int, metavar="N", help="number of papers (default from config)")
    p_rec.add_argument("--strategy", choices=("naive", "itemcf"), default="naive")

    p_eval = sub.add_parser("evaluate", help="classification-style accuracy on a labeled corpus", parents=[common])
    p_eval.add_argument("--per-area", required=True, type=int, metavar="N",
                        help="authors sampled per area")
    p_eval.add_argument("--top-n", type=int, metavar="N")
    p_eval.add_argument("--strategy", choices=("naive", "itemcf"), default="naive")

    sub.add_parser("stats", help="corpus and index statistics", parents=[common])

    p_synth = sub.add_parser("synth", help="generate a seeded synthetic corpus", parents=[common])
    p_synth.add_argument("--areas", required=True, type=int)
    p_synth.add_argument("--papers-per-area", required=True, type=int)
    p_synth.add_argument("--authors-per-area", required=True, type=int)
    p_synth.add_argument("--vocab-per-topic", type=int, default=60)
    p_synth.add_argument("--overlap", type=float, default=0.0)
    p_synth.add_argument("--out", metavar="PATH", help="target corpus file (default: --corpus)")
    p_synth.add_argument("--append", action="store_true")

    p_serve = sub.add_parser("serve", help="run the HTTP service", parents=[common])
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _build_config(args: argparse.Namespace) -> ServiceConfig:
    config = ServiceConfig.from_file(args.config) if args.config else ServiceConfig()
    return config.override(
        corpus=args.corpus,
        seed=args.seed,
        stoplist=getattr(args, "stoplist", None),
        no_cache=True if getattr(args, "no_cache", False) else None,
    )


def _client(args: argparse.Namespace) -> ServiceClient:
    if args.server:
        used = [flag for flag in _LOCAL_ONLY_FLAGS if getattr(args, flag, None)]
        if used:
            names = ", ".join("--" + flag.replace("_", "-") for flag in used)
            raise _usage_error(
                f"{names}: these configure the in-process engine and cannot be combined with --server"
            )
        return ServiceClient(server=args.server)
    return ServiceClient(config=_build_config(args))


def _usage_error(message: str) -> PaperRecError:
    from .errors import InvalidConfig

    return InvalidConfig(message)


def _emit_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))


def _emit_pairs(pairs: list[tuple[str, object]]) -> None:
    for key, value in pairs:
        print(f"{key}\t{value}")


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _cmd_ingest(args, client: ServiceClient) -> int:
    body = {
        "site": args.site,
        "venue": args.venue,
        "year": args.year,
        "listings": args.listing,
        "pages_dir": args.pages,
        "fixtures": args.fixtures,
        "venue_areas": args.venue_areas,
        "append": args.append,
        "fail_threshold": args.fail_threshold,
    }
    data = client.post("/ingest", body)
    _note(f"elapsed: {data['elapsed_seconds']:.2f}s")
    if args.format == "json":
        _emit_json(data)
    elif args.format == "tsv":
        _emit_pairs([(key, data[key]) for key in
                     ("pages_parsed", "records_written", "malformed_skipped", "corpus")])
    else:
        print(
            f"parsed {data['pages_parsed']} pages, wrote {data['records_written']} records "
            f"({data['malformed_skipped']} skipped) to {data['corpus']}"
        )
    return 0


def _cmd_index(args, client: ServiceClient) -> int:
    data = client.post("/index", {"force": args.force, "dump_terms": args.dump_terms})
    _note(f"elapsed: {data['elapsed_seconds']:.2f}s")
    summary = (
        f"indexed {data['papers']} papers, {data['vocabulary_size']} terms, "
        f"pairwise max {data['pairwise_max']:.6f} "
        f"({'from cache' if data['cached'] else 'rebuilt'})"
    )
    if args.dump_terms:
        _note(summary)
        for line in data["terms"] or []:
            print(line)
        return 0
    if args.format == "json":
        data.pop("terms", None)
        _emit_json(data)
    elif args.format == "tsv":
        _emit_pairs([
            ("papers", data["papers"]),
            ("vocabulary_size", data["vocabulary_size"]),
            ("pairwise_max", repr(data["pairwise_max"])),
            ("cached", str(data["cached"]).lower()),
        ])
    else:
        print(summary)
    return 0


def _rec_lines(items: list[dict]) -> list[str]:
    return [
        f"{item['rank']}\t{item['paper']}\t{item['score']:.6f}\t{item['centroid']}\t{item['title']}"
        for item in items
    ]


def _cmd_recommend(args, client: ServiceClient) -> int:
    body = {"author": args.author, "n": args.top_n, "strategy": args.strategy}
    data = client.post("/recommend", body)
    if args.format == "json":
        _emit_json(data)
        return 0
    lines = _rec_lines(data["items"])
    if args.format == "text":
        print(f"recommendations for {data['author']} ({data['strategy']}):")
        if not lines:
            _note("no candidate scored above zero")
    for line in lines:
        print(line)
    return 0


def _cmd_evaluate(args, client: ServiceClient) -> int:
    body = {
        "per_area": args.per_area,
        "top_n": args.top_n,
        "seed": args.seed,
        "strategy": args.strategy,
    }
    data = client.post("/evaluate", body)
    if args.format == "json":
        data.pop("table", None)
        data.pop("machine", None)
        _emit_json(data)
    elif args.format == "tsv":
        for line in data["machine"]:
            print(line)
    else:
        print(data["table"])
        print()
        for line in data["machine"]:
            print(line)
    return 0


def _cmd_stats(args, client: ServiceClient) -> int:
    data = client.get("/stats")
    if args.format == "json":
        _emit_json(data)
        return 0
    pairs = [
        ("papers", data["papers"]),
        ("authors", data["authors"]),
        ("vocabulary_size", data["vocabulary_size"]),
        ("pairwise_max", repr(data["pairwise_max"])),
        ("rating_entries", data["rating_entries"]),
        ("areas", ",".join(f"{area}:{count}" for area, count in sorted(data["areas"].items()))),
    ]
    if args.format == "tsv":
        _emit_pairs(pairs)
    else:
        for key, value in pairs:
            print(f"{key}: {value}")
    return 0


def _cmd_synth(args, client: ServiceClient) -> int:
    body = {
        "areas": args.areas,
        "papers_per_area": args.papers_per_area,
        "authors_per_area": args.authors_per_area,
        "vocab_per_topic": args.vocab_per_topic,
        "overlap": args.overlap,
        "seed": args.seed,
        "corpus": args.out,
        "append": args.append,
    }
    data = client.post("/synth", body)
    if args.format == "json":
        _emit_json(data)
    elif args.format == "tsv":
        _emit_pairs([(key, data[key]) for key in ("records_written", "corpus")])
    else:
        print(f"wrote {data['records_written']} synthetic records to {data['corpus']}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(_build_config(args)), host=args.host, port=args.port)
    return 0


_HANDLERS = {
    "ingest": _cmd_ingest,
    "index": _cmd_index,
    "recommend": _cmd_recommend,
    "evaluate": _cmd_evaluate,
    "stats": _cmd_stats,
    "synth": _cmd_synth,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "serve":
            if args.server:
                raise _usage_error("serve runs its own server; --server does not apply")
            return _cmd_serve(args)
        return _HANDLERS[args.command](args, _client(args))
    except PaperRecError as exc:
        _note(f"error: {exc}")
        payload = exc.payload()
        for extra in ("suggestions", "candidates"):
            values = payload.get(extra)
            if values:
                _note(f"{extra}: " + "; ".join(str(v) for v in values))
        return exc.exit_code
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
