"""Command line: parcour build | align | lexicon | serve."""

from __future__ import annotations

import argparse
import sys

from .config import load_settings
from .pipeline import format_table, run_align, run_build, run_lexicon


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="JSON config file")
    sub.add_argument("--corpus-dir", help="directory of edition files")
    sub.add_argument("--data-dir", help="directory for built artifacts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parcour",
        description="Word-align a verse-parallel corpus and explore it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="load the corpus, build indexes and stats")
    _add_common(p_build)

    p_align = sub.add_parser("align", help="write alignment files for language pairs")
    _add_common(p_align)
    p_align.add_argument("--pairs", action="append",
                         help="language pair 'lang1,lang2' (repeatable; default all pairs)")
    p_align.add_argument("--workers", type=int, help="process count for distinct pairs")
    p_align.add_argument("--em-iterations", type=int, help="EM iterations (default 5)")

    p_lex = sub.add_parser("lexicon", help="precompute lexicon files")
    _add_common(p_lex)
    p_lex.add_argument("--pairs", action="append",
                       help="language pair 'lang1,lang2' (repeatable; default all pairs)")

    p_serve = sub.add_parser("serve", help="start the HTTP API")
    _add_common(p_serve)
    p_serve.add_argument("--host")
    p_serve.add_argument("--port", type=int)
    p_serve.add_argument("--cache-capacity", type=int)
    p_serve.add_argument("--min-share", type=float)
    p_serve.add_argument("--em-iterations", type=int)
    p_serve.add_argument("--static-dir",
                         help="directory with the browser client (default: ./frontend if present)")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(
            args.config,
            corpus_dir=args.corpus_dir,
            data_dir=args.data_dir,
            workers=getattr(args, "workers", None),
            em_iterations=getattr(args, "em_iterations", None),
            min_share=getattr(args, "min_share", None),
            cache_capacity=getattr(args, "cache_capacity", None),
            host=getattr(args, "host", None),
            port=getattr(args, "port", None),
        )
    except Exception as e:
        print(f"error: bad configuration: {e}", file=sys.stderr)
        return 1

    try:
        if args.command == "build":
            print(format_table(run_build(settings)))
        elif args.command == "align":
            print(format_table(run_align(settings, args.pairs)))
        elif args.command == "lexicon":
            print(format_table(run_lexicon(settings, args.pairs)))
        elif args.command == "serve":
            from pathlib import Path

            import uvicorn

            from .service import create_app

            static_dir = getattr(args, "static_dir", None)
            if static_dir is None and Path("frontend", "index.html").exists():
                static_dir = "frontend"
            app = create_app(settings, static_dir=static_dir)
            print(f"serving on http://{settings.host}:{settings.port}")
            uvicorn.run(app, host=settings.host, port=settings.port, log_level="warning")
    except Exception as e:
        print(f"error: {args.command}: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
