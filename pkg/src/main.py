"""CLI entry point for the array P system toolkit."""

import argparse
import sys
from pathlib import Path

from .arrays.grid import Direction, parse_grid, render_ascii
from .exporters.formatter import TextFormatter
from .exporters.report_exporter import ReportExporter
from .language.enumerator import Verdict, accepts, collect_outputs, enumerate_label_language
from .language.words import as_word
from .membrane.runner import replay, run_random
from .oracle import verification
from .parsers.grammar_parser import load_cfg, load_machine, load_reg_grammar
from .parsers.system_parser import load_system
from .parsers.trace_parser import load_trace
from .shapes.generators import gen_run, gen_star, gen_swastika, gen_tape
from .translate.grammars import cf_to_aps, eliminate_self_recursion, reg_to_aps
from .translate.turing import tm_to_aps
from .utils.config import EngineConfig
from .utils.exceptions import ArrayPSystemError, ValidationError
from .utils.logger import setup_logger


ACCEPTS_EXIT = {Verdict.YES: 0, Verdict.NO: 1, Verdict.UNKNOWN: 2}
VERIFY_EXIT = {
    verification.Verdict.MATCH: 0,
    verification.Verdict.MISMATCH: 1,
    verification.Verdict.INCONCLUSIVE: 2,
}


def _bounds_parent() -> argparse.ArgumentParser:
    """Search-bound flags shared by every searching command; unset flags fall back to APS_* settings."""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("search bounds")
    group.add_argument('--max-label-len', type=int, default=None, help='Longest label word explored (default: 16)')
    group.add_argument('--max-steps', type=int, default=None, help='Longest computation explored (default: 10000)')
    group.add_argument('--max-cells', type=int, default=None, help='Largest array allowed (default: 10000)')
    group.add_argument('--max-arrays', type=int, default=None, help='Most arrays in one configuration (default: 64)')
    group.add_argument('--max-states', type=int, default=None, help='Most search states remembered (default: 500000)')
    group.add_argument('--jobs', type=int, default=None, help='Worker processes for the search (default: 1)')
    return parent


def _source_group(parser: argparse.ArgumentParser, with_example: bool = False) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--reg', type=str, help='Regular grammar file (A -> a B / A -> a)')
    source.add_argument('--cfg', type=str, help='Greibach normal form grammar file')
    source.add_argument('--tm', type=str, help='Turing machine file (q,a -> p,b,R)')
    if with_example:
        source.add_argument('--system', type=str, help='.aps file to compare with a closed form (needs --example)')
    parser.add_argument('--alphabet', type=str, default='a,b',
                        help='Ordered input alphabet for --tm, comma separated (default: a,b)')


def parse_arguments(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Labelled 8-directional array P systems: run, enumerate, translate and verify",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Label words of the a^n b^n system up to length 10
  python -m src.main enumerate corpus/pi5.aps --max-label-len 10

  # Star pictures collected by the first example system
  python -m src.main outputs corpus/pi1.aps --max-label-len 32

  # One random computation, reproducible by seed
  python -m src.main run corpus/pi5.aps --seed 7

  # Compile a regular grammar and compare with its oracle up to length 6
  python -m src.main verify --reg corpus/grammars/astar_b.txt --k 6
        """
    )
    parser.add_argument(
        '--log-level',
        type=str,
        default=None,
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
        help='Logging level (default: INFO or APS_LOG_LEVEL)'
    )
    parser.add_argument('--version', action='version', version='Array P System Toolkit v1.0.0')

    bounds = _bounds_parent()
    commands = parser.add_subparsers(dest='command', required=True)

    run = commands.add_parser('run', help='Follow one seeded random computation')
    run.add_argument('system', type=str, help='.aps file')
    run.add_argument('--seed', type=int, default=0, help='Random seed (default: 0)')
    run.add_argument('--max-steps', type=int, default=None, help='Step budget (default: 10000)')
    run.add_argument('--trace-out', type=str, default=None, help='Also write the trace to this file')

    rep = commands.add_parser('replay', help='Re-apply a recorded trace and print the final configuration')
    rep.add_argument('system', type=str, help='.aps file')
    rep.add_argument('trace', type=str, help='Trace file written by run')

    enum = commands.add_parser('enumerate', parents=[bounds], help='List label words within bounds')
    enum.add_argument('system', type=str, help='.aps file')

    acc = commands.add_parser('accepts', parents=[bounds], help='Decide one word: exit 0 yes, 1 no, 2 unknown')
    acc.add_argument('system', type=str, help='.aps file')
    acc.add_argument('word', type=str, help="Label word ('aab', 'a1 a2' or '_' for the empty word)")

    out = commands.add_parser('outputs', parents=[bounds], help='Render the output arrays of accepted computations')
    out.add_argument('system', type=str, help='.aps file')

    render = commands.add_parser('render', help='Render a system, a grid file or a named shape')
    target = render.add_mutually_exclusive_group(required=True)
    target.add_argument('system', type=str, nargs='?', help='.aps file (renders its initial configuration)')
    target.add_argument('--grid', type=str, help='Grid file to normalize and render')
    target.add_argument('--shape', type=str, choices=['star', 'swastika', 'run', 'tape'], help='Shape family')
    render.add_argument('--size', type=int, default=2, help='Arm length or run length (default: 2)')
    render.add_argument('--symbol', type=str, default='x', help='Cell symbol, or the word for tape (default: x)')
    render.add_argument('--direction', type=int, default=0, help='Direction of a run in degrees (default: 0)')

    trans = commands.add_parser('translate', help='Compile a grammar or machine into an .aps file')
    _source_group(trans)
    trans.add_argument('-o', '--output', type=str, default=None, help='Output .aps file (default: stdout)')

    ver = commands.add_parser('verify', parents=[bounds], help='Compare a compiled system with its oracle')
    _source_group(ver, with_example=True)
    ver.add_argument('--example', type=str, default=None, help='Closed form name for --system (pi1, pi2, pi5)')
    ver.add_argument('--k', type=int, required=True, help='Compare all words up to this length')
    ver.add_argument('--report', action='store_true', help='Write a markdown report into the output directory (APS_OUTPUT_DIR)')
    ver.add_argument('--report-dir', type=str, default=None, help='Write a markdown report into this directory instead')

    return parser.parse_args(argv)


def _config(args) -> EngineConfig:
    return EngineConfig.from_env(
        max_label_len=getattr(args, 'max_label_len', None),
        max_steps=getattr(args, 'max_steps', None),
        max_cells_per_array=getattr(args, 'max_cells', None),
        max_total_arrays=getattr(args, 'max_arrays', None),
        max_states=getattr(args, 'max_states', None),
        jobs=getattr(args, 'jobs', None),
        log_level=args.log_level,
    )


def _alphabet(text: str) -> list:
    return [sym for sym in text.replace(",", " ").split() if sym]


def cmd_run(args, config: EngineConfig) -> int:
    s = load_system(args.system)
    trace = run_random(s, args.seed, config.max_steps)
    text = TextFormatter.format_trace(trace)
    if args.trace_out:
        Path(args.trace_out).write_text(text + "\n", encoding="utf-8")
    print(text)
    print()
    print(TextFormatter.format_configuration(trace.final, s))
    return 0


def cmd_replay(args, config: EngineConfig) -> int:
    s = load_system(args.system)
    final = replay(s, load_trace(args.trace, s))
    print(TextFormatter.format_configuration(final, s))
    return 0


def cmd_enumerate(args, config: EngineConfig) -> int:
    s = load_system(args.system)
    result = enumerate_label_language(s, config.bounds(), config.jobs)
    print(TextFormatter.format_words(result))
    return 0


def cmd_accepts(args, config: EngineConfig) -> int:
    s = load_system(args.system)
    verdict = accepts(s, as_word(args.word), config.bounds(), config.jobs)
    print(verdict.value)
    return ACCEPTS_EXIT[verdict]


def cmd_outputs(args, config: EngineConfig) -> int:
    s = load_system(args.system)
    arrays = collect_outputs(s, config.bounds(), config.jobs)
    if arrays:
        print(TextFormatter.format_arrays(arrays))
    return 0


def cmd_render(args, config: EngineConfig) -> int:
    if args.grid:
        print(render_ascii(parse_grid(Path(args.grid).read_text(encoding="utf-8"))))
    elif args.shape:
        generators = {
            'star': lambda: gen_star(args.size, args.symbol),
            'swastika': lambda: gen_swastika(args.size, args.symbol),
            'run': lambda: gen_run(args.symbol, args.size, Direction.from_degrees(args.direction)),
            'tape': lambda: gen_tape(args.symbol),
        }
        try:
            print(render_ascii(generators[args.shape]()))
        except ValueError as e:
            raise ArrayPSystemError(str(e))
    else:
        s = load_system(args.system)
        print(TextFormatter.format_configuration(s.initial_configuration(), s))
    return 0


def cmd_translate(args, config: EngineConfig) -> int:
    if args.reg:
        system = reg_to_aps(eliminate_self_recursion(load_reg_grammar(args.reg)))
    elif args.cfg:
        system = cf_to_aps(load_cfg(args.cfg))
    else:
        system = tm_to_aps(load_machine(args.tm), _alphabet(args.alphabet))
    text = TextFormatter.format_system(system)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def cmd_verify(args, config: EngineConfig) -> int:
    bounds = config.bounds()
    if args.reg:
        report = verification.verify_regular(load_reg_grammar(args.reg), args.k, bounds, config.jobs)
    elif args.cfg:
        report = verification.verify_context_free(load_cfg(args.cfg), args.k, bounds, config.jobs)
    elif args.tm:
        report = verification.verify_machine(load_machine(args.tm), _alphabet(args.alphabet), args.k, bounds, config.jobs)
    else:
        if not args.example:
            raise ArrayPSystemError("--system needs --example naming its closed form")
        report = verification.verify_example(load_system(args.system), args.example, args.k, bounds, config.jobs)

    print("=" * 60)
    print(f"{report.translator} {report.source} (k={report.k})")
    print("=" * 60)
    for n, (engine, oracle) in report.counts_by_length().items():
        print(f"length {n:>3}: system {engine:>5}  reference {oracle:>5}")
    print(f"exhaustive: {str(report.exhaustive).lower()}")
    if report.truncated_by:
        print(f"truncated by: {', '.join(sorted(report.truncated_by))}")
    print(report.verdict.value)

    if args.report_dir or args.report:
        ReportExporter(Path(args.report_dir) if args.report_dir else config.output_dir).export(report)
    return VERIFY_EXIT[report.verdict]


COMMANDS = {
    'run': cmd_run,
    'replay': cmd_replay,
    'enumerate': cmd_enumerate,
    'accepts': cmd_accepts,
    'outputs': cmd_outputs,
    'render': cmd_render,
    'translate': cmd_translate,
    'verify': cmd_verify,
}


def main(argv=None) -> int:
    """Main entry point; returns the process exit status."""
    args = parse_arguments(argv)

    try:
        config = _config(args)
    except ArrayPSystemError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

    logger = setup_logger('aps', level=config.log_level)
    logger.debug(f"Configuration: {config}")

    try:
        return COMMANDS[args.command](args, config)

    except ValidationError as e:
        logger.error(f"Invalid system: {len(e.problems)} problem(s)")
        for problem in e.problems:
            print(f"  - {problem}", file=sys.stderr)
        return 1

    except ArrayPSystemError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return 1

    except KeyboardInterrupt:
        logger.warning("Interrupted by user")
        print("\n\nInterrupted.\n", file=sys.stderr)
        return 130

    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        print(f"\nUnexpected error: {e}\n", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
