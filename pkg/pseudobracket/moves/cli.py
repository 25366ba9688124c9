import sys
from pseudobracket.diagram import load_diagram
from pseudobracket.utils import (ArgumentParser, ExitCode, OutputEnvelope,
                                 add_common_arguments, run_guarded)
from .moves import WALK_MOVES, parse_moves
from .fuzz import MoveFuzzer


def add_arguments(parser):
    parser.add_argument(
            "diagram", type=str,
            help="Path of the starting diagram, .pd or .json")
    parser.add_argument(
            "--moves", "-m", type=str, default="r1,r2,p1",
            help="Comma separated moves to draw from (r1, r1+, r1-, p1, r2)")
    parser.add_argument(
            "--steps", "-t", type=int, default=50,
            help="Number of walk steps, defaults to 50")
    parser.add_argument(
            "--seed", "-S", type=int, default=0,
            help="Random seed of the walk, defaults to 0")
    parser.add_argument(
            "--removals", "-r", action='store_true',
            help="Also draw kink removals")
    add_common_arguments(parser)


def run(args):
    moves = parse_moves(args.moves)
    fixed = sorted(m.value for m in moves if m not in WALK_MOVES)
    if fixed:
        raise ValueError(f"Moves {', '.join(fixed)} are only checked on the fixture corpus")
    if args.steps < 0:
        raise ValueError(f"Number of steps must be positive, got {args.steps}")
    diagram = load_diagram(args.diagram)
    fuzzer = MoveFuzzer(diagram, moves,
                        engine=args.engine,
                        removals=args.removals,
                        verbose=args.verbose)
    result = fuzzer.run(args.seed, args.steps)
    payload = result.to_dict()
    payload["diagram"] = args.diagram
    code = ExitCode.OK if result.passed else ExitCode.VIOLATION
    return OutputEnvelope(args.format, result.render(), payload, code)


def main(argv=None):
    parser = ArgumentParser(
            description="Check bracket invariance along a random move walk")
    add_arguments(parser)
    args = parser.parse_args(argv)
    sys.exit(run_guarded(run, args))


if __name__ == "__main__":
    main()
