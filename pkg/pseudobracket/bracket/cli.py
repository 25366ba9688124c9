import sys
from pseudobracket.diagram import load_diagram
from pseudobracket.utils import (ArgumentParser, OutputEnvelope, add_common_arguments,
                                 run_guarded)
from .bracket import bracket, normalized_bracket


def add_arguments(parser):
    parser.add_argument(
            "diagram", type=str,
            help="Path of the diagram, .pd (text PD) or .json")
    parser.add_argument(
            "--normalized", "-N", action='store_true',
            help="Print the normalized bracket (-A^-3)^w <K>")
    parser.add_argument(
            "--limit", "-l", type=int,
            help="Crossing cap of the naive engine (only with --engine naive)")
    parser.add_argument(
            "--serial", "-s", action='store_true',
            help="Flag to disable multiprocessing in the naive engine "
                 "(only with --engine naive)")
    parser.add_argument(
            "--nprocs", "-n", type=int,
            help="Number of worker processes of the naive engine "
                 "(only with --engine naive)")
    add_common_arguments(parser)


NAIVE_OPTIONS = ("limit", "serial", "nprocs")


def run(args):
    if args.engine != "naive":
        given = [f"--{name}" for name in NAIVE_OPTIONS
                 if getattr(args, name) not in (None, False)]
        if given:
            raise ValueError(f"{', '.join(given)} only apply to --engine naive")
    diagram = load_diagram(args.diagram)
    options = {"verbose": args.verbose}
    if args.engine == "naive":
        # The pool is used only when --nprocs is given
        options.update(limit=args.limit,
                       serial=args.serial or args.nprocs is None,
                       nprocs=args.nprocs)
    compute = normalized_bracket if args.normalized else bracket
    poly = compute(diagram, args.engine, **options)
    payload = {"diagram": args.diagram,
               "normalized": args.normalized,
               "engine": args.engine,
               "crossings": diagram.n_crossings,
               "polynomial": poly.to_json(),
               "text": str(poly)}
    return OutputEnvelope(args.format, str(poly), payload)


def main(argv=None):
    parser = ArgumentParser(
            description="Pseudo bracket polynomial of a PD diagram")
    add_arguments(parser)
    args = parser.parse_args(argv)
    sys.exit(run_guarded(run, args))


if __name__ == "__main__":
    main()
