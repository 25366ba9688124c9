import sys
from pseudobracket.diagram import load_diagram
from pseudobracket.utils import (ArgumentParser, OutputEnvelope, add_common_arguments,
                                 run_guarded)
from .obstruction import CrossingScanner, render_table


def add_arguments(parser):
    parser.add_argument(
            "diagram", type=str,
            help="Path of a classical knot diagram, .pd or .json")
    parser.add_argument(
            "--crossing", "-c", type=int,
            help="Only test this crossing (0-based index)")
    parser.add_argument(
            "--serial", "-s", action='store_true',
            help="Flag to disable multiprocessing over crossings")
    parser.add_argument(
            "--nprocs", "-n", type=int,
            help="Number of worker processes")
    add_common_arguments(parser)


def run(args):
    diagram = load_diagram(args.diagram)
    # The pool is used only when --nprocs is given
    scanner = CrossingScanner(diagram,
                              engine=args.engine,
                              serial=args.serial or args.nprocs is None,
                              nprocs=args.nprocs,
                              verbose=args.verbose)
    if args.crossing is not None:
        report = scanner.obstruct(args.crossing)
        payload = report.to_dict()
        payload["diagram"] = args.diagram
        text = "\n".join([render_table([report]),
                          f"<D_square> = {report.bracket_square}",
                          f"<D_+> = {report.bracket_plus}",
                          f"<D_-> = {report.bracket_minus}"])
        return OutputEnvelope(args.format, text, payload)
    reports = scanner.scan()
    payload = {"diagram": args.diagram,
               "engine": args.engine,
               "crossings": diagram.n_crossings,
               "reports": [r.to_dict() for r in reports]}
    return OutputEnvelope(args.format, render_table(reports), payload)


def main(argv=None):
    parser = ArgumentParser(
            description="Cosmetic crossing obstruction scan of a classical knot diagram")
    add_arguments(parser)
    args = parser.parse_args(argv)
    sys.exit(run_guarded(run, args))


if __name__ == "__main__":
    main()
