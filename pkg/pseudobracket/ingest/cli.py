import sys
from pseudobracket.utils import ArgumentParser, OutputEnvelope, run_guarded
from .knotinfo import ingest


def add_arguments(parser):
    parser.add_argument(
            "csv", type=str,
            help="Path of a KnotInfo CSV export with Name and PD Notation columns")
    parser.add_argument(
            "name", type=str,
            help="Knot name, e.g. 3_1 or 11n1")
    parser.add_argument(
            "--format", "-f", type=str, default="text", choices=["text", "json"],
            help="Output format, defaults to text")


def run(args):
    text = ingest(args.csv, args.name)
    payload = {"name": args.name,
               "crossings": text.count("X("),
               "pd": text}
    return OutputEnvelope(args.format, text, payload)


def main(argv=None):
    parser = ArgumentParser(
            description="Convert a KnotInfo PD code to the text PD format")
    add_arguments(parser)
    args = parser.parse_args(argv)
    sys.exit(run_guarded(run, args))


if __name__ == "__main__":
    main()
