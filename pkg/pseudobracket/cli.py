import sys
from pseudobracket.utils import ArgumentParser, run_guarded
from pseudobracket.bracket import cli as bracket_cli
from pseudobracket.obstruction import cli as scan_cli
from pseudobracket.moves import cli as fuzz_cli
from pseudobracket.ingest import cli as ingest_cli

COMMANDS = {
    "bracket": (bracket_cli, "Pseudo bracket polynomial of a PD diagram"),
    "scan": (scan_cli, "Cosmetic crossing obstruction scan"),
    "fuzz": (fuzz_cli, "Bracket invariance along a random move walk"),
    "ingest": (ingest_cli, "KnotInfo PD notation to text PD"),
}


def build_parser():
    parser = ArgumentParser(
            prog="pseudobracket",
            description="Pseudo bracket polynomial tools")
    commands = parser.add_subparsers(dest="command", metavar="command",
                                     parser_class=ArgumentParser)
    commands.required = True
    for name, (module, summary) in COMMANDS.items():
        sub = commands.add_parser(name, help=summary, description=summary)
        module.add_arguments(sub)
        sub.set_defaults(run=module.run)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    sys.exit(run_guarded(args.run, args))


if __name__ == "__main__":
    main()
