import sys
import json
import argparse
from enum import IntEnum
from dataclasses import dataclass
from pseudobracket.diagram import ValidationError, NotClassical


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    VALIDATION = 2
    VIOLATION = 3


class ArgumentParser(argparse.ArgumentParser):
    """
    argparse parser exiting with the usage code (1) on bad arguments
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(ExitCode.USAGE)


@dataclass
class OutputEnvelope:
    format: str
    text: str
    payload: object
    exit_code: ExitCode = ExitCode.OK

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.format == "json":
            stream.write(json.dumps(self.payload, indent=2) + "\n")
        elif self.text:
            stream.write(self.text + "\n")
        return int(self.exit_code)


def _validation_errors():
    # Imported here, the tool subpackages import this module
    from pseudobracket.bracket.bracket import TooLarge
    from pseudobracket.obstruction.obstruction import HasPseudoCrossings, MultiComponent
    return (ValidationError, NotClassical, TooLarge, HasPseudoCrossings, MultiComponent)


def exit_code_for(error):
    """
    Exit code of a library exception
    """
    if isinstance(error, _validation_errors()):
        return ExitCode.VALIDATION
    return ExitCode.USAGE


def run_guarded(run, args):
    """
    Run a command and turn library errors into exit codes
    """
    try:
        envelope = run(args)
    except (ValueError, IndexError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return int(exit_code_for(e))
    return envelope.emit()


def add_common_arguments(parser):
    parser.add_argument(
            "--format", "-f", type=str, default="text", choices=["text", "json"],
            help="Output format, defaults to text")
    parser.add_argument(
            "--engine", "-e", type=str, default="contract", choices=["contract", "naive"],
            help="Bracket engine, defaults to the contraction engine")
    parser.add_argument(
            "--verbose", "-V", type=int, default=0,
            help="Verbosity level on stderr, defaults to 0")
