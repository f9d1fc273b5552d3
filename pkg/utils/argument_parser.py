import argparse
import sys

import constants


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 means an invalid model here, so usage errors exit with EXIT_USAGE"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(constants.EXIT_USAGE, f"{self.prog}: error: {message}\n")


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def positive_float(value: str) -> float:
    number = float(value)
    if number <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return number
