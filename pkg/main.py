"""
EDROD command-line entry point.
Usage:
    python main.py generate --kind 2d --seed 42 --output data.csv
    python main.py eval --input data.csv --label-column label
    python main.py --help
"""

import sys

from Edrod.Cli.Commands import Run


def main():
    sys.exit(Run(sys.argv[1:]))


if __name__ == '__main__':
    main()
