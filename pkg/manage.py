"""Командная строка симулятора (Django management)."""
import sys

from sim.cli import cli


def main():
    sys.exit(cli(sys.argv))


if __name__ == "__main__":
    main()
