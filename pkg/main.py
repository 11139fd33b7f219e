#!/usr/bin/env python3
"""
unicellular: planted unicellular and bicellular maps
Command-line entry point for the bijection, enumeration and RNA rewiring tools.
"""

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.app import app


def main():
    app()


if __name__ == "__main__":
    main()
