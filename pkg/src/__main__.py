"""Main entry point for running the polarity tools as a module."""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
