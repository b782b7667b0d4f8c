#!/usr/bin/env python3
"""
k-clique toolkit - Main Entry Point
Run this file with a subcommand, e.g. `python run.py count --input data/k6.txt --k 4`
"""

import os
import sys

from config import DATA_DIR, RESULTS_DIR


def check_dependencies():
    """Check if required dependencies are installed"""
    try:
        import joblib
        import numpy
        import pandas
        return True
    except ImportError as e:
        print(f"❌ Missing dependency: {e}", file=sys.stderr)
        print("Please run: pip install -r requirements.txt", file=sys.stderr)
        return False


def create_directories():
    """Create necessary directories"""
    for directory in [DATA_DIR, RESULTS_DIR]:
        os.makedirs(directory, exist_ok=True)


def main(argv=None):
    """Main function to run the command line"""
    if not check_dependencies():
        return 1
    create_directories()

    from cli import main as cli_main
    try:
        return cli_main(argv)
    except KeyboardInterrupt:
        print("\n👋 Stopped by user", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
