# encoding: utf-8

"""
Entry point for running the test suite from a module:
``scan --jobs N`` tests start worker processes, which need an importable
``__main__`` on platforms that spawn instead of fork.
"""

import multiprocessing
import sys

import pytest


if __name__ == "__main__":
    multiprocessing.freeze_support()
    sys.exit(pytest.main(sys.argv[1:]))
