#!/usr/bin/env python
# encoding: utf-8

import multiprocessing

from specwalk.specwalk import cmd


if __name__ == "__main__":
    multiprocessing.freeze_support()
    cmd()
