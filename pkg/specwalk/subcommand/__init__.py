# encoding: utf-8

from ._analyze import AnalyzeCommand
from ._construct import ConstructCommand
from ._crosscheck import CrosscheckCommand
from ._scan import ScanCommand
from ._walk import WalkCommand
