# encoding: utf-8

from decimal import Decimal

import numpy as np
import pytest

from specwalk.__version__ import __version__
from specwalk._report import ReportDocument, digest_text, dumps_json, to_json_value

from .common import load_json


class Test_digest_text(object):
    def test_normal(self):
        digest = digest_text("Bg\n")

        assert digest.startswith("sha256:")
        assert len(digest) == len("sha256:") + 64
        assert digest == digest_text(b"Bg\n")
        assert digest != digest_text("Bw\n")


class Test_to_json_value(object):
    @pytest.mark.parametrize(
        ["value", "expected"],
        [
            [float("inf"), -1],
            [float("nan"), None],
            [0.5, Decimal("0.5")],
            [np.float64(0.25), Decimal("0.25")],
            [np.int64(3), 3],
            [np.bool_(True), True],
            [True, True],
            [(1, 2.0), [1, Decimal("2")]],
            [{1: [float("inf")]}, {"1": [-1]}],
            ["text", "text"],
        ],
    )
    def test_normal(self, value, expected):
        assert to_json_value(value) == expected

    def test_normal_precision(self):
        assert to_json_value(0.1) == Decimal("0.10000000000000001")


class Test_dumps_json(object):
    def test_normal(self):
        expected = '{\n    "a": [\n        0.5\n    ],\n    "b": 1\n}'

        assert dumps_json({"b": 1, "a": [0.5]}) == expected


class Test_ReportDocument(object):
    def test_normal(self, tmpdir):
        report = ReportDocument("analyze")
        report.set_input_digest(digest_text("Bg"))
        report.add_record({"a": 0, "b": 2, "strongly_cospectral": True})
        report.add_certificate({"kind": "strongly_cospectral", "verdict": True})
        report.set_extra("mode", "both")

        file_path = str(tmpdir.join("report.json"))
        report.write(file_path)
        document = load_json(file_path)

        assert document["schema"] == "specwalk/1"
        assert document["version"] == __version__
        assert document["command"] == "analyze"
        assert document["input_digest"] == digest_text("Bg")
        assert document["records"] == [{"a": 0, "b": 2, "strongly_cospectral": True}]
        assert document["certificates"][0]["verdict"] is True
        assert document["mode"] == "both"
        assert document["timing"]["elapsed_seconds"] >= 0
        assert len(report.records) == 1
