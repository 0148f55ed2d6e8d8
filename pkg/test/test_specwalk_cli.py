# encoding: utf-8

import math

import pytest
from click.testing import CliRunner

from specwalk._const import ExitCode
from specwalk.specwalk import cmd

from .common import load_json, print_traceback
from .dataset import K2_GRAPH6, P3_EDGELIST, P3_GRAPH6, PETERSEN_GRAPH6, write_text


class Test_specwalk_help(object):
    @pytest.mark.parametrize(
        ["options", "expected"],
        [
            [["-h"], ExitCode.SUCCESS],
            [["analyze", "-h"], ExitCode.SUCCESS],
            [["scan", "-h"], ExitCode.SUCCESS],
            [["construct", "-h"], ExitCode.SUCCESS],
            [["construct", "join-path", "-h"], ExitCode.SUCCESS],
            [["construct", "rabbit-ear", "-h"], ExitCode.SUCCESS],
            [["walk", "-h"], ExitCode.SUCCESS],
            [["crosscheck", "-h"], ExitCode.SUCCESS],
            [["configure", "-h"], ExitCode.SUCCESS],
            [["--version"], ExitCode.SUCCESS],
        ],
    )
    def test_help(self, options, expected):
        runner = CliRunner()
        result = runner.invoke(cmd, options)
        assert result.exit_code == expected


class Test_specwalk_analyze(object):
    def test_normal_pair(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            file_path = write_text("p3.txt", P3_EDGELIST)
            result = runner.invoke(
                cmd, ["analyze", file_path, "--pair", "0", "2", "--json", "out/report.json"]
            )
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            document = load_json("out/report.json")

        assert document["command"] == "analyze"
        assert document["input_digest"].startswith("sha256:")
        assert document["graph"] == {"order": 3, "size": 2, "graph6": P3_GRAPH6}
        assert document["mode"] == "both"

        record = document["records"][0]
        assert (record["a"], record["b"]) == (0, 2)
        assert record["cospectral"] is True
        assert record["parallel"] is True
        assert record["strongly_cospectral"] is True
        assert record["strongly_cospectral_numeric"] is True
        assert record["sign_pattern"] == [1, -1, 1]
        assert record["symmetry_poly"] == ["-1/1", "0/1", "1/1"]

    def test_normal_all_pairs(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            result = runner.invoke(
                cmd, ["analyze", P3_GRAPH6, "--all-pairs", "--exact", "--json", "report.json"]
            )
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            document = load_json("report.json")

        assert len(document["records"]) == 3
        assert document["sc_classes"] == [[0, 2], [1]]
        assert "eigenvalues" not in document["records"][0]

    def test_normal_stdout(self):
        runner = CliRunner()
        result = runner.invoke(cmd, ["-q", "analyze", K2_GRAPH6, "--pair", "0", "1", "--numeric"])
        print_traceback(result)

        assert result.exit_code == ExitCode.SUCCESS
        assert '"strongly_cospectral_numeric": true' in result.output

    @pytest.mark.parametrize(
        ["options", "expected"],
        [
            [["analyze", P3_GRAPH6], ExitCode.USAGE_ERROR],
            [["analyze", P3_GRAPH6, "--pair", "0", "1", "--all-pairs"], ExitCode.USAGE_ERROR],
            [["analyze", "!!", "--pair", "0", "1"], ExitCode.USAGE_ERROR],
            [["analyze", P3_GRAPH6, "--pair", "0", "7"], ExitCode.USAGE_ERROR],
            [["analyze", P3_GRAPH6, "--pair", "1", "1"], ExitCode.USAGE_ERROR],
        ],
    )
    def test_abnormal(self, options, expected):
        runner = CliRunner()
        result = runner.invoke(cmd, options)
        print_traceback(result)

        assert result.exit_code == expected


class Test_specwalk_scan(object):
    def test_normal(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            file_path = write_text("graphs.g6", "{}\n{}\n\n{}\n".format(P3_GRAPH6, K2_GRAPH6, "Cr"))
            result = runner.invoke(cmd, ["scan", file_path, "--json", "report.json"])
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            document = load_json("report.json")

        assert "Bg 1 pairs [[0,2],[1]]" in result.output
        assert "A_ 1 pairs [[0,1]]" in result.output
        assert "Cr 2 pairs [[0,3],[1,2]]" in result.output
        assert document["target"] == "sc-pairs"
        assert document["pair_count"] == 4
        assert [record["line"] for record in document["records"]] == [1, 2, 4]

    def test_normal_petersen(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            file_path = write_text("petersen.g6", PETERSEN_GRAPH6 + "\n")

            result = runner.invoke(cmd, ["scan", file_path])
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS
            assert "{} 0 pairs".format(PETERSEN_GRAPH6) in result.output

            result = runner.invoke(cmd, ["scan", file_path, "--expect-some"])
            assert result.exit_code == ExitCode.PROPERTY_NOT_FOUND

            result = runner.invoke(cmd, ["scan", file_path, "--find", "cospectral-pairs"])
            assert result.exit_code == ExitCode.SUCCESS
            assert "{} 45 pairs".format(PETERSEN_GRAPH6) in result.output

    def test_normal_jobs(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            file_path = write_text(
                "graphs.g6", "\n".join([P3_GRAPH6, K2_GRAPH6, PETERSEN_GRAPH6, "!!"]) + "\n"
            )

            result = runner.invoke(cmd, ["scan", file_path, "--json", "serial.json"])
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            result = runner.invoke(cmd, ["scan", file_path, "-j", "2", "--json", "parallel.json"])
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            serial = load_json("serial.json")
            parallel = load_json("parallel.json")

        assert serial["records"] == parallel["records"]
        assert "error" in serial["records"][-1]

    def test_abnormal(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            result = runner.invoke(cmd, ["scan", "not_exist.g6"])

        assert result.exit_code == ExitCode.USAGE_ERROR


class Test_specwalk_construct(object):
    def test_normal_rabbit_ear(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            result = runner.invoke(cmd, ["construct", "rabbit-ear", P3_GRAPH6, "0"])
            print_traceback(result)

        assert result.exit_code == ExitCode.SUCCESS
        assert "pair 3 4: strongly_cospectral=true" in result.output

    def test_normal_join_path(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            result = runner.invoke(
                cmd,
                [
                    "construct",
                    "join-path",
                    P3_GRAPH6,
                    "0",
                    P3_GRAPH6,
                    "0",
                    "2",
                    "-o",
                    "joined.g6",
                    "--json",
                    "report.json",
                ],
            )
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            with open("joined.g6") as f:
                graph6 = f.read().strip()
            document = load_json("report.json")

        assert "pair 0 3: strongly_cospectral=true" in result.output
        record = document["records"][0]
        assert record["graph6"] == graph6
        assert record["order"] == 7
        assert record["rooted_isomorphic"] is True

    def test_normal_not_guaranteed(self):
        runner = CliRunner()
        result = runner.invoke(cmd, ["construct", "rabbit-ear", K2_GRAPH6, "0"])
        print_traceback(result)

        assert result.exit_code == ExitCode.SUCCESS
        assert "pair 2 3: strongly_cospectral=false" in result.output

    def test_abnormal(self):
        runner = CliRunner()
        result = runner.invoke(cmd, ["construct", "join-path", P3_GRAPH6, "0", P3_GRAPH6, "0", "0"])

        assert result.exit_code == ExitCode.USAGE_ERROR


class Test_specwalk_walk(object):
    def test_normal_certify(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            result = runner.invoke(
                cmd,
                [
                    "walk",
                    K2_GRAPH6,
                    "--from",
                    "0",
                    "--to",
                    "1",
                    "--tmax",
                    "3",
                    "--steps",
                    "301",
                    "--certify",
                    "--csv",
                    "trace.csv",
                    "--json",
                    "report.json",
                ],
            )
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            with open("trace.csv") as f:
                trace_lines = f.read().splitlines()
            document = load_json("report.json")

        assert len(trace_lines) == 302
        assert document["records"][0]["t_star"] == pytest.approx(math.pi / 2, abs=1e-5)
        assert document["records"][0]["magnitude"] == pytest.approx(1.0)

        certificates = {cert["kind"]: cert for cert in document["certificates"]}
        assert certificates["cospectral"]["verdict"] is True
        assert certificates["strongly_cospectral"]["verdict"] is True
        assert certificates["strongly_cospectral"]["time"] == pytest.approx(math.pi / 2, abs=1e-5)
        assert certificates["closeness"]["close"] is True
        assert "certificate kind=strongly_cospectral verdict=true" in result.output

    @pytest.mark.parametrize(
        ["options", "expected"],
        [
            [["walk", K2_GRAPH6, "--from", "0", "--to", "0", "--tmax", "1", "--steps", "10"], 2],
            [["walk", K2_GRAPH6, "--from", "0", "--to", "1", "--tmax", "0", "--steps", "10"], 2],
            [["walk", K2_GRAPH6, "--from", "0", "--to", "1", "--tmax", "1", "--steps", "1"], 2],
        ],
    )
    def test_abnormal(self, options, expected):
        runner = CliRunner()
        result = runner.invoke(cmd, options)

        assert result.exit_code == expected


class Test_specwalk_crosscheck(object):
    def test_normal(self):
        runner = CliRunner()

        with runner.isolated_filesystem():
            result = runner.invoke(
                cmd,
                [
                    "crosscheck",
                    "--max-n",
                    "3",
                    "--random",
                    "0",
                    "--jacobi",
                    "10",
                    "--json",
                    "report.json",
                ],
            )
            print_traceback(result)
            assert result.exit_code == ExitCode.SUCCESS

            document = load_json("report.json")

        assert len(document["records"]) == 9
        assert all(record["failed"] == 0 for record in document["records"])
        assert document["options"]["max_n"] == 3
