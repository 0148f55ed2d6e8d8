# encoding: utf-8

import pytest

from specwalk._const import ExitCode
from specwalk._counter import ResultCounter


class Test_ResultCounter(object):
    @pytest.mark.parametrize(
        ["success", "fail", "violation", "expected"],
        [
            [0, 0, 0, ExitCode.SUCCESS],
            [1, 0, 0, ExitCode.SUCCESS],
            [1, 1, 0, ExitCode.SUCCESS],
            [0, 1, 0, ExitCode.USAGE_ERROR],
            [1, 0, 1, ExitCode.INVARIANT_VIOLATION],
            [0, 1, 1, ExitCode.INVARIANT_VIOLATION],
        ],
    )
    def test_normal(self, success, fail, violation, expected):
        result_counter = ResultCounter()

        for _i in range(success):
            result_counter.inc_success()

        for _i in range(fail):
            result_counter.inc_fail()

        for _i in range(violation):
            result_counter.inc_violation()

        assert result_counter.get_return_code() == expected
        assert result_counter.total_count == success + fail + violation

    def test_normal_repr(self):
        result_counter = ResultCounter()
        result_counter.inc_skip()

        assert repr(result_counter) == (
            "results: success=0, failed=0, skip=1, violation=0, return_code=0"
        )
