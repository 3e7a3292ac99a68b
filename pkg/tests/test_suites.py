"""Every named verification suite passes end to end."""
import pytest

from tangokv.suites import SUITES, run_suite


@pytest.mark.parametrize("name", SUITES)
def test_suite_passes(name):
    res = run_suite(name)
    assert res["passed"], [c for c in res["cases"] if not c["passed"]]
    assert res["n_failed"] == 0 and res["n_cases"] == len(res["cases"]) > 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
