import json

import pytest

from assocfloquet import BiconditionalParams, biconditional_problem

_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(number, (text, True))
    _criteria[number] = (prev[0], prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, passed = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {text}")


@pytest.fixture
def rwm_problem():
    return biconditional_problem("rwm", BiconditionalParams(lam=1.0, beta_plus=0.5, beta_minus=0.5, alpha=0.5))


@pytest.fixture
def iem_problem():
    return biconditional_problem("iem", BiconditionalParams(lam=1.0, beta_plus=0.5, beta_minus=0.5, alpha=0.5))


@pytest.fixture
def p94_problem():
    return biconditional_problem("p94", BiconditionalParams(lam=1.0, beta_plus=0.5, beta_minus=0.5))


def _model_config(model, alpha=0.5):
    params = {"beta_plus": 0.5, "beta_minus": 0.5}
    if alpha is not None:
        params["alpha"] = alpha
    return {"lambda": 1, "kernel": {"model": model, "params": params}, "blocks": 40}


@pytest.fixture
def write_config(tmp_path):
    def write(doc, name="run.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write


@pytest.fixture
def rwm_config(write_config):
    return write_config(_model_config("rwm"), "rwm.json")


@pytest.fixture
def iem_config(write_config):
    return write_config(_model_config("iem"), "iem.json")


@pytest.fixture
def p94_config(write_config):
    return write_config(_model_config("p94", alpha=None), "p94.json")
