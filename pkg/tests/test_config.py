import numpy as np
import pytest

from assocfloquet import BadPhaseOrder, RateOutOfRange
from assocfloquet.config import load_config, parse_config
from assocfloquet.errors import ConfigError, ParamOutOfRange

CUSTOM = {
    "lambda": 1,
    "stimuli": ["A", "B"],
    "kernel": {"matrix": [[1, 0.2], [0.2, 1]]},
    "phases": [{"stimulus": "A", "duration": 2, "reinforced": True, "rate": 0.3},
               {"stimulus": "B", "duration": 1, "reinforced": False, "rate": 0.3}],
}


def with_(**changes):
    doc = dict(CUSTOM, **changes)
    return {k: v for k, v in doc.items() if v is not None}


def test_model_config(rwm_config):
    config = load_config(rwm_config)
    assert config.label == "rwm"
    assert config.blocks == 40
    assert config.problem.stimuli == ("AY", "AX", "BY", "BX")
    assert config.w0 is None and config.thresholds is None


def test_custom_config():
    config = parse_config(CUSTOM)
    assert config.label == "custom"
    assert config.problem.durations.tolist() == [2, 1]
    assert config.problem.period == 3


def test_numeric_stimulus_index():
    phases = [dict(p, stimulus=i + 1) for i, p in enumerate(CUSTOM["phases"])]
    assert parse_config(with_(phases=phases)).problem.n == 2


def test_model_kernel_with_own_phases():
    doc = {"lambda": 2, "kernel": {"model": "p94"},
           "phases": [{"stimulus": s, "reinforced": r, "rate": 0.4}
                      for s, r in zip(["AY", "AX", "BY", "BX"], [True, False, False, True])]}
    problem = parse_config(doc).problem
    np.testing.assert_array_equal(problem.rates, [0.4] * 4)
    assert problem.lam == 2.0


def test_optional_keys():
    config = parse_config(with_(w0=[1, 2], blocks=7, thresholds={"d1": 0.2, "d2": 0.8}))
    np.testing.assert_array_equal(config.w0, [1.0, 2.0])
    assert config.blocks == 7
    assert config.thresholds == (0.2, 0.8)
    assert parse_config(with_(thresholds=[0.1, 0.5])).thresholds == (0.1, 0.5)


@pytest.mark.parametrize("changes, error", [
    ({"extra": 1}, ConfigError),
    ({"kernel": {"matrix": [[1]], "model": "rwm"}}, ConfigError),
    ({"kernel": {"model": "xyz"}}, ConfigError),
    ({"kernel": {"matrix": "abc"}}, ConfigError),
    ({"lambda": "1"}, ConfigError),
    ({"lambda": None}, ConfigError),
    ({"blocks": -1}, ConfigError),
    ({"blocks": 2.5}, ConfigError),
    ({"w0": [1, 2, 3]}, ConfigError),
    ({"thresholds": [0.8, 0.2]}, ParamOutOfRange),
    ({"thresholds": [0.1]}, ConfigError),
    ({"phases": [CUSTOM["phases"][1], CUSTOM["phases"][0]]}, BadPhaseOrder),
    ({"phases": [dict(CUSTOM["phases"][0], stimulus="Z"), CUSTOM["phases"][1]]}, BadPhaseOrder),
    ({"phases": [dict(CUSTOM["phases"][0], rate=1.2), CUSTOM["phases"][1]]}, RateOutOfRange),
    ({"phases": [dict(CUSTOM["phases"][0], reinforced=1), CUSTOM["phases"][1]]}, ConfigError),
])
def test_invalid_configs(changes, error):
    with pytest.raises(error):
        parse_config(with_(**changes))


def test_not_an_object():
    with pytest.raises(ConfigError):
        parse_config([1, 2])


def test_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(path)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_config(tmp_path / "absent.json")
