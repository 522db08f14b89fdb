import json

import pytest

from qgreedy import verify
from qgreedy.torus import AlgebraParams


def test_config_defaults_round_trip():
    cfg = verify.SweepConfig()
    again = verify.SweepConfig.from_json(json.loads(json.dumps(cfg.to_json())))
    assert again == cfg
    assert len(cfg.bases()) == 13 * 13


@pytest.mark.parametrize("data", [{"N": 0}, {"bogus": True}, {"params": [[0, 1]]},
                                  {"checks": ["nope"]}])
def test_config_rejects(data):
    with pytest.raises((ValueError, TypeError)):
        verify.SweepConfig.from_json(data)


def test_summarize():
    rows = [verify._row("a", None, None, "pass"), verify._row("a", None, (1, 1), "fail"),
            verify._row("b", None, None, "pass"), verify._row("positivity", None, None, "report")]
    assert verify.summarize(rows) == {"a": "fail", "b": "pass"}


def test_run_sorted_and_gated():
    cfg = verify.SweepConfig(params=[(1, 1)], N=1, checks=["exchange_relations", "closed_form"])
    passed, rows = verify.run(cfg)
    assert passed
    assert [r["check_id"] for r in rows] == sorted(r["check_id"] for r in rows)


def test_positivity_rows_shape():
    rows = verify.positivity_rows([(2, 2)], 1)
    assert rows[-1]["base"] is None and rows[-1]["detail"]["bases"] == 9
    zero = next(r for r in rows if r["base"] == [0, 0])
    assert zero["detail"] == {"cluster_minima": {"0": 1, "1": 1, "2": 1, "3": 1},
                              "positive": True}


def test_identity_helpers():
    assert verify.binomial_theorem_holds(4, AlgebraParams(1, 1))
    assert verify.convolution_holds(-3, 2, 4, 2)


def test_dumps_deterministic():
    from fractions import Fraction
    assert verify.dumps({"b": Fraction(1, 2), "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": "1/2"\n}\n'
