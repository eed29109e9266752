import json

import pytest

from helpers import M_WEIGHTS
from torsep.errors import InputError
from torsep.reports import (
    Report,
    emit_report,
    parse_instance,
    report_from_json,
)
from torsep.separation import decide_affine_sp, decide_affine_wsp


def test_parse_json_weights():
    inst = parse_instance('{"d":2,"weights":[[1,1],[2,0],[0,2]]}')
    assert inst.kind == "weights"
    assert inst.payload.dim == 2
    assert inst.payload.n == 3


def test_parse_text_weights():
    inst = parse_instance("1 2\n1\n-1")
    assert inst.payload.dim == 1
    assert inst.payload.weights == ((1,), (-1,))


def test_parse_dimension_mismatch():
    with pytest.raises(InputError):
        parse_instance('{"d":2,"weights":[[1],[2,0]]}')


def test_parse_errors_carry_location():
    with pytest.raises(InputError, match="line 1"):
        parse_instance("{bad json")
    with pytest.raises(InputError, match="line 3"):
        parse_instance("1 2\n1\nx")
    with pytest.raises(InputError):
        parse_instance('{"d":2,"weights":[]}')
    with pytest.raises(InputError):
        parse_instance("")


def test_parse_binary_form_payloads():
    inst = parse_instance('{"form": "x*y^3"}')
    assert inst.kind == "binary-form"
    assert inst.payload.degree == 4
    inst2 = parse_instance('{"coeffs": ["1", "0", "-2"]}')
    assert inst2.payload.degree == 2


def _sample_report():
    inst = parse_instance('{"d":2,"weights":[[1,1],[2,0],[0,2]],"label":"M"}')
    report = Report("decide", inst, {"mode": "affine", "property": "all"})
    report.verdicts = [decide_affine_sp(M_WEIGHTS), decide_affine_wsp(M_WEIGHTS)]
    report.verified = [True, True]
    return report


def test_json_round_trip_is_a_fixed_point():
    report = _sample_report()
    emitted = emit_report(report, "json")
    rebuilt = report_from_json(json.loads(emitted))
    assert emit_report(rebuilt, "json") == emitted


def test_json_field_order_is_stable():
    payload = json.loads(emit_report(_sample_report(), "json"))
    assert list(payload) == [
        "schema",
        "version",
        "command",
        "instance",
        "options",
        "seed",
        "verdicts",
        "extra",
        "timing_ms",
    ]
    assert payload["schema"] == "torsep/1"


def test_text_rendering_contains_verdict_lines():
    text = emit_report(_sample_report(), "text")
    assert "SP (affine): FAILS" in text
    assert "WSP (affine): HOLDS" in text
    assert "witness pair: x2 = 0 forces x1 = 0" in text
    assert "certificate" in text


def test_unknown_format_rejected():
    with pytest.raises(InputError):
        emit_report(_sample_report(), "yaml")
