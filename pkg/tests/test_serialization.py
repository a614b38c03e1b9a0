"""JSON and CSV encodings: round trips, validation, frozen shapes."""

import json
from fractions import Fraction

import pytest

from linespectra.constructions import boroczky, fermat, grid
from linespectra.fields import quadratic_field, rational_field
from linespectra.inequalities import all_reports
from linespectra.projective import Configuration, GeometryError, ProjectivePoint, spectrum
from linespectra.search import local_search
from linespectra.serialization import (
    SerializationError,
    config_from_json,
    config_to_json,
    dumps,
    element_from_json,
    element_to_json,
    field_from_json,
    field_to_json,
    frac_str,
    load_configuration,
    parse_frac,
    record_to_json,
    report_to_json,
    reports_to_csv,
    save_configuration,
    spectrum_to_csv,
    spectrum_to_json,
)


def test_fraction_strings():
    assert frac_str(Fraction(3, 4)) == "3/4"
    assert frac_str(Fraction(5)) == "5"
    assert frac_str(Fraction(-7, 2)) == "-7/2"
    assert parse_frac("3/4") == Fraction(3, 4)
    assert parse_frac("-7") == Fraction(-7)
    assert parse_frac(3) == Fraction(3)


@pytest.mark.parametrize("bad", [0.5, True, "abc", None, [1, 2], "1/0"])
def test_parse_frac_rejects_inexact_or_malformed(bad):
    with pytest.raises(SerializationError):
        parse_frac(bad)


def test_field_round_trips():
    for field in (rational_field(), quadratic_field(2), quadratic_field(-3),
                  __import__("linespectra.fields", fromlist=["cyclotomic_field"]).cyclotomic_field(7)):
        assert field_from_json(field_to_json(field)) == field


def test_field_from_json_rejects_unknown_kind():
    with pytest.raises(SerializationError):
        field_from_json({"kind": "sedenion"})
    with pytest.raises(SerializationError):
        field_from_json({"kind": "quadratic"})


def test_element_round_trips():
    Q = rational_field()
    e = Q.from_rational(Fraction(-5, 3))
    assert element_from_json(Q, element_to_json(e)) == e
    F = quadratic_field(5)
    e = F.element([Fraction(1, 2), Fraction(-2, 7)])
    assert element_from_json(F, element_to_json(e)) == e
    from linespectra.fields import cyclotomic_field

    Z = cyclotomic_field(5)
    e = (Z.zeta() + Z.one()) ** 3
    assert element_from_json(Z, element_to_json(e)) == e


def test_element_from_json_checks_degree():
    F = quadratic_field(2)
    with pytest.raises(SerializationError):
        element_from_json(F, ["1", "2", "3"])
    with pytest.raises(SerializationError):
        element_from_json(F, "1/2")


def test_config_round_trips_across_field_kinds():
    F = quadratic_field(2)
    quad = Configuration(
        F,
        (
            ProjectivePoint((F.one(), F.sqrt_gen(), F.one()), F),
            ProjectivePoint((F.zero(), F.one(), F.one()), F),
            ProjectivePoint((F.one(), F.zero(), F.one()), F),
        ),
        label="by hand",
    )
    for config in (grid(3, 3), fermat(3), boroczky(3), quad):
        rebuilt = config_from_json(config_to_json(config))
        assert rebuilt == config
        assert rebuilt.label == config.label


def test_save_and_load_configuration(tmp_path):
    path = tmp_path / "config.json"
    config = boroczky(4)
    save_configuration(config, str(path))
    text = path.read_text()
    assert text.endswith("\n")
    assert json.loads(text)["label"] == "boroczky(m=4)"
    assert load_configuration(str(path)) == config


def test_dumps_is_indented_with_final_newline():
    assert dumps({"a": 1}) == '{\n  "a": 1\n}\n'


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"field": {"kind": "rational"}},
        {"field": {"kind": "rational"}, "points": []},
        {"field": {"kind": "rational"}, "points": [["1", "0"]]},
        {"field": {"kind": "rational"}, "points": [["1", "0", "0"]], "label": 5},
    ],
)
def test_config_from_json_validation(data):
    with pytest.raises(SerializationError):
        config_from_json(data)


def test_config_from_json_still_rejects_duplicates():
    data = {"field": {"kind": "rational"}, "points": [["1", "0", "1"], ["2", "0", "2"]]}
    with pytest.raises(GeometryError):
        config_from_json(data)


def test_spectrum_json_shape():
    payload = spectrum_to_json(spectrum(grid(2, 3)), real=True)
    assert payload == {
        "n": 6,
        "ell": {"2": 9, "3": 2},
        "total_lines": 11,
        "incidences": 24,
        "max_collinear": 3,
        "degrees": [4, 4, 4, 4, 4, 4],
        "degree_histogram": {"4": 6},
        "real": True,
    }
    assert "real" not in spectrum_to_json(spectrum(grid(2, 3)))


def test_spectrum_csv_shape():
    got = spectrum_to_csv(spectrum(grid(2, 3)), real=True)
    assert got == (
        "quantity,value\n"
        "n,6\n"
        "total_lines,11\n"
        "incidences,24\n"
        "max_collinear,3\n"
        "real,true\n"
        "ell_2,9\n"
        "ell_3,2\n"
    )
    assert "real" not in spectrum_to_csv(spectrum(grid(2, 3)))


def test_report_json_uses_fraction_strings():
    reports = all_reports(spectrum(grid(3, 3)), real=True)
    payload = report_to_json(reports[0])
    assert payload["name"] == "basic_line_count"
    assert payload["relation"] == "=="
    assert isinstance(payload["lhs"], str)
    assert parse_frac(payload["slack"]) == reports[0].slack
    assert set(payload) == {
        "name", "kind", "applicable", "applicability_reason", "relation",
        "lhs", "rhs", "slack", "satisfied", "tight", "strict",
    }


def test_reports_csv_shape():
    reports = all_reports(spectrum(grid(3, 3)), real=True)
    text = reports_to_csv(reports)
    lines = text.strip().split("\n")
    assert lines[0] == "name,kind,applicable,satisfied,tight,slack_decimal_approx"
    assert len(lines) == len(reports) + 1
    assert lines[1].startswith("basic_line_count,identity,true,true,")


def test_record_json_embeds_the_configuration():
    record = local_search(8, iterations=40, seed=1, restarts=1)
    payload = record_to_json(record)
    assert payload["method"] == "local"
    assert payload["best_value"] == record.best_value
    assert parse_frac(payload["objective"]) == record.objective
    assert payload["history"][0][0] == 1
    rebuilt = config_from_json(payload["best_config"])
    assert rebuilt == record.best_config
    assert json.dumps(payload)  # nothing non-serializable snuck in
