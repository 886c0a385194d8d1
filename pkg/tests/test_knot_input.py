import pytest

from brute import peval, pmul, pinv, subgroup_of
from handlecoset.coset_enumeration import EnumerationLimits
from handlecoset.errors import (DuplicateGenerator, MissingSection,
                                SkgSyntaxError, UnknownGenerator)
from handlecoset.knot_input import (SurfaceKnotInput, format_word,
                                    parse_input, parse_word, serialize,
                                    validate)
from handlecoset.word_algebra import Word

D8_CASE3 = ("group: r s\nrel: r^4\nrel: s^2\nrel: r s r s\n"
            "P: r^2 , s\nP+: r^2\nn: s\norientable: false")
D4_MODEL = ((1, 2, 3, 0), (0, 3, 2, 1))


def test_parse_minimal():
    parsed = parse_input("group: t\nP: t\norientable: true")
    assert parsed.presentation.generator_names == ("t",)
    assert parsed.presentation.relators == ()
    assert parsed.p_generators == (Word(((0, 1),)),)
    assert parsed.p_plus_generators is None
    assert parsed.n_word is None
    assert parsed.surface_orientable


def test_parse_dihedral_case3():
    parsed = parse_input(D8_CASE3)
    # oracle: every relator must act trivially in the 8-element dihedral model
    identity = (0, 1, 2, 3)
    for rel in parsed.presentation.relators:
        assert peval(rel, D4_MODEL) == identity
    # and the model realizes the full group of order 8
    assert len(subgroup_of([Word(((0, 1),)), Word(((1, 1),))], D4_MODEL)) == 8
    assert not parsed.surface_orientable
    assert len(parsed.p_generators) == 2
    assert parsed.p_plus_generators == (parse_word("r^2", parsed.presentation),)
    assert parsed.n_word == parse_word("s", parsed.presentation)


def test_parse_unknown_generator():
    with pytest.raises(UnknownGenerator):
        parse_input("group: a\nrel: a a\nP: b\norientable: true")


def test_parse_word_syntax():
    parsed = parse_input("group: a b\nP: a\norientable: true")
    assert parse_word("1", parsed.presentation).is_identity
    assert parse_word("a^-2", parsed.presentation) == Word(((0, -1), (0, -1)))
    assert parse_word("a^0 b", parsed.presentation) == Word(((1, 1),))
    assert parse_word("a 1 b", parsed.presentation) == Word(((0, 1), (1, 1)))
    with pytest.raises(SkgSyntaxError):
        parse_word("a^x", parsed.presentation)
    with pytest.raises(UnknownGenerator):
        parse_word("c", parsed.presentation)


@pytest.mark.parametrize("text, error", [
    ("P: t\norientable: true", SkgSyntaxError),          # group not first
    ("group: t\ngroup: t\nP: t\norientable: true", SkgSyntaxError),
    ("group: t t\nP: t\norientable: true", DuplicateGenerator),
    ("group: t\norientable: true", MissingSection),      # no P
    ("group: t\nP: t", MissingSection),                  # no orientable
    ("group: t\nP: t\norientable: maybe", SkgSyntaxError),
    ("group: t\nP: t ,\norientable: true", SkgSyntaxError),   # empty segment
    ("group: t\nrel: t t^-1\nP: t\norientable: true", SkgSyntaxError),
    ("group: t\nP: t\nQ: t\norientable: true", SkgSyntaxError),
    ("group: t\nP: t\nwhatever\norientable: true", SkgSyntaxError),
    ("group: t\nP: t\nP+: t\norientable: true", SkgSyntaxError),
    ("group: t\nP: t\nn: t\norientable: true", SkgSyntaxError),
    ("group: r s\nrel: r^4\nP: r\nP+: r\norientable: false", MissingSection),
    ("group: 2x\nP: 1\norientable: true", SkgSyntaxError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_input(text)


def test_syntax_error_carries_position():
    with pytest.raises(UnknownGenerator) as info:
        parse_input("group: a\nP: a zz\norientable: true")
    assert info.value.line == 2
    assert info.value.column == 6


def test_comments_and_blank_lines():
    parsed = parse_input(
        "# a comment\n\ngroup: t   # trailing\n\nP: t\norientable: true\n")
    assert parsed.presentation.generator_names == ("t",)


def test_roundtrip():
    for text in (
        "group: t\nP: t\norientable: true",
        D8_CASE3,
        "group: a b\nrel: a^2\nrel: b^3\nrel: a b a b\nP: a\norientable: true",
        "group: a\nrel: a^5\nP: 1\norientable: true",
    ):
        parsed = parse_input(text, label="x")
        assert parse_input(serialize(parsed), label="x") == parsed


def test_format_word():
    parsed = parse_input("group: a b\nP: a\norientable: true")
    names = parsed.presentation.generator_names
    assert format_word(Word(), names) == "1"
    assert format_word(parse_word("a a a b^-2 a", parsed.presentation),
                       names) == "a^3 b^-2 a"


def test_input_invariants():
    parsed = parse_input("group: t\nP: t\norientable: true")
    with pytest.raises(ValueError):
        SurfaceKnotInput(parsed.presentation, parsed.p_generators,
                         parsed.p_generators, None, True, "x")
    with pytest.raises(ValueError):
        SurfaceKnotInput(parsed.presentation, parsed.p_generators,
                         None, None, False, "x")


def test_validate_dihedral_case3_passes():
    report = validate(parse_input(D8_CASE3))
    named = {c.name: (c.status, c.detail) for c in report.checks}
    assert named["p_plus_in_p"][0] == "pass"
    assert named["n_in_p"][0] == "pass"
    assert named["n_vs_p_plus"][0] == "pass"
    assert "not in P+" in named["n_vs_p_plus"][1]
    assert named["twist_normalizes_p_plus"][0] == "pass"
    assert named["n_squared_in_p_plus"][0] == "pass"
    assert report.ok and report.twist_verified
    # oracle: brute force in the dihedral model
    h_plus = subgroup_of([parse_word("r^2", parse_input(D8_CASE3).presentation)],
                         D4_MODEL)
    s_img = D4_MODEL[1]
    r2_img = peval(parse_word("r^2", parse_input(D8_CASE3).presentation), D4_MODEL)
    assert pmul(pmul(s_img, r2_img), pinv(s_img)) in h_plus
    assert pmul(s_img, s_img) in h_plus


def test_validate_orientable_vacuous():
    report = validate(parse_input("group: t\nP: t\norientable: true"))
    assert all(c.status == "pass" for c in report.checks)
    assert len(report.checks) == 5
    assert report.twist_verified


def test_validate_p_plus_not_in_p_fails():
    # P = <r^2>, P+ = <s>: the P+ generator s is not in P
    text = ("group: r s\nrel: r^4\nrel: s^2\nrel: r s r s\n"
            "P: r^2\nP+: s\nn: r\norientable: false")
    report = validate(parse_input(text))
    named = {c.name: c for c in report.checks}
    assert named["p_plus_in_p"].status == "fail"
    assert "s" in named["p_plus_in_p"].detail
    assert not report.ok


def test_validate_resource_exhaustion_is_unknown():
    # free group of rank 2 with cyclic P: infinite index, tiny budget
    text = "group: a b\nP: a\nP+: a\nn: b\norientable: false"
    report = validate(parse_input(text), EnumerationLimits(8, 8))
    assert any(c.status == "unknown" for c in report.checks)
    assert not report.twist_verified
    assert report.ok  # unknown is not a failure
