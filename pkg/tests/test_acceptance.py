"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test prints a single PASS line when it succeeds (visible with
pytest -s or in the captured output); a failed assertion fails the
criterion.  The same property runners back the CLI selftest command.
"""

import time

from brute import mulclose, subgroup_of
from handlecoset import selftest
from handlecoset.coset_enumeration import enumerate_cosets
from handlecoset.double_cosets import dc_all
from handlecoset.handle_classifier import CaseLabel, enumerate_classes
from handlecoset.knot_input import parse_input, parse_word


def _report(number: int, name: str):
    print(f"ACCEPTANCE {number} ({name}): PASS")


def test_criterion_1_enumeration_correctness():
    corpus = selftest.GROUP_CORPUS
    assert len(corpus) >= 10
    kinds = {name.rstrip("0123456789") for name in
             (case.name for case in corpus)}
    assert {"c", "s", "d", "q"} <= {k[0] for k in kinds}  # cyclic/symmetric/dihedral/quaternion
    start = time.perf_counter()
    runs = 0
    for case in corpus:
        parsed = parse_input(case.skg)
        order = len(mulclose(case.model))
        assert order <= 48
        assert enumerate_cosets(parsed.presentation, []).index == order
        runs += 1
        for words_text in case.subgroups:
            words = [parse_word(t, parsed.presentation) for t in words_text]
            expected = order // len(subgroup_of(words, case.model))
            assert enumerate_cosets(parsed.presentation, words).index == expected
            runs += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"enumeration corpus took {elapsed:.2f}s"
    _report(1, f"enumeration correctness, {runs} runs in {elapsed:.2f}s")


def test_criterion_2_double_coset_oracle():
    start = time.perf_counter()
    detail = selftest.check_double_coset_partition()
    elapsed = time.perf_counter() - start
    # the named sanity case: S3 with subgroup <a> has exactly two double
    # cosets, with orbit sizes 1 and 2
    s3 = parse_input("group: a b\nrel: a^2\nrel: b^3\nrel: a b a b\n"
                     "P: a\norientable: true")
    table = enumerate_cosets(s3.presentation, s3.p_generators)
    sizes = sorted(o.orbit_size for o in dc_all(table, s3.p_generators))
    assert sizes == [1, 2]
    assert elapsed < 1.0, f"double-coset oracle took {elapsed:.2f}s"
    _report(2, detail)


def test_criterion_3_well_definedness():
    detail = selftest.check_representative_independence(trials=1000, seed=20260809)
    _report(3, detail)


def test_criterion_4_involutions():
    detail = selftest.check_involutions()
    _report(4, detail)


def test_criterion_5_image_characterization():
    detail = selftest.check_image_characterization()
    _report(5, detail)


def test_criterion_6_trivial_group_sanity():
    detail = selftest.check_trivial_sanity()
    parsed = parse_input("group: t\nP: t\norientable: true")
    from handlecoset.handle_classifier import ClassifierContext
    ctx = ClassifierContext.build(parsed)
    assert len(dc_all(ctx.p_table, parsed.p_generators)) == 1
    assert len(enumerate_classes(ctx, CaseLabel.CASE1, True)) == 1
    assert len(enumerate_classes(ctx, CaseLabel.CASE1, False)) == 1
    _report(6, detail)


def test_criterion_7_quotient_soundness():
    start = time.perf_counter()
    detail = selftest.check_quotient_soundness(pairs=500, seed=20260809)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"soundness suite took {elapsed:.2f}s"
    _report(7, f"{detail} in {elapsed:.1f}s")


def test_criterion_8_record_determinism():
    detail = selftest.check_record_determinism()
    _report(8, detail)
