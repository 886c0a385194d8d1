import random

import pytest

from brute import double_coset_partition, peval, subgroup_of
from handlecoset.coset_enumeration import enumerate_cosets
from handlecoset.double_cosets import (DoubleCosetId, UnorderedPair, dc_all,
                                       dc_id, dc_invert, dc_twist)
from handlecoset.errors import PreconditionUnverified, TableMismatch
from handlecoset.handle_classifier import ClassifierContext
from handlecoset.knot_input import parse_input, parse_word, validate
from handlecoset.selftest import GROUP_CORPUS
from handlecoset.word_algebra import Word, concat, free_reduce, invert

S3_TEXT = "group: a b\nrel: a^2\nrel: b^3\nrel: a b a b\nP: a\norientable: true"
D8_CASE3 = ("group: r s\nrel: r^4\nrel: s^2\nrel: r s r s\n"
            "P: r^2 , s\nP+: r^2\nn: s\norientable: false")


def setup_s3():
    parsed = parse_input(S3_TEXT)
    table = enumerate_cosets(parsed.presentation, parsed.p_generators)
    return parsed, table


def test_dc_id_s3_examples():
    parsed, table = setup_s3()
    acting = parsed.p_generators
    d_b = dc_id(table, acting, parse_word("b", parsed.presentation))
    d_a = dc_id(table, acting, parse_word("a", parsed.presentation))
    assert d_b.orbit == (2, 3)
    assert d_a.orbit == (1,)
    assert d_a == dc_id(table, acting, Word())


def test_dc_id_index_one():
    parsed = parse_input("group: t\nP: t\norientable: true")
    table = enumerate_cosets(parsed.presentation, parsed.p_generators)
    classes = {dc_id(table, parsed.p_generators,
                     parse_word(text, parsed.presentation))
               for text in ("1", "t", "t^5", "t^-3")}
    assert len(classes) == 1


def test_dc_all_s3():
    parsed, table = setup_s3()
    orbits = dc_all(table, parsed.p_generators)
    assert sorted(o.orbit_size for o in orbits) == [1, 2]
    assert sum(o.orbit_size for o in orbits) == table.index


def test_dc_all_dihedral_p_plus_central():
    parsed = parse_input(D8_CASE3)
    table = enumerate_cosets(parsed.presentation, parsed.p_plus_generators)
    orbits = dc_all(table, parsed.p_plus_generators)
    assert len(orbits) == 4
    assert all(o.orbit_size == 1 for o in orbits)


def test_dc_invert_examples():
    parsed, table = setup_s3()
    acting = parsed.p_generators
    d_one = dc_id(table, acting, Word())
    assert dc_invert(table, acting, d_one) == d_one
    d_b = dc_id(table, acting, parse_word("b", parsed.presentation))
    assert dc_invert(table, acting, d_b) == d_b
    # cyclic group of order 5, trivial subgroup: inverse of a is a^4
    c5 = parse_input("group: a\nrel: a^5\nP: 1\norientable: true")
    t5 = enumerate_cosets(c5.presentation, c5.p_generators)
    d_a = dc_id(t5, c5.p_generators, parse_word("a", c5.presentation))
    d_a4 = dc_id(t5, c5.p_generators, parse_word("a a a a", c5.presentation))
    assert dc_invert(t5, c5.p_generators, d_a) == d_a4


def case3_context():
    parsed = parse_input(D8_CASE3)
    return parsed, ClassifierContext.build(parsed)


def test_dc_twist_examples():
    parsed, ctx = case3_context()
    table, acting = ctx.p_plus_table, parsed.p_plus_generators
    d_r = dc_id(table, acting, parse_word("r", parsed.presentation))
    assert dc_twist(table, acting, parsed.n_word, d_r, ctx.report) == d_r
    d_one = dc_id(table, acting, Word())
    assert dc_twist(table, acting, parsed.n_word, d_one, ctx.report) == d_one


def test_dc_twist_empty_n_is_identity():
    parsed = parse_input("group: a\nrel: a^4\nP: a^2\nP+: a^2\nn: 1\n"
                         "orientable: false")
    ctx = ClassifierContext.build(parsed)
    table, acting = ctx.p_plus_table, parsed.p_plus_generators
    for d in dc_all(table, acting):
        assert dc_twist(table, acting, parsed.n_word, d, ctx.report) == d


def test_dc_twist_requires_validation():
    parsed, ctx = case3_context()
    table, acting = ctx.p_plus_table, parsed.p_plus_generators
    d = dc_id(table, acting, Word())
    with pytest.raises(PreconditionUnverified):
        dc_twist(table, acting, parsed.n_word, d, None)
    # a report with unknown twist checks must also be rejected
    from handlecoset.coset_enumeration import EnumerationLimits
    vague = validate(parse_input("group: a b\nP: a\nP+: a\nn: b\n"
                                 "orientable: false"),
                     EnumerationLimits(8, 8))
    with pytest.raises(PreconditionUnverified):
        dc_twist(table, acting, parsed.n_word, d, vague)


def test_table_mismatch():
    parsed, table = setup_s3()
    other = enumerate_cosets(parsed.presentation, parsed.p_generators)
    d = dc_id(table, parsed.p_generators, Word())
    with pytest.raises(TableMismatch):
        dc_invert(other, parsed.p_generators, d)


def test_unordered_pair_is_unordered():
    parsed, table = setup_s3()
    acting = parsed.p_generators
    x = dc_id(table, acting, Word())
    y = dc_id(table, acting, parse_word("b", parsed.presentation))
    assert UnorderedPair.of(x, y) == UnorderedPair.of(y, x)
    assert UnorderedPair.of(x, y).first == x  # sorted by canonical
    nested1 = UnorderedPair.of(UnorderedPair.of(y, x), UnorderedPair.of(x, x))
    nested2 = UnorderedPair.of(UnorderedPair.of(x, x), UnorderedPair.of(x, y))
    assert nested1 == nested2


def test_representative_independence_randomized():
    rng = random.Random(42)
    parsed, table = setup_s3()
    acting = list(parsed.p_generators)
    ngens = len(parsed.presentation.generators)
    for _ in range(300):
        g = free_reduce([(rng.randrange(ngens), rng.choice((1, -1)))
                         for _ in range(rng.randint(0, 6))])
        factors = [acting[rng.randrange(len(acting))] for _ in range(rng.randint(0, 8))]
        p = concat(*[f if rng.random() < 0.5 else invert(f) for f in factors])
        factors = [acting[rng.randrange(len(acting))] for _ in range(rng.randint(0, 8))]
        q = concat(*[f if rng.random() < 0.5 else invert(f) for f in factors])
        assert dc_id(table, acting, concat(p, g, q)) == dc_id(table, acting, g)


def test_invert_matches_word_inversion():
    rng = random.Random(43)
    parsed, table = setup_s3()
    acting = parsed.p_generators
    ngens = len(parsed.presentation.generators)
    for _ in range(100):
        g = free_reduce([(rng.randrange(ngens), rng.choice((1, -1)))
                         for _ in range(rng.randint(0, 6))])
        assert dc_invert(table, acting, dc_id(table, acting, g)) == \
            dc_id(table, acting, invert(g))


def test_twist_matches_conjugation_word():
    rng = random.Random(44)
    parsed, ctx = case3_context()
    table, acting = ctx.p_plus_table, parsed.p_plus_generators
    n = parsed.n_word
    ngens = len(parsed.presentation.generators)
    for _ in range(100):
        g = free_reduce([(rng.randrange(ngens), rng.choice((1, -1)))
                         for _ in range(rng.randint(0, 6))])
        assert dc_twist(table, acting, n, dc_id(table, acting, g), ctx.report) \
            == dc_id(table, acting, concat(n, g, n))


def test_dc_twist_can_move_classes():
    # D6 with P+ = <r^3> central and n = s: conjugation sends r to r^-1,
    # which lies in the coset P+ r^2, so the twist swaps two classes
    parsed = parse_input("group: r s\nrel: r^6\nrel: s^2\nrel: r s r s\n"
                         "P: r^3 , s\nP+: r^3\nn: s\norientable: false")
    ctx = ClassifierContext.build(parsed)
    table, acting = ctx.p_plus_table, parsed.p_plus_generators
    assert table.index == 6
    d_r = dc_id(table, acting, parse_word("r", parsed.presentation))
    d_r2 = dc_id(table, acting, parse_word("r^2", parsed.presentation))
    assert d_r != d_r2
    assert dc_twist(table, acting, parsed.n_word, d_r, ctx.report) == d_r2
    assert dc_twist(table, acting, parsed.n_word, d_r2, ctx.report) == d_r
    moved = sum(1 for d in dc_all(table, acting)
                if dc_twist(table, acting, parsed.n_word, d, ctx.report) != d)
    assert moved == 4


def test_dc_orbits_can_have_size_two():
    # D6 with non-central P+ = <s>: P+ r P+ covers two cosets
    parsed = parse_input("group: r s\nrel: r^6\nrel: s^2\nrel: r s r s\n"
                         "P: s , r^3\nP+: s\nn: r^3 s\norientable: false")
    ctx = ClassifierContext.build(parsed)
    table, acting = ctx.p_plus_table, parsed.p_plus_generators
    assert table.index == 6
    sizes = sorted(o.orbit_size for o in dc_all(table, acting))
    assert sizes == [1, 1, 2, 2]


def test_involutions_over_all_orbits():
    parsed, ctx = case3_context()
    table, acting = ctx.p_plus_table, parsed.p_plus_generators
    for d in dc_all(table, acting):
        assert dc_invert(table, acting, dc_invert(table, acting, d)) == d
        once = dc_twist(table, acting, parsed.n_word, d, ctx.report)
        assert dc_twist(table, acting, parsed.n_word, once, ctx.report) == d


def test_partition_oracle_on_corpus():
    for case in GROUP_CORPUS:
        parsed = parse_input(case.skg)
        pres = parsed.presentation
        elements = subgroup_of([Word(((i, 1),)) for i in range(len(pres.generators))],
                               case.model)
        for words_text in case.subgroups:
            words = [parse_word(t, pres) for t in words_text]
            table = enumerate_cosets(pres, words)
            h_set = subgroup_of(words, case.model)
            brute, coset_of = double_coset_partition(elements, h_set)
            bridge = {c: coset_of[peval(table.witness(c), case.model)]
                      for c in range(1, table.index + 1)}
            assert len(set(bridge.values())) == table.index
            table_side = {frozenset(bridge[c] for c in orbit.orbit)
                          for orbit in dc_all(table, words)}
            assert table_side == brute, case.name
