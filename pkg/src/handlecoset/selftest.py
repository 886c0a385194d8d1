"""Built-in oracle corpus and property suite.

Every table-driven computation in the package is cross-checked here
against brute force in concrete finite permutation groups: explicit
models of cyclic, dihedral, symmetric, alternating and quaternion groups
whose arithmetic never touches the enumeration engine.  The suite backs
the `selftest` CLI subcommand and the acceptance tests.
"""

from __future__ import annotations

import contextlib
import io
import os
import random
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .coset_enumeration import enumerate_cosets
from .double_cosets import dc_all, dc_id, dc_invert, dc_twist
from .errors import HandleCosetError
from .finite_quotient import (SeparationVerdict, find_homomorphisms,
                              quotient_separate)
from .handle_classifier import (CaseLabel, ClassifierContext, equivalent,
                                enumerate_classes, handle_invariant,
                                image_member, nonsurjectivity_witness)
from .knot_input import (SurfaceKnotInput, parse_input, parse_word, serialize,
                         validate, validate_with_tables)
from .word_algebra import Word, concat, free_reduce, invert

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# brute-force permutation arithmetic (independent of the enumeration engine)
# ---------------------------------------------------------------------------

def _mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[x] for x in p)


def _inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _eval(word: Word, gens: tuple[Perm, ...]) -> Perm:
    acc = tuple(range(len(gens[0])))
    for i, s in word:
        acc = _mul(acc, gens[i] if s > 0 else _inv(gens[i]))
    return acc


def mulclose(gens) -> frozenset:
    """All products of the generators (and their inverses come for free
    in a finite closure)."""
    gens = list(gens)
    identity = tuple(range(len(gens[0])))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = _mul(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return frozenset(seen)


def _cycle(n: int) -> Perm:
    return tuple(range(1, n)) + (0,)


def _negate(n: int) -> Perm:
    return tuple((-i) % n for i in range(n))


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupCase:
    """A finite group presentation with a faithful permutation model."""

    name: str
    skg: str
    model: tuple[Perm, ...]  # aligned with the presentation's generators
    order: int               # known group order
    subgroups: tuple[tuple[str, ...], ...]  # word strings generating each


GROUP_CORPUS: tuple[GroupCase, ...] = (
    GroupCase("c4", "group: a\nrel: a^4\nP: a^2\norientable: true",
              (_cycle(4),), 4, (("a^2",), ("a",))),
    GroupCase("c5", "group: a\nrel: a^5\nP: 1\norientable: true",
              (_cycle(5),), 5, (("a",),)),
    GroupCase("c6", "group: a\nrel: a^6\nP: a^2\norientable: true",
              (_cycle(6),), 6, (("a^2",), ("a^3",))),
    GroupCase("c12", "group: a\nrel: a^12\nP: a^3\norientable: true",
              (_cycle(12),), 12, (("a^3",), ("a^4",))),
    GroupCase("klein4", "group: a b\nrel: a^2\nrel: b^2\nrel: a b a b\n"
              "P: a\norientable: true",
              ((1, 0, 2, 3), (0, 1, 3, 2)), 4, (("a",), ("a b",))),
    GroupCase("c2xc4", "group: a b\nrel: a^2\nrel: b^4\nrel: a b a b^-1\n"
              "P: b\norientable: true",
              ((1, 0, 2, 3, 4, 5), (0, 1, 3, 4, 5, 2)), 8,
              (("b",), ("a",), ("a b^2",))),
    GroupCase("s3", "group: a b\nrel: a^2\nrel: b^3\nrel: a b a b\n"
              "P: a\norientable: true",
              ((1, 0, 2), (1, 2, 0)), 6, (("a",), ("b",))),
    GroupCase("s4", "group: a b\nrel: a^2\nrel: b^3\n"
              "rel: a b a b a b a b\nP: a b\norientable: true",
              ((1, 0, 2, 3), (0, 2, 3, 1)), 24, (("a b",), ("a",), ("b",))),
    GroupCase("a4", "group: a b\nrel: a^2\nrel: b^3\nrel: a b a b a b\n"
              "P: b\norientable: true",
              ((1, 0, 3, 2), (0, 2, 3, 1)), 12, (("b",), ("a",))),
    GroupCase("d4", "group: r s\nrel: r^4\nrel: s^2\nrel: r s r s\n"
              "P: r^2 , s\norientable: true",
              (_cycle(4), _negate(4)), 8,
              (("r^2", "s"), ("r^2",), ("r",), ("s",))),
    GroupCase("d6", "group: r s\nrel: r^6\nrel: s^2\nrel: r s r s\n"
              "P: r\norientable: true",
              (_cycle(6), _negate(6)), 12, (("r",), ("r^2", "s"), ("s",))),
    GroupCase("d8", "group: r s\nrel: r^8\nrel: s^2\nrel: r s r s\n"
              "P: r^2 , s\norientable: true",
              (_cycle(8), _negate(8)), 16, (("r",), ("r^4",), ("r^2", "s"))),
    GroupCase("d12", "group: r s\nrel: r^12\nrel: s^2\nrel: r s r s\n"
              "P: r^3 , s\norientable: true",
              (_cycle(12), _negate(12)), 24, (("r",), ("r^3", "s"))),
    # regular representation of the quaternion group on 1,-1,i,-i,j,-j,k,-k
    GroupCase("q8", "group: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a\n"
              "P: a\norientable: true",
              ((2, 3, 1, 0, 7, 6, 4, 5), (4, 5, 6, 7, 1, 0, 3, 2)), 8,
              (("a",), ("a^2",), ("b",))),
)


@dataclass(frozen=True)
class InputCase:
    """A classifier input, optionally backed by a permutation model."""

    label: str
    skg: str
    sample_cord: str
    model: Optional[tuple[Perm, ...]] = None


INPUT_CORPUS: tuple[InputCase, ...] = (
    InputCase("unknotted", "group: t\nP: t\norientable: true", "t t"),
    InputCase("t2", "group: t\nP: t^2\norientable: true", "t"),
    InputCase("s3-synthetic",
              "group: a b\nrel: a^2\nrel: b^3\nrel: a b a b\n"
              "P: a\norientable: true", "b",
              ((1, 0, 2), (1, 2, 0))),
    InputCase("q8-p",
              "group: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a\n"
              "P: a\norientable: true", "b",
              ((2, 3, 1, 0, 7, 6, 4, 5), (4, 5, 6, 7, 1, 0, 3, 2))),
    InputCase("s4-p",
              "group: a b\nrel: a^2\nrel: b^3\nrel: a b a b a b a b\n"
              "P: a b\norientable: true", "b",
              ((1, 0, 2, 3), (0, 2, 3, 1))),
    InputCase("c5-trivial", "group: a\nrel: a^5\nP: 1\norientable: true", "a",
              (_cycle(5),)),
    InputCase("d8-case3",
              "group: r s\nrel: r^4\nrel: s^2\nrel: r s r s\n"
              "P: r^2 , s\nP+: r^2\nn: s\norientable: false", "r",
              (_cycle(4), _negate(4))),
    InputCase("d6-case3",
              "group: r s\nrel: r^6\nrel: s^2\nrel: r s r s\n"
              "P: r , s\nP+: r\nn: s\norientable: false", "r",
              (_cycle(6), _negate(6))),
    # P+ = <r^3> is central, and conjugation by s genuinely permutes the
    # six double cosets (r-classes swap with r^2-classes)
    InputCase("d6-split-case3",
              "group: r s\nrel: r^6\nrel: s^2\nrel: r s r s\n"
              "P: r^3 , s\nP+: r^3\nn: s\norientable: false", "r",
              (_cycle(6), _negate(6))),
    # non-central P+ = <s>: double-coset orbits of size 2 over the table
    InputCase("d6-flip-case3",
              "group: r s\nrel: r^6\nrel: s^2\nrel: r s r s\n"
              "P: s , r^3\nP+: s\nn: r^3 s\norientable: false", "r",
              (_cycle(6), _negate(6))),
    InputCase("c4-case3",
              "group: a\nrel: a^4\nP: a^2\nP+: a^2\nn: 1\norientable: false",
              "a", (_cycle(4),)),
)

# inputs that must fail validation, with the check expected to fail
BROKEN_INPUTS: tuple[tuple[str, str, str], ...] = (
    ("d4-wrong-pplus",
     "group: r s\nrel: r^4\nrel: s^2\nrel: r s r s\n"
     "P: r^2\nP+: s\nn: r\norientable: false", "p_plus_in_p"),
    ("d4-bad-n",
     "group: r s\nrel: r^4\nrel: s^2\nrel: r s r s\n"
     "P: r , s\nP+: s\nn: r\norientable: false", "twist_normalizes_p_plus"),
)


def _cases_for(input: SurfaceKnotInput) -> tuple[tuple[CaseLabel, bool], ...]:
    if input.surface_orientable:
        return ((CaseLabel.CASE1, True), (CaseLabel.CASE1, False),
                (CaseLabel.CASE2, True), (CaseLabel.CASE2, False))
    return ((CaseLabel.CASE3, True), (CaseLabel.CASE3, False))


@lru_cache(maxsize=None)
def _resolved_groups():
    out = []
    for case in GROUP_CORPUS:
        parsed = parse_input(case.skg, label=case.name)
        subgroups = tuple(tuple(parse_word(w, parsed.presentation) for w in words)
                          for words in case.subgroups)
        out.append((case, parsed.presentation, subgroups))
    return tuple(out)


@lru_cache(maxsize=None)
def _resolved_inputs():
    out = []
    for case in INPUT_CORPUS:
        parsed = parse_input(case.skg, label=case.label)
        ctx = ClassifierContext.build(parsed)
        out.append((case, parsed, ctx))
    return tuple(out)


def _random_word(rng: random.Random, ngens: int, maxlen: int = 6) -> Word:
    length = rng.randint(0, maxlen)
    return free_reduce([(rng.randrange(ngens), rng.choice((1, -1)))
                        for _ in range(length)])


def _random_subgroup_word(rng: random.Random, gens, max_factors: int = 8) -> Word:
    gens = list(gens)
    if not gens:
        return Word()
    parts = []
    for _ in range(rng.randint(0, max_factors)):
        w = rng.choice(gens)
        parts.append(w if rng.random() < 0.5 else invert(w))
    return concat(*parts)


def _brute_double_coset(h_set, g: Perm) -> frozenset:
    return frozenset(_mul(_mul(h, g), k) for h in h_set for k in h_set)


def _sides(ctx: ClassifierContext):
    """(table, acting words) pairs to exercise: P, plus P+ when present."""
    sides = [(ctx.p_table, ctx.input.p_generators)]
    if ctx.p_plus_table is not None:
        sides.append((ctx.p_plus_table, ctx.input.p_plus_generators))
    return sides


# ---------------------------------------------------------------------------
# checks; each returns a detail string and raises AssertionError on failure
# ---------------------------------------------------------------------------

def check_corpus_models() -> str:
    for case, pres, subgroups in _resolved_groups():
        identity = tuple(range(len(case.model[0])))
        for rel in pres.relators:
            assert _eval(rel, case.model) == identity, \
                f"{case.name}: model violates a relator"
        assert len(mulclose(case.model)) == case.order, \
            f"{case.name}: model order is not {case.order}"
    return f"{len(GROUP_CORPUS)} models satisfy their relators at the right order"


def check_word_algebra(trials: int, seed: int) -> str:
    rng = random.Random(seed)
    for _ in range(trials):
        raw = [(rng.randrange(4), rng.choice((1, -1)))
               for _ in range(rng.randint(0, 12))]
        w = free_reduce(raw)
        assert free_reduce(w.letters) == w
        u = _random_word(rng, 4)
        v = _random_word(rng, 4)
        assert invert(invert(u)) == u
        assert invert(concat(u, v)) == concat(invert(v), invert(u))
        assert concat(u, invert(u)).is_identity
    return f"{trials} randomized word identities"


def check_enumeration_order_index() -> str:
    runs = 0
    for case, pres, subgroups in _resolved_groups():
        table = enumerate_cosets(pres, [])
        assert table.index == case.order, \
            f"{case.name}: trivial-subgroup index {table.index} != order {case.order}"
        runs += 1
        for words in subgroups:
            h_size = len(mulclose([_eval(w, case.model) for w in words]
                                  + [tuple(range(len(case.model[0])))]))
            expected = case.order // h_size
            table = enumerate_cosets(pres, words)
            assert table.index == expected, \
                f"{case.name}: subgroup index {table.index} != {expected}"
            runs += 1
    return f"{runs} enumerations match brute-force orders and indices"


def check_enumeration_table_invariants() -> str:
    checked = 0
    for case, pres, subgroups in _resolved_groups():
        for words in subgroups:
            table = enumerate_cosets(pres, words)
            n = table.index
            for col_letter in [(i, s) for i in range(len(pres.generators))
                               for s in (1, -1)]:
                image = [table.letter_action(c, col_letter) for c in range(1, n + 1)]
                assert sorted(image) == list(range(1, n + 1))
            for rel in pres.relators:
                assert all(table.trace(c, rel) == c for c in range(1, n + 1))
            for w in words:
                assert table.membership(w)
            assert table.witness(1).is_identity
            for c in range(1, n + 1):
                assert table.trace(1, table.witness(c)) == c
            checked += 1
    return f"{checked} tables satisfy permutation, closure and witness invariants"


def check_enumeration_determinism(seed: int) -> str:
    rng = random.Random(seed)
    compared = 0
    for case, pres, subgroups in _resolved_groups():
        for words in subgroups:
            base = enumerate_cosets(pres, words)
            relators = list(pres.relators)
            rng.shuffle(relators)
            shuffled_pres = type(pres)(pres.generators, tuple(relators))
            shuffled_words = list(words)
            rng.shuffle(shuffled_words)
            other = enumerate_cosets(shuffled_pres, shuffled_words)
            assert base.index == other.index
            letters = [(i, s) for i in range(len(pres.generators)) for s in (1, -1)]
            for c in range(1, base.index + 1):
                assert base.witness(c) == other.witness(c)
                for letter in letters:
                    assert base.letter_action(c, letter) == other.letter_action(c, letter)
            compared += 1
    return f"{compared} shuffled re-runs produced identical standardized tables"


def check_double_coset_partition() -> str:
    checked = 0
    for case, pres, subgroups in _resolved_groups():
        elements = mulclose(case.model)
        for words in subgroups:
            table = enumerate_cosets(pres, words)
            h_set = mulclose([_eval(w, case.model) for w in words]
                             + [tuple(range(len(case.model[0])))])
            coset_of = {g: frozenset(_mul(h, g) for h in h_set) for g in elements}
            # the witness map must biject table cosets onto the model's cosets
            bridge = {c: coset_of[_eval(table.witness(c), case.model)]
                      for c in range(1, table.index + 1)}
            assert len(set(bridge.values())) == table.index == \
                len(elements) // len(h_set), f"{case.name}: bad coset bridge"
            brute = {frozenset(coset_of[x] for x in _brute_double_coset(h_set, g))
                     for g in elements}
            table_side = {frozenset(bridge[c] for c in orbit.orbit)
                          for orbit in dc_all(table, words)}
            assert table_side == brute, f"{case.name}: partitions differ"
            checked += 1
    # pinned sanity value: S3 with subgroup <a> has orbits of sizes 1 and 2
    s3 = next(g for g in _resolved_groups() if g[0].name == "s3")
    table = enumerate_cosets(s3[1], s3[2][0])
    sizes = sorted(o.orbit_size for o in dc_all(table, s3[2][0]))
    assert sizes == [1, 2], f"s3/<a> orbit sizes {sizes}"
    return f"{checked} double-coset partitions equal brute force"


def check_representative_independence(trials: int, seed: int) -> str:
    total = 0
    for k, (case, parsed, ctx) in enumerate(_resolved_inputs()):
        rng = random.Random(seed + k)
        ngens = len(parsed.presentation.generators)
        for table, acting in _sides(ctx):
            for _ in range(trials):
                g = _random_word(rng, ngens)
                p = _random_subgroup_word(rng, acting)
                q = _random_subgroup_word(rng, acting)
                assert dc_id(table, acting, concat(p, g, q)) == \
                    dc_id(table, acting, g), f"{case.label}: slide changed the class"
                total += 1
    return f"{total} random slides left dc_id unchanged"


def check_involutions() -> str:
    total = 0
    for case, parsed, ctx in _resolved_inputs():
        for table, acting in _sides(ctx):
            orbits = dc_all(table, acting)
            assert sum(o.orbit_size for o in orbits) == table.index
            for d in orbits:
                assert dc_invert(table, acting, dc_invert(table, acting, d)) == d
                total += 1
        if ctx.p_plus_table is not None:
            table, acting = ctx.p_plus_table, parsed.p_plus_generators
            for d in dc_all(table, acting):
                once = dc_twist(table, acting, parsed.n_word, d, ctx.report)
                twice = dc_twist(table, acting, parsed.n_word, once, ctx.report)
                assert twice == d, f"{case.label}: twist is not an involution"
                total += 1
    return f"{total} double cosets verified under invert^2 = twist^2 = id"


def check_image_characterization() -> str:
    accepted = 0
    rejected = 0
    for case, parsed, ctx in _resolved_inputs():
        for label, core in _cases_for(parsed):
            for inv, _rep in enumerate_classes(ctx, label, core):
                assert image_member(ctx, label, core, inv), \
                    f"{case.label}: enumerated class rejected"
                accepted += 1
            witness = nonsurjectivity_witness(ctx, label, core)
            if witness is not None:
                assert not image_member(ctx, label, core, witness), \
                    f"{case.label}: witness not rejected"
                rejected += 1
    by_label = {case.label: ctx for case, _parsed, ctx in _resolved_inputs()}
    must_exist = (("t2", CaseLabel.CASE1, False),
                  ("d8-case3", CaseLabel.CASE3, True))
    for label, case_label, core in must_exist:
        assert nonsurjectivity_witness(by_label[label], case_label, core) is not None, \
            f"{label}: expected a non-surjectivity witness"
    return f"{accepted} classes accepted, {rejected} witnesses rejected"


def check_trivial_sanity() -> str:
    ctx = next(ctx for case, _p, ctx in _resolved_inputs()
               if case.label == "unknotted")
    n_cords = len(dc_all(ctx.p_table, ctx.input.p_generators))
    n_oriented = len(enumerate_classes(ctx, CaseLabel.CASE1, True))
    n_handles = len(enumerate_classes(ctx, CaseLabel.CASE1, False))
    assert n_cords == n_oriented == n_handles == 1, \
        (n_cords, n_oriented, n_handles)
    return "one class of cords, oriented-core handles and handles"


def check_classifier_count_oracle() -> str:
    checked = 0
    for case, parsed, ctx in _resolved_inputs():
        if case.model is None:
            continue
        elements = mulclose(case.model)
        identity = tuple(range(len(case.model[0])))
        case3 = not parsed.surface_orientable
        words = parsed.p_plus_generators if case3 else parsed.p_generators
        h_set = mulclose([_eval(w, case.model) for w in words] + [identity])
        n_img = _eval(parsed.n_word, case.model) if case3 else None

        def value(g: Perm, core: bool):
            if not case3:
                dc = _brute_double_coset(h_set, g)
                if core:
                    return dc
                return frozenset({dc, _brute_double_coset(h_set, _inv(g))})
            def pair(x):
                return frozenset({_brute_double_coset(h_set, x),
                                  _brute_double_coset(h_set, _mul(_mul(n_img, x), n_img))})
            return pair(g) if core else frozenset({pair(g), pair(_inv(g))})

        for label, core in _cases_for(parsed):
            brute_count = len({value(g, core) for g in elements})
            classes = enumerate_classes(ctx, label, core)
            assert len(classes) == brute_count, \
                f"{case.label} case{label.number} core={core}: " \
                f"{len(classes)} classes vs brute {brute_count}"
            checked += 1
    return f"{checked} class counts equal the element-level brute force"


def check_classifier_invariances(trials: int, seed: int) -> str:
    total = 0
    for k, (case, parsed, ctx) in enumerate(_resolved_inputs()):
        rng = random.Random(seed * 7 + k)
        ngens = len(parsed.presentation.generators)
        for label, core in _cases_for(parsed):
            acting = parsed.p_plus_generators if label is CaseLabel.CASE3 \
                else parsed.p_generators
            for _ in range(trials):
                g = _random_word(rng, ngens)
                p = _random_subgroup_word(rng, acting)
                q = _random_subgroup_word(rng, acting)
                base = handle_invariant(ctx, label, core, g)
                assert handle_invariant(ctx, label, core, concat(p, g, q)) == base
                if not core:
                    assert handle_invariant(ctx, label, core, invert(g)) == base
                if label is CaseLabel.CASE3 and core:
                    swapped = concat(parsed.n_word, g, parsed.n_word)
                    assert handle_invariant(ctx, label, core, swapped) == base
                total += 1
        if parsed.surface_orientable:
            for _ in range(trials // 4 + 1):
                g = _random_word(rng, ngens)
                for core in (True, False):
                    one = handle_invariant(ctx, CaseLabel.CASE1, core, g)
                    two = handle_invariant(ctx, CaseLabel.CASE2, core, g)
                    assert one.value == two.value
    return f"{total} invariance trials (slides, reversal, orientation swap)"


def check_equivalence_relation(seed: int) -> str:
    total = 0
    for k, (case, parsed, ctx) in enumerate(_resolved_inputs()):
        rng = random.Random(seed * 13 + k)
        ngens = len(parsed.presentation.generators)
        label, core = _cases_for(parsed)[0]
        sample = [_random_word(rng, ngens) for _ in range(6)]
        for g in sample:
            assert equivalent(ctx, label, core, g, g)
            total += 1
        for g1 in sample:
            for g2 in sample:
                forward = equivalent(ctx, label, core, g1, g2)
                assert forward == equivalent(ctx, label, core, g2, g1)
                if forward:
                    for g3 in sample:
                        if equivalent(ctx, label, core, g2, g3):
                            assert equivalent(ctx, label, core, g1, g3)
                total += 1
    return f"{total} reflexivity/symmetry/transitivity samples"


def check_roundtrip() -> str:
    for case, parsed, _ctx in _resolved_inputs():
        again = parse_input(serialize(parsed), label=parsed.label)
        assert again == parsed, f"{case.label}: round trip changed the input"
    return f"{len(INPUT_CORPUS)} inputs survive serialize/parse round trips"


def check_validation_vs_brute() -> str:
    checked = 0
    for case, parsed, ctx in _resolved_inputs():
        if case.model is None or parsed.surface_orientable:
            continue
        identity = tuple(range(len(case.model[0])))
        h_plus = mulclose([_eval(w, case.model)
                           for w in parsed.p_plus_generators] + [identity])
        n_img = _eval(parsed.n_word, case.model)
        ok_d = all(_mul(_mul(n_img, _eval(w, case.model)), _inv(n_img)) in h_plus
                   and _mul(_mul(_inv(n_img), _eval(w, case.model)), n_img) in h_plus
                   for w in parsed.p_plus_generators)
        ok_e = _mul(n_img, n_img) in h_plus
        named = {c.name: c.status for c in ctx.report.checks}
        assert (named["twist_normalizes_p_plus"] == "pass") == ok_d
        assert (named["n_squared_in_p_plus"] == "pass") == ok_e
        checked += 1
    for label, skg, failing in BROKEN_INPUTS:
        report = validate(parse_input(skg, label=label))
        named = {c.name: c.status for c in report.checks}
        assert named[failing] == "fail", f"{label}: expected {failing} to fail"
    return f"{checked} validated inputs and {len(BROKEN_INPUTS)} broken ones agree with brute force"


def check_quotient_soundness(pairs: int, seed: int, max_degree: int = 3) -> str:
    inputs = _resolved_inputs()
    total = 0
    while total < pairs:
        case, parsed, ctx = inputs[total % len(inputs)]
        rng = random.Random(seed * 31 + total)
        ngens = len(parsed.presentation.generators)
        cases = _cases_for(parsed)
        label, core = cases[0] if total % 2 == 0 else cases[-1]
        g1 = _random_word(rng, ngens)
        if rng.random() < 0.5:
            acting = parsed.p_plus_generators if label is CaseLabel.CASE3 \
                else parsed.p_generators
            g2 = concat(_random_subgroup_word(rng, acting), g1,
                        _random_subgroup_word(rng, acting))
        else:
            g2 = _random_word(rng, ngens)
        exact_equal = equivalent(ctx, label, core, g1, g2)
        verdict = quotient_separate(parsed, label, core, g1, g2,
                                    max_degree=max_degree)
        if exact_equal:
            assert verdict is SeparationVerdict.UNKNOWN, \
                f"{case.label}: separated an equivalent pair"
        else:
            # agreement direction: DISTINCT must imply exact inequivalence
            assert verdict in (SeparationVerdict.UNKNOWN, SeparationVerdict.DISTINCT)
        total += 1
    return f"{total} pairs; no equivalent pair was ever separated"


def check_quotient_determinism() -> str:
    s3 = next(g for g in _resolved_groups() if g[0].name == "s3")
    homs_a = find_homomorphisms(s3[1], 3)
    homs_b = find_homomorphisms(s3[1], 3)
    assert homs_a == homs_b
    t2 = parse_input("group: t\nP: t^2\norientable: true", label="t2")
    g1 = parse_word("t", t2.presentation)
    g2 = Word()
    v1 = quotient_separate(t2, CaseLabel.CASE1, True, g1, g2, max_degree=2)
    v2 = quotient_separate(t2, CaseLabel.CASE1, True, g1, g2, max_degree=2)
    assert v1 == v2 == SeparationVerdict.DISTINCT
    return "repeated searches returned identical homomorphisms and verdicts"


def check_record_determinism() -> str:
    from . import cli  # imported lazily; cli itself imports this module

    compared = 0
    sink = io.StringIO()
    with tempfile.TemporaryDirectory() as tmp, contextlib.redirect_stdout(sink):
        for case, parsed, _ctx in _resolved_inputs():
            path = os.path.join(tmp, case.label + ".skg")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(case.skg + "\n")
            case_no = "3" if not parsed.surface_orientable else "1"
            commands = (
                ["classes", path, "--case", case_no, "--core-oriented"],
                ["classes", path, "--case", case_no],
                ["invariant", path, "--case", case_no, "--cord", case.sample_cord],
            )
            for argv in commands:
                blobs = []
                for run_idx in (0, 1):
                    records = os.path.join(tmp, f"out{run_idx}.jsonl")
                    code = cli.run(argv + ["--records", records])
                    assert code == 0, f"{case.label}: {argv} exited {code}"
                    with open(records, "rb") as fh:
                        blobs.append(fh.read())
                assert blobs[0] == blobs[1], f"{case.label}: records differ"
                compared += 1
    return f"{compared} command reruns produced byte-identical records"


@dataclass(frozen=True)
class SelfTestResult:
    name: str
    passed: bool
    detail: str


def run_all(trials: int = 250, pairs: int = 160,
            seed: int = 20260809) -> list[SelfTestResult]:
    """Run every oracle property; used by `selftest` and the acceptance suite."""
    checks: list[tuple[str, Callable[[], str]]] = [
        ("corpus-models", check_corpus_models),
        ("word-algebra", lambda: check_word_algebra(trials, seed)),
        ("enumeration-order-index", check_enumeration_order_index),
        ("enumeration-table-invariants", check_enumeration_table_invariants),
        ("enumeration-determinism", lambda: check_enumeration_determinism(seed)),
        ("double-coset-partition", check_double_coset_partition),
        ("representative-independence",
         lambda: check_representative_independence(max(trials // 2, 50), seed)),
        ("involutions", check_involutions),
        ("image-characterization", check_image_characterization),
        ("trivial-group-sanity", check_trivial_sanity),
        ("classifier-count-oracle", check_classifier_count_oracle),
        ("classifier-invariances",
         lambda: check_classifier_invariances(max(trials // 5, 20), seed)),
        ("equivalence-relation", lambda: check_equivalence_relation(seed)),
        ("input-roundtrip", check_roundtrip),
        ("validation-vs-brute", check_validation_vs_brute),
        ("quotient-soundness", lambda: check_quotient_soundness(pairs, seed)),
        ("quotient-determinism", check_quotient_determinism),
        ("record-determinism", check_record_determinism),
    ]
    results = []
    for name, fn in checks:
        try:
            detail = fn()
            results.append(SelfTestResult(name, True, detail))
        except (AssertionError, HandleCosetError, ValueError) as exc:
            results.append(SelfTestResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
