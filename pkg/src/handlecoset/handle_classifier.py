"""Classification of cords and 1-handles by double-coset invariants.

A 1-handle enters here purely as a cord word g in the knot group, and
the three case labels fix which peripheral subgroup and which extra
symmetry apply:

  Case 1: surface oriented, handle orientable.  Oriented cores are
          classified by the double coset PgP; unoriented handles by the
          unordered pair {PgP, Pg^-1P}.
  Case 2: surface oriented, handle non-orientable.  Computationally
          identical to Case 1; the label is carried through.
  Case 3: surface non-orientable.  Everything happens over P+; the
          orientation swap at the endpoints acts as the twist g -> n g n,
          so oriented cores give {P+gP+, P+ngnP+} and unoriented handles
          the unordered pair of the two oriented-core values for g and
          g^-1.

Degenerate cord words (the empty word, words tracing into the subgroup)
are legal; they model cords that can be isotoped into the boundary
neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from .coset_enumeration import CosetTable, EnumerationLimits, enumerate_cosets
from .double_cosets import (DoubleCosetId, UnorderedPair, dc_all, dc_id,
                            dc_invert, dc_twist)
from .errors import (CaseMismatch, MissingPPlus, PreconditionUnverified,
                     TableMismatch)
from .knot_input import (SurfaceKnotInput, ValidationReport,
                         validate_with_tables)
from .word_algebra import Word, invert


class CaseLabel(Enum):
    CASE1 = 1  # oriented surface, orientable handle
    CASE2 = 2  # oriented surface, non-orientable handle
    CASE3 = 3  # non-orientable surface

    @property
    def requires_orientable(self) -> bool:
        return self is not CaseLabel.CASE3

    @property
    def number(self) -> int:
        return self.value


InvariantValue = Union[DoubleCosetId, UnorderedPair]


def _kind_of(case: CaseLabel, core_oriented: bool) -> str:
    if case is CaseLabel.CASE3:
        return "case3-oriented-core" if core_oriented else "case3"
    return "oriented-core" if core_oriented else "unordered-core"


@dataclass(frozen=True, eq=False)
class HandleInvariant:
    """Case-tagged invariant value.

    kind "oriented-core": a single double coset (Cases 1/2, oriented core)
    kind "unordered-core": pair {D, D^-1} (Cases 1/2)
    kind "case3-oriented-core": pair {D, twist(D)} over P+
    kind "case3": unordered pair of two such pairs

    Cases 1 and 2 share their kinds, and equality compares kind and value
    only; the case label rides along for reporting.
    """

    case: CaseLabel
    core_oriented: bool
    value: InvariantValue

    def __post_init__(self):
        kind = self.kind
        v = self.value
        if kind == "oriented-core":
            ok = isinstance(v, DoubleCosetId)
        elif kind in ("unordered-core", "case3-oriented-core"):
            ok = isinstance(v, UnorderedPair) and \
                all(isinstance(e, DoubleCosetId) for e in v.elements)
        else:
            ok = isinstance(v, UnorderedPair) and \
                all(isinstance(e, UnorderedPair) and
                    all(isinstance(d, DoubleCosetId) for d in e.elements)
                    for e in v.elements)
        if not ok:
            raise ValueError(f"value shape does not match kind {kind!r}")

    @property
    def kind(self) -> str:
        return _kind_of(self.case, self.core_oriented)

    def __eq__(self, other):
        if not isinstance(other, HandleInvariant):
            return NotImplemented
        return self.kind == other.kind and self.value == other.value

    def __hash__(self):
        return hash((self.kind, self.value))

    def double_cosets(self) -> tuple[DoubleCosetId, ...]:
        """All double-coset ids inside the value, left to right."""
        out: list[DoubleCosetId] = []

        def walk(v):
            if isinstance(v, DoubleCosetId):
                out.append(v)
            else:
                walk(v.first)
                walk(v.second)

        walk(self.value)
        return tuple(out)


@dataclass(frozen=True)
class ClassifierContext:
    """An input together with its enumerated tables and validation report.

    Build once, query many times; all queries are read-only.
    """

    input: SurfaceKnotInput
    p_table: CosetTable
    p_plus_table: Optional[CosetTable]
    report: ValidationReport

    @classmethod
    def build(cls, input: SurfaceKnotInput,
              limits: Optional[EnumerationLimits] = None) -> "ClassifierContext":
        p_table = enumerate_cosets(input.presentation, input.p_generators, limits)
        p_plus_table = None
        if not input.surface_orientable:
            p_plus_table = enumerate_cosets(input.presentation,
                                            input.p_plus_generators, limits)
        report = validate_with_tables(input, p_table, p_plus_table)
        if not report.ok:
            failed = "; ".join(f"{c.name}: {c.detail}" for c in report.failures)
            raise PreconditionUnverified(f"input failed validation: {failed}")
        return cls(input, p_table, p_plus_table, report)


def _require_case(ctx: ClassifierContext, case: CaseLabel) -> None:
    if case.requires_orientable != ctx.input.surface_orientable:
        want = "orientable" if case.requires_orientable else "non-orientable"
        raise CaseMismatch(f"case {case.number} needs a {want} surface input")


def _case3_table(ctx: ClassifierContext) -> tuple[CosetTable, Sequence[Word]]:
    if ctx.p_plus_table is None:
        raise MissingPPlus("this context has no P+ table")
    return ctx.p_plus_table, ctx.input.p_plus_generators


def _twist(ctx: ClassifierContext, d: DoubleCosetId) -> DoubleCosetId:
    table, acting = _case3_table(ctx)
    return dc_twist(table, acting, ctx.input.n_word, d, ctx.report)


def oriented_cord_invariant(ctx: ClassifierContext, g: Word) -> DoubleCosetId:
    """Equivalence class of an oriented cord: the double coset PgP."""
    return dc_id(ctx.p_table, ctx.input.p_generators, g)


def local_oriented_cord_invariant(ctx: ClassifierContext, g: Word) -> DoubleCosetId:
    """Class of an oriented cord with local orientations: P+gP+.

    The cord word must come from path choices compatible with the local
    orientations; that is the caller's responsibility.
    """
    table, acting = _case3_table(ctx)
    return dc_id(table, acting, g)


def _invariant_from_dc(ctx: ClassifierContext, case: CaseLabel,
                       core_oriented: bool, d: DoubleCosetId) -> HandleInvariant:
    if case is CaseLabel.CASE3:
        table, acting = _case3_table(ctx)
        if core_oriented:
            value: InvariantValue = UnorderedPair.of(d, _twist(ctx, d))
        else:
            di = dc_invert(table, acting, d)
            value = UnorderedPair.of(
                UnorderedPair.of(d, _twist(ctx, d)),
                UnorderedPair.of(di, _twist(ctx, di)))
    else:
        if core_oriented:
            value = d
        else:
            value = UnorderedPair.of(
                d, dc_invert(ctx.p_table, ctx.input.p_generators, d))
    return HandleInvariant(case, core_oriented, value)


def handle_invariant(ctx: ClassifierContext, case: CaseLabel,
                     core_oriented: bool, g: Word) -> HandleInvariant:
    """Invariant of the 1-handle carried by the cord word g."""
    _require_case(ctx, case)
    if case is CaseLabel.CASE3:
        table, acting = _case3_table(ctx)
        d = dc_id(table, acting, g)
    else:
        d = dc_id(ctx.p_table, ctx.input.p_generators, g)
    return _invariant_from_dc(ctx, case, core_oriented, d)


def equivalent(ctx: ClassifierContext, case: CaseLabel, core_oriented: bool,
               g1: Word, g2: Word) -> bool:
    """True iff the two cord words carry equivalent 1-handles."""
    return (handle_invariant(ctx, case, core_oriented, g1)
            == handle_invariant(ctx, case, core_oriented, g2))


def image_member(ctx: ClassifierContext, case: CaseLabel, core_oriented: bool,
                 candidate: HandleInvariant) -> bool:
    """Decide whether a candidate value is realized by some 1-handle."""
    _require_case(ctx, case)
    if candidate.kind != _kind_of(case, core_oriented):
        raise CaseMismatch("candidate carries a different kind of value")
    if case is CaseLabel.CASE3:
        table, acting = _case3_table(ctx)
    else:
        table, acting = ctx.p_table, ctx.input.p_generators
    for d in candidate.double_cosets():
        if d.table is not table:
            raise TableMismatch("candidate was built over a different table")

    if case is not CaseLabel.CASE3:
        if core_oriented:
            # the oriented-core map is onto all double cosets
            return True
        first, second = candidate.value.elements
        return second == dc_invert(table, acting, first)

    if core_oriented:
        first, second = candidate.value.elements
        return second == _twist(ctx, first)

    # unoriented Case 3: some ordering must be the pair of oriented-core
    # values of a word and its inverse
    a, b = candidate.value.elements
    for x, y in ((a, b), (b, a)):
        for d in x.elements:
            di = dc_invert(table, acting, d)
            if (x == UnorderedPair.of(d, _twist(ctx, d))
                    and y == UnorderedPair.of(di, _twist(ctx, di))):
                return True
    return False


def enumerate_classes(ctx: ClassifierContext, case: CaseLabel,
                      core_oriented: bool) -> list[tuple[HandleInvariant, Word]]:
    """All equivalence classes, each with a representative cord word.

    Exactly the image of the invariant map, without duplicates, ordered
    by the canonical index of the first double coset reached.
    """
    _require_case(ctx, case)
    if case is CaseLabel.CASE3:
        table, acting = _case3_table(ctx)
    else:
        table, acting = ctx.p_table, ctx.input.p_generators
    out: list[tuple[HandleInvariant, Word]] = []
    seen: set[HandleInvariant] = set()
    for d in dc_all(table, acting):
        inv = _invariant_from_dc(ctx, case, core_oriented, d)
        if inv not in seen:
            seen.add(inv)
            out.append((inv, table.witness(d.canonical)))
    return out


def nonsurjectivity_witness(ctx: ClassifierContext, case: CaseLabel,
                            core_oriented: bool) -> Optional[HandleInvariant]:
    """A candidate value no 1-handle realizes, when one must exist.

    Cases 1/2 with oriented cores have a bijective invariant, so the
    answer there is always None.  Otherwise the witness pairs the class
    of a word outside the relevant subgroup with the class of the
    identity; image_member rejects it.
    """
    _require_case(ctx, case)

    if case is not CaseLabel.CASE3:
        if core_oriented or ctx.p_table.index == 1:
            return None  # bijective map, or P = G
        acting = ctx.input.p_generators
        d_one = dc_id(ctx.p_table, acting, Word())
        d_out = dc_id(ctx.p_table, acting, ctx.p_table.witness(2))
        return HandleInvariant(case, False, UnorderedPair.of(d_out, d_one))

    table, acting = _case3_table(ctx)
    d_one = dc_id(table, acting, Word())
    n = ctx.input.n_word
    if not table.membership(n):
        # n witnesses P+ != P: {class(n), class(1)} is never hit
        pair = UnorderedPair.of(dc_id(table, acting, n), d_one)
    elif table.index > 1:
        # the twist by n degenerates; any word outside P+ works
        pair = UnorderedPair.of(dc_id(table, acting, table.witness(2)), d_one)
    else:
        return None  # P+ = G: the single value is hit
    if core_oriented:
        return HandleInvariant(case, True, pair)
    return HandleInvariant(case, False, UnorderedPair.of(pair, pair))
