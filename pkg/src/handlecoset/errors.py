"""Exception types shared across the package."""


class HandleCosetError(Exception):
    """Base class for every domain error raised by this package."""


class SkgSyntaxError(HandleCosetError):
    """Malformed .skg text or word syntax; carries a 1-based position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class DuplicateGenerator(SkgSyntaxError):
    """A generator name appears twice on the group line."""


class UnknownGenerator(SkgSyntaxError):
    """A word uses a name that is not a generator of the presentation."""


class MissingSection(HandleCosetError):
    """A required section of the input file is absent."""

    def __init__(self, section: str, why: str = ""):
        detail = f"missing required section {section!r}"
        if why:
            detail += f" ({why})"
        super().__init__(detail)
        self.section = section


class ResourceExhausted(HandleCosetError):
    """Coset enumeration hit its limits before completing.

    Inconclusive: the index may be infinite, or merely larger than the
    budget.  Callers must never read this as "infinite index".
    """

    def __init__(self, limits, live_cosets: int, total_defined: int):
        super().__init__(
            f"coset enumeration exhausted its budget "
            f"({live_cosets} live cosets, {total_defined} defined; "
            f"limits: {limits.max_live_cosets} live / {limits.max_total_defined} total)"
        )
        self.limits = limits
        self.live_cosets = live_cosets
        self.total_defined = total_defined


class CosetRangeError(HandleCosetError):
    """A coset index outside 1..index was passed to a table query."""

    def __init__(self, coset: int, index: int):
        super().__init__(f"coset {coset} out of range 1..{index}")
        self.coset = coset
        self.index = index


class MissingPPlus(HandleCosetError):
    """An operation needed the positive peripheral subgroup table, absent here."""


class CaseMismatch(HandleCosetError):
    """The requested case is inconsistent with the input's orientability."""


class PreconditionUnverified(HandleCosetError):
    """A computation was requested without the validation it depends on."""


class TableMismatch(HandleCosetError):
    """A candidate value was built over a different coset table."""
