"""Oriented signed Gauss codes for knotoid and knot diagrams.

A knotoid diagram on the sphere is stored as the sequence of crossing
passages met while walking the open arc from its first endpoint (the leg)
to its second (the head).  Each passage records the crossing label, whether
the strand passes over or under, and the local writhe sign of the crossing.
A closed (knot) diagram is the same data read cyclically.

Entries are packed into single integers (``label*4 + over*2 + sign_bit``)
so that codes are plain tuples of ints: hashable, compact and cheap to
transform.  All operations treat codes as immutable values.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator

__all__ = [
    "GaussEntry",
    "InvolutionKind",
    "KnotoidCode",
    "ClosedCode",
    "CodeError",
    "make_entry",
    "entry_id",
    "entry_is_over",
    "entry_sign",
    "parse_code",
    "parse_closed_code",
    "serialize_entries",
    "apply_involution",
    "mirror_closed",
    "detect_composite",
    "canonical_key",
    "canonical_form",
    "read_gauss_file",
    "write_gauss_file",
]


class CodeError(ValueError):
    """Raised for malformed Gauss codes (pairing, sign or token errors)."""


# -- packed entry helpers ----------------------------------------------------

_OVER_BIT = 2
_SIGN_BIT = 1

# XOR masks implementing the involutions entrywise.
_MIRROR_MASK = _OVER_BIT | _SIGN_BIT  # swap over/under, flip sign
_SYMMETRY_MASK = _SIGN_BIT            # flip sign
_ROTATION_MASK = _OVER_BIT            # swap over/under


def make_entry(crossing_id: int, over: bool, sign: int) -> int:
    if crossing_id <= 0:
        raise CodeError(f"crossing id must be positive, got {crossing_id}")
    if sign not in (1, -1):
        raise CodeError(f"crossing sign must be +1 or -1, got {sign}")
    return (crossing_id << 2) | (_OVER_BIT if over else 0) | (1 if sign > 0 else 0)


def entry_id(entry: int) -> int:
    return entry >> 2


def entry_is_over(entry: int) -> bool:
    return bool(entry & _OVER_BIT)


def entry_sign(entry: int) -> int:
    return 1 if entry & _SIGN_BIT else -1


def _entry_token(entry: int) -> str:
    return "{}{}{}".format(
        "O" if entry & _OVER_BIT else "U",
        entry >> 2,
        "+" if entry & _SIGN_BIT else "-",
    )


class GaussEntry:
    """Unpacked view of a single crossing passage."""

    __slots__ = ("crossing_id", "over", "sign")

    def __init__(self, crossing_id: int, over: bool, sign: int):
        self.crossing_id = crossing_id
        self.over = over
        self.sign = sign

    @classmethod
    def from_packed(cls, entry: int) -> "GaussEntry":
        return cls(entry_id(entry), entry_is_over(entry), entry_sign(entry))

    def packed(self) -> int:
        return make_entry(self.crossing_id, self.over, self.sign)

    def __repr__(self) -> str:
        return f"GaussEntry({_entry_token(self.packed())!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaussEntry)
            and self.crossing_id == other.crossing_id
            and self.over == other.over
            and self.sign == other.sign
        )

    def __hash__(self) -> int:
        return hash(self.packed())


class InvolutionKind(Enum):
    REVERSE = "reverse"
    MIRROR = "mirror"
    SYMMETRY = "symmetry"
    ROTATION = "rotation"


def validate_entries(entries: tuple[int, ...], context: str = "code") -> None:
    """Check the pairing rules: each label twice, once over and once under,
    with equal signs at both passages."""
    seen: dict[int, int] = {}
    for e in entries:
        cid = e >> 2
        if cid <= 0:
            raise CodeError(f"{context}: nonpositive crossing id {cid}")
        if cid in seen:
            prev = seen[cid]
            if prev is None:
                raise CodeError(f"{context}: crossing {cid} appears more than twice")
            if (prev & _OVER_BIT) == (e & _OVER_BIT):
                raise CodeError(
                    f"{context}: crossing {cid} passes {'over' if e & _OVER_BIT else 'under'} twice"
                )
            if (prev & _SIGN_BIT) != (e & _SIGN_BIT):
                raise CodeError(f"{context}: crossing {cid} has mismatched signs")
            seen[cid] = None  # type: ignore[assignment]
        else:
            seen[cid] = e
    for cid, val in seen.items():
        if val is not None:
            raise CodeError(f"{context}: crossing {cid} appears only once")


class _BaseCode(tuple):
    """Common behaviour of open and closed codes (tuples of packed entries)."""

    closed: bool = False

    def __new__(cls, entries: Iterable[int] = (), validate: bool = True):
        self = super().__new__(cls, entries)
        if validate:
            validate_entries(self, cls.__name__)
        return self

    @property
    def crossing_count(self) -> int:
        return len(self) // 2

    def gauss_entries(self) -> Iterator[GaussEntry]:
        return (GaussEntry.from_packed(e) for e in self)

    def writhe(self) -> int:
        return sum(1 if e & _SIGN_BIT else -1 for e in self)

    def serialize(self) -> str:
        return serialize_entries(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.serialize()!r})"


class KnotoidCode(_BaseCode):
    """Open Gauss code, traversed leg to head."""

    closed = False


class ClosedCode(_BaseCode):
    """Cyclic Gauss code of a knot diagram; rotations are equal diagrams."""

    closed = True

    def __eq__(self, other) -> bool:
        if isinstance(other, ClosedCode):
            return canonical_form(self) == canonical_form(other)
        return NotImplemented

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash(canonical_key(self))


# -- parsing / serialization -------------------------------------------------

def _parse_tokens(text: str, context: str) -> tuple[int, ...]:
    entries = []
    for token in text.split():
        if len(token) < 3 or token[0] not in "OUou" or token[-1] not in "+-":
            raise CodeError(f"{context}: malformed token {token!r}")
        try:
            cid = int(token[1:-1])
        except ValueError:
            raise CodeError(f"{context}: malformed token {token!r}") from None
        if cid <= 0:
            raise CodeError(f"{context}: malformed token {token!r}")
        entries.append(make_entry(cid, token[0] in "Oo", 1 if token[-1] == "+" else -1))
    return tuple(entries)


def parse_code(text: str) -> KnotoidCode:
    """Parse a whitespace-separated token string like ``O1+ U2- U1+ O2-``.

    The empty string parses to the 0-crossing (trivial) diagram.
    """
    return KnotoidCode(_parse_tokens(text, "parse_code"))


def parse_closed_code(text: str) -> ClosedCode:
    return ClosedCode(_parse_tokens(text, "parse_closed_code"))


def serialize_entries(entries: Iterable[int]) -> str:
    return " ".join(_entry_token(e) for e in entries)


# -- involutions ---------------------------------------------------------------

def _xor_all(entries: tuple[int, ...], mask: int) -> tuple[int, ...]:
    return tuple(e ^ mask for e in entries)


def apply_involution(code: KnotoidCode, kind: InvolutionKind) -> KnotoidCode:
    """Reverse, mirror, symmetry or rotation image of a knotoid code.

    Reversal flips the traversal direction (leg and head swap); mirroring
    swaps all passes and signs; symmetry flips signs only; rotation (the
    composite of the previous two) swaps passes only.
    """
    if kind is InvolutionKind.REVERSE:
        return KnotoidCode(code[::-1], validate=False)
    if kind is InvolutionKind.MIRROR:
        return KnotoidCode(_xor_all(code, _MIRROR_MASK), validate=False)
    if kind is InvolutionKind.SYMMETRY:
        return KnotoidCode(_xor_all(code, _SYMMETRY_MASK), validate=False)
    if kind is InvolutionKind.ROTATION:
        return KnotoidCode(_xor_all(code, _ROTATION_MASK), validate=False)
    raise ValueError(f"unknown involution {kind!r}")


def mirror_closed(code: ClosedCode) -> ClosedCode:
    """Mirror image of a closed code (swap passes, flip signs)."""
    return ClosedCode(_xor_all(code, _MIRROR_MASK), validate=False)


# -- composite detection -------------------------------------------------------

def detect_composite(entries: tuple[int, ...]) -> tuple[bool, int | None]:
    """Detect a connected-sum split of an open code.

    Returns ``(True, i)`` for the minimal cut ``0 < i < len`` such that the
    crossing labels before and after position ``i`` are disjoint (equivalently
    no crossing spans the cut), else ``(False, None)``.
    """
    open_ids = 0
    seen: set[int] = set()
    for i, e in enumerate(entries):
        cid = e >> 2
        if cid in seen:
            open_ids -= 1
        else:
            seen.add(cid)
            open_ids += 1
        if open_ids == 0 and 0 < i + 1 < len(entries):
            return True, i + 1
    return False, None


# -- canonical forms -----------------------------------------------------------

def _relabel(entries: tuple[int, ...]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for e in entries:
        cid = e >> 2
        new = mapping.get(cid)
        if new is None:
            new = len(mapping) + 1
            mapping[cid] = new
        out.append((new << 2) | (e & 3))
    return tuple(out)


def canonical_form(code: _BaseCode | tuple[int, ...], closed: bool | None = None) -> tuple[int, ...]:
    """Entries relabelled in first-occurrence order; closed codes take the
    minimum over all rotations."""
    entries = tuple(code)
    if closed is None:
        closed = getattr(code, "closed", False)
    if not closed or not entries:
        return _relabel(entries)
    return min(_relabel(entries[i:] + entries[:i]) for i in range(len(entries)))


def canonical_key(code: _BaseCode | tuple[int, ...], closed: bool | None = None) -> bytes:
    """Stable byte-string key, equal exactly for codes equal up to relabelling
    (and rotation, for closed codes)."""
    form = canonical_form(code, closed)
    n = len(form) // 2
    if n < 64:
        return bytes((1, *form))
    out = bytearray((2,))
    for e in form:
        out += e.to_bytes(4, "big")
    return bytes(out)


# -- .gauss file IO -------------------------------------------------------------

def read_gauss_file(path) -> list[KnotoidCode]:
    """Read one code per line; ``#`` starts a comment line.

    A line with no tokens is the 0-crossing (trivial) code, so blank lines
    are codes, not separators; only comment lines are skipped.
    """
    codes = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if raw.lstrip().startswith("#"):
                continue
            line = raw.split("#", 1)[0].strip()
            try:
                codes.append(parse_code(line))
            except CodeError as exc:
                raise CodeError(f"{path}:{lineno}: {exc}") from None
    return codes


def write_gauss_file(path, codes: Iterable[KnotoidCode], header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        for code in codes:
            fh.write(code.serialize() + "\n")
