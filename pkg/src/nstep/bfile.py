"""Reading and verifying b-file term listings.

A b-file holds one `index value` pair per line, indices strictly
increasing; `#` starts a comment and blank lines are skipped.  File
indices need not equal sequence indices: an explicit offset maps file
index i to sequence term i + offset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import TermCache


class BFileFormatError(ValueError):
    """Raised for lines that do not parse or indices out of order."""


@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


@dataclass(frozen=True)
class BFileReport:
    entries: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def parse_bfile(text: str) -> list[BFileEntry]:
    """Parse b-file text into entries, enforcing the line format."""
    entries: list[BFileEntry] = []
    last_index = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(
                "line %d: expected 'index value', got %r" % (lineno, raw))
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(
                "line %d: non-integer field in %r" % (lineno, raw)) from None
        if last_index is not None and index <= last_index:
            raise BFileFormatError(
                "line %d: index %d does not increase past %d"
                % (lineno, index, last_index))
        last_index = index
        entries.append(BFileEntry(index, value))
    return entries


def verify_terms(entries, cache: TermCache, offset: int = 0,
                 max_mismatches: int = 10) -> BFileReport:
    """Compare entries against cache terms at index + offset."""
    mismatches = []
    for entry in entries:
        expected = cache.term(entry.index + offset)
        if entry.value != expected:
            mismatches.append((entry.index, expected, entry.value))
            if len(mismatches) >= max_mismatches:
                break
    return BFileReport(len(entries), tuple(mismatches))
