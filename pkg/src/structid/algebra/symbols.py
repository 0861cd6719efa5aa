"""Named indeterminates and per-analysis symbol tables.

A Symbol is nothing more than a validated name; equality and ordering
are by name so that symbols survive serialization round trips. A
SymbolTable records which names one analysis uses and fixes their
insertion order, which downstream code treats as the default variable
order for printing and monomial comparisons. There is no global
registry: each analysis owns its table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union


class SymbolError(ValueError):
    """Malformed symbol name or symbol-table conflict."""


def _validate_name(name: str) -> None:
    if not name or not name[0].isalpha():
        raise SymbolError(f"symbol name must start with a letter: {name!r}")
    for ch in name:
        if not (ch.isalnum() or ch == "_"):
            raise SymbolError(f"symbol name contains invalid character {ch!r}: {name!r}")


@dataclass(frozen=True, order=True)
class Symbol:
    """A named indeterminate. Equality and ordering are by name."""

    name: str

    def __post_init__(self) -> None:
        _validate_name(self.name)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Symbol({self.name!r})"


class SymbolTable:
    """Ordered registry of the symbols used by one analysis."""

    def __init__(self, names: Iterable[Union[str, Symbol]] = ()) -> None:
        self._by_name: dict[str, Symbol] = {}
        for name in names:
            self.intern(name)

    def intern(self, name: Union[str, Symbol]) -> Symbol:
        """Return the table's symbol for this name, creating it if new."""
        key = name.name if isinstance(name, Symbol) else name
        existing = self._by_name.get(key)
        if existing is not None:
            return existing
        sym = name if isinstance(name, Symbol) else Symbol(key)
        self._by_name[key] = sym
        return sym

    def add_new(self, name: Union[str, Symbol]) -> Symbol:
        """Intern a name that must not already be present."""
        key = name.name if isinstance(name, Symbol) else name
        if key in self._by_name:
            raise SymbolError(f"symbol already declared: {key!r}")
        return self.intern(name)

    def get(self, name: str) -> Optional[Symbol]:
        return self._by_name.get(name)

    def symbols(self) -> list[Symbol]:
        """All symbols in insertion order."""
        return list(self._by_name.values())

    def clone(self) -> "SymbolTable":
        return SymbolTable(self.symbols())

    def __contains__(self, name: Union[str, Symbol]) -> bool:
        key = name.name if isinstance(name, Symbol) else name
        return key in self._by_name

    def __len__(self) -> int:
        return len(self._by_name)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._by_name.values())

    def __repr__(self) -> str:
        return f"SymbolTable({[s.name for s in self]!r})"
