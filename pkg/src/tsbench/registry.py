from __future__ import annotations

from typing import Generic, Iterator, TypeVar

from .errors import DuplicateNameError, UnknownNameError

T = TypeVar("T")


class Registry(Generic[T]):
    """Ordered, name-unique collection. Registering returns a new registry."""

    error_type = DuplicateNameError
    unknown_type = UnknownNameError

    def __init__(self, entries=()):
        self._entries: tuple[T, ...] = ()
        for entry in entries:
            self._entries = self._checked_append(entry)

    def _checked_append(self, entry: T) -> tuple[T, ...]:
        if entry.name in self.names:
            raise self.error_type(f"{entry.name!r} is already registered")
        return self._entries + (entry,)

    def register(self, entry: T):
        new = type(self).__new__(type(self))
        new._entries = self._checked_append(entry)
        return new

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self._entries)

    def get(self, name: str) -> T:
        for entry in self._entries:
            if entry.name == name:
                return entry
        raise self.unknown_type(f"unknown name {name!r}")

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def __iter__(self) -> Iterator[T]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, index: int) -> T:
        return self._entries[index]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.names)})"
