"""Conceptual navigation: the lattice as a browsable decision space.

A session stands on one concept at a time. Its available moves are the
cover neighbours: going UP deletes attributes (gaining objects), going
DOWN adds attributes (losing objects), and each cover step is the
minimal such decision. Jumps allow non-minimal repositioning and are
marked in the history so minimality audits stay possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .context import bits
from .errors import NotAdjacent
from .lattice import ConceptLattice


class MoveDirection(str, Enum):
    UP = "UP"
    DOWN = "DOWN"


@dataclass(frozen=True)
class Move:
    """One minimal decision from the current concept to a cover neighbour."""

    direction: MoveDirection
    target: int
    attributes_added: tuple[str, ...]
    attributes_removed: tuple[str, ...]
    objects_gained: tuple[str, ...]
    objects_lost: tuple[str, ...]
    target_is_valid_configuration: bool

    def to_json_dict(self) -> dict:
        return {
            "direction": self.direction.value,
            "target": self.target,
            "attributes_added": list(self.attributes_added),
            "attributes_removed": list(self.attributes_removed),
            "objects_gained": list(self.objects_gained),
            "objects_lost": list(self.objects_lost),
            "target_is_valid_configuration": self.target_is_valid_configuration,
        }


@dataclass(frozen=True)
class HistoryEntry:
    concept: int
    via: str  # "start" | "move" | "jump"


class NavigationSession:
    """Mutable cursor over an immutable lattice, with an append-only history.

    A session is owned by one accessor at a time; the service layer
    serializes operations per session id.
    """

    def __init__(self, lattice: ConceptLattice, at: int | None = None):
        self.lattice = lattice
        current = lattice.top if at is None else at
        lattice._check(current)
        self.current: int = current
        self.history: list[HistoryEntry] = [HistoryEntry(current, "start")]

    def _names_delta(self, mask_from: int, mask_to: int, names) -> tuple[str, ...]:
        return tuple(names[i] for i in bits(mask_from & ~mask_to))

    def _move_to(self, target: int, direction: MoveDirection) -> Move:
        lat = self.lattice
        cur = lat.concepts[self.current]
        tgt = lat.concepts[target]
        objs, attrs = lat.context.objects, lat.context.attributes
        return Move(
            direction=direction,
            target=target,
            attributes_added=self._names_delta(tgt.intent_mask, cur.intent_mask, attrs),
            attributes_removed=self._names_delta(cur.intent_mask, tgt.intent_mask, attrs),
            objects_gained=self._names_delta(tgt.extent_mask, cur.extent_mask, objs),
            objects_lost=self._names_delta(cur.extent_mask, tgt.extent_mask, objs),
            target_is_valid_configuration=bool(lat.introduced_objects(target)),
        )

    def available_moves(self) -> list[Move]:
        """One move per cover neighbour: UP moves first, each group sorted by target."""
        up, down = self.lattice.neighbourhood(self.current)
        return [self._move_to(t, MoveDirection.UP) for t in up] + [
            self._move_to(t, MoveDirection.DOWN) for t in down
        ]

    def apply_move(self, target: int) -> "NavigationSession":
        """Move to a cover neighbour of the current concept."""
        self.lattice._check(target)
        up, down = self.lattice.neighbourhood(self.current)
        if target not in up and target not in down:
            raise NotAdjacent(
                f"concept {target} is not a cover neighbour of {self.current}; use jump"
            )
        self.current = target
        self.history.append(HistoryEntry(target, "move"))
        return self

    def jump(self, target: int) -> "NavigationSession":
        """Reposition to any concept; recorded as a jump (non-minimal) step."""
        self.lattice._check(target)
        self.current = target
        self.history.append(HistoryEntry(target, "jump"))
        return self

    def reachable_configurations(self) -> list[tuple[str, int]]:
        """Valid configurations refining the current one: the extent's object-concepts."""
        lat = self.lattice
        return [
            (name, lat.object_concept(name))
            for name in lat.extent_names(self.current)
        ]

    def to_json_dict(self, session_id: str | None = None) -> dict:
        data = {
            "session_id": session_id,
            "current": self.current,
            "history": [{"concept": h.concept, "via": h.via} for h in self.history],
        }
        if session_id is None:
            del data["session_id"]
        return data


def start_session(lattice: ConceptLattice, at: int | None = None) -> NavigationSession:
    """Open a session, at the given concept or at the top (most generic) one."""
    return NavigationSession(lattice, at)
