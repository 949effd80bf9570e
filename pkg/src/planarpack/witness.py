"""Certificates for the three decision problems."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import edge


class WitnessError(ValueError):
    """A witness is malformed or cannot be translated."""


@dataclass(frozen=True)
class CycleWitness:
    edges: frozenset


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple

    @property
    def edges(self) -> frozenset:
        vs = self.vertices
        return frozenset(edge(a, b) for a, b in zip(vs, vs[1:]))


@dataclass(frozen=True)
class PartitionWitness:
    tree: frozenset
    spanning_tree: frozenset


Witness = CycleWitness | PathWitness | PartitionWitness
