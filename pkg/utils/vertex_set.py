"""
Dense membership structure over the m^n vertices of S(n,m)
"""

from typing import Iterable, List, Union

import numpy as np
from typing_extensions import Self

from utils.errors import InvalidParamsError, RangeError
from utils.graph import GraphParams, Vertex, vertex_at, vertex_index


class VertexSet:
    """
    Immutable vertex subset backed by a boolean array keyed by vertex index

    The cardinality is cached at construction and always equals the number
    of set entries.
    """

    __slots__ = ("params", "_members", "_size")

    def __init__(self, params: GraphParams, members: np.ndarray):
        params.require_enumerable()
        members = np.array(members, dtype=bool, copy=True)
        if members.shape != (params.order,):
            raise InvalidParamsError(f"membership array has shape {members.shape}, expected ({params.order},)")
        members.setflags(write=False)
        self.params = params
        self._members = members
        self._size = int(np.count_nonzero(members))

    @classmethod
    def empty(cls, params: GraphParams) -> Self:
        return cls(params, np.zeros(params.order, dtype=bool))

    @classmethod
    def full(cls, params: GraphParams) -> Self:
        return cls(params, np.ones(params.order, dtype=bool))

    @classmethod
    def from_indices(cls, params: GraphParams, indices: Iterable[int]) -> Self:
        members = np.zeros(params.order, dtype=bool)
        index_array = np.fromiter((int(i) for i in indices), dtype=np.int64)
        if index_array.size and (index_array.min() < 0 or index_array.max() >= params.order):
            raise InvalidParamsError(f"vertex index outside [0, {params.order})")
        members[index_array] = True
        return cls(params, members)

    @classmethod
    def from_vertices(cls, params: GraphParams, vertices: Iterable[Vertex]) -> Self:
        return cls.from_indices(params, (vertex_index(v, params) for v in vertices))

    @classmethod
    def lex_segment(cls, params: GraphParams, ell: int) -> Self:
        """The vertices of lex rank 1..ℓ"""
        if not 0 <= ell <= params.order:
            raise RangeError(f"ℓ={ell} outside [0, {params.order}] for {params}")
        members = np.zeros(params.order, dtype=bool)
        members[:ell] = True
        return cls(params, members)

    @property
    def members(self) -> np.ndarray:
        """Read-only boolean membership array"""
        return self._members

    @property
    def size(self) -> int:
        return self._size

    def __len__(self) -> int:
        return self._size

    def __contains__(self, item: Union[Vertex, int]) -> bool:
        if isinstance(item, Vertex):
            item = vertex_index(item, self.params)
        return bool(self._members[int(item)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.params == other.params and np.array_equal(self._members, other._members)

    def __hash__(self) -> int:
        return hash((self.params, self._members.tobytes()))

    def __repr__(self) -> str:
        return f"VertexSet({self.params}, size={self._size})"

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self._members)

    def vertices(self) -> List[Vertex]:
        return [vertex_at(int(i), self.params) for i in self.indices()]

    def complement(self) -> Self:
        return type(self)(self.params, ~self._members)

    def block(self, start: int, stop: int) -> np.ndarray:
        """Membership of the index range [start, stop) (a top-level copy, for instance)"""
        return self._members[start:stop]

    def with_block(self, start: int, block: np.ndarray) -> Self:
        """Copy of this set with the index range starting at start replaced"""
        members = self._members.copy()
        members[start:start + len(block)] = block
        return type(self)(self.params, members)

    def is_lex_segment(self) -> bool:
        return bool(self._members[:self._size].all())
