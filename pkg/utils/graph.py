"""
Sierpinski graphs S(n,m) and their decorated variants S_{s,t}(n,m)

Vertices are words of n base-m digits, most significant first. Internally a
vertex is keyed by its base-m value (0-based), so vertex sets can be dense
arrays over range(m**n).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np

from config.settings import SIZE_LIMITS, VERTEX_DIGIT_ALPHABET_MAX
from utils.errors import InvalidParamsError, SizeCapError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphParams:
    """The pair (n, m) defining S(n,m); n = 0 is the one-vertex graph"""

    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidParamsError(f"n must be a non-negative integer, got {self.n!r}")
        if not isinstance(self.m, (int, np.integer)) or self.m < 2:
            raise InvalidParamsError(f"m must be an integer >= 2, got {self.m!r}")
        if self.m > SIZE_LIMITS["max_m"]:
            raise SizeCapError(f"m={self.m} exceeds the alphabet cap {SIZE_LIMITS['max_m']}")
        if self.m ** self.n > SIZE_LIMITS["max_vertices"]:
            raise SizeCapError(f"S({self.n},{self.m}) has {self.m ** self.n} vertices, above the construction cap")

    @property
    def order(self) -> int:
        """Number of vertices, m^n"""
        return self.m ** self.n

    @property
    def copy_size(self) -> int:
        """Vertices per top-level copy, m^(n-1)"""
        if self.n == 0:
            raise InvalidParamsError("S(0,m) has no top-level copies")
        return self.m ** (self.n - 1)

    def sub(self) -> "GraphParams":
        """Parameters of a top-level copy, S(n-1,m)"""
        return GraphParams(self.n - 1, self.m)

    def require_enumerable(self, cap: int = None) -> None:
        limit = SIZE_LIMITS["max_enumerable_vertices"] if cap is None else cap
        if self.order > limit:
            raise SizeCapError(f"S({self.n},{self.m}) has {self.order} vertices; enumeration cap is {limit}")

    def __str__(self) -> str:
        return f"S({self.n},{self.m})"


@dataclass(frozen=True)
class Vertex:
    """An n-digit base-m word"""

    digits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))

    def __len__(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class Decoration:
    """
    Exterior decoration (s, t) of S_{s,t}(n,m)

    Labels split into I = {0..s-1} (exterior end counted inside S),
    J = {s..s+t-1} (no exterior edge) and K = {s+t..m-1} (exterior end outside S).
    """

    s: int
    t: int

    def __post_init__(self):
        if self.s < 0 or self.t < 0:
            raise InvalidParamsError(f"s and t must be non-negative, got s={self.s}, t={self.t}")

    @classmethod
    def plain(cls, m: int) -> "Decoration":
        """The undecorated case S_{0,m}(n,m) = S(n,m)"""
        return cls(0, m)

    def validate_for(self, m: int) -> None:
        if self.s + self.t > m:
            raise InvalidParamsError(f"s + t = {self.s + self.t} exceeds m = {m}")

    def label_class(self, label: int) -> str:
        if label < self.s:
            return "I"
        if label < self.s + self.t:
            return "J"
        return "K"

    def inner_labels(self) -> range:
        return range(0, self.s)

    def outer_labels(self, m: int) -> range:
        return range(self.s + self.t, m)


@dataclass(frozen=True)
class Edge:
    """Unordered vertex pair, stored with the smaller-index endpoint first"""

    u: Vertex
    v: Vertex

    def __post_init__(self):
        if self.u == self.v:
            raise InvalidParamsError(f"edge endpoints must differ, got {self.u.digits} twice")
        if self.v.digits < self.u.digits:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @classmethod
    def between(cls, u: Vertex, v: Vertex, p: GraphParams) -> "Edge":
        """Build an edge after checking adjacency in S(n,m)"""
        if not is_edge(u, v, p):
            raise InvalidParamsError(f"{u.digits} and {v.digits} are not adjacent in {p}")
        return cls(u, v)

    def endpoints(self) -> Tuple[Vertex, Vertex]:
        return self.u, self.v


def validate_vertex(v: Vertex, p: GraphParams) -> None:
    if len(v.digits) != p.n:
        raise InvalidParamsError(f"vertex {v.digits} has {len(v.digits)} digits, {p} needs {p.n}")
    for d in v.digits:
        if not 0 <= d < p.m:
            raise InvalidParamsError(f"digit {d} of {v.digits} is outside [0, {p.m - 1}]")


def repunit(length: int, m: int) -> int:
    """Base-m value of the word 1^length, i.e. (m^length - 1)/(m - 1)"""
    return (m ** length - 1) // (m - 1)


def vertex_index(v: Vertex, p: GraphParams) -> int:
    validate_vertex(v, p)
    index = 0
    for d in v.digits:
        index = index * p.m + d
    return index


def vertex_at(index: int, p: GraphParams) -> Vertex:
    """Inverse of vertex_index"""
    if not 0 <= index < p.order:
        raise InvalidParamsError(f"vertex index {index} outside [0, {p.order})")
    return Vertex(index_digits(index, p))


def index_digits(index: int, p: GraphParams) -> Tuple[int, ...]:
    digits = [0] * p.n
    for pos in range(p.n - 1, -1, -1):
        index, digits[pos] = divmod(index, p.m)
    return tuple(digits)


def corner_index(label: int, p: GraphParams) -> int:
    """Index of the corner vertex label^n"""
    return label * repunit(p.n, p.m)


def is_edge(u: Vertex, v: Vertex, p: GraphParams) -> bool:
    """
    Adjacency test of S(n,m)

    u ~ v iff for some position h the words agree before h, differ at h, and
    every later digit of u equals v_h while every later digit of v equals u_h.
    """
    validate_vertex(u, p)
    validate_vertex(v, p)
    if u == v:
        return False
    h = next(i for i in range(p.n) if u.digits[i] != v.digits[i])
    uh, vh = u.digits[h], v.digits[h]
    return all(u.digits[j] == vh and v.digits[j] == uh for j in range(h + 1, p.n))


def neighbor_indices(index: int, p: GraphParams) -> List[int]:
    """
    Neighbor indices of the vertex with the given index

    Every vertex has the m-1 neighbors obtained by changing its last digit; a
    non-corner vertex has one more, across the copy boundary fixed by its
    maximal constant suffix.
    """
    if p.n == 0:
        return []
    digits = index_digits(index, p)
    last = digits[-1]
    base = index - last
    result = [base + c for c in range(p.m) if c != last]
    start = p.n - 1
    while start > 0 and digits[start - 1] == last:
        start -= 1
    if start > 0:
        h = start - 1
        tail = p.n - h - 1
        prefix = index // p.m ** (p.n - h)
        result.append(prefix * p.m ** (p.n - h) + last * p.m ** tail + digits[h] * repunit(tail, p.m))
    return result


def neighbors(v: Vertex, p: GraphParams) -> List[Vertex]:
    return [vertex_at(i, p) for i in neighbor_indices(vertex_index(v, p), p)]


def degree(v: Vertex, p: GraphParams) -> int:
    """m - 1 for the corners i^n, m for every other vertex"""
    return len(neighbor_indices(vertex_index(v, p), p))


def corner_vertices(p: GraphParams) -> List[Vertex]:
    """The corner vertices i^n, i = 0..m-1 (a single vertex when n = 0)"""
    if p.n == 0:
        return [Vertex(())]
    return [Vertex((i,) * p.n) for i in range(p.m)]


def edge_count(p: GraphParams) -> int:
    """C(m,2) * (m^n - 1)/(m - 1)"""
    return p.m * (p.m - 1) // 2 * repunit(p.n, p.m)


@lru_cache(maxsize=32)
def edge_index_array(p: GraphParams) -> np.ndarray:
    """
    All edges as an (E, 2) int64 array of vertex indices, smaller index first

    For each prefix length t and each label pair a < b, the word
    prefix·a·b^(n-t-1) is joined to prefix·b·a^(n-t-1).
    """
    p.require_enumerable()
    m, n = p.m, p.n
    if n == 0:
        return np.zeros((0, 2), dtype=np.int64)
    low, high = np.triu_indices(m, 1)
    blocks = []
    for t in range(n):
        tail = n - t - 1
        prefixes = np.arange(m ** t, dtype=np.int64) * m ** (n - t)
        first = low * m ** tail + high * repunit(tail, m)
        second = high * m ** tail + low * repunit(tail, m)
        u = (prefixes[:, None] + first[None, :]).ravel()
        v = (prefixes[:, None] + second[None, :]).ravel()
        blocks.append(np.stack([u, v], axis=1))
    result = np.concatenate(blocks)
    result.setflags(write=False)
    logger.debug(f"Enumerated {len(result)} edges of {p}")
    return result


def edges(p: GraphParams) -> List[Edge]:
    """Every edge of S(n,m) exactly once, sorted by endpoint words"""
    found = [Edge(vertex_at(int(u), p), vertex_at(int(v), p)) for u, v in edge_index_array(p)]
    return sorted(found, key=lambda e: (e.u.digits, e.v.digits))


def iter_vertices(p: GraphParams) -> Iterator[Vertex]:
    for index in range(p.order):
        yield vertex_at(index, p)


def recursive_graph(p: GraphParams) -> nx.Graph:
    """
    Reference construction on vertex indices: m disjoint copies of S(n-1,m)
    plus the edge {h·j^(n-1), j·h^(n-1)} for every label pair h != j
    """
    p.require_enumerable()
    graph = nx.Graph()
    graph.add_node(0)
    for level in range(1, p.n + 1):
        size = p.m ** (level - 1)
        ones = repunit(level - 1, p.m)
        grown = nx.Graph()
        for h in range(p.m):
            grown.add_nodes_from(h * size + x for x in graph.nodes)
            grown.add_edges_from((h * size + a, h * size + b) for a, b in graph.edges)
        for h in range(p.m):
            for j in range(h + 1, p.m):
                grown.add_edge(h * size + j * ones, j * size + h * ones)
        graph = grown
    return graph


def format_vertex(v: Vertex, p: GraphParams) -> str:
    """Digit string for m <= 10, dot-separated digits above"""
    if p.m <= VERTEX_DIGIT_ALPHABET_MAX:
        return "".join(str(d) for d in v.digits)
    return ".".join(str(d) for d in v.digits)


def parse_vertex(text: str, p: GraphParams) -> Vertex:
    text = text.strip()
    try:
        if p.n == 0:
            parts: Sequence[str] = [] if text in ("", "-") else [text]
        elif p.m <= VERTEX_DIGIT_ALPHABET_MAX:
            parts = list(text)
        else:
            parts = text.split(".")
        v = Vertex(tuple(int(part) for part in parts))
    except ValueError as exc:
        raise InvalidParamsError(f"cannot parse vertex {text!r}: {exc}") from exc
    validate_vertex(v, p)
    return v


def to_networkx(p: GraphParams) -> nx.Graph:
    """S(n,m) with nodes labelled by their text form"""
    graph = nx.Graph()
    graph.add_nodes_from(format_vertex(v, p) for v in iter_vertices(p))
    graph.add_edges_from(
        (format_vertex(e.u, p), format_vertex(e.v, p)) for e in edges(p)
    )
    return graph


def edge_list_text(p: GraphParams) -> str:
    """One edge per line, "U V" """
    return "\n".join(nx.generate_edgelist(to_networkx(p), data=False))
