"""Problem instances, invariant checks and the FGX v1 text format.

Every instance is a frozen dataclass holding tuples, so instances are
hashable, comparable and safe to share between worker processes.
Indices exposed in witnesses are 1-based, as in the problem statements.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "SENTINEL",
    "FormatError",
    "OvInstance",
    "ThreeSumInstance",
    "ConvThreeSumInstance",
    "McConvThreeSumInstance",
    "WeightedGraph",
    "LcsInstance",
    "LcisInstance",
    "FrechetInstance",
    "SecondShortestPathInstance",
    "TraversalWitness",
    "SolveResult",
    "ProblemInstance",
    "tag_of",
    "validate",
    "write_instance",
    "read_instance",
    "write_many",
    "read_many",
    "dist2",
]

#: Array entry that never takes part in an arithmetic solution.
SENTINEL = None

Point = tuple[int, int]
Edge = tuple[int, int, int]


class FormatError(ValueError):
    """Malformed FGX text. ``line`` is 1-based, 0 when unknown."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def dist2(p: Point, q: Point) -> int:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


@dataclass(frozen=True)
class OvInstance:
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    d: int

    @property
    def n(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class ThreeSumInstance:
    A: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class ConvThreeSumInstance:
    A: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class McConvThreeSumInstance:
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[Optional[int], ...]

    @property
    def n(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class WeightedGraph:
    """Vertices are ``1..n``. ``k`` is set when the graph plays the
    Negative-Weight k-Clique role, ``colors`` for Triangle Collection."""

    n: int
    edges: tuple[Edge, ...]
    directed: bool = False
    k: Optional[int] = None
    colors: Optional[tuple[int, ...]] = None

    def adjacency(self) -> dict[int, dict[int, int]]:
        adj: dict[int, dict[int, int]] = {v: {} for v in range(1, self.n + 1)}
        for u, v, w in self.edges:
            adj[u][v] = w
            if not self.directed:
                adj[v][u] = w
        return adj

    def components(self) -> list[list[int]]:
        """Weakly connected components, each sorted, ordered by least vertex."""
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), []).append(v)
        return [groups[r] for r in sorted(groups)]

    def max_component_order(self) -> int:
        return max((len(c) for c in self.components()), default=0)


@dataclass(frozen=True)
class LcsInstance:
    x1: tuple[int, ...]
    x2: tuple[int, ...]
    k: int
    sigma: int

    @property
    def n(self) -> int:
        return max(len(self.x1), len(self.x2))


@dataclass(frozen=True)
class LcisInstance:
    x1: tuple[int, ...]
    x2: tuple[int, ...]
    k: int
    strict: bool = True

    @property
    def n(self) -> int:
        return max(len(self.x1), len(self.x2))


@dataclass(frozen=True)
class FrechetInstance:
    """Point lists with integer coordinates at fixed-point ``scale``.

    ``k2`` is the squared distance threshold in scaled units, so a real
    threshold of 1 at scale 15 is ``k2 = 225``.
    """

    P: tuple[Point, ...]
    Q: tuple[Point, ...]
    scale: int
    k2: int

    @property
    def n(self) -> int:
        return len(self.P)


@dataclass(frozen=True)
class SecondShortestPathInstance:
    graph: WeightedGraph
    s: int
    t: int
    k: int

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class TraversalWitness:
    """Monotone grid path over ``(i, j)`` positions, 1-based."""

    cells: tuple[tuple[int, int], ...]

    def shift(self) -> int:
        return max((abs(i - j) for i, j in self.cells), default=0)

    def width2(self, P: Sequence[Point], Q: Sequence[Point]) -> int:
        return max(dist2(P[i - 1], Q[j - 1]) for i, j in self.cells)

    def is_monotone(self, n_p: int, n_q: int) -> bool:
        if not self.cells or self.cells[0] != (1, 1) or self.cells[-1] != (n_p, n_q):
            return False
        steps = {(1, 0), (0, 1), (1, 1)}
        return all(
            (b[0] - a[0], b[1] - a[1]) in steps
            for a, b in zip(self.cells, self.cells[1:])
        )


@dataclass(frozen=True)
class SolveResult:
    answer: bool
    witness: object = None
    #: optimum / distance the decision was derived from, when there is one
    value: object = None


ProblemInstance = Union[
    OvInstance,
    ThreeSumInstance,
    ConvThreeSumInstance,
    McConvThreeSumInstance,
    WeightedGraph,
    LcsInstance,
    LcisInstance,
    FrechetInstance,
    SecondShortestPathInstance,
]


def tag_of(inst: ProblemInstance) -> str:
    if isinstance(inst, OvInstance):
        return "ov"
    if isinstance(inst, ThreeSumInstance):
        return "3sum"
    if isinstance(inst, ConvThreeSumInstance):
        return "conv3sum"
    if isinstance(inst, McConvThreeSumInstance):
        return "mcconv3sum"
    if isinstance(inst, WeightedGraph):
        return "tricol" if inst.colors is not None else "clique"
    if isinstance(inst, LcsInstance):
        return "lcs"
    if isinstance(inst, LcisInstance):
        return "lcis"
    if isinstance(inst, FrechetInstance):
        return "frechet"
    if isinstance(inst, SecondShortestPathInstance):
        return "2sp"
    raise TypeError(f"not a problem instance: {type(inst).__name__}")


# -- validation ---------------------------------------------------------------


def _graph_violations(g: WeightedGraph, prefix: str = "") -> list[str]:
    out = []
    if g.n < 0:
        out.append(f"{prefix}n: negative vertex count")
    seen = set()
    for u, v, _ in g.edges:
        if not (1 <= u <= g.n and 1 <= v <= g.n):
            out.append(f"{prefix}edges: vertex out of range in ({u}, {v})")
            continue
        if u == v:
            out.append(f"{prefix}edges: self-loop at {u}")
        key = (u, v) if g.directed else (min(u, v), max(u, v))
        if key in seen:
            out.append(f"{prefix}edges: duplicate edge {key}")
        seen.add(key)
    if g.colors is not None and len(g.colors) != g.n:
        out.append(f"{prefix}colors: expected {g.n} colors, got {len(g.colors)}")
    return out


def validate(inst: ProblemInstance) -> list[str]:
    """Return the list of violated invariants; empty means valid."""
    out: list[str] = []
    if isinstance(inst, OvInstance):
        if len(inst.A) != len(inst.B):
            out.append("A/B size mismatch")
        if len(inst.A) < 1:
            out.append("n: at least one vector required")
        if inst.d < 1:
            out.append("d: dimension must be positive")
        for side, vecs in (("A", inst.A), ("B", inst.B)):
            for idx, vec in enumerate(vecs, 1):
                if len(vec) != inst.d:
                    out.append(f"{side}[{idx}]: expected {inst.d} coordinates")
                elif any(c not in (0, 1) for c in vec):
                    out.append(f"{side}[{idx}]: coordinates must be 0/1")
    elif isinstance(inst, ThreeSumInstance):
        bound = inst.n**4
        if any(abs(a) > bound for a in inst.A):
            out.append("A: entry outside [-n^4, n^4]")
    elif isinstance(inst, ConvThreeSumInstance):
        if inst.n < 1:
            out.append("n: at least one entry required")
    elif isinstance(inst, McConvThreeSumInstance):
        if not len(inst.A) == len(inst.B) == len(inst.C):
            out.append("A/B/C length mismatch")
        if any(a is None for a in inst.A + inst.B):
            out.append("A/B: SENTINEL only allowed in C")
    elif isinstance(inst, WeightedGraph):
        out.extend(_graph_violations(inst))
        if inst.k is not None and inst.k < 1:
            out.append("k: clique order must be positive")
    elif isinstance(inst, LcsInstance):
        if inst.k < 0:
            out.append("k: must be non-negative")
        if any(not 0 <= s < inst.sigma for s in inst.x1 + inst.x2):
            out.append("x1/x2: symbol outside [0, sigma)")
    elif isinstance(inst, LcisInstance):
        if inst.k < 0:
            out.append("k: must be non-negative")
        if any(s < 0 for s in inst.x1 + inst.x2):
            out.append("x1/x2: entries must be natural numbers")
    elif isinstance(inst, FrechetInstance):
        if not inst.P or not inst.Q:
            out.append("empty point list")
        elif len(inst.P) != len(inst.Q):
            out.append("P/Q length mismatch")
        if inst.scale < 1:
            out.append("scale: must be positive")
        if inst.k2 < 0:
            out.append("k2: must be non-negative")
    elif isinstance(inst, SecondShortestPathInstance):
        out.extend(_graph_violations(inst.graph, "graph."))
        if not inst.graph.directed:
            out.append("graph: must be directed")
        if inst.s == inst.t:
            out.append("s/t: must differ")
        if not (1 <= inst.s <= inst.graph.n and 1 <= inst.t <= inst.graph.n):
            out.append("s/t: vertex out of range")
        if any(w < 0 for _, _, w in inst.graph.edges):
            out.append("graph.edges: negative weight")
    else:
        raise TypeError(f"not a problem instance: {type(inst).__name__}")
    return out


# -- FGX v1 writer ------------------------------------------------------------


def _ints(xs: Iterable[Optional[int]]) -> str:
    return " ".join("_" if x is None else str(x) for x in xs)


def _section(name: str, inline: str = "") -> str:
    return f"{name}: {inline}" if inline else f"{name}:"


def write_instance(inst: ProblemInstance) -> str:
    """Canonical FGX v1 text of one instance (ASCII, ``\\n`` line ends)."""
    tag = tag_of(inst)
    lines = [f"fgx 1 {tag}"]
    if isinstance(inst, OvInstance):
        lines.append(f"n={inst.n} d={inst.d}")
        for name, vecs in (("A", inst.A), ("B", inst.B)):
            lines.append(_section(name, " ".join("".join(map(str, v)) for v in vecs)))
    elif isinstance(inst, (ThreeSumInstance, ConvThreeSumInstance)):
        lines.append(f"n={inst.n}")
        lines.append(_section("A", _ints(inst.A)))
    elif isinstance(inst, McConvThreeSumInstance):
        lines.append(f"n={inst.n}")
        for name, arr in (("A", inst.A), ("B", inst.B), ("C", inst.C)):
            lines.append(_section(name, _ints(arr)))
    elif isinstance(inst, WeightedGraph):
        head = f"n={inst.n}"
        if inst.k is not None:
            head += f" k={inst.k}"
        lines.append(head + f" directed={int(inst.directed)}")
        lines.append("E:")
        lines.extend(f"{u} {v} {w}" for u, v, w in inst.edges)
        if inst.colors is not None:
            lines.append(_section("colors", _ints(inst.colors)))
    elif isinstance(inst, LcsInstance):
        lines.append(f"k={inst.k} sigma={inst.sigma}")
        lines.append(_section("A", _ints(inst.x1)))
        lines.append(_section("B", _ints(inst.x2)))
    elif isinstance(inst, LcisInstance):
        lines.append(f"k={inst.k} strict={int(inst.strict)}")
        lines.append(_section("A", _ints(inst.x1)))
        lines.append(_section("B", _ints(inst.x2)))
    elif isinstance(inst, FrechetInstance):
        lines.append(f"n={inst.n} scale={inst.scale} k2={inst.k2}")
        for name, pts in (("A", inst.P), ("B", inst.Q)):
            lines.append("%s:" % name)
            lines.extend(f"{x} {y}" for x, y in pts)
    elif isinstance(inst, SecondShortestPathInstance):
        g = inst.graph
        lines.append(f"n={g.n} s={inst.s} t={inst.t} k={inst.k} directed=1")
        lines.append("E:")
        lines.extend(f"{u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def write_many(instances: Iterable[ProblemInstance], ledger: Optional[dict] = None) -> str:
    """Multi-instance file, optionally preceded by a ``#ledger`` block."""
    out = io.StringIO()
    if ledger is not None:
        out.write("#ledger\n")
        for key, value in ledger.items():
            out.write(f"#{key}={value}\n")
    out.write("---\n".join(write_instance(i) for i in instances))
    return out.getvalue()


# -- FGX v1 reader ------------------------------------------------------------

_TAGS = {"ov", "3sum", "conv3sum", "mcconv3sum", "clique", "lcs", "lcis", "frechet", "2sp", "tricol"}
_KEYS = {"n", "d", "k", "sigma", "scale", "k2", "s", "t", "strict", "directed"}


@dataclass
class _Parsed:
    tag: str
    header: dict[str, int] = field(default_factory=dict)
    sections: dict[str, list[tuple[int, list[str]]]] = field(default_factory=dict)
    line_of: dict[str, int] = field(default_factory=dict)


def _to_int(tok: str, lineno: int, allow_sentinel: bool = False) -> Optional[int]:
    if allow_sentinel and tok == "_":
        return None
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected integer, got {tok!r}", lineno) from None


def _parse_block(lines: list[tuple[int, str]]) -> _Parsed:
    body = [(no, ln) for no, ln in lines if ln.strip() and not ln.startswith("#")]
    if not body:
        raise FormatError("empty instance block", lines[0][0] if lines else 0)
    no, first = body[0]
    parts = first.split()
    if len(parts) != 3 or parts[0] != "fgx":
        raise FormatError("expected header 'fgx <version> <tag>'", no)
    if parts[1] != "1":
        raise FormatError(f"unsupported FGX version {parts[1]!r}", no)
    if parts[2] not in _TAGS:
        raise FormatError(f"unknown problem tag {parts[2]!r}", no)
    parsed = _Parsed(parts[2])
    current: Optional[str] = None
    for no, ln in body[1:]:
        head, sep, rest = ln.partition(":")
        if sep and head.strip() and " " not in head.strip() and not head.strip().lstrip("-").isdigit():
            current = head.strip()
            if current in parsed.sections:
                raise FormatError(f"duplicate section {current!r}", no)
            parsed.sections[current] = []
            parsed.line_of[current] = no
            if rest.strip():
                parsed.sections[current].append((no, rest.split()))
            continue
        toks = ln.split()
        if current is None and all("=" in t for t in toks):
            for tok in toks:
                key, _, val = tok.partition("=")
                if key not in _KEYS:
                    raise FormatError(f"unknown header key {key!r}", no)
                parsed.header[key] = _to_int(val, no)
            continue
        if current is None:
            raise FormatError("data outside of a section", no)
        parsed.sections[current].append((no, toks))
    return parsed


def _need(p: _Parsed, key: str) -> int:
    if key not in p.header:
        raise FormatError(f"missing header key {key!r}")
    return p.header[key]


def _flat(p: _Parsed, name: str, allow_sentinel: bool = False) -> list[Optional[int]]:
    if name not in p.sections:
        raise FormatError(f"missing section {name!r}")
    return [_to_int(t, no, allow_sentinel) for no, toks in p.sections[name] for t in toks]


def _rows(p: _Parsed, name: str, width: int) -> list[tuple[int, ...]]:
    if name not in p.sections:
        raise FormatError(f"missing section {name!r}")
    rows = []
    for no, toks in p.sections[name]:
        if len(toks) != width:
            raise FormatError(f"expected {width} integers per row", no)
        rows.append(tuple(_to_int(t, no) for t in toks))
    return rows


def _bitvecs(p: _Parsed, name: str) -> tuple[tuple[int, ...], ...]:
    if name not in p.sections:
        raise FormatError(f"missing section {name!r}")
    out = []
    for no, toks in p.sections[name]:
        for tok in toks:
            if set(tok) - {"0", "1"}:
                raise FormatError(f"bit-vector must be a 0/1 string, got {tok!r}", no)
            out.append(tuple(int(c) for c in tok))
    return tuple(out)


def _check_n(p: _Parsed, actual: int) -> None:
    if "n" in p.header and p.header["n"] != actual:
        raise FormatError(f"header n={p.header['n']} but {actual} items given")


def _build(p: _Parsed) -> ProblemInstance:
    tag = p.tag
    if tag == "ov":
        A, B = _bitvecs(p, "A"), _bitvecs(p, "B")
        _check_n(p, len(A))
        return OvInstance(A, B, _need(p, "d"))
    if tag in ("3sum", "conv3sum"):
        A = tuple(_flat(p, "A"))
        _check_n(p, len(A))
        return (ThreeSumInstance if tag == "3sum" else ConvThreeSumInstance)(A)
    if tag == "mcconv3sum":
        A, B = tuple(_flat(p, "A")), tuple(_flat(p, "B"))
        C = tuple(_flat(p, "C", allow_sentinel=True))
        _check_n(p, len(A))
        return McConvThreeSumInstance(A, B, C)
    if tag in ("clique", "tricol", "2sp"):
        n = _need(p, "n")
        edges = tuple(_rows(p, "E", 3))
        directed = bool(p.header.get("directed", 1 if tag == "2sp" else 0))
        if tag == "2sp":
            g = WeightedGraph(n, edges, directed=directed)
            return SecondShortestPathInstance(g, _need(p, "s"), _need(p, "t"), _need(p, "k"))
        colors = tuple(_flat(p, "colors")) if tag == "tricol" else None
        return WeightedGraph(n, edges, directed=directed, k=p.header.get("k"), colors=colors)
    if tag == "lcs":
        return LcsInstance(tuple(_flat(p, "A")), tuple(_flat(p, "B")), _need(p, "k"), _need(p, "sigma"))
    if tag == "lcis":
        return LcisInstance(
            tuple(_flat(p, "A")), tuple(_flat(p, "B")), _need(p, "k"), bool(p.header.get("strict", 1))
        )
    if tag == "frechet":
        P, Q = tuple(_rows(p, "A", 2)), tuple(_rows(p, "B", 2))
        _check_n(p, len(P))
        return FrechetInstance(P, Q, _need(p, "scale"), _need(p, "k2"))
    raise FormatError(f"unknown problem tag {tag!r}")  # pragma: no cover


def _split_blocks(text: str) -> tuple[dict[str, str], list[list[tuple[int, str]]]]:
    if not text.isascii():
        raise FormatError("FGX files are ASCII")
    ledger: dict[str, str] = {}
    blocks: list[list[tuple[int, str]]] = [[]]
    in_ledger = False
    for no, ln in enumerate(text.splitlines(), 1):
        if ln.strip() == "---":
            blocks.append([])
            continue
        if ln.startswith("#"):
            if ln.strip() == "#ledger":
                in_ledger = True
            elif in_ledger and "=" in ln:
                key, _, val = ln[1:].partition("=")
                ledger[key.strip()] = val.strip()
            continue
        in_ledger = False
        blocks[-1].append((no, ln))
    return ledger, blocks


def read_many(text: Union[str, bytes]) -> tuple[list[ProblemInstance], dict[str, str]]:
    """Parse a (multi-instance) FGX file. Returns ``(instances, ledger)``."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError:
            raise FormatError("FGX files are ASCII") from None
    ledger, blocks = _split_blocks(text)
    instances = [_build(_parse_block(b)) for b in blocks if any(ln.strip() for _, ln in b)]
    if not instances:
        raise FormatError("no instance found")
    return instances, ledger


def read_instance(text: Union[str, bytes]) -> ProblemInstance:
    instances, _ = read_many(text)
    if len(instances) != 1:
        raise FormatError(f"expected one instance, found {len(instances)}")
    return instances[0]
