"""
Pinched-disk quotient of a lamination as a finite graph.

Class nodes are the cut points (one per lamination class). Gap nodes are the
complementary regions of the chord diagram. A gap is found by walking its
boundary counterclockwise: along a circle arc from vertex V[i] to V[i+1], then
back along the chord of the class of V[i+1] to the member preceding it, and on
along the next arc. The arcs visited form one cycle per gap.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

from src.circle import Angle, in_open_arc
from src.errors import LaminationConsistencyError
from src.lamination import AngleClass, Lamination, check_unlinked

Arc = Tuple[Angle, Angle]


class NodeKind:
    CLASS = "class"
    GAP = "gap"


@dataclass(frozen=True)
class ModelNode:
    id: str
    kind: str
    angles: Tuple[Angle, ...] = ()
    arcs: Tuple[Arc, ...] = ()

    @property
    def is_class(self) -> bool:
        return self.kind == NodeKind.CLASS


@dataclass
class ModelGraph:
    degree: int
    nodes: List[ModelNode] = field(default_factory=list)
    edges: List[Tuple[str, str]] = field(default_factory=list)

    def __post_init__(self):
        self._by_id = {node.id: node for node in self.nodes}

    def node(self, node_id: str) -> ModelNode:
        return self._by_id[node_id]

    @property
    def class_nodes(self) -> List[ModelNode]:
        return [n for n in self.nodes if n.kind == NodeKind.CLASS]

    @property
    def gap_nodes(self) -> List[ModelNode]:
        return [n for n in self.nodes if n.kind == NodeKind.GAP]

    def adjacency(self) -> Dict[str, List[str]]:
        adj: Dict[str, List[str]] = {node.id: [] for node in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def components(self) -> int:
        adj = self.adjacency()
        seen: Set[str] = set()
        count = 0
        for start in adj:
            if start in seen:
                continue
            count += 1
            queue = deque([start])
            seen.add(start)
            while queue:
                for nxt in adj[queue.popleft()]:
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
        return count

    def cut_points(self) -> List[ModelNode]:
        """Class nodes whose removal disconnects the model"""
        adj = self.adjacency()
        return [n for n in self.class_nodes if len(adj[n.id]) >= 2]

    def class_node_for(self, a: Angle) -> Optional[ModelNode]:
        for node in self.class_nodes:
            if a in node.angles:
                return node
        return None


def _gap_key(arcs: List[Arc]) -> tuple:
    if not arcs:
        return (0,)
    vertices = sorted({v for arc in arcs for v in arc})
    return (1, vertices[0], tuple(sorted(start for start, _ in arcs)))


def quotient_model(lam: Lamination) -> ModelGraph:
    crossing = check_unlinked(lam)
    if not crossing:
        raise LaminationConsistencyError(
            "Cannot build the quotient of a linked lamination: "
            + "; ".join(crossing.describe())
        )

    polygons = [cls for cls in lam.classes if len(cls) >= 2]
    singletons = [cls for cls in lam.classes if len(cls) == 1]
    vertices = sorted(a for cls in polygons for a in cls)
    index = {v: i for i, v in enumerate(vertices)}
    owner = {a: cls for cls in polygons for a in cls}
    m = len(vertices)

    def successor(i: int) -> int:
        end = vertices[(i + 1) % m]
        members = owner[end].angles
        k = members.index(end)
        return index[members[k - 1]]

    gap_arcs: List[List[Arc]] = []
    gap_of_arc: Dict[int, int] = {}
    for start in range(m):
        if start in gap_of_arc:
            continue
        cycle = []
        i = start
        while i not in gap_of_arc:
            gap_of_arc[i] = len(gap_arcs)
            cycle.append((vertices[i], vertices[(i + 1) % m]))
            i = successor(i)
        gap_arcs.append(cycle)
    if m == 0:
        gap_arcs.append([])

    gap_order = sorted(range(len(gap_arcs)), key=lambda g: _gap_key(gap_arcs[g]))
    gap_ids = {g: f"G{rank}" for rank, g in enumerate(gap_order)}
    class_ids = {cls: f"C{rank}" for rank, cls in enumerate(lam.classes)}

    nodes = [
        ModelNode(id=class_ids[cls], kind=NodeKind.CLASS, angles=cls.angles)
        for cls in lam.classes
    ]
    for g in gap_order:
        arcs = tuple(sorted(gap_arcs[g]))
        boundary = tuple(sorted({v for arc in arcs for v in arc}))
        nodes.append(ModelNode(id=gap_ids[g], kind=NodeKind.GAP, angles=boundary, arcs=arcs))

    edges: Set[Tuple[str, str]] = set()
    for i, g in gap_of_arc.items():
        edges.add((class_ids[owner[vertices[i]]], gap_ids[g]))
    for cls in singletons:
        a = cls.smallest
        g = 0
        for i in range(m):
            if in_open_arc(a, vertices[i], vertices[(i + 1) % m]):
                g = gap_of_arc[i]
                break
        edges.add((class_ids[cls], gap_ids[g]))

    return ModelGraph(degree=lam.degree, nodes=nodes, edges=sorted(edges))


def fiber(lam: Lamination, a: Angle) -> AngleClass:
    """Class containing a, or the singleton {a}"""
    return lam.class_of(a) or AngleClass((a,))


def distinct_fibers(lam: Lamination, angles: Iterable[Angle]) -> List[AngleClass]:
    return sorted({fiber(lam, a) for a in angles})


def _canonical_rooted(adj: Dict[str, List[str]], kinds: Dict[str, str], root: str, parent: Optional[str]) -> str:
    children = sorted(
        _canonical_rooted(adj, kinds, child, root) for child in adj[root] if child != parent
    )
    return kinds[root][0] + "(" + ",".join(children) + ")"


def _tree_centers(adj: Dict[str, List[str]], members: List[str]) -> List[str]:
    degree = {v: len(adj[v]) for v in members}
    remaining = set(members)
    leaves = [v for v in members if degree[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for leaf in leaves:
            remaining.discard(leaf)
            for other in adj[leaf]:
                if other in remaining:
                    degree[other] -= 1
                    if degree[other] == 1:
                        nxt.append(other)
        leaves = nxt
    return sorted(remaining)


def canonical_form(graph: ModelGraph) -> Tuple[str, ...]:
    """Isomorphism invariant of a forest with class/gap node kinds"""
    adj = graph.adjacency()
    kinds = {node.id: node.kind for node in graph.nodes}
    if len(graph.edges) != len(graph.nodes) - graph.components():
        raise ValueError("Model graph is not a forest")
    seen: Set[str] = set()
    forms = []
    for start in sorted(adj):
        if start in seen:
            continue
        members, queue = [], deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            members.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        forms.append(min(_canonical_rooted(adj, kinds, c, None) for c in _tree_centers(adj, members)))
    return tuple(sorted(forms))


def isomorphic(first: ModelGraph, second: ModelGraph) -> bool:
    return canonical_form(first) == canonical_form(second)

