"""Reading and writing oriented graph documents.

A graph document is YAML:

    format: 1
    name: directed-5-cycle-w2
    vertices:
      - {label: x, weight: 2}
      - {label: y, weight: 2}
    edges: [[x, y]]
    directed: [[x, y]]

``edges`` lists the underlying graph and may be omitted, in which case it is
read off ``directed``. Packaged documents live in the ``fixtures`` directory.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml

from .exceptions import MissingOrientation, ParseError, ValidationError
from .graph import Graph
from .oriented_graph import OrientedGraph, normalize

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
FIXTURES_PATH = Path(__file__).parent / "fixtures"
_HEADER_KEYS = frozenset(
    ("format", "name", "description", "reconstructed", "vertices", "edges", "directed")
)


@dataclass(frozen=True)
class GraphDocument:
    """A parsed document: the normalized graph plus its header fields.

    ``raw`` keeps the orientation and weights exactly as written.
    """

    graph: OrientedGraph
    name: str = ""
    description: str = ""
    reconstructed: bool = False
    extra: Dict[str, Any] = field(default_factory=dict, compare=False)
    raw: Optional[OrientedGraph] = field(default=None, compare=False)


def _load_yaml(text: str) -> Tuple[Any, Optional[yaml.Node]]:
    """The parsed document and its node tree, which carries line marks."""
    try:
        return yaml.safe_load(text), yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError as exception:
        mark = getattr(exception, "problem_mark", None)
        line = mark.line + 1 if mark is not None else 0
        problem = getattr(exception, "problem", None) or str(exception)
        raise ParseError(line, problem) from exception


def _line(node: Optional[yaml.Node], *path: Union[str, int]) -> int:
    """1-based line of the node at ``path``, or of the deepest node on the way."""
    line = node.start_mark.line + 1 if node is not None else 0
    for step in path:
        if isinstance(node, yaml.MappingNode):
            node = next((value for key, value in node.value if key.value == step), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(step, int):
            node = node.value[step] if step < len(node.value) else None
        else:
            node = None
        if node is None:
            break
        line = node.start_mark.line + 1
    return line


def _pairs(raw: Any, key: str, root: Optional[yaml.Node]) -> List[Tuple[str, str]]:
    if raw is None:
        return []
    if not isinstance(raw, list):
        raise ParseError(_line(root, key), f"'{key}' must be a list of label pairs")
    pairs = []
    for index, entry in enumerate(raw):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ParseError(
                _line(root, key, index), f"'{key}' entry {entry!r} is not a pair"
            )
        pairs.append((str(entry[0]), str(entry[1])))
    return pairs


def _vertices(raw: Any, root: Optional[yaml.Node]) -> Tuple[List[str], List[int]]:
    if not isinstance(raw, list):
        raise ParseError(_line(root, "vertices"), "'vertices' must be a list")
    labels, weights = [], []
    for index, entry in enumerate(raw):
        if isinstance(entry, dict):
            if "label" not in entry:
                raise ParseError(
                    _line(root, "vertices", index), f"vertex {entry!r} has no label"
                )
            label, weight = entry["label"], entry.get("weight", 1)
        else:
            label, weight = entry, 1
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            raise ValidationError("positive-weights", f"{label}={weight!r}")
        labels.append(str(label))
        weights.append(weight)
    return labels, weights


def parse_document(text: str) -> GraphDocument:
    """Parses a graph document and normalizes the graph.

    Raises:
        ParseError: If the text is not a well-formed document.
        ValidationError: If the document violates a graph invariant.
    """
    data, root = _load_yaml(text)
    if not isinstance(data, dict):
        raise ParseError(_line(root) or 1, "document must be a mapping")
    version = data.get("format", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(
            _line(root, "format"), f"unsupported format version {version!r}"
        )
    if "vertices" not in data:
        raise ParseError(_line(root), "missing 'vertices'")
    labels, weights = _vertices(data["vertices"], root)
    directed = _pairs(data.get("directed"), "directed", root)

    base = Graph.from_labeled_edges(labels, directed)
    if data.get("edges") is not None:
        base = Graph.from_labeled_edges(labels, _pairs(data["edges"], "edges", root))
        for tail, head in directed:
            if not base.has_edge(base.index(tail), base.index(head)):
                raise ValidationError("directed-on-edge", f"{tail}>{head}")
    arcs = frozenset((base.index(tail), base.index(head)) for tail, head in directed)
    try:
        graph = OrientedGraph(base, arcs, tuple(weights))
    except MissingOrientation as exception:
        raise ValidationError("edge-oriented", str(exception)) from exception

    return GraphDocument(
        graph=normalize(graph),
        name=str(data.get("name", "")),
        description=str(data.get("description", "")),
        reconstructed=bool(data.get("reconstructed", False)),
        extra={key: value for key, value in data.items() if key not in _HEADER_KEYS},
        raw=graph,
    )


def parse_graph(text: str) -> OrientedGraph:
    """Parses a graph document into a validated, normalized oriented graph."""
    return parse_document(text).graph


def serialize_graph(graph: OrientedGraph, name: str = "", description: str = "") -> str:
    """Writes a graph document; `parse_graph` inverts it on normalized graphs."""
    labels = graph.labels
    document: Dict[str, Any] = {"format": FORMAT_VERSION}
    if name:
        document["name"] = name
    if description:
        document["description"] = description
    document["vertices"] = [
        {"label": label, "weight": weight}
        for label, weight in zip(labels, graph.weights)
    ]
    document["edges"] = [[labels[u], labels[v]] for u, v in graph.underlying.edges]
    document["directed"] = [[labels[u], labels[v]] for u, v in graph.sorted_arcs()]
    return yaml.safe_dump(document, sort_keys=False, default_flow_style=None)


def read_graph_file(path: Path) -> GraphDocument:
    with open(path, "r", encoding="utf-8") as file_handle:
        return parse_document(file_handle.read())


def list_fixtures(directory: Optional[Path] = None) -> List[str]:
    """Names of the packaged graph documents."""
    directory = directory or FIXTURES_PATH
    return sorted(path.stem for path in directory.glob("*.yaml"))


def load_fixture(name: str, directory: Optional[Path] = None) -> GraphDocument:
    """Loads a packaged graph document by name.

    Raises:
        FileNotFoundError: If no such fixture exists.
    """
    path = (directory or FIXTURES_PATH) / f"{name}.yaml"
    if not path.is_file():
        logger.error("Unknown fixture '%s'", name)
        raise FileNotFoundError(f"Unknown fixture: {name}")
    return read_graph_file(path)
