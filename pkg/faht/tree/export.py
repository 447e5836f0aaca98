# faht/tree/export.py
"""JSON and text renderings of a tree for structural analysis."""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from faht.tree.hoeffding import FahtTree
from faht.tree.nodes import Node


def node_to_dict(node: Node) -> Dict[str, Any]:
    if node.is_leaf:
        distribution = node.stats.distribution
        return {
            "type": "leaf",
            "n": distribution.total,
            "distribution": dict(distribution.counts),
            "fairness": node.stats.fairness.to_dict(),
        }
    return {
        "type": "split",
        "attribute": node.attribute_name,
        "kind": node.kind.value,
        "threshold": node.threshold,
        "children": {key: node_to_dict(child) for key, child in node.children.items()},
    }


def tree_to_dict(tree: FahtTree) -> Dict[str, Any]:
    stats = tree.model_stats()
    return {
        "learner": tree.config.label,
        "config": tree.config.model_dump(mode="json"),
        "instances_seen": tree.instances_seen,
        "node_count": stats.node_count,
        "leaf_count": stats.leaf_count,
        "depth": stats.depth,
        "root": node_to_dict(tree.root),
        "splits": [event.to_dict() for event in tree.split_log],
    }


def _fmt(x: float) -> str:
    return f"{x:g}"


def render_text(tree: FahtTree) -> str:
    """Indented outline: one line per test, leaves with class and community counts."""
    lines: List[str] = []

    def walk(node: Node, indent: str) -> None:
        if node.is_leaf:
            counts = ", ".join(f"{c}={_fmt(v)}" for c, v in node.stats.distribution.counts.items())
            fairness = ", ".join(f"{k}={_fmt(v)}" for k, v in node.stats.fairness.to_dict().items())
            lines.append(f"{indent}leaf [{counts}] [{fairness}]")
            return
        for key, child in node.children.items():
            if node.threshold is not None:
                op = "<=" if key == "left" else ">"
                lines.append(f"{indent}{node.attribute_name} {op} {node.threshold:.6g}")
            else:
                lines.append(f"{indent}{node.attribute_name} = {key}")
            walk(child, indent + "|   ")

    walk(tree.root, "")
    return "\n".join(lines) + "\n"


def write_tree(tree: FahtTree, path: Union[str, Path]) -> Path:
    """Write the JSON rendering to ``path`` and the text outline next to it."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(tree_to_dict(tree), indent=2), encoding="utf-8")
    path.with_suffix(".txt").write_text(render_text(tree), encoding="utf-8")
    return path
