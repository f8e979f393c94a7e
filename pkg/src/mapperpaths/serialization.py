"""File formats: skeleton/graph/report JSON, point-cloud CSV, DOT export.

All JSON documents carry ``"schemaVersion": 1``; loaders reject other
versions. Signatures serialize as bit strings, the wildcard as "*", and
an undetermined resolved signature as null.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Iterable

from .errors import InputError
from .graph_model import Edge, SearchGraph, Vertex
from .mapper_ingest import Cluster, Point, PointCloud, Skeleton
from .scoring import InterestingPath

SCHEMA_VERSION = 1

_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#17becf", "#666666", "#bcbd22",
)


def _check_version(doc: Any, what: str) -> None:
    if not isinstance(doc, dict):
        raise InputError(f"{what}: expected a JSON object")
    version = doc.get("schemaVersion")
    if version != SCHEMA_VERSION:
        raise InputError(
            f"{what}: unsupported schemaVersion {version!r} (expected {SCHEMA_VERSION})"
        )


def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise InputError(f"{where}: missing field {key!r}")
    value = doc[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise InputError(f"{where}.{key}: expected a number, got {value!r}")
        return float(value)
    if not isinstance(value, kind):
        raise InputError(f"{where}.{key}: expected {kind.__name__}, got {value!r}")
    return value


# ---------------------------------------------------------------- point CSV

def load_point_cloud_csv(
    path: str | Path,
    filter_cols: list[str],
    target_col: str,
    id_col: str = "id",
) -> PointCloud:
    """Read points from a CSV file with a header row."""
    path = Path(path)
    try:
        with path.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise InputError(f"{path}: no data rows")
    header = rows[0].keys()
    for col in [id_col, *filter_cols, target_col]:
        if col not in header:
            raise InputError(f"{path}: missing column {col!r}")
    points = []
    for lineno, row in enumerate(rows, start=2):
        try:
            points.append(
                Point(
                    int(row[id_col]),
                    tuple(float(row[c]) for c in filter_cols),
                    float(row[target_col]),
                )
            )
        except (TypeError, ValueError) as exc:
            raise InputError(f"{path} row {lineno}: {exc}") from exc
    return PointCloud(tuple(points))


# ------------------------------------------------------------ skeleton JSON

def skeleton_to_dict(sk: Skeleton) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "clusters": [
            {
                "id": c.id,
                **({"members": list(c.member_ids)} if sk.members_known else {}),
                "gMean": c.g_mean,
                "filterMeans": list(c.filter_means),
            }
            for c in sk.clusters
        ],
        "links": [list(link) for link in sk.links],
    }


def skeleton_from_dict(doc: dict) -> Skeleton:
    _check_version(doc, "skeleton")
    raw_clusters = _require(doc, "clusters", list, "skeleton")
    raw_links = _require(doc, "links", list, "skeleton")
    clusters = []
    members_known = True
    seen_ids = set()
    for i, rc in enumerate(raw_clusters):
        where = f"skeleton.clusters[{i}]"
        if not isinstance(rc, dict):
            raise InputError(f"{where}: expected an object")
        cid = _require(rc, "id", int, where)
        if cid in seen_ids:
            raise InputError(f"{where}: duplicate cluster id {cid}")
        seen_ids.add(cid)
        g_mean = _require(rc, "gMean", float, where)
        fm = _require(rc, "filterMeans", list, where)
        members = rc.get("members")
        if members is None:
            members_known = False
            members = []
        clusters.append(
            Cluster(cid, tuple(members), g_mean, tuple(float(x) for x in fm))
        )
    arities = {len(c.filter_means) for c in clusters}
    if len(arities) > 1:
        raise InputError(f"skeleton.clusters: inconsistent filterMeans arity {sorted(arities)}")
    links = []
    for i, rl in enumerate(raw_links):
        where = f"skeleton.links[{i}]"
        if not (isinstance(rl, list) and len(rl) == 2):
            raise InputError(f"{where}: expected a pair of cluster ids")
        a, b = rl
        if a not in seen_ids or b not in seen_ids:
            raise InputError(f"{where}: link ({a}, {b}) references an unknown cluster")
        links.append((a, b))
    return Skeleton(tuple(clusters), tuple(links), members_known)


def save_skeleton(sk: Skeleton, path: str | Path) -> None:
    Path(path).write_text(json.dumps(skeleton_to_dict(sk), indent=2) + "\n")


def load_skeleton(path: str | Path) -> Skeleton:
    return skeleton_from_dict(_read_json(path, "skeleton"))


# --------------------------------------------------------------- graph JSON

def graph_to_dict(g: SearchGraph) -> dict:
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "h": g.h,
        "rule": g.rule,
        "tau": g.tau,
        "vertices": [
            {
                "id": v.id,
                "weight": v.weight,
                "filters": list(v.filter_means),
                **({"size": v.member_count} if v.member_count is not None else {}),
            }
            for v in g.vertices.values()
        ],
        "edges": [
            {
                "id": e.id,
                "source": e.source,
                "target": e.target,
                "weight": e.weight,
                "signature": e.signature,
                **({"pairId": e.pair_id} if e.pair_id is not None else {}),
            }
            for e in g.edges.values()
        ],
    }
    if g.meta:
        doc["meta"] = g.meta
    return doc


def graph_from_dict(doc: dict) -> SearchGraph:
    _check_version(doc, "graph")
    h = _require(doc, "h", int, "graph")
    rule = _require(doc, "rule", str, "graph")
    tau = _require(doc, "tau", float, "graph")
    vertices = []
    for i, rv in enumerate(_require(doc, "vertices", list, "graph")):
        where = f"graph.vertices[{i}]"
        if not isinstance(rv, dict):
            raise InputError(f"{where}: expected an object")
        vertices.append(
            Vertex(
                _require(rv, "id", int, where),
                _require(rv, "weight", float, where),
                tuple(float(x) for x in _require(rv, "filters", list, where)),
                rv.get("size"),
            )
        )
    edges = []
    for i, re_ in enumerate(_require(doc, "edges", list, "graph")):
        where = f"graph.edges[{i}]"
        if not isinstance(re_, dict):
            raise InputError(f"{where}: expected an object")
        edges.append(
            Edge(
                _require(re_, "id", int, where),
                _require(re_, "source", int, where),
                _require(re_, "target", int, where),
                _require(re_, "weight", float, where),
                _require(re_, "signature", str, where),
                re_.get("pairId"),
            )
        )
    return SearchGraph(vertices, edges, h, rule, tau, doc.get("meta"))


def save_graph(g: SearchGraph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(graph_to_dict(g), indent=2) + "\n")


def load_graph(path: str | Path) -> SearchGraph:
    return graph_from_dict(_read_json(path, "graph"))


def _read_json(path: str | Path, what: str) -> dict:
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON ({what}): {exc}") from exc


# -------------------------------------------------------------- report JSON

def stats_dict(g: SearchGraph) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "maxIndegree": g.max_indegree,
        "diameter": g.diameter,
        "isDag": g.is_dag,
        "signatureCount": len(g.signatures),
    }


def report_dict(
    g: SearchGraph,
    command: dict,
    paths: Iterable[InterestingPath],
    *,
    bounds: "tuple[float, float] | None" = None,
    timings_ms: dict | None = None,
    extra: dict | None = None,
) -> dict:
    path_docs = [
        {
            "edges": list(p.edge_ids),
            "vertices": list(p.vertex_ids),
            "signature": p.signature,
            "score": p.score,
        }
        for p in paths
    ]
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "command": {**command, "logBase": "e", "seed": g.meta.get("seed")},
        "stats": stats_dict(g),
        "paths": path_docs,
        "totalScore": sum(p["score"] for p in path_docs),
    }
    if bounds is not None:
        doc["bounds"] = {"lower": bounds[0], "upper": bounds[1]}
    if extra:
        doc.update(extra)
    doc["timingsMs"] = timings_ms or {}
    return doc


def load_report(path: str | Path) -> dict:
    doc = _read_json(path, "report")
    _check_version(doc, "report")
    return doc


# ---------------------------------------------------------------- DOT export

def to_dot(g: SearchGraph, paths: Iterable[InterestingPath] = ()) -> str:
    """DOT rendering with path edges colored per path.

    Edge labels read "weight / rank / signature"; edges on no path keep a
    gray default with "-" in the rank slot.
    """
    rank_of: dict[int, tuple[int, int]] = {}
    for pi, p in enumerate(paths):
        for r, eid in enumerate(p.edge_ids, start=1):
            rank_of.setdefault(eid, (pi, r))
    lines = ["digraph search {", "  rankdir=LR;"]
    for v in g.vertices.values():
        lines.append(f'  {v.id} [label="{v.id}\\nw={v.weight:.4g}"];')
    for e in g.edges.values():
        if e.id in rank_of:
            pi, r = rank_of[e.id]
            color = _DOT_PALETTE[pi % len(_DOT_PALETTE)]
            style = f', color="{color}", penwidth=2.2'
            rank_txt = str(r)
        else:
            style = ', color="#c0c0c0"'
            rank_txt = "-"
        lines.append(
            f'  {e.source} -> {e.target} '
            f'[label="{e.weight:.4g} / {rank_txt} / {e.signature}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_dot(g: SearchGraph, paths: Iterable[InterestingPath], path: str | Path) -> None:
    Path(path).write_text(to_dot(g, paths))
