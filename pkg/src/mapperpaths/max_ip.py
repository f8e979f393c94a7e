"""Exact maximum-interestingness path search on DAGs.

The solver fills a table T(i, j, key): the best score of an interesting
path of exactly j edges ending at edge i whose resolved signature is
``key`` (a concrete signature, or ``None`` for all-wildcard prefixes).
Column 1 holds w(e) * log 2 for every edge; column j is built from
column j-1 through signature-compatible predecessor edges, adding
w(e) * log(1 + j). Only reachable cells are stored.

Two drivers share the cell-filling code:

* :func:`max_ip` sweeps every edge in each column (the plain recurrence);
* :func:`max_ip_sparse` first computes, per edge, the set of reachable
  path lengths with an iterative fixpoint (lists start at {1}; each round
  extends them through predecessors via a per-vertex merge, reading only
  the previous round's values, until nothing changes), then restricts the
  column sweep to the listed cells. Reached lengths are always a
  contiguous range 1..l(e) (dropping the first edge of a chain keeps it a
  chain), so each list is stored as its maximum.

Keying cells by resolved signature keeps the recurrence sound when
wildcard edges occur in a DAG: a wildcard bridge may not join two
different concrete signatures. On graphs without wildcard edges every
edge has a single key and the table collapses to a scalar per (i, j).

Tie-breaking is deterministic everywhere: among equal-score predecessors
the smallest edge id wins (then concrete keys in lexicographic order,
undetermined last); among equal-score final cells the smallest
(length, edge id) wins. Both drivers and the brute-force oracle follow
the same rule, so they return identical paths, not just identical scores.

Internally edges live in dense arrays, signatures are interned to small
integers (the undetermined key is the largest one, preserving the key
order), and a cell is addressed as position * key_count + key_index.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DomainError
from .graph_model import SearchGraph
from .scoring import InterestingPath, rank_factor, validate_path


def _key_rank(key: str | None) -> tuple[int, str]:
    """Sort order for signature keys: concrete first, undetermined last."""
    return (1, "") if key is None else (0, key)


class _EdgeArrays:
    """Dense per-position views of an edge subset, deterministic by id."""

    def __init__(self, g: SearchGraph, ids: list[int]):
        self.ids = ids
        self.pos_of = {eid: i for i, eid in enumerate(ids)}
        # Concrete signatures interned in lexicographic order; the
        # undetermined key gets the last index so index order equals the
        # documented key order.
        sigs = sorted({g.edges[eid].signature for eid in ids if not g.edges[eid].is_wildcard})
        self.sig_list: list[str | None] = [*sigs, None]
        self.undet = len(sigs)
        sig_idx = {s: i for i, s in enumerate(sigs)}
        self.nkeys = len(sigs) + 1

        vset: set[int] = set()
        for eid in ids:
            e = g.edges[eid]
            vset.add(e.source)
            vset.add(e.target)
        self.vpos = {v: i for i, v in enumerate(sorted(vset))}

        m = len(ids)
        self.weight = [0.0] * m
        self.srcv = [0] * m
        self.dstv = [0] * m
        self.sig = [0] * m  # -1 for wildcard
        for i, eid in enumerate(ids):
            e = g.edges[eid]
            self.weight[i] = e.weight
            self.srcv[i] = self.vpos[e.source]
            self.dstv[i] = self.vpos[e.target]
            self.sig[i] = -1 if e.is_wildcard else sig_idx[e.signature]

        nv = len(self.vpos)
        self.out_at: list[list[int]] = [[] for _ in range(nv)]
        self.in_at: list[list[int]] = [[] for _ in range(nv)]
        for i in range(m):
            self.out_at[self.srcv[i]].append(i)
            self.in_at[self.dstv[i]].append(i)

    def key_str(self, kidx: int) -> str | None:
        return self.sig_list[kidx]


class ScoreTable:
    """Sparse DP state with backtracking provenance.

    ``columns[j]`` maps (edge_id, key) to (score, pred_edge, pred_key)
    for path length j (preds are ``None`` in column 1). ``lengths`` holds
    each edge's reachable-length list as the upper end of its 1..l range.
    ``rounds`` counts the fixpoint iterations of the sparse list
    construction, including the final no-change round; it is ``None``
    for the plain driver.
    """

    def __init__(self, graph: SearchGraph, arrays: _EdgeArrays | None):
        self.graph = graph
        self._arrays = arrays
        # packed columns: {j: {pos * nkeys + kidx: (score, prev_packed)}}
        # prev_packed is -1 in column 1.
        self._cols: dict[int, dict[int, tuple[float, int]]] = {}
        self._col_best: dict[int, tuple[float, int]] = {}  # j -> (score, packed)
        self._pe_best: dict[int, float] = {}
        self.rounds: int | None = None
        self.lengths: dict[int, int] = {}
        self._public_columns: dict | None = None

    @property
    def cell_count(self) -> int:
        return sum(len(col) for col in self._cols.values())

    @property
    def columns(self) -> dict:
        if self._public_columns is None:
            arr = self._arrays
            out: dict[int, dict] = {}
            for j, col in self._cols.items():
                pub = {}
                for packed, (s, prev) in col.items():
                    pos, kidx = divmod(packed, arr.nkeys)
                    if prev < 0:
                        pub[(arr.ids[pos], arr.key_str(kidx))] = (s, None, None)
                    else:
                        ppos, pkidx = divmod(prev, arr.nkeys)
                        pub[(arr.ids[pos], arr.key_str(kidx))] = (
                            s, arr.ids[ppos], arr.key_str(pkidx)
                        )
                out[j] = pub
            self._public_columns = out
        return self._public_columns

    def reachable_lengths(self, edge_id: int) -> range:
        """The dynamic list of reachable path lengths for an edge."""
        return range(1, self.lengths.get(edge_id, 0) + 1)

    def _backtrack_packed(self, j: int, packed: int) -> list[int]:
        arr = self._arrays
        seq: list[int] = []
        while True:
            pos = packed // arr.nkeys
            seq.append(arr.ids[pos])
            _, prev = self._cols[j][packed]
            if prev < 0:
                break
            packed, j = prev, j - 1
        seq.reverse()
        return seq

    def backtrack(self, edge_id: int, length: int, key: str | None) -> list[int]:
        """Edge-id sequence of the stored optimum ending at a cell."""
        arr = self._arrays
        kidx = arr.undet if key is None else arr.sig_list.index(key)
        return self._backtrack_packed(length, arr.pos_of[edge_id] * arr.nkeys + kidx)

    def per_edge_best(self) -> dict[int, float]:
        """Best score over all lengths and keys, per edge."""
        return dict(self._pe_best)


def _reachable_length_fixpoint(arr: _EdgeArrays) -> tuple[list[int], int]:
    """Iterate the dynamic length lists to their fixpoint.

    Every list starts as {1}. Each round extends lists through
    predecessor edges, merging per head vertex so every edge is visited
    a constant number of times per round: wildcard lists feed every
    signature group and every group feeds outgoing wildcard edges.
    Updates within a round read only the previous round's values and are
    committed at the round boundary; later rounds revisit only vertices
    whose incoming values changed, which leaves every list and the round
    count unchanged. Returns (lengths by position, rounds), the rounds
    including the final one that detects no change.
    """
    val = [1] * len(arr.ids)
    affected = [v for v in range(len(arr.out_at)) if arr.in_at[v] and arr.out_at[v]]
    rounds = 0
    while True:
        rounds += 1
        updates: list[tuple[int, int]] = []
        for v in affected:
            best_all = 0
            best_wild = 0
            by_sig: dict[int, int] = {}
            for i in arr.in_at[v]:
                x = val[i]
                s = arr.sig[i]
                if x > best_all:
                    best_all = x
                if s < 0:
                    if x > best_wild:
                        best_wild = x
                elif x > by_sig.get(s, 0):
                    by_sig[s] = x
            for i in arr.out_at[v]:
                s = arr.sig[i]
                if s < 0:
                    reach = best_all
                else:
                    reach = by_sig.get(s, 0)
                    if best_wild > reach:
                        reach = best_wild
                if reach and reach + 1 > val[i]:
                    updates.append((i, reach + 1))
        if not updates:
            break
        touched: set[int] = set()
        for i, nv in updates:
            val[i] = nv
            touched.add(arr.dstv[i])
        affected = [v for v in touched if arr.out_at[v]]
    return val, rounds


def build_score_table(
    g: SearchGraph,
    *,
    edge_ids: Iterable[int] | None = None,
    max_length: int | None = None,
    sparse: bool = False,
) -> ScoreTable:
    """Fill the DP table for ``g`` (or the subset ``edge_ids`` of its edges).

    Requires a DAG. ``max_length`` caps the number of columns (defaults
    to n - 1, the longest possible simple path). With ``sparse`` the
    reachable-length lists are computed first and drive the sweep.
    """
    if not g.is_dag:
        raise DomainError(
            "graph is cyclic: the table recurrence requires a DAG; "
            "use the brute-force oracle (oracle max-ip) on small instances"
        )
    ids = sorted(edge_ids) if edge_ids is not None else sorted(g.edges)
    arr = _EdgeArrays(g, ids)
    table = ScoreTable(g, arr)
    if not ids:
        table.rounds = 1 if sparse else None
        return table
    cap = g.n - 1 if max_length is None else min(max_length, g.n - 1)
    m = len(ids)
    nkeys = arr.nkeys
    undet = arr.undet
    weight, srcv, dstv, sig = arr.weight, arr.srcv, arr.dstv, arr.sig
    log2 = rank_factor(1)

    if sparse:
        lens, rounds = _reachable_length_fixpoint(arr)
        table.rounds = rounds
        table.lengths = {arr.ids[i]: lens[i] for i in range(m)}
        by_len = sorted(range(m), key=lambda i: (-lens[i], i))
    else:
        lens = [1] * m
        by_len = list(range(m))

    pe_best = table._pe_best
    col1: dict[int, tuple[float, int]] = {}
    best_s, best_packed = -1.0, -1
    for i in range(m):
        s = sig[i]
        kidx = undet if s < 0 else s
        sc = weight[i] * log2
        col1[i * nkeys + kidx] = (sc, -1)
        pe_best[arr.ids[i]] = sc
        if sc > best_s:
            best_s, best_packed = sc, i * nkeys + kidx
    table._cols[1] = col1
    table._col_best[1] = (best_s, best_packed)

    prev_col = col1
    live_end = m  # prefix of by_len with lens >= current column (sparse)
    for j in range(2, cap + 1):
        if sparse:
            while live_end > 0 and lens[by_len[live_end - 1]] < j:
                live_end -= 1
            active = sorted(by_len[:live_end])
        else:
            active = by_len
        if not active:
            break

        # Per-vertex merge of the previous column: per head vertex, the
        # best (score, pred) for each resolved key. Iteration follows
        # cell insertion order (ascending position, then key), so
        # keeping the first of equal scores preserves the documented
        # smallest-edge-id tie rule.
        merged: dict[int, dict[int, tuple[float, int, int]]] = {}
        for packed, (s, _prev) in prev_col.items():
            pos, kidx = divmod(packed, nkeys)
            v = dstv[pos]
            inner = merged.get(v)
            if inner is None:
                merged[v] = {kidx: (s, pos, packed)}
            else:
                cur = inner.get(kidx)
                if cur is None or s > cur[0]:
                    inner[kidx] = (s, pos, packed)

        col: dict[int, tuple[float, int]] = {}
        factor = rank_factor(j)
        best_s, best_packed = -1.0, -1
        for i in active:
            inner = merged.get(srcv[i])
            if not inner:
                continue
            gain = weight[i] * factor
            s = sig[i]
            eid = arr.ids[i]
            if s >= 0:
                hit = inner.get(s)
                other = inner.get(undet)
                if other is not None and (
                    hit is None
                    or other[0] > hit[0]
                    or (other[0] == hit[0] and other[1] < hit[1])
                ):
                    hit = other
                if hit is None:
                    continue
                sc = hit[0] + gain
                col[i * nkeys + s] = (sc, hit[2])
                if sc > best_s:
                    best_s, best_packed = sc, i * nkeys + s
                if sc > pe_best[eid]:
                    pe_best[eid] = sc
            else:
                for kidx in sorted(inner):
                    ps, _ppos, ppacked = inner[kidx]
                    sc = ps + gain
                    col[i * nkeys + kidx] = (sc, ppacked)
                    if sc > best_s:
                        best_s, best_packed = sc, i * nkeys + kidx
                    if sc > pe_best[eid]:
                        pe_best[eid] = sc
        if not col:
            break
        table._cols[j] = col
        table._col_best[j] = (best_s, best_packed)
        prev_col = col
        if not sparse:
            for packed in col:
                pos = packed // nkeys
                if lens[pos] < j:
                    lens[pos] = j

    if not sparse:
        table.lengths = {arr.ids[i]: lens[i] for i in range(m)}
    return table


def best_path(
    table: ScoreTable,
    *,
    min_length: int = 1,
    max_length: int | None = None,
) -> InterestingPath | None:
    """Extract the optimal path whose length lies in the given range.

    The winning cell maximizes the score; ties prefer the smallest
    (length, edge id, key). Returns ``None`` when no column in range has
    any cell.
    """
    best: tuple[float, int, int] | None = None
    for j in sorted(table._col_best):
        if j < min_length or (max_length is not None and j > max_length):
            continue
        s, packed = table._col_best[j]
        if best is None or s > best[0]:
            best = (s, j, packed)
    if best is None:
        return None
    _, j, packed = best
    seq = table._backtrack_packed(j, packed)
    path = validate_path(table.graph, seq)
    assert isinstance(path, InterestingPath), path
    return path


def max_ip(g: SearchGraph) -> InterestingPath | None:
    """Most interesting path of a DAG via the full column sweep.

    Returns ``None`` for an edgeless graph; raises
    :class:`~mapperpaths.errors.DomainError` on cyclic inputs.
    """
    return best_path(build_score_table(g, sparse=False))


def max_ip_sparse(g: SearchGraph) -> InterestingPath | None:
    """Most interesting path via the reachable-length-list driver.

    Produces exactly the same path as :func:`max_ip`, visiting only the
    cells its dynamic lists make reachable.
    """
    return best_path(build_score_table(g, sparse=True))


def per_edge_best(g: SearchGraph) -> dict[int, float]:
    """Score of a maximum interesting path ending at each edge.

    The row maxima of the table over all lengths and signature keys;
    used as the additive upper bound for full decompositions.
    """
    return build_score_table(g, sparse=True).per_edge_best()
