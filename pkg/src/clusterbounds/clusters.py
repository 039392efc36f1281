"""Enumeration, classification and counting of undetectable error clusters.

The search seeds a single error entry somewhere, then repeatedly repairs
the first violated check by placing one more entry inside that check's
support, choosing an entry that flips the violated bit.  Every state
whose syndrome reaches zero is one recorded cluster; states that cannot
repair the first violated bit, or that hit the depth cap, backtrack.
Each completion event is one recursion path, so a cluster is counted
once per ordering of its entries that the repair rule admits.

A census deduplicates recorded clusters and classifies each distinct one
as irreducible (it admits no split into two undetectable pieces on
disjoint supports) and as a member of the degeneracy group or not.  The
brute-force census reproduces all four per-weight counts independently:
it scans every error configuration up to the weight cap, keeps the
undetectable ones, and counts admissible orderings by dynamic
programming over subsets instead of by recursion.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .codes import CssCode, FtCode, StabilizerCode
from .errors import ResourceCapError, ValidationError
from .gf2 import BitMatrix

DEFAULT_CLUSTER_CAP = 10**7
_PAULI_LABELS = "XYZ"
_SECTOR_ALIASES = {
    "full": "full",
    "full-pauli": "full",
    "x": "x",
    "x-type": "x",
    "z": "z",
    "z-type": "z",
    "ft": "ft",
    "ft-binary": "ft",
}


def normalize_sector(sector: str) -> str:
    key = sector.strip().lower()
    if key not in _SECTOR_ALIASES:
        raise ValidationError(f"unknown sector {sector!r}")
    return _SECTOR_ALIASES[key]


@dataclass(frozen=True)
class Cluster:
    """One undetectable error configuration.

    positions are distinct column indices in ascending order; paulis
    gives the single-qubit label per position for full-Pauli clusters
    and is None for binary (single-sector or space-time) clusters.
    """

    positions: tuple[int, ...]
    paulis: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(set(self.positions)) != len(self.positions):
            raise ValidationError("cluster positions must be distinct")
        if tuple(sorted(self.positions)) != self.positions:
            raise ValidationError("cluster positions must be sorted")
        if self.paulis is not None and len(self.paulis) != len(self.positions):
            raise ValidationError("one Pauli label per position required")

    @property
    def weight(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class ClusterCensus:
    """Per-weight counts of recorded clusters, indexed by weight 0..m_max.

    distinct counts deduplicated clusters; irreducible counts the
    distinct ones admitting no disjoint-support split; subtracting the
    degeneracy-group members leaves irreducible_nonstabilizer.  paths
    counts completion events, i.e. clusters with ordering multiplicity.
    """

    m_max: int
    distinct: tuple[int, ...]
    irreducible: tuple[int, ...]
    irreducible_nonstabilizer: tuple[int, ...]
    paths: tuple[int, ...]
    clusters: tuple[tuple[Cluster, ...], ...] | None = None

    def weights(self) -> range:
        return range(1, self.m_max + 1)

    def count_fields(self) -> dict[str, tuple[int, ...]]:
        return {
            "distinct": self.distinct,
            "irreducible": self.irreducible,
            "irreducible_nonstabilizer": self.irreducible_nonstabilizer,
            "paths": self.paths,
        }

    def counts(self, field: str) -> dict[int, int]:
        values = self.count_fields()[field]
        return {m: values[m] for m in self.weights()}

    def row_dicts(self) -> list[dict[str, int]]:
        rows = []
        for m in self.weights():
            if self.distinct[m] == 0:
                continue
            rows.append(
                {
                    "m": m,
                    "distinct": self.distinct[m],
                    "irreducible": self.irreducible[m],
                    "irreducible_nonstabilizer": self.irreducible_nonstabilizer[m],
                    "paths": self.paths[m],
                }
            )
        return rows

    def same_counts(self, other: "ClusterCensus") -> bool:
        return (
            self.m_max == other.m_max
            and self.distinct == other.distinct
            and self.irreducible == other.irreducible
            and self.irreducible_nonstabilizer == other.irreducible_nonstabilizer
            and self.paths == other.paths
        )


# -- internal problem representation ----------------------------------


@dataclass(frozen=True)
class _Problem:
    mode: str  # "pauli" or "binary"
    n_cols: int
    pack_n: int  # qubit count for pauli key packing; 0 for binary
    # per check (sorted): tuple of (position, ((syndrome word, key word), ...))
    branches: tuple
    seeds: tuple
    # per position (and label in pauli mode): syndrome word of one entry
    entry_syn: tuple
    n_checks: int
    degeneracy_pivots: tuple[int, ...]
    degeneracy_rows: tuple[int, ...]
    bound_kind: str
    bound_n: int
    bound_r: int
    bound_w: int

    def decode(self, key: int) -> tuple:
        """Key -> tuple of entries ((pos, label_id) in pauli mode)."""
        if self.mode == "binary":
            return tuple((j, None) for j in range(self.n_cols) if (key >> j) & 1)
        n = self.pack_n
        v = key & ((1 << n) - 1)
        u = key >> n
        entries = []
        for j in range(n):
            vb, ub = (v >> j) & 1, (u >> j) & 1
            if vb or ub:
                lab = 0 if (vb, ub) == (1, 0) else 1 if (vb, ub) == (1, 1) else 2
                entries.append((j, lab))
        return tuple(entries)

    def syn_of(self, entry: tuple) -> int:
        pos, lab = entry
        return self.entry_syn[pos][lab] if self.mode == "pauli" else self.entry_syn[pos]

    def key_of_cluster(self, cluster: Cluster) -> int:
        key = 0
        if self.mode == "binary":
            if cluster.paulis is not None:
                raise ValidationError("binary sector expects clusters without Pauli labels")
            for j in cluster.positions:
                key |= 1 << j
            return key
        if cluster.paulis is None:
            raise ValidationError("full-Pauli sector expects labelled clusters")
        n = self.pack_n
        for j, ch in zip(cluster.positions, cluster.paulis):
            lab = _PAULI_LABELS.index(ch.upper())
            if lab in (0, 1):
                key |= 1 << j
            if lab in (1, 2):
                key |= 1 << (n + j)
        return key

    def cluster_of_key(self, key: int) -> Cluster:
        entries = self.decode(key)
        if self.mode == "binary":
            return Cluster(tuple(e[0] for e in entries))
        return Cluster(
            tuple(e[0] for e in entries),
            tuple(_PAULI_LABELS[e[1]] for e in entries),
        )

    def entries_of_cluster(self, cluster: Cluster) -> tuple:
        if self.mode == "binary":
            return tuple((j, None) for j in cluster.positions)
        return tuple(
            (j, _PAULI_LABELS.index(ch.upper()))
            for j, ch in zip(cluster.positions, cluster.paulis)
        )

    def in_degeneracy(self, key: int) -> bool:
        for c, row in zip(self.degeneracy_pivots, self.degeneracy_rows):
            if (key >> c) & 1:
                key ^= row
        return key == 0


def _pauli_label_id(vb: int, ub: int) -> int:
    return 0 if (vb, ub) == (1, 0) else 1 if (vb, ub) == (1, 1) else 2


def _sorted_check_order(weights: list[int]) -> list[int]:
    return sorted(range(len(weights)), key=lambda i: (weights[i], i))


@lru_cache(maxsize=32)
def _build_problem(code, sector: str) -> _Problem:
    sector = normalize_sector(sector)
    if sector == "full":
        if isinstance(code, CssCode):
            stab = code.stabilizer
        elif isinstance(code, StabilizerCode):
            stab = code
        else:
            raise ValidationError("full-Pauli enumeration needs a stabilizer or CSS code")
        n = stab.n
        mask = (1 << n) - 1
        gen_rows = list(stab.G.rows)
        weights = [((r & mask) | (r >> n)).bit_count() for r in gen_rows]
        order = _sorted_check_order(weights)
        supports: list[list[tuple[int, int]]] = []
        for i in order:
            row = gen_rows[i]
            v, u = row & mask, row >> n
            supp = []
            for j in range(n):
                vb, ub = (v >> j) & 1, (u >> j) & 1
                if vb or ub:
                    supp.append((j, _pauli_label_id(vb, ub)))
            supports.append(supp)
        syn = [[0, 0, 0] for _ in range(n)]
        for i, supp in enumerate(supports):
            for j, g in supp:
                for lab in range(3):
                    if lab != g:
                        syn[j][lab] |= 1 << i
        keyw = [
            [1 << j, (1 << j) | (1 << (n + j)), 1 << (n + j)] for j in range(n)
        ]
        branches = tuple(
            tuple(
                (j, tuple((syn[j][lab], keyw[j][lab]) for lab in range(3) if lab != g))
                for j, g in supp
            )
            for supp in supports
        )
        seeds = tuple(
            (j, tuple((syn[j][lab], keyw[j][lab]) for lab in range(3))) for j in range(n)
        )
        pivots, rows = stab.G._rref()
        return _Problem(
            mode="pauli",
            n_cols=n,
            pack_n=n,
            branches=branches,
            seeds=seeds,
            entry_syn=tuple(tuple(s) for s in syn),
            n_checks=len(supports),
            degeneracy_pivots=tuple(pivots),
            degeneracy_rows=tuple(rows),
            bound_kind="full",
            bound_n=n,
            bound_r=stab.r,
            bound_w=stab.w,
        )

    if sector in ("x", "z"):
        if not isinstance(code, CssCode):
            raise ValidationError("single-sector enumeration needs a CSS code")
        checks, degeneracy = code.sector(sector)
        return _binary_problem(
            checks,
            degeneracy,
            bound_kind="css",
            bound_n=code.n,
            bound_r=checks.nrows,
            bound_w=checks.max_row_weight(),
        )

    if not isinstance(code, FtCode):
        raise ValidationError("space-time enumeration needs an FtCode")
    qubit_mask = (1 << code.qubit_cols) - 1
    w_base = max((row & qubit_mask).bit_count() for row in code.P.rows)
    return _binary_problem(
        code.P,
        code.Q,
        bound_kind="ft",
        bound_n=code.n,
        bound_r=code.r,
        bound_w=w_base,
    )


def _binary_problem(checks: BitMatrix, degeneracy: BitMatrix, **bound) -> _Problem:
    n = checks.cols
    rows = list(checks.rows)
    order = _sorted_check_order([r.bit_count() for r in rows])
    syn = [0] * n
    supports = []
    for i, idx in enumerate(order):
        supp = [j for j in range(n) if (rows[idx] >> j) & 1]
        supports.append(supp)
        for j in supp:
            syn[j] |= 1 << i
    branches = tuple(
        tuple((j, ((syn[j], 1 << j),)) for j in supp) for supp in supports
    )
    seeds = tuple((j, ((syn[j], 1 << j),)) for j in range(n))
    pivots, rws = degeneracy._rref()
    return _Problem(
        mode="binary",
        n_cols=n,
        pack_n=0,
        branches=branches,
        seeds=seeds,
        entry_syn=tuple(syn),
        n_checks=len(supports),
        degeneracy_pivots=tuple(pivots),
        degeneracy_rows=tuple(rws),
        **bound,
    )


# -- recursive enumeration ---------------------------------------------


def _run_seeds(branches, seeds, m_max: int, cap: int):
    """Depth-first search from the given seeds; returns per-weight path
    counts and the set of recorded cluster keys."""
    paths = [0] * (m_max + 1)
    found: set[int] = set()

    def record(key: int, weight: int) -> None:
        paths[weight] += 1
        if key not in found:
            if len(found) >= cap:
                raise ResourceCapError(
                    f"more than {cap} distinct clusters; raise the memory cap to continue"
                )
            found.add(key)

    def go(used: int, key: int, s: int, depth: int) -> None:
        i = (s & -s).bit_length() - 1
        nd = depth + 1
        extend = nd < m_max
        for pos, opts in branches[i]:
            if (used >> pos) & 1:
                continue
            for ds, dk in opts:
                ns = s ^ ds
                if ns == 0:
                    record(key ^ dk, nd)
                elif extend:
                    go(used | (1 << pos), key ^ dk, ns, nd)

    for pos, opts in seeds:
        for ds, dk in opts:
            if ds == 0:
                record(dk, 1)
            elif m_max >= 2:
                go(1 << pos, dk, ds, 1)
    return paths, found


def _worker_run(args):
    branches, seeds, m_max, cap = args
    paths, found = _run_seeds(branches, seeds, m_max, cap)
    return paths, list(found)


def _rank_of_words(words) -> int:
    basis: dict[int, int] = {}
    for w in words:
        while w:
            h = w.bit_length() - 1
            if h in basis:
                w ^= basis[h]
            else:
                basis[h] = w
                break
    return len(basis)


def _classify(problem: _Problem, keys, m_max: int, keep: bool) -> ClusterCensus:
    distinct = [0] * (m_max + 1)
    irred = [0] * (m_max + 1)
    nonstab = [0] * (m_max + 1)
    kept: list[list[Cluster]] | None = [[] for _ in range(m_max + 1)] if keep else None
    for key in keys:
        entries = problem.decode(key)
        m = len(entries)
        distinct[m] += 1
        cols = [problem.syn_of(e) for e in entries]
        if m - _rank_of_words(cols) == 1:
            irred[m] += 1
            if not problem.in_degeneracy(key):
                nonstab[m] += 1
        if kept is not None:
            kept[m].append(problem.cluster_of_key(key))
    clusters = None
    if kept is not None:
        clusters = tuple(
            tuple(sorted(cl, key=lambda c: (c.positions, c.paulis or ())))
            for cl in kept
        )
    return ClusterCensus(
        m_max=m_max,
        distinct=tuple(distinct),
        irreducible=tuple(irred),
        irreducible_nonstabilizer=tuple(nonstab),
        paths=(0,) * (m_max + 1),  # replaced by caller
        clusters=clusters,
    )


def enumerate_clusters(
    code,
    m_max: int,
    sector: str = "full",
    workers: int = 1,
    max_stored: int = DEFAULT_CLUSTER_CAP,
    keep_clusters: bool = False,
) -> ClusterCensus:
    """Run the recursive search up to weight m_max and build a census.

    Checks are served in a fixed order (ascending weight, ties by
    original row index) so the counts are reproducible.  With
    workers > 1 the seed set is split across processes; the merged
    census does not depend on the schedule.
    """
    if m_max < 1:
        raise ValidationError("m_max must be at least 1")
    problem = _build_problem(code, sector)
    if workers <= 1:
        paths, found = _run_seeds(problem.branches, problem.seeds, m_max, max_stored)
    else:
        chunks = [list(problem.seeds[i::workers]) for i in range(workers)]
        chunks = [c for c in chunks if c]
        paths = [0] * (m_max + 1)
        found = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            jobs = [
                (problem.branches, tuple(chunk), m_max, max_stored) for chunk in chunks
            ]
            for wpaths, wkeys in pool.map(_worker_run, jobs):
                for m in range(m_max + 1):
                    paths[m] += wpaths[m]
                found.update(wkeys)
        if len(found) > max_stored:
            raise ResourceCapError(
                f"more than {max_stored} distinct clusters; raise the memory cap to continue"
            )
    census = _classify(problem, found, m_max, keep_clusters)
    return ClusterCensus(
        m_max=m_max,
        distinct=census.distinct,
        irreducible=census.irreducible,
        irreducible_nonstabilizer=census.irreducible_nonstabilizer,
        paths=tuple(paths),
        clusters=census.clusters,
    )


# -- irreducibility -----------------------------------------------------


def is_irreducible(code, cluster: Cluster, sector: str = "full") -> bool:
    """Kernel test for Definition-style irreducibility.

    The columns of per-entry syndromes span a space whose kernel always
    contains the all-ones vector (the whole cluster is undetectable);
    any further kernel vector selects an undetectable proper piece and
    its complement, i.e. a decomposition.  So the cluster is irreducible
    exactly when that kernel is one-dimensional.
    """
    problem = _build_problem(code, sector)
    entries = problem.entries_of_cluster(cluster)
    cols = [problem.syn_of(e) for e in entries]
    syn = 0
    for c in cols:
        syn ^= c
    if syn:
        raise ValidationError("cluster is detectable, not undetectable")
    return len(entries) - _rank_of_words(cols) == 1


def is_irreducible_bruteforce(code, cluster: Cluster, sector: str = "full") -> bool:
    """Oracle form: scan all proper nonempty sub-supports for an
    undetectable restriction.  Weight is capped at 20."""
    problem = _build_problem(code, sector)
    entries = problem.entries_of_cluster(cluster)
    m = len(entries)
    if m > 20:
        raise ValidationError("brute-force irreducibility capped at weight 20")
    syn_entry = [problem.syn_of(e) for e in entries]
    table = _subset_syndromes(syn_entry)
    if table[-1]:
        raise ValidationError("cluster is detectable, not undetectable")
    full = (1 << m) - 1
    return not any(table[s] == 0 for s in range(1, full))


def decompose(code, cluster: Cluster, sector: str = "full") -> tuple[Cluster, ...]:
    """Split an undetectable cluster into irreducible pieces on disjoint
    supports (the pieces multiply back to the cluster)."""
    problem = _build_problem(code, sector)
    entries = problem.entries_of_cluster(cluster)
    cols = [problem.syn_of(e) for e in entries]

    def split(entry_idx: list[int]) -> list[list[int]]:
        words = [cols[i] for i in entry_idx]
        m = len(entry_idx)
        kernel = _kernel_vectors(words, m)
        nontrivial = [x for x in kernel if x != (1 << m) - 1]
        if not nontrivial:
            return [entry_idx]
        x = nontrivial[0]
        left = [entry_idx[i] for i in range(m) if (x >> i) & 1]
        right = [entry_idx[i] for i in range(m) if not (x >> i) & 1]
        return split(left) + split(right)

    syn = 0
    for c in cols:
        syn ^= c
    if syn:
        raise ValidationError("cluster is detectable, not undetectable")
    parts = split(list(range(len(entries))))
    out = []
    for part in parts:
        chosen = sorted(part)
        if problem.mode == "binary":
            out.append(Cluster(tuple(cluster.positions[i] for i in chosen)))
        else:
            out.append(
                Cluster(
                    tuple(cluster.positions[i] for i in chosen),
                    tuple(cluster.paulis[i] for i in chosen),
                )
            )
    return tuple(out)


def _kernel_vectors(words, m: int) -> list[int]:
    """Basis of { x : xor of words[i] over set bits of x is 0 }.

    The words are matrix columns; transpose them into rows and take the
    right kernel."""
    nbits = max((w.bit_length() for w in words), default=1)
    rows = []
    for b in range(nbits):
        row = 0
        for i, w in enumerate(words):
            if (w >> b) & 1:
                row |= 1 << i
        rows.append(row)
    return [v.bits for v in BitMatrix(tuple(rows), m).kernel_basis()]


# -- brute-force census --------------------------------------------------


def _subset_syndromes(syn_entry: list[int]) -> list[int]:
    m = len(syn_entry)
    table = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        table[s] = table[s ^ low] ^ syn_entry[low.bit_length() - 1]
    return table


def _count_orderings(syn_entry: list[int], table: list[int]) -> int:
    """Number of entry orderings the repair rule admits, via subset DP.

    A prefix may extend only while its syndrome is nonzero, and the next
    entry must flip the lowest set syndrome bit of the prefix.
    """
    m = len(syn_entry)
    full = (1 << m) - 1
    f = [0] * (full + 1)
    for i in range(m):
        f[1 << i] = 1
    for s in range(1, full + 1):
        if s & (s - 1) == 0:
            continue
        total = 0
        rem = s
        while rem:
            low = rem & -rem
            rem ^= low
            prev = s ^ low
            ps = table[prev]
            if ps and f[prev]:
                if (syn_entry[low.bit_length() - 1] >> ((ps & -ps).bit_length() - 1)) & 1:
                    total += f[prev]
        f[s] = total
    return f[full]


def _pauli_scan_numpy(problem: _Problem, m_max: int, on_hit) -> None:
    import numpy as np

    n = problem.n_cols
    if problem.n_checks > 64:
        _pauli_scan_python(problem, m_max, on_hit)
        return
    masks = np.array(problem.entry_syn, dtype=np.uint64)  # (n, 3)
    for m in range(1, m_max + 1):
        digits = np.array(
            list(itertools.product(range(3), repeat=m)), dtype=np.intp
        )  # (3^m, m)
        for combo in itertools.combinations(range(n), m):
            acc = masks[combo[0], digits[:, 0]].copy()
            for t in range(1, m):
                acc ^= masks[combo[t], digits[:, t]]
            for z in np.flatnonzero(acc == 0):
                labs = digits[z]
                on_hit(tuple((combo[t], int(labs[t])) for t in range(m)))


def _pauli_scan_python(problem: _Problem, m_max: int, on_hit) -> None:
    n = problem.n_cols
    syn = problem.entry_syn
    for m in range(1, m_max + 1):
        for combo in itertools.combinations(range(n), m):
            for labs in itertools.product(range(3), repeat=m):
                s = 0
                for t in range(m):
                    s ^= syn[combo[t]][labs[t]]
                if s == 0:
                    on_hit(tuple((combo[t], labs[t]) for t in range(m)))


def _binary_scan(problem: _Problem, m_max: int, on_hit) -> None:
    n = problem.n_cols
    syn = problem.entry_syn
    for m in range(1, m_max + 1):
        for combo in itertools.combinations(range(n), m):
            s = 0
            for j in combo:
                s ^= syn[j]
            if s == 0:
                on_hit(tuple((j, None) for j in combo))


def brute_force_census(
    code,
    m_max: int,
    sector: str = "full",
    guard: int = 10**8,
    keep_clusters: bool = False,
) -> ClusterCensus:
    """Exhaustive ground-truth census.

    Every configuration of up to m_max entries is scanned; undetectable
    ones are classified, and recursion-path counts are recovered by
    counting admissible orderings per configuration.  Configurations
    with no admissible ordering (disconnected pieces the search can
    never assemble) are excluded from the distinct count, matching the
    recursive enumeration exactly.
    """
    if m_max < 1:
        raise ValidationError("m_max must be at least 1")
    problem = _build_problem(code, sector)
    n = problem.n_cols
    per_combo = 3 if problem.mode == "pauli" else 1
    work = sum(comb(n, m) * per_combo**m for m in range(1, m_max + 1))
    if work > guard:
        raise ResourceCapError(
            f"brute-force scan needs {work} configurations, above the guard {guard}"
        )

    distinct = [0] * (m_max + 1)
    irred = [0] * (m_max + 1)
    nonstab = [0] * (m_max + 1)
    paths = [0] * (m_max + 1)
    kept: list[list[Cluster]] | None = [[] for _ in range(m_max + 1)] if keep_clusters else None

    def on_hit(entries: tuple) -> None:
        m = len(entries)
        syn_entry = [problem.syn_of(e) for e in entries]
        table = _subset_syndromes(syn_entry)
        orderings = _count_orderings(syn_entry, table)
        full = (1 << m) - 1
        reducible = any(table[s] == 0 for s in range(1, full))
        if not reducible:
            # every irreducible cluster must be constructible
            assert orderings > 0, "irreducible cluster missed by the ordering rule"
            irred[m] += 1
            key = 0
            if problem.mode == "binary":
                for j, _ in entries:
                    key |= 1 << j
            else:
                npk = problem.pack_n
                for j, lab in entries:
                    if lab in (0, 1):
                        key |= 1 << j
                    if lab in (1, 2):
                        key |= 1 << (npk + j)
            if not problem.in_degeneracy(key):
                nonstab[m] += 1
        if orderings:
            distinct[m] += 1
            paths[m] += orderings
            if kept is not None:
                if problem.mode == "binary":
                    kept[m].append(Cluster(tuple(j for j, _ in entries)))
                else:
                    kept[m].append(
                        Cluster(
                            tuple(j for j, _ in entries),
                            tuple(_PAULI_LABELS[lab] for _, lab in entries),
                        )
                    )

    if problem.mode == "pauli":
        _pauli_scan_numpy(problem, m_max, on_hit)
    else:
        _binary_scan(problem, m_max, on_hit)

    clusters = None
    if kept is not None:
        clusters = tuple(
            tuple(sorted(cl, key=lambda c: (c.positions, c.paulis or ())))
            for cl in kept
        )
    return ClusterCensus(
        m_max=m_max,
        distinct=tuple(distinct),
        irreducible=tuple(irred),
        irreducible_nonstabilizer=tuple(nonstab),
        paths=tuple(paths),
        clusters=clusters,
    )


# -- closed-form counting bounds -----------------------------------------


def cluster_count_bound(n: int, w: int, m: int) -> int:
    """Recursion-path ceiling for full-Pauli enumeration: 3n seeds and at
    most 2(w-1) continuations per repair step."""
    if m < 1:
        raise ValidationError("m must be at least 1")
    return 3 * n * (2 * (w - 1)) ** (m - 1)


def cluster_count_bound_css(n: int, w_opposite: int, m: int) -> int:
    """Single-sector ceiling: n seeds and w-1 continuations, where w is
    the opposite-type generator weight."""
    if m < 1:
        raise ValidationError("m must be at least 1")
    return n * (w_opposite - 1) ** (m - 1)


def cluster_count_bound_ft(n: int, r: int, w: int, m: int, m_q: int) -> int:
    """Space-time ceiling for clusters with m_q qubit entries out of m."""
    if m < 1:
        raise ValidationError("m must be at least 1")
    if not 0 <= m_q <= m:
        raise ValidationError("need 0 <= m_q <= m")
    c = comb(m - 1, m_q)
    if c == 0:
        return 0
    return (3 * n + r) * c * w**m_q * 2 ** (m - m_q - 1)


def cluster_count_bound_ft_total(n: int, r: int, w: int, m: int) -> int:
    """Sum of the space-time ceiling over the qubit/syndrome split."""
    if m < 1:
        raise ValidationError("m must be at least 1")
    return (3 * n + r) * (w + 2) ** (m - 1)


def census_bound(code, sector: str, m: int) -> int:
    """Bound column for census tables, matched to the sector."""
    problem = _build_problem(code, normalize_sector(sector))
    if problem.bound_kind == "full":
        return cluster_count_bound(problem.bound_n, problem.bound_w, m)
    if problem.bound_kind == "css":
        return cluster_count_bound_css(problem.bound_n, problem.bound_w, m)
    return cluster_count_bound_ft_total(
        problem.bound_n, problem.bound_r, problem.bound_w, m
    )
