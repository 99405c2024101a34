"""Generator matrices over GF(q), rank, and exhaustive minimum distance.

The generator matrix of the degree-alpha code evaluates the standard
monomial basis at the points of the degenerate torus.  Point coordinates
are powers of eta, so evaluation reduces to exponent dot products modulo
q - 1 against precomputed discrete-log tables; that keeps matrix
construction cheap even when the point set is large.

The distance search enumerates one representative per projective class of
messages (first nonzero coordinate fixed to 1), which is exact and (q-1)x
cheaper than scanning all messages: scalar multiples of a codeword share
their Hamming weight.  The message space is cut into disjoint blocks that
are processed independently and reduced by min (or elementwise sum for the
weight distribution), so results are identical no matter how the blocks
are scheduled across threads.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, EmptyCode, TooLarge, UnsupportedWeight
from .torus import PointSet
from .wps import WeightedSpace

DEFAULT_BUDGET = 10**8

_BLOCK = 1 << 16


@dataclass(frozen=True)
class Monomial:
    """Exponent vector (m_0, ..., m_n) with its weighted degree."""

    exponents: tuple[int, ...]
    weighted_degree: int

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """Evaluation matrix over GF(q): one row per basis monomial, one column
    per point.  ``row_monomials`` and ``points`` are None for matrices read
    back from disk."""

    q: int
    alpha: int | None
    entries: np.ndarray
    row_monomials: tuple[Monomial, ...] | None = None
    points: PointSet | None = None

    @property
    def k_rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n_cols(self) -> int:
        return self.entries.shape[1]

    def __repr__(self) -> str:
        return f"GeneratorMatrix(q={self.q}, alpha={self.alpha}, shape={self.k_rows}x{self.n_cols})"


@dataclass(frozen=True)
class CodeSummary:
    """Parameters of one code, each tagged with how it was obtained."""

    alpha: int
    n: int
    k: int
    delta: int | None
    k_method: str = "formula"
    delta_method: str | None = None

    def __post_init__(self):
        if self.delta is not None and self.k + self.delta > self.n + 1:
            raise ValueError(
                f"K + delta = {self.k + self.delta} violates the Singleton "
                f"bound for length {self.n}"
            )


def standard_monomials(space: WeightedSpace, alpha: int) -> list[Monomial]:
    """Degree-alpha monomials with m_i <= d_i - 1 for i >= 1 (m_0 free).

    These avoid every leading monomial x_i^(d_i) of the vanishing ideal's
    generators and therefore index a basis of the code.  Ordered
    lexicographically by (m_n, ..., m_1).
    """
    if space.weights[0] != 1:
        raise UnsupportedWeight(
            f"standard monomial basis needs leading weight 1, got {space.weights[0]}"
        )
    if alpha < 0:
        return []
    out: list[Monomial] = []

    def descend(i: int, rem: int, suffix: tuple[int, ...]):
        if i == 0:
            out.append(Monomial((rem,) + suffix, alpha))
            return
        w = space.weights[i]
        top = min(rem // w, space.d[i] - 1)
        for m in range(top + 1):
            descend(i - 1, rem - m * w, (m,) + suffix)

    descend(space.n, alpha, ())
    return out


def evaluation_matrix(space: WeightedSpace, monomials, pts: PointSet) -> np.ndarray:
    """Evaluate each monomial at each point via discrete-log tables."""
    q = space.q
    qm1 = q - 1
    npts = len(pts.points)
    if not monomials:
        return np.zeros((0, npts), dtype=np.int64)
    eta_pow = np.array([pow(space.field.eta, t, q) for t in range(qm1)], dtype=np.int64)
    dlog = {int(eta_pow[t]): t for t in range(qm1)}
    logs = np.array([[dlog[c] for c in p] for p in pts.points], dtype=np.int64)
    exps = np.array([m.exponents for m in monomials], dtype=np.int64)
    phases = (exps @ logs.T) % qm1
    return eta_pow[phases]


def generator_matrix(space: WeightedSpace, alpha: int, pts: PointSet) -> GeneratorMatrix:
    """Generator matrix of the degree-alpha code on the given point set."""
    monos = tuple(standard_monomials(space, alpha))
    return GeneratorMatrix(space.q, alpha, evaluation_matrix(space, monos, pts), monos, pts)


def rank_mod(entries: np.ndarray, q: int) -> int:
    """Rank over GF(q) by row reduction with modular pivot inverses."""
    a = np.array(entries, dtype=np.int64, copy=True) % q
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, q) % q
        col = a[r + 1 :, c]
        nz = np.nonzero(col)[0]
        if nz.size:
            a[r + 1 + nz] = (a[r + 1 + nz] - col[nz, None] * a[r]) % q
        r += 1
        if r == nrows:
            break
    return r


def rank(m: GeneratorMatrix) -> int:
    return rank_mod(m.entries, m.q)


def _representative_count(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def _check_budget(q: int, k: int, budget: int) -> int:
    reps = _representative_count(q, k)
    if reps > budget:
        raise BudgetExceeded(reps, budget)
    if q**k >= 1 << 62:
        raise TooLarge(f"message space q^K = {q}^{k} overflows the block indexer")
    return reps


def _digit_blocks(q: int, length: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the base-q digit table with `length` columns,
    most significant digit first."""
    r = np.arange(start, stop, dtype=np.int64)
    if length == 0:
        return np.zeros((stop - start, 0), dtype=np.int64)
    divs = q ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (r[:, None] // divs[None, :]) % q


def _matmul_mod(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    # float64 products stay exact while K * (q-1)^2 < 2^52; that covers all
    # desk-scale fields and is much faster than int64 matmul.
    if a.shape[1] * (q - 1) ** 2 < 1 << 52:
        prod = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    else:
        prod = a @ b
    return prod % q


def _prepared_sections(entries: np.ndarray, q: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Per-section precomputation for the representative scan.

    Section j covers the messages whose first nonzero coordinate (fixed
    to 1) sits at index j.  The trailing message coordinates are split
    into a low part, whose q^lo codeword contributions are tabulated once,
    and a high part folded into per-row base codewords; every message is
    then one table row plus one base row.  Entries of both parts are
    reduced mod q, so their sum s satisfies s % q == 0 iff s in {0, q}.
    """
    k, n = entries.shape
    dtype = np.int16 if q <= (1 << 14) - 1 else np.int32
    sections = []
    for j in range(k):
        tail = entries[j + 1 :]
        left = tail.shape[0]
        lo = 0
        while lo < left and q ** (lo + 1) <= _BLOCK:
            lo += 1
        hi = left - lo
        if lo:
            lo_digits = _digit_blocks(q, lo, 0, q**lo)
            lo_table = _matmul_mod(lo_digits, tail[hi:], q)
        else:
            lo_table = np.zeros((1, n), dtype=np.int64)
        hi_digits = _digit_blocks(q, hi, 0, q**hi)
        bases = (_matmul_mod(hi_digits, tail[:hi], q) + entries[j]) % q
        sections.append((lo_table.astype(dtype), bases.astype(dtype)))
    return sections


_TASK_MESSAGES = 1 << 20


def _scan_tasks(sections) -> list[tuple[int, int, int]]:
    """Disjoint base-row ranges (section, start, stop) covering all
    representatives; each task stands for a contiguous message range."""
    tasks = []
    for si, (lo_table, bases) in enumerate(sections):
        rows = max(1, _TASK_MESSAGES // lo_table.shape[0])
        for start in range(0, bases.shape[0], rows):
            tasks.append((si, start, min(start + rows, bases.shape[0])))
    return tasks


def _task_weights(sections, q: int, n: int, task):
    """Yield the weight vector of each base row's message block."""
    si, r0, r1 = task
    lo_table, bases = sections[si]
    for r in range(r0, r1):
        s = lo_table + bases[r]
        yield n - (s == 0).sum(axis=1) - (s == q).sum(axis=1)


def _run_tasks(tasks, worker, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(worker, tasks))
    return [worker(t) for t in tasks]


def min_distance_exhaustive(
    m: GeneratorMatrix, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> int:
    """Exact minimum Hamming weight over all nonzero codewords.

    Scans (q^K - 1)/(q - 1) projective representatives; raises
    BudgetExceeded (with the required count) when that exceeds `budget`.
    The reduction is a plain min over disjoint blocks, so the result does
    not depend on the number of threads.
    """
    q, k = m.q, m.k_rows
    if k == 0:
        raise EmptyCode("dimension-0 code has no nonzero codeword")
    _check_budget(q, k, budget)
    entries = np.ascontiguousarray(m.entries, dtype=np.int64) % q
    sections = _prepared_sections(entries, q)
    n = m.n_cols

    def worker(task):
        best = None
        for w in _task_weights(sections, q, n, task):
            w = w[w > 0]
            if w.size:
                low = int(w.min())
                if best is None or low < best:
                    best = low
        return best

    results = [r for r in _run_tasks(_scan_tasks(sections), worker, threads) if r is not None]
    if not results:
        raise EmptyCode("every codeword is zero (rows are not independent)")
    return min(results)


def weight_distribution(
    m: GeneratorMatrix, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> list[int]:
    """Counts A_w of codewords of each Hamming weight w = 0..N.

    A_0 = 1 and sum(A_w) = q^K.  Each projective representative stands for
    q - 1 codewords of equal weight.
    """
    q, k, n = m.q, m.k_rows, m.n_cols
    if k == 0:
        return [1] + [0] * n
    _check_budget(q, k, budget)
    entries = np.ascontiguousarray(m.entries, dtype=np.int64) % q
    sections = _prepared_sections(entries, q)

    def worker(task):
        counts = np.zeros(n + 1, dtype=np.int64)
        for w in _task_weights(sections, q, n, task):
            counts += np.bincount(w, minlength=n + 1)
        return counts

    counts = sum(_run_tasks(_scan_tasks(sections), worker, threads))
    dist = [(q - 1) * int(c) for c in counts]
    dist[0] += 1
    return dist


# ---------------------------------------------------------------------------
# import/export
# ---------------------------------------------------------------------------

def matrix_to_text(m: GeneratorMatrix) -> str:
    """One row per line, space-separated residues."""
    lines = [" ".join(str(int(v)) for v in row) for row in m.entries]
    return "\n".join(lines) + ("\n" if lines else "")


def matrix_from_text(text: str, q: int) -> GeneratorMatrix:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rows.append([int(tok) for tok in line.split()])
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows in matrix text")
        if any(v < 0 or v >= q for r in rows for v in r):
            raise ValueError(f"entries must be residues in [0, {q})")
        entries = np.array(rows, dtype=np.int64)
    else:
        entries = np.zeros((0, 0), dtype=np.int64)
    return GeneratorMatrix(q, None, entries)


def matrix_to_json(m: GeneratorMatrix) -> str:
    obj = {
        "schema": 1,
        "q": m.q,
        "alpha": m.alpha,
        "weights": list(m.points.space.weights) if m.points is not None else None,
        "rows": [[int(v) for v in row] for row in m.entries],
    }
    return json.dumps(obj, sort_keys=True)


def matrix_from_json(text: str) -> GeneratorMatrix:
    obj = json.loads(text)
    q = int(obj["q"])
    rows = obj["rows"]
    entries = (
        np.array(rows, dtype=np.int64) if rows else np.zeros((0, 0), dtype=np.int64)
    )
    alpha = obj.get("alpha")
    return GeneratorMatrix(q, None if alpha is None else int(alpha), entries)
