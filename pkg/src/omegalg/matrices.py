"""Matrix calculus over carriers: block star, plus and omega, group identities.

The default star/plus/omega implementations use the one-call recursion that
peels off the first row and column, which is value-equal to the textbook
block formulas in any lawful carrier but costs O(n^3) carrier operations
instead of exponentially many.  The literal block formulas at an arbitrary
split point remain available (``split=k``) so split independence is a
testable property, not an assumption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import HemimodulePair, LawFailure, LawReport


@dataclass(frozen=True)
class Matrix:
    entries: tuple

    def __post_init__(self):
        if not self.entries or any(len(r) != len(self.entries[0]) for r in self.entries):
            raise ValueError("matrix rows must be nonempty and equal length")

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]


def mat(rows) -> Matrix:
    return Matrix(tuple(tuple(r) for r in rows))


def zeros(c, rows, cols) -> Matrix:
    return mat([[c.zero] * cols for _ in range(rows)])


def identity(c, n) -> Matrix:
    return mat([[c.one if i == j else c.zero for j in range(n)] for i in range(n)])


def mat_add(c, a: Matrix, b: Matrix) -> Matrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("dimension mismatch in add")
    return mat([[c.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)])


def mat_mul(c, a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ValueError("dimension mismatch in mul")
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = c.zero
            for k in range(a.cols):
                acc = c.add(acc, c.mul(a.entries[i][k], b.entries[k][j]))
            row.append(acc)
        out.append(row)
    return mat(out)


def mat_eq(c, a: Matrix, b: Matrix) -> bool:
    return (a.rows, a.cols) == (b.rows, b.cols) and all(
        c.eq(x, y) for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb))


def mat_show(c, a: Matrix) -> str:
    return "[" + "; ".join(" ".join(c.show(x) for x in row) for row in a.entries) + "]"


def mat_to_json(c, a: Matrix) -> dict:
    return {"rows": a.rows, "cols": a.cols,
            "entries": [c.show(x) for row in a.entries for x in row]}


def mat_from_json(c, data) -> Matrix:
    rows, cols = data["rows"], data["cols"]
    flat = [c.read(s) for s in data["entries"]]
    if len(flat) != rows * cols:
        raise ValueError("entry count does not match the dimensions")
    return mat([flat[i * cols:(i + 1) * cols] for i in range(rows)])


def _blocks(m: Matrix, k: int):
    x = mat([row[:k] for row in m.entries[:k]])
    y = mat([row[k:] for row in m.entries[:k]])
    u = mat([row[:k] for row in m.entries[k:]])
    v = mat([row[k:] for row in m.entries[k:]])
    return x, y, u, v


def _assemble(x: Matrix, y: Matrix, u: Matrix, v: Matrix) -> Matrix:
    top = [rx + ry for rx, ry in zip(x.entries, y.entries)]
    bot = [ru + rv for ru, rv in zip(u.entries, v.entries)]
    return mat(top + bot)


def _require_square(m: Matrix):
    if m.rows != m.cols:
        raise ValueError("square matrix required")


# --- plus ---------------------------------------------------------------------

def mat_plus(c, m: Matrix, split=None) -> Matrix:
    """Entrywise-lawful matrix plus.

    With ``split=None`` the first-row/column recursion is used; with an
    explicit split point the literal block formula is evaluated at that k.
    """
    _require_square(m)
    n = m.rows
    if n == 1:
        return mat([[c.plus(m[0, 0])]])
    if split is None:
        return _mat_plus_fast(c, m)
    if not 1 <= split < n:
        raise ValueError("split must satisfy 1 <= split < n")
    x, y, u, v = _blocks(m, split)
    vp = mat_plus(c, v)
    y_vstar = mat_add(c, y, mat_mul(c, y, vp))          # Y V*
    a = mat_add(c, x, mat_mul(c, y_vstar, u))           # X + Y V* U
    ap = mat_plus(c, a)
    xp = mat_plus(c, x)
    u_xstar = mat_add(c, u, mat_mul(c, u, xp))          # U X*
    b = mat_add(c, v, mat_mul(c, u_xstar, y))           # V + U X* Y
    bp = mat_plus(c, b)
    beta = mat_add(c, mat_mul(c, ap, y_vstar), y_vstar)     # (X+YV*U)* Y V*
    gamma = mat_add(c, mat_mul(c, bp, u_xstar), u_xstar)    # (V+UX*Y)* U X*
    return _assemble(ap, beta, gamma, bp)


def _mat_plus_fast(c, m: Matrix) -> Matrix:
    x, y, u, v = _blocks(m, 1)
    xp = c.plus(m[0, 0])
    xp_mat = mat([[xp]])
    sl_xy = mat_add(c, mat_mul(c, xp_mat, y), y)       # X* Y   (1 x n-1)
    sr_ux = mat_add(c, u, mat_mul(c, u, xp_mat))       # U X*   (n-1 x 1)
    b = mat_add(c, v, mat_mul(c, sr_ux, y))            # V + U X* Y
    bp = mat_plus(c, b)
    gamma = mat_add(c, mat_mul(c, bp, sr_ux), sr_ux)   # B* (U X*)
    beta = mat_add(c, sl_xy, mat_mul(c, sl_xy, bp))    # (X* Y) B*
    alpha = mat([[c.add(xp, mat_mul(c, sl_xy, gamma)[0, 0])]])
    return _assemble(alpha, beta, gamma, bp)


# --- star ---------------------------------------------------------------------

def mat_star(c, m: Matrix, split=None) -> Matrix:
    """Matrix star for carriers with a total (or ideal-partial) star."""
    _require_square(m)
    n = m.rows
    if n == 1:
        return _scalar_star_mat(c, m[0, 0])
    if split is None:
        x, y, u, v = _blocks(m, 1)
        xs = _scalar_star_mat(c, m[0, 0])
        b = mat_add(c, v, mat_mul(c, mat_mul(c, u, xs), y))
        bs = mat_star(c, b)
        beta = mat_mul(c, mat_mul(c, xs, y), bs)           # X* Y B*
        gamma = mat_mul(c, mat_mul(c, bs, u), xs)          # B* U X*
        alpha = mat([[c.add(xs[0, 0], mat_mul(c, beta, mat_mul(c, u, xs))[0, 0])]])
        return _assemble(alpha, beta, gamma, bs)
    if not 1 <= split < n:
        raise ValueError("split must satisfy 1 <= split < n")
    x, y, u, v = _blocks(m, split)
    vs = mat_star(c, v)
    xs = mat_star(c, x)
    alpha = mat_star(c, mat_add(c, x, mat_mul(c, mat_mul(c, y, vs), u)))
    delta = mat_star(c, mat_add(c, v, mat_mul(c, mat_mul(c, u, xs), y)))
    beta = mat_mul(c, mat_mul(c, alpha, y), vs)
    gamma = mat_mul(c, mat_mul(c, delta, u), xs)
    return _assemble(alpha, beta, gamma, delta)


def _scalar_star_mat(c, x) -> Matrix:
    if hasattr(c, "partial_star"):
        return mat([[c.partial_star(x) if c.is_ideal(x) else c.star(x)]])
    return mat([[c.star(x)]])


# --- omega ----------------------------------------------------------------------

def _act_vec(pair: HemimodulePair, m: Matrix, vec) -> tuple:
    """H-matrix acting on a V-column."""
    V = pair.module
    out = []
    for i in range(m.rows):
        acc = V.zero
        for j in range(m.cols):
            acc = V.add(acc, pair.act(m.entries[i][j], vec[j]))
        out.append(acc)
    return tuple(out)


def _vec_add(V, a, b):
    return tuple(V.add(x, y) for x, y in zip(a, b))


def mat_omega(pair: HemimodulePair, m: Matrix, split=None) -> tuple:
    """Omega of a square H-matrix as a column over V."""
    _require_square(m)
    H, V = pair.hemiring, pair.module
    n = m.rows
    if n == 1:
        return (pair.omega(m[0, 0]),)
    if split is None:
        x, y, u, v = _blocks(m, 1)
        vp = mat_plus(H, v)
        y_vstar = mat_add(H, y, mat_mul(H, y, vp))
        a = mat_add(H, x, mat_mul(H, y_vstar, u))[0, 0]      # scalar X + Y V* U
        v_omega = mat_omega(pair, v)
        y_vomega = _act_vec(pair, y, v_omega)[0]
        top = V.add(pair.star_act(a, y_vomega), pair.omega(a))
        # lower block: runs either reach the first row at some point (V* U ·
        # top) or stay in the lower block forever (V^omega)
        w = tuple(pair.act(u.entries[j][0], top) for j in range(n - 1))
        bottom = _vec_add(V, _vec_add(V, _act_vec(pair, vp, w), w), v_omega)
        return (top,) + bottom
    if not 1 <= split < n:
        raise ValueError("split must satisfy 1 <= split < n")
    x, y, u, v = _blocks(m, split)
    vp = mat_plus(H, v)
    xp = mat_plus(H, x)
    y_vstar = mat_add(H, y, mat_mul(H, y, vp))
    u_xstar = mat_add(H, u, mat_mul(H, u, xp))
    a = mat_add(H, x, mat_mul(H, y_vstar, u))
    b = mat_add(H, v, mat_mul(H, u_xstar, y))
    ap, bp = mat_plus(H, a), mat_plus(H, b)
    a_omega, b_omega = mat_omega(pair, a), mat_omega(pair, b)
    y_vomega = _act_vec(pair, y, mat_omega(pair, v))
    u_xomega = _act_vec(pair, u, mat_omega(pair, x))
    top = _vec_add(V, _vec_add(V, _act_vec(pair, ap, y_vomega), y_vomega), a_omega)
    bottom = _vec_add(V, _vec_add(V, _act_vec(pair, bp, u_xomega), u_xomega), b_omega)
    return top + bottom


def mat_omega_k(pair: HemimodulePair, m: Matrix, k: int) -> tuple:
    """Omega with acceptance restricted to the first k rows.

    k = n is the plain matrix omega; k = 0 accepts nothing and yields the
    all-zero column.
    """
    _require_square(m)
    H, V = pair.hemiring, pair.module
    n = m.rows
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        return (V.zero,) * n
    if k == n:
        return mat_omega(pair, m)
    x, y, u, v = _blocks(m, k)
    vp = mat_plus(H, v)
    y_vstar = mat_add(H, y, mat_mul(H, y, vp))
    a = mat_add(H, x, mat_mul(H, y_vstar, u))            # X + Y V* U
    a_omega = mat_omega(pair, a)
    vstar_u = mat_add(H, u, mat_mul(H, vp, u))           # V* U
    bottom = _act_vec(pair, vstar_u, a_omega)
    return tuple(a_omega) + bottom


# --- permutations ------------------------------------------------------------------

@dataclass(frozen=True)
class PermutationMatrix:
    perm: tuple  # image list: position i holds pi(i)

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("not a permutation")

    @property
    def n(self):
        return len(self.perm)


def permutation_conjugate(m: Matrix, pi: PermutationMatrix) -> Matrix:
    """pi^-1 M pi, computed by index permutation (no multiplications)."""
    p = pi.perm
    return mat([[m.entries[p[i]][p[j]] for j in range(m.cols)] for i in range(m.rows)])


def permute_column(vec, pi: PermutationMatrix) -> tuple:
    return tuple(vec[pi.perm[i]] for i in range(len(vec)))


def permutation_plus_check(c, m: Matrix, pi: PermutationMatrix) -> bool:
    return mat_eq(c, mat_plus(c, permutation_conjugate(m, pi)),
                  permutation_conjugate(mat_plus(c, m), pi))


def permutation_star_check(c, m: Matrix, pi: PermutationMatrix) -> bool:
    return mat_eq(c, mat_star(c, permutation_conjugate(m, pi)),
                  permutation_conjugate(mat_star(c, m), pi))


def permutation_omega_check(pair: HemimodulePair, m: Matrix, pi: PermutationMatrix) -> bool:
    V = pair.module
    lhs = mat_omega(pair, permutation_conjugate(m, pi))
    rhs = permute_column(mat_omega(pair, m), pi)
    return all(V.eq(a, b) for a, b in zip(lhs, rhs))


# --- finite groups ------------------------------------------------------------------

@dataclass(frozen=True)
class GroupTable:
    name: str
    table: tuple  # table[i][j] = i*j over elements 0..n-1, with 0 the unit

    def __post_init__(self):
        n = self.order
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError(f"{self.name}: element 0 is not a unit")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise ValueError(f"{self.name}: product is not associative")
        for i in range(n):
            if not any(self.table[i][j] == 0 for j in range(n)):
                raise ValueError(f"{self.name}: element {i} has no inverse")

    @property
    def order(self):
        return len(self.table)

    def inverse(self, i):
        for j in range(self.order):
            if self.table[i][j] == 0:
                return j
        raise AssertionError


def cyclic_group(n: int) -> GroupTable:
    return GroupTable(f"Z{n}", tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def klein_four() -> GroupTable:
    return GroupTable("V4", tuple(tuple(i ^ j for j in range(4)) for i in range(4)))


def symmetric_group_3() -> GroupTable:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(3))] for q in perms) for p in perms)
    return GroupTable("S3", table)


def builtin_groups() -> dict:
    groups = {"Z1": cyclic_group(1), "Z2": cyclic_group(2), "Z3": cyclic_group(3),
              "Z4": cyclic_group(4), "V4": klein_four(), "Z5": cyclic_group(5),
              "Z6": cyclic_group(6), "S3": symmetric_group_3()}
    return groups


def groups_up_to(order: int):
    return [g for g in builtin_groups().values() if g.order <= order]


def group_matrix(g: GroupTable, xs) -> Matrix:
    """Matrix whose (i, j) entry is the variable at group element i^-1 · j."""
    if len(xs) != g.order:
        raise ValueError(f"{g.name} needs {g.order} elements, got {len(xs)}")
    return mat([[xs[g.table[g.inverse(i)][j]] for j in range(g.order)]
                for i in range(g.order)])


def group_identity_check(g: GroupTable, c, sampler=None, trials=30, seed=42,
                         pair: HemimodulePair = None) -> LawReport:
    """Row and column sums of the plus (and optionally omega) of the group matrix.

    The plus form requires every row and column of M_G^+ to sum to
    plus(x_1 + ... + x_n); the omega form requires every entry of M_G^omega
    to equal omega(x_1 + ... + x_n).
    """
    import random as _random
    rng = _random.Random(seed)
    sampler = sampler or c.sample
    report = LawReport(f"group:{g.name}:{c.name}", 0)
    for _ in range(trials):
        xs = [sampler(rng) for _ in range(g.order)]
        total = c.sum(xs)
        m = group_matrix(g, xs)
        mp = mat_plus(c, m)
        want = c.plus(total)
        report.trials += 1
        for i in range(g.order):
            row = c.sum(mp.entries[i])
            if not c.eq(row, want):
                report.failures.append(LawFailure(
                    "plus_group_row", tuple(c.show(x) for x in xs), c.show(row), c.show(want)))
            col = c.sum(mp.entries[j][i] for j in range(g.order))
            if not c.eq(col, want):
                report.failures.append(LawFailure(
                    "plus_group_col", tuple(c.show(x) for x in xs), c.show(col), c.show(want)))
        if pair is not None:
            V = pair.module
            want_o = pair.omega(total)
            col_o = mat_omega(pair, m)
            for entry in col_o:
                if not V.eq(entry, want_o):
                    report.failures.append(LawFailure(
                        "omega_group", tuple(c.show(x) for x in xs),
                        V.show(entry), V.show(want_o)))
        if len(report.failures) >= 20:
            break
    return report


def simulation_check(c, pairs, trials=20, seed=42) -> LawReport:
    """If M Q = Q N then M^+ Q = Q N^+ (checked on supplied (M, N, Q) builders).

    ``pairs`` is an iterable of callables rng -> (M, N, Q) producing matrices
    with M Q = Q N; the premise is verified and the conclusion checked.
    """
    import random as _random
    rng = _random.Random(seed)
    report = LawReport(f"simulation:{c.name}", 0)
    for build in pairs:
        for _ in range(trials):
            m, n, q = build(rng)
            if not mat_eq(c, mat_mul(c, m, q), mat_mul(c, q, n)):
                continue  # premise not met; builder is advisory only
            report.trials += 1
            lhs = mat_mul(c, mat_plus(c, m), q)
            rhs = mat_mul(c, q, mat_plus(c, n))
            if not mat_eq(c, lhs, rhs):
                report.failures.append(LawFailure(
                    "simulation", (mat_show(c, m), mat_show(c, q)),
                    mat_show(c, lhs), mat_show(c, rhs)))
    return report


def all_permutations(n: int):
    return [PermutationMatrix(p) for p in itertools.permutations(range(n))]
