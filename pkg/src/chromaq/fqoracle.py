"""Brute-force engine over F_q: UT_n and GL_n enumeration, superclass
functions, pseudosupercharacters, induction to GL_n, flags, and Hessenberg
point counts.

q is restricted to primes <= 7; enumeration sizes are deliberately desk-scale.
Matrices are tuples of row tuples with entries reduced mod q.  The hot loops
(GL_n sweeps) stick to raw row tuples and local bindings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .combinatorics import (
    DyckPath,
    IndiffGraph,
    Partition,
    SchroderPath,
    area,
    diag,
    gen_partitions,
    graph_of,
    indifference_graphs,
    mesa,
    mobius_subgraph,
)
from .guards import require

PRIMES = (2, 3, 5, 7)
MAX_CLASSFN_N = 4
MAX_GL_ORDER = 30_000_000

Rows = tuple[tuple[int, ...], ...]


def _check_q(q: int) -> None:
    require(q in PRIMES, f"q = {q} must be a prime in {PRIMES}")


# ---------------------------------------------------------------------------
# matrices over F_q
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _inv_table(q: int) -> tuple[int, ...]:
    return tuple(pow(a, q - 2, q) if a else 0 for a in range(q))


def mat_identity(n: int) -> Rows:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Rows, b: Rows, q: int) -> Rows:
    n = len(a)
    bt = tuple(zip(*b)) if n else ()
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % q for col in bt) for row in a)


def mat_inv(rows: Rows, q: int) -> Rows:
    n = len(rows)
    inv_t = _inv_table(q)
    A = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        f = inv_t[A[col][col]]
        if f != 1:
            A[col] = [(x * f) % q for x in A[col]]
        ac = A[col]
        for r in range(n):
            if r != col and A[r][col]:
                c = A[r][col]
                ar = A[r]
                for k in range(col, 2 * n):
                    ar[k] = (ar[k] - c * ac[k]) % q
    return tuple(tuple(r[n:]) for r in A)


@dataclass(frozen=True)
class MatrixFq:
    """Immutable matrix over F_q (q prime <= 7)."""

    q: int
    rows: Rows

    def __post_init__(self):
        _check_q(self.q)
        n = len(self.rows)
        object.__setattr__(self, "rows",
                           tuple(tuple(x % self.q for x in r) for r in self.rows))
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __mul__(self, other: "MatrixFq") -> "MatrixFq":
        assert self.q == other.q
        return MatrixFq(self.q, mat_mul(self.rows, other.rows, self.q))

    def inv(self) -> "MatrixFq":
        return MatrixFq(self.q, mat_inv(self.rows, self.q))

    def is_upper_unipotent(self) -> bool:
        return all(self.rows[i][j] == (1 if i == j else 0)
                   for i in range(self.n) for j in range(i + 1))

    def to_digits(self) -> str:
        return "".join(str(x) for r in self.rows for x in r)

    @staticmethod
    def from_digits(s: str, n: int, q: int) -> "MatrixFq":
        if len(s) != n * n:
            raise ValueError(f"need {n * n} digits, got {len(s)}")
        vals = [int(c) for c in s]
        return MatrixFq(q, tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n)))


def jordan(lam: Partition, q: int) -> MatrixFq:
    """Unipotent Jordan matrix with one block per part (1s on the superdiagonal)."""
    _check_q(q)
    n = sum(lam)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for k in lam:
        for i in range(k):
            rows[off + i][off + i] = 1
            if i + 1 < k:
                rows[off + i][off + i + 1] = 1
        off += k
    return MatrixFq(q, tuple(tuple(r) for r in rows))


def _jordan_pairs(lam: Partition) -> tuple[tuple[int, int], ...]:
    """0-indexed positions of the 1s of J_lam - identity."""
    out = []
    off = 0
    for k in lam:
        out.extend((off + i, off + i + 1) for i in range(k - 1))
        off += k
    return tuple(out)


# ---------------------------------------------------------------------------
# group orders and enumeration
# ---------------------------------------------------------------------------

def ut_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2)


def gl_order(n: int, q: int) -> int:
    qn = q ** n
    out = 1
    for i in range(n):
        out *= qn - q ** i
    return out


def flag_count(n: int, q: int) -> int:
    """Number of complete flags: the q-factorial [n]_q!."""
    out = 1
    for i in range(1, n + 1):
        out *= (q ** i - 1) // (q - 1)
    return out


def ut_elements(n: int, q: int) -> Iterator[Rows]:
    """All elements of UT_n(F_q) as row tuples."""
    pos = [(i, j) for i in range(n) for j in range(i + 1, n)]
    base = [list(r) for r in mat_identity(n)]
    for vals in product(range(q), repeat=len(pos)):
        for (i, j), v in zip(pos, vals):
            base[i][j] = v
        yield tuple(tuple(r) for r in base)


def gl_matrices(n: int, q: int) -> Iterator[Rows]:
    """Stream all of GL_n(F_q), built row by row from independent vectors."""
    vectors = list(product(range(q), repeat=n))
    zero = tuple([0] * n)

    def rec(rows: list, span: set) -> Iterator[Rows]:
        if len(rows) == n:
            yield tuple(rows)
            return
        for v in vectors:
            if v in span:
                continue
            new_span = set(span)
            for c in range(1, q):
                cv = tuple(c * x % q for x in v)
                for s in span:
                    new_span.add(tuple((a + b) % q for a, b in zip(s, cv)))
            rows.append(v)
            yield from rec(rows, new_span)
            rows.pop()

    yield from rec([], {zero})


# ---------------------------------------------------------------------------
# superclasses
# ---------------------------------------------------------------------------

def _label_edges(u: Rows, n: int) -> frozenset[tuple[int, int]]:
    """Finest indifference label: {i,l} iff u[j,k] = 0 on the whole interval block."""
    allz: dict[tuple[int, int], bool] = {}
    for span in range(1, n):
        for i in range(1, n - span + 1):
            l = i + span
            ok = u[i - 1][l - 1] == 0
            if span > 1:
                ok = ok and allz[(i + 1, l)] and allz[(i, l - 1)]
            allz[(i, l)] = ok
    return frozenset(e for e, ok in allz.items() if ok)


def superclass_label(u: MatrixFq) -> IndiffGraph:
    """The superclass of a unipotent upper-triangular element."""
    if not u.is_upper_unipotent():
        raise ValueError("superclass_label needs an upper unipotent matrix")
    return IndiffGraph(u.n, _label_edges(u.rows, u.n))


def superclass_rep(gamma: IndiffGraph, q: int) -> MatrixFq:
    """A canonical element whose superclass is gamma: 1s at all non-edges above the diagonal."""
    n = gamma.n
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in gamma.edges:
                rows[i - 1][j - 1] = 1
    m = MatrixFq(q, tuple(tuple(r) for r in rows))
    assert superclass_label(m).edges == gamma.edges
    return m


@lru_cache(maxsize=None)
def superclass_sizes(n: int, q: int) -> dict[IndiffGraph, int]:
    """|UT_gamma^o| for every gamma in IG_n, by exhaustive enumeration."""
    _check_q(q)
    require(n <= MAX_CLASSFN_N, f"superclass_sizes: n = {n} exceeds guard {MAX_CLASSFN_N}")
    counts: dict[frozenset, int] = {}
    for u in ut_elements(n, q):
        lab = _label_edges(u, n)
        counts[lab] = counts.get(lab, 0) + 1
    out = {g: 0 for g in indifference_graphs(n)}
    for lab, c in counts.items():
        out[IndiffGraph(n, lab)] = c
    return out


# ---------------------------------------------------------------------------
# class functions
# ---------------------------------------------------------------------------

@dataclass
class ClassFnUT:
    """Superclass function of UT_n(F_q): one rational value per indifference graph."""

    n: int
    q: int
    values: dict[IndiffGraph, Fraction]

    def __post_init__(self):
        full = {g: Fraction(0) for g in indifference_graphs(self.n)}
        for g, v in self.values.items():
            if g not in full:
                raise ValueError(f"{g} is not an indifference graph on [{self.n}]")
            full[g] = Fraction(v)
        self.values = full

    def __call__(self, g: IndiffGraph) -> Fraction:
        return self.values[g]

    def at(self, u: MatrixFq) -> Fraction:
        """Value at a group element, through its superclass label."""
        if u.q != self.q or u.n != self.n:
            raise ValueError("element lives in a different group")
        return self.values[superclass_label(u)]

    def __add__(self, other: "ClassFnUT") -> "ClassFnUT":
        assert (self.n, self.q) == (other.n, other.q)
        return ClassFnUT(self.n, self.q,
                         {g: v + other.values[g] for g, v in self.values.items()})

    def __sub__(self, other: "ClassFnUT") -> "ClassFnUT":
        return self + other.scale(-1)

    def scale(self, c) -> "ClassFnUT":
        c = Fraction(c)
        return ClassFnUT(self.n, self.q, {g: v * c for g, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFnUT):
            return NotImplemented
        return (self.n, self.q) == (other.n, other.q) and self.values == other.values


@dataclass
class UnipClassFn:
    """Unipotently supported class function of GL_n(F_q): one value per Jordan type."""

    n: int
    q: int
    values: dict[Partition, Fraction]

    def __post_init__(self):
        full = {lam: Fraction(0) for lam in gen_partitions(self.n)}
        for lam, v in self.values.items():
            lam = tuple(lam)
            if lam not in full:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            full[lam] = Fraction(v)
        self.values = full

    def __call__(self, lam: Partition) -> Fraction:
        return self.values[tuple(lam)]

    def __add__(self, other: "UnipClassFn") -> "UnipClassFn":
        assert (self.n, self.q) == (other.n, other.q)
        return UnipClassFn(self.n, self.q,
                           {lam: v + other.values[lam] for lam, v in self.values.items()})

    def scale(self, c) -> "UnipClassFn":
        c = Fraction(c)
        return UnipClassFn(self.n, self.q, {lam: v * c for lam, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnipClassFn):
            return NotImplemented
        return (self.n, self.q) == (other.n, other.q) and self.values == other.values


def _guard_classfn(n: int, q: int) -> None:
    _check_q(q)
    require(n <= MAX_CLASSFN_N, f"class functions are guarded at n <= {MAX_CLASSFN_N}, got {n}")


def delta_fn(gamma: IndiffGraph, q: int) -> ClassFnUT:
    """Indicator of the single superclass gamma."""
    _guard_classfn(gamma.n, q)
    return ClassFnUT(gamma.n, q, {gamma: Fraction(1)})


def delta_bar(gamma: IndiffGraph, q: int) -> ClassFnUT:
    """Indicator of UT_gamma: 1 on superclasses sigma with E(sigma) >= E(gamma)."""
    _guard_classfn(gamma.n, q)
    vals = {g: Fraction(1) for g in indifference_graphs(gamma.n) if gamma.edges <= g.edges}
    return ClassFnUT(gamma.n, q, vals)


def chi_bar(gamma: IndiffGraph, q: int) -> ClassFnUT:
    """Permutation character of UT_n on UT_n/UT_gamma: q^{|E|} times delta_bar."""
    return delta_bar(gamma, q).scale(q ** len(gamma.edges))


def chi_super(gamma: IndiffGraph, q: int) -> ClassFnUT:
    """Supercharacter attached to gamma, via Moebius inversion of chi_bar."""
    _guard_classfn(gamma.n, q)
    mob = mobius_subgraph(gamma)
    out = ClassFnUT(gamma.n, q, {})
    for sigma, mu in mob.items():
        if mu:
            out = out + chi_bar(sigma, q).scale(mu)
    return out


def psi_pseudo(sigma: SchroderPath, q: int) -> ClassFnUT:
    """Pseudosupercharacter: signed inclusion-exclusion of chi_bar over Diag subsets."""
    if not sigma.is_tall:
        raise ValueError("psi_pseudo needs a tall path")
    n = sigma.size
    _guard_classfn(n, q)
    a = area(sigma)
    d = sorted(diag(sigma))
    out = ClassFnUT(n, q, {})
    for mask in product((0, 1), repeat=len(d)):
        s = frozenset(e for e, m in zip(d, mask) if m)
        try:
            g = IndiffGraph(n, a | s)
        except ValueError as exc:  # cannot happen for genuine tall paths
            raise AssertionError(f"Area u S failed interval closure for {sigma}") from exc
        sign = (-1) ** (len(d) - len(s))
        out = out + chi_bar(g, q).scale(sign)
    return out


def psi_mesa_check(pi: DyckPath, q: int) -> bool:
    """Does the mesa pseudosupercharacter equal the supercharacter of Graph(pi)?"""
    _guard_classfn(pi.size, q)
    return psi_pseudo(mesa(pi), q) == chi_super(graph_of(pi), q)


def inner_product_UT(phi: ClassFnUT, psi: ClassFnUT) -> Fraction:
    """Standard inner product, computed from enumerated superclass sizes."""
    if (phi.n, phi.q) != (psi.n, psi.q):
        raise ValueError("inner_product_UT needs matching (n, q)")
    sizes = superclass_sizes(phi.n, phi.q)
    total = sum(sizes[g] * phi.values[g] * psi.values[g] for g in sizes)
    return Fraction(total, ut_order(phi.n, phi.q))


# ---------------------------------------------------------------------------
# induction to GL_n
# ---------------------------------------------------------------------------

def _induction_allowed(n: int, q: int, allow_big: bool) -> None:
    _check_q(q)
    ok = (q == 2 and n <= 4) or (q == 3 and n <= 3) or (q in (5, 7) and n <= 2)
    if not ok:
        require(allow_big and gl_order(n, q) <= MAX_GL_ORDER,
                f"induction over GL_{n}(F_{q}) (order {gl_order(n, q)}) needs allow_big=True "
                f"and order <= {MAX_GL_ORDER}")


@lru_cache(maxsize=None)
def induction_table(n: int, q: int) -> dict[Partition, dict[IndiffGraph, int]]:
    """For each Jordan type lam, how many x in GL_n put x^{-1} J_lam x into UT_n,
    split by the superclass label of the conjugate.

    This is the direct sum over all of GL_n with per-element conjugation; the
    table just factors it so that many class functions can reuse one sweep.
    """
    parts = gen_partitions(n)
    raw: dict[Partition, dict[frozenset, int]] = {lam: {} for lam in parts}
    nontrivial = [(lam, _jordan_pairs(lam)) for lam in parts if lam != tuple([1] * n)]
    rng = range(n)
    for x in gl_matrices(n, q):
        xi = mat_inv(x, q)
        xi_cols = tuple(zip(*xi)) if n else ()
        for lam, pairs in nontrivial:
            m = [[0] * n for _ in rng]
            for a, b in pairs:
                ca = xi_cols[a]
                rb = x[b]
                for i in rng:
                    cai = ca[i]
                    if cai:
                        mi = m[i]
                        for j in rng:
                            mi[j] = (mi[j] + cai * rb[j]) % q
            if any(m[i][j] for i in rng for j in range(i + 1)):
                continue
            lab = _label_edges(m, n)  # m agrees with 1 + m off the diagonal
            d = raw[lam]
            d[lab] = d.get(lab, 0) + 1
    complete = frozenset((i, j) for i in range(1, n) for j in range(i + 1, n + 1))
    raw[tuple([1] * n)] = {complete: gl_order(n, q)}
    return {lam: {IndiffGraph(n, lab): c for lab, c in labs.items()}
            for lam, labs in raw.items()}


def induce_to_GL(phi: ClassFnUT, allow_big: bool = False) -> UnipClassFn:
    """Induction from UT_n to GL_n, recorded on unipotent classes only:
    value at J_lam is (1/|UT_n|) sum over x in GL_n with x^{-1} J_lam x in UT_n
    of phi at the superclass of the conjugate.
    """
    n, q = phi.n, phi.q
    _induction_allowed(n, q, allow_big)
    tbl = induction_table(n, q)
    order = ut_order(n, q)
    vals = {}
    for lam, labs in tbl.items():
        total = sum(cnt * phi.values[g] for g, cnt in labs.items())
        vals[lam] = Fraction(total, order)
    return UnipClassFn(n, q, vals)


def induce_trivial_from_subgroup(gamma: IndiffGraph, q: int,
                                 allow_big: bool = False) -> UnipClassFn:
    """One-step induction of the trivial character of UT_gamma straight to GL_n.

    Independent oracle for transitivity of induction: counts cosets by direct
    membership tests, with no superclass machinery involved.
    """
    n = gamma.n
    _induction_allowed(n, q, allow_big)
    edges0 = [(i - 1, j - 1) for i, j in gamma.sorted_edges()]
    sub_order = ut_order(n, q) // q ** len(gamma.edges)
    vals = {}
    for lam in gen_partitions(n):
        pairs = _jordan_pairs(lam)
        rng = range(n)
        count = 0
        for x in gl_matrices(n, q):
            xi = mat_inv(x, q)
            xi_cols = tuple(zip(*xi)) if n else ()
            m = [[0] * n for _ in rng]
            for a, b in pairs:
                ca = xi_cols[a]
                rb = x[b]
                for i in rng:
                    cai = ca[i]
                    if cai:
                        mi = m[i]
                        for j in rng:
                            mi[j] = (mi[j] + cai * rb[j]) % q
            if any(m[i][j] for i in rng for j in range(i + 1)):
                continue
            if any(m[i][j] for i, j in edges0):
                continue
            count += 1
        assert count % sub_order == 0
        vals[lam] = Fraction(count, sub_order)
    return UnipClassFn(n, q, vals)


def permutation_character_oracle(gamma: IndiffGraph, q: int) -> ClassFnUT:
    """Character of UT_n acting on UT_n/UT_gamma by direct coset counting.

    Independent of the chi_bar formula; used to verify it.
    """
    n = gamma.n
    _guard_classfn(n, q)
    edges0 = [(i - 1, j - 1) for i, j in gamma.sorted_edges()]
    sub_order = ut_order(n, q) // q ** len(gamma.edges)
    vals = {}
    for g in indifference_graphs(n):
        u = superclass_rep(g, q).rows
        count = 0
        for x in ut_elements(n, q):
            xi = mat_inv(x, q)
            v = mat_mul(mat_mul(xi, u, q), x, q)
            if all(v[i][j] == 0 for i, j in edges0):
                count += 1
        assert count % sub_order == 0
        vals[g] = Fraction(count, sub_order)
    return ClassFnUT(n, q, vals)


def centralizer_order(g: MatrixFq) -> int:
    """|C_{GL_n}(g)| by exhaustive enumeration (n <= 3)."""
    require(g.n <= 3, "centralizer_order is guarded at n <= 3")
    q = g.q
    count = 0
    for x in gl_matrices(g.n, q):
        if mat_mul(x, g.rows, q) == mat_mul(g.rows, x, q):
            count += 1
    return count


# ---------------------------------------------------------------------------
# flags and Hessenberg point counts
# ---------------------------------------------------------------------------

MAX_FLAG_N = 4
MAX_FLAG_Q = 3


def flag_reps(n: int, q: int) -> Iterator[Rows]:
    """Canonical coset representatives of GL_n/B_n, one per complete flag.

    Column j has its lowest nonzero entry normalized to 1 in pivot row w(j);
    entries at earlier pivot rows are cleared.  Remaining entries are free.
    """
    _check_q(q)
    for w in permutations(range(n)):
        free = [(i, j) for j in range(n) for i in range(w[j]) if i not in w[:j]]
        base = [[0] * n for _ in range(n)]
        for j in range(n):
            base[w[j]][j] = 1
        for vals in product(range(q), repeat=len(free)):
            for (i, j), v in zip(free, vals):
                base[i][j] = v
            yield tuple(tuple(r) for r in base)


def canonical_flag(g: MatrixFq) -> MatrixFq:
    """The canonical representative of the coset g B_n."""
    q = g.q
    n = g.n
    inv_t = _inv_table(q)
    cols = [list(col) for col in zip(*g.rows)] if n else []
    pivots = []
    for j in range(n):
        col = cols[j]
        r = max(i for i in range(n) if col[i])
        f = inv_t[col[r]]
        if f != 1:
            cols[j] = col = [x * f % q for x in col]
        for j2 in range(j + 1, n):
            c = cols[j2][r]
            if c:
                cols[j2] = [(x - c * y) % q for x, y in zip(cols[j2], col)]
        pivots.append(r)
    return MatrixFq(q, tuple(zip(*[tuple(c) for c in cols])))


def is_nilpotent(a: MatrixFq) -> bool:
    p = a.rows
    for _ in range(a.n):
        p = mat_mul(p, a.rows, a.q)
    return all(x == 0 for row in p for x in row)


def hessenberg_count(gamma: IndiffGraph, a: MatrixFq) -> int:
    """Number of flags gB with g^{-1} a g strictly upper and zero at the edges of gamma."""
    n, q = gamma.n, a.q
    require(n <= MAX_FLAG_N and q <= MAX_FLAG_Q,
            f"hessenberg_count is guarded at n <= {MAX_FLAG_N}, q <= {MAX_FLAG_Q}")
    if a.n != n:
        raise ValueError("matrix size does not match the graph")
    if not is_nilpotent(a):
        raise ValueError("hessenberg_count expects a nilpotent matrix")
    edges0 = [(i - 1, j - 1) for i, j in gamma.sorted_edges()]
    count = 0
    for g in flag_reps(n, q):
        gi = mat_inv(g, q)
        m = mat_mul(mat_mul(gi, a.rows, q), g, q)
        if any(m[i][j] for i in range(n) for j in range(i + 1)):
            continue
        if any(m[i][j] for i, j in edges0):
            continue
        count += 1
    return count
