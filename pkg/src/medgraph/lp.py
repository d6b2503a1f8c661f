"""Exact-rational LP recognition of graphs whose medians are connected in G^p.

A pair u,v admits a weight function violating the chord condition iff the
homogeneous strict system D^uv pi < 0, pi >= 0 is solvable; by scaling this
is the closed system D^uv pi <= -1.  Feasibility is decided by a phase-1
simplex over fractions with Bland's anti-cycling rule, returning either a
witness profile or a Farkas certificate; both are re-verified exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import EmptyInterior, InteriorTooLarge, WrongDistance
from .graph import DistMatrix, Graph
from .medians import Profile, median_value
from .metric import J_set, Jcirc_set, M_set, interior_interval


@dataclass(frozen=True)
class RationalMatrix:
    """Integer matrix D^uv with rows the interval interior and chosen columns."""

    entries: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...]      # w in I°(u,v)
    cols: tuple[int, ...]      # column vertex set
    u: int
    v: int


@dataclass(frozen=True)
class FeasibilityResult:
    status: str                                 # "feasible" | "infeasible"
    witness: dict[int, Fraction] | None = None  # keyed by column vertex
    certificate: tuple[Fraction, ...] | None = None  # one entry per matrix row
    matrix: RationalMatrix | None = None

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def build_Duv(g: Graph, d: DistMatrix, u: int, v: int,
              columns=None) -> RationalMatrix:
    """D^uv entry (w,x) = d(v,w)d(u,x) + d(u,w)d(v,x) - d(u,v)d(w,x)."""
    if u == v or g.has_edge(u, v):
        raise ValueError(f"pair ({u},{v}) must be nonadjacent and distinct")
    rows = tuple(sorted(interior_interval(g, d, u, v)))
    if not rows:
        raise EmptyInterior(f"interval between {u} and {v} has empty interior")
    cols = tuple(sorted(columns)) if columns is not None else tuple(range(g.n))
    duv = d(u, v)
    entries = tuple(
        tuple(d(v, w) * d(u, x) + d(u, w) * d(v, x) - duv * d(w, x) for x in cols)
        for w in rows)
    return RationalMatrix(entries, rows, cols, u, v)


def _phase1_simplex(tableau, basis, n_cols, artificial):
    """Minimize the sum of artificial variables with Bland's rule.

    tableau: list of rows, each of length n_cols + 1 (rhs last), Fractions.
    basis: one column index per row.  artificial: set of column indices with
    unit cost.  Returns the optimal value; tableau/basis are updated in place.
    """
    m = len(tableau)
    while True:
        # reduced costs: c_j - sum over artificial basic rows of their entries
        art_rows = [i for i in range(m) if basis[i] in artificial]
        entering = -1
        for j in range(n_cols):
            rc = (1 if j in artificial else 0) - sum(tableau[i][j] for i in art_rows)
            if rc < 0:
                entering = j
                break
        if entering < 0:
            return sum(tableau[i][-1] for i in art_rows)
        leaving, best = -1, None
        for i in range(m):
            if tableau[i][entering] > 0:
                ratio = tableau[i][-1] / tableau[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving < 0:
            raise AssertionError("phase-1 objective unbounded")  # impossible: bounded by 0
        piv = tableau[leaving][entering]
        tableau[leaving] = [x / piv for x in tableau[leaving]]
        for i in range(m):
            if i != leaving and tableau[i][entering] != 0:
                c = tableau[i][entering]
                tableau[i] = [a - c * b for a, b in zip(tableau[i], tableau[leaving])]
        basis[leaving] = entering


def lp_feasible_strict(mat: RationalMatrix) -> FeasibilityResult:
    """Decide whether some pi >= 0 has M pi < 0 strictly in every row.

    Solved as feasibility of {M pi <= -1, pi >= 0}: every row is negated to
    (-M) pi - s + a = 1, and the sum of artificials a is minimized.
    """
    m, n = len(mat.entries), len(mat.cols)
    # columns: pi (0..n-1), slacks (n..n+m-1), artificials (n+m..n+2m-1)
    n_cols = n + 2 * m
    tableau = []
    for i in range(m):
        row = [Fraction(-mat.entries[i][j]) for j in range(n)]
        row += [Fraction(-1 if k == i else 0) for k in range(m)]
        row += [Fraction(1 if k == i else 0) for k in range(m)]
        row.append(Fraction(1))
        tableau.append(row)
    basis = [n + m + i for i in range(m)]
    artificial = set(range(n + m, n + 2 * m))
    z = _phase1_simplex(tableau, basis, n_cols, artificial)
    if z == 0:
        pi = {}
        for i, b in enumerate(basis):
            if b < n and tableau[i][-1] != 0:
                pi[mat.cols[b]] = tableau[i][-1]
        res = FeasibilityResult("feasible", witness=pi, matrix=mat)
    else:
        # dual value y_i = 1 - reduced cost of artificial column i
        art_rows = [i for i in range(len(tableau)) if basis[i] in artificial]
        y = tuple(1 - ((1 if (n + m + i) in artificial else 0)
                       - sum(tableau[r][n + m + i] for r in art_rows))
                  for i in range(m))
        res = FeasibilityResult("infeasible", certificate=y, matrix=mat)
    if not _check_result(res):
        raise AssertionError("simplex produced an unverifiable result")
    return res


def _check_result(r: FeasibilityResult) -> bool:
    mat = r.matrix
    if r.status == "feasible":
        if r.witness is None or not r.witness:
            return False
        col_index = {x: j for j, x in enumerate(mat.cols)}
        if any(w < 0 for w in r.witness.values()):
            return False
        if any(x not in col_index for x in r.witness):
            return False
        for row in mat.entries:
            if sum(row[col_index[x]] * w for x, w in r.witness.items()) > -1:
                return False
        return True
    y = r.certificate
    if y is None or any(yi < 0 for yi in y) or all(yi == 0 for yi in y):
        return False
    for j in range(len(mat.cols)):
        if sum(y[i] * mat.entries[i][j] for i in range(len(y))) < 0:
            return False
    return True


def verify_feasibility_result(g: Graph, d: DistMatrix, u: int, v: int,
                              r: FeasibilityResult) -> bool:
    """Re-check a witness or certificate against a freshly built matrix."""
    mat = build_Duv(g, d, u, v, columns=r.matrix.cols if r.matrix else None)
    return _check_result(FeasibilityResult(r.status, r.witness, r.certificate, mat))


def pair_satisfies_WC_for_all_profiles(g: Graph, d: DistMatrix, u: int, v: int,
                                       restrict_j: bool = False) -> bool:
    """True iff no nonnegative profile violates WC at the pair (u,v)."""
    try:
        cols = J_set(g, d, u, v) if restrict_j else None
        mat = build_Duv(g, d, u, v, columns=cols)
    except EmptyInterior:
        return False  # WC is existential over the interior; no interior, no hope
    return not lp_feasible_strict(mat).feasible


def _pairs_in_band(g: Graph, d: DistMatrix, p: int):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if p + 1 <= d(u, v) <= 2 * p:
                yield u, v


def has_Gp_connected_medians(g: Graph, d: DistMatrix, p: int,
                             restrict_j: bool = False) -> bool:
    if p < 1:
        raise ValueError("p must be >= 1")
    return all(pair_satisfies_WC_for_all_profiles(g, d, u, v, restrict_j)
               for u, v in _pairs_in_band(g, d, p))


@dataclass(frozen=True)
class PairVerdict:
    u: int
    v: int
    dist: int
    ok: bool
    result: FeasibilityResult | None = None


@dataclass(frozen=True)
class PValueReport:
    p: int
    failing_verdicts: tuple[PairVerdict, ...] = ()   # failing pairs at p-1
    witness_pair: tuple[int, int] | None = None
    witness_profile: Profile | None = None           # feasible pi at p-1
    disconnecting_profile: Profile | None = None     # integer profile, Med disconnected in G^{p-1}


def witness_to_profile(witness: dict[int, Fraction]) -> Profile:
    """Scale a rational LP witness to an integer profile."""
    denom = lcm(*(w.denominator for w in witness.values()))
    return Profile({x: w * denom for x, w in witness.items()})


def disconnecting_profile(g: Graph, d: DistMatrix, u: int, v: int,
                          pi: Profile) -> Profile:
    """Integer profile pi+ with median set exactly {u, v}.

    Input: integer pi whose median function has every interior vertex of
    I(u,v) strictly above the chord between u and v.  The boost
    mu = k*F(v) + 1 (k = d(u,v), F(v) >= F(u)) makes u and v the unique
    minima while the relative order elsewhere is preserved.
    """
    if not pi.is_integer():
        pi = witness_to_profile(dict(pi.weights))
    fu, fv = median_value(g, d, pi, u), median_value(g, d, pi, v)
    if fv < fu:
        u, v = v, u
        fu, fv = fv, fu
    k = d(u, v)
    eps = fv - fu
    mu = k * fv + 1
    boosted = {x: k * w for x, w in pi.weights.items()}
    boosted[u] = boosted.get(u, Fraction(0)) + mu
    boosted[v] = boosted.get(v, Fraction(0)) + mu + eps
    return Profile(boosted)


def compute_p(g: Graph, d: DistMatrix, restrict_j: bool = False) -> PValueReport:
    """Smallest p such that every median set is connected in G^p.

    Ascending scan; the last failing level supplies the report's witness
    pair and profiles.  Terminates by p = diameter, where the pair band
    p+1 <= d(u,v) <= 2p is empty.
    """
    prev_failures: list[PairVerdict] = []
    p = 1
    while True:
        failures = []
        for u, v in _pairs_in_band(g, d, p):
            try:
                cols = J_set(g, d, u, v) if restrict_j else None
                mat = build_Duv(g, d, u, v, columns=cols)
            except EmptyInterior:
                failures.append(PairVerdict(u, v, d(u, v), False))
                continue
            res = lp_feasible_strict(mat)
            if res.feasible:
                failures.append(PairVerdict(u, v, d(u, v), False, res))
        if not failures:
            break
        prev_failures = failures
        p += 1
    if p == 1 or not prev_failures:
        return PValueReport(p=p)
    first = next((f for f in prev_failures if f.result is not None), None)
    if first is None:
        return PValueReport(p=p, failing_verdicts=tuple(prev_failures))
    wit = Profile(dict(first.result.witness))
    return PValueReport(
        p=p,
        failing_verdicts=tuple(prev_failures),
        witness_pair=(first.u, first.v),
        witness_profile=wit,
        disconnecting_profile=disconnecting_profile(g, d, first.u, first.v,
                                                    witness_to_profile(first.result.witness)),
    )


def lp_feasible(n: int, a_ub=(), b_ub=(), a_eq=(), b_eq=()) -> dict[int, Fraction] | None:
    """Feasibility of {A_ub x <= b_ub, A_eq x = b_eq, x >= 0}; x or None."""
    rows = []
    m_ub = len(a_ub)
    for i, (row, b) in enumerate(itertools.chain(zip(a_ub, b_ub), zip(a_eq, b_eq))):
        r = [Fraction(c) for c in row]
        if i < m_ub:
            r += [Fraction(1 if k == i else 0) for k in range(m_ub)]
        else:
            r += [Fraction(0)] * m_ub
        r.append(Fraction(b))
        rows.append(r)
    m = len(rows)
    for r in rows:                      # make every rhs nonnegative
        if r[-1] < 0:
            for j in range(len(r)):
                r[j] = -r[j]
    base = n + m_ub
    for i, r in enumerate(rows):        # artificial basis
        rhs = r.pop()
        r.extend(Fraction(1 if k == i else 0) for k in range(m))
        r.append(rhs)
    basis = [base + i for i in range(m)]
    artificial = set(range(base, base + m))
    z = _phase1_simplex(rows, basis, base + m, artificial)
    if z != 0:
        return None
    x = {j: Fraction(0) for j in range(n)}
    for i, b in enumerate(basis):
        if b < n:
            x[b] = rows[i][-1]
    return x


def alpha_beta_certificate(g: Graph, d: DistMatrix, u: int, v: int,
                           cap: int = 8, assignment_cap: int = 20000):
    """Certificate (S, eta, companions) for a distance-2 pair, or None.

    Searches nonempty S inside the interval interior.  Each s in S needs a
    companion t in S with d(s,x)+d(t,x) <= d(u,x)+d(v,x) for all x in the
    equidistant part M(u,v), with eta(s)=eta(t) forced when d(s,t)=2; eta
    must give every x in J°(u,v) at least half the total weight among its
    neighbours in S.  Weights are found by an exact LP normalized to total 1.
    """
    if d(u, v) != 2:
        raise WrongDistance(f"pair ({u},{v}) is at distance {d(u, v)}, need 2")
    interior = sorted(interior_interval(g, d, u, v))
    if len(interior) > cap:
        raise InteriorTooLarge(
            f"interval interior has {len(interior)} vertices (cap {cap})")
    mids = sorted(M_set(g, d, u, v))
    jcirc = sorted(Jcirc_set(g, d, u, v))
    compat = {
        (s, t): all(d(s, x) + d(t, x) <= d(u, x) + d(v, x) for x in mids)
        for s in interior for t in interior}

    for size in range(1, len(interior) + 1):
        for S in itertools.combinations(interior, size):
            options = {s: [t for t in S if compat[(s, t)]] for s in S}
            if any(not opts for opts in options.values()):
                continue
            # only companions at distance 2 impose eta equalities; a vertex
            # with a closer valid companion can take it with no constraint
            free, tied = {}, []
            for s in S:
                near = [t for t in options[s] if d(s, t) != 2]
                if near:
                    free[s] = near[0]
                else:
                    tied.append(s)
            choice_lists = [options[s] for s in tied]
            n_assign = 1
            for lst in choice_lists:
                n_assign *= len(lst)
            if n_assign > assignment_cap:
                raise InteriorTooLarge(
                    f"{n_assign} companion assignments exceed cap {assignment_cap}")
            for picks in itertools.product(*choice_lists):
                comp = dict(free)
                comp.update(zip(tied, picks))
                eta = _solve_eta(g, d, S, comp, jcirc)
                if eta is not None:
                    return set(S), eta, comp
    return None


def _solve_eta(g: Graph, d: DistMatrix, S, comp, jcirc):
    idx = {s: j for j, s in enumerate(S)}
    n = len(S)
    a_eq = [[1] * n]
    b_eq = [1]
    seen = set()
    for s, t in comp.items():
        if d(s, t) == 2 and frozenset((s, t)) not in seen:
            seen.add(frozenset((s, t)))
            row = [0] * n
            row[idx[s]], row[idx[t]] = 1, -1
            a_eq.append(row)
            b_eq.append(0)
    a_ub, b_ub = [], []
    for x in jcirc:
        row = [Fraction(-1) if s in g.adj_sets[x] else Fraction(0) for s in S]
        a_ub.append(row)
        b_ub.append(Fraction(-1, 2))
    x = lp_feasible(n, a_ub, b_ub, a_eq, b_eq)
    if x is None:
        return None
    return {s: x[idx[s]] for s in S}
