"""Exact integer and rational linear algebra.

Everything here works on plain Python ints and fractions.Fraction; no
floating point is used anywhere.  Matrices are lists of lists, row-major.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_fraction(a):
    return [[Fraction(x) for x in row] for row in a]


def mat_int(a):
    """Convert a matrix of integral Fractions back to ints; raises if not integral."""
    out = []
    for row in a:
        r = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError("matrix entry %s is not an integer" % (x,))
            r.append(f.numerator)
        out.append(r)
    return out


def det_bareiss(m):
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def fraction_inverse(m):
    """Inverse of a nonsingular matrix, as Fractions (Gauss-Jordan)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def rank_rational(m):
    """Rank of a matrix with int/Fraction entries."""
    if not m:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        a[rank] = [x / pv for x in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def hnf_rows(m):
    """Row-style Hermite normal form of an integer matrix.

    Returns the reduced nonzero rows (a canonical basis of the row space).
    """
    a = [row[:] for row in m if any(row)]
    if not a:
        return []
    cols = len(a[0])
    done = []
    col = 0
    while a and col < cols:
        # move a row with minimal nonzero |pivot| in this column to front
        candidates = [i for i, r in enumerate(a) if r[col] != 0]
        if not candidates:
            col += 1
            continue
        while True:
            candidates.sort(key=lambda i: abs(a[i][col]))
            i0 = candidates[0]
            piv = a[i0][col]
            reduced = True
            for i in candidates[1:]:
                q = a[i][col] // piv
                a[i] = [x - q * y for x, y in zip(a[i], a[i0])]
                if a[i][col] != 0:
                    reduced = False
            candidates = [i for i in candidates if a[i][col] != 0]
            if reduced or len(candidates) == 1:
                break
        if piv < 0:
            a[i0] = [-x for x in a[i0]]
            piv = -piv
        # reduce earlier pivot rows above this one
        for row in done:
            q = row[col] // piv
            if q:
                for j in range(cols):
                    row[j] -= q * a[i0][j]
        done.append(a.pop(i0))
        a = [r for r in a if any(r)]
        col += 1
    return done


def smith_normal_form(m):
    """Smith normal form with transforms.

    Returns (d, u, v) with u*m*v = diag(d) (as a full matrix), u and v
    unimodular, and d the invariant factors in divisibility order
    (zeros last for rank-deficient input).
    """
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for r in a:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            again = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        again = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        again = True
            if not again:
                break
        # enforce divisibility of the remaining block by a[t][t]
        d = a[t][t]
        stain = False
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % d:
                    add_row(i, t, -1)  # fold row i into row t, then restart pivot
                    stain = True
                    break
            if stain:
                break
        if stain:
            continue
        if d < 0:
            negate_row(t)
        t += 1
    diag = [a[i][i] for i in range(min(rows, cols))]
    return diag, u, v


def kernel_int(m):
    """Basis of the integer (left) kernel {x : x*m = 0} of an integer matrix.

    The returned rows form a basis of a saturated sublattice of Z^rows.
    """
    rows = len(m)
    if rows == 0:
        return []
    d, u, _v = smith_normal_form(m)
    rank = sum(1 for x in d if x != 0)
    # rows of u beyond the rank map to zero: u*m*v = diag => those rows of u*m vanish
    return [u[i][:] for i in range(rank, rows)]


def saturation_with_quotient(sub_rows, n):
    """Saturate a sublattice of Z^n given by generator rows.

    Returns (closure_rows, invariant_factors) where closure_rows is a basis of
    (Q-span of sub) intersected with Z^n and invariant_factors are the
    nontrivial elementary divisors of closure/sub.
    """
    if not sub_rows:
        return [], []
    d, _u, v = smith_normal_form(sub_rows)
    rank = sum(1 for x in d if x != 0)
    # u*S*v = D, so S = u^-1 * D * v^-1: the Q-row-space of S is spanned by the
    # first `rank` rows of v^-1, and S itself by d_i times those rows.
    vinv = mat_int(fraction_inverse(v))
    closure = [vinv[i][:] for i in range(rank)]
    factors = [x for x in d[:rank] if abs(x) > 1]
    return closure, sorted(abs(x) for x in factors)


def ldl_decomposition(gram):
    """Rational LDL^T decomposition of a symmetric positive definite matrix.

    Returns (l, d) with l unit lower triangular (Fractions) and d the list of
    positive diagonal Fractions.
    """
    n = len(gram)
    l = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(gram[j][j])
        for k in range(j):
            s -= l[j][k] * l[j][k] * d[k]
        if s <= 0:
            raise ValueError("matrix is not positive definite")
        d[j] = s
        for i in range(j + 1, n):
            t = Fraction(gram[i][j])
            for k in range(j):
                t -= l[i][k] * l[j][k] * d[k]
            l[i][j] = t / d[j]
    return l, d


def short_vectors(gram, bound):
    """All integer vectors v != 0 with v^T gram v <= bound, positive definite gram.

    Exact Fincke-Pohst enumeration on the rational LDL decomposition.  The
    result is closed under negation and sorted lexicographically, so the
    order is deterministic.
    """
    n = len(gram)
    l, d = ldl_decomposition(gram)
    bound = Fraction(bound)
    found = []
    coords = [0] * n
    # Q(x) = sum_i d[i] * (x_i + sum_{j>i} l[j][i] x_j)^2 ; recurse from i=n-1 down
    def recurse(i, remaining):
        if i < 0:
            if any(coords):
                found.append(tuple(coords))
            return
        # offset c_i = sum_{j>i} l[j][i] * x_j
        c = Fraction(0)
        for j in range(i + 1, n):
            if coords[j]:
                c += l[j][i] * coords[j]
        # d[i]*(x+c)^2 <= remaining
        lim = remaining / d[i]
        # integer x with (x+c)^2 <= lim
        x = -c
        # floor/ceil of -c +- sqrt(lim): enumerate by scanning from the centre
        lo = _floor_sqrt_shift(-c, lim, -1)
        hi = _floor_sqrt_shift(-c, lim, +1)
        for val in range(lo, hi + 1):
            coords[i] = val
            rem2 = remaining - d[i] * (val + c) ** 2
            if rem2 >= 0:
                recurse(i - 1, rem2)
        coords[i] = 0

    recurse(n - 1, bound)
    found.sort()
    return [list(v) for v in found]


def _floor_sqrt_shift(center, radius_sq, direction):
    """Largest (direction=+1) or smallest (-1) integer x with (x-center)^2 <= radius_sq."""
    if radius_sq < 0:
        return 0 if direction > 0 else 1  # empty range
    # integer sqrt of a Fraction, rounded down
    num, den = radius_sq.numerator, radius_sq.denominator
    r = _isqrt(num * den)  # floor(sqrt(num/den) * den)
    approx = Fraction(r, den)
    if direction > 0:
        x = _floor_frac(center + approx)
        while (Fraction(x + 1) - center) ** 2 <= radius_sq:
            x += 1
        while (Fraction(x) - center) ** 2 > radius_sq:
            x -= 1
        return x
    x = _ceil_frac(center - approx)
    while (Fraction(x - 1) - center) ** 2 <= radius_sq:
        x -= 1
    while (Fraction(x) - center) ** 2 > radius_sq:
        x += 1
    return x


def _isqrt(n):
    import math
    return math.isqrt(n)


def _floor_frac(f):
    return f.numerator // f.denominator


def _ceil_frac(f):
    return -((-f.numerator) // f.denominator)
