"""Arithmetic in GF(2^10) under the fixed primitive polynomial of the code family.

Field elements are 10-bit integers: bit i holds the coefficient of alpha^i in
the polynomial basis, where alpha is a root of

    m_alpha(x) = x^10 + x^9 + x^8 + x^6 + x^3 + x^2 + 1.

Multiplication, powers and discrete logs go through log/antilog tables built
once at import; everything here is pure and safe to use concurrently.
"""

M = 10
ORDER = (1 << M) - 1            # 1023 = multiplicative order of alpha
MOD_POLY = 0b11101001101        # m_alpha as a bitmask (degree-10 bit included)
ALPHA = 0b10

# Dual basis of {alpha^i}, pinned as powers of alpha.  dual_basis() recomputes
# the basis from scratch and refuses to return anything that disagrees.
_DUAL_BASIS_LOGS = (64, 63, 580, 138, 137, 136, 285, 284, 324, 65)


def _build_log_tables():
    alog = [0] * ORDER
    log = [-1] * (ORDER + 1)
    x = 1
    for k in range(ORDER):
        alog[k] = x
        log[x] = k
        x <<= 1
        if x >> M:
            x ^= MOD_POLY
    if x != 1 or log.count(-1) != 1:
        raise RuntimeError("alpha is not primitive for MOD_POLY")
    return alog, log


ALOG, LOG = _build_log_tables()


def fe_add(a, b):
    """Field addition: coefficient-wise XOR."""
    return a ^ b


def fe_mul(a, b):
    """Field multiplication reduced by m_alpha."""
    if a == 0 or b == 0:
        return 0
    return ALOG[(LOG[a] + LOG[b]) % ORDER]


def fe_pow(a, k):
    """a**k with the exponent taken mod 1023 for nonzero a."""
    if k == 0:
        return 1
    if a == 0:
        if k < 0:
            raise ValueError("zero base with negative exponent")
        return 0
    return ALOG[(LOG[a] * k) % ORDER]


def fe_sqrt(a):
    """Unique square root in characteristic 2, computed as a^(2^9)."""
    return fe_pow(a, 1 << (M - 1))


def _build_trace_table():
    tr = [0] * (ORDER + 1)
    for a in range(1, ORDER + 1):
        acc = a
        s = a
        for _ in range(M - 1):
            s = fe_mul(s, s)
            acc ^= s
        if acc not in (0, 1):
            raise RuntimeError("trace fell outside GF(2)")
        tr[a] = acc
    return tr


_TRACE = _build_trace_table()


def fe_trace(a):
    """Absolute trace tr(a) = sum of a^(2^i), a value in {0, 1}."""
    return _TRACE[a]


THETA = fe_add(ALOG[65], ALOG[64])      # tr(THETA) = 1; the family's theta


def _solve_dual_basis():
    # delta_j = sum_k c_k alpha^k with tr(alpha^i delta_j) = [i == j].
    # One GF(2) system, ten right-hand sides; rows packed as bitmasks.
    rows = []
    for i in range(M):
        mask = 0
        for k in range(M):
            mask |= fe_trace(ALOG[(i + k) % ORDER]) << k
        rows.append(mask | (1 << (M + i)))      # augment with identity
    # Gauss-Jordan over GF(2)
    for col in range(M):
        piv = next(r for r in range(col, M) if rows[r] >> col & 1)
        rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(M):
            if r != col and rows[r] >> col & 1:
                rows[r] ^= rows[col]
    # column j of the inverse gives the coefficients of delta_j
    delta = []
    for j in range(M):
        e = 0
        for k in range(M):
            e |= (rows[k] >> (M + j) & 1) << k
        delta.append(e)
    return tuple(delta)


_DUAL = None


def dual_basis():
    """The trace-dual basis (delta_0..delta_9) of {alpha^i}.

    Recomputed by solving the 10x10 trace system, then checked against the
    pinned power table; a mismatch means the field arithmetic is broken and
    raises rather than returning a wrong basis.
    """
    global _DUAL
    if _DUAL is None:
        delta = _solve_dual_basis()
        expect = tuple(ALOG[p] for p in _DUAL_BASIS_LOGS)
        if delta != expect:
            raise RuntimeError(
                "computed dual basis %r does not match the pinned table %r"
                % (delta, expect))
        _DUAL = delta
    return _DUAL


def dual_coords(a):
    """Dual coordinates of a: bit i of the result is h_i = tr(a * alpha^i)."""
    h = 0
    for i in range(M):
        h |= fe_trace(fe_mul(a, ALOG[i])) << i
    return h


def from_dual_coords(h):
    """Inverse of dual_coords: sum of delta_i over the set bits of h."""
    delta = dual_basis()
    a = 0
    for i in range(M):
        if h >> i & 1:
            a ^= delta[i]
    return a


def discrete_log(a):
    """k in [0, 1022] with alpha^k = a; table lookup."""
    if a == 0:
        raise ValueError("discrete log of zero")
    return LOG[a]
