# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same interface and semantics as ``_pykernel``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy


cdef class GFKernel:
    cdef int* exp_
    cdef int* log_
    cdef readonly int q
    cdef readonly int order
    cdef object _exp_src
    cdef object _log_src

    def __cinit__(self, exp, log, int q):
        cdef int i
        self.q = q
        self.order = q - 1
        self.exp_ = <int*> malloc(2 * q * sizeof(int))
        self.log_ = <int*> malloc(q * sizeof(int))
        if self.exp_ == NULL or self.log_ == NULL:
            raise MemoryError()
        if len(exp) < 2 * (q - 1) or len(log) != q:
            raise ValueError("table sizes do not match the field size")
        for i in range(2 * (q - 1)):
            self.exp_[i] = exp[i]
        self.exp_[2 * (q - 1)] = 1
        for i in range(q):
            self.log_[i] = log[i]
        self._exp_src = list(exp)
        self._log_src = list(log)

    def __dealloc__(self):
        free(self.exp_)
        free(self.log_)

    def __reduce__(self):
        return (GFKernel, (self._exp_src, self._log_src, self.q))

    cdef inline int _mul(self, int a, int b) nogil:
        if a == 0 or b == 0:
            return 0
        return self.exp_[self.log_[a] + self.log_[b]]

    def mul(self, a, b):
        return self._mul(_sym(a, self.q), _sym(b, self.q))

    def inv(self, a):
        _sym(a, self.q)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp_[self.order - self.log_[a]]

    def axpy(self, u, int c, v):
        cdef Py_ssize_t i, n = len(u)
        cdef int lc, vi
        _sym(c, self.q)
        if c == 0:
            return list(u)
        if len(v) != n:
            raise ValueError("vectors differ in length")
        lc = self.log_[c]
        out = [0] * n
        for i in range(n):
            vi = _sym(v[i], self.q)
            if vi:
                out[i] = _sym(u[i], self.q) ^ self.exp_[self.log_[vi] + lc]
            else:
                out[i] = u[i]
        return out

    cdef int _eval(self, int* p, int dp, int x) nogil:
        cdef int acc = 0, j, lx
        if dp < 0:
            return 0
        if x == 0:
            return p[0]
        lx = self.log_[x]
        for j in range(dp, -1, -1):
            if acc:
                acc = self.exp_[self.log_[acc] + lx] ^ p[j]
            else:
                acc = p[j]
        return acc

    def poly_eval(self, coeffs, points):
        cdef int nc = len(coeffs), npts = len(points), i
        cdef int* p = _alloc(nc if nc > 0 else 1)
        try:
            for i in range(nc):
                p[i] = _sym(coeffs[i], self.q)
            d = _deg(p, nc)
            return [self._eval(p, d, _sym(points[i], self.q)) for i in range(npts)]
        finally:
            free(p)

    cdef void _vanishing(self, int* xs, int n, int* g) nogil:
        # g has room for n + 1 coefficients
        cdef int i, j, x, lx, t
        memset(g, 0, (n + 1) * sizeof(int))
        g[0] = 1
        for i in range(n):
            x = xs[i]
            lx = self.log_[x]
            # g <- g * (X + x), high to low so g[j - 1] is still the old value
            for j in range(i + 1, 0, -1):
                t = g[j - 1]
                if x and g[j]:
                    t = t ^ self.exp_[self.log_[g[j]] + lx]
                g[j] = t
            if x and g[0]:
                g[0] = self.exp_[self.log_[g[0]] + lx]
            else:
                g[0] = 0

    cdef void _interp(self, int* xs, int* ys, int n, int* out, int* g0, int* quot) nogil:
        # out: n coefficients; g0: n + 1; quot: n scratch
        cdef int i, j, x, y, lx, carry, den, scale, c
        self._vanishing(xs, n, g0)
        memset(out, 0, n * sizeof(int))
        for i in range(n):
            y = ys[i]
            if y == 0:
                continue
            x = xs[i]
            lx = self.log_[x] if x else -1
            carry = g0[n]
            quot[n - 1] = carry
            for j in range(n - 1, 0, -1):
                if carry and lx >= 0:
                    carry = g0[j] ^ self.exp_[self.log_[carry] + lx]
                else:
                    carry = g0[j]
                quot[j - 1] = carry
            den = self._eval(quot, n - 1, x)
            scale = (self.log_[y] - self.log_[den] + self.order) % self.order
            for j in range(n):
                c = quot[j]
                if c:
                    out[j] ^= self.exp_[self.log_[c] + scale]

    def interpolate(self, xs, ys):
        cdef int n = len(xs), i
        if len(set(xs)) != n:
            raise ValueError("interpolation points must be distinct")
        cdef int* buf = _alloc(5 * n + 1)
        try:
            for i in range(n):
                buf[i] = _sym(xs[i], self.q)
                buf[n + i] = _sym(ys[i], self.q)
            self._interp(buf, buf + n, n, buf + 2 * n, buf + 3 * n, buf + 4 * n + 1)
            return [buf[2 * n + i] for i in range(n)]
        finally:
            free(buf)

    cdef int _divmod(self, int* a, int da, int* b, int db, int* quot) nogil:
        # a is overwritten by the remainder; returns its degree. quot gets da - db + 1 slots.
        cdef int i, j, c, f, off, lead_inv
        if da < db:
            return da
        lead_inv = self.order - self.log_[b[db]]
        for i in range(da - db + 1):
            quot[i] = 0
        for i in range(da, db - 1, -1):
            c = a[i]
            if c == 0:
                continue
            f = (self.log_[c] + lead_inv) % self.order
            quot[i - db] = self.exp_[f]
            off = i - db
            for j in range(db + 1):
                if b[j]:
                    a[off + j] ^= self.exp_[self.log_[b[j]] + f]
        return _deg(a, db)

    def gao_decode(self, xs, ys, int k):
        cdef int n = len(xs), i, j, dr, dprev, dv, dvp, dq, dist, df, drem, tmp_d
        cdef int* buf
        cdef int *px, *py, *g0, *g1, *scratch, *rp, *r, *vp, *v, *qt, *nv, *sw
        if k > n or k < 1:
            raise ValueError("need 1 <= k <= number of points")
        buf = _alloc(12 * (n + 2))
        if buf == NULL:
            raise MemoryError()
        try:
            px = buf
            py = buf + (n + 2)
            g0 = buf + 2 * (n + 2)
            g1 = buf + 3 * (n + 2)
            scratch = buf + 4 * (n + 2)
            vp = buf + 5 * (n + 2)
            v = buf + 6 * (n + 2)
            qt = buf + 7 * (n + 2)
            nv = buf + 8 * (n + 2)
            for i in range(n):
                px[i] = _sym(xs[i], self.q)
                py[i] = _sym(ys[i], self.q)
            with nogil:
                self._interp(px, py, n, g1, g0, scratch)
                g1[n] = 0
                rp = g0
                r = g1
                dprev = n
                dr = _deg(r, n)
                dvp = -1
                dv = 0
                v[0] = 1
                while 2 * dr >= n + k:
                    # rp <- rp mod r, quotient in qt
                    drem = self._divmod(rp, dprev, r, dr, qt)
                    dq = dprev - dr
                    # nv <- vp + qt * v
                    tmp_d = dq + dv
                    if dvp > tmp_d:
                        tmp_d = dvp
                    memset(nv, 0, (tmp_d + 1) * sizeof(int))
                    for i in range(dvp + 1):
                        nv[i] = vp[i]
                    for i in range(dq + 1):
                        if qt[i]:
                            for j in range(dv + 1):
                                if v[j]:
                                    nv[i + j] ^= self.exp_[self.log_[qt[i]] + self.log_[v[j]]]
                    # rotate: (rp, r) <- (r, rem); (vp, v, nv) <- (v, nv, vp)
                    sw = rp
                    rp = r
                    r = sw
                    dprev = dr
                    dr = drem
                    sw = vp
                    vp = v
                    v = nv
                    nv = sw
                    dvp = dv
                    dv = _deg(v, tmp_d + 1)
                # f = r / v
                if dr < 0:
                    df = -1
                    drem = -1
                else:
                    drem = self._divmod(r, dr, v, dv, qt)
                    df = dr - dv
            if drem >= 0 or df >= k:
                return None
            f = [0] * k
            for i in range(df + 1):
                f[i] = qt[i]
            for i in range(df + 1, k):
                qt[i] = 0
            dist = 0
            with nogil:
                df = _deg(qt, k)
                for i in range(n):
                    if self._eval(qt, df, px[i]) != py[i]:
                        dist += 1
            if 2 * dist > n - k:
                return None
            return f
        finally:
            free(buf)


cdef int _sym(object v, int q) except -1:
    cdef long x = v
    if x < 0 or x >= q:
        raise ValueError(f"symbol {v} outside GF({q})")
    return <int> x


cdef int* _alloc(int n):
    cdef int* p = <int*> malloc(n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    memset(p, 0, n * sizeof(int))
    return p


cdef inline int _deg(int* p, int length) nogil:
    cdef int d = length - 1
    while d >= 0 and p[d] == 0:
        d -= 1
    return d
