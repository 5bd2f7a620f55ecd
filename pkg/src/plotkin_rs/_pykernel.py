"""Pure-Python hot kernels: polynomial evaluation, interpolation and Gao decoding.

Polynomials are coefficient lists, lowest degree first. The compiled module
``_ckernel`` exposes the same class with the same semantics.
"""


def _deg(p):
    d = len(p) - 1
    while d >= 0 and p[d] == 0:
        d -= 1
    return d


class GFKernel:
    def __init__(self, exp, log, q):
        self.exp = list(exp)
        self.log = list(log)
        self.q = q
        self.order = q - 1

    def __reduce__(self):
        return (GFKernel, (self.exp, self.log, self.q))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[self.order - self.log[a]]

    def axpy(self, u, c, v):
        """Coordinatewise u + c*v."""
        if c == 0:
            return list(u)
        exp, log = self.exp, self.log
        lc = log[c]
        return [ui ^ exp[log[vi] + lc] if vi else ui for ui, vi in zip(u, v)]

    def poly_eval(self, coeffs, points):
        exp, log = self.exp, self.log
        coeffs = list(coeffs)
        d = _deg(coeffs)
        if d < 0:
            return [0] * len(points)
        top = coeffs[: d + 1][::-1]
        out = []
        for x in points:
            if x == 0:
                out.append(coeffs[0])
                continue
            lx = log[x]
            acc = 0
            for c in top:
                acc = (exp[log[acc] + lx] if acc else 0) ^ c
            out.append(acc)
        return out

    def _vanishing(self, xs):
        """Coefficients of prod (X - x_i), length len(xs) + 1."""
        exp, log = self.exp, self.log
        g = [1]
        for x in xs:
            # g <- g * (X + x)
            nxt = [0] + g
            if x:
                lx = log[x]
                for j, c in enumerate(g):
                    if c:
                        nxt[j] ^= exp[log[c] + lx]
            g = nxt
        return g

    def _interp(self, xs, ys):
        exp, log, order = self.exp, self.log, self.order
        n = len(xs)
        g0 = self._vanishing(xs)
        out = [0] * n
        for x, y in zip(xs, ys):
            if y == 0:
                continue
            # synthetic division g0 / (X + x): quotient has degree n - 1
            quot = [0] * n
            carry = g0[n]
            quot[n - 1] = carry
            lx = log[x] if x else -1
            for j in range(n - 1, 0, -1):
                if carry and lx >= 0:
                    carry = g0[j] ^ exp[log[carry] + lx]
                else:
                    carry = g0[j]
                quot[j - 1] = carry
            # denominator = quot(x) = prod_{j != i} (x - x_j)
            den = 0
            for c in reversed(quot):
                den = (exp[log[den] + lx] if den and lx >= 0 else 0) ^ c
            scale = (log[y] - log[den]) % order
            for j, c in enumerate(quot):
                if c:
                    out[j] ^= exp[log[c] + scale]
        return out, g0

    def interpolate(self, xs, ys):
        """Unique polynomial of degree < len(xs) through the points (x_i, y_i)."""
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation points must be distinct")
        return self._interp(list(xs), list(ys))[0]

    def _divmod(self, a, b):
        """Polynomial division; b must be nonzero. Returns (quotient, remainder)."""
        exp, log, order = self.exp, self.log, self.order
        a = list(a)
        db = _deg(b)
        da = _deg(a)
        if da < db:
            return [], a
        lead_inv = order - log[b[db]]
        quot = [0] * (da - db + 1)
        blog = [log[c] if c else -1 for c in b[: db + 1]]
        for i in range(da, db - 1, -1):
            c = a[i]
            if c == 0:
                continue
            f = (log[c] + lead_inv) % order
            quot[i - db] = exp[f]
            off = i - db
            for j in range(db + 1):
                if blog[j] >= 0:
                    a[off + j] ^= exp[blog[j] + f]
        return quot, a[:db] if db > 0 else []

    def _mul_poly(self, a, b):
        exp, log = self.exp, self.log
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            lx = log[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= exp[lx + log[y]]
        return out

    def gao_decode(self, xs, ys, k):
        """Bounded-distance decode of ys on points xs in the RS code of dimension k.

        Returns the k message coefficients, or None when no codeword lies within
        floor((len(xs) - k) / 2) of ys.
        """
        n = len(xs)
        if k > n or k < 1:
            raise ValueError("need 1 <= k <= number of points")
        g1, g0 = self._interp(list(xs), list(ys))
        bound = n + k  # stop once 2*deg(r) < n + k
        r_prev, r = g0, g1
        v_prev, v = [], [1]
        while True:
            dr = _deg(r)
            if 2 * dr < bound:
                break
            qt, rem = self._divmod(r_prev, r)
            qv = self._mul_poly(qt, v)
            if len(qv) < len(v_prev):
                qv, v_prev = v_prev, qv
            nv = list(qv)
            for i, c in enumerate(v_prev):
                nv[i] ^= c
            r_prev, r = r, rem
            v_prev, v = v, nv
        f, rem = self._divmod(r, v)
        if _deg(rem) >= 0 or _deg(f) >= k:
            return None
        f = (f + [0] * k)[:k]
        # confirm the distance bound; guards against degenerate Euclid exits
        dist = sum(1 for a, b in zip(self.poly_eval(f, xs), ys) if a != b)
        if 2 * dist > n - k:
            return None
        return f
