"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as {monomial key: mpq}; keys come from Ring.encode, so
products only add integers and the leading term is simply max(keys).
"""

from fractions import Fraction
from numbers import Rational as _Rat

from gmpy2 import mpq, mpz

from .ring import Ring

ZERO = mpq(0)
ONE = mpq(1)


def Q(x):
    """Coerce int / Fraction / mpq / 'a/b' string to mpq."""
    if isinstance(x, type(ZERO)):
        return x
    if isinstance(x, (int, type(mpz(0)))):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x)
    if isinstance(x, _Rat):
        return mpq(int(x.numerator), int(x.denominator))
    raise TypeError("not an exact rational: %r" % (x,))


def is_scalar(x):
    return isinstance(x, (int, Fraction, type(ZERO), type(mpz(0))))


def fmt_q(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


class Polynomial:
    __slots__ = ("ring", "_t", "_h")

    def __init__(self, ring, terms):
        # terms: {key: nonzero mpq}; ownership passes to the polynomial
        self.ring = ring
        self._t = terms
        self._h = None

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_dict(cls, ring, d):
        """From {exponent tuple: coefficient}."""
        t = {}
        enc = ring.encode
        for e, c in d.items():
            if len(e) != ring.n:
                raise ValueError("exponent vector length %d != arity %d" % (len(e), ring.n))
            c = Q(c)
            if c:
                k = enc(e)
                v = t.get(k, ZERO) + c
                if v:
                    t[k] = v
                else:
                    t.pop(k, None)
        return cls(ring, t)

    @classmethod
    def constant(cls, ring, c):
        c = Q(c)
        return cls(ring, {0: c} if c else {})

    @classmethod
    def variable(cls, ring, v):
        i = ring.var_index(v)
        e = [0] * ring.n
        e[i] = 1
        return cls(ring, {ring.encode(e): ONE})

    @classmethod
    def monomial(cls, ring, exps, c=1):
        c = Q(c)
        return cls(ring, {ring.encode(exps): c} if c else {})

    # -- basic queries ---------------------------------------------------
    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def __len__(self):
        return len(self._t)

    def terms(self):
        """[(exps, coeff)] in descending monomial order."""
        dec = self.ring.decode
        t = self._t
        return [(dec(k), t[k]) for k in sorted(t, reverse=True)]

    def items(self):
        """(key, coeff) pairs, descending."""
        t = self._t
        return [(k, t[k]) for k in sorted(t, reverse=True)]

    def to_dict(self):
        dec = self.ring.decode
        return {dec(k): c for k, c in self._t.items()}

    def coefficient(self, exps):
        return self._t.get(self.ring.encode(exps), ZERO)

    def lead_key(self):
        return max(self._t)

    def lead_exps(self):
        return self.ring.decode(max(self._t))

    def lead_coeff(self):
        return self._t[max(self._t)] if self._t else ZERO

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._t.get(0, ZERO)

    def degrees(self):
        wd = self.ring.wdeg
        dec = self.ring.decode
        return {wd(dec(k)) for k in self._t}

    def degree(self):
        if not self._t:
            return -1
        return max(self.degrees())

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def variables(self):
        used = set()
        for e in self.to_dict():
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def monic(self):
        if not self._t:
            return self
        c = self.lead_coeff()
        if c == 1:
            return self
        inv = 1 / c
        return Polynomial(self.ring, {k: v * inv for k, v in self._t.items()})

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch: %r vs %r" % (self.ring, other.ring))
            return other
        if is_scalar(other):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = dict(self._t)
        for k, c in o._t.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v = v + c
                if v:
                    t[k] = v
                else:
                    del t[k]
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def scale(self, c):
        c = Q(c)
        if not c:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {k: v * c for k, v in self._t.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._t, o._t
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = get(k)
                if v is None:
                    t[k] = ca * cb
                else:
                    t[k] = v + ca * cb
        return Polynomial(self.ring, {k: v for k, v in t.items() if v})

    __rmul__ = __mul__

    def __pow__(self, m):
        if not isinstance(m, int) or m < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            c = Q(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / c)
        q, r = self.divmod(other)
        if r:
            raise ValueError("division is not exact")
        return q

    def divmod(self, g):
        """Division by one polynomial: (q, r) with self = q*g + r."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        ring = self.ring
        guard = ring.guard()
        from .ring import divides
        gl = g.lead_key()
        ge = ring.decode(gl)
        gp = ring.pack(ge)
        gc = g._t[gl]
        gitems = [(k, c) for k, c in g._t.items() if k != gl]
        f = dict(self._t)
        q, r = {}, {}
        while f:
            lk = max(f)
            le = ring.decode(lk)
            if divides(gp, ring.pack(le), guard):
                c = f.pop(lk) / gc
                d = lk - gl
                q[d] = c
                for k, a in gitems:
                    kk = k + d
                    v = f.get(kk, ZERO) - c * a
                    if v:
                        f[kk] = v
                    else:
                        f.pop(kk, None)
            else:
                r[lk] = f.pop(lk)
        return Polynomial(ring, q), Polynomial(ring, r)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._t == other._t
        if is_scalar(other):
            c = Q(other)
            return self._t == ({0: c} if c else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.ring, frozenset(self._t.items())))
        return self._h

    # -- calculus and maps -----------------------------------------------
    def diff(self, v):
        ring = self.ring
        i = ring.var_index(v)
        t = {}
        enc = ring.encode
        for e, c in self.to_dict().items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[enc(e2)] = c * e[i]
        return Polynomial(ring, t)

    def gradient(self):
        return [self.diff(i) for i in range(self.ring.n)]

    def subs(self, assignment, target=None):
        """Ring map: variable -> Polynomial (or scalar).  Unassigned variables map
        to the variable of the same name in the target ring."""
        src = self.ring
        target = target or src
        imgs = []
        for i, nm in enumerate(src.names):
            if nm in assignment:
                val = assignment[nm]
            elif i in assignment:
                val = assignment[i]
            elif nm in target.index:
                val = Polynomial.variable(target, nm)
            else:
                raise KeyError("no image for variable %r" % nm)
            if is_scalar(val):
                val = Polynomial.constant(target, val)
            if val.ring != target:
                raise ValueError("image of %s lives in a different ring" % nm)
            imgs.append(val)
        for k in assignment:
            if isinstance(k, str) and k not in src.index:
                raise KeyError("unknown variable %r" % (k,))
        powers = [dict() for _ in imgs]

        def pw(i, e):
            p = powers[i].get(e)
            if p is None:
                p = imgs[i] ** e
                powers[i][e] = p
            return p

        acc = {}
        for e, c in self.to_dict().items():
            term = Polynomial.constant(target, c)
            for i, x in enumerate(e):
                if x:
                    term = term * pw(i, x)
                    if not term:
                        break
            for k, v in term._t.items():
                w = acc.get(k, ZERO) + v
                if w:
                    acc[k] = w
                else:
                    acc.pop(k, None)
        return Polynomial(target, acc)

    def evaluate(self, point):
        """Value at a point given as a sequence of rationals."""
        pt = [Q(p) for p in point]
        s = ZERO
        for e, c in self.to_dict().items():
            v = c
            for x, p in zip(e, pt):
                if x:
                    v *= p ** x
            s += v
        return s

    def to_ring(self, ring):
        """Same polynomial viewed in a ring containing all its variables."""
        if ring == self.ring:
            return self
        src = self.ring
        pos = []
        for i, nm in enumerate(src.names):
            pos.append(ring.index.get(nm))
        t = {}
        for e, c in self.to_dict().items():
            e2 = [0] * ring.n
            for i, x in enumerate(e):
                if x:
                    if pos[i] is None:
                        raise ValueError("variable %s missing in target ring" % src.names[i])
                    e2[pos[i]] = x
            t[ring.encode(e2)] = c
        return Polynomial(ring, t)

    # -- printing --------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        names = self.ring.names
        out = []
        for e, c in self.terms():
            mono = "*".join(names[i] if x == 1 else "%s^%d" % (names[i], x)
                            for i, x in enumerate(e) if x)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                s = fmt_q(a)
            elif a == 1:
                s = mono
            else:
                s = fmt_q(a) + "*" + mono
            if not out:
                out.append("-" + s if neg else s)
            else:
                out.append((" - " if neg else " + ") + s)
        return "".join(out)

    def __repr__(self):
        return "Polynomial(%s)" % self


def poly_sum(ring, polys):
    acc = {}
    for p in polys:
        for k, v in p._t.items():
            w = acc.get(k, ZERO) + v
            if w:
                acc[k] = w
            else:
                acc.pop(k, None)
    return Polynomial(ring, acc)


def euler_check(f):
    if not f.is_homogeneous():
        raise ValueError("euler_check needs a homogeneous polynomial")
    if not f:
        return True
    ring = f.ring
    d = f.degree()
    s = poly_sum(ring, [Polynomial.variable(ring, i) * f.diff(i) * ring.weights[i]
                        for i in range(ring.n)])
    return s == f.scale(d)


def make_ring(names, **kw):
    return Ring(names, **kw)
