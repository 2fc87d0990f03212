"""Graded polynomial ring descriptors and packed monomial keys.

A monomial is encoded as one Python integer (its *key*) built from
bit fields, most significant first.  Every field is a non-negative linear
form in the exponents, so key(a*b) == key(a) + key(b) and comparing keys
compares monomials in the ring's order.  Field 1 is always zero for
monomials; module orders use it to rank components (see groebner.kernel).
"""

import re

FIELD_BITS = 20
FIELD_MASK = (1 << FIELD_BITS) - 1
_GUARD_BIT = 1 << (FIELD_BITS - 1)

ORDERS = ("grevlex", "lex", "block")

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


class Ring:
    """k[x_1..x_n] with positive integer weights and a monomial order.

    order is "grevlex", "lex" or "block"; for "block" the first `split`
    variables form an eliminated block (weighted grevlex inside each block).
    """

    def __init__(self, names, weights=None, order="grevlex", split=None):
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",") if s.strip()]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError("bad variable name %r" % nm)
        n = len(names)
        if weights is None:
            weights = (1,) * n
        weights = tuple(int(w) for w in weights)
        if len(weights) != n or any(w < 1 for w in weights):
            raise ValueError("weights must be positive, one per variable")
        if order not in ORDERS:
            raise ValueError("unknown monomial order %r" % order)
        if order == "block":
            if split is None or not 0 < split < n:
                raise ValueError("block order needs 0 < split < n")
        else:
            split = None
        self.names = names
        self.n = n
        self.weights = weights
        self.order = order
        self.split = split
        self.index = {nm: i for i, nm in enumerate(names)}
        self._build_fields()
        self._dec = {}

    # -- layout --------------------------------------------------------
    def _build_fields(self):
        n, w = self.n, self.weights
        fields = []  # (kind, payload); kinds: deg(block vars), spare, rev(var, deg field), lex(var)
        if self.order == "lex":
            fields.append(("lex", 0))
            fields.append(("spare", None))
            for i in range(1, n):
                fields.append(("lex", i))
        else:
            blocks = [range(n)] if self.order == "grevlex" else [range(self.split), range(self.split, n)]
            for b, blk in enumerate(blocks):
                dpos = len(fields)
                fields.append(("deg", tuple(blk)))
                if b == 0:
                    fields.append(("spare", None))
                for i in reversed(blk):
                    fields.append(("rev", (i, dpos)))
        m = len(fields)
        self.nfields = m
        shifts = [FIELD_BITS * (m - 1 - k) for k in range(m)]
        self._shifts = shifts
        self.top_shift = shifts[0]
        self.spare_shift = shifts[1]
        contrib = [0] * n
        for (kind, pl), sh in zip(fields, shifts):
            if kind == "lex":
                contrib[pl] += 1 << sh
            elif kind == "deg":
                for i in pl:
                    contrib[i] += w[i] << sh
            elif kind == "rev":
                v, dpos = pl
                blk = fields[dpos][1]
                for i in blk:
                    c = w[i] - (1 if i == v else 0)
                    if c:
                        contrib[i] += c << sh
        self._fields = fields
        self._contrib = contrib
        self.graded = self.order == "grevlex"

    # -- identity ------------------------------------------------------
    def _sig(self):
        return (self.names, self.weights, self.order, self.split)

    def __eq__(self, other):
        return isinstance(other, Ring) and self._sig() == other._sig()

    def __hash__(self):
        return hash(self._sig())

    def __repr__(self):
        extra = ""
        if any(w != 1 for w in self.weights):
            extra += ", weights=%r" % (self.weights,)
        if self.order != "grevlex":
            extra += ", order=%r" % self.order
        if self.split is not None:
            extra += ", split=%d" % self.split
        return "Ring(%r%s)" % (",".join(self.names), extra)

    # -- encoding ------------------------------------------------------
    def encode(self, exps):
        k = 0
        for e, c in zip(exps, self._contrib):
            if e:
                if e < 0:
                    raise ValueError("negative exponent")
                k += e * c
        return k

    def decode(self, key):
        r = self._dec.get(key)
        if r is not None:
            return r
        vals = []
        for sh in self._shifts:
            vals.append((key >> sh) & FIELD_MASK)
        e = [0] * self.n
        for (kind, pl), v in zip(self._fields, vals):
            if kind == "lex":
                e[pl] = v
            elif kind == "rev":
                i, dpos = pl
                e[i] = vals[dpos] - v
        r = tuple(e)
        if self.encode(r) != key:
            raise OverflowError("monomial key overflow (degree too large for packed fields)")
        self._dec[key] = r
        return r

    def wdeg(self, exps):
        return sum(e * w for e, w in zip(exps, self.weights))

    @staticmethod
    def pack(exps):
        """Exponents packed for divisibility tests (see divides)."""
        p = 0
        for i, e in enumerate(exps):
            if e:
                p |= e << (i * FIELD_BITS)
        return p

    def guard(self):
        g = 0
        for i in range(self.n):
            g |= _GUARD_BIT << (i * FIELD_BITS)
        return g

    # -- derived rings -------------------------------------------------
    def with_order(self, order, split=None):
        return Ring(self.names, self.weights, order, split)

    def with_weights(self, weights):
        return Ring(self.names, weights, self.order, self.split)

    def extend(self, names, weights=None, order=None, split=None):
        """Ring with extra variables appended after the existing ones."""
        names = tuple(names)
        if weights is None:
            weights = (1,) * len(names)
        return Ring(self.names + names, self.weights + tuple(weights),
                    order or ("grevlex" if self.order == "block" else self.order), split)

    def subring(self, names):
        names = tuple(names)
        return Ring(names, tuple(self.weights[self.index[v]] for v in names))

    def standard(self):
        """Same variables, all weights 1, grevlex."""
        return Ring(self.names)

    def var_index(self, v):
        if isinstance(v, int):
            if not 0 <= v < self.n:
                raise IndexError("variable index %d out of range" % v)
            return v
        try:
            return self.index[v]
        except KeyError:
            raise KeyError("unknown variable %r" % (v,)) from None

    def gen(self, v):
        from .poly import Polynomial
        return Polynomial.variable(self, v)

    def gens(self):
        return [self.gen(i) for i in range(self.n)]

    def one(self):
        from .poly import Polynomial
        return Polynomial.constant(self, 1)

    def zero(self):
        from .poly import Polynomial
        return Polynomial(self, {})

    def __call__(self, text):
        from .parser import parse_expression
        return parse_expression(text, self)


def divides(pa, pb, guard):
    """True iff the packed monomial pa divides pb."""
    return ((pb | guard) - pa) & guard == guard
