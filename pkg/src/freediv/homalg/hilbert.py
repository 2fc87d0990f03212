"""Hilbert series of graded modules over a standard graded ring."""

from collections import defaultdict
from math import comb


class HilbertSeries:
    """numerator(t) / (1 - t)^n; numerator may have negative exponents
    (modules with generators in negative degree)."""

    def __init__(self, numerator, n):
        self.numerator = {k: v for k, v in numerator.items() if v}
        self.denominator_exponent = n

    def __eq__(self, other):
        return (isinstance(other, HilbertSeries) and self.numerator == other.numerator
                and self.denominator_exponent == other.denominator_exponent)

    def __repr__(self):
        return "HilbertSeries(%s / (1-t)^%d)" % (self.numerator_string(), self.denominator_exponent)

    def numerator_string(self):
        if not self.numerator:
            return "0"
        parts = []
        for k in sorted(self.numerator):
            c = self.numerator[k]
            parts.append("%+d*t^%d" % (c, k))
        return " ".join(parts)

    def shift(self, a):
        """Series of M(a): coefficient of t^j becomes that of t^(j+a)."""
        return HilbertSeries({k - a: v for k, v in self.numerator.items()}, self.denominator_exponent)

    def coefficients(self, lo, hi):
        """Graded dimensions dim M_j for lo <= j <= hi."""
        n = self.denominator_exponent
        out = []
        for j in range(lo, hi + 1):
            s = 0
            for k, c in self.numerator.items():
                m = j - k
                if m >= 0:
                    s += c * (comb(m + n - 1, n - 1) if n > 0 else (1 if m == 0 else 0))
            out.append(s)
        return out

    def reduced(self):
        """(numerator with all (1-t) factors cancelled, dimension)."""
        num = dict(self.numerator)
        d = self.denominator_exponent
        while d > 0 and num and sum(num.values()) == 0:
            # divide by (1 - t)
            lo, hi = min(num), max(num)
            q = {}
            acc = 0
            for k in range(lo, hi + 1):
                acc += num.get(k, 0)
                q[k] = acc
            q = {k: v for k, v in q.items() if v}
            num = q
            d -= 1
        return num, d

    def dimension(self):
        num, d = self.reduced()
        if not num:
            return -1
        return d


def monomial_numerator(monos, n):
    """Numerator N(t) with HS(R/(monos)) = N(t)/(1-t)^n, standard grading."""
    gens = _minimalize([tuple(m) for m in monos])
    return _num(gens, n)


def _minimalize(ms):
    ms = sorted(set(ms), key=sum)
    out = []
    for m in ms:
        if not any(all(a <= b for a, b in zip(o, m)) for o in out):
            out.append(m)
    return out


def _mul(p, q):
    r = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            r[a + b] += x * y
    return {k: v for k, v in r.items() if v}


def _num(gens, n):
    if not gens:
        return {0: 1}
    if any(sum(g) == 0 for g in gens):
        return {}
    # pairwise coprime generators: product formula
    supp = [frozenset(i for i, x in enumerate(g) if x) for g in gens]
    disjoint = True
    seen = set()
    for s in supp:
        if seen & s:
            disjoint = False
            break
        seen |= s
    if disjoint:
        p = {0: 1}
        for g in gens:
            p = _mul(p, {0: 1, sum(g): -1})
        return p
    # pivot on a variable of high occurrence
    cnt = defaultdict(int)
    for g in gens:
        for i, x in enumerate(g):
            if x:
                cnt[i] += 1
    v = max(cnt, key=lambda i: (cnt[i], -i))
    exps = sorted(g[v] for g in gens if g[v])
    e = exps[len(exps) // 2]
    piv = tuple(e if i == v else 0 for i in range(len(gens[0])))
    if piv in gens:
        e = exps[0]
        piv = tuple(e if i == v else 0 for i in range(len(gens[0])))
    # N(I) = N(I + (p)) + t^deg(p) N(I : p)
    plus = _minimalize(gens + [piv])
    quo = _minimalize([tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in gens])
    a = _num(plus, n)
    b = _num(quo, n)
    r = dict(a)
    for k, c in b.items():
        r[k + e] = r.get(k + e, 0) + c
    return {k: c for k, c in r.items() if c}
