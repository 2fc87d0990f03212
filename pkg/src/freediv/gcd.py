"""Multivariate gcd / lcm / squarefree part through ideal intersection.

lcm(f, g) generates (f) ∩ (g) and gcd = f g / lcm.  In characteristic 0
the squarefree part of f is f / gcd(f, f_x1, ..., f_xn).
"""

from .groebner.ideal import Ideal, intersect
from .poly import Polynomial


def _primitive(p):
    """Scale to a monic lead coefficient."""
    return p.monic() if p else p


def lcm(f, g):
    if not f or not g:
        return f.ring.zero()
    if f.is_constant():
        return _primitive(g)
    if g.is_constant():
        return _primitive(f)
    ring = f.ring
    K = intersect(Ideal(ring, [f]), Ideal(ring, [g]))
    gb = K.gb()
    if len(gb) != 1:
        raise ArithmeticError("intersection of principal ideals is not principal")
    return gb[0]


def gcd(f, g):
    ring = f.ring
    if not f:
        return _primitive(g)
    if not g:
        return _primitive(f)
    if f.is_constant() or g.is_constant():
        return ring.one()
    q, r = (f * g).divmod(lcm(f, g))
    if r:
        raise ArithmeticError("lcm does not divide the product")
    return _primitive(q)


def gcd_many(polys):
    acc = None
    for p in polys:
        if not p:
            continue
        acc = _primitive(p) if acc is None else gcd(acc, p)
        if acc.is_constant():
            break
    return acc


def squarefree_part(f):
    """f divided by gcd(f, all partials); same lead-coefficient scale as f."""
    if not f or f.is_constant():
        return f
    g = gcd_many([f] + [d for d in f.gradient() if d])
    if g.is_constant():
        return f
    q, r = f.divmod(g)
    if r:
        raise ArithmeticError("gcd does not divide f")
    return q


def is_squarefree(f):
    return squarefree_part(f).degree() == f.degree()
