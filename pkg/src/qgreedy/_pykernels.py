"""Pure-Python sparse kernels.

A polynomial is a dict ``{exponent: coefficient}`` with no zero values.  A
torus element is a dict ``{(e1, e2): polynomial}`` keyed by normalized
monomials.  These functions never mutate their inputs.
"""


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


def poly_sub(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


def poly_mul(a, b):
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for e2, c2 in b.items():
        for e1, c1 in a.items():
            e = e1 + e2
            out[e] = get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def poly_scale(a, coeff, shift):
    """Return ``coeff * v**shift * a``."""
    if not coeff:
        return {}
    return {e + shift: c * coeff for e, c in a.items()}


def torus_mul(A, B):
    """Product of torus elements; X^(a,b) X^(c,d) = v^(bc-ad) X^(a+c,b+d)."""
    out = {}
    for (e1, e2), f in A.items():
        for (f1, f2), g in B.items():
            key = (e1 + f1, e2 + f2)
            s = e2 * f1 - e1 * f2
            acc = out.get(key)
            if acc is None:
                acc = out[key] = {}
            get = acc.get
            for x, cx in f.items():
                xs = x + s
                for y, cy in g.items():
                    z = xs + y
                    acc[z] = get(z, 0) + cx * cy
    result = {}
    for key, acc in out.items():
        poly = {e: c for e, c in acc.items() if c}
        if poly:
            result[key] = poly
    return result
