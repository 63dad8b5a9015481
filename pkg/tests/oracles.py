"""Independent oracles: brute-force enumeration and a separate chord-tangent law."""

import itertools

from rankjump.algebra import GF, Polynomial


def affine_points(f, p):
    F = GF(p)
    out = []
    for x in range(p):
        fx = f(F(x))
        for y in range(p):
            if F(y) * F(y) == fx:
                out.append((F(x), F(y)))
    return out


def count_points_brute(f, p):
    return 1 + len(affine_points(f, p))


def enumerate_mumford(f, p, g):
    """All reduced (u, v): u monic, deg u <= g, deg v < deg u, u | v^2 - f, by exhaustive listing."""
    F = GF(p)
    out = [(Polynomial([1], F), Polynomial([], F))]
    for du in range(1, g + 1):
        for uc in itertools.product(range(p), repeat=du):
            u = Polynomial([F(c) for c in uc] + [F(1)], F)
            for vc in itertools.product(range(p), repeat=du):
                v = Polynomial([F(c) for c in vc], F)
                if ((v * v - f) % u).is_zero():
                    out.append((u, v))
    return out


def lagrange(points, F):
    """Interpolating polynomial through (x_i, y_i) with distinct x_i."""
    total = Polynomial([], F)
    X = Polynomial.x(F)
    for i, (xi, yi) in enumerate(points):
        term = Polynomial([yi], F)
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * (X - xj) * (1 / (xi - xj))
        total = total + term
    return total


def group_table(C):
    """All elements of J(F_p) (by exhaustive enumeration) and the Cantor addition table by index."""
    from rankjump.jacobian import MumfordDivisor, cantor_add

    p = C.field.p
    elems = [MumfordDivisor(u, v, C) for u, v in enumerate_mumford(C.f, p, C.genus)]
    index = {D: i for i, D in enumerate(elems)}
    table = [[index[cantor_add(C, a, b)] for b in elems] for a in elems]
    return elems, index, table


def check_group_axioms(C):
    """Exhaustive group-axiom check; returns a dict of booleans."""
    from rankjump.jacobian import identity, negate, scalar_mul

    elems, index, table = group_table(C)
    n = len(elems)
    e = index[identity(C)]
    res = {
        "identity": all(table[i][e] == i == table[e][i] for i in range(n)),
        "inverse": all(table[i][index[negate(elems[i])]] == e for i in range(n)),
        "commutative": all(table[i][j] == table[j][i] for i in range(n) for j in range(n)),
        "associative": all(table[table[i][j]][k] == table[i][table[j][k]]
                           for i in range(n) for j in range(n) for k in range(n)),
        "order_kills": all(scalar_mul(n, D).is_identity() for D in elems),
    }
    return n, res
