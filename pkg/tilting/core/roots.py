"""Weights, alcoves and linkage.

Type A1 is computed outright: dominant weights are integers >= 0, the
affine reflections act by s_r.lam = 2lr - lam - 2 with walls at lr - 1.
Type A2 is fixture-backed: its dot-action is implemented in rho-shifted
coordinates (x, y) = (a1 + 1, a2 + 1) and checked against worked values.
"""

from collections import deque

from .const import A2_LEVEL
from .scalars import LaurentPoly


def in_fundamental_alcove(lam, l):
    return 0 < lam + 1 < l


def in_closure(lam, l):
    """lam in the closure of the fundamental alcove, i.e. T(lam) = Delta(lam)."""
    return 0 <= lam + 1 <= l


def is_singular(lam, l):
    return (lam + 1) % l == 0


def is_regular(lam, l):
    return not is_singular(lam, l)


def reflect(lam, r, l):
    """Dot-action of the affine reflection with wall at lr - 1."""
    return 2 * l * r - lam - 2


def alcove_index(lam, l):
    """Index k of the alcove kl - 1 < lam < (k+1)l - 1, None on a wall."""
    if is_singular(lam, l):
        return None
    return (lam + 1) // l


def walls_between(lam, mu, l):
    a, b = alcove_index(lam, l), alcove_index(mu, l)
    if a is None or b is None:
        return None
    return abs(a - b)


def nearest_walls(lam, l):
    if is_singular(lam, l):
        r = (lam + 1) // l
        return r - 1, r + 1
    r = (lam + 1) // l
    return r, r + 1


def linkage_class(lam, l, bound):
    """Dominant weights <= bound in the dot-orbit of lam, ascending."""
    if lam < 0 or bound < lam:
        raise ValueError(f'linkage needs 0 <= lam <= bound, got lam={lam}, bound={bound}')
    seen, todo = {lam}, deque([lam])
    while todo:
        mu = todo.popleft()
        for r in nearest_walls(mu, l):
            nu = reflect(mu, r, l)
            if 0 <= nu <= bound and nu not in seen:
                seen.add(nu)
                todo.append(nu)
    return sorted(seen)


def is_linked(lam, mu, l):
    hi = max(lam, mu)
    return min(lam, mu) in linkage_class(hi, l, hi) if lam != mu else True


def upper_alcove(lam, l):
    """Alcove index of lam, or of the alcove just above lam's wall."""
    return (lam + 1) // l


def _alcove_word(k, x, l):
    # w_k.x for the alcove word w_k = ... s_2 s_1 of length k
    return k * l + x if k % 2 == 0 else (k + 1) * l - x - 2


def orbit_base(lam, l):
    """The weight in the closure of the fundamental alcove (-1 <= x <= l - 1)
    linked to lam."""
    k = upper_alcove(lam, l)
    return lam - k * l if k % 2 == 0 else (k + 1) * l - lam - 2


def translate(lam, l, base=0):
    """Translation of lam to the orbit of base, a weight of the fundamental
    alcove: w.orbit_base(lam) goes to w.base, with w maximal when lam sits on
    a wall, so the image lies in the alcove above that wall."""
    if not in_fundamental_alcove(base, l):
        raise ValueError(f'translation target {base} is not in the fundamental alcove for l={l}')
    return _alcove_word(upper_alcove(lam, l), base, l)


def dominates(lam, mu):
    """mu <= lam in the A1 order (lam - mu in 2N)."""
    return lam >= mu and (lam - mu) % 2 == 0


# type A2, coordinates in the fundamental weight basis

A2_ROOTS = ((2, -1), (-1, 2), (1, 1))


def a2_shift(lam):
    return lam[0] + 1, lam[1] + 1


def a2_unshift(p):
    return p[0] - 1, p[1] - 1


def a2_pairings(lam):
    """<lam + rho, alpha^vee> for alpha_1, alpha_2, alpha_1 + alpha_2."""
    x, y = a2_shift(lam)
    return x, y, x + y


def a2_is_dominant(lam):
    return lam[0] >= 0 and lam[1] >= 0


def a2_in_fundamental_alcove(lam, l=A2_LEVEL):
    x, y, s = a2_pairings(lam)
    return x > 0 and y > 0 and s < l


def a2_in_closure(lam, l=A2_LEVEL):
    x, y, s = a2_pairings(lam)
    return x >= 0 and y >= 0 and s <= l


def a2_affine_wall(l=A2_LEVEL):
    return sorted(a2_unshift((x, l - x)) for x in range(l + 1))


def a2_nonaffine_wall(l=A2_LEVEL):
    out = []
    for x in range(l + 1):
        for y in range(l + 1 - x):
            if (x == 0 or y == 0) and x + y < l:
                out.append(a2_unshift((x, y)))
    return sorted(out)


def a2_dominates(lam, mu):
    """mu <= lam iff lam - mu is a nonnegative integral combination of simple roots."""
    p, q = lam[0] - mu[0], lam[1] - mu[1]
    a, b = 2 * p + q, p + 2 * q
    return a >= 0 and b >= 0 and a % 3 == 0 and b % 3 == 0


def a2_reflect(p, root, k, l):
    """Affine reflection of a rho-shifted point p in the hyperplane <p, root^vee> = kl."""
    pair = {A2_ROOTS[0]: p[0], A2_ROOTS[1]: p[1], A2_ROOTS[2]: p[0] + p[1]}[root]
    c = pair - k * l
    return p[0] - c * root[0], p[1] - c * root[1]


def a2_linkage(lam, l=A2_LEVEL):
    """Dominant mu <= lam in the dot-orbit of lam."""
    box = 2 * (sum(lam) + 2) + 2 * l
    start = a2_shift(lam)
    seen, todo = {start}, deque([start])
    while todo:
        p = todo.popleft()
        vals = (p[0], p[1], p[0] + p[1])
        for root, val in zip(A2_ROOTS, vals):
            for k in (val // l - 1, val // l, val // l + 1):
                q = a2_reflect(p, root, k, l)
                if max(abs(q[0]), abs(q[1])) <= box and q not in seen:
                    seen.add(q)
                    todo.append(q)
    out = [a2_unshift(p) for p in seen]
    return sorted(mu for mu in out if a2_is_dominant(mu) and a2_dominates(lam, mu))


def a2_separating_walls(lam, mu, l=A2_LEVEL):
    return sum(abs(a // l - b // l) for a, b in zip(a2_pairings(lam), a2_pairings(mu)))


# supports of n_{mu lam} for the two worked weights at l = 3
A2_KL_SUPPORT = {
    (1, 1): ((1, 1), (0, 0)),
    (3, 3): ((3, 3), (1, 4), (4, 1), (0, 3), (3, 0), (1, 1)),
}


def a2_kl_fixture(lam, l=A2_LEVEL):
    """{mu: n_{mu lam}(v)} as v^(number of hyperplanes separating the alcoves)."""
    return {mu: LaurentPoly.monomial(a2_separating_walls(lam, mu, l)) for mu in A2_KL_SUPPORT[lam]}


def a2_fixture_checks(l=A2_LEVEL):
    """List of (name, expected, actual) for the hard-coded A2 facts at l = 3."""
    v = LaurentPoly.monomial
    dominant_box = [(a, b) for a in range(l + 1) for b in range(l + 1)]
    return [
        ('a2 A0 dominant', [(0, 0)], [lam for lam in dominant_box if a2_in_fundamental_alcove(lam, l)]),
        ('a2 nonaffine wall', sorted([(-1, -1), (-1, 0), (0, -1), (1, -1), (-1, 1)]), a2_nonaffine_wall(l)),
        ('a2 affine wall', sorted([(1, 0), (0, 1), (2, -1), (-1, 2)]), a2_affine_wall(l)),
        ('a2 linkage (1,1)', [(0, 0), (1, 1)], a2_linkage((1, 1), l)),
        ('a2 linkage (3,3)', sorted([(0, 0), (1, 1), (3, 0), (0, 3), (4, 1), (1, 4), (3, 3)]),
         a2_linkage((3, 3), l)),
        ('a2 kl (1,1)', {(1, 1): v(0), (0, 0): v(1)}, a2_kl_fixture((1, 1), l)),
        ('a2 kl (3,3)', {(3, 3): v(0), (1, 4): v(1), (4, 1): v(1), (0, 3): v(2), (3, 0): v(2), (1, 1): v(3)},
         a2_kl_fixture((3, 3), l)),
    ]
