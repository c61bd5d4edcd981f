"""Independent small-rank oracles used to cross-check the main implementation.

Both deliberately avoid the code paths they check: roots are enumerated by
Weyl-reflection closure instead of root strings, and representation dimensions
come from Freudenthal's multiplicity recursion instead of the Weyl product.
"""

from __future__ import annotations

from fractions import Fraction

from twoorbit.rootsys import RootSystem, Weight


def reflection_closure_positive_roots(rs: RootSystem) -> set[tuple[int, ...]]:
    """All positive roots as the Weyl orbit of the simple roots."""
    n = rs.rank
    a = rs.cartan
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    orbit = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                # s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i
                pairing = sum(a[i][j] * m[j] for j in range(n))
                img = tuple(c - (pairing if j == i else 0) for j, c in enumerate(m))
                if img not in orbit:
                    orbit.add(img)
                    nxt.append(img)
        frontier = nxt
    return {m for m in orbit if all(c >= 0 for c in m)}


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _weight_gram(rs: RootSystem) -> list[list[Fraction]]:
    """(omega_i, omega_j) from the inverse Cartan matrix and the symmetrizer."""
    n = rs.rank
    ainv = _invert([[Fraction(x) for x in row] for row in rs.cartan])
    return [[ainv[j][i] * rs.symmetrizer[j] for j in range(n)] for i in range(n)]


def freudenthal_dim(rs: RootSystem, lam: Weight) -> int:
    """dim of the highest-weight module, summing Freudenthal multiplicities."""
    n = rs.rank
    gram = _weight_gram(rs)
    d = rs.symmetrizer
    pos = [alpha.coeffs for alpha in rs.positive_roots]
    pos_w = [
        tuple(sum(rs.cartan[i][j] * m[j] for j in range(n)) for i in range(n)) for m in pos
    ]

    def norm2_shifted(mu):
        v = [c + 1 for c in mu]  # mu + rho
        return sum(v[i] * v[j] * gram[i][j] for i in range(n) for j in range(n))

    def weight_dot_root(mu, alpha_root):
        return sum(mu[j] * alpha_root[j] * d[j] for j in range(n))

    top = tuple(int(c) for c in lam.coeffs)
    top_norm = norm2_shifted(top)
    mult = {top: 1}
    level = [top]
    simple_w = [tuple(rs.cartan[i][j] for i in range(n)) for j in range(n)]
    while level:
        candidates = set()
        for mu in level:
            for j in range(n):
                candidates.add(tuple(c - s for c, s in zip(mu, simple_w[j])))
        nxt = []
        for mu in sorted(candidates):
            total = Fraction(0)
            for m_root, w_root in zip(pos, pos_w):
                k = 1
                while True:
                    up = tuple(c + k * w for c, w in zip(mu, w_root))
                    if up not in mult:
                        break
                    total += mult[up] * weight_dot_root(up, m_root)
                    k += 1
            if total == 0:
                continue
            denom = top_norm - norm2_shifted(mu)
            m_mu = 2 * total / denom
            assert m_mu.denominator == 1 and m_mu > 0
            mult[mu] = int(m_mu)
            nxt.append(mu)
        level = nxt
    return sum(mult.values())
