"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        exact root systems, the weyl dimension formula, freudenthal multiplicities and
        decomposition of symmetric / exterior powers, this is the oracle every closed form is checked against.

        all weights are integer tuples in the basis of fundamental weights, bourbaki labeling.
        the invariant form is given by the symmetric gram matrix of the simple roots, long roots have
        square length 2, no ambient euclidean coordinates are needed.

        type strings: 'A5', 'D6', 'E7', 'G2', semisimple sums '3A1' or 'A1+C3'
"""

import re
from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

import sympy

from . import config
from .exactnum import rat
from .utils import log, parse_weight, format_weight


class RootSystemError(ValueError):
    pass


class NotDominantError(ValueError):
    pass


class BoundExceededError(ValueError):
    pass


class DecompositionError(ArithmeticError):
    pass


# region simple root gram matrices
def _chain(n, bond=-1):
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(2)
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = Fraction(bond)
    return g


def _link(g, i, j, value):
    g[i][j] = g[j][i] = Fraction(value)


def simple_root_gram(letter, n):
    """gram matrix (alpha_i, alpha_j) of the simple roots, bourbaki labeling, long roots of square length 2"""
    valid = {'A': n >= 1, 'B': n >= 2, 'C': n >= 1, 'D': n >= 4, 'E': n in (6, 7, 8), 'F': n == 4, 'G': n == 2}
    if not valid.get(letter, False):
        raise RootSystemError(f'invalid root system: {letter}{n}')

    if letter == 'A':
        return _chain(n)

    if letter == 'B':
        g = _chain(n)
        g[n - 1][n - 1] = Fraction(1)
        return g

    if letter == 'C':
        if n == 1:
            return [[Fraction(2)]]
        g = _chain(n, Fraction(-1, 2))
        for i in range(n - 1):
            g[i][i] = Fraction(1)
        _link(g, n - 2, n - 1, -1)
        return g

    if letter == 'D':
        g = _chain(n - 1)
        for row in g:
            row.append(Fraction(0))
        g.append([Fraction(0)] * n)
        g[n - 1][n - 1] = Fraction(2)
        _link(g, n - 3, n - 1, -1)
        return g

    if letter == 'E':
        # chain 1-3-4-5-...-n, node 2 attached to node 4
        g = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = Fraction(2)
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            _link(g, i, j, -1)
        _link(g, 1, 3, -1)
        return g

    if letter == 'F':
        g = [[Fraction(0)] * 4 for _ in range(4)]
        for i, value in enumerate((2, 2, 1, 1)):
            g[i][i] = Fraction(value)
        _link(g, 0, 1, -1)
        _link(g, 1, 2, -1)
        _link(g, 2, 3, Fraction(-1, 2))
        return g

    # G2, alpha_1 short
    return [[Fraction(2, 3), Fraction(-1)], [Fraction(-1), Fraction(2)]]


def parse_type(tag):
    """'3A1' -> [('A', 1)] * 3, 'A1+C3' -> [('A', 1), ('C', 3)]"""
    components = []
    for part in str(tag).replace(' ', '').split('+'):
        match = re.fullmatch(r'(\d*)([A-Ga-g])_?(\d+)', part)
        if not match:
            raise RootSystemError(f'invalid root system type: {tag!r}')
        times, letter, n = match.groups()
        components.extend([(letter.upper(), int(n))] * int(times or 1))
    return components


def _block_diagonal(blocks):
    n = sum(len(b) for b in blocks)
    g = [[Fraction(0)] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, value in enumerate(row):
                g[offset + i][offset + j] = value
        offset += len(b)
    return g
# endregion


class RootSystem:
    """root system of a semisimple lie algebra

    positive roots are kept in simple root coordinates (positive_roots) and in fundamental weight
    coordinates (positive_roots_w)
    """

    def __init__(self, components):
        self.components = list(components)
        if not self.components:
            raise RootSystemError('empty root system')

        self.name = '+'.join(f'{letter}{n}' for letter, n in self.components)
        self.gram = _block_diagonal([simple_root_gram(letter, n) for letter, n in self.components])
        self.rank = n = len(self.gram)

        # d_j = (alpha_j, alpha_j) / 2, so (omega_i, alpha_j) = delta_ij d_j
        self.d = [self.gram[j][j] / 2 for j in range(n)]

        # cartan integers c_ij = <alpha_j, alpha_i^v>, row j of simple_roots_w is alpha_j in the omega basis
        self.cartan = [[int(2 * self.gram[i][j] / self.gram[i][i]) for j in range(n)] for i in range(n)]
        self.simple_roots_w = [tuple(self.cartan[i][j] for i in range(n)) for j in range(n)]

        # gram of the fundamental weights, F = M^-1 D
        m = sympy.Matrix(n, n, lambda j, i: self.cartan[i][j])
        dm = sympy.diag(*[sympy.Rational(x.numerator, x.denominator) for x in self.d])
        f = m.inv() * dm
        self.weight_gram = [[rat(f[i, j]) for j in range(n)] for i in range(n)]

        self.positive_roots = self._positive_roots()
        self.positive_roots_w = [self.root_to_weight(r) for r in self.positive_roots]
        self.rho = (1,) * n

        self._mults_cache = {}

    def __repr__(self):
        return f'RootSystem({self.name})'

    def root_to_weight(self, root):
        """simple root coordinates -> fundamental weight coordinates"""
        return tuple(sum(c * self.simple_roots_w[j][i] for j, c in enumerate(root)) for i in range(self.rank))

    def _positive_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)

        while layer:
            new_layer = []
            for beta in layer:
                beta_w = self.root_to_weight(beta)
                for i in range(n):
                    # alpha_i string through beta: beta - p alpha_i ... beta + q alpha_i with p - q = <beta, alpha_i^v>
                    p = 0
                    while True:
                        lower = tuple(c - (p + 1) * (j == i) for j, c in enumerate(beta))
                        if lower not in roots:
                            break
                        p += 1
                    if beta == simple[i] or p - beta_w[i] < 1:
                        continue
                    higher = tuple(c + (j == i) for j, c in enumerate(beta))
                    if higher not in roots:
                        roots.add(higher)
                        new_layer.append(higher)
            layer = new_layer

        return sorted(roots, key=lambda r: (sum(r), r))

    # inner products
    def inner(self, x, y):
        """(x, y) for weights given in the fundamental weight basis"""
        f = self.weight_gram
        return sum(x[i] * f[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j])

    def pair_root(self, lam, root):
        """(lam, alpha) for lam in the omega basis and alpha in simple root coordinates"""
        return sum(c * lam[j] * self.d[j] for j, c in enumerate(root))

    def check_weight(self, lam):
        lam = tuple(parse_weight(lam))
        if len(lam) != self.rank:
            raise ValueError(f'{self.name} weights have {self.rank} coordinates, got {format_weight(lam)}')
        return lam

    def check_dominant(self, lam):
        lam = self.check_weight(lam)
        if any(x < 0 for x in lam):
            raise NotDominantError(f'{format_weight(lam)} is not dominant')
        return lam

    def reflect(self, mu, i):
        """s_i(mu) = mu - <mu, alpha_i^v> alpha_i"""
        k = mu[i]
        return tuple(m - k * a for m, a in zip(mu, self.simple_roots_w[i]))

    def dominant_conjugate(self, mu):
        mu = tuple(mu)
        while True:
            for i, x in enumerate(mu):
                if x < 0:
                    mu = self.reflect(mu, i)
                    break
            else:
                return mu

    def height(self, root):
        return sum(root)


@lru_cache(maxsize=None)
def build_root_system(tag, rank=None):
    """RootSystem from a type string ('E7', '3A1', 'A1+C3') or from a letter and a rank"""
    components = [(str(tag).upper(), int(rank))] if rank is not None else parse_type(tag)
    return RootSystem(components)


def build_semisimple(components):
    """orthogonal direct sum, components is a list of (letter, rank)"""
    return build_root_system('+'.join(f'{letter}{n}' for letter, n in components))


def rho(rs):
    return rs.rho


def highest_root(rs):
    """highest root in simple root coordinates, the positive root of maximal height"""
    return max(rs.positive_roots, key=lambda r: (sum(r), r))


def dual_coxeter(rs):
    """1 + (rho, theta^v), theta long so theta^v = theta"""
    theta = highest_root(rs)
    return int(1 + rs.pair_root(rs.rho, theta))


def adjoint_variety_dim(rs):
    """number of positive roots not orthogonal to the highest root, equals 2h^v - 3"""
    theta_w = rs.root_to_weight(highest_root(rs))
    return sum(1 for r in rs.positive_roots if rs.pair_root(theta_w, r) > 0)


def weyl_dim(rs, lam):
    """prod over positive roots of (lam + rho, alpha) / (rho, alpha)"""
    lam = rs.check_dominant(lam)
    lam_rho = tuple(x + 1 for x in lam)
    num, den = Fraction(1), Fraction(1)
    for root in rs.positive_roots:
        num *= rs.pair_root(lam_rho, root)
        den *= rs.pair_root(rs.rho, root)
    value = num / den
    if value.denominator != 1:
        raise ArithmeticError(f'weyl_dim() non integral result {value} for {format_weight(lam)}')
    return value.numerator


def cartan_power_dim(rs, parts, exponents):
    """weyl_dim(sum e_i lam_i)"""
    parts, exponents = list(parts), list(exponents)
    if len(parts) != len(exponents):
        raise ValueError('cartan_power_dim() parts and exponents lengths differ')
    lam = [0] * rs.rank
    for part, e in zip(parts, exponents):
        for i, x in enumerate(rs.check_weight(part)):
            lam[i] += e * x
    return weyl_dim(rs, tuple(lam))


def dominant_weights(rs, lam):
    """dominant weights of V_lam with their depth (height of lam - mu)"""
    lam = rs.check_dominant(lam)
    depth = {lam: 0}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for root, root_w in zip(rs.positive_roots, rs.positive_roots_w):
            nu = tuple(m - a for m, a in zip(mu, root_w))
            if nu in depth or any(x < 0 for x in nu):
                continue
            depth[nu] = depth[mu] + rs.height(root)
            queue.append(nu)
    return depth


def freudenthal_mults(rs, lam):
    """multiplicities of the dominant weights of V_lam

    Returns:
        (dict): dominant weight -> multiplicity
    """
    lam = rs.check_dominant(lam)
    if lam in rs._mults_cache:
        return dict(rs._mults_cache[lam])

    depth = dominant_weights(rs, lam)
    lam_rho = tuple(x + 1 for x in lam)
    top = rs.inner(lam_rho, lam_rho)

    mults = {}
    for mu in sorted(depth, key=lambda w: (depth[w], w)):
        if mu == lam:
            mults[mu] = 1
            continue

        total = Fraction(0)
        for alpha in rs.positive_roots_w:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                conj = rs.dominant_conjugate(nu)
                if conj not in depth:
                    break
                total += mults[conj] * rs.inner(nu, alpha)
                k += 1

        mu_rho = tuple(x + 1 for x in mu)
        value = 2 * total / (top - rs.inner(mu_rho, mu_rho))
        if value.denominator != 1:
            raise ArithmeticError(f'freudenthal_mults() non integral multiplicity {value} at {format_weight(mu)}')
        mults[mu] = value.numerator

    rs._mults_cache[lam] = dict(mults)
    return mults


def weyl_orbit(rs, mu):
    mu = rs.check_weight(mu)
    orbit = {mu}
    queue = deque([mu])
    while queue:
        nu = queue.popleft()
        for i in range(rs.rank):
            if nu[i] == 0:
                continue
            s = rs.reflect(nu, i)
            if s not in orbit:
                orbit.add(s)
                queue.append(s)
    return orbit


def weights(rs, lam):
    """all weights of V_lam with multiplicity"""
    result = Counter()
    for mu, m in freudenthal_mults(rs, lam).items():
        if m:
            for nu in weyl_orbit(rs, mu):
                result[nu] += m
    return result


# region modules
def parse_module(txt):
    """ModuleSpec from text 'w1;w2' or 'w1:mult;w2:mult', e.g. '0,1,0:1;1,0,0:2'"""
    spec = []
    for part in str(txt).replace(' ', '').split(';'):
        if not part:
            continue
        weight, _, mult = part.partition(':')
        mult = int(mult or 1)
        if mult <= 0:
            raise ValueError(f'multiplicity must be positive: {part!r}')
        spec.append((parse_weight(weight), mult))
    if not spec:
        raise ValueError(f'empty module: {txt!r}')
    return spec


def format_module(spec):
    return ';'.join(f'{format_weight(w)}:{m}' for w, m in spec)


def normalize_module(spec):
    """merge equal weights and sort by weight"""
    counter = Counter()
    for w, m in spec:
        counter[tuple(w)] += m
    return sorted((w, m) for w, m in counter.items() if m)


def module_dim(rs, spec):
    return sum(m * weyl_dim(rs, w) for w, m in spec)


def character(rs, spec):
    """full weight multiset of a (possibly reducible) module"""
    result = Counter()
    for w, m in spec:
        for nu, k in weights(rs, w).items():
            result[nu] += m * k
    return result


def decompose_character(rs, char):
    """split a character into irreducibles by repeated subtraction of the highest dominant weight

    Args:
        char (dict): dominant weight -> multiplicity, non dominant entries are ignored

    Raises:
        DecompositionError: when a residue multiplicity turns negative
    """
    residue = Counter({w: m for w, m in char.items() if m and all(x >= 0 for x in w)})

    def key(w):
        w_rho = tuple(x + 1 for x in w)
        return rs.inner(w_rho, w_rho), w

    result = []
    while residue:
        top = max(residue, key=key)
        count = residue[top]
        if count < 0:
            raise DecompositionError(f'negative residue {count} at {format_weight(top)}')
        result.append((top, count))
        for mu, m in freudenthal_mults(rs, top).items():
            residue[mu] -= count * m
            if residue[mu] < 0:
                raise DecompositionError(f'negative residue {residue[mu]} at {format_weight(mu)} '
                                         f'after removing {count} x V({format_weight(top)})')
            if residue[mu] == 0:
                del residue[mu]

    return normalize_module(result)


def power_decompose(rs, spec, d, kind='sym', max_dim=None, max_degree=None):
    """decompose S^d or Lambda^d of a module

    Args:
        rs (RootSystem): root system
        spec (list): ModuleSpec, list of (weight, multiplicity)
        d (int): degree
        kind (str): 'sym' or 'alt'
        max_dim (int): module dimension bound, default config.max_module_dim
        max_degree (int): degree bound, default config.max_degree

    Returns:
        (list): ModuleSpec sorted by weight
    """
    max_dim = max_dim or config.max_module_dim
    max_degree = max_degree or config.max_degree
    if kind not in ('sym', 'alt'):
        raise ValueError(f'power_decompose() kind must be sym or alt, got {kind!r}')
    if d < 1:
        raise ValueError(f'power_decompose() degree must be positive, got {d}')
    if d > max_degree:
        raise BoundExceededError(f'degree {d} exceeds the bound {max_degree}')

    dim = module_dim(rs, spec)
    if dim > max_dim:
        raise BoundExceededError(f'module dimension {dim} exceeds the bound {max_dim}')

    # full weight list, one entry per basis vector
    basis = [w for w, m in sorted(character(rs, spec).items()) for _ in range(m)]
    tuples = combinations_with_replacement(basis, d) if kind == 'sym' else combinations(range(len(basis)), d)

    char = Counter()
    for t in tuples:
        ws = t if kind == 'sym' else [basis[i] for i in t]
        mu = tuple(map(sum, zip(*ws)))
        if all(x >= 0 for x in mu):
            char[mu] += 1

    result = decompose_character(rs, char)

    expected = comb(dim + d - 1, d) if kind == 'sym' else comb(dim, d)
    total = module_dim(rs, result)
    if total != expected:
        raise DecompositionError(f'power_decompose() total dimension {total} != {expected}')

    log(f'power_decompose()> {kind}^{d} of {format_module(spec)} over {rs.name}:', format_module(result),
        log_level=3)
    return result
# endregion
