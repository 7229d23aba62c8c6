"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        bookkeeping for intermediate lie algebras g = h + V + C, the magic chart extended by the sextonion
        row and column, Cartan powers, the odd symplectic and sl~ algebras, the dimension checks of the
        square decompositions and the row by row plethysm checks.

        chart names are stored exactly as printed, a name G.H_{2n} stands for the semidirect product
        of G with the heisenberg algebra of a 2n dimensional symplectic G-module.
"""

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from .dimform import admissible, dim_der, dim_g, dim_tri
from .rootsys import (build_root_system, character, decompose_character, format_module, highest_root,
                      module_dim, normalize_module, power_decompose, weyl_dim)
from .utils import format_rational, format_weight, log


class HypothesisError(ValueError):
    pass


# region chart data
CHART = {
    # row a: names for columns b = -2/3, 0, 1, 2, 4, 6, 8
    1: ['0', '0', 'A_1', 'A_2', 'C_3', 'C_3.H_{14}', 'F_4'],
    2: ['0', 'T_2', 'A_2', '2A_2', 'A_5', 'A_5.H_{20}', 'E_6'],
    4: ['A_1', '3A_1', 'C_3', 'A_5', 'D_6', 'D_6.H_{32}', 'E_7'],
    6: ['A_1.H_4', '(3A_1).H_8', 'C_3.H_{14}', 'A_5.H_{20}', 'D_6.H_{32}', 'D_6.H_{32}.H_{44}', 'E_7.H_{56}'],
    8: ['G_2', 'D_4', 'F_4', 'E_6', 'E_7', 'E_7.H_{56}', 'E_8'],
}

BARTON_SUDBERY_COLUMNS = ('Der', 'Der+Im', 'Tri')
BARTON_SUDBERY = {
    1: ['0', '0', '0'],
    2: ['0', 'T_1', 'T_2'],
    4: ['A_1', '2A_1', '3A_1'],
    6: ['A_1.H_4', '2A_1.H_6', '3A_1.H_8'],
    8: ['G_2', 'B_3', 'D_4'],
}

# name: (semisimple type, torus rank, V module over h, centre dimension)
DESCRIPTORS = {
    '0': (None, 0, [], 0),
    'T_2': (None, 2, [], 0),
    'A_1': ('A1', 0, [], 0),
    'A_2': ('A2', 0, [], 0),
    '2A_2': ('2A2', 0, [], 0),
    '3A_1': ('3A1', 0, [], 0),
    'C_3': ('C3', 0, [], 0),
    'A_5': ('A5', 0, [], 0),
    'D_4': ('D4', 0, [], 0),
    'D_6': ('D6', 0, [], 0),
    'F_4': ('F4', 0, [], 0),
    'G_2': ('G2', 0, [], 0),
    'E_6': ('E6', 0, [], 0),
    'E_7': ('E7', 0, [], 0),
    'E_8': ('E8', 0, [], 0),
    'A_1.H_4': ('A1', 0, [((3,), 1)], 1),
    '(3A_1).H_8': ('3A1', 0, [((1, 1, 1), 1)], 1),
    'C_3.H_{14}': ('C3', 0, [((0, 0, 1), 1)], 1),
    'A_5.H_{20}': ('A5', 0, [((0, 0, 1, 0, 0), 1)], 1),
    'D_6.H_{32}': ('D6', 0, [((0, 0, 0, 0, 0, 1), 1)], 1),
    'D_6.H_{32}.H_{44}': ('D6', 0, [((0, 0, 0, 0, 0, 1), 2), ((1, 0, 0, 0, 0, 0), 1)], 2),
    'E_7.H_{56}': ('E7', 0, [((0, 0, 0, 0, 0, 0, 1), 1)], 1),
}

# (hV)_Aad of the square decomposition, the complement of hV + V in h (x) V
AAD = {
    'C_3.H_{14}': [(1, 1, 0)],
    'A_5.H_{20}': [(1, 1, 0, 0, 0), (0, 0, 0, 1, 1)],
    'D_6.H_{32}': [(1, 0, 0, 0, 1, 0)],
    'E_7.H_{56}': [(0, 1, 0, 0, 0, 0, 0)],
}
# endregion


@dataclass
class GradedAlgDescriptor:
    """g = h + V + centre, h reductive (semisimple part h_type plus a torus)"""
    name: str
    h_type: str = None
    torus: int = 0
    v_module: list = field(default_factory=list)
    centre: int = 0
    a: Fraction = None
    b: Fraction = None

    @property
    def rs(self):
        return build_root_system(self.h_type) if self.h_type else None

    @property
    def is_simple(self):
        return self.h_type is not None and len(self.rs.components) == 1 and not self.torus

    @property
    def h_weight(self):
        """highest weight of the adjoint module of h, None unless h is simple"""
        if not self.is_simple:
            return None
        return self.rs.root_to_weight(highest_root(self.rs))

    @property
    def h_dim(self):
        rs = self.rs
        return (2 * len(rs.positive_roots) + rs.rank if rs else 0) + self.torus

    @property
    def v_dim(self):
        return module_dim(self.rs, self.v_module) if self.v_module else 0

    @property
    def total(self):
        return self.h_dim + self.v_dim + self.centre

    def heisenberg_dims(self):
        """the 2n of every H_{2n} in the name"""
        return [int(x) for x in re.findall(r'H_\{?(\d+)\}?', self.name)]

    def to_dict(self):
        return {'name': self.name, 'dim': self.total}


def get_descriptor(name, a=None, b=None):
    try:
        h_type, torus, v_module, centre = DESCRIPTORS[name]
    except KeyError:
        raise ValueError(f'unknown chart algebra: {name!r}')
    return GradedAlgDescriptor(name, h_type, torus, list(v_module), centre, a, b)


def chart_descriptor(row, col):
    """descriptor of the chart entry in row a = row and column b = col"""
    row, col = Fraction(row), Fraction(col)
    rows, cols = admissible('chart_rows'), admissible('chart_cols')
    if row not in rows or col not in cols:
        raise ValueError(f'no chart entry at a = {row}, b = {col}')
    return get_descriptor(CHART[int(row)][cols.index(col)], row, col)


def odd_symplectic_descriptor(n):
    """sp_{2n+1} = sp_2n + C^2n + C"""
    if n < 1:
        raise ValueError(f'odd_symplectic_descriptor() needs n >= 1, got {n}')
    v = (1,) + (0,) * (n - 1)
    return GradedAlgDescriptor(f'sp_{{{2 * n + 1}}}', f'C{n}', 0, [(v, 1)], 1)


@dataclass
class ChartEntry:
    name: str
    dim: int

    def to_dict(self):
        return {'name': self.name, 'dim': self.dim}


@dataclass
class MagicChart:
    rows: list
    cols: list
    grid: list
    bs_columns: tuple
    bs_grid: list

    def to_dict(self):
        return {
            'rows': [format_rational(a) for a in self.rows],
            'cols': [format_rational(b) for b in self.cols],
            'chart': [[e.to_dict() for e in row] for row in self.grid],
            'barton_sudbery': {
                'columns': list(self.bs_columns),
                'rows': [[e.to_dict() for e in row] for row in self.bs_grid],
            },
        }


def barton_sudbery_table():
    """rows a = 1, 2, 4, 6, 8 with Der, Der + Im and Tri, dimensions dim_der, dim_der + a - 1 and dim_tri"""
    rows = admissible('chart_rows')
    grid = []
    for a in rows:
        dims = [dim_der(a), dim_der(a) + a - 1, dim_tri(a)]
        grid.append([ChartEntry(name, int(d)) for name, d in zip(BARTON_SUDBERY[int(a)], dims)])
    return grid


def magic_chart():
    rows, cols = admissible('chart_rows'), admissible('chart_cols')
    grid = [[ChartEntry(chart_descriptor(a, b).name, chart_descriptor(a, b).total) for b in cols] for a in rows]
    return MagicChart(rows, cols, grid, BARTON_SUDBERY_COLUMNS, barton_sudbery_table())


def chart_dimension_mismatches():
    """chart entries whose descriptor dimension differs from dim_g(a, b)"""
    mismatches = []
    for a in admissible('chart_rows'):
        for b in admissible('chart_cols'):
            desc = chart_descriptor(a, b)
            if desc.total != dim_g(a, b):
                mismatches.append((desc.name, desc.total, dim_g(a, b)))
    return mismatches


# region cartan powers
def _add(*weights):
    return tuple(map(sum, zip(*weights)))


def _scale(k, weight):
    return tuple(k * x for x in weight)


def _check_hypothesis(desc):
    """h simple, V irreducible, disjoint supports of the highest weights"""
    if not desc.is_simple:
        raise HypothesisError(f'{desc.name}: h is not simple')
    if len(desc.v_module) != 1 or desc.v_module[0][1] != 1:
        raise HypothesisError(f'{desc.name}: V is not irreducible')
    lam_h, lam_v = desc.h_weight, desc.v_module[0][0]
    if any(x and y for x, y in zip(lam_h, lam_v)):
        raise HypothesisError(f'{desc.name}: highest weights {format_weight(lam_h)} and {format_weight(lam_v)} '
                              f'share a support, see odd_symplectic_gk()')
    return lam_h, lam_v


def cartan_power_modules(desc, k):
    """highest weights p lam_h + q lam_V, p + q <= k, of the k-th Cartan power"""
    lam_h, lam_v = _check_hypothesis(desc)
    return [_add(_scale(p, lam_h), _scale(q, lam_v)) for p in range(k + 1) for q in range(k + 1 - p)]


def intermediate_gk_dim(desc, k):
    """dimension of the k-th Cartan power of the adjoint module

    for an intermediate algebra g = h + V + C this is sum over p + q <= k of dim V_{p lam_h + q lam_V},
    for a semisimple algebra the sum over its simple ideals of dim V_{k theta_i}
    """
    if k < 0:
        raise ValueError(f'k must be nonnegative, got {k}')

    if desc.v_module:
        return sum(weyl_dim(desc.rs, w) for w in cartan_power_modules(desc, k))

    if k == 0:
        return 1
    if desc.torus:
        raise HypothesisError(f'{desc.name}: cartan powers of a torus are not defined')
    if desc.h_type is None:
        return 0

    total = 0
    for letter, n in desc.rs.components:
        rs = build_root_system(letter, n)
        theta = rs.root_to_weight(highest_root(rs))
        total += weyl_dim(rs, _scale(k, theta))
    return total


def odd_symplectic_gk(n, k):
    """dim sp_{2n+1}^(k) = dim S^2k(C^2n + C) = C(2n + 2k, 2k)"""
    if n < 1 or k < 0:
        raise ValueError(f'odd_symplectic_gk() needs n >= 1 and k >= 0, got n = {n}, k = {k}')
    return comb(2 * n + 2 * k, 2 * k)


def odd_symplectic_oracle(n, k):
    """sum over j <= 2k of dim S^j C^2n through the weyl dimension formula of C_n"""
    rs = build_root_system('C', n)
    return sum(weyl_dim(rs, (j,) + (0,) * (n - 1)) for j in range(2 * k + 1))


def sl_tilde_gk(n, k):
    """dim sl~_{n+1}^(k) = sum over a, b <= k of dim V_{a w1 + b w_{n-1}} of sl_n

    V_{k(w1 + w_n)} of sl_{n+1} restricted to gl_n, every (a, b) appears once
    """
    if n < 2 or k < 0:
        raise ValueError(f'sl_tilde_gk() needs n >= 2 and k >= 0, got n = {n}, k = {k}')
    rs = build_root_system('A', n - 1)
    total = 0
    for a, b in product(range(k + 1), repeat=2):
        weight = [0] * (n - 1)
        weight[0] += a
        weight[-1] += b
        total += weyl_dim(rs, tuple(weight))
    return total
# endregion


# region square and plethysm checks
def _record(check_id, lhs, rhs):
    return {'check_id': check_id, 'lhs': lhs, 'rhs': rhs, 'pass': lhs == rhs}


def tensor_decompose(rs, lam, mu):
    """decompose V_lam (x) V_mu through its character"""
    left, right = Counter(character(rs, [(lam, 1)])), Counter(character(rs, [(mu, 1)]))
    char = Counter()
    for w1, m1 in left.items():
        for w2, m2 in right.items():
            w = _add(w1, w2)
            if all(x >= 0 for x in w):
                char[w] += m1 * m2
    return decompose_character(rs, char)


def vogel_square_check(desc):
    """dimension identities of the square decompositions of g = h + V + C

    Returns:
        (list): records {check_id, lhs, rhs, pass}
    """
    if desc.name not in AAD:
        raise HypothesisError(f'{desc.name}: no (hV)_Aad data')

    lam_h, lam_v = _check_hypothesis(desc)
    rs = desc.rs
    h, v = desc.h_dim, desc.v_dim
    g = desc.total
    tag = desc.name

    hv = weyl_dim(rs, _add(lam_h, lam_v))
    aad = sum(weyl_dim(rs, w) for w in AAD[desc.name])

    sym2 = lambda n: n * (n + 1) // 2  # noqa: E731
    alt2 = lambda n: n * (n - 1) // 2  # noqa: E731

    records = [
        _record(f'{tag}.sym2', sym2(g), sym2(h) + sym2(v) + h * v + h + v + 1),
        _record(f'{tag}.alt2', alt2(g), alt2(h) + alt2(v) + h * v + h + v),
        _record(f'{tag}.square', sym2(g) + alt2(g), g * g),
        _record(f'{tag}.hV.dim', h * v, hv + v + aad),
    ]

    expected = normalize_module([(_add(lam_h, lam_v), 1), (lam_v, 1)] + [(w, 1) for w in AAD[desc.name]])
    actual = tensor_decompose(rs, lam_h, lam_v)
    records.append(_record(f'{tag}.hV.constituents', format_module(actual), format_module(expected)))

    log('vogel_square_check()>', tag, [r['pass'] for r in records], log_level=2)
    return records


def mixed_cartan_product(factors):
    """Cartan product of reducible graded modules

    each factor is (constituents, exponent), the exponent is distributed over the constituents in every
    possible way and each distribution contributes the weyl module of the summed highest weights,
    a trivial constituent absorbs what is left so powers of C + W give every power of W up to the exponent

    Returns:
        (list): ModuleSpec
    """
    choices = []
    for constituents, e in factors:
        options = []
        for split in _compositions(e, len(constituents)):
            options.append(_add(*[_scale(k, w) for k, w in zip(split, constituents)]))
        choices.append(options)

    result = Counter()
    for combo in product(*choices):
        result[_add(*combo)] += 1
    return normalize_module(list(result.items()))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _w(rank, *indices):
    """sum of fundamental weights, 1 based indices"""
    weight = [0] * rank
    for i in indices:
        weight[i - 1] += 1
    return tuple(weight)


def _zero(rank):
    return (0,) * rank


def plethysm_rows():
    """graded modules of the three sextonionic rows, all weights 1 based in the bourbaki labeling"""
    return {
        1: {
            'type': 'C3',
            'V': [_w(3, 2), _w(3, 1)],
            'g': [_w(3, 1, 1), _w(3, 3), _zero(3)],
            'V2': [_w(3, 1, 3), _w(3, 1, 2), _w(3, 1), _w(3, 2)],
            'V0': [_zero(3), _w(3, 3)],
        },
        2: {
            'type': 'A5',
            'V': [_w(5, 2), _w(5, 5)],
            'V*': [_w(5, 4), _w(5, 1)],
            'V0': [_zero(5), _w(5, 3)],
        },
        3: {
            'type': 'D6',
            'V': [_w(6, 6), _w(6, 1)],
            'g': [_w(6, 2), _w(6, 5), _zero(6)],
            'V2': [_w(6, 4), _w(6, 1, 6), _w(6, 5), _w(6, 2)],
            'V0': [_zero(6), _w(6, 5)],
        },
    }


def predicted_power(row, d, kind='sym'):
    """the decomposition of S^d V (or Lambda^2 V for row 1) predicted by the row formula

    Returns:
        (list): ModuleSpec, or None when the row formula does not cover (d, kind)
    """
    data = plethysm_rows()[row]
    modules = []

    if row == 1:
        if d == 1:
            return normalize_module([(w, 1) for w in data['V']])
        if d != 2:
            return None
        if kind == 'sym':
            # S^2 V = V^(2) + V + V0
            modules = mixed_cartan_product([(data['V'], 2)])
            modules += [(w, 1) for w in data['V'] + data['V0']]
        else:
            # Lambda^2 V = g + V2
            modules = [(w, 1) for w in data['g'] + data['V2']]
        return normalize_module(modules)

    if kind != 'sym':
        return None

    if row == 2:
        # S^d V = sum over i + 2j + 3k = d of V^(i) (V*)^(j) V0^(k)
        for i, j, k in product(range(d + 1), repeat=3):
            if i + 2 * j + 3 * k == d:
                modules += mixed_cartan_product([(data['V'], i), (data['V*'], j), (data['V0'], k)])
        return normalize_module(modules)

    # S^d V = sum over i + 2j + 3k + 4l + 4m = d of V^(i+k) g^(j) V0^(l) V2^(m),
    # g V carries the extra constituent V_w3
    rank = 6
    for i, j, k, l, m in product(range(d + 1), repeat=5):
        if i + 2 * j + 3 * k + 4 * l + 4 * m != d:
            continue
        modules += mixed_cartan_product([(data['V'], i + k), (data['g'], j), (data['V0'], l), (data['V2'], m)])
        if j == 1 and i + k == 1 and l == 0 and m == 0:
            modules.append((_w(rank, 3), 1))
    return normalize_module(modules)


def row_plethysm_check(row, d, kind='sym', max_degree=None):
    """compare power_decompose() of the row module against the row formula

    Returns:
        (list): records {check_id, lhs, rhs, pass}, lhs is the computed side
    """
    if row not in (1, 2, 3):
        raise ValueError(f'row must be 1, 2 or 3, got {row}')

    data = plethysm_rows()[row]
    rs = build_root_system(data['type'])
    spec = [(w, 1) for w in data['V']]
    check_id = f'row{row}.{kind}{d}'

    predicted = predicted_power(row, d, kind)
    if predicted is None:
        return [{'check_id': check_id, 'lhs': None, 'rhs': None, 'pass': None, 'skipped': True}]

    actual = power_decompose(rs, spec, d, kind, max_degree=max_degree)

    dim = module_dim(rs, spec)
    binomial = comb(dim + d - 1, d) if kind == 'sym' else comb(dim, d)
    return [
        _record(f'{check_id}.constituents', format_module(actual), format_module(predicted)),
        _record(f'{check_id}.dim', module_dim(rs, actual), binomial),
        _record(f'{check_id}.predicted_dim', module_dim(rs, predicted), binomial),
    ]
# endregion
