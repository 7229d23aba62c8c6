import pytest

from magicchart.dimform import exc_gk, subexc_gk
from magicchart.intermediate import (HypothesisError, barton_sudbery_table, cartan_power_modules, chart_descriptor,
                                     chart_dimension_mismatches, get_descriptor, intermediate_gk_dim, magic_chart,
                                     mixed_cartan_product, odd_symplectic_descriptor, odd_symplectic_gk,
                                     odd_symplectic_oracle, predicted_power, row_plethysm_check, sl_tilde_gk,
                                     vogel_square_check)
from magicchart.rootsys import build_root_system, weyl_dim


def test_chart_has_no_dimension_mismatch():
    assert chart_dimension_mismatches() == []


def test_magic_chart():
    chart = magic_chart()
    assert [e.dim for e in chart.grid[-1]] == [14, 28, 52, 78, 133, 190, 248]
    assert [e.name for e in chart.grid[2]] == ['A_1', '3A_1', 'C_3', 'A_5', 'D_6', 'D_6.H_{32}', 'E_7']
    d = chart.to_dict()
    assert d['rows'] == ['1', '2', '4', '6', '8']
    assert d['cols'][0] == '-2/3'
    assert d['chart'][3][1] == {'name': '(3A_1).H_8', 'dim': 18}
    assert d['barton_sudbery']['columns'] == ['Der', 'Der+Im', 'Tri']


def test_barton_sudbery_table():
    dims = [[e.dim for e in row] for row in barton_sudbery_table()]
    assert dims == [[0, 0, 0], [0, 1, 2], [3, 6, 9], [8, 13, 18], [14, 21, 28]]


def test_descriptors():
    desc = get_descriptor('D_6.H_{32}.H_{44}')
    assert desc.heisenberg_dims() == [32, 44]
    assert desc.total == 144
    assert desc.centre == 2
    assert get_descriptor('E_7.H_{56}').to_dict() == {'name': 'E_7.H_{56}', 'dim': 190}
    assert chart_descriptor(6, 8).name == 'E_7.H_{56}'
    assert odd_symplectic_descriptor(2).total == 15
    with pytest.raises(ValueError):
        get_descriptor('E_9')
    with pytest.raises(ValueError):
        chart_descriptor(3, 1)
    with pytest.raises(ValueError):
        odd_symplectic_descriptor(0)


@pytest.mark.parametrize('k', [0, 1, 2])
def test_intermediate_cartan_powers(k):
    assert intermediate_gk_dim(get_descriptor('E_7.H_{56}'), k) == exc_gk(6, k)
    assert intermediate_gk_dim(get_descriptor('3A_1'), k) == subexc_gk(0, k)


def test_cartan_power_modules():
    desc = get_descriptor('E_7.H_{56}')
    w1, w7 = (1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 1)
    assert sorted(cartan_power_modules(desc, 1)) == sorted([(0,) * 7, w1, w7])
    assert len(cartan_power_modules(desc, 2)) == 6
    assert (1, 0, 0, 0, 0, 0, 1) in cartan_power_modules(desc, 2)


def test_semisimple_cartan_powers():
    assert intermediate_gk_dim(get_descriptor('E_8'), 1) == 248
    assert intermediate_gk_dim(get_descriptor('0'), 2) == 0
    with pytest.raises(ValueError):
        intermediate_gk_dim(get_descriptor('E_8'), -1)


@pytest.mark.parametrize('name', ['(3A_1).H_8', 'D_6.H_{32}.H_{44}', 'T_2'])
def test_cartan_power_hypothesis(name):
    with pytest.raises(HypothesisError):
        intermediate_gk_dim(get_descriptor(name), 1)


def test_odd_symplectic():
    for n in range(1, 4):
        for k in range(4):
            assert odd_symplectic_gk(n, k) == odd_symplectic_oracle(n, k)
    assert odd_symplectic_gk(2, 1) == odd_symplectic_descriptor(2).total
    with pytest.raises(ValueError):
        odd_symplectic_gk(0, 1)


def test_sl_tilde():
    # sl3 + C3 + C3* + C
    assert sl_tilde_gk(3, 1) == 15
    assert sl_tilde_gk(3, 0) == 1
    assert sl_tilde_gk(3, 2) == 84
    # every (a, b) with a, b <= k once, k = 1 over sl2: 1 + 2 + 2 + 3
    assert sl_tilde_gk(2, 1) == 8
    for n, k in [(3, 3), (4, 2)]:
        rs = build_root_system('A', n)
        assert sl_tilde_gk(n, k) == weyl_dim(rs, (k,) + (0,) * (n - 2) + (k,))
    with pytest.raises(ValueError):
        sl_tilde_gk(1, 1)


def test_mixed_cartan_product():
    assert mixed_cartan_product([([(1,), (0,)], 2)]) == [((0,), 1), ((1,), 1), ((2,), 1)]
    assert mixed_cartan_product([([(1,)], 1), ([(1,)], 1)]) == [((2,), 1)]


@pytest.mark.parametrize('name', ['C_3.H_{14}', 'E_7.H_{56}'])
def test_square_checks(name):
    records = vogel_square_check(get_descriptor(name))
    assert all(r['pass'] for r in records), records


def test_square_check_needs_data():
    with pytest.raises(HypothesisError):
        vogel_square_check(get_descriptor('E_8'))


@pytest.mark.parametrize('row, d, kind', [(1, 1, 'sym'), (1, 2, 'sym'), (1, 2, 'alt'), (2, 2, 'sym'),
                                          (3, 2, 'sym')])
def test_row_plethysm(row, d, kind):
    records = row_plethysm_check(row, d, kind)
    assert all(r['pass'] for r in records), records


def test_row_plethysm_without_rule():
    assert predicted_power(1, 3) is None
    assert predicted_power(2, 2, 'alt') is None
    records = row_plethysm_check(1, 3)
    assert records[0]['skipped']
    with pytest.raises(ValueError):
        row_plethysm_check(4, 2)
