import pytest

from magicchart.rootsys import (BoundExceededError, DecompositionError, NotDominantError, RootSystemError,
                                adjoint_variety_dim, build_root_system, build_semisimple, cartan_power_dim,
                                decompose_character, dual_coxeter, format_module, freudenthal_mults, highest_root,
                                module_dim, parse_module, parse_type, power_decompose, simple_root_gram, weights,
                                weyl_dim, weyl_orbit)


@pytest.mark.parametrize('tag, weight, dim', [
    ('A1', (3,), 4),
    ('A2', (1, 1), 8),
    ('G2', (1, 0), 7),
    ('G2', (0, 1), 14),
    ('C3', (1, 0, 0), 6),
    ('C3', (0, 0, 1), 14),
    ('A5', (0, 0, 1, 0, 0), 20),
    ('D6', (0, 0, 0, 0, 0, 1), 32),
    ('D6', (0, 1, 0, 0, 0, 0), 66),
    ('F4', (0, 0, 0, 1), 26),
    ('E6', (1, 0, 0, 0, 0, 0), 27),
    ('E7', (0, 0, 0, 0, 0, 0, 1), 56),
    ('E7', (1, 0, 0, 0, 0, 0, 0), 133),
    ('E8', (0, 0, 0, 0, 0, 0, 0, 1), 248),
    ('3A1', (1, 1, 1), 8),
])
def test_weyl_dim(tag, weight, dim):
    assert weyl_dim(build_root_system(tag), weight) == dim


@pytest.mark.parametrize('tag, h', [('A1', 2), ('A4', 5), ('C3', 4), ('D4', 6), ('G2', 4), ('F4', 9), ('E6', 12),
                                    ('E7', 18), ('E8', 30)])
def test_dual_coxeter_and_adjoint_variety(tag, h):
    rs = build_root_system(tag)
    assert dual_coxeter(rs) == h
    assert adjoint_variety_dim(rs) == 2 * h - 3


def test_positive_roots():
    assert len(build_root_system('E8').positive_roots) == 120
    assert len(build_root_system('G2').positive_roots) == 6
    assert len(build_root_system('A1+C3').positive_roots) == 10


@pytest.mark.parametrize('tag, height', [('A2', 2), ('G2', 5), ('F4', 11), ('E8', 29)])
def test_highest_root_height(tag, height):
    assert sum(highest_root(build_root_system(tag))) == height


def test_build_semisimple():
    rs = build_semisimple([('A', 1)] * 3)
    assert rs.rank == 3
    assert len(rs.positive_roots) == 3
    assert weyl_dim(rs, (2, 0, 0)) == 3
    assert weyl_dim(rs, (1, 1, 1)) == weyl_dim(build_root_system('3A1'), (1, 1, 1))


def test_parse_type():
    assert parse_type('3A1') == [('A', 1)] * 3
    assert parse_type('A1+C3') == [('A', 1), ('C', 3)]
    assert parse_type('e_7') == [('E', 7)]
    with pytest.raises(RootSystemError):
        parse_type('X3')
    with pytest.raises(RootSystemError):
        simple_root_gram('D', 3)


def test_weights_check():
    rs = build_root_system('A2')
    with pytest.raises(ValueError):
        weyl_dim(rs, (1, 0, 0))
    with pytest.raises(NotDominantError):
        weyl_dim(rs, (1, -1))


def test_weight_multiplicities():
    w = weights(build_root_system('A2'), (1, 1))
    assert sum(w.values()) == 8
    assert w[(0, 0)] == 2


def test_freudenthal_multiplicities():
    assert freudenthal_mults(build_root_system('A2'), (1, 1)) == {(1, 1): 1, (0, 0): 2}
    rs = build_root_system('C3')
    assert freudenthal_mults(rs, (0, 1, 0)) == {(0, 1, 0): 1, (0, 0, 0): 2}
    for tag, lam in [('G2', (1, 0)), ('G2', (0, 1)), ('C3', (1, 1, 0)), ('B3', (0, 0, 1))]:
        rs = build_root_system(tag)
        assert sum(weights(rs, lam).values()) == weyl_dim(rs, lam)


def test_weyl_orbit():
    rs = build_root_system('A2')
    assert weyl_orbit(rs, (1, 0)) == {(1, 0), (-1, 1), (0, -1)}
    assert len(weyl_orbit(rs, (1, 1))) == 6
    assert weyl_orbit(rs, (0, 0)) == {(0, 0)}
    assert len(weyl_orbit(build_root_system('C3'), (0, 1, 0))) == 12


def test_cartan_power_dim():
    rs = build_root_system('E8')
    adjoint = (0, 0, 0, 0, 0, 0, 0, 1)
    assert cartan_power_dim(rs, [adjoint], [1]) == 248
    with pytest.raises(ValueError):
        cartan_power_dim(rs, [adjoint], [1, 2])


def test_module_text():
    spec = parse_module('0,1,0:1; 1,0,0:2')
    assert spec == [((0, 1, 0), 1), ((1, 0, 0), 2)]
    assert format_module(spec) == '0,1,0:1;1,0,0:2'
    assert module_dim(build_root_system('C3'), spec) == 14 + 2 * 6
    for txt in ('', '1,0:0'):
        with pytest.raises(ValueError):
            parse_module(txt)


@pytest.mark.parametrize('tag, weight, d, kind, expected', [
    ('A1', (1,), 2, 'sym', [((2,), 1)]),
    ('A1', (1,), 2, 'alt', [((0,), 1)]),
    ('A1', (1,), 3, 'sym', [((3,), 1)]),
    ('A2', (1, 0), 2, 'alt', [((0, 1), 1)]),
    ('C3', (1, 0, 0), 2, 'alt', [((0, 0, 0), 1), ((0, 1, 0), 1)]),
    ('A5', (0, 0, 1, 0, 0), 2, 'sym', [((0, 0, 2, 0, 0), 1), ((1, 0, 0, 0, 1), 1)]),
    ('A5', (0, 0, 1, 0, 0), 2, 'alt', [((0, 0, 0, 0, 0), 1), ((0, 1, 0, 1, 0), 1)]),
])
def test_power_decompose(tag, weight, d, kind, expected):
    assert power_decompose(build_root_system(tag), [(weight, 1)], d, kind) == expected


def test_power_decompose_bounds():
    rs = build_root_system('A5')
    spec = [((0, 0, 1, 0, 0), 1)]
    with pytest.raises(BoundExceededError):
        power_decompose(rs, spec, 3, max_degree=2)
    with pytest.raises(BoundExceededError):
        power_decompose(rs, spec, 2, max_dim=10)
    with pytest.raises(ValueError):
        power_decompose(rs, spec, 0)
    with pytest.raises(ValueError):
        power_decompose(rs, spec, 2, kind='tensor')


def test_decompose_character_negative_residue():
    rs = build_root_system('A1')
    assert decompose_character(rs, {(2,): 1, (0,): 2}) == [((0,), 1), ((2,), 1)]
    with pytest.raises(DecompositionError):
        decompose_character(rs, {(2,): 1})
