LINE = f"{'=' * 60}"

DEFAULT_QMAX = 3
DEFAULT_SMAX = 3
DEFAULT_PMAX = 3

# Многочлены от Φ1..Φ4 для генераторов целого индекса; None у полуцелых.
GENERATOR_POLYS = {
    'phi01': 'Phi1',
    'phi02': 'Phi2',
    'phi03': 'Phi3',
    'phi04': 'Phi4',
    'phi06': 'Phi2*Phi4 - Phi3^2',
    'phi08': 'Phi2^2*Phi4 - Phi2*Phi3^2 - Phi4^2',
    'phi012': 'Phi4*(Phi2^2*Phi4 - Phi2*Phi3^2 - Phi4^2) - 2*(Phi2*Phi4 - Phi3^2)^2',
    'xi06': '-Phi1^2*Phi4 + 9*Phi1*Phi2*Phi3 - 8*Phi2^3 - 27*Phi3^2',
    'phi032': None,
    'phim112': None,
}

GENERATOR_ALIASES = {}
generators_config = [
    (['phim112', 'phi-1,1/2', 'phi_m1_1/2', 'φ-1,1/2'], 'phim112'),
    (['phi032', 'phi0,3/2', 'phi_0_3/2', 'φ0,3/2', 'φ032'], 'phi032'),
    (['phi01', 'phi1', 'phi0,1', 'φ01', 'φ1', 'Φ1', 'Phi1'], 'phi01'),
    (['phi02', 'phi2', 'phi0,2', 'φ02', 'φ2', 'Φ2', 'Phi2'], 'phi02'),
    (['phi03', 'phi3', 'phi0,3', 'φ03', 'φ3', 'Φ3', 'Phi3'], 'phi03'),
    (['phi04', 'phi4', 'phi0,4', 'φ04', 'φ4', 'Φ4', 'Phi4'], 'phi04'),
    (['phi06', 'phi0,6', 'φ06'], 'phi06'),
    (['phi08', 'phi0,8', 'φ08'], 'phi08'),
    (['phi012', 'phi0,12', 'φ012'], 'phi012'),
    (['xi06', 'xi0,6', 'ξ06', 'ξ0,6'], 'xi06'),
]

for aliases, name in generators_config:
    for alias in aliases:
        GENERATOR_ALIASES[alias] = name
        GENERATOR_ALIASES[alias.lower()] = name

# (вес×2, индекс×2) генераторов
GENERATOR_SHAPES = {
    'phim112': (-2, 1),
    'phi032': (0, 3),
    'phi01': (0, 2),
    'phi02': (0, 4),
    'phi03': (0, 6),
    'phi04': (0, 8),
    'phi06': (0, 12),
    'phi08': (0, 16),
    'phi012': (0, 24),
    'xi06': (0, 12),
}

ARITHMETIC_LIFTS = {
    'delta2': 'Delta2',
    'δ2': 'Delta2',
    'delta1': 'Delta1',
    'δ1': 'Delta1',
    'deltahalf': 'DeltaHalf',
    'delta1/2': 'DeltaHalf',
}

SUITES = ['ring', 'basis', 'hecke', 'congruences', 'lifts', 'all']

LIFT_KINDS = ['explift', 'sqeg', 'eform', 'arith']

SIEGEL_ALIASES = {}
siegel_config = [
    (['Delta5', 'Δ5', 'delta5'], 'Delta5'),
    (['Delta2', 'Δ2', 'delta2'], 'Delta2'),
    (['Delta1', 'Δ1', 'delta1'], 'Delta1'),
    (['DeltaHalf', 'Δ1/2', 'delta1/2', 'deltahalf'], 'DeltaHalf'),
    (['Delta11', 'Δ11', 'delta11'], 'Delta11'),
    (['D6', 'd6'], 'D6'),
    (['Delta7', 'Δ7', 'delta7'], 'Delta7'),
    (['Delta17', 'Δ17', 'delta17'], 'Delta17'),
    (['Delta5_2z', 'Δ5(2z)', 'delta5_2z'], 'Delta5_2z'),
    (['Delta12', 'Δ12', 'delta12'], 'Delta12'),
    (['Delta23', 'Δ23', 'delta23'], 'Delta23'),
    (['Phi3', 'Φ3', 'phi3_siegel'], 'Phi3'),
    (['Phi5', 'Φ5', 'phi5_siegel'], 'Phi5'),
]

for aliases, name in siegel_config:
    for alias in aliases:
        SIEGEL_ALIASES[alias] = name
        SIEGEL_ALIASES[alias.lower()] = name

# наибольшее окно (q, s) для проверок подъёмов в verify
LIFT_BOX = 4
# случайные формы для проверок делимости и тождеств на многочленах
RANDOM_SAMPLES = 200
RANDOM_SEED = 1996
