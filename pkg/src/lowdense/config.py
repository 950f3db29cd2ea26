"""Tunable constants shared across the package.

Values marked *calibrated* were measured on the random-disk corpus produced by
:func:`lowdense.generators.gen_random_disks` (rho ~ 2, d = 2); see
``demos/calibrate_constants.py`` for the script that reproduces them.
"""
from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class Config:
    # absolute tolerance for geometric predicates; tangency within tol intersects
    tol: float = 1e-9
    # doubling constants c_d (conservative covering numbers)
    doubling: dict = field(default_factory=lambda: {2: 7, 3: 21})
    # C in N = C * (rho + rho^(1/d) k^(1-1/d)); calibrated
    crossing_constant: float = 1.5
    # resampling budget for the sphere separator
    max_trials: int = 64
    # K in psi = ceil(K rho / eps^d); calibrated
    division_constant: float = 8.0
    # largest cluster solved by brute force / largest oracle ground set
    brute_force_cap: int = 24


DEFAULT = Config()


def doubling_constant(d, config=DEFAULT):
    try:
        return config.doubling[d]
    except KeyError:
        raise ValueError(f"no doubling constant configured for d={d}") from None


def with_overrides(**kw):
    return replace(DEFAULT, **kw)
