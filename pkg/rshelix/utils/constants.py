"""`EPS_KAPPA`, `EPS_SLOPE`, `DEFAULT_TOLERANCES`, `DEFAULT_DOMAIN`,
   `DEFAULT_GRID_SIZE`, `VERIFY_GRID_SIZE`, `FD_STEPS`, `FD_LEVELS`,
   `ODE_STEP`, `SIGMA_STEP`, `SIGMA_LEVELS`, `ROUNDING_ULPS`,
   `SAMPLED_POINTS`, `SAMPLED_RESOLUTION`, `SAMPLED_KEEP_FRACTION`,
   `TOL_ENV_VAR`"""

#: Curvature floor: below it the Frenet frame is declared undefined.
EPS_KAPPA = 1e-9

#: Smallest |c1| that counts as "c1 != 0" when fitting tau/kappa to a line.
EPS_SLOPE = 1e-8

#: Default tolerances. Keys ending in ``_sampled`` apply to finite-difference
#: and sampled input, the others to closed-form evaluation.
DEFAULT_TOLERANCES = {
    'speed': 1e-9,
    'chord': 1e-8,
    'frame': 1e-8,
    'frame_sampled': 1e-5,
    'sigma': 1e-6,
    'sigma_law': 1e-9,
    'sigma_sampled': 1e-4,
    'fit': 1e-8,
    'fit_sampled': 1e-4,
    'leak': 1e-9,
    'leak_sampled': 1e-6,
    'law': 1e-9,
    'line': 1e-12,
    'cone': 1e-10,
    'ode': 1e-9,
    'ode_stencil': 1e-6,
    'witness': 1e-6,
    'axis': 1e-8,
    'axis_unit': 1e-10,
    'latitude': 1e-9,
}

#: Environment variable holding a global scale factor for all tolerances.
TOL_ENV_VAR = 'RSH_TOL'

#: Arc-length interval of generated family members.
DEFAULT_DOMAIN = (-10.0, 10.0)

#: Number of uniform grid points used when no grid is given.
DEFAULT_GRID_SIZE = 512

#: Number of grid points the family verification suite uses by default.
VERIFY_GRID_SIZE = 1001

#: Finite-difference backend, per derivative order: (top step, stencil
#: points). Steps ``top * (1 + |s|) / 2**j``, j < FD_LEVELS, are tried and
#: the most stable estimate is kept.
FD_STEPS = {
    1: (0.2, 9),
    2: (0.2, 9),
    3: (0.2, 9),
    4: (0.2, 9),
}

#: Number of step halvings tried by the finite-difference backend.
FD_LEVELS = 12

#: Top step of the 5-point stencil ladder on tau/kappa (finite-difference
#: sigma), scaled by 1 + |s|.
SIGMA_STEP = 0.2

#: Number of step halvings tried on tau/kappa.
SIGMA_LEVELS = 8

#: Base step of the 5-point stencil on v = n'/kappa (stencil ODE residual).
ODE_STEP = 1e-4

#: Rounding budget, in units of machine epsilon, of one evaluation of a
#: closed-form derivative. Sets the floors of the verification checks.
ROUNDING_ULPS = 16

#: Stencil width for sampled data when enough rows are available.
SAMPLED_POINTS = 9

#: A sampled row resolves sigma when its error estimate is below
#: ``sigma_sampled / SAMPLED_RESOLUTION``.
SAMPLED_RESOLUTION = 20

#: Fraction of the samples kept when too few rows resolve sigma.
SAMPLED_KEEP_FRACTION = 0.05
