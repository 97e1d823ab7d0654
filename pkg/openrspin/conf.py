# Numeric and verification defaults. Functions take these as keyword defaults,
# so a caller overrides them per call rather than by editing this module.

# hbar used when none is given: the positive real axis.
DEFAULT_HBAR = complex(1.0, 0.0)

# End-to-end tolerance for quadrature-based checks (dual basis, product cycles,
# quadrature against closed forms).
DUAL_BASIS_TOLERANCE = 1e-8

# Tolerance for checks that are pure linear algebra on closed forms.
LINALG_TOLERANCE = 1e-10

# The ray integral is cut at U = s^r with exp(-U) U^((k+1)/r) below this.
QUADRATURE_TAIL = 1e-14

# Absolute error target for one adaptive Gauss-Legendre refinement step.
QUADRATURE_TOLERANCE = 1e-14

QUADRATURE_NODES = 20
QUADRATURE_MAX_DEPTH = 40

# Largest hbar^-j order the theorem checks need.
FLATNESS_ORDER = 1
