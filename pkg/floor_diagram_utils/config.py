# Global configuration variables for floor-diagram-utils

# Number of worker processes used by Severi-degree enumeration and node-polynomial assembly
DEFAULT_JOBS = 1

# Largest index i carried by the alpha_i / beta_i variables of the polynomial ring
# (node polynomials of cogenus delta only ever use indices <= delta)
MAX_VARIABLE_INDEX = 8

# Cogenus ceilings; requests above these are refused with a resource warning
MAX_TEMPLATE_COGENUS = 6
MAX_EXTENDED_COGENUS = 4
MAX_NODE_POLYNOMIAL_COGENUS = 6

# On-disk cache of templates, extended templates and node polynomials
CACHE_ENV_VAR = "FLOOR_DIAGRAM_UTILS_CACHE"
CACHE_DIR_NAME = "floor-diagram-utils"
# Bumping this invalidates every cache entry written by an older release
CACHE_FORMAT_VERSION = 1
