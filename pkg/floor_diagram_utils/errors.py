############################################################
# errors.py contains the exception and warning types raised
# across the package (the CLI maps them onto exit codes)
############################################################

__all__ = [
    "DomainError", "InsufficientTangencyError", "PlacementError", "BelowMinimumDegreeError",
    "VerificationError", "DegreeOverflowError",
    "ResourceRefusal", "ResourceRefusalWarning",
]

### DOMAIN ERRORS ###
# Inputs outside the region where a computation is defined (CLI exit code 2)

class DomainError(ValueError):
    pass

# Some component of a partial sum exceeds the available tangency sequence
class InsufficientTangencyError(DomainError):
    pass

# A template position violates k_min, ordering, or the distance to the extended template
class PlacementError(DomainError):
    pass

# A short-edge count would be negative, i.e. the degree is below d_min
class BelowMinimumDegreeError(DomainError):
    pass

### VERIFICATION ERRORS ###
# Internal consistency checks that failed (CLI exit code 3)

class VerificationError(Exception):
    pass

# An interpolated polynomial missed one of its extra check points
class DegreeOverflowError(VerificationError):
    pass

### RESOURCE REFUSALS ###
# Requests beyond the supported cogenus range (CLI exit code 4)

class ResourceRefusal(Exception):
    pass

class ResourceRefusalWarning(ResourceWarning):
    pass
