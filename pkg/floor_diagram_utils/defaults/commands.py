#####################################################################
# defaults/commands.py contains the default values for every
# command of the command-line interface
#####################################################################

### IMPORTING PACKAGES ###

from .. import config

### COMMAND DEFAULTS ###
# Every key a command accepts, with the value it takes when not supplied

_TEMPLATES_DEFAULT = {
    "kind":"plain",
    # Largest cogenus listed without --force
    "max_plain":config.MAX_TEMPLATE_COGENUS,
    "max_extended":config.MAX_EXTENDED_COGENUS,
    "force":False,
}

_SEVERI_DEFAULT = {
    "alpha":"",
    "beta":"",
    "method":"polynomial",
}

_NODEPOLY_DEFAULT = {
    "out":None,
}

_LEADING_DEFAULT = {
    "depth":2,
}

_VERIFY_DEFAULT = {
    # Degree cap of the enumeration-vs-polynomial grid
    "max_degree":6,
}

_DEFAULTS_CMD = {
    "templates":_TEMPLATES_DEFAULT,
    "severi":_SEVERI_DEFAULT,
    "nodepoly":_NODEPOLY_DEFAULT,
    "leading":_LEADING_DEFAULT,
    "verify":_VERIFY_DEFAULT,
}

### EXIT CODES ###

_EXIT_CODES = {
    "success":0,
    "domain":2,
    "verification":3,
    "resource":4,
}
