# -*- coding: utf-8 -*-

# ==============================================================================
#
# There are TWO copies of this file in the project.
# 1. /VERSION.py
# 2. /twinreduce/version.py
#
# First one is original, and should be used to describe meta information about
# package.
#
# Second is replaced during build (see setup.py), and the published package
# contains a copy of /VERSION.py, extended with build info
#
# BUMP VERSION occures in the /VERSION.py
#
# ==============================================================================

VERSION = (0, 3, 0)
RELEASE_SUFFIX = '-alpha.1'

VERSION_STRING = '.'.join([str(x) for x in VERSION[0:3]])
RELEASE_STRING = VERSION_STRING + RELEASE_SUFFIX

PROJECT = 'twinreduce: reduction sequences and reduced graph parameters'
COPYRIGHT = '2024-2026 © twinreduce developers'
AUTHOR = 'twinreduce developers'
TITLE = 'twinreduce'
LICENSE = 'ISC'
BUILD = None   # CI_BUILD_NUMBER
COMMIT = None  # CI_COMMIT
