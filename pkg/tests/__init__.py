# -*- coding: utf-8 -*-

import os

# Long Monte-Carlo checks only run when this variable is set
SLOW_TESTS = bool(os.environ.get('OFDMATOOLS_SLOW_TESTS'))
