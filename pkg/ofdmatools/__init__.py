# -*- coding: utf-8 -*-

__author__ = 'ofdmatools developers'
__version__ = '0.1.0'
