# -*- coding: utf-8 -*-
# Copyright (C) The noetherjet developers (2026-)
#
# This file is part of the noetherjet python package.
#
# noetherjet is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# noetherjet is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with noetherjet.  If not, see <http://www.gnu.org/licenses/>.

"""Variational calculus on finite-order jet spaces of time-dependent
mechanics
"""

__author__ = 'The noetherjet developers'

try:
    from ._version import version as __version__
except ModuleNotFoundError:  # development mode
    __version__ = ''
