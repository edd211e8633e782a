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

"""Tests for `noetherjet.utils`
"""

import json

import pytest

from io import StringIO

from .. import utils


def test_write_lines(tmpdir):
    target = tmpdir.join("out.txt")
    assert utils.write_lines(str(target), ['a', 'b']) == str(target)
    assert target.read() == 'a\nb\n'

    fobj = StringIO()
    assert utils.write_lines(fobj, ['sigma_1 = -y1_0 - y1_2']) is fobj
    assert fobj.getvalue() == 'sigma_1 = -y1_0 - y1_2\n'


def test_render_json():
    data = {'source': [{'label': 'sigma_1', 'expr': '-y1_0'}], 'pass': True}
    text = utils.render_json(data)
    assert json.loads(text) == data
    assert text.index('"pass"') < text.index('"source"')
    assert utils.render_json(json.loads(text)) == text


@pytest.mark.parametrize('n, out', [
    (1, [[1, 2, 3, 4, 5]]),
    (2, [[1, 2, 3], [4, 5]]),
    (10, [[1], [2], [3], [4], [5]]),
])
def test_chunks(n, out):
    assert list(utils.chunks([1, 2, 3, 4, 5], n)) == out


def test_chunks_empty():
    assert list(utils.chunks([], 4)) == []


@pytest.mark.parametrize('ninits, nproc', [(7, 3), (8, 4), (3, 8)])
def test_chunks_initial_conditions(ninits, nproc):
    inits = [[float(i), 0.] for i in range(ninits)]
    batches = list(utils.chunks(inits, nproc))
    assert len(batches) <= nproc
    assert [init for batch in batches for init in batch] == inits
    assert len({len(batch) for batch in batches[:-1]}) <= 1
