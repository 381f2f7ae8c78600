# -*- coding: utf-8 -*-

import mock
import pytest

import networkx as nx

from ..enums import ParamEnum
from ..errors import TwinReduceValidationError

from . import evaluator


class TestEvaluator(object):
	@pytest.mark.parametrize('name, exp', [
		('bw', 2),
		('maxdeg', 3),
		('pw', 1),
		('tw', 1),
		('star', 4),
		('maxdeg+pw', 4),
		('maxdeg+tw', 4),
		('degeneracy', 1),
		(ParamEnum.BW, 2),
		('MAXDEG_PW', 4),
	])
	def test_star(self, name, exp):
		f = evaluator(name)

		assert f(nx.star_graph(3)) == exp

	def test_heuristic_variant(self):
		f = evaluator('bw', exact=False)

		assert f(nx.path_graph(5)) == 1

	def test_col_radius(self):
		assert evaluator('col', s=1)(nx.cycle_graph(5)) == 3

	def test_unknown(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			evaluator('nope')

		assert exc_info.value.code == 'twinreduce.params.unknown'

	def test_unknown_is_logged(self):
		with mock.patch('twinreduce.params.log') as log:
			with pytest.raises(TwinReduceValidationError):
				evaluator('nope')

		assert log.warning.call_count == 1
