# -*- coding: utf-8 -*-

import json

import pytest

import networkx as nx

from .errors import TwinReduceParseError
from .errors import TwinReduceValidationError

from .core import Trigraph

from .codec import RED
from .codec import graph_to_dict
from .codec import graph_from_dict
from .codec import trigraph_from_graph
from .codec import parse_edgelist
from .codec import format_edgelist
from .codec import format_dot
from .codec import loads
from .codec import dumps
from .codec import convert
from .codec import guess_format

from .enums import GraphFormatEnum

from . import self_test as st


class TestEdgelist(object):
	def test_p3(self):
		g = parse_edgelist('0 1\n1 2')

		assert nx.is_isomorphic(g, st.path(3))
		assert graph_to_dict(g) == {'n': 3, 'black': [[0, 1], [1, 2]], 'red': []}

	def test_header_and_comments(self):
		g = parse_edgelist('# n=5\n# a comment\n\n0 1\n3 4 red\n')

		assert g.number_of_nodes() == 5
		assert g.edges[3, 4]['color'] == RED

	@pytest.mark.parametrize('text, line', [
		('0 1\n1\n', 2),
		('0 1\n1 x\n', 2),
		('0 0\n', 1),
		('# n=2\n0 1\n1 2\n', 3),
		('0 1 blue\n', 1),
	])
	def test_errors(self, text, line):
		with pytest.raises(TwinReduceParseError) as exc_info:
			parse_edgelist(text)

		assert exc_info.value.code == 'twinreduce.codec.invalid_edgelist'
		assert exc_info.value.details['line'] == line

	def test_format(self):
		T = Trigraph(4, black=[(0, 1)], red=[(2, 3)])

		assert format_edgelist(T) == '# n=4\n0 1\n2 3 red\n'

	def test_format_needs_integers(self):
		with pytest.raises(TwinReduceValidationError):
			format_edgelist(nx.path_graph(['a', 'b']))


class TestJson(object):
	def test_round_trip_through_edgelist(self):
		text = dumps(st.grid(3, 3))

		again = convert(convert(text, 'json', 'edgelist'), 'edgelist', 'json')

		assert again == text

	def test_nodes_and_names(self):
		g = nx.Graph()
		g.add_node((0, 1), label='Q.0')
		g.add_edge((0, 1), (1, 0), color=RED)

		data = graph_to_dict(g)
		again = graph_from_dict(json.loads(json.dumps(data)))

		assert data['nodes'] == [[0, 1], [1, 0]]
		assert data['names'] == {'0': 'Q.0'}
		assert data['red'] == [[0, 1]]
		assert again.nodes[(0, 1)]['label'] == 'Q.0'
		assert again.edges[(0, 1), (1, 0)]['color'] == RED

	def test_unknown_vertex(self):
		with pytest.raises(TwinReduceParseError) as exc_info:
			graph_from_dict({'n': 2, 'black': [[0, 5]]})

		assert exc_info.value.details == {'edge': [0, 5]}

	def test_invalid_json(self):
		with pytest.raises(TwinReduceParseError) as exc_info:
			loads('{"n": 2,\n"black": [}')

		assert exc_info.value.code == 'twinreduce.codec.invalid_json'
		assert exc_info.value.details['line'] == 2

	def test_wrapped_graph(self):
		g = loads('{"graph": {"n": 2, "black": [[0, 1]]}, "certificate": {}}')

		assert list(g.edges()) == [(0, 1)]

	def test_trigraph(self):
		T = Trigraph(3, black=[(0, 1)], red=[(1, 2)])

		g = loads(dumps(T))

		assert trigraph_from_graph(g).red_edges() == [(1, 2)]
		assert trigraph_from_graph(g).black_edges() == [(0, 1)]


class TestDot(object):
	def test_red_edges(self):
		T = Trigraph(3, black=[(0, 1)], red=[(1, 2)])

		text = format_dot(T)

		assert text == 'graph G {\n\t0;\n\t1;\n\t2;\n\t0 -- 1;\n\t1 -- 2 [color=red];\n}\n'

	def test_labels(self):
		g = nx.Graph()
		g.add_node('a', label='A1.0')

		assert '"a" [label="A1.0"];' in dumps(g, 'dot')

	def test_export_only(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			loads('graph G {}', 'dot')

		assert exc_info.value.code == 'twinreduce.codec.unsupported'


class TestGuessFormat(object):
	@pytest.mark.parametrize('path, exp', [
		('a.json', GraphFormatEnum.JSON),
		('a.EDGES', GraphFormatEnum.EDGELIST),
		('x/y.gv', GraphFormatEnum.DOT),
		('noext', GraphFormatEnum.JSON),
	])
	def test_guess(self, path, exp):
		assert guess_format(path) == exp
