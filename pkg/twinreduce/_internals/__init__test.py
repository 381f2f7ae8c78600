# -*- coding: utf-8 -*-

import pytest

import networkx as nx

from . import iter_bits
from . import popcount
from . import mask_of
from . import lowest_bit
from . import sorted_nodes
from . import index_graph
from . import components_of


class TestBits(object):

	@pytest.mark.parametrize('mask, exp', [
		(0, []),
		(1, [0]),
		(0b1010, [1, 3]),
		(1 << 70 | 1, [0, 70]),
	])
	def test_iter_bits(self, mask, exp):
		assert list(iter_bits(mask)) == exp
		assert popcount(mask) == len(exp)
		assert mask_of(exp) == mask

	@pytest.mark.parametrize('mask, exp', [
		(0, -1),
		(0b1000, 3),
		(0b1100, 2),
	])
	def test_lowest_bit(self, mask, exp):
		assert lowest_bit(mask) == exp


class TestIndexGraph(object):

	def test_sorted_nodes_mixed_types(self):
		G = nx.Graph()
		G.add_nodes_from([2, 'a', (0, 1)])

		assert len(sorted_nodes(G)) == 3

	def test_index(self):
		G = nx.Graph([(5, 7), (7, 9), (9, 9)])

		nodes, index, adj = index_graph(G)

		assert nodes == [5, 7, 9]
		assert index == {5: 0, 7: 1, 9: 2}
		# self-loop ignored
		assert adj == [0b010, 0b101, 0b010]

	def test_explicit_order(self):
		G = nx.path_graph(3)

		nodes, index, adj = index_graph(G, nodes=[2, 1, 0])

		assert index[2] == 0
		assert adj[0] == 0b010

	def test_components(self):
		G = nx.Graph([(0, 1), (2, 3)])
		G.add_node(4)
		_, _, adj = index_graph(G)

		assert components_of(adj) == [0b00011, 0b01100, 0b10000]
		assert components_of(adj, within=0b00110) == [0b00010, 0b00100]
