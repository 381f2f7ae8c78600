# -*- coding: utf-8 -*-

import pytest

import networkx as nx

from ..errors import TwinReduceGraphError
from ..errors import TwinReduceValidationError

from ..core import Trigraph

from .structure import strong_product
from .structure import s_label
from .structure import s_key
from .structure import s_distance
from .structure import s_template_adjacent
from .structure import s_group_size
from .structure import RootedDecomposition
from .structure import ProductCertificate
from .structure import validate_certificate
from .structure import grid_certificate
from .structure import path_certificate

from .. import self_test as st


class TestStrongProduct(object):
	@pytest.mark.parametrize('n', [1, 2, 5])
	def test_k1_times_path(self, n):
		g = strong_product(nx.empty_graph(1), st.path(n))

		assert nx.is_isomorphic(g, st.path(n))

	def test_p2_p2_is_k4(self):
		g = strong_product(st.path(2), st.path(2))

		assert nx.is_isomorphic(g, st.complete(4))

	def test_p3_p3_centre(self):
		g = strong_product(st.path(3), st.path(3))

		assert g.degree((1, 1)) == 8
		assert g.number_of_edges() == 20

	def test_contains_grid(self):
		g = strong_product(st.path(3), st.path(3))
		grid = nx.grid_2d_graph(3, 3)

		assert all(g.has_edge(u, v) for u, v in grid.edges())

	@pytest.mark.parametrize('P', [
		st.cycle(4),
		st.star(3),
		nx.empty_graph(2),
		nx.Graph(),
	])
	def test_not_a_path(self, P):
		with pytest.raises(TwinReduceGraphError) as exc_info:
			strong_product(st.path(2), P)

		assert exc_info.value.code == 'twinreduce.product.not_a_path'


class TestTemplate(object):
	@pytest.mark.parametrize('key, label', [
		(('Q', 3), 'Q.3'),
		(('A', 2, 0), 'A2.0'),
		(('C', 11, 4), 'C11.4'),
	])
	def test_labels(self, key, label):
		assert s_label(key) == label
		assert s_key(label) == key

	def test_bad_label(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			s_key('X1.0')

		assert exc_info.value.code == 'twinreduce.product.invalid_label'

	@pytest.mark.parametrize('a, b, exp', [
		('Q.0', 'Q.1', 1),
		('Q.0', 'A3.1', 3),
		('A2.0', 'A2.1', 1),
		('A1.0', 'A4.0', 3),
		('A1.0', 'B2.0', 3),
		('B2.0', 'C2.1', 4),
	])
	def test_distance(self, a, b, exp):
		assert s_distance(a, b) == exp
		assert s_distance(b, a) == exp

	def test_adjacent(self):
		assert s_template_adjacent('Q.0', 'B1.0', 1)
		assert s_template_adjacent('A1.0', 'B1.0', 2)
		assert not s_template_adjacent('A1.0', 'B1.0', 1)
		assert not s_template_adjacent('B1.0', 'C1.0', 5)
		assert not s_template_adjacent('Q.0', 'Q.0', 1)

	def test_group_size(self):
		assert s_group_size('Q.0', 3) == 5
		assert s_group_size(('A', 1, 0), 3) == 3


class TestRootedDecomposition(object):
	def test_grid(self):
		d = grid_certificate(4, 3).decomp

		assert len(d) == 4
		assert d.root == 0
		assert d.kq() == (1, 1)
		assert d.is_leaf(3)
		assert not d.is_leaf(0)
		assert d.new_vertices(3) == frozenset([3])

	def test_root_is_internal(self):
		d = RootedDecomposition([[]], [-1])

		assert not d.is_leaf(0)

	def test_dict(self):
		d = RootedDecomposition([[], [0, 1], [1, 2]], [None, 0, 1])

		assert d.to_dict() == {
			'bags': [[], [0, 1], [1, 2]],
			'parent': [-1, 0, 1],
			'root': 0,
		}
		assert RootedDecomposition.from_dict(d.to_dict()).bags == d.bags

	@pytest.mark.parametrize('parent', [
		[-1, -1],
		[0, 0],
		[-1, 5],
	])
	def test_invalid(self, parent):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			RootedDecomposition([[], [0]], parent)

		assert exc_info.value.code == 'twinreduce.product.invalid_decomposition'


class TestCertificate(object):
	def test_json(self):
		cert = ProductCertificate(
			nx.path_graph(['a', 'b']),
			RootedDecomposition([[], ['a', 'b']], [-1, 0]),
			2,
			{0: ('a', 0), 1: ('b', 1)},
			apex=[2],
			r=2,
		)

		data = cert.to_dict()
		again = ProductCertificate.from_dict(data)

		assert data['embed'] == {'0': ['a', 0], '1': ['b', 1]}
		assert data['decomp'] == {'bags': [[], ['a', 'b']], 'parent': [-1, 0], 'root': 0}
		assert again.to_dict() == data
		assert again.apex == [2]
		assert again.r == 2

	def test_missing_key(self):
		data = path_certificate(3).to_dict()
		del data['embed']

		with pytest.raises(TwinReduceValidationError) as exc_info:
			ProductCertificate.from_dict(data)

		assert exc_info.value.code == 'twinreduce.product.invalid_certificate'

	def test_reindexed(self):
		cert = path_certificate(3)
		cert.embed = {10: (0, 0), 20: (0, 1), 30: (0, 2)}

		again = cert.reindexed([10, 20, 30])

		assert again.embed == {0: (0, 0), 1: (0, 1), 2: (0, 2)}


class TestValidate(object):
	@pytest.mark.parametrize('m, n', [(1, 1), (2, 3), (3, 3), (5, 4)])
	def test_grid(self, m, n):
		F = Trigraph.from_graph(st.grid(m, n))

		rep = validate_certificate(grid_certificate(m, n), F, k=1, q=2)

		assert rep.ok is True
		assert rep.failed() == []
		assert rep.checks['separation']['witness'] == 'checked lazily during construction'

	def test_no_red_edges(self):
		F = Trigraph.from_graph(st.path(4))

		rep = validate_certificate(path_certificate(4), F)

		assert rep.checks['red_edges']['holds'] is True
		assert rep.k == 0
		assert rep.q == 1

	def test_neighbourhood(self):
		g = st.grid(3, 3)
		g.add_edge(0, 2)
		F = Trigraph.from_graph(g)

		rep = validate_certificate(grid_certificate(3, 3), F)

		assert rep.ok is False
		assert rep.failed() == ['neighbourhood']
		assert rep.checks['neighbourhood']['witness']['edge'] == [0, 2]

	def test_radius(self):
		F = Trigraph.from_graph(nx.power(st.path(5), 2))
		cert = path_certificate(5)

		assert validate_certificate(cert, F).failed() == ['neighbourhood']

		cert.r = 2
		assert validate_certificate(cert, F).ok is True

	def test_red_edge_in_leaf(self):
		F = Trigraph(3, black=[(0, 1)], red=[(1, 2)])

		rep = validate_certificate(path_certificate(3), F)

		assert rep.checks['red_edges']['holds'] is True

	def test_red_edge_outside_leaf(self):
		# 0 and 3 sit at h=0 and h=1, h=0 is not a new vertex of a leaf
		F = Trigraph(9, red=[(0, 3)])

		rep = validate_certificate(grid_certificate(3, 3), F)

		assert rep.failed() == ['red_edges']
		assert rep.checks['red_edges']['witness']['edge'] == [0, 3]

	def test_not_embedded(self):
		F = Trigraph(4)

		rep = validate_certificate(path_certificate(3), F)

		assert 'embedding' in rep.failed()
		assert rep.checks['embedding']['witness'] == {'vertex': 3, 'reason': 'not embedded'}

	def test_not_injective(self):
		cert = path_certificate(2)
		cert.embed[1] = (0, 0)

		rep = validate_certificate(cert, Trigraph(2))

		assert rep.checks['embedding']['witness']['reason'] == 'not injective'

	def test_rooted_bounds(self):
		F = Trigraph.from_graph(st.grid(3, 3))

		rep = validate_certificate(grid_certificate(3, 3), F, k=0)

		assert rep.failed() == ['rooted']
		assert rep.checks['rooted']['witness']['k'] == 1

	def test_root_must_be_empty(self):
		cert = ProductCertificate(
			nx.empty_graph(1),
			RootedDecomposition([[0], [0]], [-1, 0]),
			1,
			{0: (0, 0)},
		)

		rep = validate_certificate(cert, Trigraph(1))

		assert rep.failed() == ['rooted']

	def test_apex(self):
		g = st.grid(2, 2)
		g.add_edges_from((4, v) for v in range(4))
		F = Trigraph.from_graph(g)
		cert = grid_certificate(2, 2)
		cert.apex = [4]

		rep = validate_certificate(cert, F)

		assert rep.ok is True

	def test_red_edge_at_apex(self):
		F = Trigraph(3, black=[(0, 1)], red=[(1, 2)])
		cert = path_certificate(2)
		cert.apex = [2]

		rep = validate_certificate(cert, F)

		assert rep.failed() == ['red_edges']
