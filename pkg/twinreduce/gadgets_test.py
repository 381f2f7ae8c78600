# -*- coding: utf-8 -*-

import itertools
import random

import pytest

import networkx as nx

from .errors import TwinReduceGraphError
from .errors import TwinReduceValidationError

from .core import Trigraph
from .core import replay

from .models import GadgetSpec

from .params import bandwidth_exact
from .params import max_degree
from .params import ordering_bandwidth
from .params import pathwidth_exact
from .params import treewidth_exact
from .params import validate_tree_decomposition

from .product import s_key
from .product import s_template_adjacent
from .product import validate_certificate
from .product import grid_certificate

from .diversity import neighbourhood_classes

from .gadgets import gen_s_star
from .gadgets import gen_s
from .gadgets import s_ordering
from .gadgets import gen_q_tree
from .gadgets import gen_grid
from .gadgets import gen_binary_tree
from .gadgets import gen_ktree
from .gadgets import gen_complete_multipartite
from .gadgets import blowup2
from .gadgets import red_of
from .gadgets import default_t
from .gadgets import gen_t_of
from .gadgets import gen_stacked_triangulation
from .gadgets import gen_random_planar
from .gadgets import gen_tight_surface_pi1
from .gadgets import gen_tight_ktree_pi1
from .gadgets import generate

from . import self_test as st


BLOBS = list(itertools.product([1, 2, 3, 4], [2, 3], [1, 2]))


def power_minus_arms(G, r):
	"""
	Pairs at distance ``1..r`` by BFS, without the pairs between the arms
	``B`` and ``C``
	"""
	arm = {v: G.nodes[v]['label'][0] for v in G.nodes()}
	res = set()
	for u in G.nodes():
		dist = nx.single_source_shortest_path_length(G, u, cutoff=r)
		for v, d in dist.items():
			if d == 0 or set((arm[u], arm[v])) == set(('B', 'C')):
				continue
			res.add(tuple(sorted((u, v))))
	return res


def random_tree(n, seed):
	rng = random.Random(seed)
	if n <= 2:
		return nx.path_graph(n)
	return nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])


class TestBlob(object):
	@pytest.mark.parametrize('x, q', [(1, 2), (2, 3), (4, 2)])
	def test_size(self, x, q):
		g = gen_s_star(x, q)

		assert g.number_of_nodes() == 2 * q - 1 + 3 * x * q

	@pytest.mark.parametrize('x, exp', [(1, 24), (2, 39)])
	def test_star_edges(self, x, exp):
		assert gen_s_star(x, 2).number_of_edges() == exp

	def test_labels(self):
		g = gen_s_star(2, 2)

		assert g.nodes[0] == {'label': 'Q.0', 'group': 'Q'}
		assert g.nodes[3]['label'] == 'A1.0'
		assert g.nodes[3]['group'] == 'A1'
		assert [g.nodes[v]['label'] for v in s_ordering(g)][:5] == [
			'A2.0', 'A2.1', 'A1.0', 'A1.1', 'Q.0',
		]

	@pytest.mark.parametrize('x, q, r', [(0, 2, 1), (1, 1, 1), (1, 2, 0)])
	def test_invalid(self, x, q, r):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			gen_s(x, q, r)

		assert exc_info.value.code == 'twinreduce.gadgets.invalid_param'

	@pytest.mark.parametrize('x, q, r', BLOBS)
	def test_max_degree(self, x, q, r):
		assert max_degree(gen_s(x, q, r)) <= (3 * r + 2) * q - 2

	@pytest.mark.parametrize('x, q, r', BLOBS)
	def test_layered_bandwidth(self, x, q, r):
		g = gen_s(x, q, r)

		assert ordering_bandwidth(g, s_ordering(g)) <= (2 * r + 2) * q - 2

	@pytest.mark.parametrize('x, q, r', [(1, 2, 1), (2, 2, 1), (1, 2, 2)])
	def test_exact_bandwidth(self, x, q, r):
		g = gen_s(x, q, r)

		assert bandwidth_exact(g).value <= (2 * r + 2) * q - 2

	@pytest.mark.parametrize('x, q, r', [(1, 2, 1), (3, 2, 2), (2, 3, 2), (4, 2, 3)])
	def test_power_by_bfs(self, x, q, r):
		g = gen_s(x, q, r)
		expected = power_minus_arms(gen_s_star(x, q), r)

		assert set(tuple(sorted(e)) for e in g.edges()) == expected

	@pytest.mark.parametrize('x, q, r', [(2, 2, 1), (3, 2, 2)])
	def test_power_by_labels(self, x, q, r):
		g = gen_s(x, q, r)
		label = nx.get_node_attributes(g, 'label')

		for u, v in itertools.combinations(g.nodes(), 2):
			assert g.has_edge(u, v) == s_template_adjacent(label[u], label[v], r)

	def test_labels_kept(self):
		g = gen_s(2, 2, 2)

		assert s_key(g.nodes[0]['label']) == ('Q', 0)


class TestTrees(object):
	def test_q1(self):
		g = gen_q_tree(1)

		assert g.number_of_nodes() == 1
		assert g.number_of_edges() == 0

	@pytest.mark.parametrize('n', [3, 4, 5, 6])
	def test_q_tree(self, n):
		g = gen_q_tree(n)

		assert g.number_of_nodes() == n * n
		assert nx.is_tree(g)
		assert max_degree(g) == 3

	@pytest.mark.parametrize('n', [3, 4])
	def test_q_tree_pathwidth(self, n):
		assert pathwidth_exact(gen_q_tree(n)).value == 2

	def test_q6_bandwidth(self):
		g = gen_q_tree(6)
		diam = nx.diameter(g)

		assert diam < 18
		assert -(-(g.number_of_nodes() - 1) // diam) >= 2

	def test_binary_tree(self):
		assert gen_binary_tree(3).number_of_nodes() == 15
		assert gen_binary_tree(0).number_of_nodes() == 1

	@pytest.mark.parametrize('k, n, m', [(1, 4, 3), (2, 5, 7), (3, 6, 12)])
	def test_ktree(self, k, n, m):
		g = gen_ktree(k, n)

		assert g.number_of_edges() == m
		assert treewidth_exact(g).value == k

	def test_multipartite(self):
		g = gen_complete_multipartite(3)

		assert g.number_of_nodes() == 6
		assert g.number_of_edges() == 12


class TestGrid(object):
	def test_c4(self):
		assert nx.is_isomorphic(gen_grid(2, 2), st.cycle(4))

	def test_ids(self):
		assert sorted(gen_grid(3, 4).edges()) == sorted(st.grid(3, 4).edges())

	@pytest.mark.parametrize('m, n', [(3, 3), (2, 5)])
	def test_certificate(self, m, n):
		F = Trigraph.from_graph(gen_grid(m, n))

		assert validate_certificate(grid_certificate(m, n), F).ok is True


class TestBlowup(object):
	def test_k1(self):
		g = blowup2(nx.empty_graph(1))

		assert g.number_of_nodes() == 2
		assert g.number_of_edges() == 0

	def test_triangle(self):
		g = blowup2(st.complete(3))

		assert nx.is_isomorphic(g, nx.complete_multipartite_graph(2, 2, 2))

	def test_attributes(self):
		g = blowup2(nx.path_graph(['a', 'b']))

		assert g.nodes[3] == {'source': 'b', 'copy': 1}
		assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]

	@pytest.mark.parametrize('n, seed', [(n, seed) for n in (4, 7, 10) for seed in range(3)])
	def test_bandwidth(self, n, seed):
		t = random_tree(n, seed)

		assert bandwidth_exact(blowup2(t)).value <= 2 * bandwidth_exact(t).value + 1

	def test_red_of(self):
		T = red_of(st.path(3))

		assert T.red_edges() == [(0, 1), (1, 2)]
		assert T.black_edges() == []


class TestTOf(object):
	def test_prism(self):
		res = gen_t_of(st.path(2), t=3)

		assert res['t'] == 3
		assert nx.is_isomorphic(res['G'], nx.circular_ladder_graph(3))
		assert res['G'].nodes[4]['label'] == '1.2'

	def test_default_t(self):
		assert default_t(st.path(3)) == 6
		assert gen_t_of(st.path(2))['t'] == 4

	@pytest.mark.parametrize('H, t', [
		(H, t) for H in (st.path(2), st.path(3), st.cycle(4)) for t in (3, 4)
	])
	def test_canonical_sequence(self, H, t):
		res = gen_t_of(H, t=t)
		G = res['G']
		seq = res['canonical_partial']
		d = max_degree(H)
		blown = blowup2(H)
		states = list(replay(seq))

		assert G.number_of_nodes() == H.number_of_nodes() * t
		assert len(seq) == H.number_of_nodes() * (t - 1)
		assert seq.partial is True

		for step, T in enumerate(states):
			assert T.max_red_degree() <= 2 * d

			# never across cliques
			for v in T.vertices():
				assert len(set(x // t for x in T.label(v))) == 1

			m = res['blowup_maps'][step]
			assert len(set(m.values())) == len(m)
			for u, v in T.red_edges():
				assert blown.has_edge(m[u], m[v])

		last = states[-1]
		assert last.n == H.number_of_nodes()
		assert last.black_edges() == []
		assert nx.is_isomorphic(last.red_graph(), H)

	def test_disconnected(self):
		with pytest.raises(TwinReduceGraphError) as exc_info:
			gen_t_of(nx.empty_graph(2))

		assert exc_info.value.code == 'twinreduce.gadgets.disconnected'

	def test_small_t(self):
		with pytest.raises(TwinReduceValidationError):
			gen_t_of(st.path(2), t=1)


class TestPlanar(object):
	@pytest.mark.parametrize('n, seed', [(4, 0), (7, 1), (12, 2)])
	def test_stacked(self, n, seed):
		g = gen_stacked_triangulation(n, seed)

		assert g.number_of_nodes() == n
		assert g.number_of_edges() == 3 * n - 6
		assert nx.check_planarity(g)[0]

	def test_stacked_is_deterministic(self):
		a = gen_stacked_triangulation(15, 7)
		b = gen_stacked_triangulation(15, 7)

		assert sorted(a.edges()) == sorted(b.edges())

	def test_random_planar(self):
		g = gen_random_planar(20, seed=3, keep=0.5)

		assert g.number_of_nodes() == 20
		assert g.number_of_edges() < 3 * 20 - 6
		assert nx.check_planarity(g)[0]


class TestTightSurface(object):
	def test_k4(self):
		res = gen_tight_surface_pi1(st.complete(4))
		sizes = dict((d, len(ys)) for d, ys in res['classes'].items())

		assert len(res['Y']) == 15
		assert sizes == {0: 1, 1: 4, 2: 6, 3: 4}
		assert nx.is_bipartite(res['G'])
		assert len(neighbourhood_classes(res['G'], res['X'])) == 15

	@pytest.mark.parametrize('n', range(4, 11))
	def test_stacked(self, n):
		res = gen_tight_surface_pi1(gen_stacked_triangulation(n, seed=n))

		assert len(res['Y']) == 6 * n - 9
		assert len(neighbourhood_classes(res['G'], res['X'])) == 6 * n - 9

	@pytest.mark.parametrize('G0', [st.cycle(4), st.complete(3), st.complete(5)])
	def test_not_triangulation(self, G0):
		with pytest.raises(TwinReduceGraphError) as exc_info:
			gen_tight_surface_pi1(G0)

		assert exc_info.value.code == 'twinreduce.gadgets.not_triangulation'


class TestTightKTree(object):
	@pytest.mark.parametrize('k, n, exp', [(1, 3, 4), (1, 4, 5), (2, 5, 13), (3, 6, 29)])
	def test_sizes(self, k, n, exp):
		res = gen_tight_ktree_pi1(k, n)

		assert exp == 2 ** k * (n - k + 1) - n + k
		assert len(res['Y']) == exp
		assert len(neighbourhood_classes(res['G'], res['X'])) == exp

	@pytest.mark.parametrize('k, n', [(1, 3), (2, 5), (2, 2), (3, 6)])
	def test_decomposition(self, k, n):
		res = gen_tight_ktree_pi1(k, n)

		assert validate_tree_decomposition(res['G'], res['bags'], res['parent']) == k

	@pytest.mark.parametrize('k, n', [(1, 3), (2, 5)])
	def test_treewidth(self, k, n):
		assert treewidth_exact(gen_tight_ktree_pi1(k, n)['G']).value == k

	def test_n_below_k(self):
		with pytest.raises(TwinReduceValidationError):
			gen_tight_ktree_pi1(3, 2)


class TestGenerate(object):
	def test_grid(self):
		res = generate('grid', {'m': 2, 'n': 3})

		assert res['graph'].number_of_nodes() == 6
		assert res['certificate'].path_len == 3

	def test_spec(self):
		spec = GadgetSpec()
		spec.kind = 's_xqr'
		spec.params = {'x': 1, 'q': 2, 'r': 1}

		res = generate(spec)

		assert res['graph'].number_of_nodes() == 9

	def test_t_of(self):
		res = generate('t_of', {'t': 3}, graph=st.path(2))

		assert res['t'] == 3
		assert len(res['sequence']) == 4

	def test_tight_surface_from_params(self):
		res = generate('tight_surface_pi1', {'n': 6, 'seed': 1})

		assert len(res['Y']) == 27

	def test_missing_param(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			generate('s_star', {'x': 1})

		assert exc_info.value.code == 'twinreduce.gadgets.missing_param'
		assert exc_info.value.details == {'param': 'q'}

	def test_missing_graph(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			generate('blowup2')

		assert exc_info.value.details == {'param': 'graph'}

	def test_unknown(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			generate('petersen')

		assert exc_info.value.code == 'twinreduce.gadgets.unknown'

	def test_deterministic(self):
		a = generate('stacked_triangulation', {'n': 9, 'seed': 5})['graph']
		b = generate('stacked_triangulation', {'n': 9, 'seed': 5})['graph']

		assert sorted(a.edges()) == sorted(b.edges())
