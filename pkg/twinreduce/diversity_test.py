# -*- coding: utf-8 -*-

import itertools

import pytest

import networkx as nx

from .enums import BoundEnum
from .errors import TwinReduceGraphError
from .errors import TwinReduceValidationError

from .diversity import profile
from .diversity import diversity
from .diversity import diversity_bruteforce
from .diversity import neighbourhood_classes
from .diversity import second_neighbourhood_classes
from .diversity import second_profile_partition
from .diversity import check_bound
from .diversity import shallow_minor_witness
from .diversity import surface_bound
from .diversity import surface_second_bound
from .diversity import treewidth_bound
from .diversity import degen_bound

from . import self_test as st


class TestProfile(object):
	def test_isolated(self):
		G = nx.empty_graph(3)

		p = profile(G, 0, [1, 2], 1)

		assert p.entries == {1: None, 2: None}
		assert p.key == '**'
		assert p.r == 1

	def test_star_leaves(self):
		p = profile(st.star(3), 3, [1, 2], 2)

		assert p.entries == {1: 2, 2: 2}
		assert p.key == '22'

	def test_grid_corner(self):
		G = st.grid(3, 3)

		p = profile(G, 0, [4, 8], 2)

		assert p.entries == {4: 2, 8: None}
		assert p.key == '2*'

	def test_anchor_vertex(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			profile(st.path(3), 1, [1, 2], 1)

		assert exc_info.value.code == 'twinreduce.diversity.invalid_anchor'

	def test_unknown_anchor(self):
		with pytest.raises(TwinReduceValidationError):
			profile(st.path(3), 0, [7], 1)

	@pytest.mark.parametrize('r', [-1, 36])
	def test_radius(self, r):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			profile(st.path(3), 0, [1], r)

		assert exc_info.value.code == 'twinreduce.diversity.invalid_radius'


class TestDiversity(object):
	def test_star_centre(self):
		rep = diversity(st.star(5), [0], 1)

		assert rep.count == 1
		assert rep.classes[0]['members'] == [1, 2, 3, 4, 5]

	def test_classes_partition_outside(self):
		G = st.grid(3, 4)
		A = [0, 5, 11]

		rep = diversity(G, A, 2)
		members = sorted(v for c in rep.classes for v in c['members'])

		assert members == sorted(set(G.nodes()) - set(A))
		assert rep.count == len(set(c['key'] for c in rep.classes))

	def test_matches_bruteforce(self):
		for g in st.small_graphs(6):
			nodes = sorted(g.nodes())
			for A in (nodes[:1], nodes[:2], nodes[-3:]):
				for r in (1, 2, 3):
					assert diversity(g, A, r).count == diversity_bruteforce(g, A, r)

	def test_first_neighbourhoods(self):
		for seed in range(10):
			g = st.random_graph(10, 0.3, seed)
			A = [0, 3, 7]

			assert diversity(g, A, 1).count == len(neighbourhood_classes(g, A))

	def test_monotone_in_radius(self):
		for seed in range(10):
			g = st.random_graph(12, 0.25, seed)
			A = [1, 2, 6, 9]
			counts = [diversity(g, A, r).count for r in range(1, 5)]

			assert counts == sorted(counts)

	def test_at_most_trivial_bound(self):
		for seed in range(10):
			g = st.random_graph(12, 0.3, seed)
			for r in (1, 2, 3):
				assert diversity(g, [0, 1, 2], r).count <= (r + 1) ** 3

	def test_second_neighbourhoods(self):
		G = st.path(5)

		assert second_neighbourhood_classes(G, [0]) == [frozenset(), frozenset([0])]


class TestSecondProfilePartition(object):
	def test_p5(self):
		G = nx.path_graph(['a', 'b', 'c', 'd', 'e'])

		rep = second_profile_partition(G, ['a'])

		assert rep.count == 2
		assert [c['members'] for c in rep.classes] == [['d', 'e'], ['c']]
		assert rep['consistent'] is True

	def test_empty_z(self):
		rep = second_profile_partition(st.star(4), [0])

		assert rep.count == 0
		assert rep.classes == []
		assert rep['s'] == 1

	def test_consistent_on_random_graphs(self):
		for seed in range(10):
			g = st.random_graph(14, 0.2, seed)
			rep = second_profile_partition(g, [0, 4, 9])

			assert rep['consistent'] is True
			assert rep['pi2'] <= rep['s'] * rep['t']


class TestClosedForms(object):
	@pytest.mark.parametrize('size, gamma, exp', [
		(2, 0, 4),
		(5, 0, 21),
		(3, 1, 14),
	])
	def test_surface(self, size, gamma, exp):
		assert surface_bound(size, gamma) == exp

	def test_surface_second(self):
		assert surface_second_bound(2, 0) == 4
		assert surface_second_bound(3, 0) == 72
		assert surface_second_bound(2, 1) == (60 + 125 + 68) * 2 - 120 - 250 - 132

	@pytest.mark.parametrize('size, k, exp', [
		(4, 1, 8),
		(0, 1, 1),
		(2, 3, 4),
		(5, 2, 13),
	])
	def test_treewidth(self, size, k, exp):
		assert treewidth_bound(size, k) == exp

	@pytest.mark.parametrize('size, d, exp', [
		(2, 3, 4),
		(5, 2, 16),
		(3, 0, 4),
	])
	def test_degen(self, size, d, exp):
		assert degen_bound(size, d) == exp


class TestCheckBound(object):
	def test_tree(self):
		G = nx.balanced_tree(2, 3)

		res = check_bound(G, [0, 3, 5, 9], 1, 'treewidth')

		assert res.bound == BoundEnum.TREEWIDTH
		assert res.params['k'] == 1
		assert res.rhs == 8
		assert res.holds is True
		assert res.radius == 1

	def test_surface_on_grid(self):
		G = st.grid(4, 4)

		res = check_bound(G, [5, 6, 9, 10], 1, 'surface', {'gamma': 0})

		assert res.rhs == 15
		assert res.holds is True

	def test_surface_needs_two_anchors(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			check_bound(st.grid(3, 3), [4], 1, 'surface', {'gamma': 0})

		assert exc_info.value.code == 'twinreduce.diversity.anchor_too_small'

	def test_surface_needs_gamma(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			check_bound(st.grid(3, 3), [0, 4], 1, 'surface')

		assert exc_info.value.code == 'twinreduce.diversity.missing_param'
		assert exc_info.value.details['param'] == 'gamma'

	def test_planarity_checked(self):
		with pytest.raises(TwinReduceGraphError) as exc_info:
			check_bound(st.complete(5), [0, 1], 1, 'surface', {'gamma': 0})

		assert exc_info.value.code == 'twinreduce.diversity.not_planar'

	def test_non_planar_with_genus(self):
		res = check_bound(st.complete(5), [0, 1], 1, 'surface', {'gamma': 1})

		assert res.holds is True

	def test_degen_needs_d(self):
		with pytest.raises(TwinReduceValidationError):
			check_bound(st.cycle(5), [0, 2], 1, 'degen')

	def test_col(self):
		res = check_bound(st.cycle(6), [0, 2, 4], 1, 'col')

		assert res.params['c'] >= 3
		assert res.holds is True

	def test_nu2_with_t(self):
		G = st.grid(4, 4)

		res = check_bound(G, [0, 5], 2, 'nu2', {'t': 4})

		assert res.radius == 2
		assert res.rhs == len(neighbourhood_classes(G, [0, 5])) * 4
		assert res.holds is True

	@pytest.mark.parametrize('bound', ['surface_second', 'surface_nu2', 'nu2'])
	def test_planar_second(self, bound):
		G = st.grid(5, 5)

		res = check_bound(G, [0, 6, 12, 18], 2, bound, {'gamma': 0})

		assert res.holds is True

	@pytest.mark.parametrize('r', [1, 2, 3])
	def test_trivial(self, r):
		res = check_bound(st.grid(3, 4), [0, 1, 2], r, 'trivial')

		assert res.rhs == (r + 1) ** 3
		assert res.radius == r
		assert res.holds is True

	def test_unknown(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			check_bound(st.path(4), [0], 1, 'vc-dimension')

		assert exc_info.value.code == 'twinreduce.diversity.unknown_bound'


class TestShallowMinor(object):
	def test_no_y(self):
		G = nx.empty_graph(3)

		w = shallow_minor_witness(G, [0, 1, 2])

		assert w.H_edges == []
		assert w.lhs == 0
		assert w.holds is True

	def test_one_edge(self):
		G = nx.Graph([(0, 2), (1, 2)])

		w = shallow_minor_witness(G, [0, 1])

		assert w.H_edges == [[0, 1]]
		assert w.A == [2]
		assert w.lhs == 1
		assert w.branch_sets == {0: [0, 2], 1: [1]}

	def test_star_of_pairs(self):
		X = [0, 1, 2, 3]
		G = nx.Graph()
		G.add_nodes_from(X)
		y = 10
		for a, b in itertools.combinations(X, 2):
			G.add_edges_from([(y, a), (y, b)])
			y += 1

		w = shallow_minor_witness(G, X)

		assert len(w.H_edges) == 6
		assert len(w.A) == 6
		assert w.lhs == 6
		assert w.rhs == 1 + 4 + 6

	def test_degree_three(self):
		G = nx.Graph([(3, 0), (3, 1), (3, 2), (4, 0), (4, 1)])

		w = shallow_minor_witness(G, [0, 1, 2])

		assert w.H_edges == [[0, 1], [0, 2]]
		assert w.A == [3, 4]
		assert w.lhs == 2
		assert w.rhs == 6

	def test_duplicate_neighbourhoods(self):
		G = nx.Graph([(3, 0), (3, 1), (4, 0), (4, 1), (5, 0)])
		G.add_node(2)

		w = shallow_minor_witness(G, [0, 1, 2])

		assert w.lhs == 2
		assert w.A == [3]
		assert w.H_edges == [[0, 1]]
		assert w.rhs == 1 + 3 + 1

	def test_branch_sets(self):
		for seed in range(5):
			G = nx.bipartite.random_graph(5, 12, 0.4, seed=seed)
			X = [v for v, d in G.nodes(data=True) if d['bipartite'] == 0]

			w = shallow_minor_witness(G, X, t=5)
			used = []
			for x, members in w.branch_sets.items():
				used.extend(members)
				for v in members:
					assert v == x or G.has_edge(v, x)

			assert len(used) == len(set(used))
			assert len(w.H_edges) == len(w.A)

	def test_not_bipartite(self):
		with pytest.raises(TwinReduceGraphError) as exc_info:
			shallow_minor_witness(st.cycle(3), [0])

		assert exc_info.value.code == 'twinreduce.diversity.not_bipartite'

	def test_small_t(self):
		with pytest.raises(TwinReduceValidationError):
			shallow_minor_witness(nx.empty_graph(2), [0], t=2)
