# -*- coding: utf-8 -*-

import itertools

import pytest

import networkx as nx

from .errors import TwinReduceGraphError
from .errors import TwinReduceSizeError
from .errors import TwinReduceValidationError
from .enums import ParamEnum

from .core import Trigraph
from .core import sequence_width
from .params import max_degree

from .oracle import reduced_f_exact
from .oracle import reduced_f_upper_greedy
from .oracle import is_cograph

from . import self_test as st


class TestReducedExact(object):
	def test_k1(self):
		r = reduced_f_exact(nx.complete_graph(1))

		assert r.value == 0
		assert r.exact is True
		assert r.param == ParamEnum.MAXDEG
		assert len(r.optimal_sequence) == 0

	def test_empty_graph(self):
		r = reduced_f_exact(nx.Graph())

		assert r.value == 0
		assert r.states_explored == 0

	@pytest.mark.parametrize('G, exp', [
		(st.path(4), 1),
		(st.cycle(4), 0),
		(st.cycle(5), 2),
		(st.complete(5), 0),
		(st.star(4), 0),
	])
	def test_twin_width(self, G, exp):
		r = reduced_f_exact(G, 'maxdeg')

		assert r.value == exp
		assert r.strategy == 'exact'

	@pytest.mark.parametrize('G', [
		st.path(4),
		st.path(6),
		st.cycle(5),
		st.grid(2, 3),
		nx.bull_graph(),
	])
	@pytest.mark.parametrize('param', ['maxdeg', 'bw', 'star'])
	def test_witness_replays_to_value(self, G, param):
		r = reduced_f_exact(G, param)
		S = r.optimal_sequence

		assert not S.partial
		assert len(S) == G.number_of_nodes() - 1

		f = {
			'maxdeg': max_degree,
			'bw': lambda g: st.bandwidth_bruteforce(g),
			'star': lambda g: max([len(c) for c in nx.connected_components(g)] or [0]),
		}[param]
		assert sequence_width(S, f) == r.value

	def test_base_red_edges_count(self):
		# red P3: the base itself has red degree 2
		T = Trigraph(3, red=[(0, 1), (1, 2)])

		r = reduced_f_exact(T, 'maxdeg')

		assert r.value == 2

	def test_callable_param(self):
		r = reduced_f_exact(st.complete(4), lambda g: g.number_of_edges())

		assert r.value == 0
		assert r.param is None

	def test_unknown_param(self):
		with pytest.raises(TwinReduceValidationError) as exc_info:
			reduced_f_exact(st.path(3), 'clique-width')

		assert exc_info.value.code == 'twinreduce.params.unknown'

	def test_size_cap(self):
		with pytest.raises(TwinReduceSizeError) as exc_info:
			reduced_f_exact(st.path(6), max_n=5)

		assert exc_info.value.code == 'twinreduce.params.too_large'
		assert exc_info.value.details['actual'] == 6

	def test_base_must_be_fresh(self):
		T = Trigraph(3, black=[(0, 1)])
		T.merge(0, 1)

		with pytest.raises(TwinReduceValidationError) as exc_info:
			reduced_f_exact(T)

		assert exc_info.value.code == 'twinreduce.oracle.invalid_base'

	def test_memo_budget_falls_back_to_greedy(self):
		r = reduced_f_exact(st.cycle(5), 'maxdeg', memo_budget=0)

		assert r.exact is False
		assert r.value >= 2
		assert r.strategy in ('greedy', 'twins')
		assert sequence_width(r.optimal_sequence, max_degree) == r.value


class TestReducedInvariants(object):
	def test_cograph_iff_zero(self):
		for g in st.small_graphs(5):
			r = reduced_f_exact(g, 'maxdeg')
			assert (r.value == 0) == is_cograph(g), sorted(g.edges())

	@pytest.mark.slow
	def test_cograph_iff_zero_up_to_six(self):
		for g in st.small_graphs(6, connected=True):
			r = reduced_f_exact(g, 'maxdeg')
			assert (r.value == 0) == is_cograph(g), sorted(g.edges())

	def test_oracle_below_greedy(self):
		for g in st.small_graphs(5):
			exact = reduced_f_exact(g, 'maxdeg')
			upper = reduced_f_upper_greedy(g, 'maxdeg')
			assert exact.value <= upper.value

	@pytest.mark.parametrize('param', ['maxdeg', 'bw'])
	def test_complement(self, param):
		for g in st.small_graphs(5):
			a = reduced_f_exact(g, param).value
			b = reduced_f_exact(nx.complement(g), param).value
			assert a == b, sorted(g.edges())

	@pytest.mark.parametrize('param', ['maxdeg', 'bw'])
	def test_padding(self, param):
		for g in [st.path(4), st.cycle(5), st.grid(2, 3), nx.bull_graph()]:
			padded = g.copy()
			padded.add_nodes_from([100, 101])

			assert reduced_f_exact(padded, param).value == reduced_f_exact(g, param).value

	def test_hereditary(self):
		g = nx.Graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
		full = reduced_f_exact(g, 'bw').value

		for k in (4, 5):
			for keep in itertools.combinations(range(6), k):
				sub = nx.convert_node_labels_to_integers(g.subgraph(keep))
				assert reduced_f_exact(sub, 'bw').value <= full


class TestGreedy(object):
	@pytest.mark.parametrize('n', [2, 4, 6])
	def test_complete(self, n):
		r = reduced_f_upper_greedy(st.complete(n), 'maxdeg')

		assert r.value == 0
		assert r.exact is False

	def test_twins_on_cograph(self):
		g = nx.complete_multipartite_graph(2, 2, 3)

		r = reduced_f_upper_greedy(g, 'maxdeg', strategies='twins')

		assert r.value == 0
		assert r.strategy == 'twins'

	def test_leaf_merge_on_tree(self):
		g = nx.balanced_tree(2, 2)

		r = reduced_f_upper_greedy(g, 'maxdeg', strategies=['leaf-merge'])
		S = r.optimal_sequence

		assert r.strategy == 'leaf-merge'
		assert not S.partial
		assert sequence_width(S, max_degree) == r.value
		assert r.value >= reduced_f_exact(g, 'maxdeg').value

	def test_leaf_merge_skipped(self):
		r = reduced_f_upper_greedy(st.cycle(5), 'maxdeg', strategies='leaf-merge,greedy')

		assert r.strategy == 'greedy'

	def test_leaf_merge_only_on_cycle(self):
		with pytest.raises(TwinReduceGraphError) as exc_info:
			reduced_f_upper_greedy(st.cycle(5), 'maxdeg', strategies='leaf-merge')

		assert exc_info.value.code == 'twinreduce.oracle.no_strategy'

	def test_unknown_strategy(self):
		with pytest.raises(ValueError):
			reduced_f_upper_greedy(st.path(3), 'maxdeg', strategies='annealing')


class TestCograph(object):
	@pytest.mark.parametrize('G, exp', [
		(st.path(3), True),
		(st.path(4), False),
		(st.cycle(4), True),
		(st.cycle(5), False),
		(st.star(3), True),
		(st.complete(5), True),
		(nx.Graph(), True),
		(nx.bull_graph(), False),
	])
	def test_is_cograph(self, G, exp):
		assert is_cograph(G) is exp

	def test_closed_under_complement(self):
		for g in st.small_graphs(5):
			assert is_cograph(g) == is_cograph(nx.complement(g))
