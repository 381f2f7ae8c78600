# -*- coding: utf-8 -*-

import itertools

import pytest

import networkx as nx

from ..errors import TwinReduceMergeError
from ..errors import TwinReducePartitionError
from ..errors import TwinReduceValidationError

from .trigraph import Trigraph
from .sequence import ReductionSequence
from .sequence import canonical_partition
from .sequence import trigraph_of_partition
from .sequence import replay
from .sequence import partitions
from .sequence import sequence_profile
from .sequence import sequence_width
from .sequence import witness_bandwidth
from .sequence import restrict_sequence


def maxdeg(g):
	return max([d for _, d in g.degree()] or [0])


def all_sequences(n):
	"""
	Every full sequence of an ``n``-vertex trigraph (ids allocated from ``n``)
	"""
	def rec(live, nxt, acc):
		if len(live) <= 1:
			yield list(acc)
			return
		for u, v in itertools.combinations(sorted(live), 2):
			acc.append((u, v, nxt))
			for s in rec((live - {u, v}) | {nxt}, nxt + 1, acc):
				yield s
			acc.pop()

	for s in rec(set(range(n)), n, []):
		yield s


class TestPartition(object):
	def test_canonical(self):
		assert canonical_partition([[3, 1], [0], [2]]) == ((0,), (1, 3), (2,))

	def test_singletons(self):
		G0 = Trigraph(3, black=[(0, 1), (1, 2)])
		T = trigraph_of_partition(G0, [[0], [1], [2]])

		assert T.black_edges() == [(0, 1), (1, 2)]
		assert T.red_edges() == []

	def test_c4_complete_bipartite(self):
		G0 = Trigraph.from_graph(nx.cycle_graph(4))
		T = trigraph_of_partition(G0, [[0, 2], [1, 3]])

		assert T.black_edges() == [(0, 1)]
		assert T.red_edges() == []

	def test_p4_gives_red(self):
		G0 = Trigraph.from_graph(nx.path_graph(4))
		T = trigraph_of_partition(G0, [[0, 1], [2, 3]])

		assert T.black_edges() == []
		assert T.red_edges() == [(0, 1)]

	@pytest.mark.parametrize('parts', [
		[[0, 1], [1, 2]],
		[[0], [1]],
		[[0], [1], [2], [3]],
		[[0, 1, 2], []],
	])
	def test_not_a_partition(self, parts):
		G0 = Trigraph(3)

		with pytest.raises(TwinReducePartitionError):
			trigraph_of_partition(G0, parts)


class TestReplay(object):
	def test_k1_empty(self):
		S = ReductionSequence(Trigraph(1))
		res = list(replay(S))

		assert len(res) == 1
		assert not S.partial

	def test_length_and_final(self):
		S = ReductionSequence(Trigraph.from_graph(nx.path_graph(4)), [(0, 1), (4, 2), (5, 3)])
		res = list(replay(S))

		assert len(res) == 4
		assert res[-1].n == 1
		assert S.merges == ((0, 1, 4), (4, 2, 5), (5, 3, 6))
		assert not S.partial

	def test_partial(self):
		S = ReductionSequence(Trigraph(3), [(0, 1)])

		assert S.partial

	def test_dead_vertex(self):
		with pytest.raises(TwinReduceMergeError) as exc_info:
			ReductionSequence(Trigraph(3), [(0, 1), (0, 2)])

		assert exc_info.value.details['step'] == 2

	def test_streaming_mutates_one_object(self):
		S = ReductionSequence(Trigraph(3), [(0, 1), (2, 3)])
		seen = [id(T) for T in replay(S, snapshot=False)]

		assert len(set(seen)) == 1

	def test_dict(self):
		S = ReductionSequence(Trigraph(3, black=[(0, 1)]), [(0, 1), (2, 3)], {0: [0, 1, 2]})
		data = S.to_dict()

		assert data['merges'] == [[0, 1, 3], [2, 3, 4]]
		assert data['witnesses'] == {'0': [0, 1, 2]}

		S2 = ReductionSequence.from_dict(data)
		assert S2.merges == S.merges
		assert S2.witnesses == {0: [0, 1, 2]}

	def test_dict_without_base(self):
		with pytest.raises(TwinReduceValidationError):
			ReductionSequence.from_dict({'merges': []})

	def test_partition_correspondence_on_p4(self):
		G0 = Trigraph.from_graph(nx.path_graph(4))
		count = 0
		for merges in all_sequences(4):
			S = ReductionSequence(G0, merges)
			for T, P in zip(replay(S), partitions(S)):
				assert T.labelled_form() == trigraph_of_partition(G0, P).labelled_form()
				count += 1

		# 18 full sequences of 4 vertices, 4 trigraphs each
		assert count == 18 * 4

	def test_partition_correspondence_with_red_base(self):
		G0 = Trigraph(4, black=[(0, 1), (2, 3)], red=[(1, 2)])
		for merges in all_sequences(4):
			S = ReductionSequence(G0, merges)
			for T, P in zip(replay(S), partitions(S)):
				assert T.labelled_form() == trigraph_of_partition(G0, P).labelled_form()


class TestWidth(object):
	def test_twins_on_complete_graph(self):
		S = ReductionSequence(Trigraph.from_graph(nx.complete_graph(5)), [(0, 1), (2, 5), (3, 6), (4, 7)])

		assert sequence_width(S, maxdeg) == 0

	def test_p4_by_hand(self):
		# a,b then (ab),c then the rest
		S = ReductionSequence(Trigraph.from_graph(nx.path_graph(4)), [(0, 1), (4, 2), (5, 3)])

		assert sequence_profile(S, maxdeg) == [0, 1, 1, 0]
		assert sequence_width(S, maxdeg) == 1

	def test_param_result_values(self):
		class R(object):
			value = 3

		S = ReductionSequence(Trigraph(2), [(0, 1)])
		assert sequence_width(S, lambda g: R()) == 3


class TestWitnessBandwidth(object):
	def test_values(self):
		S = ReductionSequence(
			Trigraph.from_graph(nx.path_graph(4)),
			[(0, 1), (4, 2), (5, 3)],
			{1: [4, 2, 3], 2: [5, 3]},
		)

		assert witness_bandwidth(S) == [0, 1, 1, 0]

	def test_missing_witness(self):
		S = ReductionSequence(Trigraph.from_graph(nx.path_graph(4)), [(0, 1)])

		with pytest.raises(TwinReduceValidationError) as exc_info:
			witness_bandwidth(S)

		assert exc_info.value.code == 'twinreduce.sequence.missing_witness'

	def test_incomplete_witness(self):
		S = ReductionSequence(Trigraph.from_graph(nx.path_graph(4)), [(0, 1)], {1: [4, 3]})

		with pytest.raises(TwinReduceValidationError):
			witness_bandwidth(S)


class TestRestrict(object):
	def test_drops_virtual_merges(self):
		# 0-1 real path, 2 and 3 isolated virtual vertices
		base = Trigraph(4, black=[(0, 1)])
		S = ReductionSequence(base, [(2, 3), (0, 4), (1, 5)])
		R, index = restrict_sequence(S, [0, 1])

		assert index == {0: 0, 1: 1}
		assert R.merges == ((1, 0, 2),)
		assert not R.partial

	def test_red_only_shrinks(self):
		G0 = Trigraph.from_graph(nx.path_graph(5))
		keep = [0, 2, 3]
		for merges in itertools.islice(all_sequences(5), 0, 400, 7):
			S = ReductionSequence(G0, merges)
			R, _ = restrict_sequence(S, keep)
			assert sequence_width(R, maxdeg) <= sequence_width(S, maxdeg)

	def test_projects_witnesses(self):
		base = Trigraph(3, black=[(0, 1)])
		S = ReductionSequence(base, [(1, 2), (0, 3)], {0: [0, 1, 2], 1: [0, 3], 2: [4]})
		R, _ = restrict_sequence(S, [0, 1])

		assert R.merges == ((0, 1, 2),)
		assert R.witnesses == {0: [0, 1], 1: [2]}

	def test_unknown_vertex(self):
		S = ReductionSequence(Trigraph(2))

		with pytest.raises(TwinReduceValidationError):
			restrict_sequence(S, [5])
