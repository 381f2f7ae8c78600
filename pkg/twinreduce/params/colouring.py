# -*- coding: utf-8 -*-

"""
Strong colouring numbers.

For an ordering of ``V(G)`` the strong ``s``-reach of ``v`` is ``v`` itself
plus every earlier vertex ``u`` joined to ``v`` by a path of length at most
``s`` whose internal vertices all come after ``v``. ``col_s(G)`` minimises
the largest reach over all orderings.

The reach of ``v`` only depends on the *set* ``R`` of vertices placed after
``v``, not on their order: the paths go through ``R`` and end in
``V(G) - R - {v}``. So orderings can be built right to left, and a failed
suffix set never has to be explored twice.
"""

import logging

from ..errors import TwinReduceValidationError

from twinreduce._internals import index_graph
from twinreduce._internals import iter_bits
from twinreduce._internals import popcount

from .basic import StateCounter
from .basic import check_size
from .basic import degeneracy
from .basic import resolve_settings
from .basic import result
from .basic import validate_ordering

log = logging.getLogger(__name__)


def _reach(adj, R, v, s):
	"""
	Strong ``s``-reach of ``v`` when ``R`` is the set after ``v`` (bitset,
	``v`` included)
	"""
	res = 1 << v
	seen = 1 << v
	frontier = 1 << v
	for _ in range(s):
		nxt = 0
		for x in iter_bits(frontier):
			nxt |= adj[x]
		nxt &= ~seen
		res |= nxt & ~R
		frontier = nxt & R
		seen |= nxt
		if not frontier:
			break
	return res


def _check_s(s):
	if s < 1:
		raise TwinReduceValidationError(
			's must be at least 1, got {}'.format(s),
			code='twinreduce.params.invalid_s',
			details={'s': s},
		)


def strong_reach(G, ordering, s):
	"""
	Strong ``s``-reach of every vertex under ``ordering``

	:returns: ``{v: set of vertices}``, ``v`` included
	:rtype: dict
	"""
	_check_s(s)
	ordering = validate_ordering(G, ordering)
	nodes, index, adj = index_graph(G, ordering)
	res = {}
	R = 0
	for i in range(len(nodes) - 1, -1, -1):
		res[nodes[i]] = set(nodes[u] for u in iter_bits(_reach(adj, R, i, s)))
		R |= 1 << i
	return res


def ordering_col(G, ordering, s):
	"""
	Largest strong ``s``-reach under ``ordering``

	:rtype: int
	"""
	return max([len(r) for r in strong_reach(G, ordering, s).values()] or [0])


def _greedy(adj, n, s):
	full = (1 << n) - 1
	R = 0
	rev = []
	width = 0
	while R != full:
		best = None
		for v in iter_bits(full & ~R):
			c = popcount(_reach(adj, R, v, s))
			if best is None or c < best[0]:
				best = (c, v)
		width = max(width, best[0])
		R |= 1 << best[1]
		rev.append(best[1])
	return width, rev[::-1]


def col_s_greedy(G, s):
	"""
	Upper bound on ``col_s``: build the ordering right to left, always placing
	the vertex with the smallest reach

	:rtype: ~twinreduce.models.ParamResult
	"""
	_check_s(s)
	nodes, _, adj = index_graph(G)
	width, order = _greedy(adj, len(nodes), s)
	return result('col', width, [nodes[v] for v in order], exact=False, s=s)


class _SuffixSearch(object):

	def __init__(self, adj, n, s, k, counter):
		self.adj = adj
		self.full = (1 << n) - 1
		self.s = s
		self.k = k
		self.counter = counter
		self.failed = set()
		self.rev = []

	def run(self):
		return self._extend(0)

	def _extend(self, R):
		if R == self.full:
			return True
		if R in self.failed:
			return False
		self.counter.tick()

		options = []
		for v in iter_bits(self.full & ~R):
			c = popcount(_reach(self.adj, R, v, self.s))
			if c <= self.k:
				options.append((c, v))
		for _, v in sorted(options):
			self.rev.append(v)
			if self._extend(R | (1 << v)):
				return True
			self.rev.pop()

		self.failed.add(R)
		return False


def col_s_exact(G, s, max_n=None, budget=None, settings=None):
	"""
	Exact ``col_s`` with an optimal ordering (left to right).

	:param G: graph
	:type G: networkx.Graph
	:param s: radius, at least 1
	:type s: int
	:rtype: ~twinreduce.models.ParamResult
	:raises ~twinreduce.errors.TwinReduceSizeError: when ``G`` is larger than \
		``max_n`` or the budget is exhausted
	"""
	_check_s(s)
	st = resolve_settings(settings)
	max_n = st.col_max_n if max_n is None else max_n
	budget = st.state_budget if budget is None else budget

	nodes, _, adj = index_graph(G)
	check_size('col', len(nodes), max_n)
	if not nodes:
		return result('col', 0, [], s=s)

	counter = StateCounter('col', budget)
	ub, best = _greedy(adj, len(nodes), s)
	lb = degeneracy(G).value + 1
	for k in range(lb, ub):
		search = _SuffixSearch(adj, len(nodes), s, k, counter)
		if search.run():
			ub, best = k, search.rev[::-1]
			break

	log.debug('col_%s of %s vertices: %s (lb %s)', s, len(nodes), ub, lb)
	return result('col', ub, [nodes[v] for v in best], s=s, states_explored=counter.count)
