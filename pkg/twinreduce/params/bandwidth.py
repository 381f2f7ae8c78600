# -*- coding: utf-8 -*-

"""
Bandwidth: exact branch and bound for small graphs, level-ordering
heuristics for everything else.

The exact search places vertices left to right. Once a vertex sits at
position ``i`` every unplaced neighbour has the deadline ``i + k``; deadlines
are checked with a Hall-type counting argument, which also forces the next
vertex when some deadline is tight. Failed states (placed set plus the
deadline-carrying tail of the layout) are remembered.
"""

import logging
from collections import deque

import networkx as nx
from networkx.utils import cuthill_mckee_ordering
from networkx.utils import reverse_cuthill_mckee_ordering

from twinreduce._internals import index_graph
from twinreduce._internals import iter_bits
from twinreduce._internals import popcount
from twinreduce._internals import sorted_nodes

from .basic import StateCounter
from .basic import ball_lower_bound
from .basic import check_size
from .basic import clique_number
from .basic import ordering_bandwidth
from .basic import resolve_settings
from .basic import result
from .basic import validate_ordering

log = logging.getLogger(__name__)


def _level_orderings(G):
	yield list(cuthill_mckee_ordering(G))
	yield list(reverse_cuthill_mckee_ordering(G))

	starts = sorted_nodes(G)
	pos = {v: i for i, v in enumerate(starts)}
	comps = [sorted(c, key=pos.get) for c in nx.connected_components(G)]
	comps.sort(key=lambda c: pos[c[0]])
	if len(starts) > 64:
		starts = starts[:64]
	for s in starts:
		order = []
		seen = set()
		for c in comps:
			root = s if s in c else c[0]
			queue = deque([root])
			seen.add(root)
			while queue:
				v = queue.popleft()
				order.append(v)
				nbrs = sorted(
					(u for u in G.neighbors(v) if u not in seen and u != v),
					key=lambda u: (G.degree(u), repr(u)),
				)
				for u in nbrs:
					seen.add(u)
					queue.append(u)
		yield order


def bandwidth_heuristic(G, seed_witness=None):
	"""
	Upper bound on bandwidth: the best of Cuthill-McKee orderings and
	breadth-first level orderings from every vertex (and ``seed_witness``,
	when supplied).

	:param G: graph
	:type G: networkx.Graph
	:param seed_witness: an ordering of all nodes to compare with
	:type seed_witness: list, optional
	:rtype: ~twinreduce.models.ParamResult
	"""
	best = None
	best_order = []
	candidates = list(_level_orderings(G)) if G.number_of_nodes() else [[]]
	if seed_witness is not None:
		candidates.append(validate_ordering(G, seed_witness))

	for order in candidates:
		w = ordering_bandwidth(G, order)
		if best is None or w < best:
			best, best_order = w, order

	return result('bw', best, list(best_order), exact=False)


def bandwidth_lower_bound(G):
	return max(ball_lower_bound(G), clique_number(G) - 1, 0)


class _Layout(object):
	"""
	Decision search ``bw <= k`` on one connected component
	"""

	def __init__(self, adj, comp, k, counter):
		self.adj = adj
		self.comp = comp
		self.k = k
		self.counter = counter
		self.failed = set()
		self.order = []

	def pending(self, v, placed):
		return self.adj[v] & self.comp & ~placed

	def run(self):
		return self._place()

	def _key(self, placed):
		tail = self.order[-self.k:] if self.k else []
		return placed, tuple(
			v if self.pending(v, placed) else -1 for v in tail
		)

	def _candidates(self, placed):
		p = len(self.order)
		free = self.comp & ~placed
		# deadlines of the tail, oldest first
		tail = self.order[-self.k:] if self.k else []
		start = p - len(tail)
		union = 0
		forced = None
		for i, v in enumerate(tail):
			pend = self.pending(v, placed)
			if not pend:
				continue
			deadline = start + i + self.k
			union |= pend
			room = deadline - p + 1
			cnt = popcount(union)
			if cnt > room:
				return 0
			if cnt == room and forced is None:
				forced = union
		if forced is not None:
			return forced
		return free

	def _place(self):
		placed = 0
		for v in self.order:
			placed |= 1 << v
		if placed == self.comp:
			return True

		key = self._key(placed)
		if key in self.failed:
			return False
		self.counter.tick()

		cand = self._candidates(placed)
		for v in iter_bits(cand):
			self.order.append(v)
			# the vertex leaving the window must be complete
			if len(self.order) > self.k:
				old = self.order[-self.k - 1]
				if self.pending(old, placed | (1 << v)):
					self.order.pop()
					continue
			if self._place():
				return True
			self.order.pop()

		self.failed.add(key)
		return False


def bandwidth_exact(G, cap=None, max_n=None, budget=None, settings=None):
	"""
	Exact bandwidth with an optimal ordering.

	Components are solved separately, each downward from its heuristic
	incumbent until the decision search fails.

	:param G: graph
	:type G: networkx.Graph
	:param cap: stop as soon as ``bw > cap`` is proven; the result then has \
		``exceeds_cap`` set, ``value`` :data:`None` and ``lower_bound`` \
		``cap + 1``
	:type cap: int, optional
	:param max_n: size cap for a component, defaults to settings
	:type max_n: int, optional
	:param budget: search-state budget, defaults to settings
	:type budget: int, optional
	:rtype: ~twinreduce.models.ParamResult
	:raises ~twinreduce.errors.TwinReduceSizeError: when a component is \
		larger than ``max_n`` or the budget is exhausted
	"""
	st = resolve_settings(settings)
	max_n = st.bandwidth_max_n if max_n is None else max_n
	budget = st.state_budget if budget is None else budget

	nodes, index, adj = index_graph(G)
	comps = sorted(nx.connected_components(G), key=lambda c: min(index[v] for v in c))
	for c in comps:
		check_size('bw', len(c), max_n)

	counter = StateCounter('bw', budget)
	total = 0
	order = []
	lower = 0
	for c in comps:
		sub = G.subgraph(c)
		heur = bandwidth_heuristic(sub)
		lb = bandwidth_lower_bound(sub)
		lower = max(lower, lb)
		best, best_order = heur.value, heur.witness

		if cap is not None and lb > cap:
			return _exceeds(cap, counter)

		comp = 0
		for v in c:
			comp |= 1 << index[v]

		k = best - 1
		if cap is not None and best > cap:
			k = cap
		while k >= lb:
			search = _Layout(adj, comp, k, counter)
			if not search.run():
				break
			best_order = [nodes[v] for v in search.order]
			best = ordering_bandwidth(sub, best_order)
			k = best - 1

		if cap is not None and best > cap:
			return _exceeds(cap, counter)

		log.debug('bw component of %s vertices: %s (lb %s)', len(c), best, lb)
		total = max(total, best)
		order.extend(best_order)

	return result(
		'bw', total, order,
		lower_bound=max(lower, total),
		states_explored=counter.count,
	)


def _exceeds(cap, counter):
	return result(
		'bw', None, None,
		exceeds_cap=True,
		lower_bound=cap + 1,
		states_explored=counter.count,
	)
