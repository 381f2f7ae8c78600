# -*- coding: utf-8 -*-

"""
Cheap parameters and shared helpers of the evaluators: maximum degree,
component size, degeneracy, clique counts, ordering checks and lower bounds.
"""

import logging

import networkx as nx

from ..errors import TwinReduceSizeError
from ..errors import TwinReduceValidationError
from ..models import ParamResult

from twinreduce._internals import index_graph
from twinreduce._internals import iter_bits
from twinreduce._internals import popcount
from twinreduce._internals.settings import Settings

log = logging.getLogger(__name__)


def result(name, value, witness=None, exact=True, **extra):
	r = ParamResult()
	r.name = name
	r.value = value
	r.exact = exact
	r.witness = witness
	r.exceeds_cap = extra.pop('exceeds_cap', False)
	for k, v in extra.items():
		r[k] = v
	return r


def resolve_settings(settings=None):
	if settings is None:
		return Settings.from_env()
	return settings


def check_size(name, actual, limit):
	"""
	:raises ~twinreduce.errors.TwinReduceSizeError: if ``actual > limit``
	"""
	if actual > limit:
		err = TwinReduceSizeError(
			'{} refuses {} vertices (limit is {})'.format(name, actual, limit),
			code='twinreduce.params.too_large',
			details={'limit': limit, 'actual': actual, 'param': name},
		)
		log.warning(err)
		raise err


class StateCounter(object):
	"""
	Counts search states against a budget

	:raises ~twinreduce.errors.TwinReduceSizeError: from :meth:`tick`, once \
		the budget is exhausted
	"""

	def __init__(self, name, budget):
		self.name = name
		self.budget = budget
		self.count = 0

	def tick(self):
		self.count += 1
		if self.count > self.budget:
			err = TwinReduceSizeError(
				'{} exhausted its budget of {} states'.format(self.name, self.budget),
				code='twinreduce.params.budget',
				details={'limit': self.budget, 'actual': self.count, 'param': self.name},
			)
			log.warning(err)
			raise err


# ----------------------------------------------------------------------------
# simple parameters

def max_degree(G):
	"""
	:rtype: int
	"""
	return max([d for _, d in G.degree()] or [0])


def max_component_size(G):
	"""
	Maximum number of vertices in a connected component (``0`` for the empty
	graph)

	:rtype: int
	"""
	return max([len(c) for c in nx.connected_components(G)] or [0])


def degeneracy(G):
	"""
	Degeneracy: the least ``d`` such that every subgraph has a vertex of degree
	at most ``d``. The witness is the peeling order (repeatedly removed
	vertex of minimum degree, smallest node first on ties). The order itself is
	part of the output, which ``networkx.core_number`` does not report.

	:rtype: ~twinreduce.models.ParamResult
	"""
	nodes, _, adj = index_graph(G)
	order = _peel(adj)
	value = 0
	alive = (1 << len(nodes)) - 1
	for v in order:
		value = max(value, popcount(adj[v] & alive))
		alive &= ~(1 << v)
	return result('degeneracy', value, [nodes[v] for v in order])


def _peel(adj):
	alive = (1 << len(adj)) - 1
	order = []
	while alive:
		best = None
		bd = None
		for v in iter_bits(alive):
			d = popcount(adj[v] & alive)
			if bd is None or d < bd:
				best, bd = v, d
		order.append(best)
		alive &= ~(1 << best)
	return order


def clique_counts(G, kmax=None):
	"""
	Numbers of cliques of every order: ``res[k]`` is the number of ``k``-vertex
	cliques (``res[0] == 1``).

	Cliques are enumerated once each, from their first vertex in a degeneracy
	ordering, so only later neighbours are extended. The ordering is the same
	peel :func:`degeneracy` returns as its witness.

	:param kmax: last order to report, defaults to the clique number
	:type kmax: int, optional
	:rtype: list(int)
	"""
	nodes, _, adj = index_graph(G)
	order = _peel(adj)
	rank = {v: i for i, v in enumerate(order)}
	later = [0] * len(nodes)
	for v in range(len(nodes)):
		for u in iter_bits(adj[v]):
			if rank[u] > rank[v]:
				later[v] |= 1 << u

	counts = [1]

	def bump(k):
		while len(counts) <= k:
			counts.append(0)
		counts[k] += 1

	def extend(size, cand):
		bump(size)
		if kmax is not None and size >= kmax:
			return
		for u in iter_bits(cand):
			extend(size + 1, cand & later[u])

	for v in range(len(nodes)):
		extend(1, later[v])

	if kmax is not None:
		counts = (counts + [0] * (kmax + 1))[:kmax + 1]
	return counts


def clique_number(G):
	if G.number_of_nodes() == 0:
		return 0
	return max(len(c) for c in nx.find_cliques(G))


# ----------------------------------------------------------------------------
# orderings

def validate_ordering(G, ordering):
	"""
	:raises ~twinreduce.errors.TwinReduceValidationError: if ``ordering`` is \
		not a permutation of the nodes of ``G``
	"""
	ordering = list(ordering)
	if len(ordering) != G.number_of_nodes() or set(ordering) != set(G.nodes()):
		raise TwinReduceValidationError(
			'ordering is not a permutation of the vertex set',
			code='twinreduce.params.invalid_ordering',
			details={'size': len(ordering), 'n': G.number_of_nodes()},
		)
	return ordering


def ordering_bandwidth(G, ordering):
	"""
	``max |pos(u) - pos(v)|`` over the edges of ``G``

	:rtype: int
	"""
	pos = {v: i for i, v in enumerate(validate_ordering(G, ordering))}
	return max([abs(pos[u] - pos[v]) for u, v in G.edges() if u != v] or [0])


def ball_lower_bound(G):
	"""
	Lower bound on bandwidth: a vertex with ``m`` vertices at distance
	``1..d`` needs ``m`` positions within distance ``d*bw`` on both sides, so
	``bw >= ceil(m / 2d)``. On connected graphs ``bw >= ceil((n-1)/diam)``
	too.

	:rtype: int
	"""
	lb = 0
	for comp in nx.connected_components(G):
		if len(comp) <= 1:
			continue
		sub = G.subgraph(comp)
		diam = 0
		for v in sub.nodes():
			dist = nx.single_source_shortest_path_length(sub, v)
			layers = {}
			for d in dist.values():
				layers[d] = layers.get(d, 0) + 1
			diam = max(diam, max(layers))
			inside = 0
			for d in range(1, max(layers) + 1):
				inside += layers.get(d, 0)
				lb = max(lb, -(-inside // (2 * d)))
		lb = max(lb, -(-(len(comp) - 1) // diam))
	return lb
