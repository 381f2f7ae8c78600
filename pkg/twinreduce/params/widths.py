# -*- coding: utf-8 -*-

"""
Pathwidth and treewidth.

Both exact evaluators are decision searches over vertex subsets with a
memo of failed subsets, run per connected component and for increasing
``k`` from a lower bound:

- pathwidth as vertex separation number: grow a prefix ``S`` of a layout
  while the number of vertices of ``S`` with a neighbour outside ``S`` stays
  at most ``k``;
- treewidth over elimination prefixes: eliminating ``v`` after the set ``S``
  creates the bag ``{v} ∪ Q(S, v)``, where ``Q(S, v)`` are the vertices
  outside ``S`` reachable from ``v`` through ``S``.

Decompositions are returned as ``{'bags': [[...], ...], 'parent': [...]}``
with ``parent[i] == -1`` for the root.
"""

import logging

import networkx as nx

from ..errors import TwinReduceValidationError

from twinreduce._internals import index_graph
from twinreduce._internals import iter_bits
from twinreduce._internals import popcount

from .basic import StateCounter
from .basic import check_size
from .basic import degeneracy
from .basic import resolve_settings
from .basic import result

log = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# validation

def validate_tree_decomposition(G, bags, parent):
	"""
	Checks that ``(bags, parent)`` is a tree-decomposition of ``G``

	:returns: width (``max |bag| - 1``, ``0`` without bags)
	:rtype: int
	:raises ~twinreduce.errors.TwinReduceValidationError: naming the \
		violated condition
	"""
	def fail(msg, **details):
		raise TwinReduceValidationError(
			msg,
			code='twinreduce.params.invalid_decomposition',
			details=details,
		)

	if len(bags) != len(parent):
		fail('bags and parent differ in length')
	if G.number_of_nodes() and not bags:
		fail('no bags')

	roots = [i for i, p in enumerate(parent) if p == -1]
	if bags and len(roots) != 1:
		fail('the tree must have exactly one root', roots=roots)

	children = [[] for _ in bags]
	for i, p in enumerate(parent):
		if p == -1:
			continue
		if not 0 <= p < len(bags) or p == i:
			fail('invalid parent of bag {}'.format(i), bag=i)
		children[p].append(i)

	seen = set()
	stack = list(roots)
	while stack:
		i = stack.pop()
		seen.add(i)
		stack.extend(children[i])
	if len(seen) != len(bags):
		fail('parent pointers do not form a tree')

	sets = [set(b) for b in bags]
	where = {}
	for i, b in enumerate(sets):
		for v in b:
			if v not in G:
				fail('unknown vertex {!r} in bag {}'.format(v, i), bag=i)
			where.setdefault(v, set()).add(i)

	for v in G.nodes():
		if v not in where:
			fail('vertex {!r} is in no bag'.format(v))

	for u, v in G.edges():
		if u != v and not (where[u] & where[v]):
			fail('edge {!r}-{!r} is in no bag'.format(u, v))

	# the bags of every vertex form a subtree: exactly one of them has its
	# parent outside the set
	for v, idx in where.items():
		tops = [i for i in idx if parent[i] not in idx]
		if len(tops) != 1:
			fail('bags of vertex {!r} are not connected'.format(v))

	return max([len(b) - 1 for b in sets] or [0])


def validate_path_decomposition(G, bags):
	"""
	Same as :func:`validate_tree_decomposition` for bags forming a path

	:rtype: int
	"""
	parent = [i - 1 for i in range(len(bags))]
	return validate_tree_decomposition(G, bags, parent)


# ----------------------------------------------------------------------------
# lower and upper bounds

def _adjacency_sets(G):
	return {v: set(u for u in G.neighbors(v) if u != v) for v in G.nodes()}


def minor_min_width(G):
	"""
	Treewidth lower bound: repeatedly contract a minimum-degree vertex into
	the neighbour sharing the fewest neighbours with it; the largest minimum
	degree seen bounds the treewidth from below.

	:rtype: int
	"""
	adj = _adjacency_sets(G)
	rank = {v: i for i, v in enumerate(adj)}
	best = 0
	while adj:
		u = min(adj, key=lambda x: (len(adj[x]), rank[x]))
		best = max(best, len(adj[u]))
		nb = adj.pop(u)
		for x in nb:
			adj[x].discard(u)
		if nb:
			v = min(nb, key=lambda x: (len(adj[x] & nb), rank[x]))
			for x in nb:
				if x != v:
					adj[x].add(v)
					adj[v].add(x)
	return best


def treewidth_lower_bound(G):
	return max(minor_min_width(G), degeneracy(G).value)


def min_fill_ordering(G):
	"""
	Elimination ordering by the min-fill rule (fewest edges added), ties by
	node order

	:returns: ``(width, ordering)``
	:rtype: tuple
	"""
	adj = _adjacency_sets(G)
	rank = {v: i for i, v in enumerate(adj)}
	width = 0
	order = []

	def fill(v):
		nb = list(adj[v])
		cnt = 0
		for i, a in enumerate(nb):
			for b in nb[i + 1:]:
				if b not in adj[a]:
					cnt += 1
		return cnt

	while adj:
		v = min(adj, key=lambda x: (fill(x), rank[x]))
		nb = adj.pop(v)
		width = max(width, len(nb))
		for a in nb:
			adj[a].discard(v)
			adj[a] |= nb - {a}
		order.append(v)
	return width, order


# ----------------------------------------------------------------------------
# bitset helpers

def _reach_through(adj, S, v):
	"""
	Vertices outside ``S`` (and distinct from ``v``) reachable from ``v`` by a
	path with all internal vertices in ``S``
	"""
	reach = 1 << v
	frontier = reach
	out = 0
	while frontier:
		nxt = 0
		for x in iter_bits(frontier):
			nxt |= adj[x]
		out |= nxt & ~S
		nxt &= S & ~reach
		reach |= nxt
		frontier = nxt
	return out & ~(1 << v)


def _boundary(adj, S):
	cnt = 0
	for v in iter_bits(S):
		if adj[v] & ~S:
			cnt += 1
	return cnt


def _elimination_bags(adj, order):
	"""
	Tree-decomposition of an elimination ordering (vertex indices). Bag ``i``
	is ``{v_i} ∪ Q``; its parent is the bag of the earliest eliminated vertex
	of ``Q``. Several roots (one per component) are hung below the last one.
	"""
	pos = {v: i for i, v in enumerate(order)}
	bags = []
	parent = []
	S = 0
	for v in order:
		Q = _reach_through(adj, S, v)
		bags.append([v] + list(iter_bits(Q)))
		parent.append(min(pos[u] for u in iter_bits(Q)) if Q else -1)
		S |= 1 << v
	roots = [i for i, p in enumerate(parent) if p == -1]
	for i in roots[:-1]:
		parent[i] = roots[-1]
	return bags, parent


def _layout_bags(adj, order):
	bags = []
	S = 0
	for v in order:
		bag = [u for u in iter_bits(S) if adj[u] & ~S]
		bags.append(bag + [v])
		S |= 1 << v
	return bags


# ----------------------------------------------------------------------------
# pathwidth

class _SeparationSearch(object):

	def __init__(self, adj, comp, k, counter):
		self.adj = [a & comp for a in adj]
		self.comp = comp
		self.k = k
		self.counter = counter
		self.failed = set()
		self.order = []

	def run(self):
		return self._grow(0)

	def _grow(self, S):
		if S == self.comp:
			return True
		if S in self.failed:
			return False
		self.counter.tick()

		rest = self.comp & ~S
		# a vertex without neighbours outside S never hurts
		for v in iter_bits(rest):
			if not self.adj[v] & ~S & ~(1 << v):
				self.order.append(v)
				if self._grow(S | (1 << v)):
					return True
				self.order.pop()
				self.failed.add(S)
				return False

		options = []
		for v in iter_bits(rest):
			T = S | (1 << v)
			b = _boundary(self.adj, T)
			if b <= self.k:
				options.append((b, v))
		for _, v in sorted(options):
			self.order.append(v)
			if self._grow(S | (1 << v)):
				return True
			self.order.pop()

		self.failed.add(S)
		return False


def _greedy_layout(adj, comp):
	adj = [a & comp for a in adj]
	S = 0
	order = []
	width = 0
	while S != comp:
		best = None
		for v in iter_bits(comp & ~S):
			T = S | (1 << v)
			key = (_boundary(adj, T), -popcount(adj[v] & S), v)
			if best is None or key < best:
				best = key
		width = max(width, best[0])
		S |= 1 << best[2]
		order.append(best[2])
	return width, order


def pathwidth_exact(G, max_n=None, budget=None, settings=None):
	"""
	Exact pathwidth with a path-decomposition witness.

	:param G: graph
	:type G: networkx.Graph
	:param max_n: size cap for a component, defaults to settings
	:type max_n: int, optional
	:param budget: search-state budget, defaults to settings
	:type budget: int, optional
	:rtype: ~twinreduce.models.ParamResult
	:raises ~twinreduce.errors.TwinReduceSizeError: when a component is \
		larger than ``max_n`` or the budget is exhausted
	"""
	st = resolve_settings(settings)
	max_n = st.pathwidth_max_n if max_n is None else max_n
	budget = st.state_budget if budget is None else budget

	nodes, index, adj = index_graph(G)
	comps = sorted(nx.connected_components(G), key=lambda c: min(index[v] for v in c))
	for c in comps:
		check_size('pw', len(c), max_n)

	counter = StateCounter('pw', budget)
	value = 0
	order = []
	for c in comps:
		comp = 0
		for v in c:
			comp |= 1 << index[v]
		ub, best = _greedy_layout(adj, comp)
		lb = treewidth_lower_bound(G.subgraph(c))
		for k in range(lb, ub):
			search = _SeparationSearch(adj, comp, k, counter)
			if search.run():
				ub, best = k, search.order
				break
		log.debug('pw component of %s vertices: %s (lb %s)', len(c), ub, lb)
		value = max(value, ub)
		order.extend(best)

	bags = _layout_bags(adj, order)
	witness = {
		'ordering': [nodes[v] for v in order],
		'bags': [[nodes[v] for v in b] for b in bags],
		'parent': [i - 1 for i in range(len(bags))],
	}
	return result('pw', value, witness, states_explored=counter.count)


def pathwidth_heuristic(G):
	nodes, index, adj = index_graph(G)
	full = (1 << len(nodes)) - 1
	width, order = _greedy_layout(adj, full)
	bags = _layout_bags(adj, order)
	witness = {
		'ordering': [nodes[v] for v in order],
		'bags': [[nodes[v] for v in b] for b in bags],
		'parent': [i - 1 for i in range(len(bags))],
	}
	return result('pw', width, witness, exact=False)


# ----------------------------------------------------------------------------
# treewidth

class _EliminationSearch(object):

	def __init__(self, adj, comp, k, counter):
		self.adj = [a & comp for a in adj]
		self.comp = comp
		self.k = k
		self.counter = counter
		self.failed = set()
		self.order = []

	def run(self):
		return self._eliminate(0)

	def _is_clique(self, nbs, Q):
		for u in iter_bits(Q):
			if Q & ~(1 << u) & ~nbs[u]:
				return False
		return True

	def _eliminate(self, S):
		rest = self.comp & ~S
		if popcount(rest) <= self.k + 1:
			self.order.extend(iter_bits(rest))
			return True
		if S in self.failed:
			return False
		self.counter.tick()

		nbs = {}
		for v in iter_bits(rest):
			nbs[v] = _reach_through(self.adj, S, v)

		# simplicial and almost simplicial vertices of low degree are safe
		for v in iter_bits(rest):
			Q = nbs[v]
			if popcount(Q) > self.k:
				continue
			safe = self._is_clique(nbs, Q)
			if not safe:
				for u in iter_bits(Q):
					if self._is_clique(nbs, Q & ~(1 << u)):
						safe = True
						break
			if safe:
				self.order.append(v)
				if self._eliminate(S | (1 << v)):
					return True
				self.order.pop()
				self.failed.add(S)
				return False

		options = sorted(
			(popcount(Q), v) for v, Q in nbs.items() if popcount(Q) <= self.k
		)
		for _, v in options:
			self.order.append(v)
			if self._eliminate(S | (1 << v)):
				return True
			self.order.pop()

		self.failed.add(S)
		return False


def treewidth_exact(G, max_n=None, budget=None, settings=None):
	"""
	Exact treewidth with a tree-decomposition witness (built from an optimal
	elimination ordering).

	:param G: graph
	:type G: networkx.Graph
	:rtype: ~twinreduce.models.ParamResult
	:raises ~twinreduce.errors.TwinReduceSizeError: when a component is \
		larger than ``max_n`` or the budget is exhausted
	"""
	st = resolve_settings(settings)
	max_n = st.treewidth_max_n if max_n is None else max_n
	budget = st.state_budget if budget is None else budget

	nodes, index, adj = index_graph(G)
	comps = sorted(nx.connected_components(G), key=lambda c: min(index[v] for v in c))
	for c in comps:
		check_size('tw', len(c), max_n)

	counter = StateCounter('tw', budget)
	value = 0
	order = []
	for c in comps:
		sub = G.subgraph(c)
		comp = 0
		for v in c:
			comp |= 1 << index[v]
		ub, heur = min_fill_ordering(sub)
		best = [index[v] for v in heur]
		lb = treewidth_lower_bound(sub)
		for k in range(lb, ub):
			search = _EliminationSearch(adj, comp, k, counter)
			if search.run():
				ub, best = k, search.order
				break
		log.debug('tw component of %s vertices: %s (lb %s)', len(c), ub, lb)
		value = max(value, ub)
		order.extend(best)

	bags, parent = _elimination_bags(adj, order)
	witness = {
		'ordering': [nodes[v] for v in order],
		'bags': [[nodes[v] for v in b] for b in bags],
		'parent': parent,
	}
	return result('tw', value, witness, states_explored=counter.count)


def treewidth_heuristic(G):
	nodes, index, adj = index_graph(G)
	width, heur = min_fill_ordering(G)
	order = [index[v] for v in heur]
	bags, parent = _elimination_bags(adj, order)
	witness = {
		'ordering': heur,
		'bags': [[nodes[v] for v in b] for b in bags],
		'parent': parent,
	}
	return result('tw', width, witness, exact=False)
