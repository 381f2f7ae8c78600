# -*- coding: utf-8 -*-

"""
Reduced parameters of small graphs.

``reduced-f(G)`` is the least ``k`` such that some reduction sequence of
``G`` keeps ``f`` of every red graph at most ``k``. With ``f`` the maximum
degree this is the twin-width.

:func:`reduced_f_exact` searches all partitions of the vertex set (every
trigraph of a sequence is the trigraph of a partition) with a memo table;
:func:`reduced_f_upper_greedy` gives upper bounds for larger graphs.
"""

import itertools
import logging

import networkx as nx

from .enums import ParamEnum
from .enums import StrategyEnum
from .errors import TwinReduceGraphError
from .errors import TwinReduceSizeError
from .errors import TwinReduceValidationError
from .models import OracleResult

from .core import ReductionSequence
from .core import Trigraph
from .core import contract
from .params import evaluator
from .params.basic import check_size
from .params.basic import resolve_settings

from twinreduce._internals import iter_bits
from twinreduce._internals import lowest_bit

log = logging.getLogger(__name__)


def as_trigraph(G):
	"""
	:param G: graph or trigraph
	:type G: networkx.Graph or ~twinreduce.core.Trigraph
	:rtype: ~twinreduce.core.Trigraph
	"""
	if isinstance(G, Trigraph):
		return G
	return Trigraph.from_graph(G)


def _resolve_f(param, settings):
	"""
	:returns: ``(callable, ParamEnum or None)``
	"""
	if callable(param) and not isinstance(param, ParamEnum):
		return param, None
	try:
		p, = ParamEnum.parse_many(param)
	except ValueError as exc:
		raise TwinReduceValidationError(
			'unknown parameter {!r}'.format(param),
			code='twinreduce.params.unknown',
			inner=exc,
		)
	return evaluator(p, settings=settings), p


def _f_value(f, g):
	v = f(g)
	if hasattr(v, 'value'):
		v = v.value
	return int(v)


class _PartitionSearch(object):
	"""
	Memoised minimax over partitions of the base vertex set.

	``value(P) = max(f(red(P)), min over merges of value(child))`` with
	``value`` of the one-part partition being ``f`` of a single vertex.
	A child whose own ``f`` is not below the best value found so far is
	skipped, and the search of a state stops once its best child does not
	exceed ``f(red(P))``.
	"""

	def __init__(self, base, f, memo_budget):
		self.f = f
		self.memo_budget = memo_budget
		self.black = {v: base.black_mask(v) for v in base.vertices()}
		self.red = {v: base.red_mask(v) for v in base.vertices()}
		self.memo = {}
		self.pair_cache = {}
		self.f_cache = {}

	def _colour(self, X, Y):
		"""
		``0`` no edge, ``1`` black, ``2`` red
		"""
		key = (X, Y) if X < Y else (Y, X)
		c = self.pair_cache.get(key)
		if c is not None:
			return c
		all_black = True
		none = True
		for x in iter_bits(X):
			b = self.black[x]
			if b & Y != Y:
				all_black = False
			if (b | self.red[x]) & Y:
				none = False
			if not all_black and not none:
				break
		c = 1 if all_black else (0 if none else 2)
		self.pair_cache[key] = c
		return c

	def f_of(self, parts):
		edges = []
		for i, j in itertools.combinations(range(len(parts)), 2):
			if self._colour(parts[i], parts[j]) == 2:
				edges.append((i, j))
		key = (len(parts), frozenset(edges))
		v = self.f_cache.get(key)
		if v is None:
			g = nx.Graph()
			g.add_nodes_from(range(len(parts)))
			g.add_edges_from(edges)
			v = _f_value(self.f, g)
			self.f_cache[key] = v
		return v

	def value(self, parts):
		hit = self.memo.get(parts)
		if hit is not None:
			return hit[0]

		own = self.f_of(parts)
		if len(parts) == 1:
			self.memo[parts] = (own, None)
			return own

		if len(self.memo) >= self.memo_budget:
			raise TwinReduceSizeError(
				'oracle memo budget of {} partitions exhausted'.format(self.memo_budget),
				code='twinreduce.oracle.budget',
				details={'limit': self.memo_budget, 'actual': len(self.memo)},
			)

		best = None
		best_pair = None
		for i, j in itertools.combinations(range(len(parts)), 2):
			child = _merge_parts(parts, i, j)
			if best is not None and self.f_of(child) >= best:
				continue
			v = self.value(child)
			if best is None or v < best:
				best, best_pair = v, (parts[i], parts[j])
				if best <= own:
					break

		res = max(own, best)
		self.memo[parts] = (res, best_pair)
		return res

	def path(self, parts):
		"""
		Merges (as pairs of part masks) of an optimal sequence from ``parts``
		"""
		res = []
		while len(parts) > 1:
			_, pair = self.memo[parts]
			res.append(pair)
			i = parts.index(pair[0])
			j = parts.index(pair[1])
			parts = _merge_parts(parts, i, j)
		return res


def _merge_parts(parts, i, j):
	rest = [p for k, p in enumerate(parts) if k != i and k != j]
	rest.append(parts[i] | parts[j])
	rest.sort(key=lowest_bit)
	return tuple(rest)


def _sequence_of_masks(base, pairs):
	T = base.copy()
	live = {1 << v: v for v in base.vertices()}
	merges = []
	for X, Y in pairs:
		u, v = live.pop(X), live.pop(Y)
		w = T.merge(u, v)
		merges.append((u, v, w))
		live[X | Y] = w
	return merges


def _result(param, value, exact, states, strategy, seq):
	r = OracleResult()
	if param is not None:
		r.param = param
	r.value = value
	r.exact = exact
	r.states_explored = states
	r.strategy = strategy
	r['optimal_sequence'] = seq.to_dict()
	return r


def reduced_f_exact(G, param='maxdeg', max_n=None, memo_budget=None, settings=None):
	"""
	Exact reduced parameter with an optimal sequence.

	When the memo budget is exhausted the best greedy bound is returned
	instead, flagged with ``exact=False``.

	:param G: graph or trigraph (vertex ids ``0..n-1``)
	:type G: networkx.Graph or ~twinreduce.core.Trigraph
	:param param: parameter name or a callable on :class:`networkx.Graph`
	:type param: str or ~twinreduce.enums.ParamEnum or callable
	:param max_n: size cap, defaults to settings (``12``)
	:type max_n: int, optional
	:param memo_budget: maximum number of stored partitions
	:type memo_budget: int, optional
	:rtype: ~twinreduce.models.OracleResult
	:raises ~twinreduce.errors.TwinReduceSizeError: when ``G`` has more than \
		``max_n`` vertices
	"""
	st = resolve_settings(settings)
	max_n = st.oracle_max_n if max_n is None else max_n
	memo_budget = st.oracle_memo_budget if memo_budget is None else memo_budget

	base = as_trigraph(G)
	check_size('oracle', base.n, max_n)
	if base.vertices() != list(range(base.n)):
		raise TwinReduceValidationError(
			'oracle needs a base trigraph with ids 0..n-1',
			code='twinreduce.oracle.invalid_base',
		)
	f, p = _resolve_f(param, st)

	search = _PartitionSearch(base, f, memo_budget)
	start = tuple(1 << v for v in base.vertices())
	if not start:
		seq = ReductionSequence(base)
		return _result(p, 0, True, 0, 'exact', seq)

	try:
		value = search.value(start)
	except TwinReduceSizeError as exc:
		log.warning('exact oracle gave up: %s; falling back to greedy', exc)
		res = reduced_f_upper_greedy(base, param, settings=st)
		res.states_explored = len(search.memo)
		return res

	seq = ReductionSequence(base, _sequence_of_masks(base, search.path(start)))
	log.debug('oracle: value %s, %s partitions stored', value, len(search.memo))
	return _result(p, value, True, len(search.memo), 'exact', seq)


# ----------------------------------------------------------------------------
# upper bounds

def _are_twins(T, u, v):
	drop = ~((1 << u) | (1 << v))
	return (
		T.black_mask(u) & drop == T.black_mask(v) & drop and
		T.red_mask(u) & drop == T.red_mask(v) & drop
	)


def _greedy_step(T, f, counter):
	best = None
	for u, v in itertools.combinations(T.vertices(), 2):
		c = contract(T, u, v)
		counter[0] += 1
		val = _f_value(f, c.red_graph())
		if best is None or val < best[0]:
			best = (val, u, v)
	return best[1], best[2]


def _twin_step(T, f, counter):
	for u, v in itertools.combinations(T.vertices(), 2):
		if _are_twins(T, u, v):
			return u, v
	return _greedy_step(T, f, counter)


def _leaf_step(T, f, counter):
	live = T.vertices()
	for v in live:
		nb = T.neighbours(v)
		if len(nb) == 1:
			return v, nb[0]
	isolated = [v for v in live if not T.neighbour_mask(v)]
	return isolated[0], isolated[1]


def _run_strategy(base, f, strategy):
	steps = {
		StrategyEnum.GREEDY: _greedy_step,
		StrategyEnum.TWINS: _twin_step,
		StrategyEnum.LEAF_MERGE: _leaf_step,
	}
	step = steps[strategy]
	counter = [0]
	T = base.copy()
	width = _f_value(f, T.red_graph())
	merges = []
	while T.n > 1:
		u, v = step(T, f, counter)
		w = T.merge(u, v)
		merges.append((u, v, w))
		width = max(width, _f_value(f, T.red_graph()))
	return width, merges, counter[0]


def reduced_f_upper_greedy(G, param='maxdeg', strategies=None, settings=None):
	"""
	Upper bound on a reduced parameter: the best sequence among the given
	strategies (see :class:`~twinreduce.enums.StrategyEnum`).

	``leaf-merge`` needs a trigraph whose underlying graph is a forest; for
	other inputs it is skipped.

	:param strategies: strategies to try, defaults to ``greedy,twins``
	:type strategies: str or list
	:rtype: ~twinreduce.models.OracleResult
	:raises ~twinreduce.errors.TwinReduceGraphError: when no requested \
		strategy applies
	"""
	st = resolve_settings(settings)
	base = as_trigraph(G)
	f, p = _resolve_f(param, st)
	if strategies is None:
		strategies = [StrategyEnum.GREEDY, StrategyEnum.TWINS]
	strategies = StrategyEnum.parse_many(strategies)

	best = None
	for s in strategies:
		if s == StrategyEnum.LEAF_MERGE and not nx.is_forest(base.underlying_graph()):
			log.info('leaf-merge skipped: the underlying graph is not a forest')
			continue
		width, merges, states = _run_strategy(base, f, s)
		log.debug('strategy %s: width %s', s.value, width)
		if best is None or width < best[0]:
			best = (width, merges, states, s)

	if best is None:
		raise TwinReduceGraphError(
			'none of the strategies {} applies'.format([s.value for s in strategies]),
			code='twinreduce.oracle.no_strategy',
		)

	width, merges, states, s = best
	seq = ReductionSequence(base, merges)
	return _result(p, width, False, states, s.value, seq)


# ----------------------------------------------------------------------------
# cographs

def is_cograph(G):
	"""
	:data:`True` iff ``G`` has no induced path on four vertices

	:param G: graph
	:type G: networkx.Graph
	:rtype: bool
	"""
	adj = {v: set(G.neighbors(v)) - {v} for v in G.nodes()}
	for b, c in G.edges():
		if b == c:
			continue
		for x, y in ((b, c), (c, b)):
			ends_x = adj[x] - adj[y] - {y}
			ends_y = adj[y] - adj[x] - {x}
			for a in ends_x:
				for d in ends_y:
					if a != d and d not in adj[a]:
						return False
	return True
