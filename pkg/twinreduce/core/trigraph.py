# -*- coding: utf-8 -*-

"""
Trigraphs and the contraction operation.

A trigraph is a graph whose edges are either black or red. Contracting two
vertices ``u, v`` into a fresh vertex ``w`` gives, for every other vertex
``x``:

- a black edge ``wx`` iff both ``ux`` and ``vx`` are black;
- no edge ``wx`` iff neither ``ux`` nor ``vx`` is an edge;
- a red edge ``wx`` otherwise.

Vertices are stable integer ids. A trigraph built from an ``n``-vertex graph
uses ids ``0..n-1`` and allocates merged vertices as ``n, n+1, ...``, so any
sequence of merges is replayable bit-exactly.
"""

import logging

import networkx as nx

from ..errors import TwinReduceGraphError
from ..errors import TwinReduceMergeError

from twinreduce._internals import iter_bits
from twinreduce._internals import popcount
from twinreduce._internals import sorted_nodes

log = logging.getLogger(__name__)


class Trigraph(object):
	"""
	Trigraph with adjacency stored as per-vertex bitsets over vertex ids.

	Every vertex carries a label: the set of base vertices it represents
	(``{v}`` for base vertices, the union of both labels after a merge).

	:param n: number of base vertices, ids ``0..n-1``
	:type n: int
	:param black: black edges
	:type black: iterable of pairs
	:param red: red edges
	:type red: iterable of pairs
	:param labels: explicit labels, defaults to singletons
	:type labels: dict, optional
	"""

	def __init__(self, n=0, black=(), red=(), labels=None):
		self._black = {}
		self._red = {}
		self._labels = {}
		self._next = n
		#: original nodes of the graph this trigraph was built from (by base id)
		self.origin = None

		for v in range(n):
			self._black[v] = 0
			self._red[v] = 0
			self._labels[v] = frozenset([v])

		if labels is not None:
			self._set_labels(labels)

		for u, v in black:
			self._add_edge(self._black, u, v)
		for u, v in red:
			self._add_edge(self._red, u, v)

	def _set_labels(self, labels):
		seen = set()
		for v, lab in labels.items():
			v = int(v)
			lab = frozenset(lab)
			if v not in self._black:
				raise TwinReduceGraphError(
					'label for unknown vertex {}'.format(v),
					code='twinreduce.trigraph.invalid_label',
				)
			if not lab or seen & lab:
				raise TwinReduceGraphError(
					'labels must be nonempty and pairwise disjoint',
					code='twinreduce.trigraph.invalid_label',
					details={'vertex': v},
				)
			seen |= lab
			self._labels[v] = lab

	def _add_edge(self, store, u, v):
		u = int(u)
		v = int(v)
		if u == v:
			raise TwinReduceGraphError(
				'loops are not allowed ({})'.format(u),
				code='twinreduce.trigraph.invalid_edge',
				details={'edge': [u, v]},
			)
		if u not in self._black or v not in self._black:
			raise TwinReduceGraphError(
				'edge {}-{} references a vertex which is not live'.format(u, v),
				code='twinreduce.trigraph.invalid_edge',
				details={'edge': [u, v]},
			)
		other = self._red if store is self._black else self._black
		if other[u] >> v & 1:
			raise TwinReduceGraphError(
				'edge {}-{} is both black and red'.format(u, v),
				code='twinreduce.trigraph.invalid_edge',
				details={'edge': [u, v]},
			)
		store[u] |= 1 << v
		store[v] |= 1 << u

	# ------------------------------------------------------------------------
	# construction

	@classmethod
	def from_graph(cls, G, red=False, nodes=None):
		"""
		Trigraph of a networkx graph; nodes are mapped to ``0..n-1`` in
		:func:`~twinreduce._internals.sorted_nodes` order, the original node of
		every base id is kept in :attr:`origin`.

		:param G: graph
		:type G: networkx.Graph
		:param red: make every edge red (``red(G)``), defaults to False
		:type red: bool
		:rtype: Trigraph
		"""
		if nodes is None:
			nodes = sorted_nodes(G)
		index = {v: i for i, v in enumerate(nodes)}
		edges = [(index[u], index[v]) for u, v in G.edges() if u != v]
		if red:
			T = cls(len(nodes), red=edges)
		else:
			T = cls(len(nodes), black=edges)
		T.origin = list(nodes)
		return T

	@classmethod
	def from_dict(cls, data):
		"""
		Reads the JSON form ``{"n": int, "black": [...], "red": [...]}``.

		Trigraphs in the middle of a sequence carry the optional keys
		``"vertices"`` (live ids), ``"next_id"`` and ``"labels"``.

		:rtype: Trigraph
		"""
		n = int(data.get('n', 0))
		vertices = data.get('vertices')
		if vertices is None:
			T = cls(n)
		else:
			T = cls(0)
			for v in vertices:
				v = int(v)
				T._black[v] = 0
				T._red[v] = 0
				T._labels[v] = frozenset([v])
			T._next = max([int(data.get('next_id', 0))] + [v + 1 for v in T._black])
		if data.get('labels'):
			T._set_labels(data['labels'])
		for u, v in data.get('black') or []:
			T._add_edge(T._black, u, v)
		for u, v in data.get('red') or []:
			T._add_edge(T._red, u, v)
		return T

	def to_dict(self):
		"""
		JSON form of the trigraph, see :meth:`from_dict`

		:rtype: dict
		"""
		vs = self.vertices()
		res = {
			'n': len(vs),
			'black': [list(e) for e in self.black_edges()],
			'red': [list(e) for e in self.red_edges()],
		}
		if vs != list(range(len(vs))) or self._next != len(vs):
			res['vertices'] = vs
			res['next_id'] = self._next
		if any(self._labels[v] != frozenset([v]) for v in vs):
			res['labels'] = {str(v): sorted(self._labels[v]) for v in vs}
		return res

	def copy(self):
		T = Trigraph(0)
		T._black = dict(self._black)
		T._red = dict(self._red)
		T._labels = dict(self._labels)
		T._next = self._next
		T.origin = self.origin
		return T

	# ------------------------------------------------------------------------
	# queries

	@property
	def n(self):
		"""
		Number of live vertices

		:getter: Get, property is readonly
		:rtype: int
		"""
		return len(self._black)

	@property
	def next_id(self):
		"""
		The id the next merge will allocate

		:getter: Get, property is readonly
		:rtype: int
		"""
		return self._next

	def vertices(self):
		return sorted(self._black)

	def __contains__(self, v):
		return v in self._black

	def __len__(self):
		return len(self._black)

	def label(self, v):
		return self._labels[v]

	def labels(self):
		return dict(self._labels)

	def black_mask(self, v):
		return self._black[v]

	def red_mask(self, v):
		return self._red[v]

	def neighbour_mask(self, v):
		return self._black[v] | self._red[v]

	def neighbours(self, v):
		return list(iter_bits(self.neighbour_mask(v)))

	def red_neighbours(self, v):
		return list(iter_bits(self._red[v]))

	def has_black(self, u, v):
		return bool(self._black[u] >> v & 1)

	def has_red(self, u, v):
		return bool(self._red[u] >> v & 1)

	def has_edge(self, u, v):
		return self.has_black(u, v) or self.has_red(u, v)

	def _edges(self, store):
		res = []
		for u in sorted(store):
			for v in iter_bits(store[u] >> (u + 1) << (u + 1)):
				res.append((u, v))
		return res

	def black_edges(self):
		"""
		:returns: sorted pairs ``(u, v)`` with ``u < v``
		:rtype: list(tuple)
		"""
		return self._edges(self._black)

	def red_edges(self):
		"""
		:returns: sorted pairs ``(u, v)`` with ``u < v``
		:rtype: list(tuple)
		"""
		return self._edges(self._red)

	def red_degree(self, v):
		return popcount(self._red[v])

	def max_red_degree(self):
		if not self._red:
			return 0
		return max(popcount(m) for m in self._red.values())

	def red_graph(self):
		"""
		The red graph: spanning subgraph formed by red edges (every live vertex
		is a node, isolated or not).

		:rtype: networkx.Graph
		"""
		g = nx.Graph()
		g.add_nodes_from(self.vertices())
		g.add_edges_from(self.red_edges())
		return g

	def underlying_graph(self):
		g = nx.Graph()
		g.add_nodes_from(self.vertices())
		g.add_edges_from(self.black_edges())
		g.add_edges_from(self.red_edges())
		return g

	def labelled_form(self):
		"""
		Canonical form independent from vertex ids: vertices are replaced by
		their labels. Two trigraphs representing the same partition of the
		same base have equal forms.

		:returns: ``(labels, black, red)`` of frozensets
		:rtype: tuple
		"""
		lab = self._labels
		return (
			frozenset(lab[v] for v in self._black),
			frozenset(frozenset((lab[u], lab[v])) for u, v in self.black_edges()),
			frozenset(frozenset((lab[u], lab[v])) for u, v in self.red_edges()),
		)

	# ------------------------------------------------------------------------
	# contraction

	def _check_merge(self, u, v, w):
		if u == v:
			raise TwinReduceMergeError(
				'can not merge vertex {} with itself'.format(u),
				code='twinreduce.trigraph.invalid_merge',
				details={'u': u, 'v': v},
			)
		for x in (u, v):
			if x not in self._black:
				raise TwinReduceMergeError(
					'vertex {} is not live'.format(x),
					code='twinreduce.trigraph.invalid_merge',
					details={'u': u, 'v': v, 'dead': x},
				)
		if w is not None and w < self._next:
			raise TwinReduceMergeError(
				'fresh id {} was already used (next id is {})'.format(w, self._next),
				code='twinreduce.trigraph.invalid_merge',
				details={'u': u, 'v': v, 'w': w},
			)

	def merge(self, u, v, w=None):
		"""
		Contracts ``u`` and ``v`` IN PLACE.

		:param u: live vertex
		:type u: int
		:param v: live vertex, distinct from ``u``
		:type v: int
		:param w: id of the new vertex, defaults to :attr:`next_id`
		:type w: int, optional
		:returns: id of the new vertex
		:rtype: int
		:raises ~twinreduce.errors.TwinReduceMergeError: on dead/equal ids or \
			a fresh id which was already used
		"""
		self._check_merge(u, v, w)
		if w is None:
			w = self._next
		self._next = w + 1

		bu, bv = self._black.pop(u), self._black.pop(v)
		ru, rv = self._red.pop(u), self._red.pop(v)
		drop = ~((1 << u) | (1 << v))

		black = bu & bv & drop
		red = ((bu | ru | bv | rv) & drop) & ~black

		for x in iter_bits((bu | ru | bv | rv) & drop):
			self._black[x] &= drop
			self._red[x] &= drop
			if black >> x & 1:
				self._black[x] |= 1 << w
			else:
				self._red[x] |= 1 << w

		self._black[w] = black
		self._red[w] = red
		self._labels[w] = self._labels.pop(u) | self._labels.pop(v)

		return w

	def __repr__(self):
		return '<Trigraph n={} black={} red={}>'.format(
			self.n,
			len(self.black_edges()),
			len(self.red_edges()),
		)


def contract(G, u, v, w=None):
	"""
	Returns ``G/u,v`` as a new trigraph, ``G`` is untouched.

	:param G: trigraph
	:type G: Trigraph
	:rtype: Trigraph
	:raises ~twinreduce.errors.TwinReduceMergeError: on dead or equal ids
	"""
	T = G.copy()
	T.merge(u, v, w)
	return T


def complement(T):
	"""
	Complement of a trigraph without red edges; labels are preserved.

	:raises ~twinreduce.errors.TwinReduceGraphError: if ``T`` has red edges
	"""
	if T.red_edges():
		raise TwinReduceGraphError(
			'complement is defined for trigraphs without red edges',
			code='twinreduce.trigraph.has_red',
		)
	vs = T.vertices()
	C = T.copy()
	full = 0
	for v in vs:
		full |= 1 << v
	for v in vs:
		C._black[v] = full & ~T.black_mask(v) & ~(1 << v)
	return C
