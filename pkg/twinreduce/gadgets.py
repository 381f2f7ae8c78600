# -*- coding: utf-8 -*-

"""
Deterministic generators of named graphs.

All generators return :class:`networkx.Graph` objects with integer nodes
``0..n-1``; when vertices belong to named groups, the group is kept in the
``label`` node attribute (and so survives :func:`twinreduce.codec.dumps`).
"""

import itertools
import logging
import random

import networkx as nx
import pydash

from .enums import GadgetKindEnum
from .errors import TwinReduceGraphError
from .errors import TwinReduceValidationError
from .models import GadgetSpec

from .core import ReductionSequence
from .core import Trigraph

from .product.structure import ARMS
from .product.structure import grid_certificate
from .product.structure import s_key
from .product.structure import s_label
from .product.structure import s_distance

from ._internals import sorted_nodes

log = logging.getLogger(__name__)


def _require(name, value, minimum):
	if value is None or int(value) < minimum:
		err = TwinReduceValidationError(
			'{} must be at least {}, got {!r}'.format(name, minimum, value),
			code='twinreduce.gadgets.invalid_param',
			details={'param': name, 'value': value, 'minimum': minimum},
		)
		log.warning(err)
		raise err
	return int(value)


# ----------------------------------------------------------------------------
# blobs

def _s_keys(x, q):
	keys = [('Q', j) for j in range(2 * q - 1)]
	for i in range(1, x + 1):
		for arm in ARMS:
			keys.extend((arm, i, j) for j in range(q))
	return keys


def gen_s_star(x, q):
	"""
	``S*_{x,q}``: a centre ``Q`` of ``2q - 1`` vertices and three arms
	``A``, ``B``, ``C`` of ``x`` levels with ``q`` vertices each.

	``Q ∪ A_1``, ``Q ∪ B_1`` and ``Q ∪ C_1`` are cliques, and so is the union
	of two consecutive levels of one arm. Nodes are numbered centre first,
	then level by level (``A_i``, ``B_i``, ``C_i``); the ``label`` attribute
	holds :func:`~twinreduce.product.s_label` and ``group`` the group name
	(``Q``, ``A1``, ...).

	:param x: number of levels
	:type x: int
	:param q: level size, at least 2
	:type q: int
	:rtype: networkx.Graph
	"""
	x = _require('x', x, 1)
	q = _require('q', q, 2)

	keys = _s_keys(x, q)
	g = nx.Graph()
	for v, key in enumerate(keys):
		label = s_label(key)
		g.add_node(v, label=label, group=label.split('.')[0])
	for (u, a), (v, b) in itertools.combinations(enumerate(keys), 2):
		if s_distance(a, b) == 1:
			g.add_edge(u, v)
	return g


def gen_s(x, q, r):
	"""
	``S_{x,q,r}``: the ``r``-th power of ``S*_{x,q}`` without the edges between
	the arms ``B`` and ``C``. Node ids and attributes are those of
	:func:`gen_s_star`.

	:rtype: networkx.Graph
	"""
	r = _require('r', r, 1)
	star = gen_s_star(x, q)

	g = nx.power(star, r) if r > 1 else star.copy()
	for v, data in star.nodes(data=True):
		g.nodes[v].update(data)

	arm = {v: s_key(d['label'])[0] for v, d in g.nodes(data=True)}
	g.remove_edges_from([
		(u, v) for u, v in list(g.edges()) if set((arm[u], arm[v])) == set(('B', 'C'))
	])
	return g


def _layer_key(key):
	if key[0] == 'Q':
		return (0, 0, key[1])
	if key[0] == 'A':
		return (-key[1], 0, key[2])
	return (key[1], ARMS.index(key[0]), key[2])


def s_ordering(G):
	"""
	Layered ordering ``A_x, ..., A_1, Q, B_1, C_1, B_2, C_2, ...`` of a blob
	built by :func:`gen_s_star` or :func:`gen_s`

	:rtype: list
	"""
	return sorted(G.nodes(), key=lambda v: _layer_key(s_key(G.nodes[v]['label'])))


# ----------------------------------------------------------------------------
# trees and grids

def gen_q_tree(n):
	"""
	``Q_n``: ``n`` disjoint paths on ``n`` vertices each, with the first
	vertices of the paths joined into one more path. Vertex ``j`` of path
	``i`` is ``i*n + j``.

	:rtype: networkx.Graph
	"""
	n = _require('n', n, 1)
	g = nx.Graph()
	g.add_nodes_from(range(n * n))
	for i in range(n):
		g.add_edges_from((i * n + j, i * n + j + 1) for j in range(n - 1))
		if i + 1 < n:
			g.add_edge(i * n, (i + 1) * n)
	return g


def gen_grid(m, n):
	"""
	``m x n`` grid with node ids ``i*n + j``; see
	:func:`~twinreduce.product.grid_certificate` for its product certificate

	:rtype: networkx.Graph
	"""
	m = _require('m', m, 1)
	n = _require('n', n, 1)
	g = nx.grid_2d_graph(m, n)
	return nx.relabel_nodes(g, {(i, j): i * n + j for i, j in g.nodes()})


def gen_binary_tree(h):
	"""
	Complete binary tree of height ``h`` (``2^(h+1) - 1`` vertices)
	"""
	h = _require('h', h, 0)
	return nx.balanced_tree(2, h)


def gen_ktree(k, n):
	"""
	``k``-th power of the path on ``n`` vertices: a ``k``-tree when
	``n >= k + 1``

	:rtype: networkx.Graph
	"""
	k = _require('k', k, 1)
	n = _require('n', n, 1)
	g = nx.Graph()
	g.add_nodes_from(range(n))
	for i in range(n):
		g.add_edges_from((i, j) for j in range(i + 1, min(n, i + k + 1)))
	return g


def gen_complete_multipartite(p):
	"""
	``K_{2,...,2}`` with ``p`` parts
	"""
	p = _require('p', p, 1)
	return nx.complete_multipartite_graph(*([2] * p))


# ----------------------------------------------------------------------------
# blowups and red graphs

def blowup2(G):
	"""
	2-blowup of ``G``: every vertex becomes two non-adjacent copies, every
	edge the four edges between the copies of its ends.

	Copy ``b`` of the ``i``-th node (in
	:func:`~twinreduce._internals.sorted_nodes` order) is ``2*i + b``, with the
	node attributes ``source`` and ``copy``.

	:rtype: networkx.Graph
	"""
	nodes = sorted_nodes(G)
	index = {v: i for i, v in enumerate(nodes)}
	g = nx.Graph()
	for i, v in enumerate(nodes):
		for b in (0, 1):
			g.add_node(2 * i + b, source=v, copy=b)
	for u, v in G.edges():
		if u == v:
			continue
		for a in (0, 1):
			for b in (0, 1):
				g.add_edge(2 * index[u] + a, 2 * index[v] + b)
	return g


def red_of(G):
	"""
	``red(G)``: the trigraph with the edges of ``G``, all red

	:rtype: ~twinreduce.core.Trigraph
	"""
	return Trigraph.from_graph(G, red=True)


def default_t(H):
	d = max([deg for _, deg in H.degree()] or [0])
	return max(3, 2 * d + 2)


def gen_t_of(H, t=None):
	"""
	Cliques joined by matchings.

	Every vertex ``h`` of ``H`` becomes a clique ``h.1, ..., h.t``; for every
	edge ``hh'`` of ``H`` the matching ``h.j h'.j`` is added. The vertex ``h.j``
	of the ``i``-th node of ``H`` is ``i*t + j - 1``.

	The canonical partial sequence merges ``h.1`` with ``h.2`` for every ``h``
	in turn, then the results with ``h.3``, and so on. It never merges across
	cliques and ends at ``red(H)``.

	``blowup_maps[step]`` maps every vertex of the red graph after ``step``
	merges into :func:`blowup2` of ``H``: the part holding ``h.1`` goes to copy
	``0`` of ``h``, the not yet merged vertex of ``h`` in the current round to
	copy ``1``.

	:param H: connected graph
	:type H: networkx.Graph
	:param t: clique size, defaults to ``max(3, 2Δ(H) + 2)``
	:type t: int, optional
	:returns: ``{'G', 'canonical_partial', 'blowup_maps', 't'}``
	:rtype: dict
	:raises ~twinreduce.errors.TwinReduceGraphError: for disconnected ``H``
	"""
	if H.number_of_nodes() == 0 or not nx.is_connected(H):
		err = TwinReduceGraphError(
			'H must be connected',
			code='twinreduce.gadgets.disconnected',
			details={'n': H.number_of_nodes()},
		)
		log.warning(err)
		raise err

	t = default_t(H) if t is None else _require('t', t, 2)
	nodes = sorted_nodes(H)
	index = {v: i for i, v in enumerate(nodes)}
	n = len(nodes)

	G = nx.Graph()
	for i, h in enumerate(nodes):
		for j in range(1, t + 1):
			G.add_node(i * t + j - 1, label='{}.{}'.format(h, j))
		G.add_edges_from(
			(i * t + a, i * t + b) for a, b in itertools.combinations(range(t), 2)
		)
	for u, v in H.edges():
		iu, iv = index[u], index[v]
		G.add_edges_from((iu * t + j, iv * t + j) for j in range(t))

	T = Trigraph.from_graph(G)
	head = [i * t for i in range(n)]
	merges = []

	def blowup_map(j, done):
		res = {}
		for i in range(n):
			res[head[i]] = 2 * i
			if i >= done:
				res[i * t + j - 1] = 2 * i + 1
		return res

	maps = {0: blowup_map(2, 0)}
	for j in range(2, t + 1):
		for i in range(n):
			w = T.merge(head[i], i * t + j - 1)
			merges.append((head[i], i * t + j - 1, w))
			head[i] = w
			if i + 1 < n:
				maps[len(merges)] = blowup_map(j, i + 1)
			elif j < t:
				maps[len(merges)] = blowup_map(j + 1, 0)
			else:
				maps[len(merges)] = blowup_map(j, n)

	log.debug('t(H) on %s vertices with t=%s: %s merges', n, t, len(merges))
	return {
		'G': G,
		'canonical_partial': ReductionSequence(Trigraph.from_graph(G), merges),
		'blowup_maps': maps,
		't': t,
		'heads': {nodes[i]: head[i] for i in range(n)},
	}


# ----------------------------------------------------------------------------
# planar graphs

def gen_stacked_triangulation(n, seed=0):
	"""
	Stacked (Apollonian) triangulation on ``n`` vertices: starting from
	``K_4``, every new vertex is put into a face chosen at random and joined to
	its three corners.

	:param n: number of vertices, at least 3
	:type n: int
	:param seed: random seed
	:type seed: int
	:rtype: networkx.Graph
	"""
	n = _require('n', n, 3)
	if n == 3:
		return nx.complete_graph(3)

	rng = random.Random(seed)
	g = nx.complete_graph(4)
	faces = [tuple(f) for f in itertools.combinations(range(4), 3)]
	for v in range(4, n):
		a, b, c = faces.pop(rng.randrange(len(faces)))
		g.add_edges_from([(v, a), (v, b), (v, c)])
		faces.extend([(a, b, v), (a, c, v), (b, c, v)])
	return g


def gen_random_planar(n, seed=0, keep=0.7):
	"""
	Stacked triangulation with every edge kept with probability ``keep``

	:rtype: networkx.Graph
	"""
	rng = random.Random(seed)
	g = gen_stacked_triangulation(n, seed=rng.randrange(2 ** 31))
	drop = [e for e in sorted(g.edges()) if rng.random() >= keep]
	g.remove_edges_from(drop)
	return g


def _triangulation_faces(G0):
	planar, emb = nx.check_planarity(G0)
	n = G0.number_of_nodes()
	if n < 4 or not planar or G0.number_of_edges() != 3 * n - 6:
		err = TwinReduceGraphError(
			'expected a planar triangulation on at least 4 vertices',
			code='twinreduce.gadgets.not_triangulation',
			details={'n': n, 'm': G0.number_of_edges(), 'planar': bool(planar)},
		)
		log.warning(err)
		raise err

	seen = set()
	faces = set()
	for u, v in emb.edges():
		if (u, v) in seen:
			continue
		face = emb.traverse_face(u, v, mark_half_edges=seen)
		faces.add(tuple(sorted(face)))
	return sorted(faces)


def gen_tight_surface_pi1(G0):
	"""
	Bipartite graph on ``X = V(G0)`` and a set ``Y`` of ``6|X| - 9``
	vertices with pairwise distinct neighbourhoods in ``X``.

	``Y`` holds one vertex adjacent to the corners of every face, one vertex
	on every edge (the edges of ``G0`` themselves are dropped), one pendant
	vertex at every vertex and one isolated vertex.

	:param G0: planar triangulation with at least 4 vertices
	:type G0: networkx.Graph
	:returns: ``{'G', 'X', 'Y', 'classes'}`` where ``classes[d]`` are the \
		vertices of ``Y`` with ``d`` neighbours
	:rtype: dict
	:raises ~twinreduce.errors.TwinReduceGraphError: if ``G0`` is not a \
		planar triangulation
	"""
	faces = _triangulation_faces(G0)
	nodes = sorted_nodes(G0)
	index = {v: i for i, v in enumerate(nodes)}
	n = len(nodes)

	g = nx.Graph()
	for i, v in enumerate(nodes):
		g.add_node(i, label='x.{}'.format(v))

	neighbourhoods = [[]]
	neighbourhoods.extend([i] for i in range(n))
	neighbourhoods.extend(sorted(sorted((index[u], index[v])) for u, v in G0.edges()))
	neighbourhoods.extend(sorted(sorted(index[v] for v in f) for f in faces))

	classes = {0: [], 1: [], 2: [], 3: []}
	for y, xs in enumerate(neighbourhoods, n):
		g.add_node(y, label='y{}.{}'.format(len(xs), y - n))
		g.add_edges_from((y, x) for x in xs)
		classes[len(xs)].append(y)

	return {
		'G': g,
		'X': list(range(n)),
		'Y': list(range(n, g.number_of_nodes())),
		'classes': classes,
	}


def gen_tight_ktree_pi1(k, n):
	"""
	Bipartite graph on the vertices ``X`` of a ``k``-tree ``H`` on ``n``
	vertices (see :func:`gen_ktree`) and one vertex ``y_C`` for every clique
	``C`` of ``H`` with at most ``k`` vertices (the empty one included),
	adjacent to ``C``.

	The graph has treewidth ``k``: the returned decomposition takes the bags
	``{i, ..., i+k}`` of ``H`` and hangs a bag ``C ∪ {y_C}`` below a bag
	containing ``C``.

	:returns: ``{'G', 'X', 'Y', 'bags', 'parent'}``
	:rtype: dict
	"""
	k = _require('k', k, 1)
	n = _require('n', n, k)
	H = gen_ktree(k, n)

	g = nx.Graph()
	for v in range(n):
		g.add_node(v, label='x.{}'.format(v))

	cliques = [()]
	cliques.extend(
		tuple(sorted(c)) for c in nx.enumerate_all_cliques(H) if len(c) <= k
	)
	cliques.sort(key=lambda c: (len(c), c))

	# path of the bags {i..i+k}; a single bag when n <= k + 1
	bags = [list(range(i, min(n, i + k + 1))) for i in range(max(1, n - k))]
	parent = [-1] + list(range(len(bags) - 1))
	last = len(bags) - 1

	for y, c in enumerate(cliques, n):
		g.add_node(y, label='y.{}'.format('-'.join(str(v) for v in c) or 'empty'))
		g.add_edges_from((y, v) for v in c)
		home = min(c[0], last) if c else 0
		bags.append(list(c) + [y])
		parent.append(home)

	return {
		'G': g,
		'X': list(range(n)),
		'Y': list(range(n, g.number_of_nodes())),
		'bags': bags,
		'parent': parent,
	}


# ----------------------------------------------------------------------------
# dispatch

_MISSING = object()


def _param(params, name, default=_MISSING):
	value = pydash.get(params, name, default)
	if value is _MISSING:
		err = TwinReduceValidationError(
			'parameter {!r} is required'.format(name),
			code='twinreduce.gadgets.missing_param',
			details={'param': name},
		)
		log.warning(err)
		raise err
	return value


def _graph(graph):
	if graph is None:
		err = TwinReduceValidationError(
			'an input graph is required',
			code='twinreduce.gadgets.missing_param',
			details={'param': 'graph'},
		)
		log.warning(err)
		raise err
	return graph


def generate(kind, params=None, graph=None):
	"""
	Runs a generator by name.

	:param kind: generator, or a :class:`~twinreduce.models.GadgetSpec`
	:type kind: str or ~twinreduce.enums.GadgetKindEnum or \
		~twinreduce.models.GadgetSpec
	:param params: integer parameters
	:type params: dict, optional
	:param graph: input graph of ``blowup2``, ``red_of``, ``t_of`` and \
		``tight_surface_pi1``
	:type graph: networkx.Graph, optional
	:returns: ``{'graph': ...}`` plus ``certificate`` (grid), \
		``sequence``/``blowup_maps``/``t`` (t_of), ``X``/``Y`` (tightness)
	:rtype: dict
	"""
	if isinstance(kind, GadgetSpec):
		kind, params = kind.kind, kind.params
	try:
		kind, = GadgetKindEnum.parse_many(kind)
	except ValueError as exc:
		raise TwinReduceValidationError(
			'unknown gadget {!r}'.format(kind),
			code='twinreduce.gadgets.unknown',
			details={'known': GadgetKindEnum.values()},
			inner=exc,
		)
	p = dict(params or {})
	log.debug('generating %s with %s', kind.value, p)

	if kind == GadgetKindEnum.S_STAR:
		return {'graph': gen_s_star(_param(p, 'x'), _param(p, 'q'))}
	if kind == GadgetKindEnum.S_XQR:
		return {'graph': gen_s(_param(p, 'x'), _param(p, 'q'), _param(p, 'r'))}
	if kind == GadgetKindEnum.Q_TREE:
		return {'graph': gen_q_tree(_param(p, 'n'))}
	if kind == GadgetKindEnum.GRID:
		m, n = _param(p, 'm'), _param(p, 'n')
		return {'graph': gen_grid(m, n), 'certificate': grid_certificate(m, n)}
	if kind == GadgetKindEnum.BINARY_TREE:
		return {'graph': gen_binary_tree(_param(p, 'h'))}
	if kind == GadgetKindEnum.BLOWUP2:
		return {'graph': blowup2(_graph(graph))}
	if kind == GadgetKindEnum.RED_OF:
		return {'graph': red_of(_graph(graph))}
	if kind == GadgetKindEnum.T_OF:
		res = gen_t_of(_graph(graph), _param(p, 't', None))
		return {
			'graph': res['G'],
			'sequence': res['canonical_partial'],
			'blowup_maps': res['blowup_maps'],
			't': res['t'],
		}
	if kind == GadgetKindEnum.TIGHT_SURFACE_PI1:
		if graph is None:
			graph = gen_stacked_triangulation(_param(p, 'n'), _param(p, 'seed', 0))
		res = gen_tight_surface_pi1(graph)
		return {'graph': res['G'], 'X': res['X'], 'Y': res['Y']}
	if kind == GadgetKindEnum.TIGHT_KTREE_PI1:
		res = gen_tight_ktree_pi1(_param(p, 'k'), _param(p, 'n'))
		return {'graph': res['G'], 'X': res['X'], 'Y': res['Y']}
	if kind == GadgetKindEnum.STACKED_TRIANGULATION:
		return {'graph': gen_stacked_triangulation(_param(p, 'n'), _param(p, 'seed', 0))}

	raise TwinReduceValidationError(  # pragma: no cover
		'gadget {} is not implemented'.format(kind.value),
		code='twinreduce.gadgets.unknown',
	)
