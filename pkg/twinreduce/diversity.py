# -*- coding: utf-8 -*-

"""
Distance profiles and neighbourhood diversity.

The distance-``r`` profile of a vertex ``v`` on an anchor set ``A`` maps
every anchor to its distance from ``v``, or to ``∞`` when it is farther than
``r``. The distance-``r`` diversity of ``A`` is the number of distinct
profiles among vertices outside ``A``.

Profiles are encoded as fixed-width strings over ``0-9a-z`` with ``*`` for
``∞``, one character per anchor in anchor order; the encoding is the class
key of a :class:`~twinreduce.models.DiversityReport`.
"""

import logging

import networkx as nx

from .enums import BoundEnum
from .errors import TwinReduceGraphError
from .errors import TwinReduceValidationError
from .models import BoundCheck
from .models import DistanceProfile
from .models import DiversityReport
from .models import MinorWitness

from .params import clique_counts
from .params import col_s_exact
from .params import treewidth_exact
from .params.basic import resolve_settings

log = logging.getLogger(__name__)

_DIGITS = '0123456789abcdefghijklmnopqrstuvwxyz'
INFINITY = '*'


def _check_radius(r):
	if r < 0 or r >= len(_DIGITS):
		raise TwinReduceValidationError(
			'radius must be in 0..{}, got {}'.format(len(_DIGITS) - 1, r),
			code='twinreduce.diversity.invalid_radius',
			details={'r': r},
		)


def _check_anchor(G, A):
	A = list(A)
	unknown = [a for a in A if a not in G]
	if unknown:
		raise TwinReduceValidationError(
			'anchors {} are not vertices of the graph'.format(unknown),
			code='twinreduce.diversity.invalid_anchor',
			details={'unknown': unknown},
		)
	if len(set(A)) != len(A):
		raise TwinReduceValidationError(
			'anchor set has repeated vertices',
			code='twinreduce.diversity.invalid_anchor',
		)
	return A


def _encode(dists):
	return ''.join(INFINITY if d is None else _DIGITS[d] for d in dists)


def profile(G, v, A, r):
	"""
	Distance-``r`` profile of ``v`` on ``A``

	:param G: graph
	:type G: networkx.Graph
	:param v: vertex outside ``A``
	:param A: anchor vertices, in order
	:type A: list
	:param r: radius
	:type r: int
	:rtype: ~twinreduce.models.DistanceProfile
	:raises ~twinreduce.errors.TwinReduceValidationError: if ``v`` is an anchor
	"""
	_check_radius(r)
	A = _check_anchor(G, A)
	if v in A:
		raise TwinReduceValidationError(
			'vertex {!r} is an anchor'.format(v),
			code='twinreduce.diversity.invalid_anchor',
			details={'vertex': v},
		)

	dist = nx.single_source_shortest_path_length(G, v, cutoff=r)
	values = [dist.get(a) for a in A]

	p = DistanceProfile()
	p.vertex = v
	p.anchor = A
	p.entries = dict(zip(A, values))
	p.r = r
	p.key = _encode(values)
	return p


def _profiles(G, A, r):
	"""
	Keys of all vertices outside ``A``, computed by one truncated BFS per
	anchor

	:rtype: dict
	"""
	from_anchor = [nx.single_source_shortest_path_length(G, a, cutoff=r) for a in A]
	anchors = set(A)
	return {
		v: [d.get(v) for d in from_anchor]
		for v in G.nodes() if v not in anchors
	}


def _sorted(items):
	try:
		return sorted(items)
	except TypeError:
		return sorted(items, key=repr)


def _sorted_sets(sets):
	return sorted(sets, key=lambda s: (len(s), _sorted(s)))


def diversity(G, A, r):
	"""
	Distance-``r`` diversity of ``A`` with the classes of equal profiles

	:param G: graph
	:type G: networkx.Graph
	:param A: anchor vertices, in order
	:type A: list
	:param r: radius
	:type r: int
	:rtype: ~twinreduce.models.DiversityReport
	"""
	_check_radius(r)
	A = _check_anchor(G, A)

	groups = {}
	for v, values in _profiles(G, A, r).items():
		key = _encode(values)
		g = groups.get(key)
		if g is None:
			g = groups[key] = {
				'key': key,
				'profile': dict(zip(A, values)),
				'members': [],
			}
		g['members'].append(v)

	classes = []
	for key in sorted(groups):
		g = groups[key]
		g['members'] = _sorted(g['members'])
		classes.append(g)

	rep = DiversityReport()
	rep.anchor = A
	rep.r = r
	rep.classes = classes
	rep.count = len(classes)
	log.debug('diversity of %s anchors at radius %s: %s', len(A), r, rep.count)
	return rep


def diversity_bruteforce(G, A, r):
	"""
	Distance-``r`` diversity by pairwise comparison of per-vertex profiles

	:rtype: int
	"""
	_check_radius(r)
	A = _check_anchor(G, A)
	anchors = set(A)

	seen = []
	for v in G.nodes():
		if v in anchors:
			continue
		dist = nx.single_source_shortest_path_length(G, v, cutoff=r)
		entries = [dist.get(a) for a in A]
		if not any(entries == other for other in seen):
			seen.append(entries)
	return len(seen)


def neighbourhood_classes(G, A):
	"""
	Distinct sets ``N(u) ∩ A`` over vertices ``u`` outside ``A``; their number
	is the distance-1 diversity

	:rtype: list(frozenset)
	"""
	A = _check_anchor(G, A)
	anchors = set(A)
	res = set()
	for u in G.nodes():
		if u not in anchors:
			res.add(frozenset(anchors.intersection(G.neighbors(u))))
	return _sorted_sets(res)


def second_neighbourhood_classes(G, X):
	"""
	Distinct sets ``N²(v) ∩ X`` over vertices ``v`` at distance at least 2
	from ``X``

	:rtype: list(frozenset)
	"""
	X = _check_anchor(G, X)
	near = set(X)
	for x in X:
		near.update(G.neighbors(x))

	res = set()
	for v in G.nodes():
		if v in near:
			continue
		dist = nx.single_source_shortest_path_length(G, v, cutoff=2)
		res.add(frozenset(x for x in X if x in dist))
	return _sorted_sets(res)


# ----------------------------------------------------------------------------
# two-level grouping for distance 2

def second_profile_partition(G, X):
	"""
	Groups vertices outside ``X`` in two levels: first by ``N(v) ∩ X``, then,
	inside the first-level class ``Y_i``, by ``N²(v) ∩ X`` in the graph where
	the edges between ``Y_i`` and ``X`` are deleted.

	Two vertices in the same group have equal distance-2 profiles on ``X``,
	so the distance-2 diversity is at most the number of groups, which is at
	most ``s * t`` (``s`` first-level classes, at most ``t`` groups in each).

	The returned report lists the classes of ``Z = V(G) - N[X]`` under the
	second level as its ``classes``; the extra keys ``groups``, ``s``,
	``t``, ``pi2`` and ``consistent`` describe the full grouping and the
	cross-check against :func:`diversity`.

	:param G: graph
	:type G: networkx.Graph
	:param X: anchor set
	:type X: list
	:rtype: ~twinreduce.models.DiversityReport
	"""
	X = _check_anchor(G, X)
	anchors = set(X)

	first = {}
	for v in G.nodes():
		if v in anchors:
			continue
		key = frozenset(anchors.intersection(G.neighbors(v)))
		first.setdefault(key, []).append(v)

	groups = []
	second_of = {}
	for key in _sorted_sets(first):
		members = first[key]
		Gi = G.copy()
		Gi.remove_edges_from([(v, x) for v in members for x in key])
		inner = {}
		for v in members:
			dist = nx.single_source_shortest_path_length(Gi, v, cutoff=2)
			sec = frozenset(x for x in X if x in dist)
			second_of[v] = sec
			inner.setdefault(sec, []).append(v)
		for sec in _sorted_sets(inner):
			groups.append({
				'first': _sorted(key),
				'second': _sorted(sec),
				'members': _sorted(inner[sec]),
			})

	s = len(first)
	t = 0
	for key in first:
		t = max(t, len(set(second_of[v] for v in first[key])))

	# classes of Z by the second level
	z_classes = {}
	for v in G.nodes():
		if v in anchors or _touches(G, v, anchors):
			continue
		z_classes.setdefault(second_of[v], []).append(v)

	classes = []
	for sec in _sorted_sets(z_classes):
		values = [2 if x in sec else None for x in X]
		classes.append({
			'key': _encode(values),
			'profile': dict(zip(X, values)),
			'members': _sorted(z_classes[sec]),
		})
	classes.sort(key=lambda c: c['key'])

	full = diversity(G, X, 2)
	class_of = {}
	for c in full.classes:
		for v in c['members']:
			class_of[v] = c['key']
	refines = all(
		len(set(class_of[v] for v in g['members'])) == 1
		for g in groups
	)

	rep = DiversityReport()
	rep.anchor = X
	rep.r = 2
	rep.classes = classes
	rep.count = len(classes)
	rep['groups'] = groups
	rep['s'] = s
	rep['t'] = t
	rep['pi2'] = full.count
	rep['consistent'] = refines and full.count <= len(groups) <= s * t
	return rep


def _touches(G, v, anchors):
	"""
	:data:`True` when ``v`` has a neighbour in ``anchors``
	"""
	return any(u in anchors for u in G.neighbors(v))


# ----------------------------------------------------------------------------
# closed-form bounds

def surface_bound(size, gamma):
	"""
	Distance-1 diversity bound for Euler genus ``gamma``, ``size >= 2``.

	``6|X| + 5γ - 9``, but never below ``4``: two anchors always allow the
	four classes ``∅, {x1}, {x2}, {x1, x2}``.
	"""
	return max(4, 6 * size + 5 * gamma - 9)


def surface_second_bound(size, gamma):
	"""
	Bound on ``|{N²(v) ∩ X : v ∈ Z}|`` for Euler genus ``gamma``, ``size >= 2``
	"""
	g2 = gamma * gamma
	return (60 * g2 + 125 * gamma + 68) * size - 120 * g2 - 250 * gamma - 132


def treewidth_bound(size, k):
	if k <= 1:
		return max(1, 2 * size)
	if size <= k:
		return 2 ** size
	return (2 ** k - 1) * (size - k) + 2 ** k


def degen_bound(size, d):
	if size < d:
		return 2 ** size
	return min(2 ** d * (size - d + 1), 2 ** size)


_RADIUS = {
	BoundEnum.SURFACE: 1,
	BoundEnum.TREEWIDTH: 1,
	BoundEnum.COL: 1,
	BoundEnum.DEGEN: 1,
	BoundEnum.SURFACE_SECOND: 2,
	BoundEnum.SURFACE_NU2: 2,
	BoundEnum.NU2: 2,
}


def _require(params, name, bound):
	v = params.get(name)
	if v is None:
		raise TwinReduceValidationError(
			'bound {} needs parameter {!r}'.format(bound.value, name),
			code='twinreduce.diversity.missing_param',
			details={'bound': bound.value, 'param': name},
		)
	return v


def _surface_gamma(G, A, params, bound):
	gamma = int(_require(params, 'gamma', bound))
	if len(A) < 2:
		raise TwinReduceValidationError(
			'bound {} needs at least 2 anchors'.format(bound.value),
			code='twinreduce.diversity.anchor_too_small',
			details={'size': len(A)},
		)
	if gamma == 0 and not nx.check_planarity(G)[0]:
		raise TwinReduceGraphError(
			'gamma=0 claimed for a non-planar graph',
			code='twinreduce.diversity.not_planar',
		)
	return gamma


def check_bound(G, A, r, bound, params=None, settings=None):
	"""
	Compares a diversity quantity with its closed-form bound.

	=================  ========================================  =================
	bound              left side                                 parameters
	=================  ========================================  =================
	``surface``        distance-1 diversity                      ``gamma``
	``treewidth``      distance-1 diversity                      ``k`` (computed)
	``col``            distance-1 diversity                      ``c`` (computed)
	``degen``          distance-1 diversity                      ``d``
	``surface_second`` ``|{N²(v) ∩ X : v ∉ N[X]}|``              ``gamma``
	``surface_nu2``    distance-2 diversity                      ``gamma``
	``nu2``            distance-2 diversity                      ``t`` or ``gamma``
	``trivial``        distance-``r`` diversity                  none
	=================  ========================================  =================

	``r`` is only used by ``trivial``; the other bounds have a fixed radius,
	which is reported in the result. ``k`` and ``c`` default to exact
	treewidth and exact ``col_5``.

	:param bound: bound name
	:type bound: str or ~twinreduce.enums.BoundEnum
	:param params: bound parameters
	:type params: dict, optional
	:rtype: ~twinreduce.models.BoundCheck
	:raises ~twinreduce.errors.TwinReduceValidationError: on a missing \
		parameter, or fewer than 2 anchors for the surface bounds
	:raises ~twinreduce.errors.TwinReduceGraphError: when ``gamma=0`` is \
		claimed for a non-planar graph
	"""
	try:
		bound, = BoundEnum.parse_many(bound)
	except ValueError as exc:
		raise TwinReduceValidationError(
			'unknown bound {!r}'.format(bound),
			code='twinreduce.diversity.unknown_bound',
			inner=exc,
		)
	A = _check_anchor(G, A)
	params = dict(params or {})
	st = resolve_settings(settings)
	radius = _RADIUS.get(bound, r)
	size = len(A)

	if bound == BoundEnum.SURFACE:
		gamma = _surface_gamma(G, A, params, bound)
		lhs = len(neighbourhood_classes(G, A))
		rhs = surface_bound(size, gamma)
	elif bound == BoundEnum.TREEWIDTH:
		k = params.get('k')
		if k is None:
			k = params['k'] = treewidth_exact(G, settings=st).value
		lhs = len(neighbourhood_classes(G, A))
		rhs = treewidth_bound(size, int(k))
	elif bound == BoundEnum.COL:
		c = params.get('c')
		if c is None:
			c = params['c'] = col_s_exact(G, 5, settings=st).value
		lhs = len(neighbourhood_classes(G, A))
		rhs = degen_bound(size, max(0, int(c) - 1))
	elif bound == BoundEnum.DEGEN:
		d = int(_require(params, 'd', bound))
		lhs = len(neighbourhood_classes(G, A))
		rhs = degen_bound(size, d)
	elif bound == BoundEnum.SURFACE_SECOND:
		gamma = _surface_gamma(G, A, params, bound)
		lhs = len(second_neighbourhood_classes(G, A))
		rhs = surface_second_bound(size, gamma)
	elif bound == BoundEnum.SURFACE_NU2:
		gamma = _surface_gamma(G, A, params, bound)
		lhs = diversity(G, A, 2).count
		rhs = surface_bound(size, gamma) * surface_second_bound(size, gamma)
	elif bound == BoundEnum.NU2:
		t = params.get('t')
		if t is None:
			gamma = _surface_gamma(G, A, params, bound)
			t = params['t'] = surface_second_bound(size, gamma)
		lhs = diversity(G, A, 2).count
		rhs = len(neighbourhood_classes(G, A)) * int(t)
	else:
		_check_radius(r)
		lhs = diversity(G, A, r).count
		rhs = (r + 1) ** size

	res = BoundCheck()
	res.bound = bound
	res.lhs = lhs
	res.rhs = rhs
	res.holds = lhs <= rhs
	res.radius = radius
	res.params = params
	if not res.holds:
		log.warning('bound %s violated: %s > %s', bound.value, lhs, rhs)
	return res


# ----------------------------------------------------------------------------
# shallow minors of bipartite graphs

def _check_bipartition(G, X):
	inside = set(X)
	for u, v in G.edges():
		if (u in inside) == (v in inside):
			raise TwinReduceGraphError(
				'edge {!r}-{!r} does not cross the bipartition'.format(u, v),
				code='twinreduce.diversity.not_bipartite',
				details={'edge': [u, v]},
			)


def shallow_minor_witness(G, X, t=3):
	"""
	Builds a 1-shallow minor ``H`` on ``X`` which bounds the number of
	distinct neighbourhoods of ``Y = V(G) - X``.

	Among vertices of ``Y`` with pairwise distinct neighbourhoods, every
	vertex of degree 2 gives the edge ``N(v)`` of ``H``; vertices of larger
	degree are then scanned in id order and give an edge whenever some pair
	of their neighbours is not yet an edge. Each such vertex is contracted
	into the smaller end of its edge, so every branch set is a star centred
	in ``X``.

	The inequality compares the number of distinct ``N(u), u ∈ Y`` with the
	number of cliques of ``H`` of order at most ``t - 2`` (at most ``2`` for
	``t = 3``); it holds whenever ``K_t`` is not a 1-shallow minor of ``G``.

	:param G: bipartite graph
	:type G: networkx.Graph
	:param X: one side of the bipartition
	:type X: list
	:param t: excluded shallow clique minor, at least 3
	:type t: int
	:rtype: ~twinreduce.models.MinorWitness
	:raises ~twinreduce.errors.TwinReduceGraphError: when ``X`` and its \
		complement do not split ``G`` into two independent sets
	"""
	if t < 3:
		raise TwinReduceValidationError(
			't must be at least 3, got {}'.format(t),
			code='twinreduce.diversity.invalid_t',
			details={'t': t},
		)
	X = _sorted(_check_anchor(G, X))
	_check_bipartition(G, X)
	inside = set(X)

	# one representative per distinct neighbourhood
	reps = {}
	for v in _sorted(u for u in G.nodes() if u not in inside):
		key = frozenset(G.neighbors(v))
		if key not in reps:
			reps[key] = v

	pairs = {}
	for key, v in reps.items():
		if len(key) == 2:
			pairs[frozenset(key)] = v
	for v in _sorted(v for key, v in reps.items() if len(key) > 2):
		nbs = _sorted(G.neighbors(v))
		for i in range(len(nbs)):
			found = None
			for j in range(i + 1, len(nbs)):
				pair = frozenset((nbs[i], nbs[j]))
				if pair not in pairs:
					found = pair
					break
			if found is not None:
				pairs[found] = v
				break

	H = nx.Graph()
	H.add_nodes_from(X)
	branch = {x: [x] for x in X}
	A = []
	edges = []
	for pair, v in sorted(pairs.items(), key=lambda kv: _sorted(kv[0])):
		a, b = _sorted(pair)
		H.add_edge(a, b)
		edges.append([a, b])
		branch[a].append(v)
		A.append(v)

	kmax = max(2, t - 2)
	counts = clique_counts(H, kmax)

	res = MinorWitness()
	res.X = X
	res.A = _sorted(A)
	res.H_edges = edges
	res.branch_sets = {x: _sorted(branch[x]) for x in X}
	res.lhs = len(reps)
	res.rhs = sum(counts)
	res.holds = res.lhs <= res.rhs
	res.t = t
	return res
