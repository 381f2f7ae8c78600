# -*- coding: utf-8 -*-

"""
Product structure: strong products with a path, rooted tree-decompositions
and product certificates.

A certificate places every vertex of a trigraph ``F`` at a cell
``(h, p)`` of ``H ⊠ P`` where ``P`` is the path ``0, 1, ..., path_len - 1``
(plus optional apex vertices outside the product). Path positions are
called *rows* throughout the package.

The red graphs built from a certificate are measured against the template
``S_{x,q,r}``: a centre ``Q`` of ``2q - 1`` vertices and three arms ``A``,
``B``, ``C`` of levels ``1..x`` with ``q`` vertices each. Template vertices
are keys ``('Q', j)`` or ``(arm, level, j)``, written as ``Q.j`` and
``A2.j`` in JSON.
"""

import logging
import re

import networkx as nx

from ..errors import TwinReduceGraphError
from ..errors import TwinReduceValidationError
from ..models import CertificateReport

from ..codec import graph_from_dict
from ..codec import graph_to_dict
from ..params import validate_tree_decomposition

log = logging.getLogger(__name__)


def _hashable(v):
	if isinstance(v, list):
		return tuple(_hashable(x) for x in v)
	return v


def _sorted(vs):
	vs = list(vs)
	try:
		return sorted(vs)
	except TypeError:
		return sorted(vs, key=repr)


def _jsonable(v):
	if isinstance(v, tuple):
		return [_jsonable(x) for x in v]
	return v


# ----------------------------------------------------------------------------
# strong product

def is_path_graph(P):
	n = P.number_of_nodes()
	if n == 0:
		return False
	if n == 1:
		return True
	return (
		P.number_of_edges() == n - 1 and
		nx.is_connected(P) and
		max(d for _, d in P.degree()) <= 2
	)


def strong_product(H, P):
	"""
	``H ⊠ P``: vertices ``(h, p)``, adjacent when both coordinates are equal
	or adjacent and not both equal

	:param H: graph
	:type H: networkx.Graph
	:param P: path
	:type P: networkx.Graph
	:rtype: networkx.Graph
	:raises ~twinreduce.errors.TwinReduceGraphError: if ``P`` is not a path
	"""
	if not is_path_graph(P):
		raise TwinReduceGraphError(
			'the second factor must be a path',
			code='twinreduce.product.not_a_path',
		)
	return nx.strong_product(H, P)


# ----------------------------------------------------------------------------
# template S_{x,q,r}

_LABEL = re.compile(r'^(Q)\.(\d+)$|^([ABC])(\d+)\.(\d+)$')

ARMS = ('A', 'B', 'C')


def s_label(key):
	"""
	``('Q', 3) -> 'Q.3'``, ``('A', 2, 0) -> 'A2.0'``
	"""
	if key[0] == 'Q':
		return 'Q.{}'.format(key[1])
	return '{}{}.{}'.format(key[0], key[1], key[2])


def s_key(label):
	"""
	Inverse of :func:`s_label`; keys are returned unchanged

	:raises ~twinreduce.errors.TwinReduceValidationError: on a malformed label
	"""
	if isinstance(label, (tuple, list)):
		return tuple(label)
	m = _LABEL.match(label)
	if m is None:
		raise TwinReduceValidationError(
			'invalid template label {!r}'.format(label),
			code='twinreduce.product.invalid_label',
		)
	if m.group(1):
		return ('Q', int(m.group(2)))
	return (m.group(3), int(m.group(4)), int(m.group(5)))


def s_distance(a, b):
	"""
	Distance between two distinct vertices of ``S*_{x,q}``

	:rtype: int
	"""
	a, b = s_key(a), s_key(b)
	la = 0 if a[0] == 'Q' else a[1]
	lb = 0 if b[0] == 'Q' else b[1]
	if a[0] == 'Q' or b[0] == 'Q' or a[0] == b[0]:
		return max(1, abs(la - lb))
	return la + lb


def s_template_adjacent(a, b, r):
	"""
	Adjacency in ``S_{x,q,r}`` by template keys or labels: distance at most
	``r`` in ``S*_{x,q}``, except between the arms ``B`` and ``C``

	:rtype: bool
	"""
	a, b = s_key(a), s_key(b)
	if a == b:
		return False
	if set((a[0], b[0])) == set(('B', 'C')):
		return False
	return s_distance(a, b) <= r


def s_group_size(key, q):
	"""
	Size of the template group of ``key``: ``2q - 1`` for the centre
	"""
	return 2 * q - 1 if s_key(key)[0] == 'Q' else q


# ----------------------------------------------------------------------------
# rooted tree-decompositions

class RootedDecomposition(object):
	"""
	Tree-decomposition with parent pointers.

	A bag is a *leaf* when it has no children and is not the root; the root
	is always internal.

	:param bags: bags, lists of vertices of ``H``
	:type bags: list
	:param parent: parent index of every bag, ``-1`` or :data:`None` for the \
		root
	:type parent: list
	:param root: index of the root, derived from ``parent`` by default
	:type root: int, optional
	"""

	def __init__(self, bags, parent, root=None):
		if len(bags) != len(parent):
			raise TwinReduceValidationError(
				'bags and parent differ in length',
				code='twinreduce.product.invalid_decomposition',
			)
		self.bags = [frozenset(_hashable(v) for v in b) for b in bags]
		self.parent = [None if p is None or int(p) < 0 else int(p) for p in parent]

		roots = [i for i, p in enumerate(self.parent) if p is None]
		if len(roots) != 1 or (root is not None and int(root) != roots[0]):
			raise TwinReduceValidationError(
				'the decomposition must have exactly one root',
				code='twinreduce.product.invalid_decomposition',
				details={'roots': roots},
			)
		self.root = roots[0]
		self.children = [[] for _ in self.bags]
		for i, p in enumerate(self.parent):
			if p is not None:
				if not 0 <= p < len(self.bags):
					raise TwinReduceValidationError(
						'invalid parent of bag {}'.format(i),
						code='twinreduce.product.invalid_decomposition',
						details={'bag': i},
					)
				self.children[p].append(i)

	def __len__(self):
		return len(self.bags)

	def is_leaf(self, i):
		return i != self.root and not self.children[i]

	def new_vertices(self, i):
		"""
		``B - B'`` for the bag ``B`` with parent ``B'`` (the whole root bag)

		:rtype: frozenset
		"""
		p = self.parent[i]
		if p is None:
			return self.bags[i]
		return self.bags[i] - self.bags[p]

	def parent_list(self):
		return [-1 if p is None else p for p in self.parent]

	def width(self):
		return max([len(b) - 1 for b in self.bags] or [0])

	def kq(self):
		"""
		Smallest ``(k, q)`` for which the decomposition is ``(k, q)``-rooted
		(ignoring the empty root condition)

		:rtype: tuple(int, int)
		"""
		k = 0
		q = 0
		for i in range(len(self.bags)):
			if self.is_leaf(i):
				q = max(q, len(self.new_vertices(i)))
			else:
				k = max(k, len(self.bags[i]) - 1)
		return k, q

	@classmethod
	def from_dict(cls, data):
		return cls(data['bags'], data['parent'], data.get('root'))

	def to_dict(self):
		return {
			'bags': [[_jsonable(v) for v in _sorted(b)] for b in self.bags],
			'parent': self.parent_list(),
			'root': self.root,
		}


# ----------------------------------------------------------------------------
# certificates

class ProductCertificate(object):
	"""
	``V(F) ⊆ V(H ⊠ P) (+ K_a)`` together with a rooted tree-decomposition of
	``H``.

	JSON form::

		{
			"H": <graph JSON>,
			"decomp": {"parent": [...], "bags": [[...], ...], "root": i},
			"path_len": l,
			"embed": {"<vertex>": [h, p], ...},
			"apex": [...],
			"r": r
		}

	Rows ``p`` are ``0..path_len - 1``.
	"""

	def __init__(self, H, decomp, path_len, embed, apex=None, r=1):
		self.H = H
		self.decomp = decomp
		self.path_len = int(path_len)
		self.embed = {int(v): (_hashable(hp[0]), int(hp[1])) for v, hp in embed.items()}
		self.apex = sorted(int(a) for a in (apex or []))
		self.r = int(r)

	@classmethod
	def from_dict(cls, data):
		"""
		:rtype: ProductCertificate
		"""
		try:
			return cls(
				graph_from_dict(data['H']),
				RootedDecomposition.from_dict(data['decomp']),
				data['path_len'],
				data['embed'],
				data.get('apex'),
				data.get('r', 1),
			)
		except KeyError as exc:
			raise TwinReduceValidationError(
				'certificate misses {}'.format(exc),
				code='twinreduce.product.invalid_certificate',
				inner=exc,
			)

	def to_dict(self):
		return {
			'H': graph_to_dict(self.H),
			'decomp': self.decomp.to_dict(),
			'path_len': self.path_len,
			'embed': {
				str(v): [_jsonable(h), p]
				for v, (h, p) in sorted(self.embed.items())
			},
			'apex': list(self.apex),
			'r': self.r,
		}

	def reindexed(self, nodes):
		"""
		The same certificate for a trigraph built over ``nodes`` (``nodes[i]``
		becomes base id ``i``)

		:rtype: ProductCertificate
		"""
		index = {v: i for i, v in enumerate(nodes)}
		return ProductCertificate(
			self.H,
			self.decomp,
			self.path_len,
			{index[v]: hp for v, hp in self.embed.items() if v in index},
			[index[a] for a in self.apex if a in index],
			self.r,
		)

	def __repr__(self):
		return '<ProductCertificate |H|={} bags={} path_len={} apex={}>'.format(
			self.H.number_of_nodes(),
			len(self.decomp),
			self.path_len,
			len(self.apex),
		)


def _check(holds, witness=None):
	return {'holds': bool(holds), 'witness': witness}


def _check_decomposition(cert):
	d = cert.decomp
	try:
		validate_tree_decomposition(
			cert.H,
			[list(b) for b in d.bags],
			d.parent_list(),
		)
	except TwinReduceValidationError as exc:
		return _check(False, exc.get_message())
	return _check(True)


def _check_rooted(cert, k, q):
	d = cert.decomp
	if d.bags[d.root]:
		return _check(False, {'root_bag': sorted(d.bags[d.root], key=repr)})
	if len(d) < 2:
		return _check(False, 'the decomposition has a single bag')
	ka, qa = d.kq()
	if k is not None and ka > k:
		bad = [i for i in range(len(d)) if not d.is_leaf(i) and len(d.bags[i]) > k + 1]
		return _check(False, {'internal_bags': bad, 'k': ka})
	if q is not None and qa > q:
		bad = [i for i in range(len(d)) if d.is_leaf(i) and len(d.new_vertices(i)) > q]
		return _check(False, {'leaf_bags': bad, 'q': qa})
	return _check(True)


def _check_embedding(cert, F):
	apex = set(cert.apex)
	live = set(F.vertices())
	seen = {}
	for v, (h, p) in sorted(cert.embed.items()):
		if v not in live:
			return _check(False, {'vertex': v, 'reason': 'not a vertex of F'})
		if v in apex:
			return _check(False, {'vertex': v, 'reason': 'apex vertex is embedded'})
		if h not in cert.H:
			return _check(False, {'vertex': v, 'reason': 'unknown vertex of H'})
		if not 0 <= p < cert.path_len:
			return _check(False, {'vertex': v, 'reason': 'row out of range'})
		if (h, p) in seen:
			return _check(False, {'vertex': v, 'other': seen[(h, p)], 'reason': 'not injective'})
		seen[(h, p)] = v
	for v in sorted(live - apex):
		if v not in cert.embed:
			return _check(False, {'vertex': v, 'reason': 'not embedded'})
	for a in cert.apex:
		if a not in live:
			return _check(False, {'vertex': a, 'reason': 'apex is not a vertex of F'})
	return _check(True)


def _check_red_edges(cert, F):
	d = cert.decomp
	apex = set(cert.apex)
	leaf_of = {}
	for i in range(len(d)):
		if d.is_leaf(i):
			for h in d.new_vertices(i):
				leaf_of[h] = i
	for u, v in F.red_edges():
		if u in apex or v in apex:
			return _check(False, {'edge': [u, v], 'reason': 'red edge at an apex vertex'})
		(hu, pu), (hv, pv) = cert.embed[u], cert.embed[v]
		lu, lv = leaf_of.get(hu), leaf_of.get(hv)
		if lu is None or lu != lv:
			return _check(False, {'edge': [u, v], 'reason': 'ends are not new vertices of one leaf bag'})
		if apex and abs(pu - pv) > cert.r:
			return _check(False, {'edge': [u, v], 'reason': 'rows farther than r'})
	return _check(True)


def _check_neighbourhood(cert, F):
	if cert.apex:
		return _check(True, 'replaced by the second separation condition for apex certificates')
	for u, v in F.black_edges() + F.red_edges():
		pu, pv = cert.embed[u][1], cert.embed[v][1]
		if abs(pu - pv) > cert.r:
			return _check(False, {'edge': [u, v], 'rows': [pu, pv]})
	return _check(True)


def validate_certificate(cert, F, k=None, q=None):
	"""
	Static checks of a product certificate against the trigraph ``F``.

	======================  ==================================================
	check                   condition
	======================  ==================================================
	``tree_decomposition``  the bags form a tree-decomposition of ``H``
	``rooted``              empty root bag, internal bags of at most ``k + 1``
	                        vertices, leaf bags adding at most ``q`` vertices
	``embedding``           every non-apex vertex has one cell, injectively
	``red_edges``           both ends of every red edge are new vertices of the
	                        same leaf bag (and rows at distance at most ``r``
	                        with apex vertices)
	``neighbourhood``       every edge joins rows at distance at most ``r``
	``separation``          not enumerated: checked while building sequences
	======================  ==================================================

	Later checks are skipped (reported as failed) once the embedding fails.

	:param cert: certificate
	:type cert: ProductCertificate
	:param F: trigraph
	:type F: ~twinreduce.core.Trigraph
	:param k: bound on internal bags, not checked by default
	:type k: int, optional
	:param q: bound on leaf bags, not checked by default
	:type q: int, optional
	:rtype: ~twinreduce.models.CertificateReport
	"""
	checks = {
		'tree_decomposition': _check_decomposition(cert),
		'rooted': _check_rooted(cert, k, q),
		'embedding': _check_embedding(cert, F),
	}
	if checks['embedding']['holds']:
		checks['red_edges'] = _check_red_edges(cert, F)
		checks['neighbourhood'] = _check_neighbourhood(cert, F)
	else:
		checks['red_edges'] = _check(False, 'embedding failed')
		checks['neighbourhood'] = _check(False, 'embedding failed')
	checks['separation'] = _check(True, 'checked lazily during construction')

	ka, qa = cert.decomp.kq()
	rep = CertificateReport()
	rep.checks = checks
	rep.k = ka if k is None else k
	rep.q = qa if q is None else q
	rep.ok = all(c['holds'] for c in checks.values())
	if not rep.ok:
		log.warning('certificate checks failed: %s', rep.failed())
	return rep


# ----------------------------------------------------------------------------
# ready-made certificates

def _path_decomposition(m):
	"""
	Empty root, then bags ``{i, i+1}`` along ``P_m``
	"""
	if m == 1:
		return RootedDecomposition([[], [0]], [-1, 0])
	bags = [[]] + [[i, i + 1] for i in range(m - 1)]
	parent = [-1] + list(range(m - 1))
	return RootedDecomposition(bags, parent)


def grid_certificate(m, n):
	"""
	Certificate of the ``m x n`` grid (ids ``i*n + j``) as a subgraph of
	``P_m ⊠ P_n``: vertex ``i*n + j`` sits at ``(i, j)``, the decomposition of
	``P_m`` is ``(1, 1)``-rooted

	:rtype: ProductCertificate
	"""
	if m < 1 or n < 1:
		raise TwinReduceValidationError(
			'grid sides must be positive, got {}x{}'.format(m, n),
			code='twinreduce.product.invalid_param',
		)
	embed = {i * n + j: (i, j) for i in range(m) for j in range(n)}
	return ProductCertificate(nx.path_graph(m), _path_decomposition(m), n, embed)


def path_certificate(n):
	"""
	Certificate of ``P_n`` (ids ``0..n-1``) with ``H = K_1``: one row per
	vertex

	:rtype: ProductCertificate
	"""
	if n < 1:
		raise TwinReduceValidationError(
			'path length must be positive, got {}'.format(n),
			code='twinreduce.product.invalid_param',
		)
	return ProductCertificate(
		nx.empty_graph(1),
		RootedDecomposition([[], [0]], [-1, 0]),
		n,
		{v: (0, v) for v in range(n)},
	)
