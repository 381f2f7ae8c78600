# -*- coding: utf-8 -*-

"""
Reduction sequences of trigraphs embedded in ``H ⊠ P``.

The builder walks the rooted decomposition from the deepest internal bag
upwards. Every step replaces a bag and its leaf children by one leaf bag
with at most ``q`` new vertices per row, merging the cells of each row
which have equal neighbourhoods outside the active block. Rows are
processed in increasing order, so red edges always stay between nearby
rows and every red component fits the template ``S_{x,q,r}``.
"""

import logging

import networkx as nx

from ..errors import TwinReduceCertificateError
from ..errors import TwinReduceError
from ..errors import TwinReduceSeparationError
from ..errors import TwinReduceValidationError
from ..models import CertificateReport

from ..core import ReductionSequence
from ..core import Trigraph
from ..core import replay
from ..core import restrict_sequence
from ..core import witness_bandwidth

from .structure import ProductCertificate
from .structure import s_group_size
from .structure import s_label
from .structure import s_template_adjacent
from .structure import validate_certificate

from twinreduce._internals import iter_bits
from twinreduce._internals import sorted_nodes

log = logging.getLogger(__name__)


def width_bounds(q, r):
	"""
	Certified bounds for template parameters ``q`` and ``r``

	:returns: ``{'witness_bandwidth': (2r+2)q-2, 'red_degree': (3r+2)q-2}``
	:rtype: dict
	"""
	return {
		'witness_bandwidth': (2 * r + 2) * q - 2,
		'red_degree': (3 * r + 2) * q - 2,
	}


class ProductSequence(object):
	"""
	A reduction sequence built from a product certificate.

	:ivar sequence: the sequence (over the padded base in padding mode)
	:ivar templates: ``{step: {vertex: template key}}`` for every step of the \
		first part
	:ivar q: template parameter the sequence was built with
	:ivar r: radius
	:ivar apex: apex vertex ids
	:ivar part1_steps: number of merges before the apex vertices are touched
	:ivar projected: ``(sequence, index)`` over the real vertices, padding \
		mode only
	"""

	def __init__(
		self,
		sequence,
		templates,
		q,
		r,
		apex=(),
		part1_steps=None,
		projected=None,
		nodes=None,
	):
		self.sequence = sequence
		self.templates = templates
		self.q = q
		self.r = r
		self.apex = list(apex)
		self.part1_steps = len(sequence) if part1_steps is None else part1_steps
		self.projected = projected
		#: original graph node of every base id (power sequences)
		self.nodes = nodes

	@property
	def padded(self):
		return self.projected is not None

	@property
	def a(self):
		return len(self.apex)

	@property
	def bounds(self):
		"""
		Bounds of the first part, and of the whole sequence under ``full``

		:getter: Get, property is readonly
		:rtype: dict
		"""
		res = width_bounds(self.q, self.r)
		res['full'] = width_bounds(self.q + self.a, self.r)
		return res

	def to_dict(self):
		res = {
			'sequence': self.sequence.to_dict(),
			'templates': {
				str(step): {str(v): s_label(key) for v, key in sorted(tmpl.items())}
				for step, tmpl in sorted(self.templates.items())
			},
			'q': self.q,
			'r': self.r,
			'apex': list(self.apex),
			'part1_steps': self.part1_steps,
			'bounds': self.bounds,
			'padded': self.padded,
		}
		if self.projected is not None:
			seq, index = self.projected
			res['projected'] = seq.to_dict()
			res['index'] = {str(k): v for k, v in sorted(index.items())}
		return res

	def __repr__(self):
		return '<ProductSequence merges={} q={} r={} a={}>'.format(
			len(self.sequence), self.q, self.r, self.a,
		)


class _Builder(object):
	"""
	Mutable state of one run: the live trigraph, the cells ``(slot, row)``
	of the product and the working tree of bags.

	H vertices become slots ``0..|H|-1``; bags created by reductions get fresh
	slots.
	"""

	def __init__(self, F, cert, q, r):
		self.T = F.copy()
		self.base = F
		self.q = q
		self.r = r
		self.rows = cert.path_len
		self.apex = set(cert.apex)

		hnodes = sorted_nodes(cert.H)
		slot = {h: i for i, h in enumerate(hnodes)}
		self.names = list(hnodes)

		d = cert.decomp
		self.bags = {i: frozenset(slot[h] for h in b) for i, b in enumerate(d.bags)}
		self.parent = dict(enumerate(d.parent))
		self.root = d.root
		self._next_node = len(d.bags)

		self.cells = {}
		self.row_of = {}
		for v, (h, p) in cert.embed.items():
			self.cells[(slot[h], p)] = v
			self.row_of[v] = p

		self.merges = []
		self.witnesses = {}
		self.templates = {}

		# id -> side (1, 2) for cells of the block under reduction
		self.active = None
		self.frontier = -1

		self._snapshot()

	# ------------------------------------------------------------------------
	# tree

	def _children(self, b):
		return sorted(c for c, p in self.parent.items() if p == b)

	def _order(self):
		depth = {self.root: 0}
		pre = {}
		stack = [self.root]
		while stack:
			b = stack.pop()
			pre[b] = len(pre)
			for c in reversed(self._children(b)):
				depth[c] = depth[b] + 1
				stack.append(c)
		return depth, pre

	def _add_bag(self, bag, parent):
		b = self._next_node
		self._next_node += 1
		self.bags[b] = frozenset(bag)
		self.parent[b] = parent
		return b

	def _drop_bag(self, b):
		del self.bags[b]
		del self.parent[b]

	def _fresh_slot(self):
		s = len(self.names)
		self.names.append('Z{}'.format(s))
		return s

	def _slot_names(self, slots):
		return sorted((self.names[s] for s in slots), key=repr)

	# ------------------------------------------------------------------------
	# witnesses

	def _is_reduced(self, v):
		return (
			self.active is not None and
			v in self.active and
			self.row_of[v] <= self.frontier
		)

	def _side(self, v):
		if self.active is None or self._is_reduced(v):
			return 0
		return self.active.get(v, 0)

	def _snapshot(self, templates=True):
		"""
		Witness ordering (and template keys) of the current red graph
		"""
		step = len(self.merges)
		order = []
		tmpl = {}
		comps = [
			sorted(c) for c in nx.connected_components(self.T.red_graph())
			if len(c) > 1
		]
		for comp in sorted(comps):
			if not templates or self.apex.intersection(comp):
				order.extend(comp)
				continue
			reduced = [self.row_of[v] for v in comp if self._is_reduced(v)]
			centre = max(reduced) if reduced else min(self.row_of[v] for v in comp)
			members = sorted(comp, key=lambda v: (self.row_of[v], self._side(v), v))
			used = {}
			for v in members:
				d = self.row_of[v] - centre
				if d == 0:
					group = ('Q',)
				elif d < 0:
					group = ('A', -d)
				else:
					group = ('C' if self._side(v) == 2 else 'B', d)
				j = used.get(group, 0)
				used[group] = j + 1
				tmpl[v] = group + (j,)
			order.extend(members)
		self.witnesses[step] = order
		if templates:
			self.templates[step] = tmpl

	# ------------------------------------------------------------------------
	# merging

	def _live_mask(self):
		m = 0
		for v in self.T.vertices():
			m |= 1 << v
		return m

	def _merge(self, u, v, row, outer, templates=True):
		w = self.T.merge(u, v)
		if self.T.red_mask(w) & outer:
			raise TwinReduceError(
				'merge of {} and {} created a red edge outside the block'.format(u, v),
				code='twinreduce.product.invariant',
				details={'u': u, 'v': v, 'step': len(self.merges) + 1},
			)
		self.merges.append((u, v, w))
		self.row_of[w] = row
		if self.active is not None:
			self.active.pop(u, None)
			self.active.pop(v, None)
			self.active[w] = 0
		self._snapshot(templates)
		return w

	def _merge_pair(self, cells, outer, row, context):
		"""
		Merges the two smallest parts of the largest signature class of
		``cells`` (signatures restricted to ``outer``)
		"""
		classes = {}
		for v in cells:
			key = (self.T.black_mask(v) & outer, self.T.red_mask(v) & outer)
			classes.setdefault(key, []).append(v)
		best = min(classes.values(), key=lambda c: (-len(c), min(c)))
		if len(best) < 2:
			details = dict(context)
			details.update({
				'row': row,
				'count': len(classes),
				'signatures': sorted(
					[sorted(iter_bits(b)), sorted(iter_bits(r))]
					for b, r in classes
				),
			})
			log.warning(
				'row %s has %s distinct signatures, more than q=%s',
				row, len(classes), self.q,
			)
			raise TwinReduceSeparationError(
				'row {} can not be reduced to {} parts: {} distinct signatures'.format(
					row, self.q, len(classes),
				),
				code='twinreduce.product.separation',
				details=details,
			)
		u, v = sorted(best)[:2]
		return self._merge(u, v, row, outer)

	def _reduce(self, side1, side2, outer_slots):
		"""
		Reduces the block ``(side1 | side2) x P`` row by row to at most ``q``
		parts per row; returns the new slots
		"""
		block = set(side1) | set(side2)
		self.active = {}
		for s in block:
			for p in range(self.rows):
				v = self.cells.get((s, p))
				if v is not None:
					self.active[v] = 1 if s in side1 else 2
		context = {
			'separation': {
				'C': self._slot_names(block),
				'D': self._slot_names(outer_slots),
			},
			'condition': 'M1' if self.apex else 'D',
		}

		by_row = {}
		for i in range(self.rows):
			self.frontier = i - 1
			cells = sorted(v for v in self.active if self.row_of[v] == i)
			while len(cells) > self.q:
				near = 0
				for v in self.active:
					if abs(self.row_of[v] - i) <= self.r:
						near |= 1 << v
				outer = self._live_mask() & ~near
				self.frontier = i
				self._merge_pair(cells, outer, i, context)
				cells = sorted(v for v in self.active if self.row_of[v] == i)
			by_row[i] = cells

		self.active = None
		self.frontier = -1

		width = max([len(c) for c in by_row.values()] or [0])
		for s in block:
			for p in range(self.rows):
				self.cells.pop((s, p), None)
		new = [self._fresh_slot() for _ in range(width)]
		for i, cells in by_row.items():
			for s, v in zip(new, cells):
				self.cells[(s, i)] = v
		return new

	def _replace(self, side1, side2):
		"""
		New leaf slots for the block ``side1 | side2``; merges only when the
		block is larger than ``q``
		"""
		block = side1 | side2
		if len(block) <= self.q:
			return block
		outer = set(s for b in self.bags.values() for s in b) - block
		return frozenset(self._reduce(side1, side2, outer))

	# ------------------------------------------------------------------------
	# main loop

	def _step(self):
		"""
		One bag replacement; :data:`False` when only the root and one leaf
		remain
		"""
		depth, pre = self._order()
		internal = [b for b in self.bags if b == self.root or self._children(b)]
		b = min(internal, key=lambda x: (-depth[x], pre[x]))
		kids = self._children(b)

		if b == self.root and len(kids) == 1:
			return False

		B = self.bags[b]
		if len(kids) >= 2:
			q1, q2 = kids[0], kids[1]
			side1 = self.bags[q1] - B
			side2 = self.bags[q2] - B
			log.debug('bag %s: joining leaves %s and %s', b, q1, q2)
			Z = self._replace(side1, side2)
			self._drop_bag(q1)
			self._drop_bag(q2)
			self._add_bag(Z | B, b)
		else:
			child = kids[0]
			up = self.parent[b]
			Y = B & self.bags[up]
			side1 = B - Y
			side2 = self.bags[child] - B
			log.debug('bag %s: absorbing its only child %s', b, child)
			Z = self._replace(side1, side2)
			self._drop_bag(child)
			self._drop_bag(b)
			self._add_bag(Z | Y, up)
		return True

	def _sweep(self):
		"""
		Two bags left: merges everything into one part, row after row
		"""
		self.active = {v: 1 for v in self.cells.values()}
		carry = None
		outer = 0
		for i in range(self.rows):
			for c in sorted(v for v in self.active if self.row_of[v] == i):
				if carry is None:
					carry = c
					continue
				self.frontier = i
				carry = self._merge(carry, c, i, outer)
		self.active = None
		self.frontier = -1

	def _sweep_apex(self):
		"""
		Two bags left, apex vertices present: combines rows left to right
		keeping at most ``q`` parts, signatures taken on the rows farther than
		``r`` and the apex vertices
		"""
		self.active = {v: 1 for v in self.cells.values()}
		carried = []
		context = {'separation': {'C': 'rows', 'D': 'apex'}, 'condition': 'M2'}
		apex_mask = 0
		for a in self.apex:
			apex_mask |= 1 << a
		for t in range(self.rows):
			combined = sorted(carried + [v for v in self.active if self.row_of[v] == t])
			for v in combined:
				self.row_of[v] = t
				self.active[v] = 0
			self.frontier = t
			while len(combined) > self.q:
				outer = apex_mask
				for v in self.active:
					if self.row_of[v] >= t + self.r + 1:
						outer |= 1 << v
				self._merge_pair(combined, outer, t, context)
				combined = sorted(v for v in self.active if self.row_of[v] == t)
			carried = combined
		self.active = None
		self.frontier = -1
		return carried

	def build_path(self):
		while self._step():
			pass
		self._sweep()

	def build_apex(self):
		while self._step():
			pass
		carried = self._sweep_apex()
		part1 = len(self.merges)
		log.debug('apex part one: %s merges, %s parts left', part1, len(carried))

		rest = sorted(self.T.vertices())
		carry = rest[0] if rest else None
		for v in rest[1:]:
			carry = self._merge(carry, v, 0, 0, templates=False)
		return part1

	def sequence(self):
		return ReductionSequence(self.base, self.merges, self.witnesses)


# ----------------------------------------------------------------------------
# drivers

def _padded(F, cert):
	"""
	``F`` with an isolated virtual vertex on every empty cell of ``H ⊠ P``
	"""
	n = F.n
	if sorted(F.vertices()) != list(range(n)):
		raise TwinReduceValidationError(
			'padding needs a trigraph on 0..n-1',
			code='twinreduce.product.invalid_base',
		)
	used = set(cert.embed.values())
	embed = dict(cert.embed)
	nxt = n
	for h in sorted_nodes(cert.H):
		for p in range(cert.path_len):
			if (h, p) not in used:
				embed[nxt] = (h, p)
				nxt += 1
	G = Trigraph(nxt, black=F.black_edges(), red=F.red_edges())
	log.debug('padded %s vertices with %s virtual ones', n, nxt - n)

	return G, ProductCertificate(cert.H, cert.decomp, cert.path_len, embed, cert.apex, cert.r)


def _prepare(F, cert, q, r):
	r = cert.r if r is None else int(r)
	if r < 1:
		raise TwinReduceValidationError(
			'radius must be positive, got {}'.format(r),
			code='twinreduce.product.invalid_radius',
		)
	k, leaf_q = cert.decomp.kq()
	if q is None:
		q = max(k + 1, leaf_q, 1)
	elif q < k + 1:
		raise TwinReduceValidationError(
			'q must be at least k+1={}, got {}'.format(k + 1, q),
			code='twinreduce.product.invalid_q',
			details={'k': k, 'q': q},
		)

	rep = validate_certificate(cert, F, q=q)
	if not rep.ok:
		raise TwinReduceCertificateError(
			'certificate violates: {}'.format(', '.join(rep.failed())),
			code='twinreduce.product.invalid_certificate',
			details={'report': rep, 'failed': rep.failed()},
		)
	return q, r


def _run(F, cert, q, r, pad):
	if pad:
		G, c = _padded(F, cert)
	else:
		G, c = F, cert
	b = _Builder(G, c, q, r)
	if c.apex:
		part1 = b.build_apex()
	else:
		b.build_path()
		part1 = None
	seq = b.sequence()
	projected = restrict_sequence(seq, range(F.n)) if pad else None
	res = ProductSequence(seq, b.templates, q, r, c.apex, part1, projected)
	log.info(
		'built %s merges from the product certificate (q=%s, r=%s, apex=%s)',
		len(seq), q, r, len(c.apex),
	)
	return res


def product_path_sequence(F, cert, q=None, r=None, pad=False):
	"""
	Full reduction sequence of a trigraph embedded in ``H ⊠ P``.

	Every red component of every step is a subgraph of ``S_{path_len,q,r}``
	under the emitted template keys, so the red graphs have bandwidth at most
	``(2r+2)q - 2`` (the emitted witness orderings prove it) and maximum
	degree at most ``(3r+2)q - 2``.

	:param F: trigraph on ``0..n-1``
	:type F: ~twinreduce.core.Trigraph
	:param cert: certificate without apex vertices
	:type cert: ~twinreduce.product.ProductCertificate
	:param q: template parameter, ``max(k+1, leaf size)`` by default
	:type q: int, optional
	:param r: radius, taken from the certificate by default
	:type r: int, optional
	:param pad: materialise the empty cells as isolated vertices and project \
		the sequence back
	:type pad: bool
	:rtype: ProductSequence
	:raises ~twinreduce.errors.TwinReduceCertificateError: on a failed static \
		check
	:raises ~twinreduce.errors.TwinReduceSeparationError: when a row has more \
		than ``q`` distinct signatures
	"""
	if cert.apex:
		raise TwinReduceValidationError(
			'certificate has apex vertices, use apex_product_sequence',
			code='twinreduce.product.apex',
		)
	q, r = _prepare(F, cert, q, r)
	return _run(F, cert, q, r, pad)


def apex_product_sequence(F, cert, q=None, r=None, pad=False):
	"""
	Reduction sequence of a trigraph embedded in ``(H ⊠ P) + K_a``.

	The first ``part1_steps`` merges reduce the product part to at most ``q``
	vertices without a single red edge at an apex vertex; the rest merges
	the remaining ``a + q`` vertices. Without apex vertices this is
	:func:`product_path_sequence`.

	:rtype: ProductSequence
	"""
	q, r = _prepare(F, cert, q, r)
	return _run(F, cert, q, r, pad)


def power_sequence(G, cert, r=None, q=None, pad=False):
	"""
	Reduction sequence of ``G^r`` from a product certificate of ``G``.

	With ``q`` left out, building starts at ``max(k+1, leaf size)`` and ``q``
	is raised to the signature count of every row which could not be reduced;
	the final ``q`` is reported on the result.

	:param G: graph
	:type G: networkx.Graph
	:param cert: certificate of ``G`` (its vertices as embed keys)
	:type cert: ~twinreduce.product.ProductCertificate
	:rtype: ProductSequence
	"""
	r = cert.r if r is None else int(r)
	if r < 1:
		raise TwinReduceValidationError(
			'radius must be positive, got {}'.format(r),
			code='twinreduce.product.invalid_radius',
		)
	nodes = sorted_nodes(G)
	F = Trigraph.from_graph(nx.power(G, r) if r > 1 else G, nodes=nodes)
	c = cert.reindexed(nodes)
	c.r = r

	auto = q is None
	if auto:
		k, leaf_q = c.decomp.kq()
		q = max(k + 1, leaf_q, 1)
	while True:
		try:
			res = apex_product_sequence(F, c, q, r, pad)
		except TwinReduceSeparationError as exc:
			if not auto:
				raise
			q = max(q + 1, exc.details['count'])
			log.info('raising q to %s (row %s)', q, exc.details['row'])
			continue
		res.nodes = nodes
		return res


# ----------------------------------------------------------------------------
# verification

def _fail(witness):
	return {'holds': False, 'witness': witness}


def _check_templates(T, tmpl, q, r, step):
	for comp in nx.connected_components(T.red_graph()):
		if len(comp) < 2:
			continue
		seen = {}
		for v in sorted(comp):
			key = tmpl.get(v)
			if key is None:
				return _fail({'step': step, 'vertex': v, 'reason': 'no template key'})
			if key in seen:
				return _fail({'step': step, 'vertex': v, 'other': seen[key], 'reason': 'not injective'})
			if key[-1] >= s_group_size(key, q):
				return _fail({'step': step, 'vertex': v, 'key': s_label(key), 'reason': 'group too large'})
			seen[key] = v
	for u, v in T.red_edges():
		if not s_template_adjacent(tmpl[u], tmpl[v], r):
			return _fail({
				'step': step,
				'edge': [u, v],
				'keys': [s_label(tmpl[u]), s_label(tmpl[v])],
			})
	return None


def check_sequence_bounds(res):
	"""
	Replays a built sequence and checks, at every step, the witness
	bandwidth, the red degree, the template keys and (first part only) the
	red degree of apex vertices.

	:param res: result of a builder
	:type res: ProductSequence
	:rtype: ~twinreduce.models.CertificateReport
	"""
	S = res.sequence
	q, r, a = res.q, res.r, res.a
	apex = list(res.apex)

	checks = {
		'witness_bandwidth': {'holds': True, 'witness': 0},
		'red_degree': {'holds': True, 'witness': 0},
		'templates': {'holds': True, 'witness': None},
		'apex': {'holds': True, 'witness': None},
	}
	try:
		bw = witness_bandwidth(S)
	except TwinReduceValidationError as exc:
		bw = None
		checks['witness_bandwidth'] = _fail(exc.get_message())

	for step, T in enumerate(replay(S, snapshot=False)):
		first = step <= res.part1_steps
		bounds = width_bounds(q if first else q + a, r)

		if bw is not None and checks['witness_bandwidth']['holds']:
			if bw[step] > bounds['witness_bandwidth']:
				checks['witness_bandwidth'] = _fail({
					'step': step, 'value': bw[step], 'bound': bounds['witness_bandwidth'],
				})
			else:
				checks['witness_bandwidth']['witness'] = max(checks['witness_bandwidth']['witness'], bw[step])

		if checks['red_degree']['holds']:
			deg = T.max_red_degree()
			if deg > bounds['red_degree']:
				checks['red_degree'] = _fail({'step': step, 'value': deg, 'bound': bounds['red_degree']})
			else:
				checks['red_degree']['witness'] = max(checks['red_degree']['witness'], deg)

		if first and checks['templates']['holds']:
			tmpl = res.templates.get(step)
			if tmpl is None:
				checks['templates'] = _fail({'step': step, 'reason': 'no templates'})
			else:
				bad = _check_templates(T, tmpl, q, r, step)
				if bad is not None:
					checks['templates'] = bad

		if first and checks['apex']['holds']:
			for x in apex:
				if x in T and T.red_degree(x):
					checks['apex'] = _fail({'step': step, 'vertex': x, 'red_degree': T.red_degree(x)})
					break

	if res.projected is not None:
		seq, _ = res.projected
		bound = width_bounds(q + a, r)['witness_bandwidth']
		value = max(witness_bandwidth(seq) or [0])
		checks['projected'] = {'holds': value <= bound, 'witness': {'value': value, 'bound': bound}}

	rep = CertificateReport()
	rep.checks = checks
	rep.q = q
	rep.ok = all(c['holds'] for c in checks.values())
	if not rep.ok:
		log.warning('sequence bounds violated: %s', rep.failed())
	return rep
