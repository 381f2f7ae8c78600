# -*- coding: utf-8 -*-

"""
Reduction sequences, partitions and sequence scoring.

A :class:`ReductionSequence` is a base trigraph plus an ordered list of
merges ``(u, v, w)``. Every step of a sequence corresponds to a partition of
the base vertex set; :func:`trigraph_of_partition` builds the trigraph of a
partition directly, and :func:`replay` builds it by contracting.
"""

import logging

from ..errors import TwinReduceMergeError
from ..errors import TwinReducePartitionError
from ..errors import TwinReduceValidationError

from twinreduce._internals import iter_bits

from .trigraph import Trigraph

log = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# partitions

def canonical_partition(parts):
	"""
	Order-independent encoding of a partition: elements sorted inside every
	part, parts sorted by their minimum.

	:param parts: iterable of iterables of base vertex ids
	:rtype: tuple(tuple(int))
	"""
	return tuple(sorted(tuple(sorted(p)) for p in parts))


def validate_partition(base, parts):
	"""
	Checks that ``parts`` partitions the vertices of ``base``

	:param base: base trigraph
	:type base: Trigraph
	:returns: canonical partition
	:rtype: tuple(tuple(int))
	:raises ~twinreduce.errors.TwinReducePartitionError: on empty, \
		overlapping or missing parts
	"""
	seen = set()
	for p in parts:
		p = set(p)
		if not p:
			raise TwinReducePartitionError(
				'parts must be nonempty',
				code='twinreduce.partition.empty_part',
			)
		dup = seen & p
		if dup:
			raise TwinReducePartitionError(
				'vertex {} is in more than one part'.format(min(dup)),
				code='twinreduce.partition.overlap',
				details={'vertex': min(dup)},
			)
		seen |= p

	expected = set(base.vertices())
	if seen != expected:
		extra = sorted(seen - expected)
		missing = sorted(expected - seen)
		raise TwinReducePartitionError(
			'parts do not cover the vertex set',
			code='twinreduce.partition.cover',
			details={'missing': missing, 'unknown': extra},
		)
	return canonical_partition(parts)


def trigraph_of_partition(G0, parts):
	"""
	The trigraph associated with a partition of ``V(G0)``.

	One vertex per part (ids ``0..len(parts)-1`` in canonical order, labels
	are the parts). Two parts are joined by a black edge when every pair
	between them is black in ``G0``, by no edge when no pair is an edge, and
	by a red edge otherwise. For bases without red edges this is the
	complete/anticomplete rule; for bases with red edges it matches iterated
	contraction.

	:param G0: base trigraph
	:type G0: Trigraph
	:param parts: partition of ``V(G0)``
	:rtype: Trigraph
	:raises ~twinreduce.errors.TwinReducePartitionError: if ``parts`` is not \
		a partition
	"""
	canon = validate_partition(G0, parts)
	masks = []
	for p in canon:
		m = 0
		for v in p:
			m |= 1 << v
		masks.append(m)

	black = []
	red = []
	for i, X in enumerate(masks):
		for j in range(i + 1, len(masks)):
			Y = masks[j]
			all_black = True
			none = True
			for x in iter_bits(X):
				b = G0.black_mask(x)
				if b & Y != Y:
					all_black = False
				if (b | G0.red_mask(x)) & Y:
					none = False
				if not all_black and not none:
					break
			if all_black:
				black.append((i, j))
			elif not none:
				red.append((i, j))

	labels = {}
	for i, p in enumerate(canon):
		lab = frozenset()
		for v in p:
			lab |= G0.label(v)
		labels[i] = lab

	return Trigraph(len(canon), black=black, red=red, labels=labels)


# ----------------------------------------------------------------------------
# sequences

class ReductionSequence(object):
	"""
	Base trigraph plus an ordered list of merges.

	Merges are validated (and missing fresh ids filled) at construction time
	by replaying them once.

	:param base: base trigraph
	:type base: Trigraph
	:param merges: list of ``(u, v)`` or ``(u, v, w)``
	:type merges: list
	:param witnesses: per-step orderings of the red graph, ``{step: [ids]}`` \
		where step ``0`` is the base and step ``i`` follows the ``i``-th merge
	:type witnesses: dict, optional
	:raises ~twinreduce.errors.TwinReduceMergeError: when a merge references \
		a dead vertex
	"""

	def __init__(self, base, merges=(), witnesses=None):
		self._base = base.copy()
		self._witnesses = {}

		T = base.copy()
		res = []
		for i, m in enumerate(merges):
			m = list(m)
			if len(m) not in (2, 3):
				raise TwinReduceMergeError(
					'merge #{} must be [u, v] or [u, v, w]'.format(i),
					code='twinreduce.sequence.invalid_merge',
					details={'step': i + 1},
				)
			u, v = int(m[0]), int(m[1])
			w = int(m[2]) if len(m) == 3 and m[2] is not None else None
			try:
				w = T.merge(u, v, w)
			except TwinReduceMergeError as exc:
				exc.details = dict(exc.details or {}, step=i + 1)
				log.warning('invalid merge at step %s: %s', i + 1, exc)
				raise
			res.append((u, v, w))
		self._merges = tuple(res)
		self._final_n = T.n

		for step, order in (witnesses or {}).items():
			step = int(step)
			if step < 0 or step > len(res):
				raise TwinReduceValidationError(
					'witness for step {} is out of range'.format(step),
					code='twinreduce.sequence.invalid_witness',
					details={'step': step},
				)
			self._witnesses[step] = [int(x) for x in order]

	@property
	def base(self):
		"""
		A copy of the base trigraph

		:getter: Get, property is readonly
		:rtype: Trigraph
		"""
		return self._base.copy()

	@property
	def merges(self):
		"""
		:getter: Get, property is readonly
		:rtype: tuple(tuple(int, int, int))
		"""
		return self._merges

	@property
	def witnesses(self):
		"""
		:getter: Get, property is readonly
		:rtype: dict(int, list(int))
		"""
		return dict(self._witnesses)

	@property
	def partial(self):
		"""
		:data:`True` when the final trigraph has more than one vertex

		:getter: Get, property is readonly
		:rtype: bool
		"""
		return self._final_n > 1

	def __len__(self):
		return len(self._merges)

	def with_witnesses(self, witnesses):
		return ReductionSequence(self._base, self._merges, witnesses)

	@classmethod
	def from_dict(cls, data):
		"""
		Reads ``{"base": <graph>, "merges": [[u, v, w], ...],
		"witnesses": {"<step>": [...]}}``

		:rtype: ReductionSequence
		"""
		if 'base' not in data:
			raise TwinReduceValidationError(
				'sequence without base',
				code='twinreduce.sequence.no_base',
			)
		return cls(
			Trigraph.from_dict(data['base']),
			data.get('merges') or [],
			data.get('witnesses'),
		)

	def to_dict(self):
		res = {
			'base': self._base.to_dict(),
			'merges': [list(m) for m in self._merges],
			'partial': self.partial,
		}
		if self._witnesses:
			res['witnesses'] = {
				str(k): list(v) for k, v in sorted(self._witnesses.items())
			}
		return res

	def __repr__(self):
		return '<ReductionSequence n={} merges={} partial={}>'.format(
			self._base.n,
			len(self._merges),
			self.partial,
		)


def replay(S, snapshot=True):
	"""
	Yields ``G_n, G_{n-1}, ...``: the base trigraph and the trigraph after
	every merge.

	:param S: sequence
	:type S: ReductionSequence
	:param snapshot: yield independent copies; with :data:`False` the same \
		object is mutated in place between iterations (streaming mode)
	:type snapshot: bool
	:rtype: iterator(Trigraph)
	"""
	T = S.base
	yield T.copy() if snapshot else T
	for u, v, w in S.merges:
		T.merge(u, v, w)
		yield T.copy() if snapshot else T


def partitions(S):
	"""
	Yields the canonical partition of the base vertex set at every step

	:rtype: iterator(tuple(tuple(int)))
	"""
	for T in replay(S, snapshot=False):
		yield canonical_partition(T.label(v) for v in T.vertices())


def _param_value(f, g):
	v = f(g)
	if hasattr(v, 'value'):
		v = v.value
	return int(v)


def sequence_profile(S, f):
	"""
	Values of ``f`` on the red graph of every step (base included)

	:param f: callable on :class:`networkx.Graph`, returning an int or a \
		:class:`~twinreduce.models.ParamResult`
	:rtype: list(int)
	"""
	return [_param_value(f, T.red_graph()) for T in replay(S, snapshot=False)]


def sequence_width(S, f):
	"""
	Width of a sequence under ``f``: the maximum of ``f`` over all red graphs,
	the (red-free) base included.

	:rtype: int
	"""
	return max(sequence_profile(S, f))


def witness_bandwidth(S):
	"""
	Bandwidth of the red graph of every step under the stored witness ordering

	:returns: one value per step
	:rtype: list(int)
	:raises ~twinreduce.errors.TwinReduceValidationError: when a witness is \
		missing or does not list every endpoint of a red edge
	"""
	res = []
	for step, T in enumerate(replay(S, snapshot=False)):
		red = T.red_edges()
		order = S._witnesses.get(step)
		if order is None:
			if red:
				raise TwinReduceValidationError(
					'no witness ordering for step {}'.format(step),
					code='twinreduce.sequence.missing_witness',
					details={'step': step},
				)
			res.append(0)
			continue
		pos = {v: i for i, v in enumerate(order)}
		width = 0
		for u, v in red:
			if u not in pos or v not in pos:
				raise TwinReduceValidationError(
					'witness of step {} misses an end of red edge {}-{}'.format(step, u, v),
					code='twinreduce.sequence.invalid_witness',
					details={'step': step, 'edge': [u, v]},
				)
			width = max(width, abs(pos[u] - pos[v]))
		res.append(width)
	return res


def restrict_sequence(S, keep):
	"""
	Projection of a sequence onto a subset of its base vertices.

	The base of the result is the subtrigraph induced by ``keep`` (relabelled
	to ``0..m-1`` in increasing order). A merge of two parts which both meet
	``keep`` becomes a merge of their restrictions; a merge where only one
	side meets ``keep`` changes nothing and is dropped, as is a merge of two
	parts disjoint from ``keep``.

	Red edges of every projected trigraph are red edges of the corresponding
	original trigraph, so widths never grow. Witness orderings are projected
	along.

	:param S: sequence over the full base
	:type S: ReductionSequence
	:param keep: base vertex ids to keep
	:type keep: iterable(int)
	:returns: ``(sequence, index)``, ``index`` maps an original base id to its \
		id in the new base
	:rtype: tuple
	"""
	base = S.base
	keep = sorted(set(keep))
	index = {v: i for i, v in enumerate(keep)}
	for v in keep:
		if v not in base:
			raise TwinReduceValidationError(
				'vertex {} is not in the base'.format(v),
				code='twinreduce.sequence.invalid_restriction',
			)

	black = [(index[u], index[v]) for u, v in base.black_edges() if u in index and v in index]
	red = [(index[u], index[v]) for u, v in base.red_edges() if u in index and v in index]
	new_base = Trigraph(len(keep), black=black, red=red)
	if base.origin is not None:
		new_base.origin = [base.origin[v] for v in keep]

	# real[x]: id of the projected part of the live (original) part x
	real = {v: index.get(v) for v in base.vertices()}
	given = S.witnesses
	witnesses = {}

	def _project_witness(step, j):
		if step in given:
			witnesses[j] = [real[x] for x in given[step] if real.get(x) is not None]

	_project_witness(0, 0)
	nxt = len(keep)
	merges = []
	for step, (u, v, w) in enumerate(S.merges, 1):
		ru = real.pop(u)
		rv = real.pop(v)
		if ru is not None and rv is not None:
			merges.append((ru, rv, nxt))
			real[w] = nxt
			nxt += 1
			_project_witness(step, len(merges))
		else:
			real[w] = ru if ru is not None else rv

	return ReductionSequence(new_base, merges, witnesses or None), index
