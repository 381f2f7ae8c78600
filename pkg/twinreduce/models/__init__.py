# -*- coding: utf-8 -*-

"""
Result models

Every result of the library is a :class:`dict` (so it goes straight to
:func:`json.dumps`) with typed properties on top of it.
"""

import pydash

from ..enums import ParamEnum
from ..enums import BoundEnum
from ..enums import SuiteEnum
from ..enums import GadgetKindEnum

from twinreduce._internals.decorators import dict_property
from twinreduce._internals.decorators import dict_enum_property


class BaseModel(dict):
	def __init__(self, raw=None):
		if raw is None:
			raw = {}
		super(BaseModel, self).__init__(raw)

	@property
	def raw(self):
		"""
		Provides access to raw model data, as it would be written to JSON

		:getter: Get, property is readonly
		:rtype: dict
		"""
		return self


class ParamResult(BaseModel):
	"""
	Value of a graph parameter together with a witness, which certifies it.

	The kind of the witness depends on the parameter:

	- bandwidth, strong colouring numbers: an ordering (list of nodes);
	- degeneracy: the peeling order;
	- pathwidth, treewidth: a decomposition ``{'bags': [...], 'parent': [...]}``
	  (``parent[i] == -1`` for the root) and the ordering it was built from.
	"""

	@dict_property('name', str)
	def name(self, value):
		"""
		Parameter name

		<AUTO>
		"""
		return value

	@dict_property('value', int)
	def value(self, value):
		"""
		Value. For ``exceeds_cap`` results this is :data:`None`

		<AUTO>
		"""
		return value

	@dict_property('exact', bool)
	def exact(self, value):
		"""
		:data:`True` when the value is proven optimal

		<AUTO>
		"""
		return value

	@dict_property('witness')
	def witness(self, value):
		return value

	@dict_property('exceeds_cap', bool)
	def exceeds_cap(self, value):
		"""
		The search proved that the value is larger than the requested cap

		<AUTO>
		"""
		return value

	@dict_property('lower_bound', int)
	def lower_bound(self, value):
		return value

	@dict_property('states_explored', int)
	def states_explored(self, value):
		return value


class OracleResult(BaseModel):
	"""
	Reduced parameter of a graph with an optimal (or best-found) sequence

	The sequence is stored in its JSON form; use :attr:`optimal_sequence`
	to get a :class:`~twinreduce.core.sequence.ReductionSequence`.
	"""

	@dict_enum_property('param', ParamEnum)
	def param(self, value):
		"""
		Parameter applied to red graphs

		<AUTO>
		"""
		return value

	@dict_property('value', int)
	def value(self, value):
		return value

	@dict_property('exact', bool)
	def exact(self, value):
		return value

	@dict_property('states_explored', int)
	def states_explored(self, value):
		"""
		Number of partitions stored in the memo table (oracle) or number of
		evaluated candidate merges (greedy strategies)

		<AUTO>
		"""
		return value

	@dict_property('strategy', str)
	def strategy(self, value):
		return value

	@property
	def optimal_sequence(self):
		"""
		:getter: Get, property is readonly
		:rtype: ~twinreduce.core.sequence.ReductionSequence
		"""
		from twinreduce.core.sequence import ReductionSequence

		raw = pydash.get(self.raw, 'optimal_sequence')
		if raw is None:
			return None
		return ReductionSequence.from_dict(raw)


class DistanceProfile(BaseModel):
	"""
	Truncated distances from one vertex to an ordered anchor set

	``entries`` maps every anchor (as in the input graph) to a distance
	``0..r`` or :data:`None` (``∞``, farther than ``r``). ``key`` is the
	fixed-width encoding used for grouping.
	"""

	@dict_property('vertex')
	def vertex(self, value):
		return value

	@dict_property('anchor')
	def anchor(self, value):
		return value

	@dict_property('entries')
	def entries(self, value):
		return value

	@dict_property('r', int)
	def r(self, value):
		return value

	@dict_property('key', str)
	def key(self, value):
		return value


class DiversityReport(BaseModel):
	"""
	Classes of vertices outside the anchor set with equal profiles

	``classes`` is a list of ``{'key': str, 'profile': {...}, 'members': [...]}``
	sorted by ``key``.
	"""

	@dict_property('anchor')
	def anchor(self, value):
		return value

	@dict_property('r', int)
	def r(self, value):
		return value

	@dict_property('classes')
	def classes(self, value):
		return value

	@dict_property('count', int)
	def count(self, value):
		"""
		Number of classes, the distance-r diversity

		<AUTO>
		"""
		return value


class BoundCheck(BaseModel):

	@dict_enum_property('bound', BoundEnum)
	def bound(self, value):
		return value

	@dict_property('holds', bool)
	def holds(self, value):
		return value

	@dict_property('lhs', int)
	def lhs(self, value):
		return value

	@dict_property('rhs', int)
	def rhs(self, value):
		return value

	@dict_property('radius', int)
	def radius(self, value):
		return value

	@dict_property('params')
	def params(self, value):
		return value


class MinorWitness(BaseModel):
	"""
	A 1-shallow minor ``H`` of a bipartite graph on the vertex set ``X``,
	with branch sets, and the resulting neighbourhood-count inequality.
	"""

	@dict_property('X')
	def X(self, value):
		return value

	@dict_property('A')
	def A(self, value):
		"""
		Vertices of ``Y`` with three or more neighbours, each of them used to
		create one edge of ``H``

		<AUTO>
		"""
		return value

	@dict_property('H_edges')
	def H_edges(self, value):
		return value

	@dict_property('branch_sets')
	def branch_sets(self, value):
		return value

	@dict_property('lhs', int)
	def lhs(self, value):
		return value

	@dict_property('rhs', int)
	def rhs(self, value):
		return value

	@dict_property('holds', bool)
	def holds(self, value):
		return value

	@dict_property('t', int)
	def t(self, value):
		return value


class CertificateReport(BaseModel):
	"""
	Result of static checks of a product certificate.

	``checks`` maps a check name to ``{'holds': bool, 'witness': ...}``.
	"""

	@dict_property('ok', bool)
	def ok(self, value):
		return value

	@dict_property('checks')
	def checks(self, value):
		return value

	@dict_property('k', int)
	def k(self, value):
		return value

	@dict_property('q', int)
	def q(self, value):
		return value

	def failed(self):
		"""
		Names of violated checks

		:rtype: list(str)
		"""
		return sorted(
			name for name, c in (self.checks or {}).items()
			if not c.get('holds')
		)


class CheckResult(BaseModel):

	@dict_property('name', str)
	def name(self, value):
		return value

	@dict_property('claim', str)
	def claim(self, value):
		"""
		The inequality (or equality) being verified, in words

		<AUTO>
		"""
		return value

	@dict_property('lhs')
	def lhs(self, value):
		return value

	@dict_property('rhs')
	def rhs(self, value):
		return value

	@dict_property('holds', bool)
	def holds(self, value):
		return value

	@dict_property('runtime_ms', int)
	def runtime_ms(self, value):
		return value


class VerifyReport(BaseModel):

	@dict_enum_property('suite', SuiteEnum)
	def suite(self, value):
		return value

	@dict_property('seed', int)
	def seed(self, value):
		return value

	@dict_property('version', str)
	def version(self, value):
		return value

	@dict_property('generated_at', str)
	def generated_at(self, value):
		return value

	@dict_property('input_hash', str)
	def input_hash(self, value):
		return value

	@property
	def checks(self):
		"""
		:getter: Get, property is readonly
		:rtype: list(CheckResult)
		"""
		return [CheckResult(c) for c in self.raw.get('checks') or []]

	@dict_property('summary')
	def summary(self, value):
		return value

	@property
	def ok(self):
		"""
		:data:`True` when every check holds

		:getter: Get, property is readonly
		:rtype: bool
		"""
		return all(c.holds for c in self.checks)


class GadgetSpec(BaseModel):
	"""
	A named construction with its integer parameters, see
	:func:`twinreduce.gadgets.generate`
	"""

	@dict_enum_property('kind', GadgetKindEnum)
	def kind(self, value):
		return value

	@dict_property('params')
	def params(self, value):
		"""
		``{name: int}``

		<AUTO>
		"""
		return value
