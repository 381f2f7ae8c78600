# -*- coding: utf-8 -*-

import six
from enum import Enum


class PEnum(Enum):
	@classmethod
	def parse_many(cls, value):
		"""
		Parses enum items from string/list

		:param value: string or enumerable with enum items
		:type value: str or list or PEnum
		:returns: list of parsed items
		:rtype: list(PEnum)
		"""
		v = value

		if isinstance(v, six.string_types):
			v = [i.strip() for i in v.split(',') if i]
		elif isinstance(v, Enum):
			v = [v]
		else:
			try:
				v = [i for i in v]
			except TypeError:
				v = [v]

		res = []
		for i in v:
			try:
				x = cls(i)
			except ValueError:
				# probably, there is a name instead of a value
				name = six.text_type(i).upper().replace('-', '_').replace('+', '_')
				if name not in cls.__members__:
					raise ValueError('{!r} is not a valid {}'.format(i, cls.__name__))
				x = cls[name]

			res.append(x)

		return res

	@classmethod
	def values(cls):
		return [i.value for i in cls]


class ParamEnum(PEnum):
	"""
	Graph parameters, which could be applied to red graphs
	"""

	#: Bandwidth
	BW = 'bw'

	#: Maximum degree (reduced maximum degree is twin-width)
	MAXDEG = 'maxdeg'

	#: Pathwidth
	PW = 'pw'

	#: Treewidth
	TW = 'tw'

	#: Maximum number of vertices in a connected component
	STAR = 'star'

	#: Maximum degree plus pathwidth
	MAXDEG_PW = 'maxdeg+pw'

	#: Maximum degree plus treewidth
	MAXDEG_TW = 'maxdeg+tw'

	#: Degeneracy
	DEGENERACY = 'degeneracy'

	#: Strong 2-colouring number (any radius through :func:`twinreduce.params.evaluator`)
	COL = 'col'


class GadgetKindEnum(PEnum):
	"""
	Named constructions, available through :func:`twinreduce.gadgets.generate`
	"""

	S_STAR = 's_star'
	S_XQR = 's_xqr'
	Q_TREE = 'q_tree'
	GRID = 'grid'
	BINARY_TREE = 'binary_tree'
	BLOWUP2 = 'blowup2'
	RED_OF = 'red_of'
	T_OF = 't_of'
	TIGHT_SURFACE_PI1 = 'tight_surface_pi1'
	TIGHT_KTREE_PI1 = 'tight_ktree_pi1'
	STACKED_TRIANGULATION = 'stacked_triangulation'


class SuiteEnum(PEnum):
	"""
	Verification suites of :mod:`twinreduce.verify`
	"""

	EQ1EQ2 = 'eq1eq2'
	PRODUCTPATH_GRIDS = 'productpath-grids'
	PLANAR_PI1 = 'planar-pi1'
	ORACLE_SMALLGRAPHS = 'oracle-smallgraphs'
	TIGHTNESS = 'tightness'
	TOF_SEQUENCE = 'tof-sequence'
	POWER_SQUARES = 'power-squares'
	QTREE_LEAFMERGE = 'qtree-leafmerge'
	CROSS_PARAMS = 'cross-params'


class BoundEnum(PEnum):
	"""
	Closed-form bounds on neighbourhood diversity
	"""

	#: ``6|X| + 5γ - 9`` (first neighbourhoods, Euler genus γ)
	SURFACE = 'surface'

	#: ``(2^k - 1)(|A| - k) + 2^k`` and its small cases (treewidth k)
	TREEWIDTH = 'treewidth'

	#: degeneracy bound with ``d = col_5 - 1``
	COL = 'col'

	#: ``min{2^d(|A| - d + 1), 2^|A|}`` (every 1-shallow minor d-degenerate)
	DEGEN = 'degen'

	#: second neighbourhoods of non-neighbours, Euler genus γ
	SURFACE_SECOND = 'surface_second'

	#: distance-2 diversity, Euler genus γ
	SURFACE_NU2 = 'surface_nu2'

	#: distance-2 diversity from distance-1 diversity and a second
	#: neighbourhood bound ``f``
	NU2 = 'nu2'

	#: ``(r + 1)^|A|``
	TRIVIAL = 'trivial'


class GraphFormatEnum(PEnum):
	JSON = 'json'
	EDGELIST = 'edgelist'
	DOT = 'dot'


class StrategyEnum(PEnum):
	"""
	Strategies for upper bounds on reduced parameters
	"""

	#: merge the pair minimizing the parameter of the next red graph
	GREEDY = 'greedy'

	#: repeatedly identify a leaf with its parent (forests only)
	LEAF_MERGE = 'leaf-merge'

	#: merge twins while there are any, then continue greedily
	TWINS = 'twins'
