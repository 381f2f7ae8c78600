# -*- coding: utf-8 -*-

"""
Graph parameters.

Every evaluator takes a :class:`networkx.Graph`. Exact evaluators refuse
graphs above their size caps with
:class:`~twinreduce.errors.TwinReduceSizeError`; choosing a fallback is up
to the caller.
"""

import logging

from ..enums import ParamEnum
from ..errors import TwinReduceValidationError

from .basic import max_degree
from .basic import max_component_size
from .basic import degeneracy
from .basic import clique_counts
from .basic import clique_number
from .basic import ordering_bandwidth
from .basic import validate_ordering
from .basic import ball_lower_bound

from .bandwidth import bandwidth_exact
from .bandwidth import bandwidth_heuristic
from .bandwidth import bandwidth_lower_bound

from .widths import pathwidth_exact
from .widths import pathwidth_heuristic
from .widths import treewidth_exact
from .widths import treewidth_heuristic
from .widths import treewidth_lower_bound
from .widths import minor_min_width
from .widths import min_fill_ordering
from .widths import validate_tree_decomposition
from .widths import validate_path_decomposition

from .colouring import col_s_exact
from .colouring import col_s_greedy
from .colouring import strong_reach
from .colouring import ordering_col

log = logging.getLogger(__name__)


__all__ = [
	'evaluator',
	'max_degree',
	'max_component_size',
	'degeneracy',
	'clique_counts',
	'clique_number',
	'ordering_bandwidth',
	'validate_ordering',
	'ball_lower_bound',
	'bandwidth_exact',
	'bandwidth_heuristic',
	'bandwidth_lower_bound',
	'pathwidth_exact',
	'pathwidth_heuristic',
	'treewidth_exact',
	'treewidth_heuristic',
	'treewidth_lower_bound',
	'minor_min_width',
	'min_fill_ordering',
	'validate_tree_decomposition',
	'validate_path_decomposition',
	'col_s_exact',
	'col_s_greedy',
	'strong_reach',
	'ordering_col',
]


def _value(fn, **kw):
	def f(G):
		return fn(G, **kw).value
	return f


def _sum(*fns):
	def f(G):
		return sum(fn(G) for fn in fns)
	return f


def evaluator(name, exact=True, settings=None, s=2):
	"""
	Turns a parameter name into a callable ``f(G) -> int``

	``maxdeg+pw`` and ``maxdeg+tw`` are sums. ``col`` is the strong
	``s``-colouring number.

	:param name: parameter
	:type name: str or ~twinreduce.enums.ParamEnum
	:param exact: use exact evaluators (with size caps), heuristics otherwise
	:type exact: bool
	:param settings: caps and budgets for the exact evaluators
	:type settings: ~twinreduce._internals.settings.Settings, optional
	:rtype: callable
	:raises ~twinreduce.errors.TwinReduceValidationError: on unknown names
	"""
	try:
		p, = ParamEnum.parse_many(name)
	except ValueError as exc:
		err = TwinReduceValidationError(
			'unknown parameter {!r}'.format(name),
			code='twinreduce.params.unknown',
			details={'known': ParamEnum.values()},
			inner=exc,
		)
		log.warning(err)
		raise err

	if exact:
		bw = _value(bandwidth_exact, settings=settings)
		pw = _value(pathwidth_exact, settings=settings)
		tw = _value(treewidth_exact, settings=settings)
		col = _value(col_s_exact, s=s, settings=settings)
	else:
		bw = _value(bandwidth_heuristic)
		pw = _value(pathwidth_heuristic)
		tw = _value(treewidth_heuristic)
		col = _value(col_s_greedy, s=s)

	table = {
		ParamEnum.BW: bw,
		ParamEnum.MAXDEG: max_degree,
		ParamEnum.PW: pw,
		ParamEnum.TW: tw,
		ParamEnum.STAR: max_component_size,
		ParamEnum.MAXDEG_PW: _sum(max_degree, pw),
		ParamEnum.MAXDEG_TW: _sum(max_degree, tw),
		ParamEnum.DEGENERACY: _value(degeneracy),
		ParamEnum.COL: col,
	}
	return table[p]
