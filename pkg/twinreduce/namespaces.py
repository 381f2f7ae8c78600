# -*- coding: utf-8 -*-

"""
Functional namespaces of :class:`~twinreduce.Toolkit`, every one bound to the
toolkit's :class:`~twinreduce._internals.settings.Settings`
"""

import logging

from .enums import ParamEnum

from . import diversity as _diversity
from . import gadgets as _gadgets
from . import oracle as _oracle
from . import params as _params
from . import product as _product
from . import verify as _verify

from .core import Trigraph
from .core import ReductionSequence
from .codec import trigraph_from_graph
from .params.basic import result as _param_result

log = logging.getLogger(__name__)


class _Namespace(object):
	def __init__(self, settings):
		self._settings = settings


class Params(_Namespace):
	def evaluate(self, name, G, exact=True, s=2):
		"""
		Parameter of ``G`` with a witness, where the evaluator provides one

		:param name: parameter
		:type name: str or ~twinreduce.enums.ParamEnum
		:param exact: exact evaluator (size-capped) or heuristic upper bound
		:type exact: bool
		:param s: radius of ``col``
		:type s: int
		:rtype: ~twinreduce.models.ParamResult
		"""
		st = self._settings
		f = _params.evaluator(name, exact=exact, settings=st, s=s)
		p, = ParamEnum.parse_many(name)

		if exact:
			table = {
				ParamEnum.BW: lambda: _params.bandwidth_exact(G, settings=st),
				ParamEnum.PW: lambda: _params.pathwidth_exact(G, settings=st),
				ParamEnum.TW: lambda: _params.treewidth_exact(G, settings=st),
				ParamEnum.COL: lambda: _params.col_s_exact(G, s, settings=st),
				ParamEnum.DEGENERACY: lambda: _params.degeneracy(G),
			}
		else:
			table = {
				ParamEnum.BW: lambda: _params.bandwidth_heuristic(G),
				ParamEnum.PW: lambda: _params.pathwidth_heuristic(G),
				ParamEnum.TW: lambda: _params.treewidth_heuristic(G),
				ParamEnum.COL: lambda: _params.col_s_greedy(G, s),
				ParamEnum.DEGENERACY: lambda: _params.degeneracy(G),
			}
		if p in table:
			return table[p]()
		return _param_result(p.value, f(G), exact=exact)

	def evaluator(self, name, exact=True, s=2):
		return _params.evaluator(name, exact=exact, settings=self._settings, s=s)


class Oracle(_Namespace):
	def exact(self, G, param='maxdeg'):
		return _oracle.reduced_f_exact(G, param, settings=self._settings)

	def upper(self, G, param='maxdeg', strategies=None):
		return _oracle.reduced_f_upper_greedy(G, param, strategies=strategies, settings=self._settings)

	def is_cograph(self, G):
		return _oracle.is_cograph(G)


class Diversity(_Namespace):
	def profile(self, G, v, A, r):
		return _diversity.profile(G, v, A, r)

	def classes(self, G, A, r):
		return _diversity.diversity(G, A, r)

	def check_bound(self, G, A, r, bound, params=None):
		return _diversity.check_bound(G, A, r, bound, params, settings=self._settings)

	def shallow_minor_witness(self, G, X, t=3):
		return _diversity.shallow_minor_witness(G, X, t=t)


class Gadgets(_Namespace):
	def generate(self, kind, params=None, graph=None):
		"""
		See :func:`twinreduce.gadgets.generate`
		"""
		return _gadgets.generate(kind, params, graph=graph)


class Sequences(_Namespace):
	def product(self, F, cert, q=None, r=None, pad=False, apex=False):
		"""
		Sequence of a trigraph (or graph) contained in ``H ⊠ P``, plus the
		static report of its bounds

		:param apex: allow the apex vertices of the certificate
		:type apex: bool
		:returns: ``(ProductSequence, CertificateReport)``
		"""
		if not isinstance(F, Trigraph):
			F = trigraph_from_graph(F)
		build = _product.apex_product_sequence if apex else _product.product_path_sequence
		res = build(F, cert, q=q, r=r, pad=pad)
		return res, _product.check_sequence_bounds(res)

	def power(self, G, cert, r=None, q=None, pad=False):
		res = _product.power_sequence(G, cert, r=r, q=q, pad=pad)
		return res, _product.check_sequence_bounds(res)

	def load(self, data):
		"""
		:param data: sequence JSON
		:type data: dict
		:rtype: ~twinreduce.core.ReductionSequence
		"""
		return ReductionSequence.from_dict(data)


class Suites(_Namespace):
	def list(self):
		return _verify.list_suites()

	def run(self, name, seed=_verify.SEED):
		"""
		:param name: suite name or ``all``
		:rtype: list(~twinreduce.models.VerifyReport)
		"""
		if name == 'all':
			return _verify.run_all(settings=self._settings, seed=seed)
		return [_verify.run_suite(name, settings=self._settings, seed=seed)]

