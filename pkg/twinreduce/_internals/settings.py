# -*- coding: utf-8 -*-

"""
Size caps and budgets of the exact evaluators.

Every cap may be overridden through the environment:

- ``TWINREDUCE_MAX_N`` overrides all ``*_max_n`` caps at once;
- ``TWINREDUCE_STATE_BUDGET`` overrides the search-state budget of the width
  searches;
- ``TWINREDUCE_MEMO_BUDGET`` overrides the partition memo budget of the oracle;
- ``TWINREDUCE_WORKERS`` sets the number of suite worker threads;
- ``TWINREDUCE_PARALLEL`` (``yes``/``no``) enables/disables suite threads.
"""

import os
import logging

from .typeconv import str2int
from .typeconv import str2bool

log = logging.getLogger(__name__)


class Settings(object):

	DEFAULTS = {
		'bandwidth_max_n': 24,
		'pathwidth_max_n': 40,
		'treewidth_max_n': 40,
		'col_max_n': 18,
		'oracle_max_n': 12,
		'state_budget': 2 ** 20,
		'oracle_memo_budget': 2 ** 20,
		'workers': 4,
		'parallel': True,
	}

	CAPS = (
		'bandwidth_max_n',
		'pathwidth_max_n',
		'treewidth_max_n',
		'col_max_n',
		'oracle_max_n',
	)

	def __init__(self, **overrides):
		unknown = set(overrides) - set(self.DEFAULTS)
		if unknown:
			raise TypeError('unknown settings: {}'.format(sorted(unknown)))

		for k, v in self.DEFAULTS.items():
			setattr(self, k, overrides.get(k, v))

	@classmethod
	def from_env(cls, environ=None):
		"""
		Builds settings from defaults and ``TWINREDUCE_*`` variables

		:param environ: mapping to read, defaults to :data:`os.environ`
		:type environ: dict, optional
		:rtype: Settings
		"""
		env = os.environ if environ is None else environ
		kw = {}

		max_n = cls._read_int(env, 'TWINREDUCE_MAX_N')
		if max_n is not None:
			for k in cls.CAPS:
				kw[k] = max_n

		budget = cls._read_int(env, 'TWINREDUCE_STATE_BUDGET')
		if budget is not None:
			kw['state_budget'] = budget

		memo = cls._read_int(env, 'TWINREDUCE_MEMO_BUDGET')
		if memo is not None:
			kw['oracle_memo_budget'] = memo

		workers = cls._read_int(env, 'TWINREDUCE_WORKERS')
		if workers is not None:
			kw['workers'] = max(1, workers)

		raw = env.get('TWINREDUCE_PARALLEL')
		if raw is not None:
			par = str2bool(raw)
			if par is None:
				log.warning('TWINREDUCE_PARALLEL=%r is not a boolean, ignored', raw)
			else:
				kw['parallel'] = par

		return cls(**kw)

	@staticmethod
	def _read_int(env, name):
		raw = env.get(name)
		if raw is None:
			return None
		v = str2int(raw)
		if v is None or v < 0:
			log.warning('%s=%r is not a non-negative integer, ignored', name, raw)
			return None
		return v

	def as_dict(self):
		return {k: getattr(self, k) for k in self.DEFAULTS}

	def __repr__(self):
		return '<Settings {}>'.format(self.as_dict())


def current():
	"""
	Settings taken from the process environment at call time
	"""
	return Settings.from_env()
