# -*- coding: utf-8 -*-

"""
Reduction sequences of graphs and the parameters of their red graphs

Consists of:

- trigraphs, contractions and reduction sequences (:mod:`twinreduce.core`);
- exact and heuristic graph parameters (:mod:`twinreduce.params`);
- an exhaustive oracle for reduced parameters (:mod:`twinreduce.oracle`);
- neighbourhood diversity and its bounds (:mod:`twinreduce.diversity`);
- sequences of subgraphs of strong products with a path
  (:mod:`twinreduce.product`);
- named constructions (:mod:`twinreduce.gadgets`) and verification suites
  (:mod:`twinreduce.verify`).

:class:`Toolkit` gives access to all of them with one set of size caps.
"""

import logging

from .namespaces import Diversity
from .namespaces import Gadgets
from .namespaces import Oracle
from .namespaces import Params
from .namespaces import Sequences
from .namespaces import Suites

from .version import PROJECT
from .version import COPYRIGHT
from .version import AUTHOR
from .version import TITLE
from .version import LICENSE
from .version import VERSION_STRING
from .version import RELEASE_STRING
from .version import BUILD
from .version import COMMIT

from twinreduce._internals.settings import Settings


log = logging.getLogger(__name__)


__project__ = PROJECT
__copyright__ = COPYRIGHT
__author__ = AUTHOR
__title__ = TITLE
__license__ = LICENSE
__version__ = VERSION_STRING
__release__ = RELEASE_STRING
__build__ = BUILD
__commit__ = COMMIT


__all__ = [
	'Toolkit',
	'Settings',
]


class Toolkit(object):
	"""
	Entry point of the library

	All namespaces share one :class:`Settings` object; by default it is read
	from the ``TWINREDUCE_*`` environment variables.

	:param settings: size caps and budgets
	:type settings: ~twinreduce._internals.settings.Settings, optional
	"""

	version = __version__

	def __init__(self, settings=None):
		log.info(
			'Init twinreduce [%s] build [%s] commit [%s]',
			self.version,
			__build__,
			__commit__,
		)

		if settings is None:
			settings = Settings.from_env()
		self._settings = settings

		self._params = Params(settings)
		self._oracle = Oracle(settings)
		self._diversity = Diversity(settings)
		self._gadgets = Gadgets(settings)
		self._sequences = Sequences(settings)
		self._suites = Suites(settings)

	@property
	def settings(self):
		return self._settings

	@property
	def params(self):
		return self._params

	@property
	def oracle(self):
		return self._oracle

	@property
	def diversity(self):
		return self._diversity

	@property
	def gadgets(self):
		return self._gadgets

	@property
	def sequences(self):
		return self._sequences

	@property
	def suites(self):
		return self._suites
