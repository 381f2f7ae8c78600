# -*- coding: utf-8 -*-


class TwinReduceError(Exception):
	"""
	Base (abstract) error-class
	"""
	def __init__(
		self,
		message,
		code='twinreduce.other',
		details=None,
		inner=None,
	):
		super(TwinReduceError, self).__init__(message)

		#: Unique error code. Helps to distinguish different errors.
		#:
		#: :type: str
		self.code = code

		if details is not None:
			assert isinstance(details, dict)

		#: Some error details (witnesses, offending ids, limits)
		#:
		#: :type: dict
		self.details = details

		#: Internal exception that describes an original error.
		#:
		#: :type: Exception
		self.inner = inner

	def get_message(self):
		return super(TwinReduceError, self).__str__()

	def __str__(self):

		s = '{tp}: [{code}] {message}'.format(
			tp=type(self).__name__,
			code=self.code,
			message=self.get_message(),
		)
		return s


class TwinReduceMergeError(TwinReduceError):
	"""
	Invalid merge: one of the vertices is dead, both ids are equal, or the
	requested fresh id was already used by the trigraph.
	"""
	pass


class TwinReducePartitionError(TwinReduceError):
	"""
	The given family of sets is not a partition of the base vertex set
	"""
	pass


class TwinReduceSizeError(TwinReduceError):
	"""
	An exact evaluator refused the input.

	Occurs when the graph is above the configured size cap, or when the
	search exhausted its state budget. The caller decides on a fallback
	(usually a heuristic); evaluators never switch silently.

	Limits are available through :py:attr:`~.TwinReduceError.details`
	(``limit``, ``actual``).
	"""
	pass


class TwinReduceValidationError(TwinReduceError):
	"""
	Parameter has invalid format/value, or a required parameter is missing.
	"""
	pass


class TwinReduceGraphError(TwinReduceError):
	"""
	The input graph does not have the required structure (bipartite,
	connected, planar triangulation, forest, ...)
	"""
	pass


class TwinReduceCertificateError(TwinReduceError):
	"""
	A product certificate failed one of its static checks.

	The full :class:`~twinreduce.models.CertificateReport` is stored under
	``details['report']``.
	"""
	pass


class TwinReduceSeparationError(TwinReduceError):
	"""
	A row could not be reduced to ``q`` parts: it has more than ``q``
	distinct neighbourhood signatures on the mandated side.

	This certifies that the separation condition of the certificate is
	violated for the given ``q``. Details contain ``separation`` (the block
	and outer slots), ``row``, ``signatures`` and ``count``.
	"""
	pass


class TwinReduceParseError(TwinReduceError):
	"""
	Input file could not be parsed; ``details['line']`` points to the line
	(1-based) when known.
	"""
	pass
