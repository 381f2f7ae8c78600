# -*- coding: utf-8 -*-

import six
import logging

import pydash

log = logging.getLogger(__name__)


def _handle_auto_doc_for_property(doc, typename, readonly=False):
	if doc is None:
		doc = '<AUTO>'

	if '<AUTO>' in doc:
		if readonly:
			subst = (
				':getter: Get, property is readonly\n'
				'{pref}:rtype: {typename}'
			)
		else:
			subst = (
				':getter: Get\n'
				'{pref}:setter: Set\n'
				'{pref}:rtype: {typename}'
			)
		subst = subst.format(
			typename=typename,
			pref='\t\t',
		)
		doc = doc.replace('<AUTO>', subst)

	return doc


def dict_enum_property(path, enumtype):
	"""
	Creates an enum-typed PROPERTY for models inherited from :class:`dict`;
	the raw dict keeps the enum *value*, so models stay JSON-serializable.
	"""
	def decorator(fn):

		def _get(self):
			v = pydash.get(self.raw, path)

			if v is None:
				return None

			return enumtype(v)

		def _set(self, value):
			if isinstance(value, enumtype):
				value = value.value
			value = fn(self, enumtype(value).value)
			pydash.set_(self.raw, path, value)

		doc = _handle_auto_doc_for_property(
			fn.__doc__,
			'~{mod}.{nm}'.format(
				mod=enumtype.__module__,
				nm=enumtype.__name__,
			)
		)

		p = property(_get, _set, None, doc)
		return p
	return decorator


def dict_property(path, anytype=None, readonly=False):
	"""
	Creates new strict-typed PROPERTY for classes inherited from :class:`dict`

	Values are stored under ``path`` (pydash path syntax) of the raw dict.
	With ``anytype=None`` the raw value is returned as is (lists, dicts).
	"""

	if anytype == str:
		conv = six.text_type
		typename = type(six.text_type('')).__name__
	elif anytype is None:
		conv = None
		typename = 'object'
	else:
		conv = anytype
		typename = anytype.__name__

	def decorator(fn):

		def _get(self):
			v = pydash.get(self.raw, path)

			if v is None or conv is None:
				return v

			return conv(v)

		def _set(self, value):
			v = value if conv is None or value is None else conv(value)
			v = fn(self, v)
			pydash.set_(self.raw, path, v)

		doc = _handle_auto_doc_for_property(
			fn.__doc__,
			typename,
			readonly=readonly,
		)

		if readonly:
			return property(_get, None, None, doc)
		return property(_get, _set, None, doc)

	return decorator
