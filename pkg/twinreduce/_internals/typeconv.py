# -*- coding: utf-8 -*-

import six

"""
Type-conversion helpers

This module contains several functions for parsing command-line and
environment values.

Most functions are designed to work like default functions: :class:`int`
:class:`bool` --- take at least one parameter and return well-typed value.
"""


def str2bool(strvalue, default=None):
	"""
	Converts string value to :class:`bool`. Can parse human-readable values,
	like ``'yes'`` and ``'off'``.

	If value is not recognized -- the value of the :paramref:`~str2bool.default`
	argument will be returned.

	:param strvalue: Value to parse
	:type strvalue: str
	:param default:  Default value, defaults to :data:`None`
	:type default: *
	:returns: Parsed boolean value or :paramref:`~str2bool.default`
	:rtype: bool or *

	"""
	if strvalue is None:
		return default

	rl = str(strvalue).lower()
	if rl in ['true', '1', 't', 'y', 'yes', 'on']:
		return True
	if rl in ['false', '0', 'f', 'n', 'no', 'off']:
		return False

	return default


def str2int(strvalue, default=None):
	"""
	Converts string value to :class:`int`; unrecognized values (and
	:data:`None`) give :paramref:`~str2int.default`.

	Accepts ``0x`` prefixed hex and ``2**k`` notations.

	:rtype: int or *
	"""
	if strvalue is None:
		return default
	if isinstance(strvalue, bool):
		return default
	if isinstance(strvalue, six.integer_types):
		return strvalue

	s = str(strvalue).strip().lower()
	try:
		if '**' in s:
			base, exp = s.split('**', 1)
			return int(base) ** int(exp)
		return int(s, 0)
	except ValueError:
		return default


def parse_int_list(value):
	"""
	Parses ``"1,5,9"`` (or an iterable) into a list of ints

	:raises ValueError: on non-integer items
	:rtype: list(int)
	"""
	if value is None:
		return []
	if isinstance(value, six.string_types):
		return [int(i.strip()) for i in value.split(',') if i.strip()]
	return [int(i) for i in value]


def parse_params(value):
	"""
	Parses ``"x=2,q=3,r=1"`` into ``{'x': 2, 'q': 3, 'r': 1}``.

	Integer-looking values become :class:`int`, everything else stays a string.

	:raises ValueError: on items without ``=``
	:rtype: dict
	"""
	res = {}
	if not value:
		return res
	for item in value.split(','):
		item = item.strip()
		if not item:
			continue
		if '=' not in item:
			raise ValueError('expected key=value, got {!r}'.format(item))
		k, v = item.split('=', 1)
		k = k.strip()
		v = v.strip()
		iv = str2int(v)
		res[k] = v if iv is None else iv
	return res
