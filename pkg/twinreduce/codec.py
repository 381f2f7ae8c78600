# -*- coding: utf-8 -*-

"""
Reading and writing graphs and trigraphs.

Graph JSON is the trigraph JSON of :meth:`~twinreduce.core.Trigraph.to_dict`
(``{"n": int, "black": [...], "red": [...]}``, ids ``0..n-1``), with two
optional keys for networkx graphs whose nodes are not ``0..n-1``:

- ``"nodes"``: original node of every id (tuples are written as lists);
- ``"names"``: ``{"<id>": label}`` taken from the ``label`` node attribute.

In networkx graphs red edges carry the attribute ``color='red'``.

The edge list format is one edge per line, ``u v`` or ``u v red``, with an
optional ``# n=<count>`` header for isolated vertices; other lines starting
with ``#`` are comments. DOT is export only.
"""

import io
import json
import logging
import os
import re

import networkx as nx

from .enums import GraphFormatEnum
from .errors import TwinReduceParseError
from .errors import TwinReduceValidationError

from .core import Trigraph

from twinreduce._internals import sorted_nodes

log = logging.getLogger(__name__)

RED = 'red'

_HEADER = re.compile(r'^#\s*n\s*=\s*(\d+)\s*$')


def _hashable(v):
	if isinstance(v, list):
		return tuple(_hashable(x) for x in v)
	return v


def trigraph_to_graph(T):
	"""
	Underlying graph of a trigraph with ``color='red'`` on red edges

	:param T: trigraph
	:type T: ~twinreduce.core.Trigraph
	:rtype: networkx.Graph
	"""
	g = nx.Graph()
	g.add_nodes_from(T.vertices())
	g.add_edges_from(T.black_edges())
	g.add_edges_from(T.red_edges(), color=RED)
	return g


def _as_graph(G):
	if isinstance(G, Trigraph):
		return trigraph_to_graph(G)
	return G


def graph_to_dict(G):
	"""
	JSON form of a graph (or of a trigraph, see
	:meth:`~twinreduce.core.Trigraph.to_dict`)

	:param G: graph or trigraph
	:type G: networkx.Graph or ~twinreduce.core.Trigraph
	:rtype: dict
	"""
	if isinstance(G, Trigraph):
		return G.to_dict()

	nodes = sorted_nodes(G)
	index = {v: i for i, v in enumerate(nodes)}
	black = []
	red = []
	for u, v, d in G.edges(data=True):
		if u == v:
			continue
		e = sorted([index[u], index[v]])
		(red if d.get('color') == RED else black).append(e)

	res = {
		'n': len(nodes),
		'black': sorted(black),
		'red': sorted(red),
	}
	if nodes != list(range(len(nodes))):
		res['nodes'] = [list(v) if isinstance(v, tuple) else v for v in nodes]
	names = {}
	for i, v in enumerate(nodes):
		label = G.nodes[v].get('label')
		if label is not None:
			names[str(i)] = label
	if names:
		res['names'] = names
	return res


def graph_from_dict(data):
	"""
	Reads graph JSON (see :func:`graph_to_dict`) into a networkx graph

	:param data: parsed JSON
	:type data: dict
	:rtype: networkx.Graph
	:raises ~twinreduce.errors.TwinReduceParseError: on edges referencing \
		unknown ids
	"""
	n = int(data.get('n', 0))
	ids = [int(v) for v in data['vertices']] if data.get('vertices') is not None else list(range(n))
	nodes = data.get('nodes')
	if nodes is not None:
		if len(nodes) != len(ids):
			raise TwinReduceParseError(
				'"nodes" has {} entries for {} vertices'.format(len(nodes), len(ids)),
				code='twinreduce.codec.invalid_json',
			)
		name_of = dict(zip(ids, [_hashable(v) for v in nodes]))
	else:
		name_of = {v: v for v in ids}

	g = nx.Graph()
	g.add_nodes_from(name_of[v] for v in ids)
	for key, colour in (('black', None), ('red', RED)):
		for e in data.get(key) or []:
			u, v = int(e[0]), int(e[1])
			if u not in name_of or v not in name_of:
				raise TwinReduceParseError(
					'edge {}-{} references an unknown vertex'.format(u, v),
					code='twinreduce.codec.invalid_json',
					details={'edge': [u, v]},
				)
			if colour is None:
				g.add_edge(name_of[u], name_of[v])
			else:
				g.add_edge(name_of[u], name_of[v], color=colour)

	for k, label in (data.get('names') or {}).items():
		g.nodes[name_of[int(k)]]['label'] = label
	return g


def trigraph_from_graph(G):
	"""
	Trigraph of a graph read by this module, red edges included

	:rtype: ~twinreduce.core.Trigraph
	"""
	nodes = sorted_nodes(G)
	index = {v: i for i, v in enumerate(nodes)}
	black = []
	red = []
	for u, v, d in G.edges(data=True):
		if u == v:
			continue
		(red if d.get('color') == RED else black).append((index[u], index[v]))
	T = Trigraph(len(nodes), black=black, red=red)
	T.origin = nodes
	return T


# ----------------------------------------------------------------------------
# edge lists

def parse_edgelist(text):
	"""
	:param text: edge list
	:type text: str
	:rtype: networkx.Graph
	:raises ~twinreduce.errors.TwinReduceParseError: with the 1-based line \
		number in ``details['line']``
	"""
	n = None
	edges = []
	for lineno, raw in enumerate(text.splitlines(), 1):
		line = raw.strip()
		if not line:
			continue
		if line.startswith('#'):
			m = _HEADER.match(line)
			if m:
				n = int(m.group(1))
			continue

		parts = line.split()
		if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] not in (RED, 'black')):
			raise TwinReduceParseError(
				'line {}: expected "u v" or "u v red", got {!r}'.format(lineno, line),
				code='twinreduce.codec.invalid_edgelist',
				details={'line': lineno},
			)
		try:
			u, v = int(parts[0]), int(parts[1])
		except ValueError as exc:
			raise TwinReduceParseError(
				'line {}: vertex ids must be integers'.format(lineno),
				code='twinreduce.codec.invalid_edgelist',
				details={'line': lineno},
				inner=exc,
			)
		if u < 0 or v < 0 or u == v:
			raise TwinReduceParseError(
				'line {}: invalid edge {}-{}'.format(lineno, u, v),
				code='twinreduce.codec.invalid_edgelist',
				details={'line': lineno},
			)
		if n is not None and max(u, v) >= n:
			raise TwinReduceParseError(
				'line {}: vertex {} is out of range 0..{}'.format(lineno, max(u, v), n - 1),
				code='twinreduce.codec.invalid_edgelist',
				details={'line': lineno},
			)
		edges.append((u, v, len(parts) == 3 and parts[2] == RED))

	if n is None:
		n = max([max(u, v) + 1 for u, v, _ in edges] or [0])

	g = nx.Graph()
	g.add_nodes_from(range(n))
	for u, v, red in edges:
		if red:
			g.add_edge(u, v, color=RED)
		else:
			g.add_edge(u, v)
	return g


def format_edgelist(G):
	"""
	:param G: graph or trigraph with vertex ids ``0..n-1``
	:rtype: str
	:raises ~twinreduce.errors.TwinReduceValidationError: for other ids
	"""
	data = graph_to_dict(G)
	if data.get('nodes') is not None or data.get('vertices') is not None:
		raise TwinReduceValidationError(
			'edge lists need vertex ids 0..n-1',
			code='twinreduce.codec.not_integer',
		)
	out = io.StringIO()
	out.write(u'# n={}\n'.format(data['n']))
	for u, v in data['black']:
		out.write(u'{} {}\n'.format(u, v))
	for u, v in data['red']:
		out.write(u'{} {} red\n'.format(u, v))
	return out.getvalue()


# ----------------------------------------------------------------------------
# DOT

def _dot_id(v):
	if isinstance(v, int):
		return str(v)
	return '"{}"'.format(str(v).replace('"', '\\"'))


def format_dot(G, name='G'):
	"""
	DOT source of a graph or trigraph; red edges get ``color=red``

	:rtype: str
	"""
	g = _as_graph(G)
	out = io.StringIO()
	out.write(u'graph {} {{\n'.format(name))
	nodes = sorted_nodes(g)
	pos = {v: i for i, v in enumerate(nodes)}
	for v in nodes:
		label = g.nodes[v].get('label')
		if label is None:
			out.write(u'\t{};\n'.format(_dot_id(v)))
		else:
			out.write(u'\t{} [label="{}"];\n'.format(_dot_id(v), label))
	edges = []
	for u, v, d in g.edges(data=True):
		if pos[u] > pos[v]:
			u, v = v, u
		edges.append((pos[u], pos[v], u, v, d.get('color') == RED))
	for _, _, u, v, red in sorted(edges, key=lambda e: e[:2]):
		attrs = u' [color=red]' if red else u''
		out.write(u'\t{} -- {}{};\n'.format(_dot_id(u), _dot_id(v), attrs))
	out.write(u'}\n')
	return out.getvalue()


# ----------------------------------------------------------------------------
# generic entry points

def dumps_json(data):
	"""
	Deterministic JSON text (sorted keys, two-space indent, UTF-8 safe)
	"""
	return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def loads(text, fmt='json'):
	"""
	Parses a graph in the given format

	:param fmt: ``json`` or ``edgelist``
	:type fmt: str or ~twinreduce.enums.GraphFormatEnum
	:rtype: networkx.Graph
	"""
	fmt, = GraphFormatEnum.parse_many(fmt)
	if fmt == GraphFormatEnum.EDGELIST:
		return parse_edgelist(text)
	if fmt == GraphFormatEnum.JSON:
		try:
			data = json.loads(text)
		except ValueError as exc:
			raise TwinReduceParseError(
				'invalid JSON: {}'.format(exc),
				code='twinreduce.codec.invalid_json',
				details={'line': getattr(exc, 'lineno', None)},
				inner=exc,
			)
		if isinstance(data, dict) and 'graph' in data and 'n' not in data:
			data = data['graph']
		return graph_from_dict(data)
	raise TwinReduceValidationError(
		'format {} can not be read'.format(fmt.value),
		code='twinreduce.codec.unsupported',
	)


def dumps(G, fmt='json'):
	"""
	Writes a graph or trigraph in the given format

	:rtype: str
	"""
	fmt, = GraphFormatEnum.parse_many(fmt)
	if fmt == GraphFormatEnum.EDGELIST:
		return format_edgelist(G)
	if fmt == GraphFormatEnum.DOT:
		return format_dot(G)
	return dumps_json(graph_to_dict(G))


def convert(text, src, dst):
	"""
	Converts graph text between formats; ``json`` and ``edgelist`` round-trip
	without loss for graphs on ``0..n-1``.

	:rtype: str
	"""
	return dumps(loads(text, src), dst)


_EXTENSIONS = {
	'.json': GraphFormatEnum.JSON,
	'.txt': GraphFormatEnum.EDGELIST,
	'.edges': GraphFormatEnum.EDGELIST,
	'.edgelist': GraphFormatEnum.EDGELIST,
	'.dot': GraphFormatEnum.DOT,
	'.gv': GraphFormatEnum.DOT,
}


def guess_format(path, default=GraphFormatEnum.JSON):
	ext = os.path.splitext(path)[1].lower()
	return _EXTENSIONS.get(ext, default)


def read_graph(path, fmt=None):
	"""
	:param path: file name
	:type path: str
	:param fmt: format, guessed from the extension by default
	:rtype: networkx.Graph
	"""
	fmt = guess_format(path) if fmt is None else fmt
	with io.open(path, 'r', encoding='utf-8') as f:
		text = f.read()
	log.debug('read %s bytes from %s', len(text), path)
	return loads(text, fmt)


def write_text(path, text):
	with io.open(path, 'w', encoding='utf-8') as f:
		f.write(text)
