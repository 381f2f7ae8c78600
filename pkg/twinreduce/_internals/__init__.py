# -*- coding: utf-8 -*-

"""
Low-level helpers shared by all modules: vertex sets as python integers
(bitsets) and indexing of networkx graphs onto ``0..n-1``.
"""


def iter_bits(mask):
	"""
	Yields indices of set bits, in increasing order

	:param mask: bitset
	:type mask: int
	:rtype: iterator(int)
	"""
	while mask:
		low = mask & -mask
		yield low.bit_length() - 1
		mask ^= low


def popcount(mask):
	return bin(mask).count('1')


def mask_of(indices):
	m = 0
	for i in indices:
		m |= 1 << i
	return m


def lowest_bit(mask):
	"""
	Index of the lowest set bit, ``-1`` for an empty set
	"""
	if not mask:
		return -1
	return (mask & -mask).bit_length() - 1


def sorted_nodes(G):
	"""
	Nodes of ``G`` in a deterministic order: natural order when nodes are
	comparable, by ``repr`` otherwise.

	:rtype: list
	"""
	nodes = list(G.nodes())
	try:
		return sorted(nodes)
	except TypeError:
		return sorted(nodes, key=repr)


def index_graph(G, nodes=None):
	"""
	Maps nodes of a networkx graph to ``0..n-1`` and builds adjacency bitsets.

	Self-loops are ignored.

	:param G: graph
	:type G: networkx.Graph
	:param nodes: explicit node order, defaults to :func:`sorted_nodes`
	:type nodes: list, optional
	:returns: ``(nodes, index, adj)`` where ``adj[i]`` is the bitset of \
		neighbours of ``nodes[i]``
	:rtype: tuple
	"""
	if nodes is None:
		nodes = sorted_nodes(G)
	index = {v: i for i, v in enumerate(nodes)}
	adj = [0] * len(nodes)
	for u, v in G.edges():
		if u == v:
			continue
		a, b = index[u], index[v]
		adj[a] |= 1 << b
		adj[b] |= 1 << a
	return nodes, index, adj


def components_of(adj, within=None):
	"""
	Connected components of a bitset graph, as bitsets, ordered by the lowest
	vertex.

	:param adj: adjacency bitsets
	:type adj: list(int)
	:param within: restrict to this vertex set, defaults to all vertices
	:type within: int, optional
	:rtype: list(int)
	"""
	rest = (1 << len(adj)) - 1 if within is None else within
	res = []
	while rest:
		start = rest & -rest
		comp = start
		frontier = start
		while frontier:
			nxt = 0
			for v in iter_bits(frontier):
				nxt |= adj[v]
			nxt &= rest & ~comp
			comp |= nxt
			frontier = nxt
		res.append(comp)
		rest &= ~comp
	return res
