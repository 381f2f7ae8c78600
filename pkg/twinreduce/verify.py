# -*- coding: utf-8 -*-

"""
Verification suites.

A suite is a list of independent checks; every check compares a computed
quantity (``lhs``) with a closed form (``rhs``). Checks run on a thread pool
(see :class:`~twinreduce._internals.settings.Settings`), the report lists
them ordered by name. Random instances are drawn from
:data:`SEED`-seeded generators only, so every run of a suite produces the same
checks.
"""

import collections
import concurrent.futures
import hashlib
import itertools
import logging
import random

import arrow
import networkx as nx

from .enums import SuiteEnum
from .errors import TwinReduceError
from .errors import TwinReduceValidationError
from .models import CheckResult
from .models import VerifyReport
from .version import RELEASE_STRING

from .codec import dumps_json
from .core import Trigraph
from .core import replay
from .core import witness_bandwidth

from . import gadgets
from . import params as P
from .diversity import check_bound
from .diversity import neighbourhood_classes
from .diversity import surface_bound
from .diversity import surface_second_bound
from .oracle import is_cograph
from .oracle import reduced_f_exact
from .oracle import reduced_f_upper_greedy
from .product import check_sequence_bounds
from .product import grid_certificate
from .product import path_certificate
from .product import power_sequence
from .product import product_path_sequence

from ._internals.settings import Settings

log = logging.getLogger(__name__)

#: seed of every randomized suite
SEED = 0xC0FFEE


Check = collections.namedtuple('Check', ['name', 'claim', 'run', 'inputs'])


def outcome(lhs, rhs, holds=None, **details):
	"""
	Result of one check; ``holds`` defaults to ``lhs <= rhs``
	"""
	return {
		'lhs': lhs,
		'rhs': rhs,
		'holds': bool(lhs <= rhs if holds is None else holds),
		'details': details,
	}


# ----------------------------------------------------------------------------
# suites

def _suite_eq1eq2(rng, settings):
	checks = []
	for x, q, r in itertools.product([1, 2, 3, 4], [2, 3], [1, 2]):
		tag = 'x={} q={} r={}'.format(x, q, r)
		inputs = {'x': x, 'q': q, 'r': r}

		def degree(x=x, q=q, r=r):
			g = gadgets.gen_s(x, q, r)
			return outcome(P.max_degree(g), (3 * r + 2) * q - 2)

		def layered(x=x, q=q, r=r):
			g = gadgets.gen_s(x, q, r)
			return outcome(P.ordering_bandwidth(g, gadgets.s_ordering(g)), (2 * r + 2) * q - 2)

		checks.append(Check('maxdeg ' + tag, 'max degree <= (3r+2)q-2', degree, inputs))
		checks.append(Check('bw-ordering ' + tag, 'layered ordering bandwidth <= (2r+2)q-2', layered, inputs))

		if 2 * q - 1 + 3 * x * q <= settings.bandwidth_max_n:
			def exact(x=x, q=q, r=r):
				g = gadgets.gen_s(x, q, r)
				rhs = (2 * r + 2) * q - 2
				res = P.bandwidth_exact(g, cap=rhs, settings=settings)
				if res.exceeds_cap:
					return outcome(res.lower_bound, rhs, holds=False)
				return outcome(res.value, rhs)

			checks.append(Check('bw-exact ' + tag, 'bandwidth <= (2r+2)q-2', exact, inputs))
	return checks


def _suite_productpath_grids(rng, settings):
	checks = []
	for n in range(3, 7):
		def run(n=n):
			res = product_path_sequence(Trigraph.from_graph(gadgets.gen_grid(n, n)), grid_certificate(n, n), r=1)
			rep = check_sequence_bounds(res)
			q = res.q
			bw = max(witness_bandwidth(res.sequence))
			deg = max(T.max_red_degree() for T in replay(res.sequence, snapshot=False))
			return outcome(
				[bw, deg],
				[4 * q - 2, 5 * q - 2],
				holds=rep.ok and bw <= 4 * q - 2 and deg <= 5 * q - 2,
				q=q,
				merges=len(res.sequence),
				failed=rep.failed(),
			)

		checks.append(Check(
			'grid {}x{}'.format(n, n),
			'witness bandwidth <= 4q-2, red degree <= 5q-2, red graphs fit the templates',
			run,
			{'m': n, 'n': n, 'r': 1},
		))
	return checks


def _planar_instances(rng):
	res = []
	for i in range(50):
		n = rng.randint(6, 40)
		g = gadgets.gen_random_planar(n, seed=rng.randrange(2 ** 31), keep=0.8)
		size = rng.randint(2, 6)
		A = sorted(rng.sample(range(n), size))
		res.append((i, n, g, A))
	return res


def _suite_planar_pi1(rng, settings):
	checks = []
	for i, n, g, A in _planar_instances(rng):
		def run(g=g, A=A):
			bounds = ['surface', 'surface_second', 'surface_nu2', 'nu2']
			res = [check_bound(g, A, 2, b, {'gamma': 0}, settings=settings) for b in bounds]
			return outcome(
				[c.lhs for c in res],
				[c.rhs for c in res],
				holds=all(c.holds for c in res),
				bounds=bounds,
			)

		checks.append(Check(
			'planar {:02d}'.format(i),
			'diversity of a planar anchor set within its closed-form bounds',
			run,
			{'n': n, 'edges': sorted(g.edges()), 'A': A},
		))

	for i in range(50):
		n = rng.randint(4, 14)
		g = nx.gnp_random_graph(n, 0.3, seed=rng.randrange(2 ** 31))
		A = sorted(rng.sample(range(n), rng.randint(1, min(n - 1, 5))))

		def run(g=g, A=A):
			res = [check_bound(g, A, 1, 'col', settings=settings)]
			res.extend(check_bound(g, A, r, 'trivial', settings=settings) for r in (1, 2, 3))
			return outcome(
				[c.lhs for c in res],
				[c.rhs for c in res],
				holds=all(c.holds for c in res),
				c=res[0].params['c'],
			)

		checks.append(Check(
			'sparse {:02d}'.format(i),
			'diversity within the colouring-number and trivial bounds',
			run,
			{'n': n, 'edges': sorted(g.edges()), 'A': A},
		))
	return checks


def _connected_graphs(n):
	return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def _suite_oracle_smallgraphs(rng, settings):
	checks = []
	for n in range(1, 7):
		def cographs(n=n):
			graphs = _connected_graphs(n)
			bad = []
			for g in graphs:
				zero = reduced_f_exact(g, 'maxdeg', settings=settings).value == 0
				if zero != is_cograph(g):
					bad.append(sorted(g.edges()))
			return outcome(len(bad), 0, graphs=len(graphs), mismatches=bad[:3])

		checks.append(Check(
			'cograph n={}'.format(n),
			'reduced max degree is 0 iff the graph is a cograph',
			cographs,
			{'n': n},
		))

		def hereditary(n=n):
			graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
			bad = []
			for g in graphs:
				value = reduced_f_exact(g, 'bw', settings=settings).value
				co = reduced_f_exact(nx.complement(g), 'bw', settings=settings).value
				if co != value:
					bad.append({'edges': sorted(g.edges()), 'complement': co, 'value': value})
					continue
				for v in list(g.nodes()):
					h = g.copy()
					h.remove_node(v)
					if reduced_f_exact(h, 'bw', settings=settings).value > value:
						bad.append({'edges': sorted(g.edges()), 'removed': v})
						break
			return outcome(len(bad), 0, graphs=len(graphs), violations=bad[:3])

		checks.append(Check(
			'reduced-bw n={}'.format(n),
			'reduced bandwidth is hereditary and invariant under complement',
			hereditary,
			{'n': n},
		))
	return checks


def _suite_tightness(rng, settings):
	checks = []
	for n in range(4, 11):
		seed = rng.randrange(2 ** 31)

		def surface(n=n, seed=seed):
			res = gadgets.gen_tight_surface_pi1(gadgets.gen_stacked_triangulation(n, seed))
			lhs = len(neighbourhood_classes(res['G'], res['X']))
			return outcome(lhs, 6 * n - 9, holds=lhs == 6 * n - 9)

		checks.append(Check(
			'surface |X|={:02d}'.format(n),
			'distance-1 diversity equals 6|X|-9',
			surface,
			{'n': n, 'seed': seed},
		))

	for k, n in [(1, 4), (2, 5), (3, 6)]:
		def ktree(k=k, n=n):
			res = gadgets.gen_tight_ktree_pi1(k, n)
			lhs = len(neighbourhood_classes(res['G'], res['X']))
			rhs = 2 ** k * (n - k + 1) - n + k
			width = P.validate_tree_decomposition(res['G'], res['bags'], res['parent'])
			return outcome(lhs, rhs, holds=lhs == rhs and width == k, width=width)

		checks.append(Check(
			'ktree k={} n={}'.format(k, n),
			'distance-1 diversity equals 2^k(n-k+1)-n+k at treewidth k',
			ktree,
			{'k': k, 'n': n},
		))
	return checks


def _suite_tof_sequence(rng, settings):
	graphs = [('K2', nx.complete_graph(2)), ('P3', nx.path_graph(3)), ('C4', nx.cycle_graph(4))]
	checks = []
	for (name, H), t in itertools.product(graphs, [3, 4]):
		def run(H=H, t=t):
			res = gadgets.gen_t_of(H, t=t)
			blown = gadgets.blowup2(H)
			deg = 0
			mapped = True
			T = None
			for step, T in enumerate(replay(res['canonical_partial'])):
				deg = max(deg, T.max_red_degree())
				m = res['blowup_maps'][step]
				mapped = mapped and len(set(m.values())) == len(m) and all(
					u in m and v in m and blown.has_edge(m[u], m[v]) for u, v in T.red_edges()
				)
			end = not T.black_edges() and nx.is_isomorphic(T.red_graph(), H)
			rhs = 2 * P.max_degree(H)
			return outcome(deg, rhs, holds=deg <= rhs and mapped and end, ends_at_red=end, injective=mapped)

		checks.append(Check(
			't({}) t={}'.format(name, t),
			'canonical sequence ends at red(H), red degree <= 2 max degree, parts embed in the 2-blowup',
			run,
			{'H': sorted(H.edges()), 't': t},
		))
	return checks


def _nu2_closed_form(a):
	if a < 2:
		return 3 ** a
	return surface_bound(a, 0) * surface_second_bound(a, 0)


def _suite_power_squares(rng, settings):
	checks = []
	for n in [2, 5, 10, 20, 30]:
		def path(n=n):
			res = power_sequence(gadgets.gen_grid(1, n), path_certificate(n), r=2)
			bw = max(witness_bandwidth(res.sequence))
			rhs = 6 * res.q - 2
			return outcome(
				[bw, res.q],
				[rhs, _nu2_closed_form(1)],
				holds=bw <= rhs and res.q <= _nu2_closed_form(1) and check_sequence_bounds(res).ok,
			)

		checks.append(Check('path n={:02d}'.format(n), 'square of a path: witness bandwidth <= 6q-2', path, {'n': n}))

	def grid():
		cert = grid_certificate(4, 4)
		res = power_sequence(gadgets.gen_grid(4, 4), cert, r=2)
		bw = max(witness_bandwidth(res.sequence))
		rhs = 6 * res.q - 2
		a = cert.decomp.kq()[0] + 1
		return outcome(
			[bw, res.q],
			[rhs, _nu2_closed_form(a)],
			holds=bw <= rhs and res.q <= _nu2_closed_form(a) and check_sequence_bounds(res).ok,
		)

	checks.append(Check('grid 4x4', 'square of a grid: witness bandwidth <= 6q-2', grid, {'m': 4, 'n': 4}))
	return checks


def _suite_qtree_leafmerge(rng, settings):
	checks = []
	for n in range(3, 7):
		def run(n=n):
			res = reduced_f_upper_greedy(gadgets.gen_q_tree(n), 'maxdeg+pw', 'leaf-merge', settings=settings)
			seq = res.optimal_sequence
			deg = 0
			pw = 0
			for T in replay(seq, snapshot=False):
				deg = max(deg, T.max_red_degree())
				pw = max(pw, P.pathwidth_exact(T.red_graph(), settings=settings).value)
			return outcome([deg, pw, res.value], [3, 2, 5], holds=deg <= 3 and pw <= 2 and res.value <= 5)

		checks.append(Check(
			'Q_{}'.format(n),
			'leaf-merge keeps red degree <= 3 and red pathwidth <= 2',
			run,
			{'n': n},
		))
	return checks


def _cross_violations(g, settings):
	bw = P.bandwidth_exact(g, settings=settings).value
	pw = P.pathwidth_exact(g, settings=settings).value
	tw = P.treewidth_exact(g, settings=settings).value
	bad = []
	if not tw <= pw <= bw:
		bad.append('tw <= pw <= bw')
	if P.max_degree(g) > 2 * bw:
		bad.append('maxdeg <= 2bw')
	if P.col_s_exact(g, 1, settings=settings).value != P.degeneracy(g).value + 1:
		bad.append('col_1 = degeneracy + 1')
	if P.col_s_exact(g, 2, settings=settings).value > tw + 1:
		bad.append('col_2 <= tw + 1')
	if P.col_s_exact(g, 3, settings=settings).value > tw + 1:
		bad.append('col_3 <= tw + 1')
	return bad


def _suite_cross_params(rng, settings):
	batches = []
	for _ in range(500):
		n = rng.randint(1, 8)
		batches.append((n, rng.random(), rng.randrange(2 ** 31)))

	checks = []
	for b in range(10):
		chunk = batches[b * 50:(b + 1) * 50]

		def run(chunk=chunk):
			bad = []
			for n, p, seed in chunk:
				g = nx.gnp_random_graph(n, p, seed=seed)
				for v in _cross_violations(g, settings):
					bad.append({'edges': sorted(g.edges()), 'n': n, 'violated': v})
			return outcome(len(bad), 0, graphs=len(chunk), violations=bad[:3])

		checks.append(Check(
			'batch {}'.format(b),
			'tw <= pw <= bw, maxdeg <= 2bw, col_1 = degeneracy + 1, col_2, col_3 <= tw + 1',
			run,
			{'graphs': chunk},
		))
	return checks


SUITES = collections.OrderedDict([
	(SuiteEnum.EQ1EQ2, _suite_eq1eq2),
	(SuiteEnum.PRODUCTPATH_GRIDS, _suite_productpath_grids),
	(SuiteEnum.PLANAR_PI1, _suite_planar_pi1),
	(SuiteEnum.ORACLE_SMALLGRAPHS, _suite_oracle_smallgraphs),
	(SuiteEnum.TIGHTNESS, _suite_tightness),
	(SuiteEnum.TOF_SEQUENCE, _suite_tof_sequence),
	(SuiteEnum.POWER_SQUARES, _suite_power_squares),
	(SuiteEnum.QTREE_LEAFMERGE, _suite_qtree_leafmerge),
	(SuiteEnum.CROSS_PARAMS, _suite_cross_params),
])


# ----------------------------------------------------------------------------
# runner

def _parse_suite(name):
	try:
		suite, = SuiteEnum.parse_many(name)
	except ValueError as exc:
		err = TwinReduceValidationError(
			'unknown suite {!r}'.format(name),
			code='twinreduce.verify.unknown_suite',
			details={'known': SuiteEnum.values()},
			inner=exc,
		)
		log.warning(err)
		raise err
	return suite


def list_suites():
	return [s.value for s in SUITES]


def _execute(check):
	start = arrow.utcnow()
	try:
		res = check.run()
	except TwinReduceError as exc:
		log.error('check %r failed with %s', check.name, exc, exc_info=True)
		res = outcome(None, None, holds=False, error=str(exc))

	r = CheckResult()
	r.name = check.name
	r.claim = check.claim
	r.lhs = res['lhs']
	r.rhs = res['rhs']
	r.holds = res['holds']
	r.runtime_ms = int((arrow.utcnow() - start).total_seconds() * 1000)
	r['details'] = res['details']
	if not r.holds:
		log.warning('check %r does not hold: %r vs %r', r.name, r.lhs, r.rhs)
	return r


def input_hash(suite, seed, checks):
	data = {
		'suite': suite.value,
		'seed': seed,
		'inputs': [[c.name, c.inputs] for c in sorted(checks, key=lambda c: c.name)],
	}
	return hashlib.sha256(dumps_json(data).encode('utf-8')).hexdigest()


def run_suite(name, settings=None, seed=SEED):
	"""
	Runs every check of a suite.

	:param name: suite
	:type name: str or ~twinreduce.enums.SuiteEnum
	:param settings: size caps and the worker pool, defaults to the \
		environment
	:type settings: ~twinreduce._internals.settings.Settings, optional
	:param seed: seed of the instance generator
	:type seed: int
	:rtype: ~twinreduce.models.VerifyReport
	:raises ~twinreduce.errors.TwinReduceValidationError: on unknown suites
	"""
	suite = _parse_suite(name)
	settings = Settings.from_env() if settings is None else settings
	checks = SUITES[suite](random.Random(seed), settings)
	log.info('suite %s: %s checks', suite.value, len(checks))

	if settings.parallel and settings.workers > 1 and len(checks) > 1:
		with concurrent.futures.ThreadPoolExecutor(max_workers=settings.workers) as pool:
			results = list(pool.map(_execute, checks))
	else:
		results = [_execute(c) for c in checks]
	results.sort(key=lambda r: r.name)

	report = VerifyReport()
	report.suite = suite
	report.seed = seed
	report.version = RELEASE_STRING
	report.generated_at = arrow.utcnow().isoformat()
	report.input_hash = input_hash(suite, seed, checks)
	report['checks'] = [r.raw for r in results]
	passed = sum(1 for r in results if r.holds)
	report.summary = {'total': len(results), 'passed': passed, 'failed': len(results) - passed}
	log.info('suite %s: %s of %s checks hold', suite.value, passed, len(results))
	return report


def run_all(settings=None, seed=SEED):
	"""
	:rtype: list(~twinreduce.models.VerifyReport)
	"""
	return [run_suite(s, settings=settings, seed=seed) for s in SUITES]


def exit_code(reports):
	"""
	``0`` when every check of every report holds, ``1`` otherwise
	"""
	return 0 if all(r.ok for r in reports) else 1


def _cell(v):
	if v is None:
		return '-'
	if isinstance(v, list):
		return ','.join(_cell(x) for x in v)
	return str(v)


def format_table(report):
	"""
	Human-readable form of a report

	:rtype: str
	"""
	rows = [('check', 'lhs', 'rhs', 'holds', 'ms')]
	for c in report.checks:
		rows.append((c.name, _cell(c.lhs), _cell(c.rhs), 'yes' if c.holds else 'NO', str(c.runtime_ms)))
	widths = [max(len(r[i]) for r in rows) for i in range(5)]

	lines = ['suite {} (seed {:#x}, {})'.format(report.suite.value, report.seed, report.version)]
	for r in rows:
		lines.append('  '.join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
	s = report.summary
	lines.append('{} checks, {} passed, {} failed'.format(s['total'], s['passed'], s['failed']))
	return '\n'.join(lines) + '\n'
