# -*- coding: utf-8 -*-

"""
Command-line interface::

	twinreduce gen grid --params m=3,n=4
	twinreduce param bw --graph g.json
	twinreduce oracle --graph g.json --param maxdeg
	twinreduce seq --graph grid.json --cert grid.json
	twinreduce diversity --graph g.json --anchor 0,1,2 -r 2
	twinreduce verify eq1eq2
	twinreduce convert g.txt --to dot
	twinreduce info

Every command writes UTF-8 JSON to stdout (or ``--output``). Exit codes:
``0`` success, ``1`` a check does not hold, ``2`` invalid input.
"""

import argparse
import io
import json
import logging
import sys

from . import Toolkit
from . import __title__
from . import __version__
from . import __release__
from . import __build__
from . import __commit__

from .enums import BoundEnum
from .enums import GadgetKindEnum
from .enums import GraphFormatEnum
from .enums import ParamEnum
from .enums import StrategyEnum
from .errors import TwinReduceError
from .errors import TwinReduceParseError

from . import codec
from .product import ProductCertificate
from .verify import SEED
from .verify import exit_code
from .verify import format_table

from ._internals.settings import Settings
from ._internals.typeconv import parse_int_list
from ._internals.typeconv import parse_params

log = logging.getLogger(__name__)


def info_text():
	return (
		'{}\n'
		'\tVERSION : {}\n'
		'\tRELEASE : {}\n'
		'\tBUILD   : {}\n'
		'\tCOMMIT  : {}\n'
	).format(
		__title__,
		__version__,
		__release__,
		__build__,
		__commit__,
	)


def _add_output(p):
	p.add_argument('-o', '--output', help='write to this file instead of stdout')


def _add_graph(p, required=True):
	p.add_argument('--graph', required=required, help='graph file (json, edgelist)')
	p.add_argument('--graph-format', choices=GraphFormatEnum.values(), default=None)


def build_parser():
	parser = argparse.ArgumentParser(
		prog='twinreduce',
		description='Reduction sequences and reduced graph parameters',
	)
	parser.add_argument('-v', '--verbose', action='store_true', help='debug logging')
	sub = parser.add_subparsers(dest='command')

	p = sub.add_parser('gen', help='generate a named graph')
	p.add_argument('kind', choices=GadgetKindEnum.values())
	p.add_argument('--params', default='', help='k=v,... (integers)')
	p.add_argument('--format', choices=GraphFormatEnum.values(), default='json')
	_add_graph(p, required=False)
	_add_output(p)

	p = sub.add_parser('param', help='evaluate a graph parameter')
	p.add_argument('name', choices=ParamEnum.values())
	p.add_argument('--heuristic', action='store_true', help='upper bound instead of the exact value')
	p.add_argument('-s', type=int, default=2, help='radius of col')
	_add_graph(p)
	_add_output(p)

	p = sub.add_parser('oracle', help='reduced parameter of a small graph')
	p.add_argument('--param', choices=ParamEnum.values(), default='maxdeg')
	p.add_argument('--upper', action='store_true', help='greedy upper bound instead of the exact search')
	p.add_argument('--strategies', default=None, help=','.join(StrategyEnum.values()))
	_add_graph(p)
	_add_output(p)

	p = sub.add_parser('seq', help='sequence of a subgraph of a product with a path')
	p.add_argument('--cert', required=True, help='certificate JSON (or the output of "gen grid")')
	p.add_argument('-q', type=int, default=None)
	p.add_argument('-r', type=int, default=None, help='neighbourhood radius of the certificate')
	p.add_argument('--power', type=int, default=None, metavar='R', help='build a sequence of G^R')
	p.add_argument('--apex', action='store_true', help='allow apex vertices')
	p.add_argument('--pad', action='store_true', help='fill empty cells with isolated vertices')
	_add_graph(p)
	_add_output(p)

	p = sub.add_parser('diversity', help='distance profiles of an anchor set')
	p.add_argument('--anchor', required=True, help='comma separated vertex ids')
	p.add_argument('-r', type=int, default=1)
	p.add_argument('--bound', choices=BoundEnum.values(), default=None)
	p.add_argument('--params', default='', help='bound parameters, k=v,...')
	_add_graph(p)
	_add_output(p)

	p = sub.add_parser('verify', help='run verification suites')
	p.add_argument('suite', nargs='?', default=None, help='suite name or "all"')
	p.add_argument('--list', action='store_true', help='list suites')
	p.add_argument('--seed', type=int, default=SEED)
	p.add_argument('--serial', action='store_true', help='run checks one by one')
	_add_output(p)

	p = sub.add_parser('convert', help='convert a graph file')
	p.add_argument('input')
	p.add_argument('--from', dest='src', choices=GraphFormatEnum.values(), default=None)
	p.add_argument('--to', dest='dst', choices=GraphFormatEnum.values(), required=True)
	_add_output(p)

	sub.add_parser('info', help='version information')
	return parser


# ----------------------------------------------------------------------------
# helpers

def _emit(args, text, out):
	path = getattr(args, 'output', None)
	if path:
		codec.write_text(path, text)
		log.info('written %s', path)
	else:
		out.write(text)


def _read_json(path):
	with io.open(path, 'r', encoding='utf-8') as f:
		text = f.read()
	try:
		return json.loads(text)
	except ValueError as exc:
		raise TwinReduceParseError(
			'{}: invalid JSON: {}'.format(path, exc),
			code='twinreduce.codec.invalid_json',
			details={'line': getattr(exc, 'lineno', None)},
			inner=exc,
		)


def _graph(args):
	if not args.graph:
		return None
	return codec.read_graph(args.graph, args.graph_format)


def _certificate(path):
	data = _read_json(path)
	if 'certificate' in data:
		data = data['certificate']
	return ProductCertificate.from_dict(data)


def _jsonable_maps(maps):
	return {str(step): {str(v): b for v, b in m.items()} for step, m in maps.items()}


# ----------------------------------------------------------------------------
# commands

def cmd_gen(tk, args, out):
	res = tk.gadgets.generate(args.kind, parse_params(args.params), graph=_graph(args))
	extra = set(res) - set(['graph'])
	if not extra:
		_emit(args, codec.dumps(res['graph'], args.format), out)
		return 0

	doc = {'graph': codec.graph_to_dict(res['graph'])}
	if 'certificate' in res:
		doc['certificate'] = res['certificate'].to_dict()
	if 'sequence' in res:
		doc['sequence'] = res['sequence'].to_dict()
		doc['blowup_maps'] = _jsonable_maps(res['blowup_maps'])
		doc['t'] = res['t']
	for k in ('X', 'Y'):
		if k in res:
			doc[k] = res[k]
	_emit(args, codec.dumps_json(doc), out)
	return 0


def cmd_param(tk, args, out):
	res = tk.params.evaluate(args.name, _graph(args), exact=not args.heuristic, s=args.s)
	_emit(args, codec.dumps_json(res.raw), out)
	return 0


def cmd_oracle(tk, args, out):
	G = _graph(args)
	if args.upper:
		res = tk.oracle.upper(G, args.param, strategies=args.strategies)
	else:
		res = tk.oracle.exact(G, args.param)
	_emit(args, codec.dumps_json(res.raw), out)
	return 0


def cmd_seq(tk, args, out):
	G = _graph(args)
	cert = _certificate(args.cert)
	if args.power is not None:
		res, rep = tk.sequences.power(G, cert, r=args.power, q=args.q, pad=args.pad)
	else:
		res, rep = tk.sequences.product(G, cert, q=args.q, r=args.r, pad=args.pad, apex=args.apex)
	_emit(args, codec.dumps_json({'result': res.to_dict(), 'report': rep.raw}), out)
	return 0 if rep.ok else 1


def cmd_diversity(tk, args, out):
	G = _graph(args)
	A = parse_int_list(args.anchor)
	if args.bound is None:
		res = tk.diversity.classes(G, A, args.r)
	else:
		res = tk.diversity.check_bound(G, A, args.r, args.bound, parse_params(args.params))
	_emit(args, codec.dumps_json(res.raw), out)
	if args.bound is not None and not res.holds:
		return 1
	return 0


def cmd_verify(tk, args, out, err):
	if args.list or not args.suite:
		_emit(args, ''.join(s + '\n' for s in tk.suites.list()), out)
		return 0

	reports = tk.suites.run(args.suite, seed=args.seed)
	for rep in reports:
		err.write(format_table(rep))
	data = [r.raw for r in reports]
	_emit(args, codec.dumps_json(data if args.suite == 'all' else data[0]), out)
	return exit_code(reports)


def cmd_convert(tk, args, out):
	src = args.src or codec.guess_format(args.input).value
	with io.open(args.input, 'r', encoding='utf-8') as f:
		text = f.read()
	_emit(args, codec.convert(text, src, args.dst), out)
	return 0


def main(argv=None, out=None, err=None):
	"""
	:returns: exit code
	:rtype: int
	"""
	out = sys.stdout if out is None else out
	err = sys.stderr if err is None else err

	parser = build_parser()
	args = parser.parse_args(argv)

	logging.basicConfig(
		level=logging.DEBUG if args.verbose else logging.WARNING,
		stream=err,
		format='%(levelname)s %(name)s: %(message)s',
	)

	if args.command is None:
		parser.print_help(err)
		return 2
	if args.command == 'info':
		out.write(info_text())
		return 0

	settings = Settings.from_env()
	if getattr(args, 'serial', False):
		settings.parallel = False
	tk = Toolkit(settings)

	commands = {
		'gen': cmd_gen,
		'param': cmd_param,
		'oracle': cmd_oracle,
		'seq': cmd_seq,
		'diversity': cmd_diversity,
		'convert': cmd_convert,
	}
	try:
		if args.command == 'verify':
			return cmd_verify(tk, args, out, err)
		return commands[args.command](tk, args, out)
	except TwinReduceError as exc:
		log.debug('command %s failed', args.command, exc_info=True)
		err.write('{}\n'.format(exc))
		return 2
	except (IOError, OSError, ValueError) as exc:
		err.write('{}\n'.format(exc))
		return 2
