"""
Command-line front end.

Every subcommand prints one payload (text or JSON) on stdout: a header with the version, the command, its
arguments and the resolved configuration, followed by the result.  Log records go to stderr.

Exit codes:
	0	success or pass
	1	mathematical failure (verification failed, candidate refuted)
	2	configuration, resource or domain error; check not applicable
	3	inconclusive (empty precision window, uncertified convergence)
"""

import argparse
import logging
import sys

from . import __version__, Carlitz
from .config import FORMATS, SECTOR_POLICIES, RunConfig
from .encoder import Encoder
from .errors import CarlitzError, ConfigError, ConvergenceError, DomainError, InconclusiveError, ResourceError, SearchExhaustedError
from .checks import CHECKS
from .parser import ParseTuple
from .laurent import agree

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_INCONCLUSIVE = 3

# Flags shared by every subcommand, mapped onto RunConfig keys
COMMON = ('q', 'prec', 'tdeg', 'deg', 'format', 'caps', 'sector_policy', 'margin')

class CommandParser(argparse.ArgumentParser):
	"""
	ArgumentParser that writes usage, help and version text to the streams given to run() instead of sys.stdout/sys.stderr.
	Subparsers are created with the same class and must be handed the streams too.
	"""

	# Replacements for sys.stdout and sys.stderr (None keeps the sys stream)
	stdout = None
	stderr = None

	def __init__(self, *args, **kw):
		self.stdout = kw.pop('stdout', None)
		self.stderr = kw.pop('stderr', None)
		argparse.ArgumentParser.__init__(self, *args, **kw)

	def _print_message(self, message, file=None):
		if not message:
			return

		if file is sys.stderr:
			out = self.stderr or sys.stderr
		else:
			out = self.stdout or file or sys.stdout
		out.write(message)

def _common_parser():
	p = argparse.ArgumentParser(add_help=False)
	p.add_argument('--q', type=int, help="Field order q = p^m")
	p.add_argument('--prec', type=int, help="Precision in theta^-1 units")
	p.add_argument('--tdeg', type=int, help="Truncation order in t")
	p.add_argument('--deg', type=int, help="Degree bound for relation mining")
	p.add_argument('--format', choices=FORMATS, help="Output format")
	p.add_argument('--config', help="Config file (default $PYCARLITZ_CONFIG)")
	p.add_argument('--caps', help="Enumeration caps as key=value,...")
	p.add_argument('--sector-policy', dest='sector_policy', choices=SECTOR_POLICIES, help="How targets in several sectors are mined")
	p.add_argument('--margin', type=int, help="Mining safety margin in w-units")
	p.add_argument('-v', '--verbose', action='count', default=0, help="More logging on stderr (repeatable)")
	return p

def build_parser(stdout=None, stderr=None):
	common = _common_parser()

	parser = CommandParser(prog='pycarlitz', description="Exact Carlitz zeta values, multizeta values and their motives.", stdout=stdout, stderr=stderr)
	parser.add_argument('--version', action='version', version="pycarlitz %s" % __version__)
	sub = parser.add_subparsers(dest='command', metavar='command')
	sub.required = True

	def add(name, **kw):
		return sub.add_parser(name, parents=[common], stdout=stdout, stderr=stderr, **kw)

	p = add('zeta', help="Multizeta value zeta(n_1,...,n_d)")
	p.add_argument('--tuple', required=True, help="Index tuple, eg 1,1")
	p.add_argument('--oracle', type=int, metavar='MAXDEG', help="Also sum directly over monic tuples of degree <= MAXDEG")
	p.set_defaults(func=cmd_zeta)

	p = add('pi', help="Carlitz period")
	p.add_argument('--inverse', action='store_true', help="Print 1/pi instead")
	p.set_defaults(func=cmd_pi)

	p = add('omega', help="Omega^n as a Tate algebra element")
	p.add_argument('--n', type=int, default=1)
	p.add_argument('--shift', type=int, default=0, help="Frobenius twist applied")
	p.add_argument('--eval', type=int, metavar='N', help="Also evaluate at t = theta^(q^N)")
	p.set_defaults(func=cmd_omega)

	p = add('powersum', help="Power sum S_i(n)")
	p.add_argument('--i', type=int, required=True)
	p.add_argument('--n', type=int, required=True)
	p.add_argument('--times-ell', dest='times_ell', action='store_true', help="Print the polynomial Gamma_n S_i(n) l_i^n")
	p.set_defaults(func=cmd_powersum)

	p = add('gamma', help="Carlitz factorial Gamma_n")
	p.add_argument('--n', type=int, required=True)
	p.set_defaults(func=cmd_gamma)

	p = add('atpoly', help="Anderson-Thakur polynomial H_(n-1)")
	p.add_argument('--n', type=int, required=True)
	p.add_argument('--series', type=int, metavar='I', help="Also check the series identity for twists 0..I")
	p.set_defaults(func=cmd_atpoly)

	p = add('mcpl', help="Carlitz multiple polylogarithm L_(alpha, n)")
	p.add_argument('--tuple', required=True, help="Weights n_1,...,n_d")
	p.add_argument('--alpha', help="Polynomials in theta and t separated by ';' (default 1)")
	p.add_argument('--omega', action='store_true', help="Multiply by Omega^(n_1+...+n_d)")
	p.add_argument('--eval', type=int, metavar='N', help="Also evaluate at t = theta^(q^N)")
	p.set_defaults(func=cmd_mcpl)

	p = add('motive-verify', help="Check Psi^(-1) = Phi Psi")
	p.add_argument('--tuple', required=True, help="Weights n_1,...,n_d (a single n with --depth1)")
	p.add_argument('--alpha', help="Polynomials separated by ';' (default Anderson-Thakur polynomials)")
	p.add_argument('--depth1', action='store_true', help="Depth one system for several alphas of one weight")
	p.add_argument('--corrupt', metavar='i,j,k,e[,c]', help="Add c*w^e to the t^k coefficient of Psi_ij first (e = 0 is refused on rows where Phi_ii = 1 with nothing below it, eg the last row)")
	p.set_defaults(func=cmd_motive)

	p = add('mine', help="Mine F_q[theta]-linear relations")
	p.add_argument('--targets', required=True, help="Monomials in pi and zeta, eg \"pi^2,zeta(1)^2,zeta(1,1)\"")
	p.add_argument('--confirm-prec', dest='confirm_prec', type=int, help="Confirmation precision in theta^-1 units (default twice the mining precision)")
	p.set_defaults(func=cmd_mine)

	p = add('check', help="Named identity check")
	p.add_argument('name', choices=CHECKS)
	p.add_argument('--n', type=int)
	p.add_argument('--n1', type=int)
	p.add_argument('--n2', type=int)
	p.add_argument('--tuple', help="Index tuple for the chang check")
	p.add_argument('--N', type=int, help="Evaluation exponent for the chang check")
	p.set_defaults(func=cmd_check)

	p = add('chang-eval', help="Both sides of Chang's formula at theta^(q^N)")
	p.add_argument('--tuple', required=True)
	p.add_argument('--N', type=int, default=0)
	p.set_defaults(func=cmd_chang)

	return parser

# --------------------------------------------------------------------------------
# Commands: each returns (result dictionary, exit code)

def _alphas(c, args, weights):
	if args.alpha is None:
		return None
	return c.Alphas([x for x in args.alpha.split(';') if len(x.strip())], weights)

def cmd_zeta(c, args):
	idx = ParseTuple(args.tuple)
	z = c.Zeta(idx)
	ret = {'tuple': list(idx), 'series': z.Serialize()}

	if args.oracle is not None:
		q = c.q
		o = c.ZetaOracle(idx, args.oracle)
		lim = min(z.prec, (q-1) * idx[0] * (args.oracle + 1))
		a = min(agree(z, o), lim)
		ret['oracle'] = {'maxdeg': args.oracle, 'prec': lim, 'agreement': a, 'match': a >= lim}
		if a < lim:
			return ret, EXIT_FAIL
	return ret, EXIT_OK

def cmd_pi(c, args):
	x = c.PiInverse() if args.inverse else c.Pi()
	return {'inverse': args.inverse, 'series': x.Serialize()}, EXIT_OK

def cmd_omega(c, args):
	f = c.Omega(args.n, shift=args.shift)
	ret = {'n': args.n, 'shift': args.shift, 'tate': f.Serialize()}
	if args.eval is not None:
		v,M = c.EvaluateAt(lambda T, P: c.Omega(args.n, T, P, args.shift), args.eval)
		ret['eval'] = {'N': args.eval, 'tdeg': M, 'value': v.Serialize()}
	return ret, EXIT_OK

def cmd_powersum(c, args):
	if args.times_ell:
		p = c.PowerSumTimesEll(args.i, args.n)
		return {'i': args.i, 'n': args.n, 'poly': p.Serialize(), 'text': str(p)}, EXIT_OK
	return {'i': args.i, 'n': args.n, 'series': c.PowerSum(args.i, args.n).Serialize()}, EXIT_OK

def cmd_gamma(c, args):
	g = c.Gamma(args.n)
	return {'n': args.n, 'poly': g.Serialize(), 'text': str(g)}, EXIT_OK

def cmd_atpoly(c, args):
	h = c.ATPoly(args.n)
	ret = {'atpoly': h.Serialize(), 'text': str(h.h)}

	code = EXIT_OK
	if args.series is not None:
		rows = []
		for i in range(args.series + 1):
			lhs,rhs,a = c.ATSeriesCheck(args.n, i)
			ok = a >= lhs.prec
			rows.append([i, a, ok])
			if not ok:
				code = EXIT_FAIL
		ret['series_check'] = rows
	return ret, code

def cmd_mcpl(c, args):
	weights = ParseTuple(args.tuple)
	alphas = _alphas(c, args, weights)
	if alphas is None:
		alphas = c.Alphas(["1"] * len(weights), weights)

	build = c.OmegaMCPL if args.omega else c.MCPL
	f = build(alphas)
	ret = {'alphas': alphas.Serialize(), 'omega': args.omega, 'tate': f.Serialize()}
	if args.eval is not None:
		v,M = c.EvaluateAt(lambda T, P: build(alphas, T, P), args.eval)
		ret['eval'] = {'N': args.eval, 'tdeg': M, 'value': v.Serialize()}
	return ret, EXIT_OK

def cmd_motive(c, args):
	weights = ParseTuple(args.tuple)

	if args.depth1:
		if len(weights) != 1:
			raise ConfigError("--depth1 takes a single weight, got %s" % args.tuple)
		polys = [x for x in (args.alpha or "1").split(';') if len(x.strip())]
		alphas = c.Alphas(polys, weights * len(polys))
		sys_ = c.MotiveDepth1(alphas.polys, weights[0])
	else:
		sys_ = c.Motive(weights, _alphas(c, args, weights))

	if args.corrupt is not None:
		where = ParseTuple(args.corrupt)
		if len(where) not in (4, 5):
			raise ConfigError("--corrupt takes i,j,k,e or i,j,k,e,c, got %s" % args.corrupt)
		sys_ = c.Corrupt(sys_, *where)

	report = c.Verify(sys_, strict=False)
	ret = {'system': sys_.Serialize(), 'report': report.Serialize()}
	if report.status == 'inconclusive':
		return ret, EXIT_INCONCLUSIVE
	return ret, EXIT_OK if report.passed else EXIT_FAIL

def cmd_mine(c, args):
	targets = c.Targets(args.targets)

	# An explicit --prec is used as given (and validated); otherwise the margin decides
	prec = c.cfg.WPrec() if args.prec is not None else None
	confirm = None if args.confirm_prec is None else args.confirm_prec * (c.q - 1)

	cert = c.Mine(targets, prec=prec, confirm_prec=confirm)
	return {'certificate': cert.Serialize()}, EXIT_OK if cert.Confirmed() else EXIT_FAIL

_check_codes = {'pass': EXIT_OK, 'fail': EXIT_FAIL, 'not-applicable': EXIT_CONFIG, 'inconclusive': EXIT_INCONCLUSIVE}

def cmd_check(c, args):
	params = {}
	for k in ('n', 'n1', 'n2', 'N'):
		v = getattr(args, k)
		if v is not None:
			params[k] = v
	if args.tuple is not None:
		params['tuple'] = ParseTuple(args.tuple)

	r = c.Check(args.name, params)
	return {'check': r.Serialize()}, _check_codes[r.status]

def cmd_chang(c, args):
	r = c.Chang(ParseTuple(args.tuple), args.N)
	return {'chang': r.Serialize()}, EXIT_OK if r.match else EXIT_FAIL

# --------------------------------------------------------------------------------

def exit_code(e):
	"""
	Exit code for an exception raised by a command.
	"""

	if isinstance(e, (InconclusiveError, ConvergenceError)):
		return EXIT_INCONCLUSIVE
	if isinstance(e, (ConfigError, ResourceError, DomainError, SearchExhaustedError)):
		return EXIT_CONFIG
	return EXIT_FAIL

def _setup_logging(verbosity, stream):
	level = logging.WARNING
	if verbosity == 1:
		level = logging.INFO
	elif verbosity >= 2:
		level = logging.DEBUG

	handler = logging.StreamHandler(stream)
	handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
	root = logging.getLogger('pycarlitz')
	root.addHandler(handler)
	root.setLevel(level)
	return handler

def header(cfg, args):
	"""
	Everything needed to reproduce the run; nothing time-dependent.
	"""

	skip = set(COMMON) | set(['config', 'verbose', 'func', 'command'])
	return {
		'version': __version__,
		'command': args.command,
		'args': dict((k, v) for k,v in sorted(vars(args).items()) if k not in skip),
		'config': cfg.Serialize(),
	}

def run(argv=None, stdout=None, stderr=None, environ=None):
	"""
	Parse @argv, run the command and write its payload.  Returns the exit code.
	"""

	stdout = sys.stdout if stdout is None else stdout
	stderr = sys.stderr if stderr is None else stderr

	parser = build_parser(stdout, stderr)
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		return EXIT_CONFIG if e.code else EXIT_OK

	handler = _setup_logging(args.verbose, stderr)
	try:
		flags = dict((k, getattr(args, k)) for k in COMMON)
		flags['verbosity'] = args.verbose
		cfg = RunConfig.Load(flags, args.config, environ)

		c = Carlitz(cfg=cfg)
		result,code = args.func(c, args)

	except CarlitzError as e:
		# Print just the message instead of the whole exception traceback
		stderr.write("error: %s\n" % e.Message)
		return exit_code(e)

	finally:
		logging.getLogger('pycarlitz').removeHandler(handler)

	payload = header(cfg, args)
	payload['result'] = result
	if cfg.format == 'json':
		stdout.write(Encoder.Json(payload))
	else:
		stdout.write(Encoder.Text(payload))
	return code

def main():
	sys.exit(run())

if __name__ == '__main__':
	main()
