"""
Exact arithmetic with Carlitz zeta values, multizeta values and their period interpretation, in pure python.
The main class is pycarlitz.Carlitz, which holds a finite field, a run configuration and a cache of everything
computed so far.

All series are truncated Laurent series in w = (-theta)^(-1/(q-1)) with coefficients in F_q; every result states
the precision it is known to and never claims more.  Finite field arithmetic and linear algebra over F_q come
from galois, and PLY tokenizes target expressions and configuration files.
"""

__version__ = "1.0.0"

__all__ = ['Carlitz', 'cli', 'parser', 'encoder']

import logging

from . import parser
from .atpoly import anderson_thakur, interpolation_check
from .cache import ObjectCache
from .checks import named_check
from .config import RunConfig
from .errors import DomainError
from .motive import build_depth1, build_general, corrupt, verify
from .relations import MiningProblem, mine, parse_targets, required_prec
from .special import AlphaTuple, IndexTuple, carlitz_factorial, chang_eval, choose_tdeg, mcpl, mzv, mzv_bruteforce_oracle, omega_mcpl, omega_power, pi_carlitz, pi_inverse, power_sum, power_sum_times_ell
from .tate import tate_eval

log = logging.getLogger(__name__)

class Carlitz:
	"""
	Basic entry point: call the constructor with q (or a RunConfig) and ask for values.
	Precisions passed to methods are in w-units; None means the configured precision.
	"""

	# FieldParams
	field = None

	# RunConfig
	cfg = None

	# ObjectCache shared by every computation on this field
	cache = None

	def __init__(self, q=None, cfg=None):
		if cfg is None:
			cfg = RunConfig(2 if q is None else q)
		elif q is not None and q != cfg.q:
			raise DomainError("q=%d does not match the configuration (q=%d)" % (q, cfg.q))

		self.cfg = cfg
		self.field = cfg.field
		self.cache = ObjectCache(cfg.caps['cache_cap'])

	def get_q(self):
		return self.field.q
	q = property(get_q)

	def _prec(self, prec):
		return self.cfg.WPrec() if prec is None else prec

	def _tdeg(self, tdeg):
		return self.cfg.tdeg if tdeg is None else tdeg

	def _cap(self):
		return self.cfg.caps['powersum_cap']

	# ----------------------------------------------------------------------------------------
	# Values

	def Zeta(self, idx, prec=None):
		return mzv(self.field, IndexTuple(idx), self._prec(prec), self._cap(), self.cache)

	def ZetaOracle(self, idx, maxdeg, prec=None):
		"""
		Multizeta value summed over all monic tuples of degree <= @maxdeg (a partial sum, compared only below its own precision).
		"""
		return mzv_bruteforce_oracle(self.field, IndexTuple(idx), maxdeg, self._prec(prec), self.cfg.caps['oracle_cap'])

	def PowerSum(self, i, n, prec=None):
		return power_sum(self.field, i, n, self._prec(prec), self._cap(), self.cache)

	def PowerSumTimesEll(self, i, n):
		return power_sum_times_ell(self.field, i, n, self._cap(), self.cache)

	def Pi(self, prec=None):
		return pi_carlitz(self.field, self._prec(prec), self.cache)

	def PiInverse(self, prec=None):
		return pi_inverse(self.field, self._prec(prec))

	def Gamma(self, n):
		return carlitz_factorial(self.field, n)

	def Omega(self, n=1, tdeg=None, prec=None, shift=0):
		return omega_power(self.field, n, self._tdeg(tdeg), self._prec(prec), shift)

	# ----------------------------------------------------------------------------------------
	# Polynomials and polylogarithms

	def Alphas(self, polys, weights):
		"""
		AlphaTuple from BiPoly objects or polynomial strings such as "theta*t + 1".
		"""

		ret = []
		for p in polys:
			if isinstance(p, str):
				p = parser.ExprTokenizer(p).ParsePolynomial(self.field)
			ret.append(p)
		return AlphaTuple(self.field, ret, IndexTuple(weights))

	def ATPoly(self, n):
		return anderson_thakur(self.field, n, cfg=self.cfg, cache=self.cache)

	def ATSeriesCheck(self, n, i, prec=None):
		"""
		Series form of the interpolation identity for H_(n-1) at the i-th twist: (lhs, rhs, agreement).
		"""

		h = self.ATPoly(n).h
		return interpolation_check(self.field, h, n, i, self._prec(prec), self.cache, self._cap(), self.cfg.caps['tdeg_cap'])

	def MCPL(self, alphas, tdeg=None, prec=None):
		return mcpl(alphas, self._tdeg(tdeg), self._prec(prec))

	def OmegaMCPL(self, alphas, tdeg=None, prec=None):
		return omega_mcpl(alphas, self._tdeg(tdeg), self._prec(prec))

	def EvaluateAt(self, build, N, prec=None):
		"""
		Value at theta^(q^N) of the element @build(tdeg, prec) returns, with the t-truncation chosen from its tail bound.
		Returns (value, tdeg).
		"""

		prec = self._prec(prec)
		q = self.q

		# The tail bound does not depend on the truncation, so a minimal build yields it
		bound = build(0, 1).tail
		M = choose_tdeg(bound, N, prec, q, self.cfg.caps['tdeg_cap'])
		f = build(M, prec + M*(q-1)*q**N)
		return (tate_eval(f, N, prec), M)

	def Chang(self, idx, N=0, prec=None):
		return chang_eval(self.field, IndexTuple(idx), N, self._prec(prec), cfg=self.cfg, cache=self.cache)

	# ----------------------------------------------------------------------------------------
	# Motives

	def Motive(self, idx, alphas=None, tdeg=None, prec=None):
		"""
		General (Phi, Psi) system for the index tuple; alphas default to H_(n_j - 1).
		"""

		idx = IndexTuple(idx)
		if alphas is None:
			alphas = AlphaTuple(self.field, [self.ATPoly(n).h for n in idx], idx)
		return build_general(self.field, idx, alphas, self._tdeg(tdeg), self._prec(prec))

	def MotiveDepth1(self, alphas, n, tdeg=None, prec=None):
		return build_depth1(self.field, alphas, n, self._tdeg(tdeg), self._prec(prec))

	def Verify(self, sys, strict=True):
		return verify(sys, strict)

	def Corrupt(self, sys, i, j, k, e, c=1):
		return corrupt(sys, i, j, k, e, c)

	# ----------------------------------------------------------------------------------------
	# Relations

	def Targets(self, txt):
		return parse_targets(self.field, txt, self._cap(), self.cache)

	def Mine(self, targets, D=None, prec=None, confirm_prec=None):
		"""
		Mine relations among @targets (expression or list of Target).  When @prec is None the mining precision is
		the configured one raised to the safety margin.
		"""

		if isinstance(targets, str):
			targets = self.Targets(targets)
		D = self.cfg.degree_bound if D is None else D

		if prec is None:
			prec = self.cfg.WPrec()
			for s,vals in _sector_vals(self.field, targets).items():
				prec = max(prec, required_prec(self.q, D, vals, self.cfg.margin))

		prob = MiningProblem.FromTargets(self.field, targets, D, prec, self.cfg.margin, self.cfg.sector_policy)
		return mine(prob, confirm_prec)

	def Check(self, name, params=None, prec=None):
		return named_check(name, self.field, params, self._prec(prec), self.cfg, self.cache)

	def __repr__(self):				return str(self)
	def __str__(self):				return "<Carlitz q=%d cached=%d>" % (self.q, len(self.cache))

def _sector_vals(field, targets):
	"""
	Known valuations of the targets grouped by the sector their valuation lies in.
	"""

	ret = {}
	for t in targets:
		if t.val is not None:
			ret.setdefault(t.val % (field.q - 1), []).append(t.val)
	return ret
