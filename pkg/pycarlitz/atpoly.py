"""
Anderson-Thakur polynomials H_(n-1) in F_q[theta, t].

H is found by interpolation: (H Omega^n)^(i)(theta) = Gamma_n S_i(n) / pi^n is equivalent to the
polynomial identity H^(i)(t = theta) = Gamma_n S_i(n) l_i^n, which is linear in the coefficients of H.
The system for i = 0..fit is solved over F_q and the solution checked exactly for i = 0..check.
"""

import logging

import numpy as np

from .bipoly import BiPoly
from .config import default_caps
from .errors import DomainError, SearchExhaustedError
from .field import ints
from .laurent import FqPoly, agree, ls_mul, ls_pow, poly_embed
from .special import carlitz_factorial, choose_tdeg, omega_bound, omega_power, pi_inverse, power_sum, power_sum_times_ell
from .tate import TailBound, tate_eval, tate_mul, tate_poly

log = logging.getLogger(__name__)

class ATPoly:
	"""
	H_(n-1) for weight n.
	"""

	# FieldParams
	field = None

	# Weight n (the polynomial is H_(n-1))
	n = None

	# BiPoly
	h = None

	# Interpolation identity holds exactly for i = 0..checked
	checked = None

	def __init__(self, field, n, h, checked):
		self.field = field
		self.n = n
		self.h = h
		self.checked = checked

	def IsOne(self):
		return self.h == BiPoly.Constant(self.field, 1)

	def Serialize(self):
		return {
			'n': self.n,
			'deg_theta': self.h.DegTheta(),
			'deg_t': self.h.DegT(),
			'h': self.h.Serialize(),
			'checked': list(range(self.checked + 1)),
		}

	def __repr__(self):				return str(self)
	def __str__(self):				return "<ATPoly H_%d = %s>" % (self.n - 1, self.h)

def deg_theta_bound(q, n):
	"""
	Largest deg_theta allowed by |H| < |theta|^(nq/(q-1)).
	"""
	return (n*q - 1) // (q - 1)

def interpolation_targets(field, n, upto, cap=None, cache=None):
	"""
	Gamma_n S_i(n) l_i^n for i = 0..upto.
	"""
	return [power_sum_times_ell(field, i, n, cap, cache) for i in range(upto+1)]

def _system(field, targets, eqs, amax, T):
	"""
	Augmented matrix [A|b] of H^(i)(theta) = targets[i] for i in eqs.
	Column a*(T+1) + b is the coefficient h_(a,b) of theta^a t^b.
	"""

	q = field.q
	cols = (amax+1) * (T+1)

	blocks = []
	for i in eqs:
		qi = q**i
		R = targets[i]
		rows = max(amax*qi + T, R.deg if not R.IsZero() else 0) + 1

		blk = field.Zeros((rows, cols+1))
		a,b = np.meshgrid(np.arange(amax+1), np.arange(T+1), indexing='ij')
		blk[(a*qi + b).ravel(), (a*(T+1) + b).ravel()] = field.GF(1)
		if not R.IsZero():
			blk[:len(R.c), cols] = R.c
		blocks.append(blk)

	return field.GF(np.concatenate([ints(b) for b in blocks], axis=0))

def _solve(field, M, amax, T):
	"""
	Solution of the reduced system with free variables set to zero, or None if inconsistent.
	"""

	R = ints(M.row_reduce())
	cols = R.shape[1] - 1

	sol = np.zeros(cols, dtype=np.int64)
	for row in R:
		nz = np.flatnonzero(row[:cols])
		if not len(nz):
			if row[cols]:
				return None
			continue
		sol[nz[0]] = row[cols]

	return BiPoly(field, field.GF(sol.reshape((amax+1, T+1))))

def anderson_thakur(field, n, cfg=None, cache=None, tdeg_max=None, fit=None, check=None):
	"""
	Find H_(n-1).  H = 1 for n <= q; otherwise deg_t is swept from 0 to @tdeg_max.
	"""

	if n < 1:
		raise DomainError("Anderson-Thakur polynomial needs n >= 1, got %d" % n)

	caps = cfg.caps if cfg is not None else default_caps(field.q)
	tdeg_max = caps['at_tdeg_max'] if tdeg_max is None else tdeg_max
	fit = caps['at_fit'] if fit is None else fit
	check = max(caps['at_check'] if check is None else check, fit)

	if cache is not None:
		hit = cache.Get(('at', field.q, n))
		if hit is not None and hit.checked >= check:
			return hit

	q = field.q
	if n <= q:
		ret = ATPoly(field, n, BiPoly.Constant(field, 1), check)
		if cache is not None:
			cache.Put(('at', field.q, n), ret)
		return ret

	amax = deg_theta_bound(q, n)
	targets = interpolation_targets(field, n, check, caps['powersum_cap'], cache)

	for T in range(0, tdeg_max+1):
		upto = fit
		while True:
			h = _solve(field, _system(field, targets, range(upto+1), amax, T), amax, T)
			if h is None:
				log.debug("H_%d: no solution with deg_theta <= %d, deg_t <= %d on i <= %d", n-1, amax, T, upto)
				break

			bad = [i for i in range(check+1) if h.EvalTwisted(i) != targets[i]]
			if not len(bad):
				log.info("H_%d found: deg_theta %d, deg_t %d", n-1, h.DegTheta(), h.DegT())
				ret = ATPoly(field, n, h, check)
				if cache is not None:
					cache.Put(('at', field.q, n), ret)
				return ret

			# Add the first failing identity to the fitted equations and solve again
			log.debug("H_%d candidate at deg_t %d fails at i=%d, refitting", n-1, T, bad[0])
			upto = bad[0]

	bounds = {'deg_theta': amax, 'deg_t': [0, tdeg_max], 'fit': fit, 'check': check}
	raise SearchExhaustedError("No Anderson-Thakur polynomial H_%d with deg_theta <= %d and deg_t <= %d" % (n-1, amax, tdeg_max), bounds)

def interpolation_check(field, h, n, i, prec, cache=None, cap=None, tdeg_cap=256):
	"""
	Both sides of (H Omega^n)^(i)(theta) = Gamma_n S_i(n) / pi^n as series to O(w^prec).
	Returns (lhs, rhs, agreement).
	"""

	q = field.q
	hp = h.Twist(i)
	off = (q-1) * max(hp.DegTheta(), 0)

	bound = tate_poly(hp, 0, 1).tail.Convolve(TailBound.Convex(omega_bound(q, n, i)))
	M = choose_tdeg(bound, 0, prec, q, tdeg_cap)
	work = prec + M*(q-1) + off

	F = tate_mul(tate_poly(hp, M, work), omega_power(field, n, M, work, shift=i))
	lhs = tate_eval(F, 0, prec)

	gamma = carlitz_factorial(field, n)
	base = prec + (q-1)*gamma.deg
	rhs = ls_mul(power_sum(field, i, n, base, cap, cache), ls_pow(pi_inverse(field, base), n))
	rhs = ls_mul(poly_embed(gamma, base), rhs)

	return (lhs, rhs, agree(lhs, rhs))
