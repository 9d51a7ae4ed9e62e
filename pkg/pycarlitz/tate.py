"""
Truncated elements of the Tate algebra: polynomials in t of degree <= tdeg with LaurentSeries
coefficients, plus a proven lower bound on the w-valuation of every coefficient (the tail bound).

Tail bounds are kept as a minimum of convex pieces.  Every constructor installs pieces it can
prove, sums take the union of pieces and products convolve them pairwise, which keeps each piece
convex.  Convexity is what lets tate_eval bound an infinite tail from finitely many values.
"""

import logging
import math

from .errors import ConvergenceError, DomainError
from .laurent import LaurentSeries, frobenius_twist, ls_add, ls_mul, ls_neg, ls_shift, monomial, poly_embed, truncate, zero

log = logging.getLogger(__name__)

INF = math.inf

# Steps to scan a tail bound before giving up on certification
SCAN_LIMIT = 4096

# --------------------------------------------------------------------------------
# Tail bounds

class Piece:
	"""
	Convex integer sequence defined on lo <= k <= hi (hi None means unbounded), +inf elsewhere.
	"""

	# Domain
	lo = 0
	hi = None

	def __call__(self, k):
		if k < self.lo or (self.hi is not None and k > self.hi):
			return INF
		return self.value(k)

	def value(self, k):
		raise NotImplementedError("Piece subclass must implement value()")

class FuncPiece(Piece):
	"""
	Piece given by a closed-form function; func must be convex on the domain.
	"""

	# Callable k -> int
	func = None

	def __init__(self, func, lo=0, hi=None):
		self.func = func
		self.lo = lo
		self.hi = hi

	def value(self, k):
		return self.func(k)

class AffinePiece(Piece):
	"""
	mul*base(k) + add with mul > 0.
	"""

	base = None
	mul = 1
	add = 0

	def __init__(self, base, mul=1, add=0):
		if isinstance(base, AffinePiece):
			add = base.add*mul + add
			mul = base.mul*mul
			base = base.base

		self.base = base
		self.mul = mul
		self.add = add
		self.lo = base.lo
		self.hi = base.hi

	def value(self, k):
		return self.mul*self.base.value(k) + self.add

class ConvPiece(Piece):
	"""
	Inf-convolution min_{i+j=k} a(i) + b(j) of two convex pieces.
	For convex sequences this is the merge of their increment sequences, computed lazily.
	"""

	a = None
	b = None

	# Memo of values from lo upward and the merge cursors
	_vals = None
	_ia = 0
	_ib = 0

	def __init__(self, a, b):
		self.a = a
		self.b = b
		self.lo = a.lo + b.lo
		self.hi = None if a.hi is None or b.hi is None else a.hi + b.hi
		self._vals = [a.value(a.lo) + b.value(b.lo)]
		self._ia = 0
		self._ib = 0

	def _inc(self, p, i):
		k = p.lo + i
		if p.hi is not None and k + 1 > p.hi:
			return INF
		return p.value(k+1) - p.value(k)

	def value(self, k):
		idx = k - self.lo
		while len(self._vals) <= idx:
			da = self._inc(self.a, self._ia)
			db = self._inc(self.b, self._ib)
			if da == INF and db == INF:
				return INF

			if da <= db:
				self._ia += 1
				self._vals.append(self._vals[-1] + da)
			else:
				self._ib += 1
				self._vals.append(self._vals[-1] + db)
		return self._vals[idx]

class TailBound:
	"""
	nu(k) = min over pieces; a lower bound on the w-valuation of the coefficient of t^k, valid for every k.
	"""

	# List of Piece
	pieces = None

	def __init__(self, pieces):
		self.pieces = list(pieces)

	@staticmethod
	def Convex(func, lo=0, hi=None):
		return TailBound([FuncPiece(func, lo, hi)])

	@staticmethod
	def Finite(values):
		"""
		Bound for a polynomial in t: values[k] bounds the coefficient of t^k, exact zero beyond.
		INF entries are skipped.
		"""

		pieces = []
		for k,v in enumerate(values):
			if v == INF:
				continue
			pieces.append(FuncPiece(lambda _k, _v=v: _v, k, k))
		return TailBound(pieces)

	def __call__(self, k):
		ret = INF
		for p in self.pieces:
			v = p(k)
			if v < ret:
				ret = v
		return ret

	def Shift(self, c):
		"""
		Bound after multiplying by a scalar of valuation >= c.
		"""
		return TailBound([AffinePiece(p, 1, c) for p in self.pieces])

	def Twist(self, n, q):
		qn = q**n
		return TailBound([AffinePiece(p, qn, 0) for p in self.pieces])

	def Min(self, o):
		return TailBound(self.pieces + o.pieces)

	def Convolve(self, o):
		return TailBound([ConvPiece(a, b) for a in self.pieces for b in o.pieces])

	def TailMin(self, M, s, limit=SCAN_LIMIT):
		"""
		min over k > M of nu(k) - k*s, or None if some piece cannot be shown to grow faster than s.
		"""

		ret = INF
		for p in self.pieces:
			k = max(M+1, p.lo)
			if p.hi is not None and k > p.hi:
				continue

			best = p.value(k) - k*s
			steps = 0
			while True:
				if p.hi is not None and k >= p.hi:
					break

				inc = p.value(k+1) - p.value(k)
				if inc > s:
					break

				k += 1
				best = min(best, p.value(k) - k*s)
				steps += 1
				if steps > limit:
					log.debug("Tail piece does not outgrow slope %d within %d steps", s, limit)
					return None

			ret = min(ret, best)
		return ret

	def Table(self, lo, hi):
		"""
		[[k, nu(k)], ...] for lo <= k < hi; exact zeros (INF) are reported as None.
		"""

		ret = []
		for k in range(lo, hi):
			v = self(k)
			ret.append([k, None if v == INF else int(v)])
		return ret

# --------------------------------------------------------------------------------
# Tate algebra elements

class TateElem:
	"""
	sum_{k <= tdeg} coeffs[k] t^k + (untracked terms bounded by tail).
	"""

	# FieldParams
	field = None

	# Truncation order M
	tdeg = None

	# List of tdeg+1 LaurentSeries
	coeffs = None

	# TailBound or None
	tail = None

	def __init__(self, field, coeffs, tail=None):
		self.field = field
		self.coeffs = list(coeffs)
		self.tdeg = len(self.coeffs) - 1
		self.tail = tail

		if self.tdeg < 0:
			raise ValueError("TateElem needs at least the constant coefficient")
		for c in self.coeffs:
			if c.field != field:
				raise TypeError("Coefficient over F_%d in a TateElem over F_%d" % (c.field.q, field.q))

	def Coefficient(self, k):
		if k > self.tdeg:
			raise DomainError("Coefficient of t^%d is beyond the truncation order %d" % (k, self.tdeg))
		return self.coeffs[k]

	def Prec(self):
		"""
		Smallest coefficient precision.
		"""
		return min(c.prec for c in self.coeffs)

	def MinVal(self):
		"""
		Smallest valuation over the nonzero coefficients (None if all are zero to precision).
		"""

		vals = [c.val for c in self.coeffs if not c.IsZero()]
		return min(vals) if vals else None

	def TailViolations(self):
		"""
		Indices k <= tdeg whose known coefficient has a nonzero term below the installed bound.
		"""

		if self.tail is None:
			return []

		ret = []
		for k,c in enumerate(self.coeffs):
			if not c.IsZero() and c.val < self.tail(k):
				ret.append(k)
		return ret

	def Serialize(self):
		return {
			'tdeg': self.tdeg,
			'coeffs': [c.Serialize() for c in self.coeffs],
			'tail_bound': None if self.tail is None else self.tail.Table(self.tdeg+1, self.tdeg+9),
		}

	def __add__(self, o):			return tate_add(self, o)
	def __sub__(self, o):			return tate_add(self, tate_neg(o))
	def __neg__(self):				return tate_neg(self)
	def __mul__(self, o):			return tate_mul(self, o)

	def __repr__(self):				return str(self)
	def __str__(self):
		return "<TateElem q=%d tdeg=%d prec=%d tail=%s>" % (self.field.q, self.tdeg, self.Prec(), "yes" if self.tail else "none")

def tate_const(c, tdeg):
	"""
	Constant in t; exact zero above t^0.
	"""

	coeffs = [c] + [zero(c.field, c.prec) for k in range(tdeg)]
	return TateElem(c.field, coeffs, TailBound.Finite([c.val]))

def tate_one(field, tdeg, prec):
	return tate_const(monomial(field, 0, prec), tdeg)

def tate_poly(alpha, tdeg, prec):
	"""
	Embed an exact polynomial of F_q[theta][t] (a BiPoly), each t-coefficient truncated at O(w^prec).
	"""

	field = alpha.field
	coeffs = []
	bounds = []
	for k in range(tdeg+1):
		col = alpha.Column(k)
		coeffs.append(poly_embed(col, prec))
	for col in alpha.Columns():
		bounds.append(INF if col.IsZero() else -col.deg*(field.q-1))
	return TateElem(field, coeffs, TailBound.Finite(bounds))

def _combine_tails(f, g, how):
	if f.tail is None or g.tail is None:
		return None
	if how == 'add':
		return f.tail.Min(g.tail)
	return f.tail.Convolve(g.tail)

def tate_add(f, g):
	if f.field != g.field:
		raise TypeError("Tate elements over F_%d and F_%d cannot be combined" % (f.field.q, g.field.q))

	M = min(f.tdeg, g.tdeg)
	coeffs = [ls_add(f.coeffs[k], g.coeffs[k]) for k in range(M+1)]
	return TateElem(f.field, coeffs, _combine_tails(f, g, 'add'))

def tate_neg(f):
	return TateElem(f.field, [ls_neg(c) for c in f.coeffs], f.tail)

def tate_mul(f, g):
	if f.field != g.field:
		raise TypeError("Tate elements over F_%d and F_%d cannot be combined" % (f.field.q, g.field.q))

	M = min(f.tdeg, g.tdeg)
	coeffs = []
	for k in range(M+1):
		acc = None
		for a in range(k+1):
			term = ls_mul(f.coeffs[a], g.coeffs[k-a])
			acc = term if acc is None else ls_add(acc, term)
		coeffs.append(acc)
	return TateElem(f.field, coeffs, _combine_tails(f, g, 'mul'))

def tate_arith(f, g, op):
	"""
	Ring operations: op is 'add', 'sub' or 'mul'.
	"""

	if op == 'add':
		return tate_add(f, g)
	elif op == 'sub':
		return tate_add(f, tate_neg(g))
	elif op == 'mul':
		return tate_mul(f, g)
	else:
		raise ValueError("Unrecognized Tate algebra operation '%s'" % op)

def tate_scale(f, c):
	"""
	Multiply every coefficient by the LaurentSeries c.
	"""

	coeffs = [ls_mul(x, c) for x in f.coeffs]
	tail = None if f.tail is None else f.tail.Shift(c.val)
	return TateElem(f.field, coeffs, tail)

def tate_pow(f, n):
	if n < 0:
		raise DomainError("Negative powers are not available in the Tate algebra")
	if n == 0:
		return tate_one(f.field, f.tdeg, f.Prec())

	ret = None
	base = f
	while n:
		if n & 1:
			ret = base if ret is None else tate_mul(ret, base)
		n >>= 1
		if n:
			base = tate_mul(base, base)
	return ret

def tate_truncate(f, tdeg=None, prec=None):
	M = f.tdeg if tdeg is None else min(tdeg, f.tdeg)
	coeffs = f.coeffs[:M+1]
	if prec is not None:
		coeffs = [truncate(c, prec) for c in coeffs]
	return TateElem(f.field, coeffs, f.tail)

def tate_twist(f, n, cap=None):
	"""
	Coefficient-wise n-fold twist; t is fixed.  @cap bounds the coefficient precision.
	"""

	coeffs = [frobenius_twist(c, n, cap) for c in f.coeffs]
	tail = None if f.tail is None else f.tail.Twist(n, f.field.q)
	return TateElem(f.field, coeffs, tail)

def geometric_factor(field, j, n, M, prec):
	"""
	1/(t - theta^(q^j))^n for j >= 1.
	With W = w^((q-1)q^j), t - theta^(q^j) = W^-1 (1 + tW), so the coefficient of t^k is
	(-1)^k binom(n+k-1, k) W^(n+k).
	"""

	if j < 1:
		raise DomainError("geometric_factor needs j >= 1 so that the factor is a unit in the Tate algebra, got %d" % j)
	if n < 1:
		raise DomainError("geometric_factor needs n >= 1, got %d" % n)

	q = field.q
	step = (q-1) * q**j

	coeffs = []
	binom = 1
	for k in range(M+1):
		if k:
			binom = binom * (n+k-1) // k
		v = field.Prime(binom if k % 2 == 0 else -binom)
		coeffs.append(monomial(field, (n+k)*step, prec, int(v)))

	tail = TailBound.Convex(lambda k: (n+k)*step)
	return TateElem(field, coeffs, tail)

def tate_eval(f, N, target_prec):
	"""
	Evaluate at t = theta^(q^N) = -w^-s with s = (q-1)q^N.
	Every omitted coefficient t^k, k > tdeg, contributes a term of valuation >= nu(k) - k*s; the
	result is returned only when those terms and the tracked precisions reach target_prec.
	"""

	field = f.field
	if N < 0:
		raise DomainError("Evaluation point theta^(q^N) needs N >= 0")
	if f.tail is None:
		raise ConvergenceError("Cannot certify convergence at theta^(q^%d): no tail bound" % N)

	s = (field.q - 1) * field.q**N
	tail = f.tail.TailMin(f.tdeg, s)
	if tail is None:
		raise ConvergenceError("Cannot certify convergence at theta^(q^%d): tail bound does not outgrow the evaluation point" % N)

	acc = None
	for k,c in enumerate(f.coeffs):
		term = ls_shift(c, -k*s)
		if k % 2:
			term = ls_neg(term)
		acc = term if acc is None else ls_add(acc, term)

	prec = min(acc.prec, tail)
	log.debug("tate_eval N=%d: tracked precision %d, tail bound %s", N, acc.prec, tail)
	if prec < target_prec:
		raise ConvergenceError("Cannot certify convergence at theta^(q^%d): certified precision %s is below the requested %d" % (N, prec, target_prec))

	return truncate(acc, target_prec)
