"""
Truncated Laurent series in w = (-theta)^(-1/(q-1)) and exact polynomials in F_q[theta].

The ring F_q((w)) holds k_inf = F_q((1/theta)) as the series whose exponents are all multiples of
q-1 (sector 0), and the Kummer extension that contains the Carlitz period and the coefficients of
Omega as the other sectors.  theta itself is -w^-(q-1), so theta^k = (-1)^k w^(-k(q-1)).

A LaurentSeries knows the coefficients of w^j for val <= j < prec; everything from w^prec on is
unknown (O(w^prec)).  Coefficients are kept dense in a galois array covering that window.
"""

import logging
from fractions import Fraction

import galois
import numpy as np

from .errors import DomainError, NotInvertibleError, UnsupportedOperationError
from .field import FqElem, ints

log = logging.getLogger(__name__)

W_DEF = "(-theta)^(-1/(q-1))"

# Sector value for a series that mixes exponent classes
MIXED = "mixed"

def signs(field, n, start=0):
	"""
	Array of (-1)^k for k = start .. start+n-1 in F_q.
	"""

	ret = field.Zeros(n)
	ret[:] = field.GF(1)
	if field.p != 2:
		neg = field.Prime(-1)
		ret[(1 - start % 2)::2] = neg
	return ret

def nonzero(arr):
	return np.flatnonzero(arr.view(np.ndarray))

# --------------------------------------------------------------------------------
# F_q[theta]

class FqPoly:
	"""
	Exact polynomial in F_q[theta].
	Coefficients are kept as a galois array in ascending degree with no trailing zeros.
	"""

	# FieldParams
	field = None

	# galois array, c[k] is the coefficient of theta^k
	c = None

	def __init__(self, field, coeffs=None):
		self.field = field

		if coeffs is None:
			arr = field.Zeros(0)
		elif isinstance(coeffs, galois.FieldArray):
			arr = coeffs.copy()
		else:
			arr = field.Array([int(v) for v in coeffs])

		nz = nonzero(arr)
		if len(nz):
			self.c = arr[:nz[-1]+1]
		else:
			self.c = field.Zeros(0)

	@staticmethod
	def Theta(field):
		return FqPoly(field, [0,1])

	@staticmethod
	def Constant(field, v):
		return FqPoly(field, [int(v)])

	@staticmethod
	def Monomial(field, e, v=1):
		arr = field.Zeros(e+1)
		arr[e] = field.GF(int(v))
		return FqPoly(field, arr)

	@staticmethod
	def FromGalois(field, poly):
		return FqPoly(field, field.GF(poly.coeffs[::-1].view(np.ndarray)))

	def ToGalois(self):
		if self.IsZero():
			return galois.Poly([0], field=self.field.GF)
		return galois.Poly(self.c, field=self.field.GF, order="asc")

	def get_coeffs(self):
		return [FqElem(self.field, v) for v in ints(self.c)]
	coeffs = property(get_coeffs, doc="Coefficients as FqElem, indexed by theta-degree")

	def get_deg(self):
		if not len(self.c):
			return float('-inf')
		return len(self.c) - 1
	deg = property(get_deg, doc="Degree in theta (-inf for the zero polynomial)")

	def IsZero(self):
		return len(self.c) == 0

	def IsMonic(self):
		return not self.IsZero() and int(self.c[-1]) == 1

	def Leading(self):
		if self.IsZero():
			return self.field.GF(0)
		return self.c[-1]

	def Monic(self):
		if self.IsZero():
			raise NotInvertibleError("Zero polynomial has no monic associate")
		return self.Scale(self.field.GF(1) / self.c[-1])

	def Scale(self, v):
		if not isinstance(v, galois.FieldArray):
			v = self.field.GF(int(v))
		return FqPoly(self.field, self.c * v)

	def Twist(self, n):
		"""
		n-fold Frobenius twist theta -> theta^(q^n).
		"""

		if n < 0:
			raise UnsupportedOperationError("Inverse twist of a polynomial is not supported")
		if self.IsZero() or n == 0:
			return self

		qn = self.field.q**n
		arr = self.field.Zeros((len(self.c)-1)*qn + 1)
		arr[::qn] = self.c
		return FqPoly(self.field, arr)

	def DivMod(self, o):
		if o.IsZero():
			raise NotInvertibleError("Polynomial division by zero")
		quo, rem = divmod(self.ToGalois(), o.ToGalois())
		return (FqPoly.FromGalois(self.field, quo), FqPoly.FromGalois(self.field, rem))

	def Gcd(self, o):
		if self.IsZero():
			return o.Monic() if not o.IsZero() else o
		if o.IsZero():
			return self.Monic()
		return FqPoly.FromGalois(self.field, galois.gcd(self.ToGalois(), o.ToGalois()))

	def Serialize(self):
		return [int(v) for v in ints(self.c)]

	def __add__(self, o):
		n = max(len(self.c), len(o.c))
		arr = self.field.Zeros(n)
		arr[:len(self.c)] = self.c
		arr[:len(o.c)] = arr[:len(o.c)] + o.c
		return FqPoly(self.field, arr)

	def __neg__(self):
		return FqPoly(self.field, -self.c)

	def __sub__(self, o):
		return self + (-o)

	def __mul__(self, o):
		if not isinstance(o, FqPoly):
			return self.Scale(o)
		if self.IsZero() or o.IsZero():
			return FqPoly(self.field)
		return FqPoly(self.field, np.convolve(self.c, o.c))

	def __pow__(self, n):
		if n < 0:
			raise DomainError("Negative power of a polynomial")

		ret = FqPoly.Constant(self.field, 1)
		base = self
		while n:
			if n & 1:
				ret = ret * base
			n >>= 1
			if n:
				base = base * base
		return ret

	def __eq__(self, o):
		if not isinstance(o, FqPoly):
			return NotImplemented
		return self.field == o.field and len(self.c) == len(o.c) and np.array_equal(ints(self.c), ints(o.c))
	def __ne__(self, o):
		r = self.__eq__(o)
		return r if r is NotImplemented else not r
	def __hash__(self):
		return hash((self.field.q, tuple(self.Serialize())))

	def __repr__(self):				return str(self)
	def __str__(self):
		if self.IsZero():
			return "0"

		terms = []
		for k in range(len(self.c)-1, -1, -1):
			v = int(self.c[k])
			if v == 0:
				continue
			if k == 0:
				terms.append("%d" % v)
			else:
				mono = "theta" if k == 1 else "theta^%d" % k
				terms.append(mono if v == 1 else "%d*%s" % (v, mono))
		return " + ".join(terms)

# --------------------------------------------------------------------------------
# Norms

class Norm:
	"""
	Absolute value |x|_inf = |theta|_inf^value, kept as the rational exponent.
	"""

	# Fraction, or None for the zero element
	value = None

	def __init__(self, value):
		self.value = value

	def __lt__(self, o):			return self._cmp(o) < 0
	def __le__(self, o):			return self._cmp(o) <= 0
	def __gt__(self, o):			return self._cmp(o) > 0
	def __ge__(self, o):			return self._cmp(o) >= 0
	def __eq__(self, o):
		if not isinstance(o, Norm):
			return NotImplemented
		return self.value == o.value
	def __hash__(self):
		return hash(self.value)

	def _cmp(self, o):
		a = self.value
		b = o.value if isinstance(o, Norm) else Fraction(o)
		if a is None and b is None:
			return 0
		if a is None:
			return -1
		if b is None:
			return 1
		return (a > b) - (a < b)

	def __repr__(self):				return str(self)
	def __str__(self):
		return "|theta|^%s" % self.value if self.value is not None else "0"

def norm(f):
	"""
	Norm of a LaurentSeries, FqPoly, or a list of either (the max, as used for polynomials in t).
	"""

	if isinstance(f, (list, tuple)):
		ret = Norm(None)
		for x in f:
			n = norm(x)
			if n > ret:
				ret = n
		return ret

	if isinstance(f, FqPoly):
		if f.IsZero():
			return Norm(None)
		return Norm(Fraction(f.deg))

	if f.IsZero():
		return Norm(None)
	return Norm(Fraction(-f.val, f.field.q - 1))

# --------------------------------------------------------------------------------
# Laurent series

class LaurentSeries:
	"""
	Truncated Laurent series sum c_j w^j + O(w^prec).
	After construction coeffs[0] is nonzero, or coeffs is empty and val == prec (zero to precision).
	"""

	# FieldParams
	field = None

	# First exponent with a nonzero coefficient (prec if zero)
	val = None

	# Absolute precision: coefficients of w^j known for j < prec
	prec = None

	# galois array, coeffs[k] is the coefficient of w^(val+k)
	coeffs = None

	# Cached sector
	_sector = None

	def __init__(self, field, val, prec, coeffs=None):
		self.field = field
		val = int(val)
		prec = int(prec)

		if coeffs is None or prec <= val:
			self.val = prec
			self.prec = prec
			self.coeffs = field.Zeros(0)
			return

		n = prec - val
		if len(coeffs) > n:
			coeffs = coeffs[:n]
		elif len(coeffs) < n:
			arr = field.Zeros(n)
			arr[:len(coeffs)] = coeffs
			coeffs = arr

		nz = nonzero(coeffs)
		if not len(nz):
			self.val = prec
			self.prec = prec
			self.coeffs = field.Zeros(0)
			return

		self.val = val + int(nz[0])
		self.prec = prec
		self.coeffs = coeffs[int(nz[0]):]

	def get_sector(self):
		if self._sector is None:
			s = self.field.q - 1
			nz = nonzero(self.coeffs)
			if not len(nz):
				self._sector = -1
			else:
				res = set(((self.val + nz) % s).tolist())
				if len(res) == 1:
					self._sector = res.pop()
				else:
					self._sector = MIXED

		return None if self._sector == -1 else self._sector
	sector = property(get_sector, doc="Exponent class mod q-1 of every nonzero term, MIXED, or None for zero")

	def IsZero(self):
		return len(self.coeffs) == 0

	def Coefficient(self, j):
		"""
		Coefficient of w^j as a galois scalar.
		"""

		if j >= self.prec:
			raise DomainError("Coefficient of w^%d is beyond the precision O(w^%d)" % (j, self.prec))
		if j < self.val:
			return self.field.GF(0)
		return self.coeffs[j - self.val]

	def Window(self, lo, hi):
		"""
		Coefficients of w^lo .. w^(hi-1) as a galois array; hi may not exceed prec.
		"""

		if hi > self.prec:
			raise DomainError("Window up to w^%d exceeds precision O(w^%d)" % (hi, self.prec))

		ret = self.field.Zeros(max(hi - lo, 0))
		a = max(lo, self.val)
		b = min(hi, self.val + len(self.coeffs))
		if a < b:
			ret[a-lo:b-lo] = self.coeffs[a-self.val:b-self.val]
		return ret

	def Terms(self):
		"""
		List of (exponent, int coefficient) for each nonzero coefficient, ascending.
		"""

		vals = ints(self.coeffs)
		return [(self.val + int(k), int(vals[k])) for k in nonzero(self.coeffs)]

	def Serialize(self):
		s = self.sector
		return {
			'q': self.field.q,
			'p': self.field.p,
			'm': self.field.m,
			'w_def': W_DEF,
			'val': self.val,
			'prec': self.prec,
			'sector': s,
			'coeffs': [[e,c] for e,c in self.Terms()],
		}

	def __add__(self, o):			return ls_add(self, o)
	def __sub__(self, o):			return ls_sub(self, o)
	def __neg__(self):				return ls_neg(self)
	def __mul__(self, o):			return ls_mul(self, o)
	def __pow__(self, n):			return ls_pow(self, n)

	def __eq__(self, o):
		if not isinstance(o, LaurentSeries):
			return NotImplemented
		return self.field == o.field and self.val == o.val and self.prec == o.prec and np.array_equal(ints(self.coeffs), ints(o.coeffs))
	def __ne__(self, o):
		r = self.__eq__(o)
		return r if r is NotImplemented else not r
	def __hash__(self):
		return hash((self.field.q, self.val, self.prec, tuple(ints(self.coeffs).tolist())))

	def __repr__(self):				return str(self)
	def __str__(self):
		return "<LaurentSeries q=%d val=%d prec=%d sector=%s>" % (self.field.q, self.val, self.prec, self.sector)

def _check(f, g):
	if f.field != g.field:
		raise TypeError("Series over F_%d and F_%d cannot be combined" % (f.field.q, g.field.q))

def _stride(f):
	"""
	q-1 if the nonzero exponents of f share one sector (so only every (q-1)-th slot is occupied), else 1.
	"""

	s = f.field.q - 1
	if s > 1 and isinstance(f.sector, int):
		return s
	return 1

def zero(field, prec):
	return LaurentSeries(field, prec, prec)

def one(field, prec):
	return monomial(field, 0, prec)

def monomial(field, e, prec, v=1):
	"""
	v * w^e + O(w^prec).
	"""

	if e >= prec:
		return zero(field, prec)
	arr = field.Zeros(prec - e)
	arr[0] = field.GF(int(v))
	return LaurentSeries(field, e, prec, arr)

def theta_power(field, k, prec):
	"""
	theta^k = (-1)^k w^(-k(q-1)) for any integer k.
	"""

	v = 1 if k % 2 == 0 else int(field.Prime(-1))
	return monomial(field, -k*(field.q-1), prec, v)

def truncate(f, prec):
	if prec >= f.prec:
		return f
	return LaurentSeries(f.field, f.val, prec, f.coeffs)

def ls_add(f, g):
	_check(f, g)
	prec = min(f.prec, g.prec)
	if f.IsZero() or f.val >= prec:
		return truncate(g, prec) if not g.IsZero() else zero(f.field, prec)
	if g.IsZero() or g.val >= prec:
		return truncate(f, prec)

	lo = min(f.val, g.val)
	arr = f.field.Zeros(prec - lo)
	a = f.coeffs[:prec - f.val]
	b = g.coeffs[:prec - g.val]
	arr[f.val-lo:f.val-lo+len(a)] = a
	arr[g.val-lo:g.val-lo+len(b)] = arr[g.val-lo:g.val-lo+len(b)] + b

	ret = LaurentSeries(f.field, lo, prec, arr)
	if f.sector is not None and g.sector is not None and f.sector != g.sector:
		log.debug("Adding series of sectors %s and %s", f.sector, g.sector)
	return ret

def ls_neg(f):
	return LaurentSeries(f.field, f.val, f.prec, -f.coeffs)

def ls_sub(f, g):
	return ls_add(f, ls_neg(g))

def ls_scale(f, v):
	"""
	Multiply by a scalar of F_q (int representation, FqElem or galois scalar).
	"""

	if isinstance(v, FqElem):
		v = v.gf
	elif not isinstance(v, galois.FieldArray):
		v = f.field.GF(int(v))
	return LaurentSeries(f.field, f.val, f.prec, f.coeffs * v)

def ls_shift(f, k):
	"""
	Multiply by w^k.
	"""
	return LaurentSeries(f.field, f.val + k, f.prec + k, f.coeffs)

def _convolve(a, b, n, s):
	"""
	First n coefficients of the product of coefficient arrays a and b whose nonzero entries sit at
	multiples of the stride s.
	"""

	GF = type(a)
	if s > 1:
		m = (n + s - 1) // s
		prod = np.convolve(a[::s][:m], b[::s][:m])[:m]
		ret = GF.Zeros(n)
		ret[:len(prod)*s:s] = prod
		return ret

	prod = np.convolve(a[:n], b[:n])
	if len(prod) >= n:
		return prod[:n]
	ret = GF.Zeros(n)
	ret[:len(prod)] = prod
	return ret

def ls_mul(f, g):
	_check(f, g)
	prec = min(f.prec + g.val, g.prec + f.val)
	if f.IsZero() or g.IsZero():
		return zero(f.field, prec)

	val = f.val + g.val
	n = prec - val
	if n <= 0:
		return zero(f.field, prec)

	s = min(_stride(f), _stride(g))
	return LaurentSeries(f.field, val, prec, _convolve(f.coeffs, g.coeffs, n, s))

def inverse_unit(u, n, s=1):
	"""
	First n coefficients of 1/u for a coefficient array u with u[0] != 0.
	Newton iteration g <- g + g(1 - u g), doubling the number of correct terms each round.
	"""

	GF = type(u)
	if s > 1:
		m = (n + s - 1) // s
		g = inverse_unit(u[::s], m, 1)
		ret = GF.Zeros(n)
		ret[::s] = g[:len(ret[::s])]
		return ret

	if len(u) < n:
		arr = GF.Zeros(n)
		arr[:len(u)] = u
		u = arr

	g = GF([1]) / u[0:1]
	k = 1
	while k < n:
		k = min(2*k, n)
		e = np.convolve(u[:k], g)[:k]
		r = -e
		r[0] = r[0] + GF(1)
		d = np.convolve(g, r)[:k]
		nxt = GF.Zeros(k)
		nxt[:len(g)] = g
		g = nxt + d
	return g[:n]

def ls_inv(f):
	"""
	Inverse of f; relative precision is preserved so prec(1/f) = prec(f) - 2 val(f).
	"""

	if f.IsZero():
		raise NotInvertibleError("Series is zero to its precision O(w^%d)" % f.prec)

	n = f.prec - f.val
	g = inverse_unit(f.coeffs, n, _stride(f))
	return LaurentSeries(f.field, -f.val, f.prec - 2*f.val, g)

def ls_pow(f, n):
	"""
	f^n for any integer n (negative powers go through ls_inv).
	"""

	if n < 0:
		return ls_pow(ls_inv(f), -n)
	if n == 0:
		return one(f.field, f.prec - f.val if not f.IsZero() else max(f.prec, 0))

	ret = None
	base = f
	while n:
		if n & 1:
			ret = base if ret is None else ls_mul(ret, base)
		n >>= 1
		if n:
			base = ls_mul(base, base)
	return ret

def frobenius_twist(f, n, cap=None):
	"""
	n-fold twist: w^j -> w^(j q^n) with coefficients fixed, since c^(q^n) = c on F_q.
	The precision scales to prec q^n; @cap bounds it so windows stay small.
	"""

	if n < 0:
		raise UnsupportedOperationError("Inverse twist (n=%d) leaves the exponent lattice; check identities in forward form" % n)
	if n == 0:
		return f if cap is None else truncate(f, cap)

	qn = f.field.q**n
	prec = f.prec * qn
	if cap is not None:
		prec = min(prec, cap)

	if f.IsZero():
		return zero(f.field, prec)

	val = f.val * qn
	if prec <= val:
		return zero(f.field, prec)

	arr = f.field.Zeros(prec - val)
	k = min(len(f.coeffs), (prec - val + qn - 1) // qn)
	arr[:k*qn:qn] = f.coeffs[:k]
	return LaurentSeries(f.field, val, prec, arr)

def poly_embed(a, prec):
	"""
	Embed a in k_inf through theta = -w^-(q-1), truncated at O(w^prec).
	"""

	field = a.field
	if a.IsZero():
		return zero(field, prec)

	s = field.q - 1
	val = -a.deg * s
	if prec <= val:
		return zero(field, prec)

	# Descending theta-degree is ascending w-exponent
	asc = a.c * signs(field, len(a.c)) if field.p != 2 else a.c
	desc = asc[::-1]
	arr = field.Zeros(prec - val)
	k = min(len(desc), (prec - val + s - 1) // s)
	arr[:k*s:s] = desc[:k]
	return LaurentSeries(field, val, prec, arr)

def useries(field, coeffs, shift, prec):
	"""
	Series sum_k coeffs[k] u^(k+shift) + O(w^prec) with u = 1/theta = -w^(q-1).
	"""

	s = field.q - 1
	val = shift * s
	if prec <= val:
		return zero(field, prec)

	arr = field.Zeros(prec - val)
	k = min(len(coeffs), (prec - val + s - 1) // s)
	c = coeffs[:k]
	if field.p != 2:
		c = c * signs(field, k, shift)
	arr[:k*s:s] = c
	return LaurentSeries(field, val, prec, arr)

def series_to_poly(f):
	"""
	Read an element of F_q[theta] back off its expansion.
	Every known coefficient past w^0 must vanish and the rest must sit on multiples of q-1.
	"""

	field = f.field
	s = field.q - 1
	if f.prec <= 0:
		raise DomainError("Series known only to O(w^%d) cannot be identified with a polynomial" % f.prec)
	if f.IsZero():
		return FqPoly(field)

	terms = f.Terms()
	if terms[-1][0] > 0:
		raise DomainError("Series has a nonzero term w^%d beyond the constant term" % terms[-1][0])

	deg = -f.val // s
	arr = field.Zeros(deg + 1)
	for e,c in terms:
		if e % s:
			raise DomainError("Series term w^%d does not lie in k_inf" % e)
		k = -e // s
		v = field.GF(c)
		if k % 2 and field.p != 2:
			v = -v
		arr[k] = v
	return FqPoly(field, arr)

def agree(f, g):
	"""
	Exponent up to which f and g agree: the valuation of f - g (its precision when they agree everywhere known).
	"""
	return ls_sub(f, g).val
