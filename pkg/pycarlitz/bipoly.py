"""
Exact polynomials in F_q[theta, t].

These carry the alpha polynomials of the polylogarithms, the Anderson-Thakur polynomials and the
entries of Phi.  The twist acts on theta only (theta -> theta^q) and fixes t.
"""

from fractions import Fraction

import galois
import numpy as np

from .errors import DomainError, UnsupportedOperationError
from .field import ints
from .laurent import FqPoly, Norm, nonzero

class BiPoly:
	"""
	Polynomial sum c[a,b] theta^a t^b, dense matrix with rows indexed by theta-degree and columns by t-degree.
	The matrix is trimmed so that the last row and last column are nonzero (or it is 0x0 for the zero polynomial).
	"""

	# FieldParams
	field = None

	# 2-d galois array
	c = None

	def __init__(self, field, coeffs=None):
		self.field = field

		if coeffs is None:
			arr = field.Zeros((0,0))
		elif isinstance(coeffs, galois.FieldArray):
			arr = coeffs.copy()
		else:
			rows = [list(r) for r in coeffs]
			width = max([len(r) for r in rows] + [0])
			arr = field.Zeros((len(rows), width))
			for a,r in enumerate(rows):
				for b,v in enumerate(r):
					arr[a,b] = field.GF(int(v))

		if arr.ndim != 2:
			raise ValueError("BiPoly needs a 2-d coefficient matrix, got %d dimensions" % arr.ndim)

		raw = arr.view(np.ndarray)
		rows = np.flatnonzero(raw.any(axis=1)) if raw.size else []
		cols = np.flatnonzero(raw.any(axis=0)) if raw.size else []
		if not len(rows):
			self.c = field.Zeros((0,0))
		else:
			self.c = arr[:rows[-1]+1, :cols[-1]+1]

	@staticmethod
	def Constant(field, v=1):
		return BiPoly(field, [[int(v)]])

	@staticmethod
	def T(field):
		return BiPoly(field, [[0,1]])

	@staticmethod
	def Theta(field):
		return BiPoly(field, [[0],[1]])

	@staticmethod
	def FromTheta(p):
		"""
		Lift an FqPoly into F_q[theta, t] as a polynomial constant in t.
		"""

		arr = p.field.Zeros((len(p.c), 1))
		if len(p.c):
			arr[:,0] = p.c
		return BiPoly(p.field, arr)

	@staticmethod
	def TMinusTheta(field, i=0):
		"""
		t - theta^(q^i)
		"""

		qi = field.q**i
		arr = field.Zeros((qi+1, 2))
		arr[0,1] = field.GF(1)
		arr[qi,0] = -field.GF(1)
		return BiPoly(field, arr)

	def IsZero(self):
		return self.c.shape[0] == 0

	def DegTheta(self):
		return self.c.shape[0] - 1

	def DegT(self):
		return self.c.shape[1] - 1

	def Column(self, b):
		"""
		Coefficient of t^b as an FqPoly.
		"""

		if b < 0 or b >= self.c.shape[1]:
			return FqPoly(self.field)
		return FqPoly(self.field, self.c[:,b])

	def Columns(self):
		return [self.Column(b) for b in range(self.c.shape[1])]

	def Norm(self):
		"""
		||alpha||, the largest |coefficient|_inf over the t-coefficients.
		"""

		if self.IsZero():
			return Norm(None)
		return Norm(Fraction(self.DegTheta()))

	def Twist(self, n):
		"""
		n-fold twist theta -> theta^(q^n), t fixed.
		"""

		if n < 0:
			raise UnsupportedOperationError("Inverse twist of a polynomial is not supported")
		if n == 0 or self.IsZero():
			return self

		qn = self.field.q**n
		arr = self.field.Zeros((self.DegTheta()*qn + 1, self.c.shape[1]))
		arr[::qn,:] = self.c
		return BiPoly(self.field, arr)

	def EvalTwisted(self, i):
		"""
		Twist i times and set t = theta: sum c[a,b] theta^(a q^i + b).
		"""

		if self.IsZero():
			return FqPoly(self.field)

		qi = self.field.q**i
		arr = self.field.Zeros(self.DegTheta()*qi + self.DegT() + 1)
		for b in range(self.c.shape[1]):
			col = self.c[:,b]
			arr[b:b+len(col)*qi:qi] = arr[b:b+len(col)*qi:qi] + col
		return FqPoly(self.field, arr)

	def Scale(self, v):
		if not isinstance(v, galois.FieldArray):
			v = self.field.GF(int(v))
		return BiPoly(self.field, self.c * v)

	def Serialize(self):
		return [[int(v) for v in row] for row in ints(self.c)]

	def __add__(self, o):
		if self.IsZero():
			return o
		if o.IsZero():
			return self

		rows = max(self.c.shape[0], o.c.shape[0])
		cols = max(self.c.shape[1], o.c.shape[1])
		arr = self.field.Zeros((rows, cols))
		arr[:self.c.shape[0], :self.c.shape[1]] = self.c
		r,s = o.c.shape
		arr[:r,:s] = arr[:r,:s] + o.c
		return BiPoly(self.field, arr)

	def __neg__(self):
		return BiPoly(self.field, -self.c)

	def __sub__(self, o):
		return self + (-o)

	def __mul__(self, o):
		if not isinstance(o, BiPoly):
			return self.Scale(o)
		if self.IsZero() or o.IsZero():
			return BiPoly(self.field)

		rows = self.c.shape[0] + o.c.shape[0] - 1
		cols = self.c.shape[1] + o.c.shape[1] - 1
		arr = self.field.Zeros((rows, cols))
		for b1 in range(self.c.shape[1]):
			x = self.c[:,b1]
			if not len(nonzero(x)):
				continue
			for b2 in range(o.c.shape[1]):
				y = o.c[:,b2]
				if not len(nonzero(y)):
					continue
				arr[:,b1+b2] = arr[:,b1+b2] + np.convolve(x, y)
		return BiPoly(self.field, arr)

	def __pow__(self, n):
		if n < 0:
			raise DomainError("Negative power of a polynomial")

		ret = BiPoly.Constant(self.field, 1)
		base = self
		while n:
			if n & 1:
				ret = ret * base
			n >>= 1
			if n:
				base = base * base
		return ret

	def __eq__(self, o):
		if not isinstance(o, BiPoly):
			return NotImplemented
		return self.field == o.field and self.c.shape == o.c.shape and np.array_equal(ints(self.c), ints(o.c))
	def __ne__(self, o):
		r = self.__eq__(o)
		return r if r is NotImplemented else not r
	def __hash__(self):
		return hash((self.field.q, tuple(tuple(r) for r in self.Serialize())))

	def __repr__(self):				return str(self)
	def __str__(self):
		if self.IsZero():
			return "0"

		terms = []
		vals = ints(self.c)
		for b in range(self.c.shape[1]-1, -1, -1):
			for a in range(self.c.shape[0]-1, -1, -1):
				v = int(vals[a,b])
				if v == 0:
					continue

				parts = []
				if a:
					parts.append("theta" if a == 1 else "theta^%d" % a)
				if b:
					parts.append("t" if b == 1 else "t^%d" % b)
				if v != 1 or not parts:
					parts.insert(0, "%d" % v)
				terms.append("*".join(parts))
		return " + ".join(terms)

def check_norm(alpha, n):
	"""
	Norm condition ||alpha|| < |theta|^(nq/(q-1)), i.e. (q-1) deg_theta(alpha) < n q.
	Raises DomainError if alpha is zero or too large.
	"""

	q = alpha.field.q
	if alpha.IsZero():
		raise DomainError("alpha must be nonzero")
	if (q-1) * alpha.DegTheta() >= n*q:
		raise DomainError("Norm condition fails: deg_theta(alpha)=%d but (q-1)*deg must be < %d for n=%d" % (alpha.DegTheta(), n*q, n))
	return True
