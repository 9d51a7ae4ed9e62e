"""
Constructors for the named objects: D_i, the Carlitz factorial, power sums S_i(n), multizeta values,
the Carlitz period, Omega and the Carlitz multiple polylogarithms.

Precision arguments are absolute w-precisions.  Every truncation depth below is derived from a
proven valuation bound, so a result stated to O(w^prec) is correct to O(w^prec).
"""

import itertools
import logging

import numpy as np

from .bipoly import BiPoly, check_norm
from .config import default_caps
from .errors import DomainError, ResourceError
from .laurent import FqPoly, agree, frobenius_twist, LaurentSeries, ls_add, ls_inv, ls_mul, ls_pow, one, poly_embed, series_to_poly, truncate, useries, zero
from .tate import INF, FuncPiece, TailBound, TateElem, geometric_factor, tate_add, tate_mul, tate_one, tate_poly, tate_eval

log = logging.getLogger(__name__)

# --------------------------------------------------------------------------------
# Index and alpha tuples

class IndexTuple:
	"""
	Weights (n_1, ..., n_d), each >= 1.
	"""

	# Tuple of ints
	weights = None

	def __init__(self, weights):
		if isinstance(weights, int):
			weights = (weights,)
		weights = tuple(int(n) for n in weights)
		if not len(weights):
			raise DomainError("Index tuple needs depth >= 1")
		for n in weights:
			if n < 1:
				raise DomainError("Weights must be >= 1, got %s" % (weights,))
		self.weights = weights

	def get_depth(self):
		return len(self.weights)
	depth = property(get_depth)

	def get_weight(self):
		return sum(self.weights)
	weight = property(get_weight)

	def __iter__(self):				return iter(self.weights)
	def __len__(self):				return len(self.weights)
	def __getitem__(self, i):		return self.weights[i]
	def __eq__(self, o):
		return isinstance(o, IndexTuple) and o.weights == self.weights
	def __hash__(self):
		return hash(self.weights)

	def __repr__(self):				return str(self)
	def __str__(self):				return "(%s)" % ",".join(str(n) for n in self.weights)

class AlphaTuple:
	"""
	Polynomials (alpha_1, ..., alpha_d) of F_q[theta][t] paired with weights (n_1, ..., n_d).
	The empty tuple stands for L = 1.  Construction checks the norm condition.
	"""

	# FieldParams
	field = None

	# List of BiPoly
	polys = None

	# Tuple of ints
	weights = None

	def __init__(self, field, polys, weights):
		polys = list(polys)
		weights = tuple(weights) if not isinstance(weights, IndexTuple) else weights.weights
		if len(polys) != len(weights):
			raise DomainError("%d alpha polynomials given for %d weights" % (len(polys), len(weights)))

		for a,n in zip(polys, weights):
			if a.field != field:
				raise TypeError("alpha over F_%d used with F_%d" % (a.field.q, field.q))
			if n < 1:
				raise DomainError("Weights must be >= 1, got %s" % (weights,))
			check_norm(a, n)

		self.field = field
		self.polys = polys
		self.weights = weights

	@staticmethod
	def Ones(field, idx):
		return AlphaTuple(field, [BiPoly.Constant(field, 1) for n in idx], idx)

	def get_depth(self):
		return len(self.weights)
	depth = property(get_depth)

	def Sub(self, a, b):
		"""
		Sub-tuple of entries a..b-1.
		"""
		return AlphaTuple(self.field, self.polys[a:b], self.weights[a:b])

	def Serialize(self):
		return {'weights': list(self.weights), 'alphas': [p.Serialize() for p in self.polys]}

	def __repr__(self):				return str(self)
	def __str__(self):
		return "<AlphaTuple n=%s alpha=%s>" % (self.weights, [str(p) for p in self.polys])

# --------------------------------------------------------------------------------
# Polynomial constants

def parity(field, n):
	"""
	"even" when q-1 divides n, "odd" otherwise.
	"""

	if n < 1:
		raise DomainError("Parity is defined for n >= 1, got %d" % n)
	return "even" if n % (field.q - 1) == 0 else "odd"

def d_factor(field, i):
	"""
	D_i = prod_{j<i} (theta^(q^i) - theta^(q^j)); D_0 = 1.
	"""

	if i < 0:
		raise DomainError("D_i needs i >= 0, got %d" % i)

	q = field.q
	ret = FqPoly.Constant(field, 1)
	for j in range(i):
		ret = ret * (FqPoly.Monomial(field, q**i) - FqPoly.Monomial(field, q**j))
	return ret

def carlitz_factorial(field, n):
	"""
	Gamma_n = prod D_i^(n_i) where n - 1 = sum n_i q^i.
	"""

	if n < 1:
		raise DomainError("Carlitz factorial Gamma_n needs n >= 1, got %d" % n)

	ret = FqPoly.Constant(field, 1)
	r = n - 1
	i = 0
	while r:
		r, digit = divmod(r, field.q)
		if digit:
			ret = ret * (d_factor(field, i) ** digit)
		i += 1
	return ret

def ell(field, i):
	"""
	l_i = prod_{j=1..i} (theta - theta^(q^j)); l_0 = 1.
	"""

	if i < 0:
		raise DomainError("l_i needs i >= 0, got %d" % i)

	ret = FqPoly.Constant(field, 1)
	for j in range(1, i+1):
		ret = ret * (FqPoly.Theta(field) - FqPoly.Monomial(field, field.q**j))
	return ret

# --------------------------------------------------------------------------------
# Power sums

def goss_order(q, n):
	"""
	Lowest degree in X of the Goss polynomial G_n(X); S_i(n) = G_n(1/l_i) with coefficients of
	nonnegative valuation, so val S_i(n) >= goss_order(n) * val(1/l_i).
	"""

	mu = [INF]*(n+1)
	for k in range(1, n+1):
		if k <= q:
			mu[k] = k
			continue

		best = mu[k-1]
		j = 1
		while q**j < k:
			best = min(best, mu[k - q**j])
			j += 1
		mu[k] = 1 + best
	return mu[n]

def power_sum_valuation(field, i, n):
	"""
	Lower bound on the w-valuation of S_i(n).
	Each term 1/a^n has valuation (q-1)ni; the sum also has valuation >= goss_order(n)(q^(i+1)-q).
	"""

	if i == 0:
		return 0
	q = field.q
	return max((q-1)*n*i, goss_order(q, n)*(q**(i+1) - q))

def _powersum_cap(field, cap):
	if cap is None:
		return default_caps(field.q)['powersum_cap']
	return cap

def _monic_matrix(field, i):
	"""
	Rows are the q^i monic polynomials of degree i, written in u = 1/theta: a/theta^i = sum_l B[l] u^l.
	In row r the coefficient of theta^(i-l) is the (l-1)-th base-q digit of r.
	"""

	q = field.q
	rows = q**i
	B = field.Zeros((rows, i+1))
	B[:,0] = field.GF(1)

	idx = np.arange(rows)
	for l in range(1, i+1):
		# Coefficient of theta^(i-l) is the l-th least significant digit
		digit = (idx // q**(l-1)) % q
		B[:,l] = field.GF(digit)
	return B

def _rowwise_mul(field, X, Y):
	n = X.shape[1] + Y.shape[1] - 1
	out = field.Zeros((X.shape[0], n))
	for a in range(X.shape[1]):
		for b in range(Y.shape[1]):
			out[:,a+b] = out[:,a+b] + X[:,a]*Y[:,b]
	return out

def power_sum(field, i, n, prec, cap=None, cache=None):
	"""
	S_i(n) = sum over monic a of degree i of 1/a^n, to O(w^prec), by enumerating all q^i monics.
	"""

	if i < 0 or n < 1:
		raise DomainError("S_i(n) needs i >= 0 and n >= 1, got i=%d n=%d" % (i, n))

	cap = _powersum_cap(field, cap)
	if i > cap:
		raise ResourceError("S_%d(%d) needs %d^%d monics, beyond the power-sum cap (degree %d)" % (i, n, field.q, i, cap))

	if cache is not None:
		hit = cache.Get(('powersum', field.q, i, n), prec)
		if hit is not None:
			return hit

	if i == 0:
		ret = one(field, prec)
	else:
		ret = _power_sum(field, i, n, prec)

	if cache is not None:
		cache.Put(('powersum', field.q, i, n), ret)
	return ret

def _power_sum(field, i, n, prec):
	s = field.q - 1

	# S_i(n) = u^(ni) sum_a (a/theta^i)^-n; K terms of the inner sum are needed
	K = -(-prec // s) - n*i
	if K <= 0:
		return zero(field, prec)

	B = _monic_matrix(field, i)
	P = B
	for k in range(n-1):
		P = _rowwise_mul(field, P, B)

	# Solve P*G = 1 row by row; P[:,0] = 1
	deg = P.shape[1] - 1
	G = field.Zeros((P.shape[0], K))
	G[:,0] = field.GF(1)
	for k in range(1, K):
		acc = field.Zeros(P.shape[0])
		for l in range(1, min(k, deg)+1):
			acc = acc + P[:,l]*G[:,k-l]
		G[:,k] = -acc

	total = np.add.reduce(G, axis=0)
	log.debug("S_%d(%d): %d monics, %d u-terms", i, n, P.shape[0], K)
	return useries(field, total, n*i, prec)

def power_sum_times_ell(field, i, n, cap=None, cache=None):
	"""
	The polynomial Gamma_n S_i(n) l_i^n, read off a power sum computed just past its constant term.
	"""

	P = carlitz_factorial(field, n) * (ell(field, i) ** n)
	s = field.q - 1
	prec = s*(P.deg + 2)
	S = power_sum(field, i, n, prec, cap, cache)
	prod = ls_mul(poly_embed(P, prec), S)
	return series_to_poly(prod)

# --------------------------------------------------------------------------------
# Multizeta values

def mzv_cutoff(field, idx, prec):
	"""
	Smallest I >= d-1 with val S_(I+1)(n_1) >= prec; terms with i_1 > I are then O(w^prec).
	"""

	I = idx.depth - 1
	while power_sum_valuation(field, I+1, idx[0]) < prec:
		I += 1
	return I

def mzv(field, idx, prec, cap=None, cache=None):
	"""
	zeta(n_1, ..., n_d) = sum over i_1 > ... > i_d >= 0 of prod_j S_(i_j)(n_j) to O(w^prec).
	"""

	if not isinstance(idx, IndexTuple):
		idx = IndexTuple(idx)

	if cache is not None:
		hit = cache.Get(('mzv', field.q, idx.weights), prec)
		if hit is not None:
			return hit

	d = idx.depth
	I = mzv_cutoff(field, idx, prec)
	log.debug("zeta%s: cutoff I=%d at prec %d", idx, I, prec)

	# A[i] holds the nested sum for positions j..d-1 with i_j = i
	A = dict((i, power_sum(field, i, idx[d-1], prec, cap, cache)) for i in range(0, I - (d-1) + 1))

	for j in range(d-2, -1, -1):
		prefix = {}
		run = None
		for i in sorted(A):
			run = A[i] if run is None else ls_add(run, A[i])
			prefix[i] = run

		nxt = {}
		for i in range(d-1-j, I - j + 1):
			nxt[i] = ls_mul(power_sum(field, i, idx[j], prec, cap, cache), prefix[i-1])
		A = nxt

	ret = None
	for i in sorted(A):
		ret = A[i] if ret is None else ls_add(ret, A[i])
	ret = truncate(ret, prec)

	if cache is not None:
		cache.Put(('mzv', field.q, idx.weights), ret)
	return ret

def monics(field, i):
	"""
	All monic polynomials of degree i.
	"""

	ret = []
	for digits in itertools.product(range(field.q), repeat=i):
		coeffs = list(reversed(digits)) + [1]
		ret.append(FqPoly(field, coeffs))
	return ret

def mzv_bruteforce_oracle(field, idx, maxdeg, prec, cap=None):
	"""
	Direct sum of 1/(a_1^n_1 ... a_d^n_d) over monic tuples with maxdeg >= deg a_1 > ... > deg a_d.
	Independent of the power-sum machinery: every inverse goes through ls_inv on the embedding.
	"""

	if not isinstance(idx, IndexTuple):
		idx = IndexTuple(idx)
	if cap is None:
		cap = default_caps(field.q)['oracle_cap']

	d = idx.depth
	degs = list(itertools.combinations(range(maxdeg, -1, -1), d))
	count = sum(field.q**sum(ds) for ds in degs)
	if count > cap:
		raise ResourceError("Oracle would enumerate %d monic tuples, beyond the cap of %d" % (count, cap))

	inverses = {}
	def inv_power(a, n):
		key = (tuple(a.Serialize()), n)
		if key not in inverses:
			inverses[key] = ls_pow(ls_inv(poly_embed(a, prec)), n)
		return inverses[key]

	ret = zero(field, prec)
	for ds in degs:
		lists = [monics(field, e) for e in ds]
		for tup in itertools.product(*lists):
			term = None
			for a,n in zip(tup, idx):
				x = inv_power(a, n)
				term = x if term is None else ls_mul(term, x)
			ret = ls_add(ret, term)
	return truncate(ret, prec)

# --------------------------------------------------------------------------------
# Carlitz period

def pi_inverse(field, prec):
	"""
	1/pi = w^q prod_{i>=1} (1 - w^((q-1)(q^i-1))).
	"""

	q = field.q
	R = prec - q
	if R <= 0:
		return zero(field, prec)

	arr = field.Zeros(R)
	arr[0] = field.GF(1)
	i = 1
	while (q-1)*(q**i - 1) < R:
		e = (q-1)*(q**i - 1)
		arr[e:] = arr[e:] - arr[:R-e]
		i += 1
	return LaurentSeries(field, q, prec, arr)

def pi_carlitz(field, prec, cache=None):
	"""
	The Carlitz period pi = w^-q prod_{i>=1} (1 - w^((q-1)(q^i-1)))^-1 to O(w^prec).
	"""

	if cache is not None:
		hit = cache.Get(('pi', field.q), prec)
		if hit is not None:
			return hit

	ret = ls_inv(pi_inverse(field, prec + 2*field.q))
	if cache is not None:
		cache.Put(('pi', field.q), ret)
	return ret

# --------------------------------------------------------------------------------
# Omega

def omega_bound(q, n, shift=0):
	"""
	nu(k) for Omega^n twisted @shift times: the coefficient of t^k in Omega^n is w^(nq) times a sum of
	products of k factors W_j = w^((q-1)q^j), each j >= 1 used at most n times.  Summing the k
	smallest gives q^(c+1) (n + (q-1) r) with k = cn + r.
	"""

	qs = q**shift
	def nu(k):
		c,r = divmod(k, n)
		return qs * q**(c+1) * (n + (q-1)*r)
	return nu

def omega_power(field, n, tdeg, prec, shift=0):
	"""
	(Omega^n)^(shift) = w^(n q^(shift+1)) prod_{j>=1} (1 + t W_(j+shift))^n, built by shifts and adds.
	"""

	if n < 0:
		raise DomainError("Omega power needs n >= 0, got %d" % n)
	if n == 0:
		return tate_one(field, tdeg, prec)

	q = field.q
	val = n * q**(shift+1)
	R = prec - val
	if R <= 0:
		coeffs = [zero(field, prec) for k in range(tdeg+1)]
		return TateElem(field, coeffs, TailBound.Convex(omega_bound(q, n, shift)))

	binoms = []
	for b in range(n+1):
		v = 1
		for x in range(b):
			v = v * (n - x) // (x + 1)
		binoms.append(field.Prime(v))

	arrs = [field.Zeros(R) for k in range(tdeg+1)]
	arrs[0][0] = field.GF(1)

	j = shift + 1
	factors = 0
	while (q-1) * q**j < R:
		e = (q-1) * q**j
		for k in range(tdeg, 0, -1):
			for b in range(1, min(n, k)+1):
				if int(binoms[b]) == 0 or b*e >= R:
					continue
				arrs[k][b*e:] = arrs[k][b*e:] + arrs[k-b][:R-b*e] * binoms[b]
		j += 1
		factors += 1

	log.debug("Omega^%d twist %d: %d product factors at prec %d", n, shift, factors, prec)
	coeffs = [LaurentSeries(field, val, prec, a) for a in arrs]
	return TateElem(field, coeffs, TailBound.Convex(omega_bound(q, n, shift)))

def omega(field, tdeg, prec, shift=0):
	"""
	Omega = (-theta)^(-q/(q-1)) prod_{i>=1} (1 - t/theta^(q^i)), truncated at t^tdeg.
	"""
	return omega_power(field, 1, tdeg, prec, shift)

# --------------------------------------------------------------------------------
# Carlitz multiple polylogarithms

def _strip(f):
	return TateElem(f.field, f.coeffs, None)

def _nested_sum(terms, d, I):
	"""
	sum over I >= i_1 > ... > i_d >= 0 of prod_j terms(j, i_j), via prefix sums from the innermost index out.
	"""

	A = dict((i, terms(d-1, i)) for i in range(0, I - d + 2))
	for j in range(d-2, -1, -1):
		prefix = {}
		run = None
		for i in sorted(A):
			run = A[i] if run is None else tate_add(run, A[i])
			prefix[i] = run

		nxt = {}
		for i in range(d-1-j, I - j + 1):
			nxt[i] = tate_mul(terms(j, i), prefix[i-1])
		A = nxt

	ret = None
	for i in sorted(A):
		ret = A[i] if ret is None else tate_add(ret, A[i])
	return ret

def mcpl_base(field, n, degtheta, i):
	"""
	Lower bound on the valuation of the i-th term alpha^(i)/((t-theta^q)...(t-theta^(q^i)))^n.
	"""

	q = field.q
	return n*(q**(i+1) - q) - (q-1) * q**i * degtheta

def mcpl_cutoff(field, alphas, prec):
	d = alphas.depth
	dth = [a.DegTheta() for a in alphas.polys]
	rest = (field.q - 1) * sum(dth[1:])
	I = d - 1
	while mcpl_base(field, alphas.weights[0], dth[0], I+1) - rest < prec:
		I += 1
	return I

def mcpl(alphas, tdeg, prec):
	"""
	L_(alpha, n)(t) = sum over i_1 > ... > i_d >= 0 of prod_j alpha_j^(i_j) / ((t-theta^q)...(t-theta^(q^(i_j))))^n_j.
	The installed tail bound is linear in the t-degree, which certifies evaluation at t = theta only.
	"""

	field = alphas.field
	q = field.q
	d = alphas.depth
	if d == 0:
		return tate_one(field, tdeg, prec)

	dth = [a.DegTheta() for a in alphas.polys]
	dt = [a.DegT() for a in alphas.polys]
	I = mcpl_cutoff(field, alphas, prec)
	work = prec + 2*(q-1) * q**I * sum(dth)
	log.debug("L%s: cutoff I=%d, working precision %d", alphas.weights, I, work)

	denoms = {}
	def denom(n, i):
		if (n,i) not in denoms:
			if i == 0:
				denoms[(n,i)] = tate_one(field, tdeg, work)
			else:
				denoms[(n,i)] = _strip(tate_mul(denom(n, i-1), geometric_factor(field, i, n, tdeg, work)))
		return denoms[(n,i)]

	def term(j, i):
		a = _strip(tate_poly(alphas.polys[j].Twist(i), tdeg, work))
		return _strip(tate_mul(a, denom(alphas.weights[j], i)))

	ret = _nested_sum(term, d, I)

	base = sum(mcpl_base(field, alphas.weights[j], dth[j], d-1-j) for j in range(d))
	slope = (q-1)*q
	shift = sum(dt)
	tail = TailBound.Convex(lambda k: base + max(0, k - shift)*slope)
	return TateElem(field, [truncate(c, prec) for c in ret.coeffs], tail)

def omega_mcpl_bound(alphas):
	"""
	Convex tail bound for Omega^(n_1+...+n_d) L_(alpha, n): the inf-convolution over j of q^(d-j) nu_j,
	nu_j(k) = nu_(Omega^n_j)(max(k - deg_t alpha_j, 0)) - (q-1) deg_theta alpha_j.
	"""

	field = alphas.field
	q = field.q
	d = alphas.depth

	ret = None
	for j in range(d):
		a = alphas.polys[j]
		om = omega_bound(q, alphas.weights[j])
		def nu(k, om=om, dt=a.DegT(), off=(q-1)*a.DegTheta()):
			return om(max(k - dt, 0)) - off
		tb = TailBound([FuncPiece(nu)]).Twist(d-1-j, q)
		ret = tb if ret is None else ret.Convolve(tb)
	return ret

def omega_mcpl_cutoff(field, alphas, prec):
	q = field.q
	m1 = alphas.weights[0]*q - (q-1)*alphas.polys[0].DegTheta()
	I = alphas.depth - 1
	while q**(I+1) * m1 < prec:
		I += 1
	return I

def omega_mcpl(alphas, tdeg, prec):
	"""
	Omega^(n_1+...+n_d) L_(alpha, n), built as sum over i_1 > ... > i_d of prod_j (alpha_j Omega^n_j)^(i_j).
	This is entire and carries a convex tail bound, so tate_eval certifies it at every theta^(q^N).
	"""

	field = alphas.field
	q = field.q
	d = alphas.depth
	if d == 0:
		return tate_one(field, tdeg, prec)

	I = omega_mcpl_cutoff(field, alphas, prec)
	log.debug("Omega^w L%s: cutoff I=%d at prec %d", alphas.weights, I, prec)

	def term(j, i):
		a = alphas.polys[j]
		n = alphas.weights[j]
		om = omega_power(field, n, tdeg, prec + (q-1) * q**i * a.DegTheta(), shift=i)
		ap = tate_poly(a.Twist(i), tdeg, prec)
		return _strip(tate_mul(_strip(ap), _strip(om)))

	ret = _nested_sum(term, d, I)
	return TateElem(field, [truncate(c, prec) for c in ret.coeffs], omega_mcpl_bound(alphas))

def choose_tdeg(bound, N, prec, q, limit):
	"""
	Smallest truncation M whose tail terms at theta^(q^N) are all O(w^prec).
	"""

	s = (q-1) * q**N
	for M in range(0, limit+1):
		t = bound.TailMin(M, s)
		if t is not None and t >= prec:
			return M
	raise ResourceError("No truncation order up to %d certifies evaluation at theta^(q^%d) to O(w^%d)" % (limit, N, prec))

# --------------------------------------------------------------------------------
# Chang's formula

class ChangResult:
	"""
	Both sides of (Omega^w L_(H, n))(theta^(q^N)) = (Gamma_n1...Gamma_nd zeta(n) / pi^w)^(q^N).
	"""

	# IndexTuple and evaluation exponent
	idx = None
	N = None

	# LaurentSeries
	lhs = None
	rhs = None

	# Truncation order used on the left side, and the certified agreement
	tdeg = None
	prec = None
	agreement = None

	def __init__(self, idx, N, lhs, rhs, tdeg, prec):
		self.idx = idx
		self.N = N
		self.lhs = lhs
		self.rhs = rhs
		self.tdeg = tdeg
		self.prec = prec
		self.agreement = agree(lhs, rhs)

	def get_match(self):
		return self.agreement >= self.prec
	match = property(get_match)

	def Serialize(self):
		return {
			'idx': list(self.idx.weights),
			'N': self.N,
			'tdeg': self.tdeg,
			'prec': self.prec,
			'match': self.match,
			'agreement': self.agreement,
			'lhs': self.lhs.Serialize(),
		}

def chang_rhs(field, idx, N, prec, cap=None, cache=None):
	"""
	(Gamma_n1 ... Gamma_nd zeta(n) / pi^w)^(q^N), from zeta, 1/pi and the factorials.
	"""

	q = field.q
	gamma = FqPoly.Constant(field, 1)
	for n in idx:
		gamma = gamma * carlitz_factorial(field, n)

	base = -(-prec // q**N) + (q-1)*gamma.deg
	x = ls_pow(pi_inverse(field, base), idx.weight)
	x = ls_mul(x, mzv(field, idx, base, cap, cache))
	x = ls_mul(poly_embed(gamma, base), x)
	return truncate(frobenius_twist(x, N, prec), prec)

def chang_eval(field, idx, N, prec, hpolys=None, cfg=None, cache=None):
	"""
	Left side of Chang's formula through Omega, the polylogarithm and tate_eval, checked against the
	right side computed from zeta and pi.
	"""

	from .atpoly import anderson_thakur

	if not isinstance(idx, IndexTuple):
		idx = IndexTuple(idx)
	caps = cfg.caps if cfg is not None else default_caps(field.q)

	if hpolys is None:
		hpolys = [anderson_thakur(field, n, cfg=cfg, cache=cache).h for n in idx]
	alphas = AlphaTuple(field, hpolys, idx)

	bound = omega_mcpl_bound(alphas)
	M = choose_tdeg(bound, N, prec, field.q, caps['tdeg_cap'])
	s = (field.q - 1) * field.q**N
	F = omega_mcpl(alphas, M, prec + M*s)
	lhs = tate_eval(F, N, prec)
	rhs = chang_rhs(field, idx, N, prec, caps['powersum_cap'], cache)

	ret = ChangResult(idx, N, lhs, rhs, M, prec)
	log.info("Chang's formula for %s at N=%d: %s (agreement to w^%d)", idx, N, "match" if ret.match else "MISMATCH", ret.agreement)
	return ret
