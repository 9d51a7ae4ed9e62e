import unittest

from pycarlitz import Carlitz
from pycarlitz.bipoly import BiPoly
from pycarlitz.cache import ObjectCache
from pycarlitz.errors import DomainError, ResourceError
from pycarlitz.field import FieldParams
from pycarlitz.laurent import FqPoly, agree, ls_mul, ls_pow, one, poly_embed, truncate
from pycarlitz.special import AlphaTuple, IndexTuple, carlitz_factorial, d_factor, ell, goss_order, mcpl, mzv, mzv_bruteforce_oracle, omega, omega_mcpl, omega_power, parity, pi_carlitz, pi_inverse, power_sum, power_sum_times_ell, power_sum_valuation
from pycarlitz.tate import tate_mul, tate_poly

class TupleTests(unittest.TestCase):
	def test_index(self):
		idx = IndexTuple((2, 1))
		self.assertEqual(idx.depth, 2)
		self.assertEqual(idx.weight, 3)
		self.assertEqual(str(idx), "(2,1)")
		self.assertEqual(IndexTuple(3), IndexTuple((3,)))
		self.assertRaises(DomainError, IndexTuple, ())
		self.assertRaises(DomainError, IndexTuple, (1, 0))

	def test_alpha(self):
		F = FieldParams.Get(3)
		a = AlphaTuple.Ones(F, (1, 2))
		self.assertEqual(a.depth, 2)
		self.assertEqual(a.Sub(1, 2).weights, (2,))
		self.assertRaises(DomainError, AlphaTuple, F, [BiPoly.Constant(F, 1)], (1, 2))
		# (q-1) deg_theta = 4 >= nq = 3
		self.assertRaises(DomainError, AlphaTuple, F, [BiPoly.Theta(F) ** 2], (1,))

class ConstantTests(unittest.TestCase):
	def test_parity(self):
		F = FieldParams.Get(4)
		self.assertEqual(parity(F, 3), "even")
		self.assertEqual(parity(F, 4), "odd")
		self.assertEqual(parity(FieldParams.Get(2), 5), "even")

	def test_factorial(self):
		for q in (2, 3, 4):
			F = FieldParams.Get(q)
			theta = FqPoly.Theta(F)
			for n in range(1, q+1):
				self.assertEqual(carlitz_factorial(F, n), FqPoly.Constant(F, 1))
			self.assertEqual(carlitz_factorial(F, q+1), FqPoly.Monomial(F, q) - theta)
			self.assertEqual(carlitz_factorial(F, q+1), d_factor(F, 1))
			self.assertEqual(ell(F, 1), theta - FqPoly.Monomial(F, q))
		self.assertRaises(DomainError, carlitz_factorial, F, 0)

	def test_factorial_digits(self):
		# n - 1 = 2 + 1*3: D_0^2 D_1
		F = FieldParams.Get(3)
		self.assertEqual(carlitz_factorial(F, 6), d_factor(F, 1))
		self.assertEqual(carlitz_factorial(F, 10), d_factor(F, 2))
		self.assertEqual(d_factor(F, 2).deg, 9*2)

	def test_goss_order(self):
		for q in (2, 3, 5):
			for n in range(1, q+1):
				self.assertEqual(goss_order(q, n), n)
		self.assertEqual(goss_order(2, 3), 2)

class PowerSumTests(unittest.TestCase):
	def test_degree_zero(self):
		F = FieldParams.Get(3)
		self.assertEqual(power_sum(F, 0, 4, 30), one(F, 30))
		self.assertRaises(DomainError, power_sum, F, 0, 0, 30)

	def test_times_ell(self):
		for q in (2, 3, 4):
			F = FieldParams.Get(q)
			for i in (1, 2):
				for n in range(1, q+1):
					self.assertEqual(power_sum_times_ell(F, i, n), FqPoly.Constant(F, 1), "q=%d i=%d n=%d" % (q, i, n))

	def test_against_ell(self):
		F = FieldParams.Get(3)
		P = 60
		S = power_sum(F, 1, 1, P)
		x = ls_mul(S, poly_embed(ell(F, 1), P))
		self.assertGreaterEqual(agree(x, one(F, P)), P - 6)

	def test_valuation(self):
		F = FieldParams.Get(2)
		for i in range(1, 4):
			for n in (1, 2, 3):
				S = power_sum(F, i, n, 80)
				self.assertGreaterEqual(S.val, power_sum_valuation(F, i, n))

	def test_cap(self):
		F = FieldParams.Get(3)
		self.assertRaises(ResourceError, power_sum, F, 5, 1, 30, 4)

	def test_cache(self):
		F = FieldParams.Get(2)
		cache = ObjectCache()
		a = power_sum(F, 2, 1, 50, cache=cache)
		b = power_sum(F, 2, 1, 30, cache=cache)
		self.assertEqual(b.prec, 30)
		self.assertEqual(cache.hits, 1)
		self.assertEqual(agree(a, b), 30)

class ZetaTests(unittest.TestCase):
	def test_sector(self):
		for q in (2, 3, 4):
			F = FieldParams.Get(q)
			z = mzv(F, (1,), 40)
			self.assertEqual(z.val, 0)
			self.assertEqual(z.sector, 0)
			self.assertEqual(z.prec, 40)

	def test_q2_period(self):
		F = FieldParams.Get(2)
		P = 200
		lhs = ls_mul(mzv(F, (1,), P), poly_embed(FqPoly(F, [0, 1, 1]), P))
		self.assertGreaterEqual(agree(lhs, pi_carlitz(F, P)), P - 2)

	def test_frobenius(self):
		F = FieldParams.Get(3)
		P = 90
		self.assertEqual(agree(mzv(F, (3,), P), ls_pow(mzv(F, (1,), P), 3)), P)

	def test_oracle(self):
		for q in (2, 3):
			F = FieldParams.Get(q)
			for idx in [(1,), (2,), (1, 1), (2, 1)]:
				bound = (q-1) * idx[0] * 5
				z = mzv(F, idx, bound)
				o = mzv_bruteforce_oracle(F, idx, 4, bound)
				self.assertEqual(agree(z, o), bound, "q=%d %s" % (q, idx))

	def test_oracle_cap(self):
		F = FieldParams.Get(3)
		self.assertRaises(ResourceError, mzv_bruteforce_oracle, F, (1, 1), 6, 20, 100)

class PeriodTests(unittest.TestCase):
	def test_inverse(self):
		for q in (2, 3, 4):
			F = FieldParams.Get(q)
			P = 200
			pi = pi_carlitz(F, P)
			self.assertEqual(pi.val, -q)
			self.assertEqual(pi.prec, P)
			self.assertGreaterEqual(agree(ls_mul(pi, pi_inverse(F, P)), one(F, P)), P - q)

class OmegaTests(unittest.TestCase):
	def test_functional_equation(self):
		for q in (2, 3):
			F = FieldParams.Get(q)
			M = 8
			P = 120
			lhs = omega(F, M, P)
			rhs = tate_mul(tate_poly(BiPoly.TMinusTheta(F, 1), M, P), omega(F, M, P, shift=1))
			for k in range(M+1):
				self.assertGreaterEqual(agree(lhs.coeffs[k], rhs.coeffs[k]), P - q*(q-1), "q=%d t^%d" % (q, k))

	def test_power(self):
		F = FieldParams.Get(3)
		M = 6
		P = 80
		sq = tate_mul(omega(F, M, P), omega(F, M, P))
		o2 = omega_power(F, 2, M, P)
		for k in range(M+1):
			self.assertGreaterEqual(agree(sq.coeffs[k], o2.coeffs[k]), P)
		self.assertEqual(o2.TailViolations(), [])

	def test_at_theta(self):
		for q in (2, 3, 4):
			c = Carlitz(q)
			P = 60
			v,M = c.EvaluateAt(lambda M, p: c.Omega(1, M, p), 0, P)
			self.assertEqual(agree(v, pi_inverse(c.field, P)), P)

	def test_negative(self):
		self.assertRaises(DomainError, omega_power, FieldParams.Get(2), -1, 3, 10)

class PolylogTests(unittest.TestCase):
	def test_zeta_at_theta(self):
		for q,n in [(2, 1), (2, 2), (3, 1), (3, 2)]:
			c = Carlitz(q)
			P = 40
			alphas = AlphaTuple.Ones(c.field, (n,))
			v,M = c.EvaluateAt(lambda M, p: c.MCPL(alphas, M, p), 0, P)
			self.assertEqual(agree(v, c.Zeta((n,), P)), P, "q=%d n=%d" % (q, n))

	def test_chang(self):
		c = Carlitz(3)
		for idx in [(1,), (2,)]:
			for N in (0, 1):
				res = c.Chang(idx, N, 40)
				self.assertTrue(res.match, "%s N=%d" % (idx, N))
				self.assertGreaterEqual(res.agreement, 40)

	def sample_alphas(self, F):
		one_ = BiPoly.Constant(F, 1)
		return [
			AlphaTuple(F, [one_], (1,)),
			AlphaTuple(F, [BiPoly.Theta(F)], (1,)),
			AlphaTuple(F, [one_, one_], (1, 1)),
			AlphaTuple(F, [BiPoly.T(F) + BiPoly.Theta(F)], (1,)),
		]

	def test_tail_bounds(self):
		M = 10
		P = 60
		for q in (2, 3):
			F = FieldParams.Get(q)
			for alphas in self.sample_alphas(F):
				self.assertEqual(mcpl(alphas, M, P).TailViolations(), [], "q=%d %s" % (q, alphas))
				self.assertEqual(omega_mcpl(alphas, M, P).TailViolations(), [], "q=%d %s" % (q, alphas))

	def test_omega_times_mcpl(self):
		# Omega^w L_(alpha, n) agrees with the product of its two factors built separately
		M = 8
		P = 60
		extra = 20
		for q in (2, 3):
			F = FieldParams.Get(q)
			for alphas in self.sample_alphas(F):
				w = sum(alphas.weights)
				lhs = tate_mul(omega_power(F, w, M, P + extra), mcpl(alphas, M, P + extra))
				rhs = omega_mcpl(alphas, M, P)
				for k in range(M+1):
					a,b = lhs.coeffs[k], rhs.coeffs[k]
					self.assertGreaterEqual(agree(a, b), min(a.prec, b.prec), "q=%d %s t^%d" % (q, alphas, k))

class PrecisionTests(unittest.TestCase):
	def test_mzv(self):
		F = FieldParams.Get(3)
		lo = mzv(F, (1, 1), 30)
		hi = mzv(F, (1, 1), 60)
		self.assertEqual(lo.prec, 30)
		self.assertEqual(agree(lo, hi), 30)

	def test_period(self):
		for q in (2, 3):
			F = FieldParams.Get(q)
			lo = pi_carlitz(F, 40)
			hi = pi_carlitz(F, 90)
			self.assertEqual(agree(lo, hi), 40)
			self.assertEqual(truncate(hi, 40), lo)

	def test_omega_power(self):
		F = FieldParams.Get(3)
		M = 5
		lo = omega_power(F, 2, M, 40)
		hi = omega_power(F, 2, M, 90)
		for k in range(M+1):
			self.assertGreaterEqual(agree(lo.coeffs[k], hi.coeffs[k]), lo.coeffs[k].prec, "t^%d" % k)
