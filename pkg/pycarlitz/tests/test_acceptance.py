"""
End-to-end checks at the precisions the library is expected to handle.
"""

import random
import unittest

from pycarlitz import Carlitz
from pycarlitz.atpoly import interpolation_targets
from pycarlitz.bipoly import check_norm
from pycarlitz.config import RunConfig
from pycarlitz.field import FieldParams
from pycarlitz.laurent import FqPoly, LaurentSeries, agree, ls_add, ls_mul, ls_neg, one, poly_embed, truncate
from pycarlitz.motive import fixed_by_twist
from pycarlitz.relations import MiningProblem, mine

class MotiveAcceptance(unittest.TestCase):
	SYSTEMS = [(2, (1,)), (3, (1,)), (3, (1, 1)), (3, (2,)), (4, (1, 1))]

	def test_verify(self):
		for q,idx in self.SYSTEMS:
			c = Carlitz(q)
			sys = c.Motive(idx, tdeg=16, prec=150)
			rep = c.Verify(sys)
			self.assertTrue(rep.passed, "q=%d %s" % (q, idx))
			self.assertGreaterEqual(rep.prec, 150)
			self.assertEqual(rep.tdeg, 16)

			for i in range(sys.size):
				for j in range(i+1):
					cases = [(3, 7), (16, 1)]
					if not fixed_by_twist(sys, i):
						cases.append((0, 0))
					for k,e in cases:
						bad = c.Verify(c.Corrupt(sys, i, j, k, e))
						self.assertFalse(bad.passed, "q=%d %s corrupted at (%d,%d) t^%d w^%d" % (q, idx, i, j, k, e))
						self.assertIn([i, j], [f[:2] for f in bad.Failures()])

class PeriodAcceptance(unittest.TestCase):
	def test_omega_at_theta(self):
		for q in (2, 3, 4):
			c = Carlitz(q)
			P = 200 + q
			v,M = c.EvaluateAt(lambda T, W: c.Omega(1, T, W), 0, P)
			x = ls_mul(c.Pi(P), v)
			self.assertGreaterEqual(agree(x, one(c.field, 200)), 200, "q=%d" % q)

	def test_frobenius(self):
		for q,n in [(2, 1), (3, 1), (3, 2)]:
			rep = Carlitz(q).Check('frobenius-p', {'n': n}, 150)
			self.assertTrue(rep.passed)
			self.assertEqual(rep.agreement, 150)

	def test_q2_identity(self):
		rep = Carlitz(2).Check('q2-identity', prec=200)
		self.assertTrue(rep.passed)
		self.assertGreaterEqual(rep.agreement, 200)

	def test_shuffle(self):
		rep = Carlitz(3).Check('shuffle', {'n1': 1, 'n2': 1, 'tdeg': 16}, 200)
		self.assertTrue(rep.passed)
		self.assertEqual(rep.detail['tdeg'], 16)
		self.assertGreaterEqual(rep.detail['zeta_agreement'], 200)
		self.assertGreaterEqual(rep.detail['tate_agreement'], 200)

class MiningAcceptance(unittest.TestCase):
	def test_carlitz_even(self):
		for q,n in [(3, 2), (2, 1)]:
			c = Carlitz(cfg=RunConfig(q, degree_bound=6))
			rep = c.Check('carlitz-even', {'n': n})
			self.assertTrue(rep.passed, "q=%d n=%d" % (q, n))
			self.assertEqual(rep.detail['certificate']['D'], 6)

	def test_depth_two_q4(self):
		c = Carlitz(4)
		cert = c.Mine("pi^2,zeta(1)^2,zeta(1,1)", D=6, prec=400*3)
		self.assertEqual(cert.kind, 'none-at-bound')
		self.assertEqual(cert.N, 1200)

	def test_depth_two_q3(self):
		c = Carlitz(3)
		cert = c.Mine("pi^2,zeta(1)^2,zeta(1,1)", D=6)
		self.assertEqual(cert.kind, 'kernel')
		self.assertTrue(cert.Confirmed())

	def test_planted(self):
		rnd = random.Random(20240601)
		for trial in range(100):
			q = rnd.choice((2, 3))
			m = rnd.randint(2, 4)
			D = rnd.randint(0, 3)
			F = FieldParams.Get(q)
			N = 40 + (D+2)*(q-1)*m + 2*D*(q-1)

			series,planted = _planted_problem(F, rnd, m, D, N)
			cert = mine(MiningProblem(F, [("v%d" % j, v) for j,v in enumerate(series)], D, N))
			self.assertEqual(cert.kind, 'kernel', "trial %d" % trial)

			basis = [_flatten(F, vec, D) for vec in cert.kernel]
			self.assertEqual(_rank(F, basis), _rank(F, basis + [_flatten(F, planted, D)]), "trial %d" % trial)

class ATAcceptance(unittest.TestCase):
	def test_interpolation(self):
		for q,n in [(2, 3), (3, 4)]:
			c = Carlitz(q)
			at = c.ATPoly(n)
			self.assertTrue(check_norm(at.h, n))
			targets = interpolation_targets(c.field, n, 3)
			for i in range(4):
				self.assertEqual(at.h.EvalTwisted(i), targets[i])

	def test_chang(self):
		for q,n in [(2, 3), (3, 4)]:
			c = Carlitz(q)
			for N in (0, 1):
				res = c.Chang((n,), N, 100)
				self.assertTrue(res.match, "q=%d n=%d N=%d" % (q, n, N))

class OracleAcceptance(unittest.TestCase):
	TUPLES = [(1,), (2,), (3,), (4,), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)]

	def test_oracle(self):
		for q in (2, 3):
			c = Carlitz(q)
			for idx in self.TUPLES:
				bound = (q-1) * idx[0] * 5
				self.assertEqual(agree(c.Zeta(idx, bound), c.ZetaOracle(idx, 4, bound)), bound, "q=%d %s" % (q, idx))

# --------------------------------------------------------------------------------

def _random_series(F, rnd, prec):
	"""
	Random series of valuation 0 with every exponent a multiple of q-1.
	"""

	s = F.q - 1
	arr = F.Zeros(prec)
	for j in range(0, prec, s):
		arr[j] = F.GF(rnd.randrange(F.q))
	arr[0] = F.GF(rnd.randrange(1, F.q))
	return LaurentSeries(F, 0, prec, arr)

def _random_poly(F, rnd, D):
	return FqPoly(F, [rnd.randrange(F.q) for e in range(D+1)])

def _planted_problem(F, rnd, m, D, N):
	"""
	Series v_1..v_m with v_1 = -sum p_j v_j, and the coefficient vector (1, p_2, ..., p_m).
	"""

	W = N + 2*D*(F.q - 1)
	while True:
		rest = [_random_series(F, rnd, W) for j in range(m-1)]
		polys = [_random_poly(F, rnd, D) for j in range(m-1)]

		acc = None
		for p,v in zip(polys, rest):
			x = ls_mul(poly_embed(p, W), v)
			acc = x if acc is None else ls_add(acc, x)
		first = truncate(ls_neg(acc), N)
		if not first.IsZero():
			break

	series = [first] + [truncate(v, N) for v in rest]
	return series, [FqPoly.Constant(F, 1)] + polys

def _flatten(F, vec, D):
	ret = []
	for p in vec:
		c = p.Serialize()
		ret += c + [0]*(D + 1 - len(c))
	return ret

def _rank(F, rows):
	R = F.GF(rows).row_reduce()
	return sum(1 for row in R.tolist() if any(row))
