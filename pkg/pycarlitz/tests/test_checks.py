import unittest

from pycarlitz import Carlitz
from pycarlitz.checks import CHECKS, euler_exponent, shuffle_exponent
from pycarlitz.errors import DomainError
from pycarlitz.field import FieldParams

class ExponentTests(unittest.TestCase):
	def test_shuffle(self):
		self.assertEqual(shuffle_exponent(FieldParams.Get(3), 1, 1), 0)
		self.assertEqual(shuffle_exponent(FieldParams.Get(3), 3, 3), 1)
		self.assertEqual(shuffle_exponent(FieldParams.Get(2), 2, 2), 1)
		self.assertIsNone(shuffle_exponent(FieldParams.Get(2), 1, 2))
		self.assertIsNone(shuffle_exponent(FieldParams.Get(3), 2, 2))

	def test_euler(self):
		self.assertEqual(euler_exponent(FieldParams.Get(3), 1), 0)
		self.assertEqual(euler_exponent(FieldParams.Get(3), 3), 1)
		self.assertEqual(euler_exponent(FieldParams.Get(2), 1), 1)
		self.assertEqual(euler_exponent(FieldParams.Get(2), 4), 3)
		self.assertIsNone(euler_exponent(FieldParams.Get(3), 2))
		self.assertIsNone(euler_exponent(FieldParams.Get(4), 1))

class CheckTests(unittest.TestCase):
	def test_names(self):
		c = Carlitz(2)
		self.assertRaises(DomainError, c.Check, 'zeta-sum')
		self.assertEqual(len(CHECKS), 6)

	def test_q2_identity(self):
		rep = Carlitz(2).Check('q2-identity', prec=120)
		self.assertTrue(rep.passed)
		self.assertEqual(rep.agreement, 120)

		rep = Carlitz(3).Check('q2-identity', prec=40)
		self.assertEqual(rep.status, 'not-applicable')
		self.assertIn('reason', rep.Serialize())

	def test_frobenius(self):
		for q,n in [(2, 1), (3, 1), (3, 2), (4, 1)]:
			rep = Carlitz(q).Check('frobenius-p', {'n': n}, 90)
			self.assertTrue(rep.passed, "q=%d n=%d" % (q, n))

	def test_shuffle(self):
		rep = Carlitz(3).Check('shuffle', {'n1': 1, 'n2': 1, 'tdeg': 6}, 60)
		self.assertTrue(rep.passed)
		d = rep.Serialize()
		self.assertEqual(d['e'], 0)
		self.assertGreaterEqual(d['zeta_agreement'], 60)
		self.assertGreaterEqual(d['tate_agreement'], 60)

		rep = Carlitz(2).Check('shuffle', {'n1': 1, 'n2': 2}, 40)
		self.assertEqual(rep.status, 'not-applicable')

	def test_carlitz_even(self):
		for q in (2, 3):
			rep = Carlitz(q).Check('carlitz-even', None, 60)
			self.assertTrue(rep.passed, "q=%d" % q)
			self.assertIsNotNone(rep.detail['ratio'])
			self.assertEqual(rep.detail['certificate']['kind'], 'kernel')

		rep = Carlitz(3).Check('carlitz-even', {'n': 1}, 60)
		self.assertEqual(rep.status, 'not-applicable')

	def test_euler_like(self):
		for q in (2, 3):
			rep = Carlitz(q).Check('euler-like', {'n': 1}, 60)
			self.assertTrue(rep.passed, "q=%d" % q)
			self.assertEqual(rep.agreement, 60)

		self.assertEqual(Carlitz(4).Check('euler-like', {'n': 1}, 40).status, 'not-applicable')

	def test_chang(self):
		rep = Carlitz(3).Check('chang', {'tuple': (1,), 'N': 0}, 40)
		self.assertTrue(rep.passed)
		self.assertTrue(rep.Serialize()['chang']['match'])
