import unittest

from pycarlitz.errors import ConfigError, FieldZeroDivisionError
from pycarlitz.field import FieldParams, factor_order

class FieldTests(unittest.TestCase):
	def test_factor_order(self):
		self.assertEqual(factor_order(2), (2,1))
		self.assertEqual(factor_order(9), (3,2))
		self.assertEqual(factor_order(64), (2,6))
		self.assertEqual(factor_order(49), (7,2))

	def test_bad_orders(self):
		for q in (0, 1, 6, 12, 100):
			self.assertRaises(ConfigError, factor_order, q)

	def test_shared_instances(self):
		self.assertIs(FieldParams.Get(4), FieldParams.Get(4))
		self.assertEqual(FieldParams.Get(3), FieldParams.Get(3))
		self.assertNotEqual(FieldParams.Get(3), FieldParams.Get(9))

	def test_modulus_header(self):
		F = FieldParams.Get(4)
		self.assertEqual(F.Serialize(), {'q': 4, 'p': 2, 'm': 2, 'modulus': "x^2 + x + 1"})
		self.assertEqual(FieldParams.Get(5).Serialize()['modulus'], "x")

	def test_axioms(self):
		for q in (2, 3, 4, 5, 8, 9):
			F = FieldParams.Get(q)
			els = F.Elements()
			zero = F.Element(0)
			one = F.Element(1)
			for a in els:
				self.assertEqual(a + zero, a)
				self.assertEqual(a * one, a)
				self.assertEqual(a + (-a), zero)
				if not a.IsZero():
					self.assertEqual(a * a.Inverse(), one)
					# a^(q-1) = 1 on F_q^*
					self.assertEqual(a ** (q-1), one)

	def test_distributive(self):
		F = FieldParams.Get(9)
		els = F.Elements()
		for a in els[:4]:
			for b in els:
				for c in els[3:6]:
					self.assertEqual(a * (b + c), a*b + a*c)

	def test_characteristic(self):
		F = FieldParams.Get(8)
		for a in F.Elements():
			self.assertTrue((a + a).IsZero())

		F = FieldParams.Get(9)
		for a in F.Elements():
			self.assertTrue((a + a + a).IsZero())

	def test_coords(self):
		F = FieldParams.Get(9)
		self.assertEqual(F.Element(5).coords, [2, 1])
		self.assertEqual(F.Prime(-1), F.GF(2))

	def test_zero_division(self):
		F = FieldParams.Get(3)
		self.assertRaises(FieldZeroDivisionError, F.Element(0).Inverse)
		self.assertRaises(FieldZeroDivisionError, F.Element(0).__pow__, -1)
		self.assertTrue(isinstance(FieldZeroDivisionError("x"), ZeroDivisionError))

	def test_cross_field(self):
		a = FieldParams.Get(3).Element(1)
		b = FieldParams.Get(5).Element(1)
		self.assertRaises(TypeError, a.__add__, b)
