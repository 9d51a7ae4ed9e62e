import unittest

from pycarlitz.bipoly import BiPoly
from pycarlitz.errors import ParseError
from pycarlitz.field import FieldParams
from pycarlitz.parser import ConfigTokenizer, ExprTokenizer, Factor, ParseTuple

class TupleTests(unittest.TestCase):
	def test_parse(self):
		self.assertEqual(ParseTuple("1,2, 3"), (1, 2, 3))
		self.assertEqual(ParseTuple("4"), (4,))
		self.assertRaises(ParseError, ParseTuple, "1,x")
		self.assertRaises(ParseError, ParseTuple, ",")

class TargetTests(unittest.TestCase):
	def test_targets(self):
		ts = ExprTokenizer("pi^2, zeta(1)^2 ,zeta(1, 1)").ParseTargets()
		self.assertEqual([label for label,f in ts], ["pi^2", "zeta(1)^2", "zeta(1,1)"])
		self.assertEqual(ts[0][1], [Factor('pi', None, 2)])
		self.assertEqual(ts[2][1], [Factor('zeta', (1, 1), 1)])

	def test_products(self):
		ts = ExprTokenizer("pi^-2*zeta(2)").ParseTargets()
		self.assertEqual(len(ts), 1)
		self.assertEqual(ts[0][1], [Factor('pi', None, -2), Factor('zeta', (2,), 1)])
		self.assertEqual(str(ts[0][1][0]), "pi^-2")

	def test_errors(self):
		self.assertRaises(ParseError, ExprTokenizer("e^2").ParseTargets)
		self.assertRaises(ParseError, ExprTokenizer("zeta(1").ParseTargets)
		self.assertRaises(ParseError, ExprTokenizer("pi pi").ParseTargets)
		self.assertRaises(ParseError, ExprTokenizer, "pi$")

class PolynomialTests(unittest.TestCase):
	def test_parse(self):
		F = FieldParams.Get(3)
		p = ExprTokenizer("theta^2*t + 2*theta - 1").ParsePolynomial(F)
		want = BiPoly.Theta(F) ** 2 * BiPoly.T(F) + BiPoly.Theta(F) * 2 - BiPoly.Constant(F, 1)
		self.assertEqual(p, want)

	def test_reduction(self):
		F = FieldParams.Get(2)
		p = ExprTokenizer("(t + theta)^2 + 3").ParsePolynomial(F)
		self.assertEqual(p, BiPoly.T(F) ** 2 + BiPoly.Theta(F) ** 2 + BiPoly.Constant(F, 1))
		self.assertEqual(ExprTokenizer("-theta").ParsePolynomial(F), BiPoly.Theta(F))

	def test_generator(self):
		F = FieldParams.Get(4)
		g = ExprTokenizer("g").ParsePolynomial(F)
		self.assertEqual(g, BiPoly.Constant(F, 2))
		self.assertEqual(ExprTokenizer("g*g + g").ParsePolynomial(F), BiPoly.Constant(F, 1))
		self.assertRaises(ParseError, ExprTokenizer("g").ParsePolynomial, FieldParams.Get(3))

	def test_errors(self):
		F = FieldParams.Get(3)
		self.assertRaises(ParseError, ExprTokenizer("x + 1").ParsePolynomial, F)
		self.assertRaises(ParseError, ExprTokenizer("theta +").ParsePolynomial, F)
		self.assertRaises(ParseError, ExprTokenizer("(theta").ParsePolynomial, F)

class ConfigTests(unittest.TestCase):
	def test_parse(self):
		txt = "# defaults\nq = 3\nprec=60  # theta units\n\nsector-policy = strict\ncaps = powersum_cap=4,oracle_cap=10\n"
		d = ConfigTokenizer(txt).Parse()
		self.assertEqual(d, {'q': '3', 'prec': '60', 'sector_policy': 'strict', 'caps': 'powersum_cap=4,oracle_cap=10'})

	def test_errors(self):
		self.assertRaises(ParseError, ConfigTokenizer("q 3\n").Parse)
		self.assertRaises(ParseError, ConfigTokenizer("= 3\n").Parse)
		self.assertRaises(ParseError, ConfigTokenizer("q = 3\n$x = 1\n").Parse)
