"""
Exceptions raised by pycarlitz.
Each one also derives from the builtin exception a caller would naturally catch, so code that
only knows about ValueError or NotImplementedError keeps working.
"""

class CarlitzError(Exception):
	"""
	Root of every exception raised by this package.
	Catching this exception in the command-line front end results in just the message being printed.
	"""

	def get_Message(self):
		return self.args[0] if len(self.args) else ""
	Message = property(get_Message)

class FieldZeroDivisionError(CarlitzError, ZeroDivisionError):
	"""
	Inversion of zero in F_q.
	"""
	pass

class NotInvertibleError(CarlitzError, ArithmeticError):
	"""
	A Laurent series is zero to its stated precision and cannot be inverted.
	"""
	pass

class UnsupportedOperationError(CarlitzError, NotImplementedError):
	"""
	Operation outside the representable lattice (eg, an inverse Frobenius twist).
	"""
	pass

class DomainError(CarlitzError, ValueError):
	"""
	Mathematical precondition violated (norm condition, index out of range, ...).
	"""
	pass

class ResourceError(CarlitzError):
	"""
	An enumeration cap would be exceeded.
	"""
	pass

class ConvergenceError(CarlitzError):
	"""
	Evaluation of a Tate algebra element could not be certified to the requested precision.
	"""
	pass

class SearchExhaustedError(CarlitzError):
	"""
	The Anderson-Thakur solver found no polynomial within the degree bounds.
	"""

	# Bounds that were searched, as a dictionary
	bounds = None

	def __init__(self, msg, bounds=None):
		CarlitzError.__init__(self, msg)
		self.bounds = bounds or {}

class InconclusiveError(CarlitzError):
	"""
	The certified comparison window is empty, so neither pass nor fail can be claimed.
	"""
	pass

class ConfigError(CarlitzError, ValueError):
	"""
	Bad configuration: flags, config file, or a problem that is under-determined by construction.
	"""
	pass

class ParseError(ConfigError):
	"""
	Expression or config file could not be tokenized or parsed.
	"""
	pass
