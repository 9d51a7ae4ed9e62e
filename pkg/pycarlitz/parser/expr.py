"""
Tokenizes target expressions ("pi^2,zeta(1)^2,zeta(1,1)") and polynomials in theta and t ("theta^2*t + 1")
"""

import ply.lex as plylex

from ..errors import ParseError

tokens = (
	'NUM',
	'NAME',

	'LPAREN',
	'RPAREN',
	'COMMA',
	'PLUS',
	'MINUS',
	'TIMES',
	'CARET',
)

t_LPAREN =			r'\('
t_RPAREN =			r'\)'
t_COMMA =			r','
t_PLUS =			r'\+'
t_MINUS =			r'-'
t_TIMES =			r'\*'
t_CARET =			r'\^'

# Signs are separate tokens; the parser decides between subtraction and a negative exponent
def t_NUM(t):
	r'\d+'
	t.value = int(t.value)
	return t

def t_NAME(t):
	r'[A-Za-z_][A-Za-z0-9_]*'
	return t

def t_error(t):
	raise ParseError("Unexpected character '%s' at position %d" % (t.value[0], t.lexpos))

# Whitespace is insignificant
t_ignore = ' \t\r\n'

# Initiate lexer
lexer = plylex.lex()

def TokenizeString(txt):
	lexer.input(txt)

	tokens = []
	while True:
		tok = lexer.token()
		if not tok:
			break
		tokens.append(tok)

	return tokens
