"""
Tokenizes key = value configuration files.
Lines starting with # are comments; the value is the rest of the line after '='.
"""

import ply.lex as plylex

from ..errors import ParseError

tokens = (
	'NAME',
	'EQUALS',
	'VALUE',
	'COMMENT',
	'NEWLINE',
)

t_NAME =			r'[A-Za-z_][A-Za-z0-9_\-]*'

def t_EQUALS(t):
	r'='
	return t

def t_COMMENT(t):
	r'\#[^\r\n]*'

	# Strip # indicating comment
	t.value = t.value[1:]
	return t

def t_NEWLINE(t):
	r'(\r?\n)+'

	t.lexer.lineno += t.value.count('\n')
	return t

def t_error(t):
	raise ParseError("Bad character '%s' on line %d of config" % (t.value[0], t.lexer.lineno))

t_ignore = ' \t'

# Initiate lexer
lexer = plylex.lex()

def TokenizeString(txt):
	lexer.input(txt)
	lexer.lineno = 1

	tokens = []

	while True:
		tok = lexer.token()
		if not tok:
			break

		# Yank the raw value up to the end of line since values can hold any character
		if tok.type == 'EQUALS':
			tokens.append(tok)

			startpos = lexer.lexpos
			endpos = startpos
			data = lexer.lexdata
			while endpos < len(data) and data[endpos] not in '\r\n':
				endpos += 1

			val = data[startpos:endpos]
			if '#' in val:
				val = val[:val.index('#')]

			tok = plylex.LexToken()
			tok.type = 'VALUE'
			tok.value = val.strip()
			tok.lineno = lexer.lineno
			tok.lexpos = startpos

			lexer.lexpos = endpos

		tokens.append(tok)

	return tokens
