"""
Graph model, lex order, vertex sets and table I/O
"""
