"""
Command implementations and output rendering
"""
