"""
Configuration for the Sierpinski edge-isoperimetry toolkit
"""
