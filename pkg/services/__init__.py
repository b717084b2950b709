"""
Profiles, Steiner operations, verification and metrics
"""
