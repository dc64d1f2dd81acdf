"""
Tests for L{optseq}.
"""
