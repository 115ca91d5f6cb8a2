"""Unit test package for pyalexander."""
