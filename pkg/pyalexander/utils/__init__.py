#!/usr/bin/env python
# -*- coding: utf-8 -*-

__all__ = [
    "linalg",
    "series",
]
