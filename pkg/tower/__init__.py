# This file makes the tower directory a Python package
