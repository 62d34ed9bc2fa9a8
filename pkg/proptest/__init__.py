# This file makes the proptest directory a Python package
