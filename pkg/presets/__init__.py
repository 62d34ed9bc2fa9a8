# This file makes the presets directory a Python package
