#!/usr/bin/env python
import os
import sys
import unittest


TESTS_DIR = os.path.dirname(os.path.abspath(__file__))

# Make sure the copy of openrspin in the directory above this one is used.
sys.path.insert(0, os.path.dirname(TESTS_DIR))


if __name__ == "__main__":
    verbosity = 2 if '-v' in sys.argv[1:] else 1
    suite = unittest.defaultTestLoader.discover(os.path.join(TESTS_DIR, 'core'), top_level_dir=TESTS_DIR)
    result = unittest.TextTestRunner(verbosity=verbosity).run(suite)
    sys.exit(0 if result.wasSuccessful() else 1)
