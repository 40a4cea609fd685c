import os
import sys

# run against the working tree without installing
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
