# not required for python 3+
