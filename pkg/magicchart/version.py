__version__ = '2022.6.1'
