__version__ = '1.0.0'

REPORT_SCHEMA = 1
