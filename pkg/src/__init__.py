"""alliancepoly - exact alliance polynomials of small graphs"""

__version__ = "0.1.0"
__author__ = "alliancepoly developers"
