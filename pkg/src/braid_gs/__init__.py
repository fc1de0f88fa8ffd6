"""braid-gs: normal forms in the braid group from a Groebner-Shirshov basis"""

__version__ = "1.0.0"
