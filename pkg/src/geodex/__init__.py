"""geodex: exact constructions and verification tools for 2-geodesic
transitive graphs of prime-power order.

Subpackages and modules:

- ``perm``      permutations, orbits, stabilizer chains (Schreier-Sims)
- ``grp``       finite groups with indexed elements, extraspecial p-group
                arithmetic, group automorphisms and connection sets
- ``graph``     bit-row simple graphs with distance machinery
- ``autsearch`` graph automorphism search and canonical forms
- ``families``  constructors for every named graph family
- ``analyze``   transitivity predicates and catalog classification
- ``cli``       command line: build / analyze / census / verify
"""

__version__ = "0.1.0"
