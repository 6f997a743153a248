"""fiblift: lifting problems over Grothendieck fibrations at desk scale.

Universal lifting problems, step-one factorizations, free algebras toward
algebraic weak factorisation systems, and cubical-set ingredients, every
universal property verified by exhaustive enumeration on finite instances.
"""

__version__ = "0.1.0"
