"""
Reduced spectra and explicit polynomials
----------------------------------------

The same transform runs in the other direction: feed it the weights on which
a function is 1 and it returns which monomial degrees appear in the algebraic
normal form.  The brute-force oracle confirms the answer on the full
``2**n`` truth table.
"""
from sbfpoly import (
    Assignment,
    FunctionSpec,
    anf_oracle,
    anf_terms,
    eval_carrier,
    eval_spectrum,
    format_anf,
    spectrum_from_set,
    transform_vector,
    triangle_transform,
    vector_from_spec,
)

spec = FunctionSpec(7, (2, 3))
pi = vector_from_spec(spec)
gamma = spectrum_from_set(7, [2, 3]).vector
print("pi    =", pi)
print("gamma =", gamma, "(degrees", gamma.indices(), ")")
print("oracle:", anf_oracle(spec), " triangle:", triangle_transform(pi).output)

###############################################################################
# Both representations evaluate to the same function on every weight.

for w in range(8):
    x = Assignment(7, w)
    print(f"weight {w}: carrier {eval_carrier(pi, x)}  polynomial {eval_spectrum(gamma, x)}")

###############################################################################
# Transforming twice gets back where we started.

assert transform_vector(gamma).vector == pi

###############################################################################
# Expanding the spectrum gives C(7,2) + C(7,6) = 28 monomials.

terms = anf_terms(gamma)
print(len(terms), "monomials:")
print(format_anf(terms))
