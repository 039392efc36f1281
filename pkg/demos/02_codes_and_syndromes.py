"""Building codes and reading error syndromes.

The toric code places qubits on the bonds of a periodic square lattice;
plaquette generators are X-type, site generators are Z-type.  A single
X error trips exactly the two site checks at the ends of its bond, and
products of generators are invisible to every check.
"""

from clusterbounds import (
    BitMatrix,
    PauliOp,
    css_distance_bruteforce,
    hypergraph_product,
    toric_code,
)

code = toric_code(3)
print(f"toric L=3: [[{code.n}, {code.k}, {code.d}]]  w_X={code.w_X} w_Z={code.w_Z}")
print("brute-force distance check:", css_distance_bruteforce(code, 4))
print()

stab = code.stabilizer
single = PauliOp.single(code.n, 0, "X")
print("single X on bond 0, syndrome bits set:", stab.syndrome(single).support())

plaquette = stab.generator(0)
print("a plaquette generator:", plaquette.label())
print("its syndrome is zero:", not stab.syndrome(plaquette))
print("and it is a stabilizer element:", stab.is_stabilizer_element(plaquette))

# a straight loop winding the torus: undetectable but NOT in the group
loop = PauliOp.from_label("XXX" + "I" * (code.n - 3))
print("winding loop syndrome zero:", not stab.syndrome(loop))
print("winding loop in stabilizer:", stab.is_stabilizer_element(loop))
print()

# the hypergraph product of the 3-cycle check matrix with itself
# reproduces the toric layout
rep3 = BitMatrix.from_lists([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
hgp = hypergraph_product(rep3, rep3)
print(f"hgp(rep3, rep3): n={hgp.n} k={hgp.k} w_X={hgp.w_X} w_Z={hgp.w_Z}")
