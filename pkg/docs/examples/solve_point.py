from pyphonon import Blockade, EffectiveParams

blockade = Blockade()

params = EffectiveParams.at(0.0, 0.2, 0.002, 0.002)
observables = blockade.solver.get(params)

print(f"Steady state at the blockade point: \n----\n{observables}\n----\n")

"""Sample Output of observables.

    p: ...
    q: ...
    n_c: ...
    n_b: ...
    g2b: ...
    log10_g2b: ...

g2b below 1 means the mechanical mode is antibunched.
"""
