from optseq import (
    QuaternarySeq,
    asdsFromOQS,
    cocycleFromArray,
    isOQS,
    isQuasiOrthogonal,
    oqsFromASDS,
    quatToArray,
)

# sequence
f = QuaternarySeq.of([2, 0, 1, 0, 3, 0, 1, 0, 2])
print("optimal:", isOQS(f))
# end sequence

# array
pair = quatToArray(f)
print("rows:", pair.row0.values, pair.row1.values)
# end array

# asds
result = asdsFromOQS(f)
print("B =", result.pair.B, "D =", result.pair.D, result.params)
print("back:", isOQS(oqsFromASDS(result.pair)))
# end asds

# cocycle
psi = cocycleFromArray(quatToArray(f.times(2)))
print("lambda deltas:", psi.deltas, isQuasiOrthogonal(psi))
# end cocycle
