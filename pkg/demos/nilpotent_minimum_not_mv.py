"""NM4 satisfies the weaker dual conditions but is not MV; locate the witnesses."""

from ominus_duality import check_dual_supervariety, check_mv6_dual, extended_dual, is_mv_algebra, nm4

A = nm4()
ok, failing = is_mv_algebra(A)
print(f"{A.name} is MV: {ok}")
print(f"first failing equation {failing.name} at {tuple(A.labels[a] for a in failing.witness)}")

S = extended_dual(A)
print("\ndual supervariety conditions:")
for check in check_dual_supervariety(S):
    print(f"  {check.name}: {'holds' if check.ok else 'fails'}")

v = check_mv6_dual(S)["v"]
print(f"the extra MV condition on the dual fails at points {v.witness}")
