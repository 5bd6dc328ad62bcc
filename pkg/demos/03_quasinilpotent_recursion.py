"""The subset recursion for alternating-exponent traces, and the closed-form
conjecture it supports.

M(k1, l1, ..., kn, ln) is the trace of (T*)^{k1} T^{l1} ... (T*)^{kn} T^{ln}.
The recursion computes these without enumerating pairings; the table at the
end compares ((T*)^k T^k)^n against n^{nk}/(nk+1)!.
"""

from dtmoments import canonicalize, conjecture_value, m_recursive, tstt_moment

print("canonicalization examples:")
for seq in [(0, 2, 3, 1), (1, 2), (2, 1, 1, 2), (1, 2, 2, 1)]:
    print(f"  {seq} -> {canonicalize(seq)!r}")

print("\nsquared-generator moments via the recursion vs the closed form:")
for p in range(1, 7):
    rec = m_recursive((1, 1) * p)
    print(f"  p={p}: {rec} = {tstt_moment(p)}")

print("\nconjecture table, recursion vs n^(nk)/(nk+1)!:")
print(f"  {'n':>2} {'k':>2} {'recursion':>12} {'closed form':>12}")
for n in (1, 2, 3):
    for k in (1, 2, 3):
        rec = m_recursive((k, k) * n)
        conj = conjecture_value(k, n)
        mark = "ok" if rec == conj else "MISMATCH"
        print(f"  {n:>2} {k:>2} {str(rec):>12} {str(conj):>12}  {mark}")
