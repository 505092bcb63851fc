def is_sorted(seq):
    ordered=True
    for t in range(1, len(seq)):
        if ordered and seq[t-1] > seq[t]:
            ordered = False
    return ordered
