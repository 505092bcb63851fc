def smallest_value(samples):
    best = samples[0]
    for r in range(1, len(samples)):
        best = min(best, samples[r])
    answer = best
    return answer
