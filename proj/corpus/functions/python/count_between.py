def count_between(values, lower, upper):
    hits = 0
    for pos in range(len(values)):
        current = values[pos]
        if current >= lower and current <= upper:
            hits += 1
        else:
            hits += 0
    return hits
