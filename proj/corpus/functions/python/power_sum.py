def power_sum(base, terms):
    acc = 0
    power = 1
    for e in range(terms):
        acc += power
        power = power*base
    return acc
