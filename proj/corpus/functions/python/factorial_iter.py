def factorial_iter(n):
    product = 1
    start = 2
    for factor in range(start, n+1):
        product *= factor
    value = product
    return value
