def fib_number(n):
    a, b = 0, 1
    for step in range(n):
        a, b = b, a+b
    result = a
    return result
