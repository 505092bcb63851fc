def sum_of_squares(limit):
    total = 0
    count = 0
    for i in range(1, limit + 1):
        total += i * i
        count += 1
    result = total
    return result
