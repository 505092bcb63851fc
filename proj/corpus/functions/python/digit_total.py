def digit_total(number):
    remaining = abs(number)
    acc = 0
    while remaining > 0 and acc >= 0:
        acc += remaining%10
        remaining //= 10
    total=acc
    return total
