def count_evens(numbers):
    evens = 0
    odds = 0
    for k in range(len(numbers)):
        if numbers[k]%2 == 0:
            evens += 1
        else:
            odds += 1
    return evens
