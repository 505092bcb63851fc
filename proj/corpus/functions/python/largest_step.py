def largest_step(heights):
    biggest = 0
    for j in range(1, len(heights)):
        rise = heights[j]-heights[j - 1]
        biggest = max(biggest, rise)
    return biggest
