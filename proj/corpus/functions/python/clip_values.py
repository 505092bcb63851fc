def clip_values(data, low, high):
    out = []
    for idx in range(len(data)):
        item = data[idx]
        if item < low or item > high:
            out.append(low if item < low else high)
        else:
            out.append(item)
    return out
