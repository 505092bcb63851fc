def word_lengths(sentence):
    words = sentence.split()
    lengths = []
    longest = 0
    for w in range(len(words)):
        size=len(words[w])
        lengths.append(size)
        longest = max(longest, size)
    return lengths, longest
