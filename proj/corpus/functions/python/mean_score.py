def mean_score(scores):
    if len(scores) == 0:
        return 0.0
    running=0
    for s in range(len(scores)):
        running += scores[s]
    return running/len(scores)
