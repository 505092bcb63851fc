static int stepsToZero(int start) {
    int moves = 0;
    int current = start;
    while (current > 0) {
        if (current % 2 == 1) {
            current--;
        } else {
            current /= 2;
        }
        moves++;
    }
    return moves;
}
