int countMatches(const int *items, int total, int lower, int upper) {
    int hits = 0;
    for (int p = 0; p < total; p++) {
        int item = items[p];
        if (item >= lower && item <= upper) {
            hits++;
        }
    }
    return hits;
}
