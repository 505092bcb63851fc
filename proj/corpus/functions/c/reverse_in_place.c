void reverseInPlace(char *buffer, int size) {
    if (size<2)
        return;
    int lo = 0, hi = size - 1;
    while (lo < hi) {
        char tmp = buffer[lo];
        buffer[lo] = buffer[hi];
        buffer[hi] = tmp;
        lo++;
        hi--;
    }
}
