static boolean isPowerOfTwo(long candidate) {
    if (candidate<=0)
        return false;
    while (candidate % 2 == 0) {
        candidate = candidate / 2;
    }
    return candidate == 1;
}
