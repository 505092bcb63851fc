int countDigits(long value) {
    int digits=0;
    if (value<0)
        value = -value;
    do {
        digits++;
        value /= 10;
    } while (value > 0);
    return digits;
}
