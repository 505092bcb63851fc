long powerMod(long base, long exponent, long modulus) {
    long result = 1;
    base = base % modulus;
    while (exponent > 0) {
        if (exponent & 1)
            result=(result * base) % modulus;
        exponent >>= 1;
        base = (base * base) % modulus;
    }
    return result;
}
