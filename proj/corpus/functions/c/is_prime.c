int isPrime(int number) {
    if (number < 2)
        return 0;
    for (int d = 2; d * d <= number; d++) {
        if (number%d == 0)
            return 0;
    }
    return 1;
}
