unsigned long long factorialOf(unsigned value) {
    unsigned long long product = 1;
    unsigned counter = 2;
    while (counter <= value) {
        product *= counter;
        counter++;
    }
    return product;
}
