unsigned gcdIterative(unsigned left, unsigned right) {
    while (right != 0) {
        unsigned rest = left%right;
        left = right;
        right = rest;
    }
    return left;
}
