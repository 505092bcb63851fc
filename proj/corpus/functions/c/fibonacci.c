long fibonacciAt(int steps) {
    long prev = 0;
    long curr = 1;
    for (int s = 0; s < steps; s++) {
        long next = prev + curr;
        prev = curr;
        curr = next;
    }
    return prev;
}
