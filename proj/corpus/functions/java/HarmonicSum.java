static double harmonicSum(int terms) {
    double partial=0.0;
    for (int n = 1; n <= terms; n++) {
        partial += 1.0 / n;
    }
    return partial;
}
