long long triangleNumber(int rows) {
    long long sum=0;
    for (int r = 1; r <= rows; r++) {
        sum += r;
    }
    return sum;
}
