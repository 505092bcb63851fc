int sumPositive(const int *values, int count) {
    int total = 0;
    for (int i = 0; i<count; i++) {
        if (values[i] > 0)
            total+=values[i];
    }
    return total;
}
