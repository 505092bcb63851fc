static int secondLargest(int[] pool) {
    int first = Integer.MIN_VALUE, second = Integer.MIN_VALUE;
    for (int p = 0; p < pool.length; p++) {
        int item = pool[p];
        if (item > first) {
            second = first;
            first = item;
        } else if (item > second && item != first) {
            second = item;
        }
    }
    return second;
}
