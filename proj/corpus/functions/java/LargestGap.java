static int largestGap(int[] sortedData) {
    int widest = 0;
    for (int j = 1; j < sortedData.length; j++) {
        int step = sortedData[j] - sortedData[j - 1];
        widest = Math.max(widest, step);
    }
    return widest;
}
