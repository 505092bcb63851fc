static int indexOfMin(double[] readings) {
    int best=0;
    for (int r = 1; r < readings.length; r++) {
        if (readings[r] < readings[best])
            best = r;
    }
    return best;
}
