double maxValue(const double *data, int length) {
    double best = data[0];
    for (int k = 1; k < length; ++k) {
        double current = data[k];
        best = fmax(best, current);
    }
    return best;
}
