double dotProduct(const double *xs, const double *ys, int dim) {
    double acc = 0.0;
    for (int j = 0; j < dim; j++) {
        acc += xs[j]*ys[j];
    }
    double result = acc;
    return result;
}
