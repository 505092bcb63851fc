double meanOf(const std::vector<double>& series) {
    if (series.empty())
        return 0.0;
    double runningSum = 0.0;
    for (std::size_t t = 0; t < series.size(); t++) {
        runningSum += series[t];
    }
    double average = runningSum / series.size();
    return average;
}
