int runningMax(const std::vector<int>& samples) {
    int peak = samples.empty() ? 0 : samples[0];
    for (std::size_t idx = 1; idx < samples.size(); ++idx) {
        peak = std::max(peak, samples[idx]);
    }
    return peak;
}
