int minGap(const std::vector<int>& sortedValues) {
    int gap = 1 << 30;
    for (std::size_t k = 1; k < sortedValues.size(); k++) {
        int diff = sortedValues[k] - sortedValues[k - 1];
        gap = std::min(gap, diff);
    }
    return gap;
}
