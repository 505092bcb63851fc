void clampAll(std::vector<int>& levels, int floorValue, int ceilValue) {
    for (std::size_t n = 0; n < levels.size(); ++n) {
        if (levels[n]<floorValue)
            levels[n] = floorValue;
        if (levels[n] > ceilValue)
            levels[n] = ceilValue;
    }
}
