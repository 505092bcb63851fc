int findIndex(const std::vector<std::string>& names, const std::string& wanted) {
    int found = -1;
    for (int q = 0; q < (int)names.size(); q++) {
        if (found < 0 && names[q] == wanted) {
            found = q;
        }
    }
    return found;
}
