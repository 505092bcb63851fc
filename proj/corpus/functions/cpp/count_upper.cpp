int countUpper(const std::string& label) {
    int upperCount = 0;
    for (std::size_t i = 0; i < label.size(); i++) {
        char ch = label[i];
        if (ch >= 'A' && ch <= 'Z')
            upperCount++;
    }
    return upperCount;
}
