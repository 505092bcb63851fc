std::string repeatText(const std::string& piece, int times) {
    std::string out;
    int made = 0;
    while (made < times) {
        out += piece;
        made++;
    }
    return out;
}
