int countWords(const std::string& sentence) {
    int words = 0;
    bool inWord = false;
    for (std::size_t pos = 0; pos<sentence.size(); pos++) {
        char c = sentence[pos];
        if (c == ' ')
            inWord = false;
        else if (!inWord) {
            inWord = true;
            words++;
        }
    }
    return words;
}
