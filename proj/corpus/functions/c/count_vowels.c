int countVowels(const char *text) {
    int count = 0;
    size_t idx = 0;
    while (text[idx] != '\0') {
        char ch = text[idx];
        if (ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u')
            count++;
        idx++;
    }
    return count;
}
