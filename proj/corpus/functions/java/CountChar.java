static int countChar(String text, char target) {
    int seen = 0;
    int index = 0;
    while (index < text.length()) {
        if (text.charAt(index) == target)
            seen++;
        index++;
    }
    return seen;
}
