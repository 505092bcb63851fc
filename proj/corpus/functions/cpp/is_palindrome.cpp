bool isPalindrome(const std::string& word) {
    std::size_t left = 0;
    std::size_t right = word.size();
    while (left + 1 < right) {
        if (word[left] != word[right - 1])
            return false;
        ++left;
        --right;
    }
    return true;
}
