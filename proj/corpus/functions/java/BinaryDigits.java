static String binaryDigits(int value) {
    if (value == 0)
        return "0";
    String digits = "";
    int rest = value;
    while (rest > 0) {
        digits = (rest % 2) + digits;
        rest = rest / 2;
    }
    return digits;
}
