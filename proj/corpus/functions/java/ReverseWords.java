static String reverseWords(String line) {
    String[] parts = line.trim().split(" +");
    StringBuilder builder = new StringBuilder();
    for (int k = parts.length - 1; k >= 0; k--) {
        builder.append(parts[k]);
        if (k > 0)
            builder.append(' ');
    }
    return builder.toString();
}
