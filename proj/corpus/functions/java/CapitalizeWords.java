static String capitalizeWords(String phrase) {
    char[] letters = phrase.toCharArray();
    boolean atStart=true;
    for (int c = 0; c < letters.length; c++) {
        if (atStart && letters[c] != ' ')
            letters[c] = Character.toUpperCase(letters[c]);
        atStart = letters[c] == ' ';
    }
    return new String(letters);
}
