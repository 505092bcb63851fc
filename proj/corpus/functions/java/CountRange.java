static int countRange(int[] marks, int low, int high) {
    int inside = 0;
    for (int m = 0; m < marks.length; m++) {
        int mark = marks[m];
        if (mark >= low && mark < high)
            inside++;
    }
    return inside;
}
