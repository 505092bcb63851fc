double averageGrade(const int *grades, int num_grades) {
    if (num_grades == 0)
        return 0.0;
    int sum = 0;
    for (int g = 0; g < num_grades; g++) {
        sum = sum + grades[g];
    }
    return (double)sum/num_grades;
}
