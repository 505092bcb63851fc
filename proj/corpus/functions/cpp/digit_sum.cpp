int digitSum(int number) {
    int acc = 0;
    int rest = number < 0 ? -number : number;
    while (rest > 0) {
        acc += rest%10;
        rest /= 10;
    }
    return acc;
}
