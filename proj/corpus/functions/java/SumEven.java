static int sumEven(int[] numbers) {
    int total = 0;
    for (int i = 0; i < numbers.length; i++) {
        if (numbers[i]%2 == 0)
            total += numbers[i];
    }
    return total;
}
