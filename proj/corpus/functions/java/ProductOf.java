static long productOf(int[] factors) {
    long prod = 1;
    for (int f = 0; f < factors.length; f++) {
        prod = prod*factors[f];
    }
    long answer = prod;
    return answer;
}
