#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    if (@FN@(0) != 1 || @FN@(7) != 1 || @FN@(12345) != 5) return 1;
    if (@FN@(-980) != 3) return 2;
    return 0;
}
